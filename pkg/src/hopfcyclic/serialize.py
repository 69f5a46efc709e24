"""JSON wire formats beyond the bialgebra description.

Rational scalars travel as "a/b" or "a" strings, prime-field scalars as
integers in [0, p). Matrices are {"rows": r, "cols": c, "entries":
[[i, j, v], ...]}. These formats are the unit of CLI ingestion and of the
--dump output; emission always sorts keys so reports are byte-reproducible.
"""

import json

from .equivariant import ModuleCoalgebra
from .errors import ParseError
from .hopf import desc_from_json, matrix_from_json, matrix_to_json


def module_coalgebra_to_json(mc):
    f = mc.base.field
    n = mc.dim
    action = [[col // n, col % n, i, f.fmt(v)] for i, col, v in mc.action.entries()]
    return {"over": mc.over.to_json(), "base": mc.base.to_json(), "action": action}


def _desc_inline_or_file(value):
    """Bialgebra descriptions may be inline documents or file paths."""
    if isinstance(value, str):
        with open(value) as fh:
            value = json.load(fh)
    return desc_from_json(value)


def module_coalgebra_from_json(doc):
    try:
        over = _desc_inline_or_file(doc["over"])
        base = _desc_inline_or_file(doc["base"])
        f = over.field
        n = base.dim
        action_entries = [
            (int(cp), int(b) * n + int(c), f.parse(v)) for b, c, cp, v in doc["action"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed module-coalgebra document: {exc}") from exc
    from .linalg import Matrix

    action = Matrix.from_entries(f, n, over.dim * n, action_entries)
    return ModuleCoalgebra(base, over, action)


def ses_to_json(C_mc, K, mode):
    return {
        "C": module_coalgebra_to_json(C_mc),
        "K": matrix_to_json(K),
        "mode": mode,
    }


def ses_from_json(doc):
    try:
        mc = module_coalgebra_from_json(doc["C"])
        K = matrix_from_json(mc.base.field, doc["K"])
        mode = doc["mode"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed SES document: {exc}") from exc
    from .equivariant import quotient_ses

    return quotient_ses(mc, K, mode)


def coefficient_to_json(X):
    f = X.over.field
    return {
        "dim": X.dim,
        "action": matrix_to_json(X.action),
        "coaction": matrix_to_json(X.coaction),
    }


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=1)


def complex_dump(labelled_complexes):
    """Serializable record of graded complexes: dims, sparse maps, certificates."""
    out = {}
    for label, cx in labelled_complexes.items():
        out[label] = {
            "orientation": cx.orientation,
            "dims": list(cx.dims),
            "differentials": {str(n): matrix_to_json(d) for n, d in sorted(cx.diffs.items())},
            "certificate": {"d_squared_zero": True,
                            "max_valid_degree": cx.max_valid_degree},
        }
    return out
