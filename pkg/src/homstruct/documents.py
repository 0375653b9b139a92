"""Structure documents: the textual serialization used by the CLI and
the corpus.

Documents are JSON with every scalar written as an exact decimal or
fraction string ("3", "-1/2"); floats are rejected on input so no
inexact value can enter. ``serialize(parse(doc)) == doc`` bit-exactly
for canonical documents.

Section names are generic: ``mu``/``mu2`` hold whichever products the
kind carries (the two bar products of a dialgebra, a Leibniz bracket,
...), ``delta``/``delta2`` the comultiplications, ``nabla1``/``nabla2``
the affine maps. The kind tag fixes the interpretation.
"""

from __future__ import annotations

import json

from .errors import DocumentError, ScalarParseError
from .fields import parse_field
from .linalg import CoproductTensor, LinearMap, ProductTensor, Vector
from .structures import (AffineStructure, DifferentialHomAlgebra, HLSDA,
                         HomAlgebra, HomBialgebra, HomCoalgebra, HomDialgebra,
                         HomLeibniz, HomPreLie, TwoHomStructure)

FORMAT_VERSION = 1

# kind -> (required sections, optional sections), in canonical write order
SECTIONS = {
    "hom-algebra": (("mu", "alpha"), ("unit",)),
    "hom-coalgebra": (("delta", "alpha"), ("counit",)),
    "hom-bialgebra": (("mu", "unit", "delta", "counit", "alpha"), ()),
    "2-hom-assoc-algebra": (("mu", "mu2", "alpha"), ("unit",)),
    "2-hom-assoc-bialgebra": (("mu", "mu2", "unit", "delta", "counit",
                               "alpha"), ()),
    "2-hom-bialgebra": (("mu", "mu2", "unit", "delta", "delta2", "counit",
                         "counit2", "alpha"), ()),
    "2-2-hom-bialgebra": (("mu", "mu2", "unit", "delta", "delta2", "counit",
                           "counit2", "alpha"), ()),
    "hom-dialgebra": (("mu", "mu2", "alpha"), ()),
    "differential-hom-algebra": (("mu", "alpha", "d"), ("unit",)),
    "hom-leibniz": (("mu", "alpha"), ()),
    "hom-prelie": (("mu", "alpha"), ()),
    "hlsda": (("mu", "mu2", "alpha"), ()),
    "affine-hom-leibniz": (("nabla1", "nabla2", "mu", "alpha"), ()),
}

_PRODUCT_SECTIONS = {"mu", "mu2", "nabla1", "nabla2"}
_COPRODUCT_SECTIONS = {"delta", "delta2"}
_FUNCTIONAL_SECTIONS = {"counit", "counit2"}
_MATRIX_SECTIONS = {"alpha", "d"}
_VECTOR_SECTIONS = {"unit"}


def _coerce(field, value):
    if isinstance(value, float):
        raise DocumentError("floating point literals are not allowed")
    try:
        return field.coerce(value)
    except ScalarParseError as exc:
        raise DocumentError(str(exc)) from exc


def _parse_product(field, n, arr) -> ProductTensor:
    try:
        c = tuple(tuple(tuple(_coerce(field, arr[i][j][k]) for k in range(n))
                        for j in range(n)) for i in range(n))
    except (IndexError, TypeError, KeyError) as exc:
        raise DocumentError("product section must be an n x n x n array") from exc
    _no_extra(arr, n, 3)
    return ProductTensor(field, c)


def _parse_coproduct(field, n, arr) -> CoproductTensor:
    try:
        d = tuple(tuple(tuple(_coerce(field, arr[k][i][j]) for j in range(n))
                        for i in range(n)) for k in range(n))
    except (IndexError, TypeError, KeyError) as exc:
        raise DocumentError("coproduct section must be an n x n x n array") from exc
    _no_extra(arr, n, 3)
    return CoproductTensor(field, d)


def _parse_matrix(field, rows_n, cols_n, arr) -> LinearMap:
    try:
        rows = tuple(tuple(_coerce(field, arr[i][j]) for j in range(cols_n))
                     for i in range(rows_n))
    except (IndexError, TypeError, KeyError) as exc:
        raise DocumentError("matrix section has the wrong shape") from exc
    if len(arr) != rows_n or any(len(r) != cols_n for r in arr):
        raise DocumentError("matrix section has the wrong shape")
    return LinearMap(field, rows)


def _parse_vector(field, n, arr) -> Vector:
    if not isinstance(arr, list) or len(arr) != n:
        raise DocumentError("vector section must have n entries")
    return Vector(field, tuple(_coerce(field, x) for x in arr))


def _no_extra(arr, n, depth):
    if len(arr) != n:
        raise DocumentError("tensor section has the wrong shape")
    if depth > 1:
        for sub in arr:
            _no_extra(sub, n, depth - 1)


def document_to_structure(doc: dict):
    """Parse a document dict into exactly one structure."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("format-version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format-version "
                            f"{doc.get('format-version')!r}")
    kind = doc.get("kind")
    if kind not in SECTIONS:
        raise DocumentError(f"unknown kind {kind!r}")
    n = doc.get("dimension")
    if not isinstance(n, int) or n < 1:
        raise DocumentError("dimension must be a positive integer")
    try:
        field = parse_field(doc.get("field", ""))
    except Exception as exc:
        raise DocumentError(f"bad field descriptor: {exc}") from exc
    basis = doc.get("basis")
    if basis is not None and (not isinstance(basis, list) or len(basis) != n):
        raise DocumentError("basis labels must list one name per dimension")
    maps = doc.get("maps")
    if not isinstance(maps, dict):
        raise DocumentError("document has no maps object")
    required, optional = SECTIONS[kind]
    for name in required:
        if name not in maps:
            raise DocumentError(f"kind {kind} requires section {name!r}")
    for name in maps:
        if name not in required and name not in optional:
            raise DocumentError(f"section {name!r} not allowed for kind {kind}")

    parsed = {}
    for name, arr in maps.items():
        if name in _PRODUCT_SECTIONS:
            parsed[name] = _parse_product(field, n, arr)
        elif name in _COPRODUCT_SECTIONS:
            parsed[name] = _parse_coproduct(field, n, arr)
        elif name in _FUNCTIONAL_SECTIONS:
            parsed[name] = _parse_matrix(field, 1, n, arr)
        elif name in _MATRIX_SECTIONS:
            parsed[name] = _parse_matrix(field, n, n, arr)
        elif name in _VECTOR_SECTIONS:
            parsed[name] = _parse_vector(field, n, arr)

    alpha = parsed.get("alpha")
    if kind == "hom-algebra":
        return HomAlgebra(parsed["mu"], alpha, parsed.get("unit"))
    if kind == "hom-coalgebra":
        return HomCoalgebra(parsed["delta"], alpha, parsed.get("counit"))
    if kind == "hom-bialgebra":
        return HomBialgebra(parsed["mu"], parsed["unit"], parsed["delta"],
                            parsed["counit"], alpha)
    if kind == "2-hom-assoc-algebra":
        return TwoHomStructure(kind, parsed["mu"], parsed["mu2"], alpha,
                               parsed.get("unit"))
    if kind == "2-hom-assoc-bialgebra":
        return TwoHomStructure(kind, parsed["mu"], parsed["mu2"], alpha,
                               parsed["unit"], delta1=parsed["delta"],
                               counit1=parsed["counit"])
    if kind in ("2-hom-bialgebra", "2-2-hom-bialgebra"):
        return TwoHomStructure(kind, parsed["mu"], parsed["mu2"], alpha,
                               parsed["unit"], delta1=parsed["delta"],
                               delta2=parsed["delta2"],
                               counit1=parsed["counit"],
                               counit2=parsed["counit2"])
    if kind == "hom-dialgebra":
        return HomDialgebra(parsed["mu"], parsed["mu2"], alpha)
    if kind == "differential-hom-algebra":
        return DifferentialHomAlgebra(
            HomAlgebra(parsed["mu"], alpha, parsed.get("unit")), parsed["d"])
    if kind == "hom-leibniz":
        return HomLeibniz(parsed["mu"], alpha)
    if kind == "hom-prelie":
        return HomPreLie(parsed["mu"], alpha)
    if kind == "hlsda":
        return HLSDA(parsed["mu"], parsed["mu2"], alpha)
    return AffineStructure(parsed["nabla1"], parsed["nabla2"],
                           HomLeibniz(parsed["mu"], alpha))


def _format_product(field, p: ProductTensor):
    n = p.dim
    return [[[field.format(p.c[i][j][k]) for k in range(n)]
             for j in range(n)] for i in range(n)]


def _format_coproduct(field, q: CoproductTensor):
    n = q.dim
    return [[[field.format(q.d[k][i][j]) for j in range(n)]
             for i in range(n)] for k in range(n)]


def _format_matrix(field, m: LinearMap):
    return [[field.format(x) for x in row] for row in m.rows]


def _format_vector(field, v: Vector):
    return [field.format(x) for x in v.coords]


def structure_to_document(s, name=None, metadata=None) -> dict:
    """Serialize a structure (with optional metadata) into a document dict."""
    kind = s.kind
    if kind not in SECTIONS:
        raise DocumentError(f"cannot serialize kind {kind!r}")
    field = s.field
    n = s.dim
    maps = {}
    values = _section_values(s)
    required, optional = SECTIONS[kind]
    for section in required + optional:
        value = values.get(section)
        if value is None:
            if section in required:
                raise DocumentError(f"structure is missing section {section!r}")
            continue
        if section in _PRODUCT_SECTIONS:
            maps[section] = _format_product(field, value)
        elif section in _COPRODUCT_SECTIONS:
            maps[section] = _format_coproduct(field, value)
        elif section in _FUNCTIONAL_SECTIONS or section in _MATRIX_SECTIONS:
            maps[section] = _format_matrix(field, value)
        else:
            maps[section] = _format_vector(field, value)
    doc = {
        "format-version": FORMAT_VERSION,
        "kind": kind,
        "dimension": n,
        "field": field.name,
        "basis": [f"e{i + 1}" for i in range(n)],
        "maps": maps,
    }
    meta = dict(metadata or {})
    if name is not None:
        meta.setdefault("name", name)
    if meta:
        doc["metadata"] = meta
    return doc


def _section_values(s) -> dict:
    if isinstance(s, HomAlgebra):
        return {"mu": s.mu, "alpha": s.alpha, "unit": s.unit}
    if isinstance(s, HomCoalgebra):
        return {"delta": s.delta, "alpha": s.alpha, "counit": s.counit}
    if isinstance(s, HomBialgebra):
        return {"mu": s.mu, "unit": s.unit, "delta": s.delta,
                "counit": s.counit, "alpha": s.alpha}
    if isinstance(s, TwoHomStructure):
        return {"mu": s.mu1, "mu2": s.mu2, "unit": s.unit, "delta": s.delta1,
                "delta2": s.delta2, "counit": s.counit1,
                "counit2": s.counit2, "alpha": s.alpha}
    if isinstance(s, HomDialgebra):
        return {"mu": s.left, "mu2": s.right, "alpha": s.alpha}
    if isinstance(s, DifferentialHomAlgebra):
        return {"mu": s.mu, "alpha": s.alpha, "d": s.d, "unit": s.unit}
    if isinstance(s, (HomLeibniz,)):
        return {"mu": s.bracket, "alpha": s.alpha}
    if isinstance(s, HomPreLie):
        return {"mu": s.product, "alpha": s.alpha}
    if isinstance(s, HLSDA):
        return {"mu": s.left, "mu2": s.right, "alpha": s.alpha}
    if isinstance(s, AffineStructure):
        return {"nabla1": s.nabla1, "nabla2": s.nabla2,
                "mu": s.leibniz.bracket, "alpha": s.alpha}
    raise DocumentError(f"cannot serialize {type(s).__name__}")


def morphism_to_document(f: LinearMap, source: str, target: str,
                         metadata=None) -> dict:
    doc = {
        "format-version": FORMAT_VERSION,
        "type": "morphism",
        "field": f.field.name,
        "source": source,
        "target": target,
        "matrix": _format_matrix(f.field, f),
    }
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def document_to_morphism(doc: dict):
    """Returns (matrix, source fixture name, target fixture name)."""
    if doc.get("format-version") != FORMAT_VERSION:
        raise DocumentError("unsupported format-version")
    if doc.get("type") != "morphism":
        raise DocumentError("not a morphism document")
    field = parse_field(doc.get("field", ""))
    matrix = doc.get("matrix")
    if not isinstance(matrix, list) or not matrix:
        raise DocumentError("morphism document has no matrix")
    rows = tuple(tuple(_coerce(field, x) for x in row) for row in matrix)
    return LinearMap(field, rows), doc.get("source"), doc.get("target")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc


def load_path(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def save_path(path, doc: dict):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
