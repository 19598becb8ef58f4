"""Exact JSON serialization: field descriptors, algebra elements, Jordan
and Freudenthal elements, generator words, and ternary forms.

Scalars travel as exact decimal strings ("3", "-3/2"); quadratic-extension
scalars as a two-string pair [a, b] meaning a + b*sqrt(eps).  Floats never
appear.
"""

from __future__ import annotations

import json

from . import freudenthal as fr
from . import jordan as jmod
from .composition import AlgebraError, CompElem, construct
from .fields import QuadExt, field_from_json
from .quadform import TernaryForm


class ParseError(ValueError):
    pass


# -- scalars ------------------------------------------------------------


def scalar_to_json(s):
    if isinstance(s.field, QuadExt):
        return [str(s.v[0]), str(s.v[1])]
    return str(s)


def scalar_from_json(field, j):
    if isinstance(field, QuadExt):
        if isinstance(j, (list, tuple)) and len(j) == 2:
            return field.scalar((int(str(j[0])), int(str(j[1]))))
        return field.scalar(str(j))
    if isinstance(j, (list, tuple)):
        raise ParseError(f"pair scalar {j!r} only valid over a quadratic extension")
    return field.scalar(str(j))


# -- algebras -----------------------------------------------------------

_PARAM_NAMES = {
    "unarion": (),
    "binarion-split": (),
    "binarion-quadratic": ("eps",),
    "quaternion": ("a", "b"),
    "matrix2x2": (),
    "octonion": ("a", "b", "c"),
    "octonion-split": (),
}


def algebra_to_json(A):
    out = {"tag": A.tag, "field": A.field.to_json()}
    for name, val in zip(_PARAM_NAMES[A.tag], A.params):
        out[name] = scalar_to_json(A.field.scalar(val))
    return out


def algebra_from_json(j):
    tag = j.get("tag")
    if tag not in _PARAM_NAMES:
        raise ParseError(f"unknown algebra tag {tag!r}")
    field = field_from_json(j["field"])
    params = tuple(
        scalar_from_json(field, j[name]) for name in _PARAM_NAMES[tag]
    )
    return construct(tag, params, field)


def comp_elem_to_json(x, with_algebra=True):
    out = {"coords": [scalar_to_json(c) for c in x.coords]}
    if with_algebra:
        out["algebra"] = algebra_to_json(x.algebra)
    return out


def comp_elem_from_json(j, algebra=None):
    if algebra is None:
        algebra = algebra_from_json(j["algebra"])
    coords = j["coords"] if isinstance(j, dict) else j
    if len(coords) != algebra.dim:
        raise ParseError(f"expected {algebra.dim} coordinates, got {len(coords)}")
    return CompElem(algebra, [scalar_from_json(algebra.field, c) for c in coords])


# -- jordan / freudenthal ----------------------------------------------


def jordan_to_json(X, with_algebra=False):
    out = {
        "c": [scalar_to_json(c) for c in X.c],
        "x": [comp_elem_to_json(xi, with_algebra=False) for xi in X.x],
    }
    if with_algebra:
        out["algebra"] = algebra_to_json(X.algebra)
    return out


def jordan_from_json(j, algebra=None):
    if algebra is None:
        algebra = algebra_from_json(j["algebra"])
    field = algebra.field
    c = [scalar_from_json(field, v) for v in j["c"]]
    xs = [comp_elem_from_json(v, algebra) for v in j["x"]]
    return jmod.JordanElem(algebra, c, xs)


def w_to_json(v, with_algebra=False):
    out = {
        "a": scalar_to_json(v.a),
        "b": jordan_to_json(v.b),
        "c": jordan_to_json(v.c),
        "d": scalar_to_json(v.d),
    }
    if with_algebra:
        out["algebra"] = algebra_to_json(v.algebra)
    return out


def w_from_json(j, algebra=None):
    if algebra is None:
        algebra = algebra_from_json(j["algebra"])
    field = algebra.field
    return fr.FreudenthalElem(
        scalar_from_json(field, j["a"]),
        jordan_from_json(j["b"], algebra),
        jordan_from_json(j["c"], algebra),
        scalar_from_json(field, j["d"]),
    )


# -- matrices and generator words ---------------------------------------


def matrix_to_json(M):
    return [[scalar_to_json(x) for x in row] for row in M]


def matrix_from_json(field, j):
    return [[scalar_from_json(field, x) for x in row] for row in j]


def word_to_json(word):
    out = []
    for atom in word:
        kind = atom[0]
        if kind in ("n", "nbar"):
            out.append({"gen": kind, "x": jordan_to_json(atom[1])})
        elif kind in ("s", "sstar"):
            lam = atom[1]
            out.append({"gen": kind, "lambda": scalar_to_json(lam) if not isinstance(lam, (int, str)) else str(lam)})
        elif kind == "iota":
            out.append({"gen": "iota"})
        elif kind == "levi":
            if isinstance(atom[1], fr.LeviElement):
                g, h = atom[1].g, atom[1].h
            else:
                g, h = atom[1], atom[2]
            out.append({"gen": "levi", "g": matrix_to_json(g), "h": matrix_to_json(h)})
        else:
            raise ParseError(f"unknown atom {kind!r}")
    return out


def word_from_json(j, algebra):
    field = algebra.field
    word = []
    for item in j:
        kind = item.get("gen")
        if kind in ("n", "nbar"):
            word.append((kind, jordan_from_json(item["x"], algebra)))
        elif kind in ("s", "sstar"):
            word.append((kind, scalar_from_json(field, item["lambda"])))
        elif kind == "iota":
            word.append(("iota",))
        elif kind == "levi":
            word.append(
                (
                    "levi",
                    matrix_from_json(field, item["g"]),
                    matrix_from_json(field, item["h"]),
                )
            )
        else:
            raise ParseError(f"unknown generator atom {kind!r}")
    return word


# -- ternary forms ------------------------------------------------------


def form_to_json(f):
    return matrix_to_json(f.gram)


def form_from_json(field, j):
    return TernaryForm(field, matrix_from_json(field, j))


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(str(e)) from e
