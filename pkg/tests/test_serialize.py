import pytest

from fkit import composition as comp, freudenthal as fr, serialize as ser
from fkit.fields import QQ, PrimeField, QuadExt
from fkit.jordan import JordanElem
from fkit.quadform import TernaryForm
from fkit.serialize import ParseError


def test_scalar_roundtrip():
    for F in (QQ, PrimeField(5)):
        for v in (0, 1, -3):
            s = F.scalar(v)
            assert ser.scalar_from_json(F, ser.scalar_to_json(s)) == s
    s = QQ.scalar("-7/3")
    assert ser.scalar_to_json(s) == "-7/3"
    assert ser.scalar_from_json(QQ, "-7/3") == s


def test_quad_ext_scalar_roundtrip():
    K = QuadExt(5, 2)
    s = K.scalar((3, 4))
    j = ser.scalar_to_json(s)
    assert isinstance(j, list) and len(j) == 2
    assert ser.scalar_from_json(K, j) == s


def test_algebra_roundtrip(algebra_q):
    j = ser.algebra_to_json(algebra_q)
    back = ser.algebra_from_json(j)
    assert back.tag == algebra_q.tag
    assert back.field == algebra_q.field
    assert back.params == algebra_q.params


def test_comp_elem_roundtrip(algebra_q, rng):
    x = algebra_q.random(rng)
    j = ser.comp_elem_to_json(x)
    assert ser.comp_elem_from_json(j) == x


def test_jordan_roundtrip(algebra_q, rng):
    X = JordanElem.random(algebra_q, rng)
    j = ser.jordan_to_json(X, with_algebra=True)
    assert ser.jordan_from_json(j) == X
    # and with an externally supplied algebra
    assert ser.jordan_from_json(ser.jordan_to_json(X), algebra_q) == X


def test_w_roundtrip(algebra_q, rng):
    v = fr.FreudenthalElem.random(algebra_q, rng)
    j = ser.w_to_json(v, with_algebra=True)
    assert ser.w_from_json(j) == v


def test_word_roundtrip(algebra_q, rng):
    A = algebra_q
    f = A.field
    word = [
        fr.atom_n(JordanElem.random(A, rng)),
        fr.atom_involution(),
        fr.atom_s(f.scalar(2)),
        fr.atom_nbar(JordanElem.random(A, rng)),
        fr.atom_sstar(f.scalar(3)),
    ]
    j = ser.word_to_json(word)
    back = ser.word_from_json(j, A)
    v = fr.FreudenthalElem.random(A, rng)
    assert fr.apply_word(back, v) == fr.apply_word(word, v)


def test_form_roundtrip():
    form = TernaryForm.diag(QQ, 1, -2, "3/4")
    j = ser.form_to_json(form)
    assert ser.form_from_json(QQ, j) == form


def test_malformed_json_raises():
    with pytest.raises(ParseError):
        ser.loads("{not json")
    with pytest.raises(ParseError):
        ser.algebra_from_json({"tag": "nonexistent", "field": {"kind": "Q"}})


def test_wrong_coordinate_count(algebra_q):
    with pytest.raises(ParseError):
        ser.comp_elem_from_json({"coords": ["1"] * (algebra_q.dim + 1)}, algebra_q)


def test_no_floats_anywhere(algebra_q, rng):
    v = fr.FreudenthalElem.random(algebra_q, rng)
    text = ser.dumps(ser.w_to_json(v, with_algebra=True))
    import json

    def walk(o):
        if isinstance(o, float):
            raise AssertionError("float leaked into serialization")
        if isinstance(o, dict):
            for x in o.values():
                walk(x)
        elif isinstance(o, list):
            for x in o:
                walk(x)

    walk(json.loads(text))
