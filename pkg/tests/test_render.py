import itertools
import os
import subprocess
import sys

import pytest

from forestalg import (
    DOT,
    Forest,
    GradedVector,
    Multiset,
    b_plus,
    bilinear,
    bullet,
    connes_kreimer,
    elementary_differential,
    graft,
    linear,
    parse_forest,
    parse_tree,
    series_from_nondecreasing,
    take_grades,
    term,
    texify,
    texify_forest,
    texify_vector,
    text_vector,
    to_json,
    vector_from_terms,
    write_latex_document,
)
from forestalg.render import LATEX_PREAMBLE, basis_string

dot = bullet()
stick = b_plus(DOT, dot)
cherry = b_plus(DOT, Forest([dot, dot]))


def test_texify_forest():
    assert texify_forest(Forest()) == r"\one"
    assert texify_forest(Forest([dot])) == r"\rootedtree{1}"
    # canonical order puts the single vertex before the two-vertex tree
    assert texify_forest(parse_forest("1[2],3")) == r"\rootedtree{3} \cdot \rootedtree{1[2]}"


def test_display_of_a_finite_vector():
    v = vector_from_terms([term(3, "x"), term(2, "xy"), term(1, "xyz")])
    assert texify_vector(v) == r"3x + 2(x \cdot y) + (x \cdot y \cdot z)"


def test_display_of_a_truncated_series():
    s = series_from_nondecreasing(term(i, "x" * i) for i in itertools.count(1))
    assert texify_vector(take_grades(s, 5)) == (
        r"x + 2(x \cdot x) + 3(x \cdot x \cdot x) + 4(x \cdot x \cdot x \cdot x)"
        r" + 5(x \cdot x \cdot x \cdot x \cdot x)")


def test_display_of_linear_and_bilinear_results():
    table = {"x": GradedVector.of("a"), "y": GradedVector.of("b", 2), "z": GradedVector.of("c", 3)}
    v = vector_from_terms([term(1, "x"), term(2, "y"), term(3, "z")])
    assert texify_vector(linear(table.__getitem__, v)) == "a + 4b + 9c"
    w = vector_from_terms([term(5, "x"), term(7, "y"), term(11, "z")])
    assert texify_vector(bilinear(lambda a, b: GradedVector.of(a + b), v, w)) == (
        r"5(x \cdot x) + 10(y \cdot x) + 7(x \cdot y) + 15(z \cdot x) + 14(y \cdot y)"
        r" + 11(x \cdot z) + 21(z \cdot y) + 22(y \cdot z) + 33(z \cdot z)")


def test_display_of_symmetric_algebra():
    x, y, z, a, b, c = (Multiset([s]) for s in "xyzabc")
    v1 = vector_from_terms([term(1, x), term(2, y), term(3, z)])
    v2 = vector_from_terms([term(5, a), term(7, b), term(11, c)])
    assert texify_vector(v1 + v2) == "x + 2y + 3z + 5a + 7b + 11c"
    assert texify_vector(v1 * v2) == (
        r"5(a \cdot x) + 10(a \cdot y) + 7(b \cdot x) + 15(a \cdot z) + 14(b \cdot y)"
        r" + 11(c \cdot x) + 21(b \cdot z) + 22(c \cdot y) + 33(c \cdot z)")


def test_signs_and_zero():
    assert texify_vector(GradedVector()) == "0"
    assert texify_vector(GradedVector.of("b") - GradedVector.of("c")) == "b - c"
    assert texify_vector(GradedVector.of("b", -2) + GradedVector.of("c", "1/2")) == r"-2b + \frac{1}{2}c"
    assert text_vector(GradedVector.of("b", -2) + GradedVector.of("c", "1/2")) == "-2b + 1/2c"


def test_text_of_forest_vectors():
    v = graft(Forest([dot]), Forest([dot, dot])).canonical()
    assert text_vector(v) == "2(1,1[1])"
    assert text_vector(GradedVector.of(Forest())) == "1"


def test_pair_strings():
    v = connes_kreimer(parse_forest("2")).canonical()
    assert [basis_string(b) for b, _ in v.items()] == ["1 (x) 2", "2 (x) 1"]
    assert texify(next(iter(v.items()))[0]) == r"\one \otimes \rootedtree{2}"


def test_elementary_differential():
    assert elementary_differential(dot) == "hf"
    assert elementary_differential(stick) == "hf^(1)(hf)"
    assert elementary_differential(cherry) == "hf^(2)(hf, hf)"
    assert elementary_differential(parse_tree("1[1,1[1]]")) == "hf^(2)(hf, hf^(1)(hf))"


def test_to_json():
    assert to_json(GradedVector()) == '{"layers":[]}'
    assert to_json(GradedVector.of(dot)) == '{"layers":[{"grade":1,"terms":[{"coeff":"1","basis":"1"}]}]}'
    v = graft(parse_forest("1[2],1[2]"), parse_forest("1,1[2,2]"))
    assert to_json(v) == to_json(v)
    assert to_json(v) == to_json(v.canonical())


def test_json_matches_canonical_text_order():
    import json
    v = graft(parse_forest("1[2],3"), parse_forest("4[5,6]"))
    listed = [t["basis"] for t in json.loads(to_json(v))["layers"][0]["terms"]]
    assert listed == [basis_string(b) for b, _ in v.canonical().items()]


def test_latex_document(tmp_path):
    out = tmp_path / "zero.tex"
    write_latex_document(GradedVector(), out)
    text = out.read_text(encoding="utf-8")
    assert text.startswith(LATEX_PREAMBLE)
    assert "\\begin{document}\n$ 0 $\n\\end{document}\n" in text
    v = vector_from_terms([term(3, "x"), term(2, "xy"), term(1, "xyz")])
    write_latex_document(v, out)
    assert r"$ 3x + 2(x \cdot y) + (x \cdot y \cdot z) $" in out.read_text(encoding="utf-8")
    assert [p.name for p in tmp_path.iterdir()] == ["zero.tex"]
    assert b"\r\n" not in out.read_bytes()


def test_latex_document_write_failure(tmp_path):
    with pytest.raises(OSError):
        write_latex_document(GradedVector(), tmp_path / "missing" / "out.tex")


def test_preamble_defines_both_macros():
    assert r"\NewDocumentCommand{\rootedtree}" in LATEX_PREAMBLE
    assert r"\newcommand{\one}" in LATEX_PREAMBLE


def test_output_is_identical_across_processes():
    code = ("from forestalg import *;"
            "v = grossman_larson(parse_forest('1[2],3'), parse_forest('4[5,6]'));"
            "print(to_json(v)); print(texify_vector(v.canonical())); print(text_vector(v.canonical()))")
    runs = [subprocess.run([sys.executable, "-c", code], capture_output=True, check=True,
                           env={**os.environ, "PYTHONHASHSEED": str(seed)}).stdout
            for seed in (1, 2)]
    assert runs[0] == runs[1]
