import pytest

from qhh import GF, QQ, FreeElement, build_resolution, compute_f3, verify_f3, parse_element, parse_algebra
from qhh.cohomology import Cochains
from qhh.known_f3 import known_f3, load_f3, KNOWN
from qhh.linalg import ShapeError
from qhh.resolution import (GeneratorSet, build_f2, image_of, compose_check, composite_images,
                            split_leading, f3_from_decompositions)

from conftest import CORPUS, presentation, resolution

F2 = GF(2)


def el(res, text):
    return parse_element(text, res.presentation.quiver, res.field)


def fmt(res, x):
    return x.format(res.presentation.quiver)


def test_f2_preproj(A1):
    assert A1.f[2].elements == [el(A1, t) for t in ("a b", "x e", "g d", "b a + d g + e x")]


def test_f2_nonstd(A2):
    assert A2.f[2].elements == [el(A2, t) for t in ("a b - a d g b", "x e", "g d", "b a + d g + e x")]
    assert A2.retained == [0, 1, 2, 3]


def test_f2_one_loop():
    res = resolution("one-loop")
    assert [fmt(res, x) for x in res.f[2].elements] == ["x x"]


def test_f2_rejects_non_uniform():
    pres = presentation("preproj-D4")
    with pytest.raises(ValueError):
        build_f2([parse_element("a b + g d", pres.quiver, pres.field)])


def test_f0_f1(A1):
    assert len(A1.f[0]) == 4 and len(A1.f[1]) == 6
    assert A1.f[1].endpoints[0] == (0, 3)


def test_A1_on_alpha(A1):
    alg = A1.algebra
    img = image_of(A1.maps["A1"], 0, alg)
    a = alg.index[A1.presentation.quiver.arrow("a")]
    e1 = alg.index[A1.presentation.quiver.trivial("1")]
    e4 = alg.index[A1.presentation.quiver.trivial("4")]
    # e1 ⊗ α in the summand at vertex 1, minus α ⊗ e4 at vertex 4 (sign vanishes in char 2)
    assert img == {(0, e1, a): 1, (3, a, e4): 1}


def test_A1_on_alpha_signed():
    res = resolution("preproj-D4", "q")
    alg = res.algebra
    q = res.presentation.quiver
    img = image_of(res.maps["A1"], 0, alg)
    assert img == {(0, alg.index[q.trivial("1")], alg.index[q.arrow("a")]): 1,
                   (3, alg.index[q.arrow("a")], alg.index[q.trivial("4")]): -1}


def test_A2_on_gamma_delta(A1):
    alg = A1.algebra
    q = A1.presentation.quiver
    img = image_of(A1.maps["A2"], 2, alg)
    g, d = q.arrow_index("g"), q.arrow_index("d")
    assert img == {(g, alg.index[q.trivial("3")], alg.index[q.arrow("d")]): 1,
                   (d, alg.index[q.arrow("g")], alg.index[q.trivial("3")]): 1}


def test_A2_on_mesh_relation_has_six_terms(A2):
    img = image_of(A2.maps["A2"], 3, A2.algebra)
    assert len(img) == 6
    assert sorted({k[0] for k in img}) == list(range(6))


def test_split_leading(A1):
    x = A1.f[2].elements[3]
    parts = split_leading(x, A1.presentation.quiver)
    assert {A1.presentation.quiver.arrow_names[a]: fmt(A1, y) for a, y in parts.items()} == \
        {"b": "a", "d": "g", "e": "x"}


@pytest.mark.parametrize("name", ["preproj-D4", "nonstd-D4"])
def test_compute_f3_shape(name):
    res = resolution(name)
    f3 = res.f[3]
    assert len(f3) == 4
    assert sorted(f3.endpoints) == [(0, 0), (1, 1), (2, 2), (3, 3)]
    assert verify_f3(f3, res.f[2])


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("fname", ["gf2", "gf3", "q"])
def test_compute_f3_verifies(name, fname):
    res = resolution(name, fname)
    check = verify_f3(res.f[3], res.f[2])
    assert check, check.problems
    for y in res.f[3].elements:
        assert res.G.normal_form(y).is_zero()


def test_f3_loop_square():
    res = resolution("one-loop")
    # K[x]/(x^2): the third generator is x^3 = f2·x = x·f2
    assert [fmt(res, y) for y in res.f[3].elements] == ["x x x"]


def test_f3_a3_rad2_empty():
    res = resolution("a3-rad2")
    assert len(res.f[3]) == 0


def test_known_f3_preproj_verifies(A1):
    f3 = known_f3("preproj-D4")(A1.f[2], A1.G, A1.algebra)
    assert verify_f3(f3, A1.f[2])
    assert fmt(A1, f3.elements[1]) == fmt(A1, A1.f[2].elements[1] * el(A1, "x d g e"))


def test_broken_decomposition_detected(A1):
    table = [KNOWN["preproj-D4"][0]]
    left, two = table[0]
    two = dict(two)
    two[3] = two[3][:1]
    f3 = load_f3([(left, two)], A1.f[2], A1.presentation.quiver, A1.field)
    check = verify_f3(f3, A1.f[2])
    assert not check
    assert any("sum q f2_i r" in p for p in check.problems)


def test_known_f3_nonstd_fourth_element_fails(A2):
    """The hand-listed two-sided decomposition of the vertex-4 element does
    not re-expand to the element: one term of y is never produced."""
    f3 = known_f3("nonstd-D4")(A2.f[2], A2.G, A2.algebra)
    check = verify_f3(f3, A2.f[2])
    assert not check
    assert check.problems == ["f3[3]: y != sum q f2_i r"]


def test_known_f3_nonstd_left_factors_vanish(A2):
    # every p_i of the hand-listed set is zero in the algebra, so that set is
    # not a minimal choice; the computed one has nonzero factors
    f3 = known_f3("nonstd-D4")(A2.f[2], A2.G, A2.algebra)
    for left in f3.left_decomp:
        assert all(A2.G.normal_form(p).is_zero() for p in left.values())
    assert all(any(not A2.G.normal_form(p).is_zero() for p in left.values()) for left in A2.f[3].left_decomp)


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("fname", ["gf2", "gf3", "q"])
def test_complex_checks(name, fname):
    res = resolution(name, fname)
    assert res.complex_checks() == {"g*A1": True, "A1*A2": True, "A2*A3": True}


def test_compose_shape_mismatch(A1):
    with pytest.raises(ShapeError):
        composite_images(A1.maps["A1"], A1.maps["A3"], A1.algebra)


def test_A3_nonzero_for_d4(A1):
    assert all(A1.maps["A3"].images)
    assert compose_check(A1.maps["A2"], A1.maps["A3"], A1.algebra)


def test_hh2_independent_of_f3_choice(A1):
    known = build_resolution(presentation("preproj-D4"), f3=known_f3("preproj-D4"))
    assert known.complex_checks()["A2*A3"]
    assert Cochains(known).report().hh == Cochains(A1).report().hh


def test_f3_from_decompositions_builds_y(A1):
    f2 = A1.f[2]
    f3 = f3_from_decompositions(f2, [{0: el(A1, "a e x b")}], [{}])
    assert f3.elements[0] == f2.elements[0] * el(A1, "a e x b")
