"""Quadratic data and its dual, series inversion, composition, relations."""

import random
from fractions import Fraction
from math import factorial

import pytest

from dialab.errors import SlotOutOfRange, UnknownPreset
from dialab.lincomb import Lin
from dialab.operads import (
    QuadraticData,
    Series,
    compose_report,
    dend_compose,
    dend_series,
    dend_series_closed_form,
    dias_series,
    dias_series_closed_form,
    multilinear_dim_dend,
    multilinear_dim_dias,
    nested_candidates,
    poincare_check,
    preset_quadratic,
    quadratic_dual,
    sh_relations,
)
from dialab.trees import catalan, enumerate_trees, nested_subtrees, parse_name


# ---------------------------------------------------------------------------
# quadratic data and duality
# ---------------------------------------------------------------------------

def test_preset_shapes():
    assert preset_quadratic("dias").n_relations == 5
    assert preset_quadratic("dend").n_relations == 3
    assert preset_quadratic("as").n_relations == 1
    with pytest.raises(UnknownPreset):
        preset_quadratic("nope")


def test_two_product_preset_contains_the_expected_vectors():
    q = preset_quadratic("dias")
    from dialab.linalg import in_row_space
    rows = [list(r) for r in q.relations]
    # one-sided associativity of the left product: (x<y)<z - x<(y<z)
    v = q.vector([(1, 2, "l", "l"), (-1, 1, "l", "l")])
    assert in_row_space(rows, v)
    d = preset_quadratic("dend")
    rows = [list(r) for r in d.relations]
    v = d.vector([(1, 2, "l", "l"), (-1, 1, "l", "l"), (-1, 1, "l", "r")])
    assert in_row_space(rows, v)


def test_duality_between_the_presets():
    dias = preset_quadratic("dias")
    dend = preset_quadratic("dend")
    assert quadratic_dual(dias).spans_same_space(dend)
    assert quadratic_dual(dend).spans_same_space(dias)
    assert quadratic_dual(dias).relations == dend.relations  # reduced bases
    assert dias.n_relations + quadratic_dual(dias).n_relations == 8


def test_self_duality_of_the_associative_preset():
    q = preset_quadratic("as")
    assert quadratic_dual(q).spans_same_space(q)


def test_double_dual_on_presets():
    for name in ("dias", "dend", "as"):
        q = preset_quadratic(name)
        assert quadratic_dual(quadratic_dual(q)).spans_same_space(q)


def test_double_dual_on_random_data():
    rng = random.Random(12)
    for _ in range(20):
        g = rng.randrange(1, 4)
        labels = ["m%d" % i for i in range(g)]
        dim = 2 * g * g
        n_rel = rng.randrange(0, dim + 1)
        rels = [
            [Fraction(rng.randrange(-3, 4)) for _ in range(dim)]
            for _ in range(n_rel)
        ]
        q = QuadraticData(labels, rels)
        dd = quadratic_dual(quadratic_dual(q))
        assert dd.spans_same_space(q)
        assert q.n_relations + quadratic_dual(q).n_relations == dim


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

def test_series_coefficients():
    gd = dias_series(10)
    assert [gd[k] for k in range(1, 7)] == [-1, 2, -3, 4, -5, 6]
    ge = dend_series(10)
    assert [ge[k] for k in range(1, 7)] == [
        -catalan(1), catalan(2), -catalan(3), catalan(4),
        -catalan(5), catalan(6)]


def test_series_closed_forms_and_inversion():
    report = poincare_check(10)
    assert report["dias_closed_form_ok"]
    assert report["dend_closed_form_ok"]
    assert report["inverse_ok"]
    # and composed the other way around as well
    assert dias_series(10).compose(dend_series(10)) == Series.identity(10)


def test_closed_form_expansions_standalone():
    assert dias_series_closed_form(8) == dias_series(8)
    assert dend_series_closed_form(8) == dend_series(8)


def test_multilinear_dimensions():
    for n in range(1, 6):
        assert multilinear_dim_dias(n) == n * factorial(n)
    for n in range(1, 6):
        assert multilinear_dim_dend(n) == catalan(n) * factorial(n)


# ---------------------------------------------------------------------------
# composition of tree operations
# ---------------------------------------------------------------------------

def test_composition_table():
    t21 = parse_name("[2,1]")
    t12 = parse_name("[1,2]")
    table = {
        (t21, 2, t21): ["[3,2,1]"],
        (t21, 2, t12): ["[3,1,2]"],
        (t21, 1, t12): ["[1,3,1]"],
        (t12, 1, t21): ["[2,1,3]"],
        (t12, 1, t12): ["[1,2,3]"],
        (t12, 2, t21): ["[1,3,1]"],
        (t21, 1, t21): ["[3,1,2]", "[3,2,1]"],
        (t12, 2, t12): ["[1,2,3]", "[2,1,3]"],
    }
    for (outer, pos, inner), names in table.items():
        value = dend_compose(outer, pos, inner)
        got = sorted(str(t) for t, c in value.items())
        assert got == names
        assert all(c == 1 for _, c in value.items())
    with pytest.raises(SlotOutOfRange):
        dend_compose(t21, 3, t21)


def _compose_lin(x: Lin, slot, y: Lin) -> Lin:
    out = Lin()
    for a, ca in x.data.items():
        for b, cb in y.data.items():
            out = out + (ca * cb) * dend_compose(a, slot, b)
    return out


def test_composition_is_operadic():
    # sequential and parallel axioms on all trees of total degree <= 4
    shapes = [
        (p, q, r)
        for p in range(1, 3) for q in range(1, 3) for r in range(1, 3)
        if p + q + r <= 4
    ]
    for p, q, r in shapes:
        for a in enumerate_trees(p):
            for b in enumerate_trees(q):
                for c in enumerate_trees(r):
                    for i in range(1, p + 1):
                        for j in range(1, q + 1):
                            lhs = _compose_lin(
                                dend_compose(a, i, b), i + j - 1,
                                Lin.term(c))
                            rhs = _compose_lin(
                                Lin.term(a), i, dend_compose(b, j, c))
                            assert lhs == rhs
                        for i2 in range(i + 1, p + 1):
                            lhs = _compose_lin(
                                dend_compose(a, i, b), i2 + q - 1,
                                Lin.term(c))
                            rhs = _compose_lin(
                                dend_compose(a, i2, c), i, Lin.term(b))
                            assert lhs == rhs


def test_nested_description_matches_the_oracle_in_low_degrees():
    for k in range(1, 3):
        for m in range(1, 4 - k):
            for outer in enumerate_trees(k):
                for inner in enumerate_trees(m):
                    for slot in range(1, k + 1):
                        report = compose_report(outer, slot, inner)
                        assert report["coefficients_all_one"]
                        assert report["printed_orientation_matches"], (
                            outer, slot, inner)


def test_nested_candidates_both_orientations():
    t21 = parse_name("[2,1]")
    plain = {t.name for t in nested_candidates(t21, 1, t21)}
    assert plain == {(3, 1, 2), (3, 2, 1)}
    mirrored = {t.name for t in nested_candidates(t21, 1, t21,
                                                  mirrored=True)}
    assert mirrored == {t.name for t in dend_compose(t21, 1, t21).support()}


# ---------------------------------------------------------------------------
# relations for homotopy algebras
# ---------------------------------------------------------------------------

def test_relation_counts():
    assert [len(sh_relations(n)) for n in (1, 2, 3)] == [1, 2, 5]
    for n in range(1, 5):
        for y, rel in sh_relations(n):
            assert len(rel.terms) == len(nested_subtrees(y))
            assert len(rel.terms) == n * (n + 1) // 2


def test_degree_one_relation_is_a_square_zero_differential():
    (y, rel), = sh_relations(1)
    assert y == parse_name("[1]")
    assert rel.term_multiset() == [((1,), 0, (1,))]


def test_degree_two_relations():
    expected = {
        (1, 2): [((1,), 0, (1, 2)), ((1, 2), 0, (1,)), ((1, 2), 1, (1,))],
        (2, 1): [((1,), 0, (2, 1)), ((2, 1), 0, (1,)), ((2, 1), 1, (1,))],
    }
    for y, rel in sh_relations(2):
        assert rel.term_multiset() == expected[y.name]


def test_degree_three_relations_match_the_displayed_list():
    # left side: the differential against the ternary operation; right side:
    # the displayed quadratic terms for each tree
    quadratic_expected = {
        (1, 2, 3): {((1, 2), 0, (1, 2)), ((1, 2), 1, (1, 2))},
        (2, 1, 3): {((1, 2), 0, (2, 1)), ((1, 2), 1, (1, 2))},
        (1, 3, 1): {((2, 1), 0, (1, 2)), ((1, 2), 1, (2, 1))},
        (3, 1, 2): {((2, 1), 0, (2, 1)), ((2, 1), 1, (1, 2))},
        (3, 2, 1): {((2, 1), 0, (2, 1)), ((2, 1), 1, (2, 1))},
    }
    for y, rel in sh_relations(3):
        terms = rel.term_multiset()
        linear = [t for t in terms if t[2] == (1,) or t[0] == (1,)]
        quadratic = {t for t in terms if len(t[2]) == 2}
        assert quadratic == quadratic_expected[y.name]
        # the linear terms: one differential-of-operation term and three
        # one-slot differentials
        assert ((1,), 0, y.name) in linear
        assert sum(1 for t in linear if t[2] == (1,)) == 3
        assert {t[1] for t in linear if t[2] == (1,)} == {0, 1, 2}


def test_sign_exponents_are_documented_strings():
    (y, rel), = sh_relations(1)
    assert rel.terms[0]["sign_exponent"] == "(2)*(1) + 1*(1 + |a1|)"
    doc = rel.to_json_dict()
    assert doc["tree"] == "[1]"


def test_instantiated_signs_match_displays_up_to_global_factor():
    # with all argument degrees 0 the displayed degree-2 relations read
    # + delta o m - m o (delta x 1) - m o (1 x delta); our exponent yields
    # the global negative of that pattern, uniformly in the tree
    for y, rel in sh_relations(2):
        signs = {}
        for t in rel.terms:
            key = (t["quotient"].name, t["position"], t["sub"].name)
            signs[key] = rel.instantiate_sign(t, [0, 0])
        full = signs[((1,), 0, y.name)]
        singles = [signs[(y.name, i, (1,))] for i in (0, 1)]
        assert singles == [-full, -full]
