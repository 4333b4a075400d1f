"""Structure-constant algebras: axioms, fixtures, halos, quotients."""

from fractions import Fraction

import pytest

from dialab.errors import AxiomFailure, TooLarge, UnknownFixture
from dialab.finalg import (
    FIXTURES,
    FiniteAlgebra,
    as_dialgebra,
    associativization,
    bar_units,
    check_axioms,
    differential_dialgebra,
    fixture,
    leibnizification,
    matrix_dialgebra,
    opposite,
    tensor_square,
    upper_triangular_2,
)


def one_dim(left, right):
    return FiniteAlgebra(
        "dialgebra", ["e"],
        {"left": [[(Fraction(left),)]], "right": [[(Fraction(right),)]]},
        check=False)


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------

def test_every_fixture_passes_its_axioms():
    for name in FIXTURES:
        alg = fixture(name)
        assert check_axioms(alg) == "pass", name


def test_broken_algebra_reports_witness():
    broken = one_dim(1, 0)  # left = multiplication, right = 0
    report = check_axioms(broken)
    assert report != "pass"
    # the bar-side axiom x -| (y -| z) = x -| (y |- z) fails at (e, e, e)
    assert ("1", (0, 0, 0)) in report
    # the two one-sided associativities hold
    assert all(axiom not in ("2", "5") for axiom, _ in report)


def test_construction_fails_fast_unless_deferred():
    with pytest.raises(AxiomFailure):
        FiniteAlgebra(
            "dialgebra", ["e"],
            {"left": [[(Fraction(1),)]], "right": [[(Fraction(0),)]]})


def test_dimension_cap(monkeypatch):
    monkeypatch.setenv("DIALAB_MAX_DIM", "3")
    with pytest.raises(TooLarge):
        fixture("tensor_square")
    monkeypatch.delenv("DIALAB_MAX_DIM")
    assert fixture("tensor_square").dim == 4


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("no_such_thing")


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------

def test_monoid_double_products():
    # (m,n) -| (m',n') = (m, n m' n') and (m,n) |- (m',n') = (m n m', n')
    # on the additively written cyclic group of order 2
    alg = fixture("monoid_double")
    idx = {b: i for i, b in enumerate(alg.basis)}
    x = alg.unit_vector(idx["(0,1)"])
    y = alg.unit_vector(idx["(0,0)"])
    out = alg.mul("left", x, y)
    assert out[idx["(0,1)"]] == 1 and sum(out) == 1
    out = alg.mul("right", x, y)
    assert out[idx["(1,0)"]] == 1 and sum(out) == 1


def test_differential_fixture_rejects_non_differential():
    A = upper_triangular_2()
    with pytest.raises(AxiomFailure):
        differential_dialgebra(A, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_truncated_free_dialgebra_dimensions():
    assert fixture("truncated_free_dialgebra", dim_v=1, maxdeg=3).dim == 6
    assert fixture("truncated_free_dialgebra", dim_v=2, maxdeg=2).dim == 10


def test_matrix_dialgebra_axioms_over_base_fixtures():
    for base in ("field", "monoid_algebra"):
        alg = matrix_dialgebra(2, fixture(base))
        assert check_axioms(alg) == "pass"


def test_opposite_is_an_involution():
    for name in ("tensor_square", "diff_algebra", "monoid_double"):
        alg = fixture(name)
        assert opposite(opposite(alg)) == alg


# ---------------------------------------------------------------------------
# halos
# ---------------------------------------------------------------------------

def test_halo_of_the_ground_field():
    halo = bar_units(fixture("field"))
    assert halo.point == (Fraction(1),)
    assert halo.affine_dim == 0


def test_halo_of_tensor_square():
    alg = fixture("tensor_square")
    halo = bar_units(alg)
    idx = {b: i for i, b in enumerate(alg.basis)}
    one = [0] * 4
    one[idx["g0(x)g0"]] = 1
    gg = [0] * 4
    gg[idx["g1(x)g1"]] = 1
    assert halo.contains(one)
    assert halo.contains(gg)  # g = g^{-1} in the order-2 group
    assert not halo.contains([0, 0, 0, 0])


def test_zero_algebra_has_empty_halo():
    assert bar_units(one_dim(0, 0)).is_empty


def test_halo_points_are_bar_units():
    alg = fixture("tensor_square")
    halo = bar_units(alg)
    points = [halo.point] + [
        tuple(p + d for p, d in zip(halo.point, direction))
        for direction in halo.directions
    ]
    for e in points:
        for i in range(alg.dim):
            x = alg.unit_vector(i)
            assert alg.mul("left", x, e) == x
            assert alg.mul("right", e, x) == x


# ---------------------------------------------------------------------------
# derived constructions
# ---------------------------------------------------------------------------

def test_associativization_of_equal_products_is_identity_like():
    alg = fixture("monoid_algebra")
    quotient, _ = associativization(alg)
    assert quotient.dim == alg.dim


def test_associativization_of_truncated_free():
    D = fixture("truncated_free_dialgebra", dim_v=1, maxdeg=2)
    quotient, project = associativization(D)
    assert quotient.dim == 2
    # the ideal is weight-homogeneous: one class per word length survives
    lengths = sorted(len(b.split()) for b in quotient.basis)
    assert lengths == [1, 2]
    # the projection kills left-minus-right products
    for i in range(D.dim):
        for j in range(D.dim):
            diff = tuple(
                a - b for a, b in zip(D.mul_basis("left", i, j),
                                      D.mul_basis("right", i, j)))
            assert not any(project(diff))


def test_associativization_kills_everything_when_forced():
    quotient, _ = associativization(one_dim(1, 0))
    assert quotient.dim == 0


def test_associativization_idempotent():
    for name in ("tensor_square", "diff_algebra"):
        q1, _ = associativization(fixture(name))
        q2, _ = associativization(as_dialgebra(q1))
        assert q2.dim == q1.dim


def test_leibnizification():
    for name in ("tensor_square", "diff_algebra", "vector_dialgebra"):
        L = leibnizification(fixture(name))
        assert check_axioms(L) == "pass"
    zero = leibnizification(one_dim(0, 0))
    assert all(
        not any(zero.mul_basis("bracket", i, j))
        for i in range(1) for j in range(1))


def test_commutator_square_for_equal_products():
    # when both products agree, the bracket is the plain commutator
    alg = fixture("monoid_algebra", n=3)
    L = leibnizification(alg)
    for i in range(alg.dim):
        for j in range(alg.dim):
            x, y = alg.unit_vector(i), alg.unit_vector(j)
            comm = tuple(
                a - b for a, b in zip(alg.mul("left", x, y),
                                      alg.mul("left", y, x)))
            assert L.mul_basis("bracket", i, j) == comm


# ---------------------------------------------------------------------------
# wire format
# ---------------------------------------------------------------------------

def test_json_round_trip_bit_exact():
    for name in ("tensor_square", "diff_algebra",
                  "truncated_free_dendriform", "truncated_free_zinbiel"):
        alg = fixture(name)
        again = FiniteAlgebra.from_json(alg.to_json())
        assert again == alg
        assert again.to_json() == alg.to_json()


def test_json_round_trip_with_fractions():
    half = Fraction(1, 2)
    alg = FiniteAlgebra(
        "associative", ["e"], {"mul": [[(half,)]]}, check=False)
    again = FiniteAlgebra.from_json(alg.to_json(), check=False)
    assert again.mul_basis("mul", 0, 0) == (half,)
