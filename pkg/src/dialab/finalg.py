"""Finite-dimensional algebras given by structure constants.

A FiniteAlgebra is a basis plus one table per product of its kind:

    kind         products
    dialgebra    left, right
    dendriform   prec, succ
    leibniz      bracket
    zinbiel      dot
    associative  mul

tables[product][i][j] is the coefficient vector of e_i o e_j in the basis.
Axioms are checked by brute force over all basis triples with exact
arithmetic; construction fails on violation unless checking is deferred.
"""

from __future__ import annotations

import itertools
import json
import os
from fractions import Fraction

from .errors import AxiomFailure, TooLarge, UnknownFixture
from .lincomb import Lin
from .linalg import SubspaceBuilder, solve_affine
from . import freealg
from .trees import LEFT, RIGHT, enumerate_trees

PRODUCTS = {
    "dialgebra": ("left", "right"),
    "dendriform": ("prec", "succ"),
    "leibniz": ("bracket",),
    "zinbiel": ("dot",),
    "associative": ("mul",),
}

DEFAULT_MAX_DIM = 64


def max_dimension():
    return int(os.environ.get("DIALAB_MAX_DIM", DEFAULT_MAX_DIM))


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class FiniteAlgebra:
    """Structure-constant presentation of a finite-dimensional algebra."""

    def __init__(self, kind, basis, tables, check=True, name=""):
        if kind not in PRODUCTS:
            raise AxiomFailure("unknown algebra kind %r" % (kind,))
        self.kind = kind
        self.basis = tuple(str(b) for b in basis)
        self.name = name or kind
        k = len(self.basis)
        if k > max_dimension():
            raise TooLarge(
                "dimension %d exceeds cap %d" % (k, max_dimension()))
        self.tables = {}
        for prod in PRODUCTS[kind]:
            if prod not in tables:
                raise AxiomFailure("missing table %r" % (prod,))
            tab = tables[prod]
            if len(tab) != k or any(
                len(row) != k or any(len(v) != k for v in row) for row in tab
            ):
                raise AxiomFailure("table %r has wrong shape" % (prod,))
            self.tables[prod] = tuple(
                tuple(tuple(_frac(c) for c in vec) for vec in row)
                for row in tab
            )
        if check:
            report = check_axioms(self)
            if report != "pass":
                raise AxiomFailure(
                    "%s is not a %s: %s" % (self.name, kind, report[:3]))

    @property
    def dim(self):
        return len(self.basis)

    def zero(self):
        return tuple(Fraction(0) for _ in self.basis)

    def unit_vector(self, i):
        return tuple(
            Fraction(1) if j == i else Fraction(0) for j in range(self.dim))

    def mul(self, prod, x, y):
        """Bilinear product of two coefficient vectors."""
        tab = self.tables[prod]
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                vec = tab[i][j]
                f = xi * yj
                for t, c in enumerate(vec):
                    if c:
                        out[t] += f * c
        return tuple(out)

    def mul_basis(self, prod, i, j):
        return self.tables[prod][i][j]

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAlgebra)
            and self.kind == other.kind
            and self.basis == other.basis
            and self.tables == other.tables
        )

    def __repr__(self):
        return "FiniteAlgebra(%s, dim=%d, %r)" % (
            self.kind, self.dim, self.name)

    # -- JSON wire format ---------------------------------------------------

    def to_json(self):
        def cell(c):
            return int(c) if c.denominator == 1 else "%d/%d" % (
                c.numerator, c.denominator)

        return json.dumps(
            {
                "kind": self.kind,
                "basis": list(self.basis),
                "tables": {
                    prod: [
                        [[cell(c) for c in vec] for vec in row]
                        for row in tab
                    ]
                    for prod, tab in sorted(self.tables.items())
                },
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text, check=True):
        doc = json.loads(text)
        tables = {
            prod: [[[Fraction(str(c)) for c in vec] for vec in row]
                   for row in tab]
            for prod, tab in doc["tables"].items()
        }
        return cls(doc["kind"], doc["basis"], tables, check=check)


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------

def _axiom_set(kind):
    """Each axiom is (id, lhs, rhs) where the sides are closures of three
    product applications on vectors."""

    def di(alg, p1, p2, assoc_first):
        def ev(x, y, z):
            if assoc_first:
                return alg.mul(p2, alg.mul(p1, x, y), z)
            return alg.mul(p1, x, alg.mul(p2, y, z))
        return ev

    if kind == "dialgebra":
        L, R = "left", "right"
        return [
            ("1", lambda A: di(A, L, L, True), lambda A: di(A, L, R, False)),
            ("2", lambda A: di(A, L, L, True), lambda A: di(A, L, L, False)),
            ("3", lambda A: di(A, R, L, True), lambda A: di(A, R, L, False)),
            ("4", lambda A: di(A, L, R, True), lambda A: di(A, R, R, False)),
            ("5", lambda A: di(A, R, R, True), lambda A: di(A, R, R, False)),
        ]
    if kind == "dendriform":
        P, S = "prec", "succ"

        def star(A):
            def ev(x, y):
                return tuple(
                    a + b for a, b in zip(A.mul(P, x, y), A.mul(S, x, y)))
            return ev

        return [
            ("i",
             lambda A: lambda x, y, z: A.mul(P, A.mul(P, x, y), z),
             lambda A: lambda x, y, z: A.mul(P, x, star(A)(y, z))),
            ("ii",
             lambda A: lambda x, y, z: A.mul(P, A.mul(S, x, y), z),
             lambda A: lambda x, y, z: A.mul(S, x, A.mul(P, y, z))),
            ("iii",
             lambda A: lambda x, y, z: A.mul(S, star(A)(x, y), z),
             lambda A: lambda x, y, z: A.mul(S, x, A.mul(S, y, z))),
        ]
    if kind == "leibniz":
        B = "bracket"
        return [
            ("leibniz",
             lambda A: lambda x, y, z: A.mul(B, x, A.mul(B, y, z)),
             lambda A: lambda x, y, z: tuple(
                 a - b
                 for a, b in zip(
                     A.mul(B, A.mul(B, x, y), z),
                     A.mul(B, A.mul(B, x, z), y))))
        ]
    if kind == "zinbiel":
        D = "dot"
        return [
            ("zinbiel",
             lambda A: lambda x, y, z: A.mul(D, A.mul(D, x, y), z),
             lambda A: lambda x, y, z: tuple(
                 a + b
                 for a, b in zip(
                     A.mul(D, x, A.mul(D, y, z)),
                     A.mul(D, x, A.mul(D, z, y)))))
        ]
    if kind == "associative":
        M = "mul"
        return [
            ("assoc",
             lambda A: lambda x, y, z: A.mul(M, A.mul(M, x, y), z),
             lambda A: lambda x, y, z: A.mul(M, x, A.mul(M, y, z)))
        ]
    raise AxiomFailure("unknown kind %r" % (kind,))


def check_axioms(alg: FiniteAlgebra):
    """Brute-force check over all basis triples.

    Returns "pass" or a sorted list of (axiom id, (i, j, k)) witnesses.
    """
    failures = []
    for axiom_id, lhs, rhs in _axiom_set(alg.kind):
        f, g = lhs(alg), rhs(alg)
        for i, j, k in itertools.product(range(alg.dim), repeat=3):
            x = alg.unit_vector(i)
            y = alg.unit_vector(j)
            z = alg.unit_vector(k)
            if f(x, y, z) != g(x, y, z):
                failures.append((axiom_id, (i, j, k)))
    if not failures:
        return "pass"
    failures.sort()
    return failures


# ---------------------------------------------------------------------------
# halos and derived algebras
# ---------------------------------------------------------------------------

class Halo:
    """The affine set of bar-units of a dialgebra: point + directions."""

    def __init__(self, point, directions):
        self.point = point
        self.directions = tuple(tuple(d) for d in directions)

    @property
    def is_empty(self):
        return self.point is None

    @property
    def affine_dim(self):
        return None if self.is_empty else len(self.directions)

    def contains(self, vec):
        if self.is_empty:
            return False
        delta = [Fraction(a) - b for a, b in zip(vec, self.point)]
        if not self.directions:
            return all(x == 0 for x in delta)
        rows = [list(d) for d in self.directions]
        sol = solve_affine(
            [[rows[r][c] for r in range(len(rows))]
             for c in range(len(delta))],
            delta,
        )
        return sol is not None

    def __repr__(self):
        if self.is_empty:
            return "Halo(empty)"
        return "Halo(point=%s, dim=%d)" % (self.point, len(self.directions))


def bar_units(alg: FiniteAlgebra) -> Halo:
    """Solve x -| e = x = e |- x for all basis x, exactly."""
    assert alg.kind == "dialgebra"
    k = alg.dim
    rows, rhs = [], []
    for i in range(k):
        x = alg.unit_vector(i)
        # sum_j e_j * (x -| b_j) = x   and   sum_j e_j * (b_j |- x) = x
        left_cols = [alg.mul("left", x, alg.unit_vector(j)) for j in range(k)]
        right_cols = [alg.mul("right", alg.unit_vector(j), x) for j in range(k)]
        for t in range(k):
            rows.append([left_cols[j][t] for j in range(k)])
            rhs.append(x[t])
            rows.append([right_cols[j][t] for j in range(k)])
            rhs.append(x[t])
    sol = solve_affine(rows, rhs)
    if sol is None:
        return Halo(None, ())
    return Halo(*sol)


def leibnizification(alg: FiniteAlgebra) -> FiniteAlgebra:
    """Bracket table [x, y] = x -| y - y |- x."""
    assert alg.kind == "dialgebra"
    k = alg.dim
    tab = [
        [
            tuple(
                a - b
                for a, b in zip(
                    alg.mul_basis("left", i, j), alg.mul_basis("right", j, i))
            )
            for j in range(k)
        ]
        for i in range(k)
    ]
    return FiniteAlgebra(
        "leibniz", alg.basis, {"bracket": tab}, name=alg.name + "_leib")


def opposite(alg: FiniteAlgebra) -> FiniteAlgebra:
    """x -|' y = y |- x,  x |-' y = y -| x."""
    assert alg.kind == "dialgebra"
    k = alg.dim
    return FiniteAlgebra(
        "dialgebra",
        alg.basis,
        {
            "left": [[alg.mul_basis("right", j, i) for j in range(k)]
                     for i in range(k)],
            "right": [[alg.mul_basis("left", j, i) for j in range(k)]
                      for i in range(k)],
        },
        name=alg.name + "_op",
    )


def associativization(alg: FiniteAlgebra):
    """Quotient by the ideal generated by all x -| y - x |- y.

    Returns (quotient FiniteAlgebra, projection) where projection maps a
    vector of the source onto quotient coordinates.  The ideal is saturated
    by alternating left/right multiplications until the rank stabilizes.
    """
    assert alg.kind == "dialgebra"
    k = alg.dim
    ideal = SubspaceBuilder(k)
    seeds = []
    for i in range(k):
        for j in range(k):
            vec = tuple(
                a - b
                for a, b in zip(
                    alg.mul_basis("left", i, j), alg.mul_basis("right", i, j))
            )
            if ideal.add(vec):
                seeds.append(vec)
    frontier = list(seeds)
    while frontier:
        new_frontier = []
        for v in frontier:
            for j in range(k):
                e = alg.unit_vector(j)
                for prod in ("left", "right"):
                    for cand in (alg.mul(prod, v, e), alg.mul(prod, e, v)):
                        if any(cand) and ideal.add(cand):
                            new_frontier.append(cand)
        frontier = new_frontier

    pivots = set(ideal.pivots)
    keep = [i for i in range(k) if i not in pivots]

    def project(vec):
        v = [Fraction(x) for x in vec]
        for row, p in zip(ideal.rows, ideal.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v[i] for i in keep)

    basis = [alg.basis[i] for i in keep]
    tab = [
        [
            project(alg.mul_basis("left", keep[i], keep[j]))
            for j in range(len(keep))
        ]
        for i in range(len(keep))
    ]
    quotient = FiniteAlgebra(
        "associative", basis, {"mul": tab}, name=alg.name + "_as")
    return quotient, project


def as_dialgebra(alg: FiniteAlgebra, name="") -> FiniteAlgebra:
    """View an associative algebra as a dialgebra with equal products."""
    assert alg.kind == "associative"
    k = alg.dim
    tab = [[alg.mul_basis("mul", i, j) for j in range(k)] for i in range(k)]
    return FiniteAlgebra(
        "dialgebra", alg.basis, {"left": tab, "right": tab},
        name=name or alg.name + "_dias")


# ---------------------------------------------------------------------------
# fixture catalog
# ---------------------------------------------------------------------------

def _monoid_algebra_tables(elements, op):
    idx = {e: i for i, e in enumerate(elements)}
    k = len(elements)
    tab = [[None] * k for _ in range(k)]
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            vec = [Fraction(0)] * k
            vec[idx[op(a, b)]] = Fraction(1)
            tab[i][j] = tuple(vec)
    return tab


def cyclic_group(n):
    """Elements 0..n-1 under addition mod n."""
    return list(range(n)), lambda a, b: (a + b) % n


def _field_algebra() -> FiniteAlgebra:
    one = ((Fraction(1),),)
    return FiniteAlgebra(
        "dialgebra", ["1"], {"left": [[one[0]]], "right": [[one[0]]]},
        name="ground_field")


def group_algebra(n) -> FiniteAlgebra:
    els, op = cyclic_group(n)
    tab = _monoid_algebra_tables(els, op)
    return FiniteAlgebra(
        "associative", ["g%d" % e for e in els], {"mul": tab},
        name="K[C_%d]" % n)


def monoid_double(n) -> FiniteAlgebra:
    """Dimonoid M x M with (m,a)(m',a') = (m, a m' a') / (m a m', a')."""
    els, op = cyclic_group(n)
    pairs = list(itertools.product(els, els))

    def left(x, y):
        return (x[0], op(op(x[1], y[0]), y[1]))

    def right(x, y):
        return (op(op(x[0], x[1]), y[0]), y[1])

    return FiniteAlgebra(
        "dialgebra",
        ["(%d,%d)" % p for p in pairs],
        {
            "left": _monoid_algebra_tables(pairs, left),
            "right": _monoid_algebra_tables(pairs, right),
        },
        name="double_C_%d" % n,
    )


def action_dimonoid(n) -> FiniteAlgebra:
    """Dimonoid X x G for G = C_n acting on itself by translation."""
    els, op = cyclic_group(n)
    pairs = list(itertools.product(els, els))

    def left(x, y):
        return (x[0], op(x[1], y[1]))

    def right(x, y):
        return (op(x[1], y[0]), op(x[1], y[1]))

    return FiniteAlgebra(
        "dialgebra",
        ["(%d;%d)" % p for p in pairs],
        {
            "left": _monoid_algebra_tables(pairs, left),
            "right": _monoid_algebra_tables(pairs, right),
        },
        name="action_C_%d" % n,
    )


def tensor_square(A: FiniteAlgebra) -> FiniteAlgebra:
    """A (x) A with a(x)b -| a'(x)b' = a (x) b a' b' and the mirror rule."""
    assert A.kind == "associative"
    k = A.dim
    pairs = list(itertools.product(range(k), range(k)))
    index = {p: t for t, p in enumerate(pairs)}
    dim = len(pairs)

    def table(side):
        tab = [[None] * dim for _ in range(dim)]
        for s, (a, b) in enumerate(pairs):
            for t, (a2, b2) in enumerate(pairs):
                vec = [Fraction(0)] * dim
                if side == "left":
                    prod = A.mul(
                        "mul", A.mul("mul", A.unit_vector(b),
                                     A.unit_vector(a2)),
                        A.unit_vector(b2))
                    for c, coeff in enumerate(prod):
                        if coeff:
                            vec[index[(a, c)]] += coeff
                else:
                    prod = A.mul(
                        "mul", A.mul("mul", A.unit_vector(a),
                                     A.unit_vector(b)),
                        A.unit_vector(a2))
                    for c, coeff in enumerate(prod):
                        if coeff:
                            vec[index[(c, b2)]] += coeff
                tab[s][t] = tuple(vec)
        return tab

    return FiniteAlgebra(
        "dialgebra",
        ["%s(x)%s" % (A.basis[a], A.basis[b]) for a, b in pairs],
        {"left": table("left"), "right": table("right")},
        name="tensor_square view of " + A.name,
    )


def differential_dialgebra(A: FiniteAlgebra, d_matrix) -> FiniteAlgebra:
    """x -| y = x dy, x |- y = dx y for a differential (d^2=0, Leibniz) on A."""
    assert A.kind == "associative"
    k = A.dim
    d = [tuple(_frac(c) for c in row) for row in d_matrix]

    def apply_d(vec):
        out = [Fraction(0)] * k
        for i, c in enumerate(vec):
            if c:
                for t, w in enumerate(d[i]):
                    out[t] += c * w
        return tuple(out)

    for i in range(k):
        if any(apply_d(apply_d(A.unit_vector(i)))):
            raise AxiomFailure("d^2 != 0 on basis element %d" % i)
    for i in range(k):
        for j in range(k):
            x, y = A.unit_vector(i), A.unit_vector(j)
            lhs = apply_d(A.mul("mul", x, y))
            rhs = tuple(
                a + b
                for a, b in zip(
                    A.mul("mul", apply_d(x), y), A.mul("mul", x, apply_d(y))))
            if lhs != rhs:
                raise AxiomFailure("d is not a derivation at (%d,%d)" % (i, j))

    left = [[A.mul("mul", A.unit_vector(i), apply_d(A.unit_vector(j)))
             for j in range(k)] for i in range(k)]
    right = [[A.mul("mul", apply_d(A.unit_vector(i)), A.unit_vector(j))
              for j in range(k)] for i in range(k)]
    return FiniteAlgebra(
        "dialgebra", A.basis, {"left": left, "right": right},
        name="differential " + A.name)


def upper_triangular_2() -> FiniteAlgebra:
    """The 3-dimensional algebra of upper-triangular 2x2 matrices."""
    basis = ["e11", "e12", "e22"]
    units = {"e11": (0, 0), "e12": (0, 1), "e22": (1, 1)}

    def mul(a, b):
        (i, j), (p, q) = units[a], units[b]
        return basis[["e11", "e12", "e22"].index("e%d%d" % (i + 1, q + 1))] \
            if j == p else None

    k = 3
    tab = [[None] * k for _ in range(k)]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            vec = [Fraction(0)] * k
            prod = mul(a, b)
            if prod is not None:
                vec[basis.index(prod)] = Fraction(1)
            tab[i][j] = tuple(vec)
    return FiniteAlgebra(
        "associative", basis, {"mul": tab}, name="upper_triangular_2")


def matrix_dialgebra(n, D: FiniteAlgebra) -> FiniteAlgebra:
    """n x n matrices over a dialgebra, entrywise basis (i, j, d)."""
    assert D.kind == "dialgebra"
    cells = list(itertools.product(range(n), range(n), range(D.dim)))
    index = {c: t for t, c in enumerate(cells)}
    dim = len(cells)
    if dim > max_dimension():
        raise TooLarge("matrix dialgebra dimension %d over cap" % dim)

    def table(prod):
        tab = [[None] * dim for _ in range(dim)]
        for s, (i, kk, a) in enumerate(cells):
            for t, (k2, j, b) in enumerate(cells):
                vec = [Fraction(0)] * dim
                if kk == k2:
                    entry = D.mul_basis(prod, a, b)
                    for c, coeff in enumerate(entry):
                        if coeff:
                            vec[index[(i, j, c)]] += coeff
                tab[s][t] = tuple(vec)
        return tab

    return FiniteAlgebra(
        "dialgebra",
        ["E%d%d.%s" % (i + 1, j + 1, D.basis[a]) for i, j, a in cells],
        {"left": table("left"), "right": table("right")},
        name="M_%d(%s)" % (n, D.name),
    )


def vector_dialgebra(A: FiniteAlgebra, n) -> FiniteAlgebra:
    """A^n with (x -| y)_i = x_i (sum_j y_j), (x |- y)_i = (sum_j x_j) y_i."""
    assert A.kind == "associative"
    cells = list(itertools.product(range(n), range(A.dim)))
    index = {c: t for t, c in enumerate(cells)}
    dim = len(cells)

    def table(side):
        tab = [[None] * dim for _ in range(dim)]
        for s, (i, a) in enumerate(cells):
            for t, (j, b) in enumerate(cells):
                vec = [Fraction(0)] * dim
                prod = A.mul("mul", A.unit_vector(a), A.unit_vector(b))
                slot = i if side == "left" else j
                for c, coeff in enumerate(prod):
                    if coeff:
                        vec[index[(slot, c)]] += coeff
                tab[s][t] = tuple(vec)
        return tab

    return FiniteAlgebra(
        "dialgebra",
        ["%s@%d" % (A.basis[a], i) for i, a in cells],
        {"left": table("left"), "right": table("right")},
        name="%s^%d" % (A.name, n),
    )


# -- truncated free algebras ------------------------------------------------

def _letters(dim_v):
    return ["x%d" % (i + 1) for i in range(dim_v)]


def _truncate_table(basis, index, product, maxdeg, degree):
    k = len(basis)
    tab = [[None] * k for _ in range(k)]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            vec = [Fraction(0)] * k
            if degree(a) + degree(b) <= maxdeg:
                for term, c in product(a, b).data.items():
                    vec[index[term]] += c
            tab[i][j] = tuple(vec)
    return tab


def truncated_free_dialgebra(dim_v, maxdeg) -> FiniteAlgebra:
    letters = _letters(dim_v)
    basis = []
    for n in range(1, maxdeg + 1):
        for ltrs in itertools.product(letters, repeat=n):
            for p in range(n):
                basis.append(freealg.PointedWord(ltrs, p))
    basis.sort(key=lambda w: w.sort_key())
    index = {b: i for i, b in enumerate(basis)}
    deg = lambda w: len(w)
    tables = {
        side: _truncate_table(
            basis, index,
            lambda a, b, s=side: freealg.dias_mul(
                Lin.term(a), Lin.term(b), LEFT if s == "left" else RIGHT),
            maxdeg, deg)
        for side in ("left", "right")
    }
    return FiniteAlgebra(
        "dialgebra", [str(b) for b in basis], tables,
        name="free_dialgebra(%d)<=%d" % (dim_v, maxdeg))


def truncated_free_dendriform(dim_v, maxdeg) -> FiniteAlgebra:
    letters = _letters(dim_v)
    basis = []
    for n in range(1, maxdeg + 1):
        for t in enumerate_trees(n):
            for ltrs in itertools.product(letters, repeat=n):
                basis.append(freealg.DendTerm(t, ltrs))
    basis.sort(key=lambda w: w.sort_key())
    index = {b: i for i, b in enumerate(basis)}
    deg = lambda w: w.tree.degree
    tables = {
        op: _truncate_table(
            basis, index,
            lambda a, b, o=op: freealg.dend_mul(
                Lin.term(a), Lin.term(b), o),
            maxdeg, deg)
        for op in ("prec", "succ")
    }
    return FiniteAlgebra(
        "dendriform", [str(b) for b in basis], tables,
        name="free_dendriform(%d)<=%d" % (dim_v, maxdeg))


def _word_basis(dim_v, maxdeg):
    letters = _letters(dim_v)
    basis = []
    for n in range(1, maxdeg + 1):
        for ltrs in itertools.product(letters, repeat=n):
            basis.append(freealg.Word(ltrs))
    basis.sort(key=lambda w: w.sort_key())
    return basis


def truncated_free_zinbiel(dim_v, maxdeg) -> FiniteAlgebra:
    basis = _word_basis(dim_v, maxdeg)
    index = {b: i for i, b in enumerate(basis)}
    tables = {
        "dot": _truncate_table(
            basis, index,
            lambda a, b: freealg.zinb_mul(Lin.term(a), Lin.term(b), "dot"),
            maxdeg, len)
    }
    return FiniteAlgebra(
        "zinbiel", [str(b) for b in basis], tables,
        name="free_zinbiel(%d)<=%d" % (dim_v, maxdeg))


def truncated_free_leibniz(dim_v, maxdeg) -> FiniteAlgebra:
    basis = _word_basis(dim_v, maxdeg)
    index = {b: i for i, b in enumerate(basis)}
    tables = {
        "bracket": _truncate_table(
            basis, index,
            lambda a, b: freealg.leib_bracket_free(Lin.term(a), Lin.term(b)),
            maxdeg, len)
    }
    return FiniteAlgebra(
        "leibniz", [str(b) for b in basis], tables,
        name="free_leibniz(%d)<=%d" % (dim_v, maxdeg))


FIXTURES = {
    "field": lambda: _field_algebra(),
    "monoid_algebra": lambda n=2: as_dialgebra(group_algebra(n)),
    "monoid_double": lambda n=2: monoid_double(n),
    "action_dimonoid": lambda n=2: action_dimonoid(n),
    "tensor_square": lambda n=2: tensor_square(group_algebra(n)),
    "diff_algebra": lambda: differential_dialgebra(
        upper_triangular_2(),
        # d = ad(e12): e11 -> -e12, e12 -> 0, e22 -> e12
        [[0, -1, 0], [0, 0, 0], [0, 1, 0]]),
    "matrix_dialgebra": lambda n=2, base="field": matrix_dialgebra(
        n, fixture(base)),
    "vector_dialgebra": lambda n=2, base=2: vector_dialgebra(
        group_algebra(base), n),
    "truncated_free_dialgebra": lambda dim_v=1, maxdeg=3:
        truncated_free_dialgebra(dim_v, maxdeg),
    "truncated_free_dendriform": lambda dim_v=1, maxdeg=2:
        truncated_free_dendriform(dim_v, maxdeg),
    "truncated_free_zinbiel": lambda dim_v=1, maxdeg=3:
        truncated_free_zinbiel(dim_v, maxdeg),
    "truncated_free_leibniz": lambda dim_v=1, maxdeg=3:
        truncated_free_leibniz(dim_v, maxdeg),
}


def fixture(name, **params) -> FiniteAlgebra:
    try:
        builder = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(
            "unknown fixture %r (have: %s)" % (name, sorted(FIXTURES)))
    return builder(**params)
