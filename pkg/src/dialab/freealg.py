"""Arithmetic in the free two-product algebras over exact rationals.

Carriers and their bases:

* free dialgebra   -- pointed words  x1 x2^ x3  (one marked middle letter);
  the left product keeps the left factor's pointer, the right product the
  right factor's, letters concatenate.
* free dendriform  -- pairs (tree; word) with |word| = degree(tree); the
  half-products are driven by the recursive tree products below.
* free Zinbiel     -- plain words with the half-shuffle product.
* free Leibniz     -- plain words with the left-iterated bracket.

All products are bilinear over Lin combinations with Fraction coefficients.
"""

from __future__ import annotations

import itertools

from .errors import IndexOutOfRange, UndefinedOnUnit
from .lincomb import Lin, bilinear
from .trees import (
    LEAF,
    LEFT,
    RIGHT,
    CHERRY,
    Permutation,
    Tree,
    format_name,
    graft,
    parse_name,
    perm_to_tree,
    tree_fiber,
)


# ---------------------------------------------------------------------------
# basis terms
# ---------------------------------------------------------------------------

class PointedWord:
    """A word of generators with one marked (middle) letter."""

    __slots__ = ("letters", "pointer", "_hash")

    def __init__(self, letters, pointer):
        letters = tuple(letters)
        if not letters:
            raise IndexOutOfRange("pointed words are nonempty")
        if not 0 <= pointer < len(letters):
            raise IndexOutOfRange(
                "pointer %d not in 0..%d" % (pointer, len(letters) - 1))
        self.letters = letters
        self.pointer = pointer
        self._hash = hash(("PW", letters, pointer))

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return (
            isinstance(other, PointedWord)
            and self.letters == other.letters
            and self.pointer == other.pointer
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self.letters), self.letters, self.pointer)

    def __str__(self):
        return " ".join(
            l + "^" if i == self.pointer else l
            for i, l in enumerate(self.letters)
        )

    __repr__ = __str__


class Word:
    """A nonempty word of generators (free Zinbiel / Leibniz basis)."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters):
        letters = tuple(letters)
        if not letters:
            raise IndexOutOfRange("words are nonempty")
        self.letters = letters
        self._hash = hash(("W", letters))

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __str__(self):
        return " ".join(self.letters)

    __repr__ = __str__


class DendTerm:
    """A basis term (tree; word) of the free dendriform algebra."""

    __slots__ = ("tree", "word", "_hash")

    def __init__(self, tree, word=()):
        word = tuple(word)
        if len(word) != tree.degree:
            raise IndexOutOfRange(
                "word length %d != tree degree %d" % (len(word), tree.degree))
        self.tree = tree
        self.word = word
        self._hash = hash(("DT", tree.name, word))

    def __eq__(self, other):
        return (
            isinstance(other, DendTerm)
            and self.tree == other.tree
            and self.word == other.word
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.tree.degree, self.tree.name, self.word)

    def __str__(self):
        if self.tree.is_leaf:
            return "([0];)"
        return "(%s; %s)" % (format_name(self.tree), " ".join(self.word))

    __repr__ = __str__


DEND_UNIT = DendTerm(LEAF, ())


# ---------------------------------------------------------------------------
# dimonoid monomials and their middles
# ---------------------------------------------------------------------------

class MonomialLeaf:
    __slots__ = ("generator",)

    def __init__(self, generator):
        self.generator = generator

    def leaves(self):
        return (self.generator,)


class MonomialNode:
    """An internal vertex labelled by the left or right product symbol."""

    __slots__ = ("symbol", "left", "right")

    def __init__(self, symbol, left, right):
        assert symbol in (LEFT, RIGHT)
        self.symbol = symbol
        self.left = left
        self.right = right

    def leaves(self):
        return self.left.leaves() + self.right.leaves()


def normalize_monomial(m) -> PointedWord:
    """Middle of a fully parenthesized two-product monomial.

    Starting at the root, follow the pointer side of every product symbol
    (left for the left product, right for the right one); the letter reached
    is the middle, and the monomial equals the pointed word of its leaves.
    """
    letters = m.leaves()
    idx = 0
    node = m
    while isinstance(node, MonomialNode):
        if node.symbol == LEFT:
            node = node.left
        else:
            idx += len(node.left.leaves())
            node = node.right
    return PointedWord(letters, idx)


def eval_monomial(m) -> Lin:
    """Evaluate a monomial by plain product recursion; an independent check
    of the pointer-chasing normal form."""
    if isinstance(m, MonomialLeaf):
        return Lin.term(PointedWord((m.generator,), 0))
    side = m.symbol
    return dias_mul(eval_monomial(m.left), eval_monomial(m.right), side)


# ---------------------------------------------------------------------------
# free dialgebra products
# ---------------------------------------------------------------------------

def _dias_term(a: PointedWord, b: PointedWord, side):
    letters = a.letters + b.letters
    if side == LEFT:
        return PointedWord(letters, a.pointer)
    if side == RIGHT:
        return PointedWord(letters, len(a.letters) + b.pointer)
    raise IndexOutOfRange("side must be %r or %r" % (LEFT, RIGHT))


dias_mul = bilinear(_dias_term)


def forget_pointer(pw: PointedWord) -> Word:
    """The fusion map onto the tensor algebra: drop the mark."""
    return Word(pw.letters)


def fusion(x: Lin) -> Lin:
    return x.map_terms(lambda pw: Word(pw.letters))


def leibniz_to_dialgebra(word: Word) -> Lin:
    """Image of a free-Leibniz word under the unique bracket-preserving map
    into the free dialgebra extending the identity on generators.

    The word v1...vn stands for the left-iterated bracket
    [[..[v1,v2],..],vn]; its image is the alternating sum whose monomials
    carry the mark on the letter coming from v1.
    """
    letters = word.letters
    n = len(letters)
    # track positions: start with (0,), sign +; each step appends k or
    # prepends k with a sign flip.
    acc = {(0,): 1}
    for k in range(1, n):
        nxt = {}
        for positions, sign in acc.items():
            nxt[positions + (k,)] = nxt.get(positions + (k,), 0) + sign
            nxt[(k,) + positions] = nxt.get((k,) + positions, 0) - sign
        acc = nxt
    out = Lin()
    for positions, sign in acc.items():
        ltrs = tuple(letters[p] for p in positions)
        out = out + sign * Lin.term(PointedWord(ltrs, positions.index(0)))
    return out


def gamma_tensor(word: Word) -> Lin:
    """Same alternating sum inside the tensor algebra (no mark)."""
    return leibniz_to_dialgebra(word).map_terms(lambda pw: Word(pw.letters))


# ---------------------------------------------------------------------------
# free dendriform: recursive tree products
# ---------------------------------------------------------------------------

def _tree_prec(y: Tree, z: Tree) -> Lin:
    if y.is_leaf and z.is_leaf:
        raise UndefinedOnUnit("[0] < [0] is not defined")
    if z.is_leaf:
        return Lin.term(y)
    if y.is_leaf:
        return Lin.zero()
    return tree_star(Lin.term(y.right), Lin.term(z)).map_terms(
        lambda t: graft(y.left, t))


def _tree_succ(y: Tree, z: Tree) -> Lin:
    if y.is_leaf and z.is_leaf:
        raise UndefinedOnUnit("[0] > [0] is not defined")
    if y.is_leaf:
        return Lin.term(z)
    if z.is_leaf:
        return Lin.zero()
    return tree_star(Lin.term(y), Lin.term(z.left)).map_terms(
        lambda t: graft(t, z.right))


def _tree_star(y: Tree, z: Tree) -> Lin:
    if y.is_leaf:
        return Lin.term(z)
    if z.is_leaf:
        return Lin.term(y)
    return _tree_prec(y, z) + _tree_succ(y, z)


tree_prec = bilinear(_tree_prec)
tree_succ = bilinear(_tree_succ)
tree_star = bilinear(_tree_star)


def tree_involution(y: Tree) -> Tree:
    """Name reversal [i1..in] -> [in..i1]; an algebra involution for star."""
    if y.is_leaf:
        return y
    return Tree(tree_involution(y.right), tree_involution(y.left))


def _dend_term_mul(a: DendTerm, b: DendTerm, op) -> Lin:
    if op == "prec":
        trees = _tree_prec(a.tree, b.tree)
    elif op == "succ":
        trees = _tree_succ(a.tree, b.tree)
    elif op == "star":
        trees = _tree_star(a.tree, b.tree)
    else:
        raise IndexOutOfRange("op must be prec, succ or star")
    word = a.word + b.word
    return trees.map_terms(lambda t: DendTerm(t, word))


dend_mul = bilinear(_dend_term_mul)


def eval_tree_monomial(y: Tree, args) -> Lin:
    """Value of the two-product monomial encoded by y on the given arguments.

    The i-th argument sits between leaves i-1 and i.  Writing y = y1 v y2,
    the monomial is (m(y1) > x) < m(y2) with the evident one-sided cases, x
    being the argument at the root.  `args` entries may be generator names
    or Lin combinations of DendTerms.
    """
    args = list(args)
    if len(args) != y.degree or y.is_leaf:
        raise IndexOutOfRange("need exactly degree(y) >= 1 arguments")

    def as_lin(a):
        if isinstance(a, Lin):
            return a
        return Lin.term(DendTerm(CHERRY, (a,)))

    def rec(t, vals):
        p = t.left.degree
        mid = as_lin(vals[p])
        acc = mid
        if p:
            acc = dend_mul(rec(t.left, vals[:p]), acc, "succ")
        if t.right.degree:
            acc = dend_mul(acc, rec(t.right, vals[p + 1:]), "prec")
        return acc

    return rec(y, args)


# ---------------------------------------------------------------------------
# graded algebra on permutations: shuffles
# ---------------------------------------------------------------------------

def shuffles(p, q):
    """All (p,q)-shuffles of {1..p+q} as Permutations."""
    out = []
    for spots in itertools.combinations(range(p + q), p):
        vals = [0] * (p + q)
        rest = [i for i in range(p + q) if i not in spots]
        for v, pos in enumerate(spots, start=1):
            vals[pos] = v
        for v, pos in enumerate(rest, start=p + 1):
            vals[pos] = v
        out.append(Permutation(vals))
    return out


def _perm_shuffle_star(s: Permutation, t: Permutation) -> Lin:
    """sum over (n,m)-shuffles applied to the juxtaposition s x t."""
    n, m = s.n, t.n
    juxt = Permutation(list(s.values) + [n + v for v in t.values])
    out = Lin()
    for sh in shuffles(n, m):
        out = out + Lin.term(sh.compose(juxt))
    return out


perm_shuffle_star = bilinear(_perm_shuffle_star)


def perms_to_trees(x: Lin, coding: str = "depth") -> Lin:
    """Linear extension of the depth coding to combinations of permutations."""
    return x.map_terms(lambda s: perm_to_tree(s, coding))


# ---------------------------------------------------------------------------
# free Zinbiel and free Leibniz
# ---------------------------------------------------------------------------

def _word_shuffle(u, v):
    """All shuffles of two letter tuples, as a Lin of Words (multiplicities
    add when letters repeat)."""
    out = Lin()
    p, q = len(u), len(v)
    for spots in itertools.combinations(range(p + q), p):
        merged = [None] * (p + q)
        ui = iter(u)
        vi = iter(v)
        spotset = set(spots)
        for i in range(p + q):
            merged[i] = next(ui) if i in spotset else next(vi)
        out = out + Lin.term(Word(merged))
    return out


def _zinb_dot(a: Word, b: Word) -> Lin:
    """Half-shuffle: first letter of a stays first, the rest shuffles with b."""
    head = a.letters[0]
    tail = a.letters[1:]
    return _word_shuffle(tail, b.letters).map_terms(
        lambda w: Word((head,) + w.letters))


def _zinb_sym(a: Word, b: Word) -> Lin:
    return _zinb_dot(a, b) + _zinb_dot(b, a)


def zinb_mul(a: Lin, b: Lin, mode: str = "dot") -> Lin:
    if mode == "dot":
        return bilinear(_zinb_dot)(a, b)
    if mode == "symmetrized":
        return bilinear(_zinb_sym)(a, b)
    raise IndexOutOfRange("mode must be dot or symmetrized")


def _leib_term(a: Word, b: Word) -> Lin:
    if len(b) == 1:
        return Lin.term(Word(a.letters + b.letters))
    head = Word(b.letters[:-1])
    last = Word(b.letters[-1:])
    inner = _leib_term(a, head)           # [a, b']
    first = bilinear(_leib_term)(inner, Lin.term(last))
    outer = bilinear(_leib_term)(
        bilinear(_leib_term)(Lin.term(a), Lin.term(last)), Lin.term(head))
    return first - outer


leib_bracket_free = bilinear(_leib_term)


# ---------------------------------------------------------------------------
# generic bracket over any carrier with left/right products
# ---------------------------------------------------------------------------

def bracket(a, b, left_mul, right_mul):
    """[a, b] = a -| b  -  b |- a  for any pair of bilinear products."""
    return left_mul(a, b) - right_mul(b, a)


def dias_bracket(a: Lin, b: Lin) -> Lin:
    return bracket(
        a, b,
        lambda x, y: dias_mul(x, y, LEFT),
        lambda x, y: dias_mul(x, y, RIGHT),
    )


# ---------------------------------------------------------------------------
# dendriform -> Zinbiel comparison
# ---------------------------------------------------------------------------

def apply_perm_to_tuple(sigma: Permutation, items):
    """Place item i in position sigma(i)."""
    items = tuple(items)
    out = [None] * len(items)
    for i, x in enumerate(items, start=1):
        out[sigma(i) - 1] = x
    return tuple(out)


def dendriform_to_zinbiel(x: Lin) -> Lin:
    """(y; x1..xn) -> sum of sigma-permuted words over the height-coding
    fiber of y; a homomorphism onto the free Zinbiel algebra viewed as a
    dendriform algebra."""

    def on_term(t: DendTerm):
        out = Lin()
        for s in tree_fiber(t.tree, "height"):
            out = out + Lin.term(Word(apply_perm_to_tuple(s, t.word)))
        return out

    return x.map_terms(on_term)


def zinbiel_as_dendriform(a: Lin, b: Lin, op: str) -> Lin:
    """The dendriform structure of a Zinbiel product: x < y = x.y, x > y = y.x."""
    if op == "prec":
        return zinb_mul(a, b, "dot")
    if op == "succ":
        return zinb_mul(b, a, "dot")
    if op == "star":
        return zinb_mul(a, b, "symmetrized")
    raise IndexOutOfRange("op must be prec, succ or star")


# ---------------------------------------------------------------------------
# element grammar (CLI wire format)
# ---------------------------------------------------------------------------

def _split_terms(text):
    """Split a linear combination on top-level +/-, keeping signs."""
    s = text.strip()
    if not s:
        raise IndexOutOfRange("empty element")
    chunks = []
    sign = 1
    depth = 0
    cur = ""
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip():
            chunks.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif depth == 0 and ch in "+-" and not cur.strip():
            sign = sign * (1 if ch == "+" else -1)
        else:
            cur += ch
    if cur.strip():
        chunks.append((sign, cur.strip()))
    return chunks


def _coeff_and_body(chunk):
    if "*" in chunk:
        head, body = chunk.split("*", 1)
        return head.strip(), body.strip()
    return None, chunk


def parse_pointed_word(text) -> PointedWord:
    letters = []
    pointer = None
    for tok in text.split():
        if tok.endswith("^"):
            if pointer is not None:
                raise IndexOutOfRange("two pointers in %r" % (text,))
            pointer = len(letters)
            tok = tok[:-1]
        letters.append(tok)
    if pointer is None:
        raise IndexOutOfRange("no pointer in %r" % (text,))
    return PointedWord(letters, pointer)


def parse_word(text) -> Word:
    return Word(text.split())


def parse_dend_term(text) -> DendTerm:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")) or ";" not in s:
        raise IndexOutOfRange("dendriform terms look like ([..]; x y): %r"
                              % (text,))
    name, word = s[1:-1].split(";", 1)
    return DendTerm(parse_name(name.strip()), tuple(word.split()))


def parse_lincomb(text, parse_term) -> Lin:
    from fractions import Fraction

    out = Lin()
    for sign, chunk in _split_terms(text):
        coeff, body = _coeff_and_body(chunk)
        c = Fraction(sign) if coeff is None else sign * Fraction(coeff)
        out = out + c * Lin.term(parse_term(body))
    return out
