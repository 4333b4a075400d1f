"""Formal linear combinations with exact rational coefficients.

A Lin is a finite map {basis term -> nonzero Fraction}.  Basis terms only
need to be hashable and mutually orderable through their `sort_key`; every
algebra in the library (pointed words, tree terms, plain words, chains)
stores its elements this way, so addition, scaling and linear extension of
basis-level maps are written once here.
"""

from __future__ import annotations

from fractions import Fraction


def _coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError("coefficient must be int, str or Fraction, got %r" % (c,))


def _key(term):
    k = getattr(term, "sort_key", None)
    if k is not None:
        return k() if callable(k) else k
    return term


class Lin:
    """Finite formal sum of basis terms over the rationals.

    Zero coefficients are never stored, so equality of Lin objects is
    equality of the represented vectors.
    """

    __slots__ = ("data",)

    def __init__(self, data=None):
        d = {}
        if data:
            for term, c in (data.items() if isinstance(data, dict) else data):
                c = _coeff(c)
                if c:
                    c0 = d.get(term)
                    c = c if c0 is None else c0 + c
                    if c:
                        d[term] = c
                    elif term in d:
                        del d[term]
        self.data = d

    @classmethod
    def term(cls, term, coeff=1):
        return cls({term: coeff})

    @classmethod
    def zero(cls):
        return cls()

    def __bool__(self):
        return bool(self.data)

    def __eq__(self, other):
        if not isinstance(other, Lin):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(frozenset(self.data.items()))

    def __add__(self, other):
        out = dict(self.data)
        for t, c in other.data.items():
            s = out.get(t, 0) + c
            if s:
                out[t] = s
            elif t in out:
                del out[t]
        res = Lin.__new__(Lin)
        res.data = out
        return res

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = _coeff(scalar)
        res = Lin.__new__(Lin)
        if not scalar:
            res.data = {}
        else:
            res.data = {t: scalar * c for t, c in self.data.items()}
        return res

    def __mul__(self, scalar):
        return self.__rmul__(scalar)

    def __iter__(self):
        return iter(self.items())

    def items(self):
        """Terms in the canonical (sort_key) order."""
        return sorted(self.data.items(), key=lambda tc: _key(tc[0]))

    def coeff(self, term):
        return self.data.get(term, Fraction(0))

    def map_terms(self, fn):
        """Linear extension of a basis-level map `term -> Lin | term | None`."""
        out = Lin()
        for t, c in self.data.items():
            img = fn(t)
            if img is None:
                continue
            if not isinstance(img, Lin):
                img = Lin.term(img)
            out = out + c * img
        return out

    def support(self):
        return set(self.data)

    def __repr__(self):
        return "Lin(%s)" % (self.format(),)

    def format(self, render=str):
        """Human form: `2*a + 1/3*b - c` with terms in canonical order."""
        if not self.data:
            return "0"
        parts = []
        for t, c in self.items():
            mag = abs(c)
            body = render(t) if mag == 1 else "%s*%s" % (mag, render(t))
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def bilinear(fn):
    """Lift a basis-level product `(s, t) -> Lin | term | None` to Lin x Lin."""

    def lifted(a, b, *args, **kwargs):
        out = Lin()
        for s, cs in a.data.items():
            for t, ct in b.data.items():
                img = fn(s, t, *args, **kwargs)
                if img is None:
                    continue
                if not isinstance(img, Lin):
                    img = Lin.term(img)
                out = out + (cs * ct) * img
        return out

    return lifted
