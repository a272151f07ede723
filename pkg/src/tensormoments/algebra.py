"""Exact combinatorial and symbolic arithmetic shared by every other module.

Permutations and partitions of the symmetric group, Catalan numbers, and
Laurent polynomials / rational functions in the single symbol N with
arbitrary-precision rational coefficients.  No floating point anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _sym_group
from typing import Iterator, Mapping, Sequence, Union

Rational = Union[int, Fraction]


class Permutation:
    """A permutation of {1..n}, stored as its image sequence.

    ``images[i-1]`` is the image of ``i``.  Composition convention is fixed
    project-wide: ``compose(p, q)`` applies ``q`` first, then ``p``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        tup = tuple(int(x) for x in images)
        if sorted(tup) != list(range(1, len(tup) + 1)):
            raise ValueError(f"not a bijection of 1..{len(tup)}: {tup}")
        self.images = tup

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)([cyc[0]])):
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition; each cycle starts at its smallest element."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = []
            i = start
            while not seen[i - 1]:
                seen[i - 1] = True
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        seen = [False] * self.n
        count = 0
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            count += 1
            i = start
            while not seen[i - 1]:
                seen[i - 1] = True
                i = self(i)
        return count

    def cycle_type(self) -> "Partition":
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``q`` first, then ``p``."""
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(p.images[qi - 1] for qi in q.images))


def cycle_type(p: Permutation) -> "Partition":
    return p.cycle_type()


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic image order."""
    for images in _sym_group(range(1, n + 1)):
        yield Permutation(images)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        tup = tuple(int(x) for x in parts)
        if any(p <= 0 for p in tup):
            raise ValueError(f"parts must be positive: {tup}")
        if list(tup) != sorted(tup, reverse=True):
            raise ValueError(f"parts must be weakly decreasing: {tup}")
        object.__setattr__(self, "parts", tup)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map part size j -> number of parts of that size."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, in descending lexicographic order."""

    def gen(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    for parts in gen(n, n):
        yield Partition(parts)


def catalan(l: int) -> int:
    """The l-th Catalan number, binomial(2l, l) / (l + 1)."""
    if l < 0:
        raise ValueError("catalan is defined for l >= 0")
    return math.comb(2 * l, l) // (l + 1)


class LaurentPoly:
    """Laurent polynomial in the symbol N with exact rational coefficients.

    Exponents may be negative.  Zero coefficients are never stored.
    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Rational) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: Rational = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    @property
    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(self.terms)

    def leading_term(self) -> tuple[int, Fraction]:
        """(exponent, coefficient) of the term of maximal exponent."""
        e = self.max_exp
        return e, self.terms[e]

    def coeff(self, exp: int) -> Fraction:
        return self.terms.get(exp, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.constant(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("use RationalFunc for negative powers")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by N^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Replace N by N^k (k >= 1)."""
        if k < 1:
            raise ValueError("power must be >= 1")
        return LaurentPoly({e * k: c for e, c in self.terms.items()})

    def evaluate(self, x: Rational) -> Fraction:
        x = Fraction(x)
        if x == 0 and self.terms and self.min_exp < 0:
            raise ZeroDivisionError("negative exponent at N = 0")
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * x**e
        return total

    # -- equality / display ------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = f"N^{e}"
            else:
                body = f"{abs(c)}*N^{e}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"

    # -- serialization -----------------------------------------------------

    def to_records(self) -> list[dict]:
        """[{"exp": int, "coeff": "p/q"}], sorted by descending exponent."""
        return [
            {"exp": e, "coeff": str(self.terms[e])}
            for e in sorted(self.terms, reverse=True)
        ]

    @classmethod
    def from_records(cls, records: Sequence[Mapping]) -> "LaurentPoly":
        return cls({int(r["exp"]): Fraction(r["coeff"]) for r in records})


#: The symbol N itself.
N = LaurentPoly.monomial(1)


def _poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder for ordinary polynomials (exponents >= 0)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if (a.terms and a.min_exp < 0) or b.min_exp < 0:
        raise ValueError("divmod requires non-negative exponents")
    quo = LaurentPoly.zero()
    rem = a
    db, cb = b.leading_term()
    while rem.terms and rem.max_exp >= db:
        dr, cr = rem.leading_term()
        t = LaurentPoly.monomial(dr - db, cr / cb)
        quo = quo + t
        rem = rem - t * b
    return quo, rem


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic GCD of ordinary polynomials over the rationals."""
    while not b.is_zero():
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    _, lc = a.leading_term()
    return a * (1 / lc)


class RationalFunc:
    """Ratio of Laurent polynomials in N, kept in canonical form.

    Canonical form: the denominator is an ordinary polynomial (minimal
    exponent 0) that is monic, and shares no polynomial factor with the
    numerator's polynomial part; any net power of N lives in the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = self._to_poly(num)
        den = self._to_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = self._canonicalize(num, den)

    @staticmethod
    def _to_poly(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.constant(x)
        raise TypeError(f"cannot interpret {x!r} as a polynomial")

    @staticmethod
    def _canonicalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        if num.is_zero():
            return LaurentPoly.zero(), LaurentPoly.one()
        a, b = num.min_exp, den.min_exp
        nu, de = num.shift(-a), den.shift(-b)
        g = poly_gcd(nu, de)
        if g.max_exp > 0 or g.leading_term()[1] != 1:
            nu, _ = _poly_divmod(nu, g)
            de, _ = _poly_divmod(de, g)
        _, lc = de.leading_term()
        inv = 1 / lc
        nu = nu * inv
        de = de * inv
        return nu.shift(a - b), de

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalFunc":
        return cls(0)

    @classmethod
    def one(cls) -> "RationalFunc":
        return cls(1)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunc":
        return cls(p)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.one()

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "RationalFunc":
        if isinstance(x, RationalFunc):
            return x
        if isinstance(x, (int, Fraction, LaurentPoly)):
            return RationalFunc(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "RationalFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunc":
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunc":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunc":
        return self._coerce(other) / self

    def substitute_power(self, k: int) -> "RationalFunc":
        """Replace N by N^k in numerator and denominator."""
        return RationalFunc(self.num.substitute_power(k), self.den.substitute_power(k))

    def evaluate(self, x: Rational) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at N = {x}")
        return self.num.evaluate(x) / d

    # -- equality / display ------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunc({self.num!r}, {self.den!r})"

    def to_records(self) -> dict:
        return {"num": self.num.to_records(), "den": self.den.to_records()}

    @classmethod
    def from_records(cls, rec: Mapping) -> "RationalFunc":
        return cls(
            LaurentPoly.from_records(rec["num"]), LaurentPoly.from_records(rec["den"])
        )
