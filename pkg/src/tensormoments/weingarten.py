"""Exact and asymptotic Weingarten functions for the unitary group.

Values are obtained by inverting the class-algebra Gram matrix of the
function dim^{#cycles} over the symmetric group, either symbolically over
rational functions of N or numerically over exact rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .algebra import (
    LaurentPoly,
    Partition,
    Permutation,
    RationalFunc,
    catalan,
    compose,
    partitions_of,
    symmetric_group,
)

DEFAULT_N_MAX = 8


@dataclass(frozen=True)
class ConjugacyClassTable:
    n: int
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]


def class_representative(p: Partition) -> Permutation:
    """The permutation with cycles (1..a_1)(a_1+1..a_1+a_2)..."""
    cycles = []
    start = 1
    for part in p.parts:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(p.n, cycles)


def class_size(p: Partition) -> int:
    """n! / prod_j j^{p_j} p_j!"""
    z = 1
    for j, mult in p.multiplicities().items():
        z *= j**mult * math.factorial(mult)
    return math.factorial(p.n) // z


@lru_cache(maxsize=None)
def conjugacy_classes(n: int) -> ConjugacyClassTable:
    classes = tuple(partitions_of(n))
    return ConjugacyClassTable(n, classes, tuple(class_size(p) for p in classes))


@lru_cache(maxsize=None)
def _gram_counts(n: int) -> tuple[tuple[Partition, ...], list[list[dict[Partition, int]]]]:
    """counts[a][b][type] = #{tau in class b : cycle_type(sigma_a tau^{-1}) = type}."""
    table = conjugacy_classes(n)
    index = {p: i for i, p in enumerate(table.classes)}
    reps = [class_representative(p) for p in table.classes]
    m = len(table.classes)
    counts: list[list[dict[Partition, int]]] = [
        [{} for _ in range(m)] for _ in range(m)
    ]
    for tau in symmetric_group(n):
        b = index[tau.cycle_type()]
        tau_inv = tau.inverse()
        for a, sigma in enumerate(reps):
            t = compose(sigma, tau_inv).cycle_type()
            cell = counts[a][b]
            cell[t] = cell.get(t, 0) + 1
    return table.classes, counts


Dim = Union[int, LaurentPoly]


def _dim_power(dim: Dim, k: int):
    if isinstance(dim, int):
        return Fraction(dim) ** k
    return dim**k


def gram_matrix(n: int, dim: Dim = None) -> list[list[LaurentPoly]]:
    """Class-algebra Gram matrix of dim^{#cycles}, indexed by the classes
    of conjugacy_classes(n).

    Entry (a, b) sums dim^{#cycles(sigma_a tau^{-1})} over all tau in class
    b, with sigma_a a fixed representative of class a.  ``dim`` defaults to
    the symbol N.
    """
    if dim is None:
        dim = LaurentPoly.monomial(1)
    _, counts = _gram_counts(n)
    out = []
    for row in counts:
        out_row = []
        for cell in row:
            entry = _dim_power(dim, 0) * 0
            for t, cnt in cell.items():
                entry = entry + cnt * _dim_power(dim, t.num_parts)
            out_row.append(entry)
        out.append(out_row)
    return out


def _solve_linear(matrix, rhs, zero, one):
    """Gaussian elimination over an exact field; matrix is modified."""
    m = len(matrix)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if rows[r][col] != zero), None)
        if pivot is None:
            raise ZeroDivisionError("singular Gram matrix")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(m):
            if r != col and rows[r][col] != zero:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][m] for r in range(m)]


@lru_cache(maxsize=None)
def _weingarten_table_symbolic(n: int) -> dict[Partition, RationalFunc]:
    """Weingarten values at symbolic dimension N, per class of S_n."""
    classes, counts = _gram_counts(n)
    sym = LaurentPoly.monomial(1)
    matrix = [
        [
            RationalFunc(
                sum(
                    (cnt * sym**t.num_parts for t, cnt in cell.items()),
                    LaurentPoly.zero(),
                )
            )
            for cell in row
        ]
        for row in counts
    ]
    identity_class = Partition([1] * n)
    rhs = [RationalFunc(1 if p == identity_class else 0) for p in classes]
    sol = _solve_linear(matrix, rhs, RationalFunc.zero(), RationalFunc.one())
    return dict(zip(classes, sol))


@lru_cache(maxsize=None)
def _weingarten_table_numeric(n: int, dim: int) -> dict[Partition, Fraction]:
    classes, counts = _gram_counts(n)
    matrix = [
        [
            sum(
                (cnt * Fraction(dim) ** t.num_parts for t, cnt in cell.items()),
                Fraction(0),
            )
            for cell in row
        ]
        for row in counts
    ]
    identity_class = Partition([1] * n)
    rhs = [Fraction(1 if p == identity_class else 0) for p in classes]
    sol = _solve_linear(matrix, rhs, Fraction(0), Fraction(1))
    return dict(zip(classes, sol))


def _symbolic_power(dim: LaurentPoly) -> int:
    terms = dim.terms
    if len(terms) != 1:
        raise ValueError(f"symbolic dimension must be a power of N, got {dim}")
    (exp, coeff), = terms.items()
    if coeff != 1 or exp < 1:
        raise ValueError(f"symbolic dimension must be N^k with k >= 1, got {dim}")
    return exp


def weingarten_exact(
    cls: Partition, dim: Dim, n_max: int = DEFAULT_N_MAX
) -> Union[RationalFunc, Fraction]:
    """Exact Weingarten value for a conjugacy class at the given dimension.

    ``dim`` is either a positive integer (returns a Fraction; must be
    >= |cls|) or a LaurentPoly monomial N^k (returns a RationalFunc in N).
    """
    n = cls.n
    if n > n_max:
        raise ValueError(f"class size {n} exceeds n_max={n_max}")
    if isinstance(dim, int):
        if dim < n:
            raise ValueError(
                f"numeric dimension {dim} < n={n}: Gram matrix not invertible"
            )
        return _weingarten_table_numeric(n, dim)[cls]
    power = _symbolic_power(dim)
    value = _weingarten_table_symbolic(n)[cls]
    return value.substitute_power(power) if power != 1 else value


def weingarten_table(
    n: int, dim: Dim, n_max: int = DEFAULT_N_MAX
) -> dict[Partition, Union[RationalFunc, Fraction]]:
    """All Weingarten values for S_n at the given dimension."""
    return {p: weingarten_exact(p, dim, n_max=n_max) for p in partitions_of(n)}


def weingarten_asymptotic(cls: Partition) -> tuple[int, int]:
    """Leading monomial of Wg_dim(cls) as dim -> infinity.

    Returns (exponent in dim, integer coefficient): exponent is
    (#parts - 2n), the coefficient is prod_j [(-1)^{j-1} Cat_{j-1}]^{p_j}.
    """
    n = cls.n
    exponent = cls.num_parts - 2 * n
    coeff = 1
    for j, mult in cls.multiplicities().items():
        coeff *= ((-1) ** (j - 1) * catalan(j - 1)) ** mult
    return exponent, coeff
