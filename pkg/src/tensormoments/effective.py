"""Angular integration: effective observables, Wishart moments, scaling.

For a chain-expressible bubble the unitary average at fixed singular
values is a combination of power sums p_l = sum_i lambda_i^{2l}; summing
the Weingarten-weighted permutation pairs yields the expansion, and the
complex Wishart (Laguerre) moments close the loop back to the exact
Gaussian expectation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _perms
from typing import Sequence, Union

from .algebra import (
    LaurentPoly,
    Partition,
    Permutation,
    RationalFunc,
    catalan,
    compose,
    symmetric_group,
)
from .bubbles import Bubble, ColorSplit, NotChainExpressible, chain_decomposition, chain_obstruction
from .weingarten import DEFAULT_N_MAX, weingarten_exact

WISHART_L_MAX = 9


@dataclass(frozen=True)
class PowerSumExpansion:
    """Linear combination of products of power sums in squared singular values.

    ``terms`` maps a descending tuple (l_1..l_k) to the rational-function
    coefficient of p_{l_1} ... p_{l_k}; ``row_power`` is the exponent q with
    angular group dimension N^q.
    """

    terms: dict[tuple[int, ...], RationalFunc]
    row_power: int

    def to_json(self) -> list[dict]:
        return [
            {"powers": list(powers), "coeff": self.terms[powers].to_records()}
            for powers in sorted(self.terms, reverse=True)
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for powers in sorted(self.terms, reverse=True):
            prod = "*".join(f"p_{l}" for l in powers)
            pieces.append(f"({self.terms[powers]}) * {prod}")
        return "  +  ".join(pieces)


@dataclass(frozen=True)
class ScalingDiagnostics:
    """Cycle counts of one (sigma, tau) term and its N-scaling exponent."""

    sigma: Permutation
    tau: Permutation
    f_rows: dict[int, int]
    f_box: int
    f0: int
    exponent: int

    @property
    def f1(self) -> int:
        return self.f_rows.get(1, 0)

    @property
    def f3(self) -> int:
        return self.f_rows.get(3, 0)


def effective_observable(
    b: Bubble, split: ColorSplit, n_max: int = DEFAULT_N_MAX
) -> PowerSumExpansion:
    """Integrate out the angular degrees of freedom of ``b`` over ``split``.

    Sums Wg_{N^q}(sigma tau^{-1}) * prod_rows N^{#cycles(pi_c sigma)} over
    sigma, tau in S_m, attaching p_{sum of chain lengths} per cycle of tau.
    """
    decomp = chain_decomposition(b, split)
    if decomp is None:
        raise NotChainExpressible(chain_obstruction(b, split))
    m = decomp.m
    if m > n_max:
        raise ValueError(f"{m} chains exceed the Weingarten bound n_max={n_max}")
    lengths = decomp.chain_lengths
    rows = split.row_colors
    row_power = split.d - len(split.column_colors)

    # bucket[powers][(wg_class, color_exponent)] = multiplicity
    bucket: dict[tuple[int, ...], dict[tuple[Partition, int], int]] = {}
    sigmas = list(symmetric_group(m))
    for tau in sigmas:
        powers = tuple(
            sorted((sum(lengths[j - 1] for j in cyc) for cyc in tau.cycles()), reverse=True)
        )
        cell = bucket.setdefault(powers, {})
        tau_inv = tau.inverse()
        for sigma in sigmas:
            wg_class = compose(sigma, tau_inv).cycle_type()
            color_exp = sum(
                compose(decomp.endpoint_maps[c], sigma).cycle_count() for c in rows
            )
            key = (wg_class, color_exp)
            cell[key] = cell.get(key, 0) + 1

    dim = LaurentPoly.monomial(row_power)
    terms: dict[tuple[int, ...], RationalFunc] = {}
    for powers, cell in bucket.items():
        coeff = RationalFunc.zero()
        for (wg_class, color_exp), cnt in cell.items():
            wg = weingarten_exact(wg_class, dim, n_max=n_max)
            coeff = coeff + cnt * RationalFunc(LaurentPoly.monomial(color_exp)) * wg
        if coeff:
            terms[powers] = coeff
    return PowerSumExpansion(terms=terms, row_power=row_power)


DimLike = Union[int, Fraction, LaurentPoly]


@lru_cache(maxsize=None)
def _wishart_histogram(lengths: tuple[int, ...]) -> dict[tuple[int, int], int]:
    """(cycles(gamma pi), cycles(pi)) histogram over pi in S_L."""
    L = sum(lengths)
    gamma = [0] * L
    start = 0
    for l in lengths:
        for j in range(l):
            gamma[start + j] = start + (j + 1) % l
        start += l
    hist: dict[tuple[int, int], int] = {}
    for images in _perms(range(L)):
        seen = [False] * L
        c_pi = 0
        for s in range(L):
            if seen[s]:
                continue
            c_pi += 1
            i = s
            while not seen[i]:
                seen[i] = True
                i = images[i]
        seen = [False] * L
        c_gp = 0
        for s in range(L):
            if seen[s]:
                continue
            c_gp += 1
            i = s
            while not seen[i]:
                seen[i] = True
                i = gamma[images[i]]
        key = (c_gp, c_pi)
        hist[key] = hist.get(key, 0) + 1
    return hist


def wishart_moment_exact(
    lengths: Sequence[int], row_dim: DimLike, col_dim: DimLike
) -> Union[LaurentPoly, Fraction]:
    """<prod_j tr W^{l_j}> in the complex Wishart ensemble, unit covariance.

    W = M M^dagger with M of size row_dim x col_dim.  Dimensions may be
    exact numbers or Laurent polynomials in N; the result is symbolic as
    soon as either one is.
    """
    lens = tuple(sorted((int(l) for l in lengths), reverse=True))
    if not lens or any(l < 1 for l in lens):
        raise ValueError("lengths must be positive integers")
    L = sum(lens)
    if L > WISHART_L_MAX:
        raise ValueError(
            f"total degree {L} exceeds the bound {WISHART_L_MAX} "
            f"(~{math.factorial(L):.1e} pairings)"
        )
    symbolic = isinstance(row_dim, LaurentPoly) or isinstance(col_dim, LaurentPoly)
    if symbolic:
        row = row_dim if isinstance(row_dim, LaurentPoly) else LaurentPoly.constant(row_dim)
        col = col_dim if isinstance(col_dim, LaurentPoly) else LaurentPoly.constant(col_dim)
        total = LaurentPoly.zero()
    else:
        row, col = Fraction(row_dim), Fraction(col_dim)
        total = Fraction(0)
    row_pows: dict[int, DimLike] = {}
    col_pows: dict[int, DimLike] = {}
    for (a, c), cnt in _wishart_histogram(lens).items():
        ra = row_pows.setdefault(a, row**a)
        cb = col_pows.setdefault(c, col**c)
        total = total + cnt * ra * cb
    return total


def wishart_moment_leading(l: int, balance: str) -> int:
    """Leading coefficient of <tr W^l> at large N: Cat_l when M is square,
    1 when the two dimensions scale differently."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if balance == "square":
        return catalan(l)
    if balance == "unbalanced":
        return 1
    raise ValueError(f"balance must be 'square' or 'unbalanced', got {balance!r}")


def laguerre_reconstruct(
    e: PowerSumExpansion, row_dim: LaurentPoly, col_dim: LaurentPoly
) -> LaurentPoly:
    """Recompute <B> through the angular route: sum of coefficients times
    Wishart moments.  The rational functions must collapse to a polynomial."""
    total = RationalFunc.zero()
    for powers, coeff in e.terms.items():
        moment = wishart_moment_exact(powers, row_dim, col_dim)
        if not isinstance(moment, LaurentPoly):
            moment = LaurentPoly.constant(moment)
        total = total + coeff * RationalFunc(moment)
    return total.as_poly()


def scaling_diagnostics(b: Bubble, split: ColorSplit) -> list[ScalingDiagnostics]:
    """Per-(sigma, tau) cycle counts F_c, F_box, F_0 and the exponent
    sum_c F_c + |C| F_box + |C| (F_0 - 2m)."""
    decomp = chain_decomposition(b, split)
    if decomp is None:
        raise NotChainExpressible(chain_obstruction(b, split))
    m = decomp.m
    rows = split.row_colors
    ncols = len(split.column_colors)
    out = []
    for sigma in symmetric_group(m):
        for tau in symmetric_group(m):
            f_rows = {
                c: compose(decomp.endpoint_maps[c], sigma).cycle_count() for c in rows
            }
            f_box = tau.cycle_count()
            f0 = compose(sigma, tau.inverse()).cycle_type().num_parts
            exponent = sum(f_rows.values()) + ncols * f_box + ncols * (f0 - 2 * m)
            out.append(
                ScalingDiagnostics(
                    sigma=sigma,
                    tau=tau,
                    f_rows=f_rows,
                    f_box=f_box,
                    f0=f0,
                    exponent=exponent,
                )
            )
    return out
