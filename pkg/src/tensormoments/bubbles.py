"""Bubbles: d-regular bipartite edge-colored graphs stored as permutations.

A bubble on n white / n black vertices carries one permutation per color;
color c joins white vertex i to black vertex ``color_maps[c](i)``.  This
module provides validation, the necklace constructor, the chain
decomposition with respect to a color split, and bicolored cycle counts.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .algebra import Permutation, compose


@dataclass(frozen=True)
class Bubble:
    """d colors, n white vertices, one white-to-black permutation per color."""

    d: int
    n: int
    color_maps: tuple[Permutation, ...]

    def __post_init__(self):
        if len(self.color_maps) != self.d:
            raise ValueError(f"expected {self.d} color maps, got {len(self.color_maps)}")
        for c, p in enumerate(self.color_maps, start=1):
            if p.n != self.n:
                raise ValueError(f"color {c} acts on {p.n} vertices, expected {self.n}")

    def tau(self, color: int) -> Permutation:
        """The permutation of color ``color`` (1-indexed)."""
        if not 1 <= color <= self.d:
            raise ValueError(f"color {color} out of range 1..{self.d}")
        return self.color_maps[color - 1]

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "colors": {str(c): list(self.tau(c).images) for c in range(1, self.d + 1)},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Bubble":
        d, n = int(data["d"]), int(data["n"])
        maps = tuple(Permutation(data["colors"][str(c)]) for c in range(1, d + 1))
        return cls(d, n, maps)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "Bubble":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class ColorSplit:
    """Subset C of columns; the complement indexes the rows."""

    d: int
    column_colors: frozenset[int]

    def __init__(self, d: int, column_colors):
        cols = frozenset(int(c) for c in column_colors)
        if not cols or cols == frozenset(range(1, d + 1)):
            raise ValueError("column set must be nonempty and proper")
        if not cols <= frozenset(range(1, d + 1)):
            raise ValueError(f"colors {sorted(cols)} outside 1..{d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "column_colors", cols)

    @property
    def row_colors(self) -> tuple[int, ...]:
        return tuple(c for c in range(1, self.d + 1) if c not in self.column_colors)

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(sorted(self.column_colors))


@dataclass(frozen=True)
class Diagnostics:
    ok: bool
    problems: tuple[str, ...] = ()


def validate(b: Bubble) -> Diagnostics:
    """Check bijectivity of every color map and connectivity of the graph."""
    problems = []
    # Bijectivity is enforced by the Permutation type; re-check defensively.
    for c in range(1, b.d + 1):
        if sorted(b.tau(c).images) != list(range(1, b.n + 1)):
            problems.append(f"color {c} is not a bijection")
    if not problems and b.n > 0:
        # Union-of-colors graph on whites: i ~ j when some black is shared.
        parent = list(range(b.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in range(1, b.d + 1):
            tau = b.tau(c)
            base = b.tau(1)
            for i in range(1, b.n + 1):
                # white i and white base^{-1}(tau(i)) share black tau(i)
                j = base.inverse()(tau(i))
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        roots = {find(i) for i in range(1, b.n + 1)}
        if len(roots) > 1:
            comps = {}
            for i in range(1, b.n + 1):
                comps.setdefault(find(i), []).append(i)
            listing = "; ".join(str(sorted(v)) for v in comps.values())
            problems.append(f"disconnected: white components {listing}")
    return Diagnostics(ok=not problems, problems=tuple(problems))


def necklace(d: int, split: ColorSplit, k: int) -> Bubble:
    """The bubble of tr (M M^dagger)^k with respect to ``split``.

    Column colors are the identity; each row color is the k-cycle i -> i-1
    (mod k).  This orientation is fixed so that chain_decomposition returns
    a single chain of length k with trivial endpoint maps.
    """
    if k < 1:
        raise ValueError("necklace length must be >= 1")
    if split.d != d:
        raise ValueError(f"split is for d={split.d}, bubble has d={d}")
    down = Permutation([k if i == 1 else i - 1 for i in range(1, k + 1)])
    ident = Permutation.identity(k)
    maps = tuple(
        ident if c in split.column_colors else down for c in range(1, d + 1)
    )
    return Bubble(d, k, maps)


@dataclass(frozen=True)
class ChainDecomposition:
    """Maximal MM^dagger chains of a bubble relative to a color split.

    ``chains[j]`` lists the white vertices of chain j+1 in factor order;
    ``endpoint_maps[c]`` sends chain j (at its exposed black end) to the
    chain whose exposed white start it reaches by row color c.
    """

    chain_lengths: tuple[int, ...]
    endpoint_maps: dict[int, Permutation] = field(compare=False)
    chains: tuple[tuple[int, ...], ...] = field(default=(), compare=False)
    split: Optional[ColorSplit] = field(default=None, compare=False)

    @property
    def m(self) -> int:
        return len(self.chain_lengths)


class NotChainExpressible(Exception):
    """The bubble is not a word in MM^dagger for the given split."""


def chain_obstruction(b: Bubble, split: ColorSplit) -> Optional[str]:
    """Reason the bubble is not chain-expressible, or None if it is."""
    cols = split.columns
    rho = b.tau(cols[0])
    for c in cols[1:]:
        if b.tau(c) != rho:
            return (
                f"column colors {cols[0]} and {c} disagree: "
                f"{list(rho.images)} vs {list(b.tau(c).images)}"
            )
    return None


def chain_decomposition(b: Bubble, split: ColorSplit) -> Optional[ChainDecomposition]:
    """Decompose ``b`` into maximal MM^dagger chains, or None.

    Succeeds iff all column-color permutations coincide (call it rho).  Factor
    i links to factor j when every row color sends black rho(i) to the same
    white j; maximal link runs are the chains, cycles are cut at their
    smallest white label.
    """
    if chain_obstruction(b, split) is not None:
        return None
    rho = b.tau(split.columns[0])
    rows = split.row_colors
    inv = {c: b.tau(c).inverse() for c in rows}

    link: dict[int, int] = {}
    for i in range(1, b.n + 1):
        nexts = {inv[c](rho(i)) for c in rows}
        if len(nexts) == 1:
            link[i] = next(iter(nexts))

    has_incoming = set(link.values())
    chains: list[tuple[int, ...]] = []
    placed: set[int] = set()
    # Open chains start at whites with no incoming link.
    for start in range(1, b.n + 1):
        if start in has_incoming or start in placed:
            continue
        chain = [start]
        placed.add(start)
        while chain[-1] in link:
            chain.append(link[chain[-1]])
            placed.add(chain[-1])
        chains.append(tuple(chain))
    # Remaining whites sit on cycles; cut each at its smallest label.
    for start in range(1, b.n + 1):
        if start in placed:
            continue
        chain = [start]
        placed.add(start)
        i = link[start]
        while i != start:
            chain.append(i)
            placed.add(i)
            i = link[i]
        chains.append(tuple(chain))
    chains.sort(key=lambda ch: ch[0])

    start_of = {ch[0]: j + 1 for j, ch in enumerate(chains)}
    endpoint_maps: dict[int, Permutation] = {}
    for c in rows:
        images = []
        for ch in chains:
            target = inv[c](rho(ch[-1]))
            if target not in start_of:
                # Cannot happen: an interior white has all row edges consumed.
                raise AssertionError("endpoint does not land on a chain start")
            images.append(start_of[target])
        endpoint_maps[c] = Permutation(images)

    return ChainDecomposition(
        chain_lengths=tuple(len(ch) for ch in chains),
        endpoint_maps=endpoint_maps,
        chains=tuple(chains),
        split=split,
    )


def bubble_from_chains(
    d: int,
    split: ColorSplit,
    chain_lengths: Sequence[int],
    endpoint_maps: Mapping[int, Permutation],
) -> Bubble:
    """Rebuild a bubble from chain lengths and endpoint permutations.

    Whites are labeled chain by chain; the common column permutation is the
    identity in this labeling.
    """
    lengths = tuple(int(l) for l in chain_lengths)
    if any(l < 1 for l in lengths):
        raise ValueError("chain lengths must be positive")
    n = sum(lengths)
    offsets = []
    total = 0
    for l in lengths:
        offsets.append(total)
        total += l
    ident = Permutation.identity(n)
    maps: list[Permutation] = []
    for c in range(1, d + 1):
        if c in split.column_colors:
            maps.append(ident)
            continue
        pi = endpoint_maps[c]
        images = [0] * n
        for j, l in enumerate(lengths):
            off = offsets[j]
            for p in range(2, l + 1):
                # interior: white at position p follows black at position p-1
                images[off + p - 1] = off + p - 1
            # the start of chain pi(j+1) hangs off this chain's black end
            tgt = pi(j + 1) - 1
            images[offsets[tgt]] = off + l
        maps.append(Permutation(images))
    return Bubble(d, n, tuple(maps))


def bicolored_cycle_count(b: Bubble, c1: int, c2: int) -> int:
    """Number of cycles of tau_{c1}^{-1} tau_{c2} (faces of the 2-color subgraph)."""
    if c1 == c2:
        raise ValueError("colors must differ")
    return compose(b.tau(c1).inverse(), b.tau(c2)).cycle_count()
