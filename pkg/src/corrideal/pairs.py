"""T-pairs and O-pairs: the lattice parametrising gauge-invariant ideals."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional

import networkx as nx

from .core import Correspondence, IdealSet
from .errors import NotCompactlyActing, SizeLimit
from .ideals import (
    forward_image,
    invariance,
    invariant_closure,
    inverse_image,
    relative_katsura,
    structural_ideals,
)

__all__ = [
    "PairKind",
    "IdealPair",
    "PairLattice",
    "RelCPReport",
    "InvariantBijection",
    "DEFAULT_SIZE_LIMIT",
    "enumerate_pairs",
    "pair_is_valid",
    "relcp_analyze",
    "ideal_generated_by",
    "invariant_ideal_bijection",
]

DEFAULT_SIZE_LIMIT = 20


class PairKind(str, Enum):
    T = "T"
    O = "O"

    @classmethod
    def parse(cls, value) -> "PairKind":
        if isinstance(value, PairKind):
            return value
        return cls(str(value).upper())


@dataclass(frozen=True)
class IdealPair:
    first: IdealSet
    second: IdealSet
    kind: PairKind = PairKind.T

    def issubset(self, other: "IdealPair") -> bool:
        return self.first.issubset(other.first) and self.second.issubset(other.second)

    def __and__(self, other: "IdealPair") -> "IdealPair":
        kind = PairKind.O if self.kind == other.kind == PairKind.O else PairKind.T
        return IdealPair(self.first & other.first, self.second & other.second, kind)

    @property
    def key(self) -> tuple[int, int]:
        return (self.first.mask, self.second.mask)


def _subsets(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class PairLattice:
    """Pairs sorted by ``(first, second)`` bitmask, ordered componentwise."""

    pairs: tuple[IdealPair, ...]
    kind: PairKind

    @cached_property
    def position(self) -> dict[tuple[int, int], int]:
        return {p.key: k for k, p in enumerate(self.pairs)}

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair: IdealPair) -> bool:
        return pair.key in self.position

    def index(self, pair: IdealPair) -> int:
        return self.position[pair.key]

    @cached_property
    def order_relation(self) -> frozenset[tuple[int, int]]:
        """Covering edges ``(lower, upper)`` of componentwise inclusion."""
        dag = nx.DiGraph()
        dag.add_nodes_from(range(len(self.pairs)))
        for a, p in enumerate(self.pairs):
            for b, q in enumerate(self.pairs):
                if a != b and p.issubset(q):
                    dag.add_edge(a, b)
        return frozenset(nx.transitive_reduction(dag).edges())

    @property
    def covering_edges(self) -> list[tuple[int, int]]:
        return sorted(self.order_relation)

    def meet(self, a: int, b: int) -> int:
        return self.position[(self.pairs[a] & self.pairs[b]).key]

    @cached_property
    def meet_table(self) -> dict[tuple[int, int], int]:
        size = len(self.pairs)
        return {(a, b): self.meet(a, b) for a in range(size) for b in range(size)}


def pair_is_valid(X: Correspondence, I: IdealSet, I2: IdealSet, kind="T") -> bool:
    kind = PairKind.parse(kind)
    I, I2 = X.ideal(I), X.ideal(I2)
    if not forward_image(X, I).issubset(I):
        return False
    if not (I.issubset(I2) and I2.issubset(relative_katsura(X, I))):
        return False
    if kind is PairKind.O:
        return structural_ideals(X).katsura.issubset(I2)
    return True


def enumerate_pairs(X: Correspondence, kind="T", limit: int = DEFAULT_SIZE_LIMIT) -> PairLattice:
    kind = PairKind.parse(kind)
    if X.n > limit:
        raise SizeLimit(f"{X.n} blocks exceeds the enumeration bound {limit}")
    katsura = structural_ideals(X).katsura.mask
    found = []
    for I in X.algebra.all_ideals():
        if not forward_image(X, I).issubset(I):
            continue
        top = relative_katsura(X, I).mask
        if I.mask & ~top:
            continue  # cannot happen for positively invariant I; guards the definition
        free = top & ~I.mask
        required = 0
        if kind is PairKind.O:
            required = katsura & ~I.mask
            if required & ~free:
                continue
            free &= ~required
        for extra in _subsets(free):
            second = IdealSet(I.mask | required | extra, X.n)
            found.append(IdealPair(I, second, kind))
    found.sort(key=lambda p: p.key)
    return PairLattice(tuple(found), kind)


@dataclass(frozen=True)
class RelCPReport:
    tower: tuple[IdealSet, ...]
    limit: IdealSet
    omega: IdealPair
    kernel_of_pi: IdealSet
    algebra_is_zero: bool


def relcp_analyze(X: Correspondence, J: IdealSet) -> RelCPReport:
    """Kernel tower of the relative Cuntz-Pimsner algebra O(J, X).

    Starting from 0, repeatedly adjoin ``J & X^{-1}(current)``.  The limit is
    the kernel of the universal map from A, and ``(limit, J)`` is the least
    T-pair whose second component contains J.
    """
    J = X.ideal(J)
    compact = structural_ideals(X).compactly_acting
    if not J.issubset(compact):
        bad = X.render(J - compact)
        raise NotCompactlyActing(f"blocks {bad} do not act by compact operators")
    tower = [X.algebra.zero()]
    while True:
        cur = tower[-1]
        nxt = cur | (J & inverse_image(X, cur))
        if nxt == cur:
            break
        tower.append(nxt)
    limit = tower[-1]
    return RelCPReport(
        tower=tuple(tower),
        limit=limit,
        omega=IdealPair(limit, J, PairKind.T),
        kernel_of_pi=limit,
        algebra_is_zero=limit == X.algebra.full(),
    )


def ideal_generated_by(X: Correspondence, I: IdealSet) -> IdealPair:
    """O-pair of the ideal of O_X generated by the image of ``I``."""
    closed = invariant_closure(X, X.ideal(I))
    return IdealPair(closed, closed | structural_ideals(X).katsura, PairKind.O)


@dataclass(frozen=True)
class InvariantBijection:
    mapping: Optional[dict[IdealSet, IdealPair]]
    witness: Optional[IdealSet]

    def __bool__(self):
        return self.mapping is not None


def invariant_ideal_bijection(X: Correspondence) -> InvariantBijection:
    """Invariant ideals versus O-pairs, when ``A = J_X + ker``.

    Under that hypothesis every invariant ideal I has exactly one O-pair,
    ``(I, I + J_X)``.  Otherwise the blocks outside ``J_X + ker`` are
    returned as the witness.
    """
    ker, _, katsura = structural_ideals(X)
    missing = X.algebra.full() - (ker | katsura)
    if missing:
        return InvariantBijection(None, missing)
    lattice = enumerate_pairs(X, PairKind.O)
    mapping: dict[IdealSet, IdealPair] = {}
    for pair in lattice:
        if pair.first in mapping:
            raise AssertionError(f"two O-pairs share first component {pair.first!r}")
        mapping[pair.first] = pair
    invariant = [I for I in X.algebra.all_ideals() if invariance(X, I).invariant]
    if sorted(mapping, key=lambda I: I.mask) != invariant:
        raise AssertionError("O-pair first components differ from the invariant ideals")
    return InvariantBijection(mapping, None)
