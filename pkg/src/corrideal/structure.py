"""Matrix-block structure of O_X for acyclic, all-finite correspondences.

When the action matrix is nilpotent the Fock module is finite and exhausts
O_X.  Each sink block ``v`` (one that acts on nothing) then contributes one
summand ``M_N`` with

    N(v) = d_v + sum_{k >= 0} (M^k m)_v,   (M x)_v = sum_j M[v][j] x_j,

i.e. the number of columns of the ``e_v``-component of the Fock module.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .constructions import omega_correspondence
from .core import Correspondence
from .errors import NotAcyclic, NotRowFinite, NotTPair
from .pairs import IdealPair, PairKind, enumerate_pairs, pair_is_valid

__all__ = [
    "MatrixBlockStructure",
    "ox_structure",
    "fock_column_counts",
    "CrossCheckReport",
    "crosscheck_pairs_vs_ideals",
    "QuotientCheckReport",
    "quotient_structure_check",
]


@dataclass(frozen=True)
class MatrixBlockStructure:
    summands: tuple[tuple[str, int], ...]  # (sink block label, matrix size)

    @property
    def sizes(self) -> list[int]:
        return [size for _, size in self.summands]

    def __len__(self):
        return len(self.summands)

    def __str__(self):
        if not self.summands:
            return "0"
        return " (+) ".join(f"M{size}" for _, size in self.summands)


def _topological_order(X: Correspondence) -> list[int]:
    # Edges j -> i whenever block i acts on module block j; the Fock sum at j
    # needs the sums at every i acting on it, so process sinks of this order first.
    indegree = [0] * X.n
    for j in range(X.n):
        for i in range(X.n):
            if X.action[j][i]:
                indegree[i] += 1
    ready = [k for k in range(X.n) if indegree[k] == 0]
    order = []
    while ready:
        j = ready.pop()
        order.append(j)
        for i in range(X.n):
            if X.action[j][i]:
                indegree[i] -= 1
                if indegree[i] == 0:
                    ready.append(i)
    if len(order) != X.n:
        cyclic = [X.labels[k] for k in range(X.n) if indegree[k]]
        raise NotAcyclic(f"action matrix is not nilpotent; cycle through {','.join(cyclic)}")
    return order


def fock_column_counts(X: Correspondence) -> list[int]:
    """``sum_k (M^k m)_v`` for every block ``v``; requires finite, acyclic data."""
    if not X.is_row_finite:
        bad = [X.labels[k] for k in range(X.n)
               if X.fullness[k].is_infinite or any(v.is_infinite for v in X.action[k])]
        raise NotRowFinite(f"infinite fullness or multiplicity at blocks {','.join(bad)}")
    order = _topological_order(X)
    total = [0] * X.n
    for v in reversed(order):
        acc = int(X.fullness[v])
        for j in range(X.n):
            if X.action[v][j]:
                acc += int(X.action[v][j]) * total[j]
        total[v] = acc
    return total


def ox_structure(X: Correspondence) -> MatrixBlockStructure:
    counts = fock_column_counts(X)
    summands = tuple(
        (X.labels[v], X.dims[v] + counts[v])
        for v in range(X.n)
        if X.support_columns[v] == 0
    )
    return MatrixBlockStructure(summands)


@dataclass(frozen=True)
class CrossCheckReport:
    o_pairs: int
    summands: int
    ideals: int
    passed: bool


def crosscheck_pairs_vs_ideals(X: Correspondence) -> CrossCheckReport:
    """O-pair count against the ideal count ``2**summands`` of O_X."""
    structure = ox_structure(X)
    o_pairs = len(enumerate_pairs(X, PairKind.O))
    ideals = 2 ** len(structure)
    return CrossCheckReport(o_pairs, len(structure), ideals, o_pairs == ideals)


@dataclass(frozen=True)
class QuotientCheckReport:
    full: tuple[int, ...]
    quotient: tuple[int, ...]
    ideal_summands: tuple[int, ...] = field(default=())
    passed: bool = False


def quotient_structure_check(X: Correspondence, pair: IdealPair) -> QuotientCheckReport:
    """O_X / P_omega is O_{X_omega}: its summands must be a sub-multiset of O_X's."""
    if not pair_is_valid(X, pair.first, pair.second, PairKind.O):
        raise NotTPair(f"({X.render(pair.first)}, {X.render(pair.second)}) is not an O-pair")
    full = Counter(ox_structure(X).sizes)
    quotient = Counter(ox_structure(omega_correspondence(X, pair).result).sizes)
    passed = not (quotient - full)
    ideal = full - quotient if passed else Counter()
    return QuotientCheckReport(
        full=tuple(sorted(full.elements())),
        quotient=tuple(sorted(quotient.elements())),
        ideal_summands=tuple(sorted(ideal.elements())),
        passed=passed,
    )
