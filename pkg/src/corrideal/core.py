"""Finite-block data model for C*-correspondences.

A correspondence over a multi-matrix algebra ``A = M_{d_0} + ... + M_{d_{n-1}}``
is determined up to isomorphism by three pieces of data:

* the block dimensions ``d``;
* the fullness vector ``m``: the right-module component ``X e_j`` is the
  space of ``m_j x d_j`` matrices, so ``K(X e_j) = M_{m_j}``;
* the action matrix ``M``: ``M[j][i]`` copies of the irreducible
  representation of block ``i`` appear in the left action on ``X e_j``.

Ideals of ``A`` are exactly the sums of blocks, so an ideal is a subset of
block indices.  ``IdealSet`` stores it as a bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    DuplicateLabel,
    FullnessViolation,
    NegativeOrMalformedNumber,
    SchemaError,
    UnknownLabel,
)
from .extnat import ZERO, ExtNat, as_extnat

__all__ = [
    "BlockAlgebra",
    "IdealSet",
    "Correspondence",
    "validate_correspondence",
    "perp",
]


@dataclass(frozen=True)
class BlockAlgebra:
    """Ordered labelled matrix blocks; a block's index is its list position."""

    labels: tuple[str, ...]
    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.dims):
            raise SchemaError("labels and dims differ in length")
        seen = set()
        for label in self.labels:
            if not isinstance(label, str) or not label:
                raise SchemaError(f"block label must be a non-empty string, got {label!r}")
            if label in seen:
                raise DuplicateLabel(f"duplicate block label {label!r}")
            seen.add(label)
        for label, dim in zip(self.labels, self.dims):
            if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
                raise NegativeOrMalformedNumber(
                    f"block {label!r} needs a positive integer dimension, got {dim!r}"
                )

    @classmethod
    def from_blocks(cls, blocks: Iterable) -> "BlockAlgebra":
        """Build from ``(label, dim)`` pairs or ``{"label", "dim"}`` dicts."""
        labels, dims = [], []
        for block in blocks:
            if isinstance(block, Mapping):
                try:
                    label, dim = block["label"], block["dim"]
                except KeyError as exc:
                    raise SchemaError(f"block entry is missing {exc.args[0]!r}") from None
            else:
                label, dim = block
            labels.append(label)
            dims.append(dim)
        return cls(tuple(labels), tuple(dims))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownLabel(f"unknown block label {label!r}") from None

    def ideal(self, members: Union[str, Iterable[Union[str, int]], "IdealSet"] = ()) -> "IdealSet":
        """Ideal from labels, indices, or a comma-separated label string."""
        if isinstance(members, IdealSet):
            if members.n != self.n:
                raise SchemaError("ideal belongs to an algebra of a different size")
            return members
        if isinstance(members, str):
            members = [part.strip() for part in members.split(",") if part.strip()]
        mask = 0
        for member in members:
            if isinstance(member, int) and not isinstance(member, bool):
                if not 0 <= member < self.n:
                    raise UnknownLabel(f"block index {member} out of range")
                mask |= 1 << member
            else:
                mask |= 1 << self.index_of(member)
        return IdealSet(mask, self.n)

    def zero(self) -> "IdealSet":
        return IdealSet(0, self.n)

    def full(self) -> "IdealSet":
        return IdealSet((1 << self.n) - 1, self.n)

    def all_ideals(self) -> Iterator["IdealSet"]:
        for mask in range(1 << self.n):
            yield IdealSet(mask, self.n)

    def render(self, ideal: "IdealSet") -> list[str]:
        return [self.labels[i] for i in ideal]


@dataclass(frozen=True)
class IdealSet:
    """A set of block indices; sum is union and intersection is intersection."""

    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise UnknownLabel(f"mask {self.mask:#b} has bits beyond {self.n} blocks")

    @classmethod
    def of(cls, indices: Iterable[int], n: int) -> "IdealSet":
        mask = 0
        for i in indices:
            mask |= 1 << i
        return cls(mask, n)

    def _check(self, other: "IdealSet") -> None:
        if self.n != other.n:
            raise ValueError("ideals over algebras of different sizes")

    def __or__(self, other: "IdealSet") -> "IdealSet":
        self._check(other)
        return IdealSet(self.mask | other.mask, self.n)

    def __and__(self, other: "IdealSet") -> "IdealSet":
        self._check(other)
        return IdealSet(self.mask & other.mask, self.n)

    def __sub__(self, other: "IdealSet") -> "IdealSet":
        self._check(other)
        return IdealSet(self.mask & ~other.mask, self.n)

    def __invert__(self) -> "IdealSet":
        return IdealSet(((1 << self.n) - 1) & ~self.mask, self.n)

    def issubset(self, other: "IdealSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def issuperset(self, other: "IdealSet") -> bool:
        return other.issubset(self)

    __le__ = issubset

    def __lt__(self, other: "IdealSet") -> bool:
        return self.issubset(other) and self.mask != other.mask

    def __ge__(self, other: "IdealSet") -> bool:
        return other.issubset(self)

    def __gt__(self, other: "IdealSet") -> bool:
        return other < self

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        mask, i = self.mask, 0
        while mask:
            if mask & 1:
                yield i
            mask >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __repr__(self):
        return f"IdealSet({sorted(self)}, n={self.n})"


@dataclass(frozen=True)
class Correspondence:
    algebra: BlockAlgebra
    fullness: tuple[ExtNat, ...]
    action: tuple[tuple[ExtNat, ...], ...]

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.algebra.labels

    @property
    def dims(self) -> tuple[int, ...]:
        return self.algebra.dims

    def ideal(self, members=()) -> IdealSet:
        return self.algebra.ideal(members)

    def render(self, ideal: IdealSet) -> list[str]:
        return self.algebra.render(ideal)

    # Column summaries: for an acting block i, which module blocks it touches.

    @cached_property
    def support_columns(self) -> tuple[int, ...]:
        """``support_columns[i]`` is the mask of ``j`` with ``M[j][i] > 0``."""
        cols = []
        for i in range(self.n):
            mask = 0
            for j in range(self.n):
                if self.action[j][i]:
                    mask |= 1 << j
            cols.append(mask)
        return tuple(cols)

    @cached_property
    def infinite_columns(self) -> tuple[int, ...]:
        """``infinite_columns[i]`` is the mask of ``j`` with ``M[j][i] = inf``."""
        cols = []
        for i in range(self.n):
            mask = 0
            for j in range(self.n):
                if self.action[j][i].is_infinite:
                    mask |= 1 << j
            cols.append(mask)
        return tuple(cols)

    @property
    def is_row_finite(self) -> bool:
        return all(v.is_finite for v in self.fullness) and all(
            v.is_finite for row in self.action for v in row
        )

    def module_rank(self, j: int) -> ExtNat:
        """Rank of the left action's image on ``X e_j``: sum of ``M[j][i] d_i``."""
        total = ZERO
        for i in range(self.n):
            total = total + self.action[j][i] * self.dims[i]
        return total

    def relabel(self, mapping: Mapping[str, str]) -> "Correspondence":
        labels = tuple(mapping.get(label, label) for label in self.labels)
        return Correspondence(BlockAlgebra(labels, self.dims), self.fullness, self.action)

    def to_document(self) -> dict:
        """The direct-form input document; parses back to an equal object."""
        action = []
        for j in range(self.n):
            for i in range(self.n):
                if self.action[j][i]:
                    action.append(
                        {"on": self.labels[j], "by": self.labels[i], "mult": self.action[j][i].to_json()}
                    )
        return {
            "algebra": {"blocks": [{"label": l, "dim": d} for l, d in zip(self.labels, self.dims)]},
            "module": {
                "fullness": {l: m.to_json() for l, m in zip(self.labels, self.fullness)},
                "action": action,
            },
        }


def _number(value, what: str) -> ExtNat:
    try:
        return as_extnat(value)
    except NegativeOrMalformedNumber as exc:
        raise NegativeOrMalformedNumber(f"{what}: {exc}") from None


def validate_correspondence(desc: Mapping) -> Correspondence:
    """Build a validated correspondence from a raw description.

    ``desc`` has keys ``blocks`` (``(label, dim)`` pairs or dicts),
    ``fullness`` (a list in block order, or a label map where missing labels
    mean 0) and ``action`` (a dense ``n x n`` list indexed ``[on][by]``, or a
    sparse list of ``{"on", "by", "mult"}`` dicts or ``(on, by, mult)`` tuples).
    """
    algebra = desc["blocks"] if isinstance(desc.get("blocks"), BlockAlgebra) else BlockAlgebra.from_blocks(
        desc.get("blocks", ())
    )
    n = algebra.n

    raw_full = desc.get("fullness", {})
    if isinstance(raw_full, Mapping):
        fullness = [ZERO] * n
        for label, value in raw_full.items():
            fullness[algebra.index_of(label)] = _number(value, f"fullness of {label!r}")
    else:
        raw_full = list(raw_full)
        if len(raw_full) != n:
            raise SchemaError(f"fullness has {len(raw_full)} entries for {n} blocks")
        fullness = [_number(v, f"fullness of {algebra.labels[j]!r}") for j, v in enumerate(raw_full)]

    action = [[ZERO] * n for _ in range(n)]
    raw_action = desc.get("action", ())
    if isinstance(raw_action, Mapping):
        raise SchemaError("action must be a list")
    raw_action = list(raw_action)
    # dense rows are lists; sparse entries are dicts or (on, by, mult) tuples
    dense = bool(raw_action) and all(isinstance(row, list) for row in raw_action)
    if dense:
        if len(raw_action) != n or any(len(row) != n for row in raw_action):
            raise SchemaError(f"dense action matrix must be {n} x {n}")
        for j, row in enumerate(raw_action):
            for i, value in enumerate(row):
                action[j][i] = _number(value, f"action[{algebra.labels[j]}][{algebra.labels[i]}]")
    else:
        seen = set()
        for entry in raw_action:
            if isinstance(entry, Mapping):
                try:
                    on, by, mult = entry["on"], entry["by"], entry["mult"]
                except KeyError as exc:
                    raise SchemaError(f"action entry is missing {exc.args[0]!r}") from None
            else:
                try:
                    on, by, mult = entry
                except (TypeError, ValueError):
                    raise SchemaError(f"malformed action entry {entry!r}") from None
            j, i = algebra.index_of(on), algebra.index_of(by)
            if (j, i) in seen:
                raise SchemaError(f"duplicate action entry on={on!r} by={by!r}")
            seen.add((j, i))
            action[j][i] = _number(mult, f"action on {on!r} by {by!r}")

    for j in range(n):
        label = algebra.labels[j]
        if any(action[j]) and not fullness[j]:
            raise FullnessViolation(f"block {label!r} is acted on but has fullness 0")
        rank = ZERO
        for i in range(n):
            rank = rank + action[j][i] * algebra.dims[i]
        if rank > fullness[j]:
            raise FullnessViolation(
                f"left action on {label!r} has rank {rank} exceeding fullness {fullness[j]}"
            )

    return Correspondence(algebra, tuple(fullness), tuple(tuple(row) for row in action))


def perp(X: Correspondence, ideal: IdealSet) -> IdealSet:
    """Annihilator of an ideal: the complementary blocks."""
    return ~X.ideal(ideal)
