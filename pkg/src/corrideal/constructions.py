"""Derived correspondences: quotients, restrictions and pair pullbacks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .core import BlockAlgebra, Correspondence, IdealSet, validate_correspondence
from .errors import (
    NotABimodule,
    NotPositivelyInvariant,
    NotTPair,
    SchemaError,
    UnknownVertex,
)
from .extnat import ZERO, ExtNat, as_extnat
from .ideals import forward_image, relative_katsura, structural_ideals
from .pairs import IdealPair, pair_is_valid

__all__ = [
    "DerivedCorrespondence",
    "GraphDesc",
    "DIAGONAL",
    "I_SIDE",
    "I_PRIME_SIDE",
    "QUOTIENT",
    "RESTRICTION",
    "quotient_correspondence",
    "restriction_correspondence",
    "nondegenerate_part",
    "omega_correspondence",
    "BimoduleCheck",
    "is_hilbert_bimodule",
    "bimodule_invariant",
    "graph_to_correspondence",
]

DIAGONAL = "diagonal"
I_SIDE = "I-side"
I_PRIME_SIDE = "I'-side"
QUOTIENT = "quotient"
RESTRICTION = "restriction"

_SUFFIX = {DIAGONAL: "#d", I_SIDE: "#i", I_PRIME_SIDE: "#ii"}


@dataclass(frozen=True)
class DerivedCorrespondence:
    result: Correspondence
    origin: Mapping[str, tuple[str, str]]  # result label -> (source label, tag)


def _require_positively_invariant(X: Correspondence, I: IdealSet) -> None:
    image = forward_image(X, I)
    if not image.issubset(I):
        raise NotPositivelyInvariant(
            f"X({X.render(I)}) = {X.render(image)} is not contained in {X.render(I)}"
        )


def _submatrix(X: Correspondence, keep: list[int]) -> tuple[tuple[ExtNat, ...], ...]:
    return tuple(tuple(X.action[j][i] for i in keep) for j in keep)


def quotient_correspondence(X: Correspondence, I: IdealSet) -> DerivedCorrespondence:
    """X_I over A/I, by deleting the blocks of I.

    Positive invariance makes this well defined: no block of I acts on a
    surviving module block.
    """
    I = X.ideal(I)
    _require_positively_invariant(X, I)
    keep = [k for k in range(X.n) if k not in I]
    result = Correspondence(
        BlockAlgebra(tuple(X.labels[k] for k in keep), tuple(X.dims[k] for k in keep)),
        tuple(X.fullness[k] for k in keep),
        _submatrix(X, keep),
    )
    return DerivedCorrespondence(result, {X.labels[k]: (X.labels[k], QUOTIENT) for k in keep})


def restriction_correspondence(X: Correspondence, I: IdealSet) -> DerivedCorrespondence:
    """The submodule ``phi(I) X`` as a correspondence over I."""
    I = X.ideal(I)
    _require_positively_invariant(X, I)
    keep = list(I)
    fullness = []
    for j in keep:
        rank = ZERO
        for i in keep:
            rank = rank + X.action[j][i] * X.dims[i]
        fullness.append(rank)
    result = Correspondence(
        BlockAlgebra(tuple(X.labels[k] for k in keep), tuple(X.dims[k] for k in keep)),
        tuple(fullness),
        _submatrix(X, keep),
    )
    return DerivedCorrespondence(result, {X.labels[k]: (X.labels[k], RESTRICTION) for k in keep})


def nondegenerate_part(X: Correspondence) -> DerivedCorrespondence:
    """``phi(A) X``, the nondegenerate replacement of X."""
    return restriction_correspondence(X, X.algebra.full())


def omega_correspondence(X: Correspondence, pair: IdealPair) -> DerivedCorrespondence:
    """X_omega over the pullback A_omega of A/I and A/I' over A/J(I).

    Blocks outside T = J(I) appear once (glued diagonally); blocks of T - I
    appear on the A/I side and blocks of T - I' on the A/I' side.  The left
    action only sees the A/I coordinate, so I'-side blocks act as zero.
    """
    I, I2 = X.ideal(pair.first), X.ideal(pair.second)
    if not pair_is_valid(X, I, I2, "T"):
        raise NotTPair(f"({X.render(I)}, {X.render(I2)}) is not a T-pair")
    T = relative_katsura(X, I)

    blocks: list[tuple[int, str]] = []
    for k in range(X.n):
        if k not in T:
            blocks.append((k, DIAGONAL))
    for k in T - I:
        blocks.append((k, I_SIDE))
    for k in T - I2:
        blocks.append((k, I_PRIME_SIDE))

    labels = tuple(X.labels[k] + _SUFFIX[tag] for k, tag in blocks)
    action = tuple(
        tuple(ZERO if tag_i == I_PRIME_SIDE else X.action[j][i] for i, tag_i in blocks)
        for j, _ in blocks
    )
    result = Correspondence(
        BlockAlgebra(labels, tuple(X.dims[k] for k, _ in blocks)),
        tuple(X.fullness[k] for k, _ in blocks),
        action,
    )
    origin = {label: (X.labels[k], tag) for label, (k, tag) in zip(labels, blocks)}
    return DerivedCorrespondence(result, origin)


@dataclass(frozen=True)
class BimoduleCheck:
    is_bimodule: bool
    violations: tuple[str, ...] = ()
    matching: Optional[Mapping[int, int]] = None  # module block -> acting block

    @property
    def witness(self) -> Optional[str]:
        return "; ".join(self.violations) if self.violations else None

    def __bool__(self):
        return self.is_bimodule


def is_hilbert_bimodule(X: Correspondence) -> BimoduleCheck:
    """Whether ``phi(J_X) = K(X)``.

    In block terms each nonzero module block must be acted on by exactly one
    block of J_X, with multiplicity one and matching size, and no acting block
    may serve two module blocks.  Every violation found is reported.
    """
    katsura = structural_ideals(X).katsura
    violations = []
    matching: dict[int, int] = {}
    served: dict[int, list[int]] = {}
    for j in range(X.n):
        if not X.fullness[j]:
            continue
        label = X.labels[j]
        actors = [i for i in range(X.n) if X.action[j][i]]
        if not actors:
            violations.append(f"module block {label} has no acting block")
            continue
        if len(actors) > 1:
            names = ",".join(X.labels[i] for i in actors)
            violations.append(f"module block {label} has {len(actors)} acting blocks ({names})")
            continue
        i = actors[0]
        served.setdefault(i, []).append(j)
        if X.action[j][i] != 1:
            violations.append(
                f"block {X.labels[i]} acts on module block {label} with multiplicity {X.action[j][i]}"
            )
        elif X.fullness[j] != X.dims[i]:
            violations.append(
                f"block {X.labels[i]} of size {X.dims[i]} does not fill module block {label} "
                f"of fullness {X.fullness[j]}"
            )
        elif i not in katsura:
            violations.append(f"acting block {X.labels[i]} is outside J_X")
        else:
            matching[j] = i
    for i, js in served.items():
        if len(js) > 1:
            names = ",".join(X.labels[j] for j in js)
            violations.append(f"block {X.labels[i]} acts on {len(js)} module blocks ({names})")
    if violations:
        return BimoduleCheck(False, tuple(violations))
    return BimoduleCheck(True, (), matching)


def bimodule_invariant(X: Correspondence, I: IdealSet) -> bool:
    """For a Hilbert bimodule: does ``phi(I) X`` equal ``X I``?

    Both inclusions are checked: every module block hit by ``I`` lies in ``I``,
    and every module block in ``I`` is filled by blocks of ``I``.
    """
    check = is_hilbert_bimodule(X)
    if not check:
        raise NotABimodule(check.witness)
    I = X.ideal(I)
    # phi(I) X must land inside X I
    if not forward_image(X, I).issubset(I):
        return False
    for j in I:
        rank = ZERO
        for i in I:
            rank = rank + X.action[j][i] * X.dims[i]
        if rank != X.fullness[j]:
            return False
    return True


@dataclass(frozen=True)
class GraphDesc:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, ExtNat], ...]

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable) -> "GraphDesc":
        names = []
        for v in vertices:
            names.append(v["label"] if isinstance(v, Mapping) else v)
        known = set(names)
        out = []
        for e in edges:
            if isinstance(e, Mapping):
                src, dst, count = e["src"], e["dst"], e.get("count", 1)
            elif len(e) == 2:
                (src, dst), count = e, 1
            else:
                src, dst, count = e
            for v in (src, dst):
                if v not in known:
                    raise UnknownVertex(f"edge refers to undeclared vertex {v!r}")
            count = as_extnat(count)
            if not count:
                raise SchemaError(f"edge {src}->{dst} has zero count")
            out.append((src, dst, count))
        return cls(tuple(names), tuple(out))


def graph_to_correspondence(g: GraphDesc) -> Correspondence:
    """Graph correspondence: one dimension-one block per vertex.

    An edge ``v -> w`` contributes one unit of fullness to the module block
    of ``v`` on which the vertex projection of ``w`` acts.
    """
    if not isinstance(g, GraphDesc):
        g = GraphDesc.build(g["vertices"], g["edges"])
    index = {v: k for k, v in enumerate(g.vertices)}
    if len(index) != len(g.vertices):
        # let the algebra constructor report the duplicate
        BlockAlgebra(g.vertices, (1,) * len(g.vertices))
    n = len(g.vertices)
    fullness = [ZERO] * n
    action = [[ZERO] * n for _ in range(n)]
    for src, dst, count in g.edges:
        s, d = index[src], index[dst]
        fullness[s] = fullness[s] + count
        action[s][d] = action[s][d] + count
    return validate_correspondence(
        {"blocks": [(v, 1) for v in g.vertices], "fullness": fullness, "action": action}
    )
