"""Ideal calculus of a correspondence: images, structural ideals, invariance."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Correspondence, IdealSet

__all__ = [
    "InvarianceReport",
    "ClosureReport",
    "StructuralIdeals",
    "forward_image",
    "inverse_image",
    "structural_ideals",
    "katsura_ideal",
    "relative_katsura",
    "invariance",
    "closures",
    "positive_closure",
    "negative_closure",
    "invariant_closure",
]


@dataclass(frozen=True)
class StructuralIdeals:
    kernel: IdealSet
    compactly_acting: IdealSet
    katsura: IdealSet

    def __iter__(self):
        return iter((self.kernel, self.compactly_acting, self.katsura))


@dataclass(frozen=True)
class InvarianceReport:
    positively_invariant: bool
    negatively_invariant: bool

    @property
    def invariant(self) -> bool:
        return self.positively_invariant and self.negatively_invariant


@dataclass(frozen=True)
class ClosureReport:
    forward_tower: tuple[IdealSet, ...]
    backward_tower: tuple[IdealSet, ...]
    positive_closure: IdealSet
    negative_closure: IdealSet
    invariant_closure: IdealSet


def forward_image(X: Correspondence, I: IdealSet) -> IdealSet:
    """Blocks ``j`` such that some block of ``I`` acts nontrivially on ``X e_j``."""
    I = X.ideal(I)
    mask = 0
    for i in I:
        mask |= X.support_columns[i]
    return IdealSet(mask, X.n)


def _inverse_mask(X: Correspondence, mask: int) -> int:
    out = 0
    for i, col in enumerate(X.support_columns):
        if col & ~mask == 0:
            out |= 1 << i
    return out


def inverse_image(X: Correspondence, I: IdealSet) -> IdealSet:
    """Blocks whose left action lands entirely in ``X I``."""
    I = X.ideal(I)
    return IdealSet(_inverse_mask(X, I.mask), X.n)


def structural_ideals(X: Correspondence) -> StructuralIdeals:
    """Kernel of the left action, the compactly acting ideal, and J_X."""
    kernel = compact = 0
    for i in range(X.n):
        if X.support_columns[i] == 0:
            kernel |= 1 << i
        if X.infinite_columns[i] == 0:
            compact |= 1 << i
    full = (1 << X.n) - 1
    katsura = compact & (full & ~kernel)
    return StructuralIdeals(IdealSet(kernel, X.n), IdealSet(compact, X.n), IdealSet(katsura, X.n))


def katsura_ideal(X: Correspondence) -> IdealSet:
    return structural_ideals(X).katsura


def _relative_katsura_mask(X: Correspondence, mask: int) -> int:
    inverse = _inverse_mask(X, mask)
    out = 0
    for i in range(X.n):
        bit = 1 << i
        if X.infinite_columns[i] & ~mask:
            continue  # non-compact on the quotient module
        if inverse & bit and not mask & bit:
            continue  # fails to annihilate X^{-1}(I) modulo I
        out |= bit
    return out


def relative_katsura(X: Correspondence, I: IdealSet) -> IdealSet:
    """The ideal J(I), defined for every ideal I.

    A block belongs to J(I) when it acts compactly on the quotient module
    ``X / XI`` and multiplies ``X^{-1}(I)`` into ``I``.
    """
    I = X.ideal(I)
    return IdealSet(_relative_katsura_mask(X, I.mask), X.n)


def invariance(X: Correspondence, I: IdealSet) -> InvarianceReport:
    I = X.ideal(I)
    positive = forward_image(X, I).issubset(I)
    katsura = katsura_ideal(X)
    negative = (katsura & inverse_image(X, I)).issubset(I)
    return InvarianceReport(positive, negative)


def _forward_tower(X: Correspondence, I: IdealSet) -> list[IdealSet]:
    # X^k(I) need not be monotone; stop at the first repeat of an earlier term.
    tower, seen = [I], {I.mask}
    while True:
        nxt = forward_image(X, tower[-1])
        if nxt.mask in seen:
            return tower
        tower.append(nxt)
        seen.add(nxt.mask)


def _backward_tower(X: Correspondence, I: IdealSet) -> list[IdealSet]:
    katsura = katsura_ideal(X)
    tower = [I]
    for _ in range(X.n + 1):
        cur = tower[-1]
        nxt = cur | (katsura & inverse_image(X, cur))
        if nxt == cur:
            return tower
        tower.append(nxt)
    raise AssertionError("backward tower failed to stabilise within n steps")


def positive_closure(X: Correspondence, I: IdealSet) -> IdealSet:
    """Smallest positively invariant ideal containing ``I``."""
    I = X.ideal(I)
    out = I
    for term in _forward_tower(X, I):
        out = out | term
    return out


def negative_closure(X: Correspondence, I: IdealSet) -> IdealSet:
    """Smallest negatively invariant ideal containing ``I``."""
    return _backward_tower(X, X.ideal(I))[-1]


def invariant_closure(X: Correspondence, I: IdealSet) -> IdealSet:
    """Smallest invariant ideal containing ``I``."""
    return negative_closure(X, positive_closure(X, I))


def closures(X: Correspondence, I: IdealSet) -> ClosureReport:
    I = X.ideal(I)
    forward = _forward_tower(X, I)
    backward = _backward_tower(X, I)
    positive = I
    for term in forward:
        positive = positive | term
    negative = backward[-1]
    return ClosureReport(
        forward_tower=tuple(forward),
        backward_tower=tuple(backward),
        positive_closure=positive,
        negative_closure=negative,
        invariant_closure=negative_closure(X, positive),
    )
