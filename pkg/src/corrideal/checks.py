"""Instance-level consistency suite run by the ``check`` command.

Every identity here is a relation between operations of this package that
must hold for all ideals of a given correspondence.  Failures point at a
bug, never at bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .constructions import (
    is_hilbert_bimodule,
    bimodule_invariant,
    omega_correspondence,
    quotient_correspondence,
    restriction_correspondence,
)
from .core import Correspondence, IdealSet, perp
from .errors import PreconditionError, SizeLimit
from .ideals import (
    closures,
    forward_image,
    invariance,
    inverse_image,
    relative_katsura,
    structural_ideals,
)
from .pairs import PairKind, enumerate_pairs, ideal_generated_by, pair_is_valid, relcp_analyze
from .structure import crosscheck_pairs_vs_ideals, ox_structure, quotient_structure_check

__all__ = ["CheckResult", "CHECK_SIZE_LIMIT", "run_checks"]

CHECK_SIZE_LIMIT = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _result(name, failures, checked):
    if failures:
        return CheckResult(name, "fail", failures[0])
    return CheckResult(name, "pass", f"{checked} cases")


def run_checks(X: Correspondence, limit: int = CHECK_SIZE_LIMIT) -> list[CheckResult]:
    if X.n > limit:
        raise SizeLimit(f"{X.n} blocks exceeds the check bound {limit}")
    ideals = list(X.algebra.all_ideals())
    full = X.algebra.full()
    ker, compact, katsura = structural_ideals(X)
    fwd = {I: forward_image(X, I) for I in ideals}
    inv = {I: inverse_image(X, I) for I in ideals}
    rel = {I: relative_katsura(X, I) for I in ideals}
    flags = {I: invariance(X, I) for I in ideals}
    positive = [I for I in ideals if flags[I].positively_invariant]
    negative = [I for I in ideals if flags[I].negatively_invariant]
    range_ideal = IdealSet.of((j for j in range(X.n) if X.fullness[j]), X.n)
    out = []

    fails = [f"perp {X.render(I)}" for I in ideals
             if perp(X, perp(X, I)) != I or (I & perp(X, I))]
    out.append(_result("perp is a complement involution", fails, len(ideals)))

    fails = ["katsura != compact & perp(ker)"] if katsura != compact - ker else []
    out.append(_result("J_X = compact & perp(ker)", fails, 1))

    fails = []
    for I in ideals:
        if not fwd[inv[I]].issubset(I & range_ideal):
            fails.append(f"X(X^-1({X.render(I)})) too large")
        if not (I | ker).issubset(inv[fwd[I]]):
            fails.append(f"X^-1(X({X.render(I)})) too small")
    out.append(_result("image/preimage adjunction", fails, len(ideals)))

    fails = []
    for I1, I2 in product(ideals, repeat=2):
        tag = f"{X.render(I1)}, {X.render(I2)}"
        if not fwd[I1 & I2].issubset(fwd[I1] & fwd[I2]):
            fails.append(f"X(meet) for {tag}")
        if inv[I1 & I2] != inv[I1] & inv[I2]:
            fails.append(f"X^-1(meet) for {tag}")
        if fwd[I1 | I2] != fwd[I1] | fwd[I2]:
            fails.append(f"X(join) for {tag}")
        if not (inv[I1] | inv[I2]).issubset(inv[I1 | I2]):
            fails.append(f"X^-1(join) for {tag}")
        if I1.issubset(I2) and not (fwd[I1].issubset(fwd[I2]) and inv[I1].issubset(inv[I2])):
            fails.append(f"monotonicity for {tag}")
        if not (rel[I1] & rel[I2]).issubset(rel[I1 & I2]):
            fails.append(f"J(I1) & J(I2) <= J(I1 & I2) for {tag}")
    out.append(_result("meet/join identities", fails, len(ideals) ** 2))

    fails = [X.render(I) for I in positive if inv[I] & rel[I] != I]
    out.append(_result("X^-1(I) & J(I) = I for positively invariant I", fails, len(positive)))

    fails = [X.render(I) for I in ideals
             if flags[I].negatively_invariant != katsura.issubset(rel[I])]
    out.append(_result("negative invariance iff J_X <= J(I)", fails, len(ideals)))

    fails = []
    for family, name in ((positive, "positive"), (negative, "negative")):
        members = set(family)
        for I1, I2 in product(family, repeat=2):
            if I1 & I2 not in members:
                fails.append(f"{name} invariance lost on {X.render(I1)} & {X.render(I2)}")
    out.append(_result("invariance closed under intersection", fails, len(positive) ** 2 + len(negative) ** 2))

    fails = []
    for I in ideals:
        report = closures(X, I)
        for got, pred, name in (
            (report.positive_closure, lambda K: flags[K].positively_invariant, "positive"),
            (report.negative_closure, lambda K: flags[K].negatively_invariant, "negative"),
            (report.invariant_closure, lambda K: flags[K].invariant, "invariant"),
        ):
            candidates = [K for K in ideals if I.issubset(K) and pred(K)]
            if got not in candidates or any(not got.issubset(K) for K in candidates):
                fails.append(f"{name} closure of {X.render(I)}")
    out.append(_result("closures are least closed supersets", fails, len(ideals)))

    lattices = {kind: enumerate_pairs(X, kind) for kind in PairKind}
    fails = []
    for kind, lattice in lattices.items():
        for p in lattice:
            if not pair_is_valid(X, p.first, p.second, kind):
                fails.append(f"invalid {kind.value}-pair {X.render(p.first)};{X.render(p.second)}")
        for p, q in product(lattice, repeat=2):
            if (p & q) not in lattice:
                fails.append(f"{kind.value}-pairs not closed under meet")
                break
    brute_o = sum(
        1 for I, I2 in product(ideals, repeat=2) if pair_is_valid(X, I, I2, PairKind.O)
    ) if X.n <= 6 else len(lattices[PairKind.O])
    if brute_o != len(lattices[PairKind.O]):
        fails.append("O-pair enumeration incomplete")
    firsts = {p.first for p in lattices[PairKind.O]}
    if any(not flags[I].invariant for I in firsts):
        fails.append("O-pair with non-invariant first component")
    if not pair_is_valid(X, X.algebra.zero(), katsura, PairKind.O) or not pair_is_valid(X, full, full, PairKind.O):
        fails.append("(0, J_X) or (A, A) is not an O-pair")
    out.append(_result("pair lattices", fails, sum(len(l) for l in lattices.values())))

    fails = []
    for I in ideals:
        generated = ideal_generated_by(X, I)
        if not pair_is_valid(X, generated.first, generated.second, PairKind.O):
            fails.append(f"generated pair of {X.render(I)}")
    out.append(_result("generated ideals are O-pairs", fails, len(ideals)))

    fails = []
    for p in lattices[PairKind.T]:
        derived = omega_correspondence(X, p)
        Y = derived.result
        predicted = {label for label, (_, tag) in derived.origin.items() if tag == "I-side"}
        got = set(Y.render(structural_ideals(Y).katsura))
        if got != predicted:
            fails.append(f"J_(X_omega) for {X.render(p.first)};{X.render(p.second)}")
    out.append(_result("J of X_omega is the I-side", fails, len(lattices[PairKind.T])))

    fails = []
    for I in positive:
        q = quotient_correspondence(X, I).result
        expected = sorted(X.render(rel[I] - I))
        if sorted(q.render(structural_ideals(q).katsura)) != expected:
            fails.append(f"J(X_I) for {X.render(I)}")
        Y = restriction_correspondence(X, I).result
        for got, want in zip(structural_ideals(Y), (ker, compact, katsura)):
            if sorted(Y.render(got)) != sorted(X.render(I & want)):
                fails.append(f"restriction ideals for {X.render(I)}")
                break
    out.append(_result("quotient and restriction ideals", fails, len(positive)))

    fails = []
    for J in ideals:
        if not J.issubset(compact):
            continue
        report = relcp_analyze(X, J)
        if not pair_is_valid(X, report.omega.first, report.omega.second, PairKind.T):
            fails.append(f"omega_J not a T-pair for {X.render(J)}")
        for p in lattices[PairKind.T]:
            if J.issubset(p.second) and not report.omega.issubset(p):
                fails.append(f"omega_J not minimal for {X.render(J)}")
                break
    out.append(_result("relative Cuntz-Pimsner minimality", fails, len(ideals)))

    bimodule = is_hilbert_bimodule(X)
    if bimodule:
        fails = []
        for I in ideals:
            if bimodule_invariant(X, I) != flags[I].invariant:
                fails.append(f"bimodule invariance of {X.render(I)}")
            if flags[I].invariant and rel[I] - I != katsura - I:
                fails.append(f"J(I) - I != J_X - I for {X.render(I)}")
        out.append(_result("bimodule invariance", fails, len(ideals)))
    else:
        out.append(CheckResult("bimodule invariance", "skip", "not a Hilbert bimodule"))

    try:
        ox_structure(X)
    except PreconditionError as exc:
        out.append(CheckResult("O-pairs vs ideals of O_X", "skip", f"{exc.kind}: {exc}"))
        out.append(CheckResult("quotients delete summands", "skip", f"{exc.kind}: {exc}"))
    else:
        report = crosscheck_pairs_vs_ideals(X)
        out.append(CheckResult(
            "O-pairs vs ideals of O_X",
            "pass" if report.passed else "fail",
            f"{report.o_pairs} O-pairs, {report.ideals} ideals",
        ))
        fails = [f"{X.render(p.first)};{X.render(p.second)}"
                 for p in lattices[PairKind.O] if not quotient_structure_check(X, p).passed]
        out.append(_result("quotients delete summands", fails, len(lattices[PairKind.O])))

    return out
