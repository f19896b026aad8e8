"""Exact binomial-tail machinery and grid verifiers.

Everything here is exact rational arithmetic; no floats.  The tail
B(N, r) is the probability that at most floor(r) of N fair coin flips are
heads, extended by the empty/full-sum conventions B(N, r) = 0 for
floor(r) < 0 and B(N, r) = 1 for floor(r) >= N.  The product form is
Phi(t1, t2) = B(s1, (s1-t1)/2) * B(s2, (s2-t2)/2) for ambient sizes (s1, s2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


@lru_cache(maxsize=None)
def _btail_at(n: int, k: int) -> Fraction:
    if k < 0:
        return Fraction(0)
    if k >= n:
        return Fraction(1)
    return Fraction(sum(math.comb(n, i) for i in range(k + 1)), 1 << n)


def btail(n: int, r) -> Fraction:
    """B(n, r): P(at most floor(r) heads among n fair flips), exact."""
    if n < 0:
        raise ValueError(f"flip count must be nonnegative, got {n}")
    return _btail_at(n, math.floor(r))


def phi(t1: int, t2: int, s1: int, s2: int) -> Fraction:
    """Phi(t1, t2) for ambient sizes (s1, s2)."""
    if s1 < 0 or s2 < 0:
        raise ValueError("ambient sizes must be nonnegative")
    return btail(s1, Fraction(s1 - t1, 2)) * btail(s2, Fraction(s2 - t2, 2))


def half_weight(n: int) -> Fraction:
    """2^-n * C(n, floor(n/2)), the central binomial mass."""
    return Fraction(math.comb(n, n // 2), 1 << n)


@dataclass
class Violation:
    point: tuple
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {"point": list(self.point), "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class GridReport:
    name: str
    bounds: dict
    checked: int = 0
    skipped: int = 0
    violations: list[Violation] = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, point: tuple, lhs: Fraction, rhs: Fraction) -> None:
        self.violations.append(Violation(point, lhs, rhs))

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "bounds": self.bounds,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": [v.to_json() for v in self.violations],
        }
        out.update({k: str(v) for k, v in self.extras.items()})
        return out


def verify_tail_difference_identity(a_max: int = 24, b_max: int = 24) -> GridReport:
    """Exact difference identity for products of adjacent tails.

    For 0 <= c <= a, 0 <= d <= b with 2c >= a-1 and 2d >= b-1 (points
    violating the side condition are skipped and counted):

        B(a,c)B(b,d) - B(a,c-1)B(b,d-1)
            = 2^-a C(a,c) B(b,d) + B(a,c-1) 2^-b C(b,d)

    The ratio of the left side to 2^-a C(a,c) + 2^-b C(b,d) is recorded
    (min/max over the grid) as the observed boundedness band.
    """
    report = GridReport("tail-difference-identity", {"a_max": a_max, "b_max": b_max})
    ratio_min = ratio_max = None
    inner_points = (b_max * (b_max + 3)) // 2  # pairs (b, d) with 0 <= d <= b
    for a in range(1, a_max + 1):
        for c in range(0, a + 1):
            if 2 * c < a - 1:
                report.skipped += inner_points
                continue
            ta_c = Fraction(math.comb(a, c), 1 << a)
            b_ac = btail(a, c)
            b_ac1 = btail(a, c - 1)
            for b in range(1, b_max + 1):
                for d in range(0, b + 1):
                    if 2 * d < b - 1:
                        report.skipped += 1
                        continue
                    report.checked += 1
                    tb_d = Fraction(math.comb(b, d), 1 << b)
                    lhs = b_ac * btail(b, d) - b_ac1 * btail(b, d - 1)
                    rhs = ta_c * btail(b, d) + b_ac1 * tb_d
                    if lhs != rhs:
                        report.record((a, b, c, d), lhs, rhs)
                        continue
                    ratio = lhs / (ta_c + tb_d)
                    if ratio_min is None or ratio < ratio_min:
                        ratio_min = ratio
                    if ratio_max is None or ratio > ratio_max:
                        ratio_max = ratio
    report.extras["ratio_min"] = ratio_min
    report.extras["ratio_max"] = ratio_max
    return report


def _branch_rhs(t: int, s1: int, s2: int) -> Fraction:
    """Common right-hand side of the two symmetric-difference lemmas."""
    if t >= 0:
        return phi(-t, -t, s1, s2) - phi(-t + 2, -t + 2, s1, s2)
    return phi(t, t, s1, s2) - phi(t + 2, t + 2, s1, s2)


def verify_diagonal_four_term(t_max: int = 12, s_max: int = 24) -> GridReport:
    """Four-term symmetric difference against the adjacent-tail gap.

    Lambda = Phi(t,t) + Phi(-t-2,-t-2) - Phi(t+2,-t) - Phi(-t,t+2), compared
    branchwise: Lambda >= Phi(-t,-t) - Phi(-t+2,-t+2) for t >= 0, and
    Lambda >= Phi(t,t) - Phi(t+2,t+2) for t < 0.  Violations carry their
    parity class ((s1-t) mod 2, (s2-t) mod 2).
    """
    report = GridReport("diagonal-four-term", {"t_max": t_max, "s_max": s_max})
    parities: dict[tuple[int, int], int] = {}
    for t in range(-t_max, t_max + 1):
        for s1 in range(s_max + 1):
            for s2 in range(s_max + 1):
                report.checked += 1
                lam = (
                    phi(t, t, s1, s2)
                    + phi(-t - 2, -t - 2, s1, s2)
                    - phi(t + 2, -t, s1, s2)
                    - phi(-t, t + 2, s1, s2)
                )
                rhs = _branch_rhs(t, s1, s2)
                if lam < rhs:
                    report.record((t, s1, s2), lam, rhs)
                    cls = ((s1 - t) % 2, (s2 - t) % 2)
                    parities[cls] = parities.get(cls, 0) + 1
    report.extras["violation_parities"] = parities
    return report


def verify_shifted_four_term(t_max: int = 12, s_max: int = 24) -> GridReport:
    """Shifted four-term symmetric differences, three parts per point.

    (i)/(ii): Lambda = Phi(t,t-2) + Phi(-t,-t-2) - Phi(t+2,-t+2) -
    Phi(-t+2,t+2) against the same branch right-hand sides as the
    diagonal four-term verifier.
    (iii): Phi(t-2,t) + Phi(-t-2,-t) - Phi(t,-t) - Phi(-t,t) >= 0.
    """
    report = GridReport("shifted-four-term", {"t_max": t_max, "s_max": s_max})
    for t in range(-t_max, t_max + 1):
        for s1 in range(s_max + 1):
            for s2 in range(s_max + 1):
                report.checked += 1
                lam = (
                    phi(t, t - 2, s1, s2)
                    + phi(-t, -t - 2, s1, s2)
                    - phi(t + 2, -t + 2, s1, s2)
                    - phi(-t + 2, t + 2, s1, s2)
                )
                rhs = _branch_rhs(t, s1, s2)
                if lam < rhs:
                    report.record(("i/ii", t, s1, s2), lam, rhs)
                part3 = (
                    phi(t - 2, t, s1, s2)
                    + phi(-t - 2, -t, s1, s2)
                    - phi(t, -t, s1, s2)
                    - phi(-t, t, s1, s2)
                )
                if part3 < 0:
                    report.record(("iii", t, s1, s2), part3, Fraction(0))
    return report


def eight_term(t: int, s1: int, s2: int) -> Fraction:
    """The eight-term alternating sum Lambda(t)."""
    return (
        phi(t - 2, t + 2, s1, s2)
        + phi(t + 2, t - 2, s1, s2)
        + phi(-t - 4, -t, s1, s2)
        + phi(-t, -t - 4, s1, s2)
        - phi(t, -t - 2, s1, s2)
        - phi(-t + 2, t + 4, s1, s2)
        - phi(-t - 2, t, s1, s2)
        - phi(t + 4, -t + 2, s1, s2)
    )


def verify_eight_term_grid(t_max: int = 12, s_max: int = 24) -> GridReport:
    """Eight-term inequality, its reflection symmetry, and the t = -1
    product-difference decomposition.

    Per point: (a) Lambda(t) >= 0, (b) Lambda(t) == Lambda(-t-2) exactly,
    and for t = -1 with s1, s2 >= 3 (c) the decomposition
    half Lambda(-1) = (a1+a3) f2(3) + (b1+b3) f1(3) + Sigma with
    Sigma = a3 b1 + a1 b1 + a1 b3 - a2 b2 >= 0, where a_i, b_i are the
    single binomial masses above the (s-3)/2 cutoffs.  Violations of (a)
    carry their parity class.
    """
    report = GridReport("eight-term", {"t_max": t_max, "s_max": s_max})
    parities: dict[tuple[int, int], int] = {}
    for t in range(-t_max, t_max + 1):
        for s1 in range(s_max + 1):
            for s2 in range(s_max + 1):
                report.checked += 1
                lam = eight_term(t, s1, s2)
                if lam < 0:
                    report.record(("nonneg", t, s1, s2), lam, Fraction(0))
                    cls = ((s1 - t) % 2, (s2 - t) % 2)
                    parities[cls] = parities.get(cls, 0) + 1
                mirrored = eight_term(-t - 2, s1, s2)
                if lam != mirrored:
                    report.record(("symmetry", t, s1, s2), lam, mirrored)
    for s1 in range(3, s_max + 1):
        for s2 in range(3, s_max + 1):
            report.checked += 1
            alpha = [
                Fraction(math.comb(s1, (s1 - 3) // 2 + i), 1 << s1) for i in (1, 2, 3)
            ]
            beta = [
                Fraction(math.comb(s2, (s2 - 3) // 2 + i), 1 << s2) for i in (1, 2, 3)
            ]
            a1, a2, a3 = alpha
            b1, b2, b3 = beta
            sig = a3 * b1 + a1 * b1 + a1 * b3 - a2 * b2
            if sig < 0:
                report.record(("sigma", -1, s1, s2), sig, Fraction(0))
            f1_3 = btail(s1, Fraction(s1 - 3, 2))
            f2_3 = btail(s2, Fraction(s2 - 3, 2))
            half_lam = eight_term(-1, s1, s2) / 2
            decomposed = (a1 + a3) * f2_3 + (b1 + b3) * f1_3 + sig
            if half_lam != decomposed:
                report.record(("sigma-decomposition", -1, s1, s2), half_lam, decomposed)
    report.extras["violation_parities"] = parities
    return report


def verify_vandermonde(bound: int = 30) -> GridReport:
    """Sum_k C(m1,k) C(m2,n-k) == C(m1+m2,n) for all m1, m2, n <= bound."""
    report = GridReport("vandermonde", {"bound": bound})
    for m1 in range(bound + 1):
        for m2 in range(bound + 1):
            for n in range(bound + 1):
                report.checked += 1
                lhs = sum(
                    math.comb(m1, k) * math.comb(m2, n - k)
                    for k in range(0, n + 1)
                )
                if lhs != math.comb(m1 + m2, n):
                    report.record(
                        (m1, m2, n), Fraction(lhs), Fraction(math.comb(m1 + m2, n))
                    )
    return report
