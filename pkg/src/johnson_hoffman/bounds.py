"""Hoffman ratio bound and the certificate for alpha(J(k^2-k+1, k, 1))."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bose_mesner import (
    ProfileMatrixSpec,
    Spectrum,
    dense_spectrum,
    fraction_str,
    row_sum,
    spectrum,
)
from .combinatorics import binomial
from .extremal import canonical_family, canonical_family_size, is_independent

FAMILY_CAP = 5000


class HoffmanError(ValueError):
    """Profile violates the hypotheses of the ratio bound."""


class DegenerateGraphError(HoffmanError):
    """The profile has no positive off-diagonal entry: the graph is edgeless."""


@dataclass(frozen=True)
class HoffmanReport:
    N: int
    d: Fraction
    lambda_min: Fraction
    bound: Fraction
    method: str = "closed-form"

    @property
    def bound_floor(self) -> int:
        return math.floor(self.bound)

    @property
    def ratio(self) -> Fraction:
        return self.bound / self.N

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "d": fraction_str(self.d),
            "lambda_min": fraction_str(self.lambda_min),
            "bound": fraction_str(self.bound),
            "bound_floor": self.bound_floor,
            "method": self.method,
        }


def _check_pseudo_adjacency(spec: ProfileMatrixSpec) -> None:
    k = spec.k
    if spec.f[k] != 0:
        raise HoffmanError(f"profile has nonzero diagonal f({k}) = {spec.f[k]}")
    negative = [s for s, v in enumerate(spec.f) if v < 0]
    if negative:
        raise HoffmanError(f"profile has negative entries at intersection sizes {negative}")
    # intersection sizes below 2k - n never occur in J(n, k)
    if not any(spec.f[s] > 0 for s in range(max(0, 2 * k - spec.n), k)):
        raise DegenerateGraphError("profile has no positive realizable entry: graph is edgeless")


def hoffman_bound(spec: ProfileMatrixSpec, method: str = "closed-form") -> HoffmanReport:
    """alpha(G) <= N * (-lambda_min) / (d - lambda_min) for the profile's support graph."""
    _check_pseudo_adjacency(spec)
    if method == "closed-form":
        spec_ = spectrum(spec)
    elif method == "dense":
        spec_ = dense_spectrum(spec)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _report_from_spectrum(spec, spec_)


def _report_from_spectrum(spec: ProfileMatrixSpec, spec_: Spectrum) -> HoffmanReport:
    d = row_sum(spec)
    if max(spec_.lambdas) != d:
        raise HoffmanError(f"row sum {d} is not the largest eigenvalue {max(spec_.lambdas)}")
    if spec_.method != "dense" and spec_.lambdas[0] != d:
        raise HoffmanError(f"lambda_0 = {spec_.lambdas[0]} differs from row sum {d}")
    lam_min = spec_.lambda_min
    if lam_min >= 0:
        raise DegenerateGraphError(f"lambda_min = {lam_min} is not negative")
    N = spec.order
    return HoffmanReport(N, d, lam_min, N * (-lam_min) / (d - lam_min), spec_.method)


def transitivity_bound(clique_size: int, N: int) -> Fraction:
    """alpha <= N / omega for vertex-transitive graphs."""
    if not 1 <= clique_size <= N:
        raise ValueError(f"need 1 <= clique_size <= N, got {clique_size}, {N}")
    return Fraction(N, clique_size)


@dataclass
class TheoremReport:
    k: int
    n: int
    lambda0: Fraction
    lambda1: Fraction
    lambda2: Fraction | None
    lambda3: Fraction | None
    tail_ok: bool
    tail_inequality_ok: bool | None
    hoffman_value: Fraction
    target: int
    construction_size: int
    construction_checked: bool
    method: str
    failures: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return (
            not self.failures
            and self.tail_ok
            and self.hoffman_value == self.target == self.construction_size
        )

    def to_json(self) -> dict:
        opt = lambda x: None if x is None else fraction_str(x)  # noqa: E731
        return {
            "k": self.k,
            "n": self.n,
            "lambda0": fraction_str(self.lambda0),
            "lambda1": fraction_str(self.lambda1),
            "lambda2": opt(self.lambda2),
            "lambda3": opt(self.lambda3),
            "tail_ok": self.tail_ok,
            "tail_inequality_ok": self.tail_inequality_ok,
            "hoffman_value": fraction_str(self.hoffman_value),
            "target": self.target,
            "construction_size": self.construction_size,
            "construction_checked": self.construction_checked,
            "method": self.method,
            "failures": self.failures,
            "verdict": self.verdict,
        }


def _construction(n: int, k: int, failures: list[str]) -> tuple[int, bool]:
    size = canonical_family_size(n, k)
    if size > FAMILY_CAP:
        return size, False
    fam = canonical_family(n, k, 0, 1)
    ok, pair = is_independent(fam, 1)
    if not ok:
        failures.append(f"canonical family not independent: {pair}")
    if len(fam.members) != size:
        failures.append(f"canonical family has {len(fam.members)} members, expected {size}")
    return len(fam.members), True


def verify_theorem(k: int) -> TheoremReport:
    """Certify alpha(J(k^2-k+1, k, 1)) = C(k^2-k-1, k-2) via the ratio bound."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    n = k * k - k + 1
    target = binomial(n - 2, k - 2)
    spec = ProfileMatrixSpec.delta(n, k, 1)
    failures: list[str] = []
    construction_size, checked = _construction(n, k, failures)

    if k == 2:
        # J(3,2,1) has a single non-trivial class; lambda_2, lambda_3 do not exist
        sp = dense_spectrum(spec)
        report = _report_from_spectrum(spec, sp)
        ratio = report.ratio
        if ratio != Fraction(1, n):
            failures.append(f"ratio {ratio} != 1/{n}")
        return TheoremReport(
            k, n, sp.lambdas[0], sp.lambdas[-1], None, None,
            tail_ok=min(sp.lambdas[1:]) == sp.lambdas[-1],
            tail_inequality_ok=None,
            hoffman_value=report.bound,
            target=target,
            construction_size=construction_size,
            construction_checked=checked,
            method="dense",
            failures=failures,
        )

    sp = spectrum(spec)
    lam = sp.lambdas
    C = binomial

    lambda0 = Fraction(k * C(n - k, k - 1))
    lambda1 = Fraction(k * C(n - k - 1, k - 1) - (k - 1) * C(n - k, k - 1))
    lambda2 = Fraction(-k * C(n - k - 2, k - 2) + (k - 2) * C(n - k - 1, k - 2))
    common = Fraction(-C(n - k, k - 1), k - 1)
    for name, closed, j in (("lambda0", lambda0, 0), ("lambda1", lambda1, 1), ("lambda2", lambda2, 2)):
        if closed != lam[j]:
            failures.append(f"{name}: closed form {closed} != spectrum value {lam[j]}")
    if not lambda1 == lambda2 == common:
        failures.append(f"lambda1={lambda1}, lambda2={lambda2}, expected both {common}")

    if k >= 4:
        lambda3 = Fraction(2 * k * k - 3 * k - 3, k * k - 3 * k + 2) * C(n - k - 3, k - 3)
    else:
        lambda3 = Fraction(k * C(n - k - 3, k - 3) - (k - 3) * C(n - k - 2, k - 3))
    if lambda3 != lam[3]:
        failures.append(f"lambda3: closed form {lambda3} != spectrum value {lam[3]}")
    if not lambda3 > 0:
        failures.append(f"lambda3 = {lambda3} is not positive")

    # exact: every lambda_j, j >= 3, lies strictly above lambda1 = lambda2
    offenders = [(j, lam[j]) for j in range(3, k + 1) if lam[j] <= lam[1]]
    tail_ok = not offenders and lam[1] == lam[2] == min(lam[1:])
    if offenders:
        failures.append(f"eigenvalues at or below lambda1: {offenders}")

    cap = k * C(n - k, k - 3)
    bad_tail = [(j, lam[j]) for j in range(4, k + 1) if abs(lam[j]) > cap]
    tail_inequality_ok = not bad_tail
    if bad_tail:
        failures.append(f"|lambda_j| > k*C(n-k,k-3) = {cap} at {bad_tail}")

    report = _report_from_spectrum(spec, sp)
    if report.lambda_min != common:
        failures.append(f"lambda_min {report.lambda_min} != {common}")
    if report.ratio != Fraction(1, n):
        failures.append(f"ratio {report.ratio} != 1/{n}")

    return TheoremReport(
        k, n, lambda0, lambda1, lambda2, lambda3,
        tail_ok=tail_ok,
        tail_inequality_ok=tail_inequality_ok,
        hoffman_value=report.bound,
        target=target,
        construction_size=construction_size,
        construction_checked=checked,
        method="closed-form",
        failures=failures,
    )
