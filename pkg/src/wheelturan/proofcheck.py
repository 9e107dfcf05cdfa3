"""Finite-grid verification of the arithmetic behind the induction on m.

Each check evaluates one inequality at one parameter point with exact
integers (or ``Fraction`` where a side is a half-integer) and returns both
sides, so a failure names the point and the numbers.

The induction step removes vertices and applies the closed form one level
down, i.e. ex(n', K_{m-1} + C_{2k-1}) for n' at least threshold(m-1, k).
At m - 1 = 1 that level is the even-wheel result with threshold 6k - 10;
both expressions are evaluated and required to agree rather than assumed.
The source text attributes the general step to the even-wheel theorem,
but only the induction hypothesis supports it, and that is what is checked.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from wheelturan.errors import InvalidParameter, RangeEmpty
from wheelturan.formula import theorem2_threshold, threshold

REQUIRED_CHECKS = (
    "degree_forcing",
    "delta_max_branch",
    "residual_threshold",
    "pmax_le",
    "deletion_edge_bound",
)
ALL_CHECKS = REQUIRED_CHECKS + ("pmax_equal",)


@dataclass(frozen=True)
class CheckResult:
    name: str
    point: dict
    lhs: int | Fraction
    rhs: int | Fraction
    passed: bool
    extra: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out = {"point": dict(self.point), "lhs": _num(self.lhs), "rhs": _num(self.rhs)}
        out.update({k: _num(v) for k, v in self.extra.items()})
        return out


@dataclass(frozen=True)
class PmaxResult:
    n: int
    m: int
    max: int
    argmax: int
    target: int
    values: dict[int, int]

    @property
    def equal(self) -> bool:
        return self.max == self.target

    @property
    def le(self) -> bool:
        return self.max <= self.target


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _target(n: int, m: int) -> int:
    return (m + 1) * n * n // (2 * (m + 2))


def _lower_level(n: int, m: int) -> int:
    """floor(m n^2 / (2(m+1))): the closed form one hub vertex down."""
    return m * n * n // (2 * (m + 1))


def lower_threshold(m: int, k: int) -> int:
    """Order threshold for K_{m-1} + C_{2k-1}; the even-wheel bound when m - 1 = 1."""
    t = threshold(m - 1, k)
    if m - 1 == 1 and t != theorem2_threshold(k):
        raise AssertionError(f"threshold(1, {k}) = {t} disagrees with 6k-10 = {theorem2_threshold(k)}")
    return t


def _require_regime(n: int, m: int, k: int) -> None:
    if m < 2 or k < 3:
        raise InvalidParameter(f"need m >= 2 and k >= 3, got m={m}, k={k}")
    if n < threshold(m, k):
        raise InvalidParameter(f"n={n} below threshold({m}, {k}) = {threshold(m, k)}")


def check_degree_forcing(n: int, m: int) -> CheckResult:
    """(n - floor(n/(m+2)) - 1) n / 2 < target + 1, forcing a vertex of degree >= n - floor(n/(m+2))."""
    if n < 1 or m < 1:
        raise InvalidParameter(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    lhs = Fraction((n - n // (m + 2) - 1) * n, 2)
    rhs = _target(n, m) + 1
    return CheckResult("degree_forcing", {"m": m, "n": n}, lhs, rhs, lhs < rhs)


def check_delta_max_branch(n: int, m: int, k: int) -> CheckResult:
    """Deleting a dominating vertex leaves too many edges at an order still in regime."""
    _require_regime(n, m, k)
    lhs = _target(n, m) + 1 - (n - 1)
    rhs = _lower_level(n - 1, m)
    edge_ok = lhs > rhs
    order_rhs = lower_threshold(m, k)
    # The source chain: n - 1 >= threshold(m, k) - 1 > threshold(m - 1, k).
    chain_ok = threshold(m, k) - 1 > order_rhs
    order_ok = n - 1 > order_rhs and chain_ok
    return CheckResult(
        "delta_max_branch",
        {"m": m, "k": k, "n": n},
        lhs,
        rhs,
        edge_ok and order_ok,
        {"order_lhs": n - 1, "order_rhs": order_rhs, "edge_ok": edge_ok, "order_ok": order_ok},
    )


def pmax_values(n: int, m: int) -> dict[int, int]:
    hi = n // (m + 2)
    if hi < 2:
        raise RangeEmpty(f"p-range [2, {hi}] is empty for n={n}, m={m}")
    return {p: p * (n - p) + _lower_level(n - p, m) for p in range(2, hi + 1)}


def check_pmax_identity(n: int, m: int) -> PmaxResult:
    """Brute-force max over 2 <= p <= floor(n/(m+2)) of p(n-p) + floor(m(n-p)^2/(2(m+1)))."""
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    values = pmax_values(n, m)
    best = max(values.values())
    argmax = min(p for p, v in values.items() if v == best)
    return PmaxResult(n, m, best, argmax, _target(n, m), values)


def check_residual_threshold(n: int, m: int, k: int) -> CheckResult:
    """n - floor(n/(m+2)) >= threshold(m-1, k), so the residual graph stays in regime."""
    _require_regime(n, m, k)
    lhs = n - n // (m + 2)
    rhs = lower_threshold(m, k)
    return CheckResult("residual_threshold", {"m": m, "k": k, "n": n}, lhs, rhs, lhs >= rhs)


def check_deletion_edge_bound(n: int, m: int, k: int, p: int) -> CheckResult:
    """target + 1 - p(n-p) > floor(m(n-p)^2/(2(m+1))) after deleting v and p-1 non-neighbours."""
    _require_regime(n, m, k)
    if not 2 <= p <= n // (m + 2):
        raise InvalidParameter(f"p={p} outside [2, {n // (m + 2)}]")
    lhs = _target(n, m) + 1 - p * (n - p)
    rhs = _lower_level(n - p, m)
    return CheckResult("deletion_edge_bound", {"m": m, "k": k, "n": n, "p": p}, lhs, rhs, lhs > rhs)


# -- grid driver -------------------------------------------------------------


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    failures: list[CheckResult] = field(default_factory=list)

    def add(self, r: CheckResult) -> None:
        if r.passed:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(r)

    def merge(self, other: CheckTally) -> None:
        self.passed += other.passed
        self.failed += other.failed
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "fail": self.failed,
            "failures": [f.to_json() for f in self.failures],
        }


@dataclass
class ProofReport:
    grid: dict
    checks: dict[str, CheckTally]

    @property
    def required_failures(self) -> int:
        return sum(t.failed for name, t in self.checks.items() if name in REQUIRED_CHECKS)

    @property
    def ok(self) -> bool:
        return self.required_failures == 0

    def to_json(self) -> dict:
        return {
            "grid": dict(self.grid),
            "per_check": {name: t.to_json() for name, t in self.checks.items()},
            "required_checks": [c for c in REQUIRED_CHECKS if c in self.checks],
            "required_failures": self.required_failures,
            "ok": self.ok,
        }


def _run_m(m: int, k_values: Sequence[int], n_window: int, checks: Sequence[str]) -> dict[str, CheckTally]:
    tallies = {c: CheckTally() for c in checks}
    for k in k_values:
        lo = threshold(m, k)
        for n in range(lo, lo + n_window + 1):
            point = {"m": m, "k": k, "n": n}
            if "degree_forcing" in tallies:
                r = check_degree_forcing(n, m)
                tallies["degree_forcing"].add(CheckResult(r.name, point, r.lhs, r.rhs, r.passed))
            if "delta_max_branch" in tallies:
                tallies["delta_max_branch"].add(check_delta_max_branch(n, m, k))
            if "residual_threshold" in tallies:
                tallies["residual_threshold"].add(check_residual_threshold(n, m, k))
            if "pmax_le" in tallies or "pmax_equal" in tallies:
                pm = check_pmax_identity(n, m)
                extra = {"argmax": pm.argmax}
                if "pmax_le" in tallies:
                    tallies["pmax_le"].add(CheckResult("pmax_le", point, pm.max, pm.target, pm.le, extra))
                if "pmax_equal" in tallies:
                    tallies["pmax_equal"].add(
                        CheckResult("pmax_equal", point, pm.max, pm.target, pm.equal, extra)
                    )
            if "deletion_edge_bound" in tallies:
                for p in range(2, n // (m + 2) + 1):
                    tallies["deletion_edge_bound"].add(check_deletion_edge_bound(n, m, k, p))
    return tallies


def _run_m_task(args):
    return _run_m(*args)


def run_grid(
    m_range: Iterable[int],
    k_range: Iterable[int],
    n_window: int = 300,
    checks: Sequence[str] | None = None,
    *,
    jobs: int = 1,
) -> ProofReport:
    """Run the selected checks at every (m, k, n[, p]) with threshold(m,k) <= n <= threshold(m,k) + n_window.

    Results are ordered by (m, k, n, p) whatever ``jobs`` is.
    """
    m_values = sorted(set(m_range))
    k_values = sorted(set(k_range))
    if not m_values or not k_values:
        raise RangeEmpty("m and k ranges must be non-empty")
    if m_values[0] < 2 or k_values[0] < 3:
        raise InvalidParameter("grid needs m >= 2 and k >= 3")
    if n_window < 0:
        raise InvalidParameter(f"n_window must be >= 0, got {n_window}")
    checks = list(ALL_CHECKS if checks is None else checks)
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise InvalidParameter(f"unknown checks: {sorted(unknown)}")
    tasks = [(m, k_values, n_window, checks) for m in m_values]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_m_task, tasks))
    else:
        parts = [_run_m(*task) for task in tasks]
    merged = {c: CheckTally() for c in checks}
    for part in parts:
        for c in checks:
            merged[c].merge(part[c])
    grid = {
        "m": m_values,
        "k": k_values,
        "n_window": n_window,
        "checks": checks,
    }
    return ProofReport(grid, merged)
