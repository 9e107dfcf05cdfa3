"""Closed-form Turán values and thresholds, in exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass

from wheelturan.errors import InvalidParameter


@dataclass(frozen=True)
class WheelParams:
    """Forbidden graph K_m + C_{2k-1} at order n (m >= 1, k >= 2)."""

    m: int
    k: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidParameter(f"m must be >= 1, got {self.m}")
        if self.k < 2:
            raise InvalidParameter(f"k must be >= 2, got {self.k}")
        if self.n < 0:
            raise InvalidParameter(f"n must be >= 0, got {self.n}")

    @property
    def t(self) -> int:
        return 2 * self.k - 1

    @property
    def value(self) -> int:
        return theorem3_value(self.n, self.m)

    @property
    def threshold(self) -> int:
        return threshold(self.m, self.k)

    @property
    def in_regime(self) -> bool:
        return self.k >= 3 and self.n >= self.threshold

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "t": self.t,
            "value": self.value,
            "threshold": self.threshold,
            "in_regime": self.in_regime,
            "construction_edges": turan_graph_size(self.n, self.m + 2),
        }


def turan_graph_edges(n: int, r: int) -> int:
    """floor((r-1) n^2 / (2r)), the classical closed form for ex(n, K_{r+1}).

    This is e(T_r(n)) only for r <= 7; use ``turan_graph_size`` for the exact count.
    """
    if r < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    return (r - 1) * n * n // (2 * r)


def turan_graph_size(n: int, r: int) -> int:
    """Exact edge count of T_r(n).

    Agrees with ``turan_graph_edges`` for r <= 7; from r = 8 on the floor form
    can exceed it (first at n = 12, r = 8: 62 against 63).
    """
    if r < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    q, s = divmod(n, r)
    return n * (n - 1) // 2 - s * (q + 1) * q // 2 - (r - s) * q * (q - 1) // 2


def theorem3_value(n: int, m: int) -> int:
    """floor((m+1) n^2 / (2(m+2))), the claimed ex(n, K_m + C_{2k-1})."""
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    return (m + 1) * n * n // (2 * (m + 2))


def threshold(m: int, k: int) -> int:
    """Smallest order 2(m+2)k - 3(m+2) - 1 covered by the closed form."""
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    return 2 * (m + 2) * k - 3 * (m + 2) - 1


def theorem2_value(n: int) -> int:
    """floor(n^2 / 3), the even-wheel value ex(n, W_{2k})."""
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    return n * n // 3


def theorem2_threshold(k: int) -> int:
    if k < 3:
        raise InvalidParameter(f"k must be >= 3, got {k}")
    return 6 * k - 10
