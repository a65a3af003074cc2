"""Diagram bounds on 2*tau, s and -sigma, and the resulting Turaev genus bounds.

All quantities are doubled where they could be half-integers, so every
value here is an exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, s_a, s_b
from .errors import DiagramError


@dataclass(frozen=True)
class ConcordanceInterval:
    """Closed interval containing 2*tau(K), s(K) and -sigma(K)."""

    lower: int
    upper: int

    def __contains__(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    @property
    def width(self) -> int:
        return self.upper - self.lower


@dataclass(frozen=True)
class TuraevLowerBound:
    """Each field is None when the invariant it needs was not supplied."""

    from_tau_sigma: int | None
    from_s_sigma: int | None
    from_tau_s: int | None

    @property
    def best(self) -> int | None:
        known = [v for v in (self.from_tau_sigma, self.from_s_sigma, self.from_tau_s) if v is not None]
        return max(known) if known else None


def concordance_interval(diagram: Diagram) -> ConcordanceInterval:
    return ConcordanceInterval(
        s_b(diagram) - diagram.n_minus - 1,
        1 + diagram.n_plus - s_a(diagram),
    )


def _half(value: int, what: str) -> int:
    if value % 2:
        raise DiagramError(f"{what} is odd; not a knot invariant")
    return value // 2


def turaev_lower_bound(two_tau: int | None, s: int | None, sigma: int) -> TuraevLowerBound:
    """Lower bounds on Turaev genus from 2*tau, s and sigma of a knot."""
    for value, name in ((two_tau, "2*tau"), (s, "s"), (sigma, "sigma")):
        if value is not None:
            _half(value, name)
    return TuraevLowerBound(
        from_tau_sigma=None if two_tau is None else abs(two_tau + sigma) // 2,
        from_s_sigma=None if s is None else abs(s + sigma) // 2,
        from_tau_s=None if two_tau is None or s is None else abs(two_tau - s) // 2,
    )


def unknotting_lower_bound(diagram: Diagram) -> int | None:
    """Lower bound on the unknotting number, or None when neither hypothesis holds."""
    candidates = [
        value for value in (s_b(diagram) - diagram.n_minus - 1, s_a(diagram) - diagram.n_plus - 1)
        if value >= 0
    ]
    if not candidates:
        return None
    return max(-(-value // 2) for value in candidates)
