"""Closed 3-braids in Murasugi normal form ``(s1 s2)^(3n) * w``.

``w`` is one of
  type 1: ``s1^a1 s2^-b1 ... s1^ak s2^-bk`` with all ``a_i, b_i > 0``;
  type 2: ``s2^k``;
  type 3: ``s1^m s2^-1`` with ``m`` in {-1, -2, -3}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import BraidWord
from .errors import DiagramError


@dataclass(frozen=True)
class Type1:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        if not pairs or any(a <= 0 or b <= 0 for a, b in pairs):
            raise DiagramError("type 1 needs at least one pair, all entries positive")
        object.__setattr__(self, "pairs", pairs)

    @property
    def excess(self) -> int:
        """sum(a_i - b_i)."""
        return sum(a - b for a, b in self.pairs)


@dataclass(frozen=True)
class Type2:
    k: int


@dataclass(frozen=True)
class Type3:
    m: int

    def __post_init__(self) -> None:
        if self.m not in (-1, -2, -3):
            raise DiagramError("type 3 needs m in {-1, -2, -3}")


@dataclass(frozen=True)
class MurasugiNormalForm:
    n: int
    variant: Type1 | Type2 | Type3


def normal_form_word(nf: MurasugiNormalForm) -> BraidWord:
    full_twist = [1, 2] * (3 * nf.n) if nf.n >= 0 else [-2, -1] * (-3 * nf.n)
    v = nf.variant
    if isinstance(v, Type1):
        tail = [x for a, b in v.pairs for x in [1] * a + [-2] * b]
    elif isinstance(v, Type2):
        tail = [2 if v.k > 0 else -2] * abs(v.k)
    else:
        tail = [-1] * -v.m + [-2]
    return BraidWord(tuple(full_twist + tail), 3)


def classify(nf: MurasugiNormalForm) -> str:
    """``"knot"`` or ``"link"`` for the closure."""
    if isinstance(nf.variant, Type2):
        return "link"
    if isinstance(nf.variant, Type3):
        return "link" if nf.variant.m == -2 else "knot"
    word = normal_form_word(nf)
    if not word.letters:
        return "link"
    return "knot" if word.is_knot() else "link"


def _require_type1_knot(nf: MurasugiNormalForm) -> Type1:
    if not isinstance(nf.variant, Type1):
        raise DiagramError("formula applies to type 1 normal forms only")
    if classify(nf) != "knot":
        raise DiagramError("closure is a link, not a knot")
    return nf.variant


def erle_signature(nf: MurasugiNormalForm) -> int:
    v = _require_type1_knot(nf)
    return -4 * nf.n - v.excess


def greene_s(nf: MurasugiNormalForm) -> tuple[int, int]:
    """``(s, 2*tau)``; the two agree for these knots."""
    v = _require_type1_knot(nf)
    sigma0 = -v.excess
    if nf.n > 0:
        s = 6 * nf.n - 2 - sigma0
    elif nf.n == 0:
        s = -sigma0
    else:
        s = 6 * nf.n + 2 - sigma0
    return s, s


# -- torus knots T(3, k) ------------------------------------------------------


@dataclass(frozen=True)
class TorusParams:
    """The torus knot T(3, k), with ``|k| = 6 * twists + remainder``."""

    k: int

    def __post_init__(self) -> None:
        if self.k % 3 == 0:
            raise DiagramError(f"T(3,{self.k}) is a link")

    @property
    def twists(self) -> int:
        return abs(self.k) // 6

    @property
    def remainder(self) -> int:
        return abs(self.k) % 6

    def word(self) -> BraidWord:
        return BraidWord(tuple([1, 2] * self.k if self.k > 0 else [-2, -1] * -self.k), 3)


@dataclass(frozen=True)
class TorusInvariants:
    two_tau: int
    s: int
    sigma: int


def torus_invariants(p: TorusParams) -> TorusInvariants:
    k = abs(p.k)
    s = 2 * k - 2
    sigma = -8 * p.twists - 2 * p.remainder + 2
    if p.k < 0:
        return TorusInvariants(-s, -s, -sigma)
    return TorusInvariants(s, s, sigma)


def torus_params(nf: MurasugiNormalForm) -> TorusParams:
    """The torus knot whose closure a type 3 knot form gives."""
    if not isinstance(nf.variant, Type3) or nf.variant.m == -2:
        raise DiagramError("only type 3 knots with m in {-1, -3} are torus knots")
    # s1^-1 s2^-1 ~ (s1 s2)^-1 and s1^-3 s2^-1 ~ (s1 s2)^-2 up to conjugacy
    return TorusParams(3 * nf.n - (1 if nf.variant.m == -1 else 2))


def turaev_genus_statement(target: MurasugiNormalForm | TorusParams) -> frozenset[int] | None:
    """Known Turaev genus: a one-element set when exact, two candidates, or None."""
    if isinstance(target, MurasugiNormalForm) and isinstance(target.variant, Type3):
        target = torus_params(target)
    if isinstance(target, TorusParams):
        if target.remainder in (1, 2):
            return frozenset({2 * target.twists})
        return frozenset({2 * target.twists + 1})
    if isinstance(target.variant, Type1):
        _require_type1_knot(target)
        n = abs(target.n)
        return frozenset({0}) if n == 0 else frozenset({n - 1, n})
    return None


# -- text syntax ----------------------------------------------------------------


def parse_normal_form(text: str) -> MurasugiNormalForm:
    """Parse ``n=<int>; type=1; pairs=(a1,b1),(a2,b2)`` (or ``type=2; k=..``, ``type=3; m=..``)."""
    fields = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise DiagramError(f"malformed normal-form field {part.strip()!r}")
        fields[key.strip().lower()] = value.strip()
    try:
        n = int(fields.get("n", "0"))
        kind = int(fields["type"])
        if kind == 1:
            found = re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", fields["pairs"])
            if not found:
                raise DiagramError("type 1 needs pairs=(a,b),...")
            return MurasugiNormalForm(n, Type1(tuple((int(a), int(b)) for a, b in found)))
        if kind == 2:
            return MurasugiNormalForm(n, Type2(int(fields["k"])))
        if kind == 3:
            return MurasugiNormalForm(n, Type3(int(fields["m"])))
    except KeyError as exc:
        raise DiagramError(f"missing normal-form field {exc.args[0]!r}") from None
    except ValueError as exc:
        if isinstance(exc, DiagramError):
            raise
        raise DiagramError(f"malformed normal form {text!r}") from None
    raise DiagramError(f"unknown normal-form type {kind}")
