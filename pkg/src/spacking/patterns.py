"""Explicit periodic colorings of G_t = G(Z, {2, t}).

Every constructor checks its own output with :func:`verify_periodic` before
returning, so a returned :class:`Pattern` is always a valid S-packing coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ConstructionError, DistanceSpec, WidthSequence
from .verify import PeriodicColoring, verify_periodic

FAMILIES = ("chrom3", "p1122", "p12222", "ddist", "dist2")

G3_WORD = "1123411562113451162311456"


@dataclass(frozen=True)
class Pattern:
    family: str
    t: int
    coloring: PeriodicColoring
    widths: WidthSequence
    d: int | None = None

    @property
    def k(self) -> int:
        return len(self.widths)

    @property
    def period(self) -> int:
        return self.coloring.period

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "t": self.t,
            "d": self.d,
            "k": self.k,
            "S": list(self.widths.widths),
            "period": self.period,
            "word": self.coloring.canonical(),
        }


def _odd_t(t: int) -> int:
    DistanceSpec.canonical(t)  # raises on even / small t
    return t


def _digits(text: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in text)


def _checked(family: str, t: int, word, widths: WidthSequence, d: int | None = None) -> Pattern:
    coloring = PeriodicColoring(tuple(word))
    bad = verify_periodic(coloring, DistanceSpec.canonical(t), widths)
    if bad is not None:
        raise ConstructionError(f"{family} pattern for t={t} fails verification: {bad}")
    return Pattern(family, t, coloring, widths, d)


def chrom3_pattern(t: int) -> Pattern:
    """Proper 3-coloring: (1122)^k 132 for t = 4k+1, (1122)^k 3 for t = 4k-1."""
    _odd_t(t)
    if t % 4 == 1:
        word = "1122" * ((t - 1) // 4) + "132"
    else:
        word = "1122" * ((t + 1) // 4) + "3"
    return _checked("chrom3", t, _digits(word), WidthSequence((1, 1, 1)))


def p1122_pattern(t: int) -> Pattern:
    _odd_t(t)
    if t % 4 == 3:
        k = (t + 1) // 4
        word = "1122" * k + "3" + "1122" * k + "4"
    else:
        k = (t - 1) // 4
        word = "1122" * k + "132" + "1122" * k + "142"
    return _checked("p1122", t, _digits(word), WidthSequence((1, 1, 2, 2)))


# line index i (mod 4), spiral index j (mod 4) -> color, for the leftover vertices
_SPIRAL_TABLE = {
    (1, 1): 5, (1, 3): 3,
    (2, 2): 2, (2, 0): 4,
    (3, 1): 3, (3, 3): 5,
    (0, 2): 4, (0, 0): 2,
}


def spiral_color(t: int, n: int) -> int:
    """Color of integer n in the 5-coloring for t = 4k+1, k >= 2.

    n is written as 2i + jt with 0 <= i < t, i.e. i = n * (t+1)/2 mod t.
    """
    i = (n * (t + 1) // 2) % t
    j = (n - 2 * i) // t
    if i == 0:
        return (2, 3, 4, 5)[j % 4]
    if (i % 2 == 1) == (j % 2 == 0):
        return 1
    return _SPIRAL_TABLE[(i % 4, j % 4)]


def p12222_pattern(t: int) -> Pattern:
    _odd_t(t)
    if t == 3:
        return _checked("p12222", t, _digits(G3_WORD), WidthSequence((1, 2, 2, 2, 2, 2)))
    S = WidthSequence((1, 2, 2, 2, 2))
    if t == 5:
        word = _digits("11221331144155")
    elif t % 4 == 1:
        word = tuple(spiral_color(t, n) for n in range(4 * t))
    elif t % 3:
        word = _digits("123145")
    else:
        v = 2 * ((t + 1) // 4 - 1) // 3
        word = _digits("1" + "122133" * v + "1" + "144155" * v)
    return _checked("p12222", t, word, S)


def ddist_length(t: int, d: int) -> int:
    """Palette size of the consecutive-block d-distance coloring."""
    if t == 3:
        return 3 * d + 1
    return 1 + t * (d - (t - 3) // 2)


def ddist_pattern(t: int, d: int) -> Pattern:
    _odd_t(t)
    if t == 3 and d < 2 or t >= 5 and d < t - 3:
        raise ValueError(f"ddist pattern needs d >= 2 (t=3) or d >= t-3 (t>=5); got t={t}, d={d}")
    ell = ddist_length(t, d)
    return _checked("ddist", t, range(1, ell + 1), WidthSequence.constant(d, ell), d)


def dist2_word(t: int) -> tuple[int, ...]:
    if t == 3:
        return tuple(range(1, 8))
    if t % 10 in (1, 9):
        return (1, 2, 3, 4, 5)
    if t in (5, 7, 13):
        return (1, 2, 3, 4, 5, 6)
    a, ell = divmod(t + 1, 5)
    return (1, 2, 3, 4, 5) * (a - ell) + (1, 2, 3, 4, 5, 6) * ell


def dist2_pattern(t: int) -> Pattern:
    _odd_t(t)
    word = dist2_word(t)
    return _checked("dist2", t, word, WidthSequence.constant(2, max(word)), 2)


def build_pattern(family: str, t: int, d: int | None = None) -> Pattern:
    if family == "chrom3":
        return chrom3_pattern(t)
    if family == "p1122":
        return p1122_pattern(t)
    if family == "p12222":
        return p12222_pattern(t)
    if family == "dist2":
        return dist2_pattern(t)
    if family == "ddist":
        if d is None:
            raise ValueError("the ddist family needs d")
        return ddist_pattern(t, d)
    raise ValueError(f"unknown pattern family {family!r}; choose from {', '.join(FAMILIES)}")
