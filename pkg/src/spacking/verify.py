"""Checking S-packing colorings, periodic over Z or on a finite host."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Hashable, Sequence, Union

from .core import (
    CirculantSpec,
    DistanceOracle,
    DistanceSpec,
    HtGadget,
    WidthSequence,
    as_oracle,
)


class PaletteError(ValueError):
    """A coloring uses a color that has no width in S."""


@dataclass(frozen=True)
class PeriodicColoring:
    """f(i) = word[i mod p]; colors are 1-based."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(c) for c in self.word)
        if not word:
            raise ValueError("a periodic coloring needs period >= 1")
        if min(word) < 1:
            raise ValueError("colors are 1-based")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "PeriodicColoring":
        return cls(parse_word(text))

    @property
    def period(self) -> int:
        return len(self.word)

    @property
    def k(self) -> int:
        return max(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i % len(self.word)]

    def rotate(self, shift: int) -> "PeriodicColoring":
        s = shift % self.period
        return PeriodicColoring(self.word[s:] + self.word[:s])

    def compact(self) -> str | None:
        if self.k > 9:
            return None
        return "".join(map(str, self.word))

    def canonical(self) -> str:
        return ",".join(map(str, self.word))

    def __str__(self) -> str:
        return self.compact() or self.canonical()


def parse_word(text: str) -> tuple[int, ...]:
    """Compact digits ("11223") or comma-separated integers ("1,12,3")."""
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(",") if x.strip())
    if not text.isdigit():
        raise ValueError(f"not a color word: {text!r}")
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class Window:
    """The integers lo..hi of G(Z, D), with true G(Z, D) distances."""

    spec: DistanceSpec
    lo: int
    hi: int

    @property
    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}] of G(Z,{{{','.join(map(str, self.spec.generators))}}})"


Host = Union[CirculantSpec, HtGadget, Window]


@dataclass
class FiniteColoring:
    host: Host
    assignment: dict[Hashable, int]

    def __post_init__(self) -> None:
        missing = [v for v in host_vertices(self.host) if v not in self.assignment]
        if missing:
            raise ValueError(f"coloring is not total; first uncolored vertex {missing[0]}")

    @classmethod
    def from_sequence(cls, host: Host, colors: Sequence[int]) -> "FiniteColoring":
        return cls(host, dict(zip(host_vertices(host), colors)))

    def colors(self) -> list[int]:
        return [self.assignment[v] for v in host_vertices(self.host)]


def host_vertices(host: Host) -> Sequence[Hashable]:
    if isinstance(host, CirculantSpec):
        return range(host.n)
    if isinstance(host, HtGadget):
        return host.vertices
    return host.vertices


@dataclass(frozen=True)
class Violation:
    u: Hashable
    v: Hashable
    color: int
    width: int
    distance: int

    def to_json(self) -> dict:
        rec = asdict(self)
        for key in ("u", "v"):
            if isinstance(rec[key], tuple):
                rec[key] = list(rec[key])
        return rec


def _check_palette(colors, S: WidthSequence) -> None:
    top = max(colors)
    if top > len(S):
        raise PaletteError(f"color {top} used but S has only {len(S)} widths")


def verify_periodic(
    coloring: PeriodicColoring,
    spec: DistanceSpec | DistanceOracle | int,
    S: WidthSequence,
) -> Violation | None:
    """Return None if the periodic coloring is an S-packing of G(Z, D), else the least violation.

    Shift invariance means only pairs (x, x + g) with x in [0, p) need checking,
    and g ranges over the finite conflict offsets of the color's width.
    """
    oracle = as_oracle(spec)
    word = coloring.word
    p = len(word)
    _check_palette(word, S)
    offsets = {a: oracle.offsets(a) for a in set(S.widths[: coloring.k])}
    for x in range(p):
        c = word[x]
        a = S.width(c)
        for g in offsets[a]:
            if word[(x + g) % p] == c:
                return Violation(x, x + g, c, a, oracle.distance(g))
    return None


def _host_distance_fn(host: Host):
    if isinstance(host, CirculantSpec):
        dist0 = host.distances_from_zero()
        n = host.n
        return lambda u, v: dist0[(v - u) % n]
    if isinstance(host, HtGadget):
        table = host.distances()
        return lambda u, v: table[u].get(v, float("inf"))
    oracle = as_oracle(host.spec)
    return lambda u, v: oracle.distance(v - u)


def verify_finite(coloring: FiniteColoring, S: WidthSequence) -> Violation | None:
    """Return None if no two same-colored vertices sit within their width, else the least violation.

    Window hosts use true G(Z, D) distances between the integers; H_t uses its
    own internal distances.
    """
    host = coloring.host
    verts = list(host_vertices(host))
    cols = [coloring.assignment[v] for v in verts]
    _check_palette(cols, S)
    dist = _host_distance_fn(host)

    if isinstance(host, Window):
        oracle = as_oracle(host.spec)
        offsets = {a: oracle.offsets(a) for a in set(S.widths)}
        col = coloring.assignment
        for u in verts:
            c = col[u]
            a = S.width(c)
            for g in offsets[a]:
                v = u + g
                if v > host.hi:
                    break
                if col[v] == c:
                    return Violation(u, v, c, a, oracle.distance(g))
        return None

    if isinstance(host, CirculantSpec):
        n = host.n
        dist0 = host.distances_from_zero()
        near = {a: [o for o in range(1, n) if dist0[o] <= a] for a in set(S.widths)}
        for u in range(n):
            c = cols[u]
            a = S.width(c)
            best = None
            for o in near[a]:
                v = (u + o) % n
                if v > u and cols[v] == c and (best is None or v < best):
                    best = v
            if best is not None:
                return Violation(u, best, c, a, dist(u, best))
        return None

    for x in range(len(verts)):
        c = cols[x]
        a = S.width(c)
        for y in range(x + 1, len(verts)):
            if cols[y] == c:
                d = dist(verts[x], verts[y])
                if d <= a:
                    return Violation(verts[x], verts[y], c, a, d)
    return None


def violations_json(result: Violation | None) -> list[dict]:
    return [] if result is None else [result.to_json()]

