"""Graph models for integer distance graphs G(Z, {2, t}), circulants and the H_t gadget.

Everything downstream asks the :class:`DistanceOracle` for exact hop counts
between integers. The oracle grows a breadth-first ball around 0 level by
level; a path of length ``L`` never leaves ``[-L*max_gen, L*max_gen]``, so the
level-limited search is exact without any explicit window.
"""

from __future__ import annotations

import math
import threading
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable

MAX_T = 10**6
MAX_D = 10**4

UNREACHABLE = math.inf


class ConstructionError(RuntimeError):
    """A construction failed its own verification (a bug, never a user error)."""


@dataclass(frozen=True)
class DistanceSpec:
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens or gens[0] < 1:
            raise ValueError("generators must be a nonempty set of positive integers")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def canonical(cls, t: int) -> "DistanceSpec":
        """D = {2, t} with t odd and 3 <= t <= 10**6."""
        t = int(t)
        if t < 3 or t % 2 == 0:
            raise ValueError(f"t must be an odd integer >= 3, got {t}")
        if t > MAX_T:
            raise ValueError(f"t must be <= {MAX_T}, got {t}")
        return cls((2, t))

    @classmethod
    def general(cls, generators: Iterable[int]) -> "DistanceSpec":
        """Escape hatch for arbitrary generator sets (even t, more than two steps, ...)."""
        return cls(tuple(generators))

    @property
    def max_gen(self) -> int:
        return self.generators[-1]

    @property
    def t(self) -> int | None:
        if len(self.generators) == 2 and self.generators[0] == 2:
            return self.generators[1]
        return None

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self.generators)


class DistanceOracle:
    """Exact, memoized d_G(0, g) for G = G(Z, D)."""

    def __init__(self, spec: DistanceSpec) -> None:
        self.spec = spec
        self._lock = threading.Lock()
        self._dist: dict[int, int] = {0: 0}
        self._frontier: list[int] = [0]
        self._level = 0

    def upper_bound(self, gap: int) -> int | None:
        """Constructive path length to ``gap`` for D = {2, t}; None for other D."""
        g = abs(gap)
        t = self.spec.t
        if t is None or t % 2 == 0:
            return None
        if g % 2 == 0:
            return g // 2
        return abs(g - t) // 2 + 1

    def _grow(self) -> None:
        # caller holds the lock
        gens = self.spec.generators
        nxt: list[int] = []
        level = self._level + 1
        for x in self._frontier:
            for s in gens:
                for y in (x + s, x - s):
                    if y not in self._dist:
                        self._dist[y] = level
                        nxt.append(y)
        self._frontier = nxt
        self._level = level

    def distance(self, gap: int) -> int | float:
        g = abs(int(gap))
        d = self._dist.get(g)
        if d is not None:
            return d
        if g % self.spec.gcd:
            return UNREACHABLE
        with self._lock:
            while g not in self._dist:
                self._grow()
            return self._dist[g]

    def ball(self, radius: int) -> dict[int, int]:
        """All non-negative gaps at distance <= radius, with their distances."""
        with self._lock:
            while self._level < radius:
                self._grow()
            return {g: d for g, d in self._dist.items() if g >= 0 and d <= radius}

    def offsets(self, width: int) -> list[int]:
        return sorted(g for g in self.ball(width) if g > 0)


@lru_cache(maxsize=None)
def oracle_for(spec: DistanceSpec) -> DistanceOracle:
    return DistanceOracle(spec)


def as_oracle(obj: DistanceOracle | DistanceSpec | int) -> DistanceOracle:
    if isinstance(obj, DistanceOracle):
        return obj
    if isinstance(obj, DistanceSpec):
        return oracle_for(obj)
    return oracle_for(DistanceSpec.canonical(obj))


def dist_delta(oracle: DistanceOracle | DistanceSpec | int, gap: int) -> int | float:
    """Exact graph distance between 0 and ``gap`` in G(Z, D)."""
    return as_oracle(oracle).distance(gap)


def conflict_offsets(oracle: DistanceOracle | DistanceSpec | int, width: int) -> set[int]:
    """Positive gaps g with d(0, g) <= width; all lie in [1, width * max_gen]."""
    if width < 1:
        raise ValueError("width must be >= 1")
    return set(as_oracle(oracle).offsets(width))


@dataclass(frozen=True)
class WidthSequence:
    widths: tuple[int, ...]

    def __post_init__(self) -> None:
        ws = tuple(int(a) for a in self.widths)
        if any(a < 1 for a in ws):
            raise ValueError("widths must be positive")
        if any(a > b for a, b in zip(ws, ws[1:])):
            raise ValueError(f"widths must be non-decreasing: {ws}")
        object.__setattr__(self, "widths", ws)

    @classmethod
    def constant(cls, d: int, k: int) -> "WidthSequence":
        return cls((d,) * k)

    @classmethod
    def parse(cls, text: str) -> "WidthSequence":
        """``"1,1,2,2"``; ``"2*5"`` expands to five 2s; forms may be mixed."""
        out: list[int] = []
        for part in text.replace(" ", "").split(","):
            if not part:
                raise ValueError(f"empty entry in width sequence {text!r}")
            if "*" in part:
                a, n = part.split("*", 1)
                out.extend([int(a)] * int(n))
            else:
                out.append(int(part))
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.widths)

    def width(self, color: int) -> int:
        """Width of a 1-based color."""
        return self.widths[color - 1]

    def prefix(self, k: int) -> "WidthSequence":
        """First k widths; past the end the last width repeats (the tail of S)."""
        if k <= len(self.widths):
            return WidthSequence(self.widths[:k])
        return WidthSequence(self.widths + (self.widths[-1],) * (k - len(self.widths)))

    def __str__(self) -> str:
        return ",".join(map(str, self.widths))


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        steps = tuple(sorted(set(int(s) for s in self.steps)))
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if not steps or steps[0] < 1 or steps[-1] >= self.n:
            raise ValueError("steps must lie in [1, n)")
        object.__setattr__(self, "steps", steps)

    @property
    def connected(self) -> bool:
        return reduce(math.gcd, self.steps, self.n) == 1

    def distances_from_zero(self) -> tuple[int | float, ...]:
        return _circulant_bfs(self.n, self.steps)

    def __str__(self) -> str:
        return f"C_{self.n}({','.join(map(str, self.steps))})"


@lru_cache(maxsize=256)
def _circulant_bfs(n: int, steps: tuple[int, ...]) -> tuple[int | float, ...]:
    dist: list[int | float] = [UNREACHABLE] * n
    dist[0] = 0
    q = deque([0])
    while q:
        x = q.popleft()
        for s in steps:
            for y in ((x + s) % n, (x - s) % n):
                if dist[y] == UNREACHABLE:
                    dist[y] = dist[x] + 1
                    q.append(y)
    return tuple(dist)


def dist_circulant(spec: CirculantSpec, u: int, v: int) -> int | float:
    """Hop distance in C_n(steps); ``UNREACHABLE`` (inf) across components."""
    if not (0 <= u < spec.n and 0 <= v < spec.n):
        raise ValueError(f"vertices must lie in [0, {spec.n})")
    return spec.distances_from_zero()[(v - u) % spec.n]


Vertex = tuple[int, int]


@dataclass(frozen=True)
class HtGadget:
    """P_4 x P_t grid plus the edge (2,1)-(4,t), embedded into G_t."""

    t: int
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[Vertex, Vertex], ...]
    embedding: dict[Vertex, int] = field(hash=False, compare=False)

    def neighbors(self) -> dict[Vertex, list[Vertex]]:
        adj: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def distances(self) -> dict[Vertex, dict[Vertex, int]]:
        return _ht_distances(self)


@lru_cache(maxsize=64)
def _ht_distances(h: HtGadget) -> dict[Vertex, dict[Vertex, int]]:
    adj = h.neighbors()
    out = {}
    for s in h.vertices:
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        out[s] = dist
    return out


def ht_embedding(t: int, i: int, j: int) -> int:
    return (i - 1) * t + 2 * (t - j)


def build_ht(t: int) -> HtGadget:
    if t < 5 or t % 2 == 0:
        raise ValueError(f"H_t needs odd t >= 5, got {t}")
    verts = tuple((i, j) for i in range(1, 5) for j in range(1, t + 1))
    edges: list[tuple[Vertex, Vertex]] = []
    for i in range(1, 5):
        for j in range(1, t + 1):
            if j < t:
                edges.append(((i, j), (i, j + 1)))
            if i < 4:
                edges.append(((i, j), (i + 1, j)))
    edges.append(((2, 1), (4, t)))
    emb = {(i, j): ht_embedding(t, i, j) for i, j in verts}

    gens = {2, t}
    if len(set(emb.values())) != len(emb):
        raise ConstructionError(f"H_{t} embedding is not injective")
    for a, b in edges:
        if abs(emb[a] - emb[b]) not in gens:
            raise ConstructionError(f"H_{t} edge {a}-{b} maps to gap {abs(emb[a] - emb[b])}")
    return HtGadget(t, verts, tuple(edges), emb)

