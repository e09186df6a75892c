"""Bounds on the d-distance chromatic number of G_t, with certificates.

Lower bounds come from runs of consecutive integers that are pairwise within
distance d (a clique in the d-th power of G_t); upper bounds are realized by a
first-fit greedy coloring whose output is re-verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import DistanceSpec, WidthSequence, as_oracle
from .verify import FiniteColoring, Window, verify_finite


@dataclass(frozen=True)
class CliqueCertificate:
    t: int
    d: int
    vertices: range
    max_distance: int

    def to_json(self) -> dict:
        return {
            "kind": "clique",
            "t": self.t,
            "d": self.d,
            "value": len(self.vertices),
            "witness": {
                "vertices": [self.vertices.start, self.vertices.stop - 1],
                "max_distance": self.max_distance,
            },
        }


@dataclass
class GreedyTranscript:
    t: int
    widths: WidthSequence
    horizon: int
    order: str
    colors_used: int
    coloring: FiniteColoring = field(repr=False)

    def to_json(self) -> dict:
        return {
            "kind": "greedy",
            "t": self.t,
            "S": list(self.widths.widths),
            "value": self.colors_used,
            "witness": {"transcript": {"order": self.order, "horizon": self.horizon,
                                       "colors_used": self.colors_used}},
        }


@dataclass
class BoundResult:
    kind: str  # "lower" or "upper"
    t: int
    d: int
    value: int
    certificate: CliqueCertificate | GreedyTranscript | None = None
    hypothesis_met: bool = True

    @property
    def certified(self) -> bool:
        cert = self.certificate
        if self.kind == "lower":
            return isinstance(cert, CliqueCertificate) and len(cert.vertices) == self.value
        return isinstance(cert, GreedyTranscript) and cert.colors_used <= self.value

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "t": self.t,
            "d": self.d,
            "value": self.value,
            "hypothesis_met": self.hypothesis_met,
            "certified": self.certified,
        }
        if self.certificate is not None:
            out["witness"] = self.certificate.to_json()["witness"]
        return out


def lb_formula(t: int, d: int) -> int:
    return 1 + t * (d - (t - 3) // 2)


def clique_check(t: int, d: int, n: int) -> tuple[bool, CliqueCertificate | None]:
    """Are 0, 1, ..., n-1 pairwise within distance d in G_t?

    By shift invariance the pair (x, y) only depends on y - x, so it suffices
    to look at the gaps 1..n-1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    oracle = as_oracle(DistanceSpec.canonical(t))
    worst = 0
    for g in range(1, n):
        dg = oracle.distance(g)
        if dg > d:
            return False, None
        worst = max(worst, dg)
    return True, CliqueCertificate(t, d, range(n), worst)


def lb_ddist(t: int, d: int) -> BoundResult:
    DistanceSpec.canonical(t)
    value = lb_formula(t, d)
    result = BoundResult("lower", t, d, value, hypothesis_met=d >= (t + 1) // 2)
    if value >= 1:
        ok, cert = clique_check(t, d, value)
        if ok:
            result.certificate = cert
    return result


def ub_formula(t: int, d: int) -> int:
    if 2 * d <= t + 1:
        return 1 + d * (d + 1)
    num = -t * t + 2 * t + 7
    assert num % 4 == 0, f"non-integral upper bound for t={t}"
    return t * d + num // 4


def greedy_order(t: int, horizon: int):
    """Blocks of t: 0..t-1, then -1..-t, then t..2t-1, then -t-1..-2t, ...

    Covers [-horizon, horizon); the last block on each side is clipped.
    """
    right, left = 0, -1
    while right < horizon or left >= -horizon:
        for x in range(right, min(right + t, horizon)):
            yield x
        right += t
        for x in range(left, max(left - t, -horizon - 1), -1):
            yield x
        left -= t


def greedy_firstfit(t: int, S: WidthSequence | int, horizon: int) -> GreedyTranscript:
    """First-fit coloring of [-horizon, horizon) in alternating blocks of t.

    Each vertex gets the least color c such that no already colored vertex of
    color c lies within distance width(c). With a constant width d pass an int.
    Colors beyond len(S) reuse the last width.
    """
    spec = DistanceSpec.canonical(t)
    if horizon < t:
        raise ValueError("horizon must be >= t")
    oracle = as_oracle(spec)
    if isinstance(S, int):
        widths = WidthSequence((S,))
    else:
        widths = S
    reach = max(widths.widths)
    near = [(g, oracle.distance(g)) for g in oracle.offsets(reach)]

    def width(c: int) -> int:
        return widths.widths[min(c, len(widths)) - 1]

    color: dict[int, int] = {}
    for x in greedy_order(t, horizon):
        blocked = set()
        for g, dg in near:
            for y in (x - g, x + g):
                c = color.get(y)
                if c is not None and dg <= width(c):
                    blocked.add(c)
        c = 1
        while c in blocked:
            c += 1
        color[x] = c

    used = max(color.values())
    full = widths.prefix(used)
    coloring = FiniteColoring(Window(spec, -horizon, horizon - 1), color)
    bad = verify_finite(coloring, full)
    if bad is not None:
        raise AssertionError(f"greedy produced an invalid coloring: {bad}")
    return GreedyTranscript(t, full, horizon, f"blocks of {t}, alternating right/left from 0",
                            used, coloring)


def ub_ddist(t: int, d: int, horizon: int | None = None) -> BoundResult:
    """Closed-form upper bound; with a horizon, also runs the greedy as a witness."""
    DistanceSpec.canonical(t)
    if d < 1:
        raise ValueError("d must be >= 1")
    result = BoundResult("upper", t, d, ub_formula(t, d))
    if horizon is not None:
        result.certificate = greedy_firstfit(t, d, horizon)
    return result
