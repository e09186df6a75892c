"""Exact S-packing colorability by backtracking.

Hosts are circulants C_n(steps), windows {0..W} of G_t (with true G_t
distances), the H_t gadget (with its internal distances) and period-p words
over Z. All of them reduce to the same finite problem: vertices in a fixed
order, and for each vertex and each width the set of earlier vertices within
that distance, kept as an int bitmask.

Search is depth-first with colors tried in increasing order, so the first
coloring found is the lexicographically least canonical one. Colors of equal
width are interchangeable; a new color of a width class may only be opened
after all lower colors of that class are in use.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .core import CirculantSpec, DistanceSpec, HtGadget, WidthSequence, as_oracle, build_ht
from .verify import FiniteColoring, PeriodicColoring, Window, verify_finite, verify_periodic

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
SPLIT_TARGET = 64

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
TIMEOUT = "timeout"


class SoundnessError(RuntimeError):
    """A witness from the search failed independent re-verification."""


@dataclass
class SearchProblem:
    host: object
    widths: WidthSequence
    vertices: list[Hashable]
    # earlier[a][v]: bitmask of vertices u < v (search order) within distance a of v
    earlier: dict[int, list[int]]
    # forbidden[v]: bitmask over colors (bit c-1) that v can never take
    forbidden: list[int] | None = None
    params: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.widths)

    def describe(self) -> dict:
        return {"host": str(self.host), "S": list(self.widths.widths), "params": self.params}


@dataclass
class SolveOutcome:
    status: str
    k: int
    nodes: int
    witness: FiniteColoring | PeriodicColoring | None = None
    problem: dict = field(default_factory=dict)
    optimum: int | None = None
    lower: "SolveOutcome | None" = None  # exhaustive refutation at optimum - 1

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def to_json(self) -> dict:
        out: dict = {"status": self.status, "k": self.k, "nodes": self.nodes}
        if self.status == FEASIBLE and self.witness is not None:
            if isinstance(self.witness, PeriodicColoring):
                out["witness"] = self.witness.canonical()
            else:
                out["witness"] = self.witness.colors()
        elif self.status == INFEASIBLE:
            out["exhausted"] = True
        if self.optimum is not None:
            out["optimum"] = self.optimum
        if self.lower is not None:
            out["lower"] = {"k": self.lower.k, "status": self.lower.status,
                            "nodes": self.lower.nodes,
                            "exhausted": self.lower.status == INFEASIBLE}
        out["problem"] = self.problem
        return out


# ---------------------------------------------------------------- the engine

def _color_classes(widths: Sequence[int]) -> tuple[list[int], list[int]]:
    """For each color index: its class id and the first color index of that class."""
    cls, start = [], []
    for c, a in enumerate(widths):
        if c and a == widths[c - 1]:
            cls.append(cls[-1])
            start.append(start[-1])
        else:
            cls.append(len(set(cls)))
            start.append(c)
    return cls, start


def _backtrack(widths, earlier, forbidden, n, prefix, budget):
    """Complete ``prefix`` (0-based colors of the first vertices) to a full coloring.

    Returns (status, nodes, colors-or-None). ``nodes`` counts color assignments.
    """
    k = len(widths)
    cls, start = _color_classes(widths)
    nclass = (cls[-1] + 1) if k else 0
    used = [0] * nclass  # how many colors of each class are open
    count = [0] * k
    masks = [0] * k
    col = [-1] * n
    nbr = [earlier[a] for a in widths]
    # later[c][v]: vertices after v that a color-c vertex at v constrains
    later = {}
    for a in set(widths):
        rows = [[] for _ in range(n)]
        for w, m in enumerate(earlier[a]):
            u = 0
            while m:
                if m & 1:
                    rows[u].append(w)
                m >>= 1
                u += 1
        later[a] = rows
    fut = [later[a] for a in widths]
    allc = range(k)

    def wiped(v, c):
        # forward check: some later vertex near v has no color left
        for w in fut[c][v]:
            fw = forbidden[w] if forbidden else 0
            for c2 in allc:
                if not (fw >> c2) & 1 and not (nbr[c2][w] & masks[c2]):
                    break
            else:
                return True
        return False

    def place(v, c):
        col[v] = c
        masks[c] |= 1 << v
        if count[c] == 0:
            used[cls[c]] += 1
        count[c] += 1

    def unplace(v):
        c = col[v]
        col[v] = -1
        masks[c] &= ~(1 << v)
        count[c] -= 1
        if count[c] == 0:
            used[cls[c]] -= 1

    for v, c in enumerate(prefix):
        place(v, c)

    base = len(prefix)
    if base == n:
        return FEASIBLE, 0, list(col)
    nodes = 0
    nxt = [0] * n
    v = base
    while True:
        c = nxt[v]
        placed = False
        fv = forbidden[v] if forbidden else 0
        while c < k:
            # symmetry: the lowest unopened color of a class is the only new one allowed
            if count[c] == 0 and c != start[c] + used[cls[c]]:
                c += 1
                continue
            if not (fv >> c) & 1 and not (nbr[c][v] & masks[c]):
                placed = True
                break
            c += 1
        if placed:
            nodes += 1
            if nodes > budget:
                return TIMEOUT, nodes, None
            place(v, c)
            nxt[v] = c + 1
            if wiped(v, c):
                unplace(v)
                continue
            v += 1
            if v == n:
                return FEASIBLE, nodes, list(col)
            nxt[v] = 0
        else:
            nxt[v] = 0
            v -= 1
            if v < base:
                return INFEASIBLE, nodes, None
            unplace(v)


def _prefixes(widths, earlier, forbidden, n, target):
    """Canonical partial colorings of the first few vertices, in search order.

    The split depth only depends on the problem, so witnesses and node counts
    do not depend on how many workers run the pieces.
    """
    level = [()]
    depth = 0
    nodes = 0
    while depth < n and 0 < len(level) < target:
        nxt = []
        for pre in level:
            for c in _extensions(widths, earlier, forbidden, pre):
                nxt.append(pre + (c,))
                nodes += 1
        level = nxt
        depth += 1
    return level, nodes


def _extensions(widths, earlier, forbidden, pre):
    k = len(widths)
    cls, start = _color_classes(widths)
    v = len(pre)
    used_colors = set(pre)
    out = []
    for c in range(k):
        if c not in used_colors:
            opened = sum(1 for u in used_colors if cls[u] == cls[c])
            if c != start[c] + opened:
                continue
        if forbidden and (forbidden[v] >> c) & 1:
            continue
        mask = earlier[widths[c]][v]
        if any(pre[u] == c for u in range(v) if (mask >> u) & 1):
            continue
        out.append(c)
    return out


def _run_piece(args):
    widths, earlier, forbidden, n, prefix, budget = args
    return _backtrack(widths, earlier, forbidden, n, prefix, budget)


def search(problem: SearchProblem, budget: int = DEFAULT_BUDGET, threads: int = 1):
    """Decide k-colorability of ``problem`` with k = len(problem.widths).

    Returns (status, nodes, colors) with colors 1-based in problem vertex order.
    """
    widths = list(problem.widths.widths)
    n = len(problem.vertices)
    earlier = problem.earlier
    forbidden = problem.forbidden
    if n == 0:
        return FEASIBLE, 0, []
    if not widths:
        return INFEASIBLE, 0, None

    pieces, nodes = _prefixes(widths, earlier, forbidden, n, SPLIT_TARGET)
    if nodes > budget:
        return TIMEOUT, nodes, None
    jobs = [(widths, earlier, forbidden, n, list(p), budget) for p in pieces]

    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(_run_piece, jobs)
            status, nodes, colors = _fold(results, nodes, budget)
    else:
        status, nodes, colors = _fold(map(_run_piece, jobs), nodes, budget)
    if colors is not None:
        colors = [c + 1 for c in colors]
    return status, nodes, colors


def _fold(results, nodes, budget):
    # pieces are consumed in order; a piece with ``nodes`` beyond what remains
    # of the budget counts as a timeout whatever the worker reported
    for status, used, colors in results:
        if status == TIMEOUT or nodes + used > budget:
            return TIMEOUT, min(nodes + used, budget + 1), None
        nodes += used
        if status == FEASIBLE:
            return FEASIBLE, nodes, colors
    return INFEASIBLE, nodes, None


# ---------------------------------------------------------------- problem builders

def _earlier_from_pairs(n, widths, within):
    """earlier[a][v] for each distinct width, given within(u, v, a) for u < v."""
    out = {}
    for a in sorted(set(widths)):
        rows = []
        for v in range(n):
            m = 0
            for u in range(v):
                if within(u, v, a):
                    m |= 1 << u
            rows.append(m)
        out[a] = rows
    return out


def circulant_problem(spec: CirculantSpec, S: WidthSequence) -> SearchProblem:
    n = spec.n
    dist0 = spec.distances_from_zero()
    earlier = {}
    for a in sorted(set(S.widths)):
        near = [o for o in range(1, n) if dist0[o] <= a]
        rows = []
        for v in range(n):
            m = 0
            for o in near:
                u = v - o
                if u >= 0:
                    m |= 1 << u
            rows.append(m)
        earlier[a] = rows
    # a vertex within its own width of itself never happens (distance 0 < a is excluded by o >= 1)
    return SearchProblem(spec, S, list(range(n)), earlier, params={"n": n, "steps": list(spec.steps)})


def window_problem(t: int, S: WidthSequence, W: int, spec: DistanceSpec | None = None) -> SearchProblem:
    spec = spec or DistanceSpec.canonical(t)
    oracle = as_oracle(spec)
    n = W + 1
    earlier = {}
    for a in sorted(set(S.widths)):
        offs = oracle.offsets(a)
        rows = []
        for v in range(n):
            m = 0
            for g in offs:
                if g > v:
                    break
                m |= 1 << (v - g)
            rows.append(m)
        earlier[a] = rows
    host = Window(spec, 0, W)
    return SearchProblem(host, S, list(range(n)), earlier, params={"t": t, "W": W})


def ht_order(h: HtGadget) -> list:
    """Column by column: (1,1),(2,1),(3,1),(4,1),(1,2),..."""
    return sorted(h.vertices, key=lambda ij: (ij[1], ij[0]))


def ht_problem(h: HtGadget, S: WidthSequence) -> SearchProblem:
    order = ht_order(h)
    table = h.distances()
    earlier = _earlier_from_pairs(
        len(order), S.widths, lambda u, v, a: table[order[u]].get(order[v], 1 << 30) <= a
    )
    return SearchProblem(h, S, order, earlier, params={"t": h.t})


def periodic_problem(t: int, S: WidthSequence, p: int, spec: DistanceSpec | None = None) -> SearchProblem:
    """Residues 0..p-1; r and s clash at width a when some gap g = +-(s - r) mod p has d(0, g) <= a."""
    spec = spec or DistanceSpec.canonical(t)
    oracle = as_oracle(spec)
    widths = S.widths
    earlier = {}
    self_clash = {}
    for a in sorted(set(widths)):
        res = {g % p for g in oracle.offsets(a)}
        res |= {(-r) % p for r in res}
        self_clash[a] = 0 in res
        rows = []
        for v in range(p):
            m = 0
            for u in range(v):
                if (v - u) % p in res:
                    m |= 1 << u
            rows.append(m)
        earlier[a] = rows
    bad = 0
    for c, a in enumerate(widths):
        if self_clash[a]:
            bad |= 1 << c
    forbidden = [bad] * p if bad else None
    return SearchProblem(("periodic", t, p), S, list(range(p)), earlier, forbidden,
                         params={"t": t, "p": p})


# ---------------------------------------------------------------- public operations

def _finish(problem: SearchProblem, status, nodes, colors) -> SolveOutcome:
    k = problem.k
    out = SolveOutcome(status, k, nodes, problem=problem.describe())
    if status != FEASIBLE:
        return out
    host = problem.host
    if isinstance(host, tuple) and host[0] == "periodic":
        witness = PeriodicColoring(tuple(colors))
        t = host[1]
        bad = verify_periodic(witness, t, problem.widths)
    else:
        witness = FiniteColoring(host, dict(zip(problem.vertices, colors)))
        bad = verify_finite(witness, problem.widths)
    if bad is not None:
        raise SoundnessError(f"search witness fails verification: {bad}")
    out.witness = witness
    return out


def solve_problem(problem: SearchProblem, budget: int = DEFAULT_BUDGET, threads: int = 1) -> SolveOutcome:
    status, nodes, colors = search(problem, budget, threads)
    log.debug("%s k=%d: %s after %d nodes", problem.host, problem.k, status, nodes)
    return _finish(problem, status, nodes, colors)


def solve_circulant(
    spec: CirculantSpec,
    S: WidthSequence,
    k: int | None = None,
    minimize: int | None = None,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> SolveOutcome:
    """Decide k-colorability (``k=``) or find the least k <= ``minimize``.

    In minimize mode the outcome carries the witness at the optimum and, in
    ``lower``, the exhaustive refutation at optimum - 1. Palettes longer than S
    reuse S's last width.
    """
    if (k is None) == (minimize is None):
        raise ValueError("give exactly one of k and minimize")
    if spec.n > 10**4:
        raise ValueError("n is capped at 10**4")
    if k is not None:
        return solve_problem(circulant_problem(spec, S.prefix(k)), budget, threads)

    previous = None
    spent = 0
    for kk in range(1, minimize + 1):
        out = solve_problem(circulant_problem(spec, S.prefix(kk)), budget - spent, threads)
        spent += out.nodes
        if out.status == TIMEOUT:
            out.nodes = spent
            return out
        if out.feasible:
            out.optimum = kk
            out.lower = previous
            out.nodes = spent
            return out
        previous = out
    previous.nodes = spent
    return previous


def window_infeasible(t: int, S: WidthSequence, k: int, W: int,
                      budget: int = DEFAULT_BUDGET, threads: int = 1) -> SolveOutcome:
    """Exhaustively decide whether {0..W} of G_t admits an S-packing k-coloring.

    ``infeasible`` certifies chi_S(G_t) > k: any coloring of G_t restricted to
    the window would satisfy every constraint checked here.
    """
    if W > 12 * t:
        raise ValueError("window is capped at 12t")
    return solve_problem(window_problem(t, S.prefix(k), W), budget, threads)


def least_infeasible_window(t: int, S: WidthSequence, k: int, start: int, cap: int,
                            budget: int = DEFAULT_BUDGET) -> tuple[int | None, SolveOutcome]:
    """Grow W from ``start`` until the window becomes infeasible (or ``cap`` is passed)."""
    out = None
    for W in range(start, cap + 1):
        out = window_infeasible(t, S, k, W, budget)
        if out.status == INFEASIBLE:
            return W, out
        if out.status == TIMEOUT:
            break
    return None, out


def ht_infeasible(t: int, k: int = 5, budget: int = DEFAULT_BUDGET, threads: int = 1) -> SolveOutcome:
    """Decide whether H_t has a 2-distance k-coloring (its own distances)."""
    if t % 2 == 0 or not 5 <= t <= 25:
        raise ValueError("ht_infeasible needs odd t in [5, 25]")
    return solve_problem(ht_problem(build_ht(t), WidthSequence.constant(2, k)), budget, threads)


def periodic_search(t: int, S: WidthSequence, k: int, p: int,
                    budget: int = DEFAULT_BUDGET, threads: int = 1) -> SolveOutcome:
    if not 1 <= p <= 200:
        raise ValueError("period must lie in [1, 200]")
    return solve_problem(periodic_problem(t, S.prefix(k), p), budget, threads)
