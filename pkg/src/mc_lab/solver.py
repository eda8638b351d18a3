"""Exact computation of the monochromatic connection number.

An edge coloring keeps a graph monochromatically connected when every
pair of vertices is joined by a path whose edges all share one color.
The monochromatic connection number mc(G) is the largest color count
over such colorings.

The solver layers three attacks: a fast path of cheap structural
conditions that pin mc(G) to the spanning-tree baseline m - n + 2,
constructive lower bounds matched against structural upper bounds, and
a branch-and-bound search over families of edge-disjoint trees for the
graphs the bounds leave open.  A slow reference oracle that enumerates
edge-set partitions directly backs the whole stack in tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .coloring import EdgeColoring, coloring_to_json, verify_mc
from .constructions import (
    _coloring_from_groups,
    _mask_components,
    near_complete_coloring,
    spanning_tree_coloring,
)
from .formulas import split_graph_base_edges
from .graph_core import (
    Graph,
    _diameter,
    _has_cut_vertex,
    _is_triangle_free,
    _vertex_connectivity,
    bits,
    complement,
    is_connected,
    metrics,
)

# Branch-and-bound is exponential; refuse exact solves past this order.
EXACT_HARD_CAP = 16
# The reference oracle walks edge partitions; refuse past this size.
ORACLE_EDGE_CAP = 12


class ExactSolveRefusedError(RuntimeError):
    """Exact solve rejected because the graph is too large.

    ``lower`` and ``upper`` carry cheap bounds on mc computed before
    refusing (constructive lower bound; degree and edge-count upper
    bounds).
    """

    def __init__(self, message: str, lower: int, upper: int):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class McCertificate:
    """Exact mc value plus the evidence for it.

    ``coloring`` attains ``value`` and passes verify_mc.  ``method`` is
    "fast-path" or "branch-and-bound" ("oracle" is reserved for externally
    checked values and never emitted here); a solve closed by the bounds
    alone counts as a zero-node branch-and-bound, recognizable from the
    trace.  ``bound_trace`` lists every (name, value) bound consulted.
    """

    value: int
    coloring: EdgeColoring
    method: str
    bound_trace: tuple[tuple[str, int], ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "value": self.value,
                "method": self.method,
                "bound_trace": [[name, val] for name, val in self.bound_trace],
                "coloring": json.loads(coloring_to_json(self.coloring)),
            }
        )


def mc_lower_bound(g: Graph) -> tuple[int, EdgeColoring]:
    """Best constructive lower bound for mc(g), with an attaining coloring."""
    span = spanning_tree_coloring(g)
    dense = near_complete_coloring(g)
    best = dense if dense.color_count >= span.color_count else span
    return best.color_count, best


def is_s_perfectly_connected(g: Graph, s: int) -> bool:
    """Whether some vertex v admits a perfect s-part split of the rest.

    The split must place the other vertices into s parts so that each
    part induces a connected subgraph, every cross-part pair is
    adjacent, and v has exactly one neighbor in each part.  Graphs with
    this structure are exactly the minimum-degree-s graphs whose mc
    exceeds m - n + s.
    """
    n = g.n
    if not 1 <= s <= n - 1:
        return False
    full = (1 << n) - 1
    for v in range(n):
        if g.degree(v) != s:
            continue
        rest = full & ~(1 << v)
        nbr = g.adj[v]
        # Nonadjacent vertices must share a part, so the atoms of any
        # valid split are the components of the complement minus v.
        cadj = [full & ~(g.adj[x] | (1 << x) | (1 << v)) for x in range(n)]
        atoms = _mask_components(cadj, rest)
        if len(atoms) < s:
            continue
        acount = [(a & nbr).bit_count() for a in atoms]
        if any(c > 1 for c in acount):
            continue
        if _group_atoms(g, atoms, acount, s):
            return True
    return False


def _group_atoms(g: Graph, atoms: list[int], acount: list[int], s: int) -> bool:
    """Try to merge atoms into exactly s parts meeting the split rules."""
    total = len(atoms)
    parts: list[list[int]] = []  # [vertex mask, neighbor count]

    def place(ai: int) -> bool:
        if len(parts) + (total - ai) < s:
            return False
        if ai == total:
            if len(parts) != s:
                return False
            for pm, pc in parts:
                if pc != 1:
                    return False
                if len(_mask_components(g.adj, pm)) != 1:
                    return False
            return True
        a, ac = atoms[ai], acount[ai]
        for part in parts:
            if part[1] + ac > 1:
                continue
            part[0] |= a
            part[1] += ac
            if place(ai + 1):
                return True
            part[0] &= ~a
            part[1] -= ac
        if len(parts) < s:
            parts.append([a, ac])
            if place(ai + 1):
                return True
            parts.pop()
        return False

    return place(0)


def mc_upper_bounds(g: Graph) -> list[tuple[str, int]]:
    """All structural upper bounds on mc(g), as (name, value) pairs.

    Bounds: m - n + chromatic number; m - n + vertex connectivity + 1;
    the minimum-degree dichotomy (m - n + delta, shifting to + 1 only
    for perfectly connected graphs); and m - t + 1 whenever the edge
    count lands in the window [base, base + t - 2] over the split-graph
    base edge count for some t.
    """
    mt = metrics(g)
    m, n = g.m, g.n
    out = [
        ("upper:chromatic", m - n + mt.chromatic_number),
        ("upper:connectivity", m - n + mt.vertex_connectivity + 1),
    ]
    s = mt.min_degree
    if is_s_perfectly_connected(g, s):
        out.append(("upper:min-degree", m - n + s + 1))
    else:
        out.append(("upper:min-degree", m - n + s))
    for t in range(2, n):
        base = split_graph_base_edges(n, t)
        if base <= m <= base + t - 2:
            out.append((f"upper:edge-window(t={t})", m - t + 1))
    return out


def baseline_fast_path(g: Graph) -> str | None:
    """Name of the first cheap condition forcing mc(g) = m - n + 2, or None.

    Checked in increasing cost order: a max-degree inequality,
    triangle-freeness, a cut vertex, diameter at least 3, and a
    4-connected complement.  Only valid for n > 3, so smaller graphs
    always get None.
    """
    if not is_connected(g):
        raise ValueError("requires a connected graph")
    n, m = g.n, g.m
    if n <= 3:
        return None
    dmax = max(g.degree(v) for v in range(n))
    if (n - dmax) * (n - 3) > 2 * m - 3 * (n - 1):
        return "max-degree"
    if _is_triangle_free(g):
        return "triangle-free"
    if _has_cut_vertex(g):
        return "cut-vertex"
    if _diameter(g) >= 3:
        return "diameter"
    co = complement(g)
    if min(co.degree(v) for v in range(n)) >= 4 and _vertex_connectivity(co) >= 4:
        return "complement-connectivity"
    return None


def _cheap_bounds(g: Graph) -> tuple[int, int]:
    """Bounds safe to compute at any size, for refusal messages."""
    n, m = g.n, g.m
    lb, _ = mc_lower_bound(g)
    delta = min(g.degree(v) for v in range(n))
    ub = m - n + delta + 1
    for t in range(2, n):
        base = split_graph_base_edges(n, t)
        if base <= m <= base + t - 2:
            ub = min(ub, m - t + 1)
    return lb, ub


def mc_exact(g: Graph, *, fast_path: bool = True) -> McCertificate:
    """Exact mc(g) with an attaining coloring and a bound trace.

    Raises ValueError on disconnected input and ExactSolveRefusedError
    past EXACT_HARD_CAP vertices.  ``fast_path=False`` skips the cheap
    structural conditions and forces the bound-and-search route, which
    is how the fast path itself gets regression-tested.
    """
    if not is_connected(g):
        raise ValueError("mc is only defined for connected graphs")
    n, m = g.n, g.m
    if n > EXACT_HARD_CAP:
        lb, ub = _cheap_bounds(g)
        raise ExactSolveRefusedError(
            f"refusing exact solve for n={n} > {EXACT_HARD_CAP}; "
            f"mc is within [{lb}, {ub}]",
            lower=lb,
            upper=ub,
        )
    trace: list[tuple[str, int]] = []
    if fast_path:
        reason = baseline_fast_path(g)
        if reason is not None:
            trace.append((f"fast:baseline({reason})", m - n + 2))
            return McCertificate(m - n + 2, spanning_tree_coloring(g), "fast-path", tuple(trace))
    span = spanning_tree_coloring(g)
    dense = near_complete_coloring(g)
    lb_col = dense if dense.color_count >= span.color_count else span
    lb = lb_col.color_count
    trace.append(("lower:spanning-tree", span.color_count))
    trace.append(("lower:near-complete", dense.color_count))
    ubs = mc_upper_bounds(g)
    trace.extend(ubs)
    ub = min(v for _, v in ubs)
    assert lb <= ub, f"bound inversion on {g!r}: {lb} > {ub}"
    if lb == ub:
        return McCertificate(lb, lb_col, "branch-and-bound", tuple(trace))
    value, col = _tree_cover_search(g, lb_col, ub)
    assert verify_mc(col) is None
    assert col.color_count == value
    return McCertificate(value, col, "branch-and-bound", tuple(trace))


def _tree_cover_search(g: Graph, start_col: EdgeColoring, ub: int) -> tuple[int, EdgeColoring]:
    """Minimize total waste over edge-disjoint tree families.

    A coloring with k colors exists iff some family of pairwise
    edge-disjoint trees covers every nonadjacent pair within a member
    tree using total waste m - k, where a tree on q edges wastes q - 1.
    The search branches on the uncovered pair with the fewest candidate
    trees and prunes with the pair-coverage capacity of the remaining
    waste budget.
    """
    n, m = g.n, g.m
    edges = list(g.edges())
    evmask = [(1 << u) | (1 << v) for u, v in edges]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    np_ = len(pairs)
    pvmask = [(1 << u) | (1 << v) for u, v in pairs]
    best_w = m - start_col.color_count
    floor_w = m - ub
    # conv[r]: least total waste able to cover r nonadjacent pairs, since
    # waste w buys a tree on w + 2 vertices covering at most C(w+1, 2)
    # nonadjacent pairs and splitting waste never helps.
    conv = [0] * (np_ + 1)
    for r in range(1, np_ + 1):
        w = max(conv[r - 1], 1)
        while comb(w + 1, 2) < r:
            w += 1
        conv[r] = w

    pairs_in_memo: dict[int, int] = {}

    def pairs_in(svmask: int) -> int:
        hit = pairs_in_memo.get(svmask)
        if hit is not None:
            return hit
        b = 0
        for j in range(np_):
            if pvmask[j] & svmask == pvmask[j]:
                b |= 1 << j
        pairs_in_memo[svmask] = b
        return b

    cand_memo: dict[tuple[int, int, int], tuple] = {}

    def candidates(j: int, avail: int, cap: int) -> tuple:
        """All (waste, vertex mask, edge mask) trees through pair j."""
        key = (j, avail, cap)
        hit = cand_memo.get(key)
        if hit is not None:
            return hit
        u, v = pairs[j]
        aadj = [0] * n
        for i in bits(avail):
            a, b = edges[i]
            aadj[a] |= 1 << b
            aadj[b] |= 1 << a
        uvm = (1 << u) | (1 << v)
        others = [w for w in range(n) if not uvm >> w & 1 and aadj[w]]
        out = []
        for k in range(1, min(cap, len(others)) + 1):
            for extra in combinations(others, k):
                svmask = uvm
                for w in extra:
                    svmask |= 1 << w
                if len(_mask_components(aadj, svmask)) != 1:
                    continue
                inner = [i for i in bits(avail) if evmask[i] & svmask == evmask[i]]
                for tmask in _spanning_tree_masks(k + 2, svmask, inner, edges):
                    out.append((k, svmask, tmask))
        out = tuple(out)
        cand_memo[key] = out
        return out

    best_family: list[list[tuple[int, int]]] | None = None
    done = False

    def dfs(uncov: int, avail: int, w_used: int, chosen: list[int]) -> None:
        nonlocal best_w, best_family, done
        if uncov == 0:
            best_w = w_used
            best_family = [[edges[i] for i in bits(tm)] for tm in chosen]
            if best_w <= floor_w:
                done = True
            return
        if w_used + conv[uncov.bit_count()] >= best_w:
            return
        cap = best_w - 1 - w_used
        pick = -1
        pick_cands: tuple = ()
        uu = uncov
        while uu:
            jb = uu & -uu
            j = jb.bit_length() - 1
            uu ^= jb
            cl = candidates(j, avail, cap)
            if not cl:
                return
            if pick < 0 or len(cl) < len(pick_cands):
                pick, pick_cands = j, cl
                if len(cl) == 1:
                    break
        for w, svmask, tmask in pick_cands:
            unc2 = uncov & ~pairs_in(svmask)
            if w_used + w + conv[unc2.bit_count()] >= best_w:
                continue
            chosen.append(tmask)
            dfs(unc2, avail & ~tmask, w_used + w, chosen)
            chosen.pop()
            if done:
                return

    dfs((1 << np_) - 1, (1 << m) - 1, 0, [])
    value = m - best_w
    if best_family is None:
        return value, start_col
    col = _coloring_from_groups(g, best_family)
    return value, col


def _spanning_tree_masks(
    size: int, svmask: int, inner: list[int], edges: list[tuple[int, int]]
) -> list[int]:
    """Edge masks of every spanning tree on the ``size`` vertices of svmask."""
    target = size - 1
    out: list[int] = []
    total = len(inner)
    parent = {x: x for x in bits(svmask)}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(pos: int, count: int, mask: int) -> None:
        if count == target:
            out.append(mask)
            return
        if total - pos < target - count:
            return
        i = inner[pos]
        a, b = edges[i]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            rec(pos + 1, count + 1, mask | (1 << i))
            parent[ra] = ra
        rec(pos + 1, count, mask)

    rec(0, 0, 0)
    return out


def mc_oracle_partitions(g: Graph) -> int:
    """Reference mc(g) straight from the definition, for cross-checking.

    Walks restricted-growth assignments of edges to color classes while
    tracking, per class, the vertex sets its components span and, per
    nonadjacent pair, how many classes join it.  Prunes use elementary
    counting only: every class assignment after the first in a class
    costs one color, a class formed by j such merges joins at most
    C(j+1, 2) nonadjacent pairs, and a one-color spanning tree plus
    rainbow leftovers always realizes m - n + 2 colors.  Independent of
    the tree-family model the main solver searches.
    """
    if not is_connected(g):
        raise ValueError("mc is only defined for connected graphs")
    if g.m > ORACLE_EDGE_CAP:
        raise ValueError(f"oracle limited to {ORACLE_EDGE_CAP} edges, got {g.m}")
    n, m = g.n, g.m
    edges = list(g.edges())
    full = (1 << n) - 1
    nonadj = [full & ~(g.adj[u] | 1 << u) for u in range(n)]
    pair_id: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in bits(nonadj[u] >> (u + 1) << (u + 1)):
            pair_id[(u, v)] = len(pair_id)
    np_ = len(pair_id)
    if np_ == 0:
        return m  # complete graph: all edges distinct
    best = m - n + 2
    covered = [0] * np_
    classes: list[list[int]] = []
    uncovered = np_

    def cover(amask: int, bmask: int) -> list[int]:
        nonlocal uncovered
        bumped = []
        for x in bits(amask):
            for y in bits(nonadj[x] & bmask):
                j = pair_id[(x, y) if x < y else (y, x)]
                covered[j] += 1
                if covered[j] == 1:
                    uncovered -= 1
                bumped.append(j)
        return bumped

    def uncover(bumped: list[int]) -> None:
        nonlocal uncovered
        for j in bumped:
            covered[j] -= 1
            if covered[j] == 0:
                uncovered += 1

    def dfs(i: int, joins: int) -> None:
        nonlocal best
        if uncovered == 0:
            # Rainbow the rest: m - joins colors, the subtree maximum.
            if m - joins > best:
                best = m - joins
            return
        if m - joins - 1 <= best:
            return
        if comb(m - best, 2) < np_:
            return
        if i == m:
            return
        u, v = edges[i]
        classes.append([(1 << u) | (1 << v)])
        dfs(i + 1, joins)
        classes.pop()
        for ci in range(len(classes)):
            comps = classes[ci]
            iu = iv = -1
            for k, cm in enumerate(comps):
                if cm >> u & 1:
                    iu = k
                if cm >> v & 1:
                    iv = k
            if iu == iv and iu != -1:
                continue  # edge inside a component never helps
            if iu == -1 and iv == -1:
                classes[ci] = comps + [(1 << u) | (1 << v)]
                dfs(i + 1, joins + 1)
                classes[ci] = comps
            elif iv == -1:
                grown = comps[iu] | (1 << v)
                bumped = cover(comps[iu], 1 << v)
                classes[ci] = comps[:iu] + [grown] + comps[iu + 1 :]
                dfs(i + 1, joins + 1)
                classes[ci] = comps
                uncover(bumped)
            elif iu == -1:
                grown = comps[iv] | (1 << u)
                bumped = cover(comps[iv], 1 << u)
                classes[ci] = comps[:iv] + [grown] + comps[iv + 1 :]
                dfs(i + 1, joins + 1)
                classes[ci] = comps
                uncover(bumped)
            else:
                bumped = cover(comps[iu], comps[iv])
                merged = [cm for k, cm in enumerate(comps) if k not in (iu, iv)]
                merged.append(comps[iu] | comps[iv])
                classes[ci] = merged
                dfs(i + 1, joins + 1)
                classes[ci] = comps
                uncover(bumped)

    dfs(0, 0)
    return best
