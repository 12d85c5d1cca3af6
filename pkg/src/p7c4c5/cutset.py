"""Clique-cutset search and decomposition into atoms.

A clique cutset splits the vertex set into (A, B, K) with K a clique,
A and B nonempty and anticomplete to each other.  The primary search
tries, for every vertex v, the components C of G - N[v] and their
neighborhoods N(C); a secondary search derives candidate separators from
a minimal triangulation, which is complete (the primary scan alone can
miss cutsets on some inputs, although not on the graphs this package
targets).  The secondary scan is skipped above a size threshold where the
primary one is reliable for the target class.

Decomposition repeatedly splits off one atom: when the first side of a
found cut-partition is itself cuttable, the search descends into it (the
current cutset always survives on one side), so every step removes at
least one vertex from the remainder and the tree has at most n-1 leaves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chordal import minimal_triangulation
from .graph import Graph, bits

TRIANGULATION_FALLBACK_CAP = 400


def has_clique_cutset(g: Graph, use_fallback: bool | None = None):
    """Find a clique cut-partition, or None when the graph is an atom.

    Returns (cutset, side_a, side_b) as vertex masks; for a disconnected
    graph the cutset is empty and side_a is the first component.
    """
    if g.n <= 1:
        return None
    comps = g.components()
    if len(comps) > 1:
        a = comps[0]
        return (0, a, g.all_mask & ~a)
    if g.n == 2:
        return None
    full = g.all_mask
    for v in range(g.n):
        outside = full & ~g.closed(v)
        for c in g.components(within=outside):
            s = g.neighborhood_of_set(c)
            if g.is_clique(s):
                # v itself is never in C nor N(C), so the rest is nonempty
                return (s, c, full & ~(c | s))
    if use_fallback is None:
        use_fallback = g.n <= TRIANGULATION_FALLBACK_CAP
    if use_fallback:
        hit = _triangulation_scan(g)
        if hit is not None:
            return hit
    return None


def _triangulation_scan(g: Graph):
    """Complete clique-separator check via a minimal triangulation.

    Every clique minimal separator of G is a minimal separator of any
    minimal triangulation, hence appears as the set of later neighbors of
    some vertex in the filled graph's elimination order.
    """
    fill, meo = minimal_triangulation(g)
    adj_f = list(g.adj)
    for (u, v) in fill:
        adj_f[u] |= 1 << v
        adj_f[v] |= 1 << u
    later = 0
    full = g.all_mask
    for v in reversed(meo):
        later |= 1 << v
    for v in meo:
        later &= ~(1 << v)
        s = adj_f[v] & later
        if not s or not g.is_clique(s):
            continue
        rest = full & ~s
        comps = g.components(within=rest)
        if len(comps) > 1:
            mine = next(c for c in comps if c >> v & 1)
            return (s, mine, full & ~(mine | s))
    return None


@dataclass
class Leaf:
    graph: Graph  # induced subgraph whose vmap points at the root graph
    mask: int  # vertex mask in root ids

    def leaves(self):
        yield self


@dataclass
class Node:
    cutset: int  # root-id mask; clique separating the children
    left: "Leaf | Node"
    right: "Leaf | Node"
    mask: int

    def leaves(self):
        yield from self.left.leaves()
        yield from self.right.leaves()


def decompose(root: Graph):
    """Binary clique-cutset decomposition tree with atom leaves.

    The left child of every internal node is a leaf holding an atom; the
    right child carries the remainder (including the cutset) and is
    decomposed recursively.
    """

    def to_root(sub: Graph, local_mask: int) -> int:
        m = 0
        for v in bits(local_mask):
            m |= 1 << sub.vmap[v]
        return m

    def rec(mask: int):
        sub = root.induced(mask)
        res = has_clique_cutset(sub)
        if res is None:
            return Leaf(sub, mask)
        s, a, _b = (to_root(sub, x) for x in res)
        # descend until the split-off side is an atom
        while True:
            left_mask = a | s
            subl = root.induced(left_mask)
            res2 = has_clique_cutset(subl)
            if res2 is None:
                break
            s2, a2, b2 = (to_root(subl, x) for x in res2)
            # the old cutset is a clique, so it sits inside one side
            if not (s & a2):
                s, a = s2, a2
            elif not (s & b2):
                s, a = s2, b2
            else:
                raise AssertionError("clique cutset split by a clique")
        left = Leaf(root.induced(a | s), a | s)
        right = rec(mask & ~a)
        return Node(s, left, right, mask)

    if root.n == 0:
        raise ValueError("cannot decompose the empty graph")
    return rec(root.all_mask)


def tree_violations(root: Graph, tree) -> list[str]:
    """Structural checks of a decomposition tree; empty list means valid."""
    out = []
    leaf_masks = []

    def walk(node):
        if isinstance(node, Leaf):
            leaf_masks.append(node.mask)
            if has_clique_cutset(node.graph) is not None:
                out.append(f"leaf {sorted(bits(node.mask))} is not an atom")
            return
        s, l, r = node.cutset, node.left.mask, node.right.mask
        if (l | r) != node.mask or (l & r) != s:
            out.append("child masks do not tile the node")
        if not root.is_clique(s):
            out.append(f"cutset {sorted(bits(s))} is not a clique")
        if not root.is_anticomplete_to(l & ~s, r & ~s):
            out.append("cutset does not separate the children")
        if not (l & ~s) or not (r & ~s):
            out.append("degenerate split")
        walk(node.left)
        walk(node.right)

    walk(tree)
    cover = 0
    for m in leaf_masks:
        cover |= m
    if cover != root.all_mask:
        out.append("leaves do not cover the graph")
    edge_cover = set()
    for m in leaf_masks:
        vs = set(bits(m))
        for (u, v) in root.edges():
            if u in vs and v in vs:
                edge_cover.add((u, v))
    if len(edge_cover) != root.m:
        out.append("some edge appears in no leaf")
    # every split removes at least one vertex from the remainder; with
    # empty cutsets (disconnected graphs) there can be up to n leaves
    if len(leaf_masks) > max(1, root.n):
        out.append(f"too many leaves: {len(leaf_masks)}")
    return out


def merge_colorings(root: Graph, tree, leaf_colorings) -> list[int]:
    """Combine per-leaf proper colorings into one proper coloring of root.

    ``leaf_colorings`` maps id(leaf) -> list of 1-based colors indexed by
    the leaf graph's local ids.  At each internal node the right child's
    colors are permuted to agree with the left child on the cutset (the
    cutset is a clique, so its colors are distinct on both sides); unused
    colors are matched up in ascending order.
    """
    k = 0
    for leaf in tree.leaves():
        k = max(k, max(leaf_colorings[id(leaf)], default=0))

    def solve(node) -> dict[int, int]:
        if isinstance(node, Leaf):
            cols = leaf_colorings[id(node)]
            return {node.graph.vmap[v]: cols[v] for v in range(node.graph.n)}
        lcol = solve(node.left)
        rcol = solve(node.right)
        perm = {}
        used_target = set()
        for v in sorted(bits(node.cutset)):
            src, dst = rcol[v], lcol[v]
            if perm.get(src, dst) != dst or (dst in used_target and perm.get(src) != dst):
                raise ValueError("inconsistent cutset colors")
            if src not in perm:
                perm[src] = dst
                used_target.add(dst)
        free_targets = [c for c in range(1, k + 1) if c not in used_target]
        it = iter(free_targets)
        for c in range(1, k + 1):
            if c not in perm:
                perm[c] = next(it)
        merged = dict(lcol)
        for v, c in rcol.items():
            merged[v] = perm[c]
        # cutset vertices got identical colors from both sides
        return merged

    full = solve(tree)
    return [full[v] for v in range(root.n)]
