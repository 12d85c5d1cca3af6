"""Deterministic construction of member graphs and atoms for tests.

Cross adjacencies between ordered cliques are described by staircases: a
non-increasing row profile f where row j is adjacent to the first f[j]
columns, so neighborhoods are nested on both sides.  All generators are
pure functions of their arguments (and an explicit seed for the random
variants) and validate their inputs before building anything.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .graph import Graph
from .patterns import class_membership

MEMBERSHIP_CHECK_LIMIT = 64


class ForgeError(ValueError):
    pass


@dataclass(frozen=True)
class Staircase:
    """Row profile of a staircase between two ordered parts.

    f[j] is the number of columns (counted from the dominant end) that
    row j sees; f must be non-increasing.  ``full(r, c)`` gives the
    complete bipartite profile.
    """

    f: tuple

    def __post_init__(self):
        f = tuple(self.f)
        object.__setattr__(self, "f", f)
        if any(x < 0 for x in f):
            raise ForgeError("staircase entries must be nonnegative")
        if any(f[i] < f[i + 1] for i in range(len(f) - 1)):
            raise ForgeError("staircase profile must be non-increasing")

    @property
    def rows(self):
        return len(self.f)

    @property
    def cols(self):
        return self.f[0] if self.f else 0

    @staticmethod
    def full(rows: int, cols: int) -> "Staircase":
        return Staircase((cols,) * rows)

    def edges(self, row_ids, col_ids):
        if len(row_ids) != len(self.f):
            raise ForgeError("row count mismatch")
        if self.f and self.f[0] > len(col_ids):
            raise ForgeError("staircase wider than the column part")
        out = []
        for j, v in enumerate(row_ids):
            out.extend((v, col_ids[c]) for c in range(self.f[j]))
        return out


def _clique_edges(ids):
    return list(itertools.combinations(ids, 2))


def _complete_edges(xs, ys):
    return [(u, v) for u in xs for v in ys]


# ---------------------------------------------------------------------
# atoms
# ---------------------------------------------------------------------


def gen_bracelet(star_sizes, pairs=None, i_star: int = 0) -> Graph:
    """Blow-up of a seven-hole with up to three wavy staircase pairs.

    star_sizes lists the seven part sizes; pairs maps a pair slot in
    {0, 1, 2} to a Staircase adding extra vertices: slot 0 links parts
    i_star+5 and i_star (rows on the +5 side), slot 1 parts i_star and
    i_star+2, slot 2 parts i_star+6 and i_star+1.  The pivot-opposite
    parts stay pure, as the structure requires (axioms III-V).
    """
    if len(star_sizes) != 7:
        raise ForgeError("need exactly seven part sizes")
    if any(s < 1 for s in star_sizes):
        raise ForgeError("every part needs a plain vertex (axiom II.f)")
    pairs = dict(pairs or {})
    if any(slot not in (0, 1, 2) for slot in pairs):
        raise ForgeError("pair slots are 0, 1, 2 (axioms III-V forbid others)")
    pair_parts = {0: (5, 0), 1: (0, 2), 2: (6, 1)}
    star, plus, minus = [], [], []
    n = 0
    for i in range(7):
        star.append(list(range(n, n + star_sizes[i])))
        plus.append([])
        minus.append([])
        n += star_sizes[i]
    for slot, st in sorted(pairs.items()):
        if st.f and (st.f[-1] < 1 or not st.cols):
            raise ForgeError("wavy vertices need at least one partner each")
        pi, mi = pair_parts[slot]
        pi, mi = (i_star + pi) % 7, (i_star + mi) % 7
        plus[pi] = list(range(n, n + st.rows))
        n += st.rows
        minus[mi] = list(range(n, n + st.cols))
        n += st.cols
    part = [star[i] + plus[i] + minus[i] for i in range(7)]
    edges = []
    for i in range(7):
        edges += _clique_edges(part[i])
        edges += _complete_edges(part[i], part[(i + 1) % 7])
    for slot, st in sorted(pairs.items()):
        pi, mi = pair_parts[slot]
        pi, mi = (i_star + pi) % 7, (i_star + mi) % 7
        edges += st.edges(plus[pi], minus[mi])
    return Graph.build(n, edges)


_EMERALD_ORDER = (
    "a0m", "a0p", "a1", "a2s", "a2m", "a3", "a4", "a5s", "a5p", "a6", "c",
)


def gen_emerald(sizes) -> Graph:
    """Blow-up of the eleven-class emerald; sizes maps class name to size."""
    from .recognize import EmeraldPartition

    missing = [k for k in _EMERALD_ORDER if k not in sizes]
    if missing:
        raise ForgeError(f"missing emerald classes: {missing}")
    if any(sizes[k] < 1 for k in _EMERALD_ORDER):
        raise ForgeError("every emerald class must be nonempty")
    ids = {}
    n = 0
    for name in _EMERALD_ORDER:
        ids[name] = list(range(n, n + sizes[name]))
        n += sizes[name]
    edges = []
    for name in _EMERALD_ORDER:
        edges += _clique_edges(ids[name])
    for x, y in EmeraldPartition.EDGES:
        edges += _complete_edges(ids[x], ids[y])
    return Graph.build(n, edges)


def gen_lantern(a_size, d_size, arms, wavy: Staircase | None = None) -> Graph:
    """Two nonadjacent hub cliques with r >= 3 pairwise anticomplete arms.

    arms lists (b_size, c_size) pairs; the b side is complete to hub a,
    the c side to hub d.  With *wavy* set, the first arm's cross edges
    follow the staircase instead of being complete.
    """
    if a_size < 1 or d_size < 1:
        raise ForgeError("both hubs must be nonempty")
    if len(arms) < 3:
        raise ForgeError("a lantern needs at least three arms")
    if any(b < 1 or c < 1 for b, c in arms):
        raise ForgeError("every arm needs both sides nonempty")
    n = 0
    a = list(range(n, n + a_size)); n += a_size
    d = list(range(n, n + d_size)); n += d_size
    bs, cs = [], []
    for b_size, c_size in arms:
        bs.append(list(range(n, n + b_size))); n += b_size
        cs.append(list(range(n, n + c_size))); n += c_size
    edges = _clique_edges(a) + _clique_edges(d)
    for i, (b, c) in enumerate(zip(bs, cs)):
        edges += _clique_edges(b) + _clique_edges(c)
        edges += _complete_edges(a, b) + _complete_edges(c, d)
        if i == 0 and wavy is not None:
            if wavy.rows != len(b) or wavy.cols != len(c):
                raise ForgeError("wavy staircase must span the full first arm")
            if wavy.f[-1] < 1:
                raise ForgeError("every wavy-arm vertex needs a partner")
            edges += wavy.edges(b, c)
        else:
            edges += _complete_edges(b, c)
    return Graph.build(n, edges)


def gen_ring6(sizes, links=None) -> Graph:
    """Six cyclically linked ordered cliques with staircase cross edges.

    links[i] describes the staircase from part i (rows) to part i+1
    (columns); by default every link is complete.  Each part uses one
    global dominance order, shared by both of its links.
    """
    if len(sizes) != 6 or any(s < 1 for s in sizes):
        raise ForgeError("need six positive part sizes")
    if links is None:
        links = [Staircase.full(sizes[i], sizes[(i + 1) % 6]) for i in range(6)]
    if len(links) != 6:
        raise ForgeError("need six links")
    parts = []
    n = 0
    for s in sizes:
        parts.append(list(range(n, n + s)))
        n += s
    edges = []
    for i in range(6):
        st = links[i]
        if st.rows != sizes[i] or st.cols != sizes[(i + 1) % 6]:
            raise ForgeError(
                f"link {i} must span all of part {i} and be full at the top"
            )
        edges += _clique_edges(parts[i])
        edges += st.edges(parts[i], parts[(i + 1) % 6])
    return Graph.build(n, edges)


def gen_wreath(sizes, loose_links=None) -> Graph:
    """A six-ring whose parts (0,1), (2,3) and (4,5) are complete pairs.

    loose_links optionally gives the staircases for the three remaining
    links (1,2), (3,4), (5,0), in that order.
    """
    if len(sizes) != 6:
        raise ForgeError("need six part sizes")
    if loose_links is None:
        loose_links = [
            Staircase.full(sizes[1], sizes[2]),
            Staircase.full(sizes[3], sizes[4]),
            Staircase.full(sizes[5], sizes[0]),
        ]
    links = [None] * 6
    for j, i in enumerate((1, 3, 5)):
        links[i] = loose_links[j]
        links[i - 1] = Staircase.full(sizes[i - 1], sizes[i])
    return gen_ring6(sizes, links)


def gen_crown(c_sizes, d_sizes) -> Graph:
    """Blow-up of a crown: inner ring cliques c[i] plus outer cliques d[i].

    d[i] is complete to c[i-1], c[i], c[i+1] and nothing else.  The fixed
    convention puts the forced-empty outer slots at 0 and 1, requires
    d[3], d[4], d[5] nonempty and leaves d[2] free.
    """
    if len(c_sizes) != 6 or len(d_sizes) != 6:
        raise ForgeError("need six inner and six outer sizes")
    if any(s < 1 for s in c_sizes):
        raise ForgeError("inner parts must be nonempty")
    if d_sizes[0] or d_sizes[1]:
        raise ForgeError("outer slots 0 and 1 must be empty")
    if any(d_sizes[i] < 1 for i in (3, 4, 5)):
        raise ForgeError("outer slots 3, 4, 5 must be nonempty")
    cs, ds = [], []
    n = 0
    for s in c_sizes:
        cs.append(list(range(n, n + s))); n += s
    for s in d_sizes:
        ds.append(list(range(n, n + s))); n += s
    edges = []
    for i in range(6):
        edges += _clique_edges(cs[i]) + _clique_edges(ds[i])
        edges += _complete_edges(cs[i], cs[(i + 1) % 6])
        for t in (-1, 0, 1):
            edges += _complete_edges(ds[i], cs[(i + t) % 6])
    return Graph.build(n, edges)


# ---------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------


def add_universal_clique(g: Graph, k: int) -> Graph:
    """Join a k-clique of new vertices to the whole graph."""
    if k < 0:
        raise ForgeError("clique size must be nonnegative")
    new = list(range(g.n, g.n + k))
    edges = list(g.edges()) + _clique_edges(new) + _complete_edges(range(g.n), new)
    return Graph.build(g.n + k, edges)


def glue(g1: Graph, g2: Graph, clique1, clique2, check: bool | None = None) -> Graph:
    """Identify a clique of g1 with an equal-sized clique of g2.

    The shared clique keeps the g1 ids; the rest of g2 is appended.
    Gluing can create forbidden patterns that neither side had, so the
    result is membership-checked (on inputs up to a size limit) and
    rejected if it falls outside the class.
    """
    clique1, clique2 = list(clique1), list(clique2)
    if len(clique1) != len(clique2):
        raise ForgeError("cliques must have equal size")
    from .graph import mask_of

    if not g1.is_clique(mask_of(clique1)) or not g2.is_clique(mask_of(clique2)):
        raise ForgeError("gluing sets must be cliques")
    trans = {}
    nxt = g1.n
    for v in range(g2.n):
        if v in dict(zip(clique2, clique1)):
            trans[v] = clique1[clique2.index(v)]
        else:
            trans[v] = nxt
            nxt += 1
    edges = set(g1.edges())
    for (u, v) in g2.edges():
        a, b = trans[u], trans[v]
        edges.add((min(a, b), max(a, b)))
    out = Graph.build(nxt, sorted(edges))
    if check is None:
        check = out.n <= MEMBERSHIP_CHECK_LIMIT
    if check:
        report = class_membership(out)
        if not report.is_member:
            raise ForgeError(f"gluing left the class: {report.violations()}")
    return out


# ---------------------------------------------------------------------
# seeded random instances
# ---------------------------------------------------------------------


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_staircase(rng, rows, cols, at_least_one=True, full_top=False):
    lo = 1 if at_least_one else 0
    f = sorted((rng.randint(lo, cols) for _ in range(rows)), reverse=True)
    if full_top and f:
        f[0] = cols
    return Staircase(tuple(f))


def random_bracelet(seed, max_part: int = 3, max_pair: int = 3) -> Graph:
    rng = _rng(seed)
    stars = [rng.randint(1, max_part) for _ in range(7)]
    pairs = {}
    for slot in range(3):
        if rng.random() < 0.5:
            rows = rng.randint(1, max_pair)
            cols = rng.randint(1, max_pair)
            st = random_staircase(rng, rows, cols, full_top=True)
            pairs[slot] = st
    return gen_bracelet(stars, pairs, i_star=rng.randrange(7))


def random_emerald(seed, max_part: int = 2) -> Graph:
    rng = _rng(seed)
    return gen_emerald({k: rng.randint(1, max_part) for k in _EMERALD_ORDER})


def random_lantern(seed, max_hub: int = 3, max_arm: int = 3) -> Graph:
    rng = _rng(seed)
    arms = [
        (rng.randint(1, max_arm), rng.randint(1, max_arm))
        for _ in range(rng.randint(3, 4))
    ]
    wavy = None
    if rng.random() < 0.5:
        wavy = random_staircase(rng, arms[0][0], arms[0][1], full_top=True)
    return gen_lantern(rng.randint(1, max_hub), rng.randint(1, max_hub), arms, wavy)


def random_wreath(seed, max_part: int = 3) -> Graph:
    rng = _rng(seed)
    sizes = [rng.randint(1, max_part) for _ in range(6)]
    loose = [
        random_staircase(rng, sizes[i], sizes[(i + 1) % 6], full_top=True)
        for i in (1, 3, 5)
    ]
    return gen_wreath(sizes, loose)


def random_ring(seed, max_part: int = 3) -> Graph:
    """A random member six-ring (sparse staircases can wind a long induced
    path around the ring, so candidates are filtered by membership)."""
    rng = _rng(seed)
    while True:
        sizes = [rng.randint(1, max_part) for _ in range(6)]
        links = [
            random_staircase(rng, sizes[i], sizes[(i + 1) % 6], full_top=True)
            for i in range(6)
        ]
        g = gen_ring6(sizes, links)
        if class_membership(g).is_member:
            return g


def random_crown(seed, max_part: int = 2) -> Graph:
    rng = _rng(seed)
    c = [rng.randint(1, max_part) for _ in range(6)]
    d = [0, 0, rng.randint(0, max_part)] + [rng.randint(1, max_part) for _ in range(3)]
    return gen_crown(c, d)


def random_atom(seed) -> Graph:
    """A random atom of any kind, possibly topped with a universal clique."""
    rng = _rng(seed)
    kind = rng.choice(["bracelet", "emerald", "lantern", "wreath", "crown", "complete"])
    if kind == "bracelet":
        g = random_bracelet(rng)
    elif kind == "emerald":
        g = random_emerald(rng)
    elif kind == "lantern":
        g = random_lantern(rng)
    elif kind == "wreath":
        g = random_wreath(rng)
    elif kind == "crown":
        g = random_crown(rng)
    else:
        k = rng.randint(1, 5)
        g = Graph.build(k, _clique_edges(range(k)))
    if rng.random() < 0.3:
        g = add_universal_clique(g, rng.randint(1, 2))
    return g


def random_member_graph(seed, target: int = 12) -> Graph:
    """A small random member graph (random graphs filtered by the patterns)."""
    rng = _rng(seed)
    while True:
        n = rng.randint(1, target)
        p = rng.choice([0.2, 0.4, 0.6, 0.8])
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = Graph.build(n, edges)
        if class_membership(g).is_member:
            return g
