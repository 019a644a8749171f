# ---------------------------------------------------------------------------------------
# CHIBOUND GENERATORS - generators.py
# ---------------------------------------------------------------------------------------
# Witness graphs for the bounds (Grotzsch, Schlafli complement, H_n), seeded random
# instances for the fuzzer, and small hand-built graphs that land on each strategy.
# All randomness goes through XorShift64Star so fixtures are reproducible anywhere.
# ---------------------------------------------------------------------------------------
from itertools import combinations

from .errors import InputError
from .graph import Graph, complete_graph, cycle_graph, from_edges, iter_bits, mask_of
from .recognition import find_forbidden_through_edge

MASK64 = (1 << 64) - 1
MAX_SEED_CLIQUE = 8


# --- PRNG ---

def splitmix64(state):
    """One splitmix64 step: returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* seeded through splitmix64 (state is never zero)."""

    def __init__(self, seed):
        _, self.state = splitmix64(int(seed) & MASK64)
        if self.state == 0:
            self.state = 0x9E3779B97F4A7C15

    def next_u64(self):
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def random(self):
        """Float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randrange(self, n):
        if n <= 0:
            raise InputError(f"randrange needs a positive bound, got {n}")
        return (self.next_u64() * n) >> 64

    def shuffle(self, items):
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


# --- WITNESS GRAPHS ---

def mycielskian(G):
    """V = 0..n-1, shadows n..2n-1, apex 2n."""
    n = G.n
    edges = []
    for u, v in G.edges():
        edges += [(u, v), (u, n + v), (n + u, v)]
    edges += [(2 * n, n + i) for i in range(n)]
    return from_edges(2 * n + 1, edges)


def grotzsch():
    return mycielskian(cycle_graph(5))


def h_n(n):
    """K_n sharing the edge 0-1 with a C5 through n, n+1, n+2."""
    if n < 4:
        raise InputError(f"h_n needs n >= 4, got {n}")
    edges = list(combinations(range(n), 2))
    edges += [(0, n), (n, n + 1), (n + 1, n + 2), (n + 2, 1)]
    return from_edges(n + 3, edges)


def schlafli_complement():
    """The 27 lines on a cubic surface, adjacent when they meet.

    a_i -> i-1, b_i -> 5+i, c_ij -> 12 + position of (i, j) in lex order.
    """
    pairs = list(combinations(range(1, 7), 2))

    def a(i):
        return i - 1

    def b(i):
        return 5 + i

    c = {pair: 12 + t for t, pair in enumerate(pairs)}
    edges = [(a(i), b(j)) for i in range(1, 7) for j in range(1, 7) if i != j]
    for (j, l), vertex in c.items():
        for i in (j, l):
            edges += [(a(i), vertex), (b(i), vertex)]
    for p, q in combinations(pairs, 2):
        if not set(p) & set(q):
            edges.append((c[p], c[q]))
    return from_edges(27, edges)


def is_strongly_regular(G):
    """(v, k, lambda, mu) when G is strongly regular, else None.

    Complete and edgeless graphs are not counted.
    """
    if G.n < 2:
        return None
    degrees = {G.degree(v) for v in range(G.n)}
    if len(degrees) != 1:
        return None
    k = degrees.pop()
    if k == 0 or k == G.n - 1:
        return None
    lam = mu = None
    for u, v in combinations(range(G.n), 2):
        shared = (G.rows[u] & G.rows[v]).bit_count()
        if G.adjacent(u, v):
            if lam is None:
                lam = shared
            elif shared != lam:
                return None
        else:
            if mu is None:
                mu = shared
            elif shared != mu:
                return None
    return G.n, k, lam, mu


# --- RANDOM INSTANCES ---

def random_graph(n, p, seed):
    """Plain G(n, p), not filtered by class."""
    rng = XorShift64Star(seed)
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])



def _add_star(rows, v, mask):
    for u in iter_bits(mask):
        rows[u] |= 1 << v
    rows[v] |= mask


def _drop_star(rows, v, mask):
    for u in iter_bits(mask):
        rows[u] &= ~(1 << v)
    rows[v] &= ~mask


def _try_star(rows, n, v, mask):
    """Joins v to every vertex of mask at once; undone if any new edge lies in a forbidden subgraph."""
    mask &= ~rows[v] & ~(1 << v)
    if not mask:
        return False
    _add_star(rows, v, mask)
    G = Graph(n, rows)
    if any(find_forbidden_through_edge(G, v, u) is not None for u in iter_bits(mask)):
        _drop_star(rows, v, mask)
        return False
    return True


def random_in_class(n, p, seed):
    """Seeded in-class sample built in three passes, each driven by p.

    1. a shuffled cover of the vertices by blocks of up to MAX_SEED_CLIQUE vertices, each
       block made a clique with probability p;
    2. each vertex joined to every vertex of another random block with probability p / 4;
    3. the remaining pairs in shuffled order, each added with probability p.
    A move is undone when it creates a diamond or a P2+P4; any such subgraph contains
    both ends of one of the edges the move added.
    """
    if not 0 <= p <= 1:
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    rng = XorShift64Star(seed)
    rows = [0] * n
    order = list(range(n))
    rng.shuffle(order)
    cap = 1 + rng.randrange(min(n, MAX_SEED_CLIQUE)) if n else 1
    blocks, start = [], 0
    while start < n:
        size = min(n - start, 1 + rng.randrange(cap))
        block = mask_of(order[start:start + size])
        start += size
        blocks.append(block)
        if rng.random() < p:
            # a disjoint union of cliques is always in the class
            for v in iter_bits(block):
                rows[v] |= block & ~(1 << v)

    if len(blocks) > 1:
        for v in order:
            target = blocks[rng.randrange(len(blocks))]
            if rng.random() < p / 4 and not target >> v & 1:
                _try_star(rows, n, v, target)

    candidates = list(combinations(range(n), 2))
    rng.shuffle(candidates)
    for u, v in candidates:
        if rng.random() >= p or rows[u] >> v & 1:
            continue
        _try_star(rows, n, u, 1 << v)
    return Graph(n, rows)


def random_cograph(n, seed):
    """Merges random pairs of parts by disjoint union or complete join."""
    if n < 1:
        raise InputError(f"random_cograph needs n >= 1, got {n}")
    rng = XorShift64Star(seed)
    rows = [0] * n
    parts = [1 << v for v in range(n)]
    while len(parts) > 1:
        i = rng.randrange(len(parts))
        left = parts.pop(i)
        j = rng.randrange(len(parts))
        right = parts.pop(j)
        if rng.random() < 0.5:
            for v in iter_bits(left):
                rows[v] |= right
            for v in iter_bits(right):
                rows[v] |= left
        parts.append(left | right)
    return Graph(n, rows)


# --- STRATEGY FIXTURES ---

def _cliques(sizes, extra=()):
    """Disjoint cliques on consecutive ids plus extra edges."""
    edges, start = [], 0
    for size in sizes:
        edges += list(combinations(range(start, start + size), 2))
        start += size
    return from_edges(start, edges + list(extra))


def _with_vertices(G, count, edges):
    return from_edges(G.n + count, G.edges() + list(edges))


# name -> (builder, strategy the dispatcher picks)
STRATEGY_FIXTURES = {
    "lp2p4": (lambda: cycle_graph(5), "LP2P4"),
    "ld21": (lambda: _with_vertices(complete_graph(3), 1, [(0, 3)]), "LD21"),
    "ld2": (lambda: _with_vertices(complete_graph(4), 1, [(0, 4)]), "LD2"),
    "cd1": (lambda: _cliques([5, 3], [(0, 5), (0, 6), (0, 7)]), "CD1"),
    "cd1_k4": (lambda: _cliques([4, 3], [(0, 4), (0, 5), (0, 6)]), "CD1"),
    "c2": (lambda: _cliques([5, 4]), "C2"),
    "c2_triple": (lambda: _cliques([4, 4, 3]), "C2"),
    "c2_triangles": (lambda: _cliques([3, 3]), "C2"),
    "l31": (lambda: _cliques([3, 3], [(0, 3)]), "L31"),
    "l32": (lambda: _with_vertices(_cliques([4, 3], [(0, 4)]), 1, [(5, 7)]), "L32"),
    "l33": (lambda: _cliques([5, 3], [(0, 5)]), "L33"),
    "l41": (lambda: _cliques([5, 4], [(0, 5)]), "L41"),
    "l41_pair": (lambda: _with_vertices(_cliques([4, 4], [(0, 4)]), 2,
                                        [(8, 9), (0, 8), (0, 9), (4, 8), (4, 9)]), "L41"),
    "l41_double": (lambda: _cliques([6, 4], [(0, 6), (1, 7)]), "L41"),
}


def _ints(params, *names, default=None):
    values = []
    for name in names:
        raw = params.get(name, default)
        if raw is None:
            raise InputError(f"missing parameter {name}")
        try:
            values.append(int(raw))
        except (TypeError, ValueError):
            raise InputError(f"parameter {name} must be an integer, got {raw!r}")
    return values


def _probability(params, default):
    raw = params.get("p", default)
    try:
        return float(raw)
    except (TypeError, ValueError):
        raise InputError(f"parameter p must be a number, got {raw!r}")


def named(name, params=None):
    """Builds a graph by name for the gen command; params are strings or numbers."""
    params = dict(params or {})
    if name == "grotzsch":
        return grotzsch()
    if name == "schlafli_complement":
        return schlafli_complement()
    if name == "h_n":
        return h_n(*_ints(params, "n"))
    if name == "mycielskian":
        return mycielskian(cycle_graph(*_ints(params, "n", default=5)))
    if name == "random_in_class":
        n, seed = _ints(params, "n", "seed", default=0)
        return random_in_class(n, _probability(params, 0.3), seed)
    if name == "random_cograph":
        return random_cograph(*_ints(params, "n", "seed", default=1))
    if name == "random_graph":
        n, seed = _ints(params, "n", "seed", default=0)
        return random_graph(n, _probability(params, 0.5), seed)
    if name in STRATEGY_FIXTURES:
        return STRATEGY_FIXTURES[name][0]()
    raise InputError(f"unknown generator '{name}'")


GENERATOR_NAMES = ("grotzsch", "schlafli_complement", "h_n", "mycielskian", "random_in_class",
                   "random_cograph", "random_graph") + tuple(STRATEGY_FIXTURES)
