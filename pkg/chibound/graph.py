# ---------------------------------------------------------------------------------------
# CHIBOUND GRAPH CORE - graph.py
# ---------------------------------------------------------------------------------------
# Immutable simple undirected graph on vertices 0..n-1.
# Adjacency rows are int bitmasks (bit u of rows[v] set <=> u ~ v); vertex sets are
# passed around either as iterables of ints or as masks (see as_mask).
# ---------------------------------------------------------------------------------------
from .errors import InputError


def iter_bits(mask):
    """Yields the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask):
    return (mask & -mask).bit_length() - 1


def mask_of(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def above(v):
    """Mask of every position strictly greater than v."""
    return ~((2 << v) - 1)


class Graph:
    __slots__ = ("n", "rows")

    def __init__(self, n, rows):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        rows = tuple(rows)
        if len(rows) != n:
            raise InputError(f"expected {n} adjacency rows, got {len(rows)}")
        self.n = n
        self.rows = rows

    @property
    def full(self):
        return (1 << self.n) - 1

    @property
    def adj(self):
        return tuple(frozenset(iter_bits(r)) for r in self.rows)

    def neighbours(self, v):
        return frozenset(iter_bits(self.rows[v]))

    def adjacent(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def degree(self, v):
        return self.rows[v].bit_count()

    def edges(self):
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] & above(u))]

    def edge_count(self):
        return sum(r.bit_count() for r in self.rows) // 2

    def as_mask(self, vertices):
        """Converts an iterable of vertices (or a mask) to a range-checked mask."""
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        if mask < 0 or mask >> self.n:
            raise InputError(f"vertex set out of range for a graph on {self.n} vertices")
        return mask

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def from_edges(n, edges):
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def validate(G):
    """Raises InputError unless adjacency is symmetric, loop-free and in range."""
    for v, row in enumerate(G.rows):
        if row < 0 or row >> G.n:
            raise InputError(f"row {v} references a vertex outside 0..{G.n - 1}")
        if row >> v & 1:
            raise InputError(f"self-loop at vertex {v}")
        for u in iter_bits(row):
            if not G.rows[u] >> v & 1:
                raise InputError(f"asymmetric adjacency between {v} and {u}")
    return True


def induced_subgraph(G, S):
    """Returns (G[S], old->new index map); new indices follow ascending old order."""
    mask = G.as_mask(S)
    order = list(iter_bits(mask))
    index = {old: new for new, old in enumerate(order)}
    rows = []
    for old in order:
        row = 0
        for u in iter_bits(G.rows[old] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(order), rows), index


def complement(G):
    full = G.full
    return Graph(G.n, [full & ~row & ~(1 << v) for v, row in enumerate(G.rows)])


def disjoint_union(G1, G2):
    shift = G1.n
    return Graph(G1.n + G2.n, list(G1.rows) + [row << shift for row in G2.rows])


def _disjoint_pair(G, X, Y):
    x, y = G.as_mask(X), G.as_mask(Y)
    if x & y:
        raise InputError(f"vertex sets overlap on {sorted(iter_bits(x & y))}")
    return x, y


def is_complete_between(G, X, Y):
    x, y = _disjoint_pair(G, X, Y)
    return all(G.rows[v] & y == y for v in iter_bits(x))


def is_anticomplete_between(G, X, Y):
    x, y = _disjoint_pair(G, X, Y)
    return all(not G.rows[v] & y for v in iter_bits(x))


def is_clique(G, S):
    mask = G.as_mask(S)
    return all((G.rows[v] | 1 << v) & mask == mask for v in iter_bits(mask))


def is_stable(G, S):
    mask = G.as_mask(S)
    return all(not G.rows[v] & mask for v in iter_bits(mask))


def components(G, S=None, co=False):
    """Connected components of G[S] (of the complement of G[S] when co=True), as masks
    ordered by least vertex."""
    remaining = G.full if S is None else G.as_mask(S)
    scope = remaining
    found = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            v = lowest_bit(frontier)
            frontier &= frontier - 1
            row = G.rows[v]
            if co:
                row = ~row & ~(1 << v)
            new = row & scope & ~comp
            comp |= new
            frontier |= new
        found.append(comp)
        remaining &= ~comp
    return found


def neighbourhood(G, v, within=None):
    row = G.rows[v]
    return row if within is None else row & G.as_mask(within)


# --- CONSTRUCTORS ---

def empty_graph(n):
    return Graph(n, [0] * n)


def complete_graph(n):
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
