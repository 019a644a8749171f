# ---------------------------------------------------------------------------------------
# CHIBOUND ORACLE - oracle.py
# ---------------------------------------------------------------------------------------
# Slow, exact ground truth used to cross-check the fast paths. Nothing here calls into
# recognition, cograph or engine: only graph-core plus plain enumeration.
# ---------------------------------------------------------------------------------------
import time
from itertools import combinations

from .config import active_settings
from .errors import InputError, SearchCancelled, SizeError
from .graph import iter_bits
from .recognition import Witness, WitnessKind

PATTERN_ORDERS = {
    WitnessKind.TRIANGLE: 3,
    WitnessKind.DIAMOND: 4,
    WitnessKind.P4: 4,
    WitnessKind.P2_UNION_P4: 6,
}


class CancelToken:
    """Cooperative cancellation for long searches (manual or deadline based)."""

    def __init__(self, timeout_s=None):
        self.deadline = None if timeout_s is None else time.monotonic() + timeout_s
        self.cancelled = False

    def cancel(self):
        self.cancelled = True

    def check(self):
        if self.cancelled or (self.deadline is not None and time.monotonic() > self.deadline):
            raise SearchCancelled("exact search cancelled")


def verify_colouring(G, colouring):
    """Returns (ok, offending_edge). Accepts a Colouring, a dict or a sequence."""
    assignment = getattr(colouring, "assignment", colouring)
    if isinstance(assignment, dict):
        lookup = assignment
    else:
        lookup = dict(enumerate(assignment))
    missing = [v for v in range(G.n) if v not in lookup]
    if missing:
        raise InputError(f"colouring is partial: vertices {missing[:5]} have no colour")
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if G.adjacent(u, v) and lookup[u] == lookup[v]:
                return False, (u, v)
    return True, None


# --- EXACT CHROMATIC NUMBER ---

def _greedy_clique(G):
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    clique = []
    for v in order:
        if all(G.adjacent(v, u) for u in clique):
            clique.append(v)
    return len(clique)


def _dsatur_greedy(G):
    colour = [0] * G.n
    for _ in range(G.n):
        v = _pick_vertex(G, colour)
        taken = {colour[u] for u in iter_bits(G.rows[v])}
        c = 1
        while c in taken:
            c += 1
        colour[v] = c
    return max(colour, default=0)


def _pick_vertex(G, colour):
    """Uncoloured vertex of highest saturation, then degree, then lowest index."""
    best, best_key = None, None
    for v in range(G.n):
        if colour[v]:
            continue
        sat = len({colour[u] for u in iter_bits(G.rows[v])} - {0})
        key = (sat, G.degree(v), -v)
        if best_key is None or key > best_key:
            best, best_key = v, key
    return best


def chromatic_number_exact(G, limit=None, cancel=None):
    limit = active_settings()["ORACLE_LIMIT"] if limit is None else limit
    if G.n > limit:
        raise SizeError("exact chromatic number", limit, G.n)
    if G.n == 0:
        return 0
    lower = _greedy_clique(G)
    best = _dsatur_greedy(G)
    if lower == best:
        return best
    colour = [0] * G.n
    nodes = 0

    def search(done, used):
        nonlocal best, nodes
        nodes += 1
        if cancel is not None and nodes % 256 == 0:
            cancel.check()
        if done == G.n:
            best = used
            return
        v = _pick_vertex(G, colour)
        taken = {colour[u] for u in iter_bits(G.rows[v])}
        # a new colour may only be opened as used+1
        for c in range(1, min(used + 1, best - 1) + 1):
            if c in taken:
                continue
            colour[v] = c
            search(done + 1, max(used, c))
            colour[v] = 0
            if best == lower:
                return

    search(0, 0)
    return best


# --- BRUTE-FORCE CLIQUE NUMBER ---

def max_clique_bruteforce(G, limit=None):
    limit = active_settings()["BRUTE_CLIQUE_LIMIT"] if limit is None else limit
    if G.n > limit:
        raise SizeError("brute-force clique number", limit, G.n)
    # cliques are hereditary: stop at the first size with none
    best = 0
    for size in range(1, G.n + 1):
        if not any(all(G.adjacent(u, v) for u, v in combinations(subset, 2))
                   for subset in combinations(range(G.n), size)):
            break
        best = size
    return best


# --- EXHAUSTIVE FORBIDDEN SUBGRAPH SCAN ---

def _induced_edges(G, subset):
    return [(u, v) for u, v in combinations(subset, 2) if G.adjacent(u, v)]


def _match_pattern(kind, subset, edges):
    """Returns the witness tuple if the induced subgraph on subset is `kind`."""
    degree = {v: 0 for v in subset}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    profile = sorted(degree.values())

    if kind is WitnessKind.TRIANGLE:
        return tuple(subset) if len(edges) == 3 else None

    if kind is WitnessKind.DIAMOND:
        if len(edges) != 5:
            return None
        tips = [v for v in subset if degree[v] == 2]
        spine = [v for v in subset if degree[v] == 3]
        return (tips[0], spine[0], tips[1], spine[1])

    if kind is WitnessKind.P4:
        if profile != [1, 1, 2, 2]:
            return None
        return _walk_path(subset, edges, degree)

    if kind is WitnessKind.P2_UNION_P4:
        if profile != [1, 1, 1, 1, 2, 2]:
            return None
        middle = [v for v in subset if degree[v] == 2]
        if (min(middle), max(middle)) not in edges:
            return None
        touching = {v for e in edges if set(e) & set(middle) for v in e}
        isolated_edge = [e for e in edges if not set(e) & touching]
        path_vertices = [v for v in subset if v in touching]
        path_edges = [e for e in edges if set(e) <= touching]
        return isolated_edge[0] + _walk_path(path_vertices, path_edges,
                                             {v: degree[v] for v in path_vertices})
    return None


def _walk_path(vertices, edges, degree):
    ends = sorted(v for v in vertices if degree[v] == 1)
    path = [ends[0]]
    while len(path) < len(vertices):
        tail = path[-1]
        step = next(w for e in edges if tail in e for w in e
                    if w != tail and w not in path)
        path.append(step)
    return tuple(path)


def find_forbidden_by_enumeration(G, pattern, limit=None):
    limit = active_settings()["ENUMERATION_LIMIT"] if limit is None else limit
    if G.n > limit:
        raise SizeError("forbidden subgraph enumeration", limit, G.n)
    kind = WitnessKind(pattern)
    if kind not in PATTERN_ORDERS:
        raise InputError(f"no enumeration pattern for {kind.value}")
    for subset in combinations(range(G.n), PATTERN_ORDERS[kind]):
        found = _match_pattern(kind, subset, _induced_edges(G, subset))
        if found:
            return Witness(kind, found)
    return None
