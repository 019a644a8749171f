# ---------------------------------------------------------------------------------------
# CHIBOUND RECOGNITION - recognition.py
# ---------------------------------------------------------------------------------------
# Witness-producing detectors: triangle, diamond, P4, P2+P4, maximum clique, and the
# cross-clique P4 construction for two cliques joined by a matching.
# All scans run in ascending vertex order and return the first witness met.
# ---------------------------------------------------------------------------------------
from dataclasses import dataclass
from enum import Enum

from .errors import InputError
from .graph import above, iter_bits, lowest_bit, mask_of


class WitnessKind(str, Enum):
    DIAMOND = "Diamond"
    P2_UNION_P4 = "P2UnionP4"
    TRIANGLE = "Triangle"
    P4 = "P4"
    CLIQUE = "Clique"


@dataclass(frozen=True)
class Witness:
    """Vertex tuple proving an induced structure.

    Orders: P4 in path order; P2UnionP4 as (a, b, p1, p2, p3, p4); Diamond as
    (u, v, w, apex) where u-v-w is an induced P3 and apex sees all three.
    """
    kind: WitnessKind
    vertices: tuple

    def to_dict(self):
        return {"kind": self.kind.value, "vertices": list(self.vertices)}

    @classmethod
    def from_dict(cls, data):
        return cls(WitnessKind(data["kind"]), tuple(data["vertices"]))


@dataclass(frozen=True)
class MembershipVerdict:
    in_class: bool
    witness: Witness = None

    def to_dict(self):
        return {"in_class": self.in_class,
                "witness": None if self.witness is None else self.witness.to_dict()}


def witness_holds(G, w):
    """Re-checks the ordering invariant of a witness against G."""
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < G.n for v in vs):
        return False
    adj = G.adjacent
    if w.kind is WitnessKind.TRIANGLE:
        return len(vs) == 3 and adj(vs[0], vs[1]) and adj(vs[1], vs[2]) and adj(vs[0], vs[2])
    if w.kind is WitnessKind.CLIQUE:
        return all(adj(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])
    if w.kind is WitnessKind.P4:
        return len(vs) == 4 and _is_induced_path(G, vs)
    if w.kind is WitnessKind.DIAMOND:
        if len(vs) != 4:
            return False
        u, v, x, apex = vs
        return (adj(u, v) and adj(v, x) and not adj(u, x)
                and adj(apex, u) and adj(apex, v) and adj(apex, x))
    if w.kind is WitnessKind.P2_UNION_P4:
        if len(vs) != 6:
            return False
        a, b = vs[:2]
        path = vs[2:]
        return (adj(a, b) and _is_induced_path(G, path)
                and not any(adj(s, p) for s in (a, b) for p in path))
    return False


def _is_induced_path(G, path):
    for i, u in enumerate(path):
        for j in range(i + 1, len(path)):
            if G.adjacent(u, path[j]) != (j == i + 1):
                return False
    return True


# --- TRIANGLES ---

def find_triangle_in(G, S):
    """Lexicographically first triangle (u<v<w) inside the vertex mask S."""
    for u in iter_bits(S):
        nu = G.rows[u] & S & above(u)
        for v in iter_bits(nu):
            common = nu & G.rows[v] & above(v)
            if common:
                return Witness(WitnessKind.TRIANGLE, (u, v, lowest_bit(common)))
    return None


def find_triangle(G):
    return find_triangle_in(G, G.full)


# --- DIAMONDS ---

def find_induced_diamond(G):
    rows = G.rows
    for v in range(G.n):
        for apex in iter_bits(rows[v] & above(v)):
            common = rows[v] & rows[apex]
            for u in iter_bits(common):
                rest = common & ~rows[u] & above(u)
                if rest:
                    return Witness(WitnessKind.DIAMOND, (u, v, lowest_bit(rest), apex))
    return None


# --- P4 AND P2+P4 ---

def iter_induced_p4(G, S):
    """Induced P4s p1-p2-p3-p4 inside mask S with p1 < p4, scanned by p2 then p3."""
    rows = G.rows
    for p2 in iter_bits(S):
        for p3 in iter_bits(rows[p2] & S):
            closed3 = rows[p3] | 1 << p3
            closed2 = rows[p2] | 1 << p2
            for p1 in iter_bits(rows[p2] & S & ~closed3):
                tails = rows[p3] & S & ~closed2 & ~rows[p1] & above(p1)
                for p4 in iter_bits(tails):
                    yield (p1, p2, p3, p4)


def find_p4_in(G, S):
    for path in iter_induced_p4(G, S):
        return Witness(WitnessKind.P4, path)
    return None


def find_p4_free_violation(G):
    return find_p4_in(G, G.full)


def _edge_in(G, S):
    for a in iter_bits(S):
        nb = G.rows[a] & S & above(a)
        if nb:
            return a, lowest_bit(nb)
    return None


def _closed_neighbourhood(G, vertices):
    mask = 0
    for v in vertices:
        mask |= G.rows[v] | 1 << v
    return mask


def find_induced_p2p4(G):
    for path in iter_induced_p4(G, G.full):
        outside = G.full & ~_closed_neighbourhood(G, path)
        edge = _edge_in(G, outside)
        if edge:
            return Witness(WitnessKind.P2_UNION_P4, edge + path)
    return None


def class_membership(G):
    witness = find_induced_diamond(G) or find_induced_p2p4(G)
    return MembershipVerdict(in_class=witness is None, witness=witness)


def _canonical_path(path):
    return path if path[0] < path[-1] else tuple(reversed(path))


def find_forbidden_through_edge(G, u, v):
    """A diamond or P2+P4 whose vertex set holds both ends of the edge uv, if any."""
    rows = G.rows
    if not G.adjacent(u, v):
        raise InputError(f"({u},{v}) is not an edge")
    # uv as the diamond spine
    common = rows[u] & rows[v]
    for p in iter_bits(common):
        rest = common & ~rows[p] & above(p)
        if rest:
            return Witness(WitnessKind.DIAMOND, (p, u, lowest_bit(rest), v))
    # uv from a spine vertex x to a tip y
    for x, y in ((u, v), (v, u)):
        for s in iter_bits(rows[x] & rows[y]):
            tips = rows[x] & rows[s] & ~rows[y] & ~(1 << y)
            if tips:
                return Witness(WitnessKind.DIAMOND, (lowest_bit(tips), x, y, s))
    # uv as the P2
    outside = G.full & ~_closed_neighbourhood(G, (u, v))
    path = find_p4_in(G, outside)
    if path:
        return Witness(WitnessKind.P2_UNION_P4, (min(u, v), max(u, v)) + path.vertices)
    # uv as a path edge
    for path in _p4_through_edge(G, u, v):
        outside = G.full & ~_closed_neighbourhood(G, path)
        edge = _edge_in(G, outside)
        if edge:
            return Witness(WitnessKind.P2_UNION_P4, edge + _canonical_path(path))
    return None


def _p4_through_edge(G, u, v):
    rows = G.rows
    for x, y in ((u, v), (v, u)):
        closed_x = rows[x] | 1 << x
        closed_y = rows[y] | 1 << y
        # x, y in the middle
        for p1 in iter_bits(rows[x] & ~closed_y):
            for p4 in iter_bits(rows[y] & ~closed_x & ~rows[p1]):
                yield (p1, x, y, p4)
        # x, y at one end
        for p3 in iter_bits(rows[y] & ~closed_x):
            for p4 in iter_bits(rows[p3] & ~closed_y & ~rows[x]):
                yield (x, y, p3, p4)


# --- MAXIMUM CLIQUE ---

def _colour_classes(G, P):
    """Greedy sequential colouring of mask P: (vertex order, colour bound per vertex)."""
    order, bounds = [], []
    colour = 0
    uncoloured = P
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = lowest_bit(q)
            q &= ~G.rows[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def _greedy_bound(G, P):
    if not P:
        return 0
    return _colour_classes(G, P)[1][-1]


def clique_number(G, within=None):
    """Exact clique number of G[within] by branch and bound on greedy colour classes."""
    P = G.full if within is None else G.as_mask(within)
    best = 0

    def expand(P, size):
        nonlocal best
        order, bounds = _colour_classes(G, P)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = order[idx]
            NP = P & G.rows[v]
            if NP:
                expand(NP, size + 1)
            elif size + 1 > best:
                best = size + 1
            P &= ~(1 << v)

    if P:
        expand(P, 0)
    return best


def _lex_first_clique(G, P, target):
    def extend(chosen, cand):
        need = target - len(chosen)
        if need == 0:
            return chosen
        for v in list(iter_bits(cand)):
            if cand.bit_count() < need or _greedy_bound(G, cand) < need:
                return None
            found = extend(chosen + (v,), cand & G.rows[v] & above(v))
            if found:
                return found
            cand &= ~(1 << v)
        return None

    return extend((), P)


def max_clique(G, within=None):
    """Lexicographically first maximum clique of G[within], as a sorted tuple."""
    P = G.full if within is None else G.as_mask(within)
    omega = clique_number(G, P)
    if omega == 0:
        return ()
    return _lex_first_clique(G, P, omega)


def find_clique_of_size(G, within, size):
    """Lexicographically first clique of exactly `size` vertices inside `within`."""
    P = G.as_mask(within)
    if size == 0:
        return ()
    return _lex_first_clique(G, P, size)


# --- CROSS-CLIQUE P4 ---

def _check_matched_cliques(G, X, Y, x, y):
    xm, ym = mask_of(X), mask_of(Y)
    if xm & ym:
        raise InputError("X and Y must be disjoint")
    for name, S in (("X", X), ("Y", Y)):
        if any(not G.adjacent(p, q) for i, p in enumerate(S) for q in S[i + 1:]):
            raise InputError(f"{name} must be a clique")
    if min(len(X), len(Y)) < 2:
        raise InputError("min(|X|,|Y|) must be at least 2")
    if max(len(X), len(Y)) < 3:
        raise InputError("max(|X|,|Y|) must be at least 3")
    cross = 0
    for p in X:
        hits = (G.rows[p] & ym).bit_count()
        if hits > 1:
            raise InputError(f"[X,Y] must be a matching: {p} has {hits} neighbours in Y")
        cross += hits
    for q in Y:
        if (G.rows[q] & xm).bit_count() > 1:
            raise InputError(f"[X,Y] must be a matching: {q} has several neighbours in X")
    if cross == 0:
        raise InputError("[X,Y] must be a nonempty matching")
    if x not in X or y not in Y:
        raise InputError("query vertices must satisfy x in X and y in Y")


def find_p4_across_matched_cliques(G, X, Y, x, y):
    """An induced P4 inside G[X u Y] whose vertex set holds both x and y."""
    X, Y = tuple(sorted(X)), tuple(sorted(Y))
    _check_matched_cliques(G, X, Y, x, y)
    if len(X) < 3:
        X, Y, x, y = Y, X, y, x

    def partner(v, S):
        return next((s for s in S if G.adjacent(v, s)), None)

    def first(S, avoid):
        return next(s for s in S if s not in avoid)

    xy = partner(x, Y)
    if xy is None:
        yx = partner(y, X)
        if yx is None:
            # both unmatched: route through some matching edge
            x2 = next(p for p in X if partner(p, Y) is not None)
            path = (x, x2, partner(x2, Y), y)
        else:
            path = (x, yx, y, first(Y, {y}))
    elif xy == y:
        y2 = first(Y, {y})
        x2 = next(p for p in X if p != x and not G.adjacent(p, y2))
        path = (x2, x, y, y2)
    else:
        x2 = next(p for p in X if p != x and not G.adjacent(p, y))
        path = (x2, x, xy, y)
    return Witness(WitnessKind.P4, path)
