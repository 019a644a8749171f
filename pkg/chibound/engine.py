# ---------------------------------------------------------------------------------------
# CHIBOUND ENGINE - engine.py
# ---------------------------------------------------------------------------------------
# Dispatcher plus the colouring strategies. Each strategy fixes the colours of A and B,
# hands every remaining cell to the cograph colourer with an explicit palette, then the
# result is verified proper, compacted to 1..c and checked against the bound:
#   w = 2 -> 4,   w = 3 -> 6,   w >= 4 -> w
# ---------------------------------------------------------------------------------------
from dataclasses import dataclass, field

from .cograph import Colouring, colour_cograph_with_palette
from .decomposition import (check_condition_star, find_kk_anticomplete_to_A, primary_partition,
                            relabel, secondary_partition, snapshot, verify_s_properties)
from .errors import CapacityError, InputError, NotCographError, OutOfClassError, TheoryViolation
from .graph import iter_bits, mask_of
from .graph_io import CertificateDocument
from .notifier import notify
from .oracle import verify_colouring
from .recognition import class_membership, clique_number, find_triangle_in, max_clique

TRIVIAL, LP2P4, LD2, LD21, CD1, C2 = "TRIVIAL", "LP2P4", "LD2", "LD21", "CD1", "C2"
L31, L32, L33, L41 = "L31", "L32", "L33", "L41"


def theorem_bound(omega):
    if omega <= 1:
        return omega
    if omega == 2:
        return 4
    if omega == 3:
        return 6
    return omega


@dataclass
class StrategyOutcome:
    strategy: str
    colouring: Colouring
    omega: int
    k: int
    bound: int
    partition: dict = field(default_factory=dict)
    relabeling: dict = None
    trail: list = field(default_factory=list)


@dataclass(frozen=True)
class PaletteRequest:
    cell: str
    allowed: tuple


@dataclass(frozen=True)
class MatchResult:
    matching: dict = None       # left index -> colour
    violator: frozenset = None  # Hall violator when no saturating matching exists

    @property
    def found(self):
        return self.matching is not None


# --- HALL MATCHING ---

def bipartite_match(left, right):
    """Matching saturating `left` (a list of allowed-colour sets) into `right`."""
    universe = set(right)
    options = [sorted(set(p) & universe) for p in left]
    owner = {}

    def augment(t, visited):
        for c in options[t]:
            if c in visited:
                continue
            visited.add(c)
            if c not in owner or augment(owner[c], visited):
                owner[c] = t
                return True
        return False

    for t in range(len(options)):
        visited = set()
        if not augment(t, visited):
            # left vertices reachable by alternating paths from t
            reached = {t} | {owner[c] for c in visited if c in owner}
            return MatchResult(violator=frozenset(reached))
    return MatchResult(matching={t: c for c, t in owner.items()})


# --- PAINTER ---

class _Painter:
    """Collects a colouring cell by cell and turns capacity breaches into theory errors."""

    def __init__(self, G, strategy, state):
        self.G = G
        self.strategy = strategy
        self.state = state
        self.assignment = {}

    def fix(self, v, colour):
        self.assignment[v] = colour

    def paint(self, mask, request):
        if not mask:
            return
        try:
            piece = colour_cograph_with_palette(self.G, request.allowed, within=mask)
        except CapacityError as e:
            raise TheoryViolation("capacity", f"{self.strategy}: {request.cell} needs {e.needed} colours, "
                                  f"palette {list(request.allowed)}", state=self.state)
        except NotCographError as e:
            raise TheoryViolation("P4-free", f"{self.strategy}: {request.cell} contains an induced P4",
                                  state=self.state, witness=e.witness)
        self.assignment.update(piece.assignment)


def _without(omega, *taken):
    return tuple(c for c in range(1, omega + 1) if c not in taken)


def _finish(G, painter, strategy, omega, k, partition, relabeling=None, trail=(), cap=None):
    assignment = painter.assignment
    missing = [v for v in range(G.n) if v not in assignment]
    if missing:
        raise TheoryViolation("total", f"{strategy} left vertices {missing[:5]} uncoloured", state=partition)
    ok, edge = verify_colouring(G, assignment)
    if not ok:
        raise TheoryViolation("proper", f"{strategy} coloured both ends of {edge} alike", state=partition)
    rank = {c: r for r, c in enumerate(sorted(set(assignment.values())), start=1)}
    colouring = Colouring.from_assignment({v: rank[c] for v, c in assignment.items()})
    bound = theorem_bound(omega)
    limit = bound if cap is None else min(bound, cap)
    if colouring.colours_used > limit:
        raise TheoryViolation("bound", f"{strategy} used {colouring.colours_used} colours, bound {limit}",
                              state=partition)
    notify('DEBUG', f"{strategy}: w={omega} k={k} colours={colouring.colours_used}")
    return StrategyOutcome(strategy=strategy, colouring=colouring, omega=omega, k=k, bound=bound,
                           partition=partition, relabeling=relabeling, trail=list(trail) + [strategy])


# --- DISPATCH ---

def colour(G):
    verdict = class_membership(G)
    if not verdict.in_class:
        raise OutOfClassError(verdict.witness)
    return dispatch(G)


def dispatch(G):
    """Strategy selection for an in-class graph."""
    if G.n == 0:
        return _finish(G, _Painter(G, TRIVIAL, {}), TRIVIAL, 0, 0, {})
    if G.edge_count() == 0:
        painter = _Painter(G, TRIVIAL, {})
        for v in range(G.n):
            painter.fix(v, 1)
        return _finish(G, painter, TRIVIAL, 1, 0, {"A": [0]})

    A = max_clique(G)
    P = primary_partition(G, A)
    omega = P.omega
    if omega == 2:
        return colour_omega2(G, P)
    if not P.H:
        painter = _Painter(G, TRIVIAL, {})
        for i, a in enumerate(P.A, start=1):
            painter.fix(a, i)
        return _finish(G, painter, TRIVIAL, omega, 0, snapshot(P))

    k = clique_number(G, P.H)
    if k <= 2:
        return colour_ld21(G, P, k=k) if omega == 3 else colour_ld2(G, P, k=k)

    anti = find_kk_anticomplete_to_A(G, P, k)
    if anti:
        return colour_c2(G, P, anti)
    B = max_clique(G, P.H)
    star, _ = check_condition_star(G, P.A, B)
    if not star:
        return colour_cd1(G, P, B)
    if k == 3:
        if omega == 3:
            return colour_l31(G, P)
        if omega == 4:
            return colour_l32(G, P)
        if omega == 5:
            return colour_l33(G, P)
        return colour_ld2(G, P, k=k)
    return colour_l41(G, P, secondary_partition(G, P, B))


# --- OMEGA 2 ---

def colour_omega2(G, P, trail=()):
    if P.omega != 2:
        raise InputError(f"LP2P4 needs w = 2, got {P.omega}")
    state = snapshot(P)
    painter = _Painter(G, LP2P4, state)
    a1, a2 = P.A
    painter.fix(a1, 1)
    painter.fix(a2, 2)
    for i, colour_ in ((1, 2), (2, 1)):
        painter.paint(P.C[i], PaletteRequest(f"C_{i}", (colour_,)))
    painter.paint(P.C[0], PaletteRequest("C_0", (3, 4)))
    return _finish(G, painter, LP2P4, 2, clique_number(G, P.H), state, trail=trail)


# --- SMALL k ---

def colour_ld2(G, P, k=None, trail=()):
    omega = P.omega
    if omega < 4:
        raise InputError(f"LD2 needs w >= 4, got {omega}")
    k = clique_number(G, P.H) if k is None else k
    half = omega // 2
    state = snapshot(P)
    painter = _Painter(G, LD2, state)
    for i, a in enumerate(P.A, start=1):
        painter.fix(a, i)
    x_palette = tuple(range(half + 1, half + k + 1))
    if k <= half:
        y_palette = tuple(range(1, half + 1))
    else:
        y_palette = tuple(range(1, half + 1)) + tuple(range(half + k + 1, 2 * k + 1))
    painter.paint(P.union(range(0, half + 1)), PaletteRequest(f"C_0..C_{half}", x_palette))
    painter.paint(P.union(range(half + 1, omega + 1)), PaletteRequest(f"C_{half + 1}..C_{omega}", y_palette))
    return _finish(G, painter, LD2, omega, k, state, trail=trail, cap=max(2 * k, omega))


def colour_ld21(G, P, k=None, trail=()):
    if P.omega != 3:
        raise InputError(f"LD21 needs w = 3, got {P.omega}")
    k = clique_number(G, P.H) if k is None else k
    if k > 2:
        raise InputError(f"LD21 needs k <= 2, got {k}")
    state = snapshot(P)
    painter = _Painter(G, LD21, state)
    for i, a in enumerate(P.A, start=1):
        painter.fix(a, i)
    painter.paint(P.union((0, 1)), PaletteRequest("C_0+C_1", (2, 3)))
    painter.paint(P.C[2], PaletteRequest("C_2", (1, 4)))
    painter.paint(P.C[3], PaletteRequest("C_3", (5, 6)))
    return _finish(G, painter, LD21, 3, k, state, trail=trail)


# --- k >= 3: B SEEN BY ONE VERTEX OF A ---

def _diagonal_orders(cells, rows, cols, first_row=(), shift=0):
    """Row/column orders putting cell t (1-based) at (t + shift, t)."""
    cells = sorted(cells, key=lambda c: c[1])
    col_order = [j for _, j in cells] + [j for j in cols if j not in {c[1] for c in cells}]
    used_rows = set(first_row) | {c[0] for c in cells}
    row_order = list(first_row) + [i for i, _ in cells] + [i for i in rows if i not in used_rows]
    return row_order, col_order


def _distinct_lines(cells):
    rows = [i for i, _ in cells]
    cols = [j for _, j in cells]
    return len(set(rows)) == len(rows) and len(set(cols)) == len(cols)


def colour_cd1(G, P, B, trail=()):
    omega, k = P.omega, len(B)
    if omega == 3:
        raise InputError("w = 3 with a vertex of A seeing two vertices of B: that vertex and B form a K4")
    b_mask = mask_of(B)
    hubs = [a for a in P.A if (G.rows[a] & b_mask).bit_count() >= 2]
    if not hubs:
        raise InputError("CD1 needs a vertex of A with two neighbours in B")
    hub = hubs[0]
    state = {"A": list(P.A), "B": list(B), "hub": hub}
    if G.rows[hub] & b_mask != b_mask:
        raise TheoryViolation("CD1", f"{hub} sees part of B only", state=state)
    if any(G.rows[a] & b_mask for a in P.A if a != hub):
        raise TheoryViolation("CD1", "a second vertex of A sees B", state=state)
    if k > omega - 1:
        raise TheoryViolation("CD1", f"k = {k} exceeds w - 1", state=state)

    P1 = primary_partition(G, (hub,) + tuple(a for a in P.A if a != hub))
    SP1 = secondary_partition(G, P1, B)
    cells = SP1.nonempty_S()
    if any(i == 1 for i, _ in cells):
        raise TheoryViolation("CD1-(1)", "S_1^j is nonempty", state=snapshot(P1, SP1))
    if not _distinct_lines(cells):
        raise TheoryViolation("CD1-(2)", f"nonempty S cells {cells} share a row or column",
                              state=snapshot(P1, SP1))
    row_order, col_order = _diagonal_orders(cells, range(2, omega + 1), range(1, k + 1), first_row=(1,))
    P2, SP2 = relabel(G, P1, SP1, row_order, col_order)
    state = snapshot(P2, SP2)
    painter = _Painter(G, CD1, state)
    for i, a in enumerate(P2.A, start=1):
        painter.fix(a, i)
    for i, b in enumerate(SP2.B, start=1):
        painter.fix(b, i + 1)
    for (i, j) in SP2.nonempty_S():
        if i != j + 1:
            raise TheoryViolation("CD1-(2)", f"S_{i}^{j} off the shifted diagonal after relabeling", state=state)
        painter.paint(SP2.S[(i, j)], PaletteRequest(f"S_{i}_{j}", (j,)))
    painter.paint(SP2.Z | SP2.T[1], PaletteRequest("Z+T_1", _without(omega, 1)))
    for i in range(1, k + 1):
        painter.paint(SP2.R[i], PaletteRequest(f"R_{i}", _without(omega, i + 1)))
    for i in range(2, omega + 1):
        painter.paint(SP2.T[i], PaletteRequest(f"T_{i}", _without(omega, i)))
    relabeling = {"A": list(P2.A), "B": list(SP2.B)}
    return _finish(G, painter, CD1, omega, k, state, relabeling, trail)


# --- k >= 3: A K_k ANTICOMPLETE TO A ---

def colour_c2(G, P, B_anti, trail=()):
    omega, k = P.omega, len(B_anti)
    b_mask = mask_of(B_anti)
    if any(G.rows[a] & b_mask for a in P.A):
        raise InputError("C2 needs a clique of H anticomplete to A")
    SP1 = secondary_partition(G, P, B_anti)
    cells = SP1.nonempty_S()
    if not _distinct_lines(cells):
        raise TheoryViolation("C2-(1)", f"nonempty S cells {cells} share a row or column",
                              state=snapshot(P, SP1))
    row_order, col_order = _diagonal_orders(cells, range(1, omega + 1), range(1, k + 1))
    P2, SP2 = relabel(G, P, SP1, row_order, col_order)
    state = snapshot(P2, SP2)
    painter = _Painter(G, C2, state)
    for i, a in enumerate(P2.A, start=1):
        painter.fix(a, i)
    for i, b in enumerate(SP2.B, start=1):
        painter.fix(b, i)
    for (i, j) in SP2.nonempty_S():
        if i != j:
            raise TheoryViolation("C2-(1)", f"S_{i}^{j} off the diagonal after relabeling", state=state)
        shifted = i + 1 if i < k else 1
        painter.paint(SP2.S[(i, j)], PaletteRequest(f"S_{i}_{j}", (shifted,)))
    painter.paint(SP2.Z, PaletteRequest("Z", _without(omega)))
    for i in range(1, k + 1):
        painter.paint(SP2.R[i], PaletteRequest(f"R_{i}", _without(omega, i)))
    for i in range(1, omega + 1):
        painter.paint(SP2.T[i], PaletteRequest(f"T_{i}", _without(omega, i)))
    relabeling = {"A": list(P2.A), "B": list(SP2.B)}
    return _finish(G, painter, C2, omega, k, state, relabeling, trail)


# --- k = 3 ---

def _redispatch(G, P, triangle, trail):
    """A triangle met during a union search, taken as B, may settle the case directly."""
    t_mask = mask_of(triangle)
    if not any(G.rows[a] & t_mask for a in P.A):
        notify('DEBUG', f"{trail[-1]}: triangle {list(triangle)} is anticomplete to A")
        return colour_c2(G, P, triangle, trail)
    if any((G.rows[a] & t_mask).bit_count() >= 2 for a in P.A):
        notify('DEBUG', f"{trail[-1]}: triangle {list(triangle)} breaks the matching condition")
        return colour_cd1(G, P, triangle, trail)
    return None


def _search_unions(G, P, index_sets, with_c0, strategy, trail):
    """First index set whose union of C cells is triangle-free, or a re-dispatched outcome."""
    for chosen in index_sets:
        mask = P.union(chosen) | (P.C[0] if with_c0 else 0)
        triangle = find_triangle_in(G, mask)
        if triangle is None:
            return chosen
        outcome = _redispatch(G, P, triangle.vertices, list(trail) + [strategy])
        if outcome is not None:
            return outcome
    raise TheoryViolation(strategy, "every candidate union contains a triangle",
                          state=snapshot(P))


def _require_k3(G, P, omega, strategy):
    if P.omega != omega:
        raise InputError(f"{strategy} needs w = {omega}, got {P.omega}")
    k = clique_number(G, P.H)
    if k != 3:
        raise InputError(f"{strategy} needs k = 3, got {k}")
    return k


def colour_l31(G, P, trail=()):
    k = _require_k3(G, P, 3, L31)
    found = _search_unions(G, P, [(1,), (2,), (3,)], True, L31, trail)
    if isinstance(found, StrategyOutcome):
        return found
    (i,) = found
    j, l = [x for x in (1, 2, 3) if x != i]
    state = snapshot(P)
    painter = _Painter(G, L31, state)
    for t, a in enumerate(P.A, start=1):
        painter.fix(a, t)
    painter.paint(P.C[0] | P.C[i], PaletteRequest(f"C_0+C_{i}", (j, l)))
    painter.paint(P.C[j], PaletteRequest(f"C_{j}", (i, 4)))
    painter.paint(P.C[l], PaletteRequest(f"C_{l}", (5, 6)))
    return _finish(G, painter, L31, 3, k, state, trail=trail)


def colour_l32(G, P, trail=()):
    k = _require_k3(G, P, 4, L32)
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    found = _search_unions(G, P, pairs, True, L32, trail)
    if isinstance(found, StrategyOutcome):
        return found
    i, j = found
    p, q = [x for x in (1, 2, 3, 4) if x not in found]
    triangle = find_triangle_in(G, P.C[p] | P.C[q])
    if triangle is not None:
        outcome = _redispatch(G, P, triangle.vertices, list(trail) + [L32])
        if outcome is not None:
            return outcome
        raise TheoryViolation(L32, f"C_{p}+C_{q} holds triangle {list(triangle.vertices)}",
                              state=snapshot(P))
    state = snapshot(P)
    painter = _Painter(G, L32, state)
    for t, a in enumerate(P.A, start=1):
        painter.fix(a, t)
    painter.paint(P.C[0] | P.C[i] | P.C[j], PaletteRequest(f"C_0+C_{i}+C_{j}", (p, q)))
    painter.paint(P.C[p] | P.C[q], PaletteRequest(f"C_{p}+C_{q}", (i, j)))
    return _finish(G, painter, L32, 4, k, state, trail=trail)


def colour_l33(G, P, trail=()):
    k = _require_k3(G, P, 5, L33)
    triples = [(i, j, l) for i in range(1, 6) for j in range(i + 1, 6) for l in range(j + 1, 6)]
    found = _search_unions(G, P, triples, False, L33, trail)
    if isinstance(found, StrategyOutcome):
        return found
    p, q = [x for x in range(1, 6) if x not in found]
    state = snapshot(P)
    painter = _Painter(G, L33, state)
    for t, a in enumerate(P.A, start=1):
        painter.fix(a, t)
    label = "+".join(f"C_{x}" for x in found)
    painter.paint(P.union(found), PaletteRequest(label, (p, q)))
    painter.paint(P.C[0] | P.C[p] | P.C[q], PaletteRequest(f"C_0+C_{p}+C_{q}", tuple(found)))
    return _finish(G, painter, L33, 5, k, state, trail=trail)


# --- k >= 4 ---

def _b_colours(k, m):
    if m == 1:
        return [i + 1 for i in range(1, k)] + [1]
    return [i + 1 for i in range(1, m)] + [1] + list(range(m + 1, k + 1))


def colour_l41(G, P, SP, trail=()):
    omega, k = P.omega, SP.k
    if omega < 4 or k < 4:
        raise InputError(f"L41 needs w >= 4 and k >= 4, got w={omega}, k={k}")
    star, offender = check_condition_star(G, P.A, SP.B)
    if not star:
        raise InputError(f"L41 needs [A,B] to be a matching; {offender} breaks it")
    at_b = {b: j for j, b in enumerate(SP.B, start=1)}
    pairs = []
    for i, a in enumerate(P.A, start=1):
        seen = [b for b in SP.B if G.adjacent(a, b)]
        if seen:
            pairs.append((i, at_b[seen[0]]))
    m = len(pairs)
    if m == 0:
        raise TheoryViolation("**", "A is anticomplete to B", state=snapshot(P, SP))
    row_order, col_order = _diagonal_orders(pairs, range(1, omega + 1), range(1, k + 1))
    P2, SP2 = relabel(G, P, SP, row_order, col_order)
    report = verify_s_properties(G, P2, SP2)
    state = snapshot(P2, SP2)
    painter = _Painter(G, L41, state)
    a_colour = {i: i for i in range(1, omega + 1)}
    b_colour = dict(enumerate(_b_colours(k, m), start=1))
    for i, a in enumerate(P2.A, start=1):
        painter.fix(a, a_colour[i])
    for j, b in enumerate(SP2.B, start=1):
        painter.fix(b, b_colour[j])

    if omega >= 5:
        for (i, j) in SP2.nonempty_S():
            allowed = _without(omega, a_colour[i], b_colour[j])
            painter.paint(SP2.S[(i, j)], PaletteRequest(f"S_{i}_{j}", allowed))
    else:
        for comp, cells in report.components:
            _paint_component(G, painter, SP2, comp, cells, a_colour, b_colour, state)

    painter.paint(SP2.Z, PaletteRequest("Z", _without(omega)))
    for j in range(1, k + 1):
        painter.paint(SP2.R[j], PaletteRequest(f"R_{j}", _without(omega, b_colour[j])))
    for i in range(1, omega + 1):
        painter.paint(SP2.T[i], PaletteRequest(f"T_{i}", _without(omega, a_colour[i])))
    relabeling = {"A": list(P2.A), "B": list(SP2.B)}
    return _finish(G, painter, L41, omega, k, state, relabeling, trail)


def _paint_component(G, painter, SP, comp, cells, a_colour, b_colour, state):
    """w = 4: one Hall slot per colour a cell needs, colours distinct within the component."""
    slots, owners, pieces = [], [], {}
    for (i, j) in cells:
        piece = SP.S[(i, j)] & comp
        pieces[(i, j)] = piece
        allowed = set(_without(4, a_colour[i], b_colour[j]))
        for _ in range(clique_number(G, piece)):
            slots.append(allowed)
            owners.append((i, j))
    result = bipartite_match(slots, range(1, 5))
    if not result.found:
        stuck = sorted({owners[t] for t in result.violator})
        raise TheoryViolation("Hall", f"component {sorted(iter_bits(comp))} has no palette matching",
                              state={**state, "cells": [list(c) for c in stuck],
                                     "palettes": [sorted(slots[t]) for t in sorted(result.violator)]})
    granted = {}
    for t, colour_ in sorted(result.matching.items()):
        granted.setdefault(owners[t], []).append(colour_)
    for (i, j), piece in pieces.items():
        painter.paint(piece, PaletteRequest(f"S_{i}_{j}", tuple(sorted(granted[(i, j)]))))


def certificate_for(outcome, verdict=None):
    """Packs an outcome into the certificate document written by the CLI."""
    check = {"in_class": True, "witness": None} if verdict is None else verdict.to_dict()
    n = len(outcome.colouring.assignment)
    return CertificateDocument(
        strategy=outcome.strategy, omega=outcome.omega, k=outcome.k, bound=outcome.bound,
        colours_used=outcome.colouring.colours_used, colouring=outcome.colouring.as_list(n),
        partition=outcome.partition, class_check=check, relabeling=outcome.relabeling,
        trail=outcome.trail)
