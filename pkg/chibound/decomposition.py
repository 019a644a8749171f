# ---------------------------------------------------------------------------------------
# CHIBOUND DECOMPOSITION - decomposition.py
# ---------------------------------------------------------------------------------------
# Two-level partition around a maximum clique A of G and a maximum clique B of H = G - A:
#   C_0..C_w   by N_A(v)                     (primary)
#   Z, R_j, T_i, S_i^j  by (N_A(v), N_B(v))  (secondary, k >= 3)
# plus the side conditions the colouring strategies rely on. Cells are int masks.
# ---------------------------------------------------------------------------------------
from dataclasses import dataclass, field

from .errors import InputError, TheoryViolation
from .graph import components, iter_bits, lowest_bit, mask_of
from .recognition import Witness, WitnessKind, clique_number, find_clique_of_size


@dataclass(frozen=True)
class PrimaryPartition:
    A: tuple          # a_1..a_w as vertex ids
    C: tuple          # masks C_0..C_w
    H: int            # mask of V(G) - A

    @property
    def omega(self):
        return len(self.A)

    @property
    def A_mask(self):
        return mask_of(self.A)

    def union(self, indices):
        mask = 0
        for i in indices:
            mask |= self.C[i]
        return mask


@dataclass(frozen=True)
class SecondaryPartition:
    B: tuple                                 # b_1..b_k
    R: dict = field(default_factory=dict)    # j -> mask, j in 1..k
    S: dict = field(default_factory=dict)    # (i, j) -> mask
    T: dict = field(default_factory=dict)    # i -> mask, i in 1..w
    Z: int = 0
    columns: tuple = ()                      # Cb_0..Cb_k: V(H) - B by neighbour in B

    @property
    def k(self):
        return len(self.B)

    @property
    def B_mask(self):
        return mask_of(self.B)

    @property
    def S_mask(self):
        mask = 0
        for cell in self.S.values():
            mask |= cell
        return mask

    def nonempty_S(self):
        return sorted(key for key, cell in self.S.items() if cell)


@dataclass
class SReport:
    """Result of verify_s_properties: G[S] components and the cells each one meets."""
    components: list = field(default_factory=list)    # [(mask, [(i, j), ...]), ...]


def _index(order):
    return {v: pos + 1 for pos, v in enumerate(order)}


def _require_clique(G, vertices, name):
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise InputError(f"{name} lists a vertex twice")
    mask = G.as_mask(vs)
    for v in vs:
        if (G.rows[v] | 1 << v) & mask != mask:
            raise InputError(f"{name} is not a clique")
    return mask


# --- PRIMARY ---

def primary_partition(G, A):
    A = tuple(A)
    a_mask = _require_clique(G, A, "A")
    at = _index(A)
    omega = len(A)
    cells = [0] * (omega + 1)
    H = G.full & ~a_mask
    for v in iter_bits(H):
        seen = G.rows[v] & a_mask
        hits = seen.bit_count()
        if hits == 0:
            cells[0] |= 1 << v
        elif hits == 1:
            cells[at[lowest_bit(seen)]] |= 1 << v
        else:
            raise TheoryViolation("N_A", f"vertex {v} has {hits} neighbours in A",
                                  state={"A": list(A), "vertex": v},
                                  witness=_many_neighbours_witness(G, v, A, seen))
    return PrimaryPartition(A=A, C=tuple(cells), H=H)


def _many_neighbours_witness(G, v, clique, seen):
    """v sees two or more vertices of a clique: a diamond, or a larger clique."""
    inside = list(iter_bits(seen))
    missing = [c for c in clique if not seen >> c & 1]
    if missing:
        return Witness(WitnessKind.DIAMOND, (v, inside[0], missing[0], inside[1]))
    return Witness(WitnessKind.CLIQUE, tuple(sorted(tuple(clique) + (v,))))


# --- SECONDARY ---

def secondary_partition(G, P, B):
    B = tuple(B)
    b_mask = _require_clique(G, B, "B")
    if b_mask & ~P.H:
        raise InputError("B must lie inside H")
    if len(B) < 3:
        raise InputError(f"secondary partition needs k >= 3, got {len(B)}")
    at_a, at_b = _index(P.A), _index(B)
    a_mask = P.A_mask
    omega, k = P.omega, len(B)
    R = {j: 0 for j in range(1, k + 1)}
    T = {i: 0 for i in range(1, omega + 1)}
    S = {(i, j): 0 for i in range(1, omega + 1) for j in range(1, k + 1)}
    columns = [0] * (k + 1)
    Z = 0
    for v in iter_bits(P.H & ~b_mask):
        bit = 1 << v
        seen_b = G.rows[v] & b_mask
        if seen_b.bit_count() > 1:
            raise TheoryViolation("N_B", f"vertex {v} has {seen_b.bit_count()} neighbours in B",
                                  state={"B": list(B), "vertex": v},
                                  witness=_many_neighbours_witness(G, v, B, seen_b))
        seen_a = G.rows[v] & a_mask
        i = at_a[lowest_bit(seen_a)] if seen_a else 0
        j = at_b[lowest_bit(seen_b)] if seen_b else 0
        columns[j] |= bit
        if i == 0 and j == 0:
            Z |= bit
        elif i == 0:
            R[j] |= bit
        elif j == 0:
            T[i] |= bit
        else:
            S[(i, j)] |= bit
    for (i, j), cell in S.items():
        if not cell:
            continue
        a, b = P.A[i - 1], B[j - 1]
        if G.adjacent(a, b):
            # a_i b_j x y may be a K4; only the diamond case is excluded
            continue
        for x in iter_bits(cell):
            inner = G.rows[x] & cell
            if inner:
                y = lowest_bit(inner)
                raise TheoryViolation("S-stable", f"S_{i}^{j} holds the edge ({x},{y})",
                                      state={"cell": f"S_{i}_{j}"},
                                      witness=Witness(WitnessKind.DIAMOND, (a, x, b, y)))
    return SecondaryPartition(B=B, R=R, S=S, T=T, Z=Z, columns=tuple(columns))


def cell_of(G, A, B, v):
    """Cell name of v in V(H) - B from its (N_A, N_B) signature."""
    a_mask, b_mask = mask_of(A), mask_of(B)
    seen_a, seen_b = G.rows[v] & a_mask, G.rows[v] & b_mask
    if seen_a.bit_count() > 1 or seen_b.bit_count() > 1:
        raise InputError(f"vertex {v} has no single-cell signature")
    i = list(A).index(lowest_bit(seen_a)) + 1 if seen_a else 0
    j = list(B).index(lowest_bit(seen_b)) + 1 if seen_b else 0
    if i == 0:
        return "Z" if j == 0 else f"R_{j}"
    return f"T_{i}" if j == 0 else f"S_{i}_{j}"


# --- SIDE CONDITIONS ---

def check_condition_star(G, A, B):
    """(True, None) when [A, B] is a matching, else (False, first offending vertex)."""
    a_mask, b_mask = mask_of(A), mask_of(B)
    for a in A:
        if (G.rows[a] & b_mask).bit_count() > 1:
            return False, a
    for b in B:
        if (G.rows[b] & a_mask).bit_count() > 1:
            return False, b
    return True, None


def find_kk_anticomplete_to_A(G, P, k):
    """A k-clique of H with no neighbour in A (so inside C_0), or None."""
    if k <= 0 or clique_number(G, P.C[0]) < k:
        return None
    return find_clique_of_size(G, P.C[0], k)


def _signature(G, mask, v):
    return G.rows[v] & mask


def verify_s_properties(G, P, SP):
    """Checks the anticompleteness facts between R, S, T, Z for w >= 4, k >= 4.

    Two vertices of different cells whose (A u B)-neighbourhoods together cover at most
    three vertices must be nonadjacent (this yields P1-P4). Edges between S_i^p and
    S_j^q with i != j and p != q are P7 violations when w >= 5; when w = 4 each
    component of G[S] must meet cells with pairwise distinct rows and columns.
    """
    omega, k = P.omega, SP.k
    if omega < 4 or k < 4:
        raise InputError(f"S-properties need w >= 4 and k >= 4, got w={omega}, k={k}")
    ab_mask = P.A_mask | SP.B_mask
    rest = P.H & ~SP.B_mask
    where = _cell_lookup(SP)
    for x in iter_bits(rest):
        sx = _signature(G, ab_mask, x)
        for y in iter_bits(G.rows[x] & rest):
            if y < x:
                continue
            sy = _signature(G, ab_mask, y)
            if sx == sy:
                continue
            cx, cy = where[x], where[y]
            if (sx | sy).bit_count() <= 3:
                raise TheoryViolation(_property_id(cx, cy),
                                      f"edge ({x},{y}) joins {_name(cx)} and {_name(cy)}",
                                      state={"edge": [x, y]})
            if omega >= 5:
                raise TheoryViolation("P7", f"edge ({x},{y}) joins {_name(cx)} and {_name(cy)}",
                                      state={"edge": [x, y]})
    report = SReport()
    for comp in components(G, SP.S_mask):
        cells = sorted({where[v][1] for v in iter_bits(comp)})
        rows = [i for i, _ in cells]
        cols = [j for _, j in cells]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise TheoryViolation("P6", f"component {sorted(iter_bits(comp))} repeats a row or column",
                                  state={"cells": [list(c) for c in cells]})
        report.components.append((comp, cells))
    return report


def _cell_lookup(SP):
    where = {}
    for v in iter_bits(SP.Z):
        where[v] = ("Z", None)
    for j, cell in SP.R.items():
        for v in iter_bits(cell):
            where[v] = ("R", j)
    for i, cell in SP.T.items():
        for v in iter_bits(cell):
            where[v] = ("T", i)
    for key, cell in SP.S.items():
        for v in iter_bits(cell):
            where[v] = ("S", key)
    return where


def _name(cell):
    family, index = cell
    if family == "Z":
        return "Z"
    if family == "S":
        return f"S_{index[0]}^{index[1]}"
    return f"{family}_{index}"


def _property_id(cx, cy):
    families = {cx[0], cy[0]}
    for family, pid in (("Z", "P1"), ("R", "P2"), ("T", "P3")):
        if family in families:
            return pid
    return "P4"


# --- SNAPSHOT ---

def snapshot(P, SP=None):
    """Nonempty cells as name -> ascending vertex list (certificate layout)."""
    cells = {"A": sorted(P.A)}
    if SP is not None:
        cells["B"] = sorted(SP.B)
    for i, cell in enumerate(P.C):
        if cell:
            cells[f"C_{i}"] = list(iter_bits(cell))
    if SP is not None:
        for j, cell in sorted(SP.R.items()):
            if cell:
                cells[f"R_{j}"] = list(iter_bits(cell))
        for (i, j), cell in sorted(SP.S.items()):
            if cell:
                cells[f"S_{i}_{j}"] = list(iter_bits(cell))
        for i, cell in sorted(SP.T.items()):
            if cell:
                cells[f"T_{i}"] = list(iter_bits(cell))
        if SP.Z:
            cells["Z"] = list(iter_bits(SP.Z))
        for j, cell in enumerate(SP.columns):
            if cell:
                cells[f"Cb_{j}"] = list(iter_bits(cell))
    return cells


def relabel(G, P, SP, row_order, col_order):
    """Recomputes both partitions with A and B re-indexed.

    row_order / col_order list old 1-based indices in their new positions.
    """
    A = tuple(P.A[i - 1] for i in row_order)
    B = tuple(SP.B[j - 1] for j in col_order)
    P2 = primary_partition(G, A)
    return P2, secondary_partition(G, P2, B)
