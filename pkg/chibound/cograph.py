# ---------------------------------------------------------------------------------------
# CHIBOUND COGRAPHS - cograph.py
# ---------------------------------------------------------------------------------------
# P4-free pieces are recognised by recursive complement-connectivity splitting and
# coloured exactly (omega colours) bottom-up over the cotree.
# ---------------------------------------------------------------------------------------
from dataclasses import dataclass, field

from .errors import CapacityError, NotCographError, TheoryViolation
from .graph import Graph, components, iter_bits, lowest_bit
from .recognition import find_p4_in

UNION = "Union"
JOIN = "Join"
LEAF = "Leaf"


@dataclass(frozen=True)
class Cotree:
    kind: str
    vertex: int = None
    children: tuple = ()

    def leaves(self):
        if self.kind == LEAF:
            return (self.vertex,)
        return tuple(v for child in self.children for v in child.leaves())

    def to_dict(self):
        if self.kind == LEAF:
            return {"leaf": self.vertex}
        return {self.kind.lower(): [c.to_dict() for c in self.children]}


@dataclass
class Colouring:
    """vertex -> colour (1-based). colours_used counts distinct colours."""
    assignment: dict = field(default_factory=dict)
    colours_used: int = 0

    @classmethod
    def from_assignment(cls, assignment):
        return cls(dict(assignment), len(set(assignment.values())))

    def as_list(self, n):
        return [self.assignment[v] for v in range(n)]

    def is_compact(self):
        used = set(self.assignment.values())
        return used == set(range(1, len(used) + 1))


def build_cotree(G, within=None):
    S = G.full if within is None else G.as_mask(within)
    if not S:
        return Cotree(UNION)
    return _split(G, S)


def _split(G, S):
    if S & (S - 1) == 0:
        return Cotree(LEAF, vertex=lowest_bit(S))
    parts = components(G, S)
    if len(parts) > 1:
        return Cotree(UNION, children=tuple(_split(G, p) for p in parts))
    parts = components(G, S, co=True)
    if len(parts) > 1:
        return Cotree(JOIN, children=tuple(_split(G, p) for p in parts))
    witness = find_p4_in(G, S)
    if witness is None:
        raise TheoryViolation("cotree", f"{sorted(iter_bits(S))} is connected and co-connected yet P4-free")
    raise NotCographError(witness)


def evaluate_cotree(T, n):
    rows = [0] * n

    def walk(node):
        if node.kind == LEAF:
            return 1 << node.vertex
        masks = [walk(c) for c in node.children]
        if node.kind == JOIN:
            for i, left in enumerate(masks):
                for right in masks[i + 1:]:
                    for v in iter_bits(left):
                        rows[v] |= right
                    for v in iter_bits(right):
                        rows[v] |= left
        mask = 0
        for m in masks:
            mask |= m
        return mask

    walk(T)
    return Graph(n, rows)


def cotree_clique_number(T):
    if T.kind == LEAF:
        return 1
    sizes = [cotree_clique_number(c) for c in T.children]
    if not sizes:
        return 0
    return sum(sizes) if T.kind == JOIN else max(sizes)


def _colour_tree(T):
    """Returns (assignment with internal colours 1..w, w)."""
    if T.kind == LEAF:
        return {T.vertex: 1}, 1
    coloured = [_colour_tree(c) for c in T.children]
    if T.kind == UNION:
        assignment = {}
        for part, _ in coloured:
            assignment.update(part)
        return assignment, max((w for _, w in coloured), default=0)
    # Join: blocks stacked in decreasing clique number, ties by least vertex
    coloured.sort(key=lambda item: (-item[1], min(item[0])))
    assignment, offset = {}, 0
    for part, w in coloured:
        for v, c in part.items():
            assignment[v] = c + offset
        offset += w
    return assignment, offset


def colour_cograph(G, within=None):
    assignment, width = _colour_tree(build_cotree(G, within))
    return Colouring(assignment, width)


def colour_cograph_with_palette(G, palette, within=None):
    palette = list(palette)
    assignment, width = _colour_tree(build_cotree(G, within))
    if width > len(palette):
        raise CapacityError(width, len(palette))
    return Colouring.from_assignment({v: palette[c - 1] for v, c in assignment.items()})
