# ---------------------------------------------------------------------------------------
# CHIBOUND I/O - graph_io.py
# ---------------------------------------------------------------------------------------
# graph6 records, DIMACS "p edge" files and the colouring certificate (schema 1).
# Parsers report the byte offset (graph6), line number (DIMACS) or field name
# (certificate) of the first problem they meet.
# ---------------------------------------------------------------------------------------
import json
import sys
from dataclasses import dataclass, field

from .errors import ParseError, SchemaError, SizeError
from .graph import Graph, from_edges

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = 1 << 18
SCHEMA_VERSION = 1
STRATEGY_IDS = ("LP2P4", "LD21", "LD2", "CD1", "C2", "L31", "L32", "L33", "L41", "TRIVIAL")
WITNESS_KINDS = ("Diamond", "P2UnionP4", "Triangle", "P4", "Clique")


# --- GRAPH6 ---

def _as_bytes(text):
    if not isinstance(text, str):
        return bytes(text)
    try:
        return text.encode("ascii")
    except UnicodeEncodeError as e:
        raise ParseError(f"non-ASCII character {text[e.start]!r}", offset=e.start)


def parse_graph6(text):
    data = _as_bytes(text).rstrip(b"\r\n\t ")
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    for pos, byte in enumerate(data):
        if byte < 63 or byte > 126:
            raise ParseError(f"byte {byte} outside 63..126", offset=base + pos)
    if not data:
        raise ParseError("empty graph6 record", offset=base)

    if data[0] != 126:
        n, head = data[0] - 63, 1
    elif len(data) >= 4 and data[1] != 126:
        n, head = _six_bit_number(data[1:4]), 4
    elif len(data) >= 8 and data[1] == 126:
        n, head = _six_bit_number(data[2:8]), 8
    else:
        raise ParseError("truncated vertex count", offset=base + len(data))
    if n >= GRAPH6_MAX_N:
        raise ParseError(f"vertex count {n} is not below 2^18", offset=base)

    pairs = n * (n - 1) // 2
    expected = (pairs + 5) // 6
    body = data[head:]
    if len(body) != expected:
        raise ParseError(f"expected {expected} data bytes for n={n}, got {len(body)}",
                         offset=base + head + min(len(body), expected))

    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if byte >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    if expected:
        padding = 6 * expected - pairs
        if (body[-1] - 63) & ((1 << padding) - 1):
            raise ParseError("nonzero padding bits", offset=base + head + expected - 1)
    return Graph(n, rows)


def _six_bit_number(chunk):
    value = 0
    for byte in chunk:
        value = (value << 6) | (byte - 63)
    return value


def _encode_n(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(G):
    if G.n >= GRAPH6_MAX_N:
        raise SizeError("graph6 vertex count", GRAPH6_MAX_N - 1, G.n)
    out = bytearray(_encode_n(G.n))
    chunk, filled = 0, 0
    for j in range(1, G.n):
        for i in range(j):
            chunk = (chunk << 1) | (G.rows[j] >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + 63)
                chunk, filled = 0, 0
    if filled:
        out.append((chunk << (6 - filled)) + 63)
    return bytes(out)


# --- DIMACS ---

def parse_dimacs(text):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii", errors="replace")
    n = m = None
    edges = []
    last = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        last = number
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second problem line", line=number)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", line=number)
            n, m = _dimacs_int(parts[2], number), _dimacs_int(parts[3], number)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", line=number)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", line=number)
            u, v = _dimacs_int(parts[1], number), _dimacs_int(parts[2], number)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint outside 1..{n}", line=number)
            if u == v:
                raise ParseError(f"self-loop at {u}", line=number)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type '{parts[0]}'", line=number)
    if n is None:
        raise ParseError("missing problem line", line=max(last, 1))
    if len(edges) != m:
        raise ParseError(f"problem line announces {m} edges, found {len(edges)}", line=max(last, 1))
    return from_edges(n, edges)


def _dimacs_int(token, number):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"'{token}' is not an integer", line=number)
    if value < 0:
        raise ParseError(f"negative value {value}", line=number)
    return value


def write_dimacs(G):
    edges = G.edges()
    lines = [f"p edge {G.n} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


# --- FILES ---

def detect_format(path):
    lowered = str(path).lower()
    if lowered.endswith((".dimacs", ".col", ".clq")):
        return "dimacs"
    return "graph6"


def read_graph_file(path, fmt=None):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as f:
            data = f.read()
    fmt = fmt or detect_format(path)
    return parse_dimacs(data) if fmt == "dimacs" else parse_graph6(data)


def format_graph(G, fmt="graph6"):
    if fmt == "dimacs":
        return write_dimacs(G).encode("ascii")
    return write_graph6(G) + b"\n"


# --- CERTIFICATE ---

@dataclass
class CertificateDocument:
    strategy: str
    omega: int
    k: int
    bound: int
    colours_used: int
    colouring: list
    partition: dict = field(default_factory=dict)
    class_check: dict = field(default_factory=lambda: {"in_class": True, "witness": None})
    relabeling: dict = None
    trail: list = None

    def to_dict(self):
        doc = {
            "schema": SCHEMA_VERSION,
            "strategy": self.strategy,
            "omega": self.omega,
            "k": self.k,
            "bound": self.bound,
            "colours_used": self.colours_used,
            "colouring": list(self.colouring),
            "partition": {name: sorted(cells) for name, cells in self.partition.items()},
            "class_check": self.class_check,
        }
        if self.relabeling is not None:
            doc["relabeling"] = {"A": list(self.relabeling["A"]), "B": list(self.relabeling["B"])}
        if self.trail is not None:
            doc["trail"] = list(self.trail)
        return doc


def write_certificate(c):
    doc = c.to_dict()
    _validate_certificate(doc)
    return json.dumps(doc, indent=2) + "\n"


def parse_certificate(text):
    try:
        doc = json.loads(text)
    except ValueError as e:
        raise ParseError(f"certificate is not JSON: {e}", offset=getattr(e, "pos", None))
    _validate_certificate(doc)
    return CertificateDocument(
        strategy=doc["strategy"], omega=doc["omega"], k=doc["k"], bound=doc["bound"],
        colours_used=doc["colours_used"], colouring=list(doc["colouring"]),
        partition={name: list(cells) for name, cells in doc["partition"].items()},
        class_check=doc["class_check"], relabeling=doc.get("relabeling"), trail=doc.get("trail"))


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _int_list(name, values):
    if not isinstance(values, list) or not all(_is_int(v) and v >= 0 for v in values):
        raise SchemaError(name, "must be a list of non-negative integers")


def _validate_certificate(doc):
    if not isinstance(doc, dict):
        raise SchemaError("(root)", "must be an object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise SchemaError("schema", f"must be {SCHEMA_VERSION}")
    if doc.get("strategy") not in STRATEGY_IDS:
        raise SchemaError("strategy", f"must be one of {', '.join(STRATEGY_IDS)}")
    for name in ("omega", "k", "bound", "colours_used"):
        if not _is_int(doc.get(name)) or doc[name] < 0:
            raise SchemaError(name, "must be a non-negative integer")
    if doc["colours_used"] > doc["bound"]:
        raise SchemaError("colours_used", f"{doc['colours_used']} exceeds bound {doc['bound']}")

    colouring = doc.get("colouring")
    if not isinstance(colouring, list) or not all(_is_int(c) for c in colouring):
        raise SchemaError("colouring", "must be a list of integers")
    if any(c < 1 or c > doc["colours_used"] for c in colouring):
        raise SchemaError("colouring", f"colours must lie in 1..{doc['colours_used']}")
    if set(colouring) != set(range(1, doc["colours_used"] + 1)):
        raise SchemaError("colouring", "every colour 1..colours_used must be used")

    partition = doc.get("partition")
    if not isinstance(partition, dict):
        raise SchemaError("partition", "must be an object of vertex lists")
    for name, cells in partition.items():
        _int_list(f"partition.{name}", cells)
        if cells != sorted(cells):
            raise SchemaError(f"partition.{name}", "vertex lists must be ascending")

    check = doc.get("class_check")
    if not isinstance(check, dict) or not isinstance(check.get("in_class"), bool):
        raise SchemaError("class_check", "must hold a boolean in_class")
    witness = check.get("witness")
    if witness is not None:
        if not isinstance(witness, dict) or witness.get("kind") not in WITNESS_KINDS:
            raise SchemaError("class_check.witness", "must carry a known kind")
        _int_list("class_check.witness.vertices", witness.get("vertices"))

    if "relabeling" in doc:
        relabeling = doc["relabeling"]
        if not isinstance(relabeling, dict) or set(relabeling) != {"A", "B"}:
            raise SchemaError("relabeling", "must hold exactly A and B")
        for side in ("A", "B"):
            _int_list(f"relabeling.{side}", relabeling[side])
    if "trail" in doc:
        trail = doc["trail"]
        if not isinstance(trail, list) or any(t not in STRATEGY_IDS for t in trail):
            raise SchemaError("trail", "must list strategy ids")


def verdict_document(verdict):
    doc = {"schema": SCHEMA_VERSION}
    doc.update(verdict.to_dict())
    return doc
