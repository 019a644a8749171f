# ---------------------------------------------------------------------------------------
# CHIBOUND FIXTURE MAKER
# ---------------------------------------------------------------------------------------
# PURPOSE:  Rewrites the golden graph6 corpus under fixtures/ from the generators.
#           Run after any deliberate change to a construction, then review the diff.
# ---------------------------------------------------------------------------------------
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from chibound import generators  # noqa: E402
from chibound.config import load_settings  # noqa: E402
from chibound.graph_io import write_graph6  # noqa: E402
from chibound.notifier import notify  # noqa: E402


def corpus():
    """fixture file stem -> graph"""
    graphs = {
        "grotzsch": generators.grotzsch(),
        "schlafli_complement": generators.schlafli_complement(),
    }
    for n in range(4, 10):
        graphs[f"h_{n}"] = generators.h_n(n)
    for name, (build, _) in generators.STRATEGY_FIXTURES.items():
        graphs[name] = build()
    return graphs


def write_fixtures(folder):
    os.makedirs(folder, exist_ok=True)
    written = []
    for stem, G in sorted(corpus().items()):
        path = os.path.join(folder, f"{stem}.g6")
        with open(path, "wb") as f:
            f.write(write_graph6(G) + b"\n")
        written.append(path)
        notify('OK', f"{stem}: n={G.n}, m={G.edge_count()} -> {path}")
    return written


if __name__ == '__main__':
    settings = load_settings()
    write_fixtures(sys.argv[1] if len(sys.argv) > 1 else settings["FIXTURES_DIR"])
