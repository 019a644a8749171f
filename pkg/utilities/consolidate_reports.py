# ---------------------------------------------------------------------------------------
# CHIBOUND REPORT CONSOLIDATOR
# ---------------------------------------------------------------------------------------
# PURPOSE:  Folds fuzz report chunks (reports/incoming/*.csv) into one master CSV.
#           Each chunk is deleted once appended; a chunk that fails to load is kept
#           for the next run.
# ---------------------------------------------------------------------------------------
import os
import sys

import pandas as pd

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from chibound.cli import REPORT_COLUMNS  # noqa: E402
from chibound.config import load_settings  # noqa: E402
from chibound.notifier import notify  # noqa: E402

MASTER_NAME = "master_fuzz_report.csv"


def ingest_chunk(file_path):
    """Loads one chunk; None when it is unreadable or has the wrong columns."""
    try:
        chunk = pd.read_csv(file_path)
    except (OSError, ValueError) as e:
        notify('ERROR', f"Ingest error {file_path}: {e}")
        return None
    missing = [c for c in REPORT_COLUMNS if c not in chunk.columns]
    if missing:
        notify('ERROR', f"{os.path.basename(file_path)} lacks columns {missing}")
        return None
    chunk = chunk[list(REPORT_COLUMNS)]
    chunk.insert(0, "chunk", os.path.basename(file_path))
    return chunk


def run_consolidation(reports_dir):
    incoming = os.path.join(reports_dir, "incoming")
    master_path = os.path.join(reports_dir, MASTER_NAME)
    if not os.path.isdir(incoming):
        return 0

    files = sorted(f for f in os.listdir(incoming) if f.endswith(".csv"))
    if not files:
        return 0
    notify('REPORT', f"Processing {len(files)} chunks...")

    merged = 0
    for filename in files:
        full_path = os.path.join(incoming, filename)
        chunk = ingest_chunk(full_path)
        if chunk is None:
            notify('WARN', f"Failed to ingest {filename} (keeping for retry)")
            continue
        chunk.to_csv(master_path, mode="a", index=False, header=not os.path.exists(master_path))
        os.remove(full_path)
        merged += len(chunk)
        notify('OK', f"Appended {len(chunk)} rows from {filename}")
    return merged


def summarise(reports_dir):
    """Status counts per strategy over the master report."""
    master_path = os.path.join(reports_dir, MASTER_NAME)
    if not os.path.exists(master_path):
        return None
    master = pd.read_csv(master_path)
    return master.pivot_table(index="strategy", columns="status", values="name",
                              aggfunc="count", fill_value=0)


if __name__ == '__main__':
    settings = load_settings()
    reports_dir = sys.argv[1] if len(sys.argv) > 1 else settings["REPORTS_DIR"]
    run_consolidation(reports_dir)
    table = summarise(reports_dir)
    if table is not None:
        print(table.to_string())
