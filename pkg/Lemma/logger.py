# logger.py
"""
Execution logger: appends a record to a local CSV run log (cfg.log_path).
"""

import csv
import os
from datetime import datetime

from .status import update as status_update

FIELDNAMES = [
    "timestamp",
    "command",
    "function",
    "alpha",
    "tol_contact",
    "tol_identity",
    "samples",
    "seed",
    "outcome",
    "exit_code",
    "duration_seconds",
]


def log_execution(cfg, command, function, outcome, exit_code, duration):
    if not cfg.log_path:
        return

    row = {
        "timestamp": datetime.now().isoformat(),
        "command": command,
        "function": function,
        "alpha": cfg.alpha,
        "tol_contact": cfg.tol_contact,
        "tol_identity": cfg.tol_identity,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "outcome": outcome,
        "exit_code": exit_code,
        "duration_seconds": round(duration, 3),
    }

    # header only when the file is new
    write_header = not os.path.exists(cfg.log_path) or os.path.getsize(cfg.log_path) == 0
    with open(cfg.log_path, "a", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=FIELDNAMES, lineterminator="\n")
        if write_header:
            writer.writeheader()
        writer.writerow(row)
    status_update("Log saved.")
