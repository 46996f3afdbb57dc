"""Command line front end: run verification tasks and write a JSON report.

    verify --data-dir PATH [--task ID[,ID...]] [--report FILE] [--jobs N] [--list]

The data directory defaults to the packaged tables; the NLSVERIFY_DATA
environment variable overrides it.  Exit status is 0 iff every selected
task passed.
"""

from __future__ import annotations

import argparse
import sys

from .profile import default_data_dir
from .verify import REGISTRY, TASK_ORDER, make_report, run_tasks, write_report


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="verify",
        description="Re-run the certified inequality chain in exact rational arithmetic.")
    ap.add_argument("--data-dir", default=None,
                    help="coefficient table directory (default: packaged tables, "
                         "or $NLSVERIFY_DATA)")
    ap.add_argument("--task", default=None,
                    help="comma-separated task ids (prerequisites are added automatically)")
    ap.add_argument("--report", default=None, metavar="FILE",
                    help="write the JSON report to FILE")
    ap.add_argument("--jobs", type=int, default=1,
                    help="worker processes for lattice scans (default 1)")
    ap.add_argument("--list", action="store_true", help="list tasks and exit")
    ap.add_argument("--quiet", action="store_true", help="suppress progress output")
    args = ap.parse_args(argv)

    if args.list:
        for tid in TASK_ORDER:
            spec = REGISTRY[tid]
            deps = f" (needs {', '.join(spec.deps)})" if spec.deps else ""
            print(f"{tid:4s} {spec.anchor:28s} {spec.claim}{deps}")
        return 0

    selected = None
    if args.task:
        selected = [t.strip() for t in args.task.split(",") if t.strip()]
        unknown = [t for t in selected if t not in REGISTRY]
        if unknown:
            print(f"no such task: {', '.join(unknown)}", file=sys.stderr)
            return 2

    progress = None if args.quiet else lambda msg: print(msg, flush=True)
    data_dir = args.data_dir or default_data_dir()
    results = run_tasks(selected, data_dir=data_dir, jobs=max(1, args.jobs),
                        progress=progress)

    rep = write_report(results, args.report) if args.report else make_report(results)
    for r in rep["results"]:
        print(f"{r['task_id']:4s} {r['verdict']:15s} {r['claim']}")
        if r["verdict"] in ("error", "prereq-missing"):
            print(f"     {r['error']}")
    s = rep["summary"]
    print(f"total {s['total']}  passed {s['passed']}  failed {s['failed']}  skipped {s['skipped']}")
    return 0 if s["all_passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
