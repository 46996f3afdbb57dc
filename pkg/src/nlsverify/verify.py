"""Task registry, dependency-aware runner, and report generation.

Every task re-executes one block of certified inequalities; the registry
fixes its claim string and dependencies.  Results are deterministic: two
runs produce identical reports except for timing fields.  A task whose
prerequisite failed (or was not selected) reports "prereq-missing" rather
than silently passing.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, asdict

from . import tasks as T
from .profile import Profile, TableError, build_profile

REPORT_SCHEMA = "nlsverify-report-v1"


@dataclass(frozen=True)
class TaskSpec:
    task_id: str
    anchor: str          # which certified claim of the construction this is
    claim: str           # the headline bound, human-readable
    deps: tuple
    fn: object


REGISTRY: dict[str, TaskSpec] = {}


def _reg(task_id, anchor, claim, deps, fn):
    REGISTRY[task_id] = TaskSpec(task_id, anchor, claim, tuple(deps), fn)


_reg("V1", "residual-norm",
     "||Re R||_T^2 + ||Im R||_T^2 <= 64e-18 on [-1,1]xJ and |K(a)| >= 2",
     (), T.task_v1)
_reg("V2", "left-wronskian",
     "lattice min of P_dL on [-1,0] equals 1; certified min >= 99/100",
     (), T.task_v2)
_reg("V3", "right-wronskian",
     "sup|eps_dR/(1-y)^2| <= 1e-17 and certified min of P_dR >= 8",
     (), T.task_v3)
_reg("V4", "glue-admissibility",
     "certified max of alpha^2 M_F^3_1 on J is <= -1/5 + 1/10 < 0",
     (), T.task_v4)
_reg("V5", "inhomogeneity-weights",
     "C_alpha <= (0.2, 0.51, 0.47, 0.47)",
     ("V3",), T.task_v5)
_reg("V6", "functional-weight",
     "C_psi <= 13",
     ("V5",), T.task_v6)
_reg("V7", "inverse-weight",
     "C_J <= 232",
     ("V5", "V6"), T.task_v7)
_reg("V8", "left-coefficients",
     "left coefficient deviations <= (3e-7, 2e-7, 7e-7, 2e-6)",
     ("V2",), T.task_v8)
_reg("V9", "right-cancellation",
     "squared-oscillation numerator cancellations <= 1e-16 / 1e-15",
     (), T.task_v9)
_reg("V10", "right-coefficients",
     "right coefficient deviations <= (3e-7, 6e-7, 1.5e-6, 1.3e-6)",
     ("V3", "V9"), T.task_v10)
_reg("V11", "functional-infrastructure",
     "weight T-norms <= 1e-6, phase error <= 1e-7, |tail| <= 1e-11",
     ("V3",), T.task_v11)
_reg("V12", "oscillatory-window",
     "I(a-,7/10,9/10) >= 2e-11 and I(a+,7/10,9/10) <= -2e-11",
     ("V3", "V11"), T.task_v12)
_reg("V13", "sign-change",
     "functional >= 4e-10 at a- and <= -4e-10 at a+",
     ("V2", "V3", "V11", "V12"), T.task_v13)
_reg("V14", "fixed-point-arithmetic",
     "contraction <= 1.2e-6, factor <= 1/2, margin 2.7e-10 < 4e-10",
     ("V1", "V6", "V7", "V8", "V10"), T.task_v14)

TASK_ORDER = list(REGISTRY)


def registry_self_audit() -> None:
    """Startup consistency pass: dependency closure and claim sanity."""
    for spec in REGISTRY.values():
        for d in spec.deps:
            if d not in REGISTRY:
                raise AssertionError(f"{spec.task_id} depends on unknown task {d}")
        if not spec.claim or not spec.anchor:
            raise AssertionError(f"{spec.task_id} lacks a registered claim")


def resolve(selected) -> list:
    """Dependency-closed, registry-ordered task list."""
    want = set()

    def add(tid):
        if tid in want:
            return
        if tid not in REGISTRY:
            raise KeyError(f"no such task: {tid}")
        for d in REGISTRY[tid].deps:
            add(d)
        want.add(tid)

    for tid in selected:
        add(tid)
    return [t for t in TASK_ORDER if t in want]


@dataclass
class CheckResult:
    task_id: str
    anchor: str
    claim: str
    computed: str
    verdict: str          # pass | fail | error | prereq-missing
    elapsed_s: float
    subchecks: list
    error: str = ""


def run_tasks(selected=None, data_dir=None, jobs: int = 1, profile: Profile | None = None,
              progress=None) -> list:
    """Run the selected tasks (default: all) with dependency closure."""
    registry_self_audit()
    order = resolve(selected or TASK_ORDER)
    results: list[CheckResult] = []
    artifacts: dict = {}
    status: dict = {}
    if profile is None:
        try:
            profile = build_profile(data_dir)
        except TableError as e:
            for tid in order:
                spec = REGISTRY[tid]
                results.append(CheckResult(tid, spec.anchor, spec.claim, "",
                                           "error", 0.0, [], f"data ingestion failed: {e}"))
            return results
    for tid in order:
        spec = REGISTRY[tid]
        if progress:
            progress(f"running {tid} ({spec.anchor}) ...")
        missing = [d for d in spec.deps if status.get(d) != "pass"]
        t0 = time.time()
        if missing:
            results.append(CheckResult(tid, spec.anchor, spec.claim, "",
                                       "prereq-missing", 0.0, [],
                                       f"prerequisite missing or failed: {', '.join(missing)}"))
            status[tid] = "prereq-missing"
            continue
        try:
            out = spec.fn(profile, artifacts, jobs)
            verdict = "pass" if out.passed else "fail"
            if out.passed:
                artifacts.update(out.artifacts)
            computed = "; ".join(
                f"{s.check_id.split('.', 1)[1]}: {s.computed}" for s in out.subchecks[:4])
            results.append(CheckResult(tid, spec.anchor, spec.claim, computed,
                                       verdict, time.time() - t0,
                                       [asdict(s) for s in out.subchecks]))
            status[tid] = verdict
        except Exception as e:  # constructions signal failures by raising
            results.append(CheckResult(tid, spec.anchor, spec.claim, "",
                                       "error", time.time() - t0, [],
                                       f"{type(e).__name__}: {e}"))
            status[tid] = "error"
        if progress:
            r = results[-1]
            progress(f"  {tid}: {r.verdict} ({r.elapsed_s:.1f}s, {len(r.subchecks)} subchecks)")
    return results


def make_report(results) -> dict:
    verdicts = [r.verdict for r in results]
    return {
        "schema": REPORT_SCHEMA,
        "summary": {
            "total": len(results),
            "passed": verdicts.count("pass"),
            "failed": verdicts.count("fail") + verdicts.count("error"),
            "skipped": verdicts.count("prereq-missing"),
            "all_passed": all(v == "pass" for v in verdicts) and bool(results),
        },
        "results": [asdict(r) for r in results],
    }


def write_report(results, path: str) -> dict:
    rep = make_report(results)
    with open(path, "w", encoding="ascii") as fh:
        json.dump(rep, fh, indent=1, sort_keys=True)
        fh.write("\n")
    return rep
