"""Precompute every store the acceptance suite depends on.

Runs the full stage graph under ``stores/`` so that
``pytest tests/test_acceptance.py`` becomes a fast digest re-verification.
Stages are idempotent: interrupting and re-running this script resumes
from the last completed store.  The two big generations take ~10-15
minutes each; the criterion-5 family filter and extension take hours.

Usage: python3 scripts/precompute_stores.py
"""
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "tests"))

import acceptance_plans as plans  # noqa: E402
from folkman.pipeline import run_stage  # noqa: E402
from folkman.store import GraphStore  # noqa: E402


def do(name, plan):
    t0 = time.time()
    m = run_stage(plan)
    print(f"[{time.strftime('%H:%M:%S')}] {name}: count={m['count']} "
          f"wall={time.time() - t0:.1f}s", flush=True)
    return m


def main() -> None:
    do("all7", plans.plan_all7())
    do("all8", plans.plan_all8())
    do("r44_12", plans.plan_r44_12())
    do("r45_10", plans.plan_r45_10())
    do("crit3", plans.plan_crit3())
    do("lmax12_alpha3", plans.plan_lmax12_alpha3())
    do("l7_3_le4_k3", plans.plan_l7_3_le4_k3())
    do("l8_3_le3_k3", plans.plan_l8_3_le3_k3())
    do("lmax11_ns4", plans.plan_lmax11_ns4())
    do("lmax11_ns3", plans.plan_lmax11_ns3())
    do("lmax10", plans.plan_lmax10())
    do("lmax11_sp3", plans.plan_lmax11_sp(3))
    do("lmax11_sp4", plans.plan_lmax11_sp(4))
    union = GraphStore.load(plans.plan_lmax11_ns4().output)
    for p in (plans.plan_lmax11_ns3(), plans.plan_lmax11_sp(3), plans.plan_lmax11_sp(4)):
        union = union.merge(GraphStore.load(p.output))
    union.save(
        plans.spath("lmax11_2_le4.g6"),
        params={"family": {"n": 11, "p": 2, "s": 4, "s_exact": False, "variant": "max"}},
    )
    print(f"lmax11 union: {len(union)}", flush=True)
    do("lmax12_sp", plans.plan_lmax12_sp())
    do("lmax12_ns", plans.plan_lmax12_ns())
    do("crit5_family", plans.plan_crit5_family())
    do("crit5_extend", plans.plan_crit5_extend())
    do("crit5_closure", plans.plan_crit5_closure())
    for w in (4, 8):
        do(f"crit3_w{w}", plans.plan_crit3(workers=w, suffix=f"_w{w}"))
        do(f"crit5_extend_w{w}", plans.plan_crit5_extend(workers=w, suffix=f"_w{w}"))
    print("all stores complete", flush=True)


if __name__ == "__main__":
    main()
