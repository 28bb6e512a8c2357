#!/usr/bin/env python3
"""Run the two reference pipelines and print their reports.

The Hermitian q=2 run is fully enumerable (exact quantum distance); the
q=4 run is construction plus certificates with a designed distance
bound.  Pass --json for machine-readable output.
"""

import argparse
import json

from agstab.artifacts import report_to_obj
from agstab.pipeline import PipelineConfig, pipeline_build

CONFIGS = [
    PipelineConfig(m=1, curve_kind="hermitian", q=2, a=3, a_prime=1),
    PipelineConfig(m=2, curve_kind="hermitian", q=4, a=34, a_prime=30),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    for cfg in CONFIGS:
        run = pipeline_build(cfg)
        if args.json:
            print(json.dumps(report_to_obj(run.report), indent=2, sort_keys=True))
            continue
        print(f"== m={cfg.m} {cfg.curve_kind} q={cfg.q} a={cfg.a} a'={cfg.a_prime}")
        print(f"   {run.report.params()}  (exact={run.report.d_exact})")
        for line in run.report.trace:
            print(f"   {line}")
        print()


if __name__ == "__main__":
    main()
