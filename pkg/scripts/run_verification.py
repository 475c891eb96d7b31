#!/usr/bin/env python3
"""Run the default verification suite for orders 1..3 plus the order-4
conjecture evidence pass, and write reports under ./reports/.

Equivalent CLI:
    multigamma verify --orders 1,2,3 --out reports/verify_123.json
    multigamma verify --orders 4 --out reports/verify_4.json
"""
import os
import sys

from multigamma.report import write_json_report
from multigamma.suite import SuiteConfig, run_suite


def main() -> int:
    os.makedirs("reports", exist_ok=True)
    worst = 0
    for orders, path in [((1, 2, 3), "reports/verify_123.json"), ((4,), "reports/verify_4.json")]:
        cfg = SuiteConfig(orders=orders)
        report = run_suite(cfg)
        write_json_report(report, path)
        n_pass = sum(c.status == "pass" for c in report.checks)
        n_fail = sum(c.status == "fail" for c in report.checks)
        n_ev = sum(c.status == "evidence" for c in report.checks)
        print(f"orders {orders}: {n_pass} pass, {n_fail} fail, {n_ev} evidence -> {path}")
        for c in report.failed:
            print(f"  FAIL {c.name}: residual={c.residual} tol={c.tolerance}")
        worst = max(worst, report.exit_code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
