#!/usr/bin/env python3
"""Run the whole certification pipeline on every built-in preset."""

import argparse

from refilt.graded import pbw_check
from refilt.presets import all_presets
from refilt.refilter import refilter, regularity_report, verify_certificate
from refilt.serialize import report_dict, to_json


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="dump full reports as JSON")
    args = parser.parse_args()

    for name, pres in all_presets().items():
        pbw = pbw_check(pres)
        cert = refilter(pres) if pbw.passed else None
        report = regularity_report(pres)
        print(f"== {name} (t={pres.t}, s={pres.s})")
        print(f"   pbw: {'pass' if pbw.passed else 'FAIL'}")
        if cert is not None:
            print(
                f"   weight vector: {cert.weight.w}, certificate valid: {cert.valid}, "
                f"re-verified: {verify_certificate(cert)}"
            )
        print(f"   conclusion: {report.conclusion or '(withheld)'}")
        if args.json:
            print(to_json(report_dict(report)))


if __name__ == "__main__":
    main()
