"""Regenerate tests/golden.  Run after an intentional format change:

    python3 tests/make_golden.py
"""

import json
import os

from superhopf import cli, specfile

HERE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")

SPECS = {
    "exterior2.json": ["builtin:exterior", "2"],
    "exterior3.json": ["builtin:exterior", "3"],
    "z2.json": ["builtin:z2"],
    "z2_f2.json": ["--field", "fp:2", "builtin:z2"],
    "sweedler_like.json": ["builtin:sweedler-like"],
    "alphaq_3_1.json": ["builtin:alphaq", "3", "1"],
    "borel.json": ["builtin:borel"],
    "gl11.json": ["builtin:gl11"],
    "osp12.json": ["builtin:osp12"],
    "laurent_borel.json": ["builtin:laurent-borel"],
}

REPORTS = {
    "verify_exterior2.report.json": ["verify", "builtin:exterior", "2"],
    "integral_exterior3.report.json": ["integral", "builtin:exterior", "3"],
    "integral_laurent_borel.report.json": ["integral", "builtin:laurent-borel"],
    "bosonize_exterior1.report.json": ["bosonize", "builtin:exterior", "1"],
    "torsor_alphaq_3_1.report.json": ["torsor", "builtin:alphaq", "3", "1"],
    "lie_unimodular_borel.report.json": ["lie", "unimodular", "builtin:borel"],
    "lie_dualbasis_gl11.report.json": ["lie", "dualbasis", "builtin:gl11"],
}


def spec_text(args):
    field = cli.parse_field(args[1]) if args[0] == "--field" else cli.parse_field("q")
    target = args[2:] if args[0] == "--field" else args
    obj, _, _ = cli.load(target, field)
    return specfile.emit(obj)


def report_text(argv):
    report, _ = cli.run(argv)
    report.pop("timing_s")
    return cli.dumps(report)


def main():
    os.makedirs(HERE, exist_ok=True)
    for name, args in SPECS.items():
        with open(os.path.join(HERE, name), "w", encoding="utf-8") as fh:
            fh.write(spec_text(args))
    for name, argv in REPORTS.items():
        with open(os.path.join(HERE, name), "w", encoding="utf-8") as fh:
            fh.write(report_text(argv))
    with open(os.path.join(HERE, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump({"specs": SPECS, "reports": REPORTS}, fh, indent=2, sort_keys=True, ensure_ascii=False)
        fh.write("\n")


if __name__ == "__main__":
    main()
