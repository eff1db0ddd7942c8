#!/usr/bin/env python3
"""A full command-line campaign, run twice to show byte determinism.

gen writes instance files, verify runs the majorant check and records
verdicts, radius compares guaranteed and observed radii, report
aggregates the records. Identical flags produce identical bytes, so the
second pass must reproduce every artifact exactly.

    python demos/cli_campaign.py --workdir /tmp/campaign
"""

import argparse
import hashlib
import os

from bohrlab.cli import main as cli


def run_once(workdir: str) -> dict:
    gen_dir = os.path.join(workdir, "instances")
    assert cli(["gen", "--class", "thm1", "--dim", "2", "--dim", "4",
                "--count", "6", "--seed", "0", "--out", gen_dir]) == 0
    files = [os.path.join(gen_dir, f"thm1_{i:04d}.json") for i in range(6)]
    assert cli(["verify", *files, "--theorem", "cor1",
                "--out", os.path.join(workdir, "verdicts.json")]) == 0
    assert cli(["radius", *files,
                "--out", os.path.join(workdir, "radius.json")]) == 0
    assert cli(["report", os.path.join(workdir, "verdicts.json"),
                "--format", "md", "--out", os.path.join(workdir, "report.md")]) == 0
    digests = {}
    for root, _, names in os.walk(workdir):
        for name in names:
            path = os.path.join(root, name)
            with open(path, "rb") as fh:
                digests[os.path.relpath(path, workdir)] = hashlib.sha256(fh.read()).hexdigest()
    return digests


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workdir", default="/tmp/bohrlab_campaign")
    args = ap.parse_args()

    first = run_once(args.workdir)
    second = run_once(args.workdir)
    print(f"{'artifact':<28} sha256")
    for name in sorted(first):
        print(f"{name:<28} {first[name][:16]}")
    print()
    print(f"artifacts: {len(first)}, rerun byte-identical: {first == second}")


if __name__ == "__main__":
    main()
