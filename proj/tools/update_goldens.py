#!/usr/bin/env python3
"""Regenerate fixtures/golden from the galoisazu binary.

usage: update_goldens.py BINARY [FIXTURES_DIR]
"""
import pathlib
import subprocess
import sys


def main():
    binary = pathlib.Path(sys.argv[1]).resolve()
    root = pathlib.Path(sys.argv[2] if len(sys.argv) > 2 else pathlib.Path(__file__).parent.parent / "fixtures")
    golden = root / "golden"
    for line in (golden / "manifest.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, code, args = (part.strip() for part in line.split("|", 2))
        run = subprocess.run([str(binary), *args.split()], cwd=root, capture_output=True)
        if run.returncode != int(code):
            sys.exit(f"{name}: exit {run.returncode}, manifest says {code}\n{run.stderr.decode()}")
        (golden / f"{name}.out").write_bytes(run.stdout)
        err = golden / f"{name}.err"
        if run.stderr:
            err.write_bytes(run.stderr)
        elif err.exists():
            err.unlink()


if __name__ == "__main__":
    main()
