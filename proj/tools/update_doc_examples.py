"""Regenerate docs/examples/*.out from the matching .args files.

Run from the repository root after building: python tools/update_doc_examples.py build/labelkit
"""
import pathlib
import subprocess
import sys

binary = sys.argv[1] if len(sys.argv) > 1 else "build/labelkit"
for args_file in sorted(pathlib.Path("docs/examples").glob("*.args")):
    args = args_file.read_text().split()
    run = subprocess.run([binary, *args], capture_output=True, text=True)
    if run.returncode not in (0, 1):
        sys.exit(f"{args_file}: exit {run.returncode}\n{run.stderr}")
    args_file.with_suffix(".out").write_text(run.stdout)
    print(f"{args_file.with_suffix('.out')}: {len(run.stdout.splitlines())} lines")
