#!/usr/bin/env python3
"""Prepends cmake/license_header.txt to C++ and Python sources that lack it."""
import pathlib
import sys

root = pathlib.Path(__file__).resolve().parent.parent
header = (root / "cmake" / "license_header.txt").read_text().rstrip("\n") + "\n"
py_header = "".join("#" + line[2:] + "\n" for line in header.splitlines())

changed = 0
for d in ["core", "tools", "tests", "benchmarks"]:
    for path in sorted((root / d).rglob("*")):
        if path.suffix in (".cpp", ".hpp"):
            text, h = path.read_text(), header
        elif path.suffix == ".py":
            text, h = path.read_text(), py_header
        else:
            continue
        if text.startswith(h):
            continue
        if text.startswith("#!"):
            first, rest = text.split("\n", 1)
            path.write_text(first + "\n" + h + "\n" + rest)
        else:
            path.write_text(h + "\n" + text)
        changed += 1
print(f"{changed} files updated", file=sys.stderr)
