#!/usr/bin/env python3
# Copyright 2026 The sindhispell Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Validates the JSON output of check, classify and analyze against docs/schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def run(binary, args, stdin, expected_codes):
    proc = subprocess.run([binary, *args], input=stdin if isinstance(stdin, bytes) else stdin.encode(), capture_output=True)
    if proc.returncode not in expected_codes:
        raise SystemExit(f"{args[0]}: exit {proc.returncode}: {proc.stderr.decode()}")
    return json.loads(proc.stdout)


def main():
    binary, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = root / "docs" / "schemas"
    lexicon = str(root / "core" / "data" / "sample_lexicon.txt")
    data = root / "tests" / "data"
    cases = [
        ("check", ["check", "--lexicon", lexicon, "--format", "json"],
         "جو پاڪتان ۾ ج امشورو ".encode() + b"\xc3 " + "سنڌ\n".encode(), {1}),
        ("check", ["check", "--lexicon", lexicon, "--format", "json"], "جو سنڌ\n", {0}),
        ("classify", ["classify", "--format", "json"],
         "پاڪتان\tپاڪستان\nجو\tجو\nيونيورسٽيجو\tيونيورسٽي جو\nفاطت\tحفاظت\n", {1}),
        ("analyze", ["analyze", "--format", "json", str(data / "gpo_corpus.tsv")], "", {0}),
        ("analyze", ["analyze", "--format", "json", str(data / "micro20_corpus.tsv")], "", {0}),
    ]
    for name, args, stdin, codes in cases:
        schema = json.loads((schemas / f"{name}.schema.json").read_text(encoding="utf-8"))
        jsonschema.Draft202012Validator.check_schema(schema)
        document = run(binary, args, stdin, codes)
        jsonschema.validate(document, schema, cls=jsonschema.Draft202012Validator)
        print(f"ok {name} {' '.join(args[1:3])}")


if __name__ == "__main__":
    main()
