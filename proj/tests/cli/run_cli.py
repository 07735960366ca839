# Copyright 2026 The parabraid Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the parabraid CLI once and checks its exit code and JSON output.

Usage: run_cli.py --cli PATH --exit N [--schema FILE] [--expect POINTER=VALUE ...] -- ARGS...

POINTER is a JSON pointer into the report, VALUE is parsed as JSON.
"""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile


def resolve(doc, pointer):
    for part in pointer.strip("/").split("/"):
        doc = doc[int(part)] if isinstance(doc, list) else doc[part]
    return doc


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--exit", type=int, required=True)
    parser.add_argument("--schema")
    parser.add_argument("--expect", action="append", default=[])
    parser.add_argument("args", nargs=argparse.REMAINDER)
    opts = parser.parse_args()
    args = opts.args[1:] if opts.args[:1] == ["--"] else opts.args

    with tempfile.TemporaryDirectory() as tmp:
        out = pathlib.Path(tmp) / "report.json"
        proc = subprocess.run([opts.cli, "--out", str(out), *args], capture_output=True, text=True)
        sys.stdout.write(proc.stdout)
        sys.stderr.write(proc.stderr)
        if proc.returncode != opts.exit:
            print(f"exit code {proc.returncode}, expected {opts.exit}")
            return 1
        if not opts.schema and not opts.expect:
            return 0
        report = json.loads(out.read_text())
        if opts.schema:
            import jsonschema

            jsonschema.validate(report, json.loads(pathlib.Path(opts.schema).read_text()))
            md = out.with_suffix(".md")
            if args[:1] == ["report-all"] and not md.read_text().startswith("# parabraid report"):
                print("markdown summary missing")
                return 1
        for item in opts.expect:
            pointer, value = item.split("=", 1)
            got = resolve(report, pointer)
            if got != json.loads(value):
                print(f"{pointer}: got {got!r}, expected {value}")
                return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
