"""Validates dumped API payloads against the published JSON Schema."""

import json
import sys

from jsonschema import Draft202012Validator


def main(schema_path: str, dump_path: str) -> int:
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    Draft202012Validator.check_schema(schema)
    with open(dump_path, encoding="utf-8") as f:
        payloads = json.load(f)

    failures = 0
    seen = set()
    for i, entry in enumerate(payloads):
        definition = entry["def"]
        seen.add(definition)
        wrapper = {"$defs": schema["$defs"], "$ref": f"#/$defs/{definition}"}
        for error in Draft202012Validator(wrapper).iter_errors(entry["value"]):
            failures += 1
            print(f"payload {i} ({definition}) at /{'/'.join(map(str, error.absolute_path))}: {error.message}")

    top_level = {name for name, d in schema["$defs"].items() if d.get("type") == "object"}
    unused = sorted(top_level - seen - {"vocabulary", "graph", "highlights", "trace_step", "trial_record"})
    if unused:
        failures += 1
        print("schema definitions never exercised:", ", ".join(unused))

    print(f"{len(payloads)} payloads, {len(seen)} kinds, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
