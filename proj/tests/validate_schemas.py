#!/usr/bin/env python3
"""Validates fixture inputs and golden JSON outputs against docs/schemas."""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

root = pathlib.Path(sys.argv[1])
schemas = {}
for path in (root / "docs" / "schemas").glob("*.schema.json"):
    doc = json.loads(path.read_text())
    jsonschema.Draft202012Validator.check_schema(doc)
    schemas[path.name.removesuffix(".schema.json")] = doc
registry = Registry().with_resources((doc["$id"], Resource.from_contents(doc)) for doc in schemas.values())


def validate(path, kind):
    validator = jsonschema.Draft202012Validator(schemas[kind], registry=registry)
    errors = list(validator.iter_errors(json.loads(path.read_text())))
    for e in errors:
        print(f"{path.name}: {kind}: {'/'.join(map(str, e.path))}: {e.message}")
    return not errors


def kind_of(name, doc):
    if name.startswith(("hilbert", "class")):
        return "brauer"
    if name.startswith("report"):
        return "report"
    if name.startswith("certify"):
        return "certificate"
    if "sc" in doc:
        return "algebra"
    if "generators" in doc:
        return "action"
    if set(doc) == {"algebra", "action"}:
        return "bundle"
    return None


ok = True
checked = 0
for path in sorted((root / "fixtures" / "inputs").glob("*.json")) + sorted((root / "fixtures" / "golden").glob("*.out")):
    text = path.read_text()
    if not text.startswith("{"):
        continue
    doc = json.loads(text)
    kind = kind_of(path.stem, doc)
    if kind is None:
        # composite outputs: validate the embedded certificates
        for key in ("certificate", "upper", "lower"):
            if isinstance(doc.get(key), dict):
                validator = jsonschema.Draft202012Validator(schemas["certificate"], registry=registry)
                for e in validator.iter_errors(doc[key]):
                    print(f"{path.name}: {key}: {e.message}")
                    ok = False
                checked += 1
        continue
    ok &= validate(path, kind)
    checked += 1
print(f"validated {checked} documents")
sys.exit(0 if ok and checked > 0 else 1)
