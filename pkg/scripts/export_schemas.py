#!/usr/bin/env python3
"""
Report Schema Export
Writes the JSON schema of every report the CLI prints to docs/schemas/.
"""

import json
from pathlib import Path

from divgraph.domain import (
    CharpolyReport,
    DivisibilityReport,
    InfoReport,
    KernelWitness,
    ObservationReport,
    PosetLiftReport,
    SelftestReport,
    SpectrumReport,
    TableReport,
    VerifyReport,
    VmSpace,
)

REPORTS = [
    InfoReport,
    CharpolyReport,
    SpectrumReport,
    TableReport,
    VerifyReport,
    SelftestReport,
    DivisibilityReport,
    PosetLiftReport,
    KernelWitness,
    ObservationReport,
    VmSpace,
]


def main():
    output_dir = Path(__file__).resolve().parent.parent / "docs" / "schemas"
    output_dir.mkdir(parents=True, exist_ok=True)
    print("📐 Exporting report schemas")
    for model in REPORTS:
        path = output_dir / f"{model.__name__}.json"
        schema = model.model_json_schema(mode="serialization")
        path.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        print(f"   💾 {path.name}")


if __name__ == "__main__":
    main()
