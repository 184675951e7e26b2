#!/usr/bin/env python3
"""
Multiplicity Table Generation
Computes m_{-2}, m_{-1}, m_0, m_1 of D_n over squarefree n and writes one CSV per eigenvalue.
"""

import csv
import os
import time
from datetime import datetime
from pathlib import Path
from typing import Dict, List

from divgraph.cli.logging_setup import configure_logging
from divgraph.config import DivGraphConfig
from divgraph.domain import TableRow
from divgraph.spectra import SPECIAL_EIGENVALUES, multiplicity_table, oeis_pattern_checks, table_mismatches


class TableGenerationService:
    """Runs the multiplicity tables cell by cell and writes them to CSV"""

    def __init__(self, config: DivGraphConfig, output_dir: Path):
        self.config = config
        self.output_dir = output_dir
        self.tables: Dict[int, List[TableRow]] = {}

    def generate(self, omega_max: int) -> None:
        for eigenvalue in SPECIAL_EIGENVALUES:
            print(f"📋 Eigenvalue {eigenvalue}: omega 2..{omega_max} with {self.config.jobs} job(s)")
            started = time.perf_counter()
            rows = multiplicity_table(eigenvalue, omega_max, config=self.config)
            self.tables[eigenvalue] = rows
            print(f"   ✅ {len(rows)} cells in {time.perf_counter() - started:.1f}s")

    def write_csv(self) -> None:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        for eigenvalue, rows in self.tables.items():
            path = self.output_dir / f"m_{eigenvalue}.csv"
            with path.open("w", newline="", encoding="utf-8") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(["omega", f"m_{eigenvalue}"])
                for row in rows:
                    writer.writerow([row.omega, row.multiplicity])
            print(f"💾 {path}")

    def report(self) -> bool:
        rows = [row for table in self.tables.values() for row in table]
        mismatches = table_mismatches(rows)
        for mismatch in mismatches:
            print(f"❌ Mismatch: {mismatch}")
        columns = {lam: {row.omega: row.multiplicity for row in table} for lam, table in self.tables.items()}
        for observation in oeis_pattern_checks(columns):
            status = "✅" if observation.holds else "⚠️"
            print(f"{status} {observation.name}: {len(observation.checked)} terms checked")
        return not mismatches


def main():
    """Generate the tables with the configuration taken from DIVGRAPH_* variables"""
    omega_max = int(os.getenv("TABLE_OMEGA_MAX", "10"))
    output_dir = Path(os.getenv("TABLE_OUTPUT_DIR", "tables"))
    config = DivGraphConfig()
    configure_logging(config.log_level)

    print("🚀 divgraph Multiplicity Tables")
    print("=" * 60)
    print(f"📊 omega range: 2..{omega_max}")
    print(f"📅 Date: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    print("")

    service = TableGenerationService(config, output_dir)
    try:
        service.generate(omega_max)
    except Exception as e:
        print(f"❌ Error generating tables: {e}")
        raise
    service.write_csv()
    raise SystemExit(0 if service.report() else 1)


if __name__ == "__main__":
    main()
