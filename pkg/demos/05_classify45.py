"""Full classification report for the 2-(45,12,3) design shipped with the tests.

Run: python3 demos/05_classify45.py [design-file]
"""

import sys
from pathlib import Path

from flagdesigns import full_report

path = Path(sys.argv[1]) if len(sys.argv) > 1 else (
    Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "design45.txt")
report = full_report(path)
print(report.to_text())
print("hypotheses hold:", report.hypotheses_hold())
print("catalog:", report.value("catalog", "matches"))
