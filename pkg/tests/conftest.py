import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from _util import ACCEPTANCE  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[crit]
        status = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        terminalreporter.write_line(f"criterion {crit}: {status}")
        for part, ok, detail in parts:
            extra = f" ({detail})" if detail else ""
            terminalreporter.write_line(f"    {'PASS' if ok else 'FAIL'} {part}{extra}")
