"""Regenerate golden CLI outputs: python3 tests/regen_golden.py"""

from __future__ import annotations

import io
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from dedekind_ore.cli import run  # noqa: E402
from test_cli import CASES, GOLDEN  # noqa: E402

GOLDEN.mkdir(exist_ok=True)
for name, argv in CASES:
    for suffix, extra in ((".txt", []), (".json", ["--json"])):
        out = io.StringIO()
        assert run(argv + extra, out=out) == 0, name
        (GOLDEN / f"{name}{suffix}").write_text(out.getvalue())
print(f"wrote {2 * len(CASES)} files to {GOLDEN}")
