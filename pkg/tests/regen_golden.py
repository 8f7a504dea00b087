"""Regenerate the golden CLI outputs (run from the repository root)."""

import contextlib
import io
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent.parent / "src"))
sys.path.insert(0, str(pathlib.Path(__file__).parent.parent))

from chipfire.cli import main  # noqa: E402
from tests.golden_cases import CASES  # noqa: E402


def run():
    root = pathlib.Path(__file__).parent / "golden"
    root.mkdir(exist_ok=True)
    for name, argv in CASES:
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = main(argv)
        assert code == 0, (name, code)
        (root / f"{name}.json").write_text(buffer.getvalue())
        print(name)


if __name__ == "__main__":
    run()
