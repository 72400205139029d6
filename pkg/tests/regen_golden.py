"""Rewrite the golden CLI transcripts.  Run only after reviewing a deliberate output change."""

import contextlib
import io
from pathlib import Path

from golden_cases import cases
from corrideal.cli import main

HERE = Path(__file__).parent


def transcript(argv):
    argv = [str(HERE / "data" / a) if a.endswith(".json") else a for a in argv]
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return f"exit: {code}\n--- stdout\n{out.getvalue()}--- stderr\n{err.getvalue()}"


if __name__ == "__main__":
    for name, argv in cases():
        (HERE / "golden" / f"{name}.txt").write_text(transcript(argv))
