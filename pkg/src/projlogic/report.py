"""Machine-readable verification reports.

A report is one JSON document::

    {"header": {"artifact": "projlogic", "version": "...", "config": {...},
                "timestamp": "..."},
     "records": [{"name": ..., "paper_ref": ..., ...}, ...]}

Floats are written with ``repr``, the shortest decimal that round-trips the
double exactly. The timestamp honours ``SOURCE_DATE_EPOCH`` so reports can be
made byte-reproducible.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, fields
from datetime import datetime, timezone
from pathlib import Path

from .suites import CheckRecord

ARTIFACT = "projlogic"

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _version() -> str:
    from . import __version__
    return __version__


def timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = datetime.fromtimestamp(int(epoch), timezone.utc) if epoch else datetime.now(timezone.utc)
    return when.strftime("%Y-%m-%dT%H:%M:%SZ")


def exit_code(records) -> int:
    return EXIT_OK if all(r.passed for r in records) else EXIT_FAILED


def render_report(records, config: dict | None = None) -> str:
    doc = {
        "header": {"artifact": ARTIFACT, "version": _version(), "config": config or {},
                   "timestamp": timestamp()},
        "records": [asdict(r) for r in records],
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def emit_report(records, path, config: dict | None = None) -> int:
    """Write the report atomically and return the exit code.

    ``path`` of ``None`` or ``"-"`` prints to stdout. I/O failures return 2.
    """
    text = render_report(records, config)
    if path is None or str(path) == "-":
        print(text, end="")
        return exit_code(records)
    path = Path(path)
    try:
        fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            os.unlink(tmp)
            raise
    except OSError:
        return EXIT_USAGE
    return exit_code(records)


def load_report(path) -> tuple[dict, list[CheckRecord]]:
    doc = json.loads(Path(path).read_text())
    names = {f.name for f in fields(CheckRecord)}
    return doc["header"], [CheckRecord(**{k: v for k, v in r.items() if k in names}) for r in doc["records"]]
