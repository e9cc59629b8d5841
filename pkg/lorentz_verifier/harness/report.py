"""JSON reports and CSV margin tables.

Everything outside the ``timing`` block is a function of the inputs and the
seed, so two identical runs produce identical bytes once timing is removed.
"""

import csv
import hashlib
import time
from pathlib import Path
from typing import Any, Iterable, Optional

from ..polycore.codec import dumps, jsonable
from ..polycore.rational import format_rat
from ..verifier_logging import get_logger
from .fuzz import FuzzRun

logger = get_logger()

CSV_COLUMNS = ["trial", "holds", "margin", "checked", "digest"]


def sha256_file(path: Path | str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for block in iter(lambda: handle.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


class Stopwatch:
    """Wall-clock timer feeding the report's timing block."""

    def __init__(self):
        self.started = time.perf_counter()
        self.started_at = time.strftime("%Y-%m-%dT%H:%M:%S", time.localtime())

    def timing(self) -> dict[str, Any]:
        elapsed_ms = int((time.perf_counter() - self.started) * 1000)
        return {"started_at": self.started_at, "elapsed_ms": elapsed_ms}


def build_report(command: str, results: Any, summary: dict[str, Any],
                 inputs: Optional[dict[str, str]] = None, expected_violation: bool = False,
                 stopwatch: Optional[Stopwatch] = None) -> dict[str, Any]:
    from .. import __version__

    return {
        "header": {
            "tool": "lorentz-verifier",
            "version": __version__,
            "command": command,
            "expected_violation": expected_violation,
        },
        "inputs": dict(sorted((inputs or {}).items())),
        "results": jsonable(results),
        "summary": jsonable(summary),
        "timing": stopwatch.timing() if stopwatch else {},
    }


def strip_timing(report: dict[str, Any]) -> dict[str, Any]:
    return {k: v for k, v in report.items() if k != "timing"}


def write_report(report: dict[str, Any], out: Optional[Path | str]) -> str:
    """Serialize, write to ``out`` when given, and return the text."""
    text = dumps(report) + "\n"
    if out is not None:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.debug(f"report written to {path}")
    return text


def margin_rows(run: FuzzRun) -> Iterable[list[str]]:
    for outcome in run.outcomes:
        margin = outcome.verdict.margin
        yield [
            str(outcome.trial),
            "true" if outcome.verdict.holds else "false",
            "" if margin is None else format_rat(margin),
            str(outcome.verdict.checked),
            outcome.digest,
        ]


def write_margin_csv(run: FuzzRun, path: Path | str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        writer.writerows(margin_rows(run))
    logger.info(f"wrote {len(run.outcomes)} margins to {path}")


def fuzz_report(run: FuzzRun, command: str,
                stopwatch: Optional[Stopwatch] = None) -> dict[str, Any]:
    return build_report(
        command,
        results=[o.to_json() for o in run.outcomes],
        summary=run.summary(),
        inputs={"corpus": run.corpus_digest()},
        stopwatch=stopwatch,
    )
