"""Fuzz corpus, reproduction suite, reports and the worker pool."""

from .fuzz import (
    LORENTZIAN_FAMILIES,
    FuzzRun,
    FuzzSettings,
    TrialOutcome,
    corpus_instance,
    fuzz_corpus,
    lorentzian_instance,
    run_fuzz,
    run_trial,
    trial_rng,
)
from .pool import ordered_map, resolve_workers
from .registry import CheckerRegistry, ReproductionRegistry
from .report import (
    Stopwatch,
    build_report,
    fuzz_report,
    sha256_file,
    strip_timing,
    write_margin_csv,
    write_report,
)
from .reproduce import ReproductionResult, huh_polynomial

__all__ = [
    "CheckerRegistry",
    "LORENTZIAN_FAMILIES",
    "FuzzRun",
    "FuzzSettings",
    "ReproductionRegistry",
    "ReproductionResult",
    "Stopwatch",
    "TrialOutcome",
    "build_report",
    "corpus_instance",
    "fuzz_corpus",
    "fuzz_report",
    "huh_polynomial",
    "lorentzian_instance",
    "ordered_map",
    "resolve_workers",
    "run_fuzz",
    "run_trial",
    "sha256_file",
    "strip_timing",
    "trial_rng",
    "write_margin_csv",
    "write_report",
]
