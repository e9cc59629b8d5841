"""Registries of fuzz modes and named reproductions."""

from typing import Any, Callable, Dict

from ..errors import VerifierInputError
from . import fuzz, reproduce
from .fuzz import TrialFunction
from .reproduce import ReproductionResult

Reproduction = Callable[[], ReproductionResult]


class CheckerRegistry:
    """Fuzz mode name -> trial function."""

    def __init__(self):
        self._modes: Dict[str, TrialFunction] = {}
        self._register_default_modes()

    def _register_default_modes(self):
        self.register("rkt", fuzz.rkt_trial)
        self.register("rkt-volume", fuzz.rkt_volume_trial)
        self.register("pr", fuzz.pr_trial)
        self.register("supermod", fuzz.supermodularity_trial)
        self.register("rayleigh", fuzz.rayleigh_trial)
        self.register("af-form", fuzz.af_form_trial)
        self.register("volume-lorentzian", fuzz.volume_lorentzian_trial)
        self.register("mixed-volume", fuzz.mixed_volume_trial)
        self.register("convex-rkt", fuzz.convex_rkt_trial)
        self.register("convex-pr", fuzz.convex_pr_trial)
        self.register("schur-af", fuzz.schur_af_trial)
        self.register("md-signature", fuzz.md_signature_trial)
        self.register("polymatroid", fuzz.polymatroid_trial)
        self.register("discriminant-lorentzian", fuzz.discriminant_lorentzian_trial)
        self.register("schur-volume", fuzz.schur_volume_trial)

    def register(self, name: str, trial: TrialFunction):
        self._modes[name] = trial

    def get_trial(self, mode: str) -> TrialFunction:
        if mode not in self._modes:
            available = self.get_available_modes()
            raise VerifierInputError(f"Unknown fuzz mode: {mode}. Available: {available}", "mode")
        return self._modes[mode]

    def get_available_modes(self) -> list[str]:
        return list(self._modes.keys())

    def get_mode_info(self, mode: str) -> Dict[str, Any]:
        trial = self.get_trial(mode)
        doc = (trial.__doc__ or "").strip().splitlines()
        return {"mode": mode, "function": trial.__name__, "summary": doc[0] if doc else ""}


class ReproductionRegistry:
    """Reproduction name -> callable producing a ReproductionResult."""

    def __init__(self):
        self._reproductions: Dict[str, Reproduction] = {}
        self._register_default_reproductions()

    def _register_default_reproductions(self):
        self.register("huh-example", reproduce.reproduce_huh_example)
        self.register("bipyramid", reproduce.reproduce_bipyramid)
        self.register("schur-examples", reproduce.reproduce_schur_examples)
        self.register("md-signature", reproduce.reproduce_md_signature)
        self.register("polymatroid-demo", reproduce.reproduce_polymatroid_demo)
        self.register("volume-lorentzian", reproduce.reproduce_volume_lorentzian)
        self.register("convex-rkt", reproduce.reproduce_convex_rkt)
        self.register("constants", reproduce.reproduce_constants)

    def register(self, name: str, reproduction: Reproduction):
        self._reproductions[name] = reproduction

    def run(self, name: str) -> ReproductionResult:
        if name not in self._reproductions:
            available = self.get_available_reproductions()
            raise VerifierInputError(
                f"Unknown reproduction: {name}. Available: {available}", "name")
        return self._reproductions[name]()

    def get_available_reproductions(self) -> list[str]:
        return list(self._reproductions.keys())
