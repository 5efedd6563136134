from __future__ import annotations
import math
from typing import Any, Dict, List

from vertex_dwpf.exceptions import ConfigError


class VerificationReport:
    """
    Outcome of one check: the residual of every sample, the tolerance they are held to and free-form notes.
    The check passes iff the largest residual is at most the tolerance. Residuals that are not finite count
    as infinitely large.
    """

    def __init__(self, name: str, model: Dict[str, Any], tolerance: float, seed: int = None):
        if name is None:
            raise ConfigError('Invalid value [name=None]')

        self._name = name
        self._model = dict(model) if model is not None else {}
        self._tolerance = float(tolerance)
        self._seed = seed
        self._residuals: List[float] = []
        self._notes: List[str] = []

    def add_residual(self, residual: float) -> None:
        residual = float(residual)
        self._residuals.append(residual if math.isfinite(residual) else math.inf)

    def add_residuals(self, residuals) -> None:
        for residual in residuals:
            self.add_residual(residual)

    def add_note(self, note: str) -> None:
        self._notes.append(note)

    def fail(self, note: str) -> None:
        """
        Marks the check failed independently of any residual.
        """
        self.add_residual(math.inf)
        self.add_note(note)

    @property
    def name(self) -> str:
        return self._name

    @property
    def model(self) -> Dict[str, Any]:
        return dict(self._model)

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def tolerance(self) -> float:
        return self._tolerance

    @property
    def samples(self) -> int:
        return len(self._residuals)

    @property
    def residuals(self) -> List[float]:
        return list(self._residuals)

    @property
    def notes(self) -> List[str]:
        return list(self._notes)

    @property
    def max_residual(self) -> float:
        return max(self._residuals) if self._residuals else 0.0

    @property
    def mean_residual(self) -> float:
        return sum(self._residuals) / len(self._residuals) if self._residuals else 0.0

    @property
    def passed(self) -> bool:
        return self.max_residual <= self._tolerance

    def to_dict(self) -> Dict[str, Any]:
        def finite(value):
            return value if math.isfinite(value) else None

        return {
            'name': self._name,
            'model': self._model,
            'seed': self._seed,
            'samples': self.samples,
            'max_residual': finite(self.max_residual),
            'mean_residual': finite(self.mean_residual),
            'tolerance': self._tolerance,
            'pass': self.passed,
            'notes': list(self._notes),
        }

    def __repr__(self) -> str:
        return (f'VerificationReport(name={self._name}, pass={self.passed}, samples={self.samples}, '
                f'max_residual={self.max_residual:.3g})')
