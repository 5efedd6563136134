from __future__ import annotations
import numpy as np

from vertex_dwpf.exceptions import ConfigError


class TolerancePolicy:
    """
    Comparison tolerances. Two values agree when |a - b| <= max(rel_tol * scale, abs_floor), where the
    scale is the magnitude of the largest summand or term that went into the compared quantities.
    """

    def __init__(self, rel_tol: float = 1e-9, abs_floor: float = 1e-12):
        if rel_tol is None or rel_tol <= 0:
            raise ConfigError(f'Tolerance must be positive [rel_tol={rel_tol}]')
        if abs_floor is None or abs_floor <= 0:
            raise ConfigError(f'Tolerance floor must be positive [abs_floor={abs_floor}]')

        self._rel_tol = float(rel_tol)
        self._abs_floor = float(abs_floor)

    @property
    def rel_tol(self) -> float:
        return self._rel_tol

    @property
    def abs_floor(self) -> float:
        return self._abs_floor

    def threshold(self, scale: float) -> float:
        return max(self._rel_tol * abs(scale), self._abs_floor)

    def approx_eq(self, a: complex, b: complex, scale: float) -> bool:
        return bool(np.abs(a - b) <= self.threshold(scale))

    def with_rel_tol(self, rel_tol: float) -> TolerancePolicy:
        return TolerancePolicy(rel_tol=rel_tol, abs_floor=self._abs_floor)

    def to_dict(self) -> dict:
        return {'rel_tol': self._rel_tol, 'abs_floor': self._abs_floor}

    def __repr__(self) -> str:
        return f'TolerancePolicy(rel_tol={self._rel_tol}, abs_floor={self._abs_floor})'
