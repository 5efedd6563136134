from __future__ import annotations
import logging
from typing import Dict, Tuple

import numpy as np

from vertex_dwpf.exceptions import IndexRangeError, PreconditionError
from vertex_dwpf.model.weights.GradedStateSpace import GradedStateSpace
from vertex_dwpf.model.weights.WeightTable import WeightTable, VertexIndex

logger = logging.getLogger(__name__)

MIN_SINH_ETA = 1e-3


class PSWeightTable(WeightTable):
    """
    Perk-Schultz weights. The weights depend only on the rapidity difference u, so the field arguments
    of the base class are accepted and ignored.

    R^{a,a}_{a,a}(u) = sinh(eta(1 - u))/sinh(eta) for a in B_minus, sinh(eta(1 + u))/sinh(eta) for a in B_plus
    R^{a,b}_{b,a}(u) = -sinh(eta u)/sinh(eta) when a, b share a grading, +sinh(eta u)/sinh(eta) otherwise
    R^{a,b}_{a,b}(u) = e^{eta u} for a < b, e^{-eta u} for a > b
    """

    def __init__(self, space: GradedStateSpace, eta: complex = 1.0):
        if space is None:
            raise IndexRangeError('Invalid value [space=None]')
        super().__init__(space.N)

        self._space = space
        self._eta = complex(eta)
        self._sinh_eta = complex(np.sinh(self._eta))
        if abs(self._sinh_eta) <= MIN_SINH_ETA:
            raise PreconditionError(f'Crossing parameter too close to a zero of sinh [eta={eta}]')

        self._build_evaluators()

    def _build_evaluators(self):
        N = self.N
        eta = self._eta
        sinh_eta = self._sinh_eta

        def diagonal(sign):
            return lambda alpha, beta, w: np.sinh(eta * (1 + sign * w)) / sinh_eta

        def exchange(sign):
            return lambda alpha, beta, w: sign * np.sinh(eta * w) / sinh_eta

        def passing(sign):
            return lambda alpha, beta, w: np.exp(sign * eta * w)

        for a in range(1, N + 1):
            self._evaluators[(a, a, a, a)] = diagonal(-1 if self._space.is_minus(a) else 1)
            for b in range(1, N + 1):
                if a == b:
                    continue
                same_grading = self._space.is_minus(a) == self._space.is_minus(b)
                self._evaluators[(a, b, b, a)] = exchange(-1 if same_grading else 1)
                self._evaluators[(a, b, a, b)] = passing(1 if a < b else -1)

    @classmethod
    def create(cls, r: int, s: int, eta: complex = 1.0) -> PSWeightTable:
        return PSWeightTable(GradedStateSpace(r, s), eta)

    @property
    def family(self) -> str:
        return 'ps'

    @property
    def space(self) -> GradedStateSpace:
        return self._space

    @property
    def eta(self) -> complex:
        return self._eta

    def describe(self) -> Dict[str, object]:
        description = {
            'family': 'ps',
            'r': self._space.r,
            's': self._space.s,
            'N': self.N,
            'eta': [self._eta.real, self._eta.imag],
            'entries': len(self),
        }
        if self._perturbations:
            description['perturbations'] = [{'index': list(idx), 'factor': [factor.real, factor.imag]}
                                            for idx, factor in self._perturbations]
        return description


def ps_weight(table: PSWeightTable, idx: VertexIndex, u: complex) -> complex:
    return table.weight(idx, 0, 0, u)


def ps_c_plus(table: PSWeightTable, u: complex) -> complex:
    return table.c_plus(0, 0, u)


def ps_line_permuters(table: PSWeightTable, u: complex) -> Tuple[complex, complex]:
    return table.line_permuters(0, 0, u)
