from __future__ import annotations
import abc
import copy
from typing import Callable, Dict, List, Tuple

import numpy as np

from vertex_dwpf.exceptions import IndexRangeError

"""
Abstract class for vertex weight tables. A table maps an index tuple (iota1, iota2, kappa2, kappa1), meaning
(top-out, right-out, left-in, bottom-in), together with the line parameters of a vertex to a complex weight.
"""

VertexIndex = Tuple[int, int, int, int]
Evaluator = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


class WeightTable(abc.ABC):

    def __init__(self, N: int):
        if N is None or N < 2:
            raise IndexRangeError(f'Number of states must be at least 2 [N={N}]')
        self._N = int(N)
        self._evaluators: Dict[VertexIndex, Evaluator] = {}
        self._perturbations: List[Tuple[VertexIndex, complex]] = []

    @property
    def N(self) -> int:
        return self._N

    @property
    @abc.abstractmethod
    def family(self) -> str:
        """
        The model family, 'da' or 'ps'.
        """
        pass

    @abc.abstractmethod
    def describe(self) -> Dict[str, object]:
        """
        A JSON-compatible description of the table, used in reports.
        """
        pass

    @property
    def c_plus_index(self) -> VertexIndex:
        return 1, self._N, 1, self._N

    @property
    def a_plus_index(self) -> VertexIndex:
        return 1, 1, 1, 1

    @property
    def a_minus_index(self) -> VertexIndex:
        return self._N, self._N, self._N, self._N

    def entries(self) -> List[VertexIndex]:
        """
        The listed index tuples. Every other tuple has weight exactly 0.
        """
        return sorted(self._evaluators.keys())

    def validate_index(self, idx: VertexIndex) -> VertexIndex:
        idx = tuple(int(i) for i in idx)
        if len(idx) != 4 or any(i < 1 or i > self._N for i in idx):
            raise IndexRangeError(f'Index out of range [idx={idx}, N={self._N}]')
        return idx

    def conjugate_index(self, idx: VertexIndex) -> VertexIndex:
        return tuple(self._N - i + 1 for i in self.validate_index(idx))

    def weight(self, idx: VertexIndex, alpha, beta, w):
        """
        Evaluates a single entry.
        :param idx: The index tuple (iota1, iota2, kappa2, kappa1).
        :param alpha: The vertical line field (scalar or array).
        :param beta: The horizontal line field (scalar or array).
        :param w: The rapidity difference u - v (scalar or array).
        :return: The weight, broadcast over the parameters. Unlisted tuples give 0.
        """
        idx = self.validate_index(idx)
        alpha, beta, w = self._as_arrays(alpha, beta, w)
        if idx in self._evaluators:
            value = np.array(self._evaluators[idx](alpha, beta, w), dtype=complex)
        else:
            value = np.zeros(alpha.shape, dtype=complex)

        return complex(value) if value.ndim == 0 else value

    def weight_tensor(self, alpha, beta, w) -> np.ndarray:
        """
        Materializes the dense weight tensor W[iota1-1, iota2-1, kappa2-1, kappa1-1].
        :return: An array of shape broadcast(alpha, beta, w).shape + (N, N, N, N).
        """
        alpha, beta, w = self._as_arrays(alpha, beta, w)
        N = self._N
        tensor = np.zeros(alpha.shape + (N, N, N, N), dtype=complex)
        for idx, evaluator in self._evaluators.items():
            tensor[(Ellipsis,) + tuple(i - 1 for i in idx)] = evaluator(alpha, beta, w)
        return tensor

    def c_plus(self, alpha, beta, w):
        return self.weight(self.c_plus_index, alpha, beta, w)

    def line_permuters(self, alpha, beta, w) -> Tuple[complex, complex]:
        return self.weight(self.a_plus_index, alpha, beta, w), self.weight(self.a_minus_index, alpha, beta, w)

    def has_required_entries(self) -> bool:
        required = {self.c_plus_index, self.a_plus_index, self.a_minus_index}
        return required.issubset(self._evaluators.keys())

    def perturbed(self, idx: VertexIndex, factor: complex) -> WeightTable:
        """
        A copy of this table with one listed entry multiplied by a constant factor.
        """
        idx = self.validate_index(idx)
        if idx not in self._evaluators:
            raise IndexRangeError(f'Cannot perturb an unlisted entry [idx={idx}]')

        original = self._evaluators[idx]
        table = copy.copy(self)
        table._evaluators = dict(self._evaluators)
        table._evaluators[idx] = lambda alpha, beta, w: factor * original(alpha, beta, w)
        table._perturbations = self._perturbations + [(idx, complex(factor))]
        return table

    @property
    def perturbations(self) -> List[Tuple[VertexIndex, complex]]:
        return list(self._perturbations)

    def _as_arrays(self, alpha, beta, w):
        return np.broadcast_arrays(np.asarray(alpha, dtype=complex),
                                   np.asarray(beta, dtype=complex),
                                   np.asarray(w, dtype=complex))

    def __len__(self) -> int:
        return len(self._evaluators)
