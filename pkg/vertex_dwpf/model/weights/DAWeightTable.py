from __future__ import annotations
import logging
from typing import Dict, NamedTuple, Tuple

import numpy as np

from vertex_dwpf.exceptions import IndexRangeError
from vertex_dwpf.model.RootOfUnity import RootOfUnity
from vertex_dwpf.model.weights.FormulaCompiler import FormulaCompiler, DEFAULT_COMPILER
from vertex_dwpf.model.weights.WeightTable import WeightTable, VertexIndex
from vertex_dwpf.model.weights import da_tables

logger = logging.getLogger(__name__)


class ExternalFieldPair(NamedTuple):
    alpha: complex
    beta: complex


class DAWeightTable(WeightTable):
    """
    An N-state Deguchi-Akutsu weight table. Entries are compiled formulas of (alpha, beta, x = e^w, rho).
    """

    def __init__(self, rho: RootOfUnity, formulas: Dict[VertexIndex, str], source: str = 'builtin',
                 compiler: FormulaCompiler = DEFAULT_COMPILER):
        if rho is None:
            raise IndexRangeError('Invalid value [rho=None]')
        super().__init__(rho.N)

        self._rho = rho
        self._source = source
        self._formulas = {}

        for idx, formula in formulas.items():
            idx = self.validate_index(idx)
            self._formulas[idx] = formula
            self._evaluators[idx] = self._make_evaluator(compiler.compile(formula))

        logger.debug(f'Built DA table [N={self.N}, n={rho.n}, entries={len(self._formulas)}, source={source}]')

    def _make_evaluator(self, function):
        rho = self._rho.value

        def evaluate(alpha, beta, w):
            return function(alpha, beta, np.exp(w), rho)

        return evaluate

    @classmethod
    def builtin(cls, N: int, n: int = 1) -> DAWeightTable:
        return DAWeightTable(RootOfUnity(n, N), da_tables.builtin_formulas(N), source='builtin')

    @property
    def family(self) -> str:
        return 'da'

    @property
    def rho(self) -> RootOfUnity:
        return self._rho

    @property
    def source(self) -> str:
        return self._source

    @property
    def formulas(self) -> Dict[VertexIndex, str]:
        return dict(self._formulas)

    def describe(self) -> Dict[str, object]:
        description = {
            'family': 'da',
            'N': self.N,
            'n': self._rho.n,
            'source': self._source,
            'entries': len(self),
        }
        if self._perturbations:
            description['perturbations'] = [{'index': list(idx), 'factor': [factor.real, factor.imag]}
                                            for idx, factor in self._perturbations]
        return description

    def conjugation_ratios(self, w: complex) -> Dict[VertexIndex, complex]:
        """
        Ratios X(conjugated idx) / X(idx) at zero fields for every listed entry with a listed conjugate.
        """
        ratios = {}
        for idx in self.entries():
            conjugate = self.conjugate_index(idx)
            if conjugate not in self._evaluators:
                continue
            value = self.weight(idx, 0, 0, w)
            if value != 0:
                ratios[idx] = self.weight(conjugate, 0, 0, w) / value
        return ratios


def da_weight(table: DAWeightTable, idx: VertexIndex, fields: ExternalFieldPair, w: complex) -> complex:
    return table.weight(idx, fields.alpha, fields.beta, w)


def da_c_plus(table: DAWeightTable, fields: ExternalFieldPair, w: complex) -> complex:
    return table.c_plus(fields.alpha, fields.beta, w)


def da_line_permuters(table: DAWeightTable, fields: ExternalFieldPair, w: complex) -> Tuple[complex, complex]:
    return table.line_permuters(fields.alpha, fields.beta, w)
