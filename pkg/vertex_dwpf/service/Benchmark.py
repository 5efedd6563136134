import logging
import time
from typing import Callable, List, Sequence

import numpy as np
import pandas as pd

from vertex_dwpf.exceptions import CapacityError, ConfigError
from vertex_dwpf.model.LatticeSpec import LatticeSpec
from vertex_dwpf.model.ModelParams import ModelParams
from vertex_dwpf.model.weights.WeightTable import WeightTable
from vertex_dwpf.service.LatticeEngine import LatticeEngine
from vertex_dwpf.service.Verifier import Verifier

logger = logging.getLogger(__name__)

METHODS = ['enumerate', 'contract', 'factorized']


class Benchmark:
    """
    Wall-clock timings of the evaluation methods over a sweep of lattice sizes.
    """

    def __init__(self, verifier: Verifier, repeats: int = 1):
        self._verifier = verifier
        self._engine: LatticeEngine = verifier.engine
        self._repeats = repeats

    def evaluator(self, method: str) -> Callable[[WeightTable, ModelParams], complex]:
        if method == 'enumerate':
            return lambda table, params: self._engine.dwpf_enumerate(LatticeSpec(params, table))
        elif method == 'contract':
            return lambda table, params: self._engine.dwpf_contract(LatticeSpec(params, table))
        elif method == 'factorized':
            return self._verifier.factorized
        else:
            raise ConfigError(f'Unknown method [method={method}, available={METHODS}]')

    def run(self, table: WeightTable, L_values: Sequence[int], methods: Sequence[str],
            rng: np.random.Generator) -> pd.DataFrame:
        """
        Times each method at each lattice size on one random parameter draw per size.
        :return: A DataFrame with columns method, L, seconds, value_re, value_im, note.
        """
        rows: List[dict] = []
        for L in L_values:
            params = self._verifier.random_params(table, rng, L)
            for method in methods:
                evaluate = self.evaluator(method)
                try:
                    start = time.perf_counter()
                    for _ in range(self._repeats):
                        value = evaluate(table, params)
                    seconds = (time.perf_counter() - start) / self._repeats
                    rows.append({'method': method, 'L': L, 'seconds': seconds, 'value_re': value.real,
                                 'value_im': value.imag, 'note': ''})
                    logger.info(f'Timed method [method={method}, L={L}, seconds={seconds:.4g}]')
                except CapacityError as e:
                    logger.warning(f'Skipping infeasible method [method={method}, L={L}]')
                    rows.append({'method': method, 'L': L, 'seconds': np.nan, 'value_re': np.nan,
                                 'value_im': np.nan, 'note': str(e)})

        return pd.DataFrame(rows, columns=['method', 'L', 'seconds', 'value_re', 'value_im', 'note'])
