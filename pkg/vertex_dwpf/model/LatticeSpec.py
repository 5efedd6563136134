from __future__ import annotations
from typing import Dict

import numpy as np

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.ModelParams import ModelParams
from vertex_dwpf.model.weights.WeightTable import WeightTable


class LatticeSpec:
    """
    An L x L lattice: its line parameters and the weight table shared by every vertex.
    Vertex (i, j) sits on column i and row j and has weight X_{alpha_i, beta_j}(u_i - v_j).
    """

    def __init__(self, params: ModelParams, table: WeightTable):
        if params is None:
            raise ConfigError('Invalid value [params=None]')
        if table is None:
            raise ConfigError('Invalid value [table=None]')

        self._params = params
        self._table = table
        self._tensors = None

    @property
    def L(self) -> int:
        return self._params.L

    @property
    def N(self) -> int:
        return self._table.N

    @property
    def params(self) -> ModelParams:
        return self._params

    @property
    def table(self) -> WeightTable:
        return self._table

    def vertex_tensors(self) -> np.ndarray:
        """
        The weight tensors of all sites, cached per spec.
        :return: An array of shape (L, L, N, N, N, N) indexed [column, row, iota1, iota2, kappa2, kappa1].
        """
        if self._tensors is None:
            p = self._params
            alpha = p.alpha[:, None]
            beta = p.beta[None, :]
            w = p.u[:, None] - p.v[None, :]
            self._tensors = self._table.weight_tensor(alpha, beta, w)
            self._tensors.setflags(write=False)
        return self._tensors

    def with_params(self, params: ModelParams) -> LatticeSpec:
        return LatticeSpec(params, self._table)

    def with_table(self, table: WeightTable) -> LatticeSpec:
        return LatticeSpec(self._params, table)

    def describe(self) -> Dict[str, object]:
        return {'L': self.L, 'table': self._table.describe()}
