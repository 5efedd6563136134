from __future__ import annotations
from typing import Sequence, Optional, Dict, Any

import numpy as np

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.RootOfUnity import RootOfUnity
from vertex_dwpf.model import numerics


class ModelParams:
    """
    Line parameters of an L x L lattice: rapidities u (vertical lines) and v (horizontal lines), external
    fields alpha and beta (all zero for the Perk-Schultz family), plus the root of unity rho (DA) or the
    crossing parameter eta (PS).
    """

    def __init__(self, u: Sequence[complex], v: Sequence[complex], alpha: Sequence[complex] = None,
                 beta: Sequence[complex] = None, rho: RootOfUnity = None, eta: complex = None):
        self._u = np.array(u, dtype=complex).reshape(-1)
        self._v = np.array(v, dtype=complex).reshape(-1)
        L = len(self._u)

        self._alpha = np.zeros(L, dtype=complex) if alpha is None else np.array(alpha, dtype=complex).reshape(-1)
        self._beta = np.zeros(L, dtype=complex) if beta is None else np.array(beta, dtype=complex).reshape(-1)

        lengths = {'u': L, 'v': len(self._v), 'alpha': len(self._alpha), 'beta': len(self._beta)}
        if len(set(lengths.values())) != 1:
            raise ConfigError(f'Parameter arrays must have equal lengths [{lengths}]')
        if L < 1:
            raise ConfigError(f'Lattice size must be at least 1 [L={L}]')

        for name, values in [('u', self._u), ('v', self._v), ('alpha', self._alpha), ('beta', self._beta)]:
            if not np.all(np.isfinite(values)):
                raise ConfigError(f'Parameters must be finite [{name}={values.tolist()}]')

        self._rho = rho
        self._eta = None if eta is None else complex(eta)

        for array in (self._u, self._v, self._alpha, self._beta):
            array.setflags(write=False)

    @property
    def L(self) -> int:
        return len(self._u)

    @property
    def u(self) -> np.ndarray:
        return self._u

    @property
    def v(self) -> np.ndarray:
        return self._v

    @property
    def alpha(self) -> np.ndarray:
        return self._alpha

    @property
    def beta(self) -> np.ndarray:
        return self._beta

    @property
    def rho(self) -> Optional[RootOfUnity]:
        return self._rho

    @property
    def eta(self) -> Optional[complex]:
        return self._eta

    def _replace(self, **changes) -> ModelParams:
        values = dict(u=self._u, v=self._v, alpha=self._alpha, beta=self._beta, rho=self._rho, eta=self._eta)
        values.update(changes)
        return ModelParams(**values)

    def with_u(self, index: int, value: complex) -> ModelParams:
        """
        A copy with u at the 0-based column index replaced.
        """
        u = self._u.copy()
        u[index] = value
        return self._replace(u=u)

    def with_alpha(self, index: int, value: complex) -> ModelParams:
        alpha = self._alpha.copy()
        alpha[index] = value
        return self._replace(alpha=alpha)

    def with_beta(self, index: int, value: complex) -> ModelParams:
        beta = self._beta.copy()
        beta[index] = value
        return self._replace(beta=beta)

    def permuted_columns(self, permutation: Sequence[int]) -> ModelParams:
        """
        Reorders the vertical lines: new column k carries (u, alpha) of old column permutation[k] (0-based).
        """
        permutation = list(permutation)
        if sorted(permutation) != list(range(self.L)):
            raise ConfigError(f'Invalid column permutation [permutation={permutation}, L={self.L}]')
        return self._replace(u=self._u[permutation], alpha=self._alpha[permutation])

    def reduced(self) -> ModelParams:
        """
        Drops the first vertical line (u_1, alpha_1) and the last horizontal line (v_L, beta_L).
        """
        if self.L < 2:
            raise ConfigError(f'Cannot reduce a lattice of size 1 [L={self.L}]')
        return self._replace(u=self._u[1:], alpha=self._alpha[1:], v=self._v[:-1], beta=self._beta[:-1])

    @classmethod
    def random_da(cls, rng: np.random.Generator, L: int, rho: RootOfUnity, field_radius: float = 0.9,
                  min_field_radius: float = 0.0) -> ModelParams:
        """
        Branch-safe random DA parameters.
        """
        return ModelParams(u=numerics.sample_rapidities(rng, L),
                           v=numerics.sample_rapidities(rng, L),
                           alpha=numerics.sample_fields(rng, L, rho, field_radius, min_field_radius),
                           beta=numerics.sample_fields(rng, L, rho, field_radius, min_field_radius),
                           rho=rho)

    @classmethod
    def random_ps(cls, rng: np.random.Generator, L: int, eta: complex) -> ModelParams:
        return ModelParams(u=numerics.sample_rapidities(rng, L),
                           v=numerics.sample_rapidities(rng, L),
                           eta=eta)

    def to_dict(self) -> Dict[str, Any]:
        def pairs(values):
            return [[float(z.real), float(z.imag)] for z in values]

        params = {'u': pairs(self._u), 'v': pairs(self._v), 'alpha': pairs(self._alpha), 'beta': pairs(self._beta)}
        if self._rho is not None:
            params['n'] = self._rho.n
            params['N'] = self._rho.N
        if self._eta is not None:
            params['eta'] = [self._eta.real, self._eta.imag]
        return params

    def __repr__(self) -> str:
        return f'ModelParams(L={self.L}, rho={self._rho}, eta={self._eta})'
