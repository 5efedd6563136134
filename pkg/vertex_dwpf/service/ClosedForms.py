import logging
from typing import List, Tuple

import numpy as np

from vertex_dwpf.exceptions import PreconditionError, IndexRangeError
from vertex_dwpf.model.FactorizedValue import FactorizedValue
from vertex_dwpf.model.ModelParams import ModelParams
from vertex_dwpf.model.RootOfUnity import RootOfUnity
from vertex_dwpf.model.TolerancePolicy import TolerancePolicy
from vertex_dwpf.model import numerics

logger = logging.getLogger(__name__)

# relative distance from a substitution point still accepted by the recursion right-hand sides
SUBSTITUTION_TOL = 1e-8


class ClosedForms:
    """
    Factorized domain wall partition functions of the Deguchi-Akutsu and Perk-Schultz models and the
    right-hand sides of their recursions in the lattice size.
    """

    def __init__(self, policy: TolerancePolicy = numerics.DEFAULT_POLICY):
        self._policy = policy

    def _difference(self, a: complex, b: complex) -> complex:
        """
        a - b, snapped to exactly 0 when the two terms cancel to rounding.
        """
        difference = complex(a - b)
        if abs(difference) <= self._policy.abs_floor * max(abs(a), abs(b), 1.0):
            return 0j
        return difference

    def _rho(self, params: ModelParams, N: int) -> RootOfUnity:
        if N is None or N < 2:
            raise IndexRangeError(f'Number of states must be at least 2 [N={N}]')
        if params.rho is None:
            return RootOfUnity(1, N)
        if params.rho.N != N:
            raise PreconditionError(f'Root of unity does not match the number of states [rho={params.rho}, N={N}]')
        return params.rho

    def _field_radicals(self, value: FactorizedValue, name: str, field: complex, rho: RootOfUnity) -> None:
        for k in range(1, rho.N):
            value.multiply(f'sqrt(1 - rho^{k - 1} {name}^2)',
                           numerics.principal_sqrt(1 - rho.power(k - 1) * field ** 2))

    def dwpf_factorized_da(self, params: ModelParams, N: int) -> FactorizedValue:
        rho = self._rho(params, N)
        u, v, alpha, beta = params.u, params.v, params.alpha, params.beta
        L = params.L
        value = FactorizedValue()

        for j in range(1, L + 1):
            value.multiply(f'e^((N-1) {j} (u_{j} - v_{j}))', np.exp((N - 1) * j * (u[j - 1] - v[j - 1])))
            self._field_radicals(value, f'alpha_{j}', alpha[j - 1], rho)
            self._field_radicals(value, f'beta_{j}', beta[j - 1], rho)

        for i in range(1, L + 1):
            for j in range(i + 1, L + 1):
                for k in range(1, N):
                    rk = rho.power(k - 1)
                    value.multiply(f'(1 - rho^{k - 1} alpha_{i} alpha_{j} e^(u_{i} - u_{j}))',
                                   self._difference(1, rk * alpha[i - 1] * alpha[j - 1] * np.exp(u[i - 1] - u[j - 1])))
                    value.multiply(f'(1 - rho^{k - 1} beta_{j} beta_{i} e^(v_{j} - v_{i}))',
                                   self._difference(1, rk * beta[j - 1] * beta[i - 1] * np.exp(v[j - 1] - v[i - 1])))

        return value

    def _ps_eta(self, params: ModelParams) -> complex:
        if params.eta is None:
            raise PreconditionError('Crossing parameter required [eta=None]')
        return params.eta

    def _ps_diagonal(self, eta: complex, u: complex, sign: int) -> complex:
        """
        sinh(eta (1 + sign u)) / sinh(eta), exactly 0 when 1 + sign u cancels.
        """
        argument = self._difference(1, -sign * u)
        return complex(np.sinh(eta * argument) / np.sinh(eta))

    def dwpf_factorized_ps(self, params: ModelParams) -> FactorizedValue:
        eta = self._ps_eta(params)
        u, v = params.u, params.v
        L = params.L
        value = FactorizedValue()

        for k in range(1, L + 1):
            value.multiply(f'R^(1,N)_(1,N)(u_{k} - v_{k})', np.exp(eta * (u[k - 1] - v[k - 1])))

        for i in range(1, L + 1):
            for j in range(i + 1, L + 1):
                value.multiply(f'R^(1,1)_(1,1)(u_{i} - u_{j})', self._ps_diagonal(eta, u[i - 1] - u[j - 1], -1))
                value.multiply(f'R^(1,1)_(1,1)(v_{j} - v_{i})', self._ps_diagonal(eta, v[j - 1] - v[i - 1], -1))

        return value

    def reduce_params(self, params: ModelParams) -> ModelParams:
        return params.reduced()

    def da_substitution_point(self, params: ModelParams) -> ModelParams:
        """
        Parameters with e^{u_1} = (beta_L / alpha_1) e^{v_L}.
        """
        alpha1, betaL = params.alpha[0], params.beta[-1]
        if alpha1 == 0 or betaL == 0:
            raise PreconditionError(f'Substitution point needs nonzero fields [alpha_1={alpha1}, beta_L={betaL}]')
        return params.with_u(0, params.v[-1] + np.log(betaL / alpha1))

    def ps_substitution_point(self, params: ModelParams) -> ModelParams:
        return params.with_u(0, params.v[-1])

    def da_zero_points(self, params: ModelParams, N: int) -> List[Tuple[int, int, complex]]:
        """
        The (L-1)(N-1) values of u_1 with e^{u_1} = e^{u_k} / (rho^{j-1} alpha_1 alpha_k).
        :return: A list of (j, k, u_1).
        """
        rho = self._rho(params, N)
        points = []
        for k in range(2, params.L + 1):
            for j in range(1, N):
                denominator = rho.power(j - 1) * params.alpha[0] * params.alpha[k - 1]
                if denominator == 0:
                    raise PreconditionError(f'Zero locations need nonzero fields [alpha_1={params.alpha[0]}, '
                                            f'alpha_{k}={params.alpha[k - 1]}]')
                points.append((j, k, complex(params.u[k - 1] - np.log(denominator))))
        return points

    def ps_zero_points(self, params: ModelParams) -> List[Tuple[int, complex]]:
        """
        The L-1 values u_1 = u_k + 1 where R^{1,1}_{1,1}(u_1 - u_k) vanishes.
        """
        return [(k, complex(params.u[k - 1] + 1)) for k in range(2, params.L + 1)]

    def da_recursion_rhs(self, params: ModelParams, N: int, reduced_Z: complex) -> complex:
        rho = self._rho(params, N)
        u, v, alpha, beta = params.u, params.v, params.alpha, params.beta
        L = params.L
        alpha1, betaL = alpha[0], beta[-1]

        if alpha1 == 0:
            raise PreconditionError(f'Recursion needs a nonzero field [alpha_1={alpha1}]')
        expected = betaL / alpha1 * np.exp(v[-1])
        if abs(np.exp(u[0]) - expected) > SUBSTITUTION_TOL * max(abs(expected), 1.0):
            raise PreconditionError(f'Parameters are not at the substitution point [e^u1={np.exp(u[0])}, '
                                    f'expected={expected}]')

        value = (betaL / alpha1) ** (N - 1)
        for j in range(1, N):
            rj = rho.power(j - 1)
            value *= numerics.principal_sqrt(1 - rj * alpha1 ** 2) * numerics.principal_sqrt(1 - rj * betaL ** 2)
            for k in range(1, L):
                value *= self._difference(1, rj * betaL * beta[k - 1] * np.exp(v[-1] - v[k - 1]))
            for k in range(2, L + 1):
                value *= self._difference(np.exp(u[k - 1] - v[-1]), rj * alpha[k - 1] * betaL)

        return complex(value * reduced_Z)

    def ps_recursion_rhs(self, params: ModelParams, reduced_Z: complex) -> complex:
        eta = self._ps_eta(params)
        u, v = params.u, params.v
        L = params.L

        if abs(u[0] - v[-1]) > SUBSTITUTION_TOL * max(abs(v[-1]), 1.0):
            raise PreconditionError(f'Parameters are not at the substitution point [u_1={u[0]}, v_L={v[-1]}]')

        # R^{1,N}_{1,N}(0) = 1
        value = 1 + 0j
        for j in range(1, L):
            value *= self._ps_diagonal(eta, v[-1] - v[j - 1], -1)
        for j in range(2, L + 1):
            value *= self._ps_diagonal(eta, u[j - 1] - v[-1], 1)

        return complex(value * reduced_Z)
