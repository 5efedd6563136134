from __future__ import annotations
from math import gcd
import numpy as np

from vertex_dwpf.exceptions import CoprimalityError, IndexRangeError


class RootOfUnity:
    """
    The primitive root of unity rho = e^{2 pi i n / N} entering the DA weights.
    """

    def __init__(self, n: int, N: int):
        if N is None or N < 2:
            raise IndexRangeError(f'Order must be at least 2 [N={N}]')
        if n is None or not 1 <= n < N:
            raise IndexRangeError(f'Exponent must satisfy 1 <= n < N [n={n}, N={N}]')
        if gcd(n, N) != 1:
            raise CoprimalityError(f'Exponent and order must be co-prime [n={n}, N={N}, gcd={gcd(n, N)}]')

        self._n = int(n)
        self._N = int(N)
        self._value = complex(np.exp(2j * np.pi * n / N))

    @property
    def n(self) -> int:
        return self._n

    @property
    def N(self) -> int:
        return self._N

    @property
    def value(self) -> complex:
        return self._value

    def power(self, k: int) -> complex:
        """
        rho^k computed from the exact angle, so rho^N is 1 to rounding rather than accumulated error.
        """
        return complex(np.exp(2j * np.pi * self._n * k / self._N))

    def __eq__(self, other) -> bool:
        return isinstance(other, RootOfUnity) and self._n == other._n and self._N == other._N

    def __hash__(self) -> int:
        return hash((self._n, self._N))

    def __repr__(self) -> str:
        return f'RootOfUnity(n={self._n}, N={self._N})'
