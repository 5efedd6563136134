from __future__ import annotations
from typing import Sequence

import numpy as np

from vertex_dwpf.exceptions import IndexRangeError


class CutVector:
    """
    Amplitudes for the N^L states of the L horizontal bonds crossing one vertical cut of the lattice.
    The state of row 1 (top) is the most significant digit of the flat index.
    """

    def __init__(self, N: int, L: int, entries: np.ndarray = None):
        self._N = N
        self._L = L
        if entries is None:
            entries = np.zeros(N ** L, dtype=complex)
        entries = np.asarray(entries, dtype=complex).reshape(-1)
        if len(entries) != N ** L:
            raise IndexRangeError(f'Cut vector has wrong length [length={len(entries)}, N={N}, L={L}]')
        self._entries = entries

    @classmethod
    def basis(cls, N: int, states: Sequence[int]) -> CutVector:
        vector = CutVector(N, len(states))
        vector._entries[vector.index_of(states)] = 1.0
        return vector

    @property
    def N(self) -> int:
        return self._N

    @property
    def L(self) -> int:
        return self._L

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def index_of(self, states: Sequence[int]) -> int:
        """
        Flat index of a tuple of 1-based row states.
        """
        if len(states) != self._L or any(s < 1 or s > self._N for s in states):
            raise IndexRangeError(f'Invalid cut states [states={list(states)}, N={self._N}, L={self._L}]')
        return int(np.ravel_multi_index(tuple(s - 1 for s in states), (self._N,) * self._L))

    def amplitude(self, states: Sequence[int]) -> complex:
        return complex(self._entries[self.index_of(states)])

    def __len__(self) -> int:
        return len(self._entries)
