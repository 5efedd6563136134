from __future__ import annotations
from typing import List, Sequence

from vertex_dwpf.exceptions import IndexRangeError


class BoundaryCondition:
    """
    State variables on the 4L boundary bonds. left and right are indexed by row (top to bottom), top and
    bottom by column (left to right).
    """

    def __init__(self, N: int, left: Sequence[int], top: Sequence[int], right: Sequence[int],
                 bottom: Sequence[int]):
        self._N = N
        self._left = [int(s) for s in left]
        self._top = [int(s) for s in top]
        self._right = [int(s) for s in right]
        self._bottom = [int(s) for s in bottom]

        L = len(self._left)
        for name, states in [('left', self._left), ('top', self._top), ('right', self._right),
                             ('bottom', self._bottom)]:
            if len(states) != L:
                raise IndexRangeError(f'Boundary sides must have equal lengths [{name}={states}, L={L}]')
            if any(s < 1 or s > N for s in states):
                raise IndexRangeError(f'Boundary state out of range [{name}={states}, N={N}]')

    @classmethod
    def dwbc(cls, N: int, L: int, sigma_minus: int = 1, sigma_plus: int = None) -> BoundaryCondition:
        """
        Domain wall boundary: sigma_minus (default 1) entering on the left and leaving at the top,
        sigma_plus (default N) leaving on the right and entering at the bottom.
        """
        if sigma_plus is None:
            sigma_plus = N
        return BoundaryCondition(N, left=[sigma_minus] * L, top=[sigma_minus] * L,
                                 right=[sigma_plus] * L, bottom=[sigma_plus] * L)

    @property
    def N(self) -> int:
        return self._N

    @property
    def L(self) -> int:
        return len(self._left)

    @property
    def left(self) -> List[int]:
        return list(self._left)

    @property
    def top(self) -> List[int]:
        return list(self._top)

    @property
    def right(self) -> List[int]:
        return list(self._right)

    @property
    def bottom(self) -> List[int]:
        return list(self._bottom)

    def __repr__(self) -> str:
        return (f'BoundaryCondition(left={self._left}, top={self._top}, right={self._right}, '
                f'bottom={self._bottom})')
