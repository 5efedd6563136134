from typing import List

from vertex_dwpf.exceptions import IndexRangeError


class GradedStateSpace:
    """
    State labels 1..N of the sl(r+1|s+1) model, split into B_minus = {1..s+1} and B_plus = {s+2..N}
    with N = r + s + 2.
    """

    def __init__(self, r: int, s: int):
        if r is None or s is None or r < 0 or s < 0:
            raise IndexRangeError(f'Grading must be non-negative [r={r}, s={s}]')

        self._r = int(r)
        self._s = int(s)

    @property
    def r(self) -> int:
        return self._r

    @property
    def s(self) -> int:
        return self._s

    @property
    def N(self) -> int:
        return self._r + self._s + 2

    @property
    def B_minus(self) -> List[int]:
        return list(range(1, self._s + 2))

    @property
    def B_plus(self) -> List[int]:
        return list(range(self._s + 2, self.N + 1))

    def is_minus(self, a: int) -> bool:
        if not 1 <= a <= self.N:
            raise IndexRangeError(f'State out of range [a={a}, N={self.N}]')
        return a <= self._s + 1

    def __repr__(self) -> str:
        return f'GradedStateSpace(r={self._r}, s={self._s})'
