from __future__ import annotations
from typing import Optional, Tuple

from vertex_dwpf.exceptions import IndexRangeError

ExternalIndices = Tuple[int, int, int, int, int, int]


class YBEInstance:
    """
    Three lines (u, alpha), (v, beta), (w, gamma) meeting in a Yang-Baxter triangle and the external states
    (iota1, iota2, iota3, kappa1, kappa2, kappa3). Without external states every choice is evaluated.
    """

    def __init__(self, u: complex, alpha: complex, v: complex, beta: complex, w: complex, gamma: complex,
                 indices: Optional[ExternalIndices] = None):
        self.u = complex(u)
        self.alpha = complex(alpha)
        self.v = complex(v)
        self.beta = complex(beta)
        self.w = complex(w)
        self.gamma = complex(gamma)

        if indices is not None:
            indices = tuple(int(i) for i in indices)
            if len(indices) != 6:
                raise IndexRangeError(f'Six external indices required [indices={indices}]')
        self.indices = indices

    def validate(self, N: int) -> None:
        if self.indices is not None and any(i < 1 or i > N for i in self.indices):
            raise IndexRangeError(f'External index out of range [indices={self.indices}, N={N}]')

    def __repr__(self) -> str:
        return (f'YBEInstance(u={self.u}, alpha={self.alpha}, v={self.v}, beta={self.beta}, w={self.w}, '
                f'gamma={self.gamma}, indices={self.indices})')
