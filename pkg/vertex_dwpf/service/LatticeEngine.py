import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Sequence, Tuple

import numpy as np

from vertex_dwpf.exceptions import CapacityError, IndexRangeError
from vertex_dwpf.model.BoundaryCondition import BoundaryCondition
from vertex_dwpf.model.CutVector import CutVector
from vertex_dwpf.model.LatticeSpec import LatticeSpec

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 10 ** 8
DEFAULT_MEMORY_BYTES = 2 * 1024 ** 3

Site = Tuple[int, int]
Pinned = Dict[Site, Tuple[int, int, int, int]]


class LatticeEngine:
    """
    Evaluates domain wall partition functions as the sum over interior bond configurations of the product
    of vertex weights, either by direct enumeration or by sweeping a cut vector through the lattice column
    by column.
    """

    def __init__(self, enumeration_cap: float = DEFAULT_ENUMERATION_CAP,
                 memory_bytes: float = DEFAULT_MEMORY_BYTES, threads: int = 1):
        if threads is None or threads < 1:
            raise IndexRangeError(f'Invalid number of threads [threads={threads}]')
        self._enumeration_cap = enumeration_cap
        self._memory_bytes = memory_bytes
        self._threads = int(threads)

    @property
    def threads(self) -> int:
        return self._threads

    def enumeration_feasible(self, N: int, L: int) -> bool:
        return N ** (2 * L * (L - 1)) <= self._enumeration_cap

    def contraction_bytes(self, N: int, L: int, threads: int = None) -> int:
        threads = self._threads if threads is None else threads
        return (3 + threads) * N ** (L + 1) * 16

    def contraction_feasible(self, N: int, L: int) -> bool:
        return self.contraction_bytes(N, L) <= self._memory_bytes

    def dwpf_enumerate(self, spec: LatticeSpec, bc: BoundaryCondition = None, pinned: Pinned = None) -> complex:
        return self.enumerate_with_scale(spec, bc, pinned)[0]

    def enumerate_with_scale(self, spec: LatticeSpec, bc: BoundaryCondition = None,
                             pinned: Pinned = None) -> Tuple[complex, float]:
        """
        Sums the weight of every interior configuration.
        :param spec: The lattice.
        :param bc: The boundary condition (domain wall when None).
        :param pinned: Optional map (column, row) -> index tuple (1-based) restricting a site to one entry.
        :return: A tuple (partition function, largest magnitude of a single configuration weight).
        """
        N, L = spec.N, spec.L
        bc = self._boundary(spec, bc)
        if not self.enumeration_feasible(N, L):
            raise CapacityError(f'Enumeration cap exceeded, use contraction instead [N={N}, L={L}, '
                                f'assignments={N ** (2 * L * (L - 1))}, cap={self._enumeration_cap}]')

        tensors = self._site_tensors(spec, pinned)
        options = self._site_options(tensors, N, L)

        top, bottom, left, right = bc.top, bc.bottom, bc.left, bc.right
        total = 0j
        largest = 0.0
        terms = 0

        # row-major sweep; above[i] holds the bottom bond of the previous vertex in column i
        def visit(position: int, above: List[int], horizontal: int, product: complex):
            nonlocal total, largest, terms
            if position == L * L:
                total += product
                largest = max(largest, abs(product))
                terms += 1
                return

            j, i = divmod(position, L)
            kappa2 = left[j] if i == 0 else horizontal
            iota1 = top[i] if j == 0 else above[i]

            for iota2, kappa1, weight in options[i][j].get((iota1, kappa2), ()):
                if i == L - 1 and iota2 != right[j]:
                    continue
                if j == L - 1 and kappa1 != bottom[i]:
                    continue
                previous = above[i]
                above[i] = kappa1
                visit(position + 1, above, iota2, product * weight)
                above[i] = previous

        visit(0, [0] * L, 0, 1 + 0j)
        logger.debug(f'Enumerated configurations [N={N}, L={L}, nonzero_terms={terms}, largest={largest:.3g}]')
        return complex(total), float(largest)

    def _site_options(self, tensors: np.ndarray, N: int, L: int):
        """
        For every site, the nonzero entries grouped by the (top, left) states known when the site is reached.
        """
        options = [[dict() for _ in range(L)] for _ in range(L)]
        for i in range(L):
            for j in range(L):
                site = tensors[i, j]
                for iota1, iota2, kappa2, kappa1 in zip(*np.nonzero(site)):
                    key = (int(iota1) + 1, int(kappa2) + 1)
                    options[i][j].setdefault(key, []).append(
                        (int(iota2) + 1, int(kappa1) + 1, complex(site[iota1, iota2, kappa2, kappa1])))
        return options

    def dwpf_contract(self, spec: LatticeSpec, bc: BoundaryCondition = None, pinned: Pinned = None,
                      absolute: bool = False, threads: int = None) -> complex:
        """
        Sweeps a cut vector over the columns from left to right.
        :param spec: The lattice.
        :param bc: The boundary condition (domain wall when None).
        :param pinned: Optional map (column, row) -> index tuple (1-based) restricting a site to one entry.
        :param absolute: Contract the magnitudes of the weights instead, an upper bound for the magnitude of
                         the sum of any subset of configurations.
        :param threads: Number of blocks contracted concurrently per column (defaults to the engine setting).
        :return: The partition function.
        """
        N, L = spec.N, spec.L
        bc = self._boundary(spec, bc)
        threads = self._threads if threads is None else threads

        required = self.contraction_bytes(N, L, threads)
        if required > self._memory_bytes:
            raise CapacityError(f'Contraction memory cap exceeded [N={N}, L={L}, bytes={required}, '
                                f'cap={self._memory_bytes}]')

        tensors = self._site_tensors(spec, pinned)
        if absolute:
            tensors = np.abs(tensors).astype(complex)

        vector = CutVector.basis(N, bc.left)
        entries = vector.entries
        for i in range(L):
            entries = self._sweep_column(entries, tensors[i], N, L, bc.top[i], bc.bottom[i], threads)
            logger.debug(f'Contracted column [column={i + 1}, L={L}, norm={np.linalg.norm(entries):.3g}]')

        return CutVector(N, L, entries).amplitude(bc.right)

    def _sweep_column(self, entries: np.ndarray, column: np.ndarray, N: int, L: int, top: int, bottom: int,
                      threads: int) -> np.ndarray:
        if threads == 1:
            return self._apply_column(entries, column, N, L, top, bottom, np.arange(N))

        blocks = [block for block in np.array_split(np.arange(N), min(threads, N)) if len(block) > 0]
        with ThreadPoolExecutor(max_workers=len(blocks)) as executor:
            parts = list(executor.map(
                lambda block: self._apply_column(entries, column, N, L, top, bottom, block), blocks))
        return np.sum(parts, axis=0)

    def _apply_column(self, entries: np.ndarray, column: np.ndarray, N: int, L: int, top: int, bottom: int,
                      first_row_states: np.ndarray) -> np.ndarray:
        """
        Applies one column of vertices to the cut vector, restricted to the given states of the first row.
        The state carries the vertical bond being passed down the column as a leading axis.
        """
        state = entries.reshape(1, 1, N, N ** (L - 1))[:, :, first_row_states, :]
        aux = np.zeros((N,) + state.shape[1:], dtype=complex)
        aux[top - 1] = state[0]
        state = aux

        for j in range(L):
            weights = column[j]
            if j == 0:
                weights = weights[:, :, first_row_states, :]
            # (iota2, kappa1, A, B) -> (kappa1, A, iota2, B)
            state = np.tensordot(weights, state, axes=([0, 2], [0, 2])).transpose(1, 2, 0, 3)
            if j < L - 1:
                state = state.reshape(N, N ** (j + 1), N, N ** (L - j - 2))

        return state[bottom - 1].reshape(-1)

    def absolute_scale(self, spec: LatticeSpec, bc: BoundaryCondition = None) -> float:
        """
        Scale for zero checks: the largest configuration weight when enumeration is feasible, otherwise the
        contraction of the weight magnitudes.
        """
        if self.enumeration_feasible(spec.N, spec.L):
            return self.enumerate_with_scale(spec, bc)[1]
        return abs(self.dwpf_contract(spec, bc, absolute=True))

    def dwpf(self, spec: LatticeSpec, bc: BoundaryCondition = None, pinned: Pinned = None) -> complex:
        """
        Contraction when it fits in memory, otherwise enumeration.
        """
        if self.contraction_feasible(spec.N, spec.L):
            return self.dwpf_contract(spec, bc, pinned)
        return self.dwpf_enumerate(spec, bc, pinned)

    def dwpf_with_permuted_columns(self, spec: LatticeSpec, permutation: Sequence[int],
                                   bc: BoundaryCondition = None) -> complex:
        """
        The partition function with the vertical lines reordered.
        :param permutation: 1-based line indices; new column k carries line permutation[k - 1].
        """
        permuted = spec.with_params(spec.params.permuted_columns([p - 1 for p in permutation]))
        return self.dwpf(permuted, bc)

    def _boundary(self, spec: LatticeSpec, bc: BoundaryCondition) -> BoundaryCondition:
        if bc is None:
            return BoundaryCondition.dwbc(spec.N, spec.L)
        if bc.N != spec.N or bc.L != spec.L:
            raise IndexRangeError(f'Boundary does not match lattice [bc_N={bc.N}, bc_L={bc.L}, N={spec.N}, '
                                  f'L={spec.L}]')
        return bc

    def _site_tensors(self, spec: LatticeSpec, pinned: Pinned) -> np.ndarray:
        tensors = spec.vertex_tensors()
        if not pinned:
            return tensors

        tensors = tensors.copy()
        for (i, j), idx in pinned.items():
            if not (1 <= i <= spec.L and 1 <= j <= spec.L):
                raise IndexRangeError(f'Pinned site out of range [site={(i, j)}, L={spec.L}]')
            position = tuple(spec.table.validate_index(idx))
            kept = tensors[(i - 1, j - 1) + tuple(p - 1 for p in position)]
            tensors[i - 1, j - 1] = 0
            tensors[(i - 1, j - 1) + tuple(p - 1 for p in position)] = kept
        return tensors
