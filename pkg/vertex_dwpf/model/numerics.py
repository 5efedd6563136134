"""
Scalar helpers shared by the weight tables, the lattice engine and the verifier: roots of unity, the
principal square root, tolerance comparison, degree extraction by interpolation and branch-safe
random parameters.
"""
import logging
from typing import Sequence, Tuple, Union

import numpy as np

from vertex_dwpf.exceptions import PreconditionError
from vertex_dwpf.model.RootOfUnity import RootOfUnity
from vertex_dwpf.model.TolerancePolicy import TolerancePolicy

logger = logging.getLogger(__name__)

DEFAULT_POLICY = TolerancePolicy()

# distance kept from the cut of every radical, in radians
BRANCH_MARGIN = 1e-3

ILL_CONDITIONED = 1e8

Complex = Union[complex, np.ndarray]


def root_of_unity(n: int, N: int) -> RootOfUnity:
    return RootOfUnity(n, N)


def principal_sqrt(z: Complex) -> Complex:
    """
    Square root with argument in (-pi/2, pi/2]. A negative real input maps onto the positive imaginary
    axis regardless of the sign of its zero imaginary part.
    :param z: A complex scalar or array.
    :return: The principal square root, same shape as z.
    """
    z = np.asarray(z, dtype=complex)
    z = np.where(z.imag == 0, z.real + 0j, z)
    result = np.sqrt(z)
    if result.ndim == 0:
        return complex(result)
    return result


def approx_eq(a: complex, b: complex, scale: float, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    if scale < 0:
        raise PreconditionError(f'Scale must be non-negative [scale={scale}]')
    return policy.approx_eq(a, b, scale)


def interpolation_nodes(count: int, rng: np.random.Generator = None, radius: float = 1.0,
                        phase: float = None) -> np.ndarray:
    """
    Scaled roots of unity rotated by a global phase. The phase is drawn from rng when not given.
    """
    if phase is None:
        phase = 0.0 if rng is None else float(rng.uniform(0, 2 * np.pi))
    return radius * np.exp(1j * (phase + 2 * np.pi * np.arange(count) / count))


def interpolation_coefficients(points: Sequence[complex], values: Sequence[complex]) -> Tuple[np.ndarray, float]:
    """
    Coefficients (lowest order first) of the unique polynomial of degree len(points) - 1 through the samples.
    :return: A tuple (coefficients, condition number of the Vandermonde system).
    """
    points = np.asarray(points, dtype=complex)
    values = np.asarray(values, dtype=complex)
    vandermonde = np.vander(points, len(points), increasing=True)
    coefficients = np.linalg.solve(vandermonde, values)
    return coefficients, float(np.linalg.cond(vandermonde))


def interpolate_degree(samples: Sequence[Tuple[complex, complex]], max_degree: int,
                       policy: TolerancePolicy = DEFAULT_POLICY) -> int:
    """
    Effective degree of the polynomial through the samples: the largest power whose coefficient exceeds
    the tolerance relative to the largest coefficient.
    :param samples: A list of (point, value) pairs.
    :param max_degree: The largest degree the caller expects. At least max_degree + 2 samples are needed.
    :param policy: The tolerance policy.
    :return: The effective degree.
    """
    if len(samples) < max_degree + 2:
        raise PreconditionError(f'Not enough samples for degree extraction [samples={len(samples)}, '
                                f'max_degree={max_degree}]')

    points = np.array([p for p, _ in samples], dtype=complex)
    values = np.array([v for _, v in samples], dtype=complex)

    distances = np.abs(points[:, None] - points[None, :])
    np.fill_diagonal(distances, np.inf)
    if distances.min() <= policy.abs_floor:
        raise PreconditionError(f'Repeated interpolation points [min_distance={distances.min()}]')

    coefficients, condition = interpolation_coefficients(points, values)
    if condition > ILL_CONDITIONED:
        logger.warning(f'Ill-conditioned interpolation [condition={condition:.3g}, samples={len(samples)}]')

    magnitudes = np.abs(coefficients)
    largest = magnitudes.max()
    if largest == 0:
        return 0

    significant = np.nonzero(magnitudes > policy.threshold(largest))[0]
    return int(significant.max())


def branch_angle_sum(alpha: complex, rho: RootOfUnity) -> float:
    """
    Sum over k = 0..N-2 of |arg(1 - rho^k alpha^2)|, the largest phase any radical of this field can carry.
    """
    radicands = [1 - rho.power(k) * alpha ** 2 for k in range(rho.N - 1)]
    return float(np.sum(np.abs(np.angle(radicands))))


def is_branch_safe(alpha: complex, rho: RootOfUnity, margin: float = BRANCH_MARGIN) -> bool:
    return branch_angle_sum(alpha, rho) < np.pi / 2 - margin


def sample_fields(rng: np.random.Generator, count: int, rho: RootOfUnity, radius: float = 0.9,
                  min_radius: float = 0.0, max_attempts: int = 100000) -> np.ndarray:
    """
    Draws external fields uniformly from the annulus min_radius <= |alpha| <= radius, rejecting any field
    whose radicals could wrap past the principal branch when multiplied together.
    :param rng: The random generator.
    :param count: The number of fields.
    :param rho: The root of unity of the model the fields are for.
    :param radius: The outer radius.
    :param min_radius: The inner radius (0 for the full disk).
    :param max_attempts: The number of draws before giving up.
    :return: An array of accepted fields.
    """
    fields = []
    attempts = 0
    while len(fields) < count:
        attempts += 1
        if attempts > max_attempts:
            raise PreconditionError(f'Could not draw branch-safe fields [N={rho.N}, radius={radius}, '
                                    f'min_radius={min_radius}]')
        r = np.sqrt(rng.uniform(min_radius ** 2, radius ** 2))
        alpha = complex(r * np.exp(1j * rng.uniform(0, 2 * np.pi)))
        if is_branch_safe(alpha, rho):
            fields.append(alpha)

    return np.array(fields, dtype=complex)


def sample_rapidities(rng: np.random.Generator, count: int, spread: float = 0.5) -> np.ndarray:
    return spread * (rng.uniform(-1, 1, count) + 1j * rng.uniform(-1, 1, count))
