from typing import List, Tuple, Dict, Any


class FactorizedValue:
    """
    A product of named factors, kept for diagnostics. The value is the running product.
    """

    def __init__(self):
        self._factors: List[Tuple[str, complex]] = []
        self._value = 1 + 0j

    def multiply(self, description: str, factor: complex) -> None:
        factor = complex(factor)
        self._factors.append((description, factor))
        self._value *= factor

    @property
    def value(self) -> complex:
        return self._value

    @property
    def factor_log(self) -> List[Tuple[str, complex]]:
        return list(self._factors)

    def vanishing_factors(self) -> List[str]:
        return [description for description, factor in self._factors if factor == 0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': [self._value.real, self._value.imag],
            'factors': [{'factor': description, 'value': [f.real, f.imag]} for description, f in self._factors],
        }

    def __repr__(self) -> str:
        return f'FactorizedValue(value={self._value}, factors={len(self._factors)})'
