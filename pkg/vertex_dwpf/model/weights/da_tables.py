"""
Formula text of the built-in Deguchi-Akutsu weight tables for N = 2, 3 and 4, keyed by the index tuple
(iota1, iota2, kappa2, kappa1). Formulas use the plugin expression language so the built-in tables and
plugin tables are compiled by the same code.

Eight N = 4 entries differ from the commonly quoted listing: (1,4,2,3), (2,3,1,4), (2,3,2,3), (3,3,2,4),
(3,3,4,2), (4,1,2,3), (4,1,3,2) and (4,2,4,2). The forms here satisfy the transpose symmetry
X^{ab}_{cd}(alpha, beta) = X^{cd}_{ab}(beta, alpha), the radical placement rule shared by all N = 3 entries and
the lower-left freezing at x = beta/alpha.
"""
from typing import Dict, Tuple

from vertex_dwpf.exceptions import IndexRangeError

VertexIndex = Tuple[int, int, int, int]

_R2 = 'sqrt(1 - rho^2)/sqrt(1 - rho)'
_R3 = 'sqrt(1 - rho^3)/sqrt(1 - rho)'
_R23 = 'sqrt((1 - rho^2)*(1 - rho^3))/(1 - rho)'

DA_FORMULAS_N2: Dict[VertexIndex, str] = {
    (1, 1, 1, 1): '(1 - alpha*beta*x)',
    (1, 2, 1, 2): 'x*sqrt((1 - alpha^2)*(1 - beta^2))',
    (1, 2, 2, 1): '(alpha - beta*x)',
    (2, 1, 1, 2): '(beta - alpha*x)',
    (2, 1, 2, 1): 'sqrt((1 - alpha^2)*(1 - beta^2))',
    (2, 2, 2, 2): '(x - alpha*beta)',
}

DA_FORMULAS_N3: Dict[VertexIndex, str] = {
    (1, 1, 1, 1): '(1 - alpha*beta*x)*(1 - alpha*beta*rho*x)',
    (1, 2, 1, 2): 'x*sqrt((1 - alpha^2)*(1 - beta^2))*(1 - alpha*beta*rho*x)',
    (1, 2, 2, 1): '(alpha - beta*x)*(1 - alpha*beta*rho*x)',
    (1, 3, 1, 3): 'x^2*sqrt((1 - alpha^2)*(1 - alpha^2*rho)*(1 - beta^2)*(1 - beta^2*rho))',
    (1, 3, 2, 2): f'sqrt((1 - alpha^2)*(1 - beta^2*rho))*{_R2}*x*(alpha - beta*x)',
    (1, 3, 3, 1): '(alpha - beta*x)*(alpha - beta*rho*x)',
    (2, 1, 1, 2): '(beta - alpha*x)*(1 - alpha*beta*rho*x)',
    (2, 1, 2, 1): 'sqrt((1 - alpha^2)*(1 - beta^2))*(1 - alpha*beta*rho*x)',
    (2, 2, 1, 3): f'sqrt((1 - alpha^2*rho)*(1 - beta^2))*{_R2}*x*(beta - alpha*x)',
    (2, 2, 2, 2): '(1 - alpha^2)*(1 - beta^2*rho)*x - (beta - alpha*x)*(beta*x - alpha*rho)',
    (2, 2, 3, 1): f'sqrt((1 - alpha^2)*(1 - beta^2*rho))*{_R2}*(alpha - beta*x)',
    (2, 3, 2, 3): 'x*(x - alpha*beta)*sqrt((1 - alpha^2*rho)*(1 - beta^2*rho))',
    (2, 3, 3, 2): '(1 + rho)*(alpha - beta*x)*(x - alpha*beta)',
    (3, 1, 1, 3): '(beta - alpha*x)*(beta - alpha*rho*x)',
    (3, 1, 2, 2): f'sqrt((1 - beta^2)*(1 - alpha^2*rho))*{_R2}*(beta - alpha*x)',
    (3, 1, 3, 1): 'sqrt((1 - alpha^2)*(1 - alpha^2*rho)*(1 - beta^2)*(1 - beta^2*rho))',
    (3, 2, 2, 3): '(1 + rho)*(beta - x*alpha)*(x - alpha*beta)',
    (3, 2, 3, 2): 'sqrt((1 - alpha^2*rho)*(1 - beta^2*rho))*(x - alpha*beta)',
    (3, 3, 3, 3): '(x - alpha*beta)*(x - alpha*beta*rho)',
}

DA_FORMULAS_N4: Dict[VertexIndex, str] = {
    (1, 1, 1, 1): '(1 - alpha*beta*x)*(1 - alpha*beta*rho*x)*(1 - alpha*beta*rho^2*x)',
    (1, 2, 1, 2): 'x*sqrt((1 - alpha^2)*(1 - beta^2))*(1 - alpha*beta*rho*x)*(1 - alpha*beta*rho^2*x)',
    (1, 2, 2, 1): '(alpha - beta*x)*(1 - alpha*beta*rho*x)*(1 - alpha*beta*rho^2*x)',
    (1, 3, 1, 3): 'x^2*sqrt((1 - alpha^2)*(1 - alpha^2*rho)*(1 - beta^2)*(1 - beta^2*rho))*(1 - alpha*beta*rho^2*x)',
    (1, 3, 2, 2): f'sqrt((1 - alpha^2)*(1 - beta^2*rho))*{_R2}*x*(alpha - beta*x)*(1 - alpha*beta*rho^2*x)',
    (1, 3, 3, 1): '(alpha - beta*x)*(alpha - beta*rho*x)*(1 - alpha*beta*rho^2*x)',
    (1, 4, 1, 4): 'x^3*sqrt((1 - alpha^2)*(1 - alpha^2*rho)*(1 - alpha^2*rho^2))'
                  '*sqrt((1 - beta^2)*(1 - beta^2*rho)*(1 - beta^2*rho^2))',
    (1, 4, 2, 3): f'sqrt((1 - alpha^2)*(1 - alpha^2*rho)*(1 - beta^2*rho)*(1 - beta^2*rho^2))*{_R3}'
                  '*x^2*(alpha - beta*x)',
    (1, 4, 3, 2): f'sqrt((1 - alpha^2)*(1 - beta^2*rho^2))*{_R3}*x*(alpha - beta*x)*(alpha - beta*rho*x)',
    (1, 4, 4, 1): '(alpha - beta*x)*(alpha - beta*rho*x)*(alpha - beta*rho^2*x)',
    (2, 1, 1, 2): '(beta - alpha*x)*(1 - alpha*beta*rho*x)*(1 - alpha*beta*rho^2*x)',
    (2, 1, 2, 1): 'sqrt((1 - alpha^2)*(1 - beta^2))*(1 - alpha*beta*rho*x)*(1 - alpha*beta*rho^2*x)',
    (2, 2, 1, 3): f'sqrt((1 - alpha^2*rho)*(1 - beta^2))*{_R2}*x*(beta - alpha*x)*(1 - alpha*beta*rho^2*x)',
    (2, 2, 2, 2): '((1 - alpha^2)*(1 - beta^2*rho)*x - (beta - alpha*x)*(beta*x - alpha*rho))'
                  '*(1 - alpha*beta*rho^2*x)',
    (2, 2, 3, 1): f'sqrt((1 - alpha^2)*(1 - beta^2*rho))*{_R2}*(alpha - beta*x)*(1 - alpha*beta*rho^2*x)',
    (2, 3, 1, 4): f'sqrt((1 - alpha^2*rho)*(1 - alpha^2*rho^2)*(1 - beta^2)*(1 - beta^2*rho))*{_R3}'
                  '*x^2*(beta - alpha*x)',
    (2, 3, 2, 3): 'sqrt((1 - alpha^2*rho)*(1 - beta^2*rho))'
                  '*((1 - beta^2)*(1 - alpha^2*rho^2)*x^2 - (1 + rho)*x*(alpha*x - beta*rho)*(alpha - beta*x))',
    (2, 3, 3, 2): '(alpha - beta*x)*((1 - alpha^2*beta^2)*(1 - rho^3)*x - rho*(alpha*x - beta*rho)*(alpha - beta*x))',
    (2, 3, 4, 1): f'{_R3}*sqrt((1 - alpha^2)*(1 - beta^2*rho^2))*(alpha - beta*x)*(alpha - beta*rho*x)',
    (2, 4, 2, 4): 'x^2*sqrt(1 - alpha^2*rho)*sqrt((1 - alpha^2*rho^2)*(1 - beta^2*rho)*(1 - beta^2*rho^2))'
                  '*(x - alpha*beta)',
    (2, 4, 3, 3): f'x*{_R23}*sqrt((1 - alpha^2*rho)*(1 - beta^2*rho^2))*(x - alpha*beta)*(alpha - beta*x)',
    (2, 4, 4, 2): '(1 - rho^3)*(x - alpha*beta)*(alpha - beta*x)*(alpha - beta*rho*x)/(1 - rho)',
    (3, 1, 1, 3): '(beta - alpha*x)*(beta - alpha*rho*x)*(1 - alpha*beta*rho^2*x)',
    (3, 1, 2, 2): f'sqrt((1 - beta^2)*(1 - alpha^2*rho))*{_R2}*(beta - alpha*x)*(1 - alpha*beta*rho^2*x)',
    (3, 1, 3, 1): 'sqrt((1 - alpha^2)*(1 - alpha^2*rho)*(1 - beta^2)*(1 - beta^2*rho))*(1 - alpha*beta*rho^2*x)',
    (3, 2, 1, 4): f'sqrt((1 - alpha^2*rho^2)*(1 - beta^2))*{_R3}*x*(beta - alpha*x)*(beta - alpha*rho*x)',
    (3, 2, 2, 3): '(beta - alpha*x)*((1 - alpha^2*beta^2)*(1 - rho^3)*x - rho*(beta - alpha*x)*(beta*x - alpha*rho))',
    (3, 2, 3, 2): 'sqrt((1 - alpha^2*rho)*(1 - beta^2*rho))'
                  '*((1 - alpha^2)*(1 - beta^2*rho^2)*x - (1 + rho)*(beta - alpha*x)*(beta*x - alpha*rho))',
    (3, 2, 4, 1): f'sqrt((1 - alpha^2)*(1 - alpha^2*rho)*(1 - beta^2*rho)*(1 - beta^2*rho^2))*{_R3}'
                  '*(alpha - beta*x)',
    (3, 3, 2, 4): f'x*{_R23}*sqrt((1 - alpha^2*rho^2)*(1 - beta^2*rho))*(x - alpha*beta)*(beta - alpha*x)',
    (3, 3, 3, 3): '((1 - alpha^2*rho)*(1 - beta^2*rho^2)*x - (1 + rho + rho^2)*(beta - alpha*x)*(beta*x - alpha*rho))'
                  '*(x - alpha*beta)',
    (3, 3, 4, 2): f'sqrt((1 - alpha^2*rho)*(1 - beta^2*rho^2))*{_R23}*(x - alpha*beta)*(alpha - beta*x)',
    (3, 4, 3, 4): 'x*sqrt(1 - alpha^2*rho^2)*sqrt(1 - beta^2*rho^2)*(x - alpha*beta)*(x - alpha*beta*rho)',
    (3, 4, 4, 3): '(1 - rho^3)/(1 - rho)*(x - alpha*beta)*(x - alpha*beta*rho)*(alpha - beta*x)',
    (4, 1, 1, 4): '(beta - alpha*x)*(beta - alpha*rho*x)*(beta - alpha*rho^2*x)',
    (4, 1, 2, 3): f'sqrt((1 - alpha^2*rho^2)*(1 - beta^2))*{_R3}*(beta - alpha*x)*(beta - alpha*rho*x)',
    (4, 1, 3, 2): f'sqrt((1 - alpha^2*rho)*(1 - alpha^2*rho^2)*(1 - beta^2)*(1 - beta^2*rho))*{_R3}'
                  '*(beta - alpha*x)',
    (4, 1, 4, 1): 'sqrt((1 - alpha^2)*(1 - alpha^2*rho)*(1 - alpha^2*rho^2))'
                  '*sqrt((1 - beta^2)*(1 - beta^2*rho)*(1 - beta^2*rho^2))',
    (4, 2, 2, 4): '(1 - rho^3)/(1 - rho)*(x - alpha*beta)*(beta - alpha*x)*(beta - alpha*rho*x)',
    (4, 2, 3, 3): f'sqrt((1 - alpha^2*rho^2)*(1 - beta^2*rho))*{_R23}*(x - alpha*beta)*(beta - alpha*x)',
    (4, 2, 4, 2): 'sqrt((1 - alpha^2*rho)*(1 - alpha^2*rho^2)*(1 - beta^2*rho)*(1 - beta^2*rho^2))*(x - alpha*beta)',
    (4, 3, 3, 4): '(1 - rho^3)/(1 - rho)*(x - alpha*beta)*(x - alpha*beta*rho)*(beta - alpha*x)',
    (4, 3, 4, 3): 'sqrt((1 - alpha^2*rho^2)*(1 - beta^2*rho^2))*(x - alpha*beta)*(x - alpha*beta*rho)',
    (4, 4, 4, 4): '(x - alpha*beta)*(x - alpha*beta*rho)*(x - alpha*beta*rho^2)',
}

DA_FORMULAS = {
    2: DA_FORMULAS_N2,
    3: DA_FORMULAS_N3,
    4: DA_FORMULAS_N4,
}


def builtin_formulas(N: int) -> Dict[VertexIndex, str]:
    if N not in DA_FORMULAS:
        raise IndexRangeError(f'No built-in table for this number of states [N={N}]')
    return dict(DA_FORMULAS[N])


def to_plugin_document(N: int, n: int = 1) -> dict:
    """
    Exports a built-in table in the plugin file format.
    :param N: The number of states (2, 3 or 4).
    :param n: The exponent of the root of unity.
    :return: A JSON-compatible dictionary {N, n, entries}.
    """
    entries = [{'iota1': idx[0], 'iota2': idx[1], 'kappa2': idx[2], 'kappa1': idx[3], 'formula': formula}
               for idx, formula in sorted(builtin_formulas(N).items())]
    return {'N': N, 'n': n, 'entries': entries}
