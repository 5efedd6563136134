import logging
import re
from functools import lru_cache
from tokenize import TokenError
from typing import Callable

import numpy as np
import sympy as sp
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, convert_xor

from vertex_dwpf.exceptions import PluginFormatError
from vertex_dwpf.model.numerics import principal_sqrt

logger = logging.getLogger(__name__)

ALPHA, BETA, X, RHO = sp.symbols('alpha beta x rho')

# radicals, evaluated with numerics.principal_sqrt
PRINCIPAL_SQRT = sp.Function('principal_sqrt')

_LOCALS = {
    'alpha': ALPHA,
    'beta': BETA,
    'x': X,
    'rho': RHO,
    'sqrt': sp.sqrt,
}

_GLOBALS = {
    'Integer': sp.Integer,
    'Float': sp.Float,
    'Rational': sp.Rational,
    'Symbol': sp.Symbol,
}

_TOKEN = re.compile(r'\s*(?:(?P<name>[A-Za-z_]\w*)|(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|'
                    r'(?P<op>[-+*/^()]))')

FormulaFunction = Callable[[np.ndarray, np.ndarray, np.ndarray, complex], np.ndarray]


class FormulaCompiler:
    """
    Compiles weight formulas written in the plugin expression language: symbols alpha, beta, x and rho,
    numbers, the operators + - * / ^, parentheses and sqrt(). Compiled formulas are numpy functions of
    (alpha, beta, x, rho) evaluated with complex arithmetic.
    """

    def parse(self, formula: str) -> sp.Expr:
        """
        Parses and validates a formula.
        :param formula: The formula text.
        :return: The sympy expression.
        """
        if formula is None or not isinstance(formula, str) or formula.strip() == '':
            raise PluginFormatError(f'Empty formula [formula={formula!r}]')

        self._check_tokens(formula)

        try:
            expression = parse_expr(formula, local_dict=dict(_LOCALS), global_dict=dict(_GLOBALS),
                                    transformations=standard_transformations + (convert_xor,))
        except (SyntaxError, TokenError, TypeError, ValueError) as e:
            raise PluginFormatError(f'Could not parse formula [formula={formula!r}, error={e}]') from e

        expression = sp.sympify(expression)
        self._check_expression(formula, expression)
        return expression

    def compile(self, formula: str) -> FormulaFunction:
        return _compile_cached(self, formula)

    def _lambdify(self, formula: str) -> FormulaFunction:
        expression = self._principal_roots(self.parse(formula))
        function = sp.lambdify((ALPHA, BETA, X, RHO), expression,
                               modules=[{'principal_sqrt': principal_sqrt}, 'numpy'])

        def evaluate(alpha, beta, x, rho):
            alpha = np.asarray(alpha, dtype=complex)
            beta = np.asarray(beta, dtype=complex)
            x = np.asarray(x, dtype=complex)
            shape = np.broadcast(alpha, beta, x).shape
            value = np.asarray(function(alpha, beta, x, complex(rho)), dtype=complex)
            return np.array(np.broadcast_to(value, shape))

        return evaluate

    def _principal_roots(self, expression: sp.Expr) -> sp.Expr:
        """
        Rewrites b^(p/2) as principal_sqrt(b)^p.
        """
        return expression.replace(lambda e: e.is_Pow and e.exp.is_Rational and e.exp.q == 2,
                                  lambda e: PRINCIPAL_SQRT(e.base) ** e.exp.p)

    def _check_tokens(self, formula: str) -> None:
        position = 0
        stripped = formula.rstrip()
        while position < len(stripped):
            match = _TOKEN.match(stripped, position)
            if match is None:
                raise PluginFormatError(f'Unexpected character in formula [formula={formula!r}, '
                                        f'position={position}]')
            name = match.group('name')
            if name is not None and name not in _LOCALS:
                raise PluginFormatError(f'Unknown symbol in formula [symbol={name}, formula={formula!r}]')
            position = match.end()

    def _check_expression(self, formula: str, expression: sp.Expr) -> None:
        if not isinstance(expression, sp.Expr):
            raise PluginFormatError(f'Formula is not an arithmetic expression [formula={formula!r}]')

        if not expression.free_symbols.issubset({ALPHA, BETA, X, RHO}):
            raise PluginFormatError(f'Unknown symbols in formula [symbols={expression.free_symbols}, '
                                    f'formula={formula!r}]')

        if expression.has(sp.zoo, sp.oo, -sp.oo, sp.nan):
            raise PluginFormatError(f'Formula is not finite [formula={formula!r}]')

        if expression.atoms(sp.Function):
            raise PluginFormatError(f'Function calls other than sqrt are not allowed [formula={formula!r}]')

        for power in expression.atoms(sp.Pow):
            exponent = power.exp
            if not (exponent.is_Integer or (exponent.is_Rational and exponent.q == 2)):
                raise PluginFormatError(f'Exponents must be integers or square roots [exponent={exponent}, '
                                        f'formula={formula!r}]')


@lru_cache(maxsize=None)
def _compile_cached(compiler: FormulaCompiler, formula: str) -> FormulaFunction:
    logger.debug(f'Compiling formula [{formula}]')
    return compiler._lambdify(formula)


DEFAULT_COMPILER = FormulaCompiler()
