"""Exact rational linear algebra on top of sympy."""
import logging
from fractions import Fraction

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

NEGATIVE_INFINITY = ("-inf", "-infinity", "bottom", "-oo")


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in NEGATIVE_INFINITY:
            raise ValueError(f"{value!r} is not a finite rational")
        try:
            return Fraction(text)
        except ValueError:
            raise ValueError(f"not a rational number: {value!r}") from None
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"not a finite rational: {value!r}")
        return Fraction(value)
    raise ValueError(f"not a rational number: {value!r}")


def format_fraction(value):
    value = to_fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def format_signed(value):
    value = to_fraction(value)
    return ("-" if value < 0 else "+") + format_fraction(abs(value))


def _to_sympy(value):
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def matrix(rows):
    return sympy.Matrix([[_to_sympy(x) for x in row] for row in rows])


def rank(rows):
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
        return 0
    return DomainMatrix.from_Matrix(matrix(rows)).convert_to(QQ).rank()


def determinant(rows):
    rows = [list(row) for row in rows]
    if not rows:
        return Fraction(1)
    return to_fraction(matrix(rows).det(method="bareiss"))


def nullspace(rows):
    """Basis of ``{x : rows x = 0}`` as lists of fractions."""
    return [[to_fraction(x) for x in vector] for vector in matrix(rows).nullspace()]


def solve(rows, rhs):
    solution = matrix(rows).LUsolve(sympy.Matrix([_to_sympy(x) for x in rhs]))
    return [to_fraction(x) for x in solution]


def inverse(rows):
    inverted = matrix(rows).inv()
    return [[to_fraction(x) for x in inverted.row(r)] for r in range(inverted.rows)]


def mat_vec(rows, vector):
    return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in rows]
