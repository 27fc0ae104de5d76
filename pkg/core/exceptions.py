"""
Multi-Dirac Engine: Custom Exceptions
Hierarchical exception system for clean error handling.

Two families map onto CLI exit codes:
    StructuralError       → exit 2 (bad shapes, degrees, charts, parse errors)
    UnsupportedInputError → exit 3 (valid input outside what an operation handles)

Identity failures are never exceptions; they are reported as data.
"""

from __future__ import annotations

from typing import Iterable


class MdxError(Exception):
    """Base exception for all engine errors."""
    pass


# ---------------------------------------------------------------------------
# Structural errors
# ---------------------------------------------------------------------------

class StructuralError(MdxError):
    """Inputs that do not fit together (chart, degree, context...)."""
    pass


class ConfigError(StructuralError):
    """Configuration loading or validation error."""
    pass


class DimensionMismatchError(StructuralError):
    """Polynomials over different numbers of variables."""
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Dimension mismatch: {left} variables vs {right} variables")


class IndexOutOfRangeError(StructuralError):
    """Variable index outside the chart."""
    def __init__(self, index: int, dimension: int):
        self.index = index
        self.dimension = dimension
        super().__init__(f"Variable index {index} out of range for dimension {dimension}")


class ChartMismatchError(StructuralError):
    """Operands live on different charts."""
    def __init__(self, left: object, right: object):
        self.left = left
        self.right = right
        super().__init__(f"Chart mismatch: {left} vs {right}")


class KindMismatchError(StructuralError):
    """A multivector was combined with a form where the same kind is required."""
    def __init__(self, left: str, right: str):
        self.left = left
        self.right = right
        super().__init__(f"Kind mismatch: {left} vs {right}")


class DegreeError(StructuralError):
    """A degree is out of range or does not match what an operation requires."""
    def __init__(self, message: str, degree: int | None = None):
        self.degree = degree
        super().__init__(message)


class ContextMismatchError(StructuralError):
    """Graded pairs from different (chart, n) contexts."""
    pass


class ParentMismatchError(StructuralError):
    """Admissible forms or sections attached to different multi-Dirac structures."""
    pass


class IsotropyError(StructuralError):
    """Generators of a spanned structure fail to be mutually isotropic."""
    def __init__(self, first: int, second: int, defect: str):
        self.first = first
        self.second = second
        self.defect = defect
        super().__init__(f"Generators {first} and {second} are not isotropic: defect {defect}")


class NotAdmissibleError(StructuralError):
    """A witness does not satisfy i_Γ Ω = dΣ."""
    def __init__(self, defect: str):
        self.defect = defect
        super().__init__(f"Form is not admissible with this witness: defect {defect}")


class NoSolutionError(StructuralError):
    """No Hamiltonian multivector exists for a form."""
    def __init__(self, form: str):
        self.form = form
        super().__init__(f"No Hamiltonian multivector field exists for {form}")


class GeneratorError(StructuralError):
    """A random-object request cannot be satisfied."""
    pass


class UnknownSuiteError(StructuralError):
    """Suite id not in the registry."""
    def __init__(self, name: str, known: Iterable[str] = ()):
        self.name = name
        known = sorted(known)
        super().__init__(f"Unknown suite: {name}" + (f" (known: {', '.join(known)})" if known else ""))


# ---------------------------------------------------------------------------
# Script errors
# ---------------------------------------------------------------------------

class ParseError(StructuralError):
    """Lexical or syntax error, with position and the expected-token set."""
    def __init__(self, message: str, line: int, column: int, expected: Iterable[str] = ()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(text)


class EvaluationError(StructuralError):
    """Runtime error in a script: unbound name, bad operand types."""
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}" if line else message)


# ---------------------------------------------------------------------------
# Unsupported input
# ---------------------------------------------------------------------------

class UnsupportedInputError(MdxError):
    """Well-formed input outside what an operation supports (e.g. non-constant Ω for the solver)."""
    pass
