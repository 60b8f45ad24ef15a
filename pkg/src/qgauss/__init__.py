"""Exact q-deformed Gaussian integers and the q-deformed Picard group."""

from .errors import (
    DecompositionError,
    IndeterminateError,
    ParseError,
    PoleError,
    QGaussError,
    UnsupportedOperation,
)
from .field import GaussRat, RatFunc, SPoly
from .moebius import (
    INFINITY,
    MoebiusOp,
    fixed_points,
    generator,
    op_apply,
    op_compose,
    op_inverse,
    op_pow,
    tq_commutant,
    unique_imaginary_translation,
)
from .qnum import (
    Q_param,
    QPoly,
    check_conjugation,
    decompose,
    euler_q_int,
    q_gaussian_closed,
    q_gaussian_orbit,
    q_rational,
    q_rep,
)
from .render import parse_plain

__version__ = "0.1.0"

__all__ = [
    "GaussRat", "SPoly", "RatFunc", "MoebiusOp", "INFINITY", "QPoly",
    "op_apply", "op_compose", "op_inverse", "op_pow", "generator", "fixed_points",
    "tq_commutant", "unique_imaginary_translation",
    "euler_q_int", "q_rational", "q_gaussian_orbit", "q_gaussian_closed", "Q_param",
    "q_rep", "decompose", "check_conjugation", "parse_plain",
    "QGaussError", "PoleError", "DecompositionError", "UnsupportedOperation",
    "IndeterminateError", "ParseError",
]
