"""Higman groups A(f, q0), their Cayley graphs Gamma_u, and a computational
check that Aut(Gamma_u) = A(f, q0) acts on the vertices as a Frobenius group."""

__version__ = "0.1.0"

from .errors import PreconditionError, ResourceLimitError  # noqa: E402
from .gf2m import FieldCtx, field_new  # noqa: E402
from .higman import INF, HigmanCtx, PhiElt, PsiElt, ghk_property_suite  # noqa: E402
