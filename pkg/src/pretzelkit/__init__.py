"""Exact concordance invariants and squeezedness of 3-strand pretzel knots."""

from .errors import NotAKnot, MagnitudeError, PretzelError
from .pretzel import PretzelParams, CanonicalForm, canonicalize, determinant, is_knot
from .signature import signature, signature_corollary
from .goeritz import signature_oracle
from .rasmussen import s_invariant
from .qm import QmResult, qm, g4_lower_bound
from .squeeze import SqueezeVerdict, classify
from .report import InvariantReport, build_report

__all__ = [
    "CanonicalForm", "InvariantReport", "MagnitudeError", "NotAKnot", "PretzelError",
    "PretzelParams", "QmResult", "SqueezeVerdict", "build_report", "canonicalize",
    "classify", "determinant", "g4_lower_bound", "is_knot", "qm", "s_invariant",
    "signature", "signature_corollary", "signature_oracle",
]
