"""Exact symbolic engine for Hopf algebras given by presentation, with
cyclic-cohomology coefficient machinery over finite instances."""

__version__ = "0.1.0"

from .core import AlgElt, Generator, TensorElt, tensor
from .errors import (
    HopfcycError,
    ParseError,
    PreconditionError,
    RewriteLimitError,
    SemanticError,
    StructureError,
    TerminationOrderError,
    UnsolvableError,
)
from .hopf import Character, GroupLike, HopfPresentation
from .rewrite import ConcreteRule, Presentation, RuleSet, SchemaRule

__all__ = [
    "AlgElt",
    "Character",
    "ConcreteRule",
    "Generator",
    "GroupLike",
    "HopfPresentation",
    "HopfcycError",
    "ParseError",
    "PreconditionError",
    "Presentation",
    "RewriteLimitError",
    "RuleSet",
    "SchemaRule",
    "SemanticError",
    "StructureError",
    "TensorElt",
    "TerminationOrderError",
    "UnsolvableError",
    "tensor",
    "__version__",
]
