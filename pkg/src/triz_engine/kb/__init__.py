"""Fixed TRIZ knowledge base: parameters, principles, contradiction matrix."""

from .loader import (
    ValidationReport,
    default_bundle_path,
    load_knowledge_base,
    save_knowledge_base,
    validate_knowledge_base,
)
from .models import (
    N_PARAMETERS,
    N_PRINCIPLES,
    Contradiction,
    ContradictionMatrix,
    EngineeringParameter,
    InventivePrinciple,
    KnowledgeBase,
    lookup_principles,
)

__all__ = [
    "N_PARAMETERS",
    "N_PRINCIPLES",
    "Contradiction",
    "ContradictionMatrix",
    "EngineeringParameter",
    "InventivePrinciple",
    "KnowledgeBase",
    "ValidationReport",
    "default_bundle_path",
    "load_knowledge_base",
    "lookup_principles",
    "save_knowledge_base",
    "validate_knowledge_base",
]
