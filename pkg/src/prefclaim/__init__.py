"""Claim-augmented argumentation frameworks with preferences.

Arguments carry claims, preferences between arguments are folded into the
attack relation by one of four reductions, and questions are asked about
the resulting claim-level extensions.
"""

from .af import ArgFramework, Semantics, attacked_set, defends, extensions, is_extension
from .caf import ClaimFramework, claim_extensions, is_well_formed, wf_problematic
from .classify import ImageClass, in_image, preimage_search, transitive_preimage_r1
from .enumeration import TaskResult, credulous, enumerate_claim_extensions, enumerate_task, skeptical
from .errors import (
    MalformedInputError,
    ParseError,
    PrefClaimError,
    PreconditionError,
    ResourceLimitError,
    SearchBudgetExceeded,
    UnsupportedReductionError,
)
from .pcaf import PrefFramework, Reduction, pref_extensions, reduce, transitive_closure, validate
from .propcheck import CatalogEntry, catalog, check_imaximality, falsify_imaximality, random_pcaf
from .realize import RealizationTrace, Verifier, realization, verify

__version__ = "0.1.0"

__all__ = [
    "ArgFramework", "Semantics", "attacked_set", "defends", "extensions", "is_extension",
    "ClaimFramework", "claim_extensions", "is_well_formed", "wf_problematic",
    "ImageClass", "in_image", "preimage_search", "transitive_preimage_r1",
    "TaskResult", "credulous", "enumerate_claim_extensions", "enumerate_task", "skeptical",
    "MalformedInputError", "ParseError", "PrefClaimError", "PreconditionError", "ResourceLimitError",
    "SearchBudgetExceeded", "UnsupportedReductionError",
    "PrefFramework", "Reduction", "pref_extensions", "reduce", "transitive_closure", "validate",
    "CatalogEntry", "catalog", "check_imaximality", "falsify_imaximality", "random_pcaf",
    "RealizationTrace", "Verifier", "realization", "verify",
]
