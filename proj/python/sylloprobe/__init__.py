"""Categorical-syllogism NLI probe toolkit."""

from ._core import (
    CATALOG_VERSION,
    CHANCE_ACCURACY,
    DegeneratePattern,
    DuplicatePredictionId,
    EmptyIntersection,
    IoError,
    LexiconError,
    LexiconTooSmall,
    SchemaError,
    SylloprobeError,
    UnknownLabelString,
    UnparsableStatement,
    catalog,
    classify_bruteforce,
    classify_mood,
    evaluate,
    features,
    generate,
    label,
    list_valid_moods,
    parse,
    realize,
    render,
    simulate,
    validate,
)

LABELS = ("entailment", "contradiction", "neutral")

__all__ = [name for name in dir() if not name.startswith("_")]
