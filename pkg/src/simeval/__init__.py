"""Language-parameterized evaluation of sentence simplification outputs."""
from .core import (
    ConfigError,
    EvalConfig,
    ReadabilityVariant,
    SettingsFingerprint,
    Tokenizer,
    UnknownLanguage,
    UnknownTokenizer,
    build_settings_fingerprint,
    validate_config,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "EvalConfig",
    "ReadabilityVariant",
    "SettingsFingerprint",
    "Tokenizer",
    "UnknownLanguage",
    "UnknownTokenizer",
    "build_settings_fingerprint",
    "validate_config",
]
