"""Evaluation settings and their fingerprint.

A single :class:`EvalConfig` governs one report run. Every score the package
produces carries the :class:`SettingsFingerprint` of the config it was
computed under, so scores obtained under different settings can be told apart.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Any, Mapping, Optional

# ISO 639-1, two-letter codes.
ISO_639_1 = frozenset(
    """
    aa ab ae af ak am an ar as av ay az ba be bg bh bi bm bn bo br bs ca ce ch
    co cr cs cu cv cy da de dv dz ee el en eo es et eu fa ff fi fj fo fr fy ga
    gd gl gn gu gv ha he hi ho hr ht hu hy hz ia id ie ig ii ik io is it iu ja
    jv ka kg ki kj kk kl km kn ko kr ks ku kv kw ky la lb lg li ln lo lt lu lv
    mg mh mi mk ml mn mr ms mt my na nb nd ne ng nl nn no nr nv ny oc oj om or
    os pa pi pl ps pt qu rm rn ro ru rw sa sc sd se sg si sk sl sm sn so sq sr
    ss st su sv sw ta te tg th ti tk tl tn to tr ts tt tw ty ug uk ur uz ve vi
    vo wa wo xh yi yo za zh zu
    """.split()
)


class ConfigError(ValueError):
    """Invalid evaluation settings."""


class UnknownLanguage(ConfigError):
    pass


class UnknownTokenizer(ConfigError):
    pass


class UnknownReadabilityVariant(ConfigError):
    pass


class MissingEmbeddingModel(ConfigError):
    pass


class Tokenizer(str, enum.Enum):
    NONE = "none"
    MTEVAL_13A = "13a"
    LANG_RULES = "lang-rules"


class ReadabilityVariant(str, enum.Enum):
    AUTO = "auto"
    FORCE_EN = "force-en"
    FORCE_DE = "force-de"


_VARIANT_ALIASES = {"auto-by-language": ReadabilityVariant.AUTO}
_BOOL_WORDS = {"true": True, "false": False}


def _parse_tokenizer(value: Any) -> Tokenizer:
    if isinstance(value, Tokenizer):
        return value
    try:
        return Tokenizer(str(value))
    except ValueError:
        names = ", ".join(t.value for t in Tokenizer)
        raise UnknownTokenizer(f"unknown tokenizer {value!r} (expected one of: {names})") from None


def _parse_variant(value: Any) -> ReadabilityVariant:
    if isinstance(value, ReadabilityVariant):
        return value
    value = str(value)
    if value in _VARIANT_ALIASES:
        return _VARIANT_ALIASES[value]
    try:
        return ReadabilityVariant(value)
    except ValueError:
        names = ", ".join(v.value for v in ReadabilityVariant)
        raise UnknownReadabilityVariant(
            f"unknown readability variant {value!r} (expected one of: {names})"
        ) from None


def _parse_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.lower() in _BOOL_WORDS:
        return _BOOL_WORDS[value.lower()]
    raise ConfigError(f"expected a boolean, got {value!r}")


@dataclass(frozen=True)
class EvalConfig:
    """Complete record of the settings a score depends on.

    ``embedding_model_id`` is ``None`` when no embedding provider is used.
    """

    language: str
    tokenizer: Tokenizer = Tokenizer.LANG_RULES
    lowercase: bool = False
    embedding_model_id: Optional[str] = None
    readability_variant: ReadabilityVariant = ReadabilityVariant.AUTO

    def __post_init__(self) -> None:
        if not isinstance(self.language, str) or self.language not in ISO_639_1:
            raise UnknownLanguage(f"unknown language code {self.language!r}")
        object.__setattr__(self, "tokenizer", _parse_tokenizer(self.tokenizer))
        object.__setattr__(self, "readability_variant", _parse_variant(self.readability_variant))
        if not isinstance(self.lowercase, bool):
            raise ConfigError(f"lowercase must be a boolean, got {self.lowercase!r}")
        if self.embedding_model_id is not None:
            if not isinstance(self.embedding_model_id, str) or not self.embedding_model_id:
                raise MissingEmbeddingModel("embedding_model_id must be a non-empty string")
            if ";" in self.embedding_model_id:
                raise ConfigError("embedding_model_id must not contain ';'")
            if self.embedding_model_id == "none":
                raise ConfigError('"none" is reserved for configs without an embedding model')

    @property
    def readability_language(self) -> str:
        """Language whose readability formulas apply (may be unsupported)."""
        if self.readability_variant is ReadabilityVariant.FORCE_EN:
            return "en"
        if self.readability_variant is ReadabilityVariant.FORCE_DE:
            return "de"
        return self.language

    def replace(self, **changes: Any) -> "EvalConfig":
        fields = self.to_dict()
        fields.update(changes)
        return EvalConfig(**fields)

    def to_dict(self) -> dict[str, Any]:
        return {
            "language": self.language,
            "tokenizer": self.tokenizer.value,
            "lowercase": self.lowercase,
            "embedding_model_id": self.embedding_model_id,
            "readability_variant": self.readability_variant.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, document: str) -> "EvalConfig":
        raw = json.loads(document)
        if not isinstance(raw, dict):
            raise ConfigError("config document must be a JSON object")
        return validate_config(raw)


_FIELDS = ("language", "tokenizer", "lowercase", "embedding_model_id", "readability_variant")


def validate_config(raw: Mapping[str, Any], *, embeddings_requested: bool = False) -> EvalConfig:
    """Build an :class:`EvalConfig` from a key-value map, applying defaults.

    ``lang`` is accepted as a short alias for ``language``.
    """
    raw = dict(raw)
    if "lang" in raw:
        if "language" in raw:
            raise ConfigError("both 'lang' and 'language' given")
        raw["language"] = raw.pop("lang")
    unknown = sorted(set(raw) - set(_FIELDS))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    if "language" not in raw:
        raise UnknownLanguage("language is required")

    model_id = raw.get("embedding_model_id")
    if model_id == "" or (embeddings_requested and not model_id):
        raise MissingEmbeddingModel("an embedding model id is required for embedding metrics")

    return EvalConfig(
        language=raw["language"],
        tokenizer=_parse_tokenizer(raw.get("tokenizer", Tokenizer.LANG_RULES)),
        lowercase=_parse_bool(raw.get("lowercase", False)),
        embedding_model_id=model_id,
        readability_variant=_parse_variant(raw.get("readability_variant", ReadabilityVariant.AUTO)),
    )


@dataclass(frozen=True)
class SettingsFingerprint:
    human_readable: str
    digest: str

    def __str__(self) -> str:
        return f"{self.human_readable} [{self.digest}]"


_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a_64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def serialize_config(config: EvalConfig) -> str:
    """Canonical ``key=value`` serialization, fixed field order."""
    parts = [
        ("lang", config.language),
        ("tok", config.tokenizer.value),
        ("lc", "true" if config.lowercase else "false"),
        ("emb", config.embedding_model_id or "none"),
        ("read", config.readability_variant.value),
    ]
    return ";".join(f"{key}={value}" for key, value in parts)


def parse_config_string(text: str) -> EvalConfig:
    """Inverse of :func:`serialize_config`."""
    keys = {"lang": "language", "tok": "tokenizer", "lc": "lowercase",
            "emb": "embedding_model_id", "read": "readability_variant"}
    raw: dict[str, Any] = {}
    for part in text.split(";"):
        key, sep, value = part.partition("=")
        if not sep or key not in keys:
            raise ConfigError(f"malformed settings string segment {part!r}")
        raw[keys[key]] = value
    if raw.get("embedding_model_id") == "none":
        raw["embedding_model_id"] = None
    return validate_config(raw)


def build_settings_fingerprint(config: EvalConfig) -> SettingsFingerprint:
    text = serialize_config(config)
    return SettingsFingerprint(text, f"{fnv1a_64(text.encode('utf-8')):016x}")
