from __future__ import annotations

import functools
import hashlib
import json
import logging
import threading
import time
import urllib.error
import urllib.request
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .types import (
    MalformedEmbeddings,
    ModelMismatch,
    ProtocolViolation,
    ProviderError,
    TokenEmbeddings,
    UnknownSentence,
)

log = logging.getLogger(__name__)

STUB_DIM = 16


def char_trigrams(text: str) -> list[str]:
    if len(text) < 3:
        return [text] if text else []
    return [text[i:i + 3] for i in range(len(text) - 2)]


class StubProvider:
    """Deterministic test double: character trigrams with seeded random unit vectors.

    A token's vector depends only on ``(seed, token)``, through a BLAKE2b
    digest seeding numpy's PCG64 generator, so it is identical on every run
    and platform.
    """

    max_parallelism = 1

    def __init__(self, seed: int = 0):
        self.seed = int(seed)
        self.model_id = f"stub-{self.seed}"

    @functools.lru_cache(maxsize=65536)
    def token_vector(self, token: str) -> np.ndarray:
        digest = hashlib.blake2b(f"{self.seed}\x00{token}".encode("utf-8"), digest_size=8).digest()
        rng = np.random.Generator(np.random.PCG64(int.from_bytes(digest, "little")))
        vec = rng.standard_normal(STUB_DIM)
        return vec / np.linalg.norm(vec)

    def embed(self, text: str) -> TokenEmbeddings:
        tokens = char_trigrams(text)
        vectors = np.array([self.token_vector(t) for t in tokens]).reshape(len(tokens), STUB_DIM)
        return TokenEmbeddings(tuple(tokens), vectors)


def stub_provider(seed: int = 0) -> StubProvider:
    return StubProvider(seed)


# --- embedding files -------------------------------------------------------

def embedding_record(text: str, model_id: str, emb: TokenEmbeddings) -> dict:
    return {
        "text": text,
        "model_id": model_id,
        "tokens": list(emb.tokens),
        "vectors": emb.vectors.tolist(),
    }


def write_embedding_file(
    path: Union[str, Path],
    records: Iterable[tuple[str, str, TokenEmbeddings]],
) -> None:
    """Write ``(text, model_id, embeddings)`` records as JSON lines.

    Floats are written with Python's shortest round-trip repr, so reading the
    file back reproduces the vectors bit for bit.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for text, model_id, emb in records:
            f.write(json.dumps(embedding_record(text, model_id, emb), ensure_ascii=False))
            f.write("\n")


def _parse_record(line: str, lineno: int) -> tuple[str, str, TokenEmbeddings]:
    try:
        rec = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedEmbeddings(f"line {lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(rec, dict):
        raise MalformedEmbeddings(f"line {lineno}: record must be an object")
    missing = {"text", "model_id", "tokens", "vectors"} - set(rec)
    if missing:
        raise MalformedEmbeddings(f"line {lineno}: missing keys {sorted(missing)}")
    text, model_id, tokens, vectors = rec["text"], rec["model_id"], rec["tokens"], rec["vectors"]
    if not isinstance(text, str) or not isinstance(model_id, str):
        raise MalformedEmbeddings(f"line {lineno}: text and model_id must be strings")
    if not isinstance(tokens, list) or not all(isinstance(t, str) for t in tokens):
        raise MalformedEmbeddings(f"line {lineno}: tokens must be a list of strings")
    if not isinstance(vectors, list) or not all(isinstance(v, list) for v in vectors):
        raise MalformedEmbeddings(f"line {lineno}: vectors must be a list of lists")
    try:
        emb = TokenEmbeddings.from_lists(tokens, vectors)
    except (MalformedEmbeddings, ValueError, TypeError) as exc:
        raise MalformedEmbeddings(f"line {lineno}: {exc}") from None
    return text, model_id, emb


class FileProvider:
    """Serves precomputed embeddings from a JSON-lines file."""

    max_parallelism = 8

    def __init__(self, path: Union[str, Path], model_id: Optional[str] = None):
        self.path = Path(path)
        try:
            lines = self.path.read_text(encoding="utf-8").splitlines()
        except FileNotFoundError:
            raise ProviderError(f"embedding file not found: {self.path}") from None
        self._table: dict[str, TokenEmbeddings] = {}
        model_ids = set()
        for lineno, line in enumerate(lines, 1):
            if not line.strip():
                continue
            text, rec_model, emb = _parse_record(line, lineno)
            model_ids.add(rec_model)
            self._table[text] = emb
        if len(model_ids) > 1:
            raise MalformedEmbeddings(f"{self.path}: records from several models {sorted(model_ids)}")
        file_model = model_ids.pop() if model_ids else None
        if model_id is not None and file_model is not None and model_id != file_model:
            raise ModelMismatch(f"{self.path} holds {file_model!r}, expected {model_id!r}")
        self.model_id = model_id or file_model or f"file:{self.path.name}"

    def __len__(self) -> int:
        return len(self._table)

    def embed(self, text: str) -> TokenEmbeddings:
        try:
            return self._table[text]
        except KeyError:
            raise UnknownSentence(f"no embeddings for sentence {text[:60]!r} in {self.path}") from None


def file_provider(path: Union[str, Path], model_id: Optional[str] = None) -> FileProvider:
    return FileProvider(path, model_id)


# --- remote ---------------------------------------------------------------

class TransientError(ProviderError):
    pass


class RemoteProvider:
    """Client for an embedding server speaking ``POST /embed``.

    Request ``{"model_id", "texts"}``; response ``{"model_id", "results":
    [{"tokens", "vectors"}]}`` with status 200. 5xx answers and connection
    failures are retried, 4xx answers are fatal. Responses are cached per
    ``(model_id, text)`` for the lifetime of the provider.
    """

    def __init__(
        self,
        endpoint: str,
        model_id: str,
        *,
        retries: int = 3,
        timeout: float = 30.0,
        backoff: float = 0.2,
        max_parallelism: int = 1,
    ):
        if not model_id:
            raise ValueError("model_id is required")
        self.url = endpoint.rstrip("/") + "/embed"
        self.model_id = model_id
        self.retries = retries
        self.timeout = timeout
        self.backoff = backoff
        self.max_parallelism = max_parallelism
        self._cache: dict[tuple[str, str], TokenEmbeddings] = {}
        self._lock = threading.Lock()
        self.requests_sent = 0

    def _post(self, texts: Sequence[str]) -> dict:
        body = json.dumps({"model_id": self.model_id, "texts": list(texts)}).encode("utf-8")
        req = urllib.request.Request(
            self.url, data=body, method="POST", headers={"Content-Type": "application/json"}
        )
        self.requests_sent += 1
        try:
            with urllib.request.urlopen(req, timeout=self.timeout) as resp:
                payload = resp.read()
                status = resp.status
        except urllib.error.HTTPError as exc:
            if 500 <= exc.code < 600:
                raise TransientError(f"server error {exc.code}") from None
            raise ProviderError(f"embedding request rejected with status {exc.code}") from None
        except (urllib.error.URLError, OSError) as exc:
            raise TransientError(f"network failure: {exc}") from None
        if status != 200:
            raise ProtocolViolation(f"unexpected status {status}")
        try:
            return json.loads(payload)
        except (json.JSONDecodeError, UnicodeDecodeError):
            raise ProtocolViolation("response is not valid JSON") from None

    def _request(self, texts: Sequence[str]) -> list[TokenEmbeddings]:
        attempt = 0
        while True:
            try:
                response = self._post(texts)
                break
            except TransientError as exc:
                if attempt >= self.retries:
                    raise ProviderError(f"{exc} (gave up after {attempt + 1} attempts)") from None
                log.warning("embedding request failed (%s), retrying", exc)
                time.sleep(self.backoff * 2 ** attempt)
                attempt += 1
        return self._parse(response, len(texts))

    def _parse(self, response: object, n_texts: int) -> list[TokenEmbeddings]:
        if not isinstance(response, dict) or "results" not in response:
            raise ProtocolViolation("response lacks 'results'")
        if response.get("model_id") != self.model_id:
            raise ModelMismatch(
                f"asked for model {self.model_id!r}, server answered {response.get('model_id')!r}"
            )
        results = response["results"]
        if not isinstance(results, list) or len(results) != n_texts:
            raise ProtocolViolation(f"expected {n_texts} results")
        out = []
        for i, res in enumerate(results):
            if not isinstance(res, dict) or not {"tokens", "vectors"} <= set(res):
                raise ProtocolViolation(f"result {i} lacks tokens/vectors")
            try:
                out.append(TokenEmbeddings.from_lists(res["tokens"], res["vectors"]))
            except (MalformedEmbeddings, ValueError, TypeError) as exc:
                raise ProtocolViolation(f"result {i}: {exc}") from None
        return out

    def embed(self, text: str) -> TokenEmbeddings:
        key = (self.model_id, text)
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        emb = self._request([text])[0]
        with self._lock:
            return self._cache.setdefault(key, emb)

    def embed_many(self, texts: Sequence[str]) -> list[TokenEmbeddings]:
        """Embed several texts, sending only uncached ones in one request."""
        with self._lock:
            todo = list(dict.fromkeys(t for t in texts if (self.model_id, t) not in self._cache))
        if todo:
            fetched = self._request(todo)
            with self._lock:
                for text, emb in zip(todo, fetched):
                    self._cache.setdefault((self.model_id, text), emb)
        with self._lock:
            return [self._cache[(self.model_id, t)] for t in texts]


def remote_provider(endpoint: str, model_id: str, **kwargs) -> RemoteProvider:
    return RemoteProvider(endpoint, model_id, **kwargs)
