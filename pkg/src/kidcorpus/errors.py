"""Domain error hierarchy with stable machine codes.

Every error carries a ``code`` that the HTTP service and CLI expose
verbatim; codes never change between versions.
"""

from __future__ import annotations

from typing import Any


class CorpusError(Exception):
    """Base class for all domain errors."""

    code = "corpus_error"

    def __init__(self, message: str = "", **details: Any):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.details = details


# --- filename codec ---------------------------------------------------------

class InvalidFields(CorpusError):
    code = "invalid_fields"


class MalformedFilename(CorpusError):
    code = "malformed_filename"


# --- transcription ----------------------------------------------------------

class NonCyrillicInput(CorpusError):
    code = "non_cyrillic_input"


class EmptyOrthography(CorpusError):
    code = "empty_orthography"


# --- audio ------------------------------------------------------------------

class AudioError(CorpusError):
    code = "audio_error"


class NotRiff(AudioError):
    code = "not_riff"


class NotPcm(AudioError):
    code = "not_pcm"


class UnsupportedRate(AudioError):
    code = "unsupported_rate"


class UnsupportedDepth(AudioError):
    code = "unsupported_depth"


class UnsupportedChannels(AudioError):
    code = "unsupported_channels"


class TruncatedData(AudioError):
    code = "truncated_data"


class NonCanonicalClip(AudioError):
    code = "non_canonical_clip"


class AllSilence(AudioError):
    code = "all_silence"


# --- corpus store -----------------------------------------------------------

class DuplicateTag(CorpusError):
    code = "duplicate_tag"


class InvalidBirthOrder(CorpusError):
    code = "invalid_birth_order"


class AgeOutOfRange(CorpusError):
    code = "age_out_of_range"


class DuplicateLabel(CorpusError):
    code = "duplicate_label"


class DuplicateOrthography(CorpusError):
    code = "duplicate_orthography"


class SizeOutOfRange(CorpusError):
    code = "size_out_of_range"


class InvalidMedia(CorpusError):
    code = "invalid_media"


class ReferentialIntegrity(CorpusError):
    code = "referential_integrity"


class NotFound(CorpusError):
    code = "not_found"


class SpeakerNotFound(NotFound):
    code = "speaker_not_found"


class WordNotFound(NotFound):
    code = "word_not_found"


class CollectionNotFound(NotFound):
    code = "collection_not_found"


class RecordNotFound(NotFound):
    code = "record_not_found"


class AssetNotFound(NotFound):
    code = "asset_not_found"


class SessionNotFound(NotFound):
    code = "session_not_found"


class CorpusNotInitialized(CorpusError):
    code = "corpus_not_initialized"


class CorpusLocked(CorpusError):
    code = "corpus_locked"


# --- lexicon / coverage -----------------------------------------------------

class EmptyLexicon(CorpusError):
    code = "empty_lexicon"


class MalformedCsv(CorpusError):
    code = "malformed_csv"


# --- session protocol -------------------------------------------------------

class CollectionNotPublished(CorpusError):
    code = "collection_not_published"


class DailySessionExists(CorpusError):
    code = "daily_session_exists"


class SessionClosed(CorpusError):
    code = "session_closed"


class WrongPrompt(CorpusError):
    code = "wrong_prompt"


class NonConformingAudio(CorpusError):
    code = "non_conforming_audio"


class InvalidPhase(CorpusError):
    code = "invalid_phase"


class BudgetExhausted(CorpusError):
    code = "budget_exhausted"


class NoWordsRemaining(CorpusError):
    code = "no_words_remaining"


class RetryableTakeError(CorpusError):
    """A failed take; the session stays on the same word.

    Wraps the underlying audio error and surfaces its code so clients
    see the concrete cause (e.g. ``truncated_data``, ``all_silence``).
    """

    code = "retryable_take"

    def __init__(self, cause: CorpusError, attempts: int):
        super().__init__(cause.message, retryable=True, attempts=attempts,
                         **cause.details)
        self.cause = cause
        self.code = cause.code
        self.attempts = attempts


# --- service ----------------------------------------------------------------

class UploadTooLarge(CorpusError):
    code = "upload_too_large"


class PortInUse(CorpusError):
    code = "port_in_use"
