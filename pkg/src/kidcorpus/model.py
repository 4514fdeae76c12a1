"""Persistent domain entities: speakers, words, collections, records, media."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date
from enum import Enum

from .naming import Sex

SPEAKER_AGE_RANGE = (4, 6)
COLLECTION_SIZE_RANGE = (10, 15)


class EmotionalState(str, Enum):
    CALM = "calm"
    EXCITED = "excited"
    UPSET = "upset"
    TIRED = "tired"
    DISTRACTED = "distracted"
    OTHER = "other"


class ExtraCourse(str, Enum):
    SPEECH_THERAPY = "speech_therapy"
    SINGING = "singing"
    MUSIC_LESSONS = "music_lessons"
    OTHER = "other"


class ProcessingStage(str, Enum):
    RAW = "raw"
    CLEANED = "cleaned"


class MediaKind(str, Enum):
    IMAGE = "image"
    SOUND = "sound"


def full_years(born: date, on: date) -> int:
    """Completed years between two dates."""
    return on.year - born.year - ((on.month, on.day) < (born.month, born.day))


@dataclass(frozen=True)
class SpeakerDraft:
    """Enrollment form for a child; becomes a Speaker once persisted."""

    speaker_tag: str
    full_name: str
    sex: Sex
    date_of_birth: date
    enrollment_date: date
    address: str
    children_in_family: int
    birth_order: int
    attends_kindergarten: bool
    kindergarten_name: str | None = None
    extra_courses: frozenset[ExtraCourse] = field(default_factory=frozenset)
    development_notes: str = ""
    diseases: str = ""
    age_override: bool = False


@dataclass(frozen=True)
class Speaker:
    speaker_id: str
    speaker_tag: str
    full_name: str
    sex: Sex
    date_of_birth: date
    enrollment_date: date
    address: str
    children_in_family: int
    birth_order: int
    attends_kindergarten: bool
    kindergarten_name: str | None
    extra_courses: frozenset[ExtraCourse]
    development_notes: str
    diseases: str
    age_override: bool

    def age_years(self, on: date) -> int:
        return full_years(self.date_of_birth, on)

    def to_dict(self, include_pii: bool = False) -> dict:
        out = {
            "speaker_id": self.speaker_id,
            "speaker_tag": self.speaker_tag,
            "sex": self.sex.value,
            "date_of_birth": self.date_of_birth.isoformat(),
            "enrollment_date": self.enrollment_date.isoformat(),
            "children_in_family": self.children_in_family,
            "birth_order": self.birth_order,
            "attends_kindergarten": self.attends_kindergarten,
            "kindergarten_name": self.kindergarten_name,
            "extra_courses": sorted(c.value for c in self.extra_courses),
            "development_notes": self.development_notes,
            "diseases": self.diseases,
            "age_override": self.age_override,
        }
        if include_pii:
            out["full_name"] = self.full_name
            out["address"] = self.address
        return out


@dataclass(frozen=True)
class Word:
    word_id: str
    orthography: str
    ipa: str
    ipa_override: bool
    image_ref: str | None
    sound_ref: str | None

    def to_dict(self) -> dict:
        return {
            "word_id": self.word_id,
            "orthography": self.orthography,
            "ipa": self.ipa,
            "ipa_override": self.ipa_override,
            "image_ref": self.image_ref,
            "sound_ref": self.sound_ref,
        }


@dataclass(frozen=True)
class CollectionEntry:
    word_order: int
    word_id: str


@dataclass(frozen=True)
class WordCollection:
    label: str
    theme: str
    entries: tuple[CollectionEntry, ...]
    published: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "theme": self.theme,
            "published": self.published,
            "entries": [{"word_order": e.word_order, "word_id": e.word_id}
                        for e in self.entries],
        }


@dataclass(frozen=True)
class RecordingRecord:
    record_id: str
    speaker_id: str
    collection_label: str
    word_order: int
    filename: str
    place_of_recording: str
    equipment: str
    emotional_state: EmotionalState
    session_id: str
    sample_rate: int
    channels: int
    bit_depth: int
    duration_s: float
    processing_stage: ProcessingStage
    recorded_at: date

    def to_dict(self) -> dict:
        return {
            "record_id": self.record_id,
            "speaker_id": self.speaker_id,
            "collection_label": self.collection_label,
            "word_order": self.word_order,
            "filename": self.filename,
            "place_of_recording": self.place_of_recording,
            "equipment": self.equipment,
            "emotional_state": self.emotional_state.value,
            "session_id": self.session_id,
            "sample_rate": self.sample_rate,
            "channels": self.channels,
            "bit_depth": self.bit_depth,
            "duration_s": self.duration_s,
            "processing_stage": self.processing_stage.value,
            "recorded_at": self.recorded_at.isoformat(),
        }


@dataclass(frozen=True)
class MediaAsset:
    asset_id: str
    kind: MediaKind
    content_type: str
    bytes_ref: str
    display_name: str

    def to_dict(self) -> dict:
        return {
            "asset_id": self.asset_id,
            "kind": self.kind.value,
            "content_type": self.content_type,
            "display_name": self.display_name,
        }


@dataclass(frozen=True)
class LexiconEntry:
    orthography: str
    frequency_rank: int
    ipa: str
