"""Bijective codec for corpus recording filenames.

Grammar::

    filename = sex tag age "_" label order ".wav"
    sex      = "b" | "g"            (boy / girl)
    tag      = letter+              (speaker tag, ASCII letters only)
    age      = digit+               (full years, 1..99, no padding)
    label    = "A".."Z"             (word-collection label)
    order    = nonzero-digit digit* (word order within the collection)

``decode_filename`` accepts exactly the image of ``encode_filename``, so
the two functions are mutual inverses: unpadded decimals mean a decoded
tuple always re-encodes to the original byte string.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidFields, MalformedFilename


class Sex(str, Enum):
    BOY = "boy"
    GIRL = "girl"

    @property
    def letter(self) -> str:
        return "b" if self is Sex.BOY else "g"


_SEX_BY_LETTER = {"b": Sex.BOY, "g": Sex.GIRL}

_TAG_RE = re.compile(r"^[A-Za-z]+$")
_FILENAME_RE = re.compile(
    r"^(?P<sex>[bg])(?P<tag>[A-Za-z]+)(?P<age>\d+)_(?P<label>[A-Z])(?P<order>\d+)\.wav$"
)

AGE_MIN, AGE_MAX = 1, 99


@dataclass(frozen=True)
class FilenameFields:
    sex: Sex
    speaker_tag: str
    age_years: int
    collection_label: str
    word_order: int

    def validate(self) -> None:
        if not _TAG_RE.match(self.speaker_tag):
            raise InvalidFields(f"speaker tag {self.speaker_tag!r} must be one or more ASCII letters")
        if not AGE_MIN <= self.age_years <= AGE_MAX:
            raise InvalidFields(f"age {self.age_years} outside [{AGE_MIN}, {AGE_MAX}]")
        if len(self.collection_label) != 1 or not "A" <= self.collection_label <= "Z":
            raise InvalidFields(f"collection label {self.collection_label!r} must be a single uppercase letter")
        if self.word_order < 1:
            raise InvalidFields(f"word order {self.word_order} must be >= 1")


def encode_filename(fields: FilenameFields) -> str:
    """Build the recording filename, e.g. ``bA5_B2.wav``."""
    fields.validate()
    return (f"{fields.sex.letter}{fields.speaker_tag}{fields.age_years}"
            f"_{fields.collection_label}{fields.word_order}.wav")


def decode_filename(filename: str) -> FilenameFields:
    """Parse a recording filename back into its fields.

    Rejects anything outside the image of ``encode_filename``: wrong
    extension or case, missing underscore, empty tag, zero-padded or
    out-of-range numbers, zero word order.
    """
    m = _FILENAME_RE.match(filename)
    if not m:
        raise MalformedFilename(f"{filename!r} does not match the corpus filename grammar")
    age_s, order_s = m["age"], m["order"]
    if age_s.startswith("0") or order_s.startswith("0"):
        raise MalformedFilename(f"{filename!r}: zero or zero-padded number")
    age, order = int(age_s), int(order_s)
    if not AGE_MIN <= age <= AGE_MAX:
        raise MalformedFilename(f"{filename!r}: age {age} outside [{AGE_MIN}, {AGE_MAX}]")
    return FilenameFields(
        sex=_SEX_BY_LETTER[m["sex"]],
        speaker_tag=m["tag"],
        age_years=age,
        collection_label=m["label"],
        word_order=order,
    )
