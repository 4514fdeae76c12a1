"""Rule-based Bulgarian grapheme-to-phoneme transcription (IPA).

The letter rules live in a versioned data file (``data/g2p_rules_bg.tsv``)
loaded at import; the transduction process itself is fixed:

1. letter mapping, with per-letter context rules (``ь`` yields the
   palatalization mark only before ``о``, otherwise nothing; ``ю``/``я``
   after a consonant letter yield ``ʲu``/``ʲa`` instead of ``ju``/``ja``),
2. word-final devoicing of the last segment when it is a voiced obstruent,
3. regressive voicing assimilation inside obstruent clusters: the rightmost
   obstruent of each maximal cluster propagates its voicing leftward.

Segments without a voiced/voiceless partner (``x``, ``ts``, ``tʃ``) never
change; this keeps the inventory closed. Transcription is at citation-form
level: unstressed-vowel reduction is not modeled (orthography does not mark
stress), and the standard-language exception that ``в`` does not trigger
voicing assimilation is likewise not modeled — the cluster rule is applied
uniformly.

Affricates ``ts`` and ``tʃ`` are single segments spelled with two
characters; ``щ`` decomposes as ``ʃ``+``t`` and ``ю``/``я`` as glide+vowel,
so a transcription is canonically a *sequence of segments* and the flat
string is just their concatenation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .errors import NonCyrillicInput

BULGARIAN_ALPHABET = "абвгдежзийклмнопрстуфхцчшщъьюя"
CONSONANT_LETTERS = frozenset("бвгджзйклмнпрстфхцчшщ")
HYPHEN = "-"

# Obstruents with no voiced partner in the pair table; needed to delimit
# clusters for the assimilation pass.
UNPAIRED_OBSTRUENTS = frozenset({"x", "ts", "tʃ"})

_RULES_RESOURCE = "g2p_rules_bg.tsv"


@dataclass(frozen=True)
class Rule:
    pattern: str      # the letter this rule applies to
    context: str      # base | before-о | after-consonant
    output: tuple[str, ...]


@dataclass(frozen=True)
class RuleTable:
    """Ordered per-letter rules plus devoicing pairs."""

    letter_rules: dict[str, tuple[Rule, ...]]
    devoice: dict[str, str]          # voiced segment -> voiceless
    version: str = "1"

    @property
    def voice(self) -> dict[str, str]:
        return {v: k for k, v in self.devoice.items()}

    def obstruents(self) -> frozenset[str]:
        return frozenset(self.devoice) | frozenset(self.devoice.values()) | UNPAIRED_OBSTRUENTS


def load_rule_table(path: str | Path | None = None) -> RuleTable:
    """Load a rule table; defaults to the packaged reference table."""
    if path is None:
        text = resources.files("kidcorpus.data").joinpath(_RULES_RESOURCE).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")

    letter_rules: dict[str, list[Rule]] = {}
    devoice: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{_RULES_RESOURCE}:{lineno}: expected 3 tab-separated fields")
        pattern, context, output = parts
        if context == "devoice":
            devoice[pattern] = output.strip()
        else:
            out = output.strip()
            segments = () if out in ("", "∅") else tuple(out.split())
            letter_rules.setdefault(pattern, []).append(Rule(pattern, context, segments))

    missing = [c for c in BULGARIAN_ALPHABET
               if not any(r.context == "base" for r in letter_rules.get(c, []))]
    if missing:
        raise ValueError(f"rule table lacks base mappings for: {' '.join(missing)}")
    return RuleTable({k: tuple(v) for k, v in letter_rules.items()}, devoice)


_DEFAULT_TABLE = load_rule_table()


@dataclass(frozen=True)
class PhonemeInventory:
    """The closed set of IPA segments the rule engine can emit."""

    phonemes: frozenset[str]

    @classmethod
    def from_rules(cls, table: RuleTable) -> "PhonemeInventory":
        segments: set[str] = set()
        for rules in table.letter_rules.values():
            for rule in rules:
                segments.update(rule.output)
        segments.update(table.devoice.values())
        segments.update(table.devoice.keys())
        return cls(frozenset(segments))

    def __contains__(self, segment: str) -> bool:
        return segment in self.phonemes

    def __len__(self) -> int:
        return len(self.phonemes)


def default_inventory() -> PhonemeInventory:
    return PhonemeInventory.from_rules(_DEFAULT_TABLE)


def _check_orthography(orthography: str) -> str:
    lowered = orthography.lower()
    for ch in lowered:
        if ch not in BULGARIAN_ALPHABET and ch != HYPHEN:
            raise NonCyrillicInput(
                f"{orthography!r} contains {ch!r}; only Bulgarian Cyrillic letters and hyphen are accepted",
                offending=ch,
            )
    return lowered


def _context_holds(context: str, letters: str, i: int) -> bool:
    if context == "base":
        return True
    if context == "before-о":
        return i + 1 < len(letters) and letters[i + 1] == "о"
    if context == "after-consonant":
        return i > 0 and letters[i - 1] in CONSONANT_LETTERS
    raise ValueError(f"unknown rule context {context!r}")


def transcribe_segments(orthography: str, table: RuleTable = _DEFAULT_TABLE) -> list[str]:
    """Transcribe to a list of IPA segments (affricates as one segment)."""
    lowered = _check_orthography(orthography)
    letters = lowered.replace(HYPHEN, "")

    segments: list[str] = []
    for i, letter in enumerate(letters):
        for rule in table.letter_rules[letter]:
            if _context_holds(rule.context, letters, i):
                segments.extend(rule.output)
                break

    # word-final devoicing
    if segments and segments[-1] in table.devoice:
        segments[-1] = table.devoice[segments[-1]]

    # regressive voicing assimilation inside obstruent clusters
    obstruents = table.obstruents()
    voiced = frozenset(table.devoice)
    voice = table.voice
    end = len(segments)
    while end > 0:
        if segments[end - 1] not in obstruents:
            end -= 1
            continue
        start = end
        while start > 0 and segments[start - 1] in obstruents:
            start -= 1
        rightmost_voiced = segments[end - 1] in voiced
        for j in range(start, end - 1):
            seg = segments[j]
            if rightmost_voiced:
                segments[j] = voice.get(seg, seg)
            else:
                segments[j] = table.devoice.get(seg, seg)
        end = start

    return segments


def transcribe(orthography: str, table: RuleTable = _DEFAULT_TABLE) -> str:
    """Deterministic IPA transcription of a Bulgarian word."""
    return "".join(transcribe_segments(orthography, table))


def phonemize_multiset(words: Iterable[str], table: RuleTable = _DEFAULT_TABLE) -> Counter:
    """Segment multiset of all transcriptions, counted with multiplicity."""
    counts: Counter = Counter()
    for word in words:
        try:
            counts.update(transcribe_segments(word, table))
        except NonCyrillicInput as err:
            raise NonCyrillicInput(f"cannot transcribe {word!r}: {err.message}",
                                   word=word, **err.details) from err
    return counts
