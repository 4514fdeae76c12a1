"""WAV parsing/writing and the take-cleanup pipeline.

The corpus stores RIFF/WAVE PCM only. Canonical corpus audio is
16 kHz / mono / 16-bit; the writer emits exactly a 44-byte header
(RIFF + fmt(16) + data, little-endian, no other chunks) so written
files round-trip byte-identically.

Cleanup runs four stages on a canonical-rate mono clip, all in float64,
quantizing once at the end:

1. DC removal (subtract the sample mean),
2. high-pass at 60 Hz, implemented as a zero-phase spectral projection
   (rFFT bins below the cutoff are zeroed) so the stage is exactly
   idempotent: re-running the pipeline must not move samples,
3. energy-based silence trim (25 ms windows, 10 ms hop, threshold
   -40 dB relative to the clip peak with a -60 dBFS absolute floor),
   keeping a 100 ms margin on both sides,
4. peak normalization to -3 dBFS.

All thresholds are configuration (``CleanupConfig``) with the defaults
above.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

from .errors import (
    AllSilence,
    NonCanonicalClip,
    NotPcm,
    NotRiff,
    TruncatedData,
    UnsupportedChannels,
    UnsupportedDepth,
    UnsupportedRate,
)

CANONICAL_RATE = 16_000
ACCEPTED_RATES = frozenset({16_000, 44_100, 48_000})
ACCEPTED_DEPTHS = frozenset({16})
ACCEPTED_CHANNELS = frozenset({1, 2})
FULL_SCALE = 32_767
INT16_MIN = -32_768

_WAVE_FORMAT_PCM = 1
_HEADER = struct.Struct("<4sI4s4sIHHIIHH4sI")


@dataclass(eq=False)
class AudioClip:
    """Decoded PCM audio; mono samples are 1-D, stereo (frames, 2)."""

    samples: np.ndarray        # int16
    sample_rate: int
    channels: int
    bit_depth: int = 16

    @property
    def frames(self) -> int:
        return self.samples.shape[0]

    @property
    def duration(self) -> float:
        return self.frames / self.sample_rate

    @property
    def is_canonical(self) -> bool:
        return (self.sample_rate == CANONICAL_RATE and self.channels == 1
                and self.bit_depth == 16)

    def facts(self) -> tuple[int, int, int, float]:
        return (self.sample_rate, self.channels, self.bit_depth, self.duration)


@dataclass(frozen=True)
class CleanupConfig:
    highpass_hz: float = 60.0
    silence_threshold_db: float = -40.0   # relative to clip peak
    silence_floor_dbfs: float = -60.0     # absolute floor for signal frames
    frame_ms: float = 25.0
    hop_ms: float = 10.0
    margin_ms: float = 100.0
    target_peak_dbfs: float = -3.0
    clipping_run: int = 3


DEFAULT_CLEANUP = CleanupConfig()


@dataclass(frozen=True)
class CleanupReport:
    dc_offset_removed: float
    trimmed_leading_ms: float
    trimmed_trailing_ms: float
    peak_before_dbfs: float
    peak_after_dbfs: float
    clipping_detected: bool


def dbfs(amplitude: float) -> float:
    """Amplitude (int16 scale) to dB relative to digital full scale."""
    if amplitude <= 0:
        return -math.inf
    return 20.0 * math.log10(amplitude / FULL_SCALE)


def _quantize(x: np.ndarray) -> np.ndarray:
    return np.clip(np.rint(x), INT16_MIN, FULL_SCALE).astype("<i2")


# --- WAV codec ---------------------------------------------------------------

def parse_wav(data: bytes) -> AudioClip:
    """Decode RIFF/WAVE PCM bytes; unknown chunks are skipped."""
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise NotRiff("not a RIFF/WAVE stream")

    fmt: tuple[int, int, int, int] | None = None
    pos = 12
    while pos + 8 <= len(data):
        chunk_id = data[pos:pos + 4]
        size = int.from_bytes(data[pos + 4:pos + 8], "little")
        body = data[pos + 8:pos + 8 + size]
        if len(body) < size:
            raise TruncatedData(
                f"chunk {chunk_id!r} declares {size} bytes, only {len(body)} present")
        if chunk_id == b"fmt ":
            if size < 16:
                raise NotPcm(f"fmt chunk too small ({size} bytes)")
            audio_format, channels, rate, _byte_rate, _block_align, bits = \
                struct.unpack_from("<HHIIHH", body)
            if audio_format != _WAVE_FORMAT_PCM:
                raise NotPcm(f"audio format tag {audio_format}, want PCM (1)")
            if channels not in ACCEPTED_CHANNELS:
                raise UnsupportedChannels(f"{channels} channels, accept 1 or 2")
            if rate not in ACCEPTED_RATES:
                raise UnsupportedRate(f"{rate} Hz not in {sorted(ACCEPTED_RATES)}")
            if bits not in ACCEPTED_DEPTHS:
                raise UnsupportedDepth(f"{bits}-bit samples, accept 16")
            fmt = (audio_format, channels, rate, bits)
        elif chunk_id == b"data":
            if fmt is None:
                raise NotPcm("data chunk precedes fmt chunk")
            _, channels, rate, bits = fmt
            bytes_per_frame = channels * bits // 8
            if size == 0 or size % bytes_per_frame != 0:
                raise TruncatedData(f"data size {size} is not a positive frame multiple")
            samples = np.frombuffer(body, dtype="<i2")
            if channels == 2:
                samples = samples.reshape(-1, 2)
            return AudioClip(samples, rate, channels, bits)
        pos += 8 + size + (size & 1)
    raise TruncatedData("no data chunk found")


def write_wav(clip: AudioClip) -> bytes:
    """Encode a canonical clip (16 kHz / mono / 16-bit), 44-byte header."""
    if not clip.is_canonical:
        raise NonCanonicalClip(
            f"clip is {clip.sample_rate} Hz / {clip.channels} ch / {clip.bit_depth}-bit; "
            f"corpus WAVs are {CANONICAL_RATE} Hz / 1 ch / 16-bit")
    payload = np.ascontiguousarray(clip.samples, dtype="<i2").tobytes()
    header = _HEADER.pack(
        b"RIFF", 36 + len(payload), b"WAVE",
        b"fmt ", 16, _WAVE_FORMAT_PCM, 1, CANONICAL_RATE,
        CANONICAL_RATE * 2, 2, 16,
        b"data", len(payload),
    )
    return header + payload


# --- resampling --------------------------------------------------------------

def downmix_mono(clip: AudioClip) -> AudioClip:
    """Average the channels of a stereo clip; mono clips pass through."""
    if clip.channels == 1:
        return clip
    mixed = _quantize(clip.samples.astype(np.float64).mean(axis=1))
    return AudioClip(mixed, clip.sample_rate, 1, clip.bit_depth)


def resample_to_16k(clip: AudioClip) -> AudioClip:
    """Linear-interpolation resample to 16 kHz (stereo is downmixed first)."""
    if clip.sample_rate not in ACCEPTED_RATES:
        raise UnsupportedRate(f"{clip.sample_rate} Hz not in {sorted(ACCEPTED_RATES)}")
    mono = downmix_mono(clip)
    if mono.sample_rate == CANONICAL_RATE:
        return mono
    x = mono.samples.astype(np.float64)
    n = x.shape[0]
    m = int(round(n * CANONICAL_RATE / mono.sample_rate))
    positions = np.arange(m) * (mono.sample_rate / CANONICAL_RATE)
    y = np.interp(positions, np.arange(n), x)
    return AudioClip(_quantize(y), CANONICAL_RATE, 1, 16)


# --- cleanup stages (float64, int16 scale) -----------------------------------

def remove_dc(x: np.ndarray) -> tuple[np.ndarray, float]:
    offset = float(x.mean())
    return x - offset, offset


def high_pass(x: np.ndarray, sample_rate: int, cutoff_hz: float) -> np.ndarray:
    """Zero-phase high-pass: project out all rFFT bins below the cutoff."""
    spectrum = np.fft.rfft(x)
    freqs = np.fft.rfftfreq(x.shape[0], d=1.0 / sample_rate)
    spectrum[freqs < cutoff_hz] = 0.0
    return np.fft.irfft(spectrum, n=x.shape[0])


def _frame_rms(x: np.ndarray, frame: int, hop: int) -> np.ndarray:
    starts = np.arange(0, x.shape[0], hop)
    return np.array([
        math.sqrt(float(np.mean(np.square(x[s:s + frame])))) for s in starts
    ])


def trim_silence(x: np.ndarray, sample_rate: int,
                 config: CleanupConfig) -> tuple[np.ndarray, int, int]:
    """Cut sub-threshold leading/trailing audio, keeping the margin.

    Returns (trimmed, leading_samples_cut, trailing_samples_cut).
    Raises AllSilence when no frame reaches both the relative threshold
    and the absolute floor.
    """
    n = x.shape[0]
    peak = float(np.max(np.abs(x))) if n else 0.0
    if peak <= 0.0:
        raise AllSilence("no signal above the silence threshold")

    frame = int(round(config.frame_ms * sample_rate / 1000.0))
    hop = int(round(config.hop_ms * sample_rate / 1000.0))
    margin = int(round(config.margin_ms * sample_rate / 1000.0))

    threshold = max(peak * 10.0 ** (config.silence_threshold_db / 20.0),
                    FULL_SCALE * 10.0 ** (config.silence_floor_dbfs / 20.0))
    rms = _frame_rms(x, frame, hop)
    loud = np.flatnonzero(rms >= threshold)
    if loud.size == 0:
        raise AllSilence("no signal above the silence threshold")

    first_start = int(loud[0]) * hop
    last_end = min(int(loud[-1]) * hop + frame, n)
    keep_start = max(0, first_start - margin)
    keep_end = min(n, last_end + margin)
    return x[keep_start:keep_end], keep_start, n - keep_end


def normalize_peak(x: np.ndarray, target_dbfs: float) -> np.ndarray:
    peak = float(np.max(np.abs(x)))
    if peak <= 0.0:
        raise AllSilence("cannot normalize a silent signal")
    return x * (FULL_SCALE * 10.0 ** (target_dbfs / 20.0) / peak)


def detect_clipping(samples: np.ndarray, run: int = DEFAULT_CLEANUP.clipping_run) -> bool:
    """True when `run` or more consecutive samples sit at full scale."""
    at_limit = np.abs(samples.astype(np.int64)) >= FULL_SCALE
    if at_limit.shape[0] < run:
        return False
    windows = np.convolve(at_limit.astype(np.int64), np.ones(run, dtype=np.int64), "valid")
    return bool(np.any(windows >= run))


def cleanup_pipeline(clip: AudioClip,
                     config: CleanupConfig = DEFAULT_CLEANUP) -> tuple[AudioClip, CleanupReport]:
    """Run DC removal, high-pass, silence trim and peak normalization."""
    if clip.sample_rate != CANONICAL_RATE or clip.channels != 1:
        raise NonCanonicalClip("cleanup requires a 16 kHz mono clip")

    clipping = detect_clipping(clip.samples, config.clipping_run)
    x = clip.samples.astype(np.float64)
    peak_before = dbfs(float(np.max(np.abs(x))) if x.size else 0.0)

    x, dc_offset = remove_dc(x)
    x = high_pass(x, clip.sample_rate, config.highpass_hz)
    x, cut_lead, cut_trail = trim_silence(x, clip.sample_rate, config)
    if cut_lead or cut_trail:
        # re-project on the trimmed window: cutting samples reintroduces
        # low-frequency leakage, and the output must be a fixed point of
        # the high-pass so that re-running the pipeline is a no-op
        x = high_pass(x, clip.sample_rate, config.highpass_hz)
    x = normalize_peak(x, config.target_peak_dbfs)

    cleaned = AudioClip(_quantize(x), CANONICAL_RATE, 1, 16)
    report = CleanupReport(
        dc_offset_removed=dc_offset,
        trimmed_leading_ms=cut_lead * 1000.0 / clip.sample_rate,
        trimmed_trailing_ms=cut_trail * 1000.0 / clip.sample_rate,
        peak_before_dbfs=peak_before,
        peak_after_dbfs=dbfs(float(np.max(np.abs(cleaned.samples)))),
        clipping_detected=clipping,
    )
    return cleaned, report


def prepare_take(data: bytes, config: CleanupConfig = DEFAULT_CLEANUP
                 ) -> tuple[AudioClip, CleanupReport]:
    """Parse an uploaded WAV, resample to canonical rate, run cleanup."""
    clip = parse_wav(data)
    return cleanup_pipeline(resample_to_16k(clip), config)
