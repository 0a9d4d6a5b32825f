"""WAV decoding and resampling to the 44.1 kHz analysis rate."""

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyAudio, MalformedContainer, UnsupportedEncoding

REFERENCE_RATE = 44100

_PCM = 1
_IEEE_FLOAT = 3


@dataclass
class AudioClip:
    """Mono audio with samples in [-1, 1]."""

    samples: np.ndarray
    sample_rate: int

    @property
    def duration_seconds(self) -> float:
        return len(self.samples) / self.sample_rate


def _read_exact(f, n, what):
    data = f.read(n)
    if len(data) != n:
        raise MalformedContainer(f"truncated {what}")
    return data


def load_audio_wav(path) -> AudioClip:
    """Decode a PCM16 or float32 RIFF/WAVE file into a mono AudioClip.

    Stereo input is downmixed by channel mean; 16-bit samples are scaled
    by 1/32768 so full-scale positive maps to 32767/32768.
    """
    path = Path(path)
    with open(path, "rb") as f:
        header = _read_exact(f, 12, "RIFF header")
        if header[:4] != b"RIFF" or header[8:12] != b"WAVE":
            raise MalformedContainer(f"{path} is not a RIFF/WAVE file")

        fmt = None
        data = None
        while data is None:
            chunk_head = f.read(8)
            if len(chunk_head) == 0:
                break
            if len(chunk_head) != 8:
                raise MalformedContainer("truncated chunk header")
            chunk_id, size = struct.unpack("<4sI", chunk_head)
            if chunk_id == b"fmt ":
                fmt = _read_exact(f, size, "fmt chunk")
            elif chunk_id == b"data":
                data = _read_exact(f, size, "data chunk")
            else:
                f.seek(size, 1)
            if size % 2 and data is None:
                f.seek(1, 1)  # chunks are word-aligned

    if fmt is None or len(fmt) < 16:
        raise MalformedContainer("missing or short fmt chunk")
    if data is None:
        raise MalformedContainer("missing data chunk")

    audio_format, channels, sample_rate, _, _, bits = struct.unpack("<HHIIHH", fmt[:16])
    if channels not in (1, 2):
        raise UnsupportedEncoding(f"{channels} channels (only mono/stereo supported)")
    if sample_rate <= 0:
        raise MalformedContainer("non-positive sample rate")

    if audio_format == _PCM and bits == 16:
        raw = np.frombuffer(data[: len(data) - len(data) % (2 * channels)], dtype="<i2")
        samples = raw.astype(np.float32) / 32768.0
    elif audio_format == _IEEE_FLOAT and bits == 32:
        raw = np.frombuffer(data[: len(data) - len(data) % (4 * channels)], dtype="<f4")
        samples = np.clip(raw.astype(np.float32), -1.0, 1.0)
    else:
        raise UnsupportedEncoding(
            f"format tag {audio_format} with {bits} bits (need PCM16 or float32)"
        )

    if samples.size == 0:
        raise EmptyAudio(f"{path} contains no samples")
    if channels == 2:
        samples = samples.reshape(-1, 2).mean(axis=1, dtype=np.float32)

    return AudioClip(samples=samples, sample_rate=int(sample_rate))


def resample_to_reference(clip: AudioClip) -> AudioClip:
    """Linear-interpolation resample to 44100 Hz; identity if already there."""
    if clip.samples.size == 0:
        raise EmptyAudio("cannot resample an empty clip")
    if clip.sample_rate == REFERENCE_RATE:
        return clip
    n_out = int(round(len(clip.samples) * REFERENCE_RATE / clip.sample_rate))
    positions = np.arange(n_out) * (clip.sample_rate / REFERENCE_RATE)
    resampled = np.interp(positions, np.arange(len(clip.samples)), clip.samples)
    return AudioClip(samples=resampled.astype(np.float32), sample_rate=REFERENCE_RATE)
