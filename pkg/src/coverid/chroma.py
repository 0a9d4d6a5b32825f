"""Per-second pitch-class profiles (chroma) and their on-disk CHRM format.

One chroma frame summarizes one second of audio: Hann-windowed short-time
spectra are folded onto the 12 pitch classes C..B over 55-1760 Hz, summed
across the second, and unit-normalized. The window is 16384 samples with
hop 2048 and a zero-padded 32768-point FFT; anything shorter cannot
separate adjacent semitones at the bottom of the range (the gap between
A1 and A#1 is 3.3 Hz).
"""

import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .audio import REFERENCE_RATE, AudioClip
from .errors import MalformedContainer, TooShort

WINDOW = 16384
HOP = 2048
NFFT = 32768
FMIN = 55.0
FMAX = 1760.0

CHRM_MAGIC = b"CHRM"
CHRM_VERSION = 1

PITCH_CLASSES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")


@dataclass
class ChromaSequence:
    """L frames of 12 pitch-class energies, one frame per second."""

    frames: np.ndarray  # (L, 12) float32, rows unit-norm or all-zero
    song_id: str = ""

    FRAME_PERIOD = 1.0  # seconds

    def __len__(self):
        return self.frames.shape[0]


@dataclass
class PitchProfile:
    """Global 12-bin pitch-class energy profile of one song."""

    energies: np.ndarray = field(default_factory=lambda: np.zeros(12, dtype=np.float32))


def _bin_to_pitch_class():
    """Map each usable FFT bin to its pitch class; -1 marks out-of-range bins."""
    freqs = np.arange(NFFT // 2 + 1) * (REFERENCE_RATE / NFFT)
    pc = np.full(freqs.shape, -1, dtype=np.int64)
    usable = (freqs >= FMIN) & (freqs <= FMAX)
    midi = np.rint(69.0 + 12.0 * np.log2(freqs[usable] / 440.0)).astype(np.int64)
    pc[usable] = midi % 12
    return pc


_BIN_PC = _bin_to_pitch_class()
_USABLE = _BIN_PC >= 0
# one-hot folding matrix: (n_usable_bins, 12)
_FOLD = np.equal.outer(_BIN_PC[_USABLE], np.arange(12)).astype(np.float32)


def compute_chroma(clip: AudioClip, song_id: str = "") -> ChromaSequence:
    """Convert a 44.1 kHz clip into its per-second chroma sequence.

    Each full second yields one frame; the trailing partial second is
    discarded. Window magnitudes are accumulated into the second that
    contains the window center.
    """
    if clip.sample_rate != REFERENCE_RATE:
        raise ValueError("compute_chroma expects a 44100 Hz clip; resample first")
    n = len(clip.samples)
    n_frames = n // REFERENCE_RATE
    if n_frames < 1:
        raise TooShort(f"clip is {n / REFERENCE_RATE:.3f} s; need at least 1 s")

    samples = np.asarray(clip.samples, dtype=np.float32)
    window = np.hanning(WINDOW).astype(np.float32)
    starts = np.arange(0, n - WINDOW + 1, HOP)
    slots = (starts + WINDOW // 2) // REFERENCE_RATE
    keep = slots < n_frames  # centers inside a discarded partial second contribute nothing
    starts, slots = starts[keep], slots[keep]

    acc = np.zeros((n_frames, 12), dtype=np.float32)
    # batch the FFTs to bound transient memory (~70 MB per batch)
    for lo in range(0, len(starts), 256):
        batch = starts[lo : lo + 256]
        segs = samples[batch[:, None] + np.arange(WINDOW)[None, :]] * window
        mags = np.abs(np.fft.rfft(segs, n=NFFT, axis=1)).astype(np.float32)
        np.add.at(acc, slots[lo : lo + 256], mags[:, _USABLE] @ _FOLD)

    norms = np.linalg.norm(acc, axis=1, keepdims=True)
    frames = np.divide(acc, norms, out=np.zeros_like(acc), where=norms > 0)
    return ChromaSequence(frames=frames, song_id=song_id)


def global_profile(chroma: ChromaSequence) -> PitchProfile:
    """Element-wise mean over frames, unit-normalized (zero if silent)."""
    if len(chroma) < 1:
        raise ValueError("global_profile needs at least one frame")
    mean = chroma.frames.mean(axis=0, dtype=np.float64)
    norm = np.linalg.norm(mean)
    if norm == 0:
        return PitchProfile(np.zeros(12, dtype=np.float32))
    return PitchProfile((mean / norm).astype(np.float32))


def write_chrm(path, chroma: ChromaSequence):
    frames = np.ascontiguousarray(chroma.frames, dtype="<f4")
    with open(path, "wb") as f:
        f.write(CHRM_MAGIC)
        f.write(struct.pack("<II", CHRM_VERSION, frames.shape[0]))
        f.write(frames.tobytes())


def read_chrm(path, song_id: str | None = None) -> ChromaSequence:
    path = Path(path)
    with open(path, "rb") as f:
        head = f.read(12)
        if len(head) != 12 or head[:4] != CHRM_MAGIC:
            raise MalformedContainer(f"{path} is not a CHRM file")
        version, length = struct.unpack("<II", head[4:])
        if version != CHRM_VERSION:
            raise MalformedContainer(f"unsupported CHRM version {version}")
        payload = f.read(length * 12 * 4)
        if len(payload) != length * 12 * 4:
            raise MalformedContainer(f"{path}: truncated CHRM payload")
    frames = np.frombuffer(payload, dtype="<f4").reshape(length, 12)
    return ChromaSequence(frames=frames.copy(), song_id=song_id if song_id is not None else path.stem)


def export_chroma_csv(path, chroma: ChromaSequence):
    """One frame per row, 12 comma-separated columns."""
    with open(path, "w") as f:
        for row in chroma.frames:
            f.write(",".join(repr(float(v)) for v in row) + "\n")
