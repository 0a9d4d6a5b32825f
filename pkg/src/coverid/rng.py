"""Named random substreams derived from one master seed.

Every source of randomness in the package (weight init, epoch shuffling,
dropout masks, pair sampling, corpus synthesis) pulls from its own
substream so that adding draws to one consumer never perturbs another.
"""

import hashlib

import numpy as np


def substream(seed: int, name: str) -> np.random.Generator:
    """Return a generator for the (seed, name) substream.

    The mapping is stable across platforms and numpy versions that keep
    the PCG64 bit stream stable.
    """
    tag = int.from_bytes(hashlib.sha256(name.encode("utf-8")).digest()[:8], "little")
    return np.random.default_rng(np.random.SeedSequence((int(seed), tag)))
