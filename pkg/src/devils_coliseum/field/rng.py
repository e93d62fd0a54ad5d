"""Counter-based random numbers keyed by (seed, pixel, sample, step).

Every uniform is a pure function of its counter, so a sample's word does not
depend on which worker computes it or in which order.
"""

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX_A = np.uint64(0xBF58476D1CE4E5B9)
_MIX_B = np.uint64(0x94D049BB133111EB)
_SAMPLE_KEY = np.uint64(0xD1B54A32D192ED03)
_MASK64 = (1 << 64) - 1


def mix64(x: np.ndarray) -> np.ndarray:
    """SplitMix64 finaliser on a uint64 array (wrapping arithmetic)."""
    x = np.asarray(x, dtype=np.uint64)
    x = x ^ (x >> np.uint64(30))
    x = x * _MIX_A
    x = x ^ (x >> np.uint64(27))
    x = x * _MIX_B
    return x ^ (x >> np.uint64(31))


def stream_keys(seed: int, pixels: np.ndarray, samples: np.ndarray) -> np.ndarray:
    """One 64-bit key per (pixel, sample) pair, derived from the run seed."""
    base = np.uint64(int(seed) & _MASK64)
    pixels = np.asarray(pixels, dtype=np.uint64)
    samples = np.asarray(samples, dtype=np.uint64)
    key = mix64(base + (pixels + np.uint64(1)) * _GOLDEN)
    return mix64(key ^ ((samples + np.uint64(1)) * _SAMPLE_KEY))


def uniforms(keys: np.ndarray, step: int) -> np.ndarray:
    """Uniform doubles in [0, 1) for the given step of each stream."""
    offset = np.uint64(((step + 1) * int(_GOLDEN)) & _MASK64)
    bits = mix64(np.asarray(keys, dtype=np.uint64) + offset)
    return (bits >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))
