"""Per-trial and per-code random generators.

Every generator is a PCG64 seeded from a SeedSequence over
(master seed, stream, ...indices), so a trial's randomness depends only on
its coordinates and never on which worker runs it or in which order.
"""

import numpy as np

CODE_STREAM = 0
TRIAL_STREAM = 1


def trial_generator(
    master_seed: int, delta: int, code_index: int, trial_index: int
) -> np.random.Generator:
    seq = np.random.SeedSequence([master_seed, TRIAL_STREAM, delta, code_index, trial_index])
    return np.random.Generator(np.random.PCG64(seq))


def code_generator(master_seed: int, code_index: int) -> np.random.Generator:
    seq = np.random.SeedSequence([master_seed, CODE_STREAM, code_index])
    return np.random.Generator(np.random.PCG64(seq))
