# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np

from ..errors import InvalidParameter

_MAX_SEED = 2**64


class RngSeed:
    """Deterministic random source shared by every stochastic step

    :param int seed: 64-bit unsigned seed

    Each consumer asks for a generator keyed by a fixed tuple of integers, so two runs with the
    same seed draw the same numbers whatever the order in which the steps are executed.

    .. code-block:: python

        rng = RngSeed(7)
        shuffle = rng.generator(3, 0).permutation(10)  # epoch 3, stream 0
    """

    def __init__(self, seed: int):
        if isinstance(seed, RngSeed):
            seed = seed.seed
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or not 0 <= seed < _MAX_SEED:
            raise InvalidParameter(f"Seed must be an integer in range 0 to 2**64-1, got {seed!r}")
        self._seed = int(seed)

    @property
    def seed(self) -> int:
        return self._seed

    def generator(self, *keys: int) -> np.random.Generator:
        """Return a fresh generator for the stream identified by ``keys``"""
        return np.random.default_rng(np.random.SeedSequence([self._seed, *[int(k) for k in keys]]))

    def derive(self, *keys: int) -> "RngSeed":
        """Return a sub-seed for the stream identified by ``keys``"""
        state = np.random.SeedSequence([self._seed, *[int(k) for k in keys]]).generate_state(1, np.uint64)
        return RngSeed(int(state[0]))

    def __eq__(self, other) -> bool:
        return isinstance(other, RngSeed) and other._seed == self._seed

    def __hash__(self) -> int:
        return hash(self._seed)

    def __repr__(self) -> str:
        return f"RngSeed({self._seed})"


def as_rng(rng) -> np.random.Generator:
    """Accept a :py:class:`RngSeed`, an ``int`` seed or a numpy generator"""
    if isinstance(rng, np.random.Generator):
        return rng
    return RngSeed(rng).generator()
