"""Seeded word samplers shared by the CLI property commands and the test
suite.  All randomness goes through an explicit ``random.Random`` so runs
are reproducible bit for bit from the seed."""

from __future__ import annotations

import random

from .braid import Word

_LETTERS = (1, -1, 2, -2)


def random_braid_word(rng: random.Random, max_len: int, min_len: int = 0) -> Word:
    length = rng.randint(min_len, max_len)
    return tuple(rng.choice(_LETTERS) for _ in range(length))


def random_braid_words(
    seed: int, count: int, max_len: int, min_len: int = 0
) -> list[Word]:
    rng = random.Random(seed)
    return [random_braid_word(rng, max_len, min_len) for _ in range(count)]
