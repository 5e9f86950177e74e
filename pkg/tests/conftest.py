"""Shared strategies and helpers for the test suite."""

import random
from math import comb  # noqa: F401  (re-exported for tests)

from hypothesis import strategies as st

from wickalg import CoeffTensor, Polynomial, Scalar, make_preset, rational

# -- small exact scalars -------------------------------------------------------

_small_rat = st.builds(
    lambda n, d: rational(n, d),
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)

scalars = st.builds(Scalar, _small_rat, _small_rat)
real_scalars = st.builds(Scalar, _small_rat)
nonzero_scalars = scalars.filter(bool)


def letters(d: int):
    """Signed letter codes for d generators."""
    return st.integers(min_value=1, max_value=d).flatmap(
        lambda i: st.sampled_from([i, -i])
    )


def words(d: int, max_len: int = 4):
    return st.lists(letters(d), min_size=0, max_size=max_len).map(tuple)


def polynomials(d: int, max_len: int = 4, max_terms: int = 4):
    return st.dictionaries(
        words(d, max_len), scalars, min_size=0, max_size=max_terms
    ).map(Polynomial)


def gen_words(d: int, max_len: int = 4):
    return st.lists(
        st.integers(min_value=1, max_value=d), min_size=0, max_size=max_len
    ).map(tuple)


def gen_polynomials(d: int, max_len: int = 4, max_terms: int = 4):
    return st.dictionaries(
        gen_words(d, max_len), scalars, min_size=0, max_size=max_terms
    ).map(Polynomial)


# -- sample tensors -----------------------------------------------------------


def sample_tensors() -> list:
    """A spread of small hermitian tensors for property tests."""
    return [
        CoeffTensor(2, {}),
        make_preset("qccr", 2, q="1/2").tensor,
        make_preset("qccr", 2, q="-1/2").tensor,
        make_preset("tlw", 2, q="1/3").tensor,
        make_preset("twisted_ccr", 2, mu="1/2").tensor,
        make_preset("twisted_car", 2, mu="1/2").tensor,
        make_preset("snu2", nu="1/2").tensor,
        make_preset("degenerate", 2).tensor,
    ]


def random_gen_word(rng: random.Random, d: int, length: int) -> tuple:
    return tuple(rng.randrange(1, d + 1) for _ in range(length))
