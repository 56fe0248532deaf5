import pytest

from tenj.utils.rng import RNG_ALGORITHM, make_rng


def test_reproducible():
    a = make_rng(123).integers(1000, size=8)
    b = make_rng(123).integers(1000, size=8)
    assert list(a) == list(b)
    assert RNG_ALGORITHM == "numpy.PCG64"


def test_full_seed_range():
    make_rng(0)
    make_rng(2**64 - 1)
    with pytest.raises(ValueError):
        make_rng(-1)
    with pytest.raises(ValueError):
        make_rng(2**64)
