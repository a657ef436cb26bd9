"""Tests for the shadow parity registers and the detectability predicate.

The predicate (pure counting) and the register-level check (parity
arithmetic on real states) are exercised as two independent routes to the
same verdicts.
"""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossparity.fd import (
    SCHEMES,
    SHADOW_WIDTHS,
    FdConfig,
    FdRegisters,
    detectability_predicate,
    mask_output,
)
from crossparity.engine import Engine
from crossparity.keccak import StateArray, column_sums, lane_sums

idx = StateArray.linear_index


def random_state(seed):
    rng = random.Random(seed)
    return StateArray.from_bytes(bytes(rng.randrange(256) for _ in range(200)))


def taps(sa):
    return column_sums(sa), lane_sums(sa)


# ----------------------------------------------------------------------
# configuration

def test_scheme_validation():
    assert FdConfig("c-plane").has_lane_parity is False
    assert FdConfig("z-sheet").has_lane_parity is True
    with pytest.raises(ValueError):
        FdConfig("row-parity")
    assert SCHEMES == ("c-plane", "z-sheet")


def test_shadow_widths():
    assert SHADOW_WIDTHS == {"c_prime": 320, "f_prime": 25, "cf_prime": 5}


# ----------------------------------------------------------------------
# priming

def test_prime_snapshots_parities():
    sa = random_state(1)
    fd = FdRegisters("z-sheet")
    assert not fd.primed
    fd.prime(sa)
    assert fd.primed
    assert fd.c_prime == list(column_sums(sa).cols)
    assert fd.f_prime == lane_sums(sa).bits


def test_prime_single_bit_state():
    sa = StateArray.zeros().with_flips([idx(1, 2, 9)])
    fd = FdRegisters("z-sheet")
    fd.prime(sa)
    assert fd.c_prime[1] == 1 << 9
    assert sum(v for i, v in enumerate(fd.c_prime) if i != 1) == 0
    assert fd.f_prime == 1 << (1 + 5 * 2)
    assert fd.cf_prime == 1 << 1


def test_cplane_prime_skips_lane_parity():
    sa = random_state(2)
    fd = FdRegisters("c-plane")
    fd.prime(sa)
    assert fd.f_prime == 0 and fd.cf_prime == 0


# ----------------------------------------------------------------------
# check

def test_check_requires_prime():
    fd = FdRegisters("z-sheet")
    c, f = taps(random_state(3))
    with pytest.raises(RuntimeError):
        fd.check(c, f)
    fd.prime(random_state(3))
    fd.invalidate()
    with pytest.raises(RuntimeError):
        fd.check(c, f)


def test_clean_check_passes():
    sa = random_state(4)
    for scheme in SCHEMES:
        fd = FdRegisters(scheme)
        fd.prime(sa)
        assert fd.check(*taps(sa)) is False
        assert fd.error is False


def test_every_single_flip_caught_at_check_level():
    sa = random_state(5)
    for scheme in SCHEMES:
        fd = FdRegisters(scheme)
        caught = 0
        for i in range(1600):
            fd.prime(sa)
            fd.error = False
            caught += fd.check(*taps(sa.with_flips([i])))
        assert caught == 1600


def test_same_column_pair_splits_the_schemes():
    sa = random_state(6)
    flips = [idx(3, 0, 20), idx(3, 4, 20)]
    cp = FdRegisters("c-plane")
    cp.prime(sa)
    assert cp.check(*taps(sa.with_flips(flips))) is False
    zs = FdRegisters("z-sheet")
    zs.prime(sa)
    assert zs.check(*taps(sa.with_flips(flips))) is True


def test_all_same_column_pairs_caught_by_z_sheet():
    sa = random_state(7)
    fd = FdRegisters("z-sheet")
    count = 0
    for x in range(5):
        for z in range(0, 64, 4):
            for y1, y2 in combinations(range(5), 2):
                fd.prime(sa)
                fd.error = False
                count += fd.check(*taps(sa.with_flips([idx(x, y1, z), idx(x, y2, z)])))
    assert count == 5 * 16 * 10


def test_rectangle_escapes_z_sheet_check():
    sa = random_state(8)
    flips = [idx(2, 1, 5), idx(2, 1, 9), idx(2, 3, 5), idx(2, 3, 9)]
    fd = FdRegisters("z-sheet")
    fd.prime(sa)
    assert fd.check(*taps(sa.with_flips(flips))) is False
    assert fd.error is False


def test_error_flag_is_sticky():
    sa = random_state(9)
    fd = FdRegisters("z-sheet")
    fd.prime(sa)
    assert fd.check(*taps(sa.with_flips([0]))) is True
    assert fd.error is True
    fd.prime(sa)
    assert fd.check(*taps(sa)) is False
    assert fd.error is True


# ----------------------------------------------------------------------
# the F' guard

def test_fprime_guard_under_c_plane_rejected():
    fd = FdRegisters("c-plane")
    fd.prime(random_state(10))
    with pytest.raises(RuntimeError):
        fd.check_fprime()


def test_fprime_guard_all_pairs():
    # Flip every pair of F' bits: pairs within one column of the 5x5
    # slice slip past the 5-bit guard, every other pair trips it.
    sa = random_state(11)
    undetected = []
    for b1, b2 in combinations(range(25), 2):
        fd = FdRegisters("z-sheet")
        fd.prime(sa)
        fd.flip("f_prime", b1)
        fd.flip("f_prime", b2)
        if fd.check_fprime():
            undetected.append((b1, b2))
    assert len(undetected) == 5 * 10  # C(5,2) row pairs in each of 5 columns
    assert all(b1 % 5 == b2 % 5 for b1, b2 in undetected)


def test_fprime_single_flip_always_trips_guard():
    sa = random_state(12)
    for b in range(25):
        fd = FdRegisters("z-sheet")
        fd.prime(sa)
        fd.flip("f_prime", b)
        assert fd.check_fprime() is False


def test_shadow_corruption_raises_spurious_error():
    # Any shadow flip makes the next check fire even though the state is
    # untouched; the guarded pair case is covered by the main compare.
    sa = random_state(13)
    for register, width in SHADOW_WIDTHS.items():
        fd = FdRegisters("z-sheet")
        fd.prime(sa)
        fd.flip(register, width // 2)
        assert fd.check(*taps(sa)) is True


def test_flip_validation():
    fd = FdRegisters("z-sheet")
    with pytest.raises(ValueError):
        fd.flip("state", 0)
    with pytest.raises(ValueError):
        fd.flip("c_prime", 320)
    with pytest.raises(ValueError):
        fd.flip("cf_prime", -1)


# ----------------------------------------------------------------------
# output masking

def test_mask_output_latches():
    eng = Engine("sha3-256", fd="z-sheet")
    fd = eng.fd
    mask_output(eng, fd)
    assert eng.masked is False
    fd.error = True
    mask_output(eng, fd)
    assert eng.masked is True
    fd.error = False
    mask_output(eng, fd)
    assert eng.masked is True


# ----------------------------------------------------------------------
# detectability predicate

def test_predicate_single_flips():
    for scheme in SCHEMES:
        assert all(detectability_predicate([i], scheme) for i in range(0, 1600, 7))


def test_predicate_same_column_pair():
    pair = [idx(0, 0, 0), idx(0, 1, 0)]
    assert detectability_predicate(pair, "c-plane") is False
    assert detectability_predicate(pair, "z-sheet") is True


def test_predicate_rectangle():
    rect = [idx(4, 0, 1), idx(4, 0, 60), idx(4, 2, 1), idx(4, 2, 60)]
    assert detectability_predicate(rect, "z-sheet") is False
    assert detectability_predicate(rect, "c-plane") is False


def test_predicate_cross_sheet_column_pairs():
    quad = [idx(0, 1, 7), idx(0, 2, 7), idx(3, 0, 40), idx(3, 4, 40)]
    assert detectability_predicate(quad, "c-plane") is False
    assert detectability_predicate(quad, "z-sheet") is True


def test_predicate_accepts_config_objects():
    assert detectability_predicate([5], FdConfig("c-plane")) is True


def test_predicate_validation():
    with pytest.raises(ValueError):
        detectability_predicate([1, 1], "z-sheet")
    with pytest.raises(ValueError):
        detectability_predicate([1600], "z-sheet")
    with pytest.raises(ValueError):
        detectability_predicate([0], "parity")


@given(st.sets(st.integers(0, 1599), min_size=1, max_size=6),
       st.sampled_from(SCHEMES), st.integers(0, 2**30))
@settings(max_examples=60, deadline=None)
def test_predicate_agrees_with_register_check(bits, scheme, seed):
    # Dual route: the counting argument and the parity arithmetic on a
    # random committed state must reach the same verdict.
    sa = random_state(seed)
    fd = FdRegisters(scheme)
    fd.prime(sa)
    got = fd.check(*taps(sa.with_flips(bits)))
    assert got == detectability_predicate(bits, scheme)


def test_z_sheet_detects_everything_c_plane_does():
    rng = random.Random(14)
    for _ in range(200):
        k = rng.randrange(1, 7)
        bits = rng.sample(range(1600), k)
        if detectability_predicate(bits, "c-plane"):
            assert detectability_predicate(bits, "z-sheet")
