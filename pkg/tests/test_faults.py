"""Tests for the fault-injection harness.

Each test runs real hashes with bit flips applied at commit windows and
checks the outcome classification against the fault-free digest.
"""

import random

import pytest

from crossparity.faults import (
    OUTCOMES,
    REGISTER_WIDTHS,
    FaultPattern,
    FaultTarget,
    InjectionSchedule,
    inject_and_run,
)
from crossparity.keccak import StateArray

idx = StateArray.linear_index
MSG = b"fault harness message"


def state_pattern(*bits):
    return FaultPattern.from_state_bits(bits)


# ----------------------------------------------------------------------
# data types

def test_fault_target_validation():
    FaultTarget("state", 1599)
    FaultTarget("c_prime", 319)
    FaultTarget("f_prime", 24)
    FaultTarget("cf_prime", 4)
    with pytest.raises(ValueError):
        FaultTarget("state", 1600)
    with pytest.raises(ValueError):
        FaultTarget("rounds", 0)
    with pytest.raises(ValueError):
        FaultTarget("f_prime", -1)


def test_register_widths():
    assert REGISTER_WIDTHS == {"state": 1600, "c_prime": 320,
                               "f_prime": 25, "cf_prime": 5}


def test_pattern_sorted_and_distinct():
    p = FaultPattern((FaultTarget("state", 9), FaultTarget("c_prime", 2),
                      FaultTarget("state", 3)))
    assert p.targets == (FaultTarget("c_prime", 2), FaultTarget("state", 3),
                         FaultTarget("state", 9))
    assert p.weight == 3
    assert p.state_bits == (3, 9)
    assert not p.state_only
    with pytest.raises(ValueError):
        FaultPattern((FaultTarget("state", 1), FaultTarget("state", 1)))


def test_pattern_from_state_bits():
    p = state_pattern(5, 2, 900)
    assert p.state_only
    assert p.state_bits == (2, 5, 900)


def test_schedule_validation():
    InjectionSchedule(0, 23).validate_for_unroll(1)
    InjectionSchedule(0, 0).validate_for_unroll(24)
    with pytest.raises(ValueError):
        InjectionSchedule(0, 12).validate_for_unroll(24)
    with pytest.raises(ValueError):
        InjectionSchedule(0, 24).validate_for_unroll(1)
    with pytest.raises(ValueError):
        InjectionSchedule(-1, 0)
    with pytest.raises(ValueError):
        InjectionSchedule(0, -1)


def test_slot_zero_exists_at_every_unroll():
    for unroll in (1, 2, 4, 6, 8, 12, 24):
        InjectionSchedule(0, 0).validate_for_unroll(unroll)


# ----------------------------------------------------------------------
# outcome classification

def test_single_flip_detected():
    res = inject_and_run("sha3-256", MSG, state_pattern(777),
                         InjectionSchedule(0, 5))
    assert res.outcome == "detected"
    assert res.error_raised and res.masked
    assert res.digest != res.golden
    assert res.emitted == bytes(32)


def test_rectangle_silent_under_z_sheet():
    rect = state_pattern(idx(2, 1, 5), idx(2, 1, 9), idx(2, 3, 5), idx(2, 3, 9))
    res = inject_and_run("sha3-256", MSG, rect, InjectionSchedule(0, 0))
    assert res.outcome == "silent-corruption"
    assert not res.error_raised and not res.masked
    assert res.digest != res.golden
    assert res.emitted == res.digest


def test_column_pair_splits_schemes():
    pair = state_pattern(idx(3, 0, 20), idx(3, 4, 20))
    silent = inject_and_run("sha3-256", MSG, pair, InjectionSchedule(0, 3),
                            scheme="c-plane")
    assert silent.outcome == "silent-corruption"
    caught = inject_and_run("sha3-256", MSG, pair, InjectionSchedule(0, 3),
                            scheme="z-sheet")
    assert caught.outcome == "detected"


def test_shadow_flip_is_spurious():
    for register in ("c_prime", "f_prime", "cf_prime"):
        p = FaultPattern((FaultTarget(register, 1),))
        res = inject_and_run("sha3-256", MSG, p, InjectionSchedule(0, 7))
        assert res.outcome == "spurious-error", register
        assert res.error_raised and res.masked
        assert res.digest == res.golden
        assert res.emitted == bytes(32)


def test_empty_pattern_is_benign():
    res = inject_and_run("sha3-256", MSG, FaultPattern(()), InjectionSchedule(0, 0))
    assert res.outcome == "benign"
    assert res.emitted == res.golden


def test_outcomes_tuple():
    assert set(OUTCOMES) == {"detected", "silent-corruption", "benign",
                             "spurious-error"}


# ----------------------------------------------------------------------
# scheduling

def test_single_flip_detected_at_every_slot():
    for slot in range(24):
        res = inject_and_run("sha3-256", b"slots", state_pattern(40 * slot + 1),
                             InjectionSchedule(0, slot))
        assert res.outcome == "detected", slot


def test_unfired_schedule_raises():
    with pytest.raises(ValueError):
        inject_and_run("sha3-256", MSG, state_pattern(1), InjectionSchedule(9, 0))
    with pytest.raises(ValueError):
        inject_and_run("sha3-256", MSG, state_pattern(1), InjectionSchedule(0, 30))


def test_detect_verdict_independent_of_schedule():
    # Whether a state pattern trips the parity check is a property of the
    # flip set, not of where in the run it lands.  (The further split of
    # unflagged runs into corrupted vs benign does depend on how many
    # rounds remain to spread the damage into the truncated digest.)
    rng = random.Random(21)
    msg = bytes(rng.randrange(256) for _ in range(300))  # 3 sha3-256 blocks
    golden = None
    for _ in range(6):
        k = rng.randrange(1, 5)
        pattern = state_pattern(*rng.sample(range(1600), k))
        verdicts = set()
        for _ in range(3):
            sched = InjectionSchedule(rng.randrange(3), rng.randrange(24))
            res = inject_and_run("sha3-256", msg, pattern, sched)
            verdicts.add(res.error_raised)
            golden = res.golden
        assert len(verdicts) == 1, (pattern, verdicts)
    assert golden is not None


def test_outcome_independent_of_unroll():
    rng = random.Random(22)
    for _ in range(4):
        pattern = state_pattern(*rng.sample(range(1600), rng.randrange(1, 5)))
        outcomes = {inject_and_run("sha3-256", MSG, pattern,
                                   InjectionSchedule(0, 0), unroll=u).outcome
                    for u in (1, 4, 24)}
        assert len(outcomes) == 1


def test_explicit_golden_matches_derived():
    from crossparity.engine import hash_message
    golden = hash_message("sha3-256", MSG)
    a = inject_and_run("sha3-256", MSG, state_pattern(10), InjectionSchedule(0, 1))
    b = inject_and_run("sha3-256", MSG, state_pattern(10), InjectionSchedule(0, 1),
                       golden=golden)
    assert (a.outcome, a.digest, a.golden) == (b.outcome, b.digest, b.golden)


def test_xof_injection_needs_out_len():
    res = inject_and_run("shake128", MSG, state_pattern(4),
                         InjectionSchedule(0, 2), out_len=16)
    assert res.outcome == "detected"
    assert len(res.golden) == 16
    with pytest.raises(ValueError):
        inject_and_run("shake128", MSG, state_pattern(4), InjectionSchedule(0, 2))
