"""Fault-injection campaigns over the detection schemes.

Three strategies:

* ``exhaustive-sheet``: every weight-k flip set inside one 320-bit sheet
  (a fixed x; 5 lanes by 64 columns).  Detectability never couples
  distinct sheets, so per-sheet enumeration plus composition covers the
  global picture at a fraction of the cost.
* ``exhaustive-global``: every weight-k flip set over all 1600 state
  bits.  Supported for k <= 3; the triple space (681 million patterns)
  sits above the default pattern budget and needs it raised explicitly.
* ``random``: seeded uniform samples of weight-k flip sets, with a
  Wilson 95% interval on the detection rate.

Campaigns over the plain state register are evaluated through the parity
arithmetic of the shadows (XOR of per-position lane/column masks), which
agrees with a full engine run by construction and is cross-checked
against one in the test suite.  Campaigns whose scope includes shadow
registers run each trial through the engine, since only the full run can
tell a false alarm from real corruption.

Work is split into fixed-size chunks processed in a deterministic order,
so results are identical for any worker count.  The worker count comes
from the CROSSPARITY_WORKERS environment variable, defaulting to the
available parallelism.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .engine import UNROLL_FACTORS
from .faults import FaultPattern, FaultTarget, InjectionSchedule, inject_and_run
from .fd import SCHEMES, SHADOW_WIDTHS, detectability_predicate
from .keccak import NUM_ROUNDS

WORKERS_ENV = "CROSSPARITY_WORKERS"
DEFAULT_PATTERN_BUDGET = 500_000_000
MAX_WITNESSES = 16

STRATEGIES = ("exhaustive-sheet", "exhaustive-global", "random")

# chunk widths; fixed so that chunk boundaries never depend on the worker
# count (determinism) while staying coarse enough to amortise overhead
_CHUNK_A_SHEET = 40        # first-index range per chunk, k = 3
_CHUNK_PAIRS_SHEET = 4096  # pair-prefix range per chunk, k = 4
_CHUNK_A_GLOBAL = 50
_CHUNK_MC = 1 << 16        # Monte Carlo trials per chunk

_FULLSIM_MODE = "sha3-256"
_FULLSIM_MESSAGE = b"engine-level fault campaign"


class BudgetExceededError(RuntimeError):
    """Raised when a campaign would evaluate more patterns than allowed."""

    def __init__(self, needed: int, budget: int):
        super().__init__(
            f"campaign needs {needed} patterns, budget is {budget}; "
            "raise max_patterns to run it anyway")
        self.needed = needed
        self.budget = budget


@dataclass(frozen=True)
class CampaignSpec:
    scheme: str
    k: int
    strategy: str
    trials: int | None = None
    seed: int = 0
    unroll: int = 1
    sheet: int = 0
    scope: tuple[str, ...] = ("state",)
    max_patterns: int = DEFAULT_PATTERN_BUDGET

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.unroll not in UNROLL_FACTORS:
            raise ValueError(f"unroll must be one of {UNROLL_FACTORS}")
        if self.strategy == "random":
            if self.trials is None or self.trials < 1:
                raise ValueError("random strategy needs a positive trial count")
        elif self.trials is not None:
            raise ValueError("trials only apply to the random strategy")
        if not 0 <= self.sheet < 5:
            raise ValueError("sheet index must be 0..4")
        for reg in self.scope:
            if reg != "state" and reg not in SHADOW_WIDTHS:
                raise ValueError(f"unknown register {reg!r} in scope")
        if not self.scope:
            raise ValueError("scope must name at least one register")
        if self.scheme == "c-plane" and set(self.scope) & {"f_prime", "cf_prime"}:
            raise ValueError("f_prime/cf_prime only exist under z-sheet")
        if self.scope != ("state",) and self.strategy != "random":
            raise ValueError("shadow-register scopes require the random strategy")


@dataclass
class CampaignReport:
    scheme: str
    unroll: int
    k: int
    strategy: str
    total: int
    detected: int
    undetected: int
    spurious: int
    rate: float
    ci_low: float
    ci_high: float
    seed: int
    witnesses: list = field(default_factory=list)
    sheet: int | None = None
    scope: tuple[str, ...] = ("state",)
    wall_time: float = 0.0

    def to_record(self) -> dict:
        return {
            "scheme": self.scheme,
            "unroll": self.unroll,
            "k": self.k,
            "strategy": self.strategy,
            "total": self.total,
            "detected": self.detected,
            "undetected": self.undetected,
            "spurious": self.spurious,
            "rate": self.rate,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "seed": self.seed,
            "witnesses": [[[reg, int(bit)] for reg, bit in w] for w in self.witnesses],
            "sheet": self.sheet,
            "scope": list(self.scope),
            "wall_time_s": self.wall_time,
        }


@dataclass(frozen=True)
class CensusResult:
    k: int
    scheme: str
    count: int
    fraction: float
    witnesses: list


@dataclass(frozen=True)
class MonteCarloResult:
    total: int
    detected: int
    undetected: int
    rate: float
    ci_low: float
    ci_high: float
    witnesses: list


def _wilson_interval(successes: int, total: int, z: float = 1.959963984540054):
    if total == 0:
        return 0.0, 1.0
    p = successes / total
    denom = 1 + z * z / total
    centre = p + z * z / (2 * total)
    spread = z * ((p * (1 - p) + z * z / (4 * total)) / total) ** 0.5
    lo = max(0.0, (centre - spread) / denom)
    hi = min(1.0, (centre + spread) / denom)
    # The bounds are exact at the endpoints; keep them there despite
    # floating-point rounding.
    if successes == 0:
        lo = 0.0
    if successes == total:
        hi = 1.0
    return lo, hi


def _worker_count(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _map_chunks(fn, tasks, workers):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


# ----------------------------------------------------------------------
# mask tables for the parity arithmetic

@lru_cache(maxsize=1)
def _sheet_masks():
    p = np.arange(320)
    lane = (1 << (p // 64)).astype(np.uint8)          # one-hot lane y
    col = np.left_shift(np.uint64(1), (p % 64).astype(np.uint64))  # one-hot column z
    return lane, col


@lru_cache(maxsize=1)
def _sheet_pairs():
    lane, col = _sheet_masks()
    a, b = np.triu_indices(320, 1)
    a = a.astype(np.int32)
    b = b.astype(np.int32)
    start = np.zeros(321, dtype=np.int64)
    start[1:] = np.cumsum(319 - np.arange(320))
    return a, b, lane[a] ^ lane[b], col[a] ^ col[b], start


@lru_cache(maxsize=1)
def _global_masks():
    p = np.arange(1600)
    lane = (1 << (p // 64)).astype(np.uint32)          # one-hot lane index
    colw = np.zeros((5, 1600), dtype=np.uint64)        # one-hot column, plane per x
    x = (p // 64) % 5
    for i in range(5):
        sel = x == i
        colw[i, sel] = np.left_shift(np.uint64(1), (p[sel] % 64).astype(np.uint64))
    return lane, colw


@lru_cache(maxsize=1)
def _global_pairs():
    lane, colw = _global_masks()
    a, b = np.triu_indices(1600, 1)
    a = a.astype(np.int32)
    b = b.astype(np.int32)
    start = np.zeros(1601, dtype=np.int64)
    start[1:] = np.cumsum(1599 - np.arange(1600))
    return a, b, lane[a] ^ lane[b], colw[:, a] ^ colw[:, b], start


def _sheet_bit_to_state(sheet: int, pos: int) -> int:
    y, z = divmod(pos, 64)
    return 64 * (5 * y + sheet) + z


def _witness(bits) -> tuple:
    return tuple(("state", int(b)) for b in sorted(bits))


# ----------------------------------------------------------------------
# chunk workers (top level so they pickle)

def _sheet_chunk(args):
    """Evaluate one chunk of the per-sheet enumeration.

    Returns (patterns evaluated, undetected count, first undetected
    patterns as sheet-local position tuples, in enumeration order).
    """
    scheme, k, lo, hi = args
    lane, col = _sheet_masks()
    zsheet = scheme == "z-sheet"
    evaluated = 0
    undetected = 0
    witnesses = []

    def eval_block(und, positions_of):
        nonlocal undetected
        n = int(und.sum())
        undetected += n
        if n and len(witnesses) < MAX_WITNESSES:
            for i in np.nonzero(und)[0][:MAX_WITNESSES - len(witnesses)]:
                witnesses.append(positions_of(int(i)))

    if k == 1:
        sl = slice(lo, hi)
        und = col[sl] == 0
        if zsheet:
            und &= lane[sl] == 0
        evaluated = hi - lo
        eval_block(und, lambda i: (lo + i,))
    elif k == 2:
        a, b, plm, pcm, _ = _sheet_pairs()
        sl = slice(lo, hi)
        und = pcm[sl] == 0
        if zsheet:
            und &= plm[sl] == 0
        evaluated = hi - lo
        eval_block(und, lambda i: (int(a[lo + i]), int(b[lo + i])))
    elif k == 3:
        a, b, plm, pcm, start = _sheet_pairs()
        for first in range(lo, hi):
            s = int(start[first + 1])
            und = (pcm[s:] ^ col[first]) == 0
            if zsheet:
                und &= (plm[s:] ^ lane[first]) == 0
            evaluated += pcm.shape[0] - s
            eval_block(und, lambda i, f=first, s=s: (f, int(a[s + i]), int(b[s + i])))
    elif k == 4:
        a, b, plm, pcm, start = _sheet_pairs()
        for p in range(lo, hi):
            second = int(b[p])
            s = int(start[second + 1])
            und = pcm[s:] == pcm[p]
            if zsheet:
                und &= plm[s:] == plm[p]
            evaluated += pcm.shape[0] - s
            eval_block(und, lambda i, p=p, s=s: (int(a[p]), int(b[p]),
                                                 int(a[s + i]), int(b[s + i])))
    else:
        raise ValueError("per-sheet enumeration supports k <= 4")
    return evaluated, undetected, witnesses


def _global_chunk(args):
    scheme, k, lo, hi = args
    lane, colw = _global_masks()
    zsheet = scheme == "z-sheet"
    evaluated = 0
    undetected = 0
    witnesses = []

    def eval_block(und, positions_of):
        nonlocal undetected
        n = int(und.sum())
        undetected += n
        if n and len(witnesses) < MAX_WITNESSES:
            for i in np.nonzero(und)[0][:MAX_WITNESSES - len(witnesses)]:
                witnesses.append(positions_of(int(i)))

    if k == 1:
        sl = slice(lo, hi)
        und = (colw[:, sl] == 0).all(axis=0)
        if zsheet:
            und &= lane[sl] == 0
        evaluated = hi - lo
        eval_block(und, lambda i: (lo + i,))
    elif k == 2:
        a, b, plm, pcw, _ = _global_pairs()
        sl = slice(lo, hi)
        und = (pcw[:, sl] == 0).all(axis=0)
        if zsheet:
            und &= plm[sl] == 0
        evaluated = hi - lo
        eval_block(und, lambda i: (int(a[lo + i]), int(b[lo + i])))
    elif k == 3:
        a, b, plm, pcw, start = _global_pairs()
        for first in range(lo, hi):
            s = int(start[first + 1])
            und = (pcw[:, s:] ==
                   colw[:, first][:, np.newaxis]).all(axis=0)
            if zsheet:
                und &= (plm[s:] ^ lane[first]) == 0
            evaluated += plm.shape[0] - s
            eval_block(und, lambda i, f=first, s=s: (f, int(a[s + i]), int(b[s + i])))
    else:
        raise ValueError("global enumeration supports k <= 3")
    return evaluated, undetected, witnesses


def _sample_distinct(rng, n_rows, k, space):
    """(n_rows, k) arrays of distinct draws from range(space)."""
    arr = rng.integers(0, space, size=(n_rows, k), dtype=np.int32)
    while True:
        srt = np.sort(arr, axis=1)
        bad = (srt[:, 1:] == srt[:, :-1]).any(axis=1)
        if not bad.any():
            return arr
        arr[bad] = rng.integers(0, space, size=(int(bad.sum()), k), dtype=np.int32)


def _rows_all_even(mat):
    """Row verdicts: does every value in the row occur an even number of
    times?  With distinct draws this is exactly the column/lane parity
    test.  Sorting pairs equal values next to each other, so the row is
    all-even iff consecutive disjoint pairs match (impossible for odd k).
    """
    n, k = mat.shape
    if k % 2:
        return np.zeros(n, dtype=bool)
    s = np.sort(mat, axis=1)
    return (s[:, 0::2] == s[:, 1::2]).all(axis=1)


def _mc_chunk(args):
    scheme, k, seed, chunk_index, n = args
    rng = np.random.default_rng([seed, chunk_index])
    arr = _sample_distinct(rng, n, k, 1600)
    cols = (arr // 64 % 5) * 64 + arr % 64
    und = _rows_all_even(cols)
    if scheme == "z-sheet":
        und &= _rows_all_even(arr // 64)
    witnesses = [tuple(int(v) for v in sorted(arr[i]))
                 for i in np.nonzero(und)[0][:MAX_WITNESSES]]
    return n, int(und.sum()), witnesses


# ----------------------------------------------------------------------
# strategy drivers

def _chunk_ranges(total: int, width: int):
    return [(lo, min(lo + width, total)) for lo in range(0, total, width)]


def _run_exhaustive(spec: CampaignSpec, workers: int) -> CampaignReport:
    per_sheet = spec.strategy == "exhaustive-sheet"
    space = 320 if per_sheet else 1600
    if per_sheet and spec.k > 4:
        raise ValueError("per-sheet enumeration supports k <= 4")
    if not per_sheet and spec.k > 3:
        raise ValueError("global enumeration supports k <= 3")
    total = comb(space, spec.k)
    if total > spec.max_patterns:
        raise BudgetExceededError(total, spec.max_patterns)

    if spec.k == 1:
        tasks = [(spec.scheme, 1, 0, space)]
    elif spec.k == 2:
        tasks = [(spec.scheme, 2, 0, comb(space, 2))]
    elif spec.k == 3:
        width = _CHUNK_A_SHEET if per_sheet else _CHUNK_A_GLOBAL
        tasks = [(spec.scheme, 3, lo, hi) for lo, hi in _chunk_ranges(space - 2, width)]
    else:
        tasks = [(spec.scheme, 4, lo, hi)
                 for lo, hi in _chunk_ranges(comb(space, 2), _CHUNK_PAIRS_SHEET)]

    fn = _sheet_chunk if per_sheet else _global_chunk
    results = _map_chunks(fn, tasks, workers)

    evaluated = sum(r[0] for r in results)
    undetected = sum(r[1] for r in results)
    if evaluated != total:
        raise AssertionError(f"enumeration covered {evaluated} of {total} patterns")
    witnesses = []
    for r in results:
        for pat in r[2]:
            if len(witnesses) >= MAX_WITNESSES:
                break
            bits = [_sheet_bit_to_state(spec.sheet, p) for p in pat] if per_sheet \
                else list(pat)
            witnesses.append(_witness(bits))
    detected = total - undetected
    rate = detected / total
    return CampaignReport(
        scheme=spec.scheme, unroll=spec.unroll, k=spec.k, strategy=spec.strategy,
        total=total, detected=detected, undetected=undetected, spurious=0,
        rate=rate, ci_low=rate, ci_high=rate, seed=spec.seed,
        witnesses=witnesses, sheet=spec.sheet if per_sheet else None,
        scope=spec.scope)


def _run_random_state(spec: CampaignSpec, workers: int) -> CampaignReport:
    mc = _mc_rate(spec.k, spec.trials, spec.seed, spec.scheme, workers)
    return CampaignReport(
        scheme=spec.scheme, unroll=spec.unroll, k=spec.k, strategy="random",
        total=mc.total, detected=mc.detected, undetected=mc.undetected, spurious=0,
        rate=mc.rate, ci_low=mc.ci_low, ci_high=mc.ci_high, seed=spec.seed,
        witnesses=mc.witnesses, sheet=None, scope=spec.scope)


def _scope_space(scheme: str, scope) -> list:
    order = ("state", "c_prime", "f_prime", "cf_prime")
    widths = {"state": 1600, **SHADOW_WIDTHS}
    space = []
    for reg in order:
        if reg in scope:
            space.extend((reg, bit) for bit in range(widths[reg]))
    return space


def _run_random_fullsim(spec: CampaignSpec, workers: int) -> CampaignReport:
    """Engine-level campaign; needed once shadow registers are in scope."""
    del workers  # trial counts here are small; keep the runs in order
    space = _scope_space(spec.scheme, spec.scope)
    rng = np.random.default_rng([spec.seed, len(space)])
    slots = NUM_ROUNDS // spec.unroll
    from .engine import hash_message
    golden = hash_message(_FULLSIM_MODE, _FULLSIM_MESSAGE)
    counts = {"detected": 0, "silent-corruption": 0, "benign": 0, "spurious-error": 0}
    witnesses = []
    for _ in range(spec.trials):
        picks = rng.choice(len(space), size=spec.k, replace=False)
        pattern = FaultPattern(tuple(FaultTarget(*space[i]) for i in sorted(picks)))
        schedule = InjectionSchedule(0, int(rng.integers(slots)))
        res = inject_and_run(_FULLSIM_MODE, _FULLSIM_MESSAGE, pattern, schedule,
                             scheme=spec.scheme, unroll=spec.unroll, golden=golden)
        counts[res.outcome] += 1
        if res.outcome == "silent-corruption" and len(witnesses) < MAX_WITNESSES:
            witnesses.append(tuple((t.register, t.bit) for t in pattern.targets))
    detected = counts["detected"]
    rate = detected / spec.trials
    lo, hi = _wilson_interval(detected, spec.trials)
    return CampaignReport(
        scheme=spec.scheme, unroll=spec.unroll, k=spec.k, strategy="random",
        total=spec.trials, detected=detected, undetected=counts["silent-corruption"],
        spurious=counts["spurious-error"], rate=rate, ci_low=lo, ci_high=hi,
        seed=spec.seed, witnesses=witnesses, sheet=None, scope=spec.scope)


def run_campaign(spec: CampaignSpec, workers: int | None = None) -> CampaignReport:
    """Run one campaign to completion and report the tallies.

    Shadow-register scopes run every trial through the engine against the
    digest of a fixed reference message; state-only campaigns evaluate
    the parity arithmetic directly.
    """
    w = _worker_count(workers)
    start = time.perf_counter()
    if spec.strategy in ("exhaustive-sheet", "exhaustive-global"):
        report = _run_exhaustive(spec, w)
    else:
        if spec.trials > spec.max_patterns:
            raise BudgetExceededError(spec.trials, spec.max_patterns)
        if spec.scope == ("state",):
            report = _run_random_state(spec, w)
        else:
            report = _run_random_fullsim(spec, w)
    report.wall_time = time.perf_counter() - start
    return report


# ----------------------------------------------------------------------
# exact census and Monte Carlo

def _sheet_undetected_by_weight(max_w: int) -> list[int]:
    """Count of weight-w flip sets inside one sheet with every lane and
    every column even, via a column-by-column transfer over the 2^5 lane
    parity states.  Exact integers.
    """
    even_subsets = [(bin(m).count("1"), m) for m in range(32)
                    if bin(m).count("1") % 2 == 0]
    dp = [[0] * 32 for _ in range(max_w + 1)]
    dp[0][0] = 1
    for _ in range(64):
        ndp = [[0] * 32 for _ in range(max_w + 1)]
        for w in range(max_w + 1):
            row = dp[w]
            for r in range(32):
                v = row[r]
                if not v:
                    continue
                for j, m in even_subsets:
                    if w + j <= max_w:
                        ndp[w + j][r ^ m] += v
        dp = ndp
    return [dp[w][0] for w in range(max_w + 1)]


def _poly_mul(a, b, trunc):
    out = [0] * trunc
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                if i + j < trunc and bv:
                    out[i + j] += av * bv
    return out


def _poly_pow(p, n, trunc):
    result = [1] + [0] * (trunc - 1)
    base = list(p[:trunc]) + [0] * max(0, trunc - len(p))
    while n:
        if n & 1:
            result = _poly_mul(result, base, trunc)
        base = _poly_mul(base, base, trunc)
        n >>= 1
    return result


def _census_witnesses(k: int, scheme: str, limit: int = MAX_WITNESSES) -> list:
    """Build example undetected patterns for the weights where they exist."""
    out = []
    if scheme == "c-plane":
        if k % 2 == 0:
            # pairs of flips sharing a column, one pair per column of sheet 0
            from itertools import combinations
            for cols in combinations(range(64), k // 2):
                bits = []
                for z in cols:
                    bits += [64 * 0 + z, 64 * 5 + z]   # lanes (0,0) and (0,1)
                out.append(bits)
                if len(out) >= limit:
                    break
    elif k == 4:
        from itertools import combinations
        for (y1, y2), (z1, z2) in (
                (ly, cz)
                for ly in combinations(range(5), 2)
                for cz in combinations(range(64), 2)):
            out.append([64 * 5 * y + z for y in (y1, y2) for z in (z1, z2)])
            if len(out) >= limit:
                break
    elif k == 6:
        from itertools import combinations
        for (y1, y2, y3), (z1, z2, z3) in (
                (ly, cz)
                for ly in combinations(range(5), 3)
                for cz in combinations(range(64), 3)):
            cells = [(y1, z1), (y2, z1), (y2, z2), (y3, z2), (y3, z3), (y1, z3)]
            out.append([64 * 5 * y + z for y, z in cells])
            if len(out) >= limit:
                break
    for bits in out:
        assert not detectability_predicate(bits, scheme)
    return [_witness(bits) for bits in out]


def undetected_census(k: int, scheme: str) -> CensusResult:
    """Exact number of weight-k state flip sets the scheme cannot see."""
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    if not 1 <= k <= 6:
        raise ValueError("census supports k = 1..6")
    trunc = k + 1
    if scheme == "c-plane":
        # per column: even-sized cell subsets, 1 + 10 t^2 + 5 t^4
        per_column = [1, 0, 10, 0, 5]
        counts = _poly_pow(per_column, 320, trunc)
    else:
        per_sheet = _sheet_undetected_by_weight(k)
        counts = _poly_pow(per_sheet, 5, trunc)
    count = counts[k]
    return CensusResult(k=k, scheme=scheme, count=count,
                        fraction=count / comb(1600, k),
                        witnesses=_census_witnesses(k, scheme) if count else [])


def _mc_rate(k: int, trials: int, seed: int, scheme: str,
             workers: int | None) -> MonteCarloResult:
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    if k < 1 or trials < 1:
        raise ValueError("k and trials must be positive")
    w = _worker_count(workers)
    tasks = [(scheme, k, seed, idx, min(_CHUNK_MC, trials - lo))
             for idx, lo in enumerate(range(0, trials, _CHUNK_MC))]
    results = _map_chunks(_mc_chunk, tasks, w)
    total = sum(r[0] for r in results)
    undetected = sum(r[1] for r in results)
    witnesses = []
    for r in results:
        for bits in r[2]:
            if len(witnesses) >= MAX_WITNESSES:
                break
            witnesses.append(_witness(bits))
    detected = total - undetected
    rate = detected / total
    lo, hi = _wilson_interval(detected, total)
    return MonteCarloResult(total=total, detected=detected, undetected=undetected,
                            rate=rate, ci_low=lo, ci_high=hi, witnesses=witnesses)


def monte_carlo_rate(k: int, trials: int, seed: int, scheme: str = "z-sheet",
                     workers: int | None = None) -> MonteCarloResult:
    """Detection rate over seeded uniform weight-k flip sets of the state.

    Meant for statistical estimates, so the trial count has a floor; small
    draws go through run_campaign with the random strategy instead.
    """
    if trials < 10_000:
        raise ValueError("monte_carlo_rate needs at least 10^4 trials")
    return _mc_rate(k, trials, seed, scheme, workers)
