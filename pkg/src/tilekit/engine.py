"""Existence, construction and minimal period of t-complement tilings.

Given a finite weighted multiset A with min(A) = 0 and max(A) = d, a
two-sided sequence B satisfies R_{A,B}(n) = t for all n exactly when
every window of d consecutive B-weights steps to the next weight by

    w_A(0) * w_B(n) = t - sum_{a in A, a > 0} w_A(a) * w_B(n - a)

and backward by the mirror relation solving for w_B(n - d).  All
weights of a solution are forced into {0..t}, so the forward map acts
on a finite state space of (t+1)^d windows, each with at most one
successor; valid tilings are exactly the cycles of that map.  The
search decomposes the functional graph once, memoizing dead states, so
the total work is linear in the state count.

The minimal period is computed twice: combinatorially as the minimal
rotation period of the weight word on the cycle, and algebraically by
reducing the generating function of the one-sided sequence to lowest
terms p/q and reading the cyclotomic indices D of q, whose lcm is the
minimal eventual period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .multiset import IntegerMultiset, PeriodicWeightSequence, representation_function
from .numtheory import divisors, lcm_all
from .polynomial import Poly, cyclotomic_part, exact_div, poly_gcd

DEFAULT_BUDGET = 1_000_000
DEFAULT_EPSILON = 0.5

STATUS_OK = "ok"
STATUS_INCONCLUSIVE = "inconclusive-budget"


class IntegrityError(RuntimeError):
    """An algebraic cross-check failed; the inputs were not a valid complement."""


@dataclass(frozen=True)
class TilingReport:
    """Outcome of a tiling analysis for one (A, t) instance."""

    status: str
    exists: bool | None
    witness: PeriodicWeightSequence | None
    minimal_period_combinatorial: int | None
    minimal_period_algebraic: int | None
    cyclotomic_indices: tuple[int, ...] | None
    newman_bound: int
    biro_bound_log: float
    epsilon: float
    diam: int
    t: int
    cycle_count: int | None = None

    @property
    def agreement(self) -> bool | None:
        if self.minimal_period_combinatorial is None:
            return None
        return self.minimal_period_combinatorial == self.minimal_period_algebraic

    def to_json_dict(self) -> dict:
        exists = self.exists
        witness = self.witness
        return {
            "exists": exists,
            "period": self.minimal_period_combinatorial,
            "periodBlock": list(witness.period) if witness else None,
            "preperiod": list(witness.preperiod) if witness else None,
            "newmanBound": str(self.newman_bound),
            "biroBoundLog": self.biro_bound_log,
            "epsilon": self.epsilon,
            "cyclotomicIndices": sorted(self.cyclotomic_indices)
            if self.cyclotomic_indices is not None
            else None,
            "agreement": self.agreement,
            "status": self.status,
        }


def _require_normalized(a: IntegerMultiset) -> int:
    if a.min_support != 0:
        raise ValueError("multiset must be normalized (min support 0)")
    return a.diam()


def step_forward(state: Sequence[int], a: IntegerMultiset, t: int) -> int | None:
    """Next weight w_B(n) from the window (w_B(n-d) .. w_B(n-1)).

    None when the forward relation has no admissible solution (negative,
    non-divisible by w_A(0), or above t).
    """
    d = _require_normalized(a)
    if d < 1:
        raise ValueError("window stepping needs diam(A) >= 1")
    if len(state) != d:
        raise ValueError(f"window length {len(state)} != diam {d}")
    rhs = t
    for i, w in a.items():
        if i:
            rhs -= w * state[d - i]
    if rhs < 0:
        return None
    q, r = divmod(rhs, a.weight(0))
    if r or q > t:
        return None
    return q


def step_backward(state: Sequence[int], a: IntegerMultiset, t: int) -> int | None:
    """Previous weight w_B(i-1) from the window (w_B(i) .. w_B(i+d-1))."""
    d = _require_normalized(a)
    if d < 1:
        raise ValueError("window stepping needs diam(A) >= 1")
    if len(state) != d:
        raise ValueError(f"window length {len(state)} != diam {d}")
    rhs = t
    for i, w in a.items():
        if i != d:
            rhs -= w * state[d - 1 - i]
    if rhs < 0:
        return None
    q, r = divmod(rhs, a.weight(d))
    if r or q > t:
        return None
    return q


def minimal_period(block: Sequence[int]) -> int:
    """Smallest p dividing len(block) with block[i] = block[(i+p) % len]."""
    if not block:
        raise ValueError("empty block")
    n = len(block)
    for p in divisors(n):
        if all(block[i] == block[i % p] for i in range(p, n)):
            return p
    return n


def weight_cap_check(b: PeriodicWeightSequence, t: int) -> bool:
    """True iff every weight of b is <= t (necessary for a t-complement)."""
    return b.max_weight() <= t


def newman_bound(a: IntegerMultiset, t: int) -> int:
    """(t+1)^diam(A): the pigeonhole bound on the period."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    return (t + 1) ** a.diam()


def biro_bound_log(a: IntegerMultiset, epsilon: float = DEFAULT_EPSILON) -> float:
    """(diam(A)+1)^(1/3+epsilon): the asymptotic bound on log(period)."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    return float(a.diam() + 1) ** (1.0 / 3.0 + epsilon)


def gamma_rational_form(b: PeriodicWeightSequence) -> tuple[Poly, Poly]:
    """The generating function of a one-sided sequence in lowest terms.

    Returns coprime integer polynomials (p, q) with

        sum_{n>=0} w_B(n) x^n  =  p(x) / q(x)

    built from preperiod + period/(1 - x^k) and reduced by the full
    Z[x] gcd.  q always divides 1 - x^k, hence q(0) = +-1; the sign is
    fixed so q(0) > 0, matching the 1 - x^k orientation.
    """
    if b.offset < 0:
        raise ValueError("one-sided sequence required (offset >= 0)")
    k = b.period_length
    den = Poly((1,) + (0,) * (k - 1) + (-1,))
    pre = Poly((0,) * b.offset + b.preperiod)
    num = pre * den + Poly(b.period).shift(b.period_start)
    if num.is_zero:
        return Poly.zero(), Poly.one()
    g = poly_gcd(num, den)
    p = exact_div(num, g)
    q = exact_div(den, g)
    if q(0) < 0 or (q(0) == 0 and q.leading < 0):
        p, q = -p, -q
    return p, q


def algebraic_minimal_period(
    a: IntegerMultiset, t: int, b: PeriodicWeightSequence
) -> tuple[int, frozenset[int]]:
    """Minimal eventual period of b via the cyclotomic indices of q.

    Reduces the one-sided generating function to p/q, factors q into
    cyclotomic polynomials (the cofactor must be constant, else the
    (A, t, b) triple was not a valid complement) and returns
    (lcm of the index set D, D).
    """
    a0, _ = a.normalize()
    d = a0.diam()
    plus = b.one_sided()
    k = plus.period_length
    for n in range(d, d + k + d + 1):
        if representation_function(a0, plus, n) != t:
            raise ValueError("not a t-complement on the one-sided domain (R != t)")
    _, q = gamma_rational_form(plus)
    factorization = cyclotomic_part(q)
    if factorization.cofactor.degree > 0:
        raise IntegrityError("denominator has a non-cyclotomic factor")
    indices = factorization.indices()
    return lcm_all(indices), indices


def _canonical_rotation(block: list[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation (Booth would be overkill here)."""
    n = len(block)
    doubled = block + block
    best = min(range(n), key=lambda i: doubled[i : i + n])
    return tuple(doubled[best : best + n])


def _verify_witness(a: IntegerMultiset, t: int, b: PeriodicWeightSequence) -> None:
    """Full verification of a periodic witness; raises on any failure."""
    d = a.diam()
    k = b.period_length
    if not weight_cap_check(b, t):
        raise IntegrityError("witness weight exceeds t")
    for n in range(-1, k + d + 1):
        if representation_function(a, b, n) != t:
            raise IntegrityError(f"representation function is {t}-defective at {n}")
    if d >= 1:
        for i in range(k):
            window = tuple(b.weight(i + j) for j in range(d))
            if step_backward(window, a, t) != b.weight(i - 1):
                raise IntegrityError("backward recurrence inconsistent on the cycle")


def find_complement(
    a: IntegerMultiset,
    t: int,
    budget: int = DEFAULT_BUDGET,
    epsilon: float = DEFAULT_EPSILON,
) -> TilingReport:
    """Decide whether A admits a t-complement B and construct one.

    Explores the deterministic forward map on the (t+1)^d window states,
    memoizing states whose orbit dies, and collects every cycle; each
    cycle read off as a weight word is a fully periodic two-sided
    witness.  The returned witness is the cycle with the smallest
    period (ties broken by lexicographically smallest rotation), fully
    re-verified against R = t, the backward recurrence and the weight
    cap, with the minimal period confirmed by the algebraic route.

    When (t+1)^d exceeds the budget the result is inconclusive rather
    than wrong.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if budget < 1:
        raise ValueError("budget must be a positive integer")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    a0, _ = a.normalize()
    d = a0.diam()
    nb = (t + 1) ** d
    bb = biro_bound_log(a0, epsilon)

    def report(**kw) -> TilingReport:
        base = dict(
            status=STATUS_OK,
            exists=None,
            witness=None,
            minimal_period_combinatorial=None,
            minimal_period_algebraic=None,
            cyclotomic_indices=None,
            newman_bound=nb,
            biro_bound_log=bb,
            epsilon=epsilon,
            diam=d,
            t=t,
            cycle_count=None,
        )
        base.update(kw)
        return TilingReport(**base)

    if len(a0) == 1:
        w = a0.weight(0)
        if t % w:
            return report(exists=False, cycle_count=0)
        witness = PeriodicWeightSequence((t // w,), two_sided=True)
        _verify_witness(a0, t, witness)
        k_alg, indices = algebraic_minimal_period(a0, t, witness)
        return report(
            exists=True,
            witness=witness,
            minimal_period_combinatorial=1,
            minimal_period_algebraic=k_alg,
            cyclotomic_indices=tuple(sorted(indices)),
            cycle_count=1,
        )

    if nb > budget:
        return report(status=STATUS_INCONCLUSIVE)

    base = t + 1
    size = nb
    w0 = a0.weight(0)
    # weight multiplying window digit j in the forward relation is w_A(d - j)
    digit_weights = [a0.weight(d - j) for j in range(d)]
    hi = base ** (d - 1)

    status = bytearray(size)  # 0 unknown, 1 dead, 2 leads to / lies on a cycle
    best: tuple[int, tuple[int, ...]] | None = None
    cycle_count = 0

    for start in range(size):
        if status[start]:
            continue
        path: list[int] = []
        vals: list[int] = []
        index: dict[int, int] = {}
        cur = start
        while True:
            st = status[cur]
            if st:
                for u in path:
                    status[u] = st
                break
            seen = index.get(cur)
            if seen is not None:
                for u in path:
                    status[u] = 2
                cycle_count += 1
                k = len(vals) - seen
                block = _canonical_rotation(vals[seen:])
                if best is None or (k, block) < best:
                    best = (k, block)
                break
            index[cur] = len(path)
            path.append(cur)
            rhs = t
            x = cur
            for w in digit_weights:
                if w:
                    rhs -= w * (x % base)
                x //= base
            if rhs < 0:
                nxt = -1
            else:
                q, r = divmod(rhs, w0)
                nxt = cur // base + q * hi if not r and q <= t else -1
            if nxt < 0:
                for u in path:
                    status[u] = 1
                break
            vals.append(q)
            cur = nxt

    if best is None:
        return report(exists=False, cycle_count=0)

    k, block = best
    witness = PeriodicWeightSequence(block, two_sided=True)
    _verify_witness(a0, t, witness)
    k_comb = minimal_period(block)
    k_alg, indices = algebraic_minimal_period(a0, t, witness)
    return report(
        exists=True,
        witness=witness,
        minimal_period_combinatorial=k_comb,
        minimal_period_algebraic=k_alg,
        cyclotomic_indices=tuple(sorted(indices)),
        cycle_count=cycle_count,
    )


def log_period(report: TilingReport) -> float | None:
    """Natural log of the minimal period, when a witness exists."""
    if report.minimal_period_combinatorial is None:
        return None
    return math.log(report.minimal_period_combinatorial)
