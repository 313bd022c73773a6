"""Weighted integer multisets and periodic weight sequences.

``IntegerMultiset`` is the finite side of a tiling instance: a sparse
map from integer support points to positive weights.  The infinite side
is an ``PeriodicWeightSequence``: an eventually periodic two-sided
weight assignment described by an offset, a preperiod block and a
repeating block, with point queries extending by periodicity (two-sided
when flagged, zero to the left otherwise).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .polynomial import Poly


class IntegerMultiset:
    """Finite nonempty multiset of integers with positive weights."""

    __slots__ = ("_weights",)

    def __init__(self, weights: Mapping[int, int]):
        if not weights:
            raise ValueError("empty multiset")
        cleaned: dict[int, int] = {}
        for k, w in weights.items():
            k = int(k)
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"weight of {k} must be a positive integer, got {w!r}")
            cleaned[k] = w
        self._weights = dict(sorted(cleaned.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._weights)

    def weight(self, n: int) -> int:
        return self._weights.get(n, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._weights.items())

    @property
    def total_weight(self) -> int:
        return sum(self._weights.values())

    @property
    def min_support(self) -> int:
        return next(iter(self._weights))

    @property
    def max_support(self) -> int:
        return next(reversed(self._weights))

    def diam(self) -> int:
        """max(support) - min(support)."""
        return self.max_support - self.min_support

    def translate(self, shift: int) -> "IntegerMultiset":
        return IntegerMultiset({k + shift: w for k, w in self._weights.items()})

    def normalize(self) -> tuple["IntegerMultiset", int]:
        """Shift so min(support) = 0; returns (shifted multiset, shift).

        The shift is min(support) of the original, so the result is
        self translated by -shift.
        """
        shift = self.min_support
        if shift == 0:
            return self, 0
        return self.translate(-shift), shift

    def mask_polynomial(self) -> Poly:
        """Generating polynomial sum w(a) x^a; requires min(support) = 0."""
        if self.min_support != 0:
            raise ValueError("multiset must be normalized (min support 0)")
        out = [0] * (self.max_support + 1)
        for k, w in self._weights.items():
            out[k] = w
        return Poly(out)

    def __len__(self) -> int:
        return len(self._weights)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntegerMultiset):
            return self._weights == other._weights
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._weights.items()))

    def __repr__(self) -> str:
        return f"IntegerMultiset({self._weights!r})"

    def to_json_dict(self) -> dict:
        return {"weights": {str(k): w for k, w in self._weights.items()}}

    @classmethod
    def from_json_dict(cls, obj: Mapping) -> "IntegerMultiset":
        try:
            raw = obj["weights"]
        except (KeyError, TypeError):
            raise ValueError('expected an object with a "weights" field') from None
        return cls({int(k): v for k, v in raw.items()})


@dataclass(frozen=True)
class PeriodicWeightSequence:
    """Eventually periodic weight sequence for the infinite multiset B.

    Positions offset .. offset+len(preperiod)-1 carry the preperiod,
    everything above repeats the period block.  Below the offset the
    weight is 0, unless two_sided is set, in which case the period
    extends backward over all of Z (the preperiod, if present, must then
    agree with that extension).
    """

    period: tuple[int, ...]
    preperiod: tuple[int, ...] = ()
    offset: int = 0
    two_sided: bool = False

    def __post_init__(self):
        object.__setattr__(self, "period", tuple(self.period))
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        if not self.period:
            raise ValueError("period block must be nonempty")
        for w in itertools.chain(self.preperiod, self.period):
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"weights must be nonnegative integers, got {w!r}")
        if self.two_sided:
            k = len(self.period)
            start = self.offset + len(self.preperiod)
            for i, w in enumerate(self.preperiod):
                if w != self.period[(self.offset + i - start) % k]:
                    raise ValueError("two-sided sequence: preperiod conflicts with the period")

    @property
    def period_length(self) -> int:
        return len(self.period)

    @property
    def period_sum(self) -> int:
        return sum(self.period)

    @property
    def period_start(self) -> int:
        return self.offset + len(self.preperiod)

    def weight(self, n: int) -> int:
        start = self.period_start
        if n >= start:
            return self.period[(n - start) % len(self.period)]
        if n >= self.offset:
            return self.preperiod[n - self.offset]
        if self.two_sided:
            return self.period[(n - start) % len(self.period)]
        return 0

    def values(self, start: int, count: int) -> list[int]:
        return [self.weight(n) for n in range(start, start + count)]

    def max_weight(self) -> int:
        return max(itertools.chain(self.preperiod, self.period))

    def one_sided(self) -> "PeriodicWeightSequence":
        """Restriction to n >= 0 (the B+ view): same weights above 0, zero below."""
        k = len(self.period)
        start = self.period_start
        if self.two_sided or start <= 0:
            # fully periodic on n >= 0: realign the block at position 0
            r = -start % k
            return PeriodicWeightSequence(self.period[r:] + self.period[:r])
        if self.offset >= 0:
            return PeriodicWeightSequence(self.period, self.preperiod, self.offset)
        return PeriodicWeightSequence(self.period, self.preperiod[-self.offset :], 0)


def representation_function(a: IntegerMultiset, b: PeriodicWeightSequence, n: int) -> int:
    """R_{A,B}(n) = sum over a of w_A(a) * w_B(n - a)."""
    return sum(w * b.weight(n - k) for k, w in a.items())


@dataclass(frozen=True)
class LinearForm:
    """psi(x_1..x_h) = sum u_i x_i together with the extra coefficient v."""

    coefficients: tuple[int, ...]
    v: int

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if not self.coefficients:
            raise ValueError("at least one coefficient required")
        if any(not isinstance(u, int) or u == 0 for u in self.coefficients):
            raise ValueError("linear form coefficients must be nonzero integers")
        if not isinstance(self.v, int) or self.v == 0:
            raise ValueError("v must be a nonzero integer")


def linear_form_to_multiset(
    sets: Sequence[Iterable[int]], form: LinearForm
) -> tuple[IntegerMultiset, int]:
    """Image multiset of psi over a tuple of finite sets, plus the scale v.

    The weight of r counts the tuples (a_1..a_h) with sum u_i a_i = r.
    A set B complements the tuple through psi + v*y with constant t
    exactly when v*B t-complements the returned multiset.
    """
    cleaned = [sorted(set(s)) for s in sets]
    if len(cleaned) != len(form.coefficients):
        raise ValueError("number of sets must match the number of coefficients")
    if any(not s for s in cleaned):
        raise ValueError("empty set in the tuple")
    weights: dict[int, int] = {}
    for combo in itertools.product(*cleaned):
        r = sum(u * x for u, x in zip(form.coefficients, combo))
        weights[r] = weights.get(r, 0) + 1
    return IntegerMultiset(weights), form.v


def parse_linear_form_input(obj: Mapping) -> tuple[list[list[int]], LinearForm]:
    """Decode {"u": [...], "v": int, "sets": [[...], ...]}."""
    try:
        u = [int(c) for c in obj["u"]]
        v = int(obj["v"])
        sets = [[int(x) for x in s] for s in obj["sets"]]
    except (KeyError, TypeError, ValueError):
        raise ValueError('expected fields "u", "v" and "sets"') from None
    return sets, LinearForm(tuple(u), v)
