"""Freely reduced words over x_1..x_r and substitution endomorphisms.

Free words are plain tuples of signed indices kept freely reduced, so equality
of group elements is literal tuple equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .presentations import free_reduce, inverse

FreeWord = tuple[int, ...]

DEFAULT_LETTER_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    pass


class RankMismatch(ValueError):
    pass


def _check_rank(u: Sequence[int], rank: int) -> None:
    for x in u:
        if x == 0 or abs(x) > rank:
            raise RankMismatch(f"letter {x} outside free rank {rank}")


def _check_budget(u: Sequence[int], budget: int | None) -> None:
    if budget is not None and len(u) > budget:
        raise BudgetExceeded(f"word of {len(u)} letters exceeds budget {budget}")


def fg_multiply(u: Sequence[int], v: Sequence[int], *, rank: int | None = None,
                budget: int | None = DEFAULT_LETTER_BUDGET) -> FreeWord:
    """Reduced product of two reduced words; only the junction can cancel."""
    if rank is not None:
        _check_rank(u, rank)
        _check_rank(v, rank)
    k = 0
    nu, nv = len(u), len(v)
    while k < nu and k < nv and u[nu - 1 - k] == -v[k]:
        k += 1
    out = tuple(u[: nu - k]) + tuple(v[k:])
    _check_budget(out, budget)
    return out


def fg_invert(u: Sequence[int]) -> FreeWord:
    return inverse(u)


@dataclass(frozen=True)
class Substitution:
    """The endomorphism x_i -> images[i-1] of the free group of rank ``rank``."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise RankMismatch(f"expected {self.rank} images, got {len(self.images)}")
        for im in self.images:
            _check_rank(im, self.rank)

    @classmethod
    def identity(cls, rank: int) -> "Substitution":
        return cls(rank, tuple((i,) for i in range(1, rank + 1)))

    def __call__(self, u: Sequence[int]) -> FreeWord:
        return fg_apply(self, u)

    def then(self, other: "Substitution") -> "Substitution":
        """The substitution ``u -> other(self(u))``."""
        return compose(other, self)


def fg_apply(s: Substitution, u: Sequence[int], *,
             budget: int | None = DEFAULT_LETTER_BUDGET) -> FreeWord:
    out: list[int] = []
    for x in u:
        if x == 0 or abs(x) > s.rank:
            raise RankMismatch(f"letter {x} outside substitution rank {s.rank}")
        piece = s.images[x - 1] if x > 0 else inverse(s.images[-x - 1])
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
        if budget is not None and len(out) > budget:
            raise BudgetExceeded(f"substitution image exceeds budget {budget}")
    return tuple(out)


def compose(s: Substitution, t: Substitution, *,
            budget: int | None = DEFAULT_LETTER_BUDGET) -> Substitution:
    """``s o t``: the substitution ``u -> s(t(u))``."""
    if s.rank != t.rank:
        raise RankMismatch(f"rank {s.rank} vs {t.rank}")
    return Substitution(s.rank, tuple(fg_apply(s, im, budget=budget) for im in t.images))


def reduce_random_order(u: Sequence[int], rng: random.Random) -> FreeWord:
    """Free reduction cancelling adjacent pairs in a random order.

    Used only to test confluence against the stack scan in ``free_reduce``.
    """
    w = list(u)
    while True:
        spots = [i for i in range(len(w) - 1) if w[i] == -w[i + 1]]
        if not spots:
            return tuple(w)
        i = rng.choice(spots)
        del w[i : i + 2]


def random_free_word(rng: random.Random, rank: int, length: int) -> FreeWord:
    letters = [rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length)]
    return free_reduce(letters)
