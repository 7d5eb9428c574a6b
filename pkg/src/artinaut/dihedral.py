"""Word problem for the dihedral Artin groups A(I2(m)) = <a, b | aba... = bab...>.

Garside normal form over the dihedral monoid. With a = 1 and b = 2 a simple
element is an alternating positive word, stored as ``(start, length)``; the
identity is ``(0, 0)`` and the Garside element is ``(0, m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentations import Word, alternating

Simple = tuple[int, int]

IDENTITY: Simple = (0, 0)


def _other(x: int) -> int:
    return 3 - x


@dataclass(frozen=True)
class DihedralNF:
    inf: int
    factors: tuple[Simple, ...] = ()


class _Monoid:
    def __init__(self, m: int) -> None:
        if m < 3:
            raise ValueError(f"dihedral label must be >= 3, got {m}")
        self.m = m
        self.delta: Simple = (0, m)

    def starting(self, p: Simple) -> frozenset[int]:
        start, length = p
        if length == 0:
            return frozenset()
        if length == self.m:
            return frozenset({1, 2})
        return frozenset({start})

    def finishing(self, p: Simple) -> frozenset[int]:
        start, length = p
        if length == 0:
            return frozenset()
        if length == self.m:
            return frozenset({1, 2})
        return frozenset({start if length % 2 else _other(start)})

    def append(self, p: Simple, x: int) -> Simple:
        start, length = p
        if length == 0:
            return (x, 1)
        return self.delta if length + 1 == self.m else (start, length + 1)

    def drop_first(self, q: Simple, x: int) -> Simple:
        start, length = q
        if length == self.m:
            return (_other(x), self.m - 1)
        return IDENTITY if length == 1 else (_other(start), length - 1)

    def tau(self, p: Simple) -> Simple:
        start, length = p
        if self.m % 2 == 0 or length in (0, self.m):
            return p
        return (_other(start), length)

    def complement_of(self, x: int) -> Simple:
        """The simple ``Delta x^-1``."""
        return (x if self.m % 2 else _other(x), self.m - 1)

    def left_weight(self, p: Simple, q: Simple) -> tuple[Simple, Simple, bool]:
        changed = False
        while True:
            move = self.starting(q) - self.finishing(p)
            if not move:
                return p, q, changed
            x = min(move)
            p, q = self.append(p, x), self.drop_first(q, x)
            changed = True


def dihedral_nf(w: Sequence[int], m: int) -> DihedralNF:
    mon = _Monoid(m)
    inf = 0
    factors: list[Simple] = []
    for x in w:
        if x not in (1, 2, -1, -2):
            raise ValueError(f"letter {x} is not a dihedral generator")
        if x > 0:
            new = (x, 1)
        else:
            inf -= 1
            factors = [mon.tau(f) for f in factors]
            new = mon.complement_of(-x)
        factors.append(new)
        for j in range(len(factors) - 2, -1, -1):
            a, b, changed = mon.left_weight(factors[j], factors[j + 1])
            if not changed:
                break
            factors[j], factors[j + 1] = a, b
        while factors and factors[0] == mon.delta:
            factors.pop(0)
            inf += 1
        while factors and factors[-1] == IDENTITY:
            factors.pop()
    return DihedralNF(inf, tuple(factors))


def simple_word(p: Simple, m: int) -> Word:
    start, length = p
    if length == m:
        start = 1
    return alternating(start, _other(start), length) if length else ()


def dihedral_equal(u: Sequence[int], v: Sequence[int], m: int) -> bool:
    return dihedral_nf(u, m) == dihedral_nf(v, m)


def is_central_dihedral(w: Sequence[int], m: int) -> bool:
    w = tuple(w)
    return all(dihedral_equal(w + (x,), (x,) + w, m) for x in (1, 2))
