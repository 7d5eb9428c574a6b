"""The braid group A(A_n) on n+1 strands.

Two independent decision procedures for the word problem live here: the
faithful Artin action on the free group of rank n+1, and the left-weighted
Garside normal form over permutation braids. ``braid_equal`` picks one by word
length; the test-suite and the report check that they agree.

Conventions
-----------
* ``artin_action(u + v) == compose(artin_action(u), artin_action(v))``: the
  image tuple is built by reading the word left to right, each letter
  substituted into the images accumulated so far.
* ``braid_perm`` applies transpositions left to right:
  ``braid_perm(u + v) == then(braid_perm(u), braid_perm(v))``.
* A Garside simple is stored as a permutation ``p`` of 1..n+1 in one-line
  notation (``p[k-1]`` is the image of ``k``); ``sigma_i`` is the transposition
  of ``i`` and ``i+1`` and products of simples multiply as permutations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .freegroup import BudgetExceeded, DEFAULT_LETTER_BUDGET, Substitution, fg_multiply
from .presentations import (
    ArtinType,
    Word,
    abelianization,
    exponent_sum,
    inverse,
    power,
)

Perm = tuple[int, ...]


@dataclass(frozen=True)
class OracleConfig:
    letter_budget: int = DEFAULT_LETTER_BUDGET
    garside_threshold: int = 64


DEFAULT_CONFIG = OracleConfig()


def _check_word(w: Sequence[int], n: int) -> None:
    for x in w:
        if x == 0 or abs(x) > n:
            raise ValueError(f"letter {x} outside braid rank {n}")


# -- free group action -------------------------------------------------------


def letter_action(x: int, n: int) -> Substitution:
    """Substitution of a single letter ``x`` (``±i``) on the free group of rank n+1."""
    images = [(k,) for k in range(1, n + 2)]
    i = abs(x)
    if x > 0:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return Substitution(n + 1, tuple(images))


def artin_action(w: Sequence[int], n: int, config: OracleConfig = DEFAULT_CONFIG) -> Substitution:
    _check_word(w, n)
    budget = config.letter_budget
    if len(w) > budget:
        raise BudgetExceeded(f"braid word of {len(w)} letters exceeds budget {budget}")
    im = [(k,) for k in range(1, n + 2)]
    for x in w:
        i = abs(x) - 1
        a, b = im[i], im[i + 1]
        if x > 0:
            im[i] = fg_multiply(fg_multiply(a, b, budget=budget), inverse(a), budget=budget)
            im[i + 1] = a
        else:
            im[i] = b
            im[i + 1] = fg_multiply(fg_multiply(inverse(b), a, budget=budget), b, budget=budget)
    return Substitution(n + 1, tuple(im))


# -- Garside normal form -----------------------------------------------------


@dataclass(frozen=True)
class GarsideNF:
    inf: int
    factors: tuple[Perm, ...] = field(default=())


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 2))


def delta_perm(n: int) -> Perm:
    return tuple(range(n + 1, 0, -1))


def _swap_positions(p: Perm, i: int) -> Perm:
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _swap_values(p: Perm, i: int) -> Perm:
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def finishing_set(p: Perm) -> frozenset[int]:
    """Right descents: the generators a positive word for ``p`` can end with."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def starting_set(p: Perm) -> frozenset[int]:
    """Left descents: the generators a positive word for ``p`` can start with."""
    pos = {v: k for k, v in enumerate(p)}
    return frozenset(i for i in range(1, len(p)) if pos[i] > pos[i + 1])


def is_left_weighted(a: Perm, b: Perm) -> bool:
    return starting_set(b) <= finishing_set(a)


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm, bool]:
    changed = False
    while True:
        move = starting_set(b) - finishing_set(a)
        if not move:
            return a, b, changed
        i = min(move)
        a = _swap_positions(a, i)
        b = _swap_values(b, i)
        changed = True


def _tau(p: Perm) -> Perm:
    """Conjugation by the half twist: sigma_i -> sigma_{n+1-i}."""
    m = len(p) + 1
    return tuple(m - v for v in reversed(p))


def simple_word(p: Perm) -> Word:
    """A positive word for the permutation braid ``p`` (bubble sort)."""
    q = list(p)
    letters: list[int] = []
    # peel right descents: p = p' s_i whenever p(i) > p(i+1)
    while True:
        for i in range(1, len(q)):
            if q[i - 1] > q[i]:
                q[i - 1], q[i] = q[i], q[i - 1]
                letters.append(i)
                break
        else:
            break
    return tuple(reversed(letters))


def garside_nf(w: Sequence[int], n: int) -> GarsideNF:
    _check_word(w, n)
    delta = delta_perm(n)
    ident = identity_perm(n)
    inf = 0
    factors: list[Perm] = []
    for x in w:
        i = abs(x)
        if x > 0:
            new = _swap_positions(ident, i)
        else:
            inf -= 1
            factors = [_tau(f) for f in factors]
            new = _swap_positions(delta, i)
        factors.append(new)
        for j in range(len(factors) - 2, -1, -1):
            a, b, changed = _left_weight(factors[j], factors[j + 1])
            if not changed:
                break
            factors[j], factors[j + 1] = a, b
        while factors and factors[0] == delta:
            factors.pop(0)
            inf += 1
        while factors and factors[-1] == ident:
            factors.pop()
    return GarsideNF(inf, tuple(factors))


def nf_word(nf: GarsideNF, n: int) -> Word:
    """A word representing the normal form ``nf``."""
    out = power(simple_word(delta_perm(n)), nf.inf)
    for p in nf.factors:
        out += simple_word(p)
    return out


# -- equality and homomorphisms ----------------------------------------------


def braid_equal(u: Sequence[int], v: Sequence[int], n: int,
                config: OracleConfig = DEFAULT_CONFIG) -> bool:
    _check_word(u, n)
    _check_word(v, n)
    longest = max(len(u), len(v))
    if longest > config.letter_budget:
        raise BudgetExceeded(f"word of {longest} letters exceeds budget {config.letter_budget}")
    if longest > config.garside_threshold:
        return garside_nf(u, n) == garside_nf(v, n)
    return artin_action(u, n, config) == artin_action(v, n, config)


def braid_length(w: Sequence[int]) -> int:
    return exponent_sum(w)


def braid_perm(w: Sequence[int], n: int) -> Perm:
    """Permutation of the n+1 strand positions, letters applied left to right."""
    _check_word(w, n)
    p = identity_perm(n)
    for x in w:
        p = _swap_values(p, abs(x))
    return p


def then(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[v - 1] for v in p)


def delta_word(n: int) -> Word:
    """delta = s_1 s_2 ... s_n."""
    return tuple(range(1, n + 1))


@dataclass(frozen=True)
class CenterData:
    tag: str
    zeta: Word
    d: int
    ab_image: int | tuple[int, int]
    note: str = ""


@dataclass(frozen=True)
class TrivialCenter:
    tag: str


def center_data(t: ArtinType) -> CenterData | TrivialCenter:
    """Generator of the center, its length, and its abelianized image."""
    if t.family in ("AffA", "AffC"):
        return TrivialCenter(t.tag)
    note = ""
    if t.family == "A":
        zeta = power(delta_word(t.rank), t.rank + 1)
    elif t.family == "B":
        zeta = power(delta_word(t.rank), t.rank)
    elif t.family == "I2":
        m = t.param
        zeta = power((1, 2), m // 2 if m % 2 == 0 else m)
        if m % 2:
            note = "odd m: zeta = (ab)^m taken from the standard literature on Artin group centers"
    else:
        zeta = power(delta_word(4), 6)
    return CenterData(t.tag, zeta, len(zeta), abelianization(t, zeta), note)


def is_central(w: Sequence[int], n: int, config: OracleConfig = DEFAULT_CONFIG) -> bool:
    w = tuple(w)
    return all(braid_equal(w + (i,), (i,) + w, n, config) for i in range(1, n + 1))


def equal_mod_center(u: Sequence[int], v: Sequence[int], n: int,
                     config: OracleConfig = DEFAULT_CONFIG) -> bool:
    """Equality in A(A_n)/Z, Z generated by the full twist."""
    diff = tuple(u) + inverse(v)
    d = n * (n + 1)
    ell = braid_length(diff)
    if ell % d:
        return False
    zeta = power(delta_word(n), n + 1)
    return braid_equal(diff, power(zeta, ell // d), n, config)
