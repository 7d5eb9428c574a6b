"""Coxeter matrices, the supported Artin types, their relations, and the word codec.

Words are tuples of nonzero ints: ``+i`` is the generator ``s_i`` and ``-i``
its inverse. Generators are 1-based throughout the package.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

Word = tuple[int, ...]

INF = math.inf

FAMILIES = ("A", "B", "AffA", "AffC", "I2", "F4")


class InvalidTypeError(ValueError):
    pass


class WordParseError(ValueError):
    pass


@dataclass(frozen=True)
class ArtinType:
    """One of the supported Artin types.

    ``param`` is the rank for ``A``, ``B``, ``AffA`` and ``AffC`` (so ``AffA`` with
    param 4 is the affine type with a 4-cycle graph), the label ``m`` for ``I2``,
    and is ignored (always 4) for ``F4``.
    """

    family: str
    param: int = 4

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidTypeError(f"unknown Artin family {self.family!r}")
        if self.family == "F4":
            object.__setattr__(self, "param", 4)
        elif self.param < 3:
            raise InvalidTypeError(f"{self.family} requires parameter >= 3, got {self.param}")

    @property
    def rank(self) -> int:
        if self.family == "I2":
            return 2
        return self.param

    @property
    def tag(self) -> str:
        if self.family == "F4":
            return "F4"
        return f"{self.family}:{self.param}"

    def __str__(self) -> str:
        return self.tag

    @classmethod
    def parse(cls, tag: str) -> "ArtinType":
        """Parse ``"B:3"``, ``"I2:6"``, ``"F4"`` and friends."""
        tag = tag.strip()
        if tag == "F4":
            return cls("F4")
        family, sep, num = tag.partition(":")
        if not sep:
            raise InvalidTypeError(f"malformed type tag {tag!r}")
        try:
            param = int(num)
        except ValueError:
            raise InvalidTypeError(f"malformed type tag {tag!r}") from None
        return cls(family, param)


def A(n: int) -> ArtinType:
    return ArtinType("A", n)


def B(n: int) -> ArtinType:
    return ArtinType("B", n)


def AffA(n: int) -> ArtinType:
    return ArtinType("AffA", n)


def AffC(n: int) -> ArtinType:
    return ArtinType("AffC", n)


def I2(m: int) -> ArtinType:
    return ArtinType("I2", m)


F4 = ArtinType("F4")


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n < 1:
            raise ValueError("Coxeter matrix must have positive rank")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            if row[i] != 1:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) must be 1")
            for j, m in enumerate(row):
                if m != self.entries[j][i]:
                    raise ValueError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ")
                if i != j and not (m == INF or (m == int(m) and m >= 2)):
                    raise ValueError(f"off-diagonal entry ({i + 1},{j + 1}) must be >= 2 or inf")

    @property
    def n(self) -> int:
        return len(self.entries)

    def m(self, i: int, j: int) -> float:
        """Label m_ij with 1-based indices."""
        return self.entries[i - 1][j - 1]

    @classmethod
    def from_edges(cls, n: int, edges: dict[tuple[int, int], float]) -> "CoxeterMatrix":
        rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for (i, j), m in edges.items():
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = m
        return cls(tuple(tuple(r) for r in rows))


def coxeter_matrix(t: ArtinType) -> CoxeterMatrix:
    n = t.rank
    if t.family == "A":
        edges = {(i, i + 1): 3 for i in range(1, n)}
    elif t.family == "B":
        edges = {(i, i + 1): 3 for i in range(1, n - 1)}
        edges[(n - 1, n)] = 4
    elif t.family == "AffA":
        edges = {(i, i % n + 1): 3 for i in range(1, n + 1)}
    elif t.family == "AffC":
        edges = {(i, i + 1): 3 for i in range(2, n - 1)}
        edges[(1, 2)] = 4
        edges[(n - 1, n)] = 4
    elif t.family == "I2":
        edges = {(1, 2): t.param}
    else:
        edges = {(1, 2): 3, (2, 3): 4, (3, 4): 3}
    return CoxeterMatrix.from_edges(n, edges)


def alternating(i: int, j: int, length: int) -> Word:
    """The positive word ``s_i s_j s_i ...`` with ``length`` letters."""
    return tuple(i if k % 2 == 0 else j for k in range(length))


@dataclass(frozen=True)
class Presentation:
    rank: int
    relations: tuple[tuple[Word, Word], ...]

    def to_text(self) -> str:
        doc = {
            "rank": self.rank,
            "relations": [[format_word(u), format_word(v)] for u, v in self.relations],
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        doc = json.loads(text)
        rank = doc["rank"]
        rels = tuple((parse_word(u, rank), parse_word(v, rank)) for u, v in doc["relations"])
        return cls(rank, rels)


def artin_relations(M: CoxeterMatrix) -> Presentation:
    rels = []
    for i in range(1, M.n + 1):
        for j in range(i + 1, M.n + 1):
            m = M.m(i, j)
            if m == INF:
                continue
            m = int(m)
            rels.append((alternating(i, j, m), alternating(j, i, m)))
    return Presentation(M.n, tuple(rels))


def presentation(t: ArtinType) -> Presentation:
    return artin_relations(coxeter_matrix(t))


def parse_word(text: str, rank: int | None = None) -> Word:
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise WordParseError(f"not an integer: {tok!r}") from None
        if x == 0:
            raise WordParseError(f"zero is not a generator: {tok!r}")
        if rank is not None and abs(x) > rank:
            raise WordParseError(f"generator index out of range 1..{rank}: {tok!r}")
        letters.append(x)
    return tuple(letters)


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def power(w: Sequence[int], k: int) -> Word:
    """``w**k``, using the inverse word for negative ``k``."""
    base = tuple(w) if k >= 0 else inverse(w)
    return base * abs(k)


def exponent_sum(w: Sequence[int]) -> int:
    return sum(1 if x > 0 else -1 for x in w)


def ab_classes(t: ArtinType) -> tuple[frozenset[int], frozenset[int]] | None:
    """Generator classes for a rank-2 abelianization, None when it is rank 1.

    Conjugate generators (joined by odd-labelled edges) land in the same class.
    """
    n = t.rank
    if t.family == "B":
        return frozenset(range(1, n)), frozenset({n})
    if t.family == "I2" and t.param % 2 == 0:
        return frozenset({1}), frozenset({2})
    if t.family == "F4":
        return frozenset({1, 2}), frozenset({3, 4})
    if t.family == "AffC":
        return frozenset(range(2, n)), frozenset({1, n})
    return None


def abelianization(t: ArtinType, w: Sequence[int]) -> int | tuple[int, int]:
    """Image of ``w`` in Z x Z (or Z when the abelianization is cyclic)."""
    classes = ab_classes(t)
    if classes is None:
        return exponent_sum(w)
    first, _ = classes
    r = s = 0
    for x in w:
        e = 1 if x > 0 else -1
        if abs(x) in first:
            r += e
        else:
            s += e
    return (r, s)


def random_word(rng, rank: int, max_length: int, min_length: int = 1) -> Word:
    """Uniform signed letters, length uniform in [min_length, max_length]."""
    length = rng.randint(min_length, max_length)
    return tuple(rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length))


def insert_relators(rng, w: Sequence[int], pres: Presentation, count: int = 2) -> Word:
    """Rewrite ``w`` into an equal word by splicing in relators and cancelling pairs."""
    out = tuple(w)
    for _ in range(count):
        u, v = rng.choice(pres.relations)
        k = rng.randint(0, len(out))
        out = out[:k] + u + inverse(v) + out[k:]
        k = rng.randint(0, len(out))
        x = rng.randint(1, pres.rank)
        out = out[:k] + (x, -x) + out[k:]
    return out
