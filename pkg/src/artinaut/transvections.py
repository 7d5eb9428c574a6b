"""Transvections x -> x * lambda(x) with lambda a homomorphism into the center.

A transvection is kept at parameter level: ``(p, q)`` when the abelianization
is Z x Z (lambda sends the class pair (r, s) to zeta^(p r + q s)), a single
integer ``m`` when it is Z (lambda(a) = zeta^(m l(a))). Word-level images are
produced on demand by ``tv_apply``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from .braid import CenterData, TrivialCenter, center_data
from .morphisms import GroupRef, Morphism, UnsupportedVerification
from .presentations import ArtinType, Word, ab_classes, power

Param = int | tuple[int, int]


class UndefinedComposition(ValueError):
    pass


def _center(t: ArtinType) -> CenterData:
    cd = center_data(t)
    if isinstance(cd, TrivialCenter):
        raise ValueError(f"{t.tag} has trivial center; no transvections")
    return cd


@dataclass(frozen=True)
class Transvection:
    group: ArtinType
    param: Param

    def __post_init__(self) -> None:
        _center(self.group)
        rank2 = ab_classes(self.group) is not None
        if rank2 != isinstance(self.param, tuple):
            shape = "a pair (p, q)" if rank2 else "a single integer m"
            raise ValueError(f"{self.group.tag} transvections take {shape}")

    @property
    def rank2(self) -> bool:
        return isinstance(self.param, tuple)


def zeta_exponent(T: Transvection) -> int:
    """k with T(zeta) = zeta^k."""
    cd = _center(T.group)
    if T.rank2:
        p, q = T.param
        r, s = cd.ab_image
        return 1 + p * r + q * s
    return 1 + T.param * cd.d


def is_automorphism(T: Transvection) -> bool:
    return zeta_exponent(T) in (1, -1)


def tv_compose(T: Transvection, U: Transvection) -> Transvection:
    """``T o U`` (U applied first), defined when T is an automorphism."""
    if T.group != U.group:
        raise ValueError(f"groups differ: {T.group.tag} vs {U.group.tag}")
    k = zeta_exponent(T)
    if k not in (1, -1):
        raise UndefinedComposition(f"T(zeta) = zeta^{k}; composite leaves Tv")
    if T.rank2:
        (p, q), (p2, q2) = T.param, U.param
        return Transvection(T.group, (p + k * p2, q + k * q2))
    return Transvection(T.group, T.param + k * U.param)


@dataclass(frozen=True)
class TvStructure:
    kind: str  # "trivial", "Z" or "D_inf"
    generators: tuple[Param, ...] = ()


def _solve(r: int, s: int, target: int) -> tuple[int, int] | None:
    """Some (p, q) with p r + q s = target, preferring p = 0, then p = 1."""
    for p in (0, 1):
        if (target - p * r) % s == 0:
            return (p, (target - p * r) // s)
    g = gcd(r, s)
    if target % g:
        return None
    # extended Euclid
    old_r, rr, old_x, x = r, s, 1, 0
    while rr:
        quo = old_r // rr
        old_r, rr = rr, old_r - quo * rr
        old_x, x = x, old_x - quo * x
    p = old_x * (target // g)
    return (p, (target - p * r) // s)


def tv_structure(t: ArtinType) -> TvStructure:
    cd = center_data(t)
    if isinstance(cd, TrivialCenter) or ab_classes(t) is None:
        # rank-one abelianization: 1 + m d = ±1 forces m = 0 since d > 2
        return TvStructure("trivial")
    r, s = cd.ab_image
    g = gcd(r, s)
    translation = (s // g, -r // g)
    reflection = _solve(r, s, -2)
    if reflection is None:
        return TvStructure("Z", (translation,))
    return TvStructure("D_inf", (translation, reflection))


def generator_exponents(T: Transvection) -> tuple[int, ...]:
    """Exponent e_i with T(s_i) = s_i zeta^{e_i}."""
    n = T.group.rank
    classes = ab_classes(T.group)
    if classes is None:
        return (T.param,) * n
    p, q = T.param
    first, _ = classes
    return tuple(p if i in first else q for i in range(1, n + 1))


def tv_apply(T: Transvection, w: Sequence[int]) -> Word:
    if T.group.family == "F4":
        raise UnsupportedVerification("F4 transvections are arithmetic only")
    zeta = _center(T.group).zeta
    exps = generator_exponents(T)
    out: list[int] = []
    for x in w:
        e = exps[abs(x) - 1]
        out.append(x)
        out.extend(power(zeta, e if x > 0 else -e))
    return tuple(out)


def tv_morphism(T: Transvection) -> Morphism:
    g = GroupRef.artin(T.group)
    images = tuple(tv_apply(T, (i,)) for i in range(1, T.group.rank + 1))
    return Morphism(f"T{T.param}", g, g, images)


# -- the commensurator family T_{md+1} ----------------------------------------


def comm_sequence(d: int, count: int) -> list[int]:
    """Pairwise coprime integers, all 1 mod d: n_1 = 1+d, n_{i+1} = 1 + d n_1...n_i."""
    if d < 3 or count < 1:
        raise ValueError("need d >= 3 and count >= 1")
    out = [1 + d]
    while len(out) < count:
        out.append(1 + d * prod(out))
    return out


def _transvection_on_pairs(d: int, m: int):
    """T_{md+1} acting on elements a zeta^j encoded as pairs (l(a), j)."""
    def act(elem: tuple[int, int]) -> tuple[int, int]:
        ell, j = elem
        # T(a zeta^j) = a zeta^{m l(a)} (zeta^{md+1})^j
        return ell, m * ell + (m * d + 1) * j
    return act


def comm_composite(d: int, m: int, k: int) -> int:
    """The lambda-parameter of T_{md+1} o T_{kd+1}, read off from a length-1 element."""
    first, second = _transvection_on_pairs(d, k), _transvection_on_pairs(d, m)
    return second(first((1, 0)))[1]


def comm_compose_check(d: int, m: int, k: int) -> bool:
    M = comm_composite(d, m, k)
    first, second = _transvection_on_pairs(d, k), _transvection_on_pairs(d, m)
    on_zeta = second(first((0, 1)))[1]
    return M * d + 1 == (m * d + 1) * (k * d + 1) == on_zeta
