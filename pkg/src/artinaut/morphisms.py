"""Generator-image homomorphisms, their verification, and the named catalog.

A morphism is a tuple of image words, one per domain generator. Verification
pushes both sides of every domain relation through the images and asks the
codomain's equality oracle. Equality in B(n), AffC and AffA is decided inside
the braid group through the embeddings below, which is sound because those
embeddings are injective; the report records that assumption.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Sequence

from .braid import (
    DEFAULT_CONFIG,
    CenterData,
    OracleConfig,
    braid_equal,
    center_data,
    delta_word,
    equal_mod_center,
)
from .dihedral import dihedral_equal
from .presentations import (
    ArtinType,
    Word,
    abelianization,
    exponent_sum,
    format_word,
    free_reduce,
    inverse,
    parse_word,
    power,
    presentation,
)
from .reference import reference_tables

__all__ = [
    "GroupRef", "Morphism", "VerifyReport", "UnsupportedVerification", "NotLiftable",
    "verify_morphism", "apply", "compose", "catalog", "CATALOG", "identity",
    "abelianization", "length_class", "lift_mod_center", "mod_center_images", "mark_verified",
    "embed_B_in_A", "embed_AffC_in_A", "epsilon", "graph_auto", "tau_B", "eta_I2",
    "eta_I2_unchecked", "gamma_I2", "T0_I2", "affA_in_B", "angular_projection",
    "reference_tables",
]


class UnsupportedVerification(RuntimeError):
    pass


class NotLiftable(ValueError):
    pass


@dataclass(frozen=True)
class GroupRef:
    """A group words live in, bound to the oracle deciding equality there.

    ``kind`` is ``"artin"`` (an ArtinType), ``"braid"`` (A(A_n) seen as the braid
    group on n+1 strands), ``"modcenter"`` (an ArtinType modulo its center) or
    ``"Z"`` (the integers, one generator).
    """

    kind: str
    type: ArtinType | None = None
    n: int = 0

    @classmethod
    def artin(cls, t: ArtinType) -> "GroupRef":
        return cls("artin", t)

    @classmethod
    def braid(cls, n: int) -> "GroupRef":
        return cls("braid", None, n)

    @classmethod
    def mod_center(cls, t: ArtinType) -> "GroupRef":
        return cls("modcenter", t)

    @classmethod
    def integers(cls) -> "GroupRef":
        return cls("Z")

    @classmethod
    def parse(cls, tag: str) -> "GroupRef":
        if tag == "Z":
            return cls.integers()
        if tag.startswith("Braid:"):
            return cls.braid(int(tag.split(":", 1)[1]))
        if tag.endswith("/Z"):
            return cls.mod_center(ArtinType.parse(tag[:-2]))
        return cls.artin(ArtinType.parse(tag))

    @property
    def tag(self) -> str:
        if self.kind == "Z":
            return "Z"
        if self.kind == "braid":
            return f"Braid:{self.n}"
        if self.kind == "modcenter":
            return f"{self.type.tag}/Z"
        return self.type.tag

    @property
    def rank(self) -> int:
        if self.kind == "Z":
            return 1
        if self.kind == "braid":
            return self.n
        return self.type.rank

    def relations(self) -> tuple[tuple[Word, Word], ...]:
        if self.kind == "Z":
            return ()
        if self.kind == "braid":
            return presentation(ArtinType("A", self.n)).relations
        rels = presentation(self.type).relations
        if self.kind == "modcenter":
            cd = center_data(self.type)
            if not isinstance(cd, CenterData):
                raise UnsupportedVerification(f"{self.type.tag} has trivial center")
            rels = rels + ((cd.zeta, ()),)
        return rels

    @property
    def has_oracle(self) -> bool:
        if self.kind in ("Z", "braid"):
            return True
        if self.type.family == "F4":
            return False
        if self.kind == "modcenter":
            return self.type.family in ("A", "B")
        return True

    def equal(self, u: Sequence[int], v: Sequence[int],
              config: OracleConfig = DEFAULT_CONFIG) -> bool:
        if not self.has_oracle:
            raise UnsupportedVerification(f"no equality oracle for {self.tag}")
        if self.kind == "Z":
            return exponent_sum(u) == exponent_sum(v)
        if self.kind == "braid":
            return braid_equal(u, v, self.n, config)
        t = self.type
        if t.family == "I2":
            return dihedral_equal(u, v, t.param)
        n = t.rank
        if t.family == "A":
            push = tuple
        else:
            push = _braid_pusher(t)
        if self.kind == "modcenter":
            return equal_mod_center(push(u), push(v), n, config)
        return braid_equal(push(u), push(v), n, config)


def _braid_pusher(t: ArtinType) -> Callable[[Sequence[int]], Word]:
    n = t.rank
    if t.family == "B":
        emb = embed_B_in_A(n)
        return lambda w: apply(emb, w)
    if t.family == "AffC":
        emb = embed_AffC_in_A(n)
        return lambda w: apply(emb, w)
    if t.family == "AffA":
        chain = compose(affA_in_B(n), embed_B_in_A(n))
        return lambda w: apply(chain, w)
    raise UnsupportedVerification(f"no braid embedding for {t.tag}")


@dataclass(frozen=True)
class Morphism:
    name: str
    domain: GroupRef
    codomain: GroupRef
    images: tuple[Word, ...]
    verified: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.images) != self.domain.rank:
            raise ValueError(
                f"{self.name}: {len(self.images)} images for a rank {self.domain.rank} domain")
        r = self.codomain.rank
        for im in self.images:
            if any(abs(x) > r or x == 0 for x in im):
                raise ValueError(f"{self.name}: image {im} outside codomain rank {r}")

    def __call__(self, w: Sequence[int]) -> Word:
        return apply(self, w)

    def to_text(self) -> str:
        doc = {
            "name": self.name,
            "domain": self.domain.tag,
            "codomain": self.codomain.tag,
            "images": [format_word(im) for im in self.images],
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Morphism":
        doc = json.loads(text)
        cod = GroupRef.parse(doc["codomain"])
        return cls(doc["name"], GroupRef.parse(doc["domain"]), cod,
                   tuple(parse_word(s, cod.rank) for s in doc["images"]))


@dataclass
class VerifyReport:
    ok: bool
    failures: list[int]
    checked: int


def verify_morphism(f: Morphism, config: OracleConfig = DEFAULT_CONFIG) -> VerifyReport:
    """Check every domain relation in the codomain; collects all failures."""
    if not f.codomain.has_oracle:
        raise UnsupportedVerification(f"no equality oracle for {f.codomain.tag}")
    rels = f.domain.relations()
    failures = [k for k, (u, v) in enumerate(rels)
                if not f.codomain.equal(apply(f, u), apply(f, v), config)]
    return VerifyReport(not failures, failures, len(rels))


def mark_verified(f: Morphism, config: OracleConfig = DEFAULT_CONFIG) -> Morphism:
    report = verify_morphism(f, config)
    if not report.ok:
        raise ValueError(f"{f.name} violates relations {report.failures}")
    return replace(f, verified=True)


def apply(f: Morphism, w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if x == 0 or abs(x) > f.domain.rank:
            raise ValueError(f"letter {x} outside domain of {f.name}")
        out.extend(f.images[x - 1] if x > 0 else inverse(f.images[-x - 1]))
    return free_reduce(out)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``f`` first, then ``g``."""
    if f.codomain != g.domain:
        raise ValueError(f"cannot compose {f.codomain.tag} -> {g.domain.tag}")
    return Morphism(f"{g.name}.{f.name}", f.domain, g.codomain,
                    tuple(apply(g, im) for im in f.images))


# -- the catalog -------------------------------------------------------------


def identity(t: ArtinType) -> Morphism:
    g = GroupRef.artin(t)
    return Morphism("identity", g, g, tuple((i,) for i in range(1, t.rank + 1)))


@lru_cache(maxsize=None)
def embed_B_in_A(n: int) -> Morphism:
    images = [(i,) for i in range(1, n)] + [(n, n)]
    return Morphism("embed_B_in_A", GroupRef.artin(ArtinType("B", n)), GroupRef.braid(n),
                    tuple(images))


@lru_cache(maxsize=None)
def embed_AffC_in_A(n: int) -> Morphism:
    images = [(1, 1)] + [(i,) for i in range(2, n)] + [(n, n)]
    return Morphism("embed_AffC_in_A", GroupRef.artin(ArtinType("AffC", n)), GroupRef.braid(n),
                    tuple(images))


def epsilon(t: ArtinType) -> Morphism:
    g = GroupRef.artin(t)
    return Morphism("epsilon", g, g, tuple((-i,) for i in range(1, t.rank + 1)))


def graph_auto(n: int, rotation: int = 0, reflection: int | None = None) -> Morphism:
    """Symmetry of the n-cycle graph of AffA: t_i -> t_{i+rotation}, or t_i -> t_{reflection-i}."""
    g = GroupRef.artin(ArtinType("AffA", n))
    if reflection is None:
        images = [((i - 1 + rotation) % n + 1,) for i in range(1, n + 1)]
        name = f"graph_auto[rot {rotation % n}]"
    else:
        images = [((reflection - i - 1) % n + 1,) for i in range(1, n + 1)]
        name = f"graph_auto[refl {reflection % n}]"
    return Morphism(name, g, g, tuple(images))


def tau_B(n: int) -> Morphism:
    g = GroupRef.artin(ArtinType("B", n))
    images = [(n - i,) for i in range(1, n)]
    images.append(inverse(delta_word(n) + tuple(range(n - 1, 0, -1))))
    return Morphism("tau_B", g, g, tuple(images))


def _dihedral(m: int) -> GroupRef:
    return GroupRef.artin(ArtinType("I2", m))


def eta_I2(m: int) -> Morphism:
    if m % 2:
        raise ValueError(f"eta is defined for even m only (relation lengths differ for m={m})")
    g = _dihedral(m)
    return Morphism("eta_I2", g, g, ((1, 2, 1), (-1,)))


def eta_I2_unchecked(m: int) -> Morphism:
    """The same images as ``eta_I2`` for any m; not a homomorphism when m is odd."""
    g = _dihedral(m)
    return Morphism("eta_I2", g, g, ((1, 2, 1), (-1,)))


def gamma_I2(m: int) -> Morphism:
    g = _dihedral(m)
    return Morphism("gamma_I2", g, g, ((2,), (1,)))


def T0_I2(m: int = 4) -> Morphism:
    if m != 4:
        raise ValueError("T0 is the exceptional transvection of I2(4)")
    g = _dihedral(4)
    return Morphism("T0_I2", g, g, ((1,), (-1, -2, -1)))


@lru_cache(maxsize=None)
def affA_in_B(n: int) -> Morphism:
    """t_i -> delta^(i-1) s_1 delta^(1-i) in A(B_n)."""
    delta = delta_word(n)
    images = tuple(free_reduce(power(delta, i - 1) + (1,) + power(delta, 1 - i))
                   for i in range(1, n + 1))
    return Morphism("affA_in_B", GroupRef.artin(ArtinType("AffA", n)),
                    GroupRef.artin(ArtinType("B", n)), images)


def angular_projection(n: int) -> Morphism:
    images = tuple(() for _ in range(n - 1)) + ((1,),)
    return Morphism("angular_projection", GroupRef.artin(ArtinType("B", n)),
                    GroupRef.integers(), images)


CATALOG: dict[str, Callable[..., Morphism]] = {
    "embed_B_in_A": embed_B_in_A,
    "embed_AffC_in_A": embed_AffC_in_A,
    "epsilon": epsilon,
    "graph_auto": graph_auto,
    "tau_B": tau_B,
    "eta_I2": eta_I2,
    "gamma_I2": gamma_I2,
    "T0_I2": T0_I2,
    "affA_in_B": affA_in_B,
    "angular_projection": angular_projection,
}


def catalog(name: str, n: int, *, family: str = "A", rotation: int = 0,
            reflection: int | None = None) -> Morphism:
    """Build a named morphism. ``n`` is the rank, or the label m for the I2 maps.

    ``family`` selects the group for ``epsilon``/``identity``; ``rotation`` and
    ``reflection`` select the symmetry for ``graph_auto``.
    """
    if name == "identity":
        return identity(ArtinType(family, n))
    if name == "epsilon":
        return epsilon(ArtinType(family, n))
    if name == "graph_auto":
        return graph_auto(n, rotation, reflection)
    try:
        builder = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown morphism {name!r}") from None
    if name == "T0_I2":
        return builder(n)
    if name.endswith("_I2"):
        if n < 3:
            raise ValueError(f"I2 label must be >= 3, got {n}")
        return builder(n)
    if n < 3:
        raise ValueError(f"rank must be >= 3, got {n}")
    return builder(n)


# -- length, lifting ---------------------------------------------------------


def length_class(f: Morphism) -> str:
    lengths = {exponent_sum(im) for im in f.images}
    if lengths == {1}:
        return "preserving"
    if lengths == {-1}:
        return "reversing"
    return "neither"


def lift_mod_center(t: ArtinType, images_mod_Z: Sequence[Sequence[int]], sense: int) -> Morphism:
    """Lift a length preserving (sense=+1) or reversing (-1) map given mod Z.

    Each image b is replaced by the unique b * zeta^k in its coset with
    length equal to ``sense``.
    """
    if sense not in (1, -1):
        raise ValueError("sense must be +1 or -1")
    cd = center_data(t)
    if not isinstance(cd, CenterData):
        raise NotLiftable(f"{t.tag} has trivial center")
    lifted = []
    for i, im in enumerate(images_mod_Z, start=1):
        ell = exponent_sum(im)
        if (ell - sense) % cd.d:
            raise NotLiftable(f"image of s_{i} has length {ell}, not {sense} mod {cd.d}")
        k = (sense - ell) // cd.d
        lifted.append(free_reduce(tuple(im) + power(cd.zeta, k)))
    g = GroupRef.artin(t)
    return Morphism("lift", g, g, tuple(lifted))


def mod_center_images(f: Morphism, shifts: Sequence[int]) -> tuple[Word, ...]:
    """Representatives of ``f``'s images modulo Z, shifted by zeta^shifts[i]."""
    cd = center_data(f.domain.type)
    return tuple(im + power(cd.zeta, k) for im, k in zip(f.images, shifts))
