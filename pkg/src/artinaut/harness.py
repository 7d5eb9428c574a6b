"""The verification report: every word-level claim re-checked mechanically.

Checks run in a fixed declared order. Each one either passes, fails with a
witness, or is skipped with a reason (budget exhausted, or an open question
that has nothing to compute). Randomised checks draw from an RNG seeded by the
report seed and the check id, so results do not depend on execution order.
"""

from __future__ import annotations

import json
import random
import time
from math import gcd
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from . import __version__
from .braid import (
    OracleConfig,
    artin_action,
    braid_equal,
    braid_length,
    braid_perm,
    center_data,
    delta_word,
    garside_nf,
    is_central,
)
from .dihedral import dihedral_equal, is_central_dihedral
from .freegroup import BudgetExceeded
from .morphisms import (
    GroupRef,
    apply,
    compose,
    embed_AffC_in_A,
    embed_B_in_A,
    epsilon,
    eta_I2,
    gamma_I2,
    graph_auto,
    identity,
    length_class,
    lift_mod_center,
    mod_center_images,
    T0_I2,
    affA_in_B,
    angular_projection,
    tau_B,
    verify_morphism,
)
from .presentations import (
    A,
    AffA,
    AffC,
    B,
    F4,
    I2,
    ArtinType,
    coxeter_matrix,
    exponent_sum,
    format_word,
    insert_relators,
    inverse,
    presentation,
    random_word,
)
from .reference import affC_splits, index_formulas, reference_tables
from .transvections import (
    Transvection,
    comm_compose_check,
    comm_sequence,
    is_automorphism,
    tv_apply,
    tv_morphism,
    tv_structure,
    zeta_exponent,
)

STATUSES = ("pass", "fail", "skipped")

EMBEDDING_ASSUMPTION = (
    "equality in B, AffC, AffA decided in the braid group through injective embeddings"
)


class Skip(Exception):
    pass


class CheckFailed(Exception):
    def __init__(self, witness: dict) -> None:
        super().__init__(witness)
        self.witness = witness


@dataclass
class CheckResult:
    id: str
    anchor: str
    params: dict
    status: str
    ms: float = 0.0
    witness: dict | None = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witness:
            raise ValueError("failed checks carry a witness")

    def to_dict(self) -> dict:
        d = {"id": self.id, "anchor": self.anchor, "params": self.params, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        d["ms"] = self.ms
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        return cls(d["id"], d["anchor"], d["params"], d["status"], d["ms"], d.get("witness"))


@dataclass
class ReportConfig:
    ranks: list[int] = field(default_factory=lambda: [3, 4, 5])
    seed: int = 0
    letters: int = 10**6
    random_length: int = 16
    garside_threshold: int = 64
    pairs_per_rank: int = 300
    labels: list[int] = field(default_factory=lambda: list(range(3, 9)))
    rank_ceiling: int = 8

    def __post_init__(self) -> None:
        for n in self.ranks:
            if not 3 <= n <= self.rank_ceiling:
                raise ValueError(f"rank {n} outside 3..{self.rank_ceiling}")
        for m in self.labels:
            if m < 3:
                raise ValueError(f"I2 label {m} must be >= 3")

    @property
    def oracle(self) -> OracleConfig:
        return OracleConfig(self.letters, self.garside_threshold)

    @property
    def budgets(self) -> dict:
        return {
            "letters": self.letters,
            "random_length": self.random_length,
            "garside_threshold": self.garside_threshold,
            "pairs_per_rank": self.pairs_per_rank,
        }


@dataclass
class Report:
    version: str
    config: dict
    checks: list[CheckResult]

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        report = cls(d["version"], d["config"], [CheckResult.from_dict(c) for c in d["checks"]])
        if report.summary != d["summary"]:
            raise ValueError("summary does not match checks")
        return report

    def to_text(self) -> str:
        tags = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}
        lines = [f"artinaut {self.version} report, seed {self.config['seed']}, "
                 f"ranks {self.config['ranks']}"]
        for c in self.checks:
            line = f"[{tags[c.status]}] {c.id} ({c.anchor})"
            if c.witness is not None:
                line += f"  {json.dumps(c.witness, ensure_ascii=False)}"
            lines.append(line)
        s = self.summary
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
        return "\n".join(lines) + "\n"


# -- individual checks -------------------------------------------------------
#
# Every check is a zero-argument callable that returns on success, raises
# CheckFailed(witness) on failure and Skip(reason) when there is nothing to do.

Check = tuple[str, str, dict, Callable[[], None]]


def _require(cond: bool, **witness: Any) -> None:
    if not cond:
        raise CheckFailed({k: _plain(v) for k, v in witness.items()} or {"condition": "false"})


def _plain(v: Any) -> Any:
    if isinstance(v, tuple) and all(isinstance(x, int) for x in v):
        return format_word(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def _presentation_check(t: ArtinType) -> Callable[[], None]:
    def run() -> None:
        M = coxeter_matrix(t)
        pres = presentation(t)
        finite = sum(1 for i in range(1, M.n + 1) for j in range(i + 1, M.n + 1)
                     if M.m(i, j) != float("inf"))
        _require(len(pres.relations) == finite, relations=len(pres.relations), expected=finite)
        for (u, v) in pres.relations:
            i, j = u[0], u[1]
            _require(len(u) == len(v) == M.m(i, j), relation=[u, v])
    return run


def _crosscheck(n: int, cfg: ReportConfig, rng: random.Random) -> Callable[[], None]:
    def run() -> None:
        pres = presentation(A(n))
        L = cfg.random_length
        for _ in range(cfg.pairs_per_rank):
            if rng.random() < 0.5:
                u = random_word(rng, n, max(L - 8, 1))
                v = insert_relators(rng, u, pres, count=1)
            else:
                u = random_word(rng, n, L)
                v = random_word(rng, n, L)
            by_action = artin_action(u, n, cfg.oracle) == artin_action(v, n, cfg.oracle)
            by_nf = garside_nf(u, n) == garside_nf(v, n)
            _require(by_action == by_nf, u=u, v=v, action=by_action, garside=by_nf)
    return run


def _braid_relations(n: int, cfg: ReportConfig) -> Callable[[], None]:
    def run() -> None:
        for u, v in presentation(A(n)).relations:
            _require(braid_equal(u, v, n, cfg.oracle), relation=[u, v])
    return run


def _invariance(n: int, cfg: ReportConfig, rng: random.Random) -> Callable[[], None]:
    def run() -> None:
        pres = presentation(A(n))
        for _ in range(50):
            u = random_word(rng, n, cfg.random_length)
            v = insert_relators(rng, u, pres, count=2)
            _require(braid_length(u) == braid_length(v) and braid_perm(u, n) == braid_perm(v, n),
                     u=u, v=v)
    return run


def _center_A(n: int, cfg: ReportConfig) -> Callable[[], None]:
    def run() -> None:
        cd = center_data(A(n))
        _require(braid_length(cd.zeta) == n * (n + 1), length=braid_length(cd.zeta))
        _require(is_central(cd.zeta, n, cfg.oracle), zeta=cd.zeta)
    return run


def _center_B(n: int, cfg: ReportConfig) -> Callable[[], None]:
    def run() -> None:
        cd = center_data(B(n))
        image = apply(embed_B_in_A(n), cd.zeta)
        _require(is_central(image, n, cfg.oracle), image=image)
        full_twist = center_data(A(n)).zeta
        _require(braid_equal(image, full_twist, n, cfg.oracle), image=image)
        _require(cd.ab_image == (n * (n - 1), n), ab_image=cd.ab_image)
    return run


def _center_I2(m: int) -> Callable[[], None]:
    def run() -> None:
        cd = center_data(I2(m))
        _require(is_central_dihedral(cd.zeta, m), zeta=cd.zeta)
        _require(cd.d == (m if m % 2 == 0 else 2 * m), d=cd.d)
        if m % 2 == 0:
            _require(cd.ab_image == (m // 2, m // 2), ab_image=cd.ab_image)
    return run


def _center_F4() -> None:
    cd = center_data(F4)
    _require(cd.ab_image == (12, 12) and cd.d == 24, ab_image=cd.ab_image, d=cd.d)


def _verify(build: Callable[[], Any], cfg: ReportConfig,
            expect: str | None = None) -> Callable[[], None]:
    def run() -> None:
        f = build()
        rep = verify_morphism(f, cfg.oracle)
        rels = f.domain.relations()
        _require(rep.ok, morphism=f.name, failed=[list(rels[k]) for k in rep.failures])
        if expect is not None:
            _require(length_class(f) == expect, morphism=f.name, length_class=length_class(f))
    return run


def _tau_involution(n: int, cfg: ReportConfig) -> Callable[[], None]:
    def run() -> None:
        t2 = compose(tau_B(n), tau_B(n))
        g = GroupRef.artin(B(n))
        for i, im in enumerate(t2.images, start=1):
            _require(g.equal(im, (i,), cfg.oracle), generator=i, image=im)
    return run


def _affA_rotation(n: int, cfg: ReportConfig) -> Callable[[], None]:
    def run() -> None:
        f = affA_in_B(n)
        g = GroupRef.artin(B(n))
        delta = delta_word(n)
        for i in range(n):
            conj = delta + f.images[i] + inverse(delta)
            _require(g.equal(conj, f.images[(i + 1) % n], cfg.oracle), generator=i + 1)
    return run


def _affA_kernel(n: int) -> None:
    p, f = angular_projection(n), affA_in_B(n)
    for i, im in enumerate(f.images, start=1):
        _require(exponent_sum(apply(p, im)) == 0, generator=i)
    _require(exponent_sum(apply(p, delta_word(n))) == 1, delta="not sent to 1")


def _tv_B(n: int, cfg: ReportConfig) -> Callable[[], None]:
    def run() -> None:
        struct = tv_structure(B(n))
        _require(struct.kind == "Z" and struct.generators == ((1, -(n - 1)),),
                 structure=[struct.kind, list(struct.generators)])
        T = Transvection(B(n), struct.generators[0])
        _require(is_automorphism(T), k=zeta_exponent(T))
        f = tv_morphism(T)
        rep = verify_morphism(f, cfg.oracle)
        _require(rep.ok, failed=rep.failures)
    return run


def _tv_epsilon(n: int, cfg: ReportConfig) -> Callable[[], None]:
    def run() -> None:
        T = Transvection(B(n), tv_structure(B(n)).generators[0])
        eps = epsilon(B(n))
        g = GroupRef.artin(B(n))
        for i in range(1, n + 1):
            conj = apply(eps, tv_apply(T, apply(eps, (i,))))
            _require(g.equal(conj, tv_apply(T, (i,)), cfg.oracle), generator=i)
    return run


def _tv_formula_grid() -> None:
    for n in (3, 4, 5, 6):
        for p in range(-2, 3):
            for q in range(-2, 3):
                k = zeta_exponent(Transvection(B(n), (p, q)))
                _require(k == 1 + (p * (n - 1) + q) * n, type=f"B:{n}", p=p, q=q, k=k)
    for half in (2, 3, 4):
        for p in range(-2, 3):
            for q in range(-2, 3):
                k = zeta_exponent(Transvection(I2(2 * half), (p, q)))
                _require(k == 1 + (p + q) * half, type=f"I2:{2 * half}", p=p, q=q, k=k)
    for p in range(-2, 3):
        for q in range(-2, 3):
            k = zeta_exponent(Transvection(F4, (p, q)))
            _require(k == 1 + (p + q) * 12, type="F4", p=p, q=q, k=k)


def _tv_structures(cfg: ReportConfig) -> None:
    for n in cfg.ranks:
        _require(tv_structure(A(n)).kind == "trivial", type=f"A:{n}")
        _require(tv_structure(B(n)).kind == "Z", type=f"B:{n}")
    _require(tv_structure(F4) == tv_structure(F4).__class__("Z", ((1, -1),)), type="F4")
    _require(tv_structure(I2(4)).kind == "D_inf", type="I2:4")
    for m in cfg.labels:
        want = "trivial" if m % 2 else ("D_inf" if m == 4 else "Z")
        _require(tv_structure(I2(m)).kind == want, type=f"I2:{m}")


def _T0_identity() -> None:
    composite = compose(compose(gamma_I2(4), eta_I2(4)), epsilon(I2(4)))
    for i, (a, b) in enumerate(zip(composite.images, T0_I2(4).images), start=1):
        _require(dihedral_equal(a, b, 4), generator=i, composite=a, T0=b)
    T = Transvection(I2(4), (0, -1))
    for i in (1, 2):
        _require(dihedral_equal(tv_apply(T, (i,)), T0_I2(4).images[i - 1], 4), generator=i)


def _lift(t: ArtinType, cfg: ReportConfig, rng: random.Random) -> Callable[[], None]:
    def run() -> None:
        g = GroupRef.artin(t)
        for f, sense in ((identity(t), 1), (epsilon(t), -1)):
            shifts = [rng.randint(-2, 2) for _ in range(t.rank)]
            lifted = lift_mod_center(t, mod_center_images(f, shifts), sense)
            for i, (a, b) in enumerate(zip(lifted.images, f.images), start=1):
                _require(g.equal(a, b, cfg.oracle), morphism=f.name, generator=i, lifted=a)
        try:
            lift_mod_center(t, [(1, 2)] + [(i,) for i in range(2, t.rank + 1)], 1)
        except ValueError:
            return
        raise CheckFailed({"error": "residue-violating input was lifted"})
    return run


def _comm(d: int) -> Callable[[], None]:
    def run() -> None:
        seq = comm_sequence(d, 6)
        _require(seq[0] == 1 + d, first=seq[0])
        _require(all(x % d == 1 for x in seq), sequence=[str(x) for x in seq])
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                _require(gcd(seq[i], seq[j]) == 1, pair=[i + 1, j + 1])
        for m in range(10):
            for k in range(10):
                _require(comm_compose_check(d, m, k), m=m, k=k)
    return run


def _tables(n: int) -> Callable[[], None]:
    def run() -> None:
        tab = reference_tables(n)
        idx = index_formulas(n)
        _require(tab["A"]["index"] == 2 * (n + 2) == idx["A"], index=tab["A"]["index"])
        _require(tab["B"]["index"] == 2 * (n + 1) * (n + 2), index=tab["B"]["index"])
        _require(tab["AffC"]["index"] == 2 * n * (n + 1) * (n + 2), index=tab["AffC"]["index"])
        _require(tab["AffA"]["index"] == n * tab["B"]["index"], index=tab["AffA"]["index"])
        _require(tab["AffC"]["nonsplit_flag"] == (n % 3 == 2) == (not affC_splits(n)),
                 flag=tab["AffC"]["nonsplit_flag"])
        _require(tab["AffA"]["out"] == f"D_{2 * n}×C2", out=tab["AffA"]["out"])
    return run


def _open_question(reason: str) -> Callable[[], None]:
    def run() -> None:
        raise Skip(reason)
    return run


def checks(cfg: ReportConfig) -> Iterator[Check]:
    """All checks in report order, as (id, anchor, params, callable)."""

    def rng(cid: str) -> random.Random:
        return random.Random(f"{cfg.seed}:{cid}")

    families = (("A", A), ("B", B), ("AffA", AffA), ("AffC", AffC))
    for n in cfg.ranks:
        for name, make in families:
            yield (f"presentation.{name}:{n}", "Coxeter matrix and alternating relations of length m_ij",
                   {"n": n}, _presentation_check(make(n)))
    for m in cfg.labels:
        yield (f"presentation.I2:{m}", "two generators, one alternating relation of length m", {"m": m},
               _presentation_check(I2(m)))
    yield ("presentation.F4", "F4 labels 3, 4, 3 on a path", {}, _presentation_check(F4))

    for n in cfg.ranks:
        yield (f"oracle.relations.A:{n}", "both sides of each relation are equal braids", {"n": n},
               _braid_relations(n, cfg))
        cid = f"oracle.crosscheck.A:{n}"
        yield (cid, "free-group action vs Garside normal form", {"n": n},
               _crosscheck(n, cfg, rng(cid)))
        cid = f"oracle.invariants.A:{n}"
        yield (cid, "length and strand permutation are invariant under relator insertion",
               {"n": n}, _invariance(n, cfg, rng(cid)))
    for m in cfg.labels:
        yield (f"oracle.relation.I2:{m}", "dihedral relation holds in the normal form", {"m": m},
               lambda m=m: _require(dihedral_equal((1, 2) * (m // 2) + (1,) * (m % 2),
                                                   (2, 1) * (m // 2) + (2,) * (m % 2), m)))

    for n in cfg.ranks:
        yield (f"center.A:{n}", "full twist is central with length n(n+1)",
               {"n": n}, _center_A(n, cfg))
    for n in cfg.ranks:
        yield (f"center.B:{n}", "δ^n is central after embedding; class image (n(n−1), n)", {"n": n}, _center_B(n, cfg))
    for m in cfg.labels:
        yield (f"center.I2:{m}", "center generator per center_data is central; class image (m/2, m/2) for even m",
               {"m": m}, _center_I2(m))
    yield ("center.F4", "F4 center class image (12, 12)", {}, _center_F4)

    for n in cfg.ranks:
        yield (f"morphism.embed_B_in_A:{n}", "s_i ↦ σ_i, s_n ↦ σ_n² respects relations",
               {"n": n}, _verify(lambda n=n: embed_B_in_A(n), cfg))
        yield (f"morphism.embed_AffC_in_A:{n}", "s_1 ↦ σ_1², s_n ↦ σ_n², others σ_i, respects relations", {"n": n},
               _verify(lambda n=n: embed_AffC_in_A(n), cfg))
        yield (f"morphism.affA_in_B:{n}", f"t_i = δ^(i-1) s_1 δ^(1-i) satisfy the affine A relations; {EMBEDDING_ASSUMPTION}",
               {"n": n}, _verify(lambda n=n: affA_in_B(n), cfg))
        yield (f"morphism.angular_projection:{n}", "s_n ↦ 1, s_i ↦ 0 is a homomorphism to Z",
               {"n": n}, _verify(lambda n=n: angular_projection(n), cfg))
        for name, make in families:
            yield (f"morphism.epsilon.{name}:{n}", "ε: s_i ↦ s_i^-1 respects relations and reverses length", {"n": n},
                   _verify(lambda make=make, n=n: epsilon(make(n)), cfg, expect="reversing"))
        yield (f"morphism.tau_B:{n}", "τ(s_i)=s_(n-i), τ(s_n)=(δ s_(n-1)…s_1)^-1 respects relations", {"n": n},
               _verify(lambda n=n: tau_B(n), cfg, expect="neither"))
        yield (f"morphism.tau_involution:{n}", "τ∘τ fixes every generator", {"n": n},
               _tau_involution(n, cfg))
        yield (f"morphism.graph_auto.rotation:{n}", "symmetries of the n-cycle permute the affine generators",
               {"n": n}, _verify(lambda n=n: graph_auto(n, rotation=1), cfg, expect="preserving"))
        yield (f"morphism.graph_auto.reflection:{n}", "symmetries of the n-cycle permute the affine generators",
               {"n": n}, _verify(lambda n=n: graph_auto(n, reflection=0), cfg,
                                 expect="preserving"))
        yield (f"semidirect.rotation:{n}",
               "δ-conjugation sends t_i to t_(i+1) cyclically", {"n": n},
               _affA_rotation(n, cfg))
        yield (f"semidirect.kernel:{n}", "angular projection kills every t_i and sends δ to 1", {"n": n},
               lambda n=n: _affA_kernel(n))
    for m in cfg.labels:
        yield (f"morphism.gamma_I2:{m}", "γ: a ↔ b respects the relation", {"m": m},
               _verify(lambda m=m: gamma_I2(m), cfg, expect="preserving"))
        yield (f"morphism.epsilon.I2:{m}", "ε: s_i ↦ s_i^-1 respects relations and reverses length", {"m": m},
               _verify(lambda m=m: epsilon(I2(m)), cfg, expect="reversing"))
        if m % 2 == 0:
            yield (f"morphism.eta_I2:{m}", "η: a ↦ aba, b ↦ a^-1 respects the relation (m even)",
                   {"m": m}, _verify(lambda m=m: eta_I2(m), cfg))
    yield ("morphism.T0_I2:4", "T0: a ↦ a, b ↦ (aba)^-1 respects the relation", {"m": 4},
           _verify(lambda: T0_I2(4), cfg))
    yield ("morphism.T0_identity", "T0 equals ε∘η∘γ and the transvection (0, -1)", {"m": 4},
           _T0_identity)

    yield ("transvection.k_formula", "ζ-exponent k of a transvection on a parameter grid", {}, _tv_formula_grid)
    yield ("transvection.structure", "transvection group shape per type", {},
           lambda: _tv_structures(cfg))
    for n in cfg.ranks:
        yield (f"transvection.B:{n}", "generator transvection has k = 1 and respects relations", {"n": n},
               _tv_B(n, cfg))
        yield (f"transvection.epsilon.B:{n}", "generator transvection commutes with ε", {"n": n},
               _tv_epsilon(n, cfg))
    yield ("transvection.F4_index", "F4 automorphism index", {},
           _open_question("open question: index of Tv(A)⋊Aut*(A) in Aut(A(F4)) is unknown"))

    for n in cfg.ranks:
        for name, make in (("A", A), ("B", B)):
            cid = f"lift.{name}:{n}"
            yield (cid, "lift from mod-center images recovers the identity and ε", {"n": n},
                   _lift(make(n), cfg, rng(cid)))

    for d in (6, 12, 24):
        yield (f"commensurator.sequence:{d}", "n_1 = 1+d, n_(i+1) = 1 + d·n_1⋯n_i; composition of T_(md+1)", {"d": d},
               _comm(d))

    for n in cfg.ranks:
        yield (f"tables:{n}", "index formulas and AffC splitting flag",
               {"n": n}, _tables(n))
    yield ("tables.affC_sym3_splitting", "AffC Sym(3) splitting at word level", {},
           _open_question("no word-level generator images for the Sym(3) splitting"))


def run_check(cid: str, anchor: str, params: dict, fn: Callable[[], None]) -> CheckResult:
    start = time.perf_counter()
    witness = None
    try:
        fn()
        status = "pass"
    except Skip as exc:
        status, witness = "skipped", {"reason": str(exc)}
    except BudgetExceeded as exc:
        status, witness = "skipped", {"reason": f"budget-exceeded: {exc}"}
    except CheckFailed as exc:
        status, witness = "fail", exc.witness
    except Exception as exc:  # a module error is a failed check, never a crash
        status, witness = "fail", {"error": f"{type(exc).__name__}: {exc}"}
    ms = round((time.perf_counter() - start) * 1000, 3)
    return CheckResult(cid, anchor, params, status, ms, witness)


def run_report(cfg: ReportConfig | None = None) -> Report:
    cfg = cfg or ReportConfig()
    config = {"ranks": list(cfg.ranks), "seed": cfg.seed, "budgets": cfg.budgets,
              "labels": list(cfg.labels)}
    results = [run_check(*c) for c in checks(cfg)]
    return Report(__version__, config, results)
