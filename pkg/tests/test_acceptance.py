"""Acceptance criteria, one test each, with a PASS/FAIL line printed per criterion.

Each test records its wall time and fails if it exceeds the stated bound.
"""

import random
import time
from contextlib import contextmanager
from math import gcd

import pytest

from artinaut.braid import (
    artin_action, braid_equal, braid_length, center_data, delta_word, garside_nf, is_central,
)
from artinaut.dihedral import dihedral_equal, is_central_dihedral
from artinaut.harness import ReportConfig, run_report
from artinaut.morphisms import (
    GroupRef, NotLiftable, T0_I2, affA_in_B, angular_projection, apply, compose, embed_AffC_in_A,
    embed_B_in_A, epsilon, eta_I2, eta_I2_unchecked, gamma_I2, identity, length_class,
    lift_mod_center, mod_center_images, tau_B, verify_morphism,
)
from artinaut.presentations import (
    A, B, F4, I2, exponent_sum, insert_relators, inverse, power, presentation, random_word,
)
from artinaut.reference import reference_tables
from artinaut.transvections import (
    Transvection, comm_compose_check, comm_sequence, tv_apply, tv_morphism, tv_structure,
    zeta_exponent,
)


@pytest.fixture
def criterion(capsys):
    """Context manager factory: collects failures, prints one PASS/FAIL line, then asserts."""

    @contextmanager
    def run(number, title, bound_s):
        failures: list = []
        start = time.perf_counter()
        yield failures
        elapsed = time.perf_counter() - start
        if elapsed > bound_s:
            failures.append(f"took {elapsed:.1f}s > {bound_s}s")
        tag = "PASS" if not failures else "FAIL"
        line = f"\n[{tag}] criterion {number}: {title} ({elapsed:.2f}s)"
        if failures:
            line += f"  {failures[:5]}"
        with capsys.disabled():
            print(line)
        assert not failures, failures

    return run


def test_criterion_01_oracle_soundness(criterion):
    with criterion(1, "braid oracles sound and in agreement", 30) as bad:
        pairs = 0
        for n in range(3, 7):
            for u, v in presentation(A(n)).relations:
                if not braid_equal(u, v, n):
                    bad.append(("relation", n, u, v))
            rng = random.Random(1000 + n)
            for _ in range(300):
                if rng.random() < 0.5:
                    u, v = random_word(rng, n, 16), random_word(rng, n, 16)
                else:
                    # an equal pair, the second written with a relator spliced in
                    u = random_word(rng, n, 8)
                    v = insert_relators(rng, u, presentation(A(n)), count=1)
                assert len(u) <= 16 and len(v) <= 16
                pairs += 1
                by_action = artin_action(u, n) == artin_action(v, n)
                if by_action != (garside_nf(u, n) == garside_nf(v, n)):
                    bad.append(("disagree", n, u, v))
        if pairs < 1000:
            bad.append(f"only {pairs} pairs")


def test_criterion_02_embeddings(criterion):
    with criterion(2, "B and affine C embeddings into the braid group", 5) as bad:
        for n in range(3, 7):
            for f in (embed_B_in_A(n), embed_AffC_in_A(n)):
                if not verify_morphism(f).ok:
                    bad.append((f.name, n))


def test_criterion_03_semidirect(criterion):
    with criterion(3, "affine A subgroup, δ rotation, angular projection", 10) as bad:
        for n in range(3, 7):
            inc, proj = affA_in_B(n), angular_projection(n)
            g = GroupRef.artin(B(n))
            if not verify_morphism(inc).ok:
                bad.append(("relations", n))
            delta = delta_word(n)
            for i in range(n):
                if not g.equal(delta + inc.images[i] + inverse(delta), inc.images[(i + 1) % n]):
                    bad.append(("rotation", n, i + 1))
                if exponent_sum(proj(inc.images[i])) != 0:
                    bad.append(("kernel", n, i + 1))
            if exponent_sum(proj(delta)) != 1:
                bad.append(("delta", n))


def test_criterion_04_catalog(criterion):
    with criterion(4, "ε, τ, γ, T0 and even-m η", 60) as bad:
        for n in range(3, 7):
            for t in (A(n), B(n)):
                f = epsilon(t)
                if length_class(f) != "reversing" or not verify_morphism(f).ok:
                    bad.append(("epsilon", t.tag))
        for m in range(3, 9):
            f = epsilon(I2(m))
            if length_class(f) != "reversing" or not verify_morphism(f).ok:
                bad.append(("epsilon", m))
            if not verify_morphism(gamma_I2(m)).ok:
                bad.append(("gamma", m))
            if m % 2 == 0 and not verify_morphism(eta_I2(m)).ok:
                bad.append(("eta", m))
        for n in (3, 4, 5):
            t = tau_B(n)
            g = GroupRef.artin(B(n))
            if not verify_morphism(t).ok:
                bad.append(("tau", n))
            if not all(g.equal(t(t((i,))), (i,)) for i in range(1, n + 1)):
                bad.append(("tau^2", n))
        if not verify_morphism(T0_I2(4)).ok:
            bad.append("T0")
        composite = compose(compose(gamma_I2(4), eta_I2(4)), epsilon(I2(4)))
        for a, b in zip(composite.images, T0_I2(4).images):
            if not dihedral_equal(a, b, 4):
                bad.append(("T0 = ε∘η∘γ", a, b))


def test_criterion_04_eta_all_labels(criterion):
    """η for m = 3..8. The length map sends the two sides of the odd-m relation to m+2 and m-2."""
    with criterion("4 (η, m=3..8)", "η respects the relation for every label", 10) as bad:
        for m in range(3, 9):
            if not verify_morphism(eta_I2_unchecked(m)).ok:
                bad.append(f"m={m}")


def test_criterion_05_centers(criterion):
    with criterion(5, "center generators central, lengths and class images", 30) as bad:
        for n in (3, 4, 5):
            zeta = power(delta_word(n), n + 1)
            if not is_central(zeta, n) or braid_length(zeta) != n * (n + 1):
                bad.append(("full twist", n))
        for n in (3, 4):
            if not is_central(embed_B_in_A(n)(center_data(B(n)).zeta), n):
                bad.append(("B", n))
        for m in range(3, 9):
            k = m // 2 if m % 2 == 0 else m
            cd = center_data(I2(m))
            if cd.zeta != power((1, 2), k) or not is_central_dihedral(cd.zeta, m):
                bad.append(("I2", m))
        for half in (2, 3, 4):
            if center_data(I2(2 * half)).ab_image != (half, half):
                bad.append(("I2 class image", 2 * half))
        if center_data(F4).ab_image != (12, 12):
            bad.append("F4 class image")
        for n in range(3, 9):
            if center_data(B(n)).ab_image != (n * (n - 1), n):
                bad.append(("B class image", n))


def test_criterion_06_transvections(criterion):
    with criterion(6, "k formula, Tv shapes, B(3) generator at word level", 30) as bad:
        grid = [(p, q) for p in range(-2, 3) for q in range(-2, 2)]
        assert len(grid) == 20
        for p, q in grid:
            for half in (2, 3, 4):
                if zeta_exponent(Transvection(I2(2 * half), (p, q))) != 1 + (p + q) * half:
                    bad.append(("I2", 2 * half, p, q))
            for n in (3, 4, 5):
                if zeta_exponent(Transvection(B(n), (p, q))) != 1 + (p * (n - 1) + q) * n:
                    bad.append(("B", n, p, q))
        for n in range(3, 9):
            if tv_structure(B(n)).kind != "Z" or tv_structure(A(n)).kind != "trivial":
                bad.append(("shape", n))
        if tv_structure(F4).kind != "Z" or tv_structure(I2(4)).kind != "D_inf":
            bad.append("shape F4 / I2(4)")
        if any(tv_structure(I2(2 * h)).kind != "Z" for h in (3, 4, 5)):
            bad.append("shape I2(2n), 2n >= 6")
        T = Transvection(B(3), tv_structure(B(3)).generators[0])
        if not verify_morphism(tv_morphism(T)).ok:
            bad.append("B(3) generator verify")
        g, eps = GroupRef.artin(B(3)), epsilon(B(3))
        for i in (1, 2, 3):
            if not g.equal(apply(eps, tv_apply(T, apply(eps, (i,)))), tv_apply(T, (i,))):
                bad.append(("commute with ε", i))


def test_criterion_07_commensurator(criterion):
    with criterion(7, "commensurator sequence and composition identity", 10) as bad:
        if comm_sequence(6, 3) != [7, 43, 1807]:
            bad.append("d=6 prefix")
        for d in (6, 12, 24):
            seq = comm_sequence(d, 6)
            if seq[0] != 1 + d or any(x % d != 1 for x in seq):
                bad.append(("residues", d))
            if any(gcd(a, b) != 1 for i, a in enumerate(seq) for b in seq[i + 1:]):
                bad.append(("coprime", d))
            for m in range(10):
                for k in range(10):
                    if not comm_compose_check(d, m, k):
                        bad.append(("compose", d, m, k))


def test_criterion_08_lift(criterion):
    with criterion(8, "lift from mod-center images", 10) as bad:
        rng = random.Random(8)
        for t in (A(3), B(3)):
            g = GroupRef.artin(t)
            for f, sense in ((identity(t), 1), (epsilon(t), -1)):
                shifts = [rng.randint(-3, 3) for _ in range(t.rank)]
                lifted = lift_mod_center(t, mod_center_images(f, shifts), sense)
                if not all(g.equal(a, b) for a, b in zip(lifted.images, f.images)):
                    bad.append((t.tag, f.name))
            try:
                lift_mod_center(t, [(1, 2), (2,), (3,)], 1)
                bad.append((t.tag, "residue violation accepted"))
            except NotLiftable:
                pass


def test_criterion_09_tables(criterion):
    with criterion(9, "reference tables for n=3..8", 5) as bad:
        for n in range(3, 9):
            tab = reference_tables(n)
            comm = f"Mod(S_{n + 2})"
            expect = {
                ("A", "out"): "C2", ("B", "out"): "(Z⋊C2)×C2", ("AffC", "out"): "Sym(3)×C2",
                ("AffA", "out"): f"D_{2 * n}×C2",
                ("A", "index"): 2 * (n + 2), ("B", "index"): 2 * (n + 1) * (n + 2),
                ("AffC", "index"): 2 * n * (n + 1) * (n + 2),
                ("AffA", "index"): 2 * n * (n + 1) * (n + 2),
                ("A", "comm_mod_center"): comm, ("B", "comm_mod_center"): comm,
                ("AffC", "comm"): comm, ("AffA", "comm"): comm,
                ("AffC", "nonsplit_flag"): n % 3 == 2,
                ("I2", "out_even"): "D_∞×C2", ("I2", "out_odd"): "C2",
            }
            for (key, field), want in expect.items():
                if tab[key][field] != want:
                    bad.append((n, key, field, tab[key][field]))


def test_criterion_10_full_report(criterion):
    with criterion(10, "report --ranks 3,4,5: zero failures, golden count", 120) as bad:
        rep = run_report(ReportConfig(ranks=[3, 4, 5]))
        if rep.summary["fail"]:
            bad.append([c.id for c in rep.checks if c.status == "fail"])
        if len(rep.checks) != 128 or rep.summary != {"pass": 126, "fail": 0, "skipped": 2}:
            bad.append(("count", len(rep.checks), rep.summary))
