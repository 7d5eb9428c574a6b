"""Structure data that is recorded rather than computed.

Out and Comm descriptors, finite-index subgroup indices inside the mapping
class group Mod(S_{n+2}), exact sequence shapes and splitting flags.
"""

from __future__ import annotations


def index_formulas(n: int) -> dict[str, int]:
    """Indices of the subgroups fixing 1, 2, 3 punctures, and of the AffA subgroup."""
    gamma_B = 2 * (n + 1) * (n + 2)
    return {
        "A": 2 * (n + 2),
        "B": gamma_B,
        "AffC": 2 * n * (n + 1) * (n + 2),
        "AffA": n * gamma_B,
    }


def affC_splits(n: int) -> bool:
    """Whether 1 -> Gamma_C -> Aut -> Sym(3) x C2 -> 1 splits (n+2 = 0 or 2 mod 3)."""
    return (n + 2) % 3 != 1


def out_I2(m: int) -> str:
    return "C2" if m % 2 else "D_∞×C2"


def reference_tables(n: int) -> dict:
    if n < 3:
        raise ValueError(f"rank must be >= 3, got {n}")
    idx = index_formulas(n)
    comm = f"Mod(S_{n + 2})"
    return {
        "A": {
            "out": "C2",
            "out_mod_center": "C2",
            "comm_mod_center": comm,
            "subgroup": "Γ_A",
            "index": idx["A"],
            "fixed_punctures": 1,
            "exact_sequence": "1 → Γ_A → Aut(Γ_A) → C2 → 1",
            "splits": True,
        },
        "B": {
            "out": "(Z⋊C2)×C2",
            "out_mod_center": "C2×C2",
            "comm_mod_center": comm,
            "subgroup": "Γ_B",
            "index": idx["B"],
            "fixed_punctures": 2,
            "exact_sequence": "1 → Γ_B → Aut(Γ_B) → C2×C2 → 1",
            "splits": True,
            "aut": "(Γ_B×Tv(A))⋊(C2×C2)",
            "semidirect": [f"A(B_{n}) ≅ A(Ã_{n - 1})⋊Z", f"Γ_B ≅ A(Ã_{n - 1})⋊Z/{n}Z"],
            "center": f"{n}Z in the cyclic factor",
        },
        "AffC": {
            "out": "Sym(3)×C2",
            "comm": comm,
            "subgroup": "Γ_C̃",
            "index": idx["AffC"],
            "fixed_punctures": 3,
            "exact_sequence": "1 → Γ_C̃ → Aut(Γ_C̃) → Sym(3)×C2 → 1",
            "splits": affC_splits(n),
            "nonsplit_flag": not affC_splits(n),
        },
        "AffA": {
            "out": f"D_{2 * n}×C2",
            "comm": comm,
            "subgroup": "Γ_Ã",
            "index": idx["AffA"],
            "exact_sequence": f"1 → Γ_Ã → Aut(Γ_Ã) → D_{2 * n}×C2 → 1",
            "splits": True,
        },
        "I2": {
            "out_odd": "C2",
            "out_even": "D_∞×C2",
            "out_mod_center_odd": "units of Z/mZ",
        },
        "F4": {
            "tv": "Z",
            "open": "index of Tv(A)⋊Aut*(A) in Aut(A(F4)) is not known",
        },
    }
