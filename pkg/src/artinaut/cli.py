"""Command line entry point.

Exit codes: 0 on success (or all checks passing), 1 when a verification or
report check fails, 2 on usage errors such as a bad type tag or word.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .braid import braid_length, braid_perm, garside_nf
from .harness import ReportConfig, run_report
from .morphisms import GroupRef, UnsupportedVerification, catalog, verify_morphism
from .presentations import ArtinType, format_word, parse_word
from .transvections import (
    Transvection,
    comm_sequence,
    is_automorphism,
    tv_apply,
    tv_structure,
    zeta_exponent,
)


class UsageError(Exception):
    pass


def _group(tag: str) -> GroupRef:
    try:
        return GroupRef.parse(tag)
    except ValueError as exc:
        raise UsageError(f"unknown type tag {tag!r}: {exc}") from None


def _braid_rank(tag: str) -> int:
    g = _group(tag)
    if g.kind == "braid":
        return g.rank
    if g.kind != "artin" or g.type.family != "A":
        raise UsageError(f"expected a braid type A:n or Braid:n, got {tag!r}")
    return g.rank


def _word(text: str, rank: int) -> tuple[int, ...]:
    try:
        return parse_word(text, rank)
    except ValueError as exc:
        raise UsageError(f"malformed word {text!r}: {exc}") from None


def cmd_eq(args: argparse.Namespace) -> int:
    g = _group(args.type)
    u, v = _word(args.word1, g.rank), _word(args.word2, g.rank)
    if not g.has_oracle:
        raise UsageError(f"no equality oracle for {g.tag}")
    print("equal" if g.equal(u, v) else "not equal")
    return 0


def cmd_nf(args: argparse.Namespace) -> int:
    n = _braid_rank(args.type)
    nf = garside_nf(_word(args.word, n), n)
    factors = " ".join("[" + ",".join(map(str, p)) + "]" for p in nf.factors)
    print(f"inf={nf.inf} factors={factors or '-'}")
    return 0


def cmd_len(args: argparse.Namespace) -> int:
    rank = _group(args.type).rank if args.type else None
    print(braid_length(_word(args.word, rank)))
    return 0


def cmd_perm(args: argparse.Namespace) -> int:
    n = _braid_rank(args.type)
    print(" ".join(map(str, braid_perm(_word(args.word, n), n))))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        f = catalog(args.morphism, args.n, family=args.family, rotation=args.rotation,
                    reflection=args.reflection)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from None
    if args.show:
        sys.stdout.write(f.to_text())
    try:
        rep = verify_morphism(f)
    except UnsupportedVerification as exc:
        raise UsageError(str(exc)) from None
    if rep.ok:
        print(f"ok ({rep.checked} relations checked)")
        return 0
    print(f"FAILED relations {rep.failures} ({rep.checked} relations checked)")
    return 1


def cmd_tv(args: argparse.Namespace) -> int:
    if args.comm_seq:
        d, count = args.comm_seq
        try:
            seq = comm_sequence(d, count)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(" ".join(map(str, seq)))
        return 0
    if not args.type:
        raise UsageError("tv needs --type or --comm-seq")
    try:
        t = ArtinType.parse(args.type)
        param = args.m if args.m is not None else (args.p, args.q)
        T = Transvection(t, param)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"k={zeta_exponent(T)} automorphism={'yes' if is_automorphism(T) else 'no'}")
    s = tv_structure(t)
    print(f"Tv={s.kind}" + (f" generators={list(s.generators)}" if s.generators else ""))
    if args.apply is not None:
        try:
            print(format_word(tv_apply(T, _word(args.apply, t.rank))))
        except UnsupportedVerification as exc:
            raise UsageError(str(exc)) from None
    return 0


def _ranks(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad rank list {text!r}") from None


def cmd_report(args: argparse.Namespace) -> int:
    try:
        cfg = ReportConfig(ranks=args.ranks, seed=args.seed, letters=args.letters)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_report(cfg)
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        s = report.summary
        print(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artinaut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("--type", required=True, help="A:n, B:n, AffA:n, AffC:n, I2:m, A:n/Z, B:n/Z")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("nf", help="Garside normal form of a braid")
    p.add_argument("--type", required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("len", help="length homomorphism")
    p.add_argument("--type")
    p.add_argument("word")
    p.set_defaults(func=cmd_len)

    p = sub.add_parser("perm", help="permutation of the strands")
    p.add_argument("--type", required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("verify", help="verify a catalog morphism against relations")
    p.add_argument("--morphism", required=True)
    p.add_argument("--n", type=int, required=True, help="rank, or the label m for *_I2 maps")
    p.add_argument("--family", default="A", help="group family for epsilon and identity")
    p.add_argument("--rotation", type=int, default=0)
    p.add_argument("--reflection", type=int)
    p.add_argument("--show", action="store_true", help="print the serialized morphism")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tv", help="transvection arithmetic")
    p.add_argument("--type")
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--m", type=int, help="parameter for cyclic abelianization")
    p.add_argument("--apply", metavar="WORD")
    p.add_argument("--comm-seq", nargs=2, type=int, metavar=("D", "COUNT"))
    p.set_defaults(func=cmd_tv)

    p = sub.add_parser("report", help="run the verification report")
    p.add_argument("--ranks", type=_ranks, default=[3, 4, 5])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--letters", type=int, default=10**6, help="letter budget")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"artinaut: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
