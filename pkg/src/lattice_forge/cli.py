"""Batch command-line front end.

Exit codes: 0 success, 1 check violation (or an undecided membership),
2 usage or input errors.  All randomized commands require an explicit
--seed.  Output is deterministic given flags and seeds; --workers only
changes scheduling, never results.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import catalog, classify, corpus, harness
from . import lattice as lat
from . import semigroup as sgp
from . import variety as var
from . import words as W
from .deduction import DeductionError, RewriteSystem, ZERO_WORD, derivable
from .replay import replay_exponent_bridge, replay_power_transfer


class CliError(Exception):
    pass


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _load_lattice(path: str) -> lat.FiniteLattice:
    try:
        return lat.load_file(path)
    except (OSError, json.JSONDecodeError, KeyError, lat.LatticeError) as exc:
        raise CliError(f"cannot load lattice {path!r}: {exc}") from exc


def _load_semigroup(path: str) -> sgp.FiniteSemigroup:
    try:
        if not Path(path).exists() and not path.endswith(".json"):
            return catalog.load_semigroup(path)  # bundled catalog name
        return sgp.load_file(path)
    except (OSError, json.JSONDecodeError, KeyError, sgp.SemigroupError) as exc:
        raise CliError(f"cannot load semigroup {path!r}: {exc}") from exc


def _parse_identity(text: str) -> W.Identity:
    try:
        return W.parse_identity(text)
    except W.ParseError as exc:
        raise CliError(f"bad identity {text!r}: {exc}") from exc


def cmd_lattice_check(args) -> int:
    L = _load_lattice(args.file)
    reports = classify.classify_all(L)
    if args.element:
        wanted = {L.index(name) for name in args.element}
        reports = [r for r in reports if r.element in wanted]
    _emit(classify.reports_to_json(L, reports))
    return 0


def _lemma_corpus(args):
    if args.file:
        yield Path(args.file).stem, _load_lattice(args.file)
    elif args.enumerate is not None:
        counts: dict[int, int] = {}
        for L in corpus.enumerate_small(args.enumerate):
            counts[L.n] = counts.get(L.n, 0) + 1
            yield f"n{L.n}-{counts[L.n]}", L
    else:
        for offset in range(args.random):
            seed = args.seed + offset
            yield f"random-s{args.size}-seed{seed}", corpus.random_lattice(args.size, seed)


def cmd_lattice_lemmas(args) -> int:
    pairs = list(_lemma_corpus(args))
    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            all_reports = list(
                pool.map(lambda item: harness.run_all(item[1], item[0]), pairs)
            )
    else:
        all_reports = [harness.run_all(L, lid) for lid, L in pairs]

    totals = {name: {"instances_tested": 0, "violations": []} for name in harness.LEMMA_NAMES}
    for reports in all_reports:
        for report in reports:
            bucket = totals[report.lemma]
            bucket["instances_tested"] += report.instances_tested
            for violation in report.violations:
                bucket["violations"].append({"lattice_id": report.lattice_id, **violation})
    summary = {
        "lattices_checked": len(pairs),
        "checks": [
            {"lemma": name, **totals[name]} for name in harness.LEMMA_NAMES
        ],
    }
    if args.enumerate is not None:
        by_size: dict[str, int] = {}
        for lid, L in pairs:
            by_size[str(L.n)] = by_size.get(str(L.n), 0) + 1
        summary["isomorphism_classes_by_size"] = by_size
    violations = sum(len(totals[name]["violations"]) for name in harness.LEMMA_NAMES)
    summary["violations_total"] = violations
    _emit(summary)
    return 1 if violations else 0


def cmd_sgp_check(args) -> int:
    S = _load_semigroup(args.file)
    ident = _parse_identity(args.identity)
    holds, witness = sgp.satisfies(S, ident)
    _emit({"identity": ident.to_text(), "satisfied": holds, "witness": witness})
    return 0


def cmd_sgp_info(args) -> int:
    S = _load_semigroup(args.file)
    profile = sgp.predicates(S)
    _emit({"name": S.name, "order": S.order, **profile.to_json()})
    return 0


def cmd_word_nf(args) -> int:
    try:
        w = W.parse_word(args.word)
    except W.ParseError as exc:
        raise CliError(f"bad word {args.word!r}: {exc}") from exc
    print(W.normal_form(w).to_text())
    return 0


def cmd_deduce(args) -> int:
    try:
        axioms = W.parse_identity_file(Path(args.axioms).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError(f"cannot read axioms {args.axioms!r}: {exc}") from exc
    except W.ParseError as exc:
        raise CliError(f"bad axiom file {args.axioms!r}: {exc}") from exc
    system = RewriteSystem(tuple(axioms))

    def parse_side(text: str) -> W.Word:
        if text.strip() == "0":
            return ZERO_WORD
        try:
            return W.parse_word(text)
        except W.ParseError as exc:
            raise CliError(f"bad word {text!r}: {exc}") from exc

    source = parse_side(args.source)
    target = parse_side(args.target)
    result = derivable(source, target, system, max_len=args.max_len, max_steps=args.max_steps)
    print(json.dumps({
        "verdict": result.status,
        "expansions": result.expansions,
        "visited": result.visited,
    }))
    if result.proof is not None:
        for step in result.proof.steps:
            print(json.dumps(step.to_json()))
    return 0


def cmd_replay_case2(args) -> int:
    report = replay_power_transfer(args.n, args.i, args.j, args.l, args.ip, args.jp, args.r)
    _emit(report.to_json())
    return 0 if report.ok else 1


def cmd_replay_case1(args) -> int:
    report = replay_exponent_bridge(args.m, args.k)
    _emit(report.to_json())
    return 0 if report.ok else 1


def cmd_variety_member(args) -> int:
    A = _load_semigroup(args.file)
    gens = [_load_semigroup(path) for path in args.gens]
    try:
        verdict = var.in_variety(A, gens, cap=args.cap)
    except var.ClosureCapExceededError as exc:
        _emit({"verdict": "resource-limit", "cap": exc.cap})
        return 1
    out = {"verdict": "yes" if verdict.member else "no", "pairs_explored": verdict.pairs_explored}
    if verdict.witness is not None:
        out["witness"] = verdict.witness.to_text()
    _emit(out)
    return 0


def cmd_variety_lattice(args) -> int:
    if args.catalog:
        paths = sorted(Path(args.catalog).glob("*.json"))
        if not paths:
            raise CliError(f"no semigroup files in {args.catalog!r}")
        semis = [_load_semigroup(str(path)) for path in paths]
    else:
        semis = [catalog.load_semigroup(name) for name in ("T1", "SL2", "ZM2", "N3")]
    try:
        gl = var.build_variety_lattice(semis, cap=args.cap)
    except var.ClosureCapExceededError as exc:
        _emit({"verdict": "resource-limit", "cap": exc.cap})
        return 1
    lat.save_file(gl.lattice, args.out)
    meta = {
        "join_is_exact": gl.join_is_exact,
        "meet_is_exact": gl.meet_is_exact,
        "nodes": {label: list(gens) for label, gens in sorted(gl.generators.items())},
    }
    meta_path = f"{args.out}.meta.json"
    with open(meta_path, "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")
    probe = var.probe_special_elements(gl)
    _emit({
        "lattice_file": args.out,
        "metadata_file": meta_path,
        "nodes": len(gl.generators),
        "probe": probe,
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-forge",
        description="finite lattices, special elements, nil identities, and desk-scale varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lattice_p = sub.add_parser("lattice", help="lattice classification and lemma sweeps")
    lattice_sub = lattice_p.add_subparsers(dest="subcommand", required=True)

    check_p = lattice_sub.add_parser("check", help="classify the elements of a lattice file")
    check_p.add_argument("file")
    check_p.add_argument("--element", action="append", help="restrict to named elements (repeatable)")
    check_p.set_defaults(func=cmd_lattice_check)

    lemmas_p = lattice_sub.add_parser("lemmas", help="run the lemma checks over a corpus")
    group = lemmas_p.add_mutually_exclusive_group(required=True)
    group.add_argument("--file", help="a single lattice file")
    group.add_argument("--enumerate", type=int, metavar="N", help="all lattices with at most N elements")
    group.add_argument("--random", type=int, metavar="COUNT", help="COUNT seeded random lattices")
    lemmas_p.add_argument("--size", type=int, help="random lattice size")
    lemmas_p.add_argument("--seed", type=int, help="base seed (consecutive seeds are used)")
    lemmas_p.add_argument("--workers", type=int, default=1)
    lemmas_p.set_defaults(func=cmd_lattice_lemmas)

    sgp_p = sub.add_parser("sgp", help="finite semigroup queries")
    sgp_sub = sgp_p.add_subparsers(dest="subcommand", required=True)
    sgp_check = sgp_sub.add_parser("check", help="does the semigroup satisfy an identity?")
    sgp_check.add_argument("file")
    sgp_check.add_argument("--identity", required=True)
    sgp_check.set_defaults(func=cmd_sgp_check)
    sgp_info = sgp_sub.add_parser("info", help="structural predicates")
    sgp_info.add_argument("file")
    sgp_info.set_defaults(func=cmd_sgp_info)

    word_p = sub.add_parser("word", help="word utilities")
    word_sub = word_p.add_subparsers(dest="subcommand", required=True)
    nf_p = word_sub.add_parser("nf", help="normal form in the commutative square-annihilating theory")
    nf_p.add_argument("word")
    nf_p.set_defaults(func=cmd_word_nf)

    deduce_p = sub.add_parser("deduce", help="bounded equational derivability")
    deduce_p.add_argument("--axioms", required=True, help="identity file")
    deduce_p.add_argument("--from", dest="source", required=True)
    deduce_p.add_argument("--to", dest="target", required=True)
    deduce_p.add_argument("--max-len", type=int, default=None)
    deduce_p.add_argument("--max-steps", type=int, default=None)
    deduce_p.set_defaults(func=cmd_deduce)

    replay_p = sub.add_parser("replay", help="replay the identity-transfer arguments")
    replay_sub = replay_p.add_subparsers(dest="subcommand", required=True)
    case2_p = replay_sub.add_parser("case2", help="two-block power identity transfer")
    for flag in ("n", "i", "j", "l", "ip", "jp", "r"):
        case2_p.add_argument(f"--{flag}", type=int, required=True)
    case2_p.set_defaults(func=cmd_replay_case2)
    case1_p = replay_sub.add_parser("case1", help="one-variable exponent bridge")
    case1_p.add_argument("--m", type=int, required=True)
    case1_p.add_argument("--k", type=int, required=True)
    case1_p.set_defaults(func=cmd_replay_case1)

    variety_p = sub.add_parser("variety", help="generated-variety membership and proxy lattices")
    variety_sub = variety_p.add_subparsers(dest="subcommand", required=True)
    member_p = variety_sub.add_parser("member", help="is A in the variety generated by the given semigroups?")
    member_p.add_argument("file")
    member_p.add_argument("--in", dest="gens", nargs="+", required=True)
    member_p.add_argument("--cap", type=int, default=None)
    member_p.set_defaults(func=cmd_variety_member)
    vlat_p = variety_sub.add_parser("lattice", help="build the proxy lattice of generated varieties")
    vlat_p.add_argument(
        "--catalog",
        help="directory of semigroup JSON files, at most 6 (default: bundled T1, SL2, ZM2, N3)",
    )
    vlat_p.add_argument("--out", required=True)
    vlat_p.add_argument("--cap", type=int, default=None)
    vlat_p.set_defaults(func=cmd_variety_lattice)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "func", None) is cmd_lattice_lemmas:
        if args.random is not None and (args.size is None or args.seed is None):
            parser.error("--random requires --size and --seed")
    try:
        return args.func(args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (lat.LatticeError, sgp.SemigroupError, W.ParseError, DeductionError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
