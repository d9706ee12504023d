"""Command-line surface: word utilities, statement checks, metric experiments.

Words are read and written as whitespace-separated signed generator indices
("1 -2 3" means s_1 s_2^-1 s_3).  Curves are read the same way over the free
generators and printed as "x4 x5 x6".  Every report-producing verb honours
``--json PATH`` and exits 0 exactly when the run recorded zero failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, lab, verify
from .cosets import eta, eta_inverse, psi
from .curves import act, curve, enclosed_punctures
from .garside import (
    delta,
    equal,
    in_B_parabolic,
    in_standard_parabolic,
    normal_form,
    simple_word,
)
from .words import (
    TYPE_A,
    Interval,
    format_word,
    parse_word,
    type_a,
    type_b,
)

STATEMENTS = (
    "lemma1", "lemma2", "lemma3", "lemma4", "lemma5",
    "prop3", "prop4", "prop5", "prop6", "cross",
)


def _group(args):
    return type_a(args.rank) if args.type == "A" else type_b(args.rank)


def _word(args, text: str):
    return parse_word(text, _group(args))


def _write_json(args, payload: dict) -> None:
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _report_exit(args, report) -> int:
    payload = report.to_dict(stable=True)
    _write_json(args, payload)
    ok = not payload.get("failures")
    tag = payload.get("statement", "report")
    print(f"{tag}: {'PASS' if ok else 'FAIL'} "
          f"(trials={payload.get('trials')}, cases={payload.get('cases')})")
    for f in payload.get("failures", [])[:5]:
        print(f"  failure: {f}")
    return 0 if ok else 1


def cmd_nf(args) -> int:
    w = _word(args, args.word)
    if w.group.kind != TYPE_A:
        w = eta(w)
    nf = normal_form(w)
    parts = [f"power {nf.power}"]
    for f in nf.factors:
        parts.append(format_word(simple_word(nf.strands, f)))
    print(" | ".join(parts))
    _write_json(args, {"power": nf.power,
                       "factors": [list(f) for f in nf.factors],
                       "version": __version__})
    return 0


def cmd_eq(args) -> int:
    u, v = _word(args, args.left), _word(args, args.right)
    same = equal(u, v)
    print("equal" if same else "different")
    _write_json(args, {"equal": same, "version": __version__})
    return 0 if same else 1


def cmd_member(args) -> int:
    w = _word(args, args.word)
    I = Interval(args.m, args.k, args.rank)
    member = (in_standard_parabolic if w.group.kind == TYPE_A else in_B_parabolic)(w, I)
    print("member" if member else "not a member")
    _write_json(args, {"member": member, "interval": [I.m, I.k],
                       "version": __version__})
    return 0 if member else 1


def cmd_act(args) -> int:
    w = parse_word(args.word, type_a(args.rank))
    loop = tuple(int(t) for t in args.curve.split())
    c = act(w, curve(args.rank, loop))
    text = " ".join((f"x{x}" if x > 0 else f"x{-x}^-1") for x in c.loop)
    print(text if text else "(trivial)")
    _write_json(args, {"curve": list(c.loop),
                       "punctures": sorted(enclosed_punctures(c)),
                       "version": __version__})
    return 0


def cmd_eta(args) -> int:
    x = parse_word(args.word, type_b(args.rank))
    print(format_word(eta(x)))
    return 0


def cmd_eta_inv(args) -> int:
    y = parse_word(args.word, type_a(args.rank))
    print(format_word(eta_inverse(y)))
    return 0


def cmd_psi(args) -> int:
    y = parse_word(args.word, type_a(args.rank))
    print(format_word(psi(y)))
    return 0


def cmd_check(args) -> int:
    n, trials, seed = args.rank, args.trials, args.seed
    dispatch = {
        "lemma1": lambda: verify.check_lemma1(n),
        "lemma2": lambda: verify.check_lemma2(n, trials=trials, seed=seed),
        "lemma3": lambda: verify.check_lemma3(n, trials=trials, seed=seed),
        "lemma4": lambda: verify.check_lemma4(n, trials=trials, seed=seed),
        "lemma5": lambda: verify.check_lemma5(n),
        "prop3": lambda: verify.check_prop3_prop5(n, trials=trials, seed=seed),
        "prop5": lambda: verify.check_prop3_prop5(n, trials=trials, seed=seed),
        "prop4": lambda: verify.check_prop4(n, trials=trials, seed=seed),
        "prop6": lambda: verify.check_prop6(n, trials=trials, seed=seed),
        "cross": lambda: verify.check_cross_validation(n, trials=trials, seed=seed),
    }
    return _report_exit(args, dispatch[args.statement]())


def cmd_bfs(args) -> int:
    w = _word(args, args.word)
    trunc = lab.GeneratorTruncation(args.kind, w.group,
                                    max_word_len=args.max_word_len,
                                    max_delta_power=args.max_delta_power)
    path = lab.shortest_path_words(w, trunc, radius_cap=args.radius_cap)
    if path is None:
        print(f"no factorization within radius {args.radius_cap}")
        bound = None
    else:
        bound = len(path)
        assert lab.replay_path(path, w)
        print(f"norm bound {bound}")
        for g in path:
            print(f"  {format_word(g)}")
    _write_json(args, {"bound": bound,
                       "path": None if path is None else [list(g.letters) for g in path],
                       "caps": {"kind": args.kind, "max_word_len": args.max_word_len,
                                "max_delta_power": args.max_delta_power,
                                "radius_cap": args.radius_cap},
                       "version": __version__})
    return 0 if path is not None else 1


def cmd_qi(args) -> int:
    report = lab.qi_estimate(args.rank, samples=args.samples, seed=args.seed,
                             kind=args.kind, max_word_len=args.max_word_len,
                             radius_cap=args.radius_cap)
    payload = report.to_dict(stable=True)
    _write_json(args, payload)
    print(f"qi-{args.kind}: resolved {payload['aggregate']['resolved']} samples, "
          f"max ratio {payload['aggregate']['max_ratio_b_over_a']}")
    return 0


def cmd_distortion(args) -> int:
    report = lab.distortion_probe(args.rank, powers=args.powers, seed=args.seed,
                                  max_word_len=args.max_word_len,
                                  radius_cap=args.radius_cap)
    payload = report.to_dict(stable=True)
    _write_json(args, payload)
    for rec in payload["records"]:
        print(f"power {rec['power']}: P bound {rec['p_bound']}, NP bound {rec['np_bound']}")
    return 0


def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    # the subparser copies suppress their defaults: a subparser parses into a
    # fresh namespace and copies it back wholesale, so any default it applies
    # would clobber a flag given before the verb
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", choices=("A", "B"), default=d("A"),
                        help="group family for word verbs (default A)")
    common.add_argument("--rank", type=int, default=d(3), help="rank n (default 3)")
    common.add_argument("--seed", type=int, default=d(0), help="RNG seed (default 0)")
    common.add_argument("--json", metavar="PATH", default=d(None),
                        help="write a JSON report to PATH")
    common.add_argument("--config", metavar="PATH", default=d(None),
                        help="JSON file of flag defaults, overridden by the command line")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parabolic-qi",
        description="Braid-group coset rewriting, curve actions, and metric checks.",
        parents=[_global_flags(defaults=True)],
    )
    parser.add_argument("--version", action="version", version=__version__)

    # global flags are repeated on every subparser so they may appear on
    # either side of the verb
    sub_common = _global_flags(defaults=False)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[sub_common], **kw))

    p = sub.add_parser("nf", help="left-greedy normal form of a word")
    p.add_argument("word")
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("eq", help="group-element equality of two words")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=cmd_eq)

    p = sub.add_parser("member", help="membership in a standard parabolic subgroup")
    p.add_argument("word")
    p.add_argument("m", type=int, help="least generator index of the interval")
    p.add_argument("k", type=int, help="number of generators in the interval")
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("act", help="act a type-A word on a curve")
    p.add_argument("word")
    p.add_argument("curve", help="free-group loop as signed indices, e.g. '4 5 6'")
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("eta", help="image of a type-B word in the type-A group")
    p.add_argument("word")
    p.set_defaults(fn=cmd_eta)

    p = sub.add_parser("eta-inv", help="preimage of a 1-pure type-A word")
    p.add_argument("word")
    p.set_defaults(fn=cmd_eta_inv)

    p = sub.add_parser("psi", help="quasi-inverse of the monomorphism")
    p.add_argument("word")
    p.set_defaults(fn=cmd_psi)

    p = sub.add_parser("check", help="run one statement check and report")
    p.add_argument("--statement", choices=STATEMENTS, required=True)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("bfs", help="norm upper bound over a truncated generating set")
    p.add_argument("word")
    p.add_argument("--kind", choices=("P", "NP"), default="P")
    p.add_argument("--max-word-len", type=int, default=2)
    p.add_argument("--max-delta-power", type=int, default=1)
    p.add_argument("--radius-cap", type=int, default=4)
    p.set_defaults(fn=cmd_bfs)

    p = sub.add_parser("qi", help="matched norm-bound comparison across the monomorphism")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--kind", choices=("P", "NP"), default="NP")
    p.add_argument("--max-word-len", type=int, default=2)
    p.add_argument("--radius-cap", type=int, default=4)
    p.set_defaults(fn=cmd_qi)

    p = sub.add_parser("distortion", help="norm bounds along a power family")
    p.add_argument("--powers", type=int, default=4)
    p.add_argument("--max-word-len", type=int, default=2)
    p.add_argument("--radius-cap", type=int, default=5)
    p.set_defaults(fn=cmd_distortion)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    # pre-scan for --config so its values become defaults the real flags override
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config", default=None)
    pre, _ = probe.parse_known_args(argv)
    if pre.config:
        with open(pre.config) as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            parser.error("--config must contain a JSON object of flag values")
        known = {a.dest for a in parser._actions}
        for subparsers in (a for a in parser._actions
                           if isinstance(a, argparse._SubParsersAction)):
            for sp in subparsers.choices.values():
                known |= {a.dest for a in sp._actions}
        normalized = {k.replace("-", "_"): v for k, v in cfg.items()}
        unknown = sorted(set(normalized) - known)
        if unknown:
            parser.error(f"unknown config keys: {', '.join(unknown)}")
        # config values become declared defaults everywhere, so they lose to
        # explicit flags on either side of the verb but beat built-in defaults
        parser.set_defaults(**normalized)
        global_dests = {"type", "rank", "seed", "json", "config"}
        for subparsers in (a for a in parser._actions
                           if isinstance(a, argparse._SubParsersAction)):
            for sp in subparsers.choices.values():
                dests = {a.dest for a in sp._actions} - global_dests
                sp.set_defaults(**{k: v for k, v in normalized.items() if k in dests})
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
