"""Command-line frontend.

Every subcommand prints a result envelope

    {"status": ..., "payload": {...}, "citations": [...], "runtime_ms": ...}

in JSON mode (the default), or a readable text rendering with ``--format
text``.  The payload is deterministic for fixed inputs and seeds; only
``runtime_ms`` varies between runs.  Exit codes: 0 on success, 2 when the
answer is unknown or inconclusive, 1 on input errors (with exact flag
diagnostics on stderr).

Property-style commands (``verify proposition-4-3``) take ``--seed`` and
``--samples``; defaults are seed 0 and 200 samples, and all randomness is
derived from the seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

from . import alexander, braid, compat, fpgroup, klein, seifert, slopes

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNKNOWN = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the contract here is 1.
    def error(self, message):  # noqa: D102
        raise _UsageError(message)


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def data_file(name: str) -> dict:
    """Load one of the bundled JSON data files by name."""
    with resources.files("locert.data").joinpath(name).open("r") as fh:
        return json.load(fh)


# --- subcommand handlers: return (status, payload, citations) ----------------


def _braid_sign(args) -> tuple[str, dict, list[str]]:
    word = braid.parse_word(args.word)
    sign = braid.dd_sign(word)
    return "ok", {"word": braid.word_str(word), "sign": sign.value}, [
        "Dubrovina-Dubrovin 2001: the positive-cone ordering of B3"
    ]


def _braid_compare(args):
    u = braid.parse_word(args.u)
    v = braid.parse_word(args.v)
    return "ok", {"comparison": braid.dd_compare(u, v).value}, []


def _braid_reduce(args):
    word = braid.parse_word(args.word)
    reduced = braid.handle_reduce(word)
    return "ok", {
        "word": braid.word_str(word),
        "reduced": braid.word_str(reduced),
        "trivial": not reduced,
    }, ["Dehornoy: handle reduction decides 1-positivity"]


def _braid_floor(args):
    word = braid.parse_word(args.word)
    return "ok", {"floor": braid.delta_floor(word)}, [
        "Malyutin: Delta^2 is cofinal in every left ordering of B3"
    ]


def _klein_fill(args):
    slope = klein.KleinPeripheral(args.m, args.n)
    result = klein.klein_fill(slope)
    ab = result.abelianization
    return "ok", {
        "slope": [slope.m, slope.n],
        "classification": result.kind.value,
        "abelianization": {"free_rank": ab.free_rank, "torsion": list(ab.torsion)},
        "note": result.note,
    }, []


def _klein_sign(args):
    g = klein.parse_element(args.element)
    ordering = klein.KleinOrderingId(args.ordering)
    return "ok", {
        "element": klein.element_str(g),
        "ordering": ordering.value,
        "sign": klein.k_sign(g, ordering).value,
    }, []


def _slope_delta(args):
    a = slopes.parse_slope(args.alpha)
    b = slopes.parse_slope(args.beta)
    return "ok", {"delta": slopes.intersection_number(a, b)}, []


def _slope_glue(args):
    matrix = _parse_matrix(args.matrix)
    alpha = slopes.parse_slope(args.slope)
    image = slopes.apply_gluing(matrix, alpha)
    return "ok", {"slope": slopes.slope_str(image)}, []


def _parse_matrix(text: str) -> slopes.GluingMatrix:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 4:
        raise ValueError("matrix must be 4 comma-separated integers, row-major")
    return slopes.GluingMatrix(*parts)


def _group_abelianize(args):
    p = fpgroup.Presentation.from_json(_load_json(args.presentation))
    ab = fpgroup.abelianization(p)
    return "ok", {"free_rank": ab.free_rank, "torsion": list(ab.torsion)}, []


def _group_fill(args):
    p = fpgroup.Presentation.from_json(_load_json(args.presentation))
    mu = fpgroup.parse_group_word(args.mu, p.generators)
    lam = fpgroup.parse_group_word(args.longitude, p.generators)
    slope = slopes.parse_slope(args.slope)
    filled = fpgroup.dehn_fill(p, mu, lam, (slope.p, slope.q))
    return "ok", {"presentation": filled.to_json()}, []


def _group_amalgam(args):
    p1 = fpgroup.Presentation.from_json(_load_json(args.presentation1))
    p2 = fpgroup.Presentation.from_json(_load_json(args.presentation2))
    pairs = []
    for text in args.pair or []:
        left, sep, right = text.partition("=")
        if not sep:
            raise ValueError(f"pair {text!r} must look like 'word = word'")
        pairs.append(
            (
                fpgroup.parse_group_word(left.strip(), p1.generators),
                fpgroup.parse_group_word(right.strip(), p2.generators),
            )
        )
    merged = fpgroup.amalgam(p1, p2, pairs)
    return "ok", {"presentation": merged.to_json()}, [
        "Seifert-Van Kampen: the fundamental group of a union"
    ]


def _group_enumerate(args):
    p = fpgroup.Presentation.from_json(_load_json(args.presentation))
    subgroup = [
        fpgroup.parse_group_word(w, p.generators) for w in (args.subgroup or [])
    ]
    index = fpgroup.coset_enumerate(p, subgroup, args.max_cosets)
    if index is None:
        return "inconclusive", {
            "index": None,
            "max_cosets": args.max_cosets,
        }, ["Todd-Coxeter: a closed coset table certifies the index"]
    return "ok", {"index": index, "max_cosets": args.max_cosets}, [
        "Todd-Coxeter: a closed coset table certifies the index"
    ]


_SPLICE_CITATIONS = [
    "Boyer-Rolfsen-Wiest: left-orderability from a nontrivial homomorphism "
    "to a left-orderable group; classification of Seifert fibred homology "
    "spheres",
    "Boyer-Gordon-Watson: Seifert fibred L-spaces are exactly the "
    "non-left-orderable ones",
    "Moser: surgery on torus knots",
]


def _splice_cert(args):
    tree = seifert.SpliceTree.from_json(_load_json(args.tree))
    outcome = seifert.certificate_search(tree, args.edge, args.bound)
    payload = {
        "status": outcome.status.value,
        "components": [c.to_json() for c in outcome.components],
        "certificate": outcome.certificate.to_json()
        if outcome.certificate
        else None,
    }
    if outcome.certificate is None:
        return "unknown", payload, _SPLICE_CITATIONS
    return "ok", payload, _SPLICE_CITATIONS


def _splice_verify(args):
    tree = seifert.SpliceTree.from_json(_load_json(args.tree))
    cert = seifert.Certificate.from_json(_load_json(args.certificate))
    ok, report = seifert.verify_certificate(tree, cert)
    return "ok", {"valid": ok, "report": report}, _SPLICE_CITATIONS


def _hf_rank(args):
    ranks = tuple(int(x) for x in args.ranks.split(","))
    params = seifert.HFParams(args.p, args.q, args.nu, ranks)
    return "ok", {"rank": seifert.hf_surgery_rank(params)}, [
        "rational surgery formula for the total Heegaard Floer rank"
    ]


def _cover_order(args):
    poly = alexander.parse_poly(args.poly)
    diag = alexander.validate_alexander(poly)
    if not diag.ok:
        raise ValueError(
            "not a normalized Alexander polynomial: "
            + "; ".join(diag.failed_checks())
        )
    order = alexander.branched_cover_order(poly, args.n)
    payload = {
        "polynomial": alexander.poly_str(poly),
        "n": args.n,
        "order": order if order is not None else "infinite",
    }
    if args.n % 2 == 0:
        payload["note"] = (
            "n is even: the n-fold branched cover admits a nontrivial "
            "homomorphism onto the fundamental group of the 2-fold one, so "
            "left-orderability descends from the double branched cover"
        )
    return "ok", payload, [
        "Fox (after Weber): branched-cover homology from Alexander "
        "polynomial values at roots of unity"
    ]


def _verify_compat(args):
    # Mechanized check of the orderings-compatibility proposition for the
    # trefoil / Klein-bottle gluing (the +4-surgery-on-figure-eight graph
    # manifold), over seeded random conjugators.
    from .sampling import random_braid_words

    samples = random_braid_words(args.seed, args.samples, args.max_len)
    failures = 0
    cases = []
    for word in samples:
        report = compat.verify_compatibility(word, args.grid_bound)
        failures += len(report.failures)
        cases.append(
            {
                "conjugator": report.conjugator,
                "ordering": report.ordering.value,
                "failures": len(report.failures),
            }
        )
    control = compat.verify_compatibility(
        braid.SIGMA1, args.grid_bound, force_ordering=klein.KleinOrderingId.O1
    )
    payload = {
        "seed": args.seed,
        "samples": args.samples,
        "grid_bound": args.grid_bound,
        "total_failures": failures,
        "wrong_ordering_control_failures": len(control.failures),
        "cases": cases if args.verbose_cases else None,
    }
    status = "ok" if failures == 0 and control.failures else "error"
    return status, payload, list(compat.REFERENCES)


def _verify_nonapplicability(args):
    report = compat.jsjlo_nonapplicability_report(args.slope_bound)
    return "ok", report.to_json(), list(compat.REFERENCES)


# --- wiring -------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="locert",
        description="Exact left-orderability certificates for graph-manifold "
        "fundamental groups",
    )
    parser.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    braid_p = sub.add_parser("braid", help="B3 word problem and DD ordering")
    braid_sub = braid_p.add_subparsers(dest="subcommand", required=True)
    p = braid_sub.add_parser("sign", help="DD sign of a braid word")
    p.add_argument("word")
    p.set_defaults(handler=_braid_sign)
    p = braid_sub.add_parser("compare", help="DD comparison of two words")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(handler=_braid_compare)
    p = braid_sub.add_parser("reduce", help="handle reduction")
    p.add_argument("word")
    p.set_defaults(handler=_braid_reduce)
    p = braid_sub.add_parser("floor", help="Delta^2 floor in the DD ordering")
    p.add_argument("word")
    p.set_defaults(handler=_braid_floor)

    klein_p = sub.add_parser("klein", help="Klein-bottle group computations")
    klein_sub = klein_p.add_subparsers(dest="subcommand", required=True)
    p = klein_sub.add_parser("fill", help="classify a filling of the twisted I-bundle")
    p.add_argument("m", type=int, help="y-exponent of the slope")
    p.add_argument("n", type=int, help="x^2-exponent of the slope")
    p.set_defaults(handler=_klein_fill)
    p = klein_sub.add_parser("sign", help="sign of x^a y^b in O1 or O2")
    p.add_argument("element", help="element such as 'x^2 y^-3'")
    p.add_argument("--ordering", choices=("O1", "O2"), default="O1")
    p.set_defaults(handler=_klein_sign)

    slope_p = sub.add_parser("slope", help="slope calculus on torus boundaries")
    slope_sub = slope_p.add_subparsers(dest="subcommand", required=True)
    p = slope_sub.add_parser("delta", help="minimal intersection number")
    p.add_argument("alpha", help="slope p/q")
    p.add_argument("beta", help="slope p/q")
    p.set_defaults(handler=_slope_delta)
    p = slope_sub.add_parser("glue", help="apply a gluing matrix to a slope")
    p.add_argument("--matrix", required=True, help="a,b,c,d row-major")
    p.add_argument("slope", help="slope p/q")
    p.set_defaults(handler=_slope_glue)

    group_p = sub.add_parser("group", help="finitely presented groups")
    group_sub = group_p.add_subparsers(dest="subcommand", required=True)
    p = group_sub.add_parser("abelianize", help="abelian invariants")
    p.add_argument("presentation", help="presentation JSON file")
    p.set_defaults(handler=_group_abelianize)
    p = group_sub.add_parser("fill", help="adjoin the Dehn-filling relator")
    p.add_argument("presentation")
    p.add_argument("--mu", required=True, help="meridian word")
    p.add_argument("--longitude", required=True, help="longitude word")
    p.add_argument("--slope", required=True, help="slope p/q")
    p.set_defaults(handler=_group_fill)
    p = group_sub.add_parser("amalgam", help="amalgamated product")
    p.add_argument("presentation1")
    p.add_argument("presentation2")
    p.add_argument(
        "--pair",
        action="append",
        help="identification 'word-in-first = word-in-second' (repeatable)",
    )
    p.set_defaults(handler=_group_amalgam)
    p = group_sub.add_parser("enumerate", help="Todd-Coxeter coset enumeration")
    p.add_argument("presentation")
    p.add_argument(
        "--subgroup", action="append", help="subgroup generator word (repeatable)"
    )
    p.add_argument("--max-cosets", type=int, default=100_000)
    p.set_defaults(handler=_group_enumerate)

    splice_p = sub.add_parser("splice", help="splice-tree certificates")
    splice_sub = splice_p.add_subparsers(dest="subcommand", required=True)
    p = splice_sub.add_parser("cert", help="search for a certificate")
    p.add_argument("tree", help="splice tree JSON file")
    p.add_argument("--bound", type=int, default=3, help="slope search bound")
    p.add_argument("--edge", type=int, default=None, help="preferred edge index")
    p.set_defaults(handler=_splice_cert)
    p = splice_sub.add_parser("verify", help="re-derive a certificate")
    p.add_argument("tree")
    p.add_argument("certificate")
    p.set_defaults(handler=_splice_verify)

    hf_p = sub.add_parser("hf", help="Heegaard Floer surgery rank")
    hf_sub = hf_p.add_subparsers(dest="subcommand", required=True)
    p = hf_sub.add_parser("rank", help="total rank of the p/q surgery")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--ranks", required=True, help="comma-separated ranks, all >= 1")
    p.set_defaults(handler=_hf_rank)

    cover_p = sub.add_parser("cover", help="cyclic branched covers")
    cover_sub = cover_p.add_subparsers(dest="subcommand", required=True)
    p = cover_sub.add_parser("order", help="|H1| of the n-fold branched cover")
    p.add_argument("--poly", required=True, help="Alexander polynomial in t")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cover_order)

    verify_p = sub.add_parser("verify", help="mechanized verifications")
    verify_sub = verify_p.add_subparsers(dest="subcommand", required=True)
    p = verify_sub.add_parser(
        "proposition-4-3",
        aliases=["compatibility"],
        help="orderings-compatibility check for the trefoil / Klein-bottle "
        "gluing on sampled conjugators",
    )
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid-bound", type=int, default=5)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--verbose-cases", action="store_true")
    p.set_defaults(handler=_verify_compat)
    p = verify_sub.add_parser(
        "nonapplicability",
        help="why no slope pair certifies the trefoil / Klein-bottle gluing",
    )
    p.add_argument("--slope-bound", type=int, default=5)
    p.set_defaults(handler=_verify_nonapplicability)

    return parser


_STATUS_EXIT = {
    "ok": EXIT_OK,
    "unknown": EXIT_UNKNOWN,
    "inconclusive": EXIT_UNKNOWN,
    "error": EXIT_INPUT_ERROR,
}


def run(argv: list[str] | None = None, out=None) -> int:
    """Run one command; returns the exit code."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    start = time.perf_counter()
    try:
        status, payload, citations = args.handler(args)
    except (
        ValueError,
        KeyError,
        OSError,
        json.JSONDecodeError,
        braid.BoundExceeded,
        braid.StepCapExceeded,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    runtime_ms = (time.perf_counter() - start) * 1000.0
    if args.format == "json":
        envelope = {
            "status": status,
            "payload": payload,
            "citations": citations,
            "runtime_ms": round(runtime_ms, 3),
        }
        print(json.dumps(envelope, indent=2, sort_keys=True), file=out)
    else:
        print(f"status: {status}", file=out)
        for line in _render_text(payload):
            print(line, file=out)
        for c in citations:
            print(f"  [{c}]", file=out)
    return _STATUS_EXIT.get(status, EXIT_INPUT_ERROR)


def _render_text(payload, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key in payload:
            value = payload[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}- {value}")
    else:
        lines.append(f"{pad}{payload}")
    return lines


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
