"""Command-line interface.

Subcommands: betti, critical, bridge-friendly, algorithm1, path-formulas,
classify, survey, verify-paper.  Exit codes: 0 success, 1 verification
failure, 2 parse/usage error, 3 size cap exceeded, 4 oracle disagreement.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from typing import Optional

from . import bm, classify, fixtures, graphs, homology, ideals, pathformulas, treebm
from .betti import BettiTable, shift_kind, table_to_json_obj
from .errors import BadParams, NotATree, ParseError, TooLarge

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_ORACLE = 4


def _parse_oracle_spec(spec: str) -> list:
    if not spec.startswith("gf:"):
        raise ParseError("oracle spec must look like gf:p or gf:p,p2")
    try:
        primes = [int(tok) for tok in spec[3:].split(",") if tok]
    except ValueError:
        raise ParseError(f"bad oracle spec {spec!r}") from None
    if not primes:
        raise ParseError("oracle spec names no primes")
    return primes


def _resolve_order(args, ideal, g: Optional[graphs.Graph]) -> ideals.GeneratorOrder:
    spec = args.order
    if spec == "tree-lex":
        if g is None or not graphs.is_tree(g):
            raise ParseError("--order tree-lex needs a tree input")
        t = graphs.root_and_label(g, getattr(args, "root", 0))
        return ideals.tree_lex_order(t, ideal)
    if spec == "canonical":
        return ideals.GeneratorOrder.identity(ideal.ngens)
    if spec.startswith("file:"):
        with open(spec[5:], "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        return ideals.order_from_json_obj(obj, ideal.ngens)
    raise ParseError(f"unknown order spec {spec!r}")


def _load_input(args):
    if getattr(args, "ideal_file", None):
        return None, ideals.load_ideal_file(args.ideal_file)
    g = graphs.load_graph_file(args.graph)
    if getattr(args, "ideal", "nbhd") == "path3":
        kind, n = _recognize_path_or_cycle(g)
        return g, ideals.three_path_ideal(kind, n)
    return g, ideals.closed_neighborhood_ideal(g)


def _recognize_path_or_cycle(g: graphs.Graph):
    degs = sorted(g.degree(v) for v in range(g.n))
    if graphs.is_tree(g) and all(d <= 2 for d in degs):
        return "path", g.n
    if graphs.is_connected(g) and degs and degs[0] == degs[-1] == 2:
        return "cycle", g.n
    raise ParseError("--ideal path3 needs a path or cycle graph")


def _print_table(table: BettiTable, as_json: bool, names=None) -> None:
    if as_json:
        print(json.dumps(table_to_json_obj(table)))
        return
    print(f"kind: {table.kind}")
    print(table.triangle())
    print(f"pdim: {table.pdim()}  reg: {table.reg()}")


def cmd_betti(args) -> int:
    g, ideal = _load_input(args)
    order = _resolve_order(args, ideal, g)
    table = bm.betti_from_critical(ideal, order)
    friendly = bm.is_bridge_friendly(ideal, order)
    if args.kind == "ideal":
        table = shift_kind(table, "ideal")
    _print_table(table, args.json)
    if not friendly:
        print("warning: order is not bridge-friendly; table is not authoritative",
              file=sys.stderr)
    if args.oracle:
        agree = True
        for p in _parse_oracle_spec(args.oracle):
            oracle = homology.betti_table_homology(ideal, p)
            if args.kind == "ideal":
                oracle = shift_kind(oracle, "ideal")
            agree &= oracle.entries == table.entries
        print("oracle: AGREE" if agree else "oracle: DISAGREE")
        if not agree:
            return EXIT_ORACLE
    return EXIT_OK


def cmd_critical(args) -> int:
    g, ideal = _load_input(args)
    order = _resolve_order(args, ideal, g)
    sets = bm.critical_sets(ideal, order)
    friendly = bm.is_bridge_friendly(ideal, order)
    obj = {
        "count": len(sets),
        "authoritative": friendly,
        "sets": [
            {"indices": sorted(s), "lcm_degree": ideal.lcm_of(s).degree} for s in sets
        ],
    }
    if args.json:
        print(json.dumps(obj))
    else:
        print(f"{len(sets)} critical sets (order bridge-friendly: {friendly})")
        for entry in obj["sets"]:
            print(f"  {entry['indices']} lcm degree {entry['lcm_degree']}")
    return EXIT_OK


def cmd_bridge_friendly(args) -> int:
    g, ideal = _load_input(args)
    if args.search:
        symmetries = None
        if g is not None and g.n <= 12:
            autos = graphs.automorphisms(g)
            symmetries = ideals.generator_symmetries(g, ideal, autos)
        order = bm.find_bridge_friendly_order(ideal, symmetries)
        if order is None:
            print("no bridge-friendly order exists")
            return EXIT_OK
        print(f"bridge-friendly order found: {list(order.perm)}")
        return EXIT_OK
    order = _resolve_order(args, ideal, g)
    verdict = bm.is_bridge_friendly(ideal, order)
    print("bridge-friendly" if verdict else "not bridge-friendly")
    return EXIT_OK


def cmd_algorithm1(args) -> int:
    g = graphs.load_graph_file(args.graph)
    t = graphs.root_and_label(g, args.root)
    witness = treebm.max_critical_set(t)
    ideal = ideals.closed_neighborhood_ideal(g)
    obj = witness.to_json_obj()
    if args.json:
        print(json.dumps(obj))
    else:
        names = [g.label(v) for v in range(g.n)]
        print("sigma:", ", ".join(ideal.generators[i].format(names) for i in sorted(witness.sigma)))
        print("V_sigma:", ", ".join(names[v] for v in sorted(witness.v_sigma)))
        print(f"size: {len(witness.sigma)} (= pdim of the quotient = independence number)")
    return EXIT_OK


def cmd_path_formulas(args) -> int:
    n = args.n
    ideal_table = pathformulas.path_table(n, "ideal")
    quotient_table = shift_kind(ideal_table, "quotient")
    if args.json:
        print(json.dumps({
            "n": n,
            "ideal": table_to_json_obj(ideal_table),
            "quotient": table_to_json_obj(quotient_table),
            "pdim_quotient": pathformulas.pdim_path(n, "quotient"),
            "reg_ideal": pathformulas.reg_path(n, "ideal"),
        }))
    else:
        print(f"closed neighborhood ideal of the {n}-path")
        for tab in (ideal_table, quotient_table):
            print(f"-- kind: {tab.kind}")
            print(tab.triangle())
        print(f"pdim(quotient) = {pathformulas.pdim_path(n, 'quotient')}, "
              f"reg(ideal) = {pathformulas.reg_path(n, 'ideal')}")
    if args.check:
        bad = []
        for r in range(n + 2):
            for d in range(2 * n + 3):
                if pathformulas.betti_NI_path_closed(n, r, d) != \
                        pathformulas.betti_NI_path_recursive(n, r, d):
                    bad.append((r, d))
        disc = pathformulas.closed_form_discrepancies(n)
        print(f"closed == recursion: {not bad}")
        print(f"verbatim transcription discrepancies: {len(disc)}")
        for r, d, a, b in disc:
            print(f"  (r={r}, d={d}): displayed {a} vs recursion {b}")
        if bad:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_classify(args) -> int:
    g = graphs.load_graph_file(args.graph)
    ideal = ideals.closed_neighborhood_ideal(g)
    report = classify.classify_graph(g, ideal)
    print(json.dumps(report.to_json_obj()))
    return EXIT_OK


# ----------------------------------------------------------------------------
# survey
# ----------------------------------------------------------------------------

def _betti_digest(table: BettiTable) -> str:
    import hashlib

    payload = ";".join(f"{r},{d},{v}" for (r, d), v in table.items())
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _survey_record(g: graphs.Graph, oracle_prime: int, probe_intra: bool) -> dict:
    clock = time.perf_counter
    t0 = clock()
    t = graphs.root_and_label(g)
    ideal = ideals.closed_neighborhood_ideal(g)
    order = ideals.tree_lex_order(t, ideal)
    t1 = clock()
    friendly = bm.is_bridge_friendly(ideal, order)
    sufficient = bm.satisfies_sufficient_condition(ideal, order)
    table = bm.betti_from_critical(ideal, order)
    t2 = clock()
    alpha = graphs.independence_number(g)
    mu = graphs.matching_number(g)
    pdim = table.pdim()
    reg = table.reg()
    assert pdim == alpha and reg == mu, "tree invariants violated"
    oracle = homology.betti_table_homology(ideal, oracle_prime)
    t3 = clock()
    record = {
        "id": graphs.canonical_tree_id(g),
        "n": g.n,
        "alpha": alpha,
        "matching": mu,
        "pdim": pdim,
        "reg": reg,
        "bridge_friendly": friendly,
        "sufficient_condition": sufficient,
        "betti_digest": _betti_digest(table),
        "oracle_agree": oracle.entries == table.entries,
        "millis": {
            "setup": round(1000 * (t1 - t0), 3),
            "critical": round(1000 * (t2 - t1), 3),
            "oracle": round(1000 * (t3 - t2), 3),
        },
    }
    if probe_intra:
        alt = ideals.tree_lex_order(
            graphs.root_and_label(g, intra_level="index"), ideal
        )
        record["bridge_friendly_alt_order"] = bm.is_bridge_friendly(ideal, alt)
    return record


def cmd_survey(args) -> int:
    limit = 12 if args.big else 10
    if args.max_n > limit:
        print(f"survey capped at n={limit} (use --big for 12)", file=sys.stderr)
        return EXIT_PARSE
    done = set()
    try:
        with open(args.out, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    done.add(json.loads(line)["id"])
    except FileNotFoundError:
        pass
    written = 0
    skipped = 0
    with open(args.out, "a", encoding="utf-8") as fh:
        for n in range(1, args.max_n + 1):
            for g in graphs.enumerate_trees(n):
                tree_id = graphs.canonical_tree_id(g)
                if tree_id in done:
                    skipped += 1
                    continue
                record = _survey_record(g, args.oracle_prime, args.probe_intra)
                fh.write(json.dumps(record) + "\n")
                fh.flush()
                written += 1
    print(json.dumps({"summary": {"written": written, "skipped": skipped,
                                  "max_n": args.max_n, "out": args.out}}))
    return EXIT_OK


# ----------------------------------------------------------------------------
# verification suite
# ----------------------------------------------------------------------------

def _fixture_chordal_six():
    g = fixtures.bridge_friendly_chordal_example()
    ideal = ideals.closed_neighborhood_ideal(g)
    expected = {
        frozenset({0, 1, 4}), frozenset({0, 2, 5}), frozenset({1, 2, 3}),
    }
    got = {frozenset(m.support) for m in ideal.generators}
    if got != expected:
        return False, f"generators {got}"
    if bm.bridges(ideal, range(3)):
        return False, "full subset has a bridge"
    for perm in itertools.permutations(range(3)):
        if not bm.is_bridge_friendly(ideal, ideals.GeneratorOrder(perm)):
            return False, f"order {perm} not bridge-friendly"
    fmt = {m.format(): i for i, m in enumerate(ideal.generators)}
    order = ideals.GeneratorOrder((fmt["x1x2x5"], fmt["x1x3x6"], fmt["x2x3x4"]))
    if bm.satisfies_sufficient_condition(ideal, order):
        return False, "triple condition unexpectedly holds"
    return True, "bridge-friendly, bridgeless full set, triple condition fails"


def _fixture_triple_condition_trees():
    count = 0
    for n in range(1, 11):
        for g in graphs.enumerate_trees(n):
            ideal = ideals.closed_neighborhood_ideal(g)
            order = ideals.tree_lex_order(graphs.root_and_label(g), ideal)
            if not bm.satisfies_sufficient_condition(ideal, order):
                return False, f"triple condition fails on {graphs.canonical_tree_id(g)}"
            count += 1
    return True, f"tree-lex triple condition holds on all {count} trees, n <= 10"


def _fixture_max_critical_tree():
    g = fixtures.max_critical_example_tree()
    t = graphs.root_and_label(g, 0)
    ideal = ideals.closed_neighborhood_ideal(g)
    witness = treebm.max_critical_set(t)
    expected_v = frozenset({1, 2, 6, 8, 9, 10, 11})
    expected_sigma = {
        frozenset(s) for s in [(0, 1, 3, 4), (0, 2, 5), (3, 6), (4, 8), (5, 9), (5, 10), (7, 11)]
    }
    got_sigma = {frozenset(ideal.generators[i].support) for i in witness.sigma}
    if witness.v_sigma != expected_v:
        return False, f"V_sigma = {sorted(witness.v_sigma)}"
    if got_sigma != expected_sigma:
        return False, f"sigma = {got_sigma}"
    return True, "12-vertex maximal critical set matches the published output"


def _fixture_nine_vertex_orders():
    g = fixtures.non_bridge_friendly_chordal_example()
    ideal = ideals.closed_neighborhood_ideal(g)
    lat = bm.SubsetLattice(ideal)
    failing = sum(
        0 if bm._order_is_bridge_friendly(lat, ideals.GeneratorOrder(p)) else 1
        for p in itertools.permutations(range(ideal.ngens))
    )
    ok = failing == 720
    return ok, f"9-vertex chordal: {failing}/720 orders non-bridge-friendly"


def _fixture_path_identity():
    t7 = pathformulas.path_table(7, "quotient")
    t5 = pathformulas.path_table(5, "quotient")
    lhs = t7.entry(3, 6)
    rhs = t5.entry(3, 6) + t5.entry(2, 4)
    g7 = graphs.path_graph(7)
    absent = treebm.tree_betti_recursive(graphs.root_and_label(g7)) is None
    ok = lhs == 4 and rhs == 3 and lhs != rhs and absent
    return ok, f"7-path vs 5-path: {lhs} != {rhs}, pruning hypothesis absent"


def _fixture_path_formulas():
    for n in range(3, 13):
        g = graphs.path_graph(n)
        ideal = ideals.closed_neighborhood_ideal(g)
        order = ideals.tree_lex_order(graphs.root_and_label(g), ideal)
        crit = shift_kind(bm.betti_from_critical(ideal, order), "ideal")
        oracle = shift_kind(homology.betti_table_homology(ideal), "ideal")
        for r in range(n + 1):
            for d in range(2 * n + 2):
                closed = pathformulas.betti_NI_path_closed(n, r, d)
                rec = pathformulas.betti_NI_path_recursive(n, r, d)
                if not closed == rec == crit.entry(r, d) == oracle.entry(r, d):
                    return False, f"four-way mismatch at n={n}, ({r},{d})"
    return True, "path formulas four-way agreement for n <= 12"


def _fixture_splittings():
    for n in range(4, 11):
        g = graphs.path_graph(n)
        ni = ideals.closed_neighborhood_ideal(g)
        edge = ideals.minimalize([ideals.Monomial.from_support(n, (n - 2, n - 1))], n)
        rest = ideals.embed(ideals.ideal_I_n(n - 1), n)
        if not pathformulas.verify_betti_splitting(ni, edge, rest):
            return False, f"neighborhood splitting fails at n={n}"
        i_n = ideals.ideal_I_n(n)
        j_n = ideals.minimalize([ideals.Monomial.from_support(n, (0, 1))], n)
        k_n = ideals.MonomialIdeal(
            n, tuple(m for m in i_n.generators if m not in j_n.generators)
        )
        if not pathformulas.verify_betti_splitting(i_n, j_n, k_n):
            return False, f"remainder splitting fails at n={n}"
    return True, "splitting identities hold for 4 <= n <= 10"


def _fixture_classifications():
    for n in range(5, 11):
        if classify.is_generic(ideals.closed_neighborhood_ideal(graphs.path_graph(n))):
            return False, f"{n}-path ideal unexpectedly generic"
    if not classify.is_generic(ideals.closed_neighborhood_ideal(graphs.path_graph(4))):
        return False, "4-path ideal should be generic"
    for n in range(6, 10):
        if classify.has_linear_quotients(ideals.closed_neighborhood_ideal(graphs.path_graph(n))):
            return False, f"{n}-path ideal unexpectedly has linear quotients"
    if classify.hypertree_obstruction(graphs.spider_graph(5, 3)) != 0:
        return False, "spider(5,3) obstruction missing"
    return True, "classification claims hold"


def _fixture_cycle_ten():
    g = graphs.cycle_graph(10)
    ideal = ideals.closed_neighborhood_ideal(g)
    symmetries = ideals.generator_symmetries(g, ideal, graphs.automorphisms(g))
    order = bm.find_bridge_friendly_order(ideal, symmetries)
    ok = order is None
    return ok, "C_10 non-bridge-friendly (symmetry-reduced exhaustive scan)"


FIXTURES = [
    ("chordal-6 bridge-friendly", _fixture_chordal_six),
    ("tree-lex triple condition n<=10", _fixture_triple_condition_trees),
    ("12-vertex max critical set", _fixture_max_critical_tree),
    ("9-vertex chordal order scan", _fixture_nine_vertex_orders),
    ("7-path vs 5-path identity", _fixture_path_identity),
    ("path formulas four-way n<=12", _fixture_path_formulas),
    ("splitting identities", _fixture_splittings),
    ("classifications", _fixture_classifications),
]

LONG_FIXTURES = [
    ("C_10 non-bridge-friendly", _fixture_cycle_ten),
]


def cmd_verify_paper(args) -> int:
    suite = list(FIXTURES)
    if args.long:
        suite += LONG_FIXTURES
    failures = 0
    for name, fn in suite:
        start = time.perf_counter()
        ok, detail = fn()
        elapsed = time.perf_counter() - start
        status = "PASS" if ok else "FAIL"
        print(f"{status} {name}: {detail} ({elapsed:.2f}s)")
        if not ok:
            failures += 1
    if failures:
        print(f"{failures} fixture(s) failed")
        return EXIT_VERIFY
    print("all fixtures passed")
    return EXIT_OK


# ----------------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------------

def _add_input_args(sub, ideal_kinds=True):
    src = sub.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="graph file (JSON or 'n' + edge lines)")
    src.add_argument("--ideal-file", help="ideal file (JSON)")
    if ideal_kinds:
        sub.add_argument("--ideal", choices=["nbhd", "path3"], default="nbhd",
                         help="ideal built from the graph")
    sub.add_argument("--root", type=int, default=0, help="root vertex for tree orders")


def _global_flags(parser, suppress: bool) -> None:
    # global flags are accepted both before and after the subcommand; the
    # subcommand copies use SUPPRESS so they never clobber earlier values
    order_default = argparse.SUPPRESS if suppress else "tree-lex"
    plain_default = argparse.SUPPRESS if suppress else None
    flag_kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--order", default=order_default,
                        help="generator order: tree-lex, canonical, or file:PATH")
    parser.add_argument("--oracle", default=plain_default,
                        help="homology oracle spec, e.g. gf:32003,2")
    parser.add_argument("--json", action="store_true", **flag_kw,
                        help="machine-readable output")
    parser.add_argument("--long", action="store_true", **flag_kw,
                        help="include hours-scale checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bmres",
        description="Bridge/gap combinatorics and Betti tables of squarefree "
                    "monomial ideals, specialized to closed neighborhood "
                    "ideals of trees.",
    )
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("betti", parents=[common], help="Betti table from critical cells")
    _add_input_args(s)
    s.add_argument("--kind", choices=["quotient", "ideal"], default="quotient")
    s.set_defaults(fn=cmd_betti)

    s = subs.add_parser("critical", parents=[common], help="list critical generator subsets")
    _add_input_args(s)
    s.set_defaults(fn=cmd_critical)

    s = subs.add_parser("bridge-friendly", parents=[common], help="test or search generator orders")
    _add_input_args(s)
    s.add_argument("--search", action="store_true",
                   help="exhaustive search for a bridge-friendly order")
    s.set_defaults(fn=cmd_bridge_friendly)

    s = subs.add_parser("algorithm1", parents=[common], help="maximal critical set of a tree")
    s.add_argument("--graph", required=True)
    s.add_argument("--root", type=int, default=0)
    s.set_defaults(fn=cmd_algorithm1)

    s = subs.add_parser("path-formulas", parents=[common], help="closed-form path Betti tables")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--check", action="store_true",
                   help="cross-check the closed form and report transcription "
                        "diagnostics")
    s.set_defaults(fn=cmd_path_formulas)

    s = subs.add_parser("classify", parents=[common], help="genericity / linear quotients / "
                                         "hypertree obstruction")
    s.add_argument("--graph", required=True)
    s.set_defaults(fn=cmd_classify)

    s = subs.add_parser("survey", parents=[common], help="batch survey over all trees up to a size")
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--out", required=True, help="line-delimited JSON output path")
    s.add_argument("--big", action="store_true", help="allow n up to 12")
    s.add_argument("--oracle-prime", type=int, default=homology.DEFAULT_PRIME)
    s.add_argument("--probe-intra", action="store_true",
                   help="also record bridge-friendliness under the alternative "
                        "intra-level vertex order")
    s.set_defaults(fn=cmd_survey)

    s = subs.add_parser("verify-paper", parents=[common], help="run the built-in fixture suite of "
                                             "published reference values")
    s.set_defaults(fn=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (ParseError, BadParams, NotATree, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
