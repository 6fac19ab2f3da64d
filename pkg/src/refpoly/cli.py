"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 capacity.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from importlib import resources

from . import graphs as G
from .constructions import gamma, omega, stable_set_polytope
from .decomposition import has_idp
from .ehrhart import DeltaTheoremReport, delta_polynomial, is_palindromic
from .errors import CapacityError, InconsistencyError, InputError, RefpolyError
from .geometry import (
    count_lattice_points,
    facet_count,
    is_centrally_symmetric,
    is_reflexive,
    is_two_level,
)

log = logging.getLogger("refpoly")

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

DEFAULT_MAX_DIM = 10
SWEEP_FULL_CAP = 6
SWEEP_SKIP_CAP = 7
SWEEP_GROEBNER_MAX_VARS = 25


def max_dim() -> int:
    raw = os.environ.get("REFPOLY_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"REFPOLY_MAX_DIM must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError("REFPOLY_MAX_DIM must be positive")
    return value


def check_capacity(g: G.Graph):
    cap = max_dim()
    if g.d > cap:
        raise CapacityError(f"graph has {g.d} vertices; the cap is {cap} (set REFPOLY_MAX_DIM)")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# ---------------------------------------------------------------- graph input


class _Source(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        sources = list(getattr(namespace, "sources", None) or [])
        sources.append((self.const, values))
        namespace.sources = sources


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def _add_graph_flags(p: argparse.ArgumentParser):
    grp = p.add_argument_group("graphs", "the first flag gives G1, a second gives G2 (default G2 = G1)")
    grp.add_argument("--cycle", action=_Source, const="cycle", metavar="N", dest="sources")
    grp.add_argument("--path", action=_Source, const="path", metavar="N", dest="sources")
    grp.add_argument("--complete", action=_Source, const="complete", metavar="N", dest="sources")
    grp.add_argument(
        "--complete-multipartite", action=_Source, const="complete-multipartite",
        metavar="a,b,c", dest="sources",
    )
    grp.add_argument("--edges", action=_Source, const="edges", metavar="FILE", dest="sources")
    grp.add_argument("--graph6", action=_Source, const="graph6", metavar="FILE", dest="sources")


def _int_arg(kind: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise InputError(f"--{kind} expects an integer, got {value!r}") from None


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def build_graph(kind: str, value: str) -> G.Graph:
    if kind == "cycle":
        return G.cycle(_int_arg(kind, value))
    if kind == "path":
        return G.path(_int_arg(kind, value))
    if kind == "complete":
        return G.complete(_int_arg(kind, value))
    if kind == "complete-multipartite":
        try:
            sizes = tuple(int(x) for x in value.split(","))
        except ValueError:
            raise InputError(f"--complete-multipartite expects a,b,c; got {value!r}") from None
        return G.complete_multipartite(sizes)
    if kind == "edges":
        return G.parse_edge_list(_read(value))
    if kind == "graph6":
        lines = [ln for ln in _read(value).splitlines() if ln.strip()]
        if not lines:
            raise InputError(f"{value} holds no graph6 line")
        return G.parse_graph6(lines[0])
    raise InputError(f"unknown graph source {kind}")


def graph_pair(args) -> tuple:
    sources = getattr(args, "sources", None) or []
    if not sources:
        raise InputError("no graph given (use --cycle, --path, --complete, --complete-multipartite, --edges or --graph6)")
    if len(sources) > 2:
        raise InputError("at most two graphs may be given")
    g1 = build_graph(*sources[0])
    g2 = build_graph(*sources[1]) if len(sources) == 2 else g1
    if g1.d != g2.d:
        raise InputError(f"graphs must have the same number of vertices: {g1.d} vs {g2.d}")
    check_capacity(g1)
    return g1, g2, sources


def describe(g: G.Graph, source=None) -> dict:
    out = {"d": g.d, "edges": [list(e) for e in g.sorted_edges()], "graph6": G.to_graph6(g)}
    if source is not None:
        out["source"] = f"{source[0]} {source[1]}"
    return out


def perfect_verdicts(g: G.Graph) -> dict:
    out = {"spgt": G.is_perfect_spgt(g)}
    try:
        out["definition"] = G.is_perfect_definition(g)
    except CapacityError:
        pass
    return out


# ------------------------------------------------------------------- analysis


def polytope_block(p, idp_bound=None, skip_idp=False) -> tuple:
    """(json block, delta polynomial)."""
    delta = delta_polynomial(p)
    block = {
        "dimension": p.ambient_dim,
        "lattice_points": str(count_lattice_points(p, 1)),
        "reflexive": is_reflexive(p),
        "delta": [str(c) for c in delta.coeffs],
        "delta_palindromic": is_palindromic(delta),
        "normalized_volume": str(delta.volume),
        "facets": facet_count(p),
        "centrally_symmetric": is_centrally_symmetric(p),
        "two_level": is_two_level(p),
    }
    if not skip_idp:
        block["idp"] = has_idp(p, idp_bound).to_dict()
    return block, delta


def analyze(g1, g2, *, idp_bound=None, skip_idp=False, skip_groebner=False, facets=False,
            sources=None) -> tuple:
    """(report dict, list of mismatch messages)."""
    from .toric import verify_squarefree_theorem

    mismatches = []
    p1, p2 = perfect_verdicts(g1), perfect_verdicts(g2)
    for name, pv in (("G1", p1), ("G2", p2)):
        if "definition" in pv and pv["definition"] != pv["spgt"]:
            mismatches.append(f"{name}: perfectness by definition and by odd holes disagree")
    perfect = p1["spgt"] and p2["spgt"]

    q1, q2 = stable_set_polytope(g1), stable_set_polytope(g2)
    gam, d_gam = polytope_block(gamma(q1, q2), idp_bound, skip_idp)
    om, d_om = polytope_block(omega(q1, q2), idp_bound, skip_idp)
    report = {
        "graph": {
            "g1": describe(g1, sources[0] if sources else None),
            "g2": describe(g2, sources[-1] if sources else None),
            "hansen": g1 == g2,
            "perfect": {"g1": p1, "g2": p2},
        },
        "gamma": gam,
        "omega": om,
    }

    theorems = {}
    for key, block in (("gamma", gam), ("omega", om)):
        if block["reflexive"] != block["delta_palindromic"]:
            mismatches.append(f"{key}: reflexivity and palindromic delta disagree")
    t_a = {"perfect": perfect, "reflexive": gam["reflexive"], "consistent": gam["reflexive"] == perfect}
    if "idp" in gam:
        t_a["reflexive_and_idp"] = gam["reflexive"] and gam["idp"]["holds"]
        t_a["consistent"] = t_a["consistent"] and t_a["reflexive_and_idp"] == perfect
    theorems["gamma_reflexive_iff_perfect"] = t_a
    if not t_a["consistent"]:
        mismatches.append("gamma: reflexivity verdict contradicts perfectness")
    if "idp" in om:
        t_b = {
            "perfect": perfect,
            "idp": om["idp"]["holds"],
            "reflexive_and_idp": om["reflexive"] and om["idp"]["holds"],
        }
        t_b["consistent"] = t_b["idp"] == perfect and t_b["reflexive_and_idp"] == perfect
        theorems["omega_idp_iff_perfect"] = t_b
        if not t_b["consistent"]:
            mismatches.append("omega: IDP verdict contradicts perfectness")

    if perfect or facets:
        hat1, hat2 = G.suspension(g1), G.suspension(g2)
        gs = gamma(stable_set_polytope(hat1), stable_set_polytope(hat2))
        d_gs = delta_polynomial(gs)
        if facets:
            report["gamma_suspension"] = {
                "dimension": gs.ambient_dim,
                "delta": [str(c) for c in d_gs.coeffs],
                "normalized_volume": str(d_gs.volume),
                "facets": facet_count(gs),
            }
        dt = DeltaTheoremReport(p1["spgt"], p2["spgt"], d_om, d_gs, d_gam)
        block = dt.to_dict()
        theorems["delta_identity"] = block
        if perfect and not (dt.identity_holds and dt.volume_identity_holds):
            mismatches.append("delta identity fails for a perfect pair")
    else:
        theorems["delta_identity"] = {"hypothesis_perfect": False}

    if not skip_groebner:
        sq = verify_squarefree_theorem(g1, g2, geometric=False)
        sq.omega_reflexive = om["reflexive"]
        if "idp" in om:
            sq.omega_idp = om["idp"]["holds"]
        block = sq.to_dict()
        theorems["squarefree_initial_ideal"] = block
        if not sq.consistent:
            mismatches.append("toric: squarefree prediction contradicts the computed verdicts")

    report["theorems"] = theorems
    return report, mismatches


def _yn(v) -> str:
    return "yes" if v else "no"


def print_report(report: dict, out=None):
    out = out or sys.stdout
    gr = report["graph"]
    for key in ("g1", "g2"):
        g = gr[key]
        label = g.get("source", g["graph6"])
        pv = gr["perfect"][key]
        print(f"{key.upper()}: {label}  d={g['d']} edges={len(g['edges'])} perfect={_yn(pv['spgt'])}", file=out)
    blocks = [("Gamma", report["gamma"]), ("Omega", report["omega"])]
    if "gamma_suspension" in report:
        blocks.append(("Gamma(suspensions)", report["gamma_suspension"]))
    for name, b in blocks:
        print(f"{name}:", file=out)
        print(f"  dimension        {b['dimension']}", file=out)
        if "lattice_points" in b:
            print(f"  lattice points   {b['lattice_points']}", file=out)
        print(f"  facets           {b['facets']}", file=out)
        if "reflexive" in b:
            print(f"  reflexive        {_yn(b['reflexive'])}", file=out)
            print(f"  centrally symm.  {_yn(b['centrally_symmetric'])}", file=out)
            print(f"  2-level          {_yn(b['two_level'])}", file=out)
        if "idp" in b:
            idp = b["idp"]
            line = _yn(idp["holds"])
            if "witness" in idp:
                w = idp["witness"]
                line += f" (witness at n={w['n']}: {tuple(w['point'])})"
            print(f"  IDP              {line}", file=out)
        print(f"  delta            {', '.join(b['delta'])}", file=out)
        print(f"  volume           {b['normalized_volume']}", file=out)
    th = report["theorems"]
    print("Checks:", file=out)
    for key in sorted(th):
        v = th[key]
        if "consistent" in v:
            ok = v["consistent"]
        elif "identity_holds" in v:
            ok = v["identity_holds"] and v["volume_identity_holds"]
        else:
            ok = None
        status = "n/a (hypothesis fails)" if ok is None else ("ok" if ok else "MISMATCH")
        print(f"  {key:<28} {status}", file=out)


def cmd_analyze(args) -> int:
    g1, g2, sources = graph_pair(args)
    report, mismatches = analyze(
        g1, g2, idp_bound=args.idp_bound, skip_idp=args.skip_idp,
        skip_groebner=args.skip_groebner, facets=args.facets, sources=sources,
    )
    if args.json:
        print(dumps(report))
    else:
        print_report(report)
    for m in mismatches:
        log.error("mismatch: %s", m)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_delta(args) -> int:
    g1, g2, _ = graph_pair(args)
    q1, q2 = stable_set_polytope(g1), stable_set_polytope(g2)
    result = {}
    for name, p in (("gamma", gamma(q1, q2)), ("omega", omega(q1, q2))):
        dp = delta_polynomial(p)
        result[name] = {"delta": [str(c) for c in dp.coeffs], "normalized_volume": str(dp.volume)}
    if args.json:
        print(dumps(result))
    else:
        for name in ("gamma", "omega"):
            print(f"{name}: {', '.join(result[name]['delta'])}  (volume {result[name]['normalized_volume']})")
    return EXIT_OK


def cmd_groebner(args) -> int:
    from .toric import (
        canonical_orders,
        omega_matrix,
        serialize_basis,
        stable_set_configuration,
        toric_groebner,
        verify_squarefree_theorem,
    )

    g1, g2, _ = graph_pair(args)
    report = verify_squarefree_theorem(g1, g2, geometric=not args.skip_idp, idp_bound=args.idp_bound)
    out = report.to_dict()
    if report.hypotheses_hold:
        a, b = stable_set_configuration(g1), stable_set_configuration(g2)
        _, _, order_rev = canonical_orders(a, b)
        out["combined_basis"] = serialize_basis(toric_groebner(omega_matrix(a, b), order_rev))
    if args.json:
        print(dumps(out))
    else:
        print(f"harmony            {_yn(report.harmony)}")
        print(f"in(I_A) squarefree {_yn(report.squarefree_a)}")
        print(f"in(I_B) squarefree {_yn(report.squarefree_b)}")
        if report.hypotheses_hold:
            print(f"combined basis     {report.combined_basis_size} binomials")
            print(f"in() squarefree    {_yn(report.combined_squarefree)}")
            print(f"matches prediction {_yn(report.matches_prediction)}")
        for note in report.notes:
            print(f"note: {note}")
        print(f"consistent         {_yn(report.consistent)}")
    return EXIT_OK if report.consistent else EXIT_MISMATCH


# ------------------------------------------------------------------- examples


def load_golden(path=None) -> dict:
    if path is None:
        text = resources.files("refpoly").joinpath("data/golden.json").read_text(encoding="utf-8")
    else:
        text = _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"golden file is not valid JSON: {exc}") from None


def golden_graph(entry: dict) -> G.Graph:
    kind = entry["kind"]
    if kind == "cycle":
        return G.cycle(entry["n"])
    if kind == "complete_multipartite":
        return G.complete_multipartite(tuple(entry["sizes"]))
    if kind == "complement_of_edges":
        return G.complement(G.Graph.from_edges(entry["d"], [tuple(e) for e in entry["edges"]]))
    if kind == "edges":
        return G.Graph.from_edges(entry["d"], [tuple(e) for e in entry["edges"]])
    raise InputError(f"unknown golden graph kind {kind!r}")


def run_example(ex_id: str, entry: dict, skip_idp=False) -> list:
    """Recompute one golden example; returns discrepancy messages."""
    errors = []
    g = golden_graph(entry["graph"])
    q = stable_set_polytope(g)
    polys = {"gamma": lambda: gamma(q, q), "omega": lambda: omega(q, q)}
    if "gamma_suspension" in entry:
        qs = stable_set_polytope(G.suspension(g))
        polys["gamma_suspension"] = lambda: gamma(qs, qs)
    deltas = {}

    def bad(what, expected, got):
        errors.append(f"Example {ex_id}: {what}: expected {expected}, computed {got}")

    for key, make in polys.items():
        want = entry.get(key)
        if want is None:
            continue
        p = make()
        if "delta" in want or entry.get("same_delta_and_volume"):
            deltas[key] = delta_polynomial(p)
        if "delta" in want:
            got = [str(c) for c in deltas[key].coeffs]
            exp = [str(c) for c in want["delta"]]
            if len(got) != len(exp):
                bad(f"{key} delta length", len(exp), len(got))
            for i, (e, c) in enumerate(zip(exp, got)):
                if e != c:
                    bad(f"{key} delta_{i}", e, c)
        if "reflexive" in want and is_reflexive(p) != want["reflexive"]:
            bad(f"{key} reflexive", want["reflexive"], not want["reflexive"])
        if "facets" in want:
            f = facet_count(p)
            if f != want["facets"]:
                bad(f"{key} facets", want["facets"], f)
        if "idp" in want and not skip_idp:
            rep = has_idp(p)
            if rep.holds != want["idp"]:
                bad(f"{key} IDP", want["idp"], rep.holds)
            elif "idp_witness_n" in want and rep.witness[0] != want["idp_witness_n"]:
                bad(f"{key} IDP witness dilation", want["idp_witness_n"], rep.witness[0])
    if entry.get("same_delta_and_volume"):
        a, b = deltas.get("omega"), deltas.get("gamma_suspension")
        if a is None or b is None:
            errors.append(f"Example {ex_id}: same_delta_and_volume needs omega and gamma_suspension")
        elif a.coeffs != b.coeffs:
            bad("omega vs gamma_suspension delta", list(a.coeffs), list(b.coeffs))
    return errors


def cmd_examples(args) -> int:
    golden = load_golden(args.golden)
    ids = sorted(golden)
    if args.only:
        if args.only not in golden:
            raise InputError(f"unknown example {args.only!r}; known: {', '.join(ids)}")
        ids = [args.only]
    failures = []
    results = {}
    for ex_id in ids:
        errs = run_example(ex_id, golden[ex_id], skip_idp=args.skip_idp)
        results[ex_id] = {"pass": not errs, "discrepancies": errs}
        failures.extend(errs)
        if not args.json:
            print(f"Example {ex_id}: {'PASS' if not errs else 'FAIL'}")
            for e in errs:
                print(f"  {e}")
    if args.json:
        print(dumps(results))
    return EXIT_MISMATCH if failures else EXIT_OK


# ---------------------------------------------------------------------- sweep


def _graph6_stream(path: str):
    """Yield (graph or None, line number, raw line)."""
    for lineno, raw in enumerate(_read(path).splitlines(), 1):
        if not raw.strip():
            continue
        try:
            yield G.parse_graph6(raw), lineno, raw
        except InputError as exc:
            log.warning("skipping line %d: %s", lineno, exc)
            yield None, lineno, raw


def sweep_record(g: G.Graph, *, skip_idp, skip_groebner, idp_bound=None,
                 groebner_max_vars=SWEEP_GROEBNER_MAX_VARS) -> dict:
    q = stable_set_polytope(g)
    om = omega(q, q)
    rec = {
        "graph6": G.to_graph6(g),
        "d": g.d,
        "edges": g.num_edges,
        "perfect": G.is_perfect_spgt(g),
        "stable_sets": len(q.points),
        "omega_reflexive": is_reflexive(om),
        "gamma_reflexive": is_reflexive(gamma(q, q)),
    }
    if not skip_idp:
        rec["omega_idp"] = has_idp(om, idp_bound).holds
    if not skip_groebner:
        nvars = 2 * len(q.points) + 1
        if nvars <= groebner_max_vars:
            from .toric import verify_squarefree_theorem

            sq = verify_squarefree_theorem(g, g, geometric=False)
            sq.omega_reflexive = rec["omega_reflexive"]
            if "omega_idp" in rec:
                sq.omega_idp = rec["omega_idp"]
            rec["squarefree_consistent"] = sq.consistent
        else:
            rec["squarefree_consistent"] = None
    return rec


def cmd_sweep(args) -> int:
    n = args.max_vertices
    cap = SWEEP_SKIP_CAP if (args.skip_idp and args.skip_groebner) else SWEEP_FULL_CAP
    if n > cap:
        raise CapacityError(
            f"sweep to {n} vertices exceeds the cap of {cap}"
            + ("" if cap == SWEEP_SKIP_CAP else " (7 is allowed with --skip-idp --skip-groebner)")
        )
    if n > max_dim():
        raise CapacityError(f"sweep to {n} vertices exceeds REFPOLY_MAX_DIM={max_dim()}")
    sources = getattr(args, "sources", None) or []
    if any(kind != "graph6" for kind, _ in sources) or len(sources) > 1:
        raise InputError("sweep accepts at most one --graph6 FILE as input stream")

    if sources:
        stream = _graph6_stream(sources[0][1])
    else:
        stream = ((g, None, None) for k in range(1, n + 1) for g in G.nonisomorphic_graphs(k))

    skipped = 0
    swept = 0
    claim_checked = 0
    counterexamples = []
    nonreflexive = []
    mismatches = 0
    for g, lineno, _raw in stream:
        if g is None:
            skipped += 1
            continue
        if g.d > n:
            log.warning("skipping %s: more than %d vertices", G.to_graph6(g), n)
            skipped += 1
            continue
        rec = sweep_record(
            g, skip_idp=args.skip_idp, skip_groebner=args.skip_groebner, idp_bound=args.idp_bound,
        )
        swept += 1
        if not rec["omega_reflexive"]:
            nonreflexive.append(rec["graph6"])
        if g.d <= 6:
            claim_checked += 1
            if not rec["omega_reflexive"]:
                counterexamples.append(rec["graph6"])
        consistent = rec["gamma_reflexive"] == rec["perfect"]
        if "omega_idp" in rec:
            consistent = consistent and rec["omega_idp"] == rec["perfect"]
        if rec.get("squarefree_consistent") is False:
            consistent = False
        rec["consistent"] = consistent
        if not consistent:
            mismatches += 1
        print(dumps(rec), flush=True)

    summary = {
        "summary": {
            "graphs": swept,
            "skipped": skipped,
            "checked_up_to_6_vertices": claim_checked,
            "omega_reflexive_up_to_6_vertices": not counterexamples,
            "counterexamples_up_to_6_vertices": counterexamples,
            "omega_not_reflexive": nonreflexive,
            "inconsistent_records": mismatches,
        }
    }
    print(dumps(summary))
    if skipped:
        return EXIT_INPUT
    if counterexamples or mismatches:
        return EXIT_MISMATCH
    return EXIT_OK


# ----------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="refpoly",
        description="Lattice polytopes Gamma and Omega built from pairs of graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graphs=True):
        if graphs:
            _add_graph_flags(p)
        p.add_argument("--json", action="store_true", help="emit key-sorted JSON")
        p.add_argument("--idp-bound", type=_positive, metavar="N", help="check dilations 2..N")
        p.add_argument("--skip-idp", action="store_true")
        p.add_argument("--skip-groebner", action="store_true")

    p = sub.add_parser("analyze", help="full report for a graph pair")
    common(p)
    p.add_argument("--facets", action="store_true", help="also report Gamma of the suspensions")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("delta", help="delta-polynomials of Gamma and Omega")
    common(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("groebner", help="toric squarefree-initial-ideal check")
    common(p)
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("examples", help="reproduce the golden examples")
    common(p, graphs=False)
    p.add_argument("--only", metavar="ID", help="run a single example, e.g. 4.3")
    p.add_argument("--golden", metavar="FILE", help="alternative golden values")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("sweep", help="sweep small graphs (one JSON line each)")
    common(p)
    p.add_argument("--max-vertices", type=_positive, default=SWEEP_FULL_CAP, metavar="N")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="refpoly: %(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except CapacityError as exc:
        log.error("%s", exc)
        return EXIT_CAPACITY
    except InconsistencyError as exc:
        log.error("%s", exc)
        return EXIT_MISMATCH
    except (InputError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except RefpolyError as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
