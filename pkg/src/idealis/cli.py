"""Command line front end: one subcommand per operation.

Exit codes: 0 success or "true", 1 predicate false, 2 input or usage error,
3 the scan found a counterexample candidate, 4 two routes disagreed under
``--check-all``.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import coloring, duality, hypergraph, monomials, packing, symbolic
from .errors import IdealisError, ParseError
from .hypergraph import Hypergraph
from .monomials import MonomialIdeal, VariableSet

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_DISAGREE = 0, 1, 2, 3, 4


class Disagreement(Exception):
    pass


# -- input ------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _strip_comments(text: str) -> list:
    return [line.split("#", 1)[0] for line in text.splitlines()]


def load(text: str):
    """Parse input as a hypergraph (text or JSON) or a monomial ideal.

    Ideal files hold ``(gens, ...)`` optionally preceded by a
    ``vars: a b c`` line fixing the variable order.
    """
    body = text.lstrip()
    if body.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        if "generators" in data:
            ring = VariableSet(tuple(data["vars"]))
            return ring.ideal(data["generators"])
        return hypergraph.hypergraph_from_json(data)
    lines = _strip_comments(text)
    ring = None
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("vars:"):
            ring = VariableSet(tuple(s[len("vars:") :].split()))
            continue
        if s.startswith("("):
            col = len(line) - len(line.lstrip()) + 1
            rest = "\n".join([line[col - 1 :]] + lines[lineno:])
            return monomials.parse_ideal(rest, ring, lineno, col)
        break
    if ring is not None:
        raise ParseError("a 'vars:' header must be followed by an ideal", 1, 1)
    return hypergraph.parse_hypergraph(text)


def _graph(obj) -> Hypergraph:
    if isinstance(obj, Hypergraph):
        return obj
    return hypergraph.from_ideal(obj)


def _ideal(obj, cover: bool = False) -> MonomialIdeal:
    if isinstance(obj, Hypergraph):
        return hypergraph.cover_ideal(obj) if cover else hypergraph.edge_ideal(obj)
    if cover:
        return hypergraph.cover_ideal(hypergraph.from_ideal(obj))
    return obj


# -- output -----------------------------------------------------------------


def _set(names) -> str:
    return "{" + ",".join(names) + "}"


def _ideal_json(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ring.names), "generators": [str(g) for g in I.gens]}


class Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, text_value, json_value=None):
        if self.fmt == "json":
            self.stream.write(json.dumps(json_value, sort_keys=True) + "\n")
        else:
            self.stream.write(str(text_value).rstrip("\n") + "\n")

    def ideal(self, I: MonomialIdeal):
        self.emit(I, _ideal_json(I))

    def primes(self, primes):
        self.emit("\n".join(str(p) for p in primes) or "(none)", [list(p.support) for p in primes])

    def components(self, comps):
        self.emit(
            "\n".join(str(q) for q in comps) or "(none)", duality.components_to_json(comps)
        )

    def verdict(self, ok: bool, reason: str = "", extra=None) -> int:
        data = {"result": ok}
        if reason:
            data["reason"] = reason
        if extra:
            data.update(extra)
        text = "true" if ok else "false"
        if reason:
            text += "\n" + reason
        self.emit(text, data)
        return EXIT_OK if ok else EXIT_FALSE


def _agree(label: str, values: dict):
    distinct = {json.dumps(v, sort_keys=True, default=str) for v in values.values()}
    if len(distinct) > 1:
        raise Disagreement(f"{label}: routes disagree: {values}")


# -- verbs ------------------------------------------------------------------


def cmd_edge_ideal(a, obj, out):
    out.ideal(hypergraph.edge_ideal(_graph(obj)))


def cmd_cover_ideal(a, obj, out):
    G = _graph(obj)
    J = hypergraph.cover_ideal(G)
    if a.check_all and G.masks:
        # cover ideal of G equals the edge ideal of the dual hypergraph
        _agree("cover-ideal", {"dual": str(J), "dual-hypergraph": str(hypergraph.edge_ideal(hypergraph.dual_hypergraph(G)))})
    out.ideal(J)


def cmd_dual(a, obj, out):
    out.ideal(duality.squarefree_dual(_ideal(obj)))


def cmd_gdual(a, obj, out):
    I = _ideal(obj, a.cover)
    vec = [int(x) for x in a.a.split(",")] if a.a else list(I.lcm_exps())
    out.ideal(duality.generalized_dual(I, vec))


def cmd_decompose(a, obj, out):
    I = _ideal(obj, a.cover)
    comps = duality.irreducible_decomposition(I)
    if a.check_all:
        _agree("decompose", {"input": str(I), "intersection": str(duality.intersect_components(comps, I.ring))})
    out.components(comps)


def cmd_ass(a, obj, out):
    I = _ideal(obj, a.cover)
    if a.smax is None:
        out.primes(duality.associated_primes(I))
        return
    prof = symbolic.ass_profile(I, a.smax, a.max_power)
    lines = []
    for s, ps in sorted(prof.primes.items()):
        lines.append(f"s={s}: " + " ".join(str(p) for p in ps))
    lines.append(f"persistent up to s={prof.s_max}: {str(prof.persistent).lower()}")
    lines.append(
        "saturated chains: "
        + " ".join(f"s={s}:{str(v).lower()}" for s, v in sorted(prof.saturated.items()))
    )
    data = {
        "primes": prof.to_json(),
        "persistent": prof.persistent,
        "persistence_failures": prof.persistence_failures,
        "saturated": {str(s): v for s, v in sorted(prof.saturated.items())},
    }
    out.emit("\n".join(lines), data)


def cmd_power(a, obj, out):
    out.ideal(monomials.power(_ideal(obj, a.cover), a.s))


def cmd_symbolic(a, obj, out):
    out.ideal(symbolic.symbolic_power(_ideal(obj, a.cover), a.s, a.max_generators))


def cmd_sym_gap(a, obj, out):
    q = symbolic.first_symbolic_gap(_ideal(obj, a.cover), a.qmax)
    out.emit("none" if q is None else q, {"first_gap": q})


def cmd_colorable(a, obj, out):
    G = _graph(obj)
    methods = coloring.METHODS if a.check_all else (a.method,)
    answers = {m: coloring.is_k_colorable(G, a.k, m) for m in methods}
    _agree("colorable", answers)
    ok = answers[methods[0]]
    if ok and (a.method == "oracle" or a.check_all):
        witness = coloring.find_coloring(G, a.k)
        out.emit("true\n" + json.dumps(witness), {"result": True, "coloring": witness})
        return EXIT_OK
    return out.verdict(ok)


def cmd_chromatic(a, obj, out):
    G = _graph(obj)
    methods = coloring.METHODS if a.check_all else (a.method,)
    answers = {m: coloring.chromatic_number(G, m) for m in methods}
    _agree("chromatic", answers)
    chi = answers[methods[0]]
    out.emit(chi, {"chromatic_number": chi})


def cmd_secant(a, obj, out):
    out.ideal(coloring.secant_power(_graph(obj), a.k))


def cmd_critical(a, obj, out):
    sets = coloring.critical_subsets(_graph(obj), a.d)
    out.emit("\n".join(_set(W) for W in sets) or "(none)", [list(W) for W in sets])


def cmd_odd_holes(a, obj, out):
    G = _graph(obj)
    cycles = symbolic.odd_induced_cycles(G)
    if a.check_all:
        _agree("odd-holes", {"ass": cycles, "enumerator": symbolic.chordless_odd_cycles(G)})
    out.emit("\n".join(_set(W) for W in cycles) or "(none)", [list(W) for W in cycles])


def cmd_bipartite(a, obj, out):
    G = _graph(obj)
    methods = ("algebraic", "oracle") if a.check_all else (a.method,)
    answers = {m: symbolic.is_bipartite(G, m) for m in methods}
    _agree("bipartite", answers)
    return out.verdict(answers[methods[0]])


def cmd_perfect(a, obj, out):
    G = _graph(obj)
    methods = symbolic.PERFECT_METHODS if a.check_all else (a.method,)
    answers = {m: symbolic.is_perfect(G, m) for m in methods}
    _agree("perfect", answers)
    ok = answers[methods[0]]
    reason = ""
    if not ok:
        cert = symbolic.imperfection_certificate(G)
        if cert is not None:
            reason = f"{cert[0]} {_set(cert[1])}"
    return out.verdict(ok, reason)


def cmd_konig(a, obj, out):
    G = _graph(obj)
    d = hypergraph.konig_data(G)
    if a.check_all and G.masks:
        sg = packing.sigma_gamma(G, [1] * G.n)
        _agree("konig", {"konig": [d.beta1, d.alpha0], "sigma_gamma": list(sg)})
    return out.verdict(
        d.is_konig, f"alpha0={d.alpha0} beta1={d.beta1}", {"alpha0": d.alpha0, "beta1": d.beta1}
    )


def cmd_packs(a, obj, out):
    return out.verdict(packing.packs(_graph(obj)))


def cmd_packing(a, obj, out):
    res = packing.packing_property(_graph(obj), a.max_minor_vertices)
    if res.holds:
        return out.verdict(True)
    reason = f"minor {res.minor.canonical_form()} alpha0={res.alpha0} beta1={res.beta1}"
    extra = {"minor": res.minor.to_json(), "alpha0": res.alpha0, "beta1": res.beta1}
    return out.verdict(False, reason, extra)


def cmd_mfmc(a, obj, out):
    I = _ideal(obj)
    v = packing.mfmc_bounded(I, a.qmax)
    if a.check_all:
        n = packing.ntf_bounded(I, a.qmax, cross_check=True)
        _agree("mfmc", {"mfmc": [v.holds, v.q], "ntf": [n.holds, n.q]})
    return out.verdict(v.holds, str(v), {"q": v.q, "witness": None if v.witness is None else str(v.witness)})


def cmd_ntf(a, obj, out):
    I = _ideal(obj, a.cover)
    v = packing.ntf_bounded(I, a.qmax, cross_check=a.check_all)
    extra = {
        "q": v.q,
        "new_primes": [list(p.support) for p in v.new_primes],
        "lost_primes": [list(p.support) for p in v.lost_primes],
    }
    return out.verdict(v.holds, str(v), extra)


def cmd_expand(a, obj, out):
    EG = hypergraph.expansion(_graph(obj), a.s)
    out.emit(hypergraph.format_hypergraph(EG.graph), EG.graph.to_json())


def cmd_expand_ass(a, obj, out):
    G = _graph(obj)
    D, primes = symbolic.expansion_ass_primes(G, a.s, a.max_vertices)
    if a.check_all:
        J = hypergraph.cover_ideal(G)
        Js = monomials.power(J, a.s)
        _agree("expand-ass", {
            "expansion": [str(D), [str(p) for p in primes]],
            "duality": [str(duality.generalized_dual(Js, [a.s] * G.n)),
                        [str(p) for p in duality.associated_primes(Js)]],
        })
    text = f"generators: {D}\n" + ("\n".join(str(p) for p in primes) or "(none)")
    out.emit(text, {"generators": _ideal_json(D), "primes": [list(p.support) for p in primes]})


def cmd_decompose_j2(a, obj, out):
    G = _graph(obj)
    comps = symbolic.cover_square_decomposition(G)
    if a.check_all and G.masks:
        J2 = monomials.power(hypergraph.cover_ideal(G), 2)
        _agree("decompose-j2", {
            "formula": [str(q) for q in comps],
            "duality": [str(q) for q in duality.irreducible_decomposition(J2)],
        })
    out.components(comps)


def cmd_cc_scan(a, obj, out):
    rep = packing.cc_scan(a.nmax, a.qmax, a.edge_cap, a.graphs, a.resume, a.jobs)
    c = rep.counts
    lines = [f"scanned {c['scanned']} packing {c['packing']} candidates {c['candidates']}"]
    lines += [f"candidate: {r['canonical_form']} q={r['q']} witness {r['witness']}" for r in rep.candidates]
    out.emit("\n".join(lines), {"counts": c, "candidates": rep.candidates})
    return EXIT_COUNTEREXAMPLE if rep.candidates else EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="idealis",
        description="Squarefree monomial ideals, hypergraph coloring and packing.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--check-all", action="store_true",
                        help="run every route and fail (exit 4) if they disagree")
    common.add_argument("--cover", action="store_true",
                        help="use the cover ideal of the input instead of its edge ideal")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (cc-scan)")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, func, help, **kw):
        sp = sub.add_parser(name, parents=[common], help=help, **kw)
        sp.set_defaults(func=func)
        return sp

    verb("edge-ideal", cmd_edge_ideal, "edge ideal I(G)")
    verb("cover-ideal", cmd_cover_ideal, "cover ideal J(G)")
    verb("dual", cmd_dual, "squarefree Alexander dual")
    verb("gdual", cmd_gdual, "generalized Alexander dual").add_argument(
        "-a", help="comma-separated bound vector (default: lcm of generators)")
    verb("decompose", cmd_decompose, "irreducible decomposition")
    sp = verb("ass", cmd_ass, "associated primes")
    sp.add_argument("--smax", type=int, help="profile of Ass(S/I^s) for s = 1..SMAX")
    sp.add_argument("--max-power", type=int, default=symbolic.MAX_PROFILE_POWER)
    verb("power", cmd_power, "ordinary power").add_argument("-s", type=int, required=True)
    sp = verb("symbolic", cmd_symbolic, "symbolic power")
    sp.add_argument("-s", type=int, required=True)
    sp.add_argument("--max-generators", type=int, default=symbolic.MAX_SYMBOLIC_GENERATORS)
    verb("sym-gap", cmd_sym_gap, "first q with I^(q) != I^q").add_argument(
        "--qmax", type=int, default=4)
    sp = verb("colorable", cmd_colorable, "is G k-colorable")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--method", choices=coloring.METHODS, default="oracle")
    verb("chromatic", cmd_chromatic, "chromatic number").add_argument(
        "--method", choices=coloring.METHODS, default="oracle")
    verb("secant", cmd_secant, "secant power I(G)^{k}").add_argument("-k", type=int, required=True)
    verb("critical", cmd_critical, "critically d-chromatic induced subsets").add_argument(
        "-d", type=int, required=True)
    verb("odd-holes", cmd_odd_holes, "induced odd cycles from Ass(S/J^2)")
    verb("bipartite", cmd_bipartite, "bipartite test").add_argument(
        "--method", choices=("algebraic", "oracle"), default="algebraic")
    verb("perfect", cmd_perfect, "perfect graph test").add_argument(
        "--method", choices=symbolic.PERFECT_METHODS, default="spgt_algebraic")
    verb("konig", cmd_konig, "minimum cover vs maximum matching")
    verb("packs", cmd_packs, "integral optima at c = 1")
    verb("packing", cmd_packing, "packing property (all minors Konig)").add_argument(
        "--max-minor-vertices", type=int, default=hypergraph.MAX_MINOR_VERTICES)
    verb("mfmc", cmd_mfmc, "bounded symbolic = ordinary check for I(G)").add_argument(
        "--qmax", type=int, default=3)
    verb("ntf", cmd_ntf, "bounded normally-torsion-free check").add_argument(
        "--qmax", type=int, default=3)
    verb("expand", cmd_expand, "s-th expansion").add_argument("-s", type=int, required=True)
    sp = verb("expand-ass", cmd_expand_ass, "Ass(S/J^s) through the expansion")
    sp.add_argument("-s", type=int, required=True)
    sp.add_argument("--max-vertices", type=int, default=symbolic.MAX_EXPANSION_VERTICES)
    verb("decompose-j2", cmd_decompose_j2, "odd-cycle decomposition of J(G)^2")
    sp = verb("cc-scan", cmd_cc_scan, "packing vs bounded MFMC scan")
    sp.add_argument("--nmax", type=int, default=4)
    sp.add_argument("--qmax", type=int, default=3)
    sp.add_argument("--edge-cap", type=int, default=3)
    sp.add_argument("--graphs", action="store_true", help="enumerate graphs only")
    sp.add_argument("--resume", help="JSON-lines state file to reuse and extend")
    return p


def main(argv=None, stdout=None) -> int:
    out_stream = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    out = Out(args.format, out_stream)
    try:
        obj = None
        if args.verb != "cc-scan":
            obj = load(_read(args.input))
            n = len(obj.vertices if isinstance(obj, Hypergraph) else obj.ring)
            monomials.check_vars(n)
        code = args.func(args, obj, out)
    except Disagreement as exc:
        print(f"idealis: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except packing.RouteDisagreement as exc:
        print(f"idealis: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (IdealisError, OSError) as exc:
        print(f"idealis: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
