"""
P-Partition CLI
===============

Command-line interface for the ppart library: linear extensions, descent
statistics, generating functions, reciprocity and shuffle checks, the
quasi-symmetric expansions, the classical applications and the full `verify`
oracle suite.

Exit codes: 0 success, 1 an identity check failed, 2 usage or input error.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import yaml

from algebra.polynomials import BiPolynomial, IntPolynomial, LaurentPolynomial, MultiPolynomial, RationalPolynomial
from checks import CheckReport
from config import PpartConfig, get_config, set_config
from errors import PPartitionError

logger = logging.getLogger("ppart")

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_USAGE = 2


# =============================================================================
# Output helpers
# =============================================================================

def _number(c: Any) -> Any:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return c


def coefficient_map(poly: Any, var: str = "q") -> Dict[str, Any]:
    """Coefficient map with string keys: "t^i q^j" for two variables, "var^d" for one."""
    if isinstance(poly, BiPolynomial):
        return {f"t^{i} q^{j}": c for (i, j), c in poly.sorted_terms()}
    if isinstance(poly, LaurentPolynomial):
        return {f"{var}^{d}": c for d, c in sorted(poly.terms.items())}
    if isinstance(poly, MultiPolynomial):
        return {
            " ".join(f"{var}{k + 1}^{e}" for k, e in enumerate(exps)): c
            for exps, c in sorted(poly.terms.items())
        }
    if isinstance(poly, (IntPolynomial, RationalPolynomial)):
        return {f"{var}^{d}": _number(c) for d, c in enumerate(poly.coeffs) if c}
    raise TypeError(f"no coefficient map for {type(poly).__name__}")


def _emit_json(data: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _emit_report(report: CheckReport) -> None:
    for check in report.checks:
        sys.stdout.write(f"{check.status.value} {check.name}: {check.detail}\n")


def _report_exit(report: CheckReport) -> int:
    return EXIT_OK if report.passed else EXIT_IDENTITY_FAILED


def _parse_csv(text: Optional[str], what: str) -> List[int]:
    if not text:
        raise ValueError(f"{what} is required")
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ValueError(f"{what} must be comma-separated integers: {text!r}") from e


def _require(value: Any, flag: str) -> Any:
    if value is None:
        raise ValueError(f"{flag} is required")
    return value


def _poset(args: argparse.Namespace):
    from poset.schemas import load_poset

    return load_poset(Path(_require(args.poset, "--poset")))


# =============================================================================
# Commands
# =============================================================================

def cmd_extensions(args: argparse.Namespace) -> int:
    from poset.core import linear_extensions

    words = [ext.render() for ext in linear_extensions(_poset(args))]
    if args.json:
        _emit_json({'extensions': words, 'count': len(words)})
    else:
        for word in words:
            sys.stdout.write(word + "\n")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    from poset.core import linear_extensions
    from stats.permutations import descent_statistics

    rows = []
    for ext in linear_extensions(_poset(args)):
        stats = descent_statistics(ext.word)
        rows.append({
            'word': ext.render(),
            'des': stats.des,
            'maj': stats.maj,
            'descent_set': sorted(stats.descent_set),
        })
    if args.json:
        _emit_json({'extensions': rows})
    else:
        for row in rows:
            descents = ",".join(str(d) for d in row['descent_set'])
            sys.stdout.write(f"{row['word']} des={row['des']} maj={row['maj']} S={{{descents}}}\n")
    return EXIT_OK


def cmd_um(args: argparse.Namespace) -> int:
    from gf.descents import u_m_laurent

    m = _require(args.m, "--m")
    value = u_m_laurent(_poset(args), m)
    if args.json:
        _emit_json({'m': m, 'u_m': coefficient_map(value), 'text': value.render()})
    else:
        sys.stdout.write(value.render() + "\n")
    return EXIT_OK


def cmd_ugf(args: argparse.Namespace) -> int:
    from gf.descents import descent_gf, u_gf

    P = _poset(args)
    value = u_gf(P)
    if args.json:
        _emit_json({
            'numerator': coefficient_map(descent_gf(P).maj_polynomial()),
            'denominator': [f.q_power for f in value.denominator],
            'text': value.render(),
        })
    else:
        sys.stdout.write(value.render() + "\n")
    return EXIT_OK


def cmd_orderpoly(args: argparse.Namespace) -> int:
    from gf.descents import order_polynomial

    omega = order_polynomial(_poset(args))
    if args.json:
        data: Dict[str, Any] = {'order_polynomial': coefficient_map(omega, "m"), 'text': omega.render()}
        if args.m is not None:
            data['value'] = _number(omega(args.m))
        _emit_json(data)
    else:
        sys.stdout.write(omega.render() + "\n")
        if args.m is not None:
            sys.stdout.write(f"Omega({args.m}) = {_number(omega(args.m))}\n")
    return EXIT_OK


def cmd_alphabeta(args: argparse.Namespace) -> int:
    from gf.descents import alpha_beta, alpha_beta_check

    P = _poset(args)
    table = alpha_beta(P)
    report = alpha_beta_check(P)
    ordered = sorted(table.items(), key=lambda item: (len(item[0]), sorted(item[0])))
    if args.json:
        _emit_json({
            'table': [{'S': sorted(s), 'alpha': a, 'beta': b} for s, (a, b) in ordered],
            'report': report.to_dict(),
        })
    else:
        for s, (a, b) in ordered:
            sys.stdout.write(f"S={{{','.join(str(x) for x in sorted(s))}}} alpha={a} beta={b}\n")
        if args.verbose or not report.passed:
            _emit_report(report)
    return _report_exit(report)


def cmd_reciprocity(args: argparse.Namespace) -> int:
    from gf.reciprocity import reciprocity_check

    m_max = args.m if args.m is not None else get_config().verify.m_max
    report = reciprocity_check(_poset(args), m_max)
    if args.json:
        _emit_json(report.to_dict())
    else:
        _emit_report(report)
    return _report_exit(report)


def cmd_shuffle(args: argparse.Namespace) -> int:
    from gf.shuffles import chain_pair, shuffle_identity

    sizes = _parse_csv(args.parts, "--parts")
    kinds = [k.strip() for k in (args.kinds or "natural,natural").split(",")]
    if len(sizes) != 2 or len(kinds) != 2:
        raise ValueError("shuffle needs two chain sizes in --parts and two kinds in --kinds")
    P, Q = chain_pair(sizes[0], kinds[0], sizes[1], kinds[1])
    report = shuffle_identity(P, Q)
    if args.json:
        _emit_json(report.to_dict())
    else:
        _emit_report(report)
    return _report_exit(report)


def cmd_newcomb(args: argparse.Namespace) -> int:
    from gf.macmahon import macmahon_multiset, newcomb_polynomial

    parts = _parse_csv(args.parts, "--parts")
    if args.q == "1":
        w = newcomb_polynomial(parts)
        if args.json:
            _emit_json({'parts': parts, 'w': coefficient_map(w, "t"), 'text': w.render("t")})
        else:
            sys.stdout.write(w.render("t") + "\n")
        return EXIT_OK
    t_max = args.tmax if args.tmax is not None else get_config().verify.t_max
    a, report = macmahon_multiset(parts, t_max)
    if args.json:
        _emit_json({'parts': parts, 'a': coefficient_map(a), 'text': a.render(), 'report': report.to_dict()})
    else:
        sys.stdout.write(a.render() + "\n")
        if args.verbose or not report.passed:
            _emit_report(report)
    return _report_exit(report)


def cmd_gamma(args: argparse.Namespace) -> int:
    from qsym.generating import gamma

    element = gamma(_poset(args))
    if args.json:
        data: Dict[str, Any] = {'gamma': element.to_dict(), 'text': element.render()}
        if args.n is not None:
            data['expansion'] = coefficient_map(element.expand(args.n), "x")
        _emit_json(data)
    else:
        sys.stdout.write(element.render() + "\n")
        if args.n is not None:
            sys.stdout.write(element.expand(args.n).render("x") + "\n")
    return EXIT_OK


def cmd_delta(args: argparse.Namespace) -> int:
    from qsym.generating import delta

    n = args.n if args.n is not None else get_config().verify.n_vars
    value = delta(_poset(args), n)
    if args.json:
        _emit_json({'n': n, 'delta': coefficient_map(value, "x"), 'text': value.render("x")})
    else:
        sys.stdout.write(value.render("x") + "\n")
    return EXIT_OK


def cmd_chromatic(args: argparse.Namespace) -> int:
    from applications.chromatic import acyclic_orientations, chromatic_check
    from poset.schemas import load_graph

    G = load_graph(Path(_require(args.graph, "--graph")))
    chi, report = chromatic_check(G)
    orientations = len(acyclic_orientations(G))
    if args.json:
        _emit_json({
            'chromatic': coefficient_map(chi, "lambda"),
            'text': chi.render("lambda"),
            'acyclic_orientations': orientations,
            'report': report.to_dict(),
        })
    else:
        sys.stdout.write(chi.render("lambda") + "\n")
        sys.stdout.write(f"acyclic orientations: {orientations}\n")
        if args.verbose or not report.passed:
            _emit_report(report)
    return _report_exit(report)


def cmd_kreweras(args: argparse.Namespace) -> int:
    from applications.kreweras import kreweras
    from poset.schemas import load_shape

    shape = load_shape(Path(_require(args.shape, "--shape")))
    t_max = args.tmax if args.tmax is not None else get_config().verify.t_max
    result = kreweras(shape.outer, shape.inner, t_max)
    if args.json:
        _emit_json(result.to_dict())
    else:
        sys.stdout.write(f"theta: {' '.join(str(v) for v in result.theta)}\n")
        sys.stdout.write(f"w: {' '.join(str(v) for v in result.w)}\n")
        if args.verbose or not result.report.passed:
            _emit_report(result.report)
    return _report_exit(result.report)


def cmd_stirling(args: argparse.Namespace) -> int:
    from applications.stirling import stirling_check, stirling_numerator

    k = _require(args.n, "--n")
    b = stirling_numerator(k)
    report = stirling_check(k)
    if args.json:
        _emit_json({'k': k, 'b': coefficient_map(b, "t"), 'text': b.render("t"), 'report': report.to_dict()})
    else:
        sys.stdout.write(b.render("t") + "\n")
        if args.verbose or not report.passed:
            _emit_report(report)
    return _report_exit(report)


def cmd_neggers(args: argparse.Namespace) -> int:
    from applications.neggers import neggers_test

    result = neggers_test(_poset(args))
    if args.json:
        _emit_json({
            'w': coefficient_map(result.w, "t"),
            'text': result.w.render("t"),
            'real_rooted': result.real_rooted,
        })
    else:
        sys.stdout.write(f"{result.w.render('t')}\n")
        sys.stdout.write(f"real-rooted: {'yes' if result.real_rooted else 'no'}\n")
    return EXIT_OK


def cmd_lambda(args: argparse.Namespace) -> int:
    from applications.lambda_ import multipartite_lambda

    p, s = _require(args.n, "--n"), _require(args.m, "--m")
    lam = multipartite_lambda(p, s)
    if args.json:
        _emit_json({'p': p, 's': s, 'lambda': coefficient_map(lam, "q"), 'text': lam.render()})
    else:
        sys.stdout.write(lam.render() + "\n")
    return EXIT_OK


def cmd_polytopes(args: argparse.Namespace) -> int:
    from applications.polytopes import polytope_counts

    counts = polytope_counts(_poset(args), _require(args.m, "--m"))
    if args.json:
        _emit_json(counts.to_dict())
    else:
        sys.stdout.write(f"order polytope: {counts.order_count}\n")
        sys.stdout.write(f"chain polytope: {counts.chain_count}\n")
        sys.stdout.write(f"Omega({counts.m + 1}) = {counts.omega_value}\n")
        if args.verbose or not counts.report.passed:
            _emit_report(counts.report)
    return _report_exit(counts.report)


def cmd_verify(args: argparse.Namespace) -> int:
    from verification.orchestrator import VerificationOrchestrator
    from verification.report_writer import render_json, render_table

    report = VerificationOrchestrator(_poset(args), get_config()).run()
    if args.json:
        sys.stdout.write(render_json(report, timing=args.verbose))
    else:
        sys.stdout.write(render_table(report, timing=args.verbose))
    return EXIT_OK if report.passed else EXIT_IDENTITY_FAILED


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    'extensions': cmd_extensions,
    'stats': cmd_stats,
    'um': cmd_um,
    'ugf': cmd_ugf,
    'orderpoly': cmd_orderpoly,
    'alphabeta': cmd_alphabeta,
    'reciprocity': cmd_reciprocity,
    'shuffle': cmd_shuffle,
    'newcomb': cmd_newcomb,
    'gamma': cmd_gamma,
    'delta': cmd_delta,
    'chromatic': cmd_chromatic,
    'kreweras': cmd_kreweras,
    'stirling': cmd_stirling,
    'neggers': cmd_neggers,
    'lambda': cmd_lambda,
    'polytopes': cmd_polytopes,
    'verify': cmd_verify,
}

HELP = {
    'extensions': "List linear extensions as label words",
    'stats': "Descent set, des and maj of every linear extension",
    'um': "U_m(q) for the poset (--m, negative allowed)",
    'ugf': "U(q) as a factored rational function",
    'orderpoly': "Order polynomial Omega(m); --m also prints a value",
    'alphabeta': "alpha(S) and beta(S) with their identity checks",
    'reciprocity': "Complement reciprocity identities up to --m",
    'shuffle': "Shuffle formula for two labeled chains (--parts a,b --kinds k1,k2)",
    'newcomb': "Multiset descent polynomial (--q 1) or A(t, q) with MacMahon's check",
    'gamma': "Fundamental expansion of Gamma(P); --n also expands in n variables",
    'delta': "Enriched generating function in --n variables",
    'chromatic': "Chromatic polynomial of --graph with its checks",
    'kreweras': "theta and w of --shape with the Kreweras identities",
    'stirling': "Stirling numerator B_k(t), k from --n",
    'neggers': "Descent polynomial at q = 1 and its real-rootedness",
    'lambda': "Lambda_p(q_1..q_s), p from --n and s from --m",
    'polytopes': "Order and chain polytope lattice points of the --m dilate",
    'verify': "Run the full oracle suite on --poset",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--poset", type=str, metavar="FILE", help="Poset JSON file")
    common.add_argument("--graph", type=str, metavar="FILE", help="Graph JSON file")
    common.add_argument("--shape", type=str, metavar="FILE", help="Shape JSON file")
    common.add_argument("--parts", type=str, metavar="CSV", help="Comma-separated integers")
    common.add_argument("--kinds", type=str, metavar="CSV", help="Chain labelings for shuffle")
    common.add_argument("--m", type=int, help="Bound, dilation or coordinate count")
    common.add_argument("--n", type=int, help="Variable count, k or p")
    common.add_argument("--tmax", type=int, help="Series order in t")
    common.add_argument("--q", choices=["1", "sym"], default="sym", help="Specialise q = 1 or keep q")
    common.add_argument("--json", action="store_true", help="Emit JSON")
    common.add_argument("--verbose", action="store_true", help="Debug logging and full reports")
    common.add_argument("--config", type=str, metavar="FILE", help="ppart_config.yaml to use")

    parser = argparse.ArgumentParser(prog="ppart", description="P-partition computations and identity checks")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=HELP[name])
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        if args.config:
            set_config(PpartConfig.load(Path(args.config)))
        _configure_logging(args.verbose or get_config().verbose_logging)
        return COMMANDS[args.command](args)
    except (PPartitionError, ValueError, yaml.YAMLError) as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
