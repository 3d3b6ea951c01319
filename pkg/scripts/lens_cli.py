import argparse
import sys
import time
from dataclasses import asdict
from typing import List, Optional

from omegaconf.errors import OmegaConfBaseException

from invariants.errors import CrossCheckError, DomainError
from invariants.lens import lens_normalize, tau_series, xi, xi_ratio
from invariants.numtheory import DEDEKIND_METHODS, dedekind, hickerson_terms, jacobi, neg_cont_frac
from invariants.search import classify_pair, find_tau_twins, gcd_profile
from invariants.theorem import theorem_claims
from utils.config import DEFAULT_CONFIG_PATH, LensConfig, load_config
from utils.utils import (
	OutputRecord,
	approx_pair,
	cyclo_to_record,
	format_approx,
	format_cyclo,
	fraction_to_str,
	readable_timestamp,
	report_record,
	trace_record,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CROSS_CHECK = 2


class CliParser(argparse.ArgumentParser):
	# usage errors are domain errors (exit 1); exit 2 is reserved for cross-check failures
	def error(self, message):
		self.print_usage(sys.stderr)
		print(f"error: {message}", file=sys.stderr)
		raise SystemExit(EXIT_DOMAIN)


def emit(cfg: LensConfig, record: OutputRecord, text_lines: List[str]) -> None:
	if cfg.json:
		print(record.to_json())
	else:
		for line in text_lines:
			print(line)


def cmd_dedekind(args, cfg: LensConfig) -> int:
	p, q = args.p, args.q
	if args.method != "all":
		value = dedekind(q, p, args.method)
		record = OutputRecord("dedekind", {"p": p, "q": q, "method": args.method},
							  fraction_to_str(value), float(value))
		emit(cfg, record, [fraction_to_str(value)])
		return EXIT_OK

	values = {m: dedekind(q, p, m) for m in DEDEKIND_METHODS}
	trace = {m: fraction_to_str(v) for m, v in values.items()}
	lines = [f"{m}: {fraction_to_str(v)}" for m, v in values.items()]
	if p > 1:
		terms = hickerson_terms(q, p)
		trace["integral"] = terms.integral
		trace["fractional"] = fraction_to_str(terms.fractional)
		lines.append(f"12s = {terms.integral} + {terms.fractional}")
	agreed = len(set(values.values())) == 1
	value = values["direct"]
	record = OutputRecord("dedekind", {"p": p, "q": q, "method": "all"}, fraction_to_str(value), float(value), trace)
	emit(cfg, record, [fraction_to_str(value)] + lines)
	if not agreed:
		raise CrossCheckError(f"Dedekind methods disagree for s({q},{p}): {trace}")
	return EXIT_OK


def cmd_contfrac(args, cfg: LensConfig) -> int:
	cf = neg_cont_frac(args.p, args.q)
	record = OutputRecord("contfrac", {"p": args.p, "q": args.q}, {"terms": list(cf.terms), "n": cf.n})
	emit(cfg, record, [str(list(cf.terms)), f"n = {cf.n}"])
	return EXIT_OK


def cmd_jacobi(args, cfg: LensConfig) -> int:
	value = jacobi(args.a, args.n)
	emit(cfg, OutputRecord("jacobi", {"a": args.a, "n": args.n}, value, float(value)), [str(value)])
	return EXIT_OK


def cmd_xi(args, cfg: LensConfig) -> int:
	lens = lens_normalize(args.p, args.q)
	trace = xi(lens, args.r)
	record = OutputRecord("xi", {"p": args.p, "q": args.q, "r": args.r}, cyclo_to_record(trace.value),
						  approx_pair(trace.value, cfg.precision), trace_record(trace))
	lines = [
		f"xi_{args.r}({lens}) = {format_cyclo(trace.value)}",
		f"  ~ {format_approx(trace.value, cfg.precision)}",
	]
	lines += [f"  {k} = {v}" for k, v in trace_record(trace).items()]
	emit(cfg, record, lines)
	return EXIT_OK


def cmd_xi_ratio(args, cfg: LensConfig) -> int:
	l1, l2 = lens_normalize(args.p, args.q1), lens_normalize(args.p, args.q2)
	ratio = xi_ratio(l1, l2, args.r)
	record = OutputRecord("xi-ratio", {"p": args.p, "q1": args.q1, "q2": args.q2, "r": args.r},
						  cyclo_to_record(ratio), approx_pair(ratio, cfg.precision))
	emit(cfg, record, [f"xi_{args.r}({l1}) / xi_{args.r}({l2}) = {format_cyclo(ratio)}",
					   f"  ~ {format_approx(ratio, cfg.precision)}"])
	return EXIT_OK


def cmd_tau(args, cfg: LensConfig) -> int:
	order = cfg.tau_order if args.order is None else args.order
	series = tau_series(lens_normalize(args.p, args.q), order)
	record = OutputRecord("tau", {"p": args.p, "q": args.q, "order": order},
						  [fraction_to_str(lam) for lam in series.lambdas],
						  [float(lam) for lam in series.lambdas])
	emit(cfg, record, [f"lambda_{n} = {fraction_to_str(lam)}" for n, lam in enumerate(series.lambdas)])
	return EXIT_OK


def _report_lines(report) -> List[str]:
	return [
		f"L({report.p},{report.q1}) vs L({report.p},{report.q2}): s = {fraction_to_str(report.dedekind_value)}",
		f"  distinguishing r: {list(report.distinguishing_r)}",
		f"  agreeing r: {list(report.agreeing_r)}",
		f"  both zero r: {list(report.all_zero_r)}",
		f"  by gcd(r, p): {gcd_profile(report)}",
	]


def cmd_compare(args, cfg: LensConfig) -> int:
	rmax = cfg.rmax if args.rmax is None else args.rmax
	report = classify_pair(args.p, args.q1, args.q2, rmax, show_progress=cfg.show_progress and not cfg.json)
	record = OutputRecord("compare", {"p": args.p, "q1": args.q1, "q2": args.q2, "rmax": rmax},
						  report_record(report), trace={"gcd_profile": {str(g): b for g, b in gcd_profile(report).items()}})
	emit(cfg, record, _report_lines(report))
	return EXIT_OK


def cmd_search(args, cfg: LensConfig) -> int:
	pmax = cfg.pmax if args.pmax is None else args.pmax
	rmax = cfg.rmax if args.rmax is None else args.rmax
	progress = cfg.show_progress and not cfg.json
	if cfg.use_wandb:
		from utils.wandb_utils import init_wandb, log_search_metrics, finish_wandb
		init_wandb(cfg.wandb_project, asdict(cfg), f"search_{readable_timestamp()}")

	start = time.time()
	twins = find_tau_twins(pmax, workers=cfg.workers, show_progress=progress)
	reports = []
	for step, (p, q1, q2) in enumerate(twins):
		report = classify_pair(p, q1, q2, rmax)
		reports.append(report)
		if cfg.use_wandb:
			log_search_metrics(step, {
				"p": p,
				"distinguishing": len(report.distinguishing_r),
				"agreeing": len(report.agreeing_r),
				"elapsed_s": time.time() - start,
			})
	if cfg.use_wandb:
		finish_wandb()

	record = OutputRecord("search", {"pmax": pmax, "rmax": rmax}, [report_record(r) for r in reports])
	lines = [f"{len(twins)} tau-indistinguishable pairs with p <= {pmax}"]
	for report in reports:
		lines += _report_lines(report)
	emit(cfg, record, lines)
	return EXIT_OK


def cmd_verify_theorem(args, cfg: LensConfig) -> int:
	rmax = cfg.verify_rmax if args.rmax is None else args.rmax
	if rmax < LensConfig.verify_rmax:
		print(f"[WARN] verify-theorem with rmax={rmax} checks fewer levels than the default {LensConfig.verify_rmax}.",
			  file=sys.stderr)
	claims = list(theorem_claims(rmax, show_progress=cfg.show_progress and not cfg.json))
	record = OutputRecord("verify-theorem", {"rmax": rmax},
						  [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in claims])
	emit(cfg, record, [f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.detail})" for c in claims])
	return EXIT_OK if all(c.passed for c in claims) else EXIT_CROSS_CHECK


def add_global_flags(parser: argparse.ArgumentParser, prefix: str = "") -> None:
	# subcommand defaults overwrite top-level values of the same dest, hence the prefix
	parser.add_argument("--json", dest=f"{prefix}json", action="store_true", default=None,
						help="Machine-readable JSON output")
	parser.add_argument("--precision", dest=f"{prefix}precision", type=int, help="Digits for float rendering")
	parser.add_argument("--config", dest=f"{prefix}config", type=str, help=f"YAML config file (default {DEFAULT_CONFIG_PATH})")
	parser.add_argument("--set", dest=f"{prefix}overrides", action="append", default=[], metavar="KEY=VALUE",
						help="Config override (repeatable), e.g. --set workers=4")


def build_parser() -> argparse.ArgumentParser:
	common = argparse.ArgumentParser(add_help=False)
	add_global_flags(common)

	parser = CliParser(description="Quantum invariants of lens spaces: Dedekind sums, xi_r and Ohtsuki's tau")
	add_global_flags(parser, prefix="global_")
	subparsers = parser.add_subparsers(dest="cmd")

	p = subparsers.add_parser("dedekind", parents=[common], help="Dedekind sum s(q,p)")
	p.add_argument("p", type=int)
	p.add_argument("q", type=int)
	p.add_argument("--method", default="fast", choices=list(DEDEKIND_METHODS) + ["all"],
				   help="all = cross-check the three methods")
	p.set_defaults(func=cmd_dedekind)

	p = subparsers.add_parser("contfrac", parents=[common], help="Negative continued fraction of p/q")
	p.add_argument("p", type=int)
	p.add_argument("q", type=int)
	p.set_defaults(func=cmd_contfrac)

	p = subparsers.add_parser("jacobi", parents=[common], help="Jacobi symbol (a/n)")
	p.add_argument("a", type=int)
	p.add_argument("n", type=int)
	p.set_defaults(func=cmd_jacobi)

	p = subparsers.add_parser("xi", parents=[common], help="xi_r(L(p,q), e_r) with its trace")
	p.add_argument("p", type=int)
	p.add_argument("q", type=int)
	p.add_argument("r", type=int)
	p.set_defaults(func=cmd_xi)

	p = subparsers.add_parser("xi-ratio", parents=[common], help="xi_r(L(p,q1)) / xi_r(L(p,q2))")
	p.add_argument("p", type=int)
	p.add_argument("q1", type=int)
	p.add_argument("q2", type=int)
	p.add_argument("r", type=int)
	p.set_defaults(func=cmd_xi_ratio)

	p = subparsers.add_parser("tau", parents=[common], help="Ohtsuki's tau series to a given order")
	p.add_argument("p", type=int)
	p.add_argument("q", type=int)
	p.add_argument("--order", type=int)
	p.set_defaults(func=cmd_tau)

	p = subparsers.add_parser("compare", parents=[common], help="Classify odd levels for a tau-twin pair")
	p.add_argument("p", type=int)
	p.add_argument("q1", type=int)
	p.add_argument("q2", type=int)
	p.add_argument("--rmax", type=int)
	p.set_defaults(func=cmd_compare)

	p = subparsers.add_parser("search", parents=[common], help="Find and classify tau-twin lens spaces")
	p.add_argument("--pmax", type=int)
	p.add_argument("--rmax", type=int)
	p.set_defaults(func=cmd_search)

	p = subparsers.add_parser("verify-theorem", parents=[common], help="Check every claim about L(25,6) and L(25,11)")
	p.add_argument("--rmax", type=int)
	p.set_defaults(func=cmd_verify_theorem)

	return parser


def _flag(args, name: str):
	# the flag given after the subcommand wins over the one given before it
	value = getattr(args, name, None)
	return getattr(args, f"global_{name}", None) if value is None else value


def resolve_config(args) -> LensConfig:
	config_path = _flag(args, "config") or DEFAULT_CONFIG_PATH
	overrides = list(args.global_overrides) + list(getattr(args, "overrides", []))
	cfg: LensConfig = load_config(LensConfig, config_path, overrides)
	json_flag, precision = _flag(args, "json"), _flag(args, "precision")
	if json_flag is not None:
		cfg.json = json_flag
	if precision is not None:
		cfg.precision = precision
	if cfg.precision < 1:
		raise DomainError(f"--precision must be positive, got {cfg.precision}")
	return cfg


def run(argv: Optional[List[str]] = None) -> int:
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as e:
		# --help exits 0, usage errors exit 1 via CliParser.error
		return EXIT_OK if e.code is None else int(e.code)
	if not getattr(args, "cmd", None):
		parser.print_help()
		return EXIT_DOMAIN
	try:
		cfg = resolve_config(args)
		return args.func(args, cfg)
	except (DomainError, FileNotFoundError, OmegaConfBaseException) as e:
		print(f"error: {e}", file=sys.stderr)
		return EXIT_DOMAIN
	except CrossCheckError as e:
		print(f"error: cross-check failed: {e}", file=sys.stderr)
		return EXIT_CROSS_CHECK


def main() -> None:
	sys.exit(run())


if __name__ == "__main__":
	main()
