"""Command line front end.

    fivefib bounds [--family 2-3g|3-3g] [--show-refutation G] [--self-test]
    fivefib mvt --g G --k2 K [--gb 0] [--s 5] [--chains 6,1] [--e-max N]
    fivefib case --id plane-quintic|quadric-cone|smooth-quadric|trigonal|plane-sextic [--g G] [--n N]
    fivefib enumerate [--what cases|dichotomy|ambients] [--g G]
    fivefib report [--scenario FILE]
    fivefib --self-test

Every subcommand takes ``--format {json,md}`` and ``--out PATH``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__, selftest
from .certificates import BoundCertificate, exact, fmt, fmt_short
from .enumerator import (
    K2Family,
    certify_max_genus,
    del_pezzo_case_constraints,
    feasible_genus_k2,
)
from .invariants import (
    DEFAULT_E_MAX,
    FibrationConfig,
    g5_certificate,
    mvt_scan,
    ttz_check,
)
from .pencils import CaseId, CaseModel, all_cases, build_case, minimal_degree_target
from .scenario import Scenario, load as load_scenario

EXPECTED_MAX = {K2Family.TWO_MINUS_3G: 11, K2Family.THREE_MINUS_3G: 10}


def _dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cert_md(cert: BoundCertificate) -> str:
    subs = ", ".join(f"{k}={fmt_short(v)}" for k, v in sorted(cert.substitution.items()))
    return f"- **{cert.statement or cert.name}** [{subs}]: {fmt_short(cert.lhs)} <= {fmt_short(cert.rhs)}, slack {fmt_short(cert.slack)} ({cert.verdict})"


# -- payload builders --------------------------------------------------------


def bounds_payload(families: Sequence[K2Family], show_refutation: Optional[int] = None):
    tables = {fam: certify_max_genus(fam) for fam in families}
    payload = {
        "tables": [tables[fam].to_dict() for fam in families],
        "max_genus": {fam.value: tables[fam].max_genus for fam in families},
        "matches_expected": all(tables[fam].max_genus == EXPECTED_MAX[fam] for fam in families),
    }
    if show_refutation is not None:
        payload["refutation"] = refutation_payload(show_refutation, families)
    return payload, tables


def refutation_payload(g: int, families: Sequence[K2Family]) -> dict:
    for fam in families:
        table = certify_max_genus(fam)
        try:
            row = table.row(g)
        except KeyError:
            continue
        out = {"g": g, "K2": row.K2, "verdict": row.verdict, "certificates": [c.to_dict() for c in row.certificates]}
        if row.witness is not None:
            chains = row.witness.chains
            config = FibrationConfig(g, row.K2, chains=chains)
            out["chains"] = list(chains)
            out["e_f"] = config.e_f
            out["r_f"] = fmt(config.r_f)
        return out
    raise ValueError(f"no row for g = {g}")


def mvt_payload(config: FibrationConfig, e_max: int) -> dict:
    scan = mvt_scan(config, e_max)
    payload = {
        "config": config.to_dict(),
        "e_f": config.e_f,
        "r_f": fmt(config.r_f),
        "ttz": ttz_check(config).to_dict(),
        "e_max": e_max,
        "binding_e": scan.binding_e,
        "all_hold": scan.all_hold,
        "failures": scan.failures,
        "certificates": [c.to_dict() for c in scan.certificates],
    }
    if config.g_B == 0 and config.s == 5:
        payload["g5"] = g5_certificate(config).to_dict()
    return payload


def case_payload(model: CaseModel) -> dict:
    return model.to_dict()


def report_payload() -> dict:
    dich = feasible_genus_k2()
    return {
        "dichotomy": [
            {"g": g, "K2": k2, "family": K2Family.of(g, k2).value,
             "ambients": [d.to_dict() for d in minimal_degree_target(g, k2)]}
            for g, k2 in sorted(dich.pairs, key=lambda p: (K2Family.of(*p).value, p[0]))
        ],
        "tables": [certify_max_genus(fam).to_dict() for fam in K2Family],
        "del_pezzo": [del_pezzo_case_constraints(g).to_dict() for g in range(6, 11)],
        "cases": [m.to_dict() for m in all_cases()],
    }


def scenario_payload(scenario: Scenario) -> dict:
    return {
        "configs": [dict(name=req.name, **mvt_payload(req.config, req.e_max)) for req in scenario.configs],
        "cases": [dict(name=req.name, **build_case(req.case_id, req.g, req.n).to_dict()) for req in scenario.cases],
    }


# -- markdown renderers -------------------------------------------------------


def mvt_markdown(p: dict) -> str:
    c = p["config"]
    lines = [
        f"## MVT scan: g={c['g']}, K^2={c['K2']}, g_B={c['g_B']}, s={c['s']}, chains={c['chains']}",
        "",
        f"e_f = {p['e_f']}, r_f = {p['r_f']}",
        f"binding e = {p['binding_e']}; all hold: {p['all_hold']}",
    ]
    if p["failures"]:
        lines.append(f"fails at e = {', '.join(map(str, p['failures']))}")
    lines.append("")
    lines.append(_cert_md(BoundCertificate.from_dict(p["ttz"])))
    if "g5" in p:
        lines.append(_cert_md(BoundCertificate.from_dict(p["g5"])))
    shown = {p["binding_e"], *p["failures"][:10]}
    for d in p["certificates"]:
        cert = BoundCertificate.from_dict(d)
        if int(cert.substitution["e"]) in shown:
            lines.append(_cert_md(cert))
    return "\n".join(lines) + "\n"


def case_markdown(d: dict) -> str:
    status = "PASS" if all(c["passed"] for c in d["certificates"]) else "FAIL"
    head = f"## {d['case_id']} (g={d['g']}" + (f", n={d['n']}" if "n" in d else "") + ")"
    doubles = d["schedule"].count(2)
    lines = [
        head,
        "",
        f"pencil {d['pencil']}; {d['base_points']} base points ({doubles} double); K^2 = {d['K2']}; {status}",
        "",
        "| check | expected | actual | ok |",
        "|-------|----------|--------|----|",
    ]
    for c in d["certificates"]:
        lines.append(f"| {c['name']} | {c['expected']} | {c['actual']} | {'yes' if c['passed'] else 'NO'} |")
    return "\n".join(lines) + "\n"


def del_pezzo_markdown(d: dict) -> str:
    if not d["derived"]:
        return f"- g={d['g']}: no constraint derived\n"
    lower = ", ".join(f"{k} >= {v}" for k, v in d["lower"].items())
    zero = ", ".join(f"{z} = 0" for z in d["zero"])
    text = f"- g={d['g']} (m={d['m']}): {lower}" + (f"; {zero}" if zero else "")
    if d["flags"]:
        text += f" [{'; '.join(d['flags'])}]"
    return text + "\n"


# -- commands ---------------------------------------------------------------


def _families(value: Optional[str]) -> list[K2Family]:
    return list(K2Family) if value is None else [K2Family.parse(value)]


def cmd_bounds(args) -> tuple[str, int]:
    families = _families(args.family)
    payload, tables = bounds_payload(families, args.show_refutation)
    status = 0 if not args.self_test or payload["matches_expected"] else 1
    if args.format == "json":
        return _dump(payload), status
    parts = [tables[fam].to_markdown() for fam in families]
    if args.show_refutation is not None:
        ref = payload["refutation"]
        parts.append(f"### Row g={ref['g']} ({ref['verdict']})\n")
        if "r_f" in ref:
            r_f = exact(ref["r_f"])
            whole = r_f.numerator // r_f.denominator
            parts.append(f"chains={ref['chains']}, e_f={ref['e_f']}, r_f = {fmt_short(r_f)} = {whole} + {fmt_short(r_f - whole)}\n")
        parts.append("\n".join(_cert_md(BoundCertificate.from_dict(c)) for c in ref["certificates"]) + "\n")
    if args.self_test:
        parts.append(f"self-test: {'PASS' if payload['matches_expected'] else 'FAIL'}\n")
    return "\n".join(parts), status


def cmd_mvt(args) -> tuple[str, int]:
    chains = tuple(int(x) for x in args.chains.split(",") if x.strip()) if args.chains else ()
    config = FibrationConfig(args.g, args.k2, args.gb, args.s, chains, args.euler)
    payload = mvt_payload(config, args.e_max)
    return (_dump(payload) if args.format == "json" else mvt_markdown(payload)), 0


def cmd_case(args) -> tuple[str, int]:
    model = build_case(args.id, args.g, args.n)
    payload = case_payload(model)
    return (_dump(payload) if args.format == "json" else case_markdown(payload)), 0


def cmd_enumerate(args) -> tuple[str, int]:
    if args.what == "dichotomy":
        dich = feasible_genus_k2()
        rows = [
            {"g": g, "K2": k2, "family": K2Family.of(g, k2).value,
             "certificates": [c.to_dict() for c in dich.feasible[(g, k2)]]}
            for g, k2 in sorted(dich.pairs, key=lambda p: (K2Family.of(*p).value, p[0]))
        ]
        if args.g is not None:
            rows = [r for r in rows if r["g"] == args.g]
        if args.format == "json":
            return _dump({"rows": rows}), 0
        lines = ["| g | K^2 | family | g5 slack |", "|---|-----|--------|---------:|"]
        for r in rows:
            lines.append(f"| {r['g']} | {r['K2']} | {r['family']} | {fmt_short(BoundCertificate.from_dict(r['certificates'][1]).slack)} |")
        return "\n".join(lines) + "\n", 0
    if args.what == "ambients":
        dich = feasible_genus_k2()
        rows = [
            {"g": g, "K2": k2, "ambients": [d.to_dict() for d in minimal_degree_target(g, k2)]}
            for g, k2 in sorted(dich.pairs)
            if args.g is None or g == args.g
        ]
        if args.format == "json":
            return _dump({"rows": rows}), 0
        lines = [f"- g={r['g']}, K^2={r['K2']}: " + (", ".join(
            f"{a['kind']} {a['surface']} (deg {a['degree']})" for a in r["ambients"]) or "none") for r in rows]
        return "\n".join(lines) + "\n", 0
    models = [m for m in all_cases() if args.g is None or m.g == args.g]
    if args.format == "json":
        return _dump({"cases": [m.to_dict() for m in models]}), 0
    lines = ["| case | g | n | pencil | base points | double | K^2 | status |",
             "|------|---|---|--------|------------:|-------:|----:|--------|"]
    for m in models:
        lines.append(
            f"| {m.case_id.value} | {m.g} | {'' if m.n is None else m.n} | {m.pencil} | {m.base_points} "
            f"| {m.double_points} | {m.K2} | {'PASS' if m.passed else 'FAIL'} |"
        )
    return "\n".join(lines) + "\n", 0


def cmd_report(args) -> tuple[str, int]:
    if args.scenario:
        scenario = load_scenario(args.scenario)
        fmt_ = args.format or scenario.format
        payload = scenario_payload(scenario)
        if fmt_ == "json":
            return _dump(payload), 0
        parts = [mvt_markdown(c) for c in payload["configs"]] + [case_markdown(c) for c in payload["cases"]]
        return "\n".join(parts), 0
    payload = report_payload()
    if args.format == "json":
        return _dump(payload), 0
    parts = ["# Classification report\n"]
    parts += [certify_max_genus(fam).to_markdown() for fam in K2Family]
    parts.append("### Base point constraints, K^2 = 3-3g\n")
    parts.append("".join(del_pezzo_markdown(d) for d in payload["del_pezzo"]))
    parts.append("### Pencil constructions\n")
    parts.append(cmd_enumerate(argparse.Namespace(what="cases", g=None, format="md"))[0])
    return "\n".join(parts), 0


def run_self_test() -> tuple[str, int]:
    lines, ok = [], True
    for name, passed, detail in selftest.run():
        ok &= passed
        lines.append(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
    lines.append("self-test: " + ("PASS" if ok else "FAIL"))
    return "\n".join(lines) + "\n", 0 if ok else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "md"), default=None)
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="fivefib", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--self-test", action="store_true", help="reproduce every anchored value and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("bounds", parents=[common], help="per-genus feasibility tables")
    p.add_argument("--family", help="2-3g or 3-3g (default: both)")
    p.add_argument("--show-refutation", type=int, metavar="G", help="print the certificates for row G")
    p.add_argument("--self-test", action="store_true", help="exit 1 unless the maxima are 11 and 10")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("mvt", parents=[common], help="scan the MVT inequality over e")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--gb", type=int, default=0)
    p.add_argument("--s", type=int, default=5)
    p.add_argument("--chains", default="", help="comma separated chain lengths")
    p.add_argument("--euler", type=int, default=None, help="override e(X) = 12 - K^2")
    p.add_argument("--e-max", type=int, default=DEFAULT_E_MAX)
    p.set_defaults(func=cmd_mvt)

    p = sub.add_parser("case", parents=[common], help="build and verify one pencil construction")
    p.add_argument("--id", required=True, help=", ".join(c.value for c in CaseId))
    p.add_argument("--g", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_case)

    p = sub.add_parser("enumerate", parents=[common], help="list cases, the (g, K^2) dichotomy or ambients")
    p.add_argument("--what", choices=("cases", "dichotomy", "ambients"), default="cases")
    p.add_argument("--g", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("report", parents=[common], help="full report, or evaluate a scenario file")
    p.add_argument("--scenario", help="INI-style scenario file")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        if args.self_test:
            text, status = run_self_test()
            sys.stdout.write(text)
            return status
        parser.print_help()
        return 2
    if args.format is None and args.command != "report":
        args.format = "md"
    try:
        text, status = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
