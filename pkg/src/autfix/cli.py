"""``theta``: fixed-point spectra of automorphisms from the command line.

Examples::

    theta abelian -p 3 -a 1 -b 2 --method enumerate
    theta abelian -p 2 -a 1 -b 2 --method formula --json
    theta dihedral -n 5
    theta oracle zsum:3,3,9 --csv
    theta verify --paper --json

Exit codes: 0 success, 1 a closed form disagreed with enumeration,
2 invalid input or a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field

from autfix import abelian_rank2 as ab
from autfix import dihedral as dh
from autfix import formulas, oracle, verify
from autfix.errors import AutfixError
from autfix.modarith import divisors, is_prime, totient
from autfix.spectrum import Check, Spectrum

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

NO_CLOSED_FORM = "no closed form in source"

# (default, hard ceiling) on the group order, per command
CAPS = {
    "abelian": (4096, ab.SPECTRUM_CAP),
    "dihedral": (1024, dh.DIHEDRAL_CAP),
    "oracle": (oracle.ORACLE_CAP, 4096),
}


@dataclass
class SpectrumReport:
    group: str
    method: str
    aut_order: int
    entries: list[tuple[int, int | None]]
    # closed-form values overlaid on an enumerated spectrum, keyed by d
    closed_forms: dict[int, int] = field(default_factory=dict)
    coverage: str = "full"

    @classmethod
    def from_spectrum(cls, spec: Spectrum, method: str) -> SpectrumReport:
        return cls(spec.group, method, spec.mass, spec.items())

    @property
    def checks(self) -> list[Check]:
        return [Check(f"{self.group} theta(d={d}) closed form", self.closed_forms[d], count)
                for d, count in self.entries if d in self.closed_forms]

    def match_status(self) -> dict[int, bool]:
        return {d: self.closed_forms[d] == count
                for d, count in self.entries if d in self.closed_forms}

    @property
    def passed(self) -> bool:
        return all(self.match_status().values())

    def as_dict(self) -> dict:
        out = {
            "group": self.group,
            "method": self.method,
            "aut_order": self.aut_order,
            "spectrum": [{"d": d, "count": c} for d, c in self.entries],
        }
        if self.coverage != "full":
            out["coverage"] = self.coverage
            out["note"] = NO_CLOSED_FORM
        if self.checks:
            out["checks"] = [c.as_dict() for c in self.checks]
        return out


class UsageError(Exception):
    pass


def _cap(args, command: str) -> int:
    default, ceiling = CAPS[command]
    cap = default if args.max_order is None else args.max_order
    if cap > ceiling:
        raise UsageError(f"--max-order {cap} exceeds the hard ceiling {ceiling} for '{command}'")
    return cap


def _abelian_closed_forms(p: int, a: int, b: int) -> dict[int, int]:
    if a >= b:
        return {}
    if (a, b) == (1, 2):
        return {d: formulas.theta_zp_zp2(p, d) for d in (1, p, p**2, p**3)}
    return {1: formulas.fpf_count_general(p, a, b)}


def cmd_abelian(args) -> SpectrumReport:
    p, a, b = args.prime, args.a, args.b
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if a < 1 or b < 1:
        raise UsageError("exponents must be >= 1")
    cap = _cap(args, "oracle" if args.method == "oracle" else "abelian")
    closed = _abelian_closed_forms(p, a, b)

    if args.method == "formula":
        g = ab.Rank2PGroup(p, a, b)
        order = formulas.aut_order_general(p, a, b)
        entries = [(d, closed.get(d)) for d in divisors(g.order)]
        coverage = "full" if len(closed) == len(entries) else "partial"
        return SpectrumReport(g.label, "formula", order, entries, coverage=coverage)

    if args.method == "oracle":
        # a = b is allowed here: the oracle does not need the matrix form
        cg = oracle.build_direct_sum([p**a, p**b], max_order=cap)
        spec = oracle.oracle_theta_spectrum(cg, name=f"Z_{p**a}+Z_{p**b}")
        report = SpectrumReport.from_spectrum(spec, "oracle")
    else:
        g = ab.Rank2PGroup(p, a, b)
        spec = ab.theta_spectrum(g, workers=args.threads, max_order=cap)
        report = SpectrumReport.from_spectrum(spec, "enumerate")
    report.closed_forms = closed
    return report


def cmd_dihedral(args) -> SpectrumReport:
    n = args.n
    if n < 3:
        raise UsageError(f"dihedral groups need n >= 3, got {n}")
    closed = ({d: formulas.theta_dihedral_formula(n, d) for d in (1, 2, n, 2 * n)}
              if n > 2 and is_prime(n) else {})
    label = f"D_{2 * n}"
    if args.method == "formula":
        entries = [(d, closed.get(d)) for d in divisors(2 * n)]
        return SpectrumReport(label, "formula", n * totient(n), entries,
                              coverage="full" if closed else "none")
    if args.method == "oracle":
        cg = oracle.build_dihedral(n, max_order=_cap(args, "oracle"))
        report = SpectrumReport.from_spectrum(oracle.oracle_theta_spectrum(cg, name=label), "oracle")
    else:
        spec = dh.dihedral_theta_spectrum(dh.DihedralGroup(n), workers=args.threads,
                                          max_order=_cap(args, "dihedral"))
        report = SpectrumReport.from_spectrum(spec, "enumerate")
    report.closed_forms = closed
    return report


_MODULUS = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_group_spec(text: str) -> tuple[str, list[int]]:
    """``zsum:m1,m2,...`` (each m or p^k) or ``dihedral:n``."""
    kind, sep, body = text.partition(":")
    if not sep or not body:
        raise UsageError(f"cannot parse group spec {text!r}")
    if kind == "dihedral":
        if not body.isdigit():
            raise UsageError(f"bad dihedral parameter {body!r}")
        return kind, [int(body)]
    if kind == "zsum":
        mods = []
        for part in body.split(","):
            m = _MODULUS.match(part.strip())
            if not m:
                raise UsageError(f"bad modulus {part!r}")
            base, exp = int(m.group(1)), int(m.group(2) or 1)
            mods.append(base**exp)
        return kind, mods
    raise UsageError(f"unknown group kind {kind!r}; use zsum: or dihedral:")


def cmd_oracle(args) -> SpectrumReport:
    kind, params = parse_group_spec(args.group)
    cap = _cap(args, "oracle")
    if kind == "dihedral":
        cg = oracle.build_dihedral(params[0], max_order=cap)
        name = f"D_{2 * params[0]}"
    else:
        cg = oracle.build_direct_sum(params, max_order=cap)
        name = "+".join(f"Z_{m}" for m in params)
    return SpectrumReport.from_spectrum(oracle.oracle_theta_spectrum(cg, name=name), "oracle")


def cmd_verify(args) -> tuple[str, list[Check]]:
    if args.primes:
        try:
            primes = [int(x) for x in args.primes.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"bad prime list {args.primes!r}")
        bad = [p for p in primes if not is_prime(p)]
        if bad or not primes:
            raise UsageError(f"not primes: {bad or args.primes}")
        return "primes:" + ",".join(map(str, primes)), verify.check_zp_zp2_spectrum(primes, workers=args.threads)
    return "full", verify.full_suite(workers=args.threads)


# -- rendering --------------------------------------------------------------

def render_report(report: SpectrumReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=2) + "\n"
    match = report.match_status()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "count", "match"] if match else ["d", "count"])
        for d, count in report.entries:
            row = [d, "" if count is None else count]
            if match:
                row.append("" if d not in match else ("pass" if match[d] else "FAIL"))
            w.writerow(row)
        return buf.getvalue()
    lines = [f"{report.group}  method={report.method}  |Aut|={report.aut_order}"]
    lines.append(f"{'d':>8}  {'theta':>10}" + ("  closed form" if match else ""))
    for d, count in report.entries:
        shown = "n/a" if count is None else str(count)
        line = f"{d:>8}  {shown:>10}"
        if d in match:
            line += "  pass" if match[d] else "  FAIL"
        lines.append(line)
    if any(count is None for _, count in report.entries):
        lines.append(f"n/a: {NO_CLOSED_FORM}")
    return "\n".join(lines) + "\n"


def render_checks(scope: str, checks: list[Check], fmt: str) -> str:
    failed = [c for c in checks if not c.passed]
    if fmt == "json":
        doc = {
            "scope": scope,
            "status": "pass" if not failed else "fail",
            "passed": len(checks) - len(failed),
            "failed": len(failed),
            "checks": [c.as_dict() for c in checks],
        }
        if failed:
            doc["first_failure"] = failed[0].name
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "expected", "actual", "pass"])
        for c in checks:
            w.writerow([c.name, json.dumps(c.expected), json.dumps(c.actual), c.passed])
        return buf.getvalue()
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
             + ("" if c.passed else f"  expected={c.expected!r} actual={c.actual!r}")
             for c in checks]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    if failed:
        lines.append(f"first failure: {failed[0].name}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    common.add_argument("--threads", type=int, default=1, metavar="N")
    common.add_argument("--max-order", type=int, default=None, metavar="N",
                        help="override the group-order cap (bounded by a hard ceiling)")

    parser = argparse.ArgumentParser(prog="theta", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("abelian", parents=[common], help="Z_{p^a} + Z_{p^b}")
    pa.add_argument("-p", "--prime", type=int, required=True)
    pa.add_argument("-a", type=int, required=True)
    pa.add_argument("-b", type=int, required=True)
    pa.add_argument("--method", choices=["formula", "enumerate", "oracle"], default="enumerate")

    pd = sub.add_parser("dihedral", parents=[common], help="D_2n for an n-gon")
    pd.add_argument("-n", type=int, required=True, help="number of polygon sides (|D| = 2n)")
    pd.add_argument("--method", choices=["formula", "enumerate", "oracle"], default="enumerate")

    po = sub.add_parser("oracle", parents=[common], help="Cayley-table brute force")
    po.add_argument("group", help="zsum:m1,m2,... (m or p^k) or dihedral:n")

    pv = sub.add_parser("verify", parents=[common], help="check closed forms against enumeration")
    scope = pv.add_mutually_exclusive_group()
    scope.add_argument("--paper", action="store_true", help="the full reproduction suite (default)")
    scope.add_argument("--primes", metavar="P,Q,...", help="Z_p+Z_p^2 spectrum at these primes only")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.fmt or "table"
    if args.threads < 1:
        print("theta: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "verify":
            scope, checks = cmd_verify(args)
            text = render_checks(scope, checks, fmt)
            code = EXIT_OK if all(c.passed for c in checks) else EXIT_MISMATCH
        else:
            handler = {"abelian": cmd_abelian, "dihedral": cmd_dihedral, "oracle": cmd_oracle}
            report = handler[args.command](args)
            text = render_report(report, fmt)
            code = EXIT_OK if report.passed else EXIT_MISMATCH
    except (UsageError, AutfixError) as exc:
        print(f"theta: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
