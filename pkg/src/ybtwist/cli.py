"""Command-line interface.

Reports go to stdout as JSON, a short human summary goes to stderr.
Exit codes: 0 all checks pass, 1 a mathematical property fails, 2 malformed
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import algebra, birack, census, isotope, solution, structures
from .errors import HypothesisViolated, MalformedInput, NotQuadraticSet, SizeUnsupported, YBError

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2

FIELDS = {"n", "circ", "bullet", "grading", "phi"}
REQUIRED_CHECKS = (
    "left_quasigroup",
    "right_quasigroup",
    "nondegenerate",
    "right_cyclic",
    "birack",
    "involutive",
    "quadratic_set",
    "braided",
    "l1_r1_lr3",
    "graded",
    "twist_system",
)
OPTIONAL_CHECKS = ("lri", "distributive", "two_reductive", "square_free")


class Failed(Exception):
    """A mathematical property failed; carries the report to print."""

    def __init__(self, report: dict, summary: str):
        super().__init__(summary)
        self.report = report
        self.summary = summary


# -- input documents -----------------------------------------------------------

@dataclass
class InputDocument:
    n: int
    circ: structures.Table
    bullet: Optional[structures.Table] = None
    grading: Optional[structures.Grading] = None
    phi: Optional[tuple[structures.Perm, ...]] = None

    @classmethod
    def parse(cls, data) -> "InputDocument":
        if not isinstance(data, dict):
            raise MalformedInput("document must be a JSON object")
        unknown = sorted(set(data) - FIELDS)
        if unknown:
            raise MalformedInput(f"unknown field(s): {', '.join(unknown)}")
        for key in ("n", "circ"):
            if key not in data:
                raise MalformedInput(f"missing required field '{key}'")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise MalformedInput(f"n: expected a positive integer, got {n!r}")
        circ = _table(data["circ"], n, "circ")
        bullet = _table(data["bullet"], n, "bullet") if data.get("bullet") is not None else None
        grading = None
        if data.get("grading") is not None:
            raw = data["grading"]
            if not isinstance(raw, list) or len(raw) != n:
                raise MalformedInput(f"grading: expected a list of {n} block numbers")
            grading = structures.Grading(tuple(_int(v, f"grading[{i}]") for i, v in enumerate(raw)))
        phi = None
        if data.get("phi") is not None:
            raw = data["phi"]
            if not isinstance(raw, list):
                raise MalformedInput("phi: expected a list of permutations")
            perms = []
            for s, p in enumerate(raw):
                if not isinstance(p, list) or len(p) != n:
                    raise MalformedInput(f"phi[{s}]: expected a permutation of length {n}")
                try:
                    perms.append(structures.as_perm([_int(v, f"phi[{s}]") for v in p]))
                except MalformedInput as exc:
                    raise MalformedInput(f"phi[{s}]: {exc}") from None
            p_blocks = grading.p if grading is not None else 1
            if len(perms) != p_blocks:
                raise MalformedInput(f"phi: {len(perms)} permutations for {p_blocks} block(s)")
            phi = tuple(perms)
        return cls(n, circ, bullet, grading, phi)

    @property
    def effective_grading(self) -> structures.Grading:
        return self.grading if self.grading is not None else structures.Grading.trivial(self.n)

    def twist(self) -> isotope.TwistSystem:
        if self.phi is None:
            raise MalformedInput("document has no 'phi'")
        return isotope.TwistSystem(self.phi, self.effective_grading)

    def left(self) -> structures.LeftQuasigroup:
        return structures.validate_left_quasigroup(self.circ)

    def birack(self) -> birack.Birack:
        """The birack of the document; derives bullet when absent (may raise)."""
        if self.bullet is None:
            return birack.derive_birack(self.left())
        return birack.make_birack(self.circ, self.bullet)

    @staticmethod
    def dump(B: birack.Birack, grading: Optional[structures.Grading] = None) -> dict:
        doc = {"n": B.n, "circ": [list(r) for r in B.circ], "bullet": [list(r) for r in B.bullet]}
        if grading is not None:
            doc["grading"] = list(grading.block)
        return doc


def _int(v, where: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise MalformedInput(f"{where}: expected an integer, got {v!r}")
    return v


def _table(rows, n: int, name: str) -> structures.Table:
    if not isinstance(rows, list):
        raise MalformedInput(f"{name}: expected a list of rows")
    for x, row in enumerate(rows):
        if not isinstance(row, list):
            raise MalformedInput(f"{name}[{x}]: expected a list")
        for y, v in enumerate(row):
            _int(v, f"{name}[{x}][{y}]")
    return structures.as_table(rows, n, name)


def load_document(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except UnicodeDecodeError:
        raise MalformedInput(f"{path}: not UTF-8") from None
    return InputDocument.parse(data)


# -- commands ------------------------------------------------------------------

def cmd_check(args) -> dict:
    doc = load_document(args.file)
    Q = doc.left()
    checks: dict = {"left_quasigroup": True}
    checks["nondegenerate"] = structures.is_nondegenerate(Q)
    checks["right_cyclic"] = structures.is_right_cyclic(Q)
    report: dict = {"command": "check", "n": doc.n, "checks": checks}
    try:
        B = doc.birack()
    except MalformedInput:
        raise
    except YBError as exc:
        checks["right_quasigroup"] = None
        report["note"] = f"bullet could not be derived: {exc}"
        return _finish_check(report, args)
    checks["right_quasigroup"] = True
    verdict = birack.verify_birack(B)
    checks["birack"] = verdict.ok
    if not verdict.ok:
        report["birack_failure"] = {"identity": verdict.failure, "at": list(verdict.witness)}
    checks["involutive"] = birack.is_involutive(B)
    checks["lri"] = birack.satisfies_lri(B)
    checks["distributive"] = birack.is_distributive(B)
    checks["two_reductive"] = birack.is_two_reductive(B)
    try:
        S = solution.to_solution(B)
    except NotQuadraticSet:
        checks["quadratic_set"] = False
        report["note"] = "r is not a bijection of X x X"
        return _finish_check(report, args)
    checks["quadratic_set"] = True
    checks["square_free"] = solution.is_square_free(S)
    checks["braided"] = solution.is_braided(S)
    conds = solution.check_l1_r1_lr3(S)
    checks.update(l1=conds.l1, r1=conds.r1, lr3=conds.lr3, l1_r1_lr3=conds.all)
    report["group_order"] = solution.permutation_group_order(S)
    if doc.grading is not None:
        checks["graded"] = birack.is_birack_graded(B, doc.grading)
    if doc.phi is not None:
        verdict = isotope.validate_twist_system(B, doc.twist(), args.strong)
        checks["twist_system"] = verdict.ok
        if not verdict.ok:
            report["twist_failures"] = list(verdict.failures)
    return _finish_check(report, args)


def _finish_check(report: dict, args) -> dict:
    checks = report["checks"]
    wanted = [c for c in REQUIRED_CHECKS if c in checks] + list(args.require or [])
    failed = [c for c in wanted if checks.get(c) is not True]
    report["required"] = wanted
    report["failed"] = failed
    if failed:
        raise Failed(report, "failed: " + ", ".join(failed))
    return report


def _postchecks(B: birack.Birack, T: isotope.TwistSystem) -> dict:
    n = B.n
    return {
        "birack": birack.verify_birack(B).ok,
        "involutive": birack.is_involutive(B),
        "graded": birack.is_birack_graded(B, T.grading),
        "lri": birack.satisfies_lri(B),
        "lri_characterization": all(
            B.bullet[y][x] == B.ldiv[x][y] for x in range(n) for y in range(n)
        ),
    }


def cmd_isotope(args) -> dict:
    doc = load_document(args.file)
    if doc.grading is None or doc.phi is None:
        raise MalformedInput("isotope needs both 'grading' and 'phi'")
    T = doc.twist()
    B = doc.birack()
    report: dict = {"command": "isotope", "level": "strong" if args.strong else "weak"}
    try:
        if args.strong:
            iso = isotope.isotope_birack(B, T)
        else:
            Q = isotope.isotope_quasigroup(B.left, T)
            iso = birack.derive_birack(Q)
    except YBError as exc:
        report["error"] = str(exc)
        if isinstance(exc, HypothesisViolated):
            report["failed_hypotheses"] = exc.failures
        raise Failed(report, str(exc)) from None
    report["document"] = InputDocument.dump(iso, doc.grading)
    report["checks"] = _postchecks(iso, T)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(report["document"], fh)
            fh.write("\n")
    failed = [k for k, v in report["checks"].items() if not v]
    if failed:
        raise Failed(report, "isotope post-checks failed: " + ", ".join(failed))
    return report


def cmd_twist(args) -> dict:
    doc = load_document(args.file)
    T = doc.twist()
    B = doc.birack()
    verdict = isotope.validate_twist_system(B, T, args.strong)
    R = algebra.quadratic_relations(B)
    report = {
        "command": "twist",
        "relations": R.strings(),
        "twisted_relations": algebra.twist_relations(R, T).strings(),
        "twist_system_valid": verdict.ok,
    }
    if not verdict.ok:
        report["twist_failures"] = list(verdict.failures)
        raise Failed(report, "twist system invalid: " + "; ".join(verdict.failures))
    return report


def cmd_hilbert(args) -> dict:
    doc = load_document(args.file)
    B = doc.birack()
    R = algebra.quadratic_relations(B)
    report = {
        "command": "hilbert",
        "relations": R.strings(),
        "hilbert": list(algebra.hilbert_function(R, args.max_degree, args.max_entries)),
        "polynomial": list(algebra.polynomial_hilbert(doc.n, args.max_degree)),
    }
    if doc.phi is not None:
        Rt = algebra.twist_relations(R, doc.twist())
        report["twisted_hilbert"] = list(algebra.hilbert_function(Rt, args.max_degree, args.max_entries))
    return report


def cmd_theorem1(args) -> dict:
    doc = load_document(args.file)
    T = doc.twist()
    B = doc.birack()
    report: dict = {"command": "theorem1"}
    try:
        cert = algebra.verify_theorem1(B, T, hilbert_degree=args.max_degree)
    except HypothesisViolated as exc:
        report["failed_hypotheses"] = exc.failures
        raise Failed(report, str(exc)) from None
    report.update(
        original_relations=cert.original.strings(),
        twisted_relations=cert.twisted.strings(),
        isotope_relations=cert.isotope.strings(),
        elementwise_equal=cert.elementwise_equal,
        span_equal=cert.span_equal,
        hilbert_original=list(cert.hilbert_original),
        hilbert_isotope=list(cert.hilbert_isotope),
        certified=cert.ok,
    )
    if not cert.ok:
        report["diff"] = cert.diff()
        raise Failed(report, "certificate failed")
    return report


def cmd_enumerate(args) -> dict:
    sols = census.enumerate_solutions(
        args.n, up_to_iso=args.up_to_iso, allow_long=args.long, workers=args.workers
    )
    if args.distributive_only:
        sols = [B for B in sols if birack.is_distributive(B)]
    report: dict = {
        "command": "enumerate",
        "n": args.n,
        "up_to_iso": args.up_to_iso,
        "distributive_only": args.distributive_only,
        "count": len(sols),
    }
    if args.tables:
        report["solutions"] = [InputDocument.dump(B) for B in sols]
    if args.with_twists:
        checked, failures = 0, []
        for i, B in enumerate(sols):
            if not birack.satisfies_lri(B):
                continue
            gradings = {structures.Grading.trivial(B.n)}
            lclass = birack.l_equivalence_partition(B)
            if birack.is_birack_graded(B, lclass):
                gradings.add(lclass)
            for g in sorted(gradings, key=lambda g: g.block):
                for T in census.enumerate_twist_systems(B, g, strong=True):
                    checked += 1
                    if not algebra.verify_theorem1(B, T):
                        failures.append({"index": i, "grading": list(g.block), "phi": [list(p) for p in T.phis]})
        report["theorem1"] = {"pairs_checked": checked, "failures": failures}
        if failures:
            raise Failed(report, f"{len(failures)} theorem certificate(s) failed")
    return report


# -- entry point ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_MALFORMED)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ybtwist", description="Biracks, isotopes and Zhang twists of Yang-Baxter algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def level(p):
        grp = p.add_mutually_exclusive_group()
        grp.add_argument("--strong", dest="strong", action="store_true", default=True,
                         help="validate phi as graded automorphisms with L_phi(x) = L_x (default)")
        grp.add_argument("--weak", dest="strong", action="store_false",
                         help="only require commuting degree-preserving bijections")

    p = sub.add_parser("check", help="run every predicate on a document")
    p.add_argument("file")
    p.add_argument("--require", action="append", choices=OPTIONAL_CHECKS,
                   help="also require an optional property (repeatable)")
    level(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("isotope", help="compute the phi-isotope birack")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the isotope document here")
    level(p)
    p.set_defaults(func=cmd_isotope)

    p = sub.add_parser("twist", help="print the Zhang-twisted relation set")
    p.add_argument("file")
    level(p)
    p.set_defaults(func=cmd_twist)

    for name, func, helptext in (
        ("hilbert", cmd_hilbert, "graded dimensions of the YB algebra"),
        ("theorem1", cmd_theorem1, "certify isotope algebra = Zhang twist"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("--max-degree", type=int, default=algebra.DEFAULT_MAX_DEGREE)
        if name == "hilbert":
            p.add_argument("--max-entries", type=int, default=algebra.DEFAULT_MAX_ENTRIES)
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", help="census of involutive solutions")
    p.add_argument("n", type=int)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--distributive-only", action="store_true")
    p.add_argument("--with-twists", action="store_true",
                   help="certify the theorem for every strong twist system")
    p.add_argument("--tables", action="store_true", help="include the tables")
    p.add_argument("--long", action="store_true", help="allow n = 5")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)
    return parser


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except Failed as exc:
        _emit(exc.report)
        print(f"{args.command}: FAIL: {exc.summary}", file=sys.stderr)
        return EXIT_FAIL
    except (MalformedInput, SizeUnsupported) as exc:
        _emit({"command": args.command, "error": type(exc).__name__, "message": str(exc)})
        print(f"{args.command}: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except YBError as exc:
        _emit({"command": args.command, "error": type(exc).__name__, "message": str(exc)})
        print(f"{args.command}: FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(report)
    print(f"{args.command}: ok", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
