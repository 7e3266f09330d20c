"""Command-line interface.

Exit codes: 0 success, 1 parse/validation error, 2 size-limit error,
3 precondition failure, 4 verification mismatch (with --verify).
All output is deterministic: sets print in label order, families in
canonical order, and nothing time- or platform-dependent is emitted.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import oracle
from .core import (
    SetFamily,
    SizeLimitError,
    SubsetMask,
    ValidationError,
    format_set,
)
from .classify import classify as run_classify
from .constructions import (
    covering_as_transversal,
    covering_matroid,
    covering_matroid_slice,
    k_rank_matroid,
    naive_covering_family,
    partition_matroid,
    transversal_as_covering,
    transversal_matroid,
)
from .io import (
    InputDocument,
    ParseError,
    parse_file,
    render_covering_document,
    render_family_document,
)
from .matroid import Matroid, check_independence_axioms
from .rough import (
    ApproximationSpace,
    MatroidalSpace,
    approximation_findings,
    lower_approx,
    matroidal_lower,
    matroidal_neighborhood,
    matroidal_upper,
    neighborhood,
    upper_approx,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SIZE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4


class PreconditionError(RuntimeError):
    """A command was run on input that fails its preconditions."""


class VerifyMismatch(RuntimeError):
    """The oracle cross-check found a discrepancy."""


def _parse_set(doc: InputDocument, spec: str) -> SubsetMask:
    labels = [tok for tok in spec.replace(",", " ").split() if tok]
    return doc.ground.subset(labels)


def _document_matroid(doc: InputDocument) -> Matroid:
    if doc.kind == "covering":
        return covering_matroid(doc.covering())
    if doc.kind == "partition":
        return partition_matroid(doc.partition())
    return transversal_matroid(doc.family())


def _document_family(doc: InputDocument) -> SetFamily:
    """The explicit independent family to feed the axiom checker."""
    if doc.kind in ("covering", "partition"):
        return naive_covering_family(doc.covering())
    return transversal_matroid(doc.family()).independent_family()


def _print_family(fam: SetFamily, out) -> None:
    for member in fam:
        print(format_set(member), file=out)


def _verify_independents(doc: InputDocument, fam: SetFamily) -> str:
    if doc.kind in ("covering", "partition"):
        cov = doc.covering()
        slices = [
            k_rank_matroid(cov.ground, b, k)
            for b, k in zip(cov.blocks, cov.capacities)
        ]
        for bits in range(1 << doc.ground.n):
            x = doc.ground.mask(bits)
            if oracle.bf_union_independent(slices, x) != fam.contains_bits(bits):
                raise VerifyMismatch(f"independence mismatch at X={format_set(x)}")
    else:
        f = doc.family()
        for bits in range(1 << doc.ground.n):
            x = doc.ground.mask(bits)
            if oracle.bf_matching(f, x) != fam.contains_bits(bits):
                raise VerifyMismatch(f"transversal mismatch at T={format_set(x)}")
    return f"verify: OK ({1 << doc.ground.n} subsets)"


def cmd_axioms(doc: InputDocument, args, out) -> None:
    cert = check_independence_axioms(_document_family(doc))
    print(str(cert), file=out)


def cmd_independents(doc: InputDocument, args, out) -> None:
    fam = _document_matroid(doc).independent_family()
    _print_family(fam, out)
    if args.verify:
        print(_verify_independents(doc, fam), file=out)


def cmd_circuits(doc: InputDocument, args, out) -> None:
    m = _document_matroid(doc)
    _print_family(m.circuits(), out)
    if args.verify:
        print(_verify_independents(doc, m.independent_family()), file=out)


def cmd_bases(doc: InputDocument, args, out) -> None:
    m = _document_matroid(doc)
    _print_family(m.bases(), out)
    if args.verify:
        print(_verify_independents(doc, m.independent_family()), file=out)


def cmd_rank(doc: InputDocument, args, out) -> None:
    m = _document_matroid(doc)
    x = _parse_set(doc, args.set)
    r = m.rank(x)
    print(f"rank({format_set(x)}) = {r}", file=out)
    if args.verify:
        if oracle.bf_rank(m, x) != r:
            raise VerifyMismatch(f"rank mismatch at X={format_set(x)}")
        print("verify: OK", file=out)


def cmd_closure(doc: InputDocument, args, out) -> None:
    m = _document_matroid(doc)
    x = _parse_set(doc, args.set)
    cl = m.closure(x)
    print(f"closure({format_set(x)}) = {format_set(cl)}", file=out)
    if args.verify:
        r = oracle.bf_rank(m, x)
        bf_cl = 0
        for i in range(doc.ground.n):
            if oracle.bf_rank(m, doc.ground.mask(x.bits | (1 << i))) == r:
                bf_cl |= 1 << i
        if bf_cl != cl.bits:
            raise VerifyMismatch(f"closure mismatch at X={format_set(x)}")
        print("verify: OK", file=out)


def cmd_dual(doc: InputDocument, args, out) -> None:
    m = _document_matroid(doc)
    bases = m.dual().bases()
    _print_family(bases, out)
    if args.verify:
        from .core import family_max

        bf = family_max(oracle.bf_dual_family(m))
        if bf != bases:
            raise VerifyMismatch("dual bases mismatch against base-complement family")
        print("verify: OK", file=out)


def cmd_neighborhood(doc: InputDocument, args, out) -> None:
    cov = doc.covering()
    space = ApproximationSpace(doc.ground, cov.block_family())
    n = neighborhood(space, args.element)
    print(f"N({args.element}) = {format_set(n)}", file=out)
    if args.matroidal:
        if any(k < 1 for k in cov.capacities):
            raise PreconditionError("matroidal operators require all capacities ≥ 1")
        ms = MatroidalSpace(cov)
        mn = matroidal_neighborhood(ms, args.element)
        verdict = "AGREE" if mn.bits == n.bits else "DISAGREE"
        print(f"matroidal N({args.element}) = {format_set(mn)} {verdict}", file=out)
        if verdict == "DISAGREE":
            raise VerifyMismatch(f"matroidal neighborhood mismatch at x={args.element}")


def cmd_approx(doc: InputDocument, args, out) -> None:
    cov = doc.covering()
    space = ApproximationSpace(doc.ground, cov.block_family())
    x = _parse_set(doc, args.set)
    sl = lower_approx(space, x)
    sh = upper_approx(space, x)
    if not args.matroidal:
        print(f"SL={format_set(sl)} SH={format_set(sh)}", file=out)
        return
    if any(k < 1 for k in cov.capacities):
        raise PreconditionError("matroidal operators require all capacities ≥ 1")
    ms = MatroidalSpace(cov)
    findings = approximation_findings(ms, x, via_covering=args.verify)
    verdict = "AGREE" if not findings else "DISAGREE"
    print(f"N/A for sets; SL={format_set(sl)} SH={format_set(sh)} {verdict}", file=out)
    for finding in findings:
        print(f"finding: {finding}", file=out)
    if findings:
        raise VerifyMismatch("matroidal approximation operators disagree; see findings")


def cmd_classify(doc: InputDocument, args, out) -> None:
    report = run_classify(_document_matroid(doc))
    print(f"matroid: {str(report.is_matroid).lower()}", file=out)
    print(f"2-circuit: {str(report.is_2_circuit).lower()}", file=out)
    pc = str(report.is_partition_circuit).lower()
    if report.partition_circuit_witness is not None:
        blocks = " ".join(
            format_set(b) for b in report.partition_circuit_witness.blocks
        )
        pc += f" (witness: {blocks})"
    print(f"partition-circuit: {pc}", file=out)
    print(f"double-circuit: {str(report.is_double_circuit).lower()}", file=out)
    print(
        f"identically-self-dual: {str(report.is_identically_self_dual).lower()}",
        file=out,
    )
    print(
        "circuit sizes: [" + ", ".join(map(str, report.circuit_size_multiset)) + "]",
        file=out,
    )


def cmd_convert(doc: InputDocument, args, out) -> None:
    if doc.kind == "indexed_family":
        cov = transversal_as_covering(doc.family())
        out.write(render_covering_document(cov))
    else:
        fam = covering_as_transversal(doc.covering())
        if fam is None:
            raise PreconditionError(
                "inapplicable: the covering ↔ transversal conversion requires "
                "all capacities equal to 1"
            )
        out.write(render_family_document(fam))


COMMANDS = {
    "axioms": cmd_axioms,
    "independents": cmd_independents,
    "circuits": cmd_circuits,
    "bases": cmd_bases,
    "rank": cmd_rank,
    "closure": cmd_closure,
    "dual": cmd_dual,
    "approx": cmd_approx,
    "neighborhood": cmd_neighborhood,
    "classify": cmd_classify,
    "convert": cmd_convert,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covmatroid",
        description="Covering-matroid constructions, rough approximations and "
        "classification over small finite universes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, set_arg=False, element_arg=False,
            matroidal=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="input document (format: 1)")
        if set_arg:
            p.add_argument("--set", required=True,
                           help="comma-separated element labels; \"\" for ∅")
        if element_arg:
            p.add_argument("--element", required=True, help="element label")
        if matroidal:
            p.add_argument("--matroidal", action="store_true",
                           help="also evaluate the matroidal forms and "
                           "report AGREE/DISAGREE")
        p.add_argument("--verify", action="store_true",
                       help="cross-check against the brute-force oracles")
        return p

    add("axioms", "check the independence axioms on the naive family")
    add("independents", "list the independent sets of the induced matroid")
    add("circuits", "list the circuits of the induced matroid")
    add("bases", "list the bases of the induced matroid")
    add("rank", "rank of a subset", set_arg=True)
    add("closure", "closure of a subset", set_arg=True)
    add("dual", "list the bases of the dual matroid")
    add("approx", "lower/upper approximations of a subset", set_arg=True,
        matroidal=True)
    add("neighborhood", "neighborhood of an element", element_arg=True,
        matroidal=True)
    add("classify", "run all taxonomy predicates")
    add("convert", "convert between covering and transversal presentations")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = parse_file(args.input)
        COMMANDS[args.command](doc, args, out)
    except (ParseError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerifyMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
