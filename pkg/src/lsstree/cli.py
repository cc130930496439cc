"""Command-line front end.

Verbs: label, basis, verify, initial, complex, hilbert, dim, report.
Exit codes: 0 success, 1 input/validation failure, 2 verification
failure, 3 enumeration-cap refusal.  Output is deterministic: identical
input and flags give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .krull import DEFAULT_SUBSET_CAP, dim_report
from .lssbasis import (
    basis_to_json,
    corollary_basis,
    edge_generators,
    theorem_basis,
    verify_groebner,
)
from .polyengine import monomial_str, reduce_basis
from .srcomplex import (
    DEFAULT_FACE_CAP,
    EnumerationCapError,
    f_vector,
    hilbert_series,
    minimal_initial_gens,
    series_expand,
)
from .treekit import (
    AscendingLabelingError,
    TreeInputError,
    ascending_labeling,
    ascending_violation,
    is_ascending,
    parse_tree,
    random_tree,
    relabel,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_CAP = 3

REPORT_VERIFY_CAP = 8


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems with exit code 1."""

    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_common(sub, cap=False, relabel_flag=True):
    sub.add_argument("tree", nargs="?", default="-", help="tree file or - for stdin")
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--text", action="store_true", help="emit text (default)")
    if cap:
        sub.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_FACE_CAP,
            help=f"face-enumeration cap override (default {DEFAULT_FACE_CAP})",
        )
    if relabel_flag:
        sub.add_argument(
            "--no-relabel",
            action="store_true",
            help="reject non-ascending labelings instead of relabeling",
        )


def build_parser():
    parser = _Parser(prog="lss", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="verb", required=True)

    _add_common(subs.add_parser("label", help="ascending relabeling"), relabel_flag=False)
    b = subs.add_parser("basis", help="explicit Groebner basis")
    _add_common(b)
    b.add_argument("--full", action="store_true", help="full any-labeling basis")
    v = subs.add_parser("verify", help="verify the basis three ways")
    _add_common(v)
    v.add_argument("--full", action="store_true", help="verify the any-labeling basis")
    _add_common(subs.add_parser("initial", help="minimal initial-ideal generators"))
    _add_common(subs.add_parser("complex", help="f-vector and graded face counts"), cap=True)
    h = subs.add_parser("hilbert", help="Hilbert series")
    _add_common(h, cap=True)
    h.add_argument("--expand", type=int, metavar="K", help="also expand to degree K")
    h.add_argument("--normalize", action="store_true", help="cancel common (1-t) factors")
    d = subs.add_parser("dim", help="Krull dimension, three routes")
    _add_common(d, cap=True, relabel_flag=False)
    r = subs.add_parser("report", help="everything above, bundled")
    _add_common(r, cap=True)
    r.add_argument("--expand", type=int, metavar="K", help="Hilbert expansion degree")
    r.add_argument("--random", type=int, metavar="N", help="report on a seeded random tree with N vertices")
    r.add_argument("--seed", type=int, default=0, help="seed for --random")
    return parser


def _load_tree(args):
    if getattr(args, "random", None) is not None:
        return random_tree(args.random, random.Random(args.seed))
    if args.tree == "-":
        return parse_tree(sys.stdin.read())
    with open(args.tree, "rb") as fh:
        return parse_tree(fh.read())


def _ascending_view(tree, args):
    """Return (ascending tree, permutation or None); honor --no-relabel."""
    violation = ascending_violation(tree)
    if violation is None:
        return tree, None
    if getattr(args, "no_relabel", False):
        raise AscendingLabelingError(violation)
    perm = ascending_labeling(tree)
    return relabel(tree, perm), perm


def _label_payload(tree):
    perm = ascending_labeling(tree)
    relabeled = relabel(tree, perm)
    return {
        "n": tree.n,
        "was_ascending": is_ascending(tree),
        "permutation": list(perm),
        "relabeled_edges": [list(e) for e in relabeled.edges],
    }


def _basis_payload(tree, args):
    if getattr(args, "full", False):
        elements = theorem_basis(tree)
        perm = None
    else:
        tree, perm = _ascending_view(tree, args)
        elements = corollary_basis(tree)
    payload = basis_to_json(elements)
    return payload, elements, perm


def _verify_payload(tree, args):
    if getattr(args, "full", False):
        candidate = theorem_basis(tree)
        gens = edge_generators(tree)
    else:
        tree, _ = _ascending_view(tree, args)
        candidate = corollary_basis(tree)
        gens = edge_generators(tree)
    return verify_groebner(candidate, gens)


def _dim_payload(tree, cap):
    return dim_report(tree, subset_cap=DEFAULT_SUBSET_CAP, face_cap=cap)


def _emit(lines):
    sys.stdout.write("\n".join(lines) + "\n")


def _emit_json(payload):
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _run_label(tree, args):
    payload = _label_payload(tree)
    if args.json:
        _emit_json(payload)
    else:
        lines = [f"n: {payload['n']}", f"was_ascending: {payload['was_ascending']}"]
        lines += [
            f"vertex {v} -> {new}" for v, new in enumerate(payload["permutation"], start=1)
        ]
        lines.append(
            "relabeled edges: " + " ".join(f"{u}-{v}" for u, v in payload["relabeled_edges"])
        )
        _emit(lines)
    return EXIT_OK


def _run_basis(tree, args):
    payload, elements, perm = _basis_payload(tree, args)
    if args.json:
        doc = {"basis": payload}
        if perm is not None:
            doc["relabeling"] = list(perm)
        _emit_json(doc)
    else:
        lines = []
        if perm is not None:
            lines.append("relabeled to ascending: " + " ".join(map(str, perm)))
        lines += [
            f"{e['provenance']['kind']} {e['provenance']['path']}"
            + (
                f" O={e['provenance']['odd_subset']}"
                if e["provenance"]["kind"] == "even_path" and e["provenance"]["odd_subset"]
                else ""
            )
            + f": {e['polynomial']}"
            for e in payload
        ]
        reduced = reduce_basis([el.polynomial for el in elements])
        lines.append(f"elements: {len(elements)} (reduced basis size: {len(reduced)})")
        _emit(lines)
    return EXIT_OK


def _run_verify(tree, args):
    report = _verify_payload(tree, args)
    if args.json:
        _emit_json(report.to_json())
    else:
        lines = []
        for check in (report.membership, report.generation, report.spairs):
            status = "ok" if check.passed else "FAILED"
            lines.append(f"{check.name}: {check.total} checked, {status}")
            for desc, rem in check.failures:
                lines.append(f"  {desc}: remainder {rem}")
        lines.append("verified" if report.passed else "verification FAILED")
        _emit(lines)
    return EXIT_OK if report.passed else EXIT_VERIFY


def _run_initial(tree, args):
    tree, perm = _ascending_view(tree, args)
    gens = minimal_initial_gens(tree)
    rendered = [monomial_str(m, tree.n) for m in gens]
    if args.json:
        doc = {"initial_generators": rendered}
        if perm is not None:
            doc["relabeling"] = list(perm)
        _emit_json(doc)
    else:
        lines = []
        if perm is not None:
            lines.append("relabeled to ascending: " + " ".join(map(str, perm)))
        lines += rendered
        _emit(lines)
    return EXIT_OK


def _run_complex(tree, args):
    tree, perm = _ascending_view(tree, args)
    fv = f_vector(tree, cap=args.cap)
    if args.json:
        doc = fv.to_json()
        if perm is not None:
            doc["relabeling"] = list(perm)
        _emit_json(doc)
    else:
        lines = []
        if perm is not None:
            lines.append("relabeled to ascending: " + " ".join(map(str, perm)))
        lines.append("f-vector (f_-1..f_d-1): " + " ".join(map(str, fv.counts)))
        lines.append(
            "graded counts: "
            + " ".join(f"size {i}: {c}" for i, c in enumerate(fv.counts))
        )
        lines.append(f"dim complex: {fv.dim}")
        _emit(lines)
    return EXIT_OK


def _run_hilbert(tree, args):
    tree, perm = _ascending_view(tree, args)
    series = hilbert_series(tree, cap=args.cap)
    if args.normalize:
        series = series.normalize()
    doc = series.to_json()
    if args.expand is not None:
        doc["expansion"] = series_expand(series, args.expand)
    if args.json:
        if perm is not None:
            doc["relabeling"] = list(perm)
        _emit_json(doc)
    else:
        lines = []
        if perm is not None:
            lines.append("relabeled to ascending: " + " ".join(map(str, perm)))
        lines.append("numerator coefficients (ascending): " + " ".join(map(str, doc["numerator"])))
        lines.append(f"denominator: (1-t)^{doc['denominator_power']}")
        lines.append(f"normalized: {doc['normalized']}")
        if args.expand is not None:
            lines.append("expansion: " + " ".join(map(str, doc["expansion"])))
        _emit(lines)
    return EXIT_OK


def _run_dim(tree, args):
    report = _dim_payload(tree, args.cap)
    if args.json:
        _emit_json(report.to_json())
    else:
        doc = report.to_json()
        cx = doc["routes"]["complex"]
        lines = [
            f"dim: {doc['dim']}",
            f"route complex: {'skipped (over cap)' if cx is None else cx}",
            f"route subset_max: {doc['routes']['subset_max']}",
            f"route pendant: {doc['routes']['pendant']}",
            f"bounds: [{doc['bounds'][0]}, {doc['bounds'][1]}]",
            "witness: " + " ".join(map(str, doc["witness"])),
            f"agree: {doc['agree']}",
        ]
        _emit(lines)
    return EXIT_OK


def _run_report(tree, args):
    skipped = []
    ascending, perm = _ascending_view(tree, args)
    doc = {
        "tree": tree.to_json(),
        "label": _label_payload(tree),
        "basis": basis_to_json(corollary_basis(ascending)),
        "initial": [monomial_str(m, ascending.n) for m in minimal_initial_gens(ascending)],
    }
    verify_ok = True
    if tree.n <= REPORT_VERIFY_CAP:
        report = verify_groebner(corollary_basis(ascending), edge_generators(ascending))
        doc["verify"] = report.to_json()
        verify_ok = report.passed
    else:
        doc["verify"] = None
        skipped.append(f"verify (n > {REPORT_VERIFY_CAP})")
    if ascending.n <= args.cap:
        fv = f_vector(ascending, cap=args.cap)
        series = hilbert_series(ascending, cap=args.cap)
        doc["complex"] = fv.to_json()
        doc["hilbert"] = series.to_json()
        if args.expand is not None:
            doc["hilbert"]["expansion"] = series_expand(series, args.expand)
    else:
        doc["complex"] = None
        doc["hilbert"] = None
        skipped.append(f"complex (n > {args.cap})")
    doc["dim"] = _dim_payload(tree, args.cap).to_json()
    doc["skipped"] = skipped
    if args.json:
        _emit_json(doc)
    else:
        lines = [f"tree: n={tree.n}, edges " + " ".join(f"{u}-{v}" for u, v in tree.edges)]
        if perm is not None:
            lines.append("relabeled to ascending: " + " ".join(map(str, perm)))
        lines.append(f"basis elements: {len(doc['basis'])}")
        lines.append("initial generators: " + ", ".join(doc["initial"]))
        if doc["verify"] is None:
            lines.append("verify: skipped")
        else:
            lines.append("verify: " + ("passed" if doc["verify"]["passed"] else "FAILED"))
        if doc["complex"] is not None:
            lines.append("f-vector: " + " ".join(map(str, doc["complex"]["f"])))
            lines.append(
                "hilbert numerator: "
                + " ".join(map(str, doc["hilbert"]["numerator"]))
                + f" over (1-t)^{doc['hilbert']['denominator_power']}"
            )
        else:
            lines.append("complex/hilbert: skipped")
        dim_doc = doc["dim"]
        lines.append(
            f"dim: {dim_doc['dim']} (routes: complex {dim_doc['routes']['complex']}, "
            f"subset {dim_doc['routes']['subset_max']}, pendant {dim_doc['routes']['pendant']}; "
            f"agree {dim_doc['agree']})"
        )
        if skipped:
            lines.append("skipped: " + "; ".join(skipped))
        _emit(lines)
    return EXIT_OK if verify_ok else EXIT_VERIFY


_RUNNERS = {
    "label": _run_label,
    "basis": _run_basis,
    "verify": _run_verify,
    "initial": _run_initial,
    "complex": _run_complex,
    "hilbert": _run_hilbert,
    "dim": _run_dim,
    "report": _run_report,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        tree = _load_tree(args)
        return _RUNNERS[args.verb](tree, args)
    except (TreeInputError, AscendingLabelingError, OSError, ValueError) as exc:
        sys.stderr.write(f"lss: error: {exc}\n")
        return EXIT_INPUT
    except EnumerationCapError as exc:
        sys.stderr.write(f"lss: cap exceeded: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
