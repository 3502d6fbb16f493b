"""Command-line front end.

Poset files::

    # Example: 1<2<3 and 4<5
    n=5
    1<2
    2<3
    4<5

Code files (rows are generator rows, entries canonical integers in [0, q))::

    q=4
    modulus=1 1 1      # optional, leading coefficient first: x^2 + x + 1
    n=3
    k=1
    1 2 3

Either kind of file may instead be the JSON emitted by this tool.  Exit
codes: 0 success (verdicts are data), 2 usage or parse error, 3 a false
verdict under ``--assert`` or a strict-mode matrix refusal, 4 a resource
cap was hit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

from . import config
from .codes import GeneratorMatrix, dual_code, generator, weight_distribution
from .errors import MWPosetError, NotMacWilliamsType, ResourceCapExceeded
from .gf import FieldSpec, field_from_order
from .macwilliams import check_macwilliams_type, pq_matrix, verify_identity
from .poset import (
    Poset,
    automorphisms,
    elements_of,
    enumerate_ideals,
    is_complement_isomorphism,
    is_hierarchical,
    mask_of,
    poset_dual,
    poset_from_covers,
)
from .relations import (
    IdealPartition,
    dual_partition,
    group_closure,
    partition_aut,
    partition_cardinality,
    partition_custom,
    partition_iso,
)

EPILOG = """\
Field elements are canonical integers in [0, q): the base-p digits of an
element are its coefficients in the polynomial basis, lowest degree first.
--modulus lists the defining polynomial's coefficients, leading coefficient
first (e.g. "1 1 1" is x^2 + x + 1); built-in moduli exist for
q in {4, 8, 9, 16, 25, 27}.
"""


class ParseError(MWPosetError):
    pass


# --- file formats ---------------------------------------------------------------

def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_poset(text: str) -> Poset:
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        data = data.get("poset", data)
        return poset_from_covers(int(data["n"]), [tuple(p) for p in data["covers"]])
    n: Optional[int] = None
    pairs = []
    for no, line in _content_lines(text):
        m = re.fullmatch(r"n\s*=\s*(\d+)", line)
        if m:
            n = int(m.group(1))
            continue
        m = re.fullmatch(r"(\d+)\s*<\s*(\d+)", line)
        if m:
            pairs.append((no, int(m.group(1)), int(m.group(2))))
            continue
        raise ParseError(f"line {no}: cannot parse {line!r}")
    if n is None:
        raise ParseError("missing 'n=<int>' line")
    for no, a, b in pairs:
        if not (1 <= a <= n and 1 <= b <= n) or a == b:
            raise ParseError(f"line {no}: bad relation {a}<{b} for n={n}")
    try:
        return poset_from_covers(n, [(a, b) for _, a, b in pairs])
    except MWPosetError as exc:
        raise ParseError(str(exc)) from exc


def _field(q: int, modulus) -> FieldSpec:
    return field_from_order(q, modulus)


def parse_code(text: str) -> GeneratorMatrix:
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        F = _field(int(data["q"]), data.get("modulus"))
        return generator(F, data["rows"], int(data["n"]))
    header = {}
    rows: List[List[int]] = []
    for no, line in _content_lines(text):
        m = re.fullmatch(r"(q|n|k|modulus)\s*=\s*(.*)", line)
        if m:
            header[m.group(1)] = (no, m.group(2).strip())
            continue
        try:
            rows.append([int(t) for t in line.replace(",", " ").split()])
        except ValueError:
            raise ParseError(f"line {no}: cannot parse {line!r}") from None
    for key in ("q", "n"):
        if key not in header:
            raise ParseError(f"missing '{key}=<int>' line")
    try:
        q = int(header["q"][1])
        n = int(header["n"][1])
        k = int(header["k"][1]) if "k" in header else len(rows)
        modulus = [int(t) for t in header["modulus"][1].split()] if "modulus" in header else None
    except ValueError as exc:
        raise ParseError(f"bad header value: {exc}") from None
    if k != len(rows):
        raise ParseError(f"k={k} but {len(rows)} rows given")
    try:
        return generator(_field(q, modulus), rows, n)
    except MWPosetError as exc:
        raise ParseError(str(exc)) from exc


def _parse_ideal_token(tok: str) -> int:
    tok = tok.strip().strip("{}").strip()
    if tok in ("", "empty"):
        return 0
    return mask_of(int(t) for t in tok.replace(",", " ").split())


def parse_partition(text: str, P: Poset) -> IdealPartition:
    """Blocks of ideals: JSON from ``classes --format json`` or one block per line,
    ideals separated by '|' (elements by spaces or commas, '{}' for the empty set)."""
    data = None
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            pass  # a text block may start with '{}'
    if data is not None:
        blocks = [[mask_of(m) for m in c["members"]] for c in data["classes"]]
    else:
        blocks = [
            [_parse_ideal_token(t) for t in line.split("|")] for _, line in _content_lines(text)
        ]
    return partition_custom(P, blocks)


def parse_subgroup(text: str, n: int):
    """Generators, one per line as the 1-based images of 1..n; the generated group is returned."""
    gens = []
    for no, line in _content_lines(text):
        img = [int(t) - 1 for t in line.replace(",", " ").split()]
        if sorted(img) != list(range(n)):
            raise ParseError(f"line {no}: not a permutation of 1..{n}")
        gens.append(tuple(img))
    return group_closure(gens, n)


# --- rendering --------------------------------------------------------------------

def fmt_set(mask: int) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


def poset_json(P: Poset) -> dict:
    return {"n": P.n, "covers": [list(c) for c in P.covers]}


def poset_text(P: Poset) -> str:
    return "\n".join([f"n={P.n}"] + [f"{a}<{b}" for a, b in P.covers]) + "\n"


def code_json(G: GeneratorMatrix) -> dict:
    F = G.field
    return {
        "q": F.q,
        "modulus": list(F.modulus) if F.modulus else None,
        "n": G.n,
        "rows": [list(r) for r in G.rows],
    }


def classes_json(E: IdealPartition) -> list:
    return [
        {
            "index": b,
            "size": len(block),
            "representative": list(elements_of(E.representative(b))),
            "members": [list(elements_of(m)) for m in E.block_masks(b)],
        }
        for b, block in enumerate(E.blocks)
    ]


def _labels(E: IdealPartition) -> List[str]:
    return [fmt_set(E.representative(b)) for b in range(len(E.blocks))]


def _emit(args, data: dict, tsv: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(tsv)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _relation(args, P: Poset) -> IdealPartition:
    rel = args.relation
    if args.partition:
        return parse_partition(_read(args.partition), P)
    if rel == "cardinality":
        return partition_cardinality(P)
    if rel == "iso":
        return partition_iso(P)
    if rel == "aut":
        H = parse_subgroup(_read(args.subgroup), P.n) if args.subgroup else automorphisms(P)
        return partition_aut(P, H)
    raise ParseError(f"unknown relation {rel!r}")


def _cmd_field(args) -> FieldSpec:
    modulus = [int(t) for t in args.modulus.split()] if args.modulus else None
    return _field(args.q, modulus)


# --- commands -------------------------------------------------------------------

def cmd_poset(args) -> int:
    P = parse_poset(_read(args.poset))
    if args.dual:
        P = poset_dual(P)
    _emit(args, {"poset": poset_json(P)}, poset_text(P))
    return 0


def cmd_ideals(args) -> int:
    P = parse_poset(_read(args.poset))
    ideals = enumerate_ideals(P)
    tsv = "".join(f"{i}\t{bin(I).count('1')}\t{fmt_set(I)}\n" for i, I in enumerate(ideals))
    _emit(args, {"poset": poset_json(P), "ideals": [list(elements_of(I)) for I in ideals]}, tsv)
    return 0


def cmd_classes(args) -> int:
    P = parse_poset(_read(args.poset))
    E = _relation(args, P)
    if args.dual:
        E = dual_partition(E)
    tsv = "".join(
        f"{c['index']}\t{c['size']}\t{fmt_set(mask_of(c['representative']))}\t"
        + " ".join(fmt_set(mask_of(m)) for m in c["members"])
        + "\n"
        for c in classes_json(E)
    )
    data = {
        "poset": poset_json(E.poset),
        "relation": E.kind,
        "dual": bool(args.dual),
        "classes": classes_json(E),
    }
    _emit(args, data, tsv)
    return 0


def _matrix_tsv(row_labels, col_labels, entries) -> str:
    lines = ["\t" + "\t".join(col_labels)]
    for lab, row in zip(row_labels, entries):
        lines.append(lab + "\t" + "\t".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def cmd_matrix(args) -> int:
    P = parse_poset(_read(args.poset))
    F = _cmd_field(args)
    E = _relation(args, P)
    try:
        M = pq_matrix(P, F, E, args.which, strict=not args.lenient)
    except NotMacWilliamsType as exc:
        w = exc.verdict.witness
        sys.stderr.write(f"not of MacWilliams type; witness: {json.dumps(w.as_dict())}\n")
        return 3
    rows, cols = _labels(M.row_partition), _labels(M.col_partition)
    data = {
        "which": M.which,
        "q": F.q,
        "relation": E.kind,
        "rows": [list(elements_of(M.row_partition.representative(b))) for b in range(len(rows))],
        "cols": [list(elements_of(M.col_partition.representative(b))) for b in range(len(cols))],
        "entries": [list(r) for r in M.entries],
        "representative_dependent": M.representative_dependent,
    }
    tsv = _matrix_tsv(rows, cols, M.entries)
    if M.representative_dependent:
        tsv += "# warning: entries depend on the class representative\n"
    _emit(args, data, tsv)
    return 0


def cmd_weights(args) -> int:
    P = parse_poset(_read(args.poset))
    G = parse_code(_read(args.code))
    E = _relation(args, P)
    if args.dual:
        E = dual_partition(E)
        P, G = E.poset, dual_code(G)
    W = weight_distribution(P, G.field, G, E)
    labels = _labels(E)
    tsv = "".join(f"{lab}\t{c}\n" for lab, c in zip(labels, W.counts))
    data = {
        "relation": E.kind,
        "dual": bool(args.dual),
        "classes": [list(elements_of(E.representative(b))) for b in range(len(labels))],
        "counts": list(W.counts),
    }
    _emit(args, data, tsv)
    return 0


def cmd_verify(args) -> int:
    P = parse_poset(_read(args.poset))
    G = parse_code(_read(args.code))
    E = _relation(args, P)
    F = G.field
    try:
        rep = verify_identity(P, F, G, E, strict=not args.lenient)
    except NotMacWilliamsType as exc:
        sys.stderr.write(f"not of MacWilliams type; witness: {json.dumps(exc.verdict.witness.as_dict())}\n")
        return 3
    oracle_ok = None
    if args.oracle:
        from .oracle import dual_dist_brute

        oracle_ok = dual_dist_brute(P, F, G, E) == rep.dual_distribution
    passed = rep.passed and oracle_ok is not False

    def fmt(v):
        return [str(x) if not isinstance(x, int) else x for x in v]

    data = {
        "relation": E.kind,
        "code_size": rep.code_size,
        "dual_size": rep.dual_size,
        "W_code": list(rep.code_distribution),
        "W_dual": list(rep.dual_distribution),
        "W_dual_from_transform": fmt(rep.dual_from_code),
        "W_code_from_transform": fmt(rep.code_from_dual),
        "dual_identity": rep.dual_ok,
        "code_identity": rep.code_ok,
        "oracle": oracle_ok,
        "result": "PASS" if passed else "FAIL",
    }
    tsv = (
        f"W(C)\t{' '.join(map(str, rep.code_distribution))}\n"
        f"W(C_dual)\t{' '.join(map(str, rep.dual_distribution))}\n"
        f"W(C).P^T/|C|\t{' '.join(map(str, rep.dual_from_code))}\n"
        f"W(C_dual).Q^T/|C_dual|\t{' '.join(map(str, rep.code_from_dual))}\n"
        + (f"oracle\t{'agree' if oracle_ok else 'DISAGREE'}\n" if oracle_ok is not None else "")
        + f"{data['result']}\n"
    )
    _emit(args, data, tsv)
    return 3 if args.assert_ and not passed else 0


def cmd_check_type(args) -> int:
    P = parse_poset(_read(args.poset))
    F = _cmd_field(args)
    E = _relation(args, P)
    v = check_macwilliams_type(P, F, E)
    data = {
        "relation": E.kind,
        "q": F.q,
        "macwilliams_type": v.holds,
        "witness": v.witness.as_dict() if v.witness else None,
    }
    tsv = f"macwilliams_type\t{str(v.holds).lower()}\n"
    if v.witness:
        w = v.witness
        tsv += (
            f"witness\tcondition={w.condition} class={w.cls} "
            f"{fmt_set(w.member1)}:{w.sum1} {fmt_set(w.member2)}:{w.sum2} other={w.other}\n"
        )
    if args.oracle:
        from .oracle import definition_check

        d = definition_check(P, F, E)
        data["definition_check"] = d.holds
        tsv += f"definition_check\t{str(d.holds).lower()}\n"
    _emit(args, data, tsv)
    return 3 if args.assert_ and not v.holds else 0


def cmd_classify(args) -> int:
    P = parse_poset(_read(args.poset))
    hier = is_hierarchical(P)
    ci = is_complement_isomorphism(P)
    aut = len(automorphisms(P))
    data = {
        "hierarchical": hier,
        "complement_isomorphism": ci.holds,
        "complement_witness": [list(elements_of(m)) for m in ci.witness] if ci.witness else None,
        "aut_order": aut,
    }
    tsv = (
        f"hierarchical\t{str(hier).lower()}\n"
        f"complement_isomorphism\t{str(ci.holds).lower()}\n"
        f"aut_order\t{aut}\n"
    )
    if ci.witness:
        tsv += f"complement_witness\t{fmt_set(ci.witness[0])}\t{fmt_set(ci.witness[1])}\n"
    _emit(args, data, tsv)
    return 3 if args.assert_ and not (hier or ci.holds) else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--cap-ideals", type=int, default=None)
    common.add_argument("--cap-codewords", type=int, default=None)
    common.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 3 when the verdict is false")
    common.add_argument("--oracle", action="store_true",
                        help="cross-check against the brute-force reference (small inputs only)")

    rel = argparse.ArgumentParser(add_help=False)
    rel.add_argument("--relation", choices=("cardinality", "aut", "iso"), default="cardinality")
    rel.add_argument("--subgroup", help="file of generator permutations (for --relation aut)")
    rel.add_argument("--partition", help="file with a custom partition of the ideals")

    fld = argparse.ArgumentParser(add_help=False)
    fld.add_argument("--q", type=int, default=2)
    fld.add_argument("--modulus", help="coefficients, leading first, e.g. '1 1 1'")

    parser = argparse.ArgumentParser(
        prog="mwposet",
        description="MacWilliams-type relations for linear codes under poset metrics.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", parents=[common], help="print the normalized poset")
    p.add_argument("poset")
    p.add_argument("--dual", action="store_true")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("ideals", parents=[common], help="list order ideals")
    p.add_argument("poset")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("classes", parents=[common, rel], help="list equivalence classes")
    p.add_argument("poset")
    p.add_argument("--dual", action="store_true", help="show the dual classes on the dual poset")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("matrix", parents=[common, rel, fld], help="P- or Q-matrix")
    p.add_argument("poset")
    p.add_argument("--which", choices=("p", "q"), default="q")
    p.add_argument("--lenient", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("weights", parents=[common, rel], help="E-weight distribution of a code")
    p.add_argument("poset")
    p.add_argument("code")
    p.add_argument("--dual", action="store_true", help="distribution of the dual code under E*")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", parents=[common, rel], help="check both MacWilliams transforms")
    p.add_argument("poset")
    p.add_argument("code")
    p.add_argument("--lenient", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-type", parents=[common, rel, fld], help="MacWilliams-type verdict")
    p.add_argument("poset")
    p.set_defaults(func=cmd_check_type)

    p = sub.add_parser("classify", parents=[common], help="structural classifiers")
    p.add_argument("poset")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {}
    if args.cap_ideals is not None:
        overrides["ideals"] = args.cap_ideals
    if args.cap_codewords is not None:
        overrides["codewords"] = args.cap_codewords
    try:
        with config.limits(**overrides):
            return args.func(args)
    except ResourceCapExceeded as exc:
        sys.stderr.write(f"resource cap exceeded: {exc}\n")
        return 4
    except (MWPosetError, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
