"""Command-line front end.

Words are comma-separated, 1-based generator indices ("2,1,3,2"); "e" or ""
is the identity.  Exit status: 0 on success, 2 when a verification fails,
1 on bad input.  Data goes to stdout and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .bimodule_lab import (
    SplitFailed,
    cyclic_generation_check,
    default_vars,
    generation_profile,
    graded_left_rank,
    hom_basis,
    labels,
    split_BsBs,
)
from .categorify import InvalidTarget, bs_class, polo_search
from .category_o import proj_class, proj_matrix_csv, simple_class, simple_matrix_csv
from .coxeter import (
    DEFAULT_MAX_ELEMENTS,
    CoxeterMatrix,
    GroupTooLarge,
    InvalidMatrix,
    build_system,
    coxeter_matrix,
    format_word,
    length_gen_poly,
    longest_element,
    parse_word,
)
from .geomrep import (
    InfiniteBond,
    build_form,
    faithfulness_check,
    identity,
    mat_mul,
    reflection_matrices,
    verify_relations,
)
from .hecke import CONVENTIONS, build_kl_table, default_threads, inversion_defect, pairing
from .laurent import LaurentPoly


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), default=_json_default)


def _json_default(obj):
    if isinstance(obj, LaurentPoly):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _system(args):
    if args.matrix:
        cm = CoxeterMatrix.load(args.matrix)
    else:
        cm = coxeter_matrix(args.type)
    return build_system(cm, args.max_elements)


def _element(sys_, text: str) -> int:
    word = parse_word(text)
    for s in word:
        if not 0 <= s < sys_.rank:
            raise UsageError(f"generator {s + 1} out of range for rank {sys_.rank}")
    return sys_.element(word)


def _table(sys_, args):
    return build_kl_table(sys_, threads=args.threads)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(args, data: dict, text: str | None = None, csv_rows=None):
    if args.format == "json":
        print(_dumps(data))
    elif args.format == "csv":
        rows = csv_rows if csv_rows is not None else [[k, _cell(v)] for k, v in data.items()]
        sys.stdout.write(_csv(rows))
    else:
        print(text if text is not None else "\n".join(f"{k}: {_cell(v)}" for k, v in data.items()))


def _cell(v):
    if isinstance(v, (dict, list)):
        return _dumps(v)
    return str(v)


def _verdict(data: dict) -> int:
    """Verification commands always print a JSON verdict."""
    print(_dumps(data))
    return 0 if data["ok"] else 2


def cmd_coxeter_info(args) -> int:
    W = _system(args)
    w0 = longest_element(W)
    data = {
        "type": W.name,
        "rank": W.rank,
        "size": W.size,
        "longest_length": W.lengths[w0],
        "longest_word": format_word(W.words[w0]),
        "length_gen_poly": str(length_gen_poly(W)).replace("v", "q"),
    }
    _emit(args, data)
    return 0


def cmd_kl_table(args) -> int:
    table = _table(_system(args), args)
    if args.format == "json":
        print(table.to_json())
    elif args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        for row in table.rows():
            poly = LaurentPoly.from_json(row["poly"])
            print(f"{row['y_word']}\t{row['x_word']}\t{poly}\t{row['mu']}")
    return 0


def cmd_kl_poly(args) -> int:
    W = _system(args)
    y, x = _element(W, args.y), _element(W, args.x)
    poly = _table(W, args).poly(y, x)
    if args.format == "csv":
        sys.stdout.write(_csv([["y_word", "x_word", "poly_json"], [args.y, args.x, poly.dumps()]]))
    else:
        print(poly.dumps())
    return 0


def cmd_mu(args) -> int:
    W = _system(args)
    y, x = _element(W, args.y), _element(W, args.x)
    value = _table(W, args).mu(y, x)
    _emit(args, {"y": args.y, "x": args.x, "mu": value}, text=str(value))
    return 0


def cmd_bs_decompose(args) -> int:
    W = _system(args)
    word = parse_word(args.word)
    _element(W, args.word)
    _table(W, args)
    cls = bs_class(W, word)
    rows = [["w", "shift", "mult"]] + [[d["w"], d["shift"], d["mult"]] for d in cls.summands()]
    _emit(args, cls.to_json(word), text=str(cls), csv_rows=rows)
    return 0


def cmd_hom_rank(args) -> int:
    W = _system(args)
    x, y = _element(W, args.x), _element(W, args.y)
    table = _table(W, args)
    rank = pairing(table.basis(x), table.basis(y), args.form)
    _emit(args, {"x": args.x, "y": args.y, "form": args.form, "rank": rank}, text=str(rank))
    return 0


def cmd_inversion_verify(args) -> int:
    W = _system(args)
    table = _table(W, args)
    bad = []
    for x in range(W.size):
        for y in range(W.size):
            d = inversion_defect(table, x, y, args.convention)
            if d:
                bad.append({"x": format_word(W.words[x]), "y": format_word(W.words[y]), "defect": str(d)})
    return _verdict(
        {
            "check": "inversion",
            "type": W.name,
            "convention": args.convention,
            "pairs": W.size * W.size,
            "nonzero_defects": len(bad),
            "first_defects": bad[:5],
            "ok": not bad,
        }
    )


def _class_rows(W, classes) -> dict:
    return {format_word(W.words[x]): c.to_json() for x, c in enumerate(classes)}


def cmd_proj_classes(args) -> int:
    W = _system(args)
    table = _table(W, args)
    if args.format == "csv":
        sys.stdout.write(proj_matrix_csv(W))
        return 0
    classes = [proj_class(W, x, table) for x in range(W.size)]
    if args.format == "json":
        print(_dumps({"type": W.name, "classes": _class_rows(W, classes)}))
    else:
        for x, c in enumerate(classes):
            terms = " + ".join(f"{k}*M[{w}]" for w, k in c.to_json().items())
            print(f"Pr[{format_word(W.words[x])}] = {terms}")
    return 0


def cmd_simple_classes(args) -> int:
    W = _system(args)
    table = _table(W, args)
    if args.format == "csv":
        sys.stdout.write(simple_matrix_csv(W, args.convention))
        return 0
    classes = [simple_class(W, y, args.convention, table) for y in range(W.size)]
    if args.format == "json":
        print(_dumps({"type": W.name, "convention": args.convention, "classes": _class_rows(W, classes)}))
    else:
        for y, c in enumerate(classes):
            terms = " + ".join(f"{k}*M[{w}]" for w, k in c.to_json().items())
            print(f"L[{format_word(W.words[y])}] = {terms}")
    return 0


def cmd_polo_search(args) -> int:
    q = LaurentPoly.parse(args.poly)
    hit = polo_search(q, args.max_n, args.max_elements)
    data = hit.to_json() if hit else {"found": False, "max_n": args.max_n}
    text = (
        f"h(y={data['y_word']}, x={data['x_word']}) = {hit.poly} in S_{hit.N}, m = {hit.m}"
        if hit
        else f"no witness with N <= {args.max_n}"
    )
    _emit(args, data, text=text)
    return 0


def _lab_word(args) -> tuple[tuple[int, ...], int]:
    word = parse_word(args.word)
    n = args.n or default_vars(word)
    if any(s >= n - 1 for s in word):
        raise UsageError(f"word {args.word} needs at least {max(word) + 2} variables")
    return word, n


def cmd_bimodule_rank(args) -> int:
    word, n = _lab_word(args)
    rank = graded_left_rank(word)
    data = {"word": [s + 1 for s in word], "n": n, "basis_size": len(labels(len(word))), "rank": rank}
    _emit(args, data, text=str(rank))
    return 0


def cmd_bimodule_split_check(args) -> int:
    try:
        _, _, report = split_BsBs(args.n or 2)
    except SplitFailed as exc:
        return _verdict({"check": "split_BsBs", "ok": False, "error": str(exc)})
    return _verdict(
        {
            "check": "split_BsBs",
            "identities": report["checks"],
            "e1_image": report["e1_image"],
            "e2_image": report["e2_image"],
            "e1_image_rank": report["e1_image_rank"],
            "e2_image_rank": report["e2_image_rank"],
            "ok": all(report["checks"].values()) and report["ranks_sum_to_BsBs"],
        }
    )


def cmd_bimodule_hom(args) -> int:
    dom, cod = parse_word(args.domain), parse_word(args.codomain)
    n = args.n or default_vars(dom + cod)
    gens, info = hom_basis(dom, cod, n, args.max_degree)
    degrees = sorted(k for _, k in gens)
    data = {
        "domain": [s + 1 for s in dom],
        "codomain": [s + 1 for s in cod],
        "n": n,
        "degrees": degrees,
        "free": info["free"],
        "generators": [g.to_json() for g, _ in gens],
    }
    text = "\n".join([f"degrees: {degrees}", f"free: {info['free']}"] + [str(g) for g, _ in gens])
    _emit(args, data, text=text)
    return 0


def cmd_bimodule_cyclic(args) -> int:
    word, n = _lab_word(args)
    profile = generation_profile(word, n)
    ok = cyclic_generation_check(word, n)
    data = {
        "word": [s + 1 for s in word],
        "n": n,
        "generated_by_one_tensor": ok,
        "dimensions": {str(d): {"generated": a, "total": b} for d, (a, b) in profile.items()},
    }
    _emit(args, data, text=f"generated by 1(x)...(x)1: {ok}")
    return 0


def cmd_geom_check(args) -> int:
    W = _system(args)
    try:
        form = build_form(W.matrix)
    except InfiniteBond as exc:
        raise UsageError(str(exc)) from exc
    refl = reflection_matrices(form)
    one = identity(form[0][0].field, W.rank)
    involutions = all(mat_mul(r, r) == one for r in refl)
    violations = verify_relations(W)
    faithful = faithfulness_check(W)
    return _verdict(
        {
            "check": "geometric_representation",
            "type": W.name,
            "involutions": involutions,
            "relation_violations": violations,
            "faithful": faithful,
            "ok": involutions and not violations and faithful,
        }
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--convention", choices=CONVENTIONS, default="corrected")
    common.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
    common.add_argument("--threads", type=int, default=default_threads())
    common.add_argument("--matrix", metavar="FILE", help="Coxeter matrix JSON; overrides TYPE")

    parser = _Parser(prog="soergelkit", description="Kazhdan-Lusztig and Soergel bimodule computations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def group(name, help_):
        p = top.add_parser(name, help=help_)
        return p.add_subparsers(dest="action", required=True, parser_class=_Parser)

    def leaf(sub, name, func, help_, typed=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if typed:
            p.add_argument("type", metavar="TYPE", help='Coxeter type such as "A3", "H3", "I2(5)", "A1xA2"')
        p.set_defaults(func=func)
        return p

    cox = group("coxeter", "Coxeter group enumeration")
    leaf(cox, "info", cmd_coxeter_info, "size, longest element, length generating function")

    kl = group("kl", "Kazhdan-Lusztig polynomials")
    leaf(kl, "table", cmd_kl_table, "all h_{y,x} with y <= x")
    p = leaf(kl, "poly", cmd_kl_poly, "one polynomial h_{y,x}")
    p.add_argument("y", metavar="Y_WORD")
    p.add_argument("x", metavar="X_WORD")

    p = leaf(top, "mu", cmd_mu, "mu(y, x), the coefficient of v in h_{y,x}")
    p.add_argument("y", metavar="Y")
    p.add_argument("x", metavar="X")

    bs = group("bs", "Bott-Samelson classes")
    p = leaf(bs, "decompose", cmd_bs_decompose, "indecomposable summands of BS(word)")
    p.add_argument("word", metavar="WORD")

    hom = group("hom", "graded Hom ranks")
    p = leaf(hom, "rank", cmd_hom_rank, "graded rank of Hom(B_x, B_y)")
    p.add_argument("x", metavar="X")
    p.add_argument("y", metavar="Y")
    p.add_argument("--form", choices=("kronecker", "bar_kronecker"), default="kronecker")

    inv = group("inversion", "KL inversion formula")
    leaf(inv, "verify", cmd_inversion_verify, "check the inversion identity on all pairs")

    proj = group("proj", "projective classes in category O")
    leaf(proj, "classes", cmd_proj_classes, "Verma multiplicities of indecomposable projectives")
    simple = group("simple", "simple classes in category O")
    leaf(simple, "classes", cmd_simple_classes, "simple classes in the Verma basis")

    polo = group("polo", "realize a polynomial as a KL polynomial")
    p = leaf(polo, "search", cmd_polo_search, "search symmetric groups for v^m q(v^2)", typed=False)
    p.add_argument("poly", metavar="POLY", help='polynomial in q = v^2, e.g. "1 + q"')
    p.add_argument("--max-n", type=int, required=True)

    bim = group("bimodule", "explicit type A Bott-Samelson bimodules")
    p = leaf(bim, "rank", cmd_bimodule_rank, "graded rank as a free left module", typed=False)
    p.add_argument("word", metavar="WORD")
    p.add_argument("-n", type=int, default=None, help="number of polynomial variables")
    p = leaf(bim, "split-check", cmd_bimodule_split_check, "verify B_s B_s = B_s(1) + B_s(-1)", typed=False)
    p.add_argument("-n", type=int, default=2)
    p = leaf(bim, "hom", cmd_bimodule_hom, "free generators of Hom(BS(domain), BS(codomain))", typed=False)
    p.add_argument("domain", metavar="WORD1")
    p.add_argument("codomain", metavar="WORD2")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p = leaf(bim, "cyclic", cmd_bimodule_cyclic, "is BS(word) generated by 1(x)...(x)1", typed=False)
    p.add_argument("word", metavar="WORD")
    p.add_argument("-n", type=int, default=None)

    geom = group("geom", "geometric representation")
    leaf(geom, "check", cmd_geom_check, "exact relation and faithfulness check")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidMatrix, InvalidTarget, GroupTooLarge, ValueError, OSError) as exc:
        print(f"soergelkit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
