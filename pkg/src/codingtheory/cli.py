"""Command-line front end.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 uncorrectable word,
4 constraint violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import fileformat
from .code import EnumerationLimitError, LinearCode, from_parity_check_span, from_span, random_code, repetition_code, universe_code, zero_code, zero_sum_code
from .decode import UncorrectableError, syndrome_decode
from .evalcode import EvaluationCode, cartesian_code, ev_code_graph, evaluation_code, rm_code, rs_code, toric_code
from .families import cyclic_code, hamming_code, quasi_cyclic_code, rand_ldpc
from .galois import GF, field_of_order
from .lrc import LRCode, build_lrc, local_recover
from .multipoly import MultiPoly, default_variables, parse_poly

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_UNCORRECTABLE, EXIT_CONSTRAINT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# --- argument helpers ---------------------------------------------------------


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _int_rows(text: str) -> list[list[int]]:
    return [_ints(chunk) for chunk in text.split(";") if chunk.strip()]


def _field(args) -> GF:
    try:
        return field_of_order(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _univariate(F: GF, text: str) -> MultiPoly:
    if any(ch.isalpha() for ch in text):
        return parse_poly(text, F, ("x",))
    return MultiPoly.univariate(F, _ints(text))


def _render(F: GF, vec: Sequence[int], pretty: bool) -> str:
    return ",".join(F.render(x) if pretty else str(x) for x in vec)


def _vector(F: GF, text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            x = int(tok)
        except ValueError:
            raise UsageError(f"bad vector entry {tok!r}") from None
        if not 0 <= x < F.q:
            raise UsageError(f"rep {x} out of range for GF({F.q})")
        out.append(x)
    return out


def _linear(code) -> LinearCode:
    return code if isinstance(code, LinearCode) else code.code


# --- build ----------------------------------------------------------------------


def _build(args):
    fam = args.family
    if fam == "hamming":
        return hamming_code(args.q, args.r)
    if fam == "ldpc":
        return rand_ldpc(args.n, args.k, args.row_weight, args.seed)
    if fam == "rm":
        return rm_code(args.q, args.m, args.d)
    F = _field(args)
    if fam == "repetition":
        return repetition_code(F, args.n)
    if fam == "zerosum":
        return zero_sum_code(F, args.n)
    if fam == "universe":
        return universe_code(F, args.n)
    if fam == "zero":
        return zero_code(F, args.n)
    if fam == "random":
        return random_code(F, args.n, args.k, args.seed)
    if fam == "span":
        rows = _int_rows(args.rows)
        return from_parity_check_span(F, rows) if args.parity_check else from_span(F, rows)
    if fam == "cyclic":
        return cyclic_code(F, _univariate(F, args.g), args.n)
    if fam == "quasicyclic":
        return quasi_cyclic_code(F, _int_rows(args.vectors))
    if fam == "rs":
        return rs_code(F, _ints(args.points), args.k)
    if fam == "cartesian":
        return cartesian_code(F, _int_rows(args.subsets), args.d)
    if fam == "toric":
        return toric_code(F, _int_rows(args.exponents))
    if fam == "graph":
        return ev_code_graph(F, _int_rows(args.incidence), args.d)
    if fam == "eval":
        points = _int_rows(args.points)
        if not points:
            raise UsageError("--points is empty")
        names = default_variables(len(points[0]))
        polys = [parse_poly(s, F, names) for s in args.polys.split(";") if s.strip()]
        return evaluation_code(F, points, polys)
    if fam == "lrc":
        return build_lrc(F, args.n, args.k, args.locality, _int_rows(args.blocks), _univariate(F, args.g))
    raise UsageError(f"unknown family {fam!r}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args):
    _emit(fileformat.dumps(_build(args)), args.out)


def cmd_info(args):
    code = fileformat.load(args.file)
    C = _linear(code)
    F = C.field
    kind = {EvaluationCode: "evaluation", LRCode: "lrc"}.get(type(code), "linear")
    modulus = f" modulus {' '.join(map(str, F.modulus))}" if F.modulus else ""
    rate = C.rate
    print(f"type={kind}")
    print(f"field GF({F.q}) p={F.p} r={F.r}{modulus}")
    print(f"n={C.n} k={C.k} rate={rate.numerator}/{rate.denominator}")
    print("alphabet {" + ", ".join(F.render(x) for x in F.alphabet()) + "}")
    D = C.dual()
    drate = D.rate
    print(f"dual n={D.n} k={D.k} rate={drate.numerator}/{drate.denominator}")
    if isinstance(code, LRCode):
        print(f"locality={code.locality}")
    if args.minweight:
        if C.k == 0:
            print("d=undefined (zero code)")
        else:
            print(f"d={C.minimum_weight()}")


def cmd_encode(args):
    C = _linear(fileformat.load(args.code))
    msg = _vector(C.field, args.message)
    if len(msg) != C.k:
        raise UsageError(f"message has length {len(msg)}, code dimension is {C.k}")
    print(_render(C.field, C.encode(msg), args.pretty))


def cmd_decode(args):
    C = _linear(fileformat.load(args.code))
    v = _vector(C.field, args.received)
    if len(v) != C.n:
        raise UsageError(f"received word has length {len(v)}, code length is {C.n}")
    print(_render(C.field, syndrome_decode(C, v, args.distance), args.pretty))


def cmd_dual(args):
    _emit(fileformat.dumps(_linear(fileformat.load(args.file)).dual()), args.out)


def cmd_shorten(args):
    C = _linear(fileformat.load(args.file))
    _emit(fileformat.dumps(C.shorten(_ints(args.positions))), args.out)


def cmd_recover(args):
    code = fileformat.load(args.code)
    if not isinstance(code, LRCode):
        raise UsageError("recover needs a locally recoverable code file (build lrc)")
    word = []
    for tok in args.word.split(","):
        tok = tok.strip()
        word.append(None if tok in ("?", "_", "") else _vector(code.field, tok)[0])
    if len(word) != code.n:
        raise UsageError(f"word has length {len(word)}, code length is {code.n}")
    value = local_recover(code, word, args.erase)
    print(code.field.render(value.rep) if args.pretty else value.rep)


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="codingtheory", description="Linear and evaluation codes over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    build = sub.add_parser("build", help="construct a code and write its file")
    fams = build.add_subparsers(dest="family", required=True, parser_class=_Parser)

    def fam(name, help, q=True):
        p = fams.add_parser(name, help=help)
        if q:
            p.add_argument("--q", type=int, required=True, help="field order (prime power)")
        p.add_argument("--out", help="write here instead of stdout")
        return p

    p = fam("hamming", "q-ary Hamming code")
    p.add_argument("--r", type=int, required=True)
    p = fam("cyclic", "cyclic code from a generator polynomial")
    p.add_argument("--g", required=True, help="e.g. 'x-1' or ascending coefficients '4,1'")
    p.add_argument("--n", type=int, required=True)
    p = fam("quasicyclic", "all cyclic shifts of the given vectors")
    p.add_argument("--vectors", required=True, help="rows separated by ';'")
    p = fam("ldpc", "random binary LDPC code", q=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--row-weight", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = fam("rs", "Reed-Solomon code")
    p.add_argument("--points", required=True)
    p.add_argument("--k", type=int, required=True)
    p = fam("rm", "generalized Reed-Muller code")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = fam("cartesian", "Cartesian (grid) evaluation code")
    p.add_argument("--subsets", required=True, help="subsets separated by ';'")
    p.add_argument("--d", type=int, required=True)
    p = fam("toric", "toric code")
    p.add_argument("--exponents", required=True, help="exponent rows separated by ';'")
    p = fam("graph", "evaluation code of a graph incidence matrix")
    p.add_argument("--incidence", required=True, help="vertex rows separated by ';'")
    p.add_argument("--d", type=int, required=True)
    p = fam("eval", "evaluation code from points and polynomials")
    p.add_argument("--points", required=True, help="points separated by ';'")
    p.add_argument("--polys", required=True, help="polynomials separated by ';' in x,y,z or x1..xm")
    for name in ("repetition", "zerosum", "universe", "zero"):
        p = fam(name, f"{name} code")
        p.add_argument("--n", type=int, required=True)
    p = fam("random", "random [n,k] code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = fam("span", "row space of vectors (or their dual with --parity-check)")
    p.add_argument("--rows", required=True)
    p.add_argument("--parity-check", action="store_true")
    p = fam("lrc", "Tamo-Barg locally recoverable code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--locality", type=int, required=True)
    p.add_argument("--blocks", required=True, help="blocks of point reps separated by ';'")
    p.add_argument("--g", required=True, help="good polynomial, e.g. 'x^4'")
    build.set_defaults(func=cmd_build)

    p = sub.add_parser("info", help="report parameters")
    p.add_argument("file")
    p.add_argument("--minweight", action="store_true", help="also compute the minimum weight")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("encode", help="message times generator")
    p.add_argument("--code", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="syndrome decoding")
    p.add_argument("--code", required=True)
    p.add_argument("--received", required=True)
    p.add_argument("--distance", type=int, help="minimum distance (default: computed)")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("dual", help="dual code")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("shorten", help="shorten at positions")
    p.add_argument("file")
    p.add_argument("--positions", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_shorten)

    p = sub.add_parser("recover", help="local repair of one erased LRC symbol")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True, help="comma-separated reps; '?' marks the erasure")
    p.add_argument("--erase", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_recover)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except fileformat.FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UncorrectableError as exc:
        print(f"uncorrectable: {exc}", file=sys.stderr)
        return EXIT_UNCORRECTABLE
    except (ValueError, EnumerationLimitError, IndexError) as exc:
        print(f"constraint violation: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
