"""Command-line front end.

    srw <source> <command> [args] [--format json|tsv] [--max-gens K] [--max-n K]
    srw table {bn,dn} <max_n>

Exit codes: 0 success, 2 domain or usage error, 3 resource ceiling hit,
4 a computed value disagrees with the closed form (or a containment that
must hold does not).
"""
from __future__ import annotations

import argparse
import json
import sys

from .complex_core import (DEFAULT_MAX_VERTICES, SimplicialComplex, bipyramid_complex,
                           bipyramidal_graph, load_complex)
from .errors import ComplexFormatError, DomainError, ResourceError
from .monomial_algebra import (DEFAULT_MAX_GENERATORS, MonomialIdeal, format_monomial,
                               primary_decomposition, stanley_reisner_ideal)
from .symbolic_powers import (alpha_symbolic, big_height, containment_check,
                              symbolic_power, verify_els_hh)
from .waldschmidt import (closed_form_bipyramid, closed_form_bipyramidal_graph,
                          format_rational, waldschmidt, waldschmidt_sequence,
                          waldschmidt_with_certificate)

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_MISMATCH = 0, 2, 3, 4

COMMANDS = {
    # name: number of integer arguments
    "ideal": 0, "decompose": 0, "symbolic": 1, "alpha": 1, "waldschmidt": 0,
    "sequence": 1, "containment": 2, "els": 1,
}
FAMILIES = {
    "bn": (bipyramid_complex, closed_form_bipyramid),
    "dn": (bipyramidal_graph, closed_form_bipyramidal_graph),
}

USAGE = """\
srw <source> <command> [args] [--format json|tsv] [--max-gens K] [--max-n K]
srw table {bn,dn} <max_n> [--format json|tsv]

sources:  bipyramid <n> | bigraph <n> | complex <path.json>
commands: ideal | decompose | symbolic <m> | alpha <m> | waldschmidt |
          sequence <max_m> | containment <m> <r> | els <r>"""


class UsageError(Exception):
    pass


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def _tsv(header, rows) -> str:
    lines = ["\t".join(header)] if header else []
    lines += ["\t".join(str(v) for v in row) for row in rows]
    return "\n".join(lines)


def _ideal_report(I: MonomialIdeal, fmt: str) -> str:
    gens = [format_monomial(g) for g in I.generators]
    if fmt == "json":
        return json.dumps({"num_variables": I.num_variables, "generators": gens})
    return "\n".join(gens)


def build_source(kind: str, arg: str, max_vertices: int) -> SimplicialComplex:
    if kind == "complex":
        c = load_complex(arg)
    else:
        n = _int(arg, "n")
        c = bipyramid_complex(n) if kind == "bipyramid" else bipyramidal_graph(n)
    if c.num_vertices > max_vertices:
        raise ResourceError(
            f"complex has {c.num_vertices} vertices; the ceiling is {max_vertices}")
    return c


def run_command(c: SimplicialComplex, command: str, args: list[int], fmt: str,
                max_gens: int, max_vertices: int) -> tuple[int, str]:
    I = stanley_reisner_ideal(c, max_vertices=max_vertices)
    if command == "ideal":
        return EXIT_OK, _ideal_report(I, fmt)
    if command == "decompose":
        primes = primary_decomposition(I)
        if fmt == "json":
            return EXIT_OK, json.dumps(
                {"primes": [list(P.support) for P in primes]})
        return EXIT_OK, "\n".join(str(P) for P in primes)
    if command == "symbolic":
        return EXIT_OK, _ideal_report(symbolic_power(I, args[0], max_gens), fmt)
    if command == "alpha":
        cert = alpha_symbolic(I, args[0])
        if fmt == "json":
            return EXIT_OK, json.dumps({"m": args[0], **cert.to_json()})
        row = [args[0], cert.value, format_monomial(cert.witness),
               format_rational(cert.dual_bound)]
        return EXIT_OK, _tsv(["m", "alpha", "witness", "dual_bound"], [row])
    if command == "waldschmidt":
        if fmt == "json":
            lp, sol = waldschmidt_with_certificate(I)
            return EXIT_OK, json.dumps({"waldschmidt": format_rational(sol.optimum),
                                        "lp": lp.to_json(), "solution": sol.to_json()})
        return EXIT_OK, format_rational(waldschmidt(I))
    if command == "sequence":
        seq = waldschmidt_sequence(I, args[0])
        rows = [(m, format_rational(q * m), format_rational(q))
                for m, q in enumerate(seq, start=1)]
        if fmt == "json":
            return EXIT_OK, json.dumps(
                [{"m": m, "alpha": int(a), "ratio": q} for m, a, q in rows])
        return EXIT_OK, _tsv(["m", "alpha", "ratio"], rows)
    if command == "containment":
        m, r = args
        ok = containment_check(I, m, r, max_gens)
        if fmt == "json":
            return EXIT_OK, json.dumps({"m": m, "r": r, "contained": ok})
        return EXIT_OK, _tsv(["m", "r", "contained"], [(m, r, str(ok).lower())])
    if command == "els":
        r = args[0]
        h = big_height(I)
        ok = verify_els_hh(I, r, max_gens)
        code = EXIT_OK if ok else EXIT_MISMATCH
        if fmt == "json":
            return code, json.dumps({"big_height": h, "m": h * r, "r": r, "contained": ok})
        return code, _tsv(["big_height", "m", "r", "contained"],
                          [(h, h * r, r, str(ok).lower())])
    raise UsageError(f"unknown command {command!r}")


def run_table(family: str, max_n: int, fmt: str, max_vertices: int) -> tuple[int, str]:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; expected bn or dn")
    build, closed = FAMILIES[family]
    if max_n < 3:
        raise DomainError("table needs max_n ≥ 3")
    rows = []
    for n in range(3, max_n + 1):
        c = build(n)
        if c.num_vertices > max_vertices:
            raise ResourceError(
                f"n={n} needs {c.num_vertices} vertices; the ceiling is {max_vertices}")
        lp = waldschmidt(stanley_reisner_ideal(c, max_vertices=max_vertices))
        cf = closed(n)
        rows.append((n, lp, cf, lp == cf))
    code = EXIT_OK if all(r[3] for r in rows) else EXIT_MISMATCH
    if fmt == "json":
        return code, json.dumps([{"n": n, "lp": format_rational(lp),
                                  "closed_form": format_rational(cf), "match": ok}
                                 for n, lp, cf, ok in rows])
    return code, _tsv(["n", "lp", "closed_form", "match"],
                      [(n, format_rational(lp), format_rational(cf), str(ok).lower())
                       for n, lp, cf, ok in rows])


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srw", usage=USAGE,
        description="Stanley-Reisner ideals, symbolic powers and Waldschmidt constants.")
    parser.add_argument("words", nargs="+", help=argparse.SUPPRESS)
    parser.add_argument("--format", choices=["json", "tsv"], default="tsv")
    parser.add_argument("--max-gens", type=int, default=DEFAULT_MAX_GENERATORS,
                        help="ceiling on intermediate generators (default %(default)s)")
    parser.add_argument("--max-n", type=int, default=DEFAULT_MAX_VERTICES,
                        help="ceiling on the number of vertices (default %(default)s)")
    return parser


def dispatch(words: list[str], fmt: str, max_gens: int, max_vertices: int) -> tuple[int, str]:
    if words[0] == "table":
        if len(words) != 3:
            raise UsageError("table takes a family and max_n")
        return run_table(words[1], _int(words[2], "max_n"), fmt, max_vertices)
    if words[0] not in ("bipyramid", "bigraph", "complex"):
        raise UsageError(f"unknown source {words[0]!r}")
    if len(words) < 3:
        raise UsageError("missing command")
    command = words[2]
    if command not in COMMANDS:
        raise UsageError(f"unknown command {command!r}")
    params = words[3:]
    if len(params) != COMMANDS[command]:
        raise UsageError(f"{command} takes {COMMANDS[command]} integer argument(s)")
    args = [_int(p, "argument") for p in params]
    c = build_source(words[0], words[1], max_vertices)
    return run_command(c, command, args, fmt, max_gens, max_vertices)


def main(argv=None) -> int:
    parser = make_parser()
    opts = parser.parse_intermixed_args(argv)
    try:
        code, report = dispatch(opts.words, opts.format, opts.max_gens, opts.max_n)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"srw: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except json.JSONDecodeError as exc:
        print(f"srw: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
              file=sys.stderr)
        return EXIT_DOMAIN
    except ComplexFormatError as exc:
        print(f"srw: invalid complex: {json.dumps(exc.to_dict())}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, OSError) as exc:
        print(f"srw: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"srw: resource ceiling: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    print(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
