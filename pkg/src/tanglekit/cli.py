"""Command-line front end for the tanglekit library.

Subcommands fall into four groups:

* fraction arithmetic: ``fraction``, ``canonical``, ``parity``, ``schubert``
* bracket invariants: ``bracket``, ``invariant``
* solid-torus closures: ``closure``, ``equiv``, ``classify``, ``colored``,
  ``colored-closure``
* verification and display: ``oracle-check``, ``render-ascii``

Tangles are written in bracket notation, ``"[3 2 -3]"`` or ``"[inf]"``.
Output is compact JSON by default and ``--text`` switches to a readable
rendering; the output is a pure function of the arguments.  Errors are
reported on stdout as ``{"error": "..."}`` with exit code 2.  The two
equivalence commands exit 0 when equivalent and 1 when not, so they can
drive shell scripts.
"""

import argparse
import json
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .annulus import (
    chebyshev_convert,
    closure_bracket,
    colored_closure,
    homotopy_type,
    link_fraction,
    links_equivalent,
    solid_torus_closure,
)
from .bracket import bracket_vector, c_invariant, ratio_invariant
from .oracle import MAX_ORACLE_CROSSINGS, bracket_of_diagram
from .rationals import TwistVector, canonical_form, parity, schubert_equivalent
from .tangles import (
    RationalTangle,
    build_rational,
    random_twist_vector,
    rational_to_diagram,
    to_twist_word,
)
from .tl import MAX_PROJECTOR_STRANDS, colored_expand, colored_ratios


# ---------------------------------------------------------------------------
# Tangle notation
# ---------------------------------------------------------------------------

class TangleNotationError(ValueError):
    """Raised for strings that do not parse as bracket tangle notation."""


INFINITY_TANGLE = RationalTangle.infinity()

_INTEGER = re.compile(r"[+-]?[0-9]+\Z")


def parse_tangle_notation(s: str):
    """Parse bracket notation into a TwistVector, or INFINITY_TANGLE.

    The grammar is ``'['`` followed by one or more whitespace-separated
    integers and a closing ``']'``; the single token ``inf`` denotes the
    infinity tangle.  Interior zero entries are rejected.
    """
    def fail(msg, col):
        raise TangleNotationError(f"parse error: {msg} (column {col})")

    i, n = 0, len(s)
    while i < n and s[i].isspace():
        i += 1
    if i == n or s[i] != "[":
        fail("expected '['", i + 1)
    i += 1
    tokens = []
    close_col = None
    while i < n:
        if s[i].isspace():
            i += 1
        elif s[i] == "]":
            close_col = i + 1
            i += 1
            break
        else:
            start = i
            while i < n and not s[i].isspace() and s[i] != "]":
                i += 1
            tokens.append((s[start:i], start + 1))
    if close_col is None:
        fail("expected ']'", n + 1)
    while i < n and s[i].isspace():
        i += 1
    if i < n:
        fail("unexpected text after ']'", i + 1)
    if not tokens:
        fail("no entries between the brackets", close_col)
    if len(tokens) == 1 and tokens[0][0] == "inf":
        return INFINITY_TANGLE
    entries = []
    for text, col in tokens:
        if text == "inf":
            fail("'inf' cannot combine with twist entries", col)
        if not _INTEGER.match(text):
            fail(f"expected an integer, got {text!r}", col)
        entries.append(int(text))
    for text, col in tokens[1:-1]:
        if int(text) == 0:
            raise TangleNotationError(f"interior zero entry (column {col})")
    return TwistVector(tuple(entries))


def _parse_tangle_arg(s: str) -> RationalTangle:
    parsed = parse_tangle_notation(s)
    if isinstance(parsed, RationalTangle):
        return parsed
    return build_rational(parsed)


# ---------------------------------------------------------------------------
# Rendering helpers
# ---------------------------------------------------------------------------

def _dump(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _chebyshev_text(coords) -> str:
    parts = []
    for k in range(len(coords) - 1, -1, -1):
        if not coords[k].is_zero:
            parts.append(f"({coords[k]})*S_{k}")
    return " + ".join(parts) if parts else "0"


def _closure_payload(e, basis):
    """JSON payload and text form of an annulus element, in the requested
    basis (both when basis is None)."""
    z = {str(k): str(e.coefficient(k)) for k in sorted(e.coeffs)}
    cheb = [str(c) for c in chebyshev_convert(e)]
    payload = {}
    if basis in (None, "z"):
        payload["z"] = z
    if basis in (None, "chebyshev"):
        payload["chebyshev"] = cheb
    text = _chebyshev_text(chebyshev_convert(e)) if basis == "chebyshev" else str(e)
    return payload, text


def _check_color(n: int) -> int:
    if n < 1:
        raise ValueError("cable width must be a positive integer")
    return n


# ---------------------------------------------------------------------------
# Per-tangle payload builders (shared by single and batch modes)
# ---------------------------------------------------------------------------

def _fraction_payload(notation, opts):
    f = _parse_tangle_arg(notation).fraction
    return {"p": f.p, "q": f.q, "parity": parity(f)}, f"{f} (parity {parity(f)})"


def _canonical_payload(notation, opts):
    f = _parse_tangle_arg(notation).fraction
    tv = canonical_form(f)
    return {"entries": list(tv.entries), "p": f.p, "q": f.q}, str(tv)


def _parity_payload(notation, opts):
    tag = parity(_parse_tangle_arg(notation).fraction)
    return {"parity": tag}, tag


def _bracket_payload(notation, opts):
    vec = bracket_vector(_parse_tangle_arg(notation))
    ratio = ratio_invariant(vec)
    payload = {
        "alpha": str(vec.alpha),
        "beta": str(vec.beta),
        "R": "inf" if ratio is None else str(ratio),
        "C": str(c_invariant(vec)),
    }
    return payload, "\n".join(f"{k} = {v}" for k, v in payload.items())


def _invariant_payload(notation, opts):
    c = c_invariant(bracket_vector(_parse_tangle_arg(notation)))
    return {"C": str(c), "p": c.p, "q": c.q}, str(c)


def _closure_cmd_payload(notation, opts):
    e = closure_bracket(_parse_tangle_arg(notation))
    return _closure_payload(e, opts.get("basis"))


def _classify_payload(notation, opts):
    link = solid_torus_closure(_parse_tangle_arg(notation))
    f = link_fraction(link)
    kind = homotopy_type(link).name
    payload = {"p": f.p, "q": f.q, "parity": parity(f), "homotopy": kind}
    return payload, f"{f} (parity {parity(f)}, {kind})"


def _colored_payload(notation, opts):
    n = _check_color(opts["n"])
    gammas = colored_expand(_parse_tangle_arg(notation), n)
    ratios = colored_ratios(gammas)
    payload = {
        "n": n,
        "gamma": [str(g) for g in gammas],
        "ratios": [str(r) for r in ratios],
    }
    text = "gamma:  " + ", ".join(payload["gamma"])
    text += "\nratios: " + ", ".join(payload["ratios"])
    return payload, text


def _colored_closure_payload(notation, opts):
    n = _check_color(opts["n"])
    e = colored_closure(_parse_tangle_arg(notation), n)
    payload, text = _closure_payload(e, opts.get("basis"))
    return {"n": n, **payload}, text


def _render_payload(notation, opts):
    """Coarse picture: one glyph run per twist region, in build order."""
    parsed = parse_tangle_notation(notation)
    if isinstance(parsed, RationalTangle):
        lines = ["tangle [inf]", "start  [inf]"]
    else:
        word = to_twist_word(build_rational(parsed))
        lines = [f"tangle {parsed}", f"start  [{word.start}]"]
        runs = []
        for kind, s in word.moves:
            if runs and runs[-1][0] == kind and runs[-1][1] == s:
                runs[-1][2] += 1
            else:
                runs.append([kind, s, 1])
        for kind, s, count in runs:
            label = "right" if kind == "R" else "bottom"
            glyph = "/" if s > 0 else "\\"
            lines.append(f"{label:<6} {s * count:+d}  {glyph * count}")
    art = "\n".join(lines)
    return {"ascii": art}, art


_PAYLOAD_FNS = {
    "fraction": _fraction_payload,
    "canonical": _canonical_payload,
    "parity": _parity_payload,
    "bracket": _bracket_payload,
    "invariant": _invariant_payload,
    "closure": _closure_cmd_payload,
    "classify": _classify_payload,
    "colored": _colored_payload,
    "colored-closure": _colored_closure_payload,
    "render-ascii": _render_payload,
}


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------

def _emit(args, payload, text):
    print(text if args.fmt == "text" else _dump(payload))


def _opts_from_args(args) -> dict:
    return {"n": getattr(args, "n", 1), "basis": getattr(args, "basis", None)}


def _batch_worker(item):
    """Evaluate one batch line; errors ride back as payloads so a bad line
    cannot take down the worker pool."""
    name, notation, opts = item
    try:
        payload, text = _PAYLOAD_FNS[name](notation, opts)
        return 0, payload, text
    except Exception as exc:
        return 2, {"error": str(exc)}, f"error: {exc}"


def _read_batch(path):
    if path == "-":
        data = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            data = fh.read()
    return [line.strip() for line in data.splitlines() if line.strip()]


def _cmd_single(args) -> int:
    fn = _PAYLOAD_FNS[args.command]
    opts = _opts_from_args(args)
    if getattr(args, "batch", None):
        items = [(args.command, line, opts) for line in _read_batch(args.batch)]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_batch_worker, items))
        else:
            results = [_batch_worker(item) for item in items]
        code = 0
        for rc, payload, text in results:
            print(text if args.fmt == "text" else _dump(payload))
            code = max(code, rc)
        return code
    if args.tangle is None:
        raise ValueError("a tangle argument or --batch FILE is required")
    payload, text = fn(args.tangle, opts)
    _emit(args, payload, text)
    return 0


def _cmd_schubert(args) -> int:
    a = _parse_tangle_arg(args.left).fraction
    b = _parse_tangle_arg(args.right).fraction
    eq = schubert_equivalent(a, b)
    payload = {"equivalent": eq, "left": str(a), "right": str(b)}
    _emit(args, payload, f"{a} and {b}: {'equivalent' if eq else 'not equivalent'}")
    return 0 if eq else 1


def _cmd_equiv(args) -> int:
    la = solid_torus_closure(_parse_tangle_arg(args.left))
    lb = solid_torus_closure(_parse_tangle_arg(args.right))
    eq = links_equivalent(la, lb)
    payload = {
        "equivalent": eq,
        "left": str(link_fraction(la)),
        "right": str(link_fraction(lb)),
    }
    text = f"{link_fraction(la)} and {link_fraction(lb)}: " + (
        "equivalent" if eq else "not equivalent"
    )
    _emit(args, payload, text)
    return 0 if eq else 1


def _cmd_oracle_check(args) -> int:
    budget = args.max_crossings
    if not 1 <= budget <= MAX_ORACLE_CROSSINGS:
        raise ValueError(f"crossing budget must be between 1 and {MAX_ORACLE_CROSSINGS}")
    rng = random.Random(args.seed)
    failures = []
    checked = 0
    attempts = 0
    while checked < args.count:
        attempts += 1
        if attempts > 200 * args.count:
            raise ValueError("could not sample enough diagrams within the crossing budget")
        tv = random_twist_vector(rng)
        t = build_rational(tv)
        d = rational_to_diagram(t)
        if d.crossing_count > budget:
            continue
        vec = bracket_vector(t)
        if bracket_of_diagram(d) != (vec.alpha, vec.beta):
            failures.append({"tangle": str(tv), "check": "bracket"})
        if closure_bracket(t) != closure_bracket(d):
            failures.append({"tangle": str(tv), "check": "closure"})
        checked += 1
    payload = {
        "checked": checked,
        "max_crossings": budget,
        "seed": args.seed,
        "failures": failures,
        "ok": not failures,
    }
    text = f"checked {checked} diagrams with at most {budget} crossings: " + (
        "all fast paths agree with the state sum"
        if not failures
        else f"{len(failures)} disagreements"
    )
    _emit(args, payload, text)
    return 0 if not failures else 1


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _format_flags(sp, default):
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json",
                       help="compact JSON output")
    group.add_argument("--text", dest="fmt", action="store_const", const="text",
                       help="plain text output")
    sp.set_defaults(fmt=default)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanglekit",
        description="Exact invariants of rational 2-tangles and their "
                    "solid-torus closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def tangle_command(name, help_text, fmt="json", batch=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("tangle", nargs="?",
                        help="tangle in bracket notation, e.g. '[3 2 -3]' or '[inf]'")
        if batch:
            sp.add_argument("--batch", metavar="FILE",
                            help="read one tangle per line from FILE ('-' for stdin)")
            sp.add_argument("--jobs", type=int, default=1,
                            help="worker processes for --batch")
        _format_flags(sp, fmt)
        sp.set_defaults(handler=_cmd_single)
        return sp

    max_cable = MAX_PROJECTOR_STRANDS // 2

    tangle_command("fraction", "continued fraction p/q of a tangle, with parity")
    tangle_command("canonical", "canonical odd-length uniform-sign twist vector")
    tangle_command("parity", "parity class of the tangle fraction")

    sp = sub.add_parser("schubert",
                        help="Schubert equivalence of two tangle fractions (exit 0/1)")
    sp.add_argument("left")
    sp.add_argument("right")
    _format_flags(sp, "json")
    sp.set_defaults(handler=_cmd_schubert)

    tangle_command("bracket",
                   "bracket coordinates alpha, beta with ratio and fraction invariants")
    tangle_command("invariant", "tangle fraction recovered from the bracket coordinates")

    sp = tangle_command("closure", "solid-torus closure in the z and Chebyshev bases")
    sp.add_argument("--basis", choices=("z", "chebyshev"),
                    help="restrict output to one basis")

    sp = sub.add_parser("equiv",
                        help="isotopy equivalence of two solid-torus closures (exit 0/1)")
    sp.add_argument("left")
    sp.add_argument("right")
    _format_flags(sp, "json")
    sp.set_defaults(handler=_cmd_equiv)

    tangle_command("classify", "fraction, parity, and homotopy type of the closure")

    sp = tangle_command("colored", "colored coordinates gamma_i and their ratios")
    sp.add_argument("--n", type=int, default=1,
                    help=f"cable width (1..{max_cable})")

    sp = tangle_command("colored-closure",
                        "colored solid-torus closure in the z and Chebyshev bases")
    sp.add_argument("--n", type=int, default=1,
                    help=f"cable width (1..{max_cable})")
    sp.add_argument("--basis", choices=("z", "chebyshev"),
                    help="restrict output to one basis")

    sp = sub.add_parser("oracle-check",
                        help="verify the fast bracket and closure paths against "
                             "the state-sum oracle")
    sp.add_argument("--max-crossings", type=int, default=10,
                    help=f"crossing budget per diagram (1..{MAX_ORACLE_CROSSINGS})")
    sp.add_argument("--count", type=int, default=25,
                    help="number of random diagrams to check")
    sp.add_argument("--seed", type=int, default=2026,
                    help="seed for the diagram sampler")
    _format_flags(sp, "json")
    sp.set_defaults(handler=_cmd_oracle_check)

    tangle_command("render-ascii", "coarse text picture of the twist regions",
                   fmt="text", batch=False)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(_dump({"error": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
