"""Command-line interface: ``steinhaus <command> ... [--format text|json|csv]``.

Every number printed comes straight from a library call; this module only
parses arguments and formats results.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable, Optional, Sequence

from steinhaus import binomial, canonical, core, extremes

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_INCONSISTENT = 4


class Output:
    """Result of one command, renderable in each output format."""

    def __init__(
        self,
        command: str,
        inputs: dict,
        result: Any,
        text: str,
        rows: Optional[list[dict]] = None,
        status: int = EXIT_OK,
    ):
        self.command = command
        self.inputs = inputs
        self.result = result
        self.text = text
        self.rows = rows
        self.status = status

    def render(self, fmt: str) -> str:
        if fmt == "json":
            doc = {"command": self.command, "input": self.inputs, "result": self.result}
            return json.dumps(doc, sort_keys=False) + "\n"
        if fmt == "csv":
            rows = self.rows if self.rows is not None else [_flatten(self.result)]
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
            return buf.getvalue()
        return self.text.rstrip("\n") + "\n"


def _flatten(result: Any) -> dict:
    if isinstance(result, dict):
        return {k: v for k, v in result.items() if not isinstance(v, (list, dict))}
    return {"value": result}


def parse_seed(spec: str) -> core.BinarySequence:
    """A 0/1 string (index 0 leftmost) or the canonical shorthand ``e:k:n``."""
    if spec.startswith("e:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"canonical seed must look like e:k:n, got {spec!r}")
        try:
            k, n = int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError(f"canonical seed must look like e:k:n, got {spec!r}") from None
        return core.unit_vector(k, n)
    if not spec:
        raise ValueError("empty seed")
    return core.BinarySequence.from_string(spec)


# ---------------------------------------------------------------- commands


def cmd_triangle(args: argparse.Namespace) -> Output:
    seed = parse_seed(args.seed)
    tri = core.triangle(seed)
    weight = core.triangle_weight(tri)
    rows = [str(row) for row in tri.rows]
    result = {"size": tri.size, "rows": rows, "weight": weight}
    text = core.render(tri, args.style) + f"\nweight {weight}"
    table = [{"row": r, "bits": bits, "weight": row.weight()}
             for r, (bits, row) in enumerate(zip(rows, tri.rows))]
    return Output("triangle", {"seed": args.seed, "style": args.style}, result, text, table)


def cmd_weight(args: argparse.Namespace) -> Output:
    seed = parse_seed(args.seed)
    if args.rows is None:
        value = core.triangle_weight(seed)
    else:
        value = core.partial_weight(seed, args.rows)
    return Output("weight", {"seed": args.seed, "rows": args.rows}, value, str(value))


def cmd_fast_weight(args: argparse.Namespace) -> Output:
    bd = canonical.weight_fast(args.k, args.n)
    inputs = {"k": args.k, "n": args.n, "breakdown": args.breakdown}
    if not args.breakdown:
        return Output("fast-weight", inputs, bd.weight, str(bd.weight))
    d = bd.as_dict()
    if bd.applicable:
        text = ("k={k} n={n} k_effective={k_effective} t={t} period={period} "
                "q={q} r={r} lambda={lambda} mu={mu} weight={weight}").format(**d)
    else:
        text = "k={k} n={n} k_effective={k_effective} (degenerate: w = n) weight={weight}".format(**d)
    return Output("fast-weight", inputs, d, text)


def cmd_table(args: argparse.Namespace) -> Output:
    table = canonical.lambda_mu_table(args.k_max)
    result = [{"k": row.k, "t": row.t, "lambda": row.lambda_, "mu": list(row.mu)} for row in table]
    lines = []
    for row in table:
        lines.append(f"k={row.k} t={row.t} lambda={row.lambda_}")
        width = max(len(str(m)) for m in row.mu)
        lines.append("  r  " + " ".join(str(r).rjust(width) for r in range(len(row.mu))))
        lines.append("  mu " + " ".join(str(m).rjust(width) for m in row.mu))
    flat = [{"k": row.k, "t": row.t, "lambda": row.lambda_, "r": r, "mu": m}
            for row in table for r, m in enumerate(row.mu)]
    return Output("table", {"k_max": args.k_max}, result, "\n".join(lines), flat)


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def cmd_closed_form(args: argparse.Namespace) -> Output:
    inputs = {"k": args.k, "n": args.n, "derive": args.derive}
    if not args.derive:
        if args.n is None:
            raise ValueError("closed-form needs n unless --derive is given")
        value = canonical.closed_form_paper(args.k, args.n)
        return Output("closed-form", inputs, value, str(value))

    spec = canonical.derive_closed_form(args.k)
    amps = spec.amplitudes()
    verdict = None
    if args.k in canonical.PAPER_CLOSED_FORMS:
        a0, a1, printed = canonical.paper_amplitudes(args.k)
        close = all(
            abs(amps[m][0] - printed[m][0]) <= 1e-9 and abs(amps[m][1] - printed[m][1]) <= 1e-9
            for m in amps
        )
        verdict = "match" if close and a0 == spec.A0 and a1 == spec.A1 else "mismatch"
    result = {
        "k": spec.k,
        "period": spec.period,
        "A0": str(spec.A0),
        "A1": str(spec.A1),
        "B": [[b.real, b.imag] for b in spec.B],
        "residue_table": {str(r): [str(s), str(c)] for r, (s, c) in spec.residue_table.items()},
        "amplitudes": {str(m): list(v) for m, v in amps.items()},
        "verdict": verdict,
    }
    lines = [f"k={spec.k} period={spec.period}", f"A0={spec.A0}", f"A1={spec.A1}"]
    lines += [f"r={r} slope={s} intercept={c}" for r, (s, c) in spec.residue_table.items()]
    lines += [f"B{j}={_fmt_complex(b)}" for j, b in enumerate(spec.B, start=1)]
    lines += [f"harmonic {m}: cos {c:.12g} sin {s:.12g}" for m, (c, s) in amps.items()]
    if verdict is not None:
        lines.append(f"verdict {verdict}")
    rows = [{"r": r, "slope": str(s), "intercept": str(c)} for r, (s, c) in spec.residue_table.items()]
    status = EXIT_INCONSISTENT if verdict == "mismatch" else EXIT_OK
    return Output("closed-form", inputs, result, "\n".join(lines), rows, status)


def cmd_distribution(args: argparse.Namespace) -> Output:
    enum = extremes.weight_distribution(
        args.n, max_n=args.max_n or extremes.DEFAULT_DISTRIBUTION_MAX_N,
        budget_seconds=args.budget_seconds, workers=args.workers,
    )
    result = {str(w): c for w, c in enum.counts.items()}
    text = "\n".join(f"{w} {c}" for w, c in enum.counts.items())
    rows = [{"weight": w, "count": c} for w, c in enum.counts.items()]
    return Output("distribution", {"n": args.n}, result, text, rows)


def _z_names(n: int, seqs) -> list[str]:
    names = []
    for seq in sorted(seqs, key=str, reverse=True):
        tags = [v for v in extremes.Z_PATTERNS if extremes.z_sequence(v, n) == seq]
        names.append(f"{seq}" + (f" ({'='.join(tags)})" if tags else ""))
    return names


def cmd_max_weight(args: argparse.Namespace) -> Output:
    claim = extremes.max_weight(args.n)
    result: dict = {
        "value": claim.value,
        "generators": sorted((str(g) for g in claim.generators), reverse=True),
    }
    lines = [f"value {claim.value}", "generators " + " ".join(_z_names(args.n, claim.generators))]
    status = EXIT_OK
    if args.verify:
        found = extremes.max_weight_search(
            args.n, max_n=args.max_n or extremes.DEFAULT_VERIFY_MAX_N,
            budget_seconds=args.budget_seconds,
        )
        verified = found == claim
        result.update({
            "verified": verified,
            "observed_value": found.value,
            "observed_generators": sorted((str(g) for g in found.generators), reverse=True),
        })
        lines.append(f"observed value {found.value}")
        lines.append("observed generators " + " ".join(_z_names(args.n, found.generators)))
        lines.append("verified" if verified else "NOT verified")
        if not verified:
            status = EXIT_INCONSISTENT
    return Output("max-weight", {"n": args.n, "verify": args.verify}, result, "\n".join(lines), status=status)


def cmd_balanced(args: argparse.Namespace) -> Output:
    found = extremes.balanced_search(
        args.n, args.mode, max_n=args.max_n or extremes.DEFAULT_DISTRIBUTION_MAX_N,
        budget_seconds=args.budget_seconds,
    )
    target = extremes.balanced_target(args.n)
    inputs = {"n": args.n, "mode": args.mode, "target": target}
    if args.mode == "count":
        return Output("balanced", inputs, found, str(found))
    seeds = [found] if args.mode == "first" and found is not None else (found or [])
    strings = [str(s) for s in seeds]
    result = strings[0] if args.mode == "first" and strings else (None if args.mode == "first" else strings)
    rows = [{"seed": s, "weight": target} for s in strings] or [{"seed": "", "weight": ""}]
    return Output("balanced", inputs, result, "\n".join(strings) or "none", rows)


def cmd_lucas(args: argparse.Namespace) -> Output:
    modulus = binomial.PrimeModulus(args.p)
    value = binomial.binom_mod_p(args.r, args.s, modulus)
    rd = binomial.digits(args.r, args.p).digits
    sd = binomial.digits(args.s, args.p).digits
    result = {"value": value, "r_digits": list(rd), "s_digits": list(sd)}
    text = f"C({args.r},{args.s}) mod {args.p} = {value}"
    return Output("lucas", {"r": args.r, "s": args.s, "p": args.p}, result, text)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--budget-seconds", type=float, default=argparse.SUPPRESS,
                        help="wall-clock cap for exhaustive searches (default 60)")

    parser = argparse.ArgumentParser(
        prog="steinhaus", description="Binary Steinhaus triangles and their weights.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("triangle", cmd_triangle, "render the triangle of a seed")
    p.add_argument("seed", help="0/1 string or e:k:n")
    p.add_argument("--style", choices=("digits", "signs"), default="digits")

    p = add("weight", cmd_weight, "brute-force triangle weight of a seed")
    p.add_argument("seed", help="0/1 string or e:k:n")
    p.add_argument("--rows", type=int, help="only count the first ROWS rows")

    p = add("fast-weight", cmd_fast_weight, "w(k,n) from the period decomposition")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--breakdown", action="store_true")

    p = add("table", cmd_table, "lambda/mu table for k = 1..k_max")
    p.add_argument("--k-max", type=int, default=7)

    p = add("closed-form", cmd_closed_form, "evaluate or derive the trigonometric closed form")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--derive", action="store_true")

    for name, func, helptext in (
        ("distribution", cmd_distribution, "exact weight enumerator of S(n)"),
        ("max-weight", cmd_max_weight, "maximum triangle weight and its generators"),
        ("balanced", cmd_balanced, "seeds with triangle weight n(n+1)/4"),
    ):
        p = add(name, func, helptext)
        p.add_argument("n", type=int)
        p.add_argument("--max-n", type=int, help="override the exhaustive size budget")
        if name == "distribution":
            p.add_argument("--workers", type=int, default=1)
        if name == "max-weight":
            p.add_argument("--verify", action="store_true")
        if name == "balanced":
            p.add_argument("--mode", choices=("first", "all", "count"), default="first")

    p = add("lucas", cmd_lucas, "binomial coefficient modulo a prime")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("p", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    args.budget_seconds = getattr(args, "budget_seconds", 60.0)
    try:
        out = args.func(args)
    except extremes.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except canonical.ClosedFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out.render(fmt))
    return out.status


if __name__ == "__main__":
    raise SystemExit(main())
