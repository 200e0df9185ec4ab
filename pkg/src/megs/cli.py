"""Command line interface.

Subcommands
-----------
list         print the generating-set catalog for m subsystems
make-state   write canonical or seeded random state files
concurrence  evaluate class concurrences of a state file
operator     dump a class operator matrix (full or one decomposition part)

Subsystem indices are 0-based everywhere (a system of m parts is indexed
0..m-1).  Exit codes: 0 success, 2 usage/validation error, 3 I/O error,
4 capacity exceeded.  The environment variable ``MEGS_DENSE_CAP`` overrides
the dense-matrix size cap.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from .catalog import enumerate_megs
from .concurrence import class_concurrence, full_report
from .core import MultiState, bilinear_expectation
from .exceptions import CapacityError
from .operators import (
    ClassKind,
    ClassLabel,
    enumerate_class_operators,
    epr_operator,
    ghz_operator,
    split_anti_diagonal,
    split_sign_components,
)
from .states import (
    bell_state,
    ghz_state,
    product_state,
    random_state,
    read_state_file,
    serialize_state,
    w_state,
)

_PART_RE = re.compile(r"^[pP]_?(\d+)$")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fp:
            fp.write(text)


def _machine(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _fmt(value: float) -> str:
    return f"{value:.12f}"


def _fmt_complex(value: complex) -> str:
    # + 0.0 folds IEEE negative zeros into +0.0 before printing
    return f"{value.real + 0.0:.12f}{value.imag + 0.0:+.12f}j"


def _pair_json(value: complex) -> list[float]:
    return [float(value.real) + 0.0, float(value.imag) + 0.0]


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"cannot parse {what} {text!r}; expected comma-separated integers") from None


def _parse_lambda(text: str) -> tuple[tuple[int, int], ...]:
    groups = [g for g in text.split(";") if g.strip() != ""]
    pairs = []
    for g in groups:
        values = _parse_int_list(g, "lambda pair")
        if len(values) != 2:
            raise ValueError(f"lambda pair {g!r} must have exactly two indices")
        pairs.append((values[0], values[1]))
    return tuple(pairs)


# ---------------------------------------------------------------------------
# list

def _cmd_list(args) -> int:
    catalog = enumerate_megs(args.m)
    if args.format == "machine":
        doc = {
            "m": catalog.m,
            "total": catalog.total,
            "counts": {str(k): v for k, v in catalog.counts.items()},
            "labels": [str(lb) for lb in catalog.labels],
        }
        _emit(_machine(doc), args.out)
    else:
        _emit("".join(f"{lb}\n" for lb in catalog.labels), args.out)
    return 0


# ---------------------------------------------------------------------------
# make-state

def _cmd_make_state(args) -> int:
    kind = args.kind
    if kind == "bell":
        if args.m not in (None, 2):
            raise ValueError("bell states are two-qubit states; omit --m or pass --m 2")
        state = bell_state()
    elif kind == "ghz":
        if args.m is None:
            raise ValueError("ghz needs --m (number of qubits, >= 2)")
        state = ghz_state(args.m)
    elif kind == "w":
        if args.m is None:
            raise ValueError("w needs --m (number of qubits, >= 3)")
        state = w_state(args.m)
    else:  # product / random
        if args.dims is None:
            raise ValueError(f"{kind} needs --dims (comma-separated subsystem dimensions)")
        dims = _parse_int_list(args.dims, "--dims")
        state = product_state(dims, args.seed) if kind == "product" else random_state(dims, args.seed)
    label = args.label if args.label is not None else kind
    if args.format == "machine":
        _emit(serialize_state(state, label), args.out)
    else:
        lines = [f"label: {label}", f"dims: {','.join(str(d) for d in state.dims)}"]
        for idx in np.nonzero(state.amps)[0]:
            lines.append(f"amp[{idx}] = {_fmt_complex(complex(state.amps[idx]))}")
        _emit("".join(line + "\n" for line in lines), args.out)
    return 0


# ---------------------------------------------------------------------------
# concurrence

def _operator_entries(state: MultiState, label: ClassLabel) -> list[dict]:
    entries = []
    for op in enumerate_class_operators(state.dims, label):
        value = bilinear_expectation(state, op.matrix)
        parts: dict[str, complex] = {}
        if label.kind is ClassKind.EPR:
            upper, lower = split_anti_diagonal(op)
            parts["U"] = bilinear_expectation(state, upper)
            parts["L"] = bilinear_expectation(state, lower)
        else:
            for i, comp in enumerate(split_sign_components(op)):
                parts[f"P{i}"] = bilinear_expectation(state, comp)
        entries.append(
            {"pi_half_pair": op.pi_half_pair, "lambda": op.lam, "value": value, "parts": parts}
        )
    return entries


def _operator_lines(entries: list[dict]) -> list[str]:
    lines = []
    for i, entry in enumerate(entries):
        lam = ";".join(f"{k},{l}" for k, l in entry["lambda"])
        pair = ",".join(str(j) for j in entry["pi_half_pair"])
        lines.append(
            f"  op {i}  pair=({pair})  lambda=({lam})  "
            f"value={_fmt_complex(entry['value'])}  |value|={_fmt(abs(entry['value']))}"
        )
        for name, val in entry["parts"].items():
            lines.append(f"    {name:<4} {_fmt_complex(val)}")
    return lines


def _operator_docs(entries: list[dict]) -> list[dict]:
    return [
        {
            "pi_half_pair": list(entry["pi_half_pair"]),
            "lambda": [list(p) for p in entry["lambda"]],
            "value": _pair_json(entry["value"]),
            "parts": {name: _pair_json(val) for name, val in entry["parts"].items()},
        }
        for entry in entries
    ]


def _cmd_concurrence(args) -> int:
    record = read_state_file(args.state, normalize=args.normalize)
    state = record.state
    selector = args.label.strip()
    if selector.upper() == "ALL":
        report = full_report(state, digest=record.digest)
        width = max(len(str(lb)) for lb in report.per_class) + 2
        if args.format == "machine":
            per_class = []
            for lb, value in report.per_class.items():
                entry = {"label": str(lb), "value": value}
                if args.verbose:
                    entry["operators"] = _operator_docs(_operator_entries(state, lb))
                per_class.append(entry)
            doc = {
                "dims": list(state.dims),
                "state_digest": report.state_digest,
                "report": {
                    "per_class": per_class,
                    "w_class": report.w_class,
                    "total": report.total,
                },
            }
            if record.label is not None:
                doc["label"] = record.label
            _emit(_machine(doc), args.out)
        else:
            lines = []
            for lb, value in report.per_class.items():
                lines.append(f"{str(lb):<{width}}{_fmt(value)}")
                if args.verbose:
                    lines.extend(_operator_lines(_operator_entries(state, lb)))
            lines.append(f"{'w_class':<{width}}{_fmt(report.w_class)}")
            lines.append(f"{'total':<{width}}{_fmt(report.total)}")
            _emit("".join(line + "\n" for line in lines), args.out)
    else:
        label = ClassLabel.parse(selector)
        value = class_concurrence(state, label)
        entries = _operator_entries(state, label) if args.verbose else None
        if args.format == "machine":
            doc = {
                "dims": list(state.dims),
                "state_digest": record.digest,
                "selector": str(label),
                "value": value,
            }
            if entries is not None:
                doc["operators"] = _operator_docs(entries)
            _emit(_machine(doc), args.out)
        else:
            lines = [f"{str(label):<{len(str(label)) + 2}}{_fmt(value)}"]
            if entries is not None:
                lines.extend(_operator_lines(entries))
            _emit("".join(line + "\n" for line in lines), args.out)
    return 0


# ---------------------------------------------------------------------------
# operator

def _select_operator(dims, label, pair_text, lambda_text):
    if pair_text is None and lambda_text is None:
        return enumerate_class_operators(dims, label)[0]
    ops = enumerate_class_operators(dims, label)
    default = ops[0]
    if label.kind is ClassKind.EPR:
        if pair_text is not None:
            pair = tuple(_parse_int_list(pair_text, "--pair"))
            if pair != label.subset:
                raise ValueError(f"EPR operators carry the pi/2 pair on the label subset {label.subset}")
        lam = _parse_lambda(lambda_text) if lambda_text is not None else default.lam
        return epr_operator(dims, label.subset, lam)
    pair = tuple(_parse_int_list(pair_text, "--pair")) if pair_text is not None else default.pi_half_pair
    lam = _parse_lambda(lambda_text) if lambda_text is not None else default.lam
    return ghz_operator(dims, label.subset, pair, lam)


def _cmd_operator(args) -> int:
    dims = _parse_int_list(args.dims, "--dims")
    label = ClassLabel.parse(args.label)
    label.validate_for_dims(dims)
    op = _select_operator(dims, label, args.pair, args.lam)

    part_name = args.part.strip()
    lowered = part_name.lower()
    match = _PART_RE.match(part_name)
    if lowered == "full":
        part_name, matrix = "full", op.matrix
    elif lowered in ("u", "l"):
        upper, lower = split_anti_diagonal(op)
        part_name, matrix = lowered.upper(), (upper if lowered == "u" else lower)
    elif match:
        components = split_sign_components(op)
        idx = int(match.group(1))
        if idx >= len(components):
            raise ValueError(f"component index {idx} out of range; operator has {len(components)} parts")
        part_name, matrix = f"P{idx}", components[idx]
    else:
        raise ValueError(f"unknown part {args.part!r}; expected full, U, L or P<i>")

    meta = {
        "dims": list(op.dims),
        "label": str(op.label),
        "pi_half_pair": list(op.pi_half_pair),
        "lambda": [list(p) for p in op.lam],
        "part": part_name,
    }
    if args.format == "machine":
        meta["matrix"] = [[_pair_json(v) for v in row] for row in matrix]
        _emit(_machine(meta), args.out)
    else:
        lines = [f"{key}: {value}" for key, value in meta.items()]
        cells = [[_fmt_complex(v) for v in row] for row in matrix]
        cell_width = max(len(c) for row in cells for c in row) + 2
        for row in cells:
            lines.append("".join(c.ljust(cell_width) for c in row).rstrip())
        _emit("".join(line + "\n" for line in lines), args.out)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="megs",
        description="Concurrence classes and the minimal entanglement generating set "
        "for pure multipartite states.",
        epilog="Subsystem indices are 0-based: a system of m parts is indexed 0..m-1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "machine"), default="text",
                       help="output format (default: text)")
        p.add_argument("--out", default=None, metavar="PATH",
                       help="write output to PATH instead of standard output")

    p_list = sub.add_parser("list", help="list the generating-set catalog for m subsystems")
    p_list.add_argument("m", type=int, help="number of subsystems (>= 2)")
    add_common(p_list)
    p_list.set_defaults(func=_cmd_list)

    p_make = sub.add_parser("make-state", help="write a canonical or seeded random state file")
    p_make.add_argument("kind", choices=("bell", "ghz", "w", "product", "random"))
    p_make.add_argument("--m", type=int, default=None, help="number of qubits (ghz/w)")
    p_make.add_argument("--dims", default=None, metavar="N1,N2,...",
                        help="subsystem dimensions (product/random)")
    p_make.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p_make.add_argument("--label", default=None, help="label stored in the file (default: kind)")
    p_make.add_argument("--format", choices=("text", "machine"), default="machine",
                        help="machine writes the JSON state file (default)")
    p_make.add_argument("--out", default=None, metavar="PATH")
    p_make.set_defaults(func=_cmd_make_state)

    p_conc = sub.add_parser("concurrence", help="evaluate class concurrences of a state file")
    p_conc.add_argument("state", metavar="STATEFILE")
    p_conc.add_argument("--label", default="ALL",
                        help='class selector, e.g. "EPR(0,1)" or "GHZ3(0,1,2)" (default: ALL)')
    p_conc.add_argument("--verbose", action="store_true",
                        help="include per-operator values and U/L or P_i sub-values")
    p_conc.add_argument("--normalize", action="store_true",
                        help="renormalize an unnormalized input state")
    add_common(p_conc)
    p_conc.set_defaults(func=_cmd_concurrence)

    p_op = sub.add_parser("operator", help="dump a class operator matrix")
    p_op.add_argument("--dims", required=True, metavar="N1,N2,...")
    p_op.add_argument("--label", required=True, help='e.g. "EPR(0,1)" or "GHZ3(0,1,2)"')
    p_op.add_argument("--pair", default=None, metavar="A,B",
                      help="pi/2 pair placement (GHZ; default: first enumerated)")
    p_op.add_argument("--lambda", dest="lam", default=None, metavar="K,L;K,L;...",
                      help="basis-index pair per active subsystem (default: first enumerated)")
    p_op.add_argument("--part", default="full",
                      help="full (default), U, L (EPR) or P<i> (GHZ)")
    add_common(p_op)
    p_op.set_defaults(func=_cmd_operator)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"megs: capacity error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"megs: i/o error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"megs: error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
