"""Command-line surface: matrix I/O, constructions, analysis, verification.

Exit codes: 0 success (and verification PASS), 1 verification failure,
2 parse/usage error, 3 codeword sweep too large, 4 construction error,
5 enumeration budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constructions import (
    DTowerInput,
    construction_a,
    construction_c_star,
    construction_d,
    d_bar_is_lattice,
    d_bar_span,
    simplified_d,
    vladut_special_d,
)
from .errors import (
    EnumerationBudgetExceeded,
    HypothesesFail,
    ParseError,
    RankTooLarge,
    ToolkitError,
)
from .gf2core import Code, min_distance, min_weight_codewords
from .gadgets import (
    build_cor23,
    build_cor25,
    check_thm22_hypotheses,
    golay_lp_check,
    verify_cor23,
    verify_cor25,
    verify_cstar_collapse,
    verify_dbar_schur,
    verify_thm24,
)
from .matio import (
    format_z_matrix,
    load_code_tower,
    load_matrix_tower,
    read_matrix,
)
from .zlattice import DEFAULT_BUDGET, DEFAULT_DELTA, Lattice, determinant, shortest_vectors

THEOREMS = (
    "thm22",
    "cor23",
    "thm24",
    "cor25",
    "cstar-collapse",
    "dbar-schur",
    "golay-lp",
)
CONSTRUCTIONS = ("a", "d", "d-special", "simplified-d", "c-star", "d-bar")
TEXT_VECTOR_CAP = 1000


@dataclass
class RunConfig:
    """Validated command parameters, normalized before any computation."""

    command: str
    path: Optional[str] = None
    construction: Optional[str] = None
    theorem: Optional[str] = None
    tower: Optional[str] = None
    a: Optional[int] = None
    m: Optional[int] = None
    p: Fraction = Fraction(2)
    seed: int = 0
    delta: Fraction = DEFAULT_DELTA
    budget: int = DEFAULT_BUDGET
    full_enum: bool = False
    workers: int = 1
    out: Optional[str] = None
    fmt: Optional[str] = None
    no_timing: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        g = lambda name, default=None: getattr(args, name, default)
        return cls(
            command=args.command,
            path=g("path"),
            construction=g("construction"),
            theorem=g("theorem"),
            tower=g("tower"),
            a=g("a"),
            m=g("m"),
            p=g("p", Fraction(2)),
            seed=g("seed", 0),
            delta=g("delta", DEFAULT_DELTA),
            budget=g("budget", DEFAULT_BUDGET),
            full_enum=g("full_enum", False),
            workers=g("workers", 1),
            out=g("out"),
            fmt=g("fmt"),
            no_timing=g("no_timing", False),
        )


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from e


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codelattice",
        description="Exact lattices from binary linear codes: build, analyze, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, timing: bool = False) -> None:
        p.add_argument("--out", help="write the main output to this file")
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default=None)
        if timing:
            p.add_argument(
                "--no-timing",
                action="store_true",
                help="omit runtime fields for byte-stable output",
            )

    p_info = sub.add_parser("code-info", help="n, k, d, kissing number of an F2 code")
    p_info.add_argument("path")
    common(p_info)

    p_con = sub.add_parser("construct", help="build a lattice and print its HNF basis")
    p_con.add_argument("path", help="F2 matrix file, or a tower manifest for d/d-special/d-bar")
    p_con.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    p_con.add_argument("--a", type=int, default=None, help="expected scaling depth (validated)")
    p_con.add_argument("--seed", type=int, default=0)
    common(p_con)

    p_an = sub.add_parser("lattice-analyze", help="exact shortest vectors of a Z matrix")
    p_an.add_argument("path")
    p_an.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_an.add_argument("--delta", type=_fraction, default=DEFAULT_DELTA)
    p_an.add_argument("--workers", type=int, default=1)
    common(p_an)

    p_ver = sub.add_parser("verify", help="run a verification target, exit 0 iff PASS")
    p_ver.add_argument("theorem", choices=THEOREMS)
    p_ver.add_argument("--m", type=int, default=None)
    p_ver.add_argument("--p", type=_fraction, default=Fraction(2))
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--delta", type=_fraction, default=DEFAULT_DELTA)
    p_ver.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_ver.add_argument("--full-enum", dest="full_enum", action="store_true")
    p_ver.add_argument("--workers", type=int, default=1)
    p_ver.add_argument("--tower", help="tower manifest for dbar-schur (default: bundled)")
    common(p_ver, timing=True)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if getattr(args, "budget", 1) < 1:
        parser.error("--budget must be positive")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be positive")
    delta = getattr(args, "delta", DEFAULT_DELTA)
    if not Fraction(1, 4) < delta < 1:
        parser.error("--delta must lie strictly between 1/4 and 1")
    if args.command == "verify":
        if args.p < 1:
            parser.error("--p must be >= 1")
        if args.theorem == "golay-lp" and args.p > 2:
            parser.error("golay-lp requires 1 <= p <= 2")
        if args.theorem in ("thm22", "cor23") and args.m is not None and args.m <= 16:
            parser.error("thm22/cor23 require m > 16")
        if args.theorem in ("thm24", "cor25") and args.m is not None and args.m < 1:
            parser.error("thm24/cor25 require m >= 1")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _cmd_code_info(cfg: RunConfig) -> int:
    M = read_matrix(cfg.path)
    if not hasattr(M, "mul"):
        raise ParseError(f"{cfg.path}: expected an F2 matrix")
    C = Code(M)
    d = min_distance(C)
    S = min_weight_codewords(C)
    sample = [list(c.coords()) for c in S[:5]]
    rep = {
        "n": C.n,
        "k": C.dimension,
        "d": d,
        "kappa0": len(S),
        "min_weight_sample": sample,
    }
    fmt = cfg.fmt or "text"
    if fmt == "json":
        _emit(_dump_json(rep), cfg.out)
    else:
        lines = [
            f"block length n = {C.n}",
            f"dimension    k = {C.dimension}",
            f"min distance d = {d}",
            f"kissing kappa0 = {len(S)}",
        ]
        for c in sample:
            lines.append("  min-weight word: " + " ".join(str(e) for e in c))
        _emit("\n".join(lines), cfg.out)
    return 0


def _code_from_file(path: str) -> Code:
    M = read_matrix(path)
    if not hasattr(M, "mul"):
        raise ParseError(f"{path}: expected an F2 matrix")
    return Code(M)


def _cmd_construct(cfg: RunConfig) -> int:
    name = cfg.construction
    extras: dict = {}
    if name == "a":
        L = construction_a(_code_from_file(cfg.path))
    elif name == "simplified-d":
        L = simplified_d(_code_from_file(cfg.path))
    elif name == "c-star":
        L = construction_c_star(_code_from_file(cfg.path))
    elif name == "d":
        _, blocks = load_matrix_tower(cfg.path)
        inp = DTowerInput(tuple(blocks))
        if cfg.a is not None and cfg.a != inp.a:
            raise ParseError(f"manifest implies a = {inp.a}, got --a {cfg.a}")
        L = construction_d(inp, strict=True)
    elif name == "d-special":
        _, blocks = load_matrix_tower(cfg.path)
        if len(blocks) < 2:
            raise ParseError("d-special needs at least two blocks")
        mids = blocks[1:-1]
        for i, mid in enumerate(mids, start=1):
            if mid.k != 1:
                raise ParseError(f"middle block {i} must be a single column")
        a = len(blocks) - 1
        if cfg.a is not None and cfg.a != a:
            raise ParseError(f"manifest implies a = {a}, got --a {cfg.a}")
        L = vladut_special_d(blocks[0], [m.column(0) for m in mids], blocks[-1], a)
    elif name == "d-bar":
        T = load_code_tower(cfg.path)
        L = d_bar_span(T)
        ok, wit = d_bar_is_lattice(T)
        extras["is_lattice"] = ok
        if wit is not None:
            extras["witness"] = list(wit)
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown construction {name}")

    det = determinant(L)
    matrix_text = format_z_matrix(L.n, L.basis)
    rep = {
        "construction": name,
        "n": L.n,
        "rank": L.rank,
        "determinant": str(det),
        **extras,
    }
    fmt = cfg.fmt or "text"
    if fmt == "json":
        rep["basis"] = [list(col) for col in L.basis]
        if cfg.out:
            _emit(matrix_text, cfg.out)
        _emit(_dump_json(rep), None)
    else:
        if cfg.out:
            _emit(matrix_text, cfg.out)
            lines = [f"{k}: {v}" for k, v in rep.items()]
            _emit("\n".join(lines), None)
        else:
            sys.stderr.write("".join(f"# {k}: {v}\n" for k, v in rep.items()))
            _emit(matrix_text, None)
    return 0


def _cmd_lattice_analyze(cfg: RunConfig) -> int:
    parsed = read_matrix(cfg.path)
    if hasattr(parsed, "mul"):
        raise ParseError(f"{cfg.path}: expected a Z matrix, found an F2 matrix")
    rows, _, columns = parsed
    L = Lattice.from_generators(rows, columns)
    sv = shortest_vectors(L, budget=cfg.budget, delta=cfg.delta)
    fmt = cfg.fmt or "text"
    if fmt == "json":
        _emit(_dump_json(sv.to_dict()), cfg.out)
    else:
        lines = [
            f"rank = {L.rank} of n = {L.n}",
            f"lambda1^2 = {sv.lambda1_sq}",
            f"kappa2 = {sv.kissing}",
        ]
        for v in sv.vectors[:TEXT_VECTOR_CAP]:
            lines.append("  " + " ".join(str(e) for e in v))
        if sv.kissing > TEXT_VECTOR_CAP:
            lines.append(f"  ... ({sv.kissing - TEXT_VECTOR_CAP} more)")
        _emit("\n".join(lines), cfg.out)
    return 0


def _report_text(d: dict) -> str:
    lines = [f"theorem: {d['theorem']}"]
    if d["params"]:
        lines.append("params: " + " ".join(f"{k}={v}" for k, v in d["params"].items()))
    if d["hypotheses"]:
        lines.append("hypotheses:")
        for h in d["hypotheses"]:
            tag = "pass" if h["pass"] else "FAIL"
            lines.append(f"  [{tag}] {h['name']}")
            if "witness" in h:
                lines.append(f"         witness: {h['witness']}")
    if d["conclusions"]:
        lines.append("conclusions:")
        for c in d["conclusions"]:
            tag = "pass" if c["pass"] else "FAIL"
            lines.append(f"  [{tag}] {c['claim']}")
            if "certificate" in c:
                lines.append(f"         certificate: {c['certificate']}")
    if d["exact_values"]:
        lines.append("exact values:")
        for k, v in d["exact_values"].items():
            lines.append(f"  {k} = {v}")
    ok = all(h["pass"] for h in d["hypotheses"]) and all(
        c["pass"] for c in d["conclusions"]
    )
    tail = f" ({d['runtime_ms']} ms)" if "runtime_ms" in d else ""
    lines.append(("verdict: PASS" if ok else "verdict: FAIL") + tail)
    return "\n".join(lines)


def _cmd_verify(cfg: RunConfig) -> int:
    t = cfg.theorem
    if t == "thm22":
        g, _, _ = build_cor23(cfg.m if cfg.m is not None else 17, cfg.seed)
        rep = check_thm22_hypotheses(g)
    elif t == "cor23":
        rep = verify_cor23(
            cfg.m if cfg.m is not None else 17,
            cfg.seed,
            full_enum=cfg.full_enum,
            budget=cfg.budget,
            workers=cfg.workers,
        )
    elif t == "thm24":
        rep = verify_thm24(build_cor25(cfg.m if cfg.m is not None else 4), cfg.p)
    elif t == "cor25":
        rep = verify_cor25(cfg.m if cfg.m is not None else 4, cfg.p)
    elif t == "cstar-collapse":
        rep = verify_cstar_collapse(seed=cfg.seed)
    elif t == "dbar-schur":
        T = load_code_tower(cfg.tower) if cfg.tower else None
        rep = verify_dbar_schur(T)
    else:  # golay-lp
        rep = golay_lp_check(cfg.p, budget=cfg.budget)
    d = rep.to_dict(include_timing=not cfg.no_timing)
    fmt = cfg.fmt or "json"
    if fmt == "json":
        _emit(_dump_json(d), cfg.out)
    else:
        _emit(_report_text(d), cfg.out)
    return 0 if rep.passed else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    cfg = RunConfig.from_args(args)
    handlers = {
        "code-info": _cmd_code_info,
        "construct": _cmd_construct,
        "lattice-analyze": _cmd_lattice_analyze,
        "verify": _cmd_verify,
    }
    try:
        return handlers[cfg.command](cfg)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RankTooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except EnumerationBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 5
    except HypothesesFail as e:
        print(f"error: {e}", file=sys.stderr)
        if e.report is not None:
            print(_dump_json(e.report.to_dict(include_timing=False)), file=sys.stderr)
        return 1
    except (ToolkitError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
