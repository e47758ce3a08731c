"""Command-line interface.

Exit codes: 0 ok, 2 bad input, 3 resource cap exceeded, 4 invariant failure.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import checks, fusion, grassmannian, multiplicity, weyl
from .errors import (
    InvalidCartanType,
    InvalidRootDatum,
    NegativeMultiplicity,
    NotDominant,
    ParityError,
    ResourceCapExceeded,
    WeylGroupTooLarge,
)
from .rootdatum import RootDatum, build_from_cartan_type, fundamental_coweight, langlands_dual, validate

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_INVARIANT = 0, 2, 3, 4
FORMATS = ("json", "tsv", "text")

CACHE_FORMAT = "satake-partition-cache"
CACHE_VERSION = 1


class InputError(Exception):
    pass


class InvariantFailure(Exception):
    pass


@dataclass(frozen=True)
class Config:
    cartan_type: str | None = None
    isogeny: str = "sc"
    datum_file: str | None = None
    height_bound: int = 8
    cache_path: str | None = None
    use_cache: bool = True
    output_format: str = "json"
    weyl_cap: int = weyl.DEFAULT_WEYL_CAP

    def __post_init__(self):
        if self.height_bound < 0:
            raise InputError("--height-bound must be nonnegative")
        if self.weyl_cap < 0:
            raise InputError("--weyl-cap must be nonnegative")
        if self.output_format not in FORMATS:
            raise InputError(f"--format must be one of {', '.join(FORMATS)}")

    def load_datum(self) -> RootDatum:
        if self.datum_file and self.cartan_type:
            raise InputError("give either --type or --file, not both")
        if self.datum_file:
            try:
                text = sys.stdin.read() if self.datum_file == "-" else Path(self.datum_file).read_text()
                d = RootDatum.loads(text)
            except OSError as exc:
                raise InputError(f"cannot read {self.datum_file}: {exc}") from None
            except json.JSONDecodeError as exc:
                raise InputError(f"{self.datum_file} is not valid JSON: {exc}") from None
        elif self.cartan_type:
            d = build_from_cartan_type(self.cartan_type, self.isogeny)
        else:
            raise InputError("a datum is required: --type/--isogeny or --file")
        validate(d)
        return d


# --- partition cache persistence -------------------------------------------


def datum_fingerprint(d: RootDatum) -> str:
    payload = json.dumps([d.n, d.simple_roots, d.simple_coroots], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:32]


def _checksum(data) -> str:
    return hashlib.sha256(json.dumps(data, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def read_cache_file(path: str | os.PathLike) -> dict[str, dict[str, int]]:
    """All cached entries, ``{fingerprint: {"c1,c2,...": value}}``.

    Anything unreadable, of another version, or failing its checksum is
    treated as an empty cache, with a note on stderr.
    """
    path = Path(path)
    if not path.exists():
        return {}
    try:
        doc = json.loads(path.read_text())
        if not isinstance(doc, dict) or doc.get("format") != CACHE_FORMAT:
            raise ValueError("not a partition cache")
        if doc.get("version") != CACHE_VERSION:
            raise ValueError(f"unsupported cache version {doc.get('version')!r}")
        data = doc["data"]
        if doc.get("checksum") != _checksum(data):
            raise ValueError("checksum mismatch")
        for table in data.values():
            for key, value in table.items():
                [int(x) for x in key.split(",")]
                if not isinstance(value, int) or value < 0:
                    raise ValueError("bad cache value")
        return data
    except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
        print(f"warning: ignoring cache {path}: {exc}", file=sys.stderr)
        return {}


def load_cache(path, d: RootDatum) -> int:
    table = read_cache_file(path).get(datum_fingerprint(d), {})
    entries = {tuple(int(x) for x in key.split(",")): value for key, value in table.items()}
    multiplicity.partition_cache(d).update(entries)
    return len(entries)


def save_cache(path, d: RootDatum) -> None:
    path = Path(path)
    data = read_cache_file(path) if path.exists() else {}
    snap = multiplicity.partition_cache(d).snapshot()
    data[datum_fingerprint(d)] = {",".join(map(str, k)): v for k, v in sorted(snap.items())}
    doc = {"format": CACHE_FORMAT, "version": CACHE_VERSION, "data": data, "checksum": _checksum(data)}
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(doc, fh, sort_keys=True)
    os.replace(tmp, path)


# --- coweight parsing and rendering -----------------------------------------


def parse_coweight(d: RootDatum, text: str):
    """``"1,0,-2"``, ``"fw:1"``, ``"2*fw:1+fw:2"`` or ``"0"`` (the zero coweight)."""
    total = [0] * d.n
    try:
        for term in text.replace(" ", "").split("+"):
            scale = 1
            if "*" in term and term.split("*", 1)[1].startswith("fw:"):
                s, term = term.split("*", 1)
                scale = int(s)
            if term.startswith("fw:"):
                vec = fundamental_coweight(d, int(term[3:]))
            elif term == "0":
                vec = (0,) * d.n
            else:
                vec = tuple(int(x) for x in term.split(","))
                if len(vec) != d.n:
                    raise ValueError(f"{term!r} has {len(vec)} coordinates, expected {d.n}")
            total = [a + scale * b for a, b in zip(total, vec)]
    except ValueError as exc:
        raise InputError(f"bad coweight {text!r}: {exc}") from None
    return tuple(total)


def key(v) -> str:
    return ",".join(str(x) for x in v)


def _emit(cfg: Config, payload, text_lines, tsv_rows) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2))
    elif cfg.output_format == "tsv":
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))
    else:
        for line in text_lines:
            print(line)


def _aligned(rows) -> list[str]:
    rows = [[str(x) for x in row] for row in rows]
    if not rows:
        return []
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def _render_dim(value) -> object:
    return "Empty" if value is None else value


# --- commands --------------------------------------------------------------


def cmd_dual(cfg: Config, d: RootDatum, args) -> int:
    dual = langlands_dual(d)
    if cfg.output_format == "json":
        print(json.dumps(dual.to_json()))
    else:
        C = dual.cartan
        _emit(
            cfg,
            None,
            [f"name: {dual.name}", f"rank_lattice: {dual.n}", "cartan:"] + _aligned(C),
            [["kind", "index", "coordinates"]]
            + [["root", i + 1, key(v)] for i, v in enumerate(dual.simple_roots)]
            + [["coroot", i + 1, key(v)] for i, v in enumerate(dual.simple_coroots)],
        )
    return EXIT_OK


def _dominant_input(d, text) -> tuple:
    v = parse_coweight(d, text)
    if not weyl.is_dominant(d, v):
        raise InputError(f"{text!r} = {v} is not dominant")
    return v


def cmd_mult(cfg: Config, d: RootDatum, args) -> int:
    lam = _dominant_input(d, args.lam)
    nu = parse_coweight(d, args.nu)
    if args.method == "freudenthal":
        m = multiplicity.weight_multiplicity_freudenthal(d, lam, nu, weyl_cap=cfg.weyl_cap)
    else:
        m = multiplicity.weight_multiplicity_kostant(d, lam, nu, weyl_cap=cfg.weyl_cap)
    _emit(
        cfg,
        {"lambda": list(lam), "nu": list(nu), "multiplicity": m},
        [str(m)],
        [["lambda", "nu", "multiplicity"], [key(lam), key(nu), m]],
    )
    return EXIT_OK


def cmd_table(cfg: Config, d: RootDatum, args) -> int:
    lam = _dominant_input(d, args.lam)
    table = multiplicity.weight_table(d, lam, weyl_cap=cfg.weyl_cap)
    total = sum(table.values())
    dim = multiplicity.weyl_dimension(d, lam)
    ok = total == dim
    rows = [(key(nu), m, weyl.doubled_height(d, nu)) for nu, m in table.items()]
    _emit(
        cfg,
        {
            "lambda": list(lam),
            "weights": {k: m for k, m, _ in rows},
            "total": total,
            "weyl_dimension": dim,
            "sum_rule": ok,
        },
        _aligned([("weight", "mult", "2ht")] + rows)
        + [f"total {total} {'=' if ok else '!='} Weyl dimension {dim}: {'PASS' if ok else 'FAIL'}"],
        [["weight", "multiplicity", "doubled_height"]] + [list(r) for r in rows] + [["#total", total, dim]],
    )
    if not ok:
        raise InvariantFailure(f"sum rule failed for lambda={lam}: {total} != {dim}")
    return EXIT_OK


def cmd_dims(cfg: Config, d: RootDatum, args) -> int:
    lam = _dominant_input(d, args.lam)
    nu = parse_coweight(d, args.nu)
    cap = cfg.weyl_cap
    row = {
        "lambda": list(lam),
        "nu": list(nu),
        "orbit_dim": grassmannian.orbit_dim(d, lam),
        "s_intersection_dim": _render_dim(grassmannian.s_intersection_dim(d, nu, lam, weyl_cap=cap)),
        "t_intersection_dim": _render_dim(grassmannian.t_intersection_dim(d, nu, lam, weyl_cap=cap)),
        "mv_cycle_count": grassmannian.mv_cycle_count(d, nu, lam, weyl_cap=cap),
    }
    names = list(row)
    _emit(
        cfg,
        row,
        [f"{k}: {key(v) if isinstance(v, list) else v}" for k, v in row.items()],
        [names, [key(v) if isinstance(v, list) else v for v in row.values()]],
    )
    return EXIT_OK


def cmd_tensor(cfg: Config, d: RootDatum, args) -> int:
    lam = _dominant_input(d, args.lam)
    mu = _dominant_input(d, args.mu)
    dec = fusion.tensor_decompose(d, lam, mu, weyl_cap=cfg.weyl_cap)
    dims = {nu: multiplicity.weyl_dimension(d, nu) for nu in dec}
    _emit(
        cfg,
        {"lambda": list(lam), "mu": list(mu), "decomposition": {key(nu): m for nu, m in dec.items()}},
        _aligned([("constituent", "mult", "dim")] + [(key(nu), m, dims[nu]) for nu, m in dec.items()]),
        [["constituent", "multiplicity", "dimension"]] + [[key(nu), m, dims[nu]] for nu, m in dec.items()],
    )
    return EXIT_OK


def _check_rows_output(cfg: Config, result: dict, extra_text=()) -> None:
    rows = result["checks"]
    _emit(
        cfg,
        result,
        list(extra_text)
        + _aligned([("check", "cases", "result")] + [(r["check"], r["cases"], "PASS" if r["passed"] else "FAIL") for r in rows]),
        [["check", "cases", "passed"]] + [[r["check"], r["cases"], int(r["passed"])] for r in rows],
    )


def _raise_on_failures(result: dict) -> None:
    failed = [r for r in result["checks"] if not r["passed"]]
    if failed:
        first = failed[0]
        raise InvariantFailure(f"check {first['check']} failed at {json.dumps(first['failures'][:1])}")


def cmd_report(cfg: Config, d: RootDatum, args) -> int:
    report = fusion.satake_report(d, cfg.height_bound, weyl_cap=cfg.weyl_cap)
    if cfg.output_format == "json":
        print(json.dumps(report, indent=2))
    else:
        objs = report["objects"]
        if cfg.output_format == "tsv":
            print("\t".join(["lambda", "dim", "dual", "grading"]))
            for o in objs:
                grading = " ".join(f"{k}:{v}" for k, v in o["grading"].items())
                print("\t".join([key(o["lambda"]), str(o["dim"]), key(o["dual"]), grading]))
            print("\t".join(["lambda", "mu", "decomposition"]))
            for t in report["tensor"]:
                dec = " ".join(f"{k}:{v}" for k, v in t["decomposition"].items())
                print("\t".join([key(t["lambda"]), key(t["mu"]), dec]))
        else:
            print("objects")
            for line in _aligned(
                [("lambda", "dim", "dual", "grading")]
                + [
                    (key(o["lambda"]), o["dim"], key(o["dual"]), " ".join(f"{k}:{v}" for k, v in o["grading"].items()))
                    for o in objs
                ]
            ):
                print("  " + line)
            print("tensor products")
            for t in report["tensor"]:
                dec = " + ".join(f"{v}*[{k}]" if v > 1 else f"[{k}]" for k, v in t["decomposition"].items())
                print(f"  [{key(t['lambda'])}] x [{key(t['mu'])}] = {dec}")
            print("checks")
            for line in _aligned([(r["check"], r["cases"], "PASS" if r["passed"] else "FAIL") for r in report["checks"]]):
                print("  " + line)
    _raise_on_failures(report)
    return EXIT_OK


def cmd_check(cfg: Config, d: RootDatum, args) -> int:
    result = checks.run_invariant_suite(d, cfg.height_bound, weyl_cap=cfg.weyl_cap)
    _check_rows_output(cfg, result)
    _raise_on_failures(result)
    return EXIT_OK


COMMANDS = {
    "dual": (cmd_dual, "print the Langlands dual root datum as JSON"),
    "mult": (cmd_mult, "weight multiplicity m_lambda(nu)"),
    "table": (cmd_table, "full weight table of V_lambda with a sum-rule footer"),
    "dims": (cmd_dims, "orbit and semi-infinite intersection dimensions"),
    "tensor": (cmd_tensor, "decompose V_lambda (x) V_mu"),
    "report": (cmd_report, "all objects up to --height-bound with cross-checks"),
    "check": (cmd_check, "run the invariant suite up to --height-bound"),
}


def _common_flags(defaults: bool) -> argparse.ArgumentParser:
    S = argparse.SUPPRESS
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("datum and output")
    g.add_argument("--type", dest="cartan_type", default=None if defaults else S, help="Cartan type, e.g. A2, B2, G2")
    g.add_argument("--isogeny", default="sc" if defaults else S, help="sc (simply connected) or adjoint")
    g.add_argument("--file", dest="datum_file", default=None if defaults else S, help="root datum JSON file, or - for stdin")
    g.add_argument("--format", dest="output_format", choices=FORMATS, default="json" if defaults else S)
    g.add_argument("--cache", dest="cache_path", default=None if defaults else S, help="partition-function cache file")
    g.add_argument("--no-cache", dest="no_cache", action="store_true", default=False if defaults else S)
    g.add_argument("--height-bound", type=int, default=8 if defaults else S, help="doubled-height bound (report, check)")
    g.add_argument("--weyl-cap", type=int, default=weyl.DEFAULT_WEYL_CAP if defaults else S)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satake",
        description="Combinatorics of the geometric Satake correspondence.",
        parents=[_common_flags(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, parents=[_common_flags(False)])
        if name in ("mult", "table", "dims", "tensor"):
            sp.add_argument("--lam", required=True, help="dominant coweight, e.g. 1,1 or fw:1+fw:2")
        if name in ("mult", "dims"):
            sp.add_argument("--nu", required=True, help="coweight")
        if name == "tensor":
            sp.add_argument("--mu", required=True, help="dominant coweight")
        if name == "mult":
            sp.add_argument("--method", choices=("kostant", "freudenthal"), default="kostant")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = Config(
            cartan_type=args.cartan_type,
            isogeny=args.isogeny,
            datum_file=args.datum_file,
            height_bound=args.height_bound,
            cache_path=args.cache_path,
            use_cache=not args.no_cache,
            output_format=args.output_format,
            weyl_cap=args.weyl_cap,
        )
        multiplicity.set_caching(cfg.use_cache)
        d = cfg.load_datum()
        if cfg.use_cache and cfg.cache_path:
            load_cache(cfg.cache_path, d)
        handler = COMMANDS[args.command][0]
        code = handler(cfg, d, args)
        if cfg.use_cache and cfg.cache_path:
            save_cache(cfg.cache_path, d)
        return code
    except (InputError, InvalidRootDatum, InvalidCartanType, NotDominant) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, InvalidRootDatum):
            for issue in exc.issues:
                print(f"  {issue}", file=sys.stderr)
        return EXIT_INPUT
    except (WeylGroupTooLarge, ResourceCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvariantFailure, NegativeMultiplicity, ParityError, ArithmeticError) as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    finally:
        multiplicity.set_caching(True)


if __name__ == "__main__":
    sys.exit(main())
