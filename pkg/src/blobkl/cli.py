"""Command-line front end.

Every subcommand is a method of :class:`Commands` marked with
``@command("api", ...)``. The ``api`` router runs each call through the
``logging`` and ``pydantic`` plugins, and the argparse tree is built from
``api.describe()``, so adding a command means adding one method.

Exit codes: 0 on success, 2 for rejected input (the stderr line names the
flag), 3 when an internal identity fails (a JSON reproducer goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from blobkl import __version__
from blobkl.affine_weyl import (
    AffineElement,
    Word,
    evaluate_word,
    format_word,
    parse_element,
    parse_word,
    sort_key,
)
from blobkl.alcove import (
    alcove_path,
    graded_dim_reports,
    hyperplane_sequence,
    point,
    principal_word,
    separating_hyperplanes,
    verify_graded_dim_theorem,
    w_of,
)
from blobkl.blob_comb import (
    count_std_same_residue,
    dominant_tableau,
    enumerate_std_same_residue,
    graded_cell_dim,
    graded_cell_dims,
    residue_sequence,
    tableau_degree,
)
from blobkl.commands import CommandRouter, CommandSet, command
from blobkl.config import FORMATS, RunConfig, resolve_options
from blobkl.corpus import SUITES, run_suite
from blobkl.dihedral_blob import (
    blob_graded_decomposition,
    blob_vs_soergel,
    d_tableau_word,
    degree_zero_cells,
    fast_degree,
    tl_decomposition,
)
from blobkl.errors import ConsistencyError, InputError, UnsupportedError
from blobkl.hecke import (
    KLTable,
    bott_samelson,
    bott_samelson_bruteforce,
    kl_char0,
    pkl_dihedral,
    resubstituted_coefficients,
)
from blobkl.laurent import LaurentPoly
from blobkl.output import Report, render

__all__ = ["Commands", "build_parser", "run", "main"]

logger = logging.getLogger(__name__)

_FLAGS: Dict[str, Dict[str, Any]] = {
    "e": {"type": int, "help": "quantum characteristic (e >= 2)"},
    "l": {"type": int, "help": "level: number of components"},
    "kappa": {"help": "multicharge, strictly increasing residues: 0,2,4,6"},
    "n": {"type": int, "help": "size of the Temperley-Lieb algebra"},
    "lambda": {"dest": "lam", "help": "column heights of lambda: 1,13,1,8"},
    "mu": {"help": "column heights of mu"},
    "w": {"help": "group element: 5s, e, a window [2,1] or a word"},
    "p": {"type": int, "help": "characteristic, 0 or a prime"},
    "word": {"help": "word such as 's1 s3 s0', '130' or 'ststs'"},
    "seed": {"type": int, "help": "corpus seed"},
    "suite": {"choices": sorted(SUITES), "help": "verification suite"},
    "instances": {"type": int, "help": "number of corpus instances"},
    "workers": {"type": int, "help": "worker processes for verify"},
    "strategy": {"choices": ("highest", "lowest"), "help": "hook order for d_t words"},
    "cross-check": {
        "dest": "cross_check",
        "action": "store_true",
        "default": None,
        "help": "compare against the independent computation",
    },
    "count-only": {
        "dest": "count_only",
        "action": "store_true",
        "default": None,
        "help": "print only the number of tableaux",
    },
    "cap": {"type": int, "help": "enumeration cap (default: $BLOBKL_CAP or 2^20)"},
    "format": {"choices": FORMATS, "help": "output format (default: json)"},
}

_COMMON_FLAGS = ("cap", "format")


def _element(config: RunConfig) -> Tuple[AffineElement, Optional[Word]]:
    if config.word is None and config.w is None:
        raise InputError(f"--w or --word is required for {config.subcommand}")
    if config.word is None:
        assert config.w is not None
        return parse_element(config.w, config.l), None
    word = parse_word(config.word, config.l)
    element = evaluate_word(word, config.l)
    if config.w is not None and parse_element(config.w, config.l) != element:
        raise InputError(f"--w {config.w} and --word {config.word!r} name different elements")
    return element, word


def _kl_report(name: str, table: KLTable) -> Report:
    return Report(
        command=name,
        meta={"w": table.w, "p": table.p},
        columns=["x", "h"],
        rows=[{"x": x, "h": h} for x, h in table.sorted_rows()],
        extra={"aux": [{"y": y, "grk": c} for y, c in table.sorted_aux()]},
    )


def _check_resubstitution(table: KLTable) -> None:
    expected = bott_samelson(table.word, table.w.level)
    got = resubstituted_coefficients(table)
    if got != dict(expected.items()):
        raise ConsistencyError(
            f"aux * h does not reproduce the Bott-Samelson element of {table.w}",
            instance={"w": str(table.w), "p": table.p, "word": list(table.word)},
        )


class Commands(CommandSet):
    """The ``blobkl`` subcommands."""

    __slots__ = ("api",)

    def __init__(self) -> None:
        self.api = (
            CommandRouter(self, name="api", prefix="cmd_")
            .plug("logging", enabled=False)
            .plug("pydantic")
        )

    @command("api", help="Kazhdan-Lusztig table h_{x,w}", flags=("l", "w", "word", "cross-check"))
    def cmd_kl(self, config: RunConfig) -> Report:
        """Characteristic-zero KL polynomials of every x below w."""
        element, word = _element(config)
        table = kl_char0(element, word)
        if config.cross_check:
            _check_resubstitution(table)
        return _kl_report("kl", table)

    @command("api", help="p-KL table in level 2", flags=("w", "word", "p", "cross-check"))
    def cmd_pkl(self, config: RunConfig) -> Report:
        """p-canonical polynomials of a dihedral element."""
        element, _ = _element(config)
        table = pkl_dihedral(element, config.p)
        if config.cross_check:
            _check_resubstitution(table)
        return _kl_report("pkl", table)

    @command("api", help="Bott-Samelson expansion of a word", flags=("l", "word", "cross-check"))
    def cmd_bs(self, config: RunConfig) -> Report:
        config.require("word")
        assert config.word is not None
        word = parse_word(config.word, config.l)
        product = bott_samelson(word, config.l)
        meta: Dict[str, Any] = {"word": format_word(word), "l": config.l, "terms": len(product)}
        if config.cross_check:
            if product != bott_samelson_bruteforce(word, config.l):
                raise ConsistencyError(
                    f"Bott-Samelson product of {format_word(word)} disagrees with the subword sum",
                    instance={"l": config.l, "word": list(word)},
                )
            meta["oracle"] = "equal"
        rows = [
            {"x": x, "coefficient": c}
            for x, c in sorted(product.items(), key=lambda item: sort_key(item[0]), reverse=True)
        ]
        return Report("bs", meta=meta, columns=["x", "coefficient"], rows=rows)

    @command(
        "api",
        help="tableaux sharing the residue sequence of lambda",
        flags=("e", "l", "kappa", "lambda", "mu", "strategy", "count-only", "cross-check"),
    )
    def cmd_tableaux(self, config: RunConfig) -> Report:
        """List Std_lambda with degrees; in level 2 also the d_t words."""
        params, lam = config.params(), config.multipartition()
        residues = list(residue_sequence(dominant_tableau(lam), params))
        meta: Dict[str, Any] = {"lambda": lam, "residues": residues}
        if config.count_only:
            meta["count"] = count_std_same_residue(lam, params)
            return Report("tableaux", meta=meta)
        tableaux = enumerate_std_same_residue(lam, params, cap=config.cap)
        if config.mu is not None:
            mu = config.second_multipartition()
            tableaux = [t for t in tableaux if t.shape() == mu]
        level_two = params.l == 2
        columns = ["t", "shape", "degree"]
        if level_two:
            columns.append("d_t")
        rows: List[Dict[str, Any]] = []
        for t in tableaux:
            degree = tableau_degree(t, params)
            row: Dict[str, Any] = {"t": t, "shape": t.shape(), "degree": degree}
            if level_two:
                row["d_t"] = format_word(d_tableau_word(t, lam, params, config.strategy))
                if config.cross_check and fast_degree(t, lam, params) != degree:
                    raise ConsistencyError(
                        f"fast degree of {t} differs from its tableau degree {degree}",
                        instance={"tableau": list(t.components), **config.dump()},
                    )
            rows.append(row)
        meta["count"] = len(rows)
        return Report("tableaux", meta=meta, columns=columns, rows=rows)

    @command(
        "api",
        help="graded cell dimensions gdim Delta_lambda(mu)",
        flags=("e", "l", "kappa", "lambda", "mu", "cross-check"),
    )
    def cmd_celldim(self, config: RunConfig) -> Report:
        params, lam = config.params(), config.multipartition()
        if config.mu is not None:
            mu = config.second_multipartition()
            if not config.cross_check:
                gdim = graded_cell_dim(lam, mu, params, cap=config.cap)
                return Report("celldim", meta={"lambda": lam, "mu": mu, "gdim": gdim})
            report = verify_graded_dim_theorem(lam, mu, params, cap=config.cap)
            if not report.equal:
                raise ConsistencyError(
                    f"gdim {report.lhs} differs from the Bott-Samelson coefficient {report.rhs}",
                    instance=config.dump(),
                )
            meta = {"lambda": lam, "mu": mu, "gdim": report.lhs, "bs": report.rhs}
            return Report("celldim", meta=meta)
        dims = graded_cell_dims(lam, params, cap=config.cap)
        total = LaurentPoly.zero()
        for dim in dims.values():
            total = total + dim * dim
        meta = {"lambda": lam, "truncation_dim": total}
        if not config.cross_check:
            rows = [{"mu": mu, "gdim": dims[mu]} for mu in sorted(dims, key=lambda m: m.heights)]
            return Report("celldim", meta=meta, columns=["mu", "gdim"], rows=rows)
        reports = graded_dim_reports(lam, params, cap=config.cap)
        bad = [r for r in reports if not r.equal]
        if bad:
            raise ConsistencyError(
                f"gdim at mu = {bad[0].mu} differs from the Bott-Samelson coefficient",
                instance={"mu": list(bad[0].mu.heights), **config.dump()},
            )
        rows = [
            {"mu": r.mu, "w": w_of(r.mu, params), "gdim": r.lhs, "bs": r.rhs} for r in reports
        ]
        return Report("celldim", meta=meta, columns=["mu", "w", "gdim", "bs"], rows=rows)

    @command(
        "api",
        help="hyperplane sequence and principal word of lambda",
        flags=("e", "l", "kappa", "lambda"),
    )
    def cmd_alcove(self, config: RunConfig) -> Report:
        """Alcove geometry of the dominant path of lambda."""
        params, lam = config.params(), config.multipartition()
        sequence = hyperplane_sequence(lam, params)
        word = principal_word(lam, params)
        path = alcove_path(lam, params)
        element = w_of(lam, params)
        if path.end != element:
            raise ConsistencyError(
                f"principal word ends at {path.end}, folding gives {element}",
                instance=config.dump(),
            )
        if set(sequence.hyperplanes) != separating_hyperplanes(lam, params):
            raise ConsistencyError(
                "hyperplane sequence differs from the separating hyperplanes",
                instance=config.dump(),
            )
        meta: Dict[str, Any] = {
            "lambda": lam,
            "point": list(point(lam, params)),
            "w": format_word(word),
            "element": element,
            "window": list(element.window),
            "length": len(word),
            "levels": list(sequence.levels),
        }
        rows = [
            {"level": k, "hyperplane": h, "letter": f"s{letter}"}
            for (h, k), letter in zip(sequence.entries, word)
        ]
        return Report("alcove", meta=meta, columns=["level", "hyperplane", "letter"], rows=rows)

    @command(
        "api",
        help="level-2 graded decomposition numbers",
        flags=("e", "kappa", "lambda", "n", "p", "cross-check"),
    )
    def cmd_decomp(self, config: RunConfig) -> Report:
        """Blob decomposition numbers d_{mu,lambda}, or with --n alone the
        Temperley-Lieb table of TL_n."""
        if config.lam is None and config.n is not None:
            return self._tl_report(config)
        params, lam = config.params(), config.multipartition()
        table = blob_graded_decomposition(lam, params, config.p, cap=config.cap)
        meta: Dict[str, Any] = {"lambda": lam, "p": config.p, "w": table.w[lam]}
        columns = ["mu", "w", "d", "gdimL", "celldim"]
        rows: List[Dict[str, Any]] = [
            {
                "mu": mu,
                "w": table.w[mu],
                "d": table.d(mu),
                "gdimL": table.simple_dims[mu],
                "celldim": table.cell_dims[mu],
            }
            for mu in table.order
        ]
        extra: Dict[str, Any] = {}
        if table.w[lam].length() >= 2:
            cells = degree_zero_cells(lam, params, cap=config.cap)
            extra["degree_zero"] = [
                {"mu": mu, "w": str(cell.w), "two_col": str(cell.two_col), "count": cell.count}
                for mu, cell in sorted(cells.items(), key=lambda item: -item[1].w.k)
            ]
        if config.cross_check:
            for mu in table.order:
                if table.resubstituted(mu) != table.cell_dims[mu]:
                    raise ConsistencyError(
                        f"sum of d * gdimL misses gdim Delta({mu})",
                        instance={"mu": list(mu.heights), **config.dump()},
                    )
            verdicts = {v.mu: v for v in blob_vs_soergel(lam, params, config.p, cap=config.cap)}
            findings = [v for v in verdicts.values() if not v.equal]
            if findings and config.p != 2:
                first = findings[0]
                raise ConsistencyError(
                    f"d at mu = {first.mu} is {first.blob}, p-KL gives {first.soergel}",
                    instance={"mu": list(first.mu.heights), **config.dump()},
                )
            columns += ["pkl", "equal"]
            for row in rows:
                verdict = verdicts[row["mu"]]
                row["pkl"], row["equal"] = verdict.soergel, verdict.equal
            meta["findings"] = len(findings)
        return Report("decomp", meta=meta, columns=columns, rows=rows, extra=extra)

    def _tl_report(self, config: RunConfig) -> Report:
        assert config.n is not None
        table = tl_decomposition(config.n, config.p)
        rows = [
            {"lambda": str(lam), "mu": str(mu), "d": table.d(lam, mu)}
            for lam in table.partitions()
            for mu in table.partitions()
        ]
        meta = {"n": config.n, "p": config.p}
        return Report("decomp", meta=meta, columns=["lambda", "mu", "d"], rows=rows)

    @command(
        "api",
        help="run a seeded verification suite",
        flags=("suite", "seed", "instances", "workers"),
    )
    def cmd_verify(self, config: RunConfig) -> Report:
        config.require("suite")
        assert config.suite is not None
        result = run_suite(
            config.suite,
            seed=config.seed,
            instances=config.instances,
            workers=config.workers,
            cap=config.cap,
        )
        meta = {
            "suite": result.suite,
            "version": result.version,
            "seed": result.seed,
            "instances": len(result.outcomes),
            "summary": result.summary(),
        }
        rows = [
            {"index": o.index, "equal": o.equal, "finding": o.finding, "detail": o.detail}
            for o in result.outcomes
        ]
        extra = {
            "reproducers": [
                {"index": o.index, "instance": o.instance}
                for o in result.outcomes
                if not o.equal
            ]
        }
        report = Report(
            "verify",
            meta=meta,
            columns=["index", "equal", "finding", "detail"],
            rows=rows,
            extra=extra,
        )
        if not result.ok:
            report.exit_code = 3
        return report


# ----------------------------------------------------------------------
# argparse front end
# ----------------------------------------------------------------------
def build_parser(commands: Commands) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blobkl",
        description="KL polynomials, blob algebra cell dimensions and decomposition numbers.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="COMMAND")
    for name, info in commands.api.describe().items():
        subparser = sub.add_parser(name, help=info["help"], description=info["doc"] or None)
        for flag in dict.fromkeys((*info["flags"], *_COMMON_FLAGS)):
            subparser.add_argument(f"--{flag}", **_FLAGS[flag])
    return parser


def _flag_of(loc: Sequence[Any]) -> str:
    names = [str(part) for part in loc if part != "config"]
    if not names:
        return "input"
    name = names[0]
    return "--lambda" if name in ("lam", "lambda") else "--" + name.replace("_", "-")


def _setup_logging(verbose: int) -> None:
    if not verbose:
        return
    logging.basicConfig(
        level=logging.DEBUG if verbose > 1 else logging.INFO,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _dump(config: RunConfig, exc: ConsistencyError) -> str:
    payload = {"error": str(exc), "config": config.dump(), "instance": exc.instance}
    return json.dumps(payload, sort_keys=True, default=str)


def run(argv: Optional[Sequence[str]] = None) -> int:
    commands = Commands()
    parser = build_parser(commands)
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    options = vars(namespace)
    verbose = options.pop("verbose")
    _setup_logging(verbose)
    commands.commandset.configure("api:logging", enabled=bool(verbose))
    prefix = f"blobkl {options['subcommand']}: error:"
    try:
        config = RunConfig.model_validate(resolve_options(options))
    except ValidationError as exc:
        err = exc.errors()[0]
        sys.stderr.write(f"{prefix} {_flag_of(err['loc'])}: {err['msg']}\n")
        return 2
    except InputError as exc:
        sys.stderr.write(f"{prefix} {exc}\n")
        return 2
    try:
        report = commands.api.call(config.subcommand, config=config)
    except ConsistencyError as exc:
        logger.error("%s: %s", config.subcommand, exc)
        sys.stderr.write(f"blobkl {config.subcommand}: consistency failure: {exc}\n")
        sys.stderr.write(_dump(config, exc) + "\n")
        return 3
    except ValidationError as exc:
        err = exc.errors()[0]
        sys.stderr.write(f"{prefix} {_flag_of(err['loc'])}: {err['msg']}\n")
        return 2
    except (InputError, UnsupportedError) as exc:
        sys.stderr.write(f"{prefix} {exc}\n")
        return 2
    sys.stdout.write(render(report, config.format))
    if report.exit_code:
        sys.stderr.write(f"blobkl {config.subcommand}: {report.meta.get('summary', 'failed')}\n")
    return report.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
