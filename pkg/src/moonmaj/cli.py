"""``moonmaj`` command line: one JSON document per run on standard output.

Exit status is 0 on success, 1 on invalid input and 2 when ``verify`` finds a
counterexample.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .encode import (ArcDiagram, EncodingError, crossings, des_word, inv_word, maj_word, nestings, partition_to_filling, pmaj,
                     word_to_filling)
from .filling import (Filling, FillingClassSpec, FillingError, des_filling, enumerate_fillings,
                      maj, ne_count)
from .foata import phi, phi_inverse
from .genfun import (DEFAULT_MAX_COUNT, TooManyFillings, distribution_json, maj_distribution,
                     ne_distribution, product_formula)
from .rearrange import alpha, f, g, psi, psi_inverse, tau
from .shape import MoonPolyomino, ShapeError, WrongShapeClass
from .verify import THEOREMS, verify

EXIT_OK, EXIT_INVALID, EXIT_COUNTEREXAMPLE = 0, 1, 2


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _shape(path: str) -> MoonPolyomino:
    data = _load(path)
    if isinstance(data, dict) and "shape" in data and "rows" not in data:
        data = data["shape"]
    return MoonPolyomino.from_json(data)


def _filling(path: str) -> Filling:
    return Filling.from_json(_load(path))


def _spec(args) -> FillingClassSpec:
    return FillingClassSpec(_shape(args.shape), tuple(_int_list(args.s)),
                            frozenset(_int_list(args.A)))


def _filling_stats(F: Filling, which: str) -> dict:
    stats = {"maj": lambda: maj(F), "ne": lambda: ne_count(F), "des": lambda: des_filling(F)}
    names = list(stats) if which == "all" else [which]
    return {k: stats[k]() for k in names}


# subcommands -----------------------------------------------------------

def cmd_validate(args) -> dict:
    S = _shape(args.shape)
    return {"valid": True, "kind": S.kind, "n": S.n, "m": S.m, "size": S.size,
            "column_lengths": list(S.column_lengths)}


def cmd_enumerate(args) -> dict:
    spec = _spec(args)
    out = []
    for k, F in enumerate(enumerate_fillings(spec)):
        if args.limit is not None and k >= args.limit:
            break
        out.append([c or None for c in F.cells])
    total = product_formula(spec)(1)
    return {"shape": spec.shape.to_json(), "count": total, "fillings": out}


def cmd_stats(args) -> dict:
    if args.filling:
        return _filling_stats(_filling(args.filling), args.stat)
    if args.word is not None:
        w = _int_list(args.word)
        F = word_to_filling(w, args.m if args.m is not None else max(w, default=1))
        out = _filling_stats(F, args.stat)
        out["word"] = {"maj": maj_word(w), "inv": inv_word(w), "des": des_word(w)}
        return out
    if args.arcs is not None:
        if args.n is None:
            raise UsageError("--arcs needs --n")
        d = ArcDiagram.parse(args.arcs, args.n)
        out = _filling_stats(partition_to_filling(d), args.stat)
        out["arcs"] = {"crossings": crossings(d), "nestings": nestings(d), "pmaj": pmaj(d)}
        return out
    raise UsageError("stats needs --filling, --word or --arcs")


def cmd_dist(args) -> dict:
    spec = _spec(args)
    fn = maj_distribution if args.stat == "maj" else ne_distribution
    return {"stat": args.stat, **distribution_json(fn(spec, max_count=args.max_count))}


def cmd_product(args) -> dict:
    return distribution_json(product_formula(_spec(args)))


def cmd_map(args) -> dict:
    F = _filling(args.filling)
    if args.map == "alpha":
        return alpha(F.shape).to_json()
    maps = {"phi": phi, "phi-inv": phi_inverse, "f": f, "g": g, "psi": psi,
            "psi-inv": psi_inverse, "tau": tau}
    return maps[args.map](F).to_json()


def cmd_encode(args) -> dict:
    if args.word is not None:
        if args.m is None:
            raise UsageError("--word needs --m")
        return word_to_filling(_int_list(args.word), args.m).to_json()
    if args.arcs is not None:
        if args.n is None:
            raise UsageError("--arcs needs --n")
        return partition_to_filling(ArcDiagram.parse(args.arcs, args.n)).to_json()
    raise UsageError("encode needs --word or --arcs")


def cmd_verify(args) -> dict:
    return verify(args.theorem, args.seed, args.trials, args.max_cells).to_json()


# parser ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse would exit 2, which is reserved for counterexamples
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="moonmaj", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_args(sp):
        sp.add_argument("--shape", required=True, help="shape JSON file, or - for stdin")
        sp.add_argument("--s", required=True, help="column sums, comma separated")
        sp.add_argument("--A", default="", help="empty rows (1-based), comma separated")

    sp = sub.add_parser("validate", help="check a shape")
    sp.add_argument("--shape", required=True)
    sp.set_defaults(run=cmd_validate)

    sp = sub.add_parser("enumerate", help="list the fillings of a class")
    spec_args(sp)
    sp.add_argument("--limit", type=int)
    sp.set_defaults(run=cmd_enumerate)

    sp = sub.add_parser("stats", help="maj / ne / des of one filling")
    sp.add_argument("--filling")
    sp.add_argument("--word")
    sp.add_argument("--m", type=int)
    sp.add_argument("--arcs")
    sp.add_argument("--n", type=int)
    sp.add_argument("--stat", choices=("maj", "ne", "des", "all"), default="all")
    sp.set_defaults(run=cmd_stats)

    sp = sub.add_parser("dist", help="distribution of maj or ne over a class")
    spec_args(sp)
    sp.add_argument("--stat", choices=("maj", "ne"), required=True)
    sp.add_argument("--max-count", type=int, default=DEFAULT_MAX_COUNT)
    sp.set_defaults(run=cmd_dist)

    sp = sub.add_parser("product", help="closed-form q-binomial product")
    spec_args(sp)
    sp.set_defaults(run=cmd_product)

    sp = sub.add_parser("map", help="apply a bijection to a filling")
    sp.add_argument("--filling", required=True)
    sp.add_argument("--map", required=True,
                    choices=("phi", "phi-inv", "f", "g", "psi", "psi-inv", "tau", "alpha"))
    sp.set_defaults(run=cmd_map)

    sp = sub.add_parser("encode", help="word or arc diagram as a filling")
    sp.add_argument("--word")
    sp.add_argument("--m", type=int)
    sp.add_argument("--arcs")
    sp.add_argument("--n", type=int)
    sp.set_defaults(run=cmd_encode)

    sp = sub.add_parser("verify", help="seeded random checks of an identity")
    sp.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--max-cells", type=int, default=12)
    sp.set_defaults(run=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        result = args.run(args)
    except (UsageError, ShapeError, FillingError, EncodingError, WrongShapeClass,
            TooManyFillings, ValueError) as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)}, out)
        out.write("\n")
        return EXIT_INVALID
    json.dump(result, out)
    out.write("\n")
    if args.command == "verify" and result["status"] != "verified":
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
