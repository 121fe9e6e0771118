"""Command-line interface: ``shizeta VERB [options]``.

Exit status is 0 on success, 1 when a verification check fails and 2 on
malformed input (the diagnostic names the offending token).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, TextIO

from . import geometry, labelled, paths, roots, statistics, tables, verify, zeta
from .labelled import DiagonalPath, VerticalPath, format_ints, parse_ints

VERBS = ("enumerate", "zeta", "zeta-labelled", "sweep", "invert", "stats",
         "distribution", "regions", "verify")

# Which library operations each verb reaches. A self-test checks that the
# names resolve and that every public operation is listed somewhere.
VERB_OPERATIONS: dict[str, tuple[str, ...]] = {
    "enumerate": (
        "paths.enumerate_L", "paths.enumerate_D", "paths.enumerate_B",
        "labelled.enumerate_vertical_C", "labelled.enumerate_vertical_A",
        "labelled.enumerate_diagonal_C", "labelled.enumerate_diagonal_A",
        "labelled.parking_functions_C", "labelled.parking_functions_A",
        "roots.positive_roots", "roots.antichains", "roots.shi_pairs",
        "geometry.shi_hyperplanes",
    ),
    "zeta": ("paths.parse_path", "paths.is_dyck", "paths.is_ballot", "paths.is_square",
             "zeta.zeta_C", "zeta.zeta_A", "paths.reverse_swap"),
    "zeta-labelled": (
        "labelled.pf_to_vertical_C", "labelled.pf_to_vertical_A",
        "labelled.validate_vertical_C", "labelled.validate_vertical_A",
        "zeta.zeta_labelled_C", "zeta.zeta_labelled_A",
    ),
    "sweep": ("zeta.sweep_labels", "zeta.sweep"),
    "invert": ("tables.zeta_C_inverse", "tables.zeta_labelled_C_inverse",
               "paths.path_from_area_vector_C"),
    "stats": (
        "paths.rises", "paths.valleys", "paths.area_vector_A", "paths.area_vector_C",
        "paths.ballot_boxes", "paths.ballot_area",
        "roots.antichain_of_dyck", "roots.antichain_of_ballot",
        "roots.dyck_of_antichain", "roots.ballot_of_antichain",
        "roots.leq_root_poset", "roots.is_antichain", "roots.act", "roots.is_shi_pair",
        "statistics.area_A", "statistics.area_C", "statistics.area_prime_A",
        "statistics.area_prime_C", "statistics.typed_inversions_C",
        "statistics.dinv_C", "statistics.dinv_A",
        "statistics.dinv_prime_C", "statistics.dinv_prime_A",
        "labelled.vertical_C_to_pf", "labelled.vertical_A_to_pf",
        "labelled.validate_diagonal_C", "labelled.validate_diagonal_A",
        "labelled.diagonal_C_to_shi_pair", "labelled.diagonal_A_to_shi_pair",
        "labelled.shi_pair_to_diagonal_C", "labelled.shi_pair_to_diagonal_A",
        "labelled.diagonal_word", "labelled.signed_perm_of_word",
        "zeta.rise_labels", "zeta.valley_labels", "zeta.check_valley_characterization",
    ),
    "distribution": ("statistics.qt_distribution",),
    "regions": (
        "geometry.enumerate_regions", "lp.feasible", "geometry.coheight",
        "geometry.chamber_of", "geometry.floors", "geometry.region_to_shi_pair",
    ),
    "verify": ("verify.run_check", "geometry.verify_region_bijection"),
}

ENUMERATE_KINDS = ("L", "D", "B", "vertical-c", "vertical-a", "diagonal-c", "diagonal-a",
                   "pf-c", "pf-a", "roots-c", "roots-a", "antichains-c", "antichains-a",
                   "shi-pairs-c", "shi-pairs-a", "hyperplanes-c", "hyperplanes-a")
STATS_KINDS = ("path-c", "dyck", "ballot", "vertical-c", "vertical-a",
               "diagonal-c", "diagonal-a", "antichain", "shi-pair")
DIST_KINDS = ("vertical-c", "vertical-a", "diagonal-c", "diagonal-a")

# flags whose value may itself start with '-' (label lists, parking functions)
_VALUE_FLAGS = ("--path", "--labels", "--pf", "--area-vector", "--antichain", "--w")


class InputError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shizeta", allow_abbrev=False,
                                description="Type C zeta maps, parking functions and Shi regions.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, allow_abbrev=False)

    def n_flag(sp, required=False):
        sp.add_argument("--n", type=int, required=required, help="size parameter")

    def type_flag(sp, default="C"):
        sp.add_argument("--type", choices=("A", "C"), default=default, dest="type_label")

    def fmt_flag(sp, choices=("json", "text")):
        sp.add_argument("--format", choices=choices, default=None)

    sp = verb("enumerate", "list a family of objects")
    sp.add_argument("--kind", choices=ENUMERATE_KINDS, required=True)
    n_flag(sp, required=True)
    fmt_flag(sp)

    sp = verb("zeta", "apply the unlabelled zeta map")
    n_flag(sp)
    type_flag(sp)
    sp.add_argument("--path", required=True)
    fmt_flag(sp)

    sp = verb("zeta-labelled", "apply the labelled zeta map")
    n_flag(sp)
    type_flag(sp)
    sp.add_argument("--path")
    sp.add_argument("--labels")
    sp.add_argument("--pf", help="parking function, used instead of --path/--labels")
    fmt_flag(sp)

    sp = verb("sweep", "apply the sweep map")
    n_flag(sp)
    sp.add_argument("--path", required=True)
    fmt_flag(sp)

    sp = verb("invert", "invert the type C zeta maps (table lookup)")
    n_flag(sp)
    sp.add_argument("--path")
    sp.add_argument("--labels")
    sp.add_argument("--area-vector", dest="area_vector",
                    help="rebuild a path from its type C area vector instead")
    fmt_flag(sp)

    sp = verb("stats", "report statistics of one object")
    sp.add_argument("--kind", choices=STATS_KINDS, required=True)
    n_flag(sp)
    type_flag(sp)
    sp.add_argument("--path")
    sp.add_argument("--labels")
    sp.add_argument("--pf")
    sp.add_argument("--antichain", help="bracketed root list, e.g. [e3-e2,2e2]")
    sp.add_argument("--w", help="group element window, e.g. -3,2,-1")

    sp = verb("distribution", "joint (q, t) distribution over a family")
    sp.add_argument("--kind", choices=DIST_KINDS, required=True)
    n_flag(sp, required=True)
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = verb("regions", "enumerate Shi regions")
    n_flag(sp, required=True)
    type_flag(sp)
    sp.add_argument("--box-scale", dest="box_scale", type=Fraction, default=Fraction(1))

    sp = verb("verify", "run verification checks")
    sp.add_argument("--check", required=True,
                    choices=("all", "geometry", *verify.CHECKS))
    n_flag(sp, required=True)
    sp.add_argument("--type", choices=("A", "C"), default=None, dest="type_label")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--box-scale", dest="box_scale", type=Fraction, default=Fraction(1))
    return p


def _join_values(argv: list[str]) -> list[str]:
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


# -- input helpers ------------------------------------------------------------------

def _path(args, *, square=False, ballot=False, dyck=False, flag="--path") -> str:
    text = getattr(args, flag.lstrip("-").replace("-", "_"))
    if text is None:
        raise InputError(f"{flag} is required here")
    p = paths.parse_path(text)
    n = getattr(args, "n", None)
    if n is not None and len(p) != 2 * n:
        raise InputError(f"path {p!r} has {len(p)} steps, expected {2 * n} for --n {n}")
    if square and not paths.is_square(p):
        raise InputError(f"path {p!r} does not have equally many N and E steps")
    if ballot and not (paths.is_ballot(p) and len(p) % 2 == 0):
        raise InputError(f"path {p!r} is not a ballot path")
    if dyck and not paths.is_dyck(p):
        raise InputError(f"path {p!r} is not a Dyck path")
    return p


def _ints(args, name: str) -> tuple[int, ...]:
    text = getattr(args, name)
    if text is None:
        raise InputError(f"--{name.replace('_', '-')} is required here")
    return parse_ints(text)


def _vertical(args) -> VerticalPath:
    if args.pf is not None:
        f = parse_ints(args.pf)
        if args.n is not None and len(f) != args.n:
            raise InputError(f"parking function {args.pf!r} has length {len(f)}, expected {args.n}")
        return labelled.pf_to_vertical_C(f) if args.type_label == "C" else labelled.pf_to_vertical_A(f)
    if args.type_label == "C":
        p, s = _path(args, square=True), _ints(args, "labels")
        if not labelled.validate_vertical_C(p, s):
            raise InputError(f"labels {args.labels!r} are not a valid vertical labelling of {p}")
    else:
        p, s = _path(args, dyck=True), _ints(args, "labels")
        if not labelled.validate_vertical_A(p, s):
            raise InputError(f"labels {args.labels!r} are not a valid vertical labelling of {p}")
    return VerticalPath(p, s)


def _diagonal(args) -> DiagonalPath:
    if args.type_label == "C":
        p, w = _path(args, ballot=True), _ints(args, "labels")
        if not labelled.validate_diagonal_C(p, w):
            raise InputError(f"labels {args.labels!r} are not a valid diagonal labelling of {p}")
    else:
        p, w = _path(args, dyck=True), _ints(args, "labels")
        if not labelled.validate_diagonal_A(p, w):
            raise InputError(f"labels {args.labels!r} are not a valid diagonal labelling of {p}")
    return DiagonalPath(p, w)


def _rs(args) -> roots.RootSystem:
    if args.n is None:
        raise InputError("--n is required here")
    return roots.RootSystem(args.type_label, args.n)


def _labelled_json(obj) -> dict:
    return {"path": obj.path, "labels": format_ints(obj.labels)}


def _pairs(counter) -> list[list[int]]:
    return [list(p) for p in sorted(counter.elements())]


# -- verbs ----------------------------------------------------------------------------

def _enumerate(args):
    n, kind = args.n, args.kind
    if n < 1:
        raise InputError(f"--n {n} must be positive")
    simple = {"L": paths.enumerate_L, "D": paths.enumerate_D, "B": paths.enumerate_B}
    if kind in simple:
        return [p for p in simple[kind](n)]
    objs = {
        "vertical-c": labelled.enumerate_vertical_C, "vertical-a": labelled.enumerate_vertical_A,
        "diagonal-c": labelled.enumerate_diagonal_C, "diagonal-a": labelled.enumerate_diagonal_A,
    }
    if kind in objs:
        return [str(o) for o in objs[kind](n)]
    if kind == "pf-c":
        return [format_ints(f) for f in labelled.parking_functions_C(n)]
    if kind == "pf-a":
        return [format_ints(f) for f in labelled.parking_functions_A(n)]
    rs = roots.RootSystem(kind[-1].upper(), n)
    if kind.startswith("roots"):
        return [str(r) for r in roots.positive_roots(rs.type_label, n)]
    if kind.startswith("antichains"):
        return sorted(roots.format_antichain(A) for A in roots.antichains(rs))
    if kind.startswith("shi-pairs"):
        return [f"{roots.format_antichain(A)} {format_ints(w)}" for A, w in roots.shi_pairs(rs)]
    return [str(h) for h in geometry.shi_hyperplanes(rs)]


def _zeta(args):
    if args.type_label == "C":
        p = _path(args, square=True)
        return zeta.zeta_C(p)
    p = _path(args, dyck=True)
    return zeta.zeta_A(p)


def _zeta_labelled(args):
    v = _vertical(args)
    d = zeta.zeta_labelled_C(v) if args.type_label == "C" else zeta.zeta_labelled_A(v)
    return {"source": _labelled_json(v), "image": _labelled_json(d)}


def _sweep(args):
    p = _path(args, square=True)
    lab = zeta.sweep_labels(p)
    return {
        "path": zeta.sweep(p),
        "step_labels": list(lab.labels),
        "X": [[s, k] for s, k in sorted(lab.keyed, key=lambda q: q[1])],
    }


def _invert(args):
    if args.area_vector is not None:
        return paths.path_from_area_vector_C(parse_ints(args.area_vector))
    p = _path(args, ballot=True)
    if args.labels is None:
        return tables.zeta_C_inverse(p)
    v = tables.zeta_labelled_C_inverse(DiagonalPath(p, parse_ints(args.labels)))
    return _labelled_json(v)


def _stats(args) -> dict:
    kind = args.kind
    if kind == "path-c":
        p = _path(args, square=True)
        return {
            "path": p,
            "area_vector": list(paths.area_vector_C(p)),
            "rises": paths.rises(p),
            "valleys": [list(v) for v in paths.valleys(p)],
            "typed_inversions": [str(t) for t in statistics.typed_inversions_C(p)],
            "dinv": statistics.dinv_C(p),
            "zeta": zeta.zeta_C(p),
        }
    if kind == "dyck":
        p = _path(args, dyck=True)
        return {
            "path": p,
            "area_vector": list(paths.area_vector_A(p)),
            "rises": paths.rises(p),
            "valleys": [list(v) for v in paths.valleys(p)],
            "area": statistics.area_A(p),
            "dinv": statistics.dinv_A(p),
            "dinv_C": statistics.dinv_C(p),
            "antichain": roots.format_antichain(roots.antichain_of_dyck(p)),
            "zeta_A": zeta.zeta_A(p),
            "zeta_C": zeta.zeta_C(p),
            "reverse_swap_zeta_A": paths.reverse_swap(zeta.zeta_A(p)),
        }
    if kind == "ballot":
        p = _path(args, ballot=True)
        return {
            "path": p,
            "rises": paths.rises(p),
            "valleys": [list(v) for v in paths.valleys(p)],
            "boxes": [list(b) for b in paths.ballot_boxes(p)],
            "area": paths.ballot_area(p),
            "antichain": roots.format_antichain(roots.antichain_of_ballot(p)),
        }
    if kind == "vertical-c":
        v = _vertical(args)
        d = zeta.zeta_labelled_C(v)
        return {
            **_labelled_json(v),
            "area_vector": list(paths.area_vector_C(v.path)),
            "typed_inversions": [str(t) for t in statistics.typed_inversions_C(v.path)],
            "dinv": statistics.dinv_C(v.path),
            "dinv'": statistics.dinv_prime_C(v),
            "pf": format_ints(labelled.vertical_C_to_pf(v)),
            "rise_labels": _pairs(zeta.rise_labels(v)),
            "zeta": _labelled_json(d),
            "valley_characterization": zeta.check_valley_characterization(v, d),
        }
    if kind == "vertical-a":
        v = _vertical(args)
        return {
            **_labelled_json(v),
            "area_vector": list(paths.area_vector_A(v.path)),
            "dinv": statistics.dinv_A(v.path),
            "dinv'": statistics.dinv_prime_A(v),
            "pf": format_ints(labelled.vertical_A_to_pf(v)),
            "zeta": _labelled_json(zeta.zeta_labelled_A(v)),
        }
    if kind == "diagonal-c":
        d = _diagonal(args)
        A, s = labelled.diagonal_C_to_shi_pair(d)
        vl, final = zeta.valley_labels(d)
        return {
            **_labelled_json(d),
            "area": statistics.area_C(d.path),
            "area'": statistics.area_prime_C(d),
            "valley_labels": _pairs(vl),
            "final_east_label": final,
            "antichain": roots.format_antichain(A),
            "signed_permutation": format_ints(s),
        }
    if kind == "diagonal-a":
        d = _diagonal(args)
        A, s = labelled.diagonal_A_to_shi_pair(d)
        return {
            **_labelled_json(d),
            "area": statistics.area_A(d.path),
            "area'": statistics.area_prime_A(d),
            "antichain": roots.format_antichain(A),
            "permutation": format_ints(s),
        }
    rs = _rs(args)
    if args.antichain is None:
        raise InputError("--antichain is required here")
    A = roots.parse_antichain(args.antichain)
    for r in A:
        if not rs.is_positive(r):
            raise InputError(f"root {r} is not a positive root of {rs}")
    comparable = [[str(a), str(b)] for a in sorted(A) for b in sorted(A)
                  if a != b and roots.leq_root_poset(rs, a, b)]
    ok = roots.is_antichain(rs, A)
    out: dict = {"antichain": roots.format_antichain(A), "is_antichain": ok, "comparable": comparable}
    if ok:
        out["path"] = (roots.ballot_of_antichain(rs, A) if rs.type_label == "C"
                       else roots.dyck_of_antichain(rs, A))
    if kind == "shi-pair":
        w = _ints(args, "w")
        if not roots.is_group_element(rs, w):
            raise InputError(f"--w {args.w!r} is not an element of the Weyl group of {rs}")
        images = {}
        for r in sorted(A):
            sign, img = roots.act(rs, w, r)
            images[str(r)] = str(img) if sign > 0 else f"-({img})"
        out["images"] = images
        out["is_shi_pair"] = roots.is_shi_pair(rs, A, w)
        if out["is_shi_pair"]:
            to_diag = (labelled.shi_pair_to_diagonal_C if rs.type_label == "C"
                       else labelled.shi_pair_to_diagonal_A)
            out["diagonal"] = _labelled_json(to_diag(A, w))
            if rs.type_label == "C":
                out["word"] = format_ints(labelled.diagonal_word(w))
    return out


def distribution_for(kind: str, n: int) -> statistics.QTDistribution:
    """Vertical families: (q, t) = (dinv', dinv); diagonal: (area', area)."""
    if kind == "vertical-c":
        return statistics.qt_distribution(labelled.enumerate_vertical_C(n), statistics.dinv_prime_C,
                                          lambda v: statistics.dinv_C(v.path))
    if kind == "vertical-a":
        return statistics.qt_distribution(labelled.enumerate_vertical_A(n), statistics.dinv_prime_A,
                                          lambda v: statistics.dinv_A(v.path))
    if kind == "diagonal-c":
        return statistics.qt_distribution(labelled.enumerate_diagonal_C(n), statistics.area_prime_C,
                                          lambda d: statistics.area_C(d.path))
    return statistics.qt_distribution(labelled.enumerate_diagonal_A(n), statistics.area_prime_A,
                                      lambda d: statistics.area_A(d.path))


def _distribution(args):
    if not 1 <= args.n <= verify.BOUNDS["distribution"]:
        raise InputError(f"--n {args.n} outside 1..{verify.BOUNDS['distribution']}")
    dist = distribution_for(args.kind, args.n)
    if args.format == "csv":
        return dist.to_csv()
    return dist.to_json()


def _regions(args):
    rs = _rs(args)
    bound = verify.BOUNDS[f"geometry-{rs.type_label}"]
    if args.n > bound:
        raise InputError(f"--n {args.n} exceeds the region enumeration bound {bound}")
    config = geometry.GeometryConfig(args.box_scale)
    return [geometry.region_report(r, config) for r in geometry.enumerate_regions(rs, config)]


HANDLERS: dict[str, Callable] = {
    "enumerate": _enumerate,
    "zeta": _zeta,
    "zeta-labelled": _zeta_labelled,
    "sweep": _sweep,
    "invert": _invert,
    "stats": _stats,
    "distribution": _distribution,
    "regions": _regions,
}

TEXT_DEFAULT = {"zeta", "sweep", "invert"}


def _emit(verb: str, args, result, out: TextIO) -> None:
    fmt = getattr(args, "format", None) or ("text" if verb in TEXT_DEFAULT else "json")
    if isinstance(result, str) and (fmt == "text" or fmt == "csv"):
        out.write(result if result.endswith("\n") else result + "\n")
    elif fmt == "text" and isinstance(result, list):
        out.write("".join(f"{x}\n" for x in result))
    elif fmt == "text" and isinstance(result, dict) and "path" in result:
        out.write(" ".join(str(result[k]) for k in ("path", "labels") if k in result) + "\n")
    elif fmt == "text" and isinstance(result, dict) and "image" in result:
        out.write(f"{result['image']['path']} {result['image']['labels']}\n")
    else:
        out.write(json.dumps(result, sort_keys=False) + "\n")


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        old = sys.stderr
        sys.stderr = err
        try:
            args = parser.parse_args(_join_values(argv))
        finally:
            sys.stderr = old
    except SystemExit as e:
        return int(e.code or 0)

    try:
        if args.verb == "verify":
            results = verify.run_check(args.check, args.n, args.type_label, args.jobs, args.box_scale)
            for r in results:
                out.write(r.to_json() + "\n")
            return 0 if all(r.ok for r in results) else 1
        result = HANDLERS[args.verb](args)
    except ValueError as e:
        err.write(f"shizeta {args.verb}: error: {e}\n")
        return 2
    _emit(args.verb, args, result, out)
    return 0


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
