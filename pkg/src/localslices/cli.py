"""Command line interface: ``localslices <group> <command> ...``.

Exit codes: 0 success, 2 invalid input, 3 window or size cap exceeded,
4 an algorithm broke its contract.
"""

import argparse
import csv
import io as _io
import json
import sys

from . import io
from .cluster import enumerate_tilting, ext1_dim
from .derived import build_model
from .dot import render_dot
from .errors import LocalSlicesError, ValidationError
from .mesh import DEFAULT_PATH_CAP, hom_dim, path_oracle_dim
from .repair import section_through_avoiding
from .slices import is_local_section, is_local_slice, is_presection, is_section, enumerate_local_slices
from .translation import TranslationQuiver, delete_points
from .verify import SUITES, verify_suite

PREDICATES = {
    "presection": is_presection,
    "local-section": is_local_section,
    "section": is_section,
    "local-slice": is_local_slice,
}


def _emit(args, doc, text=None):
    out = text if text is not None else io.dumps(doc)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _emit_artifact(args, obj, highlight=()):
    if args.format == "dot":
        _emit(args, None, render_dot(obj, highlight))
    else:
        _emit(args, io.to_json(obj))


def _load_translation(path, delete_marked=False):
    g = io.translation_from_json(io.load_raw(path))
    if delete_marked and g.marked:
        g = delete_points(g, g.marked)
    return g


def _load_model(args):
    m = io.load(args.model)
    if not hasattr(m, "fundamental_domain"):
        raise ValidationError(f"{args.model} is not a derived model", pointer="/type")
    _apply_window(args, m)
    return m


def _apply_window(args, m):
    if args.window:
        lo, _, hi = args.window.partition(":")
        try:
            m.lo, m.hi = int(lo), int(hi)
        except ValueError:
            raise ValidationError(f"--window expects LO:HI, got {args.window!r}") from None
        m._window = None


def _load_algebra(path):
    alg = io.load(path)
    if not hasattr(alg, "tilting"):
        raise ValidationError(f"{path} is not a cluster-tilted algebra", pointer="/type")
    return alg


# -- commands -------------------------------------------------------------------------


def cmd_slices_check(args):
    g = _load_translation(args.quiver, args.delete_marked)
    s = io.slice_from_json(io.load_raw(args.set))
    verdict = PREDICATES[args.predicate](g, s)
    _emit(args, {"predicate": args.predicate, "set": sorted(s), "verdict": verdict.value})


def cmd_slices_enumerate(args):
    g = _load_translation(args.quiver, args.delete_marked)
    _emit(args, io.slices_to_json(enumerate_local_slices(g, args.rank)))


def cmd_derived_build(args):
    q = io.load(args.quiver)
    m = build_model(q)
    _apply_window(args, m)
    if args.format == "dot":
        _emit(args, None, render_dot(m.window, m.dim_vectors))
    else:
        _emit(args, io.model_to_json(m))


def cmd_mesh_homdim(args):
    m = _load_model(args)
    if args.table:
        fd = m.fundamental_domain()
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["source", "target", "dim"])
        for x in fd:
            for y in fd:
                w.writerow([x, y, hom_dim(m, x, y)])
        _emit(args, None, buf.getvalue())
        return
    if not (args.source and args.target):
        raise ValidationError("mesh homdim needs --from and --to, or --table")
    d = hom_dim(m, args.source, args.target)
    doc = {"source": args.source, "target": args.target, "dim": d}
    if args.oracle:
        doc["oracle_dim"] = path_oracle_dim(m.quiver, args.source, args.target, cap=args.cap_paths)
    _emit(args, doc)


def cmd_cluster_tilting(args):
    m = _load_model(args)
    found = enumerate_tilting(m, args.method)
    _emit(args, {"format": io.FORMAT, "type": "tilting-list", "count": len(found), "tilting": [list(t) for t in found]})


def cmd_cluster_ext1(args):
    m = _load_model(args)
    _emit(args, {"x": args.x, "y": args.y, "ext1": ext1_dim(m, args.x, args.y)})


def cmd_ct_build(args):
    from .tilted import build_algebra

    m = _load_model(args)
    t = io.slice_from_json(io.load_raw(args.tilting))
    alg = build_algebra(m, t)
    if args.format == "dot":
        _emit(args, None, render_dot(alg.presentation))
    else:
        _emit(args, io.algebra_to_json(alg))


def cmd_ct_slices(args):
    alg = _load_algebra(args.algebra)
    if args.format == "dot":
        _emit(args, None, render_dot(alg.mod_quiver))
        return
    _emit(args, io.slices_to_json(alg.local_slices()))


def cmd_ct_annihilator(args):
    alg = _load_algebra(args.algebra)
    s = io.slice_from_json(io.load_raw(args.slice))
    ann = alg.annihilator(s)
    _emit(args, {
        "format": io.FORMAT, "type": "annihilator", "slice": list(ann.slice), "dim": ann.dim,
        "arrow_generators": list(ann.arrow_generators), "generated_dim": ann.generated_dim,
        "basis": [[io.fraction_str(c) for c in row] for row in ann.basis],
    })


def cmd_ct_tilted(args):
    alg = _load_algebra(args.algebra)
    s = io.slice_from_json(io.load_raw(args.slice))
    _emit_artifact(args, alg.tilted_quotient(s))


def cmd_ct_realize(args):
    alg = _load_algebra(args.algebra)
    found = alg.realizing_tilted_algebras()
    _emit(args, {
        "format": io.FORMAT, "type": "realization",
        "slice_count": sum(len(f) for _, f in found), "algebra_count": len(found),
        "algebras": [{"presentation": io.presentation_to_json(p), "slices": [list(s) for s in f]} for p, f in found],
    })


def cmd_ct_repair(args):
    m = _load_model(args)
    forbidden = io.slice_from_json(io.load_raw(args.forbidden)) if args.forbidden else []
    result = section_through_avoiding(m, args.point, forbidden)
    _emit(args, {
        "format": io.FORMAT, "type": "repair", "point": args.point, "section": list(result.section),
        "rounds": [{"distance": r.distance, "nearest": list(r.nearest), "moves": [list(mv) for mv in r.moves]} for r in result.rounds],
    })


def cmd_verify(args):
    quivers = [(path, _load_translation_unchecked(path)) for path in args.quiver or ()]
    results = verify_suite(args.suite, quivers, seed=args.seed)
    _emit(args, {"suite": args.suite, "passed": all(r.passed for r in results), "results": [r.to_json() for r in results]})
    return 0 if all(r.passed for r in results) else 1


def _load_translation_unchecked(path):
    return io.translation_from_json(io.load_raw(path), check=False)


def cmd_render(args):
    doc = io.load_raw(args.input)
    if isinstance(doc, dict) and doc.get("type") == "translation-quiver":
        obj = io.translation_from_json(doc)
    else:
        obj = io.from_json(doc)
        if hasattr(obj, "presentation"):
            obj = obj.presentation
        elif hasattr(obj, "window") and not isinstance(obj, TranslationQuiver):
            obj = obj.window
    highlight = io.slice_from_json(io.load_raw(args.highlight)) if args.highlight else ()
    _emit(args, None, render_dot(obj, highlight))


# -- parser ---------------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomised property checks")
    common.add_argument("--window", help="override the model window as LO:HI")
    common.add_argument("--cap-paths", type=int, default=DEFAULT_PATH_CAP, help="path cap for the brute-force oracle")
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")

    p = argparse.ArgumentParser(prog="localslices", description="Local slices and cluster-tilted algebras.")
    groups = p.add_subparsers(dest="group", required=True)

    def sub(group, name, func, **kw):
        c = group.add_parser(name, parents=[common], **kw)
        c.set_defaults(func=func)
        return c

    g = groups.add_parser("slices").add_subparsers(dest="command", required=True)
    c = sub(g, "check", cmd_slices_check)
    c.add_argument("--quiver", required=True)
    c.add_argument("--set", required=True)
    c.add_argument("--predicate", choices=sorted(PREDICATES), default="local-slice")
    c.add_argument("--delete-marked", action="store_true", help="drop marked points before checking")
    c = sub(g, "enumerate", cmd_slices_enumerate)
    c.add_argument("--quiver", required=True)
    c.add_argument("--rank", type=int)
    c.add_argument("--delete-marked", action="store_true")

    g = groups.add_parser("derived").add_subparsers(dest="command", required=True)
    c = sub(g, "build", cmd_derived_build)
    c.add_argument("--quiver", required=True)

    g = groups.add_parser("mesh").add_subparsers(dest="command", required=True)
    c = sub(g, "homdim", cmd_mesh_homdim)
    c.add_argument("--model", required=True)
    c.add_argument("--from", dest="source")
    c.add_argument("--to", dest="target")
    c.add_argument("--table", action="store_true", help="CSV table over the fundamental domain")
    c.add_argument("--oracle", action="store_true", help="also run the brute-force path oracle")

    g = groups.add_parser("cluster").add_subparsers(dest="command", required=True)
    c = sub(g, "tilting-enumerate", cmd_cluster_tilting)
    c.add_argument("--model", required=True)
    c.add_argument("--method", choices=("clique", "naive"), default="clique")
    c = sub(g, "ext1", cmd_cluster_ext1)
    c.add_argument("--model", required=True)
    c.add_argument("--x", required=True)
    c.add_argument("--y", required=True)

    g = groups.add_parser("ct").add_subparsers(dest="command", required=True)
    c = sub(g, "build", cmd_ct_build)
    c.add_argument("--model", required=True)
    c.add_argument("--tilting", required=True)
    c = sub(g, "slices", cmd_ct_slices)
    c.add_argument("algebra")
    c = sub(g, "annihilator", cmd_ct_annihilator)
    c.add_argument("algebra")
    c.add_argument("--slice", required=True)
    c = sub(g, "tilted", cmd_ct_tilted)
    c.add_argument("algebra")
    c.add_argument("--slice", required=True)
    c = sub(g, "realize", cmd_ct_realize)
    c.add_argument("algebra")
    c = sub(g, "repair-section", cmd_ct_repair)
    c.add_argument("--model", required=True)
    c.add_argument("--point", required=True)
    c.add_argument("--forbidden")

    c = groups.add_parser("verify", parents=[common])
    c.set_defaults(func=cmd_verify)
    c.add_argument("suite", choices=SUITES)
    c.add_argument("--quiver", action="append", help="extra translation quiver file to check (repeatable)")

    c = groups.add_parser("render", parents=[common])
    c.set_defaults(func=cmd_render)
    c.add_argument("--input", required=True)
    c.add_argument("--highlight")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except LocalSlicesError as err:
        print(f"error: {err}", file=sys.stderr)
        if getattr(err, "point", None):
            print(f"point: {err.point}", file=sys.stderr)
        return err.exit_code
    except (OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
