"""Command line front end.

Element commands read a DSL file (header plus named elements) given with
--input and name their operands; complex commands build or read JSON
complexes ({"vertices": V, "maximal_faces": [[..], ..]}), so they can be
piped:  `bht complex linear-matching --d 3 --m 9 | bht homology`.

Every command prints one JSON object (or stable lines with --plain).
Exit codes: 0 success, 1 mathematically false predicate under --strict,
2 error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import complexes as cx
from .diagrams import Spraige, v_reduce
from .dsl import DslError, format_element, parse_session
from .forests import encode as encode_forest
from .labeled import Label

RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "ok"],
    "properties": {
        "command": {"type": "string"},
        "ok": {"type": "boolean"},
        "error": {"type": "string"},
        "element": {"$ref": "#/$defs/element"},
        "elements": {"type": "array", "items": {"$ref": "#/$defs/element"}},
        "equal": {"type": "boolean"},
        "identity": {"type": "boolean"},
        "member": {"type": "boolean"},
        "dangling_equal": {"type": "boolean"},
        "braid": {"type": "string"},
        "label": {"type": "string"},
        "supports": {"type": "array",
                     "items": {"type": "array", "items": {"type": "integer"}}},
        "leaves_before": {"type": "integer"},
        "leaves_after": {"type": "integer"},
        "diagram": {"type": "object"},
        "complex": {"type": "object",
                    "required": ["vertices", "maximal_faces"],
                    "properties": {
                        "vertices": {"type": "integer"},
                        "maximal_faces": {"type": "array",
                                          "items": {"type": "array",
                                                    "items": {"type": "integer"}}}}},
        "reduced_homology": {"type": "array", "items": {
            "type": "object",
            "required": ["degree", "betti", "torsion"],
            "properties": {"degree": {"type": "integer"},
                           "betti": {"type": "integer"},
                           "torsion": {"type": "array", "items": {"type": "integer"}}}}},
        "euler_characteristic": {"type": "integer"},
        "wcm": {"type": "boolean"},
        "dimension": {"type": "integer"},
        "violation": {"type": ["string", "null"]},
        "complete_join": {"type": "boolean"},
        "levels": {"type": "array", "items": {
            "type": "object",
            "required": ["t", "k", "holds"],
            "properties": {"t": {"type": "integer"},
                           "k": {"type": "integer"},
                           "holds": {"type": "boolean"}}}},
        "morse_ok": {"type": "boolean"},
    },
    "$defs": {
        "element": {
            "type": "object",
            "required": ["minus", "braid", "labels", "plus"],
            "properties": {
                "name": {"type": "string"},
                "minus": {"type": "string"},
                "braid": {"type": "string"},
                "labels": {"type": "array", "items": {"type": "string"}},
                "plus": {"type": "string"},
                "heads": {"type": "integer"},
                "feet": {"type": "integer"},
                "leaves": {"type": "integer"},
                "text": {"type": "string"},
            },
        }
    },
}


class CliError(Exception):
    pass


def _element_json(name, s: Spraige):
    return {
        "name": name,
        "minus": encode_forest(s.minus),
        "braid": str(s.lb.braid),
        "labels": [str(l) for l in s.lb.labels],
        "plus": encode_forest(s.plus),
        "heads": s.heads,
        "feet": s.feet,
        "leaves": s.leaves,
        "text": format_element(name, s),
    }


def _load_session(args):
    if not getattr(args, "input", None):
        raise CliError("this command needs --input FILE with a group header and elements")
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(str(exc)) from None
    return parse_session(text)


def _get(elements, name):
    if name not in elements:
        raise CliError("no element named %r in the input file" % name)
    return elements[name]


def _read_complex(args):
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = json.load(sys.stdin)
    if "complex" in data:
        data = data["complex"]
    return cx.SimplicialComplex.from_json_dict(data)


def _homology_json(report):
    return report.to_json_dict()["reduced_homology"]


# -- element commands ---------------------------------------------------------


def cmd_reduce(args):
    ctx, elements = _load_session(args)
    s = _get(elements, args.name)
    red = ctx.reduce(s)
    out = {"command": "reduce", "ok": True,
           "leaves_before": s.leaves, "leaves_after": red.leaves,
           "element": _element_json(args.name, red)}
    if args.dot:
        _write_dot(args.dot, args.name, red)
    return out, True


def cmd_mul(args):
    ctx, elements = _load_session(args)
    a, b = _get(elements, args.a), _get(elements, args.b)
    prod = ctx.multiply(a, b)
    return {"command": "mul", "ok": True,
            "element": _element_json("%s*%s" % (args.a, args.b), prod)}, True


def cmd_inv(args):
    ctx, elements = _load_session(args)
    s = ctx.reduce(ctx.invert(_get(elements, args.name)))
    return {"command": "inv", "ok": True,
            "element": _element_json("%s^-1" % args.name, s)}, True


def cmd_eq(args):
    ctx, elements = _load_session(args)
    res = ctx.equal(_get(elements, args.a), _get(elements, args.b))
    return {"command": "eq", "ok": True, "equal": res}, res


def cmd_is_identity(args):
    ctx, elements = _load_session(args)
    res = ctx.is_identity(_get(elements, args.name))
    return {"command": "is-identity", "ok": True, "identity": res}, res


def cmd_member(args):
    ctx, elements = _load_session(args)
    s = _get(elements, args.name)
    if args.sub == "F":
        res = ctx.in_bF(s)
    else:
        res = ctx.in_bT(s)
    return {"command": "member", "ok": True, "member": res}, res


def cmd_project_v(args):
    ctx, elements = _load_session(args)
    pfd = v_reduce(ctx.project_to_v(_get(elements, args.name)))
    return {"command": "project-v", "ok": True,
            "diagram": {"minus": encode_forest(pfd.minus),
                        "permutation": list(pfd.perm.image),
                        "plus": encode_forest(pfd.plus)}}, True


def cmd_retract(args):
    ctx, elements = _load_session(args)
    w = ctx.r_label(_get(elements, args.name))
    return {"command": "retract", "ok": True, "braid": str(w)}, True


def cmd_embed(args):
    ctx, _ = _load_session(args)
    label = Label.parse(args.label)
    s = ctx.iota_prime(label) if args.prime else ctx.iota_label(label)
    name = "iota'(%s)" % args.label if args.prime else "iota(%s)" % args.label
    return {"command": "embed", "ok": True, "element": _element_json(name, s)}, True


def cmd_dangling_eq(args):
    ctx, elements = _load_session(args)
    res = ctx.dangling_equal(_get(elements, args.a), _get(elements, args.b),
                             flavor=args.flavor)
    return {"command": "dangling-eq", "ok": True, "dangling_equal": res}, res


def cmd_arc_support(args):
    ctx, elements = _load_session(args)
    sup = ctx.arc_support(_get(elements, args.name))
    return {"command": "arc-support", "ok": True,
            "supports": sorted(sorted(block) for block in sup)}, True


# -- complex commands ----------------------------------------------------------


def cmd_complex(args):
    if args.kind == "linear-matching":
        k = cx.d_matching_linear(args.d, args.m)
    else:
        k = cx.d_matching_cyclic(args.d, args.m)
    if args.z:
        z = {int(x) for x in args.z.split(",") if x.strip()}
        k = cx.restrict_initial(k, z)
    return {"command": "complex", "ok": True, "complex": k.to_json_dict()}, True


def cmd_homology(args):
    k = _read_complex(args)
    rep = cx.reduced_homology(k)
    return {"command": "homology", "ok": True,
            "reduced_homology": _homology_json(rep),
            "euler_characteristic": rep.euler_characteristic()}, True


def cmd_wcm(args):
    k = _read_complex(args)
    violation = cx.wcm_violation(k, args.n)
    res = violation is None
    return {"command": "wcm", "ok": True, "wcm": res, "dimension": args.n,
            "violation": violation}, res


def cmd_join_check(args):
    if args.duplicated:
        k = _read_complex(args)
        cover, vmap = cx.duplicated_cover(k)
        res = cx.complete_join_check(cover, k, vmap)
    else:
        if getattr(args, "file", None):
            with open(args.file, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        else:
            data = json.load(sys.stdin)
        source = cx.SimplicialComplex.from_json_dict(data["source"])
        target = cx.SimplicialComplex.from_json_dict(data["target"])
        res = cx.complete_join_check(source, target, data["vertex_map"])
    return {"command": "join-check", "ok": True, "complete_join": res}, res


def cmd_morse(args):
    k = _read_complex(args)
    if args.filter == "start":
        heights = {v: v + 1 for v in range(k.vertices)}
    else:
        heights = {i: int(x) for i, x in enumerate(json.loads(args.heights))}
    h = cx.HeightFunction(heights)
    if not h.is_valid_for(k):
        raise CliError("invalid height function: some cell has no unique maximum")
    levels = []
    all_hold = True
    ts = [args.t] if args.t is not None else h.levels(k)
    for t in ts:
        if args.k is not None:
            kk = args.k
        else:
            # largest k whose hypothesis holds at this level
            links = [cx.morse_descending_link(k, h, v)
                     for v in k.vertex_set() if h(v) == t]
            kk = -1
            while kk <= k.dim + 1 and all(
                    cx.reduced_homology(L).is_zero_through(kk) for L in links):
                kk += 1
        holds = cx.morse_check(k, h, t, kk)
        all_hold = all_hold and holds
        levels.append({"t": t, "k": kk, "holds": holds})
    return {"command": "morse", "ok": True, "levels": levels,
            "morse_ok": all_hold}, all_hold


# -- plumbing -------------------------------------------------------------------


def _write_dot(path, name, s: Spraige):
    lines = ["digraph element {", '  label="%s";' % name]
    for tag, forest in (("minus", s.minus), ("plus", s.plus)):
        counter = [0]

        def walk(tree, parent):
            nid = "%s%d" % (tag, counter[0])
            counter[0] += 1
            shape = "point" if tree is None else "circle"
            lines.append('  %s [shape=%s, label=""];' % (nid, shape))
            if parent:
                lines.append("  %s -> %s;" % (parent, nid))
            if tree is not None:
                for child in tree:
                    walk(child, nid)

        for t in forest.trees:
            walk(t, None)
    lines.append('  braid [shape=box, label="braid: %s"];' % s.lb.braid)
    lines.append('  labels [shape=box, label="labels: %s"];'
                 % "; ".join(str(l) for l in s.lb.labels))
    lines.append("}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _emit_plain(out, fh):
    for key in sorted(out):
        if key == "command":
            continue
        val = out[key]
        if isinstance(val, (dict, list)):
            val = json.dumps(val, sort_keys=True)
        fh.write("%s\t%s\n" % (key, val))


def build_parser():
    ap = argparse.ArgumentParser(prog="bht", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--strict", action="store_true",
                    help="exit 1 when a predicate answer is false")
    ap.add_argument("--plain", action="store_true", help="line output instead of JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    def elem_cmd(name, fn, names, extra=None):
        p = sub.add_parser(name)
        p.add_argument("--input", required=False, help="DSL file with header and elements")
        for n in names:
            p.add_argument(n)
        if extra:
            extra(p)
        p.set_defaults(fn=fn)
        return p

    p = elem_cmd("reduce", cmd_reduce, ["name"])
    p.add_argument("--dot", help="also write a DOT sketch of the reduced element")
    elem_cmd("mul", cmd_mul, ["a", "b"])
    elem_cmd("inv", cmd_inv, ["name"])
    elem_cmd("eq", cmd_eq, ["a", "b"])
    elem_cmd("is-identity", cmd_is_identity, ["name"])
    p = elem_cmd("member", cmd_member, ["name"])
    p.add_argument("--sub", choices=["F", "T"], required=True)
    elem_cmd("project-v", cmd_project_v, ["name"])
    elem_cmd("retract", cmd_retract, ["name"])
    p = elem_cmd("embed", cmd_embed, [])
    p.add_argument("--label", required=True, help="label word, e.g. 'g1 g2^-1' or 'e'")
    p.add_argument("--prime", action="store_true", help="first-strand embedding")
    p = elem_cmd("dangling-eq", cmd_dangling_eq, ["a", "b"])
    p.add_argument("--flavor", choices=["V", "F", "T"], default="V")
    elem_cmd("arc-support", cmd_arc_support, ["name"])

    p = sub.add_parser("complex")
    p.add_argument("kind", choices=["linear-matching", "cyclic-matching"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--z", help="comma separated initial positions to keep")
    p.set_defaults(fn=cmd_complex)

    p = sub.add_parser("homology")
    p.add_argument("--file", help="complex JSON (default: stdin)")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("wcm")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--file")
    p.set_defaults(fn=cmd_wcm)

    p = sub.add_parser("join-check")
    p.add_argument("--file", help="JSON with source/target/vertex_map, or a complex with --duplicated")
    p.add_argument("--duplicated", action="store_true",
                   help="check the duplicated-vertex cover of the input complex")
    p.set_defaults(fn=cmd_join_check)

    p = sub.add_parser("morse")
    p.add_argument("--file")
    p.add_argument("--filter", choices=["start"],
                   help="height = initial position (for matching complexes)")
    p.add_argument("--heights", help="JSON array of per-vertex heights")
    p.add_argument("--t", type=int, help="single level to check (default: all)")
    p.add_argument("--k", type=int, help="connectivity degree (default: derived from links)")
    p.set_defaults(fn=cmd_morse)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "morse" and not (args.filter or args.heights):
        ap.error("morse needs --filter start or --heights")
    try:
        out, truth = args.fn(args)
    except (CliError, DslError, ValueError, KeyError, json.JSONDecodeError) as exc:
        err = {"command": args.command, "ok": False, "error": str(exc)}
        if args.plain:
            _emit_plain(err, sys.stderr)
        else:
            json.dump(err, sys.stderr, sort_keys=True)
            sys.stderr.write("\n")
        return 2
    if args.plain:
        _emit_plain(out, sys.stdout)
    else:
        json.dump(out, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    return 0 if (truth or not args.strict) else 1


if __name__ == "__main__":
    sys.exit(main())
