"""Command-line front door.

Subcommands: ``build`` serialises one object for a composition, ``verify``
runs named checks for one composition, ``sweep`` runs checks over every
composition up to a size bound and writes JSON + CSV reports (plus a status
figure), ``triangles`` prints the four count polynomials.

Exit codes: 2 for argument parsing problems, 3 when a size bound or the
memory guard trips, 1 when a requested check fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from . import lattices, symgroup
from .checks import CHECKS, run_checks
from .context import all_compositions, get_context
from .noncrossing import AlphaPartition
from .symgroup import Composition, perm_text

DEFAULT_MAX_N = 6
HARD_CAP = 7
MEMBER_GUARD = 10**6  # refuse to materialise quotients beyond this


def _max_n() -> int:
    env = os.environ.get("PCL_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_MAX_N


def _parse_alpha(text: str, unsafe: bool) -> Composition:
    try:
        comp = Composition.parse(text)
    except (ValueError, TypeError) as exc:
        print(f"error: cannot parse alpha {text!r}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    cap = _max_n()
    if comp.n > cap and not unsafe:
        print(f"error: n={comp.n} exceeds the bound {cap} "
              "(raise PCL_MAX_N or pass --unsafe-n)", file=sys.stderr)
        raise SystemExit(3)
    quotient_size = math.factorial(comp.n)
    for p in comp.parts:
        quotient_size //= math.factorial(p)
    if quotient_size > MEMBER_GUARD:
        print(f"error: quotient would have {quotient_size} elements; "
              "refusing to materialise it", file=sys.stderr)
        raise SystemExit(3)
    return comp


def _label_text(comp: Composition):
    def fn(label):
        if isinstance(label, tuple) and all(isinstance(v, int) for v in label):
            if len(label) == comp.n:
                return perm_text(label, comp)
            return str(label)
        if isinstance(label, AlphaPartition):
            return str(label)
        return str(label)

    return fn


def _json_label(comp: Composition):
    def fn(label):
        if isinstance(label, AlphaPartition):
            return [list(p) for p in label.parts]
        if isinstance(label, tuple):
            return list(label)
        return label

    return fn


def _build_payload(obj: str, comp: Composition):
    ctx = get_context(comp.parts)
    if obj == "tamari":
        tam = ctx.tam
        data = tam.poset.to_json_dict(_json_label(comp))
        data["alpha"] = list(comp.parts)
        data["lambda"] = {
            f"[{a},{b}]": _wab_name(tam, j)
            for (a, b), j in sorted(tam.labeling.labels.items())
        }
        data["ji_order"] = [x.name for x in tam.ji_order]
        return data, tam.poset, _label_text(comp)
    if obj == "weak":
        poset = ctx.weak_poset
        data = poset.to_json_dict(_json_label(comp))
        data["alpha"] = list(comp.parts)
        return data, poset, _label_text(comp)
    if obj == "nc":
        poset = ctx.nc
        data = poset.to_json_dict(_json_label(comp))
        data["alpha"] = list(comp.parts)
        data["count"] = poset.n
        return data, poset, _label_text(comp)
    if obj == "rootposet":
        poset = ctx.root.poset
        data = poset.to_json_dict(lambda t: list(t))
        data["alpha"] = list(comp.parts)
        data["simples"] = sorted(list(s) for s in ctx.root.simples)
        return data, poset, str
    if obj == "clo":
        poset = ctx.clo
        tam = ctx.tam
        labelled = [tam.elements[i] for i in range(poset.n)]
        data = {
            "alpha": list(comp.parts),
            "labels": [list(w) for w in labelled],
            "covers": [list(c) for c in poset.covers],
            "psi": {
                perm_text(tam.elements[a], comp): sorted(
                    _wab_name(tam, j) for j in ctx.psi[a]
                )
                for a in range(poset.n)
            },
        }
        relabelled = poset.__class__(labelled, poset.covers)
        return data, relabelled, _label_text(comp)
    if obj == "galois":
        g = ctx.galois_combinatorial
        names = [x.name for x in g.vertex_elements]
        data = {
            "alpha": list(comp.parts),
            "labels": names,
            "edges": [list(e) for e in sorted(g.edges)],
        }
        return data, g, None
    raise AssertionError(obj)


def _wab_name(tam, j: int) -> str:
    (a, b), = symgroup.descents(tam.elements[j])
    return f"w_{{{a},{b}}}"


def _galois_dot(g, names) -> str:
    lines = ["digraph galois {"]
    for name in names:
        lines.append(f'  "{name}";')
    for s, t in sorted(g.edges):
        lines.append(f'  "{names[s - 1]}" -> "{names[t - 1]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_build(args) -> int:
    comp = _parse_alpha(args.alpha, args.unsafe_n)
    data, drawable, label_fn = _build_payload(args.object, comp)
    if args.format == "json":
        text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        if args.object == "galois":
            text = _galois_dot(drawable, data["labels"])
        else:
            text = drawable.to_dot(label_fn)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.figure:
        from . import figures

        if args.object == "galois":
            figures.digraph_figure(data["labels"], drawable.edges, args.figure,
                                   title=f"galois {comp}")
        else:
            figures.hasse_figure(drawable, args.figure, label_fn,
                                 title=f"{args.object} {comp}")
    return 0


def _resolve_checks(text: str) -> list:
    if text == "all":
        return list(CHECKS)
    names = [t for t in text.split(",") if t]
    unknown = [t for t in names if t not in CHECKS]
    if unknown:
        print(f"error: unknown checks {unknown}; known: {sorted(CHECKS)}",
              file=sys.stderr)
        raise SystemExit(2)
    return names


def _report_dict(comp: Composition, results) -> dict:
    return {
        "alpha": list(comp.parts),
        "checks": [
            {"name": r.name, "status": r.status, "details": r.details}
            for r in results
        ],
    }


def cmd_verify(args) -> int:
    import time

    comp = _parse_alpha(args.alpha, args.unsafe_n)
    names = _resolve_checks(args.checks)
    ctx = get_context(comp.parts)
    results = []
    for name in names:
        t0 = time.perf_counter()
        (result,) = run_checks(ctx, [name], strict=args.strict_conjectures)
        elapsed = time.perf_counter() - t0
        results.append(result)
        line = f"{comp} {result.name}: {result.status}"
        if result.details:
            line += f" ({result.details})"
        print(f"{line} [{elapsed:.2f}s]")
    if args.out:
        # timings stay off the report files so reruns are byte-identical
        _write_reports([(comp, results)], args.out)
    return 1 if any(r.status == "fail" for r in results) else 0


def _write_reports(pairs, out_base: str) -> None:
    base = out_base[:-5] if out_base.endswith(".json") else out_base
    payload = [_report_dict(comp, results) for comp, results in pairs]
    with open(base + ".json", "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(base + ".csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "alpha", "check", "status", "details"])
        for comp, results in pairs:
            for r in results:
                writer.writerow(
                    [comp.n, ",".join(map(str, comp.parts)),
                     r.name, r.status, r.details]
                )
    from . import figures

    rows = [
        (str(comp), {r.name: r.status for r in results})
        for comp, results in pairs
    ]
    figures.report_figure(rows, base + ".png", title="verification sweep")


def _sweep_task(parts, names, strict):
    ctx = get_context(parts)
    return parts, run_checks(ctx, names, strict=strict)


def cmd_sweep(args) -> int:
    if args.max_n > HARD_CAP and not args.unsafe_n:
        print(f"error: --max-n is hard-capped at {HARD_CAP} "
              "(pass --unsafe-n to override)", file=sys.stderr)
        raise SystemExit(3)
    if args.max_n > DEFAULT_MAX_N:
        print(f"warning: sweeping to n={args.max_n} may take a long time",
              file=sys.stderr)
    names = _resolve_checks(args.checks)
    tasks = [
        parts
        for n in range(1, args.max_n + 1)
        for parts in all_compositions(n)
    ]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            done = dict(
                pool.map(_sweep_task_star,
                         [(p, names, args.strict_conjectures) for p in tasks])
            )
        pairs = [(Composition(p), done[p]) for p in tasks]
    else:
        pairs = []
        for parts in tasks:
            _p, results = _sweep_task(parts, names, args.strict_conjectures)
            pairs.append((Composition(parts), results))
    failed = 0
    for comp, results in pairs:
        for r in results:
            if r.status == "fail":
                failed += 1
                print(f"FAIL {comp} {r.name}: {r.details}", file=sys.stderr)
    if args.out:
        _write_reports(pairs, args.out)
    total = sum(len(res) for _c, res in pairs)
    print(f"sweep: {len(pairs)} compositions, {total} check runs, "
          f"{failed} failures")
    return 1 if failed else 0


def _sweep_task_star(item):
    parts, names, strict = item
    return _sweep_task(parts, names, strict)


def cmd_triangles(args) -> int:
    comp = _parse_alpha(args.alpha, args.unsafe_n)
    ctx = get_context(comp.parts)
    h, mbar, m, f = ctx.h, ctx.mbar, ctx.m, ctx.f
    if args.format == "json":
        payload = {
            "alpha": list(comp.parts),
            "H": h.to_json_terms(),
            "Mbar": mbar.to_json_terms(),
            "M": m.to_json_terms(),
            "F": f.laurent.to_json_terms(),
            "F_is_polynomial": f.is_polynomial,
            "F_is_nonnegative_polynomial": f.is_nonnegative_polynomial,
            "identity_holds": ctx.hm_identity.holds,
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = "\n".join([
            f"alpha = {comp}",
            f"H    = {h}",
            f"Mbar = {mbar}",
            f"M    = {m}",
            f"F    = {f.laurent}",
            f"F is polynomial: {f.is_polynomial}; "
            f"nonnegative: {f.is_nonnegative_polynomial}",
            f"identity holds: {ctx.hm_identity.holds}",
        ]) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parabolic-cataland",
        description="Build and verify the lattices, partitions and count "
                    "polynomials attached to an integer composition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--alpha", required=True,
                       help="composition, e.g. 2,1,2")
        p.add_argument("--unsafe-n", action="store_true",
                       help="override the size bound")

    b = sub.add_parser("build", help="serialise one object")
    common(b)
    b.add_argument("object", choices=["tamari", "nc", "weak", "rootposet",
                                      "clo", "galois"])
    b.add_argument("--format", choices=["json", "dot"], default="json")
    b.add_argument("--out", help="output path (default stdout)")
    b.add_argument("--figure", help="also render a figure to this path")
    b.set_defaults(fn=cmd_build)

    v = sub.add_parser("verify", help="run checks for one composition")
    common(v)
    v.add_argument("--checks", default="all",
                   help="comma-separated check names or 'all'")
    v.add_argument("--strict-conjectures", action="store_true",
                   help="fail on conjecture violations instead of reporting")
    v.add_argument("--out", help="report base path (.json/.csv/.png)")
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("sweep", help="run checks for every composition")
    s.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    s.add_argument("--checks", default="all")
    s.add_argument("--strict-conjectures", action="store_true")
    s.add_argument("--out", help="report base path (.json/.csv/.png)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--unsafe-n", action="store_true")
    s.set_defaults(fn=cmd_sweep)

    t = sub.add_parser("triangles", help="print the count polynomials")
    common(t)
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.add_argument("--out")
    t.set_defaults(fn=cmd_triangles)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
