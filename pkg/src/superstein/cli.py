"""Command-line front end: certification reports in text or JSON.

Exit codes: 0 all verdicts pass (or skipped), 1 at least one fail verdict,
2 malformed input (bad flags, unparseable algebra file, unmet precondition).
"""

import argparse
import json
import sys
import time

from . import __version__
from .algfile import parse_algebra, serialize_algebra
from .cyclic import hc1, hc1_crosscheck, hc_n, pairing_module
from .errors import (
    AlgfileError,
    ConstructionError,
    InputError,
    PreconditionError,
    ResourceLimitError,
    ValidationError,
)
from .homology import UCE_ASSUMPTION, uce_verdict
from .liesuper import check_structure, perfectness_and_center
from .matrices import GlModel, MatrixShape, concretize, sl_space
from .steinberg import build_model, certify_model
from .superalgebra import CORPUS_NAMES, builtin, corpus

_INPUT_ERRORS = (InputError, AlgfileError, PreconditionError, ValidationError, OSError)


def _load_algebra(spec: str):
    if spec.startswith("builtin:"):
        return builtin(spec[len("builtin:"):])
    with open(spec, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def _report(command: str, inputs: dict) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": {},
        "verdicts": [],
        "runtime_ms": 0,
        "version": __version__,
    }


def _pass(rep, name):
    rep["verdicts"].append({"name": name, "status": "pass"})


def _fail(rep, name, witness):
    rep["verdicts"].append({"name": name, "status": "fail", "witness": str(witness)})


def _skip(rep, name, reason):
    rep["verdicts"].append({"name": name, "status": "skipped", "reason": str(reason)})


def _check(rep, name, ok, witness):
    if ok:
        _pass(rep, name)
    else:
        _fail(rep, name, witness)


def _emit(rep, mode):
    if mode == "json":
        print(json.dumps(rep, indent=2, sort_keys=True, default=str))
        return
    print(f"{rep['command']} (superstein {rep['version']})")
    for k, v in rep["inputs"].items():
        print(f"  {k} = {v}")
    for k, v in rep["results"].items():
        print(f"{k} = {v}")
    for v in rep["verdicts"]:
        if v["status"] == "pass":
            print(f"{v['name']}: pass")
        elif v["status"] == "fail":
            print(f"{v['name']}: fail ({v['witness']})")
        else:
            print(f"{v['name']}: skipped ({v['reason']})")
    print(f"runtime_ms = {rep['runtime_ms']}")


def cmd_validate(args):
    rep = _report("validate", {"algebra": args.algebra})
    try:
        a = _load_algebra(args.algebra)
    except ValidationError as err:
        rep["inputs"]["field"] = "?"
        rep["results"]["valid"] = False
        _fail(rep, "table validation", err)
        return rep
    rep["inputs"]["field"] = a.field.spec
    rep["results"]["name"] = a.name
    rep["results"]["dim"] = a.dim
    rep["results"]["even_dim"] = a.dim - sum(a.parity)
    rep["results"]["odd_dim"] = sum(a.parity)
    rep["results"]["valid"] = True
    _pass(rep, "table validation")
    return rep


def cmd_hc(args):
    a = _load_algebra(args.algebra)
    rep = _report("hc", {"algebra": a.name, "field": a.field.spec, "degree": args.degree})
    rep["results"][f"hc{args.degree}_dim"] = hc_n(a, args.degree, max_tensor=args.max_chain)
    if args.degree == 1:
        cross = hc1_crosscheck(a, max_tensor=args.max_chain)
        rep["results"]["pairing_route_dim"] = cross.pairing_dim
        rep["results"]["complex_route_dim"] = cross.complex_dim
        _check(
            rep,
            "double-route crosscheck",
            cross.pairing_dim == cross.complex_dim,
            f"pairing {cross.pairing_dim} != complex {cross.complex_dim}",
        )
    return rep


def cmd_pairing(args):
    a = _load_algebra(args.algebra)
    rep = _report("pairing", {"algebra": a.name, "field": a.field.spec})
    pm = pairing_module(a)
    res = hc1(a)
    rep["results"]["pairing_dim"] = pm.dim
    rep["results"]["hc1_dim"] = res.dim
    names = a.basis_names
    d = a.dim
    classes = []
    for vec in res.basis:
        terms = [
            f"{a.field.fmt(v)}*<<{names[pm.quot.free_cols[k] // d]},{names[pm.quot.free_cols[k] % d]}>>"
            for k, v in enumerate(vec)
            if not a.field.is_zero(v)
        ]
        classes.append(" + ".join(terms))
    rep["results"]["hc1_basis"] = classes
    _pass(rep, "unit pairing vanishes")
    return rep


def cmd_sl(args):
    a = _load_algebra(args.algebra)
    shape = MatrixShape.parse(args.shape)
    rep = _report(
        "sl", {"algebra": a.name, "field": a.field.spec, "shape": str(shape)}
    )
    res = sl_space(a, shape)
    rep["results"]["gl_dim"] = res.gl_dim
    rep["results"]["derived_dim"] = res.derived_space.dim
    rep["results"]["trace_criterion_dim"] = res.trace_space.dim
    _check(rep, "derived space inside trace criterion", res.contained, "containment fails")
    if res.asserted:
        _check(rep, "derived space equals trace criterion", res.equal, "spaces differ")
    else:
        _skip(rep, "derived space equals trace criterion", "equality asserted only for m >= 1")
    _check(rep, "sl perfect", res.perfect, "derived subalgebra is a proper subspace")
    return rep


def cmd_st(args):
    a = _load_algebra(args.algebra)
    shape = MatrixShape.parse(args.shape)
    rep = _report(
        "st", {"algebra": a.name, "field": a.field.spec, "shape": str(shape)}
    )
    try:
        model = build_model(a, shape)
    except ConstructionError as err:
        _fail(rep, "model certification", err)
        return rep
    rep["results"]["dim"] = model.dim
    rep["results"]["f_dim"] = model.f_count
    rep["results"]["h_dim"] = model.h_count
    rep["results"]["d_dim"] = model.d_count
    _pass(rep, "skew, Jacobi, and defining relations")
    if args.verify:
        cert = certify_model(model)
        _check(rep, "expansion-index independence", cert.jstar_independent, "tables differ")
        _check(rep, "projection is a homomorphism", cert.phi_homomorphism, "bracket image mismatch")
        _check(rep, "kernel matches degree-1 cyclic homology", cert.kernel.ok, cert.kernel)
        _check(rep, "trace diagram commutes", cert.diagram_ok, "d(nu) != str(phi)")
    return rep


def cmd_kernel(args):
    a = _load_algebra(args.algebra)
    shape = MatrixShape.parse(args.shape)
    rep = _report(
        "kernel", {"algebra": a.name, "field": a.field.spec, "shape": str(shape)}
    )
    from .steinberg import diagram_check, kernel_phi

    model = build_model(a, shape)
    kr = kernel_phi(model)
    rep["results"]["kernel_dim"] = kr.kernel.dim
    rep["results"]["hc1_dim"] = kr.hc1_dim
    _check(rep, "kernel dimension equals hc1", kr.dims_equal, f"{kr.kernel.dim} != {kr.hc1_dim}")
    _check(rep, "kernel equals embedded hc1 classes", kr.spans_equal, "span mismatch")
    _check(rep, "kernel is central", kr.central, "non-central kernel vector")
    _check(rep, "trace diagram commutes", diagram_check(model).ok, "d(nu) != str(phi)")
    return rep


def cmd_homology(args):
    a = _load_algebra(args.algebra)
    shape = MatrixShape.parse(args.shape)
    source = {"sl": "sl", "st": "st", "stsharp": "st_sharp"}[args.target]
    rep = _report(
        "homology",
        {
            "target": args.target,
            "algebra": a.name,
            "field": a.field.spec,
            "shape": str(shape),
        },
    )
    rep["results"]["assumption"] = UCE_ASSUMPTION
    try:
        row = uce_verdict(source, a, shape, max_wedge3=args.max_wedge)
    except ResourceLimitError as err:
        _skip(rep, "claim row", err)
        return rep
    r = row.report
    rep["results"].update(
        {
            "dim": r.dim,
            "lambda2": r.lambda2,
            "lambda3": r.lambda3,
            "h1_dim": r.h1_dim,
            "h2_dim": r.h2_dim,
            "claim": row.claim,
            "expected_h2": row.expected,
        }
    )
    _check(rep, "boundary contraction vanishes", r.dd_zero, "d2(d3) != 0")
    if row.match is None:
        _skip(rep, "claim row", "no theorem claim for this source and shape")
    else:
        _check(
            rep,
            f"claim {row.claim}",
            row.match,
            f"computed h2 = {row.computed}, expected {row.expected}",
        )
    return rep


def cmd_cocycle22(args):
    a = _load_algebra(args.algebra)
    rep = _report("cocycle22", {"algebra": a.name, "field": a.field.spec})
    from .cocycle22 import build_st_sharp, verify_cocycle

    v = verify_cocycle(a)
    rep["results"]["w_dim"] = v.w_dim
    _check(rep, "cocycle degree zero", v.degree_ok, v.witnesses)
    _check(rep, "cocycle skew symmetry", v.skew_ok, v.witnesses)
    _check(rep, "cocycle Jacobi identity", v.jacobi_ok, v.witnesses)
    if not v.ok:
        return rep
    sharp = build_st_sharp(a)
    rep["results"]["st_dim"] = sharp.model.dim
    rep["results"]["st_sharp_dim"] = sharp.dim
    _pass(rep, "extension passes structure suite")
    n0 = sharp.w_offset
    central = all(
        not sharp.fin_lie.table[w][y] and not sharp.fin_lie.table[y][w]
        for w in range(n0, sharp.dim)
        for y in range(sharp.dim)
    )
    _check(rep, "W block central", central, "nonzero bracket against W")
    return rep


def cmd_corpus(args):
    rep = _report("corpus", {"algebras": ", ".join(CORPUS_NAMES)})
    algs = corpus()
    # 1: table validity
    for a in algs:
        _check(rep, f"validate {a.name}", a.validate().ok, "table validation failed")
    # 2: degree-1 cyclic homology, both routes
    pinned = {"field": 0, "dual": 0, "trunc3": 0, "grassmann1": 1, "mat2": 0}
    for a in algs:
        cross = hc1_crosscheck(a)
        _check(
            rep,
            f"hc1 double route {a.name}",
            cross.pairing_dim == cross.complex_dim,
            f"pairing {cross.pairing_dim} != complex {cross.complex_dim}",
        )
        if a.name in pinned:
            _check(
                rep,
                f"hc1 value {a.name}",
                cross.pairing_dim == pinned[a.name],
                f"got {cross.pairing_dim}, pinned {pinned[a.name]}",
            )
    # 3: special linear suite over the shape grid
    shapes = [MatrixShape.parse(s) for s in ("2|1", "3|1", "2|2", "3|2")]
    for a in algs:
        for shape in shapes:
            res = sl_space(a, shape)
            ok = res.contained and res.equal and res.perfect
            _check(rep, f"sl suite {a.name} {shape}", ok, "criterion mismatch")
    # 4: Steinberg certification grid, dimension-capped
    for a in algs:
        for shape in shapes:
            try:
                model = build_model(a, shape, verify=False, max_dim=60)
            except ConstructionError as err:
                _skip(rep, f"st certification {a.name} {shape}", err)
                continue
            cert = certify_model(model)
            _check(rep, f"st certification {a.name} {shape}", cert.ok, cert)
    # 5: the 2|2 cocycle
    from .cocycle22 import Psi, build_W, build_st_sharp, verify_cocycle

    for name in ("field", "grassmann1"):
        a = builtin(name)
        _check(rep, f"cocycle verification {name}", verify_cocycle(a).ok, "cocycle identities fail")
        sharp = build_st_sharp(a)
        _check(
            rep,
            f"cocycle extension structure {name}",
            check_structure(sharp.fin_lie).ok,
            "structure suite fails",
        )
    g1 = builtin("grassmann1")
    mut_model = build_model(g1, MatrixShape(2, 2), verify=False)
    mut = Psi(mut_model, build_W(g1), drop_argument_parity=True)
    mv = verify_cocycle(g1, model=mut_model, psi=mut, max_witnesses=50)
    _check(
        rep,
        "cocycle sign mutation caught",
        not mv.jacobi_ok and any(w[0] == "jacobi" for w in mv.witnesses),
        "mutated sign passed the Jacobi sweep",
    )
    # 6: homology claim rows
    named_rows = [
        ("st", "field", "2|1"),
        ("st", "grassmann1", "2|1"),
        ("st", "field", "3|1"),
        ("st", "grassmann1", "3|1"),
        ("st", "field", "2|2"),
        ("st_sharp", "field", "2|2"),
        ("st", "field", "3|2"),
        ("sl", "grassmann1", "3|2"),
    ]
    for source, name, shp in named_rows:
        try:
            row = uce_verdict(source, builtin(name), MatrixShape.parse(shp), max_wedge3=args.max_wedge)
        except ResourceLimitError as err:
            _skip(rep, f"homology {source} {name} {shp}", err)
            continue
        _check(
            rep,
            f"homology {source} {name} {shp}",
            bool(row.match) and row.report.dd_zero,
            f"computed h2 = {row.computed}, expected {row.expected}",
        )
    # 7: degree-1 homology against perfectness
    perfect_checks = [("st", "field", "2|2"), ("st", "grassmann1", "2|1"), ("sl", "field", "3|2")]
    for source, name, shp in perfect_checks:
        L = concretize(source, builtin(name), MatrixShape.parse(shp), verify=False)
        srep = perfectness_and_center(L)
        _check(rep, f"h1 zero {source} {name} {shp}", srep.perfect, "not perfect")
    gl = concretize("gl", builtin("field"), MatrixShape.parse("2|1"), verify=False)
    _check(
        rep,
        "h1 nonzero gl field 2|1",
        not perfectness_and_center(gl).perfect,
        "gl unexpectedly perfect",
    )
    # 8: format round-trip
    for a in algs:
        doc = serialize_algebra(a)
        b = parse_algebra(doc)
        ok = b.table == a.table and b.parity == a.parity and b.unit == a.unit
        _check(rep, f"format round-trip {a.name}", ok, "reparse differs")
    try:
        parse_algebra("name x\nfield Fp:2\nbasis e:even\nunit e\n")
        _fail(rep, "characteristic 2 rejected", "document accepted")
    except AlgfileError:
        _pass(rep, "characteristic 2 rejected")
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for v in rep["verdicts"]:
        counts[v["status"]] += 1
    rep["results"].update(counts)
    return rep


def _parser():
    p = argparse.ArgumentParser(
        prog="superstein",
        description="Exact certification toolkit for matrix and Steinberg Lie superalgebras.",
    )
    p.add_argument("--version", action="version", version=f"superstein {__version__}")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, shape=False):
        sp.add_argument("--algebra", required=True, help="path to a definition file, or builtin:NAME")
        if shape:
            sp.add_argument("--shape", required=True, help='block sizes "m|n" (or "mxn")')
        sp.add_argument("--emit", choices=("text", "json"), default="text")
        sp.add_argument("--max-wedge", type=int, default=50000, help="degree-3 wedge basis cap")
        sp.add_argument("--max-chain", type=int, default=20000, help="tensor-power dimension cap")

    sp = sub.add_parser("validate", help="parse and validate an algebra table")
    sp.add_argument("algebra", help="path to a definition file, or builtin:NAME")
    sp.add_argument("--emit", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("hc", help="cyclic homology dimension")
    common(sp)
    sp.add_argument("--degree", type=int, default=1)
    sp.set_defaults(func=cmd_hc)

    sp = sub.add_parser("pairing", help="pairing module and its hc1 kernel")
    common(sp)
    sp.set_defaults(func=cmd_pairing)

    sp = sub.add_parser("sl", help="special linear subalgebra criteria")
    common(sp, shape=True)
    sp.set_defaults(func=cmd_sl)

    sp = sub.add_parser("st", help="Steinberg model construction")
    common(sp, shape=True)
    sp.add_argument("--verify", action="store_true", help="run the full certification suite")
    sp.set_defaults(func=cmd_st)

    sp = sub.add_parser("kernel", help="kernel of the projection onto matrices")
    common(sp, shape=True)
    sp.set_defaults(func=cmd_kernel)

    sp = sub.add_parser("homology", help="degree 1 and 2 homology with claim rows")
    common(sp, shape=True)
    sp.add_argument("--target", choices=("sl", "st", "stsharp"), required=True)
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("cocycle22", help="2|2 cocycle verification and extension")
    common(sp)
    sp.set_defaults(func=cmd_cocycle22)

    sp = sub.add_parser("corpus", help="full certification matrix over the builtins")
    sp.add_argument("--emit", choices=("text", "json"), default="text")
    sp.add_argument("--max-wedge", type=int, default=50000)
    sp.add_argument("--max-chain", type=int, default=20000)
    sp.set_defaults(func=cmd_corpus)

    return p


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    t0 = time.monotonic()
    try:
        rep = args.func(args)
    except _INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ConstructionError, ResourceLimitError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    rep["runtime_ms"] = int((time.monotonic() - t0) * 1000)
    _emit(rep, args.emit)
    return 1 if any(v["status"] == "fail" for v in rep["verdicts"]) else 0


if __name__ == "__main__":
    sys.exit(main())
