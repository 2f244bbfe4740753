"""Command-line front end: ``lrsmash SUBCOMMAND FILE [BUNDLE...]``.

Exit status is 0 when every requested check passes, 1 when a check fails,
2 for usage or input-file errors and 3 for internal errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from .biproduct import (NotAdmissible, UnverifiedInput, build_biproduct, check_admissible,
                        check_auxiliary_identities, radford_biproduct, zhang_check)
from .double import PairingError, build_double_biproduct, induced_lr_structure, verify_phi
from .fileformat import ParseError, StructureFile, load
from .hopf import check_bialgebra, solve_antipode, solve_skew_antipode
from .linfield import Field, FieldError, chain, identity
from .lr import YdObject, check_lr_morphism, check_lr_object, verify_prebraided
from .report import Check, CheckReport

__all__ = ["main", "run_command", "resolve_path", "fixtures_dir", "WORKERS_ENV"]

WORKERS_ENV = "LRSMASH_WORKERS"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fixtures_dir() -> Path:
    return Path(str(resources.files("lrsmash") / "data"))


def resolve_path(name: str) -> Path:
    """A file path, optionally without ``.lrs``, or a shipped fixture name
    (with or without a leading ``fixtures/``)."""
    cands = [Path(name), Path(name + ".lrs")]
    short = name[len("fixtures/"):] if name.startswith("fixtures/") else name
    cands += [fixtures_dir() / short, fixtures_dir() / (short + ".lrs")]
    for c in cands:
        if c.is_file():
            return c
    raise UsageError(f"no such structure file: {name}")


def _parse_field(text: str | None) -> Field | None:
    if text is None:
        return None
    m = re.fullmatch(r"\s*(?:Q|(?:Fp|F|GF)?[\s:(]*(\d+)\)?)\s*", text)
    if not m:
        raise UsageError(f"bad --field {text!r} (use Q or Fp P)")
    try:
        return Field(int(m.group(1))) if m.group(1) else Field(0)
    except FieldError as e:
        raise UsageError(str(e)) from None


# ---------------------------------------------------------------------------
# per-command work; each returns (reports, emitted StructureFile or None)


def _pick(sf: StructureFile, names, kinds, what):
    if not names:
        names = [n for n in sf.names() if sf.kind(n) in kinds]
        if not names:
            raise UsageError(f"file holds no {what} bundle")
    for n in names:
        if n not in sf.bundles:
            raise UsageError(f"no bundle named {n!r}")
        if sf.kind(n) not in kinds:
            raise UsageError(f"bundle {n!r} is a {sf.kind(n)}, expected {what}")
    return names


def _one(sf, names, kinds, what):
    names = _pick(sf, names, kinds, what)
    if len(names) != 1:
        raise UsageError(f"this command takes one {what} bundle; file holds {', '.join(names)}")
    return names[0]


def cmd_check_bialgebra(sf, names, opts):
    reps = []
    for n in _pick(sf, names, ("bialgebra",), "bialgebra"):
        r = check_bialgebra(sf[n])
        r.title = f"bialgebra {n}"
        reps.append(r)
    return reps, None


def cmd_check_lr_object(sf, names, opts):
    reps = []
    for n in _pick(sf, names, ("lr-object", "candidate"), "lr-object or candidate"):
        obj = sf[n]
        r = check_lr_object(obj if sf.kind(n) == "lr-object" else obj.lr_object)
        r.title = f"lr-object {n}"
        reps.append(r)
    return reps, None


def cmd_check_morphism(sf, names, opts):
    reps = []
    for n in _pick(sf, names, ("morphism",), "morphism"):
        m = sf[n]
        r = check_lr_morphism(m.f, m.source, m.target)
        r.title = f"morphism {n}"
        reps.append(r)
    return reps, None


def cmd_admissible(sf, names, opts):
    reps = []
    kinds = ("candidate", "double-biproduct-input")
    for n in _pick(sf, names, kinds, "candidate or double-biproduct-input"):
        c = sf[n]
        if sf.kind(n) == "double-biproduct-input":
            # the candidate induced on A*B
            c = induced_lr_structure(c.A, c.B, f"{n}.induced")
        r = check_admissible(c)
        r.title = f"admissible {n}"
        reps.append(r)
        if opts.aux and r.passed:
            a = check_auxiliary_identities(c)
            a.title = f"auxiliary identities {n}"
            reps.append(a)
    return reps, None


def cmd_biproduct(sf, names, opts):
    n = _one(sf, names, ("candidate",), "candidate")
    res = build_biproduct(sf[n], override=opts.override)
    reps = [res.verification]
    if not res.verified:
        reps.append(CheckReport(f"status {n}", [Check("verified", False, note="built with --override")]))
    return reps, [(f"{n}.biproduct", res.bialgebra)]


def cmd_radford(sf, names, opts):
    n = _one(sf, names, ("yd", "candidate"), "left-left yd or candidate")
    obj = sf[n]
    if sf.kind(n) == "yd":
        if obj.side != "left" or obj.algebra is None:
            raise UsageError(f"{n!r} must be a left-left yd with algebra and coalgebra data")
        res = radford_biproduct(obj)
    else:
        V = YdObject(obj.H, obj.carrier, obj.actions.left, obj.coactions.left, "left",
                     obj.algebra, obj.coalgebra, n)
        res = radford_biproduct(V)
    res.extra.title = f"radford reduction {n}"
    return [res.verification, res.extra], [(f"{n}.radford", res.bialgebra)]


def cmd_zhang(sf, names, opts):
    reps = []
    for n in _pick(sf, names, ("candidate",), "candidate"):
        r = zhang_check(sf[n])
        r.title = f"zhang {n}"
        reps.append(r)
    return reps, None


def cmd_double_biproduct(sf, names, opts):
    n = _one(sf, names, ("double-biproduct-input",), "double-biproduct-input")
    res = build_double_biproduct(sf[n])
    return [res.pairing_check, res.verification], [(f"{n}.double", res.bialgebra)]


def cmd_phi_verify(sf, names, opts):
    n = _one(sf, names, ("double-biproduct-input",), "double-biproduct-input")
    inp = sf[n]
    dres = build_double_biproduct(inp)
    cand = induced_lr_structure(inp.A, inp.B)
    adm = check_admissible(cand)
    adm.title = f"induced candidate {n}"
    bres = build_biproduct(cand)
    phi = verify_phi(bres.bialgebra, dres.bialgebra, dres.phi)
    phi.title = f"phi {n}"
    return [dres.pairing_check, adm, bres.verification, dres.verification, phi], None


def cmd_braiding_verify(sf, names, opts):
    objs = [sf[n] for n in _pick(sf, names, ("lr-object",), "lr-object")]
    mors = [sf[n] for n in sf.names("morphism")
            if sf[n].source in objs and sf[n].target in objs]
    H = objs[0].H
    s_inv = solve_skew_antipode(H)
    rep = verify_prebraided(objs, mors, s_inv)
    rep.title = "braiding " + ", ".join(o.name for o in objs)
    if s_inv is None:
        rep.add(Check("skew-antipode", True, note="H has no skew antipode; inverse not checked"))
    return [rep], None


def cmd_antipode(sf, names, opts):
    reps = []
    for n in _pick(sf, names, ("bialgebra",), "bialgebra"):
        B = sf[n]
        rep = CheckReport(f"antipode {n}")
        S = solve_antipode(B)
        rep.add(Check("antipode", S is not None))
        if S is not None:
            rep.add(Check("skew-antipode", solve_skew_antipode(B) is not None))
            order, P = None, S
            for k in range(1, 2 * B.dim * B.dim + 1):
                if P == B.id():
                    order = k
                    break
                P = chain(S, P)
            sq = "S^2 = id" if chain(S, S) == identity(B.field, B.carrier) else "S^2 != id"
            rep.add(Check("antipode-order", order is not None, note=f"order {order}; {sq}"))
        reps.append(rep)
    return reps, None


COMMANDS = {
    "check-bialgebra": (cmd_check_bialgebra, "verify the seven bialgebra axioms"),
    "check-lr-object": (cmd_check_lr_object, "verify an object of LR(H)"),
    "check-morphism": (cmd_check_morphism, "verify a morphism of LR(H)"),
    "admissible": (cmd_admissible, "run the admissibility checker on candidates"),
    "biproduct": (cmd_biproduct, "build and verify the L-R-smash biproduct"),
    "radford": (cmd_radford, "Radford biproduct of a left-left YD bialgebra"),
    "zhang": (cmd_zhang, "the cocommutation conditions for the tensor-coalgebra case"),
    "double-biproduct": (cmd_double_biproduct, "build and verify A#H#B"),
    "phi-verify": (cmd_phi_verify, "compare the induced biproduct with A#H#B"),
    "braiding-verify": (cmd_braiding_verify, "braiding, hexagons, naturality and inverse"),
    "antipode": (cmd_antipode, "solve for antipode and skew antipode"),
}


def _parser():
    p = argparse.ArgumentParser(prog="lrsmash", description="Exact checks for L-R-smash biproducts.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name, (_, help_) in COMMANDS.items():
        s = sub.add_parser(name, help=help_, description=help_)
        s.add_argument("file", help="structure file or shipped fixture name")
        s.add_argument("bundles", nargs="*", help="bundle names (default: all applicable)")
        s.add_argument("--field", help="reduce a file declared over Q to Fp P")
        s.add_argument("--json", metavar="PATH", help="also write a machine-readable report")
        s.add_argument("--quiet", action="store_true", help="only print the final verdict")
        if name in ("biproduct", "radford", "double-biproduct"):
            s.add_argument("--emit", metavar="PATH", help="write the resulting bialgebra as a structure file")
        if name == "biproduct":
            s.add_argument("--override", action="store_true",
                           help="assemble even if admissibility fails (result is unverified)")
        if name == "admissible":
            s.add_argument("--aux", action="store_true", help="also check the auxiliary identities")
    return p


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _run_one(command, path, field_text, bundles, opts_dict):
    sf = load(path, _parse_field(field_text))
    opts = argparse.Namespace(**opts_dict)
    return COMMANDS[command][0](sf, bundles, opts)


def run_command(argv, out=None) -> tuple[int, list]:
    """Run one CLI invocation; returns the exit code and the list of reports."""
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return (EXIT_USAGE if e.code else EXIT_OK), []
    opts = {k: getattr(args, k) for k in ("override", "aux") if hasattr(args, k)}
    reports, emitted = [], None
    try:
        path = resolve_path(args.file)
        field = _parse_field(args.field)
        sf = load(path, field)
        names = args.bundles
        workers = _workers()
        fn = COMMANDS[args.command][0]
        if workers > 1 and len(names) > 1 and args.command not in ("braiding-verify",):
            # one bundle per task; results are merged in the order given
            with ProcessPoolExecutor(max_workers=workers) as ex:
                futs = [ex.submit(_run_one, args.command, str(path), args.field, [n], opts) for n in names]
                emitted = []
                for fu in futs:
                    reps, em = fu.result()
                    reports.extend(reps)
                    emitted.extend(em or [])
        else:
            reports, emitted = fn(sf, names, argparse.Namespace(**opts))
    except (UsageError, ParseError) as e:
        print(f"lrsmash: error: {e}", file=sys.stderr)
        return EXIT_USAGE, []
    except (NotAdmissible, UnverifiedInput, PairingError) as e:
        reports = [e.report]
        _emit_reports(reports, args, out, f"{type(e).__name__}: {e}")
        return EXIT_FAIL, reports
    except Exception as e:  # noqa: BLE001 - report, do not crash with a traceback
        print(f"lrsmash: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL, []
    if emitted and getattr(args, "emit", None):
        text = StructureFile.from_objects(sf.field, emitted).to_text()
        Path(args.emit).write_text(text, encoding="utf-8")
    ok = all(r.passed for r in reports)
    _emit_reports(reports, args, out)
    return (EXIT_OK if ok else EXIT_FAIL), reports


def _emit_reports(reports, args, out, error: str | None = None):
    ok = all(r.passed for r in reports) and error is None
    if not args.quiet:
        for r in reports:
            print(r.render(), file=out)
    if error:
        print(error, file=out)
    print("PASS" if ok else "FAIL", file=out)
    if args.json:
        doc = {"command": args.command, "file": args.file, "passed": ok,
               "reports": [r.to_dict() for r in reports]}
        if error:
            doc["error"] = error
        Path(args.json).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def main(argv=None) -> int:
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
