"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for the nine lines alone.
"""

import io
import json
from functools import lru_cache
from importlib import resources

import pytest

from lrsmash.biproduct import (ROLES, build_biproduct, check_admissible, check_auxiliary_identities,
                               check_components, lr_agreement, radford_biproduct, zhang_check,
                               zhang_outcome)
from lrsmash.cli import run_command
from lrsmash.double import (DoubleBiproductInput, build_double_biproduct, check_double_input,
                            check_trivial_pairing, induced_lr_structure, verify_phi)
from lrsmash.fileformat import load, parse_structure_file, serialize
from lrsmash.fixtures import zhang_family
from lrsmash.hopf import BialgebraData, bialgebra, check_bialgebra, solve_antipode, solve_skew_antipode
from lrsmash.linfield import GF, chain
from lrsmash.lr import LRMorphism, verify_prebraided
from lrsmash.biproduct import smash_coproduct_coalgebra, smash_product_algebra
from lrsmash.randomized import random_candidates

DATA = resources.files("lrsmash") / "data"
F5 = GF(5)
RANDOM_COUNT, RANDOM_SEED = 200, 20261015


@lru_cache(maxsize=None)
def shipped():
    return {p.name[:-4]: load(p) for p in sorted(DATA.iterdir()) if p.name.endswith(".lrs")}


@lru_cache(maxsize=None)
def shipped_candidates():
    """Every candidate bundle in the shipped files, plus the candidates induced
    by every double-biproduct input."""
    out = []
    for stem, sf in shipped().items():
        for n in sf.names("candidate"):
            out.append((f"{stem}:{n}", sf[n]))
        for n in sf.names("double-biproduct-input"):
            d = sf[n]
            out.append((f"{stem}:{n}.induced", induced_lr_structure(d.A, d.B, f"{n}.induced")))
    return out


@lru_cache(maxsize=None)
def admissible_fixtures():
    return [(k, c) for k, c in shipped_candidates() if check_admissible(c).passed]


def line(n, title, ok, detail):
    return f"criterion {n} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"


# ---------------------------------------------------------------------------


def criterion_1():
    required = {"k-trivial:trivial-candidate", "sweedler-candidate:sweedler-candidate",
                "zhang-positive:zhang-positive", "double-input:double.induced"}
    fx = admissible_fixtures()
    bad = []
    for key, c in fx:
        v = build_biproduct(c).verification
        if not (v.passed and len(v) == 7):
            bad.append(key)
    missing = required - {k for k, _ in fx}
    ok = not bad and not missing
    return ok, f"{len(fx)} admissible fixtures, 7/7 axioms exact; failing={bad} missing={sorted(missing)}"


def criterion_2():
    sf = shipped()
    B = sf["sweedler-candidate"]["B"]
    h4 = sf["sweedler-h4"]["H4"]
    res = radford_biproduct(B)
    A = res.bialgebra
    mul = lambda a, b: A.mult.image(f"{a}*{b}")
    G, X, one = "1*g", "x*1", "1*1"
    rel = {
        "G^2=1": mul(G, G) == {one: 1},
        "X^2=0": mul(X, X) == {},
        "GX=-XG": mul(G, X) == {"x*g": -1} and mul(X, G) == {"x*g": 1},
        "D(X)=X(x)1+G(x)X": A.comult.image(X) == {f"{X}*{one}": 1, f"{G}*{X}": 1},
    }
    exact = all(getattr(A, r) == getattr(h4, r) for r in ("mult", "unit", "comult", "counit"))
    S = solve_antipode(A)
    I = A.id()
    order = S is not None and chain(S, S) != I and chain(S, S, S, S) == I
    ok = res.passed and A.carrier.dim == 4 and all(rel.values()) and exact and order
    bad = [k for k, v in rel.items() if not v]
    return ok, (f"dim {A.carrier.dim}, suite {'pass' if res.passed else 'fail'}, relations "
                f"{'hold' if not bad else bad}, H4 bit-exact={exact}, S^2!=id and S^4=id: {order}")


def criterion_3():
    sf = shipped()["lr-objects"]
    objs = [sf[n] for n in sf.names("lr-object")]
    mors = [LRMorphism(m.f, m.source, m.target, n) for n, m in
            ((n, sf[n]) for n in sf.names("morphism"))]
    H = objs[0].H
    s_inv = solve_skew_antipode(H)
    rep = verify_prebraided(objs, mors, s_inv)
    kinds = {k: sum(1 for c in rep if k in c.name) for k in
             ("lr-morphism", "inverse", "hexagon-1", "hexagon-2", "natural")}
    return rep.passed, f"{len(rep)} checks over {len(objs)} objects, {len(mors)} morphisms {kinds}; " \
                       f"failures={len(rep.failures)}"


def criterion_4():
    fixtures = [c for _, c in shipped_candidates()]
    rnd = random_candidates(RANDOM_COUNT, seed=RANDOM_SEED, p=5)
    outcomes = [(lr_agreement(c), c) for c in fixtures + rnd]
    bad = [c.name for chk, c in outcomes if not chk.passed]
    in_lr = sum(1 for chk, _ in outcomes if chk.note.startswith("in-LR=pass"))
    ok = not bad and len(rnd) >= 200 and all(c.carrier.dim <= 3 for c in rnd)
    return ok, (f"{len(rnd)} random F5 + {len(fixtures)} fixtures; {in_lr} in LR, "
                f"{len(outcomes) - in_lr} not; disagreements={bad}")


def criterion_5():
    sf = shipped()
    d = sf["double-input"]["double"]
    bad_in = sf["double-input-bad-pairing"]["double-bad"]
    inp_ok = check_double_input(d).passed
    pairing = check_trivial_pairing(d.A, d.B).passed
    res = build_double_biproduct(d)
    cand = induced_lr_structure(d.A, d.B)
    adm = check_admissible(cand).passed
    smash = BialgebraData(smash_product_algebra(cand), smash_coproduct_coalgebra(cand))
    phi = verify_phi(smash, res.bialgebra, res.phi)
    bad = check_admissible(induced_lr_structure(bad_in.A, bad_in.B))["coaction-action-cancellation"]
    witness = (not bad.passed) and bad.witness.inputs == ("1*y", "x*1")
    ok = (inp_ok and pairing and res.bialgebra.carrier.dim == 8 and res.passed and adm
          and phi.passed and witness)
    return ok, (f"input={inp_ok} pairing={pairing} dim={res.bialgebra.carrier.dim} suite={res.passed} "
                f"induced all-pass={adm} phi {sum(c.passed for c in phi)}/{len(phi)}; "
                f"bad pairing fails extra condition at {bad.witness.inputs if bad.witness else None}")


def criterion_6():
    sf = shipped()
    named = [sf["zhang-positive"][n] for n in sf["zhang-positive"].names("candidate")]
    named += [sf["zhang-negative"][n] for n in sf["zhang-negative"].names("candidate")]
    inputs = named + zhang_family()
    bad, pos = [], 0
    for c in inputs:
        rep = zhang_check(c)
        cond, suite = zhang_outcome(rep), rep["tensor-coalgebra-smash-is-bialgebra"].passed
        pos += cond
        if cond != suite:
            bad.append(c.name)
    neg = zhang_check(sf["zhang-negative"]["zhang-negative"])
    w = neg["left-action-cocommutes"].witness
    neg_ok = w is not None and w.inputs == ("x*1", "x") and \
        not neg["tensor-coalgebra-smash-is-bialgebra"].passed
    ok = not bad and neg_ok
    return ok, (f"{len(inputs)} inputs ({pos} satisfy both conditions), iff violations={bad}; "
                f"H4 counterexample witness {w.inputs if w else None}, suite fails={neg_ok}")


def _mutations(c):
    for role in ROLES:
        m = c.structure(role)
        for i in range(m.matrix.shape[0]):
            for j in range(m.matrix.shape[1]):
                for d in (1, -1):
                    yield c.with_structure(role, m.with_entry(i, j, (m.matrix[i, j] + d) % 5))
    H = c.H
    for role in ("mult", "unit", "comult", "counit"):
        m = getattr(H, role)
        for i in range(m.matrix.shape[0]):
            for j in range(m.matrix.shape[1]):
                for d in (1, -1):
                    maps = dict(mult=H.mult, unit=H.unit, comult=H.comult, counit=H.counit)
                    maps[role] = m.with_entry(i, j, (m.matrix[i, j] + d) % 5)
                    yield c.replace(H=bialgebra(**maps))


def criterion_7():
    c = load(DATA / "sweedler-candidate.lrs", F5)["sweedler-candidate"]
    caught = {"components": 0, "admissibility": 0, "suite": 0}
    silent = 0
    for v in _mutations(c):
        if not check_components(v).passed:
            caught["components"] += 1
        elif not check_admissible(v).passed:
            caught["admissibility"] += 1
        elif not build_biproduct(v, override=True).verification.passed:
            caught["suite"] += 1
        else:
            silent += 1
    total = silent + sum(caught.values())
    return silent == 0, f"{total} single-entry F5 perturbations; caught {caught}; silent={silent}"


def criterion_8():
    fx = admissible_fixtures()
    bad = [k for k, c in fx if not check_auxiliary_identities(c).passed]
    return not bad, f"{len(fx)} admissible fixtures, both identities exact; failing={bad}"


def criterion_9():
    mismatched = []
    for p in sorted(DATA.iterdir()):
        if p.name.endswith(".lrs"):
            text = p.read_text()
            if serialize(parse_structure_file(text)) != text:
                mismatched.append(p.name)
    runs = [("admissible", "fixtures/sweedler-broken-rho"), ("double-biproduct", "fixtures/double-input"),
            ("braiding-verify", "fixtures/lr-objects"), ("zhang", "fixtures/zhang-negative")]
    unstable = []
    for argv in runs:
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            code, reps = run_command(list(argv), buf)
            outs.append((code, buf.getvalue(), json.dumps([r.to_dict() for r in reps], sort_keys=True)))
        if outs[0] != outs[1]:
            unstable.append(" ".join(argv))
    ok = not mismatched and not unstable
    return ok, (f"round trip bit-exact on all shipped files (mismatched={mismatched}); "
                f"{len(runs)} commands byte-identical across runs (unstable={unstable})")


CRITERIA = [
    (1, "biproduct of every admissible fixture is a bialgebra", criterion_1),
    (2, "Sweedler regression and antipode order", criterion_2),
    (3, "prebraiding suite", criterion_3),
    (4, "LR-bialgebra iff first thirteen conditions", criterion_4),
    (5, "double biproduct, induced pair and phi", criterion_5),
    (6, "Zhang iff", criterion_6),
    (7, "mutation soundness", criterion_7),
    (8, "auxiliary identities", criterion_8),
    (9, "I/O determinism", criterion_9),
]


@pytest.mark.parametrize("n,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(n, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + line(n, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    for n, title, fn in CRITERIA:
        print(line(n, title, *fn()))
