"""The seeded invariant battery behind ``semih1 selftest``.

Each case draws one random semidirect-product instance and runs every
invariant the toolkit promises: structural block laws, the block-condition
equivalence for derivations, containments among the map spaces, the
twisting-map identities, the conditional square-zero law for ideal-split
bases, the hypothesis-gated H1 quotient rules, and the construction-matched
special cases.  A failure is a result, not an exception: the battery
records it, attempts a bounded shrink to a smaller failing instance, and
reports pass/fail counts deterministically for a given seed.
"""

import random
from importlib import resources

from .algebra import (
    annihilator_in_algebra,
    annihilator_in_module,
    regular_action,
    span_left_action,
    span_right_action,
    validate_algebra,
)
from .families import random_matrix, random_product
from .linalg import (
    F0,
    F1,
    Matrix,
    Subspace,
    image,
    intersect,
    kernel,
    rref,
    subspace_sum,
)
from .spaces import (
    c_space,
    i_space,
    inner_map,
    leibniz_defect,
    r_map,
    r_space,
    u_inner_map,
)
from .verify import (
    THEOREM_IDS,
    hom_cap_z1u,
    h1_total,
    inner_characterization,
    is_derivation_via_3_1,
    n1_a,
    n1_au,
    n1_total,
    n1_u,
    hom_u,
    theorem_3_1_equivalence,
    verify_special_case,
    verify_theorem,
    z1_a,
    z1_au,
    z1_total,
    z1_u,
)


class CaseFailure(Exception):
    def __init__(self, check, detail):
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


def _fail(check, detail=""):
    raise CaseFailure(check, detail)


def _basis(n, i):
    v = [F0] * n
    v[i] = F1
    return v


def _check_structure(p):
    if not validate_algebra(p.total).ok:
        _fail("total-associative", p.name)
    n, m, t = p.n, p.m, p.dim
    mult = p.total.mult
    for i in range(n):
        for j in range(n):
            if any(mult[i][j][n:]):
                _fail("a-block-closed", (i, j))
            if mult[i][j][:n] != p.part_a.mult[i][j]:
                _fail("quotient-reproduces-a", (i, j))
    for r in range(t):
        for s in range(t):
            if r >= n or s >= n:
                if any(mult[r][s][:n]):
                    _fail("u-block-ideal", (r, s))
    comm_expected = (p.part_a.is_commutative() and p.part_u.algebra.is_commutative()
                     and p.part_u.action.is_symmetric())
    if p.total.is_commutative() != comm_expected:
        _fail("commutativity-criterion", p.name)


def _check_space_containments(p):
    for label, z, nn in (("total", z1_total(p), n1_total(p)),
                        ("A", z1_a(p), n1_a(p)),
                        ("A,U", z1_au(p), n1_au(p)),
                        ("U", z1_u(p), n1_u(p))):
        if not z.space.contains_subspace(nn.space):
            _fail("n1-in-z1", label)
    a, u = p.part_a, p.part_u
    homz1 = hom_cap_z1u(p).space
    r = r_space(a, u).space
    c = c_space(a, u).space
    ii = i_space(a, u).space
    n1u = n1_u(p).space
    z1u = z1_u(p).space
    if not z1u.contains_subspace(r):
        _fail("r-in-z1u")
    hom = hom_u(p).space
    if not intersect(hom, r).contains_subspace(c):
        _fail("c-in-hom-cap-r")
    if not intersect(hom, n1u).contains_subspace(ii):
        _fail("i-in-hom-cap-n1")
    chain_mid = intersect(hom, subspace_sum(r, n1u))
    if not chain_mid.contains_subspace(subspace_sum(c, ii)):
        _fail("chain-c+i-in-hom-cap-r+n1")
    if not homz1.contains_subspace(chain_mid):
        _fail("chain-hom-cap-r+n1-in-hom-cap-z1")
    if a.is_commutative() and r != c:
        _fail("commutative-r-equals-c")
    if u.action.is_symmetric() and n1u != ii:
        _fail("symmetric-action-n1-equals-i")
    if p.u_square_is_zero():
        if z1u.dim != p.m * p.m:
            _fail("usquare-z1-full", z1u.dim)
        if n1u.dim != 0 or ii.dim != 0:
            _fail("usquare-n1-i-zero")


def _check_twisting_identities(p):
    """The pointwise laws for r_a and the two inner-map families."""
    a, u = p.part_a, p.part_u
    act = u.action
    n, m = p.n, p.m
    umult = u.algebra.mult
    for i in range(n):
        ei = _basis(n, i)
        ra = r_map(ei, u)
        if leibniz_defect(ra, u.algebra, regular_action(u.algebra)) is not None:
            _fail("r_a-derivation", i)
        ida = inner_map(ei, a, regular_action(a))
        for j in range(n):
            for pp in range(m):
                up = _basis(m, pp)
                lhs = ra.apply(act.left[j][pp])
                rhs = act.act_left(_basis(n, j), ra.data[pp])
                for q, cc in enumerate(act.act_left(ida.data[j], up)):
                    rhs[q] += cc
                if lhs != rhs:
                    _fail("r_a(bx)-identity", (i, j, pp))
                lhs = ra.apply(act.right[pp][j])
                rhs = act.act_right(ra.data[pp], _basis(n, j))
                for q, cc in enumerate(act.act_right(up, ida.data[j])):
                    rhs[q] += cc
                if lhs != rhs:
                    _fail("r_a(xb)-identity", (i, j, pp))
    for p0 in range(m):
        x0 = _basis(m, p0)
        idu = u_inner_map(x0, u.algebra)
        ida = inner_map(x0, a, act)
        for i in range(n):
            for pp in range(m):
                up = _basis(m, pp)
                lhs = idu.apply(act.left[i][pp])
                rhs = act.act_left(_basis(n, i), idu.data[pp])
                for q, cc in enumerate(u.algebra.product(ida.data[i], up)):
                    rhs[q] += cc
                if lhs != rhs:
                    _fail("id_Ux(ax)-identity", (p0, i, pp))
                lhs = idu.apply(act.right[pp][i])
                rhs = act.act_right(idu.data[pp], _basis(n, i))
                for q, cc in enumerate(u.algebra.product(up, ida.data[i])):
                    rhs[q] += cc
                if lhs != rhs:
                    _fail("id_Ux(xa)-identity", (p0, i, pp))


def _check_converse_laws(p):
    """Hom membership forces the commutator to vanish, given faithfulness."""
    a, u = p.part_a, p.part_u
    n, m = p.n, p.m
    hom = hom_u(p).space
    if annihilator_in_algebra(a, u).dim == 0 and m > 0 and n > 0:
        rflat = Matrix.zeros(n, m * m)
        for i in range(n):
            rflat.data[i] = r_map(_basis(n, i), u).flatten()
        red = [hom.reduce(row) for row in rflat.data]
        inside = kernel(Matrix.from_rows(red, cols=m * m).transpose())
        for avec in inside.basis.data:
            if not inner_map(avec, a, regular_action(a)).is_zero():
                _fail("r_a-hom-forces-central", [str(x) for x in avec])
    if annihilator_in_module(u).dim == 0 and m > 0:
        iflat = Matrix.zeros(m, m * m)
        for pp in range(m):
            iflat.data[pp] = u_inner_map(_basis(m, pp), u.algebra).flatten()
        red = [hom.reduce(row) for row in iflat.data]
        inside = kernel(Matrix.from_rows(red, cols=m * m).transpose())
        for xvec in inside.basis.data:
            if not inner_map(xvec, a, u.action).is_zero():
                _fail("id_Ux-hom-forces-quiet", [str(x) for x in xvec])


def _check_ideal_split_law(p, a_sample):
    """A = I1 (+) I2, I2.U = U.I1 = 0 and a full action span force U^2 = 0."""
    if a_sample.split is None or p.m == 0:
        return
    d1, _ = a_sample.split
    act = p.part_u.action
    n, m = p.n, p.m
    i2_kills = all(not c for i in range(d1, n) for pp in range(m)
                   for c in act.left[i][pp])
    u_kills_i1 = all(not c for pp in range(m) for i in range(d1)
                     for c in act.right[pp][i])
    if not (i2_kills and u_kills_i1):
        return
    full_span = (span_left_action(act).dim == m) or (span_right_action(act).dim == m)
    if full_span and not p.u_square_is_zero():
        _fail("ideal-split-forces-usquare-zero", p.name)


def _check_inner_round_trip(p, rng):
    t = p.dim
    witness = [F1 * rng.randint(-2, 2) for _ in range(t)]
    d = inner_map(witness, p.total, regular_action(p.total))
    if not is_derivation_via_3_1(d, p):
        _fail("inner-map-passes-block-conditions")
    if inner_characterization(d, p) is None:
        _fail("inner-round-trip-missing-witness")


def _check_rules(p):
    reports = {}
    for rid in THEOREM_IDS:
        rep = verify_theorem(rid, p)
        reports[rid] = rep
        if rep.verdict == "MISMATCH":
            _fail(f"rule-{rid}", rep.as_dict())
    by_kind = []
    if p.action_is_trivial():
        by_kind += ["5.1", "5.3"]
    if p.u_square_is_zero():
        by_kind += ["ttd", "cte", "embed"]
    if p.character is not None:
        by_kind += ["lau-der", "a1", "prop10"]
    if p.kind == "alpha":
        by_kind.append("5.4")
    for rid in by_kind:
        rep = verify_special_case(rid, p)
        reports[rid] = rep
        if rep.verdict == "MISMATCH":
            _fail(f"rule-{rid}", rep.as_dict())
    # consequences of a trivial H1 under a verified quotient rule
    if h1_total(p) == 0:
        homz1 = hom_cap_z1u(p).space
        ci = subspace_sum(c_space(p.part_a, p.part_u).space,
                          i_space(p.part_a, p.part_u).space)
        if reports["4.1"].verdict == "verified":
            if z1_a(p).dim != n1_a(p).dim or homz1 != ci:
                _fail("corollary-4.1", p.name)
        if reports["4.2"].verdict == "verified":
            if z1_au(p).dim != n1_au(p).dim or homz1 != ci:
                _fail("corollary-4.2", p.name)
        if reports["4.3"].verdict == "verified":
            if z1_a(p).dim != n1_a(p).dim or z1_au(p).dim != n1_au(p).dim:
                _fail("corollary-4.3", p.name)
        if reports["4.4"].verdict == "verified" and homz1 != ci:
            _fail("corollary-4.4", p.name)
    return reports


def run_case(p, a_sample, rng):
    """Run the whole battery on one instance; raises CaseFailure."""
    _check_structure(p)
    rep = theorem_3_1_equivalence(p, samples=2, rng=rng)
    if rep.verdict != "verified":
        _fail("rule-3.1", rep.as_dict())
    _check_space_containments(p)
    _check_twisting_identities(p)
    _check_converse_laws(p)
    _check_ideal_split_law(p, a_sample)
    _check_inner_round_trip(p, rng)
    return _check_rules(p)


def _linalg_fuzz(rng, rounds):
    failures = []
    for k in range(rounds):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = random_matrix(rng, rows, cols)
        r = rref(m)
        if rref(r) != r:
            failures.append(("rref-idempotent", k))
        if kernel(m).dim + image(m).dim != cols:
            failures.append(("rank-nullity", k))
        amb = rng.randint(1, 6)
        sa = Subspace.from_vectors(
            amb, [random_matrix(rng, 1, amb).data[0] for _ in range(rng.randint(0, amb))])
        sb = Subspace.from_vectors(
            amb, [random_matrix(rng, 1, amb).data[0] for _ in range(rng.randint(0, amb))])
        total = subspace_sum(sa, sb)
        meet = intersect(sa, sb)
        if total.dim + meet.dim != sa.dim + sb.dim:
            failures.append(("modular-law", k))
        if total != subspace_sum(sb, sa) or meet != intersect(sb, sa):
            failures.append(("sum-intersect-commute", k))
        if not (total.contains_subspace(sa) and sa.contains_subspace(meet)):
            failures.append(("lattice-order", k))
    return failures


def _shrink(seed, max_dim, check, budget=60):
    """Look for a smaller instance failing the same check."""
    best = None
    rng = random.Random(f"{seed}:shrink:{check}")
    for dim in range(1, max_dim + 1):
        for attempt in range(budget // max_dim):
            try:
                p, a_sample = random_product(rng, dim)
            except Exception:
                continue
            try:
                run_case(p, a_sample, rng)
            except CaseFailure as f:
                if f.check == check and (best is None or p.dim < best["total_dim"]):
                    best = {"total_dim": p.dim, "instance": p.name, "check": f.check,
                            "detail": str(f.detail)}
    return best


def run_fixture_files():
    """Parse and run every packaged fixture; returns (count, failures)."""
    from .instancefile import parse_instance_text, run_jobs
    failures = []
    count = 0
    root = resources.files("semih1") / "fixtures"
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".json"):
            continue
        count += 1
        try:
            inst = parse_instance_text(entry.read_text(encoding="utf-8"),
                                       where=entry.name)
            doc, code = run_jobs(inst)
        except Exception as exc:  # a fixture must never fail to parse
            failures.append({"fixture": entry.name, "error": str(exc)})
            continue
        if code != 0:
            bad = [e for e in doc["jobs"] if e["status"] == "error"
                   or (e["job"]["cmd"] == "verify"
                       and e["result"]["verdict"] == "MISMATCH")]
            failures.append({"fixture": entry.name, "exit_code": code,
                             "jobs": [b["index"] for b in bad]})
    return count, failures


def selftest(seed=1, max_dim=3, cases=200, log=None):
    """Run the full battery; deterministic for a fixed (seed, max_dim, cases)."""
    if cases < 1:
        raise ValueError("cases must be >= 1")
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    rng = random.Random(seed)
    failures = []
    fixture_count, fixture_failures = run_fixture_files()
    for fail in fixture_failures:
        failures.append({"case": "fixture", "check": "fixture-run", "detail": fail})
    if log is not None:
        log(f"  fixtures: {fixture_count} run, {len(fixture_failures)} failing")
    verdicts = {"verified": 0, "hypotheses-not-met": 0}
    kinds = {}
    for fail in _linalg_fuzz(rng, max(10, cases // 4)):
        failures.append({"case": "linalg-fuzz", "check": fail[0], "detail": fail[1]})
    for case in range(cases):
        p, a_sample = random_product(rng, max_dim)
        kinds[p.kind] = kinds.get(p.kind, 0) + 1
        try:
            reports = run_case(p, a_sample, rng)
        except CaseFailure as f:
            entry = {"case": case, "instance": p.name, "check": f.check,
                     "detail": str(f.detail)}
            shrunk = _shrink(seed, max_dim, f.check)
            if shrunk is not None:
                entry["smallest_found"] = shrunk
            failures.append(entry)
            continue
        for rep in reports.values():
            verdicts[rep.verdict] = verdicts.get(rep.verdict, 0) + 1
        if log is not None and (case + 1) % 50 == 0:
            log(f"  {case + 1}/{cases} cases done")
    summary = {
        "seed": seed,
        "max_dim": max_dim,
        "cases": cases,
        "fixtures_checked": fixture_count,
        "fixture_failures": len(fixture_failures),
        "construction_counts": dict(sorted(kinds.items())),
        "rule_verdicts": dict(sorted(verdicts.items())),
        "failures": failures,
        "ok": not failures,
    }
    return summary
