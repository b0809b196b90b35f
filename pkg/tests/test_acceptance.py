"""Acceptance gate: one test per advertised guarantee.

Each test prints a single PASS/FAIL line (visible with pytest -s) and
then asserts, so the suite doubles as a checklist.  Oracles are either
closed-form counts or independent brute-force recomputations.
"""

import itertools
import json
import math

import pytest

from finsimp.actions import (
    GroupoidAction,
    group_action,
    groupoid_nerve,
    is_saturated,
    validate_action,
)
from finsimp.categories import (
    arrow_category,
    categories_isomorphic,
    discrete_category,
    is_groupoid,
    join_categories,
    nerve,
    nerve_detect,
    poset_category,
    terminal_category,
)
from finsimp.cli import main
from finsimp.constructions import (
    join,
    join_parts,
    left_cone,
    product,
    right_cone,
    slice_over,
)
from finsimp.groups import (
    cyclic_group,
    left_cosets,
    one_object_groupoid,
    subgroup_closure,
    symmetric_group,
)
from finsimp.lifting import (
    has_unique_inner_fillers,
    is_kan,
    is_kan_fibration,
    is_quasicategory,
    is_trivial_fibration,
)
from finsimp.limits import colimit, limit, pi0
from finsimp.simplicial import (
    SimplexRef,
    SimplicialMap,
    discrete_simplicial_set,
    enumerate_maps,
    find_isomorphism,
    horn,
    simplex_boundary,
    simplices,
    standard_simplex,
    truncate,
    validate,
)

from conftest import category_corpus


def report(capsys, num, label, ok):
    # print outside pytest's capture so the checklist always shows
    with capsys.disabled():
        print(f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {label}", flush=True)
    assert ok, f"criterion {num} failed: {label}"


def constant_map_to_point(S):
    pt = standard_simplex(0)
    assign = {}
    for level in S.gens:
        for g in level:
            d = S.gen_dim[g]
            assign[g] = SimplexRef(tuple(range(d - 1, -1, -1)), "0", d)
    return SimplicialMap(S, pt, assign)


def test_criterion_01_simplicial_identities(corpus, capsys):
    pool = [standard_simplex(n) for n in range(5)]
    pool += [simplex_boundary(n)[0] for n in range(1, 5)]
    pool += [horn(n, i)[0] for n in range(1, 5) for i in range(n + 1)]
    nerves = [nerve(C, 3) for _, C, _ in corpus]
    pool += nerves

    small = [standard_simplex(0), standard_simplex(1), simplex_boundary(2)[0], nerves[1]]
    derived = []
    for A, B in itertools.product(small, repeat=2):
        derived.append(join(A, B))
        derived.append(product(A, B))
    for A in small:
        derived.append(left_cone(A).sset)
        derived.append(right_cone(A).sset)
    tri = standard_simplex(2)
    slice_maps = [
        SimplicialMap(standard_simplex(0), tri, {"0": SimplexRef((), "0", 0)}),
        SimplicialMap(standard_simplex(1), tri, {
            "0": SimplexRef((), "1", 0),
            "1": SimplexRef((), "2", 0),
            "01": SimplexRef((), "12", 1),
        }),
    ]
    for p in slice_maps:
        derived.append(slice_over(p, 2))

    violations = []
    for S in pool + derived:
        violations.extend(validate(S))
    report(capsys, 1, "simplicial identities hold on the full generated pool", not violations)


def test_criterion_02_join_cardinality(capsys):
    bz2 = truncate(nerve(one_object_groupoid(cyclic_group(2)), 3), 2)
    pool = [
        standard_simplex(0),
        standard_simplex(1),
        standard_simplex(2),
        simplex_boundary(2)[0],
        bz2,
    ]

    def sizes(S, n):
        return len(S.gens[n]) if n <= S.bound else 0

    ok = True
    for S, T in itertools.product(pool, repeat=2):
        J = join(S, T)
        for n in range(J.bound + 1):
            expected = sizes(S, n) + sizes(T, n)
            expected += sum(sizes(S, i) * sizes(T, n - 1 - i) for i in range(n))
            if len(J.gens[n]) != expected:
                ok = False
    report(capsys, 2, "join cardinality matches the level formula on all 25 pairs", ok)


def test_criterion_03_join_of_simplices(capsys):
    ok = True
    for i in range(4):
        for j in range(4 - i):
            J = join(standard_simplex(i), standard_simplex(j))
            if find_isomorphism(J, standard_simplex(i + j + 1)) is None:
                ok = False
    report(capsys, 3, "join of simplices is certified isomorphic to a simplex", ok)


def test_criterion_04_nerve_join_compatibility(corpus, capsys):
    by_name = {name: C for name, C, _ in corpus}
    pairs = [
        ("terminal", "terminal"),
        ("terminal", "arrow"),
        ("arrow", "terminal"),
        ("discrete2", "arrow"),
        ("bz2", "terminal"),
        ("walking_iso", "discrete2"),
    ]
    ok = True
    for left, right in pairs:
        C, D = by_name[left], by_name[right]
        NJ = truncate(nerve(join_categories(C, D), 3), 3)
        JN = truncate(join(nerve(C, 3), nerve(D, 3)), 3)
        if find_isomorphism(NJ, JN) is None:
            ok = False
    report(capsys, 4, "nerve of a categorical join matches the join of nerves to dim 3", ok)


def test_criterion_05_kan_iff_groupoid(corpus, capsys):
    ok = True
    for name, C, expected_groupoid in corpus:
        S = nerve(C, 3)
        res = is_kan(S, 3)
        if res.holds != is_groupoid(C).holds or res.holds != expected_groupoid:
            ok = False
        if not res.holds and res.witness.i not in (0, res.witness.n):
            ok = False  # failures must surface an outer horn
    report(capsys, 5, "Kan at depth 3 coincides with invertibility over the corpus", ok)


def test_criterion_06_quasicategory_and_round_trip(corpus, capsys):
    ok = True
    for name, C, _ in corpus:
        S = nerve(C, 3)
        if not is_quasicategory(S, 3).holds or not has_unique_inner_fillers(S, 3).holds:
            ok = False
        res = nerve_detect(S, 3)
        if res.category is None or not categories_isomorphic(res.category, C):
            ok = False
    report(capsys, 6, "every nerve is a quasi-category with unique fillers and detects back", ok)


def test_criterion_07_fibration_checks(capsys):
    S = nerve(one_object_groupoid(cyclic_group(2)), 3)
    p = constant_map_to_point(S)
    fib = is_kan_fibration(p, 3)

    edge = standard_simplex(1)
    q = constant_map_to_point(edge)
    triv = is_trivial_fibration(q, 1)
    swap = (
        triv.witness is not None
        and triv.witness.top.assign["0"].gen == "1"
        and triv.witness.top.assign["1"].gen == "0"
    )
    report(capsys, 7, "fibration verdicts with the vertex-swap witness", fib.holds and not triv.holds and swap)


def test_criterion_08_slice_counts(capsys):
    tri = standard_simplex(2)
    tet = standard_simplex(3)
    bz2 = nerve(one_object_groupoid(cyclic_group(2)), 3)

    def vertex_map(K, S, vertex):
        return SimplicialMap(K, S, {"0": SimplexRef((), vertex, 0)})

    def edge_map(S, edge_name, a, b):
        K = standard_simplex(1)
        return SimplicialMap(K, S, {
            "0": SimplexRef((), a, 0),
            "1": SimplexRef((), b, 0),
            "01": SimplexRef((), edge_name, 1),
        })

    two = discrete_simplicial_set(["u", "v"])
    instances = [
        vertex_map(standard_simplex(0), tri, "0"),
        vertex_map(standard_simplex(0), tri, "2"),
        edge_map(tri, "12", "1", "2"),
        edge_map(tet, "01", "0", "1"),
        vertex_map(standard_simplex(0), bz2, "pt"),
        SimplicialMap(two, tri, {"u": SimplexRef((), "0", 0), "v": SimplexRef((), "2", 0)}),
    ]

    ok = True
    for p in instances:
        sl = slice_over(p, 2)
        for n in range(3):
            parts = join_parts(standard_simplex(n), p.source)
            pins = {parts.right[g]: p.assign[g] for g in p.source.gen_dim}
            direct = len(enumerate_maps(parts.sset, p.target, fixed=pins))
            if len(simplices(sl, n)) != direct:
                ok = False
    report(capsys, 8, "slice simplex counts equal direct hom counts on six instances", ok)


def test_criterion_09_lattice_limits(capsys):
    divisors = ["1", "2", "3", "4", "6", "12"]
    C = poset_category(divisors, lambda a, b: int(b) % int(a) == 0)
    N = nerve(C, 4)
    two = discrete_simplicial_set(["u", "v"])

    ok = True
    for a, b in itertools.combinations(divisors, 2):
        p = SimplicialMap(two, N, {"u": N.generator(a), "v": N.generator(b)})
        meet = limit(p, 2)
        join_ = colimit(p, 2)
        if meet.apex != str(math.gcd(int(a), int(b))):
            ok = False
        if join_.apex != str(math.lcm(int(a), int(b))):
            ok = False
    report(capsys, 9, "limits and colimits recover gcd and lcm on all 15 divisor pairs", ok)


def test_criterion_10_product_shuffles(capsys):
    ok = True
    for p in range(5):
        for q in range(5 - p):
            P = product(standard_simplex(p), standard_simplex(q))
            if len(P.gens[p + q]) != math.comb(p + q, p):
                ok = False
    report(capsys, 10, "top cells of simplex products count binomial shuffles", ok)


def _lawful_actions():
    z2, z3, s3 = cyclic_group(2), cyclic_group(3), symmetric_group(3)
    swap = group_action(z2, ["x", "y"], {("g1", "x"): "y", ("g1", "y"): "x"})
    trivial = group_action(z2, ["a", "b", "c", "d"], {
        ("g1", p): p for p in ["a", "b", "c", "d"]
    })
    cycle = group_action(z3, ["0", "1", "2"], {
        (g, p): str((int(p) + k) % 3)
        for k, g in [(1, "g1"), (2, "g2")]
        for p in ["0", "1", "2"]
    })
    h = subgroup_closure(s3, ["p102"])
    cosets = left_cosets(s3, h)
    rep = {}
    for c in cosets:
        for m in c:
            rep[m] = c[0]
    coset_act = {
        (g, x): rep[s3.mul[(g, x)]]
        for g in s3.elements
        if g != s3.unit
        for x in [c[0] for c in cosets]
    }
    translation = group_action(s3, [c[0] for c in cosets], coset_act)
    return [swap, trivial, cycle, translation]


def test_criterion_11_action_axioms(capsys):
    actions = _lawful_actions()
    ok = all(not validate_action(A) for A in actions)

    mutants = []
    for A in actions:
        points = A.family.fibers["pt"]
        if len(points) < 2:
            continue
        for (g, x), y in sorted(A.act.items()):
            if g == A.base.identities["pt"]:
                continue
            for wrong in points:
                if wrong == y:
                    continue
                bad = dict(A.act)
                bad[(g, x)] = wrong
                mutants.append(GroupoidAction(A.family, bad))
    sample = mutants[:20]
    detected = all(validate_action(M) for M in sample)
    report(capsys, 11, "action laws pass on lawful actions and every mutant is caught",
           ok and len(sample) == 20 and detected)


def test_criterion_12_saturation_oracle(corpus, capsys):
    from finsimp.categories import as_groupoid

    ok = True
    checked = 0
    for name, C, groupoidal in corpus:
        if not groupoidal or len(C.objects) > 4:
            continue
        G = as_groupoid(C)
        comps = pi0(groupoid_nerve(G, 1))
        for r in range(len(G.objects) + 1):
            for Z in itertools.combinations(G.objects, r):
                zs = set(Z)
                oracle = all(set(c) <= zs or not (set(c) & zs) for c in comps)
                if is_saturated(G, Z).holds != oracle:
                    ok = False
                checked += 1
    report(capsys, 12, f"saturation equals the component-union oracle ({checked} subsets)", ok and checked > 0)


CLI_DOC = """
sset Interval {
  dim 1;
  gen 0 a b;
  gen 1 e;
  face e 0 -> [] b;
  face e 1 -> [] a;
}

groupoid Pair {
  obj x y;
  mor f: x -> y;
  mor fi: y -> x;
  comp fi.f = id_x;
  comp f.fi = id_y;
}

group Z2 {
  elements e t;
  unit e;
  mul t.t = e;
}

action Swap {
  group Z2;
  on p q;
  act t p = q;
  act t q = p;
}

map Incl: Interval -> Pair {
  a -> [] x;
  b -> [] y;
  e -> [] f;
}

category Vee {
  obj m a b;
  mor ma: m -> a;
  mor mb: m -> b;
}

sset Two {
  dim 0;
  gen 0 u v;
}

map Diag: Two -> Vee {
  u -> [] a;
  v -> [] b;
}
"""


def test_criterion_13_cli_determinism(tmp_path, capsys):
    doc = tmp_path / "doc.fs"
    doc.write_text(CLI_DOC)
    d = str(doc)
    invocations = [
        ["validate", d],
        ["nerve", d, "Pair", "--depth", "2"],
        ["detect-nerve", d, "Interval", "--depth", "1"],
        ["check-kan", d, "Pair", "--depth", "3"],
        ["check-qcat", d, "Pair", "--depth", "3"],
        ["check-fibration", d, "Incl", "--depth", "1"],
        ["check-trivial-fibration", d, "Incl", "--depth", "1"],
        ["join", d, "Interval", "Interval"],
        ["cone-left", d, "Two"],
        ["cone-right", d, "Two"],
        ["product", d, "Interval", "Interval"],
        ["slice", d, "Diag", "--depth", "1"],
        ["coslice", d, "Diag", "--depth", "1"],
        ["mapping-space", d, "Pair", "x", "y", "--depth", "1"],
        ["final", d, "Pair", "y"],
        ["initial", d, "Pair", "x"],
        ["limit", d, "Diag"],
        ["colimit", d, "Diag"],
        ["action-groupoid", d, "Swap"],
        ["restrict", d, "Pair", "x"],
        ["saturated", d, "Swap", "p@pt"],
        ["orbit-groupoid", d, "Z2", "t"],
        ["functor-groupoid", d, "Z2", "Z2"],
        ["iso", d, "Interval", "Interval"],
    ]
    ok = True
    for argv in invocations:
        runs = []
        for _ in range(2):
            code = main(argv + ["--json"])
            out = capsys.readouterr().out
            runs.append((code, out))
        if runs[0] != runs[1]:
            ok = False
            continue
        code, out = runs[0]
        verdict = json.loads(out)["verdict"]
        if (verdict == "pass") != (code == 0) or (verdict == "fail") != (code == 1):
            ok = False
    report(capsys, 13, "all 24 commands emit byte-identical reports with matching exits", ok)
