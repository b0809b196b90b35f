"""Horn filling, Kan and quasi-category checks, lifting problems.

Everything here is brute force over the finite simplex sets: a horn
map is an honest simplicial map out of a horn, a filler is a simplex
whose faces match it, and fibration checks enumerate commuting squares
against horn or boundary inclusions and search for diagonal lifts.

Checks on a truncated window refuse to look past its bound; on a
complete set any depth is allowed because everything above the bound
is degenerate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .simplicial import (
    SimplicialMap,
    TruncationError,
    compose,
    enumerate_maps,
    face,
    horn,
    simplex_boundary,
    simplices,
    standard_simplex,
    word_apply,
)


@dataclass
class HornMap:
    """A map out of the (n, i) horn, as a SimplicialMap from horn(n, i)."""

    n: int
    i: int
    assignment: SimplicialMap


@dataclass
class LiftingProblem:
    """A commuting square: left and right vertical, top and bottom horizontal."""

    left: SimplicialMap
    right: SimplicialMap
    top: SimplicialMap
    bottom: SimplicialMap

    def validate(self):
        report = []
        for m, label in [
            (self.left, "left"),
            (self.right, "right"),
            (self.top, "top"),
            (self.bottom, "bottom"),
        ]:
            report.extend(f"{label}: {line}" for line in m.validate())
        if not report and compose(self.right, self.top) != compose(self.bottom, self.left):
            report.append("square does not commute")
        return report


@dataclass
class HornCheckResult:
    holds: bool
    witness: HornMap | None
    checked_to: int

    def __bool__(self):
        return self.holds


@dataclass
class UniqueFillerResult:
    holds: bool
    witness: HornMap | None
    filler_count: int | None
    checked_to: int

    def __bool__(self):
        return self.holds


@dataclass
class FibrationResult:
    holds: bool
    witness: LiftingProblem | None
    checked_to: int

    def __bool__(self):
        return self.holds


def _facet_name(n, k):
    return "".join(str(v) for v in range(n + 1) if v != k)


def _guard_depth(S, N, what):
    if S.truncated and N > S.bound:
        raise TruncationError(
            f"{what} to depth {N} needs simplices past the window bound {S.bound}"
        )


def horn_maps(K, n, i):
    """All maps from the (n, i) horn into K, deterministically ordered."""
    H, _ = horn(n, i)
    return [HornMap(n, i, f) for f in enumerate_maps(H, K)]


def horn_fillers(K, hm):
    """All n-simplices of K whose faces away from i match the horn map."""
    return list(_filler_index(K, hm.n, hm.i).get(_horn_key(hm), ()))


def _filler_index(K, n, i):
    """Partial-face-tuple lookup: faces away from i -> fillers."""
    memo = K._index_memo
    key = ("horn", n, i)
    hit = memo.get(key)
    if hit is not None:
        return hit
    table = {}
    for z in simplices(K, n):
        partial = tuple(face(K, k, z) for k in range(n + 1) if k != i)
        table.setdefault(partial, []).append(z)
    memo[key] = table
    return table


def _horn_key(hm):
    n, i = hm.n, hm.i
    return tuple(hm.assignment.assign[_facet_name(n, k)] for k in range(n + 1) if k != i)


def is_kan(K, N):
    """Every horn map up to dimension N has a filler.

    Scans n ascending, then i ascending, then horn maps in their
    deterministic order, so the witness of a failure is reproducible.
    """
    if N < 1:
        raise ValueError("depth must be >= 1")
    _guard_depth(K, N, "Kan check")
    for n in range(1, N + 1):
        for i in range(n + 1):
            index = _filler_index(K, n, i)
            for hm in horn_maps(K, n, i):
                if not index.get(_horn_key(hm)):
                    return HornCheckResult(False, hm, N)
    return HornCheckResult(True, None, N)


def is_quasicategory(K, N):
    """Every inner horn map (0 < i < n) up to dimension N has a filler."""
    if N < 1:
        raise ValueError("depth must be >= 1")
    _guard_depth(K, N, "quasi-category check")
    for n in range(2, N + 1):
        for i in range(1, n):
            index = _filler_index(K, n, i)
            for hm in horn_maps(K, n, i):
                if not index.get(_horn_key(hm)):
                    return HornCheckResult(False, hm, N)
    return HornCheckResult(True, None, N)


def has_unique_inner_fillers(K, N):
    """Every inner horn map up to dimension N has exactly one filler."""
    if N < 1:
        raise ValueError("depth must be >= 1")
    _guard_depth(K, N, "unique-filler check")
    for n in range(2, N + 1):
        for i in range(1, n):
            index = _filler_index(K, n, i)
            for hm in horn_maps(K, n, i):
                count = len(index.get(_horn_key(hm), ()))
                if count != 1:
                    return UniqueFillerResult(False, hm, count, N)
    return UniqueFillerResult(True, None, None, N)


def solve_lift(problem, find_all=False):
    """Diagonal fillers for a lifting problem whose left map is an inclusion.

    The left map must send generators to non-degenerate simplices
    injectively (horn and boundary inclusions do); the lift is searched
    over maps from the left target pinned on the included part and
    constrained to project correctly.  Returns a single map (or None),
    or the full sorted list when find_all is set.
    """
    left, right, top, bottom = (
        problem.left,
        problem.right,
        problem.top,
        problem.bottom,
    )
    fixed = {}
    for a, r in left.assign.items():
        if r.word:
            raise ValueError("left map of the problem must be a generator inclusion")
        if r.gen in fixed and fixed[r.gen] != top.assign[a]:
            return [] if find_all else None
        fixed[r.gen] = top.assign[a]

    def constrain(g, cand):
        return word_apply(cand.word, right.assign[cand.gen]) == bottom.assign[g]

    sols = enumerate_maps(
        left.target,
        right.source,
        fixed=fixed,
        constrain=constrain,
        limit=None if find_all else 1,
    )
    if find_all:
        return sols
    return sols[0] if sols else None


def _simplex_map_from_simplex(n, K, z):
    """The map from the standard n-simplex classifying the n-simplex z of K."""
    S = standard_simplex(n)
    assign = {}
    for level in S.gens:
        for g in level:
            verts = [int(c) for c in g]
            cur = z
            # repeatedly face away the missing vertices, from the top
            missing = [v for v in range(n + 1) if v not in verts]
            for v in sorted(missing, reverse=True):
                cur = face(K, v, cur)
            assign[g] = cur
    return SimplicialMap(S, K, assign)


def is_kan_fibration(p, N):
    """Right lifting property against all horn inclusions up to dimension N.

    Enumerates every horn map into the source together with every
    compatible base simplex and searches for a filler upstairs; the
    witness of a failure is the full unsolvable square.
    """
    if N < 1:
        raise ValueError("depth must be >= 1")
    X, Y = p.source, p.target
    _guard_depth(X, N, "fibration check")
    _guard_depth(Y, N, "fibration check")
    for n in range(1, N + 1):
        for i in range(n + 1):
            _, incl = horn(n, i)
            for hm in horn_maps(X, n, i):
                below = HornMap(n, i, compose(p, hm.assignment))
                for zY in horn_fillers(Y, below):
                    if not _horn_lift_exists(p, hm, zY):
                        bottom = _simplex_map_from_simplex(n, Y, zY)
                        return FibrationResult(
                            False, LiftingProblem(incl, p, hm.assignment, bottom), N
                        )
    return FibrationResult(True, None, N)


def _horn_lift_exists(p, hm, zY):
    X = p.source
    n, i = hm.n, hm.i
    index = _filler_index(X, n, i)
    for zX in index.get(_horn_key(hm), ()):
        if word_apply(zX.word, p.assign[zX.gen]) == zY:
            return True
    return False


def is_trivial_fibration(p, N):
    """Right lifting property against all boundary inclusions up to dimension N."""
    if N < 1:
        raise ValueError("depth must be >= 1")
    X, Y = p.source, p.target
    _guard_depth(X, N, "trivial fibration check")
    _guard_depth(Y, N, "trivial fibration check")
    for n in range(1, N + 1):
        B, incl = simplex_boundary(n)
        sphere_maps = enumerate_maps(B, X)
        for t in sphere_maps:
            below = compose(p, t)
            for zY in _sphere_fillers(Y, below, n):
                if not _sphere_lift_exists(p, t, zY, n):
                    bottom = _simplex_map_from_simplex(n, Y, zY)
                    return FibrationResult(False, LiftingProblem(incl, p, t, bottom), N)
    return FibrationResult(True, None, N)


def _sphere_key(t, n):
    return tuple(t.assign[_facet_name(n, k)] for k in range(n + 1))


def _sphere_index(K, n):
    memo = K._index_memo
    key = ("sphere", n)
    hit = memo.get(key)
    if hit is not None:
        return hit
    table = {}
    for z in simplices(K, n):
        table.setdefault(tuple(face(K, k, z) for k in range(n + 1)), []).append(z)
    memo[key] = table
    return table


def _sphere_fillers(K, t, n):
    return _sphere_index(K, n).get(_sphere_key(t, n), ())


def _sphere_lift_exists(p, t, zY, n):
    X = p.source
    for zX in _sphere_fillers(X, t, n):
        if word_apply(zX.word, p.assign[zX.gen]) == zY:
            return True
    return False
