"""Mapping spaces, connected components, final/initial vertices, (co)limits.

The mapping space between two vertices is modelled on cylinders: its
n-simplices are the maps from (standard n-simplex) x (edge) that
collapse the two ends of the cylinder to the chosen vertices.  A
vertex is final when every sphere ending at it fills, up to the
requested depth; limits are final vertices of the slice, colimits
initial vertices of the coslice.  Everything reports witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import (
    coslice_data,
    join_parts,
    product_of_maps,
    product_parts,
    slice_data,
)
from .simplicial import (
    SimplexRef,
    SimplicialMap,
    TruncationError,
    codegeneracy_map,
    coface_map,
    compose,
    enumerate_maps,
    face,
    from_level_data,
    identity_map,
    simplex_boundary,
    simplices,
    standard_simplex,
)


def _require_vertex(S, v):
    if v not in S.gen_dim or S.gen_dim[v] != 0:
        raise ValueError(f"'{v}' is not a vertex")


def mapping_space(C, x, y, depth):
    """The space of paths from x to y in C, as a truncated simplicial set.

    Level n enumerates the cylinder maps (n-simplex x edge) -> C whose
    0-end collapses to x and whose 1-end collapses to y.  Needs
    simplices of C up to dimension depth+1, so a window must be at
    least that deep.
    """
    _require_vertex(C, x)
    _require_vertex(C, y)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if C.truncated and depth + 1 > C.bound:
        raise TruncationError(
            f"mapping space to depth {depth} needs simplices past the window bound {C.bound}"
        )
    edge = standard_simplex(1)

    def end_pin(parts):
        pin = {}
        for name, (r1, r2) in parts.pairs.items():
            if r2.gen == "0":
                pin[name] = SimplexRef(tuple(range(r1.dim - 1, -1, -1)), x, r1.dim)
            elif r2.gen == "1":
                pin[name] = SimplexRef(tuple(range(r1.dim - 1, -1, -1)), y, r1.dim)
        return pin

    levels = []
    for n in range(depth + 1):
        parts = product_parts(standard_simplex(n), edge)
        levels.append(enumerate_maps(parts.sset, C, fixed=end_pin(parts)))

    def face_fn(n, k, F):
        return compose(F, product_of_maps(coface_map(n, k), identity_map(edge)))

    def degeneracy_fn(n, k, F):
        return compose(F, product_of_maps(codegeneracy_map(n + 1, k), identity_map(edge)))

    sset, _ = from_level_data(levels, face_fn, degeneracy_fn, truncated=True)
    return sset


def pi0(S):
    """Connected components: vertex partition under the edge relation."""
    if S.bound < 0:
        return ()
    if S.truncated and S.bound < 1:
        raise TruncationError("components need the 1-skeleton of the window")
    parent = {v: v for v in S.gens[0]}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    if S.bound >= 1:
        for e in S.gens[1]:
            d0, d1 = S.face_table[e]
            a, b = find(d0.gen), find(d1.gen)
            if a != b:
                parent[a] = b
    comps = {}
    for v in S.gens[0]:
        comps.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(c)) for c in sorted(comps.values()))


@dataclass
class FinalityResult:
    holds: bool
    witness: SimplicialMap | None
    checked_to: int

    def __bool__(self):
        return self.holds


def _sphere_extends(C, t, n):
    want = tuple(
        t.assign["".join(str(v) for v in range(n + 1) if v != k)] for k in range(n + 1)
    )
    for z in simplices(C, n):
        if all(face(C, k, z) == want[k] for k in range(n + 1)):
            return True
    return False


def _extension_check(C, v, N, pinned_vertex):
    _require_vertex(C, v)
    if N < 1:
        raise ValueError("depth must be >= 1")
    if C.truncated and N > C.bound:
        raise TruncationError(
            f"finality check to depth {N} needs simplices past the window bound {C.bound}"
        )
    for n in range(1, N + 1):
        B, _ = simplex_boundary(n)
        pin = {pinned_vertex(n): C.generator(v)}
        for t in enumerate_maps(B, C, fixed=pin):
            if not _sphere_extends(C, t, n):
                return FinalityResult(False, t, N)
    return FinalityResult(True, None, N)


def is_final(C, v, N):
    """Every sphere with last vertex v extends to a simplex, up to depth N."""
    return _extension_check(C, v, N, lambda n: str(n))


def is_initial(C, v, N):
    """Every sphere with first vertex v extends to a simplex, up to depth N."""
    return _extension_check(C, v, N, lambda n: "0")


@dataclass
class ConeResult:
    """Outcome of a limit/colimit search.

    `apex` is the winning vertex of the ambient set and `cone` the
    corresponding cone map out of (or into) the join; `passers` lists
    the apexes of every cone vertex that passed, in the deterministic
    enumeration order of the slice.
    """

    apex: str | None
    cone: SimplicialMap | None
    verified_to: int
    passers: tuple

    def __bool__(self):
        return self.apex is not None


def limit(p, N):
    """A limit cone of the diagram p : K -> S, certified to depth N.

    Builds the slice to depth N and scans its vertices for finality;
    the first passer in enumeration order wins.
    """
    if N < 1:
        raise ValueError("depth must be >= 1")
    sl, _, vertex_of = slice_data(p, N)
    parts = join_parts(standard_simplex(0), p.source)
    apex_gen = parts.left.get("0", "0")

    def apex_of(F):
        return F.assign[apex_gen].gen

    winner = None
    passers = []
    for name in sl.gens[0]:
        if is_final(sl, name, N).holds:
            F = vertex_of[name]
            passers.append(apex_of(F))
            if winner is None:
                winner = (apex_of(F), F)
    if winner is None:
        return ConeResult(None, None, N, ())
    return ConeResult(winner[0], winner[1], N, tuple(passers))


def colimit(p, N):
    """A colimit cone of p : K -> S, dual to limit via the coslice."""
    if N < 1:
        raise ValueError("depth must be >= 1")
    co, _, vertex_of = coslice_data(p, N)
    parts = join_parts(p.source, standard_simplex(0))
    apex_gen = parts.right.get("0", "0")

    def apex_of(F):
        return F.assign[apex_gen].gen

    winner = None
    passers = []
    for name in co.gens[0]:
        if is_initial(co, name, N).holds:
            F = vertex_of[name]
            passers.append(apex_of(F))
            if winner is None:
                winner = (apex_of(F), F)
    if winner is None:
        return ConeResult(None, None, N, ())
    return ConeResult(winner[0], winner[1], N, tuple(passers))
