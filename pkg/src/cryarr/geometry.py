"""Chambers, walls and reflections of a central hyperplane arrangement.

An arrangement is given by a finite set of covectors (one per hyperplane,
up to sign).  Chambers are identified by their sign vector over the
positive covector representatives; every computation is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import NonSimplicialError
from .linalg import (
    clear_denominators,
    direction,
    dot,
    invert,
    kernel_vector,
    matrix_rank,
    sign_normalize,
    vec_neg,
)


@dataclass(frozen=True)
class RootSet:
    """A finite set of pairwise non-parallel covectors spanning the dual space.

    ``positives`` holds one representative per +/- pair, sign-normalized so
    the first nonzero coordinate is positive, sorted canonically.  The full
    root set is ``positives`` together with its negatives.
    """

    rank: int
    positives: tuple


def make_root_set(covectors, rank=None) -> RootSet:
    """Build a RootSet from covectors (a positive half suffices).

    Exact duplicates and negatives collapse; distinct parallel covectors
    are rejected because a root set contains each line only as +/- one pair.
    """
    covectors = [tuple(Fraction(x) for x in cov) for cov in covectors]
    if not covectors:
        raise ValueError("empty root set")
    r = rank if rank is not None else len(covectors[0])
    seen = {}
    for cov in covectors:
        if len(cov) != r:
            raise ValueError("covector length does not match rank")
        if all(x == 0 for x in cov):
            raise ValueError("zero covector")
        pos = sign_normalize(cov)
        key = direction(pos)
        if key in seen and seen[key] != pos:
            raise ValueError(f"parallel roots {seen[key]} and {pos}")
        seen[key] = pos
    positives = tuple(sorted(seen.values()))
    if matrix_rank(positives) != r:
        raise ValueError("roots do not span the dual space")
    return RootSet(rank=r, positives=positives)


@dataclass(frozen=True)
class Chamber:
    """An open simplicial chamber.

    ``signs[k]`` is the sign of the k-th positive covector on the chamber,
    ``rays[i]`` the primitive integer extreme ray at frame position i, and
    ``walls[i]`` the index of the positive covector whose kernel carries
    the wall opposite to all rays except ``rays[i]``.
    """

    signs: tuple
    rays: tuple
    walls: tuple


@lru_cache(maxsize=None)
def _ray_candidates(R: RootSet):
    """Candidate extreme rays: 1-dim intersections of (rank-1)-subsets of
    hyperplanes, with precomputed evaluations against all positive covectors."""
    n = len(R.positives)
    out = {}
    for subset in combinations(range(n), R.rank - 1):
        v = kernel_vector([R.positives[i] for i in subset], R.rank)
        if v is None:
            continue
        v = sign_normalize(v)
        if v not in out:
            out[v] = tuple(dot(R.positives[k], v) for k in range(n))
    return tuple(out.items())


@lru_cache(maxsize=None)
def _direction_index(R: RootSet):
    return {direction(cov): k for k, cov in enumerate(R.positives)}


def _rays_for_signs(R: RootSet, signs):
    rays = []
    for v, evs in _ray_candidates(R):
        vals = [s * e for s, e in zip(signs, evs)]
        if all(x >= 0 for x in vals):
            rays.append(v)
        elif all(x <= 0 for x in vals):
            rays.append(vec_neg(v))
    return rays


def _walls_for_rays(R: RootSet, rays):
    # dual covectors of the frame are rows of the inverse of the ray-column matrix
    m = invert([[ray[i] for ray in rays] for i in range(R.rank)])
    idx = _direction_index(R)
    walls = []
    for b in m:
        key = direction(b)
        if key not in idx:
            raise ValueError(f"wall covector {b} is not an arrangement hyperplane")
        walls.append(idx[key])
    return tuple(walls)


def _chamber_from_signs(R: RootSet, signs, frame=None) -> Chamber:
    rays = _rays_for_signs(R, signs)
    if len(rays) != R.rank:
        raise NonSimplicialError(signs, len(rays))
    if frame is None:
        # canonical frame order: signed wall covectors, lexicographically
        # descending, so standard-basis covectors come out as e1, e2, ...
        walls = _walls_for_rays(R, rays)

        def signed(i):
            cov = R.positives[walls[i]]
            return cov if signs[walls[i]] > 0 else vec_neg(cov)

        order = sorted(range(R.rank), key=signed, reverse=True)
        rays = [rays[i] for i in order]
        walls = tuple(walls[i] for i in order)
    else:
        have = set(rays)
        if set(frame) - have:
            raise ValueError("frame hint does not match chamber rays")
        rays = list(frame)
        walls = _walls_for_rays(R, rays)
    return Chamber(signs=tuple(signs), rays=tuple(rays), walls=walls)


def generic_point(R: RootSet):
    """Deterministic point off all hyperplanes: (1, t, t^2, ...) for the
    smallest positive integer t that works."""
    t = 1
    while True:
        p = tuple(t ** k for k in range(R.rank))
        if all(dot(cov, p) != 0 for cov in R.positives):
            return p
        t += 1


def initial_chamber(R: RootSet) -> Chamber:
    p = generic_point(R)
    signs = tuple(1 if dot(cov, p) > 0 else -1 for cov in R.positives)
    return _chamber_from_signs(R, signs)


def adjacent_chamber(R: RootSet, K: Chamber, i: int) -> Chamber:
    """The chamber across wall i of K, with frame labels propagated."""
    if not 0 <= i < R.rank:
        raise IndexError("wall index out of range")
    signs = list(K.signs)
    signs[K.walls[i]] *= -1
    rays = _rays_for_signs(R, signs)
    if len(rays) != R.rank:
        raise NonSimplicialError(tuple(signs), len(rays))
    kept = set(K.rays) - {K.rays[i]}
    new = [v for v in rays if v not in kept]
    if len(new) != 1:
        raise ValueError("wall crossing did not produce a unique new ray")
    frame = list(K.rays)
    frame[i] = new[0]
    return _chamber_from_signs(R, tuple(signs), frame=frame)


def chamber_graph(R: RootSet):
    """All chambers with consistently labelled walls, plus the crossing map.

    Returns (chambers, edges) where edges[(a, i)] = b means crossing wall i
    of chambers[a] lands in chambers[b].  Raises NonSimplicialError as soon
    as a chamber with other than ``rank`` extreme rays is met.
    """
    k0 = initial_chamber(R)
    chambers = [k0]
    index = {k0.signs: 0}
    edges = {}
    head = 0
    while head < len(chambers):
        ci = head
        head += 1
        K = chambers[ci]
        for i in range(R.rank):
            Kn = adjacent_chamber(R, K, i)
            j = index.get(Kn.signs)
            if j is None:
                j = len(chambers)
                index[Kn.signs] = j
                chambers.append(Kn)
            edges[(ci, i)] = j
    return chambers, edges


def enumerate_chambers(R: RootSet):
    return chamber_graph(R)[0]


def is_simplicial(R: RootSet) -> bool:
    try:
        chamber_graph(R)
    except NonSimplicialError:
        return False
    return True


def chamber_root_basis(R: RootSet, K: Chamber):
    """The wall roots of K, signed to be non-negative on K (the basis B^K)."""
    out = []
    for i in range(R.rank):
        idx = K.walls[i]
        cov = R.positives[idx]
        if K.signs[idx] < 0:
            cov = vec_neg(cov)
        out.append(cov)
    return tuple(out)


def scaled_rays(R: RootSet, K: Chamber):
    """Ray generators rescaled so the signed wall roots are their dual basis."""
    basis = chamber_root_basis(R, K)
    out = []
    for i in range(R.rank):
        s = dot(basis[i], K.rays[i])
        out.append(tuple(Fraction(c, 1) / s for c in K.rays[i]))
    return tuple(out)


def chamber_coordinates(R: RootSet, K: Chamber, covector, rays=None):
    """Coordinates of a covector in the signed wall-root basis of K."""
    if rays is None:
        rays = scaled_rays(R, K)
    return tuple(dot(covector, v) for v in rays)


@dataclass(frozen=True)
class AdjacentReflection:
    chamber: Chamber
    sigma: tuple       # reflection matrix with respect to the wall-root basis
    mu: tuple          # off-diagonal coefficients mu_j, j != i, ascending j
    beta_vee: tuple    # the unique normalized new ray generator


def adjacent_reflection(R: RootSet, K: Chamber, i: int) -> AdjacentReflection:
    """Cross wall i: the adjacent chamber, the unique reflection carrying the
    wall-root basis of K to the one of the neighbour, and its coefficients."""
    Kn = adjacent_chamber(R, K, i)
    basis = chamber_root_basis(R, K)
    w = Kn.rays[i]
    coeff = [dot(b, w) for b in basis]
    if coeff[i] >= 0:
        raise ValueError("new ray is not on the far side of the wall")
    scale = Fraction(-1, 1) / coeff[i]
    mu = {j: coeff[j] * scale for j in range(R.rank) if j != i}
    beta_vee = tuple(Fraction(c) * scale for c in w)
    sigma = []
    for a in range(R.rank):
        if a == i:
            sigma.append(tuple(Fraction(-1) if b == i else mu[b] for b in range(R.rank)))
        else:
            sigma.append(tuple(Fraction(int(a == b)) for b in range(R.rank)))
    return AdjacentReflection(
        chamber=Kn,
        sigma=tuple(sigma),
        mu=tuple(mu[j] for j in sorted(mu)),
        beta_vee=beta_vee,
    )


def cartan_of_chamber(R: RootSet, K: Chamber):
    """Cartan matrix of (K, B^K): 2 on the diagonal, -mu_{i,j} off it."""
    r = R.rank
    rows = []
    for i in range(r):
        refl = adjacent_reflection(R, K, i)
        row = []
        js = [j for j in range(r) if j != i]
        for j in range(r):
            if j == i:
                row.append(Fraction(2))
            else:
                row.append(-refl.mu[js.index(j)])
        rows.append(tuple(row))
    return tuple(rows)


def is_irreducible(R: RootSet) -> bool:
    """Connectivity of coordinate supports in the base-chamber frame."""
    K = initial_chamber(R)
    rays = scaled_rays(R, K)
    parent = list(range(R.rank))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cov in R.positives:
        coords = chamber_coordinates(R, K, cov, rays)
        support = [k for k, c in enumerate(coords) if c != 0]
        for a in support[1:]:
            ra, rb = find(a), find(support[0])
            if ra != rb:
                parent[ra] = rb
    return len({find(k) for k in range(R.rank)}) == 1


def primitive_hyperplanes(R: RootSet):
    """The arrangement as a set of primitive normal directions (forgets scaling)."""
    return frozenset(direction(cov) for cov in R.positives)
