"""Simplicial complexes with a free involution.

Carries the fixture generators (crosspolytope boundaries, barycentric
subdivision, a flat torus), the quotient construction with its double
cover bookkeeping, and admissible labellings of vertices by signed
ground-set elements.  Complexes are immutable after construction;
validators return verdicts instead of raising so that deliberately
broken inputs can be inspected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .signvectors import CrossPolytopeFace


class QuotientNotSimplicialError(Exception):
    """Quotient by the involution is not a simplicial complex.

    Barycentric subdivision (twice always suffices) repairs this.
    """


class LabellingInadmissibleError(Exception):
    """No admissible labelling was produced; subdivide and retry."""


class InvalidComplexError(Exception):
    """Operation requires a complex that passes validate_z2_manifold."""

    def __init__(self, verdict: "ComplexVerdict"):
        super().__init__(f"invalid complex: {verdict.reason} (witness {verdict.witness!r})")
        self.verdict = verdict


def _simplex_key(simplex: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(simplex))


class SimplicialComplex:
    """Finite simplicial complex given by its top simplices.

    The simplex set is the downward closure of the facets.  Instances
    are treated as immutable; derived data is cached on the instance.
    """

    def __init__(self, n: int, vertices, facets):
        self.n = n
        self.vertices = tuple(sorted(set(vertices)))
        self.facets = frozenset(frozenset(f) for f in facets)
        vertex_set = set(self.vertices)
        for f in self.facets:
            if not f <= vertex_set:
                raise ValueError(f"facet {sorted(f)} uses unknown vertices")
        self._cache: dict = {}

    def simplices(self, d: int) -> tuple[frozenset[int], ...]:
        """All d-simplices, sorted by vertex tuple."""
        key = ("simplices", d)
        if key not in self._cache:
            if d < 0 or d > self.n:
                found: set[frozenset[int]] = set()
            else:
                found = {
                    frozenset(c) for f in self.facets for c in combinations(sorted(f), d + 1)
                }
            self._cache[key] = tuple(sorted(found, key=_simplex_key))
        return self._cache[key]

    def sorted_facets(self) -> tuple[frozenset[int], ...]:
        if "sorted_facets" not in self._cache:
            self._cache["sorted_facets"] = tuple(sorted(self.facets, key=_simplex_key))
        return self._cache["sorted_facets"]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(self.simplices(d)) for d in range(self.n + 1))


class Z2Complex(SimplicialComplex):
    """Simplicial complex with a (purported) free simplicial involution.

    ``involution`` maps every vertex to its partner.  ``coords`` is an
    optional exact coordinate map used by the labelling generator; when
    present it must satisfy coords(involution(v)) = -coords(v).
    """

    def __init__(self, n, vertices, facets, involution, coords=None):
        super().__init__(n, vertices, facets)
        self.involution = dict(involution)
        missing = [v for v in self.vertices if v not in self.involution]
        if missing:
            raise ValueError(f"involution undefined on vertices {missing[:3]}")
        self.coords = None
        if coords is not None:
            self.coords = {v: tuple(Fraction(c) for c in coords[v]) for v in self.vertices}

    def nu(self, v: int) -> int:
        return self.involution[v]

    def nu_simplex(self, simplex: frozenset[int]) -> frozenset[int]:
        return frozenset(self.involution[v] for v in simplex)

    def with_coords(self, coords) -> "Z2Complex":
        return Z2Complex(self.n, self.vertices, self.facets, self.involution, coords)

    def orbit_representative(self, v: int) -> int:
        return min(v, self.involution[v])


@dataclass(frozen=True)
class ComplexVerdict:
    ok: bool
    reason: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_z2_manifold(k: Z2Complex) -> ComplexVerdict:
    """Check the closed free Z2-pseudomanifold hypotheses.

    Pass requires: pure dimension n, every (n-1)-simplex in exactly two
    facets, connected facet adjacency, and an involution that is
    involutive, simplicial, and free on vertices and on all simplices.
    The manifold hypothesis is checked only at pseudomanifold strength;
    link conditions are not examined.
    """
    if "validate" in k._cache:
        return k._cache["validate"]
    verdict = _validate_z2_manifold(k)
    k._cache["validate"] = verdict
    return verdict


def _validate_z2_manifold(k: Z2Complex) -> ComplexVerdict:
    if not k.facets:
        return ComplexVerdict(False, "no-facets")
    for f in k.facets:
        if len(f) != k.n + 1:
            return ComplexVerdict(False, "not-pure", (_simplex_key(f),))
    for v in k.vertices:
        if k.involution[v] not in k.involution:
            return ComplexVerdict(False, "involution-not-total", (v,))
        if k.involution[k.involution[v]] != v:
            return ComplexVerdict(False, "involution-not-involutive", (v,))
        if k.involution[v] == v:
            return ComplexVerdict(False, "involution-fixed-vertex", (v,))
    for f in k.facets:
        if k.nu_simplex(f) not in k.facets:
            return ComplexVerdict(False, "involution-not-simplicial", (_simplex_key(f),))
    for d in range(k.n + 1):
        for s in k.simplices(d):
            if k.nu_simplex(s) == s:
                return ComplexVerdict(False, "involution-fixed-simplex", (_simplex_key(s),))
    if k.n >= 1:
        ridge_count: dict[frozenset[int], int] = {}
        for f in k.facets:
            for ridge in combinations(sorted(f), k.n):
                ridge_count[frozenset(ridge)] = ridge_count.get(frozenset(ridge), 0) + 1
        for ridge, count in ridge_count.items():
            if count != 2:
                return ComplexVerdict(False, "ridge-degree", (_simplex_key(ridge), count))
    if not _facets_connected(k):
        return ComplexVerdict(False, "disconnected")
    return ComplexVerdict(True)


def _facets_connected(k: SimplicialComplex) -> bool:
    facets = k.sorted_facets()
    if len(facets) <= 1:
        return True
    if k.n == 0:
        return len(facets) == 1
    by_ridge: dict[frozenset[int], list[int]] = {}
    for i, f in enumerate(facets):
        for ridge in combinations(sorted(f), k.n):
            by_ridge.setdefault(frozenset(ridge), []).append(i)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for ridge in combinations(sorted(facets[i]), k.n):
            for j in by_ridge[frozenset(ridge)]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == len(facets)


def crosspolytope_boundary(k: int) -> Z2Complex:
    """Boundary complex of the k-crosspolytope with the antipodal map.

    Vertices are the signed labels +-1, ..., +-k; facets are the 2^k
    ways to pick one vertex from each antipodal pair.
    """
    if k <= 0:
        raise ValueError("crosspolytope dimension must be positive")
    vertices = [s * i for i in range(1, k + 1) for s in (1, -1)]
    facets = []
    for signs in _sign_patterns(k):
        facets.append(frozenset(s * i for i, s in zip(range(1, k + 1), signs)))
    involution = {v: -v for v in vertices}
    coords = {
        v: tuple(
            Fraction(1 if v > 0 else -1) if abs(v) == i else Fraction(0)
            for i in range(1, k + 1)
        )
        for v in vertices
    }
    return Z2Complex(k - 1, vertices, facets, involution, coords)


def _sign_patterns(k: int):
    for bits in range(1 << k):
        yield tuple(1 if bits & (1 << i) else -1 for i in range(k))


def barycentric_subdivide(k: Z2Complex) -> Z2Complex:
    """Barycentric subdivision with the induced involution.

    New vertices are the simplices of k, numbered in (dimension, vertex
    tuple) order; facets are the maximal chains inside each facet.
    Freeness of the induced involution follows from freeness on
    simplices, which validation guarantees.
    """
    verdict = validate_z2_manifold(k)
    if not verdict:
        raise InvalidComplexError(verdict)
    all_simplices = [s for d in range(k.n + 1) for s in k.simplices(d)]
    index = {s: i for i, s in enumerate(all_simplices)}
    facets = []
    for facet in k.sorted_facets():
        for order in permutations(sorted(facet)):
            chain = [frozenset(order[: i + 1]) for i in range(len(order))]
            facets.append(frozenset(index[s] for s in chain))
    involution = {index[s]: index[k.nu_simplex(s)] for s in all_simplices}
    coords = None
    if k.coords is not None:
        dim = len(next(iter(k.coords.values())))
        coords = {
            index[s]: tuple(
                sum(k.coords[v][i] for v in s) / len(s) for i in range(dim)
            )
            for s in all_simplices
        }
    return Z2Complex(k.n, range(len(all_simplices)), facets, involution, coords)


class QuotientComplex(SimplicialComplex):
    """Quotient of a free Z2-complex, with double cover bookkeeping.

    Vertices are the orbit representatives (least id per orbit).  For
    each quotient edge one lift to the parent is stored; together with a
    vertex section this determines whether the lift crosses sheets.
    """

    def __init__(self, n, vertices, facets, orbit_map, edge_lifts, section):
        super().__init__(n, vertices, facets)
        self.orbit_map = dict(orbit_map)
        self.edge_lifts = dict(edge_lifts)
        self.section = frozenset(section)


def quotient(k: Z2Complex) -> QuotientComplex:
    """Simplicial quotient by the involution.

    Raises QuotientNotSimplicialError when some simplex hits an orbit
    twice or two simplices from different orbits share an image; callers
    are expected to subdivide and retry.
    """
    verdict = validate_z2_manifold(k)
    if not verdict:
        raise InvalidComplexError(verdict)
    rep = {v: k.orbit_representative(v) for v in k.vertices}
    image_of: dict[frozenset[int], frozenset[int]] = {}
    for d in range(k.n + 1):
        for s in k.simplices(d):
            image = frozenset(rep[v] for v in s)
            if len(image) != len(s):
                raise QuotientNotSimplicialError(
                    f"simplex {_simplex_key(s)} meets a vertex orbit twice"
                )
            prior = image_of.get(image)
            if prior is not None and prior != s and prior != k.nu_simplex(s):
                raise QuotientNotSimplicialError(
                    f"simplices {_simplex_key(prior)} and {_simplex_key(s)} "
                    f"collide in the quotient"
                )
            if prior is None:
                image_of[image] = s
    q_facets = {frozenset(rep[v] for v in f) for f in k.facets}
    assert 2 * len(q_facets) == len(k.facets)
    edge_lifts = {}
    for e in k.simplices(1):
        u, v = sorted(e)
        q_edge = frozenset((rep[u], rep[v]))
        lift = edge_lifts.get(q_edge)
        if lift is None or (u, v) < lift:
            edge_lifts[q_edge] = (u, v)
    section = sorted(set(rep.values()))
    return QuotientComplex(k.n, section, q_facets, rep, edge_lifts, section)


def torus_fixture(size: int = 6) -> Z2Complex:
    """Grid triangulation of the flat torus with a free translation.

    The involution shifts by half the grid in both directions, which is
    free on vertices and on simplices because no edge offset reaches
    (size/2, size/2).  Provides the standard vanishing test case for the
    characteristic number pipeline.
    """
    if size < 6 or size % 2:
        raise ValueError("size must be an even integer >= 6")
    n = size

    def vid(x: int, y: int) -> int:
        return (x % n) * n + (y % n)

    facets = []
    for x in range(n):
        for y in range(n):
            facets.append(frozenset({vid(x, y), vid(x + 1, y), vid(x + 1, y + 1)}))
            facets.append(frozenset({vid(x, y), vid(x, y + 1), vid(x + 1, y + 1)}))
    involution = {
        vid(x, y): vid(x + n // 2, y + n // 2) for x in range(n) for y in range(n)
    }
    return Z2Complex(2, range(n * n), facets, involution)


@dataclass(frozen=True)
class Labelling:
    """Vertex labelling by signed ground-set elements in +-[m]."""

    m: int
    labels: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "labels", dict(self.labels))

    def __eq__(self, other):
        return (
            isinstance(other, Labelling)
            and self.m == other.m
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.m, tuple(sorted(self.labels.items()))))


@dataclass(frozen=True)
class LabellingVerdict:
    ok: bool
    condition: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_labelling(k: Z2Complex, labelling: Labelling) -> LabellingVerdict:
    """Check antipodality (a) and the no-complementary-edge rule (b)."""
    for v in k.vertices:
        label = labelling.labels.get(v)
        if label is None or label == 0 or abs(label) > labelling.m:
            return LabellingVerdict(False, "domain", (v, label))
    for v in k.vertices:
        if labelling.labels[k.nu(v)] != -labelling.labels[v]:
            return LabellingVerdict(False, "a", (v, k.nu(v)))
    for e in k.simplices(1):
        u, v = sorted(e)
        if labelling.labels[u] + labelling.labels[v] == 0:
            return LabellingVerdict(False, "b", (u, v))
    return LabellingVerdict(True)


def lambda_image(simplex: frozenset[int], labelling: Labelling) -> CrossPolytopeFace | None:
    """Signed label set of a simplex, or None when labels repeat.

    For a labelling satisfying rule (b) the image never contains an
    antipodal pair, so a full-size image is a genuine crosspolytope face.
    """
    labels = {labelling.labels[v] for v in simplex}
    if len(labels) != len(simplex):
        return None
    return CrossPolytopeFace(labelling.m, frozenset(labels))


def argmax_labelling(
    k: Z2Complex, signed_injection: tuple[int, ...], m: int
) -> Labelling:
    """Label each vertex by the injected image of its dominant coordinate.

    For a vertex with exact coordinates x, the dominant coordinate is
    argmax |x_i| (smallest index on ties) and the label is the signed
    injection applied to sign(x_i) * i.  Antipodality holds by
    construction because labels are assigned on a vertex section and
    mirrored; rule (b) is validated and failure raises
    LabellingInadmissibleError.
    """
    if k.coords is None:
        raise ValueError("complex carries no coordinates")
    dim = len(next(iter(k.coords.values())))
    if len(signed_injection) != dim:
        raise ValueError(f"injection must have {dim} entries")
    absolutes = [abs(t) for t in signed_injection]
    if len(set(absolutes)) != dim or any(t == 0 or abs(t) > m for t in signed_injection):
        raise ValueError("injection must map into +-[m], injectively on absolute values")
    labels: dict[int, int] = {}
    for v in k.vertices:
        rep = k.orbit_representative(v)
        if rep != v:
            continue
        x = k.coords[v]
        best = 0
        for i in range(1, dim):
            if abs(x[i]) > abs(x[best]):
                best = i
        sign = 1 if x[best] >= 0 else -1
        labels[v] = sign * signed_injection[best]
        labels[k.nu(v)] = -labels[v]
    result = Labelling(m, labels)
    for e in k.simplices(1):
        u, v = sorted(e)
        if labels[u] + labels[v] == 0:
            raise LabellingInadmissibleError(
                f"edge ({u}, {v}) received complementary labels; subdivide and retry"
            )
    return result


def random_rotation(dim: int, rng: random.Random) -> tuple[tuple[Fraction, ...], ...]:
    """Exact rational rotation: a product of Pythagorean Givens rotations.

    Each factor rotates one coordinate pair by an angle with rational
    cosine (1-t^2)/(1+t^2) and sine 2t/(1+t^2), so the matrix is exactly
    orthogonal and antipodality of coordinates is preserved.
    """
    matrix = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    for p in range(dim):
        for q in range(p + 1, dim):
            t = Fraction(rng.randint(-12, 12), rng.randint(1, 12))
            c = (1 - t * t) / (1 + t * t)
            s = 2 * t / (1 + t * t)
            for row in matrix:
                row[p], row[q] = c * row[p] - s * row[q], s * row[p] + c * row[q]
    return tuple(tuple(row) for row in matrix)


def rotate_coords(k: Z2Complex, rotation) -> Z2Complex:
    """Apply an exact linear map to the coordinates of a complex."""
    if k.coords is None:
        raise ValueError("complex carries no coordinates")
    dim = len(rotation)
    coords = {
        v: tuple(sum(rotation[i][j] * x[j] for j in range(dim)) for i in range(dim))
        for v, x in k.coords.items()
    }
    return k.with_coords(coords)


def generate_sphere_labelling(
    k: Z2Complex, m: int, rng: random.Random, attempts: int = 12
) -> Labelling:
    """Admissible labelling on a coordinate-carrying sphere fixture.

    Draws a random exact rotation and a random signed injection, then
    runs the dominant-coordinate labelling; retries on inadmissibility.
    """
    if k.coords is None:
        raise ValueError("complex carries no coordinates")
    dim = len(next(iter(k.coords.values())))
    if m < dim:
        raise ValueError(f"need m >= {dim} for an injective labelling")
    last = None
    for _ in range(attempts):
        injection = tuple(
            rng.choice((1, -1)) * val for val in rng.sample(range(1, m + 1), dim)
        )
        rotated = rotate_coords(k, random_rotation(dim, rng))
        try:
            return argmax_labelling(rotated, injection, m)
        except LabellingInadmissibleError as exc:
            last = exc
    raise LabellingInadmissibleError(
        f"no admissible labelling after {attempts} rotations: {last}"
    )


def random_admissible_labelling(
    k: Z2Complex, m: int, rng: random.Random, restarts: int = 60
) -> Labelling:
    """Greedy randomized admissible labelling for any valid complex.

    Labels a random ordering of the vertex section, avoiding at each
    step any choice that would break rule (b) on an already labelled
    edge; antipodality is maintained by mirroring.  Used for fixtures
    without coordinates, such as the torus.
    """
    verdict = validate_z2_manifold(k)
    if not verdict:
        raise InvalidComplexError(verdict)
    neighbours: dict[int, set[int]] = {v: set() for v in k.vertices}
    for e in k.simplices(1):
        u, v = sorted(e)
        neighbours[u].add(v)
        neighbours[v].add(u)
    section = [v for v in k.vertices if k.orbit_representative(v) == v]
    alphabet = [s * i for i in range(1, m + 1) for s in (1, -1)]
    for _ in range(restarts):
        order = section[:]
        rng.shuffle(order)
        labels: dict[int, int] = {}
        ok = True
        for v in order:
            partner = k.nu(v)
            forbidden = {-labels[u] for u in neighbours[v] if u in labels}
            forbidden |= {labels[u] for u in neighbours[partner] if u in labels}
            choices = [c for c in alphabet if c not in forbidden]
            if not choices:
                ok = False
                break
            pick = rng.choice(choices)
            labels[v] = pick
            labels[partner] = -pick
        if ok:
            return Labelling(m, labels)
    raise LabellingInadmissibleError(
        f"greedy labelling failed after {restarts} restarts (m={m})"
    )
