"""Mod-2 simplicial cohomology of complexes and their quotients.

Provides coboundary matrices, cocycle and coboundary decisions by exact
GF(2) elimination, the sheet-switching representative of the first
characteristic class of a double cover, iterated cup products in the
Alexander-Whitney form, and the top characteristic number of a free
Z2-complex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    InvalidComplexError,
    QuotientComplex,
    QuotientNotSimplicialError,
    SimplicialComplex,
    Z2Complex,
    barycentric_subdivide,
    quotient,
    validate_z2_manifold,
)
from .gf2 import GF2Matrix


@dataclass(frozen=True)
class GF2Cochain:
    """Mod-2 cochain: the set of d-simplices carrying coefficient 1."""

    dim: int
    support: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(
            self, "support", frozenset(frozenset(s) for s in self.support)
        )
        for s in self.support:
            if len(s) != self.dim + 1:
                raise ValueError(
                    f"simplex {sorted(s)} has dimension {len(s) - 1}, expected {self.dim}"
                )

    def __add__(self, other: "GF2Cochain") -> "GF2Cochain":
        if self.dim != other.dim:
            raise ValueError("cochain dimensions differ")
        return GF2Cochain(self.dim, self.support ^ other.support)

    def value(self, simplex: frozenset[int]) -> int:
        return 1 if frozenset(simplex) in self.support else 0


def _check_support(k: SimplicialComplex, cochain: GF2Cochain) -> None:
    simplices = set(k.simplices(cochain.dim))
    for s in cochain.support:
        if s not in simplices:
            raise ValueError(f"cochain names a simplex {sorted(s)} not in the complex")


def simplex_index(k: SimplicialComplex, d: int) -> dict[frozenset[int], int]:
    """Deterministic (lexicographic) index of the d-simplices."""
    key = ("index", d)
    if key not in k._cache:
        k._cache[key] = {s: i for i, s in enumerate(k.simplices(d))}
    return k._cache[key]


def coboundary_matrix(k: SimplicialComplex, d: int) -> GF2Matrix:
    """Matrix of the coboundary from d-cochains to (d+1)-cochains.

    Rows are indexed by (d+1)-simplices, columns by d-simplices; the row
    of a (d+1)-simplex has ones at its d-faces.
    """
    if d < 0 or d >= k.n:
        raise ValueError(f"no coboundary from dimension {d} on an {k.n}-complex")
    key = ("coboundary", d)
    if key in k._cache:
        return k._cache[key]
    cols = simplex_index(k, d)
    rows = k.simplices(d + 1)
    matrix = GF2Matrix(len(rows), len(cols))
    for i, tau in enumerate(rows):
        vertices = sorted(tau)
        for skip in range(len(vertices)):
            face = frozenset(vertices[:skip] + vertices[skip + 1 :])
            matrix.set(i, cols[face])
    k._cache[key] = matrix
    return matrix


def _cochain_bits(k: SimplicialComplex, cochain: GF2Cochain) -> int:
    index = simplex_index(k, cochain.dim)
    bits = 0
    for s in cochain.support:
        bits |= 1 << index[s]
    return bits


def coboundary(k: SimplicialComplex, cochain: GF2Cochain) -> GF2Cochain:
    """Apply the coboundary operator; zero in the top dimension."""
    _check_support(k, cochain)
    if cochain.dim >= k.n:
        return GF2Cochain(cochain.dim + 1, frozenset())
    matrix = coboundary_matrix(k, cochain.dim)
    out_bits = matrix.mul_vector(_cochain_bits(k, cochain))
    upper = k.simplices(cochain.dim + 1)
    return GF2Cochain(
        cochain.dim + 1,
        frozenset(upper[i] for i in range(len(upper)) if (out_bits >> i) & 1),
    )


def is_cocycle(k: SimplicialComplex, cochain: GF2Cochain) -> bool:
    return not coboundary(k, cochain).support


def coboundary_witness(k: SimplicialComplex, cochain: GF2Cochain) -> GF2Cochain | None:
    """A (d-1)-cochain whose coboundary is the given one, or None."""
    _check_support(k, cochain)
    if cochain.dim == 0:
        return GF2Cochain(-1, frozenset()) if not cochain.support else None
    matrix = coboundary_matrix(k, cochain.dim - 1)
    solution = matrix.solve(_cochain_bits(k, cochain))
    if solution is None:
        return None
    lower = k.simplices(cochain.dim - 1)
    return GF2Cochain(
        cochain.dim - 1,
        frozenset(lower[i] for i in range(len(lower)) if (solution >> i) & 1),
    )


def is_coboundary(k: SimplicialComplex, cochain: GF2Cochain) -> bool:
    return coboundary_witness(k, cochain) is not None


@dataclass(frozen=True)
class FundamentalClass:
    """Sum of all top simplices of a closed pseudomanifold, mod 2."""

    dim: int
    support: frozenset[frozenset[int]]


def fundamental_class(q: SimplicialComplex) -> FundamentalClass:
    """Top chain of all facets; checks that its boundary vanishes.

    The boundary vanishes mod 2 exactly when every ridge lies in an even
    number of facets, which the closed pseudomanifold property supplies.
    """
    if q.n >= 1:
        ridge_count: dict[frozenset[int], int] = {}
        for f in q.facets:
            vertices = sorted(f)
            for skip in range(len(vertices)):
                ridge = frozenset(vertices[:skip] + vertices[skip + 1 :])
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        bad = next((r for r, c in ridge_count.items() if c % 2), None)
        if bad is not None:
            raise ValueError(
                f"boundary does not vanish: ridge {sorted(bad)} has odd facet count"
            )
    return FundamentalClass(q.n, q.facets)


def pair(cochain: GF2Cochain, fclass: FundamentalClass) -> int:
    """Kronecker pairing of a top cochain with the fundamental class."""
    if cochain.dim != fclass.dim:
        raise ValueError("dimension mismatch in pairing")
    return len(cochain.support & fclass.support) % 2


def w1_cocycle(q: QuotientComplex, section: frozenset[int] | None = None) -> GF2Cochain:
    """Sheet-switching 1-cochain of the double cover.

    An edge gets coefficient 1 when its stored lift connects a section
    vertex to a non-section vertex.  Around any quotient triangle the
    switches pair up, so the result is always a cocycle; changing the
    section changes the cochain by a coboundary only.
    """
    if section is None:
        section = q.section
    support = set()
    for q_edge, (u, v) in q.edge_lifts.items():
        if (u in section) != (v in section):
            support.add(q_edge)
    cochain = GF2Cochain(1, frozenset(support))
    assert is_cocycle(q, cochain), "sheet-switching cochain must be a cocycle"
    return cochain


def cup_power(
    q: SimplicialComplex,
    omega: GF2Cochain,
    n: int,
    vertex_order: dict[int, int] | None = None,
) -> GF2Cochain:
    """n-fold Alexander-Whitney cup power of a degree-1 cocycle.

    On an n-simplex ordered by the given total vertex order the value is
    the product of omega over the n consecutive edges.  The cochain
    depends on the order; its pairing with the fundamental class does
    not.
    """
    if omega.dim != 1:
        raise ValueError("cup powers are taken of degree-1 cochains")
    if n < 1:
        raise ValueError("cup power exponent must be >= 1")
    if not is_cocycle(q, omega):
        raise ValueError("cup power input must be a cocycle")
    if n == 1:
        return omega
    rank = (lambda v: vertex_order[v]) if vertex_order is not None else (lambda v: v)
    support = set()
    for simplex in q.simplices(n):
        chain = sorted(simplex, key=rank)
        if all(
            frozenset((chain[j - 1], chain[j])) in omega.support for j in range(1, n + 1)
        ):
            support.add(simplex)
    result = GF2Cochain(n, frozenset(support))
    assert is_cocycle(q, result), "cup power of a cocycle must be a cocycle"
    return result


def quotient_with_subdivision(k: Z2Complex) -> QuotientComplex:
    """Quotient of k, subdividing at most twice until it is simplicial."""
    if "quotient_chain" in k._cache:
        return k._cache["quotient_chain"]
    current = k
    for _ in range(3):
        try:
            q = quotient(current)
            k._cache["quotient_chain"] = q
            return q
        except QuotientNotSimplicialError:
            current = barycentric_subdivide(current)
    raise QuotientNotSimplicialError("quotient still not simplicial after two subdivisions")


def sw_number(k: Z2Complex, vertex_order: dict[int, int] | None = None) -> int:
    """Top characteristic number of a free Z2-pseudomanifold.

    Quotients (subdividing when needed), builds the sheet-switching
    cocycle, raises it to the n-th cup power, and pairs with the mod-2
    fundamental class of the quotient.  Deterministic; invariant under
    subdivision and under the choice of vertex order.
    """
    verdict = validate_z2_manifold(k)
    if not verdict:
        raise InvalidComplexError(verdict)
    if vertex_order is None and "sw_number" in k._cache:
        return k._cache["sw_number"]
    q = quotient_with_subdivision(k)
    omega = w1_cocycle(q)
    power = cup_power(q, omega, k.n, vertex_order)
    value = pair(power, fundamental_class(q))
    if vertex_order is None:
        k._cache["sw_number"] = value
    return value
