"""Oriented matroids from exact rational data.

Chirotopes are computed as exact determinant signs of column
submatrices, cocircuits and circuits are enumerated from the chirotope,
and a geometric oracle decides, by exact linear feasibility, which
crosspolytope faces the row space of a matrix meets.  All arithmetic in
this module is over Fraction; floating point is banned because a single
wrong determinant sign invalidates the matroid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .signvectors import (
    CrossPolytopeFace,
    SignVector,
    all_signvectors,
    canonical_orbit_representative,
    signvector_from_face,
    sort_key,
    support,
)


def _to_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point entries are not allowed; use p/q strings or ints")
    return Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix with exact rational entries."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        return cls(tuple(tuple(_to_fraction(x) for x in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def rank(self) -> int:
        return _rank([list(row) for row in self.rows])


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(rows)
    rows = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [row[:] for row in rows]
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        for r in range(nrows):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : rows @ x = 0}, by reduced row echelon form."""
    rows = [row[:] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [a * inv for a in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][f]
        basis.append(tuple(vec))
    return basis


def _sorted_with_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort a tuple and return the permutation sign, 0 on repeats."""
    indices = list(indices)
    sign = 1
    for i in range(len(indices)):
        for j in range(i + 1, len(indices)):
            if indices[i] == indices[j]:
                return 0, ()
            if indices[i] > indices[j]:
                sign = -sign
    return sign, tuple(sorted(indices))


@dataclass
class Chirotope:
    """Alternating sign function on r-tuples of the ground set [m].

    Values are stored on strictly increasing 1-based r-tuples and
    extended to arbitrary tuples by alternation.
    """

    m: int
    r: int
    values: dict[tuple[int, ...], int]

    def chi(self, indices: Sequence[int]) -> int:
        if len(indices) != self.r:
            raise ValueError(f"expected {self.r} indices, got {len(indices)}")
        sign, key = _sorted_with_sign(indices)
        if sign == 0:
            return 0
        return sign * self.values[key]

    def basis_tuples(self) -> list[tuple[int, ...]]:
        return sorted(self.values)


@dataclass(frozen=True)
class OrientedMatroid:
    """Ground size, rank and the cocircuit set, closed under negation."""

    m: int
    r: int
    cocircuits: frozenset[SignVector]

    def __post_init__(self):
        for x in self.cocircuits:
            if x.m != self.m:
                raise ValueError(f"cocircuit length {x.m} does not match m={self.m}")
            if x.is_zero:
                raise ValueError("zero vector is not a cocircuit")
            if -x not in self.cocircuits:
                raise ValueError(f"cocircuit set not closed under negation at {x}")

    def sorted_cocircuits(self) -> list[SignVector]:
        return sorted(self.cocircuits, key=sort_key)

    def orbit_representatives(self) -> list[SignVector]:
        reps = {canonical_orbit_representative(x) for x in self.cocircuits}
        return sorted(reps, key=sort_key)


def chirotope_from_matrix(matrix: RationalMatrix) -> Chirotope:
    """Chirotope of the column configuration: signs of r x r minors."""
    r, m = matrix.nrows, matrix.ncols
    if matrix.rank() != r:
        raise ValueError(f"matrix rank below {r}; row space is degenerate")
    values: dict[tuple[int, ...], int] = {}
    for cols in combinations(range(m), r):
        sub = [[matrix.rows[i][j] for j in cols] for i in range(r)]
        d = _det(sub)
        values[tuple(c + 1 for c in cols)] = (d > 0) - (d < 0)
    return Chirotope(m, r, values)


def cocircuits_from_chirotope(chi: Chirotope) -> OrientedMatroid:
    """Enumerate cocircuits: one +- pair per spanned hyperplane.

    For each (r-1)-subset H spanning a hyperplane, the vector
    Y(e) = chi(h_1, ..., h_{r-1}, e) vanishes exactly on the closure of
    H.  Subsets that do not span (Y identically zero) are skipped, and
    distinct subsets of a common hyperplane are de-duplicated.
    """
    m, r = chi.m, chi.r
    seen: set[SignVector] = set()
    if r >= 1:
        for h in combinations(range(1, m + 1), r - 1):
            entries = [0] * m
            for e in range(1, m + 1):
                if e in h:
                    continue
                entries[e - 1] = chi.chi(h + (e,))
            y = SignVector(tuple(entries))
            if y.is_zero:
                continue
            seen.add(canonical_orbit_representative(y))
    cocircuits = frozenset(x for rep in seen for x in (rep, -rep))
    return OrientedMatroid(m, r, cocircuits)


def circuits_from_chirotope(chi: Chirotope) -> frozenset[SignVector]:
    """Signed minimal dependencies, via the Cramer pattern.

    For each (r+1)-subset {c_0 < ... < c_r}, entry c_i gets the sign
    (-1)^i chi(subset minus c_i); subsets of deficient rank are skipped.
    """
    m, r = chi.m, chi.r
    seen: set[SignVector] = set()
    for subset in combinations(range(1, m + 1), r + 1):
        entries = [0] * m
        for i, c in enumerate(subset):
            rest = subset[:i] + subset[i + 1 :]
            value = chi.chi(rest)
            if value != 0:
                entries[c - 1] = value if i % 2 == 0 else -value
        x = SignVector(tuple(entries))
        if x.is_zero:
            continue
        seen.add(canonical_orbit_representative(x))
    return frozenset(x for rep in seen for x in (rep, -rep))


def dual(chi: Chirotope) -> Chirotope:
    """Dual chirotope of rank m - r.

    chi*(complement of B) = chi(B) times the sign of the shuffle
    permutation (B, complement of B) of [m].  Applying dual twice gives
    back chi up to a global sign.
    """
    m, r = chi.m, chi.r
    values: dict[tuple[int, ...], int] = {}
    for b in combinations(range(1, m + 1), r):
        complement = tuple(e for e in range(1, m + 1) if e not in b)
        inversions = sum(1 for x in b for y in complement if x > y)
        sign = -1 if inversions % 2 else 1
        values[complement] = sign * chi.values[b]
    return Chirotope(m, m - r, values)


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of a cocircuit axiom check; carries the first violation."""

    ok: bool
    axiom: str | None = None
    witness: tuple[str, ...] = ()
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_cocircuit_axioms(vectors: Iterable[SignVector]) -> AxiomVerdict:
    """Check the signed cocircuit axioms, reporting the first violation.

    Checked in order: no zero vector, symmetry under negation, support
    incomparability, and weak elimination.
    """
    vecs = sorted(set(vectors), key=sort_key)
    if not vecs:
        return AxiomVerdict(True)
    m = vecs[0].m
    if any(v.m != m for v in vecs):
        raise ValueError("cocircuits have mismatched ground sizes")

    for v in vecs:
        if v.is_zero:
            return AxiomVerdict(False, "zero-vector", (str(v),), "zero vector listed")
    vec_set = set(vecs)
    for v in vecs:
        if -v not in vec_set:
            return AxiomVerdict(False, "symmetry", (str(v),), "negation missing")
    supports = {v: support(v) for v in vecs}
    for x, y in combinations(vecs, 2):
        sx, sy = supports[x], supports[y]
        if sx < sy or sy < sx:
            return AxiomVerdict(
                False, "incomparability", (str(x), str(y)), "properly nested supports"
            )
        if sx == sy and x != y and x != -y:
            return AxiomVerdict(
                False, "incomparability", (str(x), str(y)), "equal support, not equal up to sign"
            )
    by_zero_at: dict[int, list[SignVector]] = {i: [] for i in range(m)}
    for v in vecs:
        for i, e in enumerate(v.entries):
            if e == 0:
                by_zero_at[i].append(v)
    for x, y in combinations(vecs, 2):
        if x == -y:
            continue
        for i in range(m):
            if x.entries[i] == -y.entries[i] != 0:
                if not any(_conforms(z, x, y) for z in by_zero_at[i]):
                    return AxiomVerdict(
                        False,
                        "elimination",
                        (str(x), str(y)),
                        f"no eliminating vector at index {i + 1}",
                    )
    return AxiomVerdict(True)


def _conforms(z: SignVector, x: SignVector, y: SignVector) -> bool:
    """Every nonzero entry of z agrees with x or with y there."""
    return all(
        e == 0 or e == a or e == b for e, a, b in zip(z.entries, x.entries, y.entries)
    )


def is_uniform(matroid: OrientedMatroid) -> bool:
    """Every cocircuit support has size exactly m - r + 1."""
    expected = matroid.m - matroid.r + 1
    return all(len(support(x)) == expected for x in matroid.cocircuits)


def moment_curve_matrix(m: int, rank: int) -> RationalMatrix:
    """Rows 1, t, ..., t^{rank-1} evaluated at t = 1, ..., m."""
    if not 1 <= rank <= m:
        raise ValueError("need 1 <= rank <= m")
    return RationalMatrix.from_rows(
        [[Fraction(t) ** p for t in range(1, m + 1)] for p in range(rank)]
    )


def alternating_matroid(m: int, rank: int) -> OrientedMatroid:
    """Oriented matroid of m points on the moment curve."""
    return cocircuits_from_chirotope(chirotope_from_matrix(moment_curve_matrix(m, rank)))


def alternating_dual(m: int, n: int) -> OrientedMatroid:
    """Rank m-n matroid whose cocircuits alternate in sign.

    Cocircuits are the +- pairs supported on each (n+1)-subset
    {k_1 < ... < k_{n+1}} with sign (-1)^(j-1) at k_j.  The result is
    built both from this formula and as the cocircuits of the dual of
    the rank-n moment-curve chirotope; the two constructions must agree
    or the call fails.
    """
    if not 0 < n < m:
        raise ValueError(f"need 0 < n < m, got n={n}, m={m}")
    direct: set[SignVector] = set()
    for ks in combinations(range(1, m + 1), n + 1):
        entries = [0] * m
        for j, k in enumerate(ks):
            entries[k - 1] = 1 if j % 2 == 0 else -1
        x = SignVector(tuple(entries))
        direct.add(x)
        direct.add(-x)
    via_dual = cocircuits_from_chirotope(dual(chirotope_from_matrix(moment_curve_matrix(m, n))))
    if frozenset(direct) != via_dual.cocircuits:
        raise RuntimeError(
            "alternating cocircuit formula disagrees with the dual moment-curve construction"
        )
    return OrientedMatroid(m, m - n, frozenset(direct))


def subspace_face_oracle(matrix: RationalMatrix, face: CrossPolytopeFace) -> bool:
    """Does the row space meet the relative interior of the face?

    The row space L meets relint(F) iff L contains a vector whose sign
    pattern equals sign(F) exactly: strictly positive or negative on the
    support coordinates as prescribed, zero elsewhere.  That is a
    rational feasibility problem: equalities are eliminated by a
    nullspace computation and the remaining strict homogeneous system is
    decided by Fourier-Motzkin elimination.

    The empty face is reported as met (L contains the origin); cocircuit
    searches exclude it by convention.
    """
    r, m = matrix.nrows, matrix.ncols
    if face.m != m:
        raise ValueError(f"face ground size {face.m} does not match matrix columns {m}")
    if matrix.rank() != r:
        raise ValueError("matrix rank below its row count")
    x = signvector_from_face(face)
    supp = sorted(support(x))
    if not supp:
        return True
    zero_cols = [j for j in range(m) if x.entries[j] == 0]
    # c ranges over R^r; rows of the equality system are the zero-coordinate columns.
    equalities = [[matrix.rows[i][j] for i in range(r)] for j in zero_cols]
    if equalities:
        basis = _nullspace(equalities, r)
    else:
        basis = [tuple(Fraction(1) if k == i else Fraction(0) for k in range(r)) for i in range(r)]
    if not basis:
        return False
    strict_rows = []
    for j in (i - 1 for i in supp):
        sign = x.entries[j]
        col = [matrix.rows[i][j] for i in range(r)]
        strict_rows.append(
            tuple(sign * sum(b[i] * col[i] for i in range(r)) for b in basis)
        )
    return _strictly_feasible(strict_rows)


def _strictly_feasible(rows: list[tuple[Fraction, ...]]) -> bool:
    """Is there u with row . u > 0 for every row?  Fourier-Motzkin."""
    nvars = len(rows[0])
    system = _normalize_rows(rows)
    for var in reversed(range(nvars)):
        lowers, uppers, rest = [], [], []
        for row in system:
            if row[var] > 0:
                lowers.append(row)
            elif row[var] < 0:
                uppers.append(row)
            else:
                rest.append(row)
        combined = []
        for lo in lowers:
            for up in uppers:
                # positive combination (-up[var]) * lo + lo[var] * up kills var
                combined.append(
                    tuple(
                        -up[var] * lo[j] + lo[var] * up[j]
                        for j in range(len(lo))
                        if j != var
                    )
                )
        system = _normalize_rows(
            [tuple(v for j, v in enumerate(row) if j != var) for row in rest] + combined
        )
        if not system:
            return True
    return not system


def _normalize_rows(rows: Iterable[tuple[Fraction, ...]]) -> list[tuple[Fraction, ...]]:
    out = set()
    for row in rows:
        leading = next((v for v in row if v != 0), None)
        if leading is None:
            # 0 > 0 is unsatisfiable; keep a sentinel zero row
            out.add(row)
            continue
        scale = 1 / abs(leading)
        out.add(tuple(v * scale for v in row))
    return sorted(out)


def oracle_cocircuits(matrix: RationalMatrix) -> frozenset[SignVector]:
    """Cocircuits found geometrically, without touching the chirotope.

    Enumerates every nonzero sign vector of length m, asks the face
    oracle which ones the row space meets, and keeps the minimal ones in
    the face order.  Exponential in m; intended for cross-validation at
    small ground sizes.
    """
    from .signvectors import face_from_signvector

    met = [
        x
        for x in all_signvectors(matrix.ncols)
        if subspace_face_oracle(matrix, face_from_signvector(x))
    ]
    supports = {x: support(x) for x in met}
    minimal = [
        x
        for x in met
        if not any(
            y is not x and supports[y] < supports[x] and _conformal(y, x) for y in met
        )
    ]
    return frozenset(minimal)


def _conformal(y: SignVector, x: SignVector) -> bool:
    """y below x in the face order: every nonzero entry of y matches x."""
    return all(a == 0 or a == b for a, b in zip(y.entries, x.entries))
