"""Parity identities between labelled facet counts and cocircuit data.

The core check: on a free Z2-pseudomanifold with an admissible
labelling into +-[m], the number of facets whose label set is a
cocircuit of a uniform rank m-n oriented matroid, counted per antipodal
cocircuit class, equals the top characteristic number mod 2.  A failed
check is a reported finding, never an exception: the identity is a
theorem, so a failure localizes an implementation defect.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .complexes import (
    Labelling,
    Z2Complex,
    barycentric_subdivide,
    crosspolytope_boundary,
    generate_sphere_labelling,
    lambda_image,
    random_admissible_labelling,
    torus_fixture,
    validate_labelling,
    validate_z2_manifold,
)
from .gf2 import GF2Matrix
from .homology import GF2Cochain, is_cocycle, simplex_index, sw_number
from .matroids import (
    OrientedMatroid,
    RationalMatrix,
    chirotope_from_matrix,
    cocircuits_from_chirotope,
    alternating_dual,
    is_uniform,
)
from .signvectors import (
    SignVector,
    canonical_orbit_representative,
    face_from_signvector,
    signvector_from_face,
    sort_key,
)

RNG_ALGORITHM = "python-random-mt19937"


@dataclass(frozen=True)
class AlphaTable:
    """Facet tally per antipodal cocircuit class.

    ``counts`` maps each canonical orbit representative to the number of
    facets whose label set equals the cocircuit or its negative; hits
    from the two orientations are always equal, so every count is even.
    """

    counts: dict[SignVector, int]
    facet_count: int
    degenerate_count: int
    non_cocircuit_count: int

    def to_json_dict(self) -> dict:
        return {
            "alphaByOrbit": {
                str(rep): self.counts[rep]
                for rep in sorted(self.counts, key=sort_key)
            },
            "facetCount": self.facet_count,
            "degenerateCount": self.degenerate_count,
            "nonCocircuitCount": self.non_cocircuit_count,
        }


@dataclass(frozen=True)
class ParityReport:
    lhs: int
    rhs: int
    passed: bool
    alpha: AlphaTable

    def to_json_dict(self) -> dict:
        out = {"lhs": self.lhs, "rhs": self.rhs, "pass": self.passed}
        out.update(self.alpha.to_json_dict())
        return out


@dataclass(frozen=True)
class KyFanReport:
    """Parity report plus the per-sequence alternating counts."""

    parity: ParityReport
    sequences: dict[str, int]

    def to_json_dict(self) -> dict:
        out = self.parity.to_json_dict()
        out["alphaBySequence"] = dict(sorted(self.sequences.items()))
        return out


def _require_inputs(k: Z2Complex, labelling: Labelling, matroid: OrientedMatroid) -> None:
    from .complexes import InvalidComplexError

    verdict = validate_z2_manifold(k)
    if not verdict:
        raise InvalidComplexError(verdict)
    lab_verdict = validate_labelling(k, labelling)
    if not lab_verdict:
        raise ValueError(
            f"labelling invalid: condition {lab_verdict.condition} at {lab_verdict.witness}"
        )
    if matroid.m != labelling.m:
        raise ValueError(
            f"matroid ground size {matroid.m} does not match labelling m={labelling.m}"
        )
    if matroid.m - matroid.r != k.n:
        raise ValueError(
            f"rank mismatch: need r = m - n = {matroid.m - k.n}, matroid has rank {matroid.r}"
        )
    if not is_uniform(matroid):
        raise ValueError("matroid is not uniform; parity counting requires uniformity")


def alpha_counts(k: Z2Complex, labelling: Labelling, matroid: OrientedMatroid) -> AlphaTable:
    """Tally facets by the cocircuit their labels spell.

    A facet counts only when its labels are pairwise distinct and form
    exactly a cocircuit face; repeated labels are tallied as degenerate
    and other label sets as non-cocircuit.  Hits on a cocircuit and on
    its negative are recorded on the shared canonical representative.
    """
    _require_inputs(k, labelling, matroid)
    signed_hits: dict[SignVector, int] = {}
    degenerate = 0
    non_cocircuit = 0
    for facet in k.sorted_facets():
        face = lambda_image(facet, labelling)
        if face is None:
            degenerate += 1
            continue
        x = signvector_from_face(face)
        if x in matroid.cocircuits:
            signed_hits[x] = signed_hits.get(x, 0) + 1
        else:
            non_cocircuit += 1
    counts: dict[SignVector, int] = {}
    for x, hits in signed_hits.items():
        opposite = signed_hits.get(-x, 0)
        if hits != opposite:
            raise AssertionError(
                f"orientation imbalance at {x}: {hits} vs {opposite} hits"
            )
        rep = canonical_orbit_representative(x)
        counts[rep] = counts.get(rep, 0) + hits
    return AlphaTable(counts, len(k.facets), degenerate, non_cocircuit)


def parity_check(k: Z2Complex, labelling: Labelling, matroid: OrientedMatroid) -> ParityReport:
    """Compare the characteristic number with the cocircuit facet parity.

    The right hand side is computed in both equivalent forms, half the
    total hits over all cocircuits and the sum of per-orbit counts, and
    the two are cross-asserted before the comparison.
    """
    table = alpha_counts(k, labelling, matroid)
    total_hits = sum(table.counts.values())
    if total_hits % 2:
        raise AssertionError("total cocircuit hits must be even")
    rhs_half_total = (total_hits // 2) % 2
    per_orbit = []
    for rep, count in table.counts.items():
        if count % 2:
            raise AssertionError(f"orbit {rep} has odd combined count {count}")
        per_orbit.append(count // 2)
    rhs_orbit_sum = sum(per_orbit) % 2
    if rhs_half_total != rhs_orbit_sum:
        raise AssertionError("the two right-hand-side conventions disagree")
    lhs = sw_number(k)
    return ParityReport(lhs, rhs_orbit_sum, lhs == rhs_orbit_sum, table)


def kyfan_classical(k: Z2Complex, labelling: Labelling, m: int) -> KyFanReport:
    """Alternating-matroid specialization of the parity check.

    Runs the parity check against the alternating cocircuit pattern and
    additionally reports, per increasing index sequence k_1 < ... <
    k_{n+1}, the count of facets labelled by the alternating signed
    sequence (k_1, -k_2, k_3, ...).
    """
    n = k.n
    if n >= m:
        raise ValueError(f"no admissible configuration: need n < m, got n={n}, m={m}")
    matroid = alternating_dual(m, n)
    parity = parity_check(k, labelling, matroid)
    sequences: dict[str, int] = {}
    for rep in matroid.orbit_representatives():
        face = face_from_signvector(rep)
        ordered = sorted(face.vertices, key=abs)
        name = "alpha(" + ",".join(str(v) for v in ordered) + ")"
        sequences[name] = parity.alpha.counts.get(rep, 0) // 2
    return KyFanReport(parity, sequences)


def build_cochain_representative(matroid: OrientedMatroid) -> GF2Cochain:
    """Indicator cochain of all cocircuit faces on the crosspolytope.

    For a uniform matroid of rank r on [m] the cocircuit supports all
    have size n+1 with n = m - r, so the faces form an antipodally
    invariant set of n-simplices of the boundary of the m-crosspolytope.
    """
    if not is_uniform(matroid):
        raise ValueError("cochain representative requires a uniform matroid")
    n = matroid.m - matroid.r
    support = frozenset(
        face_from_signvector(x).vertices for x in matroid.cocircuits
    )
    return GF2Cochain(n, support)


@dataclass(frozen=True)
class RepresentativeReport:
    is_cocycle: bool
    is_nontrivial: bool
    passed: bool
    support_size: int

    def to_json_dict(self) -> dict:
        return {
            "isCocycle": self.is_cocycle,
            "isNontrivial": self.is_nontrivial,
            "pass": self.passed,
            "supportSize": self.support_size,
        }


def verify_representative(matroid: OrientedMatroid) -> RepresentativeReport:
    """Check the cocircuit cochain is an essential invariant cocycle.

    Cocycle status is decided on the crosspolytope boundary directly.
    Nontriviality is decided in the antipodally invariant subcomplex:
    for a free action the invariant cochains compute the mod-2
    cohomology of the quotient, which is one-dimensional in every degree
    below the sphere dimension, so the cochain represents the nonzero
    class exactly when no invariant potential exists.  The quotient
    itself is never built; the solve runs upstairs on orbit-pair columns.
    """
    cochain = build_cochain_representative(matroid)
    n = matroid.m - matroid.r
    k = crosspolytope_boundary(matroid.m)
    cocycle_ok = is_cocycle(k, cochain)
    nontrivial = _invariant_potential_bits(k, cochain, n) is None
    return RepresentativeReport(
        cocycle_ok, nontrivial, cocycle_ok and nontrivial, len(cochain.support)
    )


def _invariant_potential_bits(k: Z2Complex, cochain: GF2Cochain, n: int) -> int | None:
    """Solve d(psi) = cochain with psi ranging over invariant cochains.

    Columns are the antipodal orbit pairs of (n-1)-simplices; a column's
    coboundary never hits an n-simplex twice because a simplex cannot
    contain both a face and its antipode.
    """
    if n == 0:
        return 0 if not cochain.support else None
    lower = k.simplices(n - 1)
    orbit_col: dict[frozenset[int], int] = {}
    ncols = 0
    for s in lower:
        if s in orbit_col:
            continue
        orbit_col[s] = ncols
        orbit_col[k.nu_simplex(s)] = ncols
        ncols += 1
    upper_index = simplex_index(k, n)
    matrix = GF2Matrix(len(upper_index), ncols)
    for tau, i in upper_index.items():
        vertices = sorted(tau)
        for skip in range(len(vertices)):
            face = frozenset(vertices[:skip] + vertices[skip + 1 :])
            matrix.rows[i] ^= 1 << orbit_col[face]
    rhs = 0
    for s in cochain.support:
        rhs |= 1 << upper_index[s]
    return matrix.solve(rhs)


@dataclass(frozen=True)
class FuzzConfig:
    trials: int
    n_range: tuple[int, int] = (1, 2)
    m_range: tuple[int, int] = (3, 6)
    seed: int = 0
    workers: int | None = None
    include_torus: bool = True
    max_subdivisions: int = 1

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be >= 0")
        if self.n_range[0] > self.n_range[1] or self.n_range[0] < 1:
            raise ValueError(f"bad dimension range {self.n_range}")
        if self.m_range[1] < self.n_range[0] + 1:
            raise ValueError("m range leaves no valid rank for the smallest n")


_FIXTURES: dict[tuple, Z2Complex] = {}


def _fixture(kind: str, n: int, subdivisions: int) -> Z2Complex:
    key = (kind, n, subdivisions)
    if key not in _FIXTURES:
        base = torus_fixture() if kind == "torus" else crosspolytope_boundary(n + 1)
        for _ in range(subdivisions):
            base = barycentric_subdivide(base)
        _FIXTURES[key] = base
    return _FIXTURES[key]


def random_uniform_matrix(
    r: int, m: int, rng: random.Random, bound: int = 9, tries: int = 400
) -> RationalMatrix:
    """Random integer matrix whose matroid is uniform of rank r."""
    for _ in range(tries):
        matrix = RationalMatrix.from_rows(
            [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(r)]
        )
        if matrix.rank() != r:
            continue
        chi = chirotope_from_matrix(matrix)
        if all(v != 0 for v in chi.values.values()):
            return matrix
    raise RuntimeError(f"no uniform matrix found in {tries} draws (r={r}, m={m})")


def _run_trial(config: FuzzConfig, index: int) -> dict:
    rng = random.Random(f"{config.seed}:{index}")
    n = rng.randint(*config.n_range)
    m = rng.randint(max(n + 1, config.m_range[0]), config.m_range[1])
    use_torus = config.include_torus and n == 2 and m >= 4 and rng.random() < 0.4
    if use_torus:
        kind, subdivisions = "torus", 0
    else:
        kind = "sphere"
        subdivisions = rng.randint(0, config.max_subdivisions)
    k = _fixture(kind, n, subdivisions)
    if kind == "sphere":
        labelling = generate_sphere_labelling(k, m, rng)
    else:
        labelling = random_admissible_labelling(k, m, rng)
    matrix = random_uniform_matrix(m - n, m, rng)
    matroid = cocircuits_from_chirotope(chirotope_from_matrix(matrix))
    parity = parity_check(k, labelling, matroid)
    representative = verify_representative(matroid)
    record = {
        "index": index,
        "fixture": {"kind": kind, "n": n, "subdivisions": subdivisions},
        "m": m,
        "lhs": parity.lhs,
        "rhs": parity.rhs,
        "parityPass": parity.passed,
        "representativePass": representative.passed,
        "pass": parity.passed and representative.passed,
    }
    if not record["pass"]:
        from .io import dump_complex, dump_labelling, dump_matrix, dump_matroid

        record["reproduction"] = {
            "seed": config.seed,
            "trialSeed": f"{config.seed}:{index}",
            "complex": dump_complex(k),
            "labelling": dump_labelling(labelling),
            "matrix": dump_matrix(matrix),
            "matroid": dump_matroid(matroid),
            "parityReport": parity.to_json_dict(),
            "representativeReport": representative.to_json_dict(),
        }
    return record


def _worker(args: tuple) -> dict:
    config_fields, index = args
    return _run_trial(FuzzConfig(**config_fields), index)


def fuzz_campaign(config: FuzzConfig) -> dict:
    """Seeded randomized campaign over fixtures, labellings and matroids.

    Every trial is derived deterministically from the master seed and
    its index, so reports are reproducible byte for byte.  Failures
    carry a full reproduction payload.  Trials run in a process pool
    when workers (or FANVER_THREADS) exceeds one; aggregation order is
    by trial index either way.
    """
    workers = config.workers
    if workers is None:
        workers = int(os.environ.get("FANVER_THREADS", "1"))
    indices = range(config.trials)
    if workers > 1 and config.trials > 1:
        fields = {
            "trials": config.trials,
            "n_range": config.n_range,
            "m_range": config.m_range,
            "seed": config.seed,
            "workers": 1,
            "include_torus": config.include_torus,
            "max_subdivisions": config.max_subdivisions,
        }
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_worker, [(fields, i) for i in indices]))
    else:
        records = [_run_trial(config, i) for i in indices]
    records.sort(key=lambda r: r["index"])
    failures = [r for r in records if not r["pass"]]
    return {
        "algorithm": RNG_ALGORITHM,
        "seed": config.seed,
        "trials": config.trials,
        "nRange": list(config.n_range),
        "mRange": list(config.m_range),
        "passes": sum(1 for r in records if r["pass"]),
        "failures": failures,
        "trialSummaries": [
            {key: r[key] for key in ("index", "fixture", "m", "lhs", "rhs", "pass")}
            for r in records
        ],
        "pass": not failures,
    }
