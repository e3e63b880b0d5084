"""Sign vectors and faces of the crosspolytope boundary.

A sign vector of length m encodes a face of the boundary of the
m-dimensional crosspolytope conv{+-e_1, ..., +-e_m}: entry i is + or -
when the face contains +e_i or -e_i respectively, and 0 otherwise.  The
same objects serve as covector and cocircuit candidates of an oriented
matroid on the ground set {1, ..., m}, so this module is the shared
dictionary between the matroid layer and the complex layer.

Sign vectors serialize as strings over '+', '-', '0' of length m.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

_SIGN_TO_CHAR = {1: "+", -1: "-", 0: "0"}
_CHAR_TO_SIGN = {"+": 1, "-": -1, "0": 0}


@dataclass(frozen=True)
class SignVector:
    """Element of {0,+,-}^m, stored as a tuple of -1/0/+1 entries."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) == 0:
            raise ValueError("ground size must be positive")
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise ValueError(f"sign entries must be -1, 0 or +1, got {self.entries!r}")

    @classmethod
    def from_string(cls, s: str) -> "SignVector":
        try:
            return cls(tuple(_CHAR_TO_SIGN[c] for c in s))
        except KeyError:
            raise ValueError(f"invalid sign string {s!r}") from None

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def entry(self, i: int) -> int:
        """Entry at the 1-based ground-set index i."""
        if not 1 <= i <= self.m:
            raise ValueError(f"index {i} out of range for ground size {self.m}")
        return self.entries[i - 1]

    def __neg__(self) -> "SignVector":
        return SignVector(tuple(-e for e in self.entries))

    def __str__(self) -> str:
        return "".join(_SIGN_TO_CHAR[e] for e in self.entries)


@dataclass(frozen=True)
class CrossPolytopeFace:
    """Face of the boundary of the m-crosspolytope.

    Vertices are signed labels in {+-1, ..., +-m}; +i stands for +e_i and
    -i for -e_i.  A vertex set never contains an antipodal pair {i, -i}.
    The empty set encodes the empty face.
    """

    m: int
    vertices: frozenset[int]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("ground size must be positive")
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        for label in self.vertices:
            if not isinstance(label, int) or label == 0 or abs(label) > self.m:
                raise ValueError(f"face label {label!r} out of range for m={self.m}")
            if -label in self.vertices:
                raise ValueError(f"face contains antipodal pair {{{label}, {-label}}}")

    @property
    def dim(self) -> int:
        """Face dimension; the empty face has dimension -1."""
        return len(self.vertices) - 1


def signvector_from_face(face: CrossPolytopeFace) -> SignVector:
    """Sign vector of a face: + where +e_i is a vertex, - where -e_i is."""
    entries = [0] * face.m
    for label in face.vertices:
        entries[abs(label) - 1] = 1 if label > 0 else -1
    return SignVector(tuple(entries))


def face_from_signvector(x: SignVector) -> CrossPolytopeFace:
    """Inverse of signvector_from_face."""
    labels = frozenset(
        i if e > 0 else -i for i, e in enumerate(x.entries, start=1) if e != 0
    )
    return CrossPolytopeFace(x.m, labels)


def negate(x: SignVector) -> SignVector:
    return -x


def support(x: SignVector) -> frozenset[int]:
    """1-based indices of the nonzero entries."""
    return frozenset(i for i, e in enumerate(x.entries, start=1) if e != 0)


def is_orthogonal(x: SignVector, y: SignVector) -> bool:
    """Signed-set orthogonality.

    True iff the set of products over the common support is empty or
    contains both signs.
    """
    if x.m != y.m:
        raise ValueError(f"mismatched ground sizes {x.m} and {y.m}")
    products = {a * b for a, b in zip(x.entries, y.entries) if a != 0 and b != 0}
    return products != {1} and products != {-1}


def canonical_orbit_representative(x: SignVector) -> SignVector:
    """The member of {x, -x} whose first nonzero entry is +."""
    for e in x.entries:
        if e != 0:
            return x if e > 0 else -x
    raise ValueError("zero vector has no orbit representative")


def all_signvectors(m: int, include_zero: bool = False) -> Iterator[SignVector]:
    """All sign vectors of length m in lexicographic entry order."""
    for entries in product((-1, 0, 1), repeat=m):
        if not include_zero and all(e == 0 for e in entries):
            continue
        yield SignVector(entries)


def sort_key(x: SignVector) -> tuple:
    """Deterministic ordering: by support, then by entries."""
    return (tuple(sorted(support(x))), x.entries)
