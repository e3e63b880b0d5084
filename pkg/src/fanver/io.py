"""JSON file formats.

Sign vectors travel as '+-0' strings, rationals as "p/q" strings or
plain integers (floats are rejected), vertex ids as integers.  Every
dump is deterministic: keys sorted, fixed indentation, trailing
newline, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .complexes import Labelling, Z2Complex
from .homology import GF2Cochain
from .matroids import OrientedMatroid, RationalMatrix, check_cocircuit_axioms
from .signvectors import SignVector, sort_key


class InputDataError(Exception):
    """Malformed or inconsistent input file; carries a diagnostic dict."""

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.detail = detail or {}

    def to_json_dict(self) -> dict:
        out = {"error": "input", "message": str(self)}
        out.update(self.detail)
        return out


def json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_json(path: str) -> dict:
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputDataError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputDataError(f"invalid JSON in {path}: {exc}") from exc


def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InputDataError(f"rational entries must be ints or 'p/q' strings, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputDataError(f"bad rational {value!r}: {exc}") from exc
    raise InputDataError(f"bad rational {value!r}")


def format_rational(value: Fraction) -> str | int:
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def load_matrix(data: dict) -> RationalMatrix:
    try:
        rows = data["rows"]
    except (KeyError, TypeError):
        raise InputDataError("matrix file must contain a 'rows' array") from None
    return RationalMatrix.from_rows(
        [[parse_rational(x) for x in row] for row in rows]
    )


def dump_matrix(matrix: RationalMatrix) -> dict:
    return {"rows": [[format_rational(x) for x in row] for row in matrix.rows]}


def load_matroid(data: dict, complete_negatives: bool = False) -> OrientedMatroid:
    """Parse and axiom-check a matroid file.

    With ``complete_negatives`` the file may list one orientation per
    pair; the negatives are filled in before checking.  User-supplied
    cocircuit data is never trusted: the axiom check always runs.
    """
    try:
        m, r = int(data["m"]), int(data["r"])
        strings = list(data["cocircuits"])
    except (KeyError, TypeError, ValueError):
        raise InputDataError("matroid file needs integer 'm', 'r' and a 'cocircuits' array") from None
    try:
        vectors = {SignVector.from_string(s) for s in strings}
    except ValueError as exc:
        raise InputDataError(str(exc)) from exc
    if any(v.m != m for v in vectors):
        raise InputDataError(f"cocircuit strings must have length m={m}")
    if complete_negatives:
        vectors |= {-v for v in vectors}
    verdict = check_cocircuit_axioms(vectors)
    if not verdict:
        raise InputDataError(
            f"cocircuit axioms violated: {verdict.axiom}",
            {"axiom": verdict.axiom, "witness": list(verdict.witness), "detail": verdict.detail},
        )
    return OrientedMatroid(m, r, frozenset(vectors))


def dump_matroid(matroid: OrientedMatroid) -> dict:
    return {
        "m": matroid.m,
        "r": matroid.r,
        "cocircuits": [str(x) for x in matroid.sorted_cocircuits()],
    }


def load_complex(data: dict) -> Z2Complex:
    try:
        n = int(data["n"])
        vertices = [int(v) for v in data["vertices"]]
        antipode = {int(k): int(v) for k, v in data["antipode"].items()}
        facets = [frozenset(int(v) for v in f) for f in data["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputDataError(f"malformed complex file: {exc}") from None
    coords = None
    if "coords" in data and data["coords"] is not None:
        coords = {
            int(k): tuple(parse_rational(x) for x in xs)
            for k, xs in data["coords"].items()
        }
    try:
        return Z2Complex(n, vertices, facets, antipode, coords)
    except ValueError as exc:
        raise InputDataError(f"inconsistent complex file: {exc}") from exc


def dump_complex(k: Z2Complex) -> dict:
    out = {
        "n": k.n,
        "vertices": list(k.vertices),
        "antipode": {str(v): k.involution[v] for v in k.vertices},
        "facets": [sorted(f) for f in k.sorted_facets()],
    }
    if k.coords is not None:
        out["coords"] = {
            str(v): [format_rational(x) for x in k.coords[v]] for v in k.vertices
        }
    return out


def load_labelling(data: dict) -> Labelling:
    try:
        m = int(data["m"])
        labels = {int(k): int(v) for k, v in data["labels"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputDataError(f"malformed labelling file: {exc}") from None
    return Labelling(m, labels)


def dump_labelling(labelling: Labelling) -> dict:
    return {
        "m": labelling.m,
        "labels": {str(v): label for v, label in sorted(labelling.labels.items())},
    }


def dump_cochain(cochain: GF2Cochain) -> dict:
    return {
        "dim": cochain.dim,
        "simplices": sorted(sorted(s) for s in cochain.support),
    }


def load_cochain(data: dict) -> GF2Cochain:
    try:
        dim = int(data["dim"])
        simplices = frozenset(frozenset(int(v) for v in s) for s in data["simplices"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputDataError(f"malformed cochain file: {exc}") from None
    try:
        return GF2Cochain(dim, simplices)
    except ValueError as exc:
        raise InputDataError(str(exc)) from exc


def load_matroid_or_matrix(data: dict, complete_negatives: bool = False) -> OrientedMatroid:
    """Accept either a matroid file or a matrix file.

    Matrix files are converted through the exact chirotope; matroid
    files are axiom-checked.
    """
    from .matroids import chirotope_from_matrix, cocircuits_from_chirotope

    if "cocircuits" in data:
        return load_matroid(data, complete_negatives)
    if "rows" in data:
        matrix = load_matrix(data)
        try:
            return cocircuits_from_chirotope(chirotope_from_matrix(matrix))
        except ValueError as exc:
            raise InputDataError(str(exc)) from exc
    raise InputDataError("file is neither a matroid ('cocircuits') nor a matrix ('rows')")
