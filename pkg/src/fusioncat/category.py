"""Category data: fusion rings, pivotal dimensions, modular s-matrices.

Two kinds of input are supported.  A "modular" category is given by its
unnormalized s-matrix (s_00 = 1, symmetric, invertible); the fusion ring is
then *derived* from it by the exact Verlinde sum

    N_ij^k = (1/dim C) * sum_r s_ir s_jr s_{k* r} / s_0r

and every coefficient must come out a nonnegative integer, which doubles as
a non-degeneracy certificate.  A "fusion_ring" category carries explicit
fusion coefficients and dimensions, optionally with a character table for
the class algebra; no braiding is assumed, so s-dependent operations are
gated off for it.

Validation never raises on well-formed input: it returns a list of Check
records, one per invariant, so a report can show everything that is wrong
at once.  build_category refuses data with any failed check.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cyclotomic import Cyclotomic, CycloMatrix, euler_phi, lcm, rational
from .errors import (
    CapabilityError,
    DegenerateError,
    InvalidCategoryError,
    MalformedFusionError,
    NotModularError,
    SchemaError,
)

__all__ = [
    "Check",
    "FusionRing",
    "PivotalData",
    "ModularData",
    "CategoryData",
    "CategoryInput",
    "dual_involution",
    "verlinde_fusion",
    "global_dim",
    "validate_input",
    "build_category",
    "parse_category",
    "load_input",
    "load_category",
    "category_to_input",
    "input_to_json",
    "save_category",
]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Check:
    """Outcome of one named invariant check."""

    check_id: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _p(check_id: str, detail: str = "") -> Check:
    return Check(check_id, "pass", detail)


def _f(check_id: str, detail: str = "") -> Check:
    return Check(check_id, "fail", detail)


def _s(check_id: str, detail: str = "") -> Check:
    return Check(check_id, "skip", detail)


@dataclass(frozen=True)
class FusionRing:
    """Fusion coefficients N[i][j][k] with the derived duality involution.
    Index 0 is always the unit object."""

    labels: tuple[str, ...]
    fusion: tuple[tuple[tuple[int, ...], ...], ...]
    dual: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.labels)

    def n(self, i: int, j: int, k: int) -> int:
        return self.fusion[i][j][k]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no simple object labelled {label!r}") from None


@dataclass(frozen=True)
class PivotalData:
    """Pivotal (quantum) dimensions of the simple objects."""

    dims: tuple[Cyclotomic, ...]


@dataclass(frozen=True)
class ModularData:
    """Unnormalized s-matrix; twists are stored if given but only checked
    to be roots of unity."""

    s: CycloMatrix
    twists: Optional[tuple[Cyclotomic, ...]] = None


@dataclass(frozen=True)
class CategoryData:
    name: str
    ring: FusionRing
    pivotal: PivotalData
    modular: Optional[ModularData]
    char_table: Optional[CycloMatrix]
    dim: Cyclotomic  # global dimension, sum_i d_i d_{i*}

    @property
    def rank(self) -> int:
        return self.ring.rank

    @property
    def dims(self) -> tuple[Cyclotomic, ...]:
        return self.pivotal.dims

    @property
    def kind(self) -> str:
        return "modular" if self.modular is not None else "fusion_ring"

    @property
    def is_integral(self) -> bool:
        return all(d.is_integer() for d in self.dims)


def dual_involution(fusion) -> tuple[int, ...]:
    """Read the duality permutation off N[i][j][0]; it must be a delta."""
    rank = len(fusion)
    dual = []
    for i in range(rank):
        hits = [j for j in range(rank) if fusion[i][j][0] != 0]
        if len(hits) != 1 or fusion[i][hits[0]][0] != 1:
            raise MalformedFusionError(
                f"object {i} has no unique dual: N[{i}][j][0] nonzero at {hits}"
            )
        dual.append(hits[0])
    for i in range(rank):
        if dual[dual[i]] != i:
            raise MalformedFusionError(f"duality is not an involution at {i}")
    if dual[0] != 0:
        raise MalformedFusionError("unit object is not self-dual")
    return tuple(dual)


def global_dim(dims, dual) -> Cyclotomic:
    total = rational(0)
    for i, d in enumerate(dims):
        total = total + d * dims[dual[i]]
    return total


def verlinde_fusion(s: CycloMatrix):
    """Derive (fusion, dual) from an s-matrix, or raise NotModularError /
    DegenerateError.  Duality is self-consistent: the first pass computes the
    raw sums T_ij^k (no dual applied), the duality permutation is read off
    T_ij^0, and then N_ij^k = T_ij^{k*}."""
    rank = s.nrows
    if rank != s.ncols:
        raise NotModularError("s-matrix is not square")
    dims = s.rows[0]
    for r, d in enumerate(dims):
        if d.is_zero():
            raise DegenerateError(f"s_0{r} = 0, zero dimension")
    dim_c = rational(0)
    for d in dims:
        dim_c = dim_c + d * d
    if dim_c.is_zero():
        raise DegenerateError("global dimension is zero")
    dim_inv = dim_c.inv()
    dims_inv = [d.inv() for d in dims]

    t = [[[None] * rank for _ in range(rank)] for _ in range(rank)]
    for i in range(rank):
        for j in range(i, rank):
            weights = [s.rows[i][r] * s.rows[j][r] * dims_inv[r] for r in range(rank)]
            for k in range(rank):
                val = rational(0)
                for r in range(rank):
                    val = val + weights[r] * s.rows[k][r]
                val = val * dim_inv
                if not val.is_integer() or val.coeffs[0] < 0:
                    raise NotModularError(
                        f"Verlinde coefficient at (i={i}, j={j}, k={k}) is "
                        f"{val}, not a nonnegative integer"
                    )
                t[i][j][k] = t[j][i][k] = int(val.coeffs[0])

    dual = []
    for i in range(rank):
        hits = [j for j in range(rank) if t[i][j][0] != 0]
        if len(hits) != 1 or t[i][hits[0]][0] != 1:
            raise NotModularError(
                f"derived duality broken at object {i}: nonzero T[i][j][0] at {hits}"
            )
        dual.append(hits[0])
    for i in range(rank):
        if dual[dual[i]] != i:
            raise NotModularError(f"derived duality is not an involution at {i}")

    fusion = tuple(
        tuple(tuple(t[i][j][dual[k]] for k in range(rank)) for j in range(rank))
        for i in range(rank)
    )
    return fusion, tuple(dual)


# ---------------------------------------------------------------------------
# raw input carrier and validation


@dataclass(frozen=True)
class CategoryInput:
    """Parsed but not yet trusted category description."""

    name: str
    kind: str  # "modular" | "fusion_ring"
    conductor: int
    labels: tuple[str, ...]
    s_matrix: Optional[CycloMatrix] = None
    twists: Optional[tuple[Cyclotomic, ...]] = None
    fusion: Optional[tuple] = None
    dims: Optional[tuple[Cyclotomic, ...]] = None
    char_table: Optional[CycloMatrix] = None

    @property
    def rank(self) -> int:
        return len(self.labels)


def _check_ring_axioms(fusion, dims, checks: list[Check]):
    """Shared fusion-ring checks; returns the dual involution or None."""
    rank = len(fusion)
    bad = None
    for j in range(rank):
        for k in range(rank):
            if fusion[0][j][k] != (1 if j == k else 0) or fusion[j][0][k] != (
                1 if j == k else 0
            ):
                bad = (j, k)
    checks.append(
        _p("unit-axiom") if bad is None else _f("unit-axiom", f"violated at {bad}")
    )

    try:
        dual = dual_involution(fusion)
        checks.append(_p("duality-axiom"))
    except MalformedFusionError as e:
        dual = None
        checks.append(_f("duality-axiom", str(e)))

    bad = None
    for i in range(rank):
        for j in range(rank):
            for k in range(rank):
                for m in range(rank):
                    lhs = sum(fusion[i][j][l] * fusion[l][k][m] for l in range(rank))
                    rhs = sum(fusion[j][k][l] * fusion[i][l][m] for l in range(rank))
                    if lhs != rhs:
                        bad = (i, j, k, m)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    checks.append(
        _p("associativity")
        if bad is None
        else _f("associativity", f"violated at (i,j,k,m)={bad}")
    )

    if dims is not None:
        checks.append(
            _p("unit-dim")
            if dims[0] == 1
            else _f("unit-dim", f"d_0 = {dims[0]}, expected 1")
        )
        zero = [i for i, d in enumerate(dims) if d.is_zero()]
        checks.append(
            _p("dims-nonzero")
            if not zero
            else _f("dims-nonzero", f"zero dimension at {zero}")
        )
        bad = None
        for i in range(rank):
            for j in range(rank):
                total = rational(0)
                for k in range(rank):
                    if fusion[i][j][k]:
                        total = total + fusion[i][j][k] * dims[k]
                if total != dims[i] * dims[j]:
                    bad = (i, j)
                    break
            if bad:
                break
        checks.append(
            _p("dim-homomorphism")
            if bad is None
            else _f("dim-homomorphism", f"d_i*d_j != sum N_ij^k d_k at {bad}")
        )
        if dual is not None:
            bad = [i for i in range(rank) if dims[dual[i]] != dims[i]]
            checks.append(
                _p("spherical")
                if not bad
                else _f("spherical", f"d_(i*) != d_i at {bad}")
            )
            total = global_dim(dims, dual)
            checks.append(
                _p("global-dim-nonzero", f"dim C = {total}")
                if not total.is_zero()
                else _f("global-dim-nonzero")
            )
        else:
            checks.append(_s("spherical", "no duality involution"))
            checks.append(_s("global-dim-nonzero", "no duality involution"))
    return dual


def _check_char_table(fusion, dims, table: CycloMatrix, checks: list[Check]):
    rank = len(fusion)
    bad = None
    for j in range(rank):
        if table.rows[0][j] != 1:
            bad = j
            break
    checks.append(
        _p("char-table-unit-row")
        if bad is None
        else _f("char-table-unit-row", f"column {bad} does not send the unit to 1")
    )

    bad = None
    for j in range(rank):
        for i in range(rank):
            for k in range(i, rank):
                total = rational(0)
                for l in range(rank):
                    if fusion[i][k][l]:
                        total = total + fusion[i][k][l] * table.rows[l][j]
                if table.rows[i][j] * table.rows[k][j] != total:
                    bad = (i, k, j)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(
        _p("char-table-characters")
        if bad is None
        else _f(
            "char-table-characters",
            f"column {bad[2]} is not an algebra character at (i,k)={bad[:2]}",
        )
    )

    try:
        table.inverse()
        checks.append(_p("char-table-invertible"))
    except Exception:
        checks.append(_f("char-table-invertible"))

    if dims is not None:
        cols = [
            j
            for j in range(rank)
            if all(table.rows[i][j] == dims[i] for i in range(rank))
        ]
        checks.append(
            _p("char-table-dimension-column", f"column {cols[0]}")
            if len(cols) == 1
            else _f(
                "char-table-dimension-column",
                f"columns equal to the dimension vector: {cols}",
            )
        )


def validate_input(inp: CategoryInput) -> list[Check]:
    """Run every invariant check and report them all; never raises."""
    checks: list[Check] = []
    if len(set(inp.labels)) == len(inp.labels):
        checks.append(_p("labels-distinct"))
    else:
        checks.append(_f("labels-distinct"))

    if inp.kind == "modular":
        s = inp.s_matrix
        checks.append(
            _p("s-unit-entry")
            if s.rows[0][0] == 1
            else _f("s-unit-entry", f"s_00 = {s.rows[0][0]}")
        )
        checks.append(
            _p("s-symmetric") if s.is_symmetric() else _f("s-symmetric")
        )
        zero = [r for r in range(s.nrows) if s.rows[0][r].is_zero()]
        checks.append(
            _p("dims-nonzero")
            if not zero
            else _f("dims-nonzero", f"s_0r = 0 at {zero}")
        )
        try:
            s.inverse()
            checks.append(_p("s-invertible"))
        except Exception as e:
            checks.append(_f("s-invertible", str(e)))

        fusion = None
        if not zero:
            try:
                fusion, dual = verlinde_fusion(s)
                checks.append(_p("verlinde-integral"))
            except (NotModularError, DegenerateError, MalformedFusionError) as e:
                checks.append(_f("verlinde-integral", str(e)))
        else:
            checks.append(_s("verlinde-integral", "zero dimension"))

        if fusion is not None:
            _check_ring_axioms(fusion, list(s.rows[0]), checks)
        else:
            for cid in (
                "unit-axiom",
                "duality-axiom",
                "associativity",
                "unit-dim",
                "dim-homomorphism",
                "spherical",
                "global-dim-nonzero",
            ):
                checks.append(_s(cid, "fusion ring unavailable"))

        if inp.twists is not None:
            bad = None
            if not inp.twists[0] == 1:
                bad = f"twist of the unit is {inp.twists[0]}"
            else:
                for i, th in enumerate(inp.twists):
                    order = lcm(2, th.conductor)
                    if th ** order != 1:
                        bad = f"twist {i} is not a root of unity"
                        break
            checks.append(
                _p("twists-roots-of-unity") if bad is None else _f("twists-roots-of-unity", bad)
            )
    else:
        dual = _check_ring_axioms(inp.fusion, inp.dims, checks)
        if inp.char_table is not None:
            _check_char_table(inp.fusion, inp.dims, inp.char_table, checks)

    return checks


def build_category(inp: CategoryInput) -> CategoryData:
    """Validate and assemble; any failed check rejects the input."""
    checks = validate_input(inp)
    failures = [c for c in checks if c.status == "fail"]
    if failures:
        raise InvalidCategoryError(failures)
    return assemble_category(inp)


def assemble_category(inp: CategoryInput) -> CategoryData:
    """Assemble already-validated input; callers must run validate_input first."""
    if inp.kind == "modular":
        fusion, dual = verlinde_fusion(inp.s_matrix)
        dims = tuple(inp.s_matrix.rows[0])
        modular = ModularData(s=inp.s_matrix, twists=inp.twists)
        char_table = None
    else:
        fusion = inp.fusion
        dual = dual_involution(fusion)
        dims = tuple(inp.dims)
        modular = None
        char_table = inp.char_table

    ring = FusionRing(labels=inp.labels, fusion=fusion, dual=dual)
    return CategoryData(
        name=inp.name,
        ring=ring,
        pivotal=PivotalData(dims=dims),
        modular=modular,
        char_table=char_table,
        dim=global_dim(dims, dual),
    )


# ---------------------------------------------------------------------------
# JSON schema


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")

_COMMON_KEYS = {"schema_version", "name", "kind", "conductor", "rank", "labels"}
_KIND_KEYS = {
    "modular": {"s_matrix": True, "twists": False},
    "fusion_ring": {"fusion": True, "dims": True, "char_table": False},
}


def _parse_rational(text, where: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise SchemaError(f"{where}: expected a rational string 'p' or 'p/q', got {text!r}")
    return Fraction(text)


def _parse_value(obj, conductor: int, where: str) -> Cyclotomic:
    if isinstance(obj, str):
        return rational(_parse_rational(obj, where), conductor)
    if isinstance(obj, list):
        want = euler_phi(conductor)
        if len(obj) != want:
            raise SchemaError(
                f"{where}: coefficient array has length {len(obj)}, "
                f"conductor {conductor} needs {want}"
            )
        return Cyclotomic(
            conductor, [_parse_rational(c, f"{where}[{k}]") for k, c in enumerate(obj)]
        )
    raise SchemaError(f"{where}: expected rational string or coefficient array")


def _parse_matrix(obj, rank: int, conductor: int, where: str) -> CycloMatrix:
    if not isinstance(obj, list) or len(obj) != rank:
        raise SchemaError(f"{where}: expected {rank} rows")
    rows = []
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != rank:
            raise SchemaError(f"{where}[{i}]: expected {rank} entries")
        rows.append(
            [_parse_value(v, conductor, f"{where}[{i}][{j}]") for j, v in enumerate(row)]
        )
    return CycloMatrix(rows)


def parse_category(obj) -> CategoryInput:
    """Parse a JSON object (strict: unknown fields are errors)."""
    if not isinstance(obj, dict):
        raise SchemaError("top level: expected a JSON object")
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(
            f"schema_version: expected {SCHEMA_VERSION}, got {obj.get('schema_version')!r}"
        )
    kind = obj.get("kind")
    if kind not in _KIND_KEYS:
        raise SchemaError(f"kind: expected 'modular' or 'fusion_ring', got {kind!r}")
    allowed = _COMMON_KEYS | set(_KIND_KEYS[kind])
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise SchemaError(f"unknown fields for kind {kind!r}: {', '.join(unknown)}")
    missing = sorted(
        k for k, required in _KIND_KEYS[kind].items() if required and k not in obj
    ) + sorted(k for k in _COMMON_KEYS if k not in obj)
    if missing:
        raise SchemaError(f"missing fields: {', '.join(missing)}")

    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise SchemaError("name: expected a nonempty string")
    conductor = obj["conductor"]
    if not isinstance(conductor, int) or isinstance(conductor, bool) or conductor < 1:
        raise SchemaError(f"conductor: expected a positive integer, got {conductor!r}")
    labels = obj["labels"]
    if (
        not isinstance(labels, list)
        or not labels
        or any(not isinstance(l, str) or not l for l in labels)
    ):
        raise SchemaError("labels: expected a nonempty list of nonempty strings")
    rank = obj["rank"]
    if rank != len(labels):
        raise SchemaError(f"rank: {rank!r} does not match {len(labels)} labels")

    if kind == "modular":
        s = _parse_matrix(obj["s_matrix"], rank, conductor, "s_matrix")
        twists = None
        if "twists" in obj:
            tw = obj["twists"]
            if not isinstance(tw, list) or len(tw) != rank:
                raise SchemaError(f"twists: expected {rank} entries")
            twists = tuple(
                _parse_value(v, conductor, f"twists[{i}]") for i, v in enumerate(tw)
            )
        return CategoryInput(
            name=name,
            kind=kind,
            conductor=conductor,
            labels=tuple(labels),
            s_matrix=s,
            twists=twists,
        )

    fus = obj["fusion"]
    if not isinstance(fus, list) or len(fus) != rank:
        raise SchemaError(f"fusion: expected {rank} outer rows")
    fusion = []
    for i, plane in enumerate(fus):
        if not isinstance(plane, list) or len(plane) != rank:
            raise SchemaError(f"fusion[{i}]: expected {rank} rows")
        rows = []
        for j, row in enumerate(plane):
            if not isinstance(row, list) or len(row) != rank:
                raise SchemaError(f"fusion[{i}][{j}]: expected {rank} entries")
            for k, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise SchemaError(
                        f"fusion[{i}][{j}][{k}]: expected a nonnegative integer, got {v!r}"
                    )
            rows.append(tuple(row))
        fusion.append(tuple(rows))
    dims_obj = obj["dims"]
    if not isinstance(dims_obj, list) or len(dims_obj) != rank:
        raise SchemaError(f"dims: expected {rank} entries")
    dims = tuple(
        _parse_value(v, conductor, f"dims[{i}]") for i, v in enumerate(dims_obj)
    )
    char_table = None
    if "char_table" in obj:
        char_table = _parse_matrix(obj["char_table"], rank, conductor, "char_table")
    return CategoryInput(
        name=name,
        kind=kind,
        conductor=conductor,
        labels=tuple(labels),
        fusion=tuple(fusion),
        dims=dims,
        char_table=char_table,
    )


def load_input(path) -> CategoryInput:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON in {path}: {e}") from e
    return parse_category(obj)


def load_category(path) -> CategoryData:
    return build_category(load_input(path))


def _value_to_json(v: Cyclotomic, conductor: int):
    if v.is_rational():
        return str(v.coeffs[0])
    return [str(c) for c in v.lift(conductor).coeffs]


def category_to_input(data: CategoryData, kind: str | None = None) -> CategoryInput:
    """Re-express built data as raw input, optionally forcing the kind.
    Downgrading a modular category to fusion_ring derives the character
    table alpha_ij = s_ij / d_j so the class algebra stays available."""
    kind = kind or data.kind
    if kind == "modular":
        if data.modular is None:
            raise CapabilityError("no s-matrix to write")
        return CategoryInput(
            name=data.name,
            kind="modular",
            conductor=_file_conductor(data, "modular"),
            labels=data.ring.labels,
            s_matrix=data.modular.s,
            twists=data.modular.twists,
        )
    if kind != "fusion_ring":
        raise ValueError(f"unknown kind {kind!r}")
    table = data.char_table
    if table is None and data.modular is not None:
        dim_inv = [d.inv() for d in data.dims]
        table = CycloMatrix(
            [
                [data.modular.s.rows[i][j] * dim_inv[j] for j in range(data.rank)]
                for i in range(data.rank)
            ]
        )
    return CategoryInput(
        name=data.name,
        kind="fusion_ring",
        conductor=_file_conductor(data, "fusion_ring", table),
        labels=data.ring.labels,
        fusion=data.ring.fusion,
        dims=data.dims,
        char_table=table,
    )


def _file_conductor(data: CategoryData, kind: str, table=None) -> int:
    values: list[Cyclotomic] = []
    if kind == "modular":
        values.extend(v for row in data.modular.s.rows for v in row)
        if data.modular.twists:
            values.extend(data.modular.twists)
    else:
        values.extend(data.dims)
        if table is not None:
            values.extend(v for row in table.rows for v in row)
    n = 1
    for v in values:
        if not v.is_rational():
            n = lcm(n, v.conductor)
    return n


def input_to_json(inp: CategoryInput) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "name": inp.name,
        "kind": inp.kind,
        "conductor": inp.conductor,
        "rank": inp.rank,
        "labels": list(inp.labels),
    }
    n = inp.conductor
    if inp.kind == "modular":
        out["s_matrix"] = [
            [_value_to_json(v, n) for v in row] for row in inp.s_matrix.rows
        ]
        if inp.twists is not None:
            out["twists"] = [_value_to_json(v, n) for v in inp.twists]
    else:
        out["fusion"] = [
            [[int(v) for v in row] for row in plane] for plane in inp.fusion
        ]
        out["dims"] = [_value_to_json(v, n) for v in inp.dims]
        if inp.char_table is not None:
            out["char_table"] = [
                [_value_to_json(v, n) for v in row] for row in inp.char_table.rows
            ]
    return out


def save_category(data: CategoryData, path, kind: str | None = None) -> None:
    obj = input_to_json(category_to_input(data, kind))
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")
