"""Exact linear algebra over prime fields F_p and the rationals Q.

All arithmetic is exact: prime-field elements are ints in ``0..p-1``,
rational elements are ``fractions.Fraction`` (always in lowest terms with
positive denominator).  Matrices are stored sparsely as dict-of-rows;
row reduction uses dense rows below 64 columns and sparse rows above.

Subspaces are kept in reduced row-echelon form, so two subspaces are
equal iff their bases are equal entrywise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

DENSE_COLUMN_LIMIT = 64


class FieldMismatchError(ValueError):
    """Raised when values from different fields are combined."""


class ContainmentError(ValueError):
    """Raised when a required subspace containment fails."""


class DimensionMismatchError(ValueError):
    """Raised when vector or matrix shapes are incompatible."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: F_p for ``char`` a prime, Q for ``char == 0``."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"field characteristic must be 0 or prime, got {self.char}")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return FieldSpec(p)

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(0)

    @property
    def name(self) -> str:
        return "Q" if self.char == 0 else f"F{self.char}"

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def coerce(self, value):
        """Interpret ``value`` (int, Fraction, or 'num/den' string) in this field."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.char == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.char == 0:
                raise FieldMismatchError(f"{value} has no image in {self.name}")
            return (value.numerator * pow(value.denominator, self.char - 2, self.char)) % self.char
        if isinstance(value, int):
            return value % self.char
        raise FieldMismatchError(f"cannot coerce {value!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def mul(self, a, b):
        return (a * b) % self.char if self.char else a * b

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"inverting zero in {self.name}")
        if self.char:
            return pow(a, self.char - 2, self.char)
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_sign(self, exponent: int):
        """(-1)**exponent as a field element."""
        return self.one if exponent % 2 == 0 else self.neg(self.one)

    def format(self, a) -> str:
        return str(a)

    def elements(self):
        """All field elements; only available for prime fields."""
        if self.char == 0:
            raise ValueError("cannot enumerate Q")
        return range(self.char)


RATIONALS = FieldSpec.rationals()
F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)


def parse_field(name: str) -> FieldSpec:
    name = name.strip()
    if name.upper() == "Q":
        return RATIONALS
    if name.upper().startswith("F"):
        return FieldSpec.prime(int(name[1:]))
    raise ValueError(f"unknown field {name!r} (expected Q or F<p>)")


# ---------------------------------------------------------------------------
# vectors (plain tuples of field elements)


def zero_vector(field: FieldSpec, n: int) -> tuple:
    return (field.zero,) * n


def unit_vector(field: FieldSpec, n: int, i: int) -> tuple:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(field: FieldSpec, u, v) -> tuple:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: FieldSpec, u, v) -> tuple:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: FieldSpec, c, v) -> tuple:
    return tuple(field.mul(c, a) for a in v)


def vec_is_zero(v) -> bool:
    return not any(v)


class Matrix:
    """Sparse exact matrix; no zero entries are stored.

    Acts on column vectors: ``m.apply(v)`` computes ``m @ v`` for a tuple
    ``v`` of length ``cols``.
    """

    __slots__ = ("field", "rows", "cols", "_rows")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._rows: dict[int, dict[int, object]] = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (r, c), v in items:
                self[r, c] = v

    def __setitem__(self, key, value):
        r, c = key
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise DimensionMismatchError(f"entry {key} outside {self.rows}x{self.cols}")
        value = self.field.coerce(value)
        row = self._rows.setdefault(r, {})
        if value:
            row[c] = value
        else:
            row.pop(c, None)
            if not row:
                self._rows.pop(r, None)

    def __getitem__(self, key):
        r, c = key
        return self._rows.get(r, {}).get(c, self.field.zero)

    @classmethod
    def from_rows(cls, field: FieldSpec, rowvals) -> "Matrix":
        rowvals = [list(r) for r in rowvals]
        rows = len(rowvals)
        cols = len(rowvals[0]) if rowvals else 0
        m = cls(field, rows, cols)
        for r, row in enumerate(rowvals):
            if len(row) != cols:
                raise DimensionMismatchError("ragged rows")
            for c, v in enumerate(row):
                m[r, c] = v
        return m

    @classmethod
    def from_columns(cls, field: FieldSpec, rows: int, columns) -> "Matrix":
        columns = list(columns)
        m = cls(field, rows, len(columns))
        for c, col in enumerate(columns):
            if len(col) != rows:
                raise DimensionMismatchError("column length mismatch")
            for r, v in enumerate(col):
                m[r, c] = v
        return m

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        m = cls(field, n, n)
        for i in range(n):
            m[i, i] = field.one
        return m

    @classmethod
    def zero(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols)

    def entries(self):
        """Sorted iterator of ((row, col), value)."""
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield (r, c), row[c]

    def row_dict(self, r: int) -> dict:
        return dict(self._rows.get(r, {}))

    def column(self, j: int) -> tuple:
        zero = self.field.zero
        return tuple(self._rows.get(r, {}).get(j, zero) for r in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def dense_rows(self):
        zero = self.field.zero
        out = []
        for r in range(self.rows):
            row = self._rows.get(r, {})
            out.append([row.get(c, zero) for c in range(self.cols)])
        return out

    def apply(self, v) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector length {len(v)} != cols {self.cols}")
        field = self.field
        out = [field.zero] * self.rows
        for r, row in self._rows.items():
            acc = field.zero
            for c, val in row.items():
                x = v[c]
                if x:
                    acc = field.add(acc, field.mul(val, x))
            out[r] = acc
        return tuple(out)

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        field = self.field
        out = Matrix(field, self.rows, other.cols)
        for r, row in self._rows.items():
            acc: dict[int, object] = {}
            for k, a in row.items():
                orow = other._rows.get(k)
                if not orow:
                    continue
                for c, b in orow.items():
                    acc[c] = field.add(acc.get(c, field.zero), field.mul(a, b))
            for c, v in acc.items():
                if v:
                    out._rows.setdefault(r, {})[c] = v
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("shape mismatch in +")
        out = Matrix(self.field, self.rows, self.cols)
        for (r, c), v in self.entries():
            out[r, c] = v
        for (r, c), v in other.entries():
            out[r, c] = self.field.add(out[r, c], v)
        return out

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(self.field.neg(self.field.one))

    def __neg__(self) -> "Matrix":
        return self.scale(self.field.neg(self.field.one))

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        out = Matrix(self.field, self.rows, self.cols)
        for (r, col), v in self.entries():
            out[r, col] = self.field.mul(c, v)
        return out

    def transpose(self) -> "Matrix":
        out = Matrix(self.field, self.cols, self.rows)
        for (r, c), v in self.entries():
            out[c, r] = v
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self._rows == other._rows
        )

    def __repr__(self):
        return f"Matrix({self.field.name}, {self.rows}x{self.cols}, {len(list(self.entries()))} entries)"

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[r, c, self.field.format(v)] for (r, c), v in self.entries()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Matrix":
        field = parse_field(data["field"])
        m = cls(field, data["rows"], data["cols"])
        for r, c, v in data["entries"]:
            m[r, c] = field.coerce(v)
        return m

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# row reduction


@dataclass(frozen=True)
class RrefResult:
    rank: int
    pivots: tuple
    reduced: Matrix


def _rref_dense(field: FieldSpec, rows: list[list]) -> tuple[list[list], list[int]]:
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = field.inv(rows[rank][col])
        if inv != field.one:
            rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        prow = rows[rank]
        for r in range(nrows):
            if r == rank:
                continue
            c0 = rows[r][col]
            if c0:
                rows[r] = [field.sub(x, field.mul(c0, y)) for x, y in zip(rows[r], prow)]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _rref_sparse(field: FieldSpec, rows) -> tuple[list[dict], list[int]]:
    """Incremental Gauss-Jordan on dict rows; returns reduced rows and pivots."""
    by_pivot: dict[int, dict] = {}
    for row in rows:
        work = dict(row)
        while work:
            lead = min(work)
            if lead in by_pivot:
                coef = work[lead]
                for c, v in by_pivot[lead].items():
                    nv = field.sub(work.get(c, field.zero), field.mul(coef, v))
                    if nv:
                        work[c] = nv
                    else:
                        work.pop(c, None)
            else:
                inv = field.inv(work[lead])
                if inv != field.one:
                    work = {c: field.mul(inv, v) for c, v in work.items()}
                for other in by_pivot.values():
                    coef = other.get(lead)
                    if coef:
                        for c, v in work.items():
                            nv = field.sub(other.get(c, field.zero), field.mul(coef, v))
                            if nv:
                                other[c] = nv
                            else:
                                other.pop(c, None)
                by_pivot[lead] = work
                break
    pivots = sorted(by_pivot)
    return [by_pivot[p] for p in pivots], pivots


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row-echelon form with rank and pivot columns."""
    field = m.field
    if m.cols < DENSE_COLUMN_LIMIT:
        rows, pivots = _rref_dense(field, m.dense_rows())
        reduced = Matrix(field, m.rows, m.cols)
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    reduced._rows.setdefault(r, {})[c] = v
    else:
        srows, pivots = _rref_sparse(field, (m.row_dict(r) for r in range(m.rows)))
        reduced = Matrix(field, m.rows, m.cols)
        for r, row in enumerate(srows):
            reduced._rows[r] = dict(row)
    return RrefResult(rank=len(pivots), pivots=tuple(pivots), reduced=reduced)


def _echelon_rows(field: FieldSpec, ncols: int, vectors) -> tuple[list[tuple], list[int]]:
    """RREF basis rows (as tuples) of the span of ``vectors``."""
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return [], []
    if ncols < DENSE_COLUMN_LIMIT:
        rows, pivots = _rref_dense(field, [list(v) for v in vecs])
        return [tuple(r) for r in rows], pivots
    sparse_in = ({c: x for c, x in enumerate(v) if x} for v in vecs)
    srows, pivots = _rref_sparse(field, sparse_in)
    zero = field.zero
    return [tuple(row.get(c, zero) for c in range(ncols)) for row in srows], pivots


class Subspace:
    """A subspace of ``field^ambient_dim`` with basis in reduced echelon form."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field: FieldSpec, ambient_dim: int, vectors) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector length {len(v)} != ambient {ambient_dim}")
        basis, pivots = _echelon_rows(field, ambient_dim, vectors)
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        basis = [unit_vector(field, ambient_dim, i) for i in range(ambient_dim)]
        return cls(field, ambient_dim, basis, range(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v) -> tuple[tuple, tuple]:
        """Eliminate the pivot coordinates of ``v``; returns (residual, coeffs).

        ``v == residual + sum(coeffs[i] * basis[i])`` and the residual is zero
        iff ``v`` lies in the subspace.
        """
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector/ambient mismatch")
        field = self.field
        work = list(v)
        coeffs = []
        for row, p in zip(self.basis, self.pivots):
            c = work[p]
            coeffs.append(c)
            if c:
                for j, x in enumerate(row):
                    if x:
                        work[j] = field.sub(work[j], field.mul(c, x))
        return tuple(work), tuple(coeffs)

    def contains_vector(self, v) -> bool:
        residual, _ = self.reduce(v)
        return vec_is_zero(residual)

    def coords(self, v):
        """Coordinates of ``v`` in this basis, or None if absent."""
        residual, coeffs = self.reduce(v)
        if vec_is_zero(residual):
            return coeffs
        return None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains_vector(b) for b in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.field.name}^{self.ambient_dim})"


def membership(v, s: Subspace):
    """Coordinates of ``v`` in the basis of ``s``, or None when v is absent."""
    return s.coords(v)


def sum_subspaces(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionMismatchError("subspace sum: ambient mismatch")
    return Subspace.from_vectors(a.field, a.ambient_dim, list(a.basis) + list(b.basis))


def intersect_subspaces(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: rows (x|x) for x in a and (y|0) for y in b; rows of the
    echelon form with zero left half have right halves spanning the
    intersection."""
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionMismatchError("subspace intersection: ambient mismatch")
    n = a.ambient_dim
    field = a.field
    zero = zero_vector(field, n)
    stacked = [tuple(x) + tuple(x) for x in a.basis] + [tuple(y) + zero for y in b.basis]
    rows, _ = _echelon_rows(field, 2 * n, stacked)
    inter = [row[n:] for row in rows if vec_is_zero(row[:n])]
    return Subspace.from_vectors(field, n, inter)


def image(m: Matrix) -> Subspace:
    """Column span of ``m`` inside field^rows."""
    return Subspace.from_vectors(m.field, m.rows, m.columns())


def image_of_subspace(m: Matrix, s: Subspace) -> Subspace:
    if s.ambient_dim != m.cols:
        raise DimensionMismatchError("image_of_subspace: ambient/cols mismatch")
    return Subspace.from_vectors(m.field, m.rows, [m.apply(b) for b in s.basis])


def reduction_matrix(s: Subspace) -> Matrix:
    """The linear map v -> v reduced against s; its kernel is exactly s."""
    n = s.ambient_dim
    out = Matrix.identity(s.field, n)
    field = s.field
    for row, p in zip(s.basis, s.pivots):
        for j, x in enumerate(row):
            if x:
                out[j, p] = field.sub(out[j, p], x)
    # columns at pivot positions now subtract the basis row; e_p maps to e_p - row
    return out


def kernel_basis(m: Matrix) -> Subspace:
    """Echelon basis of the null space {v : m v = 0}."""
    field = m.field
    res = rref(m)
    pivot_set = dict((p, i) for i, p in enumerate(res.pivots))
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for j in free_cols:
        v = [field.zero] * m.cols
        v[j] = field.one
        for p, i in pivot_set.items():
            coeff = res.reduced[i, j]
            if coeff:
                v[p] = field.neg(coeff)
        vectors.append(tuple(v))
    return Subspace.from_vectors(field, m.cols, vectors)


def preimage(m: Matrix, s: Subspace) -> Subspace:
    """{v : m v in s} as a subspace of the source."""
    if s.ambient_dim != m.rows:
        raise DimensionMismatchError("preimage: subspace must live in the target")
    return kernel_basis(reduction_matrix(s) @ m)


class QuotientPresentation:
    """A quotient ambient/denominator with deterministic coset representatives.

    Representatives follow the echelon-complement rule: write the denominator
    in ambient coordinates, echelonize, and lift the non-pivot coordinate
    vectors back to the ambient space.
    """

    __slots__ = ("ambient", "denominator", "coset_reps", "_denom_rows", "_denom_pivots", "_free")

    def __init__(self, ambient: Subspace, denominator: Subspace):
        if ambient.field != denominator.field or ambient.ambient_dim != denominator.ambient_dim:
            raise DimensionMismatchError("quotient: mismatched ambient spaces")
        if not ambient.contains_subspace(denominator):
            raise ContainmentError("denominator is not contained in the ambient subspace")
        self.ambient = ambient
        self.denominator = denominator
        field = ambient.field
        k = ambient.dim
        denom_coords = []
        for d in denominator.basis:
            c = ambient.coords(d)
            denom_coords.append(c)
        rows, pivots = _echelon_rows(field, k, denom_coords)
        self._denom_rows = rows
        self._denom_pivots = pivots
        pivot_set = set(pivots)
        self._free = tuple(j for j in range(k) if j not in pivot_set)
        self.coset_reps = tuple(ambient.basis[j] for j in self._free)

    @property
    def dim(self) -> int:
        return len(self._free)

    @property
    def field(self) -> FieldSpec:
        return self.ambient.field

    def class_coords(self, v) -> tuple:
        """Coordinates of [v] in the coset-representative basis; v must be in
        the ambient subspace."""
        a = self.ambient.coords(v)
        if a is None:
            raise ContainmentError("vector not in the ambient subspace")
        field = self.field
        work = list(a)
        for row, p in zip(self._denom_rows, self._denom_pivots):
            c = work[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        work[j] = field.sub(work[j], field.mul(c, x))
        return tuple(work[j] for j in self._free)

    def project(self, v) -> tuple:
        """Projection of v onto the span of the coset representatives."""
        coords = self.class_coords(v)
        field = self.field
        out = [field.zero] * self.ambient.ambient_dim
        for c, rep in zip(coords, self.coset_reps):
            if c:
                for j, x in enumerate(rep):
                    if x:
                        out[j] = field.add(out[j], field.mul(c, x))
        return tuple(out)

    def rep_vector(self, coords) -> tuple:
        field = self.field
        out = [field.zero] * self.ambient.ambient_dim
        for c, rep in zip(coords, self.coset_reps):
            if c:
                for j, x in enumerate(rep):
                    if x:
                        out[j] = field.add(out[j], field.mul(c, x))
        return tuple(out)

    def __repr__(self):
        return f"QuotientPresentation(dim={self.dim})"


def quotient(ambient: Subspace, denom: Subspace) -> QuotientPresentation:
    return QuotientPresentation(ambient, denom)


class SpanSolver:
    """Expresses vectors as explicit combinations of a fixed generating set.

    The generators need not be independent; ``express`` returns one
    deterministic coefficient tuple (Gauss-Jordan particular solution).
    """

    def __init__(self, field: FieldSpec, ncols: int, rows):
        self.field = field
        self.ncols = ncols
        self.nrows = 0
        self._reduced: list[tuple[list, dict]] = []  # (dense vector, combo dict)
        self._pivot_of: dict[int, int] = {}  # column -> index into _reduced
        for row in rows:
            self.add_row(row)

    def add_row(self, row):
        field = self.field
        idx = self.nrows
        self.nrows += 1
        work = list(row)
        combo = {idx: field.one}
        self._reduce_in_place(work, combo)
        lead = next((c for c, x in enumerate(work) if x), None)
        if lead is None:
            return
        inv = field.inv(work[lead])
        if inv != field.one:
            work = [field.mul(inv, x) for x in work]
            combo = {k: field.mul(inv, v) for k, v in combo.items()}
        # full reduction: clear this column in earlier rows
        for vec, cmb in self._reduced:
            coef = vec[lead]
            if coef:
                for j, x in enumerate(work):
                    if x:
                        vec[j] = field.sub(vec[j], field.mul(coef, x))
                for k, v in combo.items():
                    nv = field.sub(cmb.get(k, field.zero), field.mul(coef, v))
                    if nv:
                        cmb[k] = nv
                    else:
                        cmb.pop(k, None)
        self._pivot_of[lead] = len(self._reduced)
        self._reduced.append((work, combo))

    def _reduce_in_place(self, work: list, combo: dict):
        field = self.field
        for lead in sorted(self._pivot_of):
            coef = work[lead]
            if not coef:
                continue
            vec, cmb = self._reduced[self._pivot_of[lead]]
            for j, x in enumerate(vec):
                if x:
                    work[j] = field.sub(work[j], field.mul(coef, x))
            for k, v in cmb.items():
                nv = field.sub(combo.get(k, field.zero), field.mul(coef, v))
                if nv:
                    combo[k] = nv
                else:
                    combo.pop(k, None)

    def express(self, v):
        """Coefficients c with v == sum c[i] * rows[i], or None."""
        if len(v) != self.ncols:
            raise DimensionMismatchError("SpanSolver.express: length mismatch")
        field = self.field
        work = list(v)
        combo: dict[int, object] = {}
        for lead in sorted(self._pivot_of):
            coef = work[lead]
            if not coef:
                continue
            vec, cmb = self._reduced[self._pivot_of[lead]]
            for j, x in enumerate(vec):
                if x:
                    work[j] = field.sub(work[j], field.mul(coef, x))
            for k, val in cmb.items():
                combo[k] = field.add(combo.get(k, field.zero), field.mul(coef, val))
        if any(work):
            return None
        return tuple(combo.get(i, field.zero) for i in range(self.nrows))

    def contains(self, v) -> bool:
        return self.express(v) is not None


def split_sum(v, a: Subspace, b: Subspace):
    """Write v = x + y with x in a, y in b; returns (x, y) or raises."""
    solver = SpanSolver(a.field, a.ambient_dim, list(a.basis) + list(b.basis))
    coeffs = solver.express(v)
    if coeffs is None:
        raise ContainmentError("vector not in the sum of the subspaces")
    field = a.field
    x = [field.zero] * a.ambient_dim
    for c, basis_vec in zip(coeffs[: a.dim], a.basis):
        if c:
            for j, val in enumerate(basis_vec):
                if val:
                    x[j] = field.add(x[j], field.mul(c, val))
    x = tuple(x)
    y = vec_sub(field, v, x)
    return x, y
