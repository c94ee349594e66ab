"""Sparse exact linear algebra over Q and GF(p).

Vectors are {column: value} dicts or dense sequences. The incremental Echelon
keeps integer-scaled rows over Q (content 1, positive pivot) and pivot-1 rows
over GF(p); it answers rank and membership questions. Canonical subspace bases
are reduced row echelon form with leading 1, rows sorted by pivot column, so
equal subspaces have equal bases.
"""

from fractions import Fraction
from math import gcd

from .errors import InputError, PreconditionError
from .fields import Field


def to_sparse(vec, field=None):
    """Copy a dense sequence or dict into a {col: value} dict, dropping zeros."""
    if isinstance(vec, dict):
        items = vec.items()
    else:
        items = enumerate(vec)
    if field is not None:
        return {c: field.normalize(v) for c, v in items if not field.is_zero(v)}
    return {c: v for c, v in items if v}


def to_dense(vec, width):
    row = [0] * width
    for c, v in vec.items():
        row[c] = v
    return tuple(row)


def _int_scale(row):
    """Scale a rational sparse row to integers with content 1 and positive pivot."""
    denom = 1
    for v in row.values():
        if isinstance(v, Fraction):
            denom = denom * v.denominator // gcd(denom, v.denominator)
    g = 0
    ints = {}
    for c, v in row.items():
        n = int(v * denom)
        ints[c] = n
        g = gcd(g, n)
    if g > 1:
        for c in ints:
            ints[c] //= g
    if ints and ints[min(ints)] < 0:
        for c in ints:
            ints[c] = -ints[c]
    return ints


class Echelon:
    """Incremental row echelon form; rank and span membership, no back substitution."""

    def __init__(self, width: int, field: Field):
        self.width = width
        self.field = field
        self.pivots = {}  # pivot column -> stored row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _residual(self, vec):
        p = self.field.p
        if p is None:
            row = _int_scale(to_sparse(vec))
            steps = 0
            while row:
                c = min(row)
                piv = self.pivots.get(c)
                if piv is None:
                    return row
                steps += 1
                if steps % 8 == 0:
                    # unit rescaling keeps entries small; harmless for span queries
                    row = _int_scale(row)
                a, b = piv[c], row[c]
                g = gcd(a, b)
                ma, mb = a // g, b // g
                if ma != 1:
                    for k in row:
                        row[k] *= ma
                for k, v in piv.items():
                    nv = row.get(k, 0) - mb * v
                    if nv:
                        row[k] = nv
                    elif k in row:
                        del row[k]
            return row
        row = {c: v % p for c, v in to_sparse(vec).items() if v % p}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                elif k in row:
                    del row[k]
        return row

    def insert(self, vec) -> bool:
        """Add vec to the span; True if the rank grew."""
        row = self._residual(vec)
        if not row:
            return False
        c = min(row)
        p = self.field.p
        if p is None:
            row = _int_scale(row)
        else:
            f = pow(row[c], p - 2, p)
            row = {k: (v * f) % p for k, v in row.items()}
        self.pivots[c] = row
        return True

    def contains(self, vec) -> bool:
        return not self._residual(vec)

    def rref_rows(self):
        """Leading-1 rows with pivot columns cleared elsewhere, sorted by pivot."""
        field = self.field
        cols = sorted(self.pivots)
        rows = []
        for c in cols:
            raw = self.pivots[c]
            inv = field.inv(raw[c])
            rows.append({k: field.normalize(v * inv) for k, v in raw.items()})
        # clear above-pivot entries, working upward
        for idx in range(len(rows) - 1, 0, -1):
            c = cols[idx]
            low = rows[idx]
            for jdx in range(idx):
                high = rows[jdx]
                f = high.get(c)
                if f is None:
                    continue
                for k, v in low.items():
                    nv = field.normalize(high.get(k, 0) - f * v)
                    if field.is_zero(nv):
                        high.pop(k, None)
                    else:
                        high[k] = nv
        return rows


def exact_reduce(vec, rref_by_pivot, field, coeffs=None):
    """Subtract the span component of vec against leading-1 RREF rows.

    rref_by_pivot maps pivot column -> sparse row. A single ascending pass is
    exact because RREF rows vanish at the other pivot columns. If coeffs is a
    dict it receives {pivot column: coefficient used}.
    """
    row = to_sparse(vec, field)
    for c in sorted(rref_by_pivot):
        f = row.get(c)
        if f is None:
            continue
        if coeffs is not None:
            coeffs[c] = f
        piv = rref_by_pivot[c]
        for k, v in piv.items():
            nv = field.normalize(row.get(k, 0) - f * v)
            if field.is_zero(nv):
                row.pop(k, None)
            else:
                row[k] = nv
    return row


class SubspaceBasis:
    """Canonical RREF basis of a subspace of K^n."""

    __slots__ = ("field", "ambient_dim", "vectors", "pivot_cols", "_by_pivot")

    def __init__(self, field, ambient_dim, rref_rows):
        self.field = field
        self.ambient_dim = ambient_dim
        self.pivot_cols = tuple(min(r) for r in rref_rows)
        self.vectors = tuple(to_dense(r, ambient_dim) for r in rref_rows)
        self._by_pivot = {min(r): dict(r) for r in rref_rows}

    @classmethod
    def from_vectors(cls, vecs, ambient_dim, field):
        ech = Echelon(ambient_dim, field)
        for v in vecs:
            ech.insert(v)
        return cls(field, ambient_dim, ech.rref_rows())

    @classmethod
    def zero(cls, ambient_dim, field):
        return cls(field, ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim, field):
        return cls(field, ambient_dim, [{i: 1} for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains_vector(self, vec) -> bool:
        return not exact_reduce(vec, self._by_pivot, self.field)

    def contains(self, other) -> bool:
        return all(self.contains_vector(v) for v in other._by_pivot.values())

    def __eq__(self, other):
        return (
            isinstance(other, SubspaceBasis)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.vectors))

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"

    def sum(self, other):
        self._check_compatible(other)
        ech = Echelon(self.ambient_dim, self.field)
        for v in self._by_pivot.values():
            ech.insert(v)
        for v in other._by_pivot.values():
            ech.insert(v)
        return SubspaceBasis(self.field, self.ambient_dim, ech.rref_rows())

    def intersect(self, other):
        """Kernel method: null space of the stacked coefficient matrix."""
        self._check_compatible(other)
        da, db = self.dim, other.dim
        rows = []
        for r in range(self.ambient_dim):
            row = {}
            for i in range(da):
                v = self.vectors[i][r]
                if not self.field.is_zero(v):
                    row[i] = v
            for j in range(db):
                v = other.vectors[j][r]
                if not self.field.is_zero(v):
                    row[da + j] = self.field.neg(v)
            if row:
                rows.append(row)
        result = reduce(rows, width=da + db, field=self.field)
        vecs = []
        for k in result.kernel.vectors:
            combo = {}
            for i in range(da):
                if self.field.is_zero(k[i]):
                    continue
                for c, v in self._by_pivot[self.pivot_cols[i]].items():
                    nv = self.field.normalize(combo.get(c, 0) + k[i] * v)
                    if self.field.is_zero(nv):
                        combo.pop(c, None)
                    else:
                        combo[c] = nv
            vecs.append(combo)
        return SubspaceBasis.from_vectors(vecs, self.ambient_dim, self.field)

    def quotient_reps(self, sub):
        """Basis vectors of self whose classes form a basis of self/sub."""
        self._check_compatible(sub)
        if not self.contains(sub):
            raise PreconditionError("quotient: sub is not contained in the subspace")
        ech = Echelon(self.ambient_dim, self.field)
        for v in sub._by_pivot.values():
            ech.insert(v)
        reps = []
        for v in self.vectors:
            if ech.insert(v):
                reps.append(v)
        return tuple(reps)

    def _check_compatible(self, other):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise PreconditionError("subspaces live in different ambient spaces")


class ReduceResult:
    """Rank, row space, and kernel of a matrix given by its rows."""

    __slots__ = ("rank", "row_space", "kernel")

    def __init__(self, rank, row_space, kernel):
        self.rank = rank
        self.row_space = row_space
        self.kernel = kernel


def reduce(rows, width: int, field: Field) -> ReduceResult:
    """Echelonize matrix rows; kernel is the null space {x : M x = 0}."""
    rows = list(rows)
    if width == 0 and any(to_sparse(r) for r in rows):
        raise InputError("empty-width matrix with nonzero rows")
    ech = Echelon(width, field)
    for r in rows:
        ech.insert(r)
    rref = ech.rref_rows()
    row_space = SubspaceBasis(field, width, rref)
    pivset = set(row_space.pivot_cols)
    kernel_rows = []
    for f in range(width):
        if f in pivset:
            continue
        vec = {f: 1}
        for r in rref:
            c = min(r)
            v = r.get(f)
            if v is not None and not field.is_zero(v):
                vec[c] = field.neg(v)
        kernel_rows.append(vec)
    kernel = SubspaceBasis.from_vectors(kernel_rows, width, field)
    return ReduceResult(row_space.dim, row_space, kernel)


def matrix_rank(rows, width: int, field: Field) -> int:
    ech = Echelon(width, field)
    for r in rows:
        ech.insert(r)
    return ech.rank


def solve_in_span(basis: SubspaceBasis, vec):
    """Coefficients of vec in the canonical basis, or None if outside the span."""
    coeffs = {}
    residual = exact_reduce(vec, basis._by_pivot, basis.field, coeffs=coeffs)
    if residual:
        return None
    return tuple(coeffs.get(c, 0) for c in basis.pivot_cols)


class BasisSolver:
    """Express vectors in a fixed (not necessarily canonical) independent basis.

    Augmented-column trick: echelonize rows (r_i | e_i); reducing (v | 0) exactly
    leaves (0 | -coords) when v lies in the span. Pivots stay in the original
    columns because the rows are independent there.
    """

    __slots__ = ("field", "width", "size", "_rref")

    def __init__(self, rows, width, field):
        rows = [to_sparse(r, field) for r in rows]
        self.field = field
        self.width = width
        self.size = len(rows)
        ech = Echelon(width + self.size, field)
        for i, r in enumerate(rows):
            aug = dict(r)
            aug[width + i] = 1
            if not ech.insert(aug):
                raise PreconditionError("basis rows are linearly dependent")
        self._rref = {min(r): r for r in ech.rref_rows()}
        if any(c >= width for c in self._rref):
            raise PreconditionError("basis rows are linearly dependent")

    def coords(self, vec):
        """Coordinates of vec in the basis, or None if vec is outside the span."""
        residual = exact_reduce(to_sparse(vec, self.field), self._rref, self.field)
        if any(c < self.width for c in residual):
            return None
        return tuple(
            self.field.neg(residual.get(self.width + i, 0)) for i in range(self.size)
        )


class QuotientSpace:
    """K^ambient modulo the span of relation rows, with exact project and section.

    Coordinates on the quotient are the free (non-pivot) columns in ascending
    order; projecting a relation gives zero and project(section(k)) is the k-th
    unit vector.
    """

    __slots__ = ("field", "ambient_dim", "relations", "free_cols", "dim", "_col_index")

    def __init__(self, ambient_dim, relations, field):
        if isinstance(relations, SubspaceBasis):
            self.relations = relations
        else:
            self.relations = SubspaceBasis.from_vectors(relations, ambient_dim, field)
        self.field = field
        self.ambient_dim = ambient_dim
        pivset = set(self.relations.pivot_cols)
        self.free_cols = tuple(c for c in range(ambient_dim) if c not in pivset)
        self.dim = len(self.free_cols)
        self._col_index = {c: k for k, c in enumerate(self.free_cols)}

    def project_sparse(self, vec) -> dict:
        residual = exact_reduce(vec, self.relations._by_pivot, self.field)
        return {self._col_index[c]: v for c, v in residual.items()}

    def project(self, vec):
        return to_dense(self.project_sparse(vec), self.dim)

    def section(self, k: int):
        """Ambient representative of the k-th quotient coordinate."""
        return to_dense({self.free_cols[k]: 1}, self.ambient_dim)

    def section_sparse(self, k: int) -> dict:
        return {self.free_cols[k]: 1}
