"""Finite-dimensional associative unital superalgebras by structure constants.

table[i][j] is the dense coordinate vector of e_i e_j; parity entries are 0/1.
The unit is a distinguished basis element, so quotients and products rebase
their natural spanning sets to keep the class of 1 as basis element 0.
"""

import re
from dataclasses import dataclass, field as dc_field

from .errors import ConstructionError, InputError, PreconditionError
from .fields import QQ, Field
from .linalg import (
    BasisSolver,
    Echelon,
    QuotientSpace,
    SubspaceBasis,
    to_sparse,
)


@dataclass
class ValidationReport:
    """Witness lists; an empty report is exactly a valid algebra."""

    associativity: list = dc_field(default_factory=list)  # (i, j, k) triples
    unit: list = dc_field(default_factory=list)  # ("left"|"right", i)
    grading: list = dc_field(default_factory=list)  # (i, j, k) bad coord

    @property
    def ok(self) -> bool:
        return not (self.associativity or self.unit or self.grading)

    def witnesses(self):
        out = []
        for t in self.associativity:
            out.append(f"associativity fails at basis triple {t}")
        for side, i in self.unit:
            out.append(f"{side} unit fails at basis index {i}")
        for t in self.grading:
            out.append(f"grading fails: coord {t[2]} of product ({t[0]},{t[1]})")
        return out


class SuperAlgebra:
    __slots__ = ("name", "field", "parity", "basis_names", "unit", "table", "_sparse")

    def __init__(self, name, field, parity, basis_names, unit, table):
        dim = len(parity)
        if len(basis_names) != dim or len(table) != dim:
            raise InputError("inconsistent dimensions in algebra data")
        if any(len(row) != dim for row in table):
            raise InputError("multiplication table is not square")
        if any(len(cell) != dim for row in table for cell in row):
            raise InputError("table entries must be coordinate vectors")
        if not 0 <= unit < dim:
            raise InputError("unit index out of range")
        if any(p not in (0, 1) for p in parity):
            raise InputError("parities must be 0 or 1")
        if len(set(basis_names)) != dim:
            raise InputError("duplicate basis names")
        self.name = name
        self.field = field
        self.parity = tuple(parity)
        self.basis_names = tuple(basis_names)
        self.unit = unit
        self.table = tuple(
            tuple(tuple(field.normalize(c) for c in cell) for cell in row)
            for row in table
        )
        self._sparse = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(cell) if not field.is_zero(c))
                for cell in row
            )
            for row in self.table
        )

    @property
    def dim(self) -> int:
        return len(self.parity)

    def basis_vector(self, i):
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def unit_vector(self):
        return self.basis_vector(self.unit)

    def mul(self, x, y):
        """Product of two dense coordinate vectors."""
        f = self.field
        acc = [0] * self.dim
        for i, v in enumerate(x):
            if f.is_zero(v):
                continue
            row = self._sparse[i]
            for j, w in enumerate(y):
                if f.is_zero(w):
                    continue
                vw = v * w
                for k, c in row[j]:
                    acc[k] += vw * c
        return tuple(f.normalize(v) for v in acc)

    def mul_sparse(self, x: dict, y: dict) -> dict:
        f = self.field
        acc = {}
        for i, v in x.items():
            row = self._sparse[i]
            for j, w in y.items():
                vw = v * w
                for k, c in row[j]:
                    acc[k] = acc.get(k, 0) + vw * c
        return {k: f.normalize(v) for k, v in acc.items() if not f.is_zero(v)}

    def commutator(self, i: int, j: int):
        """Supercommutator [e_i, e_j] = e_i e_j - (-1)^{|i||j|} e_j e_i."""
        f = self.field
        sign = -1 if self.parity[i] and self.parity[j] else 1
        return tuple(
            f.normalize(a - sign * b) for a, b in zip(self.table[i][j], self.table[j][i])
        )

    def homogeneous_parts(self, vec):
        """Split a dense vector into (parity, component) pairs, zeros dropped."""
        f = self.field
        parts = {}
        for i, v in enumerate(vec):
            if f.is_zero(v):
                continue
            parts.setdefault(self.parity[i], [0] * self.dim)[i] = v
        return [(p, tuple(part)) for p, part in sorted(parts.items())]

    def vector_parity(self, vec):
        """Parity of a homogeneous vector; 0 for zero, None if mixed."""
        parts = self.homogeneous_parts(vec)
        if not parts:
            return 0
        if len(parts) > 1:
            return None
        return parts[0][0]

    def validate(self) -> ValidationReport:
        rep = ValidationReport()
        f = self.field
        dim = self.dim
        u = self.unit
        for i in range(dim):
            if self.table[u][i] != self.basis_vector(i):
                rep.unit.append(("left", i))
            if self.table[i][u] != self.basis_vector(i):
                rep.unit.append(("right", i))
        for i in range(dim):
            for j in range(dim):
                want = (self.parity[i] + self.parity[j]) % 2
                for k, _ in self._sparse[i][j]:
                    if self.parity[k] != want:
                        rep.grading.append((i, j, k))
        for i in range(dim):
            for j in range(dim):
                left = self.table[i][j]
                for k in range(dim):
                    # (e_i e_j) e_k vs e_i (e_j e_k), expanded through the table
                    lhs = self.mul(left, self.basis_vector(k))
                    rhs = self.mul(self.basis_vector(i), self.table[j][k])
                    if lhs != rhs:
                        rep.associativity.append((i, j, k))
        return rep

    def __eq__(self, other):
        return (
            isinstance(other, SuperAlgebra)
            and self.field == other.field
            and self.parity == other.parity
            and self.unit == other.unit
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.field, self.parity, self.unit))

    def __repr__(self):
        return f"SuperAlgebra({self.name}, dim={self.dim}, field={self.field.spec})"


@dataclass
class AlgebraSubspace:
    algebra: SuperAlgebra
    space: SubspaceBasis

    @property
    def dim(self) -> int:
        return self.space.dim


def supercommutator_span(a: SuperAlgebra) -> AlgebraSubspace:
    """Span of [x, y] over homogeneous basis pairs: the space [A, A]."""
    vecs = [a.commutator(i, j) for i in range(a.dim) for j in range(i, a.dim)]
    return AlgebraSubspace(a, SubspaceBasis.from_vectors(vecs, a.dim, a.field))


@dataclass
class IdealQuotient:
    ideal: AlgebraSubspace
    quotient: SuperAlgebra  # None when the unit collapses
    projection: tuple  # dim(A) rows of quotient coordinates
    unit_collapsed: bool

    def project(self, vec):
        if self.quotient is None:
            return ()
        f = self.ideal.algebra.field
        qd = self.quotient.dim
        acc = [0] * qd
        for i, v in enumerate(vec):
            if f.is_zero(v):
                continue
            for k in range(qd):
                acc[k] += v * self.projection[i][k]
        return tuple(f.normalize(v) for v in acc)


def graded_ideal_quotient(a: SuperAlgebra, generators, name=None) -> IdealQuotient:
    """Smallest graded two-sided ideal containing the generators, and A/I.

    Worklist closure under left/right multiplication by basis elements;
    generators are split into homogeneous parts first.
    """
    f = a.field
    ech = Echelon(a.dim, f)
    queue = []
    for g in generators:
        for _, part in a.homogeneous_parts(g):
            queue.append(part)
    while queue:
        v = queue.pop()
        if not ech.insert(v):
            continue
        vs = to_sparse(v, f)
        for i in range(a.dim):
            ei = {i: 1}
            left = a.mul_sparse(ei, vs)
            if left:
                queue.append(tuple(left.get(k, 0) for k in range(a.dim)))
            right = a.mul_sparse(vs, ei)
            if right:
                queue.append(tuple(right.get(k, 0) for k in range(a.dim)))
    ideal_basis = SubspaceBasis(f, a.dim, ech.rref_rows())
    ideal = AlgebraSubspace(a, ideal_basis)
    if ideal_basis.contains_vector(a.unit_vector()):
        return IdealQuotient(ideal, None, tuple(() for _ in range(a.dim)), True)
    qs = QuotientSpace(a.dim, ideal_basis, f)
    lifted = [qs.section(k) for k in range(qs.dim)]
    u = qs.project(a.unit_vector())
    rows = [u]
    parities = [0]
    names = [a.basis_names[a.unit]]
    picker = Echelon(qs.dim, f)
    picker.insert(u)
    for k in range(qs.dim):
        if picker.insert({k: 1}):
            rows.append(tuple(1 if c == k else 0 for c in range(qs.dim)))
            parities.append(a.parity[qs.free_cols[k]])
            names.append(a.basis_names[qs.free_cols[k]])
    if len(set(names)) != len(names):
        names = [f"q{i}" for i in range(len(names))]
        names[0] = "one"
    solver = BasisSolver(rows, qs.dim, f)

    def lift(qvec):
        amb = [0] * a.dim
        for k, v in enumerate(qvec):
            if f.is_zero(v):
                continue
            for c, w in enumerate(lifted[k]):
                amb[c] += v * w
        return tuple(f.normalize(v) for v in amb)

    ambient_rows = [lift(r) for r in rows]
    table = []
    for x in ambient_rows:
        trow = []
        for y in ambient_rows:
            coords = solver.coords(qs.project(a.mul(x, y)))
            trow.append(coords)
        table.append(tuple(trow))
    quotient = SuperAlgebra(
        name or f"{a.name}_mod", f, tuple(parities), tuple(names), 0, tuple(table)
    )
    rep = quotient.validate()
    if not rep.ok:
        raise ConstructionError(f"quotient algebra invalid: {rep.witnesses()[0]}")
    projection = tuple(
        solver.coords(qs.project(a.basis_vector(i))) for i in range(a.dim)
    )
    return IdealQuotient(ideal, quotient, projection, False)


def _rebase_unital(name, f, ambient_dim, rows, parities, names, mul_amb, unit_amb):
    """Structure constants in a chosen basis whose first vector is the unit."""
    solver = BasisSolver(rows, ambient_dim, f)
    if solver.coords(unit_amb) != tuple(1 if i == 0 else 0 for i in range(len(rows))):
        raise ConstructionError("basis does not start with the unit")
    table = []
    for x in rows:
        trow = []
        for y in rows:
            coords = solver.coords(mul_amb(x, y))
            if coords is None:
                raise ConstructionError("product left the span of the basis")
            trow.append(coords)
        table.append(tuple(trow))
    alg = SuperAlgebra(name, f, tuple(parities), tuple(names), 0, tuple(table))
    rep = alg.validate()
    if not rep.ok:
        raise ConstructionError(f"composite algebra invalid: {rep.witnesses()[0]}")
    return alg


def direct_product(a: SuperAlgebra, b: SuperAlgebra) -> SuperAlgebra:
    """A x B with componentwise product; basis rebased so (1,1) is basis 0."""
    if a.field != b.field:
        raise PreconditionError("direct product needs a common field")
    f = a.field
    da, db = a.dim, b.dim

    def emb_a(vec):
        return tuple(vec) + (0,) * db

    def emb_b(vec):
        return (0,) * da + tuple(vec)

    def mul_amb(x, y):
        xa, xb = x[:da], x[da:]
        ya, yb = y[:da], y[da:]
        return a.mul(xa, ya) + b.mul(xb, yb)

    unit_amb = tuple(
        v + w for v, w in zip(emb_a(a.unit_vector()), emb_b(b.unit_vector()))
    )
    rows = [unit_amb]
    parities = [0]
    names = ["one"]
    for i in range(da):
        if i == a.unit:
            continue
        rows.append(emb_a(a.basis_vector(i)))
        parities.append(a.parity[i])
        names.append(f"a_{a.basis_names[i]}")
    for j in range(db):
        rows.append(emb_b(b.basis_vector(j)))
        parities.append(b.parity[j])
        names.append(f"b_{b.basis_names[j]}")
    return _rebase_unital(
        f"prod_{a.name}_{b.name}", f, da + db, rows, parities, names, mul_amb, unit_amb
    )


def super_tensor(a: SuperAlgebra, b: SuperAlgebra) -> SuperAlgebra:
    """A (x) B with the Koszul sign: (x(x)y)(x'(x)y') = (-1)^{|y||x'|} xx'(x)yy'."""
    if a.field != b.field:
        raise PreconditionError("tensor product needs a common field")
    f = a.field
    da, db = a.dim, b.dim
    dim = da * db
    parities = [(a.parity[i] + b.parity[j]) % 2 for i in range(da) for j in range(db)]
    names = [f"{a.basis_names[i]}_{b.basis_names[j]}" for i in range(da) for j in range(db)]
    table = []
    for i in range(da):
        for j in range(db):
            trow = []
            for k in range(da):
                sign = -1 if b.parity[j] and a.parity[k] else 1
                left = a.table[i][k]
                for l in range(db):
                    right = b.table[j][l]
                    cell = [0] * dim
                    for u, cu in enumerate(left):
                        if f.is_zero(cu):
                            continue
                        for v, cv in enumerate(right):
                            if f.is_zero(cv):
                                continue
                            cell[u * db + v] = f.normalize(sign * cu * cv)
                    trow.append(tuple(cell))
            table.append(tuple(trow))
    alg = SuperAlgebra(
        f"tensor_{a.name}_{b.name}",
        f,
        tuple(parities),
        tuple(names),
        a.unit * db + b.unit,
        tuple(table),
    )
    rep = alg.validate()
    if not rep.ok:
        raise ConstructionError(f"tensor algebra invalid: {rep.witnesses()[0]}")
    return alg


def compose(a: SuperAlgebra, b: SuperAlgebra, kind: str) -> SuperAlgebra:
    if kind == "direct_product":
        return direct_product(a, b)
    if kind == "super_tensor":
        return super_tensor(a, b)
    raise InputError(f"unknown composition kind: {kind!r}")


# builtin constructors


def _alg_field(f):
    return SuperAlgebra("field", f, (0,), ("one",), 0, (((1,),),))


def _alg_trunc(f, n, name):
    # K[x]/x^n, all even
    if n < 1:
        raise InputError("trunc needs n >= 1")
    dim = n
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            cell = [0] * dim
            if i + j < dim:
                cell[i + j] = 1
            row.append(tuple(cell))
        table.append(tuple(row))
    names = ["one"] + ["x" if k == 1 else f"x{k}" for k in range(1, dim)]
    return SuperAlgebra(name, f, (0,) * dim, tuple(names), 0, tuple(table))


def _grassmann_sign(s_mask: int, t_mask: int) -> int:
    # (-1)^{#{(s,t) : s in S, t in T, s > t}}
    inv = 0
    s = s_mask
    while s:
        bit = s & (-s)
        inv += bin(t_mask & (bit - 1)).count("1")
        s ^= bit
    return -1 if inv % 2 else 1


def _alg_grassmann(f, k, name):
    if k > 4:
        raise InputError("grassmann(k) supported for k <= 4")
    dim = 1 << k
    names = []
    for mask in range(dim):
        if mask == 0:
            names.append("one")
        else:
            names.append("t" + "".join(str(b + 1) for b in range(k) if mask >> b & 1))
    parity = tuple(bin(mask).count("1") % 2 for mask in range(dim))
    table = []
    for s in range(dim):
        row = []
        for t in range(dim):
            cell = [0] * dim
            if not s & t:
                cell[s | t] = _grassmann_sign(s, t)
            row.append(tuple(cell))
        table.append(tuple(row))
    return SuperAlgebra(name, f, parity, tuple(names), 0, tuple(table))


def _alg_mat(f, p, q, name):
    """Full matrix superalgebra M_{p|q}; identity rebased to basis element 0.

    Basis: one = sum of E_ii, then the matrix units except E_11 (recovered as
    one minus the other diagonal units). Parity of E_ij is |i|+|j|.
    """
    r = p + q
    if r < 1:
        raise InputError("mat needs at least one row")
    dim = r * r
    par = lambda i: 1 if i >= p else 0

    def mul_amb(x, y):
        z = [0] * dim
        for i in range(r):
            for j in range(r):
                v = x[i * r + j]
                if f.is_zero(v):
                    continue
                for l in range(r):
                    w = y[j * r + l]
                    if not f.is_zero(w):
                        z[i * r + l] += v * w
        return tuple(f.normalize(v) for v in z)

    unit_amb = tuple(1 if i % (r + 1) == 0 else 0 for i in range(dim))
    rows = [unit_amb]
    parities = [0]
    names = ["one"]
    for i in range(r):
        for j in range(r):
            if i == 0 and j == 0:
                continue
            vec = [0] * dim
            vec[i * r + j] = 1
            rows.append(tuple(vec))
            parities.append((par(i) + par(j)) % 2)
            names.append(f"E{i + 1}{j + 1}")
    return _rebase_unital(name, f, dim, rows, parities, names, mul_amb, unit_amb)


def _alg_group_z(f, n, name):
    if n < 1:
        raise InputError("group_z needs n >= 1")
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            cell = [0] * n
            cell[(i + j) % n] = 1
            row.append(tuple(cell))
        table.append(tuple(row))
    names = tuple(f"g{i}" for i in range(n))
    return SuperAlgebra(name, f, (0,) * n, names, 0, tuple(table))


_BUILTIN_RE = re.compile(
    r"^(field|dual|trunc|grassmann|mat|group_z)"
    r"(?:\((\d+)(?:\|(\d+))?\)|(\d+)(?:_(\d+))?)?$"
)


def builtin(name: str, field: Field = QQ) -> SuperAlgebra:
    """Builtin algebra by name; accepts trunc(3)/trunc3, mat(1|1)/mat1_1, etc."""
    m = _BUILTIN_RE.match(name.strip())
    if not m:
        raise InputError(f"unknown builtin algebra: {name!r}")
    kind = m.group(1)
    first = m.group(2) or m.group(4)
    second = m.group(3) or m.group(5)
    first = int(first) if first is not None else None
    second = int(second) if second is not None else None
    if kind == "field":
        if first is not None:
            raise InputError(f"unknown builtin algebra: {name!r}")
        return _alg_field(field)
    if kind == "dual":
        if first is not None:
            raise InputError(f"unknown builtin algebra: {name!r}")
        return _alg_trunc(field, 2, "dual")
    if first is None:
        raise InputError(f"builtin {kind} needs a size, e.g. {kind}(3)")
    if kind == "trunc":
        if second is not None:
            raise InputError(f"unknown builtin algebra: {name!r}")
        return _alg_trunc(field, first, f"trunc{first}")
    if kind == "grassmann":
        if second is not None:
            raise InputError(f"unknown builtin algebra: {name!r}")
        return _alg_grassmann(field, first, f"grassmann{first}")
    if kind == "mat":
        if second is None:
            return _alg_mat(field, first, 0, f"mat{first}")
        return _alg_mat(field, first, second, f"mat{first}_{second}")
    if kind == "group_z":
        if second is not None:
            raise InputError(f"unknown builtin algebra: {name!r}")
        return _alg_group_z(field, first, f"group_z{first}")
    raise InputError(f"unknown builtin algebra: {name!r}")


CORPUS_NAMES = (
    "field",
    "dual",
    "trunc3",
    "grassmann1",
    "grassmann2",
    "mat2",
    "mat1_1",
    "group_z3",
)


def corpus(field: Field = QQ):
    return [builtin(n, field) for n in CORPUS_NAMES]
