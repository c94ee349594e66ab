"""gl_{m|n}(A) with its superbracket and modified supertrace; sl by two routes.

Coordinates of gl are E_ij(e_t), cell-major, i, j 1-based with |i| = 0 for
i <= m and 1 otherwise. The bracket on matrix units over homogeneous a, b:

    [E_ij(a), E_kl(b)] = d_jk E_il(ab) - (-1)^{(|i|+|j|+|a|)(|k|+|l|+|b|)} d_li E_kj(ba)

and the modified supertrace str(E_ij(a)) = d_ij (-1)^{|i|(|i|+|a|)} a, whose
twist makes str of every bracket land in [A, A].
"""

from dataclasses import dataclass

from .errors import ConstructionError, InputError, PreconditionError
from .fields import Field
from .linalg import BasisSolver, Echelon, QuotientSpace, SubspaceBasis, reduce, to_sparse
from .liesuper import FinLieSuper, verify_or_raise
from .superalgebra import SuperAlgebra, supercommutator_span


@dataclass(frozen=True)
class MatrixShape:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise InputError(f"bad matrix shape {self.m}|{self.n}")

    @property
    def size(self) -> int:
        return self.m + self.n

    def index_parity(self, i: int) -> int:
        """|i| for 1-based row/column index."""
        if not 1 <= i <= self.size:
            raise InputError(f"index {i} outside 1..{self.size}")
        return 0 if i <= self.m else 1

    def swap(self) -> "MatrixShape":
        return MatrixShape(self.n, self.m)

    @staticmethod
    def parse(text: str) -> "MatrixShape":
        text = text.strip()
        for sep in ("|", "x"):
            if sep in text:
                parts = text.split(sep)
                if len(parts) == 2:
                    try:
                        return MatrixShape(int(parts[0]), int(parts[1]))
                    except ValueError:
                        break
        raise InputError(f"bad shape {text!r}; expected m|n or mxn")

    def __str__(self):
        return f"{self.m}|{self.n}"


class GlModel:
    """Structure of gl_{m|n}(A) on coordinates E_ij(e_t)."""

    def __init__(self, algebra: SuperAlgebra, shape: MatrixShape):
        self.algebra = algebra
        self.shape = shape
        self.dA = algebra.dim
        self.N = shape.size
        self.dim = self.N * self.N * self.dA
        par = []
        for i in range(1, self.N + 1):
            for j in range(1, self.N + 1):
                pij = (shape.index_parity(i) + shape.index_parity(j)) % 2
                for t in range(self.dA):
                    par.append((pij + algebra.parity[t]) % 2)
        self.parity = tuple(par)

    def index(self, i: int, j: int, t: int) -> int:
        return ((i - 1) * self.N + (j - 1)) * self.dA + t

    def decode(self, idx: int):
        t = idx % self.dA
        cell = idx // self.dA
        return cell // self.N + 1, cell % self.N + 1, t

    def unit_bracket(self, p: int, q: int) -> dict:
        """[E_ij(e_s), E_kl(e_t)] for coordinate indices p, q."""
        i, j, s = self.decode(p)
        k, l, t = self.decode(q)
        f = self.algebra.field
        acc = {}
        if j == k:
            for u, c in enumerate(self.algebra.table[s][t]):
                if not f.is_zero(c):
                    col = self.index(i, l, u)
                    acc[col] = acc.get(col, 0) + c
        if l == i:
            sign = -1 if self.parity[p] and self.parity[q] else 1
            for u, c in enumerate(self.algebra.table[t][s]):
                if not f.is_zero(c):
                    col = self.index(k, j, u)
                    acc[col] = acc.get(col, 0) - sign * c
        return {c: f.normalize(v) for c, v in acc.items() if not f.is_zero(v)}

    def bracket_sparse(self, x: dict, y: dict) -> dict:
        f = self.algebra.field
        acc = {}
        for p, v in x.items():
            for q, w in y.items():
                vw = v * w
                for c, u in self.unit_bracket(p, q).items():
                    acc[c] = acc.get(c, 0) + vw * u
        return {c: f.normalize(v) for c, v in acc.items() if not f.is_zero(v)}

    def supertrace(self, x: dict):
        """Dense A coordinates of str(x)."""
        f = self.algebra.field
        acc = [0] * self.dA
        for p, v in x.items():
            i, j, t = self.decode(p)
            if i != j:
                continue
            ip = self.shape.index_parity(i)
            sign = -1 if ip and (ip + self.algebra.parity[t]) % 2 else 1
            acc[t] += sign * v
        return tuple(f.normalize(v) for v in acc)

    def to_fin_lie(self, label=None, verify: bool = True, threads=None) -> FinLieSuper:
        label = label or f"gl_{self.shape}({self.algebra.name})"
        names = []
        for i in range(1, self.N + 1):
            for j in range(1, self.N + 1):
                for t in range(self.dA):
                    names.append(f"E{i}{j}_{self.algebra.basis_names[t]}")
        table = []
        for p in range(self.dim):
            row = []
            for q in range(self.dim):
                row.append(tuple(self.unit_bracket(p, q).items()))
            table.append(tuple(row))
        L = FinLieSuper(label, self.algebra.field, self.parity, table, tuple(names))
        if verify:
            verify_or_raise(L, threads=threads)
        return L


@dataclass
class SlReport:
    """The two sl_{m|n}(A) routes and their comparison."""

    algebra: str
    shape: MatrixShape
    gl_dim: int
    derived_space: SubspaceBasis
    trace_space: SubspaceBasis
    contained: bool  # derived inside the supertrace-criterion space
    equal: bool
    asserted: bool  # equality is a theorem only for m >= 1
    perfect: bool

    @property
    def sl_dim(self) -> int:
        return self.derived_space.dim


def sl_space(a: SuperAlgebra, shape: MatrixShape) -> SlReport:
    """Derived subalgebra of gl vs {X : str(X) in [A,A]}; perfectness of sl."""
    if shape.size < 3:
        raise PreconditionError("sl needs m+n >= 3")
    gl = GlModel(a, shape)
    f = a.field
    ech = Echelon(gl.dim, f)
    for p in range(gl.dim):
        for q in range(p, gl.dim):
            b = gl.unit_bracket(p, q)
            if b:
                ech.insert(b)
    derived = SubspaceBasis(f, gl.dim, ech.rref_rows())
    comm = supercommutator_span(a).space
    coker = QuotientSpace(a.dim, comm, f)
    proj = [coker.project(a.basis_vector(t)) for t in range(a.dim)]
    rows = [[0] * gl.dim for _ in range(coker.dim)]
    for i in range(1, gl.N + 1):
        ip = shape.index_parity(i)
        for t in range(gl.dA):
            sign = -1 if ip and (ip + a.parity[t]) % 2 else 1
            col = gl.index(i, i, t)
            for r in range(coker.dim):
                v = proj[t][r]
                if not f.is_zero(v):
                    rows[r][col] = f.normalize(sign * v)
    trace_space = reduce(rows, width=gl.dim, field=f).kernel if coker.dim else SubspaceBasis.full(gl.dim, f)
    contained = trace_space.contains(derived)
    equal = derived == trace_space
    # perfectness of sl := derived: rank of brackets of its basis pairs
    target = derived.dim
    sl_rows = [to_sparse(v, f) for v in derived.vectors]
    ech2 = Echelon(gl.dim, f)
    done = False
    for x in sl_rows:
        if done:
            break
        for y in sl_rows:
            b = gl.bracket_sparse(x, y)
            if b:
                ech2.insert(b)
            if ech2.rank == target:
                done = True
                break
    perfect = ech2.rank == target
    return SlReport(
        a.name, shape, gl.dim, derived, trace_space, contained, equal, shape.m >= 1, perfect
    )


def _graded_rows_parity(rows, parity):
    """Parity of each homogeneous row; ConstructionError on a mixed row."""
    out = []
    for r in rows:
        ps = {parity[c] for c, v in enumerate(r) if v}
        if len(ps) > 1:
            raise ConstructionError("subspace basis row is not parity homogeneous")
        out.append(ps.pop() if ps else 0)
    return out


def concretize(source: str, a: SuperAlgebra, shape: MatrixShape, verify: bool = True, threads=None) -> FinLieSuper:
    """Structure-constant form of gl / sl / st / st_sharp over (a, shape)."""
    if source == "gl":
        return GlModel(a, shape).to_fin_lie(verify=verify, threads=threads)
    if source == "sl":
        rep = sl_space(a, shape)
        gl = GlModel(a, shape)
        rows = rep.derived_space.vectors
        parities = _graded_rows_parity(rows, gl.parity)
        solver = BasisSolver(rows, gl.dim, a.field)
        sparse_rows = [to_sparse(r, a.field) for r in rows]
        table = []
        for x in sparse_rows:
            trow = []
            for y in sparse_rows:
                coords = solver.coords(gl.bracket_sparse(x, y))
                if coords is None:
                    raise ConstructionError("sl bracket left the derived subspace")
                trow.append(tuple((k, c) for k, c in enumerate(coords) if not a.field.is_zero(c)))
            table.append(tuple(trow))
        L = FinLieSuper(
            f"sl_{shape}({a.name})", a.field, tuple(parities), tuple(table)
        )
        if verify:
            verify_or_raise(L, threads=threads)
        return L
    if source == "st":
        from .steinberg import build_model

        model = build_model(a, shape, verify=verify, threads=threads)
        return model.to_fin_lie(verify=False)
    if source == "st_sharp":
        from .cocycle22 import build_st_sharp

        sharp = build_st_sharp(a, shape, verify=verify, threads=threads)
        return sharp.fin_lie
    raise InputError(f"unknown concretize source {source!r}")
