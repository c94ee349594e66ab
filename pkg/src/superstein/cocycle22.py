"""The cocycle central extension st_{2|2}(A)^# = st_{2|2}(A) + W.

W is two copies of the super-abelianization A_0 = A/<[A,A]>, one per
identification class of index tuples

  P1 = {(3,1,4,2), (3,2,4,1), (4,1,3,2), (4,2,3,1)}
  P2 = {(1,3,2,4), (1,4,2,3), (2,3,1,4), (2,4,1,3)}

with eps_ijkl = eps_ilkj = eps_kjil = eps_klij inside each class. The cocycle

  psi(F_ij(a), F_kl(b)) = (-1)^{j+k+|b|} eps_ijkl(class of ab),  (i,j,k,l) in P1 u P2

(the exponent mixes the integer indices j, k with the parity of b) vanishes on
every other pair of summands. Skew symmetry and the Jacobi-type identity

  J(x,y,z) = (-1)^{|x||z|} psi([x,y], z) + (-1)^{|x||y|} psi([y,z], x)
             + (-1)^{|y||z|} psi([z,x], y) = 0

are certified exhaustively on basis elements; the bracket
[(x,c), (y,c')] = ([x,y], psi(x,y)) then makes st^# a Lie superalgebra with W
central, re-checked by the generic structure suite on the assembled table.
"""

from dataclasses import dataclass

from .errors import ConstructionError, PreconditionError
from .liesuper import FinLieSuper, check_structure
from .matrices import MatrixShape
from .steinberg import StModel, _sgn, build_model
from .superalgebra import IdealQuotient, SuperAlgebra, graded_ideal_quotient

P1 = ((3, 1, 4, 2), (3, 2, 4, 1), (4, 1, 3, 2), (4, 2, 3, 1))
P2 = ((1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3))


@dataclass
class CocycleTarget:
    """W = A_0-block for P1 plus A_0-block for P2, with the eps dispatch table."""

    algebra: SuperAlgebra
    quot: IdealQuotient
    block_of: dict  # index tuple -> block 0 or 1, all eight tuples

    @property
    def a0(self):
        return self.quot.quotient

    @property
    def a0_dim(self) -> int:
        return self.a0.dim if self.a0 is not None else 0

    @property
    def dim(self) -> int:
        return 2 * self.a0_dim

    @property
    def parity(self):
        if self.a0 is None:
            return ()
        return tuple(self.a0.parity) * 2

    def eps(self, idx4, avec):
        """W coordinates of eps_{idx4}(class of avec); {} off P1 u P2."""
        block = self.block_of.get(tuple(idx4))
        if block is None or self.a0 is None:
            return {}
        f = self.algebra.field
        cls = self.quot.project(avec)
        off = block * self.a0_dim
        return {off + c: v for c, v in enumerate(cls) if not f.is_zero(v)}


def build_W(a: SuperAlgebra) -> CocycleTarget:
    """Two copies of the super-abelianization, certified supercommutative."""
    gens = [a.commutator(i, j) for i in range(a.dim) for j in range(i, a.dim)]
    quot = graded_ideal_quotient(a, gens, name=f"{a.name}_ab")
    a0 = quot.quotient
    if a0 is not None:
        for i in range(a0.dim):
            for j in range(a0.dim):
                if any(not a0.field.is_zero(v) for v in a0.commutator(i, j)):
                    raise ConstructionError(
                        f"abelianization of {a.name} kept a nonzero supercommutator"
                    )
    block_of = {t: 0 for t in P1}
    block_of.update({t: 1 for t in P2})
    return CocycleTarget(a, quot, block_of)


class Psi:
    """The bilinear cocycle on the Steinberg model for shape 2|2.

    drop_argument_parity omits |b| from the sign exponent; the mutated map is
    not a cocycle and exists so tests can watch the verifier catch it.
    """

    def __init__(self, model: StModel, target: CocycleTarget, drop_argument_parity: bool = False):
        if (model.shape.m, model.shape.n) != (2, 2):
            raise PreconditionError("the cocycle is defined for shape 2|2 only")
        self.model = model
        self.target = target
        self.drop_argument_parity = drop_argument_parity

    def on_atoms(self, x_idx: int, y_idx: int) -> dict:
        m = self.model
        dx, dy = m.desc[x_idx], m.desc[y_idx]
        if dx[0] != "F" or dy[0] != "F":
            return {}
        i, j, s = dx[1], dx[2], dx[3]
        k, l, t = dy[1], dy[2], dy[3]
        if (i, j, k, l) not in self.target.block_of:
            return {}
        al = m.algebra
        ab = al.mul(al.basis_vector(s), al.basis_vector(t))
        e = j + k
        if not self.drop_argument_parity:
            e += al.parity[t]
        w = self.target.eps((i, j, k, l), ab)
        return {c: _sgn(e) * v for c, v in w.items()}

    def on_vec_atom(self, xvec: dict, y_idx: int) -> dict:
        f = self.model.algebra.field
        acc = {}
        for x_idx, v in xvec.items():
            for c, w in self.on_atoms(x_idx, y_idx).items():
                acc[c] = acc.get(c, 0) + v * w
        return {c: f.normalize(v) for c, v in acc.items() if not f.is_zero(v)}


@dataclass
class CocycleVerdict:
    w_dim: int
    degree_ok: bool
    skew_ok: bool
    jacobi_ok: bool
    witnesses: list

    @property
    def ok(self):
        return self.degree_ok and self.skew_ok and self.jacobi_ok


def verify_cocycle(a: SuperAlgebra, model: StModel = None, psi: Psi = None, max_witnesses: int = 5) -> CocycleVerdict:
    """Degree-0, skew, and J = 0 checks on all basis pairs and sorted triples."""
    if model is None:
        model = build_model(a, MatrixShape(2, 2), verify=False)
    if psi is None:
        psi = Psi(model, build_W(a))
    f = a.field
    par = model.parity
    wpar = psi.target.parity
    witnesses = []
    degree_ok = True
    skew_ok = True
    for x in range(model.dim):
        for y in range(x, model.dim):
            v_xy = psi.on_atoms(x, y)
            want = (par[x] + par[y]) % 2
            if any(wpar[c] != want for c in v_xy):
                degree_ok = False
                if len(witnesses) < max_witnesses:
                    witnesses.append(("degree", model.names[x], model.names[y]))
            v_yx = psi.on_atoms(y, x)
            acc = dict(v_xy)
            sign = _sgn(par[x] * par[y])
            for c, v in v_yx.items():
                acc[c] = acc.get(c, 0) + sign * v
            if any(not f.is_zero(v) for v in acc.values()):
                skew_ok = False
                if len(witnesses) < max_witnesses:
                    witnesses.append(("skew", model.names[x], model.names[y]))
    jacobi_ok = True
    for x in range(model.dim):
        for y in range(x, model.dim):
            for z in range(y, model.dim):
                acc = {}
                for (u, v, w2) in ((x, y, z), (y, z, x), (z, x, y)):
                    sign = _sgn(par[u] * par[w2])
                    term = psi.on_vec_atom(dict(model.table[u][v]), w2)
                    for c, val in term.items():
                        acc[c] = acc.get(c, 0) + sign * val
                if any(not f.is_zero(v) for v in acc.values()):
                    jacobi_ok = False
                    if len(witnesses) < max_witnesses:
                        witnesses.append(
                            ("jacobi", model.names[x], model.names[y], model.names[z])
                        )
    return CocycleVerdict(psi.target.dim, degree_ok, skew_ok, jacobi_ok, witnesses)


@dataclass
class StSharp:
    model: StModel
    target: CocycleTarget
    psi: Psi
    verdict: CocycleVerdict
    fin_lie: FinLieSuper

    @property
    def dim(self) -> int:
        return self.fin_lie.dim

    @property
    def w_offset(self) -> int:
        return self.model.dim


def build_st_sharp(a: SuperAlgebra, shape: MatrixShape = None, verify: bool = True, threads=None) -> StSharp:
    """Assemble st_{2|2}(A) + W with bracket [(x,c),(y,c')] = ([x,y], psi(x,y))."""
    if shape is None:
        shape = MatrixShape(2, 2)
    if (shape.m, shape.n) != (2, 2):
        raise PreconditionError("the cocycle extension exists for shape 2|2 only")
    model = build_model(a, shape, verify=verify, threads=threads)
    target = build_W(a)
    psi = Psi(model, target)
    verdict = verify_cocycle(a, model=model, psi=psi)
    if not verdict.ok:
        raise ConstructionError(
            f"cocycle fails for {a.name}: {verdict.witnesses[:1]}"
        )
    n0 = model.dim
    dim = n0 + target.dim
    parity = tuple(model.parity) + target.parity
    names = tuple(model.names) + tuple(
        f"w{b}_{target.a0.basis_names[c]}"
        for b in range(2)
        for c in range(target.a0_dim)
    )
    table = []
    for x in range(dim):
        row = []
        for y in range(dim):
            if x < n0 and y < n0:
                cell = dict(model.table[x][y])
                for c, v in psi.on_atoms(x, y).items():
                    cell[n0 + c] = v
                row.append(tuple(sorted(cell.items())))
            else:
                row.append(())
        table.append(tuple(row))
    L = FinLieSuper(f"st_sharp_2|2({a.name})", a.field, parity, table, names)
    if verify:
        rep = check_structure(L, threads=threads)
        if not rep.ok:
            raise ConstructionError(f"{L.label}: {rep.first_witness()}")
    return StSharp(model, target, psi, verdict, L)
