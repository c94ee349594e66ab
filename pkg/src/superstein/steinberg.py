"""The Steinberg Lie superalgebra st_{m|n}(A) as a concrete coordinate model.

Coordinates split into three segments:

  F-part: F_ij(e_t) for the (m+n)(m+n-1) off-diagonal cells, deg |i|+|j|+|t|;
  h-part: the pairing module <<A,A>>, one coordinate per quotient basis class,
          carrying h(a,b) with h(a,b) depending only on <<a,b>>;
  D-part: D_j(e_t) := H_{1j}(1, e_t) for j = 2..m+n, deg |t|.

Writing H_ij(a,b) := [F_ij(a), F_ji(b)], every H element reduces to the h/D
segments by the normalization

  H_1j(a,b) = h(a,b) + (-1)^{|a||b|} D_j(ba)
  H_i1(a,b) = -(-1)^{(|i|+|a|)(|i|+|b|)} H_1i(b,a)
  H_ij(a,b) = H_i1(a,b) - (-1)^{(|i|+|j|+|a|)(|i|+|j|+|b|)} H_j1(ba,1),  1 not in {i,j}

and brackets [H_ij(a,b), F_kl(c)] follow the seven-case table derived from

  [H_ij(a,b), F_ik(c)] = F_ik(abc)
  [H_ij(a,b), F_ki(c)] = -(-1)^{(|a|+|b|)(|i|+|k|+|c|)} F_ki(cab)
  [H_ij(a,b), F_ij(c)] = F_ij(abc + (-1)^{|i|+|j|+|a||b|+|b||c|+|c||a|} cba)

together with the flip H_ij(a,b) = -(-1)^{(|i|+|j|+|a|)(|i|+|j|+|b|)} H_ji(b,a).
Brackets against the h/D segments use the super Jacobi expansion

  [X, H_ij(a,b)] = [[X, F_ij(a)], F_ji(b)] + (-1)^{|X|(|i|+|j|+|a|)} [F_ij(a), [X, F_ji(b)]]

so the assembled table is certified afterwards by exhaustive skew, Jacobi,
relation, and homomorphism checks rather than trusted by construction.

Shapes with m = 0 are built through the parity swap (0|n) -> (n|0), which is an
isomorphism on generators since only |i|+|j| enters the relations.
"""

from dataclasses import dataclass

from .cyclic import PairingModule, pairing_module
from .errors import ConstructionError, InputError, PreconditionError
from .liesuper import FinLieSuper, check_structure
from .linalg import SubspaceBasis, reduce, to_sparse
from .matrices import GlModel, MatrixShape
from .superalgebra import SuperAlgebra


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


class StModel:
    def __init__(self, algebra: SuperAlgebra, shape: MatrixShape, jstar: int, swapped: bool, pairing: PairingModule):
        self.algebra = algebra
        self.shape = shape
        self.jstar = jstar
        self.swapped = swapped
        self.pairing = pairing
        N = shape.size
        dA = algebra.dim
        self.N = N
        self.dA = dA
        self.cells = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i != j]
        self.cell_pos = {c: k for k, c in enumerate(self.cells)}
        self.f_count = len(self.cells) * dA
        self.h_count = pairing.dim
        self.d_count = (N - 1) * dA
        self.dim = self.f_count + self.h_count + self.d_count
        par = []
        names = []
        for i, j in self.cells:
            pij = (shape.index_parity(i) + shape.index_parity(j)) % 2
            for t in range(dA):
                par.append((pij + algebra.parity[t]) % 2)
                names.append(f"F{i}{j}_{algebra.basis_names[t]}")
        for k in range(self.h_count):
            par.append(pairing.coordinate_parity(k))
            names.append(f"h{k}")
        for j in range(2, N + 1):
            for t in range(dA):
                par.append(algebra.parity[t])
                names.append(f"D{j}_{algebra.basis_names[t]}")
        self.parity = tuple(par)
        self.names = tuple(names)
        self.desc = []
        for i, j in self.cells:
            for t in range(dA):
                self.desc.append(("F", i, j, t))
        for k in range(self.h_count):
            self.desc.append(("h", k))
        for j in range(2, N + 1):
            for t in range(dA):
                self.desc.append(("D", j, t))
        self.table = None  # filled by build_model

    # layout

    def f_index(self, i: int, j: int, t: int) -> int:
        return self.cell_pos[(i, j)] * self.dA + t

    def h_index(self, k: int) -> int:
        return self.f_count + k

    def d_index(self, j: int, t: int) -> int:
        return self.f_count + self.h_count + (j - 2) * self.dA + t

    def ipar(self, i: int) -> int:
        return self.shape.index_parity(i)

    def _merge(self, acc: dict, term: dict, coeff=1):
        for c, v in term.items():
            acc[c] = acc.get(c, 0) + coeff * v

    def _clean(self, acc: dict) -> dict:
        f = self.algebra.field
        return {c: f.normalize(v) for c, v in acc.items() if not f.is_zero(v)}

    def f_vec(self, i: int, j: int, avec) -> dict:
        f = self.algebra.field
        return {
            self.f_index(i, j, t): v
            for t, v in enumerate(avec)
            if not f.is_zero(v)
        }

    def d_vec(self, j: int, avec, coeff=1) -> dict:
        f = self.algebra.field
        return {
            self.d_index(j, t): coeff * v
            for t, v in enumerate(avec)
            if not f.is_zero(v)
        }

    def h_vec(self, qvec, coeff=1) -> dict:
        f = self.algebra.field
        return {
            self.h_index(k): coeff * v for k, v in enumerate(qvec) if not f.is_zero(v)
        }

    def _hom_parity(self, vec) -> int:
        p = self.algebra.vector_parity(vec)
        if p is None:
            raise PreconditionError("slot vector must be parity homogeneous")
        return p

    # H normalization into the h/D segments

    def normalize_H(self, i: int, j: int, a_vec, b_vec) -> dict:
        """Canonical h/D coordinates of H_ij(a,b) = [F_ij(a), F_ji(b)]."""
        if i == j:
            raise InputError("H_ij needs i != j")
        al = self.algebra
        pa = self._hom_parity(a_vec)
        pb = self._hom_parity(b_vec)
        if i == 1:
            acc = dict(self.h_vec(self.pairing.pair_class(a_vec, b_vec)))
            ba = al.mul(b_vec, a_vec)
            self._merge(acc, self.d_vec(j, ba, _sgn(pa * pb)))
            return self._clean(acc)
        pi, pj = self.ipar(i), self.ipar(j)
        if j == 1:
            s = (pi + pj + pa) * (pi + pj + pb)
            inner = self.normalize_H(1, i, b_vec, a_vec)
            return self._clean({c: -_sgn(s) * v for c, v in inner.items()})
        e = (pi + pj + pa) * (pi + pj + pb)
        acc = dict(self.normalize_H(i, 1, a_vec, b_vec))
        ba = al.mul(b_vec, a_vec)
        self._merge(acc, self.normalize_H(j, 1, ba, al.unit_vector()), -_sgn(e))
        return self._clean(acc)

    # bracket primitives

    def bracket_F_F(self, i, j, s, k, l, t) -> dict:
        """[F_ij(e_s), F_kl(e_t)] on basis atoms."""
        al = self.algebra
        if j == k and i == l:
            return self.normalize_H(i, j, al.basis_vector(s), al.basis_vector(t))
        if j == k:
            return self.f_vec(i, l, al.table[s][t])
        if i == l:
            d1 = (self.ipar(i) + self.ipar(j) + al.parity[s]) % 2
            d2 = (self.ipar(k) + self.ipar(l) + al.parity[t]) % 2
            coeff = -_sgn(d1 * d2)
            return self._clean(
                {c: coeff * v for c, v in self.f_vec(k, j, al.table[t][s]).items()}
            )
        return {}

    def bracket_H_F(self, i, j, a_vec, b_vec, k, l, c_vec) -> dict:
        """[H_ij(a,b), F_kl(c)]; output lies in the F segment."""
        al = self.algebra
        if k not in (i, j) and l not in (i, j):
            return {}
        pa = self._hom_parity(a_vec)
        pb = self._hom_parity(b_vec)
        pc = self._hom_parity(c_vec)
        pi, pj = self.ipar(i), self.ipar(j)
        sflip = (pi + pj + pa) * (pi + pj + pb)
        if k == i and l == j:
            abc = al.mul(al.mul(a_vec, b_vec), c_vec)
            cba = al.mul(c_vec, al.mul(b_vec, a_vec))
            e = pi + pj + pa * pb + pb * pc + pc * pa
            arg = tuple(x + _sgn(e) * y for x, y in zip(abc, cba))
            return self._clean(self.f_vec(i, j, arg))
        if k == j and l == i:
            bac = al.mul(al.mul(b_vec, a_vec), c_vec)
            cab = al.mul(c_vec, al.mul(a_vec, b_vec))
            e = pi + pj + pb * pa + pa * pc + pc * pb
            arg = tuple(x + _sgn(e) * y for x, y in zip(bac, cab))
            coeff = -_sgn(sflip)
            return self._clean({c: coeff * v for c, v in self.f_vec(j, i, arg).items()})
        if k == i:
            abc = al.mul(al.mul(a_vec, b_vec), c_vec)
            return self._clean(self.f_vec(i, l, abc))
        if l == i:
            pk = self.ipar(k)
            cab = al.mul(c_vec, al.mul(a_vec, b_vec))
            coeff = -_sgn((pa + pb) * (pi + pk + pc))
            return self._clean({c: coeff * v for c, v in self.f_vec(k, i, cab).items()})
        if k == j:
            bac = al.mul(al.mul(b_vec, a_vec), c_vec)
            coeff = -_sgn(sflip)
            return self._clean({c: coeff * v for c, v in self.f_vec(j, l, bac).items()})
        # l == j
        pk = self.ipar(k)
        cba = al.mul(c_vec, al.mul(b_vec, a_vec))
        coeff = _sgn(sflip + (pa + pb) * (pj + pk + pc))
        return self._clean({c: coeff * v for c, v in self.f_vec(k, j, cba).items()})

    def _h_slots(self, k_h: int):
        """(e_s, e_t) with h_k the class of <<e_s, e_t>>."""
        col = self.pairing.quot.free_cols[k_h]
        d = self.dA
        return col // d, col % d

    def bracket_h_F(self, k_h, k, l, c_vec) -> dict:
        """[h(e_s,e_t), F_kl(c)] via h(a,b) = H_{1j*}(a,b) - (-1)^{|a||b|} H_{1j*}(1,ba)."""
        al = self.algebra
        s, t = self._h_slots(k_h)
        es, et = al.basis_vector(s), al.basis_vector(t)
        acc = dict(self.bracket_H_F(1, self.jstar, es, et, k, l, c_vec))
        prod = al.mul(et, es)
        sub = self.bracket_H_F(1, self.jstar, al.unit_vector(), prod, k, l, c_vec)
        self._merge(acc, sub, -_sgn(al.parity[s] * al.parity[t]))
        return self._clean(acc)

    def bracket_D_F(self, j, t, k, l, c_vec) -> dict:
        return self.bracket_H_F(
            1, j, self.algebra.unit_vector(), self.algebra.basis_vector(t), k, l, c_vec
        )

    def bracket_atom_F(self, x_idx: int, k, l, c_vec) -> dict:
        """[basis atom x, F_kl(c_vec)] for homogeneous c_vec."""
        al = self.algebra
        f = al.field
        desc = self.desc[x_idx]
        if desc[0] == "F":
            i, j, s = desc[1], desc[2], desc[3]
            acc = {}
            for u, cu in enumerate(c_vec):
                if f.is_zero(cu):
                    continue
                self._merge(acc, self.bracket_F_F(i, j, s, k, l, u), cu)
            return self._clean(acc)
        if desc[0] == "h":
            return self.bracket_h_F(desc[1], k, l, c_vec)
        return self.bracket_D_F(desc[1], desc[2], k, l, c_vec)

    def bracket_vec_F(self, vec: dict, k, l, c_vec) -> dict:
        acc = {}
        for idx, v in vec.items():
            self._merge(acc, self.bracket_atom_F(idx, k, l, c_vec), v)
        return self._clean(acc)

    def bracket_F_vec(self, i, j, a_vec, vec: dict) -> dict:
        """[F_ij(a), vec]; h/D components flipped through super skew."""
        al = self.algebra
        f = al.field
        pa = self._hom_parity(a_vec)
        pF = (self.ipar(i) + self.ipar(j) + pa) % 2
        acc = {}
        for idx, v in vec.items():
            desc = self.desc[idx]
            if desc[0] == "F":
                k, l, t = desc[1], desc[2], desc[3]
                for u, cu in enumerate(a_vec):
                    if f.is_zero(cu):
                        continue
                    self._merge(acc, self.bracket_F_F(i, j, u, k, l, t), cu * v)
            else:
                term = self.bracket_atom_F(idx, i, j, a_vec)
                coeff = -_sgn(pF * self.parity[idx])
                self._merge(acc, term, coeff * v)
        return self._clean(acc)

    def bracket_atom_H(self, x_idx: int, i, j, a_vec, b_vec) -> dict:
        """[X, H_ij(a,b)] = [[X,F_ij(a)],F_ji(b)] + (-1)^{|X|(|i|+|j|+|a|)}[F_ij(a),[X,F_ji(b)]]."""
        pa = self._hom_parity(a_vec)
        pX = self.parity[x_idx]
        t1 = self.bracket_vec_F(self.bracket_atom_F(x_idx, i, j, a_vec), j, i, b_vec)
        inner = self.bracket_atom_F(x_idx, j, i, b_vec)
        t2 = self.bracket_F_vec(i, j, a_vec, inner)
        sign = _sgn(pX * ((self.ipar(i) + self.ipar(j) + pa) % 2))
        acc = dict(t1)
        self._merge(acc, t2, sign)
        return self._clean(acc)

    def bracket_atoms(self, x_idx: int, y_idx: int) -> dict:
        """Table entry [e_x, e_y], assembled without consulting the table."""
        al = self.algebra
        desc = self.desc[y_idx]
        if desc[0] == "F":
            k, l, t = desc[1], desc[2], desc[3]
            return self.bracket_atom_F(x_idx, k, l, al.basis_vector(t))
        if desc[0] == "h":
            s, t = self._h_slots(desc[1])
            es, et = al.basis_vector(s), al.basis_vector(t)
            acc = dict(self.bracket_atom_H(x_idx, 1, self.jstar, es, et))
            prod = al.mul(et, es)
            sub = self.bracket_atom_H(x_idx, 1, self.jstar, al.unit_vector(), prod)
            self._merge(acc, sub, -_sgn(al.parity[s] * al.parity[t]))
            return self._clean(acc)
        j, t = desc[1], desc[2]
        return self.bracket_atom_H(x_idx, 1, j, al.unit_vector(), al.basis_vector(t))

    # table-backed operations

    def bracket_sparse(self, x: dict, y: dict) -> dict:
        f = self.algebra.field
        acc = {}
        for i, v in x.items():
            row = self.table[i]
            for j, w in y.items():
                vw = v * w
                for k, c in row[j]:
                    acc[k] = acc.get(k, 0) + vw * c
        return {k: f.normalize(v) for k, v in acc.items() if not f.is_zero(v)}

    def to_fin_lie(self, label=None, verify: bool = True, threads=None) -> FinLieSuper:
        label = label or f"st_{self.shape}({self.algebra.name})"
        L = FinLieSuper(label, self.algebra.field, self.parity, self.table, self.names)
        if verify:
            from .liesuper import verify_or_raise

            verify_or_raise(L, threads=threads)
        return L

    # the canonical projection onto matrices and the pairing readout

    def phi_atom(self, x_idx: int, gl: GlModel) -> dict:
        """Image of a basis atom under F_ij(a) -> E_ij(a), h -> E_11([a,b]), D_j(c) -> E_11(c) - (-1)^{|j|(|j|+|c|)} E_jj(c)."""
        al = self.algebra
        f = al.field
        desc = self.desc[x_idx]
        if desc[0] == "F":
            i, j, t = desc[1], desc[2], desc[3]
            return {gl.index(i, j, t): 1}
        if desc[0] == "h":
            s, t = self._h_slots(desc[1])
            comm = al.commutator(s, t)
            return {
                gl.index(1, 1, u): v for u, v in enumerate(comm) if not f.is_zero(v)
            }
        j, t = desc[1], desc[2]
        sign = -_sgn(self.ipar(j) * ((self.ipar(j) + al.parity[t]) % 2))
        return {gl.index(1, 1, t): 1, gl.index(j, j, t): sign}

    def phi_columns(self, gl: GlModel):
        return [self.phi_atom(x, gl) for x in range(self.dim)]

    def phi_apply(self, vec: dict, gl: GlModel) -> dict:
        f = self.algebra.field
        acc = {}
        for idx, v in vec.items():
            for c, w in self.phi_atom(idx, gl).items():
                acc[c] = acc.get(c, 0) + v * w
        return {c: f.normalize(v) for c, v in acc.items() if not f.is_zero(v)}

    def nu_apply(self, vec: dict):
        """Pairing-module coordinates of the h segment: the trace-side readout."""
        out = [0] * self.h_count
        for idx, v in vec.items():
            if self.f_count <= idx < self.f_count + self.h_count:
                out[idx - self.f_count] = v
        return tuple(out)


def build_model(a: SuperAlgebra, shape: MatrixShape, expansion_index=None, verify: bool = True, threads=None, max_dim=None) -> StModel:
    """Assemble the bracket table of st over (a, shape) and certify it."""
    if shape.size < 3:
        raise PreconditionError("st needs m+n >= 3")
    swapped = False
    if shape.m == 0:
        shape = shape.swap()
        swapped = True
    pairing = pairing_module(a)
    jstar = 2 if expansion_index is None else expansion_index
    if not 2 <= jstar <= shape.size:
        raise InputError(f"expansion index {jstar} outside 2..{shape.size}")
    model = StModel(a, shape, jstar, swapped, pairing)
    if max_dim is not None and model.dim > max_dim:
        raise ConstructionError(
            f"model dimension {model.dim} exceeds requested cap {max_dim}"
        )
    table = []
    for x in range(model.dim):
        row = []
        for y in range(model.dim):
            row.append(tuple(sorted(model.bracket_atoms(x, y).items())))
        table.append(tuple(row))
    model.table = tuple(table)
    if verify:
        rep = check_structure(model.to_fin_lie(verify=False), threads=threads)
        if not rep.ok:
            raise ConstructionError(f"st_{shape}({a.name}): {rep.first_witness()}")
        rel = check_relations(model)
        if not rel.ok:
            raise ConstructionError(f"st_{shape}({a.name}): {rel.first_witness()}")
    return model


@dataclass
class RelationReport:
    st2: list
    st3: list

    @property
    def ok(self):
        return not (self.st2 or self.st3)

    def first_witness(self):
        if self.st2:
            return f"(st2) fails at {self.st2[0]}"
        if self.st3:
            return f"(st3) fails at {self.st3[0]}"
        return None


def check_relations(model: StModel, max_witnesses: int = 5) -> RelationReport:
    """(st2) and (st3) read off the assembled table; (st1) is structural."""
    al = model.algebra
    N = model.N
    st2_bad = []
    st3_bad = []
    for i, j in model.cells:
        for k, l in model.cells:
            if j == k and i != l:
                for s in range(model.dA):
                    for t in range(model.dA):
                        got = dict(model.table[model.f_index(i, j, s)][model.f_index(k, l, t)])
                        want = model.f_vec(i, l, al.table[s][t])
                        diff = {c: got.get(c, 0) - want.get(c, 0) for c in set(got) | set(want)}
                        if model._clean(diff):
                            if len(st2_bad) < max_witnesses:
                                st2_bad.append((i, j, k, l, s, t))
            if j != k and l != i:
                for s in range(model.dA):
                    for t in range(model.dA):
                        if model.table[model.f_index(i, j, s)][model.f_index(k, l, t)]:
                            if len(st3_bad) < max_witnesses:
                                st3_bad.append((i, j, k, l, s, t))
    return RelationReport(st2_bad, st3_bad)


@dataclass
class KernelReport:
    kernel: SubspaceBasis  # in model coordinates
    hc1_dim: int
    dims_equal: bool
    spans_equal: bool
    central: bool

    @property
    def ok(self):
        return self.dims_equal and self.spans_equal and self.central


def kernel_phi(model: StModel) -> KernelReport:
    """Ker(phi) with its two certificates: equality with mu(HC_1) and centrality."""
    gl = GlModel(model.algebra, model.shape)
    f = model.algebra.field
    cols = model.phi_columns(gl)
    rows = {}
    for x, col in enumerate(cols):
        for c, v in col.items():
            rows.setdefault(c, {})[x] = v
    res = reduce(list(rows.values()), width=model.dim, field=f)
    kernel = res.kernel
    # mu sends a pairing class to the corresponding h-segment vector
    pm = model.pairing
    hc_rows = []
    for i in range(model.algebra.dim):
        hc_rows.append(tuple(pm.commutator_map[k][i] for k in range(pm.dim)))
    hc_kernel = reduce(hc_rows, width=pm.dim, field=f).kernel if pm.dim else SubspaceBasis.zero(0, f)
    mu_vecs = [
        {model.h_index(k): v for k, v in enumerate(vec) if not f.is_zero(v)}
        for vec in hc_kernel.vectors
    ]
    mu_span = SubspaceBasis.from_vectors(mu_vecs, model.dim, f)
    central = True
    for vec in kernel.vectors:
        sv = to_sparse(vec, f)
        for y in range(model.dim):
            if model.bracket_sparse(sv, {y: 1}):
                central = False
                break
        if not central:
            break
    return KernelReport(
        kernel,
        hc_kernel.dim,
        kernel.dim == hc_kernel.dim,
        kernel == mu_span,
        central,
    )


@dataclass
class DiagramReport:
    ok: bool
    witness: tuple


def diagram_check(model: StModel) -> DiagramReport:
    """d o nu = str o phi on every basis atom."""
    gl = GlModel(model.algebra, model.shape)
    for x in range(model.dim):
        lhs = model.pairing.d(model.nu_apply({x: 1}))
        rhs = gl.supertrace(model.phi_apply({x: 1}, gl))
        if lhs != rhs:
            return DiagramReport(False, (model.names[x], lhs, rhs))
    return DiagramReport(True, ())


@dataclass
class StCertificate:
    model_dim: int
    relations_ok: bool
    structure_ok: bool
    jstar_independent: bool
    phi_homomorphism: bool
    kernel: KernelReport
    diagram_ok: bool

    @property
    def ok(self):
        return (
            self.relations_ok
            and self.structure_ok
            and self.jstar_independent
            and self.phi_homomorphism
            and self.kernel.ok
            and self.diagram_ok
        )


def certify_model(model: StModel, threads=None) -> StCertificate:
    """The full certification suite for an assembled model."""
    a = model.algebra
    structure = check_structure(model.to_fin_lie(verify=False), threads=threads)
    relations = check_relations(model)
    alt = build_model(
        a, model.shape, expansion_index=model.N, verify=False, threads=threads
    )
    jstar_independent = alt.table == model.table
    gl = GlModel(a, model.shape)
    phi_hom = True
    for x in range(model.dim):
        for y in range(model.dim):
            lhs = model.phi_apply(dict(model.table[x][y]), gl)
            rhs = gl.bracket_sparse(model.phi_atom(x, gl), model.phi_atom(y, gl))
            if lhs != rhs:
                phi_hom = False
                break
        if not phi_hom:
            break
    kr = kernel_phi(model)
    dia = diagram_check(model)
    return StCertificate(
        model.dim,
        relations.ok,
        structure.ok,
        jstar_independent,
        phi_hom,
        kr,
        dia.ok,
    )
