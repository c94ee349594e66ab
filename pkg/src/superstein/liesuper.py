"""Finite-dimensional Lie superalgebras by structure constants, with certification.

Brackets are stored sparsely: table[i][j] is a tuple of (k, coeff) pairs for
[e_i, e_j]. The certification suite checks grading, super skew-symmetry on all
ordered pairs, and the cyclic super Jacobi identity

    (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0

on all sorted basis triples (with repeats), which together with bilinearity and
skew-symmetry covers every ordered triple.
"""

from dataclasses import dataclass, field as dc_field

from ._parallel import pmap
from .errors import ConstructionError
from .linalg import Echelon, SubspaceBasis, reduce


class FinLieSuper:
    __slots__ = ("label", "field", "parity", "basis_names", "table")

    def __init__(self, label, field, parity, table, basis_names=None):
        self.label = label
        self.field = field
        self.parity = tuple(parity)
        dim = len(self.parity)
        if basis_names is None:
            basis_names = tuple(f"b{i}" for i in range(dim))
        self.basis_names = tuple(basis_names)
        if len(table) != dim or any(len(row) != dim for row in table):
            raise ConstructionError("bracket table is not square")
        self.table = tuple(
            tuple(
                tuple((k, field.normalize(c)) for k, c in cell if not field.is_zero(c))
                for cell in row
            )
            for row in table
        )

    @property
    def dim(self) -> int:
        return len(self.parity)

    def bracket_sparse(self, x: dict, y: dict) -> dict:
        f = self.field
        acc = {}
        for i, v in x.items():
            row = self.table[i]
            for j, w in y.items():
                vw = v * w
                for k, c in row[j]:
                    acc[k] = acc.get(k, 0) + vw * c
        return {k: f.normalize(v) for k, v in acc.items() if not f.is_zero(v)}

    def ad_bracket(self, i: int, cell) -> dict:
        """[e_i, v] for a sparse cell ((k, c), ...)."""
        f = self.field
        acc = {}
        row = self.table[i]
        for j, w in cell:
            for k, c in row[j]:
                acc[k] = acc.get(k, 0) + w * c
        return {k: f.normalize(v) for k, v in acc.items() if not f.is_zero(v)}

    def permuted(self, perm) -> "FinLieSuper":
        """Relabel basis by e_i -> e_{perm[i]}; homology dims must not change."""
        dim = self.dim
        inv = [0] * dim
        for i, p in enumerate(perm):
            inv[p] = i
        table = [[None] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(dim):
                table[perm[i]][perm[j]] = tuple(
                    (perm[k], c) for k, c in self.table[i][j]
                )
        return FinLieSuper(
            self.label + "_perm",
            self.field,
            tuple(self.parity[inv[i]] for i in range(dim)),
            table,
            tuple(self.basis_names[inv[i]] for i in range(dim)),
        )


@dataclass
class LieCheckReport:
    grading: list = dc_field(default_factory=list)
    skew: list = dc_field(default_factory=list)
    jacobi: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.grading or self.skew or self.jacobi)

    def first_witness(self):
        if self.grading:
            return f"grading fails on bracket pair {self.grading[0]}"
        if self.skew:
            return f"skew-symmetry fails on pair {self.skew[0]}"
        if self.jacobi:
            return f"Jacobi fails on triple {self.jacobi[0]}"
        return None


def check_structure(L: FinLieSuper, max_witnesses: int = 5, threads=None) -> LieCheckReport:
    f = L.field
    par = L.parity
    dim = L.dim
    rep = LieCheckReport()
    for i in range(dim):
        for j in range(dim):
            want = (par[i] + par[j]) % 2
            for k, _ in L.table[i][j]:
                if par[k] != want and len(rep.grading) < max_witnesses:
                    rep.grading.append((i, j, k))
    for i in range(dim):
        for j in range(i, dim):
            sign = 1 if par[i] and par[j] else -1
            # [e_i,e_j] = sign * [e_j,e_i] must hold (sign = -(-1)^{p_i p_j})
            lhs = dict(L.table[i][j])
            for k, c in L.table[j][i]:
                lhs[k] = f.normalize(lhs.get(k, 0) - sign * c)
            if any(not f.is_zero(v) for v in lhs.values()):
                if len(rep.skew) < max_witnesses:
                    rep.skew.append((i, j))

    def jacobi_chunk(i):
        bad = []
        for j in range(i, dim):
            pij = par[i] and par[j]
            for k in range(j, dim):
                acc = {}
                for s, (x, y, z) in (
                    (par[i] * par[k], (i, j, k)),
                    (par[j] * par[i], (j, k, i)),
                    (par[k] * par[j], (k, i, j)),
                ):
                    inner = L.table[y][z]
                    term = L.ad_bracket(x, inner)
                    if s % 2:
                        for kk, c in term.items():
                            acc[kk] = acc.get(kk, 0) - c
                    else:
                        for kk, c in term.items():
                            acc[kk] = acc.get(kk, 0) + c
                if any(not f.is_zero(v) for v in acc.values()):
                    bad.append((i, j, k))
                    if len(bad) >= max_witnesses:
                        return bad
        return bad

    for bad in pmap(jacobi_chunk, range(dim), threads=threads):
        for t in bad:
            if len(rep.jacobi) < max_witnesses:
                rep.jacobi.append(t)
    return rep


def verify_or_raise(L: FinLieSuper, threads=None) -> None:
    rep = check_structure(L, threads=threads)
    if not rep.ok:
        raise ConstructionError(f"{L.label}: {rep.first_witness()}")


@dataclass
class StructReport:
    perfect: bool
    derived_dim: int
    center: SubspaceBasis


def perfectness_and_center(L: FinLieSuper) -> StructReport:
    f = L.field
    dim = L.dim
    ech = Echelon(dim, f)
    for i in range(dim):
        for j in range(i, dim):
            cell = L.table[i][j]
            if cell:
                ech.insert(dict(cell))
    derived_dim = ech.rank
    # center: z with [z, e_j] = 0 for all j; rows of the system indexed by (j, k)
    rows = {}
    for i in range(dim):
        for j in range(dim):
            for k, c in L.table[i][j]:
                rows.setdefault((j, k), {})[i] = c
    res = reduce(list(rows.values()), width=dim, field=f)
    return StructReport(derived_dim == dim, derived_dim, res.kernel)
