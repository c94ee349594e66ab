"""Z/2-graded cyclic homology of an associative superalgebra.

Two routes to HC_1 are kept deliberately independent: the pairing module
<<A,A>> = (A (x) A)/I with both relation families and d<<a,b>> = [a,b], and the
chain complex C_n(A) = A^{(x)(n+1)}/I_n with the cyclic boundary d_n. The
crosscheck compares their HC_1 dimensions.
"""

from dataclasses import dataclass

from .errors import ConstructionError, InputError, ResourceLimitError
from .linalg import QuotientSpace, reduce, to_sparse
from .superalgebra import SuperAlgebra


@dataclass
class PairingModule:
    """<<A,A>> with projection from tensor-square coordinates and d to A."""

    algebra: SuperAlgebra
    quot: QuotientSpace
    commutator_map: tuple  # row k = d(basis class k) as dense A coordinates

    @property
    def dim(self) -> int:
        return self.quot.dim

    def tensor_index(self, s: int, t: int) -> int:
        return s * self.algebra.dim + t

    def project_tensor(self, vec):
        """Class of a tensor-square coordinate vector."""
        return self.quot.project(vec)

    def pair_class(self, avec, bvec):
        """<<a,b>> for dense A vectors, extended bilinearly."""
        f = self.algebra.field
        d = self.algebra.dim
        tensor = {}
        for s, v in enumerate(avec):
            if f.is_zero(v):
                continue
            for t, w in enumerate(bvec):
                if not f.is_zero(w):
                    tensor[s * d + t] = f.normalize(v * w)
        return self.quot.project(tensor)

    def d(self, qvec):
        """Value of the commutator map on quotient coordinates."""
        f = self.algebra.field
        acc = [0] * self.algebra.dim
        for k, v in enumerate(qvec):
            if f.is_zero(v):
                continue
            row = self.commutator_map[k]
            for i, c in enumerate(row):
                acc[i] += v * c
        return tuple(f.normalize(v) for v in acc)

    def coordinate_parity(self, k: int) -> int:
        """Parity of the k-th quotient coordinate (free column s,t)."""
        d = self.algebra.dim
        c = self.quot.free_cols[k]
        return (self.algebra.parity[c // d] + self.algebra.parity[c % d]) % 2


def pairing_module(a: SuperAlgebra) -> PairingModule:
    """Quotient of A (x) A by the graded-symmetry and cyclic relation families."""
    f = a.field
    d = a.dim
    amb = d * d
    rels = []
    # family 1: a(x)b + (-1)^{|a||b|} b(x)a
    for i in range(d):
        for j in range(i, d):
            sign = -1 if a.parity[i] and a.parity[j] else 1
            rel = {i * d + j: 1}
            rel[j * d + i] = rel.get(j * d + i, 0) + sign
            rels.append(rel)
    # family 2: (-1)^{|a||c|} a(x)bc + (-1)^{|b||a|} b(x)ca + (-1)^{|c||b|} c(x)ab
    for i in range(d):
        for j in range(d):
            for k in range(d):
                rel = {}
                for first, second, third in ((i, j, k), (j, k, i), (k, i, j)):
                    sign = -1 if a.parity[first] and a.parity[third] else 1
                    prod = a.table[second][third]
                    for u, c in enumerate(prod):
                        if f.is_zero(c):
                            continue
                        col = first * d + u
                        rel[col] = rel.get(col, 0) + sign * c
                rel = {c: f.normalize(v) for c, v in rel.items() if not f.is_zero(v)}
                if rel:
                    rels.append(rel)
    quot = QuotientSpace(amb, rels, f)
    commutator_map = []
    for k in range(quot.dim):
        col = quot.free_cols[k]
        commutator_map.append(a.commutator(col // d, col % d))
    pm = PairingModule(a, quot, tuple(commutator_map))
    # <<1,a>> = 0 follows from family 2 with two unit slots; certify it
    for i in range(d):
        cls = pm.project_tensor({a.unit * d + i: 1})
        if any(not f.is_zero(v) for v in cls):
            raise ConstructionError(f"<<1, e_{i}>> did not vanish in the pairing module")
    return pm


@dataclass
class HC1Result:
    dim: int
    basis: tuple  # vectors in pairing-module coordinates
    module: PairingModule


def hc1(a: SuperAlgebra) -> HC1Result:
    """Kernel of the commutator map inside <<A,A>>."""
    pm = pairing_module(a)
    if pm.dim == 0:
        return HC1Result(0, (), pm)
    # rows indexed by A coordinates, columns by pairing coordinates
    rows = []
    for i in range(a.dim):
        rows.append(tuple(pm.commutator_map[k][i] for k in range(pm.dim)))
    res = reduce(rows, width=pm.dim, field=a.field)
    return HC1Result(res.kernel.dim, res.kernel.vectors, pm)


@dataclass
class ChainLevel:
    """C_n(A) = A^{(x)(n+1)}/I_n with the boundary to C_{n-1}."""

    n: int
    algebra: SuperAlgebra
    quot: QuotientSpace
    boundary: tuple  # column k = d_n(basis class k) in C_{n-1} coordinates; () for n=0

    @property
    def dim(self) -> int:
        return self.quot.dim


def _tuple_of(flat: int, d: int, length: int):
    out = []
    for _ in range(length):
        out.append(flat % d)
        flat //= d
    return tuple(reversed(out))


def _flat_of(tup, d: int) -> int:
    flat = 0
    for i in tup:
        flat = flat * d + i
    return flat


def _cyclic_relation(a: SuperAlgebra, tup):
    """I_n generator: t - (-1)^{n + |last| sum(|others|)} rot(t), as a sparse vector."""
    d = a.dim
    n = len(tup) - 1
    exp = n + a.parity[tup[-1]] * sum(a.parity[i] for i in tup[:-1])
    sign = -1 if exp % 2 else 1
    rel = {_flat_of(tup, d): 1}
    rot = (tup[-1],) + tup[:-1]
    col = _flat_of(rot, d)
    rel[col] = rel.get(col, 0) - sign
    return {c: v for c, v in rel.items() if v}


def _boundary_of_tuple(a: SuperAlgebra, tup):
    """Unreduced d~_n of a basis tensor, as a sparse vector in A^{(x)n}."""
    f = a.field
    d = a.dim
    n = len(tup) - 1
    acc = {}
    for i in range(n):
        sign = -1 if i % 2 else 1
        prod = a.table[tup[i]][tup[i + 1]]
        rest = tup[:i] + tup[i + 1:]
        for u, c in enumerate(prod):
            if f.is_zero(c):
                continue
            merged = rest[:i] + (u,) + rest[i + 1:]
            col = _flat_of(merged, d)
            acc[col] = acc.get(col, 0) + sign * c
    exp = n + a.parity[tup[-1]] * sum(a.parity[i] for i in tup[:-1])
    sign = -1 if exp % 2 else 1
    prod = a.table[tup[-1]][tup[0]]
    for u, c in enumerate(prod):
        if f.is_zero(c):
            continue
        col = _flat_of((u,) + tup[1:-1], d)
        acc[col] = acc.get(col, 0) + sign * c
    return {c: f.normalize(v) for c, v in acc.items() if not f.is_zero(v)}


def chain_level(a: SuperAlgebra, n: int, max_tensor: int = 20000, max_degree: int = 3) -> ChainLevel:
    if n < 0:
        raise InputError("chain degree must be nonnegative")
    if n > max_degree:
        raise InputError(f"chain degree {n} above the degree guard {max_degree}")
    f = a.field
    d = a.dim
    amb = d ** (n + 1)
    if amb > max_tensor:
        raise ResourceLimitError(
            f"tensor power dimension {amb} exceeds the size guard {max_tensor}"
        )
    if n == 0:
        return ChainLevel(0, a, QuotientSpace(d, [], f), ())
    rels = [_cyclic_relation(a, _tuple_of(t, d, n + 1)) for t in range(amb)]
    quot = QuotientSpace(amb, rels, f)
    prev = chain_level(a, n - 1, max_tensor, max_degree)
    # well-definedness: the unreduced boundary maps I_n into I_{n-1}
    for rel in rels:
        img = {}
        for col, v in rel.items():
            for c, w in _boundary_of_tuple(a, _tuple_of(col, d, n + 1)).items():
                img[c] = img.get(c, 0) + v * w
        if any(not f.is_zero(v) for v in prev.quot.project_sparse(img).values()):
            raise ConstructionError(
                f"boundary not well defined on a degree-{n} relation generator"
            )
    boundary = []
    for k in range(quot.dim):
        col = quot.free_cols[k]
        img = _boundary_of_tuple(a, _tuple_of(col, d, n + 1))
        boundary.append(prev.quot.project(img))
    return ChainLevel(n, a, quot, tuple(boundary))


def hc_n(a: SuperAlgebra, n: int, max_tensor: int = 20000) -> int:
    """dim HC_n = dim ker(d_n) - dim im(d_{n+1}); d_0 := 0."""
    level = chain_level(a, n, max_tensor)
    above = chain_level(a, n + 1, max_tensor, max_degree=n + 1)
    f = a.field
    # d_n o d_{n+1} = 0, checked on every basis class of C_{n+1}
    if level.boundary:
        for col in above.boundary:
            acc = {}
            for k, v in enumerate(col):
                if f.is_zero(v):
                    continue
                for i, w in enumerate(level.boundary[k]):
                    if not f.is_zero(w):
                        acc[i] = acc.get(i, 0) + v * w
            if any(not f.is_zero(v) for v in acc.values()):
                raise ConstructionError(f"d_{n} o d_{n + 1} != 0")
    if n == 0:
        ker_dim = level.dim
    else:
        prev_dim = len(level.boundary[0]) if level.boundary else 0
        rows = [
            tuple(level.boundary[k][i] for k in range(level.dim)) for i in range(prev_dim)
        ]
        ker_dim = reduce(rows, width=level.dim, field=f).kernel.dim if rows else level.dim
    if above.dim == 0:
        im_dim = 0
    else:
        im_dim = reduce(
            [to_sparse(col) for col in above.boundary], width=level.dim, field=f
        ).rank if level.dim else 0
    return ker_dim - im_dim


@dataclass
class CrosscheckVerdict:
    algebra: str
    pairing_dim: int
    complex_dim: int

    @property
    def passed(self) -> bool:
        return self.pairing_dim == self.complex_dim


def hc1_crosscheck(a: SuperAlgebra, max_tensor: int = 20000) -> CrosscheckVerdict:
    """The two HC_1 presentations must agree in dimension."""
    return CrosscheckVerdict(a.name, hc1(a).dim, hc_n(a, 1, max_tensor))
