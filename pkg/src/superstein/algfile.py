"""Line-oriented text format for superalgebra definitions, plus Lie export.

Grammar (case-sensitive, `#` starts a comment anywhere on a line):

    name <ident>
    field Q | field Fp:<odd prime>
    basis <ident>:<even|odd> [<ident>:<even|odd> ...]
    unit <ident>
    mul <ident> <ident> = <coeff>*<ident> [+ <coeff>*<ident> ...]

Coefficients are integers or fractions p/q. Products not listed are zero,
except products against the unit, which are auto-filled and then verified
along with associativity and grading; a parsed document always comes back as
a validated SuperAlgebra. Serialization emits the canonical form: one line
per section, mul lines in basis order with unit rows omitted, so
parse(serialize(a)) reproduces a exactly.
"""

from .errors import AlgfileError, InputError, ValidationError
from .fields import field_from_spec
from .liesuper import FinLieSuper
from .superalgebra import SuperAlgebra


def _fail(ln: int, col: int, msg: str):
    raise AlgfileError(f"line {ln}, column {col}: {msg}")


def parse_algebra(text: str) -> SuperAlgebra:
    """Parse a definition document into a validated SuperAlgebra."""
    name = None
    field = None
    basis = []  # (name, parity)
    by_name = {}
    unit_name = None
    mul_lines = []  # (ln, col, left, right, rhs tokens)
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = line.split()
        col = raw.index(toks[0]) + 1
        key = toks[0]
        if key == "name":
            if len(toks) != 2:
                _fail(ln, col, "expected: name <ident>")
            name = toks[1]
        elif key == "field":
            if len(toks) != 2:
                _fail(ln, col, "expected: field Q | field Fp:<odd prime>")
            try:
                field = field_from_spec(toks[1])
            except InputError as exc:
                _fail(ln, col, str(exc))
        elif key == "basis":
            if len(toks) < 2:
                _fail(ln, col, "basis line needs at least one <ident>:<even|odd>")
            for tok in toks[1:]:
                if ":" not in tok:
                    _fail(ln, raw.index(tok) + 1, f"expected <ident>:<even|odd>, got {tok!r}")
                bname, par = tok.rsplit(":", 1)
                if par not in ("even", "odd"):
                    _fail(ln, raw.index(tok) + 1, f"parity must be even or odd, got {par!r}")
                if not bname.isidentifier():
                    _fail(ln, raw.index(tok) + 1, f"bad basis identifier {bname!r}")
                if bname in by_name:
                    _fail(ln, raw.index(tok) + 1, f"duplicate basis name {bname!r}")
                by_name[bname] = len(basis)
                basis.append((bname, 0 if par == "even" else 1))
        elif key == "unit":
            if len(toks) != 2:
                _fail(ln, col, "expected: unit <ident>")
            unit_name = toks[1]
        elif key == "mul":
            if len(toks) < 5 or toks[3] != "=":
                _fail(ln, col, "expected: mul <ident> <ident> = <coeff>*<ident> [+ ...]")
            mul_lines.append((ln, col, toks[1], toks[2], toks[4:]))
        else:
            _fail(ln, col, f"unknown directive {key!r}")
    if field is None:
        raise AlgfileError("missing field declaration")
    if not basis:
        raise AlgfileError("missing basis declaration")
    if name is None:
        raise AlgfileError("missing name declaration")
    if unit_name is None:
        raise AlgfileError("missing unit")
    if unit_name not in by_name:
        raise AlgfileError(f"unit {unit_name!r} is not a declared basis name")
    dim = len(basis)
    unit = by_name[unit_name]
    table = [[None] * dim for _ in range(dim)]
    for ln, col, lname, rname, rhs in mul_lines:
        for nm in (lname, rname):
            if nm not in by_name:
                _fail(ln, col, f"unknown basis name {nm!r} in mul")
        i, j = by_name[lname], by_name[rname]
        if table[i][j] is not None:
            _fail(ln, col, f"duplicate product {lname} {rname}")
        vec = [0] * dim
        expect_term = True
        for tok in rhs:
            if not expect_term:
                if tok != "+":
                    _fail(ln, col, f"expected '+', got {tok!r}")
                expect_term = True
                continue
            if "*" not in tok:
                _fail(ln, col, f"expected <coeff>*<ident>, got {tok!r}")
            coeff_s, bname = tok.rsplit("*", 1)
            if bname not in by_name:
                _fail(ln, col, f"unknown basis name {bname!r} in mul")
            try:
                coeff = field.parse(coeff_s)
            except InputError as exc:
                _fail(ln, col, str(exc))
            vec[by_name[bname]] += coeff
            expect_term = False
        if expect_term:
            _fail(ln, col, "dangling '+' in mul right-hand side")
        table[i][j] = tuple(field.normalize(v) for v in vec)
    for i in range(dim):
        for j in range(dim):
            if table[i][j] is None:
                if i == unit:
                    table[i][j] = tuple(1 if k == j else 0 for k in range(dim))
                elif j == unit:
                    table[i][j] = tuple(1 if k == i else 0 for k in range(dim))
                else:
                    table[i][j] = tuple([0] * dim)
    a = SuperAlgebra(
        name,
        field,
        [p for _, p in basis],
        [n for n, _ in basis],
        unit,
        table,
    )
    rep = a.validate()
    if not rep.ok:
        raise ValidationError(f"algebra {name!r}: {rep.witnesses()[0]}", rep)
    return a


def _terms(field, names, vec) -> str:
    return " + ".join(
        f"{field.fmt(v)}*{names[k]}" for k, v in enumerate(vec) if not field.is_zero(v)
    )


def serialize_algebra(a: SuperAlgebra) -> str:
    """Canonical document: unit rows and zero products omitted."""
    lines = [
        f"name {a.name}",
        f"field {a.field.spec}",
        "basis " + " ".join(
            f"{n}:{'odd' if p else 'even'}" for n, p in zip(a.basis_names, a.parity)
        ),
        f"unit {a.basis_names[a.unit]}",
    ]
    for i in range(a.dim):
        for j in range(a.dim):
            if i == a.unit or j == a.unit:
                continue
            rhs = _terms(a.field, a.basis_names, a.table[i][j])
            if rhs:
                lines.append(f"mul {a.basis_names[i]} {a.basis_names[j]} = {rhs}")
    return "\n".join(lines) + "\n"


def export_lie(L: FinLieSuper) -> str:
    """Structure-constant listing: parities plus all nonzero brackets."""
    names = L.basis_names
    lines = [f"lie {L.label}", f"field {L.field.spec}"]
    lines.extend(
        f"basis {n}:{'odd' if p else 'even'}" for n, p in zip(names, L.parity)
    )
    for i in range(L.dim):
        for j in range(L.dim):
            cell = L.table[i][j]
            if cell:
                rhs = " + ".join(f"{L.field.fmt(c)}*{names[k]}" for k, c in cell)
                lines.append(f"bracket {names[i]} {names[j]} = {rhs}")
    return "\n".join(lines) + "\n"
