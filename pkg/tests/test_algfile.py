"""Definition-format parsing, canonical serialization, and Lie export."""

import pytest

from superstein.algfile import export_lie, parse_algebra, serialize_algebra
from superstein.errors import AlgfileError, ValidationError
from superstein.matrices import MatrixShape, concretize
from superstein.superalgebra import builtin, corpus

GRASSMANN_DOC = """\
# exterior algebra on one odd generator
name grassmann1
field Q
basis one:even th:odd
unit one
mul one one = 1*one
mul one th = 1*th
mul th one = 1*th
"""


class TestParse:
    def test_grassmann_document(self):
        a = parse_algebra(GRASSMANN_DOC)
        assert a.dim == 2
        assert a.parity == (0, 1)
        assert a.basis_names == ("one", "th")
        # th*th omitted, hence zero
        assert a.table[1][1] == (0, 0)

    def test_unit_products_autofilled(self):
        a = parse_algebra("name x\nfield Q\nbasis e:even b:even\nunit e\nmul b b = 1*b\n")
        assert a.table[0][1] == (0, 1)
        assert a.table[1][0] == (0, 1)

    def test_multi_term_and_fraction_coefficients(self):
        doc = (
            "name x\nfield Q\nbasis one:even u:even\nunit one\n"
            "mul u u = 1/2*one + -3*u\n"
        )
        a = parse_algebra(doc)
        from fractions import Fraction

        assert a.table[1][1] == (Fraction(1, 2), -3)

    def test_repeated_basis_lines_accumulate(self):
        doc = "name x\nfield Q\nbasis one:even\nbasis th:odd\nunit one\n"
        a = parse_algebra(doc)
        assert a.basis_names == ("one", "th")

    def test_prime_field_document(self):
        doc = "name x\nfield Fp:5\nbasis one:even u:even\nunit one\nmul u u = 3*u\n"
        a = parse_algebra(doc)
        assert a.field.p == 5
        assert a.table[1][1] == (0, 3)

    def test_comments_and_blank_lines_ignored(self):
        doc = "\n# header\nname x  # trailing\nfield Q\n\nbasis e:even\nunit e\n"
        assert parse_algebra(doc).name == "x"


class TestRejections:
    @pytest.mark.parametrize(
        "doc,fragment",
        [
            ("name x\nfield Fp:2\nbasis e:even\nunit e\n", "characteristic 2"),
            ("name x\nfield Fp:9\nbasis e:even\nunit e\n", "odd prime"),
            ("name x\nfield Q\nbasis e:even\n", "missing unit"),
            ("field Q\nbasis e:even\nunit e\n", "missing name"),
            ("name x\nbasis e:even\nunit e\n", "missing field"),
            ("name x\nfield Q\nunit e\n", "missing basis"),
            ("name x\nfield Q\nbasis e:even\nunit q\n", "not a declared basis name"),
            ("name x\nfield Q\nbasis e:even e:odd\nunit e\n", "duplicate basis"),
            ("name x\nfield Q\nbasis e:evn\nunit e\n", "parity must be even or odd"),
            ("name x\nfield Q\nbasis e:even\nunit e\nmul e q = 1*e\n", "unknown basis name"),
            ("name x\nfield Q\nbasis e:even\nunit e\nmul e e = 1*e\nmul e e = 1*e\n", "duplicate product"),
            ("name x\nfield Q\nbasis e:even\nunit e\nmul e e = e\n", "expected <coeff>*<ident>"),
            ("name x\nfield Q\nbasis e:even\nunit e\nmul e e = 1*e +\n", "dangling '+'"),
            ("name x\nfield Q\nbasis e:even\nunit e\nmull e e = 1*e\n", "unknown directive"),
        ],
    )
    def test_malformed_documents(self, doc, fragment):
        with pytest.raises(AlgfileError) as err:
            parse_algebra(doc)
        assert fragment in str(err.value)

    def test_syntax_errors_carry_line_numbers(self):
        doc = "name x\nfield Q\nbasis e:even\nunit e\nmul e e = junk\n"
        with pytest.raises(AlgfileError) as err:
            parse_algebra(doc)
        assert "line 5" in str(err.value)

    def test_nonassociative_table_rejected_with_witness(self):
        doc = (
            "name x\nfield Q\nbasis one:even u:even v:even\nunit one\n"
            "mul u u = 1*v\nmul u v = 1*one\n"
        )
        with pytest.raises(ValidationError) as err:
            parse_algebra(doc)
        assert "associativity" in str(err.value)
        assert err.value.report is not None

    def test_grading_violation_rejected(self):
        doc = "name x\nfield Q\nbasis one:even th:odd\nunit one\nmul th th = 1*th\n"
        with pytest.raises(ValidationError) as err:
            parse_algebra(doc)
        assert "grading" in str(err.value)


class TestRoundTrip:
    @pytest.mark.parametrize("alg", [a.name for a in corpus()])
    def test_corpus_identity(self, alg):
        a = builtin(alg)
        doc = serialize_algebra(a)
        b = parse_algebra(doc)
        assert (b.name, b.field, b.parity, b.basis_names, b.unit) == (
            a.name,
            a.field,
            a.parity,
            a.basis_names,
            a.unit,
        )
        assert b.table == a.table
        assert serialize_algebra(b) == doc

    def test_commented_document_canonicalizes(self):
        a = parse_algebra(GRASSMANN_DOC)
        doc = serialize_algebra(a)
        # unit rows dropped, th*th zero dropped: only the header survives
        assert doc == "name grassmann1\nfield Q\nbasis one:even th:odd\nunit one\n"
        assert parse_algebra(doc).table == a.table


class TestExport:
    def test_sl_export_counts(self):
        L = concretize("sl", builtin("field"), MatrixShape.parse("2|1"), verify=False)
        lines = export_lie(L).splitlines()
        assert sum(1 for l in lines if l.startswith("basis ")) == 8
        assert sum(1 for l in lines if l.startswith("bracket ")) > 0

    def test_abelian_export_has_no_brackets(self):
        from superstein.fields import QQ
        from superstein.liesuper import FinLieSuper

        L = FinLieSuper("ab", QQ, (0, 1), [[(), ()], [(), ()]])
        out = export_lie(L)
        assert "bracket" not in out
        assert "basis b0:even" in out and "basis b1:odd" in out

    def test_exact_coefficients_preserved(self):
        from fractions import Fraction
        from superstein.fields import QQ
        from superstein.liesuper import FinLieSuper

        tbl = [[(), ((0, Fraction(1, 3)),)], [((0, Fraction(-1, 3)),), ()]]
        L = FinLieSuper("frac", QQ, (0, 0), tbl)
        out = export_lie(L)
        assert "bracket b0 b1 = 1/3*b0" in out
        assert "bracket b1 b0 = -1/3*b0" in out
