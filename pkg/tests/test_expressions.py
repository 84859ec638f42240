import pytest

from rigidlab.constructors import attach, complete, complete_bipartite, cone, hennenberg, k_chain, k_ring, replace
from rigidlab.exceptions import ExpressionSyntaxError, InvalidArgumentError
from rigidlab.expressions import ExpressionParser, Term, parse_expression, tokenize
from rigidlab.graph import ChainSpec


class TestTokenize:
    def test_kinds_and_positions(self):
        tokens = tokenize("cone(complete 4)")
        assert [(t.kind, t.text, t.position) for t in tokens] == [
            ("name", "cone", 0),
            ("punct", "(", 4),
            ("name", "complete", 5),
            ("int", "4", 14),
            ("punct", ")", 15),
            ("end", "", 16),
        ]

    def test_trailing_whitespace(self):
        assert tokenize("complete 3   ")[-1].kind == "end"

    def test_unexpected_character(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            tokenize("complete 3 + 4")
        assert exc_info.value.position == 11


class TestPrefixTerms:
    def test_complete(self):
        assert parse_expression("complete 6") == complete(6)

    def test_bipartite(self):
        assert parse_expression("bipartite 5 5") == complete_bipartite(5, 5)

    def test_kchain(self):
        assert parse_expression("kchain 1,6,6,2") == k_chain(ChainSpec((1, 6, 6, 2)))

    def test_kring(self):
        assert parse_expression("kring 2,16,4,3,5") == k_ring(ChainSpec((2, 16, 4, 3, 5)))

    def test_wrong_argument_count(self):
        with pytest.raises(ExpressionSyntaxError, match="expected 2 integer"):
            parse_expression("bipartite 5")

    def test_kchain_needs_one_list(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("kchain 1,2 3")

    def test_constructor_errors_pass_through(self):
        with pytest.raises(InvalidArgumentError):
            parse_expression("complete 0")


class TestCallTerms:
    def test_cone(self):
        assert parse_expression("cone(bipartite 5 5)") == cone(complete_bipartite(5, 5))

    def test_attach_fixture(self, k6_attachment_spec):
        g = parse_expression("attach(complete 6; left=0,1; right=2,3,4,5; interior=3,5)")
        assert g == attach(k6_attachment_spec)
        assert (g.vertex_count, g.edge_count) == (14, 56)

    def test_attach_without_interior(self):
        g = parse_expression("attach(complete 4; left=0; right=1)")
        assert g == complete(4)

    def test_nested(self):
        g = parse_expression("cone(cone(kchain 2,2))")
        assert g.vertex_count == 6
        assert g.edge_count == 4 + 4 + 5

    def test_hennenberg(self):
        g = parse_expression("hennenberg(complete 4; d=2; i=0; j=1; others=2)")
        assert g == hennenberg(complete(4), 2, 0, 1, [2])

    def test_hennenberg_others_default_to_none(self):
        g = parse_expression("hennenberg(complete 3; d=1; i=0; j=1)")
        assert g.degree(3) == 2

    def test_blowup(self):
        assert parse_expression("blowup(kchain 1,1; sizes=3,4)") == complete_bipartite(3, 4)

    def test_replace_with_map(self):
        g = parse_expression("replace(complete 3; h=2; with=complete 2; map=2-1)")
        assert g == replace(complete(3), [2], complete(2), {2: 1})

    def test_replace_default_map(self):
        g = parse_expression("replace(kchain 2,3; h=0,1; with=complete 2)")
        assert g == replace(k_chain(ChainSpec((2, 3))), [0, 1], complete(2), {0: 0, 1: 1})

    def test_delete(self):
        assert parse_expression("delete(complete 4; edges=0-1, 2-3)").edge_count == 4

    def test_whitespace_is_insignificant(self):
        assert parse_expression(" cone ( complete 3 ) ") == complete(4)


class TestErrors:
    def test_unknown_constructor_lists_known_ones(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_expression("petersen 10")
        assert exc_info.value.position == 0
        assert "complete" in str(exc_info.value)

    def test_unknown_option(self):
        with pytest.raises(ExpressionSyntaxError, match="no option 'middle'") as exc_info:
            parse_expression("attach(complete 6; middle=1)")
        assert exc_info.value.position == 19

    def test_duplicate_option(self):
        with pytest.raises(ExpressionSyntaxError, match="given twice"):
            parse_expression("attach(complete 6; left=0; left=1; right=2)")

    def test_missing_required_option(self):
        with pytest.raises(ExpressionSyntaxError, match="missing option"):
            parse_expression("attach(complete 6; left=0,1)")

    def test_unclosed_parenthesis(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_expression("cone(complete 4")
        assert exc_info.value.position == 15

    def test_trailing_input(self):
        with pytest.raises(ExpressionSyntaxError, match="end of expression"):
            parse_expression("complete 4 )")

    def test_empty_expression(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_expression("")
        assert exc_info.value.position == 0

    def test_pairs_where_integers_expected(self):
        with pytest.raises(ExpressionSyntaxError, match="not pairs"):
            parse_expression("attach(complete 6; left=0-1; right=2)")

    def test_integers_where_pairs_expected(self):
        with pytest.raises(ExpressionSyntaxError, match="pairs written i-j"):
            parse_expression("delete(complete 4; edges=0,1)")

    def test_single_integer_option(self):
        with pytest.raises(ExpressionSyntaxError, match="exactly one integer"):
            parse_expression("hennenberg(complete 4; d=2,3; i=0; j=1)")


class TestParser:
    def test_uses_given_registry(self, registry):
        parser = ExpressionParser(registry)
        assert parser.parse("complete 3") == complete(3)
        assert parser.parse("complete 2") == complete(2)

    def test_term_error_carries_position(self):
        term = Term("kchain", 7)
        error = term.error("bad sizes")
        assert error.position == 7
        assert "kchain: bad sizes" in str(error)
