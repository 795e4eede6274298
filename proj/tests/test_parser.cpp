#include <doctest.h>

#include <random>

#include "iwasawa/parser.hpp"
#include "support/errors.hpp"

using namespace iwasawa;
using K = ElementAst::Kind;

namespace {

ElementAst lit(i64 v) { return ElementAst::leaf(K::Int, v); }
ElementAst var(i64 i) { return ElementAst::leaf(K::Var, i); }
ElementAst gvar(i64 i) { return ElementAst::leaf(K::GroupVar, i); }
ElementAst prime() { return ElementAst::leaf(K::Prime); }

ElementAst random_ast(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 3);
    switch (pick(rng)) {
        case 0: return lit(std::uniform_int_distribution<i64>(0, 40)(rng));
        case 1: return prime();
        case 2: return var(std::uniform_int_distribution<i64>(1, 3)(rng));
        case 3: return gvar(std::uniform_int_distribution<i64>(1, 3)(rng));
        case 4: return ElementAst::unary(K::Neg, random_ast(rng, depth - 1));
        case 5: return ElementAst::binary(K::Add, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 6: return ElementAst::binary(K::Sub, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 7: return ElementAst::binary(K::Mul, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        default:
            return ElementAst::unary(K::Pow, random_ast(rng, depth - 1), std::uniform_int_distribution<i64>(-3, 4)(rng));
    }
}

}  // namespace

TEST_CASE("parse_element examples") {
    CHECK(parse_element("t1 + 2", 2) == ElementAst::binary(K::Add, var(1), lit(2)));
    CHECK(parse_element("g1^3 - 1", 2) ==
          ElementAst::binary(K::Sub, ElementAst::unary(K::Pow, gvar(1), 3), lit(1)));
    CHECK(parse_element("p^2*(t1+p)", 2) ==
          ElementAst::binary(K::Mul, ElementAst::unary(K::Pow, prime(), 2), ElementAst::binary(K::Add, var(1), prime())));
}

TEST_CASE("juxtaposition and whitespace") {
    CHECK(parse_element("2t1", 1) == ElementAst::binary(K::Mul, lit(2), var(1)));
    CHECK(parse_element("  2 t1 t2 ", 2) == parse_element("2*t1*t2", 2));
    CHECK(parse_element("t1(t2 + 1)", 2) == parse_element("t1*(t2+1)", 2));
    CHECK(parse_element("g1^-1", 1) == ElementAst::unary(K::Pow, gvar(1), -1));
    // unary minus binds to the atom, subtraction is binary
    CHECK(parse_element("-t1^2", 1) == ElementAst::unary(K::Pow, ElementAst::unary(K::Neg, var(1)), 2));
    CHECK(parse_element("t1 -2", 1) == ElementAst::binary(K::Sub, var(1), lit(2)));
}

TEST_CASE("syntax errors carry offsets") {
    auto offset_of = [](const char* src) -> std::size_t {
        try {
            parse_element(src, 2);
        } catch (const SyntaxError& e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("t1 + ") == 5);
    CHECK(offset_of("(t1") == 3);
    CHECK(offset_of("t1 ^ x") == 5);
    CHECK(offset_of("t") == 1);
    CHECK(offset_of("t1 ) ") == 3);
    CHECK(offset_of("3 $") == 2);
    CHECK(offset_of("99999999999999999999") == 0);
}

TEST_CASE("variable index range") {
    CHECK_ERROR(parse_element("t3", 2), IndexError);
    CHECK_ERROR(parse_element("g0", 2), IndexError);
    CHECK_NOTHROW(parse_element("t2", 2));
}

TEST_CASE("elaborate") {
    RingSpec s{3, 5, 1, 2};
    CHECK(parse_and_elaborate("g1 - 1", s) == IwasawaElement::variable(s, 0));
    CHECK(parse_and_elaborate("g1^-1", s) == parse_and_elaborate("1 - t1 + t1^2", s));
    CHECK_ERROR(parse_and_elaborate("t1^-1", s), NotAUnit);
    CHECK(parse_and_elaborate("p^2", s) == IwasawaElement::constant(s, 9));
    CHECK(parse_and_elaborate("-(t1 + 1)", s) == IwasawaElement::constant(s, -1) - IwasawaElement::variable(s, 0));
}

TEST_CASE("g times its inverse is one") {
    for (unsigned i = 1; i <= 3; ++i) {
        RingSpec s{2, 6, 3, 5};
        std::string gi = "g" + std::to_string(i);
        IwasawaElement prod = parse_and_elaborate(gi, s) * parse_and_elaborate(gi + "^-1", s);
        CHECK(prod == IwasawaElement::one(s));
    }
}

TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        ElementAst a = random_ast(rng, 4);
        std::string text = print_element(a);
        CAPTURE(text);
        CHECK(parse_element(text, 3) == a);
    }
}

TEST_CASE("parse_character") {
    Character triv = parse_character("[0,0] @ 0", 3, 2);
    CHECK(triv.level() == 0);
    Character w = parse_character("[1,0] @ 1", 3, 2);
    CHECK(w.level() == 1);
    CHECK(w.exponents() == std::vector<u64>{1, 0});
    CHECK(parse_character("[3,0] @ 2", 3, 2) == parse_character("[1,0]@1", 3, 2));
    CHECK_ERROR(parse_character("[3,0] @ 1", 3, 2), RangeError);
    CHECK_ERROR(parse_character("[1,0 @ 1", 3, 2), SyntaxError);
    CHECK_ERROR(parse_character("[1] @ 1", 3, 2), ShapeMismatch);
}

TEST_CASE("parse_group_word") {
    CHECK(parse_group_word("[1, -2, 0]", 3) == GroupWord{{1, -2, 0}});
    CHECK_ERROR(parse_group_word("[1, 2", 3), SyntaxError);
    CHECK_ERROR(parse_group_word("[1]", 3), ShapeMismatch);
}
