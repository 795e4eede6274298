#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iwasawa/element.hpp"

namespace iwasawa {

inline constexpr std::string_view kGrammarVersion = "grammar_v1";

/// Syntax tree of an element expression.
struct ElementAst {
    enum class Kind { Int, Prime, Var, GroupVar, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::Int;
    /// Literal value, 1-based variable index, or the exponent of a Pow.
    i64 value = 0;
    std::vector<ElementAst> children;

    static ElementAst leaf(Kind k, i64 v = 0) { return ElementAst{k, v, {}}; }
    static ElementAst unary(Kind k, ElementAst a, i64 v = 0) {
        ElementAst n{k, v, {}};
        n.children.push_back(std::move(a));
        return n;
    }
    static ElementAst binary(Kind k, ElementAst a, ElementAst b) {
        ElementAst n{k, 0, {}};
        n.children.push_back(std::move(a));
        n.children.push_back(std::move(b));
        return n;
    }

    friend bool operator==(const ElementAst&, const ElementAst&) = default;
};

/// expr := term (("+" | "-") term)* ; term := factor ("*"? factor)* ;
/// factor := atom ("^" sint)? ; atom := "p" | "t" uint | "g" uint | uint | "(" expr ")" | "-" atom
ElementAst parse_element(std::string_view src, unsigned nvars);

/// Text that parses back to the same tree.
std::string print_element(const ElementAst& ast);

IwasawaElement elaborate(const ElementAst& ast, const RingSpec& spec);

inline IwasawaElement parse_and_elaborate(std::string_view src, const RingSpec& spec) {
    return elaborate(parse_element(src, spec.nvars), spec);
}

/// "[e1, ..., ed] @ M"
Character parse_character(std::string_view src, u64 p, unsigned nvars);

/// "[a1, ..., ad]" with signed integer exponents.
GroupWord parse_group_word(std::string_view src, unsigned nvars);

}  // namespace iwasawa
