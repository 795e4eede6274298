#include "iwasawa/parser.hpp"

#include <cctype>
#include <limits>

namespace iwasawa {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool at_end() { return peek() == '\0' && pos_ >= s_.size(); }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }
    std::size_t pos() const { return pos_; }

    i64 uint() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected digits");
        i64 v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            int digit = s_[pos_] - '0';
            if (v > (std::numeric_limits<i64>::max() - digit) / 10) {
                throw SyntaxError(start, "integer literal too large");
            }
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }
    i64 sint() {
        if (accept('-')) return -uint();
        accept('+');
        return uint();
    }

    [[noreturn]] void error(const std::string& msg) {
        skip_ws();
        std::string found = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
        throw SyntaxError(pos_, msg + ", found " + found);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

using K = ElementAst::Kind;

class ElementParser {
public:
    ElementParser(std::string_view src, unsigned nvars) : cur_(src), nvars_(nvars) {}

    ElementAst parse() {
        ElementAst e = expr();
        if (!cur_.at_end()) cur_.error("unexpected trailing input");
        return e;
    }

private:
    static bool starts_atom(char c) {
        return c == 'p' || c == 't' || c == 'g' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    ElementAst expr() {
        ElementAst lhs = term();
        for (;;) {
            if (cur_.accept('+')) lhs = ElementAst::binary(K::Add, std::move(lhs), term());
            else if (cur_.accept('-')) lhs = ElementAst::binary(K::Sub, std::move(lhs), term());
            else return lhs;
        }
    }

    ElementAst term() {
        ElementAst lhs = factor();
        for (;;) {
            if (cur_.accept('*')) lhs = ElementAst::binary(K::Mul, std::move(lhs), factor());
            else if (starts_atom(cur_.peek())) lhs = ElementAst::binary(K::Mul, std::move(lhs), factor());
            else return lhs;
        }
    }

    ElementAst factor() {
        ElementAst base = atom();
        if (cur_.accept('^')) return ElementAst::unary(K::Pow, std::move(base), cur_.sint());
        return base;
    }

    ElementAst variable(K kind) {
        std::size_t at = cur_.pos();
        i64 idx = cur_.uint();
        if (idx < 1 || idx > static_cast<i64>(nvars_)) {
            fail(ErrorCode::IndexError, "variable index " + std::to_string(idx) + " at offset " +
                                            std::to_string(at) + " outside [1, " +
                                            std::to_string(nvars_) + "]");
        }
        return ElementAst::leaf(kind, idx);
    }

    ElementAst atom() {
        char c = cur_.peek();
        if (cur_.accept('p')) return ElementAst::leaf(K::Prime);
        if (cur_.accept('t')) return variable(K::Var);
        if (cur_.accept('g')) return variable(K::GroupVar);
        if (cur_.accept('(')) {
            ElementAst e = expr();
            cur_.expect(')');
            return e;
        }
        if (cur_.accept('-')) return ElementAst::unary(K::Neg, atom());
        if (std::isdigit(static_cast<unsigned char>(c))) return ElementAst::leaf(K::Int, cur_.uint());
        cur_.error("expected an atom");
    }

    Cursor cur_;
    unsigned nvars_;
};

bool is_atom(const ElementAst& a) {
    switch (a.kind) {
        case K::Int:
        case K::Prime:
        case K::Var:
        case K::GroupVar:
        case K::Neg:
            return true;
        default:
            return false;
    }
}

bool is_factor(const ElementAst& a) { return is_atom(a) || a.kind == K::Pow; }
bool is_term(const ElementAst& a) { return is_factor(a) || a.kind == K::Mul; }

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string print_as(const ElementAst& a, bool (*fits)(const ElementAst&)) {
    return fits(a) ? print_element(a) : paren(print_element(a));
}

}  // namespace

ElementAst parse_element(std::string_view src, unsigned nvars) { return ElementParser(src, nvars).parse(); }

std::string print_element(const ElementAst& a) {
    switch (a.kind) {
        case K::Int:
            return std::to_string(a.value);
        case K::Prime:
            return "p";
        case K::Var:
            return "t" + std::to_string(a.value);
        case K::GroupVar:
            return "g" + std::to_string(a.value);
        case K::Neg:
            return "-" + print_as(a.children[0], is_atom);
        case K::Pow:
            return print_as(a.children[0], is_atom) + "^" + std::to_string(a.value);
        case K::Mul:
            return print_as(a.children[0], is_term) + "*" + print_as(a.children[1], is_factor);
        case K::Add:
            return print_element(a.children[0]) + " + " + print_as(a.children[1], is_term);
        case K::Sub:
            return print_element(a.children[0]) + " - " + print_as(a.children[1], is_term);
    }
    return {};
}

IwasawaElement elaborate(const ElementAst& a, const RingSpec& spec) {
    switch (a.kind) {
        case K::Int:
            return IwasawaElement::constant(spec, a.value);
        case K::Prime:
            return IwasawaElement::constant(spec, static_cast<i64>(spec.p));
        case K::Var:
            return IwasawaElement::variable(spec, static_cast<unsigned>(a.value - 1));
        case K::GroupVar:
            return IwasawaElement::one(spec) + IwasawaElement::variable(spec, static_cast<unsigned>(a.value - 1));
        case K::Neg:
            return -elaborate(a.children[0], spec);
        case K::Add:
            return elaborate(a.children[0], spec) + elaborate(a.children[1], spec);
        case K::Sub:
            return elaborate(a.children[0], spec) - elaborate(a.children[1], spec);
        case K::Mul:
            return elaborate(a.children[0], spec) * elaborate(a.children[1], spec);
        case K::Pow: {
            IwasawaElement base = elaborate(a.children[0], spec);
            if (a.value < 0) return base.inverse().pow(static_cast<u64>(-a.value));
            return base.pow(static_cast<u64>(a.value));
        }
    }
    return IwasawaElement::zero(spec);
}

namespace {

std::vector<i64> parse_int_list(Cursor& cur, bool allow_sign) {
    std::vector<i64> out;
    cur.expect('[');
    if (cur.accept(']')) return out;
    do {
        out.push_back(allow_sign ? cur.sint() : cur.uint());
    } while (cur.accept(','));
    cur.expect(']');
    return out;
}

void check_length(std::size_t got, unsigned nvars) {
    if (got != nvars) {
        fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(nvars) + " exponents, got " +
                                           std::to_string(got));
    }
}

}  // namespace

Character parse_character(std::string_view src, u64 p, unsigned nvars) {
    Cursor cur(src);
    std::vector<i64> e = parse_int_list(cur, false);
    cur.expect('@');
    i64 level = cur.uint();
    if (!cur.at_end()) cur.error("unexpected trailing input");
    check_length(e.size(), nvars);
    auto order = level <= 64 ? checked_pow(p, static_cast<unsigned>(level)) : std::nullopt;
    if (!order) fail(ErrorCode::RangeError, "character level " + std::to_string(level) + " too large");
    std::vector<u64> ex;
    for (i64 x : e) {
        if (static_cast<u64>(x) >= *order) {
            fail(ErrorCode::RangeError, "exponent " + std::to_string(x) + " not below p^M = " +
                                            std::to_string(*order));
        }
        ex.push_back(static_cast<u64>(x));
    }
    return Character(p, static_cast<unsigned>(level), std::move(ex));
}

GroupWord parse_group_word(std::string_view src, unsigned nvars) {
    Cursor cur(src);
    std::vector<i64> e = parse_int_list(cur, true);
    if (!cur.at_end()) cur.error("unexpected trailing input");
    check_length(e.size(), nvars);
    return GroupWord{std::move(e)};
}

}  // namespace iwasawa
