#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwasawa/element.hpp"

namespace iwasawa {

/// Characteristic ideal: a principal ideal (g) or the zero ideal.
/// The zero ideal absorbs under multiplication.
class CharIdeal {
public:
    static CharIdeal zero_ideal(const RingSpec& spec) { return CharIdeal(spec, std::nullopt); }
    static CharIdeal unit_ideal(const RingSpec& spec) { return CharIdeal(spec, IwasawaElement::one(spec)); }
    static CharIdeal generated_by(const IwasawaElement& g) { return CharIdeal(g.spec(), g); }

    const RingSpec& spec() const { return spec_; }
    bool is_zero_ideal() const { return !gen_.has_value(); }
    const IwasawaElement& generator() const;
    std::string to_string() const;

    friend CharIdeal operator*(const CharIdeal& a, const CharIdeal& b);

private:
    CharIdeal(const RingSpec& spec, std::optional<IwasawaElement> g) : spec_(spec), gen_(std::move(g)) {}

    RingSpec spec_;
    std::optional<IwasawaElement> gen_;
};

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v);

/// Ideal equality: both zero, or both nonzero and associate.
Verdict compare_ideals(const CharIdeal& a, const CharIdeal& b);

/// One cyclic block (Lambda/(xi^r))^a.
struct Summand {
    IwasawaElement xi;
    unsigned r = 1;
    unsigned a = 1;
};

struct ElementaryModule {
    RingSpec spec;
    std::vector<Summand> summands;

    void validate() const;
};

/// Cokernel of a square matrix acting on Lambda^r.
struct PresentedModule {
    RingSpec spec;
    std::vector<std::vector<IwasawaElement>> matrix;
};

IwasawaElement char_ideal_elementary(const ElementaryModule& w);

/// Generator of the ideal of r x r minors, by cofactor expansion.
IwasawaElement determinant(const std::vector<std::vector<IwasawaElement>>& m, const RingSpec& spec);
CharIdeal char_ideal_presented(const PresentedModule& w);

struct DescentResult {
    CharIdeal invariants;
    CharIdeal coinvariants;
};

/// Characteristic ideals of W^Psi and W/(psi - 1)W over Lambda_{d-1}, psi = gamma_d.
DescentResult descend(const ElementaryModule& w);

struct DescentCheck {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<DescentResult> descent;
    std::string detail;
};

/// chi(W/(psi-1)W) against p(chi(W)) * chi(W^Psi).
DescentCheck verify_descent_identity(const ElementaryModule& w);

struct PseudoNullWitness {
    std::vector<IwasawaElement> annihilators;
};

struct PseudoNullVerdict {
    bool pass = false;
    std::optional<IwasawaElement> common_factor;
    std::string reason;
};

/// Relative primality of the annihilators: no supplied candidate (and not p)
/// divides all of them. Univariate families are also checked by resultants.
PseudoNullVerdict check_pseudonull(const PseudoNullWitness& w, const std::vector<IwasawaElement>& candidates = {});

struct SimpleFactorData {
    IwasawaElement f;
    unsigned b = 1;
    unsigned a = 1;
};

/// Predicted X^0 shape: the sum of (Lambda/(f_i))^{a_i}.
ElementaryModule x0_shape(const RingSpec& spec, const std::vector<SimpleFactorData>& simple,
                          const std::vector<IwasawaElement>& others);

}  // namespace iwasawa
