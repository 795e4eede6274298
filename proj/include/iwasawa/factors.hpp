#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iwasawa/modules.hpp"

namespace iwasawa {

/// Coefficients (lowest degree first) of prod_i (1 - alpha_i^{-1} X); every alpha must be
/// a unit and the list must close up under Galois conjugation so the product is over Z_p.
std::vector<PadicInt> packet_polynomial(const std::vector<CycloInt>& alphas, u64 p, unsigned precision);

/// P(x) for a polynomial with Z_p coefficients.
IwasawaElement evaluate_polynomial(const std::vector<PadicInt>& poly, const IwasawaElement& x);

/// prod_j (1 - eps_j^{-1} sigma)(1 - eps_j^{-1} sigma^{-1}).
IwasawaElement w_ideal(const RingSpec& spec, const std::vector<CycloInt>& eps, const GroupWord& sigma);

struct GlobalTorsionData {
    enum class Mode { D1, Eigen };
    Mode mode = Mode::Eigen;
    u64 order_k = 1;
    u64 order_meet = 1;
    std::vector<CycloInt> eps;
    GroupWord sigma;
};

/// Global factor over Lambda_{d-1}; `spec` is the ring of the top layer (d variables).
IwasawaElement rho_factor(const RingSpec& spec, const GlobalTorsionData& global);

struct GoodOrdinary {
    std::vector<CycloInt> alphas;
    /// Frobenius in Gamma'; empty when L'/K ramifies at v.
    std::optional<GroupWord> frobenius;
};

struct SplitMultiplicative {
    unsigned g = 1;
    ZpMatrix reciprocity{2, 1, 1, 1};
    unsigned gamma_v_rank = 0;
    unsigned psi_v_rank = 0;
    std::optional<GroupWord> sigma;
    /// Generators of the decomposition group in Gamma, used by the non-torsion screen.
    std::vector<GroupWord> decomposition_words;
};

struct UnramifiedBad {
    u64 pi_v_order = 1;
    bool psi_v_nontrivial = false;
};

struct Place {
    std::string name;
    std::variant<GoodOrdinary, SplitMultiplicative, UnramifiedBad> data;
};

std::string_view place_type(const Place& v);

IwasawaElement f_ordinary(const RingSpec& spec, const GoodOrdinary& v);

struct FrakW {
    bool zero_ideal = false;
    /// Generator p^exponent when the cokernel is finite.
    long exponent = 0;
};

FrakW frak_w_v(const SplitMultiplicative& v);

/// Local factor over Lambda(Gamma') = `spec`.
CharIdeal theta_v(const RingSpec& spec, const Place& v);

struct FactorEntry {
    std::string name;
    std::string role;
    std::string value;
    Verdict kind = Verdict::Pass;
    bool approximate = false;
};

struct CompatibilityReport {
    Verdict verdict = Verdict::Inconclusive;
    RingSpec top;
    std::vector<FactorEntry> factors;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> notes;
};

/// Theta_{L'} * prod theta_v against rho * p(Theta_L) with psi = gamma_d.
CompatibilityReport check_compatibility(const IwasawaElement& theta_l, const IwasawaElement& theta_lp,
                                        const std::vector<Place>& places, const GlobalTorsionData& global);

struct ScreenResult {
    enum class Kind { NoObstruction, Obstructed, TorsionPropagationFails };
    Kind kind = Kind::NoObstruction;
    std::vector<std::string> obstructing_places;
    bool specialization_vanishes = false;
    bool approximate = false;
    std::string specialization;
};

std::string_view to_string(ScreenResult::Kind k);

/// M is the fixed field of the subgroup generated by gamma_i, i in `indices` (0-based).
ScreenResult nontorsion_screen(const IwasawaElement& theta_l, const std::vector<Place>& places,
                               const std::vector<unsigned>& indices);

}  // namespace iwasawa
