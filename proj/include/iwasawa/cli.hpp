#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "iwasawa/error.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

struct RunConfig {
    enum class Format { Table, Json };

    std::string command;
    std::vector<std::string> inputs;
    std::optional<u64> p;
    std::optional<unsigned> d;
    std::optional<unsigned> precision;
    std::optional<unsigned> degree_bound;
    u64 budget = 10'000'000;
    unsigned threads = 0;
    Format format = Format::Table;
    u64 seed = 0;

    std::string expr;
    std::string character;
    std::string gamma;
    u64 zeta_order = 0;
    u64 zeta_exp = 1;
    unsigned n = 1;
    unsigned n_min = 1;
    unsigned n_max = 3;
    std::vector<std::string> gens;
    std::vector<std::string> flats;
    bool enumerate = false;
    bool list = false;
    std::vector<std::string> summands;
    std::string matrix;
    std::vector<unsigned> kill;

    void validate() const;
};

/// 0 pass, 1 verification failed, 2 parse or config error, 3 inconclusive.
int exit_code_for(ErrorCode code);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iwasawa
