#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "iwasawa/cli.hpp"

namespace clirun {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

inline Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "iwasawa");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = iwasawa::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return Result{code, out.str(), err.str()};
}

inline std::string write_temp(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "iwasawa_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace clirun
