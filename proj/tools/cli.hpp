#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geomet::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FixtureRow {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};
// Reproduces the published fixtures; progress lines go to `log` when given.
std::vector<FixtureRow> run_all_fixtures(std::ostream* log = nullptr);

}  // namespace geomet::cli
