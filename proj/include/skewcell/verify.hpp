#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewcell {

struct VerifyLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyLine> lines;

    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int max_level = 0;  // 0 means the suite's own default scope
    uint64_t seed = 0;
};

std::vector<std::string> verify_suite_names();
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace skewcell
