#pragma once

#include <string>
#include <vector>

namespace persalg {

struct SelftestCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the built-in golden-output and property checks; `filter` keeps the
// cases whose name contains it (empty keeps everything).
std::vector<SelftestCase> run_selftest(const std::string& filter = "");

}  // namespace persalg
