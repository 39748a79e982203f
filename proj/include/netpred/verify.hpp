#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace netpred {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Suite {
    std::string name;
    std::function<std::vector<CheckResult>()> run;
};

// one suite per module, checks named after the invariant they assert
const std::vector<Suite>& verify_registry();
int registry_check_count();

// runs one suite ("all" for everything); prints a pass/fail table, returns
// the number of failed checks
int run_verify(const std::string& suite_name, std::ostream& out);

}  // namespace netpred
