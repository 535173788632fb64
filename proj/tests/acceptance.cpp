// Copyright 2026 The Pauli Cone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints one PASS/FAIL line per acceptance criterion. With an argument, runs
// only the listed criteria. Exit status 1 if any selected criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pauli_cone/verification.hpp"

int main(int argc, char **argv) {
    std::vector<int> criteria;
    for (int i = 1; i < argc; ++i) {
        criteria.push_back(std::stoi(argv[i]));
    }
    if (criteria.empty()) {
        criteria = pauli_cone::suite_criteria("all");
    }
    bool ok = true;
    for (int c : criteria) {
        const auto r = pauli_cone::run_criterion(c);
        std::cout << pauli_cone::format_result(r) << " (" << r.seconds << " s)" << std::endl;
        ok = ok && r.passed;
    }
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
