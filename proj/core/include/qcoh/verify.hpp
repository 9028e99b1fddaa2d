#pragma once

#include "qcoh/qh_msigma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcoh {

struct SuiteResult {
    std::string name;
    std::vector<CheckLine> lines;
    double seconds = 0.0;

    bool ok() const {
        for (const auto& line : lines)
            if (!line.pass)
                return false;
        return true;
    }
};

// The acceptance suites. Each returns one line per checked statement; the
// stated runtime limits are themselves checked lines.
SuiteResult suite_relations();                    // golden triples + recursion consistency
SuiteResult suite_quotient();                     // dimensions, annihilation, decomposition
SuiteResult suite_grr();                          // pushforward character chain
SuiteResult suite_lemma9(int max_genus = 6);      // hyperplane-power identities
SuiteResult suite_gw(int max_genus = 4);          // engine cross-checks + frozen value
SuiteResult suite_prop19();                       // genus-3 presentation facts
SuiteResult suite_quantum();                      // quantum ring sanity, genus <= 3
SuiteResult suite_kernel(unsigned seed = 0x5eed); // randomized kernel laws

// which: relations | quotient | grr | lemma9 | gw | prop19 | quantum |
// kernel | all. The genus argument narrows the genus-parameterized suites.
std::vector<SuiteResult> run_suites(const std::string& which, std::optional<int> genus);

} // namespace qcoh
