#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

enum class CheckStatus { Pass, Fail, HypothesisNotSatisfied, NotApplicable };

std::string check_status_name(CheckStatus s);

struct CheckResult {
    std::string id;      // L1, C1, L2, C2a, C2b, L3, L4, L5, T1, SZ
    CheckStatus status;
    std::string detail;  // witness or reason, empty on plain pass
};

struct SuiteResult {
    std::vector<CheckResult> checks;  // fixed order, every id exactly once
    bool lie_metabelian = false;

    bool any_fail() const;
    const CheckResult& get(const std::string& id) const;
};

// Runs every structural check on one Novikov instance. Checks whose
// hypotheses need characteristic != 2 report hypothesis-not-satisfied over
// F_2; checks needing Lie-metabelianity report not-applicable otherwise.
// Pre: a passes is_novikov.
SuiteResult run_suite(const Algebra& a);

struct CorpusItem {
    std::string name;
    bool constructed = false;
    bool novikov = false;
    std::string error;  // construction / axiom failure
    SuiteResult suite;  // valid only when novikov
};

struct CorpusReport {
    std::uint64_t seed = 0;
    std::vector<CorpusItem> items;
    int failures = 0;  // items with any fail status, non-Novikov, or errors
};

// A corpus entry: a named construction with parameters.
struct ConstructionDescriptor {
    std::string kind;  // example1 | truncated-witt | binomial-truncated-witt |
                       // mishchenko | binomial-mishchenko | gelfand-dorfman
    int d = 1;
    Field field = Field::rationals();
    std::uint64_t seed = 0;  // gelfand-dorfman only

    std::string describe() const;
};

Algebra build_construction(const ConstructionDescriptor& desc);

// Example 1; truncated_witt d=2..8 over Q; mishchenko d=1..8 over Q;
// binomial_mishchenko d=1..8 over F_2, F_3, F_5, F_7; 50 seeded random
// Gelfand-Dorfman instances.
std::vector<ConstructionDescriptor> default_corpus(std::uint64_t seed);

CorpusReport run_corpus(const std::vector<ConstructionDescriptor>& specs, std::uint64_t seed);

// Exploratory search over small random F_2 tables for a Novikov instance
// whose commutator space fails to be an ideal. Returns a description of a
// hit, or a summary line when none is found within the attempt budget.
std::string char2_explore(std::uint64_t seed, int attempts);

}  // namespace novikov
