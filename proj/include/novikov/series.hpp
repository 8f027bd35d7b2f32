#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novikov/subspace.hpp"

namespace novikov {

enum class SeriesKind { Power, RightPower, Derived, LieDerived };

// Trace of one series run. dims lists the dimensions of the computed terms
// starting from the series' own first exponent: U^1 for powers and right
// powers, U^(0) resp. D_0 = U for derived and Lie-derived. index is the least
// exponent m (in the same numbering) whose term is zero.
struct SeriesReport {
    SeriesKind kind;
    std::vector<int> dims;
    bool terminated = false;
    std::optional<int> index;
    bool stabilized_nonzero = false;
};

std::string series_kind_name(SeriesKind k);

// U^m = sum_{i=1}^{m-1} U^i U^{m-i}; pre: U is a subalgebra of A.
SeriesReport power_series(const Algebra& a, const Subspace& u);
// U^[m+1] = U^[m] U; pre: U subalgebra.
SeriesReport right_power_series(const Algebra& a, const Subspace& u);
// U^(0) = U, U^(m) = U^(m-1) U^(m-1); pre: U subalgebra.
SeriesReport derived_series(const Algebra& a, const Subspace& u);
// D_0 = U, D_m = [D_{m-1}, D_{m-1}]; pre: U closed under commutator.
SeriesReport lie_derived_series(const Algebra& a, const Subspace& u);

struct Classification {
    bool nilpotent = false;
    bool right_nilpotent = false;
    bool solvable = false;
    bool lie_solvable = false;
    SeriesReport power, right_power, derived, lie_derived;
    // solvable <=> right nilpotent <=> N^2 nilpotent all agree.
    std::optional<bool> square_nilpotent;  // unset when N^2 is not a subalgebra
    bool sz_consistent = true;
};

// Runs all four series on the full space plus the consistency cross-check.
Classification classify(const Algebra& a);

}  // namespace novikov
