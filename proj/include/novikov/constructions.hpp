#pragma once

#include <cstdint>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

// A commutative associative algebra together with a derivation, given as a
// matrix over the basis (column j = image of basis vector j). Validated on
// construction: commutativity and associativity on basis pairs/triples,
// Leibniz D(uv) = D(u)v + u D(v) on basis pairs.
struct DifferentialAlgebra {
    Algebra algebra;
    std::vector<std::vector<Scalar>> derivation;  // dim x dim, column-major action

    DifferentialAlgebra(Algebra a, std::vector<std::vector<Scalar>> d);

    Element apply_derivation(const Element& v) const;
};

// Zero split extension data: subalgebra table R of dim r, module of dim m,
// and the two action tables. The assembled algebra has the module block
// square-zero; it must pass the Novikov check (that is the operational
// definition of a Novikov bimodule) or construction fails with a witness.
struct SplitExtensionSpec {
    Field field;
    std::vector<std::string> r_labels;
    std::vector<std::string> m_labels;
    std::map<std::pair<int, int>, TableRow> r_table;       // r x r -> R
    std::map<std::pair<int, int>, TableRow> left_action;   // (r, m) -> M
    std::map<std::pair<int, int>, TableRow> right_action;  // (m, r) -> M
};

// dim 2, table {a*b = b}
Algebra example1(const Field& field);

// dim d, basis e0..e_{d-1}, e_i e_j = (j+1) e_{i+j} when i+j < d.
Algebra truncated_witt(int d, const Field& field);

// dim d, basis E0..E_{d-1}, E_i E_j = C(i+j+1, i+1) E_{i+j} when i+j < d.
Algebra binomial_truncated_witt(int d, const Field& field);

// dim d+4: basis e-1, e0, f-1..f_d; zero split extension of Ke_{-1}+Ke_0 by
// the module span{f_-1..f_d}, actions e_i f_j = (j+1) f_{i+j},
// f_j e_i = (i+1) f_{j+i}, truncated at index d.
Algebra mishchenko(int d, const Field& field);

// binomial-coefficient variant of mishchenko, valid over any characteristic
Algebra binomial_mishchenko(int d, const Field& field);

SplitExtensionSpec split_extension_spec_of(const Algebra& a, int r_dim);
Algebra split_extension(const SplitExtensionSpec& spec);

// u o v = u * D(v)
Algebra gelfand_dorfman(const DifferentialAlgebra& da);

// K[x]/(x^n) with basis 1, x, ..., x^{n-1}
Algebra truncated_polynomial_algebra(int n, const Field& field);

// D = x*q(x)*d/dx on K[x]/(x^n), which preserves the ideal (x^n).
// q has the given coefficients (q[0] + q[1] x + ...).
DifferentialAlgebra scaled_polynomial_derivation(int n, const Field& field,
                                                 const std::vector<long>& q);

// seeded random ideal-preserving derivation instance, n in [1, max_n]
DifferentialAlgebra random_differential_algebra(const Field& field, int max_n,
                                                std::uint64_t seed);

}  // namespace novikov
