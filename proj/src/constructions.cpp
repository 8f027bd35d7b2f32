#include "novikov/constructions.hpp"

#include <random>
#include <sstream>

namespace novikov {

namespace {

// binomial over Z with the convention C(n,k) = 0 when n < k
mpz_class binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void add_entry(std::map<std::pair<int, int>, TableRow>& table, int i, int j, int k,
               const Scalar& c) {
    if (c.is_zero()) return;
    table[{i, j}].emplace_back(k, c);
}

std::string triple_str(const Algebra& a, const Witness& w) {
    std::ostringstream os;
    os << "(" << a.label(w.tuple[0]) << "," << a.label(w.tuple[1]) << "," << a.label(w.tuple[2])
       << "): " << w.what;
    return os.str();
}

}  // namespace

Algebra example1(const Field& field) {
    std::map<std::pair<int, int>, TableRow> table;
    add_entry(table, 0, 1, 1, field.one());  // a*b = b
    return Algebra(field, {"a", "b"}, std::move(table));
}

Algebra truncated_witt(int d, const Field& field) {
    if (d < 1) throw ParseError("truncated_witt: d must be >= 1");
    std::map<std::pair<int, int>, TableRow> table;
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i + j < d) add_entry(table, i, j, i + j, field.from_int(j + 1));
        }
    }
    return Algebra(field, std::move(labels), std::move(table));
}

Algebra binomial_truncated_witt(int d, const Field& field) {
    if (d < 1) throw ParseError("binomial_truncated_witt: d must be >= 1");
    std::map<std::pair<int, int>, TableRow> table;
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back("E" + std::to_string(i));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i + j < d) add_entry(table, i, j, i + j, field.from_mpz(binom(i + j + 1, i + 1)));
        }
    }
    return Algebra(field, std::move(labels), std::move(table));
}

namespace {

// Shared assembly for the two split-extension families over R = Ke_{-1} + Ke_0
// with module span{f_{-1}..f_d}. coeff(i, j) gives the scalar of e_i e_j /
// e_i f_j (left) and f_j e_i (right) per family.
Algebra mishchenko_like(int d, const Field& field, bool binomial) {
    if (d < 1) throw ParseError("mishchenko: d must be >= 1");
    const char* e = binomial ? "E" : "e";
    const char* f = binomial ? "F" : "f";
    std::vector<std::string> labels = {std::string(e) + "-1", std::string(e) + "0"};
    for (int j = -1; j <= d; ++j) labels.push_back(std::string(f) + std::to_string(j));

    auto eidx = [](int i) { return i + 1; };        // e_{-1} -> 0, e_0 -> 1
    auto fidx = [](int j) { return 2 + (j + 1); };  // f_{-1} -> 2, ..., f_d -> d+3

    auto left_coeff = [&](int i, int j) {  // e_i (e_j or f_j)
        return binomial ? field.from_mpz(binom(i + j + 1, i + 1)) : field.from_int(j + 1);
    };
    auto right_coeff = [&](int j, int i) {  // f_j e_i
        return binomial ? field.from_mpz(binom(i + j + 1, j + 1)) : field.from_int(i + 1);
    };

    std::map<std::pair<int, int>, TableRow> table;
    for (int i = -1; i <= 0; ++i) {
        for (int j = -1; j <= 0; ++j) {
            Scalar c = left_coeff(i, j);
            if (!c.is_zero() && i + j >= -1) add_entry(table, eidx(i), eidx(j), eidx(i + j), c);
        }
    }
    for (int i = -1; i <= 0; ++i) {
        for (int j = -1; j <= d; ++j) {
            Scalar lc = left_coeff(i, j);
            if (!lc.is_zero() && i + j >= -1 && i + j <= d) {
                add_entry(table, eidx(i), fidx(j), fidx(i + j), lc);
            }
            Scalar rc = right_coeff(j, i);
            if (!rc.is_zero() && i + j >= -1 && i + j <= d) {
                add_entry(table, fidx(j), eidx(i), fidx(i + j), rc);
            }
        }
    }
    return Algebra(field, std::move(labels), std::move(table));
}

}  // namespace

Algebra mishchenko(int d, const Field& field) { return mishchenko_like(d, field, false); }

Algebra binomial_mishchenko(int d, const Field& field) { return mishchenko_like(d, field, true); }

SplitExtensionSpec split_extension_spec_of(const Algebra& a, int r_dim) {
    if (r_dim < 0 || r_dim > a.dim()) throw DomainError("split_extension_spec_of: bad r_dim");
    SplitExtensionSpec spec{a.field(), {}, {}, {}, {}, {}};
    for (int i = 0; i < r_dim; ++i) spec.r_labels.push_back(a.label(i));
    for (int i = r_dim; i < a.dim(); ++i) spec.m_labels.push_back(a.label(i));
    for (const auto& [ij, row] : a.table()) {
        auto [i, j] = ij;
        bool ri = i < r_dim, rj = j < r_dim;
        for (const auto& [k, c] : row) {
            if (ri && rj) {
                if (k >= r_dim) throw DomainError("R*R lands outside R");
                spec.r_table[{i, j}].emplace_back(k, c);
            } else if (ri && !rj) {
                if (k < r_dim) throw DomainError("R*M lands outside M");
                spec.left_action[{i, j - r_dim}].emplace_back(k - r_dim, c);
            } else if (!ri && rj) {
                if (k < r_dim) throw DomainError("M*R lands outside M");
                spec.right_action[{i - r_dim, j}].emplace_back(k - r_dim, c);
            } else {
                throw DomainError("module block is not square-zero");
            }
        }
    }
    return spec;
}

Algebra split_extension(const SplitExtensionSpec& spec) {
    const int r = static_cast<int>(spec.r_labels.size());
    std::vector<std::string> labels = spec.r_labels;
    labels.insert(labels.end(), spec.m_labels.begin(), spec.m_labels.end());

    std::map<std::pair<int, int>, TableRow> table;
    for (const auto& [ij, row] : spec.r_table) {
        for (const auto& [k, c] : row) add_entry(table, ij.first, ij.second, k, c);
    }
    for (const auto& [ij, row] : spec.left_action) {
        for (const auto& [k, c] : row) add_entry(table, ij.first, r + ij.second, r + k, c);
    }
    for (const auto& [ij, row] : spec.right_action) {
        for (const auto& [k, c] : row) add_entry(table, r + ij.first, ij.second, r + k, c);
    }
    Algebra a(spec.field, std::move(labels), std::move(table));
    Verdict v = is_novikov(a);
    if (!v.holds) {
        throw DomainError("split extension is not a Novikov algebra at " +
                          triple_str(a, *v.witness));
    }
    return a;
}

DifferentialAlgebra::DifferentialAlgebra(Algebra a, std::vector<std::vector<Scalar>> d)
    : algebra(std::move(a)), derivation(std::move(d)) {
    const int n = algebra.dim();
    if (static_cast<int>(derivation.size()) != n) {
        throw DomainError("derivation matrix has wrong size");
    }
    for (const auto& col : derivation) {
        if (static_cast<int>(col.size()) != n) throw DomainError("derivation matrix not square");
    }
    for (int i = 0; i < n; ++i) {
        Element bi = algebra.basis_element(i);
        for (int j = 0; j < n; ++j) {
            Element bj = algebra.basis_element(j);
            Element ij = multiply(algebra, bi, bj);
            Element ji = multiply(algebra, bj, bi);
            if (!(ij == ji)) {
                throw DomainError("underlying algebra not commutative at (" + algebra.label(i) +
                                  "," + algebra.label(j) + ")");
            }
            Element lhs = apply_derivation(ij);
            Element rhs = multiply(algebra, apply_derivation(bi), bj) +
                          multiply(algebra, bi, apply_derivation(bj));
            if (!(lhs == rhs)) {
                throw DomainError("Leibniz rule fails at (" + algebra.label(i) + "," +
                                  algebra.label(j) + ")");
            }
            for (int k = 0; k < n; ++k) {
                Element bk = algebra.basis_element(k);
                if (!associator(algebra, bi, bj, bk).is_zero()) {
                    throw DomainError("underlying algebra not associative at (" +
                                      algebra.label(i) + "," + algebra.label(j) + "," +
                                      algebra.label(k) + ")");
                }
            }
        }
    }
}

Element DifferentialAlgebra::apply_derivation(const Element& v) const {
    Element out(algebra);
    for (const auto& [j, c] : v.coeffs()) {
        for (int i = 0; i < algebra.dim(); ++i) {
            out.add_term(i, algebra.field().mul(c, derivation[j][i]));
        }
    }
    return out;
}

Algebra gelfand_dorfman(const DifferentialAlgebra& da) {
    const Algebra& base = da.algebra;
    const int n = base.dim();
    std::map<std::pair<int, int>, TableRow> table;
    for (int i = 0; i < n; ++i) {
        Element bi = base.basis_element(i);
        for (int j = 0; j < n; ++j) {
            Element prod = multiply(base, bi, da.apply_derivation(base.basis_element(j)));
            for (const auto& [k, c] : prod.coeffs()) add_entry(table, i, j, k, c);
        }
    }
    return Algebra(base.field(), base.labels(), std::move(table));
}

Algebra truncated_polynomial_algebra(int n, const Field& field) {
    if (n < 1) throw ParseError("truncated_polynomial_algebra: n must be >= 1");
    std::map<std::pair<int, int>, TableRow> table;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i + j < n) add_entry(table, i, j, i + j, field.one());
        }
    }
    return Algebra(field, std::move(labels), std::move(table));
}

DifferentialAlgebra scaled_polynomial_derivation(int n, const Field& field,
                                                 const std::vector<long>& q) {
    Algebra a = truncated_polynomial_algebra(n, field);
    // D(x^i) = i x^i q(x) truncated mod x^n; D preserves (x^n) by the x factor
    std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n, field.zero()));
    for (int i = 0; i < n; ++i) {
        for (size_t t = 0; t < q.size(); ++t) {
            int target = i + static_cast<int>(t);
            if (target < n && q[t] != 0) {
                d[i][target] = field.add(d[i][target], field.from_int(i * q[t]));
            }
        }
    }
    return DifferentialAlgebra(std::move(a), std::move(d));
}

DifferentialAlgebra random_differential_algebra(const Field& field, int max_n,
                                                std::uint64_t seed) {
    if (max_n < 1) throw ParseError("random_differential_algebra: max_n must be >= 1");
    std::mt19937_64 rng(seed);
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    std::vector<long> q(n);
    for (auto& c : q) c = static_cast<long>(rng() % 7) - 3;
    return scaled_polynomial_derivation(n, field, q);
}

}  // namespace novikov
