#pragma once

#include <span>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

// A linear subspace in canonical form: reduced row-echelon basis rows.
// The representation is unique per subspace, so equality is row comparison.
class Subspace {
  public:
    static Subspace zero(const Algebra& a);
    static Subspace full(const Algebra& a);
    static Subspace span(const Algebra& a, std::span<const Element> vs);

    const Algebra& parent() const { return *alg_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Element& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    Element row_element(int r) const;
    std::vector<Element> basis() const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    explicit Subspace(const Algebra& a) : alg_(&a) {}

    // Reduces v against the current rows; returns the remainder (dense).
    std::vector<Scalar> reduce(std::vector<Scalar> dense) const;
    void insert(std::vector<Scalar> dense);  // absorbs one vector, keeps RREF

    const Algebra* alg_;
    std::vector<std::vector<Scalar>> rows_;  // dense, length dim(parent)
    std::vector<int> pivots_;                // strictly increasing
};

// span of {u*v} over basis pairs of U and V
Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v);
// span of {[u,v]}
Subspace commutator_space(const Algebra& a, const Subspace& u, const Subspace& v);
// span of associators over all basis triples of the algebra
Subspace associator_space(const Algebra& a);
// least subspace containing s closed under left/right multiplication by basis
Subspace ideal_closure(const Algebra& a, const Subspace& s);
// holds iff b*u and u*b stay in U for every basis b and row u of U
Verdict is_ideal(const Algebra& a, const Subspace& u);

bool is_subalgebra(const Algebra& a, const Subspace& u);

}  // namespace novikov
