#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "novikov/field.hpp"

namespace novikov {

class Algebra;

// Sparse coefficient vector over the basis of a fixed parent algebra.
class Element {
  public:
    explicit Element(const Algebra& parent) : alg_(&parent) {}

    const Algebra& parent() const { return *alg_; }
    const std::map<int, Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Drops the entry when the result is zero; keeps the canonical form.
    void add_term(int index, const Scalar& c);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(const Scalar& c) const;
    Element operator-() const;

    bool operator==(const Element& o) const;

    std::string str() const;  // with basis labels

  private:
    const Algebra* alg_;
    std::map<int, Scalar> coeffs_;
};

// Outcome of an exhaustive check. On failure the witness names the offending
// basis tuple (lexicographically least) and the nonzero discrepancy.
struct Witness {
    std::string what;                // which law broke, human readable
    std::vector<int> tuple;          // basis indices
    std::shared_ptr<Element> value;  // the nonzero discrepancy
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;
};

using TableRow = std::vector<std::pair<int, Scalar>>;  // sorted by k, zero-free

// A finite-dimensional algebra given by structure constants c_{ij}^k.
// Immutable after construction; absent (i,j) entries mean zero product.
class Algebra {
  public:
    static constexpr int kDefaultDimCap = 512;

    Algebra(Field field, std::vector<std::string> basis_labels,
            std::map<std::pair<int, int>, TableRow> table, int dim_cap = kDefaultDimCap);

    const Field& field() const { return field_; }
    int dim() const { return dim_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::map<std::pair<int, int>, TableRow>& table() const { return table_; }

    // c_{ij}^* row; empty row for zero products.
    const TableRow& basis_product(int i, int j) const;

    Element zero_element() const { return Element(*this); }
    Element basis_element(int i) const;

  private:
    Field field_;
    int dim_;
    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, TableRow> table_;
};

Element multiply(const Algebra& a, const Element& x, const Element& y);
Element commutator(const Algebra& a, const Element& x, const Element& y);
Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z);

// (...((x1 x2) x3)...) xk
Element right_normed_product(const Algebra& a, std::span<const Element> xs);

// Exhaustive check of left-symmetry (x,y,z)=(y,x,z) and right-commutativity
// (xy)z=(xz)y on all basis triples. Deterministic least witness regardless of
// the worker count.
Verdict is_novikov(const Algebra& a, int workers = 1);

}  // namespace novikov
