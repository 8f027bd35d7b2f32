#include "novikov/subspace.hpp"

#include <algorithm>

namespace novikov {

namespace {

std::vector<Scalar> densify(const Algebra& a, const Element& v) {
    std::vector<Scalar> d(a.dim(), a.field().zero());
    for (const auto& [i, c] : v.coeffs()) d[i] = c;
    return d;
}

}  // namespace

Subspace Subspace::zero(const Algebra& a) { return Subspace(a); }

Subspace Subspace::full(const Algebra& a) {
    Subspace s(a);
    for (int i = 0; i < a.dim(); ++i) s.insert(densify(a, a.basis_element(i)));
    return s;
}

Subspace Subspace::span(const Algebra& a, std::span<const Element> vs) {
    Subspace s(a);
    for (const Element& v : vs) {
        if (&v.parent() != &a) throw DomainError("span: mixed parent algebras");
        s.insert(densify(a, v));
    }
    return s;
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> dense) const {
    const Field& f = alg_->field();
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = dense[pivots_[r]];
        if (c.is_zero()) continue;
        for (int j = 0; j < alg_->dim(); ++j) {
            if (rows_[r][j].is_zero()) continue;
            dense[j] = f.sub(dense[j], f.mul(c, rows_[r][j]));
        }
    }
    return dense;
}

void Subspace::insert(std::vector<Scalar> dense) {
    const Field& f = alg_->field();
    dense = reduce(std::move(dense));
    int piv = -1;
    for (int j = 0; j < alg_->dim(); ++j) {
        if (!dense[j].is_zero()) {
            piv = j;
            break;
        }
    }
    if (piv < 0) return;
    Scalar inv = f.inverse(dense[piv]);
    for (auto& c : dense) c = f.mul(c, inv);
    // back-substitute into existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][piv];
        if (c.is_zero()) continue;
        for (int j = 0; j < alg_->dim(); ++j) {
            if (dense[j].is_zero()) continue;
            rows_[r][j] = f.sub(rows_[r][j], f.mul(c, dense[j]));
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(dense));
}

bool Subspace::contains(const Element& v) const {
    if (&v.parent() != alg_) throw DomainError("contains: mixed parent algebras");
    auto rem = reduce(densify(*alg_, v));
    return std::all_of(rem.begin(), rem.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.alg_ != alg_) throw DomainError("contains: mixed parent algebras");
    for (int r = 0; r < other.dim(); ++r) {
        if (!contains(other.row_element(r))) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.alg_ != alg_) throw DomainError("sum: mixed parent algebras");
    Subspace s = *this;
    for (const auto& row : other.rows_) s.insert(row);
    return s;
}

Element Subspace::row_element(int r) const {
    Element e(*alg_);
    for (int j = 0; j < alg_->dim(); ++j) e.add_term(j, rows_[r][j]);
    return e;
}

std::vector<Element> Subspace::basis() const {
    std::vector<Element> out;
    out.reserve(rows_.size());
    for (int r = 0; r < dim(); ++r) out.push_back(row_element(r));
    return out;
}

bool Subspace::operator==(const Subspace& o) const {
    return alg_ == o.alg_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v) {
    if (&u.parent() != &a || &v.parent() != &a) {
        throw DomainError("product_space: mixed parent algebras");
    }
    std::vector<Element> prods;
    for (int r = 0; r < u.dim(); ++r) {
        Element ur = u.row_element(r);
        for (int s = 0; s < v.dim(); ++s) {
            prods.push_back(multiply(a, ur, v.row_element(s)));
        }
    }
    return Subspace::span(a, prods);
}

Subspace commutator_space(const Algebra& a, const Subspace& u, const Subspace& v) {
    if (&u.parent() != &a || &v.parent() != &a) {
        throw DomainError("commutator_space: mixed parent algebras");
    }
    std::vector<Element> brs;
    for (int r = 0; r < u.dim(); ++r) {
        Element ur = u.row_element(r);
        for (int s = 0; s < v.dim(); ++s) {
            brs.push_back(commutator(a, ur, v.row_element(s)));
        }
    }
    return Subspace::span(a, brs);
}

Subspace associator_space(const Algebra& a) {
    std::vector<Element> as;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            for (int k = 0; k < a.dim(); ++k) {
                Element v = associator(a, a.basis_element(i), a.basis_element(j),
                                       a.basis_element(k));
                if (!v.is_zero()) as.push_back(std::move(v));
            }
        }
    }
    return Subspace::span(a, as);
}

Subspace ideal_closure(const Algebra& a, const Subspace& s) {
    Subspace cur = s;
    for (;;) {
        Subspace next = cur;
        for (int i = 0; i < a.dim(); ++i) {
            Element b = a.basis_element(i);
            for (int r = 0; r < cur.dim(); ++r) {
                Element u = cur.row_element(r);
                next = next.sum(Subspace::span(a, std::vector<Element>{
                                                      multiply(a, b, u), multiply(a, u, b)}));
            }
        }
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

Verdict is_ideal(const Algebra& a, const Subspace& u) {
    for (int i = 0; i < a.dim(); ++i) {
        Element b = a.basis_element(i);
        for (int r = 0; r < u.dim(); ++r) {
            Element v = u.row_element(r);
            Element left = multiply(a, b, v);
            if (!u.contains(left)) {
                return Verdict{false, Witness{"left multiple escapes subspace",
                                              {i, r},
                                              std::make_shared<Element>(std::move(left))}};
            }
            Element right = multiply(a, v, b);
            if (!u.contains(right)) {
                return Verdict{false, Witness{"right multiple escapes subspace",
                                              {i, r},
                                              std::make_shared<Element>(std::move(right))}};
            }
        }
    }
    return Verdict{true, std::nullopt};
}

bool is_subalgebra(const Algebra& a, const Subspace& u) {
    return u.contains(product_space(a, u, u));
}

}  // namespace novikov
