#include "novikov/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

namespace novikov {

void Element::add_term(int index, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(index);
    if (it == coeffs_.end()) {
        coeffs_.emplace(index, c);
        return;
    }
    Scalar s = alg_->field().add(it->second, c);
    if (s.is_zero()) {
        coeffs_.erase(it);
    } else {
        it->second = s;
    }
}

Element Element::operator+(const Element& o) const {
    if (alg_ != o.alg_) throw DomainError("elements belong to different algebras");
    Element r = *this;
    for (const auto& [i, c] : o.coeffs_) r.add_term(i, c);
    return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const Scalar& c) const {
    Element r(*alg_);
    if (c.is_zero()) return r;
    for (const auto& [i, v] : coeffs_) r.add_term(i, alg_->field().mul(v, c));
    return r;
}

Element Element::operator-() const {
    Element r(*alg_);
    for (const auto& [i, v] : coeffs_) r.coeffs_.emplace(i, alg_->field().neg(v));
    return r;
}

bool Element::operator==(const Element& o) const {
    return alg_ == o.alg_ && coeffs_ == o.coeffs_;
}

std::string Element::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << alg_->label(i);
    }
    return os.str();
}

namespace {
const TableRow kEmptyRow;
}

Algebra::Algebra(Field field, std::vector<std::string> basis_labels,
                 std::map<std::pair<int, int>, TableRow> table, int dim_cap)
    : field_(std::move(field)),
      dim_(static_cast<int>(basis_labels.size())),
      labels_(std::move(basis_labels)) {
    if (dim_ <= 0) throw ParseError("algebra dimension must be positive");
    if (dim_ > dim_cap) {
        throw ParseError("dimension " + std::to_string(dim_) + " exceeds cap " +
                         std::to_string(dim_cap));
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != dim_) throw ParseError("duplicate basis label");

    for (auto& [ij, row] : table) {
        if (ij.first < 0 || ij.first >= dim_ || ij.second < 0 || ij.second >= dim_) {
            throw ParseError("table index (" + std::to_string(ij.first) + "," +
                             std::to_string(ij.second) + ") out of range");
        }
        TableRow canon;
        for (auto& [k, c] : row) {
            if (k < 0 || k >= dim_) {
                throw ParseError("table target index " + std::to_string(k) + " out of range");
            }
            if (c.modulus() != field_.characteristic()) {
                throw ParseError("table coefficient from a different field");
            }
            if (!c.is_zero()) canon.emplace_back(k, c);
        }
        std::sort(canon.begin(), canon.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t t = 1; t < canon.size(); ++t) {
            if (canon[t].first == canon[t - 1].first) {
                throw ParseError("duplicate target index " + std::to_string(canon[t].first) +
                                 " in table entry");
            }
        }
        if (!canon.empty()) table_.emplace(ij, std::move(canon));
    }
}

const TableRow& Algebra::basis_product(int i, int j) const {
    auto it = table_.find({i, j});
    return it == table_.end() ? kEmptyRow : it->second;
}

Element Algebra::basis_element(int i) const {
    if (i < 0 || i >= dim_) throw DomainError("basis index out of range");
    Element e(*this);
    e.add_term(i, field_.one());
    return e;
}

Element multiply(const Algebra& a, const Element& x, const Element& y) {
    if (&x.parent() != &a || &y.parent() != &a) {
        throw DomainError("multiply: mismatched parent algebras");
    }
    Element r(a);
    const Field& f = a.field();
    for (const auto& [i, ci] : x.coeffs()) {
        for (const auto& [j, cj] : y.coeffs()) {
            Scalar cij = f.mul(ci, cj);
            for (const auto& [k, c] : a.basis_product(i, j)) {
                r.add_term(k, f.mul(cij, c));
            }
        }
    }
    return r;
}

Element commutator(const Algebra& a, const Element& x, const Element& y) {
    return multiply(a, x, y) - multiply(a, y, x);
}

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z) {
    return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

Element right_normed_product(const Algebra& a, std::span<const Element> xs) {
    if (xs.empty()) throw DomainError("right_normed_product of empty list");
    Element r = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) r = multiply(a, r, xs[i]);
    return r;
}

namespace {

// Checks one triple; returns the first broken law in fixed order.
std::optional<Witness> check_triple(const Algebra& a, int i, int j, int k) {
    Element x = a.basis_element(i), y = a.basis_element(j), z = a.basis_element(k);
    Element lhs = associator(a, x, y, z) - associator(a, y, x, z);
    if (!lhs.is_zero()) {
        return Witness{"left-symmetry (x,y,z)=(y,x,z)",
                       {i, j, k},
                       std::make_shared<Element>(std::move(lhs))};
    }
    Element rhs = multiply(a, multiply(a, x, y), z) - multiply(a, multiply(a, x, z), y);
    if (!rhs.is_zero()) {
        return Witness{"right-commutativity (xy)z=(xz)y",
                       {i, j, k},
                       std::make_shared<Element>(std::move(rhs))};
    }
    return std::nullopt;
}

}  // namespace

Verdict is_novikov(const Algebra& a, int workers) {
    const int n = a.dim();
    const long total = static_cast<long>(n) * n * n;
    if (workers < 1) workers = 1;

    auto scan = [&](long lo, long hi) -> std::optional<std::pair<long, Witness>> {
        for (long t = lo; t < hi; ++t) {
            int k = static_cast<int>(t % n);
            int j = static_cast<int>((t / n) % n);
            int i = static_cast<int>(t / (static_cast<long>(n) * n));
            if (auto w = check_triple(a, i, j, k)) return std::make_pair(t, std::move(*w));
        }
        return std::nullopt;
    };

    std::optional<std::pair<long, Witness>> best;
    if (workers == 1) {
        best = scan(0, total);
    } else {
        std::vector<std::optional<std::pair<long, Witness>>> results(workers);
        std::vector<std::thread> pool;
        long chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            long lo = w * chunk, hi = std::min(total, lo + chunk);
            pool.emplace_back([&, w, lo, hi] { results[w] = scan(lo, hi); });
        }
        for (auto& t : pool) t.join();
        for (auto& r : results) {
            if (r && (!best || r->first < best->first)) best = r;
        }
    }

    if (!best) return Verdict{true, std::nullopt};
    return Verdict{false, std::move(best->second)};
}

}  // namespace novikov
