#include "novikov/series.hpp"

#include <functional>

namespace novikov {

std::string series_kind_name(SeriesKind k) {
    switch (k) {
        case SeriesKind::Power: return "power";
        case SeriesKind::RightPower: return "right-power";
        case SeriesKind::Derived: return "derived";
        case SeriesKind::LieDerived: return "lie-derived";
    }
    return "?";
}

namespace {

void require_subalgebra(const Algebra& a, const Subspace& u, const char* who) {
    if (!is_subalgebra(a, u)) {
        throw DomainError(std::string(who) + ": subspace is not a subalgebra");
    }
}

// Iterates V <- step(V) starting from the given term, recording dims.
// first_exponent is the exponent of `start` in the series' own numbering.
SeriesReport iterate_descending(SeriesKind kind, Subspace start, int first_exponent,
                                const std::function<Subspace(const Subspace&)>& step) {
    SeriesReport rep{kind, {}, false, std::nullopt, false};
    Subspace cur = std::move(start);
    int exponent = first_exponent;
    for (;;) {
        rep.dims.push_back(cur.dim());
        if (cur.dim() == 0) {
            rep.terminated = true;
            rep.index = exponent;
            return rep;
        }
        Subspace next = step(cur);
        if (next == cur) {
            rep.stabilized_nonzero = true;  // fixpoint: constant from here on
            return rep;
        }
        cur = std::move(next);
        ++exponent;
    }
}

}  // namespace

SeriesReport power_series(const Algebra& a, const Subspace& u) {
    require_subalgebra(a, u, "power_series");
    SeriesReport rep{SeriesKind::Power, {}, false, std::nullopt, false};
    std::vector<Subspace> terms;  // terms[m-1] = U^m
    terms.push_back(u);
    rep.dims.push_back(u.dim());
    if (u.dim() == 0) {
        rep.terminated = true;
        rep.index = 1;
        return rep;
    }
    const int cap = a.dim() + 2;  // steps allowed past the last dimension drop
    int since_drop = 0;
    for (int m = 2;; ++m) {
        Subspace next = Subspace::zero(a);
        for (int i = 1; i <= m - 1; ++i) {
            next = next.sum(product_space(a, terms[i - 1], terms[m - i - 1]));
        }
        rep.dims.push_back(next.dim());
        if (next.dim() == 0) {
            rep.terminated = true;
            rep.index = m;
            return rep;
        }
        since_drop = (next.dim() < terms.back().dim()) ? 0 : since_drop + 1;
        terms.push_back(std::move(next));
        if (since_drop >= cap) {
            // descending chain with no drop for cap steps: the recurrence window
            // is frozen, every later term equals the current one
            if (terms.back() != terms[terms.size() - 2]) {
                throw Error("power_series: no stabilization within iteration cap");
            }
            rep.stabilized_nonzero = true;
            return rep;
        }
    }
}

SeriesReport right_power_series(const Algebra& a, const Subspace& u) {
    require_subalgebra(a, u, "right_power_series");
    return iterate_descending(SeriesKind::RightPower, u, 1,
                              [&](const Subspace& v) { return product_space(a, v, u); });
}

SeriesReport derived_series(const Algebra& a, const Subspace& u) {
    require_subalgebra(a, u, "derived_series");
    return iterate_descending(SeriesKind::Derived, u, 0,
                              [&](const Subspace& v) { return product_space(a, v, v); });
}

SeriesReport lie_derived_series(const Algebra& a, const Subspace& u) {
    if (!u.contains(commutator_space(a, u, u))) {
        throw DomainError("lie_derived_series: subspace not closed under commutator");
    }
    return iterate_descending(SeriesKind::LieDerived, u, 0,
                              [&](const Subspace& v) { return commutator_space(a, v, v); });
}

Classification classify(const Algebra& a) {
    Classification c;
    Subspace full = Subspace::full(a);
    c.power = power_series(a, full);
    c.right_power = right_power_series(a, full);
    c.derived = derived_series(a, full);
    c.lie_derived = lie_derived_series(a, full);
    c.nilpotent = c.power.terminated;
    c.right_nilpotent = c.right_power.terminated;
    c.solvable = c.derived.terminated;
    c.lie_solvable = c.lie_derived.terminated;

    Subspace square = product_space(a, full, full);
    if (is_subalgebra(a, square)) {
        c.square_nilpotent = power_series(a, square).terminated;
    }
    c.sz_consistent = (c.solvable == c.right_nilpotent) &&
                      (!c.square_nilpotent || *c.square_nilpotent == c.solvable);
    return c;
}

}  // namespace novikov
