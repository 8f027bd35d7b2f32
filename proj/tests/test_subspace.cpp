#include <doctest.h>

#include <algorithm>
#include <random>

#include "novikov/constructions.hpp"
#include "novikov/subspace.hpp"

using namespace novikov;

TEST_CASE("span basics") {
    Algebra n = example1(Field::rationals());
    Element a = n.basis_element(0), b = n.basis_element(1);

    Subspace empty = Subspace::span(n, std::vector<Element>{});
    CHECK(empty.dim() == 0);

    std::vector<Element> deps{b, b.scaled(n.field().from_int(2))};
    CHECK(Subspace::span(n, deps).dim() == 1);

    Subspace full = Subspace::full(n);
    CHECK(full.dim() == 2);
    CHECK(full.contains(a + b.scaled(n.field().parse("-7/3"))));

    CHECK(empty.contains(n.zero_element()));
    CHECK_FALSE(empty.contains(b));
}

TEST_CASE("span is canonical under shuffling") {
    Algebra w = truncated_witt(6, Field::rationals());
    std::mt19937_64 rng(3);
    std::vector<Element> vs;
    for (int t = 0; t < 8; ++t) {
        Element e(w);
        for (int i = 0; i < w.dim(); ++i) {
            e.add_term(i, w.field().from_int(static_cast<long>(rng() % 5) - 2));
        }
        vs.push_back(e);
    }
    Subspace s1 = Subspace::span(w, vs);
    for (int t = 0; t < 5; ++t) {
        std::shuffle(vs.begin(), vs.end(), rng);
        CHECK(Subspace::span(w, vs) == s1);
    }
}

TEST_CASE("sum, equal, dim") {
    Algebra w = truncated_witt(4, Field::rationals());
    Subspace z = Subspace::zero(w);
    Subspace s = Subspace::span(w, std::vector<Element>{w.basis_element(1)});
    CHECK(s.sum(z) == s);
    Subspace t = Subspace::span(w, std::vector<Element>{w.basis_element(2)});
    Subspace st = s.sum(t);
    CHECK(st.dim() == 2);
    CHECK((st.contains(s) && st.contains(t)));
    CHECK(Subspace::full(w).dim() == 4);
}

TEST_CASE("commutator space of mishchenko") {
    for (int d : {1, 2, 3, 5}) {
        Algebra n = mishchenko(d, Field::rationals());
        Subspace full = Subspace::full(n);
        Subspace c = commutator_space(n, full, full);
        CHECK(c.dim() == d + 3);  // K e_-1 plus the whole module
        CHECK(c.contains(n.basis_element(0)));
        for (int j = -1; j <= d; ++j) CHECK(c.contains(n.basis_element(2 + (j + 1))));
        CHECK_FALSE(c.contains(n.basis_element(1)));  // e_0 is not a commutator
    }
}

TEST_CASE("product, commutator, associator spaces of example1") {
    Algebra n = example1(Field::rationals());
    Subspace full = Subspace::full(n);
    Element b = n.basis_element(1);
    Subspace kb = Subspace::span(n, std::vector<Element>{b});

    CHECK(product_space(n, full, full) == kb);
    CHECK(commutator_space(n, full, full) == kb);
    CHECK(associator_space(n) == kb);
    CHECK(product_space(n, full, Subspace::zero(n)).dim() == 0);
    CHECK_FALSE(commutator_space(n, full, full).contains(n.basis_element(0)));
}

TEST_CASE("associator space vanishes on associative instances") {
    Algebra p = truncated_polynomial_algebra(4, Field::rationals());
    CHECK(associator_space(p).dim() == 0);
    Subspace full = Subspace::full(p);
    CHECK(commutator_space(p, full, full).dim() == 0);  // commutative
}

TEST_CASE("module block of mishchenko is a square-zero ideal") {
    Algebra n = mishchenko(4, Field::rationals());
    std::vector<Element> fs;
    for (int i = 2; i < n.dim(); ++i) fs.push_back(n.basis_element(i));
    Subspace m = Subspace::span(n, fs);
    CHECK(product_space(n, m, m).dim() == 0);
    CHECK(is_ideal(n, m).holds);
}

TEST_CASE("ideal closure") {
    Algebra n = example1(Field::rationals());
    Subspace full = Subspace::full(n);
    CHECK(ideal_closure(n, full) == full);
    Subspace kb = Subspace::span(n, std::vector<Element>{n.basis_element(1)});
    CHECK(ideal_closure(n, kb) == kb);

    // span{f_d} closes to the whole module under the e_-1 lowering chain
    const int d = 4;
    Algebra mk = mishchenko(d, Field::rationals());
    Subspace fd = Subspace::span(mk, std::vector<Element>{mk.basis_element(mk.dim() - 1)});
    Subspace closed = ideal_closure(mk, fd);
    CHECK(closed.dim() == d + 2);
    for (int i = 2; i < mk.dim(); ++i) CHECK(closed.contains(mk.basis_element(i)));

    // idempotent and monotone
    CHECK(ideal_closure(mk, closed) == closed);
    CHECK(closed.contains(fd));
}

TEST_CASE("is_ideal witness") {
    Algebra n = example1(Field::rationals());
    Subspace ka = Subspace::span(n, std::vector<Element>{n.basis_element(0)});
    Verdict v = is_ideal(n, ka);
    REQUIRE_FALSE(v.holds);
    // least violation: a*b = b escapes Ka
    CHECK(*v.witness->value == n.basis_element(1));
    CHECK(v.witness->tuple == std::vector<int>{1, 0});
}

TEST_CASE("ideal products stay ideals") {
    Algebra n = mishchenko(3, Field::rationals());
    Subspace full = Subspace::full(n);
    Subspace i = ideal_closure(n, Subspace::span(n, std::vector<Element>{n.basis_element(2)}));
    Subspace j = commutator_space(n, full, full);
    REQUIRE(is_ideal(n, i).holds);
    REQUIRE(is_ideal(n, j).holds);
    CHECK(is_ideal(n, product_space(n, i, j)).holds);
    CHECK(is_ideal(n, commutator_space(n, i, j)).holds);
}

TEST_CASE("mixed parents rejected") {
    Algebra n1 = example1(Field::rationals());
    Algebra n2 = example1(Field::rationals());
    CHECK_THROWS_AS(Subspace::span(n1, std::vector<Element>{n2.basis_element(0)}), DomainError);
    CHECK_THROWS_AS(Subspace::full(n1).sum(Subspace::full(n2)), DomainError);
}
