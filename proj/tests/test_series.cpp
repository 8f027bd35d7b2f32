#include <doctest.h>

#include "novikov/constructions.hpp"
#include "novikov/series.hpp"

using namespace novikov;

TEST_CASE("example1 series") {
    Algebra n = example1(Field::rationals());
    Subspace full = Subspace::full(n);

    SeriesReport p = power_series(n, full);
    CHECK_FALSE(p.terminated);
    CHECK(p.stabilized_nonzero);
    REQUIRE(p.dims.size() >= 2);
    CHECK(p.dims[0] == 2);
    for (size_t i = 1; i < p.dims.size(); ++i) CHECK(p.dims[i] == 1);  // N^m = Kb, m >= 2

    SeriesReport rp = right_power_series(n, full);
    CHECK(rp.terminated);
    CHECK(*rp.index == 3);  // N^[2] = Kb, N^[3] = 0

    SeriesReport ds = derived_series(n, full);
    CHECK(ds.terminated);
    CHECK(*ds.index == 2);  // N^(1) = Kb, N^(2) = 0
}

TEST_CASE("zero algebra series") {
    Algebra z(Field::rationals(), {"z"}, {});
    Subspace full = Subspace::full(z);
    CHECK(*power_series(z, full).index == 2);
    CHECK(*right_power_series(z, full).index == 2);
    CHECK(*derived_series(z, full).index == 1);
    CHECK(*lie_derived_series(z, full).index == 1);
    CHECK(*right_power_series(z, Subspace::zero(z)).index == 1);
}

TEST_CASE("abelian algebra is lie-solvable of index 1") {
    Algebra p = truncated_polynomial_algebra(3, Field::rationals());
    CHECK(*lie_derived_series(p, Subspace::full(p)).index == 1);
}

TEST_CASE("mishchenko lie derived series has index 3") {
    for (int d = 1; d <= 6; ++d) {
        Algebra n = mishchenko(d, Field::rationals());
        SeriesReport lr = lie_derived_series(n, Subspace::full(n));
        REQUIRE(lr.terminated);
        CHECK(*lr.index == 3);
        // D_2 lies inside the module block
        CHECK(lr.dims[2] <= d + 2);
        CHECK(lr.dims[2] > 0);
    }
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        Algebra n = binomial_mishchenko(4, Field::prime(p));
        CHECK(*lie_derived_series(n, Subspace::full(n)).index == 3);
    }
}

TEST_CASE("commutator ideal of mishchenko: right power index 3, power index >= d+2") {
    for (int d = 2; d <= 6; ++d) {
        Algebra n = mishchenko(d, Field::rationals());
        Subspace full = Subspace::full(n);
        Subspace comm = commutator_space(n, full, full);

        SeriesReport rp = right_power_series(n, comm);
        REQUIRE(rp.terminated);
        CHECK(*rp.index == 3);  // [N,N]^[2] in M, M*[N,N] = 0

        SeriesReport pw = power_series(n, comm);
        REQUIRE(pw.terminated);
        CHECK(*pw.index >= d + 2);  // the e_-1 lowering chain survives d+1 steps
    }
}

TEST_CASE("truncated witt: solvable matches right nilpotent") {
    for (int d = 2; d <= 8; ++d) {
        Algebra w = truncated_witt(d, Field::rationals());
        Subspace full = Subspace::full(w);
        CHECK(derived_series(w, full).terminated == right_power_series(w, full).terminated);
    }
}

TEST_CASE("power series dims are non-increasing from the second term") {
    Algebra n = mishchenko(4, Field::rationals());
    SeriesReport p = power_series(n, Subspace::full(n));
    for (size_t i = 2; i < p.dims.size(); ++i) CHECK(p.dims[i] <= p.dims[i - 1]);
}

TEST_CASE("series preconditions") {
    Algebra n = mishchenko(2, Field::rationals());
    // span{e_-1, f_2} is not a subalgebra: e_-1 f_2 = 3 f_1 escapes
    Subspace bad = Subspace::span(
        n, std::vector<Element>{n.basis_element(0), n.basis_element(n.dim() - 1)});
    CHECK_THROWS_AS(power_series(n, bad), DomainError);
    CHECK_THROWS_AS(right_power_series(n, bad), DomainError);
    CHECK_THROWS_AS(derived_series(n, bad), DomainError);
    CHECK_THROWS_AS(lie_derived_series(n, bad), DomainError);
}

TEST_CASE("classify example1") {
    Classification c = classify(example1(Field::rationals()));
    CHECK_FALSE(c.nilpotent);
    CHECK(c.right_nilpotent);
    CHECK(*c.right_power.index == 3);
    CHECK(c.solvable);
    CHECK(*c.derived.index == 2);
    CHECK(c.lie_solvable);
    CHECK(c.sz_consistent);
    REQUIRE(c.square_nilpotent.has_value());
    CHECK(*c.square_nilpotent);
}

TEST_CASE("classify zero algebra") {
    Classification c = classify(Algebra(Field::rationals(), {"z"}, {}));
    CHECK(c.nilpotent);
    CHECK(c.right_nilpotent);
    CHECK(c.solvable);
    CHECK(c.lie_solvable);
    CHECK(c.sz_consistent);
}

TEST_CASE("classify mishchenko(5)") {
    Classification c = classify(mishchenko(5, Field::rationals()));
    CHECK_FALSE(c.nilpotent);
    // e_0 is idempotent, so N itself is neither solvable nor right nilpotent;
    // only the Lie structure is solvable
    CHECK_FALSE(c.right_nilpotent);
    CHECK_FALSE(c.solvable);
    CHECK(c.lie_solvable);
    CHECK(*c.lie_derived.index == 3);
    CHECK(c.sz_consistent);
}
