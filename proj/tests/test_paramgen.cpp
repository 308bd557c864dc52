#include <doctest.h>

#include <random>

#include "beamplan/io.hpp"
#include "beamplan/paramgen.hpp"

using namespace beamplan;

namespace {

Ck0Sequence random_sequence(std::size_t K, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 25);
    Ck0Sequence s;
    for (std::size_t k = 0; k <= K; ++k) s.values.push_back(ratio(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("flat choice values") {
    const Ck0Sequence s = flat_choice(Rational(2), 3);
    CHECK(s.values[0] == Rational(2));
    CHECK(s.values[1] == ratio(-1, 12));
    CHECK(s.values[2] == ratio(2, factorial(8)));
    const Ck0Sequence zero = flat_choice(Rational(0), 3);
    for (const auto& v : zero.values) CHECK(v == 0);
}

TEST_CASE("bending-moment choice is the half impulse") {
    const Ck0Sequence s0 = bending_moment_choice(0);
    CHECK(s0.values == std::vector<Rational>{ratio(1, 2)});
    const Ck0Sequence s3 = bending_moment_choice(3);
    CHECK(s3.values == std::vector<Rational>{ratio(1, 2), 0, 0, 0});
}

TEST_CASE("build_parametrization of the flat choice") {
    const CoefficientTable t = build_parametrization(flat_choice(Rational(2), 6));
    CHECK(t.d[1][0] == ratio(1, 9));
    CHECK(t.beta2[0] == Rational(4));
    CHECK(t.beta2[1] == ratio(1, 3));
    // closed patterns for the flat choice
    for (std::size_t k = 1; k <= 6; ++k) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(t.d[k][0] == -sign * Rational(4 * k) * ratio(2, 3 * factorial(4 * k)));
        CHECK(t.beta2[k] == ratio(2 * int_pow(4, k), factorial(4 * k)));
    }
}

TEST_CASE("build_parametrization of the bending-moment choice") {
    const CoefficientTable t = build_parametrization(bending_moment_choice(6));
    const RationalSeq eta = eta_recursive(6);
    const RationalSeq mu = mu_recursive(6);
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(t.d[k][0] == eta.entries[k] / 2);
        CHECK(t.beta2[k] == mu.entries[k] / 2);
    }
    CHECK(t.beta2[0] == Rational(1));
}

TEST_CASE("zero sequence gives the zero table") {
    Ck0Sequence z;
    z.values.assign(5, Rational(0));
    const CoefficientTable t = build_parametrization(z);
    for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(t.beta2[k] == 0);
        for (std::size_t i = 0; i <= k; ++i) {
            CHECK(t.c[k][i] == 0);
            CHECK(t.d[k][i] == 0);
        }
    }
}

TEST_CASE("table invariants") {
    const CoefficientTable t = build_parametrization(random_sequence(8, 7));
    CHECK(t.d[0][0] == 0);
    for (std::size_t k = 0; k <= t.K; ++k) CHECK(t.d[k][k] == 0);
    CHECK(t.beta2[0] == 2 * t.c[0][0]);
}

TEST_CASE("recursion oracle base cases") {
    std::vector<Rational> beta2{Rational(2), 0, 0};
    const CoefficientTable t = recursion_oracle(beta2);
    CHECK(t.c[0][0] == Rational(1));  // alpha_0 = z^2 for beta_0 = 2
    const SpatialPolynomial alpha0 = alpha_polynomial(t, 0);
    CHECK(alpha0.coeff(2) == Rational(1));
    CHECK(alpha0.terms().size() == 1);

    const CoefficientTable zero = recursion_oracle({Rational(0), 0, 0});
    for (std::size_t k = 0; k <= 2; ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            CHECK(zero.c[k][i] == 0);
            CHECK(zero.d[k][i] == 0);
        }
}

TEST_CASE("oracle reproduces the convolution build exactly") {
    const CoefficientTable built = build_parametrization(flat_choice(Rational(2), 6));
    CHECK(recursion_oracle(built.beta2) == built);

    for (unsigned seed : {101u, 202u, 303u}) {
        const CoefficientTable t = build_parametrization(random_sequence(12, seed));
        CHECK(recursion_oracle(t.beta2) == t);
    }
}

TEST_CASE("extract_ck0 round trip") {
    Ck0Sequence s;
    s.values = {Rational(1), Rational(7), Rational(-3)};
    CHECK(extract_ck0(build_parametrization(s)).values == s.values);

    const Ck0Sequence flat = flat_choice(Rational(2), 4);
    CHECK(extract_ck0(build_parametrization(flat)).values == flat.values);

    Ck0Sequence zero;
    zero.values.assign(4, Rational(0));
    CHECK(extract_ck0(build_parametrization(zero)).values == zero.values);

    for (unsigned seed : {5u, 6u, 7u}) {
        const Ck0Sequence r = random_sequence(10, seed);
        CHECK(extract_ck0(build_parametrization(r)).values == r.values);
    }
}

TEST_CASE("alpha polynomials") {
    const CoefficientTable flat = build_parametrization(flat_choice(Rational(2), 2));
    const SpatialPolynomial a0 = alpha_polynomial(flat, 0);
    CHECK(a0.coeff(2) == Rational(2));
    CHECK(a0.terms().size() == 1);

    const CoefficientTable bending = build_parametrization(bending_moment_choice(2));
    const SpatialPolynomial b0 = alpha_polynomial(bending, 0);
    CHECK(b0.coeff(2) == ratio(1, 2));
    CHECK(b0.terms().size() == 1);

    const SpatialPolynomial b1 = alpha_polynomial(bending, 1);
    CHECK(b1.coeff(6) == ratio(-1, 720));
    CHECK(b1.coeff(3) == ratio(1, 36));
    CHECK(b1.terms().size() == 2);

    CHECK_THROWS_AS(alpha_polynomial(bending, 3), std::out_of_range);
}

TEST_CASE("formal-solution verification is exact") {
    CHECK(verify_formal_solution(build_parametrization(flat_choice(Rational(2), 6))).pass);
    CHECK(verify_formal_solution(build_parametrization(bending_moment_choice(6))).pass);

    for (unsigned seed : {71u, 72u, 73u, 74u}) {
        const auto report =
            verify_formal_solution(build_parametrization(random_sequence(10, seed)));
        CHECK(report.pass);
        for (const auto& lvl : report.levels) CHECK(lvl.pass);
    }
}

TEST_CASE("fault injection is caught at the corrupted level") {
    CoefficientTable t = build_parametrization(random_sequence(6, 99));
    t.c[2][1] += ratio(1, 5);
    const auto report = verify_formal_solution(t);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.levels[2].ode_zero);  // fourth-derivative residual at level 2
    CHECK(report.levels[1].pass);
}

TEST_CASE("printed flat closed forms differ from the recursion by a factor 2") {
    const ClosedFormCheck check = flat_closed_form_check(Rational(2), 5);
    CHECK(check.matches_series_form);
    CHECK_FALSE(check.matches_printed_closed_form);
    CHECK(check.printed_over_recursion_c == Rational(2));
    CHECK(check.printed_over_recursion_d == Rational(2));
    CHECK(check.beta2_recursion == check.beta2_series_form);
    CHECK(check.beta2_recursion[1] == ratio(1, 3));

    // the specific entry: recursion -1/180, printed form -1/90
    const CoefficientTable t = build_parametrization(flat_choice(Rational(2), 1));
    CHECK(t.c[1][1] == ratio(-1, 180));
    const Rational printed = Rational(4) * Rational(-1) * ratio(1, factorial(6)) * Rational(2);
    CHECK(printed == ratio(-1, 90));
}

TEST_CASE("steady-state profile") {
    const CoefficientTable bending = build_parametrization(bending_moment_choice(2));
    const SpatialPolynomial p = steady_state_profile(bending, Rational(1));
    CHECK(p.coeff(2) == ratio(1, 2));

    const CoefficientTable flat = build_parametrization(flat_choice(Rational(2), 2));
    CHECK(steady_state_profile(flat, ratio(1, 4)).coeff(2) == ratio(1, 2));
    CHECK(steady_state_profile(flat, Rational(0)).is_zero());
}

TEST_CASE("linearity of the build") {
    const Ck0Sequence s1 = random_sequence(7, 301);
    const Ck0Sequence s2 = random_sequence(7, 302);
    const Rational a = ratio(2, 3), b = ratio(-7, 4);

    Ck0Sequence combo;
    for (std::size_t k = 0; k <= 7; ++k) combo.values.push_back(a * s1.values[k] + b * s2.values[k]);

    const CoefficientTable t1 = build_parametrization(s1);
    const CoefficientTable t2 = build_parametrization(s2);
    const CoefficientTable tc = build_parametrization(combo);
    for (std::size_t k = 0; k <= 7; ++k) {
        CHECK(tc.beta2[k] == a * t1.beta2[k] + b * t2.beta2[k]);
        for (std::size_t i = 0; i <= k; ++i) {
            CHECK(tc.c[k][i] == a * t1.c[k][i] + b * t2.c[k][i]);
            CHECK(tc.d[k][i] == a * t1.d[k][i] + b * t2.d[k][i]);
        }
    }
}

TEST_CASE("physical normalization scales") {
    const auto unit = normalize_physical(1.0, 1.0, 1.0);
    CHECK(unit.space_scale == 1.0);
    CHECK(unit.time_scale == 1.0);

    const auto timed = normalize_physical(1.0, (1000.0 / 2.3) * (1000.0 / 2.3), 1.0);
    CHECK(timed.time_scale == doctest::Approx(1000.0 / 2.3).epsilon(1e-14));
    CHECK(0.0115 * timed.time_scale == doctest::Approx(5.0).epsilon(1e-12));

    const auto longer = normalize_physical(1.0, 1.0, 2.0);
    CHECK(longer.space_scale == doctest::Approx(0.5));
    CHECK(longer.time_scale == doctest::Approx(0.25));

    CHECK_THROWS_AS(normalize_physical(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(normalize_physical(1.0, -2.0, 1.0), std::invalid_argument);
}

TEST_CASE("table JSON round trip") {
    const CoefficientTable t = build_parametrization(random_sequence(6, 404));
    const CoefficientTable back = table_from_json(table_to_json(t));
    CHECK(back == t);
    CHECK_THROWS(table_from_json("{ not json"));
}
