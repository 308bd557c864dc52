#include <doctest.h>

#include <random>

#include "beamplan/sequences.hpp"

using namespace beamplan;

namespace {

std::vector<Rational> random_rationals(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    std::vector<Rational> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back(ratio(num(rng), den(rng)));
    return v;
}

}  // namespace

TEST_CASE("eta recursion start and early terms") {
    const RationalSeq eta = eta_recursive(2);
    CHECK(eta.entries[0] == Rational(0));
    CHECK(eta.entries[1] == ratio(1, 18));
    CHECK(eta.entries[2] == ratio(17, 7560));
    CHECK(eta_recursive(0).entries == std::vector<Rational>{Rational(0)});
}

TEST_CASE("mu recursion start and early terms") {
    const RationalSeq mu = mu_recursive(2);
    CHECK(mu.entries[0] == Rational(2));
    CHECK(mu.entries[1] == ratio(1, 4));
    CHECK(mu.entries[2] == ratio(31, 2880));
    CHECK(mu_recursive(0).entries == std::vector<Rational>{Rational(2)});
}

TEST_CASE("Bernoulli numbers, first kind") {
    const RationalSeq B = bernoulli_numbers(8);
    CHECK(B.entries[0] == Rational(1));
    CHECK(B.entries[1] == ratio(-1, 2));
    CHECK(B.entries[2] == ratio(1, 6));
    CHECK(B.entries[3] == Rational(0));
    CHECK(B.entries[4] == ratio(-1, 30));
    CHECK(B.entries[8] == ratio(-1, 30));
    CHECK(bernoulli_numbers(0).entries == std::vector<Rational>{Rational(1)});
}

TEST_CASE("even-index Euler numbers") {
    const RationalSeq E = euler_numbers(3);
    CHECK(E.entries[0] == Rational(1));
    CHECK(E.entries[1] == Rational(-1));   // E_2
    CHECK(E.entries[2] == Rational(5));    // E_4
    CHECK(E.entries[3] == Rational(-61));  // E_6
}

TEST_CASE("closed forms reproduce the recursions exactly") {
    const std::size_t K = 25;
    CHECK(eta_closed_form(K).entries == eta_recursive(K).entries);
    CHECK(mu_closed_form(K).entries == mu_recursive(K).entries);

    // spot values of the closed forms themselves
    const RationalSeq eta_cf = eta_closed_form(2);
    CHECK(eta_cf.entries[0] == Rational(0));  // 1 - 16^0 = 0
    CHECK(eta_cf.entries[1] == ratio(1, 18));
    CHECK(eta_cf.entries[2] == ratio(17, 7560));
    const RationalSeq mu_cf = mu_closed_form(2);
    CHECK(mu_cf.entries[0] == Rational(2));
    CHECK(mu_cf.entries[1] == ratio(1, 4));
    CHECK(mu_cf.entries[2] == ratio(31, 2880));
}

TEST_CASE("mu successive ratio approaches 1/24") {
    const RationalSeq mu = mu_recursive(11);
    const Rational target = ratio(1, 24);
    for (std::size_t k = 2; k <= 10; ++k) {
        const Rational r = mu.entries[k + 1] / mu.entries[k];
        CHECK(abs(r - target) <= ratio(5, 100) * target);
    }
}

TEST_CASE("convolution identity and scaling") {
    const RationalSeq eta = eta_recursive(6);

    std::vector<Rational> delta(7, Rational(0));
    delta[0] = Rational(1);
    CHECK(convolve(delta, eta.entries) == eta.entries);

    // impulse of height 1/2 picks out eta/2 (the bending-moment choice)
    std::vector<Rational> half(7, Rational(0));
    half[0] = ratio(1, 2);
    const auto scaled = convolve(eta.entries, half);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(scaled[k] == eta.entries[k] / 2);
}

TEST_CASE("convolving mu with the flat choice gives the flat input coefficients") {
    const RationalSeq mu = mu_recursive(4);
    std::vector<Rational> flat;
    for (std::size_t k = 0; k <= 4; ++k) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        flat.push_back(sign * ratio(2, factorial(4 * k)));
    }
    const auto beta = convolve(mu.entries, flat);
    CHECK(beta[0] == Rational(4));
    CHECK(beta[1] == ratio(1, 3));  // 2 * 4 / 4! = 1/3
    CHECK(beta[2] == ratio(2 * 16, factorial(8)));
}

TEST_CASE("convolve rejects mismatched lengths") {
    std::vector<Rational> a(3, Rational(1)), b(4, Rational(1));
    CHECK_THROWS_AS(convolve(a, b), std::invalid_argument);
}

TEST_CASE("convolve is commutative and bilinear") {
    const auto a = random_rationals(9, 11);
    const auto b = random_rationals(9, 22);
    const auto c = random_rationals(9, 33);
    CHECK(convolve(a, b) == convolve(b, a));

    const Rational p = ratio(3, 7), q = ratio(-5, 2);
    std::vector<Rational> combo(9);
    for (std::size_t i = 0; i < 9; ++i) combo[i] = p * b[i] + q * c[i];
    const auto lhs = convolve(a, combo);
    const auto ab = convolve(a, b);
    const auto ac = convolve(a, c);
    for (std::size_t i = 0; i < 9; ++i) CHECK(lhs[i] == p * ab[i] + q * ac[i]);
}

TEST_CASE("results stay in canonical reduced form") {
    for (const auto& seq :
         {eta_recursive(15), mu_recursive(15), bernoulli_numbers(20), euler_numbers(10)})
        for (const auto& v : seq.entries) CHECK(is_canonical(v));

    const auto conv = convolve(random_rationals(12, 44), random_rationals(12, 55));
    for (const auto& v : conv) CHECK(is_canonical(v));
}
