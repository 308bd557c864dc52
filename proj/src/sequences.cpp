#include "beamplan/sequences.hpp"

#include <stdexcept>

namespace beamplan {

const char* seq_kind_name(SeqKind kind) {
    switch (kind) {
        case SeqKind::eta: return "eta";
        case SeqKind::mu: return "mu";
        case SeqKind::bernoulli: return "bernoulli";
        case SeqKind::euler: return "euler";
        case SeqKind::ck0: return "ck0";
        case SeqKind::dk0: return "dk0";
        case SeqKind::beta2k: return "beta2k";
    }
    return "?";
}

namespace {
Rational alt_sign(std::size_t k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }
}  // namespace

RationalSeq eta_recursive(std::size_t K) {
    RationalSeq seq{SeqKind::eta, {Rational(0)}};
    seq.entries.reserve(K + 1);
    for (std::size_t k = 1; k <= K; ++k) {
        Rational v = -alt_sign(k) * ratio(1, 3 * factorial(4 * k - 1));
        for (std::size_t i = 1; i <= k; ++i)
            v -= seq.entries[k - i] * alt_sign(i) * ratio(1, factorial(4 * i));
        seq.entries.push_back(v);
    }
    return seq;
}

RationalSeq mu_recursive(std::size_t K) {
    RationalSeq seq{SeqKind::mu, {Rational(2)}};
    seq.entries.reserve(K + 1);
    for (std::size_t k = 1; k <= K; ++k) {
        Rational v = ratio(int_pow(4, k), factorial(4 * k));
        for (std::size_t i = 1; i <= k; ++i)
            v -= seq.entries[k - i] * alt_sign(i) * ratio(1, factorial(4 * i));
        seq.entries.push_back(v);
    }
    return seq;
}

RationalSeq bernoulli_numbers(std::size_t N) {
    RationalSeq seq{SeqKind::bernoulli, {Rational(1)}};
    seq.entries.reserve(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        Rational s(0);
        for (std::size_t j = 0; j < n; ++j)
            s += Rational(binomial(n + 1, j)) * seq.entries[j];
        seq.entries.push_back(-s / Rational(n + 1));
    }
    return seq;
}

RationalSeq euler_numbers(std::size_t N) {
    RationalSeq seq{SeqKind::euler, {Rational(1)}};
    seq.entries.reserve(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        Rational s(0);
        for (std::size_t j = 0; j < n; ++j)
            s += Rational(binomial(2 * n, 2 * j)) * seq.entries[j];
        seq.entries.push_back(-s);
    }
    return seq;
}

RationalSeq eta_closed_form(std::size_t K) {
    const RationalSeq B = bernoulli_numbers(4 * K);
    RationalSeq seq{SeqKind::eta, {}};
    seq.entries.reserve(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        const Rational factor =
            ratio(int_pow(4, k + 1) * (Integer(1) - int_pow(16, k)), 6 * factorial(4 * k));
        seq.entries.push_back(factor * B.entries[4 * k]);
    }
    return seq;
}

RationalSeq mu_closed_form(std::size_t K) {
    const RationalSeq E = euler_numbers(2 * K);
    RationalSeq seq{SeqKind::mu, {}};
    seq.entries.reserve(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        Rational s(0);
        for (std::size_t i = 0; i <= 2 * k; ++i)
            s += alt_sign(i) * E.entries[i] * Rational(binomial(4 * k, 2 * i));
        seq.entries.push_back(ratio(2, int_pow(4, k) * factorial(4 * k)) * s);
    }
    return seq;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("convolve: length mismatch");
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i)
            out[k] += a[k - i] * b[i];
    return out;
}

}  // namespace beamplan
