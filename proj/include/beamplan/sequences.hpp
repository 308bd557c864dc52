#pragma once

#include <cstddef>
#include <vector>

#include "beamplan/rational.hpp"

namespace beamplan {

enum class SeqKind { eta, mu, bernoulli, euler, ck0, dk0, beta2k };

const char* seq_kind_name(SeqKind kind);

// Finite prefix (a_0, ..., a_K) of one of the integer-indexed sequences.
struct RationalSeq {
    SeqKind kind;
    std::vector<Rational> entries;

    std::size_t order() const { return entries.size() - 1; }
    const Rational& operator[](std::size_t k) const { return entries.at(k); }

    bool operator==(const RationalSeq& other) const { return entries == other.entries; }
};

// eta_0 = 0,  eta_k = -(-1)^k / (3 (4k-1)!) - sum_{i=1}^{k} eta_{k-i} (-1)^i / (4i)!
RationalSeq eta_recursive(std::size_t K);

// mu_0 = 2,   mu_k = 4^k / (4k)! - sum_{i=1}^{k} mu_{k-i} (-1)^i / (4i)!
RationalSeq mu_recursive(std::size_t K);

// First-kind Bernoulli numbers B_0..B_N (B_1 = -1/2), via
// sum_{j=0}^{n} C(n+1, j) B_j = 0.
RationalSeq bernoulli_numbers(std::size_t N);

// Even-index Euler numbers E_0, E_2, ..., E_{2N}, via
// sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0. Entry k holds E_{2k};
// odd-index Euler numbers are zero and not stored.
RationalSeq euler_numbers(std::size_t N);

// Conjectured closed forms. Both are verified against the recursions
// in the test suite; downstream computation uses the recursions.
//   eta_k = 4^{k+1} (1 - 16^k) B_{4k} / (6 (4k)!)
RationalSeq eta_closed_form(std::size_t K);
//   mu_k  = 2 / (4^k (4k)!) * sum_{i=0}^{2k} (-1)^i E_{2i} C(4k, 2i)
RationalSeq mu_closed_form(std::size_t K);

// out_k = sum_{i=0}^{k} a_{k-i} b_i.  Both inputs must have equal length.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace beamplan
