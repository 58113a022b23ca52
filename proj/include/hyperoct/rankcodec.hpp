#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperoct/numeral.hpp"
#include "hyperoct/sigperm.hpp"

namespace hyperoct {

/// A rank in [1, 2^n n!].
using Rank = BigCount;

/// Result of folding a digit gamma in {0, ..., 2l+1} onto {0, ..., l}.
struct FoldedDigit
{
    std::size_t m;
    int sign; //!< +1 or -1

    friend bool operator==(FoldedDigit const&, FoldedDigit const&) = default;
};

/*!
 * Fold a digit of level l: (gamma, +1) if gamma <= l, else
 * (1 + 2l - gamma, -1). Throws InvalidDigit if gamma > 2l+1.
 */
FoldedDigit fold_digit(std::size_t level, HyperNumeral::Digit gamma);

/*!
 * Unsigned inversion table m = (m_{n-1}, ..., m_0) and the signs produced
 * alongside it, both stored most significant first so that entry k belongs
 * to window position k+1.
 */
struct SignedLehmerPair
{
    std::vector<std::size_t> m;
    std::vector<int> eps;

    friend bool operator==(SignedLehmerPair const&, SignedLehmerPair const&) = default;
};

/// Apply fold_digit to every digit of a fixed-width numeral of width n.
SignedLehmerPair fold_digits(HyperNumeral const& digits);

/*!
 * Selection-and-deletion decoding of an inversion table: sigma_k is the
 * (1 + m[k-1])-th smallest value not yet taken. Entry k (0-based) must be at
 * most n-1-k. Returns sigma as values 1..n.
 */
std::vector<int> decode_lehmer(std::span<std::size_t const> m);

/// Fixed-width numeral inv_1 : ... : inv_n of p.
HyperNumeral code_numeral(SignedPermutation const& p);

/// 1 + value of the inversion code read as a numeral.
Rank rank(SignedPermutation const& p);

/// The element of B_n whose inversion code equals the given n-digit numeral.
SignedPermutation from_code(HyperNumeral const& digits);

/// Intermediate values of an unranking, exposed for inspection.
struct UnrankTrace
{
    HyperNumeral digits; //!< k-1 written with exactly n digits
    SignedLehmerPair lehmer;
    std::vector<int> sigma;
    SignedPermutation result;
};

/// Throws RankOutOfRange unless 1 <= k <= 2^n n!.
UnrankTrace unrank_trace(Rank const& k, Degree n);
SignedPermutation unrank(Rank const& k, Degree n);

} // namespace hyperoct
