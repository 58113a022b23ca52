#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/numeral.hpp"

namespace hyperoct {

using Degree = std::size_t;

/*!
 * Element of the hyperoctahedral group B_n, stored as its window word
 * (pi(1), ..., pi(n)).
 *
 * The absolute values of the window are exactly {1, ..., n} and no entry is
 * zero; pi on negative arguments follows from pi(-i) = -pi(i). The factored
 * form (sigma, epsilon) is derived on demand.
 */
class SignedPermutation
{
  public:
    using Value = int;

    /// The empty element of B_0.
    SignedPermutation() = default;

    /// Throws InvalidPermutation unless the window is a signed permutation.
    explicit SignedPermutation(std::vector<Value> window);

    static SignedPermutation identity(Degree n);

    Degree degree() const noexcept { return window_.size(); }
    std::span<Value const> window() const noexcept { return window_; }

    /// pi(i) for i in [-n, -1] u [1, n].
    Value operator()(Value i) const;

    /// |pi(1)| ... |pi(n)|, an ordinary permutation of 1..n.
    std::vector<Value> unsigned_part() const;
    /// Sign of each window entry, +1 or -1.
    std::vector<Value> signs() const;

    friend bool operator==(SignedPermutation const&, SignedPermutation const&) = default;

  private:
    std::vector<Value> window_;
};

/// (p o q)(i) = p(q(i)).
SignedPermutation compose(SignedPermutation const& p, SignedPermutation const& q);
SignedPermutation inverse(SignedPermutation const& p);

/// Signed decimal integers separated by spaces and/or commas, e.g. "1 -3 4 2".
SignedPermutation parse_window(std::string_view text);
/// Space-separated window word.
std::string format_window(SignedPermutation const& p);

//---------------------------------------------------------------------------//
// Type B root system
//---------------------------------------------------------------------------//

/// Positive root e_i, e_i + e_j or e_i - e_j (1-based indices).
struct Root
{
    enum class Kind
    {
        e,
        plus,
        minus
    };

    Kind kind = Kind::e;
    Degree i = 1;
    Degree j = 0; //!< unused for Kind::e

    static Root single(Degree i) { return {Kind::e, i, 0}; }
    static Root sum(Degree i, Degree j) { return {Kind::plus, i, j}; }
    static Root difference(Degree i, Degree j) { return {Kind::minus, i, j}; }
};

/// Sparse integer vector in R^n, terms sorted by index with zero terms dropped.
class RootVector
{
  public:
    struct Term
    {
        Degree index;
        int coefficient;

        friend bool operator==(Term const&, Term const&) = default;
    };

    RootVector() = default;
    explicit RootVector(std::vector<Term> terms);

    static RootVector from_root(Root const& r);

    std::span<Term const> terms() const noexcept { return terms_; }

    RootVector operator-() const;

    friend bool operator==(RootVector const&, RootVector const&) = default;

  private:
    std::vector<Term> terms_;
};

/// Membership in Phi_n^+: e_k, e_i + e_j or e_i - e_j with i < j.
bool is_positive_root(RootVector const& v);
/// Membership in -Phi_n^+.
bool is_negative_root(RootVector const& v);

/// Linear action e_k -> sign(p(k)) e_{|p(k)|}.
RootVector apply_to_root(SignedPermutation const& p, Root const& v);

/// The 2(n-i)+1 roots e_i, e_i + e_j, e_i - e_j with i < j <= n.
std::vector<Root> roots_at(Degree n, Degree i);

//---------------------------------------------------------------------------//
// i-inversions
//---------------------------------------------------------------------------//

/*!
 * Number of roots v in roots_at(n, i) sent to a negative root when p^{-1}
 * acts on coordinates. That action agrees with apply_to_root(p, v).
 */
std::size_t inv_by_roots(SignedPermutation const& p, Degree i);

/*!
 * Same statistic by counting: with j = |p(i)|, let `smaller` and `larger`
 * count later positions k > i with |p(k)| < j and |p(k)| > j. Then
 * inv_i = smaller when p(i) > 0 and 1 + smaller + 2 * larger otherwise.
 */
std::size_t inv_by_counting(SignedPermutation const& p, Degree i);

/*!
 * The vector (inv_1 p, ..., inv_n p).
 *
 * Entry i lies in {0, ..., 2(n-i)+1}, which is exactly the digit bound of
 * position n-i in the hyperoctahedral system, so the code is also a
 * fixed-width numeral.
 */
class InversionCode
{
  public:
    using Entry = HyperNumeral::Digit;

    InversionCode() = default;
    /// Throws InvalidDigit when an entry exceeds its bound.
    explicit InversionCode(std::vector<Entry> entries);

    Degree degree() const noexcept { return entries_.size(); }
    std::span<Entry const> entries() const noexcept { return entries_; }
    /// inv_i, 1-based.
    Entry operator[](Degree i) const { return entries_.at(i - 1); }

    HyperNumeral to_numeral() const;
    static InversionCode from_numeral(HyperNumeral const& h);

    friend bool operator==(InversionCode const&, InversionCode const&) = default;

  private:
    std::vector<Entry> entries_;
};

/// Uses the counting formulas; O(n^2).
InversionCode code(SignedPermutation const& p);
/// Uses the root-system definition; kept as an independent cross-check.
InversionCode code_by_roots(SignedPermutation const& p);

} // namespace hyperoct
