#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "hyperoct/numeral.hpp"
#include "hyperoct/sigperm.hpp"

// Brute-force ground truth. Nothing here may use inversion statistics or the
// rank codec; the point is to catch bugs the two would share.

namespace hyperoct::oracle {

inline constexpr Degree default_guard = 6;

/// Position of v in the value order 1 < 2 < ... < n < -n < ... < -1.
constexpr std::size_t order_key(int v, Degree n) noexcept
{
    return v > 0 ? static_cast<std::size_t>(v - 1) : static_cast<std::size_t>(2 * static_cast<long long>(n) + v);
}

/// Every element of B_n, in generation order (not sorted).
std::vector<SignedPermutation> enumerate_all(Degree n, Degree guard = default_guard);

/// Lexicographic comparison of window words under order_key.
std::strong_ordering compare_lex(SignedPermutation const& a, SignedPermutation const& b);

/// B_n sorted by compare_lex; position k-1 holds the element of rank k.
class ReferenceOrder
{
  public:
    explicit ReferenceOrder(Degree n, Degree guard = default_guard);

    Degree degree() const noexcept { return n_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::span<SignedPermutation const> elements() const noexcept { return elements_; }

    /// Element of rank k (1-based).
    SignedPermutation const& at(std::size_t k) const;
    /// 1 + number of elements strictly before p.
    BigCount rank_of(SignedPermutation const& p) const;

  private:
    Degree n_;
    std::vector<SignedPermutation> elements_;
};

BigCount reference_rank(SignedPermutation const& p, Degree guard = default_guard);

} // namespace hyperoct::oracle
