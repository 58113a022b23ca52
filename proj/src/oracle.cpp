#include "hyperoct/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "hyperoct/errors.hpp"

namespace hyperoct::oracle {

std::vector<SignedPermutation> enumerate_all(Degree n, Degree guard)
{
    if (n > guard)
        throw DegreeTooLarge(n, guard);

    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);

    std::vector<SignedPermutation> all;
    std::size_t const patterns = std::size_t{1} << n;
    do
    {
        for (std::size_t mask = 0; mask < patterns; ++mask)
        {
            std::vector<int> window = sigma;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k))
                    window[k] = -window[k];
            all.emplace_back(std::move(window));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return all;
}

std::strong_ordering compare_lex(SignedPermutation const& a, SignedPermutation const& b)
{
    if (a.degree() != b.degree())
        throw DegreeMismatch(a.degree(), b.degree());
    auto const n = a.degree();
    auto const wa = a.window();
    auto const wb = b.window();
    return std::lexicographical_compare_three_way(
        wa.begin(), wa.end(), wb.begin(), wb.end(),
        [n](int x, int y) { return order_key(x, n) <=> order_key(y, n); });
}

ReferenceOrder::ReferenceOrder(Degree n, Degree guard) : n_(n), elements_(enumerate_all(n, guard))
{
    std::sort(elements_.begin(), elements_.end(),
              [](auto const& a, auto const& b) { return compare_lex(a, b) < 0; });
}

SignedPermutation const& ReferenceOrder::at(std::size_t k) const
{
    if (k < 1 || k > elements_.size())
        throw RankOutOfRange(std::to_string(k), std::to_string(elements_.size()));
    return elements_[k - 1];
}

BigCount ReferenceOrder::rank_of(SignedPermutation const& p) const
{
    if (p.degree() != n_)
        throw DegreeMismatch(p.degree(), n_);
    auto const it = std::lower_bound(elements_.begin(), elements_.end(), p,
                                     [](auto const& a, auto const& b) { return compare_lex(a, b) < 0; });
    return BigCount(1 + (it - elements_.begin()));
}

BigCount reference_rank(SignedPermutation const& p, Degree guard)
{
    return ReferenceOrder(p.degree(), guard).rank_of(p);
}

} // namespace hyperoct::oracle
