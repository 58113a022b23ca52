#include "hyperoct/rankcodec.hpp"

#include "hyperoct/errors.hpp"

namespace hyperoct {

FoldedDigit fold_digit(std::size_t level, HyperNumeral::Digit gamma)
{
    if (gamma > digit_bound(level))
        throw InvalidDigit(level, gamma, digit_bound(level));
    if (gamma <= level)
        return {gamma, 1};
    return {1 + 2 * level - gamma, -1};
}

SignedLehmerPair fold_digits(HyperNumeral const& digits)
{
    SignedLehmerPair pair;
    auto const d = digits.digits();
    for (std::size_t idx = 0; idx < d.size(); ++idx)
    {
        auto const folded = fold_digit(d.size() - 1 - idx, d[idx]);
        pair.m.push_back(folded.m);
        pair.eps.push_back(folded.sign);
    }
    return pair;
}

std::vector<int> decode_lehmer(std::span<std::size_t const> m)
{
    auto const n = m.size();
    std::vector<int> live(n);
    for (std::size_t k = 0; k < n; ++k)
        live[k] = static_cast<int>(k + 1);

    std::vector<int> sigma;
    sigma.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        auto const level = n - 1 - k;
        if (m[k] > level)
            throw InvalidDigit(level, m[k], level);
        auto const it = live.begin() + static_cast<std::ptrdiff_t>(m[k]);
        sigma.push_back(*it);
        live.erase(it);
    }
    return sigma;
}

HyperNumeral code_numeral(SignedPermutation const& p) { return code(p).to_numeral(); }

Rank rank(SignedPermutation const& p) { return 1 + to_integer(code_numeral(p)); }

namespace {

SignedPermutation assemble(SignedLehmerPair const& pair, std::vector<int> const& sigma)
{
    std::vector<int> window(sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k)
        window[k] = pair.eps[k] * sigma[k];
    return SignedPermutation(std::move(window));
}

} // namespace

SignedPermutation from_code(HyperNumeral const& digits)
{
    auto const pair = fold_digits(digits);
    return assemble(pair, decode_lehmer(pair.m));
}

UnrankTrace unrank_trace(Rank const& k, Degree n)
{
    auto const max = place_value(n);
    if (k < 1 || k > max)
        throw RankOutOfRange(k.str(), max.str());

    UnrankTrace trace{from_integer(k - 1, n), {}, {}, {}};
    trace.lehmer = fold_digits(trace.digits);
    trace.sigma = decode_lehmer(trace.lehmer.m);
    trace.result = assemble(trace.lehmer, trace.sigma);
    return trace;
}

SignedPermutation unrank(Rank const& k, Degree n) { return unrank_trace(k, n).result; }

} // namespace hyperoct
