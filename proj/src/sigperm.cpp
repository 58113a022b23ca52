#include "hyperoct/sigperm.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "hyperoct/errors.hpp"

namespace hyperoct {
namespace {

int sign_of(int v) { return v < 0 ? -1 : 1; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

void check_index(Degree index, Degree n)
{
    if (index < 1 || index > n)
        throw IndexOutOfRange("index " + std::to_string(index) + " outside 1.." + std::to_string(n));
}

} // namespace

SignedPermutation::SignedPermutation(std::vector<Value> window) : window_(std::move(window))
{
    auto const n = window_.size();
    std::vector<bool> seen(n + 1, false);
    for (auto v : window_)
    {
        auto const a = static_cast<std::size_t>(std::abs(static_cast<long long>(v)));
        if (v == 0 || a > n)
            throw InvalidPermutation("entry " + std::to_string(v) + " outside [-" + std::to_string(n)
                                     + ", -1] u [1, " + std::to_string(n) + "]");
        if (seen[a])
            throw InvalidPermutation("value " + std::to_string(a) + " appears twice");
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(Degree n)
{
    std::vector<Value> window(n);
    for (Degree k = 0; k < n; ++k)
        window[k] = static_cast<Value>(k + 1);
    return SignedPermutation(std::move(window));
}

SignedPermutation::Value SignedPermutation::operator()(Value i) const
{
    auto const n = static_cast<long long>(degree());
    if (i == 0 || i > n || i < -n)
        throw IndexOutOfRange("argument " + std::to_string(i) + " outside [-" + std::to_string(n)
                              + ", -1] u [1, " + std::to_string(n) + "]");
    return i > 0 ? window_[i - 1] : -window_[-i - 1];
}

std::vector<SignedPermutation::Value> SignedPermutation::unsigned_part() const
{
    std::vector<Value> sigma(window_.size());
    std::transform(window_.begin(), window_.end(), sigma.begin(), [](Value v) { return std::abs(v); });
    return sigma;
}

std::vector<SignedPermutation::Value> SignedPermutation::signs() const
{
    std::vector<Value> eps(window_.size());
    std::transform(window_.begin(), window_.end(), eps.begin(), sign_of);
    return eps;
}

SignedPermutation compose(SignedPermutation const& p, SignedPermutation const& q)
{
    if (p.degree() != q.degree())
        throw DegreeMismatch(p.degree(), q.degree());
    std::vector<SignedPermutation::Value> window;
    window.reserve(q.degree());
    for (auto v : q.window())
        window.push_back(p(v));
    return SignedPermutation(std::move(window));
}

SignedPermutation inverse(SignedPermutation const& p)
{
    auto const w = p.window();
    std::vector<SignedPermutation::Value> window(w.size());
    for (std::size_t k = 0; k < w.size(); ++k)
        window[std::abs(w[k]) - 1] = sign_of(w[k]) * static_cast<int>(k + 1);
    return SignedPermutation(std::move(window));
}

SignedPermutation parse_window(std::string_view text)
{
    std::vector<SignedPermutation::Value> window;
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && is_space(text[pos]))
            ++pos;
    };

    skip_spaces();
    while (pos < text.size())
    {
        auto const start = pos;
        while (pos < text.size() && !is_space(text[pos]) && text[pos] != ',')
            ++pos;
        auto const token = text.substr(start, pos - start);

        int value = 0;
        auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw MalformedText("malformed window word '" + std::string(text) + "'");
        window.push_back(value);

        skip_spaces();
        if (pos < text.size() && text[pos] == ',')
        {
            ++pos;
            skip_spaces();
            if (pos == text.size())
                throw MalformedText("malformed window word '" + std::string(text) + "'");
        }
    }
    return SignedPermutation(std::move(window));
}

std::string format_window(SignedPermutation const& p)
{
    std::string out;
    for (auto v : p.window())
    {
        if (!out.empty())
            out.push_back(' ');
        out += std::to_string(v);
    }
    return out;
}

//---------------------------------------------------------------------------//

RootVector::RootVector(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](Term const& a, Term const& b) { return a.index < b.index; });
    for (auto const& t : terms)
    {
        if (!terms_.empty() && terms_.back().index == t.index)
            terms_.back().coefficient += t.coefficient;
        else
            terms_.push_back(t);
    }
    std::erase_if(terms_, [](Term const& t) { return t.coefficient == 0; });
}

RootVector RootVector::from_root(Root const& r)
{
    switch (r.kind)
    {
        case Root::Kind::e:
            return RootVector({{r.i, 1}});
        case Root::Kind::plus:
            return RootVector({{r.i, 1}, {r.j, 1}});
        case Root::Kind::minus:
            return RootVector({{r.i, 1}, {r.j, -1}});
    }
    return {};
}

RootVector RootVector::operator-() const
{
    RootVector result = *this;
    for (auto& t : result.terms_)
        t.coefficient = -t.coefficient;
    return result;
}

bool is_positive_root(RootVector const& v)
{
    auto const t = v.terms();
    if (t.size() == 1)
        return t[0].coefficient == 1;
    if (t.size() == 2)
        return t[0].coefficient == 1 && (t[1].coefficient == 1 || t[1].coefficient == -1);
    return false;
}

bool is_negative_root(RootVector const& v) { return is_positive_root(-v); }

RootVector apply_to_root(SignedPermutation const& p, Root const& v)
{
    auto const n = p.degree();
    check_index(v.i, n);
    if (v.kind != Root::Kind::e)
    {
        check_index(v.j, n);
        if (v.i == v.j)
            throw IndexOutOfRange("root indices must differ, got " + std::to_string(v.i) + " twice");
    }

    auto const source = RootVector::from_root(v);
    std::vector<RootVector::Term> image;
    for (auto const& t : source.terms())
    {
        auto const target = p(static_cast<int>(t.index));
        image.push_back({static_cast<Degree>(std::abs(target)), t.coefficient * sign_of(target)});
    }
    RootVector result(std::move(image));
    // Distinct indices map to distinct indices, so nothing merges.
    if (result.terms().size() != source.terms().size())
        throw Error("signed permutation action merged root terms");
    return result;
}

std::vector<Root> roots_at(Degree n, Degree i)
{
    check_index(i, n);
    std::vector<Root> roots{Root::single(i)};
    for (Degree j = i + 1; j <= n; ++j)
    {
        roots.push_back(Root::sum(i, j));
        roots.push_back(Root::difference(i, j));
    }
    return roots;
}

std::size_t inv_by_roots(SignedPermutation const& p, Degree i)
{
    // "p^{-1}(v)" in the statistic is p^{-1} acting on coordinates,
    // x -> (x_{p^{-1}(1)}, ...), which is the linear action of p itself.
    auto const roots = roots_at(p.degree(), i);
    return static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [&](Root const& v) {
        return is_negative_root(apply_to_root(p, v));
    }));
}

std::size_t inv_by_counting(SignedPermutation const& p, Degree i)
{
    auto const n = p.degree();
    check_index(i, n);
    auto const w = p.window();
    auto const value = w[i - 1];
    auto const j = std::abs(value);

    std::size_t smaller = 0;
    std::size_t larger = 0;
    for (Degree k = i; k < n; ++k)
    {
        if (std::abs(w[k]) < j)
            ++smaller;
        else
            ++larger;
    }
    return value > 0 ? smaller : 1 + smaller + 2 * larger;
}

//---------------------------------------------------------------------------//

InversionCode::InversionCode(std::vector<Entry> entries) : entries_(std::move(entries))
{
    // Bound of inv_i is 2(n-i)+1, the digit bound of numeral position n-i.
    HyperNumeral::validate(entries_, HyperNumeral::Form::fixed);
}

HyperNumeral InversionCode::to_numeral() const
{
    return HyperNumeral::validate(entries_, HyperNumeral::Form::fixed);
}

InversionCode InversionCode::from_numeral(HyperNumeral const& h)
{
    return InversionCode(std::vector<Entry>(h.digits().begin(), h.digits().end()));
}

InversionCode code(SignedPermutation const& p)
{
    std::vector<InversionCode::Entry> entries;
    entries.reserve(p.degree());
    for (Degree i = 1; i <= p.degree(); ++i)
        entries.push_back(static_cast<InversionCode::Entry>(inv_by_counting(p, i)));
    return InversionCode(std::move(entries));
}

InversionCode code_by_roots(SignedPermutation const& p)
{
    std::vector<InversionCode::Entry> entries;
    entries.reserve(p.degree());
    for (Degree i = 1; i <= p.degree(); ++i)
        entries.push_back(static_cast<InversionCode::Entry>(inv_by_roots(p, i)));
    return InversionCode(std::move(entries));
}

} // namespace hyperoct
