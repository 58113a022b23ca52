#include "hyperoct/numeral.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "hyperoct/errors.hpp"

namespace hyperoct {
namespace {

std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_decimal(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Leftmost violation wins.
void check_bounds(std::span<std::uint64_t const> digits)
{
    std::size_t const k = digits.size();
    for (std::size_t idx = 0; idx < k; ++idx)
    {
        std::size_t const position = k - 1 - idx;
        if (digits[idx] > digit_bound(position))
            throw InvalidDigit(position, digits[idx], digit_bound(position));
    }
}

} // namespace

BigCount place_value(std::size_t i)
{
    BigCount b = 1;
    for (std::size_t j = 1; j <= i; ++j)
        b *= 2 * j;
    return b;
}

HyperNumeral::HyperNumeral() : digits_{0} {}

HyperNumeral::HyperNumeral(std::vector<Digit> digits, Form form)
    : digits_(std::move(digits)), form_(form)
{
}

HyperNumeral HyperNumeral::validate(std::span<Digit const> digits, Form form)
{
    std::vector<std::uint64_t> wide(digits.begin(), digits.end());
    check_bounds(wide);

    std::vector<Digit> stored(digits.begin(), digits.end());
    if (form == Form::canonical)
    {
        auto const first = std::find_if(stored.begin(), stored.end(), [](Digit d) { return d != 0; });
        stored.erase(stored.begin(), first);
        if (stored.empty())
            stored.push_back(0);
    }
    return HyperNumeral(std::move(stored), form);
}

HyperNumeral::Digit HyperNumeral::digit_at(std::size_t position) const noexcept
{
    if (position >= digits_.size())
        return 0;
    return digits_[digits_.size() - 1 - position];
}

HyperNumeral from_integer(BigCount const& n)
{
    if (n < 0)
        throw Error("negative value has no hyperoctahedral representation");

    std::vector<HyperNumeral::Digit> digits;
    BigCount quotient = n;
    BigCount remainder;
    std::size_t position = 0;
    do
    {
        BigCount const radix = 2 * (position + 1);
        boost::multiprecision::divide_qr(quotient, radix, quotient, remainder);
        digits.push_back(remainder.convert_to<HyperNumeral::Digit>());
        ++position;
    } while (quotient != 0);

    std::reverse(digits.begin(), digits.end());
    return HyperNumeral::validate(digits);
}

HyperNumeral from_integer(BigCount const& n, std::size_t width)
{
    std::vector<HyperNumeral::Digit> digits;
    if (n != 0)
    {
        auto const canonical = from_integer(n);
        if (canonical.width() > width)
            throw Error("value needs " + std::to_string(canonical.width()) + " digits, width is "
                        + std::to_string(width));
        digits.assign(canonical.digits().begin(), canonical.digits().end());
    }
    digits.insert(digits.begin(), width - digits.size(), 0);
    return HyperNumeral::validate(digits, HyperNumeral::Form::fixed);
}

BigCount to_integer(HyperNumeral const& h)
{
    auto const digits = h.digits();
    if (digits.empty())
        return 0;

    BigCount d = digits.front();
    std::size_t const k = digits.size();
    for (std::size_t i = k - 1; i >= 1; --i)
    {
        d *= 2 * i;
        d += digits[k - i];
    }
    return d;
}

BigCount to_integer(std::span<HyperNumeral::Digit const> digits)
{
    return to_integer(HyperNumeral::validate(digits, HyperNumeral::Form::fixed));
}

HyperNumeral successor(HyperNumeral const& h)
{
    std::vector<HyperNumeral::Digit> digits(h.digits().begin(), h.digits().end());
    std::size_t position = 0;
    for (; position < digits.size(); ++position)
    {
        auto& d = digits[digits.size() - 1 - position];
        if (d < digit_bound(position))
        {
            ++d;
            break;
        }
        d = 0;
    }
    if (position == digits.size())
        digits.insert(digits.begin(), 1);
    return HyperNumeral::validate(digits, h.form());
}

HyperNumeral parse_numeral(std::string_view text, HyperNumeral::Form form)
{
    auto const body = trim(text);
    std::vector<std::uint64_t> digits;

    if (body.empty())
    {
        if (form != HyperNumeral::Form::fixed)
            throw MalformedText("empty numeral");
    }
    else if (body.find(':') != std::string_view::npos)
    {
        std::size_t start = 0;
        while (true)
        {
            auto const end = body.find(':', start);
            auto const group = body.substr(start, end == std::string_view::npos ? end : end - start);
            if (!is_decimal(group))
                throw MalformedText("malformed numeral '" + std::string(body) + "'");
            std::uint64_t value = 0;
            auto const [ptr, ec] = std::from_chars(group.data(), group.data() + group.size(), value);
            if (ec != std::errc{} || ptr != group.data() + group.size())
                throw MalformedText("digit group '" + std::string(group) + "' is too large");
            digits.push_back(value);
            if (end == std::string_view::npos)
                break;
            start = end + 1;
        }
    }
    else
    {
        if (!is_decimal(body))
            throw MalformedText("malformed numeral '" + std::string(body) + "'");
        for (char c : body)
            digits.push_back(static_cast<std::uint64_t>(c - '0'));
    }

    check_bounds(digits);
    std::vector<HyperNumeral::Digit> narrow(digits.begin(), digits.end());
    return HyperNumeral::validate(narrow, form);
}

std::string format_numeral(HyperNumeral const& h, NumeralStyle style)
{
    std::string out;
    bool first = true;
    for (auto d : h.digits())
    {
        if (style == NumeralStyle::compact)
        {
            if (d > 9)
                throw Error("digit " + std::to_string(d) + " cannot be written in compact style");
            out.push_back(static_cast<char>('0' + d));
            continue;
        }
        if (!first)
            out.push_back(':');
        out += std::to_string(d);
        first = false;
    }
    return out;
}

BigCount parse_decimal(std::string_view text)
{
    auto const body = trim(text);
    if (!is_decimal(body))
        throw MalformedText("malformed decimal integer '" + std::string(body) + "'");
    return BigCount(std::string(body));
}

} // namespace hyperoct
