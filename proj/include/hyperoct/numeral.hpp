#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperoct {

/// Arbitrary-precision non-negative integer.
using BigCount = boost::multiprecision::cpp_int;

/// Returns B_i = 2^i * i!, the order of the hyperoctahedral group of degree i.
BigCount place_value(std::size_t i);

/// Largest digit allowed at position i (counted from the right, zero-based).
constexpr std::uint32_t digit_bound(std::size_t position) noexcept
{
    return static_cast<std::uint32_t>(2 * position + 1);
}

/*!
 * A number written in the mixed-radix system with place values B_i = 2^i i!.
 *
 * Digits are stored most significant first, so the last stored digit is d_0.
 * Every digit satisfies 0 <= d_i <= 2i+1. A canonical numeral has no leading
 * zero except for the single-digit zero; a fixed-width numeral keeps its
 * leading zeros and may even be empty (the code of the empty signed
 * permutation).
 */
class HyperNumeral
{
  public:
    using Digit = std::uint32_t;

    enum class Form
    {
        canonical,
        fixed
    };

    /// The canonical zero, a single 0 digit.
    HyperNumeral();

    /// Checks digit bounds and reports the leftmost offending position.
    static HyperNumeral validate(std::span<Digit const> digits, Form form = Form::canonical);

    std::span<Digit const> digits() const noexcept { return digits_; }
    std::size_t width() const noexcept { return digits_.size(); }
    bool is_fixed_width() const noexcept { return form_ == Form::fixed; }
    Form form() const noexcept { return form_; }

    /// Digit d_i, zero beyond the stored width.
    Digit digit_at(std::size_t position) const noexcept;

    friend bool operator==(HyperNumeral const&, HyperNumeral const&) = default;

  private:
    HyperNumeral(std::vector<Digit> digits, Form form);

    std::vector<Digit> digits_;
    Form form_ = Form::canonical;
};

/// Canonical digits of n by the division chain n = d_0 + 2(d_1 + 4(d_2 + 6(...))).
HyperNumeral from_integer(BigCount const& n);

/// Same digits padded with leading zeros to exactly `width` digits. Throws
/// Error if n >= B_width.
HyperNumeral from_integer(BigCount const& n, std::size_t width);

/// Horner evaluation d <- 2*i*d + d_{i-1}.
BigCount to_integer(HyperNumeral const& h);

/// Validating overload for raw digit vectors (most significant first).
BigCount to_integer(std::span<HyperNumeral::Digit const> digits);

/// Increment with carry. A fixed-width numeral keeps its width unless the
/// carry runs out of the top digit.
HyperNumeral successor(HyperNumeral const& h);

enum class NumeralStyle
{
    colon,   //!< "7:0:2:3:1"
    compact, //!< "70231", only when every digit is at most 9
};

/// Accepts colon-separated decimal groups or a compact string of single
/// decimal digits. Surrounding whitespace is ignored.
HyperNumeral parse_numeral(std::string_view text,
                           HyperNumeral::Form form = HyperNumeral::Form::canonical);

std::string format_numeral(HyperNumeral const& h, NumeralStyle style = NumeralStyle::colon);

/// Strict decimal reader for big integers (no sign, no whitespace inside).
BigCount parse_decimal(std::string_view text);

} // namespace hyperoct
