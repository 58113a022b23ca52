#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperoct {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A digit exceeds the bound 2i+1 of its position i (counted from the right).
class InvalidDigit : public Error
{
  public:
    InvalidDigit(std::size_t position, std::uint64_t value, std::uint64_t bound);

    std::size_t position() const noexcept { return position_; }
    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t bound() const noexcept { return bound_; }

  private:
    std::size_t position_;
    std::uint64_t value_;
    std::uint64_t bound_;
};

/// Text that cannot be read as a numeral, integer or window word.
class MalformedText : public Error
{
  public:
    using Error::Error;
};

/// A window word that is not a signed permutation.
class InvalidPermutation : public Error
{
  public:
    using Error::Error;
};

class DegreeMismatch : public Error
{
  public:
    DegreeMismatch(std::size_t lhs, std::size_t rhs);
};

class IndexOutOfRange : public Error
{
  public:
    using Error::Error;
};

/// Rank outside [1, 2^n n!]. Both values are kept as decimal strings so the
/// error does not drag the big-integer type into every translation unit.
class RankOutOfRange : public Error
{
  public:
    RankOutOfRange(std::string rank, std::string max);

    std::string const& rank() const noexcept { return rank_; }
    std::string const& max() const noexcept { return max_; }

  private:
    std::string rank_;
    std::string max_;
};

/// Exhaustive enumeration requested above the configured guard.
class DegreeTooLarge : public Error
{
  public:
    DegreeTooLarge(std::size_t degree, std::size_t guard);
};

} // namespace hyperoct
