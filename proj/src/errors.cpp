#include "hyperoct/errors.hpp"

namespace hyperoct {

InvalidDigit::InvalidDigit(std::size_t position, std::uint64_t value, std::uint64_t bound)
    : Error("invalid digit " + std::to_string(value) + " at position " + std::to_string(position)
            + " (bound " + std::to_string(bound) + ")")
    , position_(position)
    , value_(value)
    , bound_(bound)
{
}

DegreeMismatch::DegreeMismatch(std::size_t lhs, std::size_t rhs)
    : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
{
}

RankOutOfRange::RankOutOfRange(std::string rank, std::string max)
    : Error("rank " + rank + " out of range [1, " + max + "]")
    , rank_(std::move(rank))
    , max_(std::move(max))
{
}

DegreeTooLarge::DegreeTooLarge(std::size_t degree, std::size_t guard)
    : Error("degree " + std::to_string(degree) + " exceeds enumeration guard "
            + std::to_string(guard))
{
}

} // namespace hyperoct
