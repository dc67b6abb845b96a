#pragma once

#include <cstddef>
#include <cstdint>

#include "wideness/bigint.hpp"

namespace wideness {

/// Results wider than this many bits raise Errc::overflow.
inline constexpr std::size_t kDefaultBitCeiling = std::size_t{1} << 16;

/// Exact C(n, k) for n >= 0; zero when k > n.
BigInt binomial(const BigInt& n, std::uint64_t k);

/// Classical upper bound C(m+n-2, m-1) on the Ramsey number R(m,n).
/// Requires m, n >= 1 (Errc::invalid_argument otherwise).
BigInt ramsey_upper(std::uint64_t m, const BigInt& n, std::size_t bit_ceiling = kDefaultBitCeiling);

/// ramsey_upper(m, ramsey_upper(m, ... n)) nested k times; k = 0 gives n.
BigInt iterated_ramsey_upper(std::size_t k, std::uint64_t m, const BigInt& n,
                             std::size_t bit_ceiling = kDefaultBitCeiling);

}  // namespace wideness
