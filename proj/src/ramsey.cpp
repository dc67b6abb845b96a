#include "wideness/ramsey.hpp"

#include <algorithm>
#include <string>

#include "wideness/error.hpp"

namespace wideness {

namespace {

// Beyond this the product loop itself is the problem, not the result width.
constexpr std::uint64_t kMaxLowerIndex = 10'000'000;

void check_width(const BigInt& value, std::size_t bit_ceiling) {
  if (value > 0 && boost::multiprecision::msb(value) + 1 > bit_ceiling)
    throw Error(Errc::overflow, "value exceeds " + std::to_string(bit_ceiling) + " bits");
}

}  // namespace

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0) throw Error(Errc::invalid_argument, "binomial with negative n");
  if (BigInt(k) > n) return 0;
  const BigInt other = n - k;
  if (other < k) k = static_cast<std::uint64_t>(other);
  if (k > kMaxLowerIndex) throw Error(Errc::overflow, "binomial lower index too large");
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

BigInt ramsey_upper(std::uint64_t m, const BigInt& n, std::size_t bit_ceiling) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "ramsey_upper needs m, n >= 1");
  const BigInt top = BigInt(m) + n - 2;
  const BigInt lower = std::min<BigInt>(BigInt(m - 1), BigInt(n - 1));
  if (lower > kMaxLowerIndex) throw Error(Errc::overflow, "ramsey_upper arguments too large");
  BigInt value = binomial(top, static_cast<std::uint64_t>(lower));
  check_width(value, bit_ceiling);
  return value;
}

BigInt iterated_ramsey_upper(std::size_t k, std::uint64_t m, const BigInt& n,
                             std::size_t bit_ceiling) {
  BigInt value = n;
  check_width(value, bit_ceiling);
  for (std::size_t level = 0; level < k; ++level) value = ramsey_upper(m, value, bit_ceiling);
  return value;
}

}  // namespace wideness
