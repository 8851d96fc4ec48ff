#include "grouplab/order.hpp"

#include "grouplab/errors.hpp"

namespace grouplab {

std::string to_string(Order const &n) { return n.str(); }

std::uint64_t to_u64(Order const &n) {
  if (n < 0 || n > Order(UINT64_MAX))
    throw ResourceExceeded("order " + n.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(n);
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(Order const &n, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  Order rest = n;
  for (std::uint64_t p = 2; p <= bound && rest > 1; ++p) {
    if (!is_prime(p) || rest % p != 0)
      continue;
    out.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) {
    if (rest > Order(UINT64_MAX))
      throw PreconditionError("order " + n.str() + " has a prime factor above " +
                              std::to_string(bound));
    for (std::uint64_t p : prime_divisors(static_cast<std::uint64_t>(rest))) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

Order p_part(Order n, std::uint64_t p) {
  Order out = 1;
  if (n == 0)
    return out;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

} // namespace grouplab
