#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grouplab {

// Exact group orders. The wreath fixture has order 3^7 * 7^8, and products of
// catalog groups can exceed 64 bits.
using Order = boost::multiprecision::cpp_int;

std::string to_string(Order const &n);

// Throws ResourceExceeded if n does not fit in 64 bits.
std::uint64_t to_u64(Order const &n);

bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order. Trial division: only valid for
// orders of permutation groups or other smooth numbers; `bound` is the largest
// prime that may divide n (the degree, for a permutation group).
std::vector<std::uint64_t> prime_divisors(Order const &n, std::uint64_t bound);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Largest power of p dividing n.
Order p_part(Order n, std::uint64_t p);

} // namespace grouplab
