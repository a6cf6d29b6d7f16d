#pragma once

// Test-only reference computations. Nothing here calls into the library's
// counting code; the only shared types are plain containers.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

/// Counts k in [1, n] with gcd(k, n) = 1 by direct scan.
u64 phi(u64 n);

/// Divisors by scanning 1..n.
std::vector<u64> divisors(u64 n);

/// Trial division by every integer >= 2.
bool is_prime(u64 n);

/// (prime, exponent) pairs by repeated division with every integer >= 2.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Every (p, m, q, n) with p^m <= limit and p^m - 1 = q^n, found by
/// building the set of prime powers and checking x - 1 for membership.
std::vector<std::tuple<u64, unsigned, u64, unsigned>> prime_power_solutions(u64 limit);

/// Partition numbers p(0..n) by Euler's pentagonal recurrence.
std::vector<u64> partition_numbers(unsigned n);

// Quaternion group as unit quaternions with a real multiplication table.
// Index: 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k.
int quaternion_mul(int a, int b);

/// Element of Q^{0|1} x C_{m1} x ... with explicit group operation.
struct ExplicitGroup {
    bool quaternion = false;
    std::vector<u64> moduli;

    u64 order() const;
    /// Order of every element, obtained by multiplying the element by itself
    /// until the identity reappears.
    std::map<u64, u64> order_counts() const;
};

}  // namespace oracle
