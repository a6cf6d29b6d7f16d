#pragma once

/**
 * Elementary number theory used by every counting routine: checked 64-bit
 * arithmetic, deterministic primality, trial-division factorization,
 * totients, divisors, integer partitions, and a finite-window solver for
 * p^m - 1 = q^n over prime powers.
 *
 * Everything here is a pure function; overflow raises std::overflow_error
 * and out-of-domain arguments raise std::invalid_argument.
 */

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ordclass {

using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Checked arithmetic
// ---------------------------------------------------------------------------

u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exponent);

u64 gcd(u64 a, u64 b);
/// lcm(a, b) with overflow detection; lcm(0, x) is 0.
u64 lcm(u64 a, u64 b);

// ---------------------------------------------------------------------------
// Primes and factorization
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin, exact for the whole 64-bit range.
bool is_prime(u64 n);

struct PrimeFactor {
    u64 prime;
    unsigned exponent;

    friend auto operator<=>(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization, ascending by prime. Empty for n = 1.
using Factorization = std::vector<PrimeFactor>;

/// Trial division. Rejects n = 0.
Factorization factorize(u64 n);

/// Product of prime^exponent; throws on overflow.
u64 reconstruct(const Factorization& f);

/// Ascending list of all divisors of n. Rejects n = 0.
std::vector<u64> divisors(u64 n);

/// Number of integers in [1, n] coprime to n. Rejects n = 0.
u64 euler_phi(u64 n);

/// Primes <= limit (sieve of Eratosthenes).
std::vector<u64> primes_up_to(u64 limit);

/// All partitions of n, each with non-increasing parts. Partitions of 0 is
/// the single empty partition.
std::vector<std::vector<unsigned>> integer_partitions(unsigned n);

// ---------------------------------------------------------------------------
// Consecutive prime powers
// ---------------------------------------------------------------------------

enum class PrimePowerCase {
    Catalan,   // 3^2 - 1 = 2^3
    Mersenne,  // 2^m - 1 = q
    Fermat,    // p - 1 = 2^n
    Unclassified,
};

std::string_view to_string(PrimePowerCase c);

/// A solution of p^m - 1 = q^n with p, q prime and m, n >= 1.
struct PrimePowerSolution {
    u64 p;
    unsigned m;
    u64 q;
    unsigned n;
    PrimePowerCase tag;

    friend bool operator==(const PrimePowerSolution&, const PrimePowerSolution&) = default;
};

/// Which branch of the consecutive-prime-power trichotomy (p, m, q, n)
/// falls into. Returns Unclassified when none applies, which would be a
/// counterexample to the trichotomy.
PrimePowerCase classify_prime_power_case(u64 p, unsigned m, u64 q, unsigned n);

/// Every (p, m, q, n) with p^m <= limit and p^m - 1 = q^n, sorted by p^m
/// then p. Requires limit >= 2.
std::vector<PrimePowerSolution> solve_consecutive_prime_powers(u64 limit);

}  // namespace ordclass
