#include "ordclass/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ordclass {

u64 checked_add(u64 a, u64 b)
{
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

u64 checked_mul(u64 a, u64 b)
{
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

u64 checked_pow(u64 base, unsigned exponent)
{
    u64 r = 1;
    for (unsigned i = 0; i < exponent; ++i)
        r = checked_mul(r, base);
    return r;
}

u64 gcd(u64 a, u64 b)
{
    return std::gcd(a, b);
}

u64 lcm(u64 a, u64 b)
{
    if (a == 0 || b == 0)
        return 0;
    return checked_mul(a / gcd(a, b), b);
}

namespace {

u64 mul_mod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

void require_positive(u64 n, const char* what)
{
    if (n == 0)
        throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

}  // namespace

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    // The first twelve primes form a deterministic witness set below 2^64.
    static constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : witnesses) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Factorization factorize(u64 n)
{
    require_positive(n, "factorize");
    Factorization f;
    auto strip = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            f.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +/- 1 wheel
    for (u64 p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1)
        f.push_back({n, 1});
    return f;
}

u64 reconstruct(const Factorization& f)
{
    u64 r = 1;
    for (const auto& [p, e] : f)
        r = checked_mul(r, checked_pow(p, e));
    return r;
}

std::vector<u64> divisors(u64 n)
{
    require_positive(n, "divisors");
    std::vector<u64> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t existing = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 euler_phi(u64 n)
{
    require_positive(n, "euler_phi");
    u64 phi = 1;
    for (const auto& [p, e] : factorize(n))
        phi *= checked_pow(p, e - 1) * (p - 1);
    return phi;
}

std::vector<u64> primes_up_to(u64 limit)
{
    std::vector<u64> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        if (i <= limit / i) {
            for (u64 j = i * i; j <= limit; j += i)
                composite[j] = true;
        }
    }
    return primes;
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
                    std::vector<std::vector<unsigned>>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<unsigned>> integer_partitions(unsigned n)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    partitions_rec(n, n, current, out);
    return out;
}

std::string_view to_string(PrimePowerCase c)
{
    switch (c) {
    case PrimePowerCase::Catalan: return "CATALAN";
    case PrimePowerCase::Mersenne: return "MERSENNE";
    case PrimePowerCase::Fermat: return "FERMAT";
    case PrimePowerCase::Unclassified: return "UNCLASSIFIED";
    }
    return "UNCLASSIFIED";
}

PrimePowerCase classify_prime_power_case(u64 p, unsigned m, u64 q, unsigned n)
{
    if (p == 3 && m == 2 && q == 2 && n == 3)
        return PrimePowerCase::Catalan;
    if (p == 2 && n == 1)
        return PrimePowerCase::Mersenne;
    if (m == 1 && q == 2)
        return PrimePowerCase::Fermat;
    return PrimePowerCase::Unclassified;
}

std::vector<PrimePowerSolution> solve_consecutive_prime_powers(u64 limit)
{
    if (limit < 2)
        throw std::invalid_argument("solve_consecutive_prime_powers: limit must be >= 2");

    std::vector<PrimePowerSolution> out;
    for (u64 p : primes_up_to(limit)) {
        u64 pm = p;
        for (unsigned m = 1;; ++m) {
            if (pm - 1 >= 2) {
                const Factorization f = factorize(pm - 1);
                if (f.size() == 1) {
                    const auto [q, n] = f.front();
                    out.push_back({p, m, q, n, classify_prime_power_case(p, m, q, n)});
                }
            }
            if (pm > limit / p)
                break;
            pm *= p;
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePowerSolution& a, const PrimePowerSolution& b) {
        const u64 xa = checked_pow(a.p, a.m);
        const u64 xb = checked_pow(b.p, b.m);
        return xa != xb ? xa < xb : a.p < b.p;
    });
    return out;
}

}  // namespace ordclass
