#include "ordclass/closedform.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordclass {

OrderClassTable cyclic_order_counts(u64 n)
{
    OrderClassTable t(n, {});
    for (u64 d : divisors(n))
        t.add(d, euler_phi(d));
    return t;
}

namespace {

// Table of the abelian p-group with the given factor exponents.
OrderClassTable p_group_order_counts(u64 p, const std::vector<unsigned>& exponents)
{
    const unsigned top = exponents.empty() ? 0 : *std::max_element(exponents.begin(), exponents.end());
    unsigned total_exp = 0;
    for (unsigned e : exponents)
        total_exp += e;

    OrderClassTable t(BigInt(checked_pow(p, total_exp)), {});
    BigInt previous = 1;  // j = 0: only the identity
    t.add(1, 1);
    u64 pj = 1;
    for (unsigned j = 1; j <= top; ++j) {
        unsigned clamped = 0;
        for (unsigned e : exponents)
            clamped += std::min(e, j);
        BigInt dividing = boost::multiprecision::pow(BigInt(p), clamped);
        pj = checked_mul(pj, p);
        t.add(pj, dividing - previous);
        previous = std::move(dividing);
    }
    return t;
}

}  // namespace

OrderClassTable abelian_order_counts(const AbelianSpec& spec)
{
    OrderClassTable t(1, {{1, 1}});
    for (u64 p : spec.primes())
        t = coprime_product_counts(t, p_group_order_counts(p, spec.p_exponents(p)));
    return t;
}

OrderClassTable quaternion_order_counts()
{
    return OrderClassTable(8, {{1, 1}, {2, 1}, {4, 6}});
}

OrderClassTable lcm_convolve(const OrderClassTable& a, const OrderClassTable& b)
{
    OrderClassTable t(a.group_order() * b.group_order(), {});
    for (const auto& [d, ca] : a.entries())
        for (const auto& [e, cb] : b.entries())
            t.add(lcm(d, e), ca * cb);
    return t;
}

OrderClassTable coprime_product_counts(const OrderClassTable& a, const OrderClassTable& b)
{
    if (boost::multiprecision::gcd(a.group_order(), b.group_order()) != 1)
        throw std::invalid_argument("coprime_product_counts: group orders " + to_decimal(a.group_order()) + " and " +
                                    to_decimal(b.group_order()) + " are not coprime");
    OrderClassTable t(a.group_order() * b.group_order(), {});
    for (const auto& [d, ca] : a.entries())
        for (const auto& [e, cb] : b.entries())
            t.add(checked_mul(d, e), ca * cb);
    return t;
}

OrderClassTable hamiltonian_order_counts(const HamiltonianSpec& h)
{
    const OrderClassTable odd = abelian_order_counts(h.odd_part());
    const BigInt involutions = pow2(h.e() + 1) - 1;
    const BigInt order_four = 3 * pow2(h.e() + 1);

    OrderClassTable t(h.order(), {});
    for (const auto& [d, c] : odd.entries()) {
        t.add(d, c);
        t.add(checked_mul(2, d), involutions * c);
        t.add(checked_mul(4, d), order_four * c);
    }
    return t;
}

OrderClassTable convolved_order_counts(const GroupSpec& spec)
{
    OrderClassTable t = spec.has_quaternion ? quaternion_order_counts() : OrderClassTable(1, {{1, 1}});
    for (const auto& f : spec.abelian.factors())
        t = lcm_convolve(t, cyclic_order_counts(f.size()));
    return t;
}

}  // namespace ordclass
