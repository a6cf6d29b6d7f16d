#pragma once

// Closed-form order-class tables. None of these enumerate elements.
//
// lcm_convolve is the generic engine for direct products; the
// per-prime abelian counts and the Hamiltonian formulas are computed by
// separate routes so that agreement between them is evidence rather than
// a tautology.

#include "ordclass/groupspec.hpp"
#include "ordclass/order_table.hpp"

namespace ordclass {

/// #(d) = phi(d) for every d | n.
OrderClassTable cyclic_order_counts(u64 n);

/// Per prime p with factor exponents e_i, the number of elements of order
/// dividing p^j is p^{sum_i min(e_i, j)}; counts of exact order p^j are the
/// successive differences. Primes are then combined with
/// coprime_product_counts.
OrderClassTable abelian_order_counts(const AbelianSpec& spec);

/// {1:1, 2:1, 4:6}.
OrderClassTable quaternion_order_counts();

/// Table of A x B: #(n) = sum over lcm(d, e) = n of #_A(d) #_B(e).
OrderClassTable lcm_convolve(const OrderClassTable& a, const OrderClassTable& b);

/// Table of A x B for coprime |A|, |B|: #(ab) = #_A(a) #_B(b).
/// Throws std::invalid_argument if the orders share a factor.
OrderClassTable coprime_product_counts(const OrderClassTable& a, const OrderClassTable& b);

/// Q x C2^e x A via the Hamiltonian counting formulas: for odd d,
///   #(d)  = #_A(d)
///   #(2d) = (2^{e+1} - 1) #_A(d)
///   #(4d) = 3 * 2^{e+1} #_A(d)
OrderClassTable hamiltonian_order_counts(const HamiltonianSpec& h);

/// Generic route: lcm_convolve folded over the Q table (if present) and one
/// cyclic table per primary factor.
OrderClassTable convolved_order_counts(const GroupSpec& spec);

}  // namespace ordclass
