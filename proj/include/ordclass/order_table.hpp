#pragma once

#include <map>
#include <string>
#include <vector>

#include "ordclass/bigint.hpp"
#include "ordclass/numtheory.hpp"

namespace ordclass {

/// Number of elements of each order in a finite group. Only orders with a
/// nonzero count are stored; count(k) for an absent k is 0.
class OrderClassTable {
public:
    using Entries = std::map<u64, BigInt>;

    OrderClassTable() = default;
    OrderClassTable(BigInt group_order, Entries entries);

    const BigInt& group_order() const { return group_order_; }
    const Entries& entries() const { return entries_; }

    BigInt count(u64 k) const;
    /// Adds c elements of order k; zero counts are not stored.
    void add(u64 k, const BigInt& c);
    BigInt total() const;

    friend bool operator==(const OrderClassTable&, const OrderClassTable&) = default;

private:
    BigInt group_order_ = 1;
    Entries entries_;
};

/// Human-readable list of violated table invariants: counts sum to the group
/// order, #(1) = 1, every order divides the group order, and phi(k) | #(k).
/// Empty when the table is well-formed.
std::vector<std::string> table_violations(const OrderClassTable& t);

std::string to_string(const OrderClassTable& t);

}  // namespace ordclass
