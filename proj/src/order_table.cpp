#include "ordclass/order_table.hpp"

#include <sstream>

namespace ordclass {

OrderClassTable::OrderClassTable(BigInt group_order, Entries entries)
    : group_order_(std::move(group_order))
{
    for (auto& [k, c] : entries)
        add(k, c);
}

BigInt OrderClassTable::count(u64 k) const
{
    const auto it = entries_.find(k);
    return it == entries_.end() ? BigInt(0) : it->second;
}

void OrderClassTable::add(u64 k, const BigInt& c)
{
    if (c == 0)
        return;
    entries_[k] += c;
}

BigInt OrderClassTable::total() const
{
    BigInt sum = 0;
    for (const auto& [k, c] : entries_)
        sum += c;
    return sum;
}

std::vector<std::string> table_violations(const OrderClassTable& t)
{
    std::vector<std::string> out;
    if (t.total() != t.group_order())
        out.push_back("counts sum to " + to_decimal(t.total()) + ", group order is " + to_decimal(t.group_order()));
    if (t.count(1) != 1)
        out.push_back("#(1) = " + to_decimal(t.count(1)));
    for (const auto& [k, c] : t.entries()) {
        if (k == 0 || t.group_order() % k != 0)
            out.push_back("order " + std::to_string(k) + " does not divide the group order");
        if (k != 0 && c % euler_phi(k) != 0)
            out.push_back("phi(" + std::to_string(k) + ") does not divide #(" + std::to_string(k) + ") = " +
                          to_decimal(c));
    }
    return out;
}

std::string to_string(const OrderClassTable& t)
{
    std::ostringstream os;
    os << "|G|=" << t.group_order() << " {";
    bool first = true;
    for (const auto& [k, c] : t.entries()) {
        os << (first ? "" : ", ") << k << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace ordclass
