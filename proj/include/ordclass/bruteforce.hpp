#pragma once

// Enumeration oracle: visit every element of a GroupSpec, compute its order
// from its components, tally. Uses no closed-form counting.
//
// Two implementations of the tally are kept:
//   brute_force_order_counts_serial  reference, one Element at a time
//   brute_force_order_counts         OpenMP kernel over the mixed-radix index
// They must agree exactly; tests and bench/ compare them.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordclass/groupspec.hpp"
#include "ordclass/order_table.hpp"

namespace ordclass {

inline constexpr u64 kDefaultBruteForceCap = 10'000'000;

enum class QuaternionUnit : std::uint8_t { One, MinusOne, I, MinusI, J, MinusJ, K, MinusK };

/// 1 -> 1, -1 -> 2, the six others -> 4.
unsigned quaternion_unit_order(QuaternionUnit u);
std::string_view to_string(QuaternionUnit u);

/// One element of a GroupSpec: a quaternion unit when the spec has Q, and
/// one residue per primary cyclic factor in canonical factor order.
struct Element {
    std::optional<QuaternionUnit> q;
    std::vector<u64> residues;

    friend bool operator==(const Element&, const Element&) = default;
};

std::string to_string(const Element& el);

/// lcm of component orders; a residue r in C_m has order m / gcd(m, r).
/// Throws std::invalid_argument if el does not belong to spec.
u64 element_order(const Element& el, const GroupSpec& spec);

/// Thrown when a group is too large to enumerate under the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(u64 order, u64 cap);
    u64 order() const { return order_; }
    u64 cap() const { return cap_; }

private:
    u64 order_;
    u64 cap_;
};

/// Visits every element once, in mixed-radix order (quaternion digit first,
/// then factors in canonical order; the last component varies fastest).
template <typename F>
void for_each_element(const GroupSpec& spec, F&& visit)
{
    Element el;
    if (spec.has_quaternion)
        el.q = QuaternionUnit::One;
    std::vector<u64> sizes;
    for (const auto& f : spec.abelian.factors())
        sizes.push_back(f.size());
    el.residues.assign(sizes.size(), 0);

    while (true) {
        visit(static_cast<const Element&>(el));
        std::size_t i = sizes.size();
        bool carried = true;
        while (carried && i > 0) {
            --i;
            if (++el.residues[i] < sizes[i])
                carried = false;
            else
                el.residues[i] = 0;
        }
        if (!carried)
            continue;
        if (!el.q)
            return;
        const auto next = static_cast<std::uint8_t>(*el.q) + 1;
        if (next == 8)
            return;
        el.q = static_cast<QuaternionUnit>(next);
    }
}

/// Serial reference tally built on for_each_element and element_order.
OrderClassTable brute_force_order_counts_serial(const GroupSpec& spec, u64 cap = kDefaultBruteForceCap);

/// OpenMP tally. The index range [0, |G|) is split into contiguous blocks
/// per thread; per-thread counts are summed afterwards, so the result does
/// not depend on the thread count. Pass threads = 0 for the OpenMP default.
OrderClassTable brute_force_order_counts(const GroupSpec& spec, u64 cap = kDefaultBruteForceCap,
                                         int threads = 0);

struct HallCount {
    u64 order;
    u64 in_product;  // #_{AxB}(order)
    u64 in_factor;   // #_A(order)
};

struct HallVerdict {
    bool pass = true;
    /// Orders d dividing |A| with both counts, ascending.
    std::vector<HallCount> counts;
    /// First element of A x B found whose order divides |A| but whose B-part
    /// is not the identity.
    std::optional<std::pair<Element, Element>> counterexample;
    std::string detail;
};

/// Treats A as the normal Hall subgroup A x 1 of A x B and checks by
/// enumeration that (i) it contains every element whose order divides |A|
/// and (ii) #_{AxB}(d) = #_A(d) for every d | |A|. Requires coprime orders
/// (std::invalid_argument otherwise) and |A||B| <= cap (CapExceeded).
HallVerdict hall_projection_check(const GroupSpec& a, const GroupSpec& b, u64 cap = kDefaultBruteForceCap);

}  // namespace ordclass
