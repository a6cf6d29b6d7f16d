#include "ordclass/bruteforce.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <omp.h>

namespace ordclass {

unsigned quaternion_unit_order(QuaternionUnit u)
{
    switch (u) {
    case QuaternionUnit::One: return 1;
    case QuaternionUnit::MinusOne: return 2;
    default: return 4;
    }
}

std::string_view to_string(QuaternionUnit u)
{
    static constexpr std::string_view names[] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return names[static_cast<std::uint8_t>(u)];
}

std::string to_string(const Element& el)
{
    std::string out = "(";
    bool first = true;
    if (el.q) {
        out += to_string(*el.q);
        first = false;
    }
    for (u64 r : el.residues) {
        out += first ? "" : ", ";
        out += std::to_string(r);
        first = false;
    }
    return out + ")";
}

u64 element_order(const Element& el, const GroupSpec& spec)
{
    if (el.q.has_value() != spec.has_quaternion)
        throw std::invalid_argument("element quaternion component does not match spec");
    const auto& factors = spec.abelian.factors();
    if (el.residues.size() != factors.size())
        throw std::invalid_argument("element has " + std::to_string(el.residues.size()) + " residues, spec has " +
                                    std::to_string(factors.size()) + " cyclic factors");
    u64 order = el.q ? quaternion_unit_order(*el.q) : 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const u64 m = factors[i].size();
        if (el.residues[i] >= m)
            throw std::invalid_argument("residue " + std::to_string(el.residues[i]) + " out of range for C" +
                                        std::to_string(m));
        order = lcm(order, m / gcd(m, el.residues[i]));
    }
    return order;
}

CapExceeded::CapExceeded(u64 order, u64 cap)
    : std::runtime_error("refusing to enumerate a group of order " + std::to_string(order) +
                         ": exceeds brute-force cap " + std::to_string(cap))
    , order_(order)
    , cap_(cap)
{
}

namespace {

void enforce_cap(u64 order, u64 cap)
{
    if (order > cap)
        throw CapExceeded(order, cap);
}

// Mixed-radix view of a direct product of Q and cyclic factors. Component 0
// is the most significant digit.
struct Layout {
    struct Component {
        bool quaternion;
        u64 size;
    };
    std::vector<Component> components;

    explicit Layout(const GroupSpec& spec)
    {
        if (spec.has_quaternion)
            components.push_back({true, 8});
        for (const auto& f : spec.abelian.factors())
            components.push_back({false, f.size()});
    }

    void append(const Layout& other)
    {
        components.insert(components.end(), other.components.begin(), other.components.end());
    }

    u64 digit_order(std::size_t c, u64 digit) const
    {
        const auto& comp = components[c];
        if (comp.quaternion)
            return quaternion_unit_order(static_cast<QuaternionUnit>(digit));
        return comp.size / gcd(comp.size, digit);
    }

    void decode(u64 index, std::vector<u64>& digits) const
    {
        digits.resize(components.size());
        for (std::size_t c = components.size(); c-- > 0;) {
            digits[c] = index % components[c].size;
            index /= components[c].size;
        }
    }
};

// Walks [begin, end) of the mixed-radix range, keeping per-component orders
// current so each step recomputes only the digits that changed.
template <typename Visit>
void walk_range(const Layout& layout, u64 begin, u64 end, Visit&& visit)
{
    if (begin >= end)
        return;
    const std::size_t n = layout.components.size();
    std::vector<u64> digits;
    layout.decode(begin, digits);
    std::vector<u64> orders(n);
    for (std::size_t c = 0; c < n; ++c)
        orders[c] = layout.digit_order(c, digits[c]);

    for (u64 idx = begin;;) {
        u64 order = 1;
        for (u64 o : orders)
            order = std::lcm(order, o);
        visit(digits, order);
        if (++idx == end)
            return;
        for (std::size_t c = n; c-- > 0;) {
            if (++digits[c] < layout.components[c].size) {
                orders[c] = layout.digit_order(c, digits[c]);
                break;
            }
            digits[c] = 0;
            orders[c] = 1;
        }
    }
}

}  // namespace

OrderClassTable brute_force_order_counts_serial(const GroupSpec& spec, u64 cap)
{
    enforce_cap(spec.order(), cap);
    std::map<u64, u64> tally;
    for_each_element(spec, [&](const Element& el) { ++tally[element_order(el, spec)]; });
    OrderClassTable t(spec.order(), {});
    for (const auto& [k, c] : tally)
        t.add(k, c);
    return t;
}

OrderClassTable brute_force_order_counts(const GroupSpec& spec, u64 cap, int threads)
{
    const u64 total = spec.order();
    enforce_cap(total, cap);

    const Layout layout(spec);
    u64 exponent = spec.abelian.exponent();
    if (spec.has_quaternion)
        exponent = lcm(exponent, 4);
    const std::vector<u64> slots = divisors(exponent);

    const int team = threads > 0 ? threads : omp_get_max_threads();
    std::vector<std::vector<u64>> partial(static_cast<std::size_t>(team), std::vector<u64>(slots.size(), 0));

#pragma omp parallel num_threads(team)
    {
        const auto tid = static_cast<u64>(omp_get_thread_num());
        const auto nthreads = static_cast<u64>(omp_get_num_threads());
        const u64 chunk = total / nthreads;
        const u64 extra = total % nthreads;
        const u64 begin = tid * chunk + std::min(tid, extra);
        const u64 end = begin + chunk + (tid < extra ? 1 : 0);
        auto& local = partial[tid];
        walk_range(layout, begin, end, [&](const std::vector<u64>&, u64 order) {
            const auto slot = std::lower_bound(slots.begin(), slots.end(), order) - slots.begin();
            ++local[static_cast<std::size_t>(slot)];
        });
    }

    OrderClassTable t(total, {});
    for (const auto& local : partial)
        for (std::size_t s = 0; s < slots.size(); ++s)
            t.add(slots[s], local[s]);
    return t;
}

namespace {

Element element_from_digits(const GroupSpec& spec, std::vector<u64>::const_iterator digit)
{
    Element el;
    if (spec.has_quaternion)
        el.q = static_cast<QuaternionUnit>(*digit++);
    for (std::size_t i = 0; i < spec.abelian.factors().size(); ++i)
        el.residues.push_back(*digit++);
    return el;
}

}  // namespace

HallVerdict hall_projection_check(const GroupSpec& a, const GroupSpec& b, u64 cap)
{
    const u64 order_a = a.order();
    const u64 order_b = b.order();
    if (gcd(order_a, order_b) != 1)
        throw std::invalid_argument("hall_projection_check: orders " + std::to_string(order_a) + " and " +
                                    std::to_string(order_b) + " are not coprime");
    const u64 total = checked_mul(order_a, order_b);
    enforce_cap(total, cap);

    Layout layout(a);
    const std::size_t a_digits = layout.components.size();
    layout.append(Layout(b));

    HallVerdict verdict;
    std::map<u64, u64> product_counts;
    walk_range(layout, 0, total, [&](const std::vector<u64>& digits, u64 order) {
        if (order_a % order != 0)
            return;
        ++product_counts[order];
        if (verdict.counterexample)
            return;
        const bool b_trivial = std::all_of(digits.begin() + static_cast<std::ptrdiff_t>(a_digits), digits.end(),
                                           [](u64 d) { return d == 0; });
        if (!b_trivial) {
            verdict.counterexample.emplace(element_from_digits(a, digits.begin()),
                                           element_from_digits(b, digits.begin() + static_cast<std::ptrdiff_t>(a_digits)));
        }
    });

    const OrderClassTable factor = brute_force_order_counts_serial(a, cap);
    for (u64 d : divisors(order_a)) {
        const u64 in_product = product_counts.count(d) ? product_counts[d] : 0;
        const auto in_factor = factor.count(d).convert_to<u64>();
        verdict.counts.push_back({d, in_product, in_factor});
        if (in_product != in_factor) {
            verdict.pass = false;
            if (verdict.detail.empty())
                verdict.detail = "#(" + std::to_string(d) + ") is " + std::to_string(in_product) +
                                 " in the product but " + std::to_string(in_factor) + " in the Hall factor";
        }
    }
    if (verdict.counterexample) {
        verdict.pass = false;
        verdict.detail = "element " + to_string(verdict.counterexample->first) + " x " +
                         to_string(verdict.counterexample->second) + " has order dividing " +
                         std::to_string(order_a) + " but lies outside the Hall factor";
    }
    return verdict;
}

}  // namespace ordclass
