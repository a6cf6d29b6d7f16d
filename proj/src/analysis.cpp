#include "ordclass/analysis.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <set>

namespace ordclass {

PocVerdict is_perfect_order_classes(const OrderClassTable& table)
{
    PocVerdict v;
    for (const auto& [k, c] : table.entries()) {
        if (table.group_order() % c != 0)
            v.witnesses.push_back({k, c});
    }
    v.is_poc = v.witnesses.empty();
    return v;
}

DivisibilityVerdict necessary_divisibility_conditions(const OrderClassTable& table)
{
    DivisibilityVerdict v;
    const BigInt& order = table.group_order();

    // Cauchy: the primes dividing |G| are exactly those dividing some element
    // order, so the table keys suffice when |G| is too large to factor.
    std::set<u64> primes;
    if (order <= std::numeric_limits<u64>::max()) {
        for (const auto& f : factorize(order.convert_to<u64>()))
            primes.insert(f.prime);
    } else {
        for (const auto& [k, c] : table.entries())
            for (const auto& f : factorize(k))
                primes.insert(f.prime);
    }
    v.primes.assign(primes.begin(), primes.end());

    for (u64 p : v.primes) {
        if (order % (p - 1) != 0) {
            v.pass = false;
            v.failures.push_back(std::to_string(p - 1) + " = p - 1 for p = " + std::to_string(p) +
                                 " does not divide |G| = " + to_decimal(order));
        }
    }
    if (order != 1 && order % 2 != 0) {
        v.pass = false;
        v.failures.push_back("nontrivial group of odd order " + to_decimal(order));
    }
    return v;
}

std::vector<HamiltonianSpec> theorem_predicted_set(u64 max_order)
{
    std::vector<HamiltonianSpec> out;
    for (unsigned k = 1;; ++k) {
        u64 three_k;
        try {
            three_k = checked_pow(3, k);
            (void)checked_mul(8, three_k);
        } catch (const std::overflow_error&) {
            break;
        }
        if (8 * three_k > max_order)
            break;
        out.emplace_back(0, make_abelian({{3, k}}));
        if (three_k <= max_order / 16)
            out.emplace_back(1, make_abelian({{3, k}}));
    }
    std::sort(out.begin(), out.end(),
              [](const HamiltonianSpec& a, const HamiltonianSpec& b) { return canonical_less(a, b); });
    return out;
}

ClassificationReport classify_poc_hamiltonian(u64 max_order, const ClassifyOptions& options)
{
    ClassificationReport report;
    report.max_order = max_order;
    report.theorem_set = theorem_predicted_set(max_order);

    const std::vector<HamiltonianSpec> specs = enumerate_hamiltonian(max_order);
    report.examined = specs.size();
    for (const auto& h : specs)
        report.groups.push_back({h, h.order(), {}, false, false});

    for (const auto& g : report.groups) {
        if (g.order <= options.verify_brute_up_to && g.order > options.cap)
            throw CapExceeded(g.order.convert_to<u64>(), options.cap);
    }

    const auto n = static_cast<std::ptrdiff_t>(report.groups.size());
    std::vector<std::string> mismatch(report.groups.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            auto& g = report.groups[static_cast<std::size_t>(i)];
            const OrderClassTable table = hamiltonian_order_counts(g.spec);
            g.verdict = is_perfect_order_classes(table);
            if (g.order <= options.verify_brute_up_to) {
                const OrderClassTable brute = brute_force_order_counts_serial(g.spec.to_group_spec(), options.cap);
                const PocVerdict brute_verdict = is_perfect_order_classes(brute);
                g.brute_verified = true;
                if (brute != table || brute_verdict.is_poc != g.verdict.is_poc ||
                    brute_verdict.witnesses != g.verdict.witnesses)
                    mismatch[static_cast<std::size_t>(i)] = to_string(g.spec);
            }
        } catch (...) {
#pragma omp critical(ordclass_classify_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    for (std::size_t i = 0; i < report.groups.size(); ++i) {
        auto& g = report.groups[i];
        g.predicted = std::find(report.theorem_set.begin(), report.theorem_set.end(), g.spec) !=
                      report.theorem_set.end();
        if (g.verdict.is_poc)
            report.poc_groups.push_back(g.spec);
        if (g.brute_verified)
            ++report.brute_verified;
        if (!mismatch[i].empty())
            report.brute_mismatches.push_back(mismatch[i]);
    }
    report.match = report.poc_groups == report.theorem_set;
    return report;
}

AuditResult audit_poc_hamiltonian(const ClassificationReport& report)
{
    AuditResult result;
    result.audits = {{"divisible_by_3", 0, 0, {}},
                     {"no_prime_above_3", 0, 0, {}},
                     {"cyclic_3_part", 0, 0, {}},
                     {"elementary_rank_at_most_1", 0, 0, {}}};

    auto record = [&](std::size_t idx, bool ok, const HamiltonianSpec& h, const std::string& why) {
        auto& a = result.audits[idx];
        if (ok) {
            ++a.passed;
        } else {
            ++a.failed;
            a.flagged.push_back(to_string(h) + ": " + why);
            result.all_pass = false;
        }
    };

    for (const auto& h : report.poc_groups) {
        const AbelianSpec& odd = h.odd_part();
        const auto primes = odd.primes();
        record(0, odd.rank(3) > 0, h, "order not divisible by 3");
        const bool small_primes = std::all_of(primes.begin(), primes.end(), [](u64 p) { return p <= 3; });
        record(1, small_primes, h, "prime divisor > 3");
        record(2, odd.rank(3) == 1, h, "3-part has rank " + std::to_string(odd.rank(3)));
        record(3, h.e() <= 1, h, "elementary abelian 2-part has rank " + std::to_string(h.e()));
    }
    return result;
}

}  // namespace ordclass
