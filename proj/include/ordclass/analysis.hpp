#pragma once

#include <string>
#include <vector>

#include "ordclass/bruteforce.hpp"
#include "ordclass/closedform.hpp"
#include "ordclass/groupspec.hpp"
#include "ordclass/order_table.hpp"

namespace ordclass {

struct PocWitness {
    u64 order;
    BigInt count;

    friend bool operator==(const PocWitness&, const PocWitness&) = default;
};

/// A group has perfect order classes when every nonzero #(k) divides |G|.
struct PocVerdict {
    bool is_poc = true;
    /// Orders whose count does not divide |G|, ascending.
    std::vector<PocWitness> witnesses;
};

PocVerdict is_perfect_order_classes(const OrderClassTable& table);

struct DivisibilityVerdict {
    bool pass = true;
    std::vector<u64> primes;
    std::vector<std::string> failures;
};

/// For a table already known to be POC: (p - 1) | |G| for each prime
/// p | |G|, and |G| is even unless the group is trivial. A failure means
/// something upstream is wrong.
DivisibilityVerdict necessary_divisibility_conditions(const OrderClassTable& table);

/// Q x C_{3^k} with 8*3^k <= max_order and Q x C2 x C_{3^k} with
/// 16*3^k <= max_order, k >= 1, in canonical order.
std::vector<HamiltonianSpec> theorem_predicted_set(u64 max_order);

struct ClassifiedGroup {
    HamiltonianSpec spec;
    BigInt order;
    PocVerdict verdict;
    bool predicted = false;
    bool brute_verified = false;
};

struct ClassificationReport {
    u64 max_order = 0;
    std::size_t examined = 0;
    /// One row per enumerated Hamiltonian group, canonical order.
    std::vector<ClassifiedGroup> groups;
    std::vector<HamiltonianSpec> poc_groups;
    std::vector<HamiltonianSpec> theorem_set;
    bool match = false;
    /// Groups whose closed-form table and POC verdict were re-derived by
    /// enumeration.
    std::size_t brute_verified = 0;
    /// Specs where the enumerated table disagreed with the formula table.
    std::vector<std::string> brute_mismatches;
};

struct ClassifyOptions {
    /// Re-verify every group of order <= this bound by enumeration.
    u64 verify_brute_up_to = 5000;
    u64 cap = kDefaultBruteForceCap;
    bool parallel = true;
};

/// Throws CapExceeded when verify_brute_up_to exceeds cap and some examined
/// group falls between them.
ClassificationReport classify_poc_hamiltonian(u64 max_order, const ClassifyOptions& options = {});

struct LemmaAudit {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> flagged;
};

struct AuditResult {
    /// Fixed order: divisible_by_3, no_prime_above_3, cyclic_3_part,
    /// elementary_rank_at_most_1.
    std::vector<LemmaAudit> audits;
    bool all_pass = true;
};

/// Structural checks on every POC group of a report.
AuditResult audit_poc_hamiltonian(const ClassificationReport& report);

}  // namespace ordclass
