#pragma once

// Isomorphism-class descriptions for groups of the form (optional Q) x
// (finite abelian group), with the abelian part kept in primary form: a
// sorted multiset of prime-power cyclic factors.

#include <compare>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ordclass/bigint.hpp"
#include "ordclass/numtheory.hpp"

namespace ordclass {

/// Cyclic factor C_{prime^exponent}.
struct PrimePower {
    u64 prime;
    unsigned exponent;

    u64 size() const { return checked_pow(prime, exponent); }

    friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

class AbelianSpec {
public:
    /// Trivial group.
    AbelianSpec() = default;

    /// Validates and canonicalizes. Throws std::invalid_argument on a
    /// non-prime base or zero exponent, std::overflow_error if the order
    /// does not fit in 64 bits.
    explicit AbelianSpec(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const { return factors_; }
    u64 order() const { return order_; }
    bool is_trivial() const { return factors_.empty(); }

    /// Number of cyclic factors with the given prime.
    unsigned rank(u64 prime) const;
    /// Exponents of the factors with the given prime, ascending.
    std::vector<unsigned> p_exponents(u64 prime) const;
    /// Distinct primes, ascending.
    std::vector<u64> primes() const;
    /// Least common multiple of factor sizes.
    u64 exponent() const;

    /// Sub-product of the factors whose prime satisfies pred.
    template <typename Pred>
    AbelianSpec filter(Pred pred) const
    {
        std::vector<PrimePower> kept;
        for (const auto& f : factors_)
            if (pred(f.prime))
                kept.push_back(f);
        return AbelianSpec(std::move(kept));
    }

    friend bool operator==(const AbelianSpec& a, const AbelianSpec& b) { return a.factors_ == b.factors_; }
    friend auto operator<=>(const AbelianSpec& a, const AbelianSpec& b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<PrimePower> factors_;
    u64 order_ = 1;
};

AbelianSpec make_abelian(std::vector<PrimePower> factors);

/// Primary decomposition of the cyclic group C_n.
AbelianSpec cyclic(u64 n);

/// Every abelian group of exactly this order, one spec per isomorphism class,
/// in canonical order.
std::vector<AbelianSpec> enumerate_abelian(u64 order);

struct GroupSpec {
    bool has_quaternion = false;
    AbelianSpec abelian;

    u64 order() const { return checked_mul(has_quaternion ? 8 : 1, abelian.order()); }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
    friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

/// Q x C2^e x A with A of odd order.
class HamiltonianSpec {
public:
    /// Throws std::invalid_argument if odd_part contains the prime 2.
    HamiltonianSpec(unsigned e, AbelianSpec odd_part);

    unsigned e() const { return e_; }
    const AbelianSpec& odd_part() const { return odd_part_; }

    /// 2^{e+3} |A|, exact for any e.
    BigInt order() const;

    /// Throws std::overflow_error when the order does not fit in 64 bits.
    GroupSpec to_group_spec() const;

    friend bool operator==(const HamiltonianSpec&, const HamiltonianSpec&) = default;

private:
    unsigned e_;
    AbelianSpec odd_part_;
};

/// Order first, then canonical spec comparison.
bool canonical_less(const GroupSpec& a, const GroupSpec& b);
bool canonical_less(const HamiltonianSpec& a, const HamiltonianSpec& b);

struct HamiltonianRejection {
    enum class Reason { NoQuaternion, NonElementaryTwoPart };
    Reason reason;
    std::string message;
};

/// Succeeds iff spec carries Q and every 2-factor has exponent 1.
std::variant<HamiltonianSpec, HamiltonianRejection> to_hamiltonian(const GroupSpec& spec);

/// Every Hamiltonian group of order <= max_order, one per isomorphism class,
/// ascending by order then canonically.
std::vector<HamiltonianSpec> enumerate_hamiltonian(u64 max_order);

/// Throws std::invalid_argument when both operands carry Q.
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);

// ---------------------------------------------------------------------------
// Text form
//
//   spec    := [ "Q" ] | [ "Q" "x" ] factor { "x" factor }
//   factor  := "C" n | "C2^" e
//
// Case-insensitive, no whitespace. C<n> with composite n is decomposed into
// primary form; C1 is the trivial group.
// ---------------------------------------------------------------------------

class SpecParseError : public std::invalid_argument {
public:
    SpecParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

GroupSpec parse_group_spec(std::string_view text);

/// Canonical rendering, e.g. "QxC2^2xC3xC9"; trivial group is "C1".
std::string to_string(const GroupSpec& spec);
std::string to_string(const AbelianSpec& spec);
std::string to_string(const HamiltonianSpec& spec);

}  // namespace ordclass
