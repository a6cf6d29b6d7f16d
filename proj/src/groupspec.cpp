#include "ordclass/groupspec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace ordclass {

AbelianSpec::AbelianSpec(std::vector<PrimePower> factors)
    : factors_(std::move(factors))
{
    for (const auto& f : factors_) {
        if (!is_prime(f.prime))
            throw std::invalid_argument("cyclic factor base " + std::to_string(f.prime) + " is not prime");
        if (f.exponent == 0)
            throw std::invalid_argument("cyclic factor exponent must be >= 1");
    }
    std::sort(factors_.begin(), factors_.end());
    for (const auto& f : factors_)
        order_ = checked_mul(order_, f.size());
}

unsigned AbelianSpec::rank(u64 prime) const
{
    return static_cast<unsigned>(
        std::count_if(factors_.begin(), factors_.end(), [&](const PrimePower& f) { return f.prime == prime; }));
}

std::vector<unsigned> AbelianSpec::p_exponents(u64 prime) const
{
    std::vector<unsigned> out;
    for (const auto& f : factors_)
        if (f.prime == prime)
            out.push_back(f.exponent);
    return out;
}

std::vector<u64> AbelianSpec::primes() const
{
    std::vector<u64> out;
    for (const auto& f : factors_)
        if (out.empty() || out.back() != f.prime)
            out.push_back(f.prime);
    return out;
}

u64 AbelianSpec::exponent() const
{
    u64 r = 1;
    for (const auto& f : factors_)
        r = lcm(r, f.size());
    return r;
}

AbelianSpec make_abelian(std::vector<PrimePower> factors)
{
    return AbelianSpec(std::move(factors));
}

AbelianSpec cyclic(u64 n)
{
    std::vector<PrimePower> factors;
    for (const auto& [p, e] : factorize(n))
        factors.push_back({p, e});
    return AbelianSpec(std::move(factors));
}

std::vector<AbelianSpec> enumerate_abelian(u64 order)
{
    std::vector<std::vector<PrimePower>> partial{{}};
    for (const auto& [p, k] : factorize(order)) {
        std::vector<std::vector<PrimePower>> next;
        for (const auto& parts : integer_partitions(k)) {
            for (const auto& prefix : partial) {
                auto extended = prefix;
                for (unsigned part : parts)
                    extended.push_back({p, part});
                next.push_back(std::move(extended));
            }
        }
        partial = std::move(next);
    }
    std::vector<AbelianSpec> out;
    out.reserve(partial.size());
    for (auto& factors : partial)
        out.emplace_back(std::move(factors));
    std::sort(out.begin(), out.end());
    return out;
}

HamiltonianSpec::HamiltonianSpec(unsigned e, AbelianSpec odd_part)
    : e_(e)
    , odd_part_(std::move(odd_part))
{
    if (odd_part_.order() % 2 == 0)
        throw std::invalid_argument("Hamiltonian odd part must have odd order");
}

BigInt HamiltonianSpec::order() const
{
    return pow2(e_ + 3) * odd_part_.order();
}

GroupSpec HamiltonianSpec::to_group_spec() const
{
    std::vector<PrimePower> factors(e_, PrimePower{2, 1});
    factors.insert(factors.end(), odd_part_.factors().begin(), odd_part_.factors().end());
    GroupSpec g{true, AbelianSpec(std::move(factors))};
    (void)g.order();  // overflow check
    return g;
}

bool canonical_less(const GroupSpec& a, const GroupSpec& b)
{
    const u64 oa = a.order();
    const u64 ob = b.order();
    if (oa != ob)
        return oa < ob;
    return a < b;
}

namespace {

std::vector<PrimePower> hamiltonian_factors(const HamiltonianSpec& h)
{
    std::vector<PrimePower> factors(h.e(), PrimePower{2, 1});
    factors.insert(factors.end(), h.odd_part().factors().begin(), h.odd_part().factors().end());
    return factors;
}

}  // namespace

bool canonical_less(const HamiltonianSpec& a, const HamiltonianSpec& b)
{
    const BigInt oa = a.order();
    const BigInt ob = b.order();
    if (oa != ob)
        return oa < ob;
    return hamiltonian_factors(a) < hamiltonian_factors(b);
}

std::variant<HamiltonianSpec, HamiltonianRejection> to_hamiltonian(const GroupSpec& spec)
{
    using Reason = HamiltonianRejection::Reason;
    if (!spec.has_quaternion)
        return HamiltonianRejection{Reason::NoQuaternion, "no quaternion factor: abelian groups are not Hamiltonian"};
    for (const auto& f : spec.abelian.factors()) {
        if (f.prime == 2 && f.exponent > 1)
            return HamiltonianRejection{
                Reason::NonElementaryTwoPart,
                "2-part is not elementary abelian: factor C" + std::to_string(f.size()) + " has exponent > 1"};
    }
    return HamiltonianSpec(spec.abelian.rank(2), spec.abelian.filter([](u64 p) { return p != 2; }));
}

std::vector<HamiltonianSpec> enumerate_hamiltonian(u64 max_order)
{
    std::vector<HamiltonianSpec> out;
    if (max_order < 8)
        return out;
    const u64 odd_budget = max_order / 8;
    for (u64 n = 1; n <= odd_budget; n += 2) {
        for (const auto& odd : enumerate_abelian(n)) {
            unsigned e = 0;
            for (u64 two_part = 1; two_part <= odd_budget / n; two_part *= 2, ++e) {
                out.emplace_back(e, odd);
                if (two_part > odd_budget / 2)
                    break;
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const HamiltonianSpec& a, const HamiltonianSpec& b) { return canonical_less(a, b); });
    return out;
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b)
{
    if (a.has_quaternion && b.has_quaternion)
        throw std::invalid_argument("direct product would carry two quaternion factors");
    std::vector<PrimePower> factors = a.abelian.factors();
    factors.insert(factors.end(), b.abelian.factors().begin(), b.abelian.factors().end());
    return GroupSpec{a.has_quaternion || b.has_quaternion, AbelianSpec(std::move(factors))};
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

SpecParseError::SpecParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("spec parse error at position " + std::to_string(position) + ": " + what)
    , position_(position)
{
}

namespace {

u64 parse_number(std::string_view text, std::size_t offset, std::size_t& consumed)
{
    u64 value = 0;
    const auto* first = text.data() + offset;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw SpecParseError("number out of range", offset);
    if (ec != std::errc() || ptr == first)
        throw SpecParseError("expected a decimal number", offset);
    consumed = static_cast<std::size_t>(ptr - first);
    return value;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text)
{
    if (text.empty())
        throw SpecParseError("empty spec", 0);

    std::string lower(text);
    for (std::size_t i = 0; i < lower.size(); ++i) {
        const auto c = static_cast<unsigned char>(lower[i]);
        if (std::isspace(c))
            throw SpecParseError("whitespace is not allowed", i);
        lower[i] = static_cast<char>(std::tolower(c));
    }
    const std::string_view s = lower;

    GroupSpec spec;
    std::vector<PrimePower> factors;
    std::size_t pos = 0;
    bool first = true;
    while (true) {
        const std::size_t end = std::min(s.find('x', pos), s.size());
        const std::string_view token = s.substr(pos, end - pos);
        if (token.empty())
            throw SpecParseError("empty factor", pos);

        if (token == "q") {
            if (!first)
                throw SpecParseError("Q must be the first factor and may appear only once", pos);
            spec.has_quaternion = true;
        } else if (token.front() == 'c') {
            std::size_t used = 0;
            const u64 n = parse_number(s.substr(0, end), pos + 1, used);
            if (n == 0)
                throw SpecParseError("cyclic order must be >= 1", pos + 1);
            std::size_t cursor = pos + 1 + used;
            u64 copies = 1;
            if (cursor < end && s[cursor] == '^') {
                if (n != 2)
                    throw SpecParseError("power shorthand is only defined for C2", cursor);
                copies = parse_number(s.substr(0, end), cursor + 1, used);
                cursor += 1 + used;
                if (copies > 64)
                    throw SpecParseError("C2^e with e > 64 exceeds the 64-bit order range", pos);
            }
            if (cursor != end)
                throw SpecParseError("unexpected character", cursor);
            for (const auto& [p, e] : factorize(n))
                for (u64 c = 0; c < copies; ++c)
                    factors.push_back({p, e});
        } else {
            throw SpecParseError("expected 'Q' or 'C<n>'", pos);
        }

        first = false;
        if (end == s.size())
            break;
        pos = end + 1;
    }

    try {
        spec.abelian = AbelianSpec(std::move(factors));
        (void)spec.order();
    } catch (const std::overflow_error&) {
        throw SpecParseError("group order exceeds 64 bits", 0);
    }
    return spec;
}

namespace {

std::string render(bool has_quaternion, unsigned two_rank, const std::vector<PrimePower>& rest)
{
    std::vector<std::string> parts;
    if (has_quaternion)
        parts.emplace_back("Q");
    if (two_rank == 1)
        parts.emplace_back("C2");
    else if (two_rank > 1)
        parts.push_back("C2^" + std::to_string(two_rank));
    for (const auto& f : rest)
        parts.push_back("C" + std::to_string(f.size()));
    if (parts.empty())
        return "C1";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += "x" + parts[i];
    return out;
}

std::string render(bool has_quaternion, const AbelianSpec& a)
{
    std::vector<PrimePower> rest;
    unsigned two_rank = 0;
    for (const auto& f : a.factors()) {
        if (f.prime == 2 && f.exponent == 1)
            ++two_rank;
        else
            rest.push_back(f);
    }
    return render(has_quaternion, two_rank, rest);
}

}  // namespace

std::string to_string(const GroupSpec& spec)
{
    return render(spec.has_quaternion, spec.abelian);
}

std::string to_string(const AbelianSpec& spec)
{
    return render(false, spec);
}

std::string to_string(const HamiltonianSpec& spec)
{
    return render(true, spec.e(), spec.odd_part().factors());
}

}  // namespace ordclass
