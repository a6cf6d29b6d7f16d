#include "ordclass/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordclass/analysis.hpp"

namespace ordclass::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Table };

struct Globals {
    Format format = Format::Json;
    u64 cap = kDefaultBruteForceCap;
};

struct Outcome {
    int code = kOk;
    Json result;
    std::string text;  // --format table rendering
};

// Raised for semantic argument problems discovered after CLI11 parsing.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json table_json(const OrderClassTable& t)
{
    Json arr = Json::array();
    for (const auto& [k, c] : t.entries())
        arr.push_back(Json::array({k, to_decimal(c)}));
    return arr;
}

Json witnesses_json(const PocVerdict& v)
{
    Json arr = Json::array();
    for (const auto& w : v.witnesses)
        arr.push_back(Json::array({w.order, to_decimal(w.count)}));
    return arr;
}

std::string render_table(const OrderClassTable& t, const std::string& title)
{
    std::ostringstream os;
    os << title << "  |G| = " << t.group_order() << "\n";
    os << std::setw(12) << "order" << std::setw(24) << "count" << "\n";
    for (const auto& [k, c] : t.entries())
        os << std::setw(12) << k << std::setw(24) << c << "\n";
    return os.str();
}

Json spec_entry(const HamiltonianSpec& h)
{
    return Json{{"spec", to_string(h)}, {"order", to_decimal(h.order())}};
}

// ---------------------------------------------------------------------------
// counts
// ---------------------------------------------------------------------------

struct ClosedForm {
    OrderClassTable table;
    std::string route;
};

ClosedForm closed_form(const GroupSpec& spec)
{
    const auto h = to_hamiltonian(spec);
    if (const auto* hs = std::get_if<HamiltonianSpec>(&h))
        return {hamiltonian_order_counts(*hs), "hamiltonian_formula"};
    return {convolved_order_counts(spec), "lcm_convolution"};
}

Outcome cmd_counts(const std::string& text, const std::string& method, const Globals& g)
{
    const GroupSpec spec = parse_group_spec(text);
    Outcome o;
    o.result["spec"] = to_string(spec);
    o.result["order"] = std::to_string(spec.order());

    std::optional<OrderClassTable> closed, brute;
    if (method != "brute") {
        ClosedForm cf = closed_form(spec);
        o.result["closed_route"] = cf.route;
        o.result["closed"] = table_json(cf.table);
        o.text += render_table(cf.table, to_string(spec) + " [closed form: " + cf.route + "]");
        closed = std::move(cf.table);
    }
    if (method != "closed") {
        brute = brute_force_order_counts(spec, g.cap);
        o.result["brute"] = table_json(*brute);
        o.text += render_table(*brute, to_string(spec) + " [enumeration]");
    }
    if (closed && brute) {
        const bool agree = *closed == *brute;
        o.result["agree"] = agree;
        o.text += std::string("agree: ") + (agree ? "yes" : "NO") + "\n";
        if (!agree)
            o.code = kPropertyFails;
    }
    return o;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

Outcome cmd_check(const std::string& text)
{
    const GroupSpec spec = parse_group_spec(text);
    const ClosedForm cf = closed_form(spec);
    const PocVerdict v = is_perfect_order_classes(cf.table);

    Outcome o;
    o.result["spec"] = to_string(spec);
    o.result["order"] = std::to_string(spec.order());
    o.result["table"] = table_json(cf.table);
    o.result["is_poc"] = v.is_poc;
    o.result["witnesses"] = witnesses_json(v);

    std::ostringstream os;
    os << render_table(cf.table, to_string(spec));
    os << "perfect order classes: " << (v.is_poc ? "yes" : "no") << "\n";
    for (const auto& w : v.witnesses)
        os << "  #(" << w.order << ") = " << w.count << " does not divide " << spec.order() << "\n";

    if (v.is_poc) {
        const DivisibilityVerdict d = necessary_divisibility_conditions(cf.table);
        o.result["divisibility"] = Json{{"pass", d.pass}, {"primes", d.primes}, {"failures", d.failures}};
        os << "p - 1 divides |G| for every prime p | |G|: " << (d.pass ? "yes" : "NO") << "\n";
        if (!d.pass)
            o.code = kPropertyFails;
    } else {
        o.code = kPropertyFails;
    }
    o.text = os.str();
    return o;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

void write_csv(const std::string& path, const ClassificationReport& r)
{
    std::ofstream csv(path);
    if (!csv)
        throw UsageError("cannot open CSV output " + path);
    csv << "spec,order,e,odd_part,is_poc,predicted,brute_verified,witnesses\n";
    for (const auto& g : r.groups) {
        std::string w;
        for (const auto& x : g.verdict.witnesses)
            w += (w.empty() ? "" : ";") + std::to_string(x.order) + ":" + to_decimal(x.count);
        csv << to_string(g.spec) << ',' << g.order << ',' << g.spec.e() << ',' << to_string(g.spec.odd_part()) << ','
            << (g.verdict.is_poc ? "true" : "false") << ',' << (g.predicted ? "true" : "false") << ','
            << (g.brute_verified ? "true" : "false") << ',' << w << '\n';
    }
}

Outcome cmd_classify(u64 max_order, u64 verify_brute, const std::string& csv_path, const Globals& g)
{
    if (max_order < 8)
        throw UsageError("--max-order must be >= 8");

    ClassifyOptions opts;
    opts.verify_brute_up_to = verify_brute;
    opts.cap = g.cap;
    const ClassificationReport r = classify_poc_hamiltonian(max_order, opts);
    const AuditResult audit = audit_poc_hamiltonian(r);
    if (!csv_path.empty())
        write_csv(csv_path, r);

    Outcome o;
    Json poc = Json::array(), theorem = Json::array(), audits = Json::array();
    for (const auto& h : r.poc_groups)
        poc.push_back(spec_entry(h));
    for (const auto& h : r.theorem_set)
        theorem.push_back(spec_entry(h));
    for (const auto& a : audit.audits)
        audits.push_back(Json{{"name", a.name}, {"passed", a.passed}, {"failed", a.failed}, {"flagged", a.flagged}});

    o.result["max_order"] = r.max_order;
    o.result["examined"] = r.examined;
    o.result["poc_groups"] = poc;
    o.result["theorem_set"] = theorem;
    o.result["match"] = r.match;
    o.result["brute_verified"] = r.brute_verified;
    o.result["brute_mismatches"] = r.brute_mismatches;
    o.result["audit"] = Json{{"all_pass", audit.all_pass}, {"audits", audits}};

    std::ostringstream os;
    os << "Hamiltonian groups of order <= " << r.max_order << ": " << r.examined << " examined, " << r.brute_verified
       << " re-verified by enumeration\n";
    os << std::setw(28) << std::left << "group" << std::setw(12) << std::right << "order" << std::setw(8) << "poc"
       << std::setw(11) << "predicted" << "\n";
    for (const auto& grp : r.groups) {
        os << std::setw(28) << std::left << to_string(grp.spec) << std::setw(12) << std::right << grp.order
           << std::setw(8) << (grp.verdict.is_poc ? "yes" : "no") << std::setw(11) << (grp.predicted ? "yes" : "no")
           << "\n";
    }
    os << "match with predicted set: " << (r.match ? "yes" : "NO") << "\n";
    for (const auto& a : audit.audits)
        os << "audit " << a.name << ": " << a.passed << " passed, " << a.failed << " failed\n";
    if (!r.brute_mismatches.empty())
        os << "enumeration mismatches: " << r.brute_mismatches.size() << "\n";
    o.text = os.str();

    if (!r.match || !audit.all_pass || !r.brute_mismatches.empty())
        o.code = kPropertyFails;
    return o;
}

// ---------------------------------------------------------------------------
// conspp
// ---------------------------------------------------------------------------

Outcome cmd_conspp(u64 limit)
{
    if (limit < 2)
        throw UsageError("--limit must be >= 2");
    const auto solutions = solve_consecutive_prime_powers(limit);

    Outcome o;
    Json arr = Json::array();
    bool all_ok = true;
    std::ostringstream os;
    os << std::setw(12) << "p" << std::setw(4) << "m" << std::setw(12) << "q" << std::setw(4) << "n" << "  case\n";
    for (const auto& s : solutions) {
        const bool holds = checked_pow(s.p, s.m) - 1 == checked_pow(s.q, s.n);
        all_ok = all_ok && holds && s.tag != PrimePowerCase::Unclassified;
        arr.push_back(Json{{"p", s.p}, {"m", s.m}, {"q", s.q}, {"n", s.n}, {"case", to_string(s.tag)}});
        os << std::setw(12) << s.p << std::setw(4) << s.m << std::setw(12) << s.q << std::setw(4) << s.n << "  "
           << to_string(s.tag) << "\n";
    }
    o.result["limit"] = limit;
    o.result["count"] = solutions.size();
    o.result["all_classified"] = all_ok;
    o.result["solutions"] = arr;
    o.text = os.str();
    if (!all_ok)
        o.code = kPropertyFails;
    return o;
}

// ---------------------------------------------------------------------------
// hall
// ---------------------------------------------------------------------------

Outcome cmd_hall(const std::string& text_a, const std::string& text_b, const Globals& g)
{
    const GroupSpec a = parse_group_spec(text_a);
    const GroupSpec b = parse_group_spec(text_b);
    if (gcd(a.order(), b.order()) != 1)
        throw UsageError("orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) +
                         " are not coprime");
    const HallVerdict v = hall_projection_check(a, b, g.cap);

    Outcome o;
    Json counts = Json::array();
    std::ostringstream os;
    os << "Hall factor " << to_string(a) << " in " << to_string(a) << " x " << to_string(b) << "\n";
    os << std::setw(12) << "order" << std::setw(16) << "in product" << std::setw(16) << "in factor" << "\n";
    for (const auto& c : v.counts) {
        counts.push_back(Json{{"order", c.order}, {"in_product", c.in_product}, {"in_factor", c.in_factor}});
        os << std::setw(12) << c.order << std::setw(16) << c.in_product << std::setw(16) << c.in_factor << "\n";
    }
    o.result["a"] = to_string(a);
    o.result["b"] = to_string(b);
    o.result["pass"] = v.pass;
    o.result["counts"] = counts;
    if (v.counterexample) {
        o.result["counterexample"] =
            Json{{"a_part", to_string(v.counterexample->first)}, {"b_part", to_string(v.counterexample->second)}};
    }
    o.result["detail"] = v.detail;
    os << "pass: " << (v.pass ? "yes" : "no") << "\n";
    if (!v.detail.empty())
        os << v.detail << "\n";
    o.text = os.str();
    if (!v.pass)
        o.code = kPropertyFails;
    return o;
}

// ---------------------------------------------------------------------------

std::string guess_command(const std::vector<std::string>& args)
{
    for (const auto& a : args)
        if (a == "counts" || a == "check" || a == "classify" || a == "conspp" || a == "hall")
            return a;
    return "";
}

void emit(std::ostream& out, const Json& doc)
{
    out << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Order-class tables and perfect-order-class checks for Q x abelian groups", "ordclass"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--cap", g.cap, "Maximum group order enumerated by brute force")->capture_default_str();

    std::string spec_a, spec_b, method = "closed", csv_path;
    u64 max_order = 0, verify_brute = 5000, limit = 0;

    auto* counts = app.add_subcommand("counts", "Order-class table of a group");
    counts->add_option("spec", spec_a, "Group, e.g. QxC2xC3")->required();
    counts->add_option("--method", method, "closed, brute or both")
        ->check(CLI::IsMember({"closed", "brute", "both"}))
        ->capture_default_str();

    auto* check = app.add_subcommand("check", "Perfect-order-classes test");
    check->add_option("spec", spec_a, "Group, e.g. QxC3")->required();

    auto* classify = app.add_subcommand("classify", "Classify Hamiltonian groups with perfect order classes");
    classify->add_option("--max-order", max_order, "Largest group order enumerated")->required();
    classify->add_option("--verify-brute", verify_brute, "Re-verify groups up to this order by enumeration")
        ->capture_default_str();
    classify->add_option("--csv", csv_path, "Also write one CSV row per examined group");

    auto* conspp = app.add_subcommand("conspp", "Solve p^m - 1 = q^n over prime powers");
    conspp->add_option("--limit", limit, "Largest p^m searched")->required();

    auto* hall = app.add_subcommand("hall", "Check the Hall factor A inside A x B");
    hall->add_option("a", spec_a, "Hall factor")->required();
    hall->add_option("b", spec_b, "Complement, of coprime order")->required();

    std::string command = guess_command(args);
    auto fail = [&](const std::string& kind, const std::string& message, int code, const Json& inputs,
                    std::optional<std::size_t> position = std::nullopt) {
        err << "ordclass: " << message << "\n";
        if (g.format == Format::Json) {
            Json error{{"type", kind}, {"message", message}};
            if (position)
                error["position"] = *position;
            emit(out, Json{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", inputs},
                           {"error", error}});
        }
        return code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        if (format == "table")
            g.format = Format::Table;
        return fail("usage", e.what(), kUsageError, Json::object());
    }
    g.format = format == "table" ? Format::Table : Format::Json;

    Json inputs;
    if (*counts) {
        inputs = Json{{"spec", spec_a}, {"method", method}, {"cap", g.cap}};
    } else if (*check) {
        inputs = Json{{"spec", spec_a}};
    } else if (*classify) {
        inputs = Json{{"max_order", max_order}, {"verify_brute", verify_brute}, {"cap", g.cap}};
        if (!csv_path.empty())
            inputs["csv"] = csv_path;
    } else if (*conspp) {
        inputs = Json{{"limit", limit}};
    } else if (*hall) {
        inputs = Json{{"a", spec_a}, {"b", spec_b}, {"cap", g.cap}};
    }

    Outcome o;
    try {
        if (*counts)
            o = cmd_counts(spec_a, method, g);
        else if (*check)
            o = cmd_check(spec_a);
        else if (*classify)
            o = cmd_classify(max_order, verify_brute, csv_path, g);
        else if (*conspp)
            o = cmd_conspp(limit);
        else if (*hall)
            o = cmd_hall(spec_a, spec_b, g);
    } catch (const SpecParseError& e) {
        return fail("parse", e.what(), kUsageError, inputs, e.position());
    } catch (const CapExceeded& e) {
        return fail("cap", e.what(), kCapRefused, inputs);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), kUsageError, inputs);
    } catch (const std::exception& e) {
        return fail("error", e.what(), kUsageError, inputs);
    }

    if (g.format == Format::Json) {
        emit(out, Json{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", inputs},
                       {"result", o.result}});
    } else {
        out << o.text;
    }
    return o.code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace ordclass::cli
