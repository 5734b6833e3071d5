// macmahon: coefficient tables, identity verification and congruence scans.
//
// Exit codes: 0 every requested check passed, 1 a check failed or a claim was
// refuted, 2 bad usage.  Progress goes to stderr; stdout stays parseable.

#include "macmahon/catalog.hpp"
#include "macmahon/congruence.hpp"
#include "macmahon/macmahon_sums.hpp"
#include "macmahon/mod_series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace macmahon;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Output {
    std::string format = "text";
    std::string path;
    bool quiet = false;

    void write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw UsageError("cannot write " + path);
        out << text;
    }
    void progress(const std::string& line) const
    {
        if (!quiet)
            std::cerr << line << '\n';
    }
};

json report_json(const IdentityReport& r)
{
    json params = json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    json j{{"id", r.id}, {"params", params}, {"pass", r.pass}};
    if (r.discrepancy_index) {
        j["discrepancy_index"] = *r.discrepancy_index;
        j["lhs"] = r.lhs_value;
        j["rhs"] = r.rhs_value;
    }
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

json claim_json(const CongruenceClaim& c)
{
    json j{{"claim", format_claim(c)},
           {"family", to_string(c.family)},
           {"t", c.t},
           {"p", c.p},
           {"a", c.a},
           {"b", c.b},
           {"conjecture", c.conjecture},
           {"label", c.label},
           {"status", status_label(c)},
           {"depth", c.depth}};
    if (c.family == ClaimFamily::Sigma) {
        json terms = json::array();
        for (const auto& [s, coeff] : c.sigma_terms)
            terms.push_back({s, coeff});
        j["sigma_terms"] = terms;
    }
    if (c.refuted_at) {
        j["refuted_at"] = *c.refuted_at;
        j["residue"] = *c.residue;
    }
    return j;
}

CongruenceClaim claim_from_json(const json& j)
{
    CongruenceClaim c;
    c.family = parse_claim_family(j.at("family").get<std::string>());
    c.t = j.at("t").get<unsigned>();
    c.p = j.at("p").get<std::uint32_t>();
    c.a = j.at("a").get<unsigned>();
    c.b = j.at("b").get<unsigned>();
    c.conjecture = j.value("conjecture", false);
    c.label = j.value("label", std::string());
    if (j.contains("sigma_terms"))
        for (const auto& term : j.at("sigma_terms"))
            c.sigma_terms.emplace_back(term.at(0).get<unsigned>(), term.at(1).get<long>());
    return c;
}

// A refuted conjecture is as much a failure as a refuted theorem.
bool claim_ok(const CongruenceClaim& c) { return c.status == ClaimStatus::Verified; }

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::vector<unsigned> unsigned_list(const std::string& text, const char* what)
{
    std::vector<unsigned> out;
    for (const auto& v : parse_value_list(text)) {
        if (!is_integer(v) || v < 1 || v > 1000000)
            throw UsageError(std::string(what) + " values must be positive integers");
        out.push_back(static_cast<unsigned>(v.get_num().get_ui()));
    }
    return out;
}

// --- coeffs ------------------------------------------------------------------

struct CoeffsConfig {
    std::string family;
    unsigned t = 0;
    std::size_t order = 0;
    std::optional<std::uint32_t> mod;
    std::string formula;
};

int cmd_coeffs(const CoeffsConfig& cfg, const Output& out)
{
    const Family family = parse_family(cfg.family);
    if (cfg.t == 0)
        throw UsageError("--t must be >= 1");
    if (cfg.order == 0)
        throw UsageError("--n must be >= 1");
    const Formula formula = cfg.formula.empty() ? default_formula(family) : parse_formula(cfg.formula);
    const auto allowed = formulas_for(family);
    if (std::find(allowed.begin(), allowed.end(), formula) == allowed.end()) {
        std::string keys;
        for (auto f : allowed)
            keys += (keys.empty() ? "" : ", ") + to_string(f);
        throw UsageError("formula " + to_string(formula) + " is not available for " + to_string(family) +
                         "; choose one of " + keys);
    }

    std::vector<BigInt> values;
    std::vector<std::uint32_t> residues;
    std::string source;
    if (cfg.mod) {
        require_scan_modulus(*cfg.mod);
        residues = coefficient_stream(family, cfg.t, *cfg.mod, cfg.order);
        source = family == Family::M ? "single-sum mod p" : "andrews-rose mod p";
    } else {
        values = coefficient_table(family, cfg.t, formula, cfg.order).values;
        source = to_string(formula);
    }

    std::ostringstream s;
    if (out.format == "json") {
        json rows = json::array();
        for (std::size_t n = 0; n <= cfg.order; ++n) {
            json row{{"n", n}};
            if (cfg.mod)
                row["residue"] = residues[n];
            else
                row["value"] = to_string(values[n]);
            rows.push_back(row);
        }
        json j{{"schema", 1}, {"command", "coeffs"}, {"family", to_string(family)}, {"t", cfg.t},
               {"order", cfg.order}, {"formula", source}, {"rows", rows}};
        if (cfg.mod)
            j["modulus"] = *cfg.mod;
        s << j.dump(2) << '\n';
    } else if (out.format == "csv") {
        s << "family,t,n,value" << (cfg.mod ? ",modulus,residue" : "") << '\n';
        for (std::size_t n = 0; n <= cfg.order; ++n) {
            s << to_string(family) << ',' << cfg.t << ',' << n << ',';
            if (cfg.mod)
                s << ',' << *cfg.mod << ',' << residues[n];
            else
                s << to_string(values[n]);
            s << '\n';
        }
    } else {
        s << "# " << to_string(family) << "(" << cfg.t << ", n) for n <= " << cfg.order << " via " << source;
        if (cfg.mod)
            s << ", residues mod " << *cfg.mod;
        s << '\n';
        for (std::size_t n = 0; n <= cfg.order; ++n)
            s << n << ' ' << (cfg.mod ? std::to_string(residues[n]) : to_string(values[n])) << '\n';
    }
    out.write(s.str());
    return kPass;
}

// --- verify ------------------------------------------------------------------

struct VerifyConfig {
    std::string id;
    std::map<std::string, std::string> params;
    std::optional<std::size_t> order;
    bool list = false;
};

int cmd_verify(const VerifyConfig& cfg, const Output& out)
{
    if (cfg.list) {
        std::ostringstream s;
        for (const auto& e : identity_catalog()) {
            s << e.id;
            for (const auto& p : e.params)
                s << " --" << p.name;
            s << (e.uses_order ? " --order" : "") << "  " << e.summary << '\n';
        }
        out.write(s.str());
        return kPass;
    }
    if (cfg.id.empty())
        throw UsageError("--id is required (use --list to see the catalog)");
    const IdentityEntry& entry = find_identity(cfg.id);
    if (entry.uses_order && !cfg.order)
        throw UsageError(entry.id + " needs an explicit --order");
    if (cfg.order && *cfg.order == 0)
        throw UsageError("--order must be >= 1");

    ParamGrid grid;
    for (const auto& [name, text] : cfg.params)
        grid[name] = parse_value_list(text);

    std::size_t done = 0;
    const GridRun run = run_grid(entry, grid, cfg.order, [&](const IdentityReport& r) {
        out.progress("[" + std::to_string(++done) + "] " + r.describe());
    });

    std::ostringstream s;
    if (out.format == "json") {
        json reports = json::array();
        for (const auto& r : run.reports)
            reports.push_back(report_json(r));
        json j{{"schema", 1}, {"command", "verify"}, {"id", entry.id}, {"pass", run.all_pass()},
               {"skipped_poles", run.skipped_poles}, {"reports", reports}};
        j["order"] = entry.uses_order ? json(cfg.order.value_or(entry.default_order)) : json(nullptr);
        s << j.dump(2) << '\n';
    } else if (out.format == "csv") {
        s << "id,params,pass,discrepancy_index,lhs,rhs\n";
        for (const auto& r : run.reports) {
            std::string params;
            for (const auto& [k, v] : r.params)
                params += (params.empty() ? "" : " ") + k + "=" + v;
            s << csv_escape(r.id) << ',' << csv_escape(params) << ',' << (r.pass ? "pass" : "fail") << ','
              << (r.discrepancy_index ? std::to_string(*r.discrepancy_index) : "") << ','
              << csv_escape(r.lhs_value) << ',' << csv_escape(r.rhs_value) << '\n';
        }
    } else {
        for (const auto& r : run.reports)
            s << r.describe() << '\n';
        const auto failed = std::count_if(run.reports.begin(), run.reports.end(),
                                          [](const IdentityReport& r) { return !r.pass; });
        s << entry.id << ": " << run.reports.size() - failed << "/" << run.reports.size() << " passed";
        if (run.skipped_poles)
            s << ", " << run.skipped_poles << " skipped at poles";
        s << '\n';
    }
    out.write(s.str());
    return run.all_pass() ? kPass : kFail;
}

// --- scan --------------------------------------------------------------------

struct ScanConfig {
    std::string suite;
    bool prospect = false;
    std::string family = "MO";
    std::string ts = "1..6";
    std::string primes = "5,7,11";
    std::vector<std::string> claims;
    std::string input;
    bool recheck = false;
    std::optional<std::size_t> order;
};

std::string claims_text(const std::vector<CongruenceClaim>& claims)
{
    std::ostringstream s;
    for (const auto& c : claims)
        s << c.describe() << '\n';
    return s.str();
}

std::string claims_csv(const std::vector<CongruenceClaim>& claims)
{
    std::ostringstream s;
    s << "claim,family,t,p,a,b,conjecture,status,depth,refuted_at,residue\n";
    for (const auto& c : claims)
        s << csv_escape(format_claim(c)) << ',' << to_string(c.family) << ',' << c.t << ',' << c.p << ',' << c.a
          << ',' << c.b << ',' << (c.conjecture ? 1 : 0) << ',' << status_label(c) << ',' << c.depth << ','
          << (c.refuted_at ? std::to_string(*c.refuted_at) : "") << ','
          << (c.residue ? std::to_string(*c.residue) : "") << '\n';
    return s.str();
}

int emit_claims(const std::vector<CongruenceClaim>& claims, std::size_t order, const Output& out, json extra = {})
{
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& c : claims)
            arr.push_back(claim_json(c));
        json j{{"schema", 1}, {"command", "scan"}, {"order", order}, {"claims", arr}};
        if (extra.is_object())
            j.update(extra);
        out.write(j.dump(2) + "\n");
    } else if (out.format == "csv") {
        out.write(claims_csv(claims));
    } else {
        out.write(claims_text(claims));
    }
    return std::all_of(claims.begin(), claims.end(), claim_ok) ? kPass : kFail;
}

int cmd_scan(const ScanConfig& cfg, const Output& out)
{
    const int modes = (!cfg.suite.empty()) + cfg.prospect + (!cfg.claims.empty()) + (!cfg.input.empty());
    if (modes != 1)
        throw UsageError("choose exactly one of --suite, --prospect, --claim, --input");
    if (!cfg.input.empty() && !cfg.recheck)
        throw UsageError("--input is only used together with --recheck");

    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        if (!in)
            throw UsageError("cannot read " + cfg.input);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("malformed report: ") + e.what());
        }
        if (doc.value("schema", 0) != 1 || doc.value("command", std::string()) != "scan")
            throw UsageError("input is not a schema-1 scan report");
        const std::size_t order = cfg.order.value_or(doc.at("order").get<std::size_t>());
        std::vector<CongruenceClaim> rechecked;
        std::size_t mismatches = 0;
        for (const auto& cj : doc.at("claims")) {
            auto c = check_claim(claim_from_json(cj), order);
            const std::string before = cj.at("status").get<std::string>();
            if (before != status_label(c) || (order == doc.at("order").get<std::size_t>() &&
                                              cj.value("refuted_at", json()) != claim_json(c).value("refuted_at", json()))) {
                ++mismatches;
                out.progress("status changed for " + format_claim(c) + ": " + before + " -> " + status_label(c));
            }
            rechecked.push_back(std::move(c));
        }
        const int rc = emit_claims(rechecked, order, out, json{{"mismatches", mismatches}});
        return mismatches ? kFail : rc;
    }

    if (!cfg.order)
        throw UsageError("scan needs an explicit --order");
    const std::size_t order = *cfg.order;
    if (order == 0)
        throw UsageError("--order must be >= 1");

    if (!cfg.suite.empty()) {
        if (cfg.suite != "paper")
            throw UsageError("unknown suite '" + cfg.suite + "'; known: paper");
        out.progress("checking the built-in congruence suite to depth " + std::to_string(order));
        return emit_claims(verify_paper_suite(order), order, out);
    }

    if (!cfg.claims.empty()) {
        std::vector<CongruenceClaim> claims;
        for (const auto& text : cfg.claims)
            claims.push_back(parse_claim(text));
        std::vector<CongruenceClaim> checked;
        for (auto& c : claims) {
            checked.push_back(check_claim(c, order));
            out.progress(checked.back().describe());
        }
        return emit_claims(checked, order, out);
    }

    const Family family = parse_family(cfg.family);
    const auto ts = unsigned_list(cfg.ts, "--t");
    std::vector<std::uint32_t> primes;
    for (unsigned p : unsigned_list(cfg.primes, "--p")) {
        require_scan_modulus(p);
        primes.push_back(p);
    }
    out.progress("prospecting " + to_string(family) + " to depth " + std::to_string(order));
    const ProspectResult res = prospect(family, ts, primes, order);
    std::vector<CongruenceClaim> claims;
    json cand = json::array();
    for (const auto& c : res.candidates) {
        claims.push_back(c.claim);
        auto cj = claim_json(c.claim);
        cj["informative"] = c.informative;
        cj["chance"] = c.chance;
        cj["known"] = c.known;
        cand.push_back(cj);
    }
    if (out.format == "json") {
        json j{{"schema", 1},
               {"command", "prospect"},
               {"order", order},
               {"family", to_string(family)},
               {"progressions_tested", res.progressions_tested},
               {"expected_by_chance", res.expected_by_chance},
               {"candidates", cand}};
        out.write(j.dump(2) + "\n");
    } else if (out.format == "csv") {
        out.write(claims_csv(claims));
    } else {
        std::ostringstream s;
        for (const auto& c : res.candidates)
            s << c.claim.describe() << "  informative=" << c.informative << " chance=" << c.chance
              << (c.known ? " known" : " new") << '\n';
        s << res.progressions_tested << " progressions tested, " << res.expected_by_chance
          << " expected to vanish by chance\n";
        out.write(s.str());
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MacMahon-type q-series: coefficients, identities, congruences"};
    app.require_subcommand(1);
    Output out;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--output", out.path, "write to this file instead of stdout");
        cmd->add_flag("--quiet", out.quiet, "no progress on stderr");
    };

    CoeffsConfig coeffs;
    auto* c = app.add_subcommand("coeffs", "coefficient table of M(t,n) or MO(t,n)");
    c->add_option("--family", coeffs.family, "M or MO")->required();
    c->add_option("--t", coeffs.t, "t >= 1")->required();
    c->add_option("--n,--order", coeffs.order, "largest n")->required();
    c->add_option("--mod", coeffs.mod, "residues modulo this odd prime");
    c->add_option("--formula", coeffs.formula, "generating-function formula");
    add_output(c);

    VerifyConfig verify;
    std::map<std::string, std::string> vparams;
    auto* v = app.add_subcommand("verify", "check a catalogued identity over a parameter grid");
    v->add_option("--id", verify.id, "identity id");
    v->add_flag("--list", verify.list, "list catalogued identities");
    for (const char* name : {"t", "n", "x", "z", "c"})
        v->add_option(std::string("--") + name, vparams[name], "values, e.g. 1..4 or 0,1,1/2");
    v->add_option("--order", verify.order, "truncation order");
    add_output(v);

    ScanConfig scan;
    auto* s = app.add_subcommand("scan", "congruence suite, single claims and prospecting");
    s->add_option("--suite", scan.suite, "built-in suite (paper)");
    s->add_flag("--prospect", scan.prospect, "search for vanishing progressions");
    s->add_option("--family", scan.family, "M or MO (prospecting)");
    s->add_option("--t", scan.ts, "t values (prospecting)");
    s->add_option("--p", scan.primes, "primes (prospecting)");
    s->add_option("--claim", scan.claims, "family,t,p,a,b");
    s->add_option("--input", scan.input, "earlier JSON scan report");
    s->add_flag("--recheck", scan.recheck, "re-run the claims of --input");
    s->add_option("--order", scan.order, "depth");
    add_output(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (c->parsed())
            return cmd_coeffs(coeffs, out);
        if (v->parsed()) {
            for (const auto& [name, text] : vparams)
                if (!text.empty())
                    verify.params[name] = text;
            return cmd_verify(verify, out);
        }
        return cmd_scan(scan, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}
