// Command-line front end: parse a function (expression text or construction
// JSON), run analyses, replay verification suites, run searches, and emit
// JSON/CSV artifacts.
//
// Exit codes: 0 all checks passed / output produced; 1 a verification
// assertion failed (counterexample JSON on stdout); 2 usage or parse error.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bentcomp/analysis.hpp"
#include "bentcomp/constructions.hpp"
#include "bentcomp/expr.hpp"
#include "bentcomp/field.hpp"
#include "bentcomp/report.hpp"
#include "bentcomp/search.hpp"
#include "bentcomp/suites.hpp"

namespace {

using namespace bentcomp;

// Writes text to the output path, or to stdout when the path is empty.
// File output is byte-deterministic for a fixed invocation.
void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

u32 parse_u32(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        unsigned long v = std::stoul(s, &pos, 0); // accepts decimal and 0x...
        if (pos != s.size() || v > 0xffffffffUL)
            throw std::invalid_argument("range");
        return u32(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": cannot parse '" + s +
                                    "' as a field element / hex value");
    }
}

struct FuncOptions {
    int m = 0;
    int n = 0;
    std::string modulus; // big-field modulus override, hex or decimal
    bool product = false;
    std::string func;
};

Domain domain_for(const FuncOptions& o) {
    int n = o.n;
    if (o.m > 0 && o.n > 0)
        throw std::invalid_argument("give either --m or --n, not both");
    if (o.m > 0) n = 2 * o.m;
    if (n <= 0) throw std::invalid_argument("one of --m or --n is required");
    if (o.product) {
        if (o.m <= 0)
            throw std::invalid_argument("--product needs --m (the factor degree)");
        auto half = o.modulus.empty()
                        ? make_field(o.m)
                        : make_field(o.m, parse_u32(o.modulus, "--modulus"));
        return Domain::over_product(half);
    }
    auto f = o.modulus.empty() ? make_field(n)
                               : make_field(n, parse_u32(o.modulus, "--modulus"));
    return Domain::over_field(f);
}

bool looks_like_json(const std::string& s) {
    auto pos = s.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && s[pos] == '{';
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --func holds either expression text or inline construction JSON; a leading
// '{' selects JSON. `construct` additionally accepts a path to a JSON file.
VectorialFunction function_for(const FuncOptions& o, bool allow_spec_file) {
    std::string text = o.func;
    if (allow_spec_file && !looks_like_json(text)) text = slurp(text);
    if (looks_like_json(text)) {
        auto spec = construction_from_json(text);
        if (o.m > 0 && o.m != spec.m)
            throw std::invalid_argument(
                "--m disagrees with the construction spec (spec has m=" +
                std::to_string(spec.m) + ")");
        if (o.n > 0 && o.n != 2 * spec.m)
            throw std::invalid_argument(
                "--n disagrees with the construction spec (spec has n=" +
                std::to_string(2 * spec.m) + ")");
        if (!o.modulus.empty())
            throw std::invalid_argument(
                "--modulus does not apply to a construction spec (set the "
                "moduli fields inside the JSON)");
        return build(spec);
    }
    return compile(text, domain_for(o));
}

std::string suites_text(const std::vector<SuiteResult>& results) {
    std::string out;
    size_t passed = 0;
    for (const auto& r : results) {
        out += "suite " + r.id + ": " + (r.pass ? "PASS" : "FAIL") + "\n";
        for (const auto& c : r.checks) {
            out += std::string("  [") + (c.pass ? "ok" : "XX") + "] " + c.name;
            if (!c.note.empty()) out += " -- " + c.note;
            out += "\n";
        }
        if (!r.counterexample.empty())
            out += "  counterexample: " + r.counterexample + "\n";
        passed += r.pass;
    }
    out += std::to_string(passed) + "/" + std::to_string(results.size()) +
           " suites passed\n";
    return out;
}

std::string suites_json(const std::vector<SuiteResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"note", c.note}});
        nlohmann::ordered_json jr{{"id", r.id}, {"pass", r.pass}, {"checks", checks}};
        if (!r.counterexample.empty())
            jr["counterexample"] = nlohmann::ordered_json::parse(r.counterexample);
        arr.push_back(jr);
    }
    return arr.dump(2) + "\n";
}

int cmd_analyze(const FuncOptions& o, int jobs, const std::string& output,
                bool from_spec_file) {
    auto F = function_for(o, from_spec_file);
    emit(to_json(analyze(F, jobs)), output);
    return 0;
}

int cmd_verify(const std::string& id, const SuiteParams& p,
               const std::string& output, const std::string& format) {
    std::vector<SuiteResult> results;
    if (id == "all")
        results = run_all_suites(p);
    else
        results.push_back(run_suite(id, p));

    const std::string text = suites_text(results);
    if (!output.empty()) {
        emit(format == "json" ? suites_json(results) : text, output);
        std::fputs(text.c_str(), stdout);
    } else {
        emit(format == "json" ? suites_json(results) : text, "");
    }
    for (const auto& r : results)
        if (!r.pass) {
            if (!r.counterexample.empty() && format != "json" && !output.empty())
                std::fputs((r.counterexample + "\n").c_str(), stdout);
            return 1;
        }
    return 0;
}

int cmd_search_binomials(const BinomialSearchConfig& cfg, const std::string& output) {
    auto res = search_binomials(cfg);
    std::string summary =
        "binomial search n=" + std::to_string(cfg.n) + ": " +
        std::to_string(res.hits.size()) + " hit(s), " +
        std::to_string(res.pairs_examined) + " pair(s) examined this run, " +
        (res.complete ? "complete"
                      : "paused at outer index " + std::to_string(res.next_outer)) +
        "\n";
    if (output.empty()) {
        emit(hits_csv(res.hits), "");
        std::fputs(summary.c_str(), stderr);
    } else {
        emit(hits_csv(res.hits), output);
        std::fputs(summary.c_str(), stdout);
    }
    return 0;
}

int cmd_search_niho_k2(int m, const std::string& modulus, bool outside_only,
                       const std::string& output) {
    if (m < 2 || m > 5)
        throw std::invalid_argument("coefficient-pair search supports m in [2,5]");
    auto tw = modulus.empty()
                  ? make_tower(m)
                  : make_tower(m, registry_modulus(m), parse_u32(modulus, "--modulus"));
    auto pairs = niho_k2_parameters(*tw, outside_only);
    std::string csv = "m,u1_hex,u2_hex\n";
    char row[64];
    for (auto [u1, u2] : pairs) {
        std::snprintf(row, sizeof row, "%d,0x%x,0x%x\n", m, u1, u2);
        csv += row;
    }
    std::string summary = "coefficient-pair search m=" + std::to_string(m) + ": " +
                          std::to_string(pairs.size()) + " valid pair(s)\n";
    if (output.empty()) {
        emit(csv, "");
        std::fputs(summary.c_str(), stderr);
    } else {
        emit(csv, output);
        std::fputs(summary.c_str(), stdout);
    }
    return 0;
}

int cmd_export(const std::string& kind, const FuncOptions& o, u32 a, int jobs,
               const std::string& output) {
    auto F = function_for(o, false);
    if (kind == "spectrum") {
        if (a == 0 || a >= F.domain().size())
            throw std::invalid_argument("--a must be a nonzero component index "
                                        "below 2^n");
        emit(spectrum_csv(walsh_spectrum(component(F, a), F.domain())), output);
        return 0;
    }
    emit(histogram_csv(differential_spectrum(F, jobs)), output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    using namespace bentcomp;
    if (const char* path = std::getenv(registry_env_var())) {
        try {
            load_registry_file(path);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 2;
        }
    }

    CLI::App app{"Bent-component analysis toolkit for functions over GF(2^n)"};
    app.require_subcommand(1);

    FuncOptions fo;
    int jobs = 0;
    std::string output, format = "text";
    u64 seed = 1;

    auto add_domain_flags = [&](CLI::App* c, bool with_product) {
        c->add_option("--m", fo.m, "half dimension (field degree of the subfield)");
        c->add_option("--n", fo.n, "total dimension (whole-field degree)");
        c->add_option("--modulus", fo.modulus,
                      "irreducible modulus for the whole field, hex or decimal");
        if (with_product)
            c->add_flag("--product", fo.product,
                        "interpret the function over F_2^m x F_2^m (needs --m)");
        c->add_option("--jobs", jobs, "worker cap (0 = all hardware threads)");
        c->add_option("--output", output, "write the primary artifact to this path");
    };

    // analyze: expression (or inline construction JSON) -> analysis report JSON
    auto* an = app.add_subcommand(
        "analyze", "Scan all components: bent count, nonlinearity, plateau profile");
    add_domain_flags(an, true);
    an->add_option("--func", fo.func,
                   "function: expression text, or inline construction JSON")
        ->required();

    // construct: construction JSON (inline or file) -> analysis report JSON
    auto* co = app.add_subcommand(
        "construct", "Build a catalogued construction from JSON and analyze it");
    add_domain_flags(co, false);
    co->add_option("--func", fo.func, "construction spec: inline JSON or a file path")
        ->required();

    // verify: named suite (or "all") -> per-assertion pass/fail
    auto* ve = app.add_subcommand(
        "verify", "Replay a verification suite (or \"all\") at desk scale");
    std::string suite_id;
    SuiteParams sp;
    ve->add_option("suite", suite_id, "suite id, or \"all\"")->required();
    ve->add_option("--m", sp.m, "half dimension the suite runs at");
    ve->add_option("--m-max", sp.m_max, "sweep m from 2 to this bound (bino, gauss-count)");
    ve->add_option("--e", sp.e, "restrict to one exponent value");
    ve->add_option("--row", sp.row, "restrict table1 to one row id");
    ve->add_option("--trials", sp.trials, "randomized-corpus size");
    ve->add_option("--seed", seed, "seed for randomized corpora");
    ve->add_option("--jobs", sp.jobs, "worker cap (0 = all hardware threads)");
    ve->add_option("--output", output, "write the report to this path");
    ve->add_option("--format", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // search: exhaustive scans with checkpoint/budget
    auto* se = app.add_subcommand(
        "search", "Exhaustive parameter searches (binomials, niho-k2)");
    std::string target;
    BinomialSearchConfig bcfg;
    bool outside_only = false;
    se->add_option("target", target, "what to search: binomials or niho-k2")
        ->required()
        ->check(CLI::IsMember({"binomials", "niho-k2"}));
    se->add_option("--n", bcfg.n, "dimension for the binomial scan (even, 4..16)");
    se->add_option("--m", fo.m, "half dimension for the coefficient-pair search");
    se->add_option("--modulus", fo.modulus, "whole-field modulus override");
    se->add_option("--budget", bcfg.budget_pairs,
                   "stop after examining at least this many pairs (0 = no limit)");
    se->add_option("--checkpoint", bcfg.checkpoint_path,
                   "JSON checkpoint path for resumable scans");
    se->add_flag("--outside-only", outside_only,
                 "restrict niho-k2 pairs to coefficients outside the subfield copy");
    se->add_option("--jobs", bcfg.jobs, "worker cap (0 = all hardware threads)");
    se->add_option("--output", output, "write the results CSV to this path");

    // export: spectrum / differential histogram CSV
    auto* ex = app.add_subcommand(
        "export", "Emit CSV artifacts: component spectrum or delta histogram");
    std::string kind;
    std::string a_text = "1";
    ex->add_option("kind", kind, "what to export: spectrum or diff")
        ->required()
        ->check(CLI::IsMember({"spectrum", "diff"}));
    add_domain_flags(ex, true);
    ex->add_option("--func", fo.func,
                   "function: expression text, or inline construction JSON")
        ->required();
    ex->add_option("--a", a_text, "component index for spectrum export (hex or decimal)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (an->parsed()) return cmd_analyze(fo, jobs, output, false);
        if (co->parsed()) return cmd_analyze(fo, jobs, output, true);
        if (ve->parsed()) {
            sp.seed = seed;
            return cmd_verify(suite_id, sp, output, format);
        }
        if (se->parsed()) {
            if (target == "binomials") {
                if (fo.m > 0 && bcfg.n == 0) bcfg.n = 2 * fo.m;
                return cmd_search_binomials(bcfg, output);
            }
            return cmd_search_niho_k2(fo.m, fo.modulus, outside_only, output);
        }
        if (ex->parsed())
            return cmd_export(kind, fo, parse_u32(a_text, "--a"), jobs, output);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2; // unreachable: a subcommand is required
}
