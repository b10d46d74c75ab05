#include "hodgepoly/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hodgepoly/format.hpp"
#include "hodgepoly/parallel.hpp"
#include "hodgepoly/verify.hpp"

namespace hodgepoly {

namespace {

struct RunConfig {
    std::string cache_path;
    int genus = 0;
    std::string exponents;
    std::string lambda;
    std::string a;
    bool shifted = false;
    std::string format = "text";
    int guard = 2;
    int max_weight = 4;
    int order = 10;
    int jobs = 1;
    std::string suite = "all";
    std::string action;
    std::string file;
};

std::vector<int> parse_list(const std::string& flag, const std::string& text) {
    try {
        return IndexVector::parse(text).entries;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad " + flag + " list '" + text +
                                    "'; expected comma-separated non-negative integers");
    }
}

struct Engines {
    std::shared_ptr<IntegralCache> cache = std::make_shared<IntegralCache>();
    std::shared_ptr<PsiEngine> psi = std::make_shared<PsiEngine>(cache);
    std::shared_ptr<HodgeEngine> hodge = std::make_shared<HodgeEngine>(psi, cache);
    SeriesEngine series{hodge};
};

std::string render(const PPolynomial& p, const std::string& format) {
    if (format == "json") return to_json(p).dump();
    if (format == "latex") return format_latex(p.poly);
    return format_text(p.poly);
}

std::string table_label(const IndexVector& a, const std::string& format) {
    return format == "latex" ? "P_{" + a.to_string() + "}" : "P_" + a.to_string();
}

int cmd_table(Engines& e, const RunConfig& rc, std::ostream& out) {
    const auto vectors = table_index_vectors(rc.max_weight);
    auto polys = parallel_map(std::span<const IndexVector>(vectors), rc.jobs, [&](const IndexVector& a) {
        return shift_convention(e.series.assemble(a, rc.guard));
    });

    if (rc.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : polys) arr.push_back(to_json(p));
        out << arr.dump(2) << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i && vectors[i].weight() != vectors[i - 1].weight()) out << '\n';
        out << table_label(vectors[i], rc.format) << " = " << render(polys[i], rc.format) << '\n';
    }
    return 0;
}

int cmd_verify(Engines& e, const RunConfig& rc, std::ostream& out) {
    std::vector<std::string> suites;
    if (rc.suite == "all")
        suites = suite_names();
    else
        suites.push_back(rc.suite);

    VerifyConfig config;
    config.max_weight = rc.max_weight;
    config.max_length = rc.max_weight;
    config.guard = rc.guard;
    config.order = rc.order;
    config.jobs = rc.jobs;

    std::size_t failed_suites = 0;
    for (const auto& name : suites) {
        auto result = run_suite(name, e.series, config);
        if (result.passed()) {
            out << name << ": PASS (" << result.checks << " checks)\n";
        } else {
            ++failed_suites;
            out << name << ": FAIL (" << result.failures.size() << " of " << result.checks << " checks failed)\n";
            for (const auto& f : result.failures) out << "  " << f << '\n';
        }
    }
    if (suites.size() > 1)
        out << (failed_suites ? "FAIL" : "PASS") << " (" << suites.size() - failed_suites << " of " << suites.size()
            << " suites passed)\n";
    return failed_suites ? 1 : 0;
}

int cmd_cache(Engines& e, const RunConfig& rc, std::ostream& out) {
    if (rc.cache_path.empty()) throw std::invalid_argument("no cache path; pass --cache or set HODGEPOLY_CACHE");
    const bool needs_file = rc.action == "export" || rc.action == "import";
    if (needs_file && rc.file.empty()) throw std::invalid_argument("cache " + rc.action + " needs a FILE argument");

    if (rc.action == "stats") {
        auto s = e.cache->stats();
        out << "psi: " << s.psi << "\nhodge: " << s.hodge << '\n';
    } else if (rc.action == "export") {
        e.cache->save_file(rc.file);
        out << "exported " << e.cache->size() << " entries to " << rc.file << '\n';
    } else if (rc.action == "import") {
        const auto before = e.cache->size();
        e.cache->load_file(rc.file);
        e.cache->save_file(rc.cache_path);
        out << "imported " << e.cache->size() - before << " new entries\n";
    } else if (rc.action == "clear") {
        e.cache->clear();
        e.cache->save_file(rc.cache_path);
        out << "cleared\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    if (const char* env = std::getenv("HODGEPOLY_CACHE")) rc.cache_path = env;

    CLI::App app{"Exact psi, Hodge and double-Hodge polynomial calculator", "hodgepoly"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--cache", rc.cache_path, "Persistent cache file (default: $HODGEPOLY_CACHE)");

    const std::vector<std::string> formats{"text", "json", "latex"};

    auto* psi = app.add_subcommand("psi", "Intersection number <tau_d1 ... tau_dn>_g");
    psi->add_option("--g", rc.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
    psi->add_option("--exp", rc.exponents, "Comma-separated psi exponents")->required();

    auto* hodge = app.add_subcommand("hodge", "Integral of psi and lambda classes over M_{g,n}");
    hodge->add_option("--g", rc.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
    hodge->add_option("--exp", rc.exponents, "Comma-separated psi exponents")->required();
    hodge->add_option("--lambda", rc.lambda, "Comma-separated lambda indices");

    auto* pa = app.add_subcommand("pa", "The polynomial P_a(alpha, t)");
    pa->add_option("--a", rc.a, "Index vector, e.g. 2,1 (empty for P_())")->required();
    pa->add_flag("--shifted", rc.shifted, "Print P_a(-alpha-1, t)");
    pa->add_option("--format", rc.format)->check(CLI::IsMember(formats));
    pa->add_option("--guard", rc.guard, "Extra t-degrees checked to vanish")->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("table", "All P_a(-alpha-1, t) with positive a and |a| <= max");
    table->add_option("--max", rc.max_weight, "Largest weight |a|")->check(CLI::NonNegativeNumber);
    table->add_option("--format", rc.format)->check(CLI::IsMember(formats));
    table->add_option("--guard", rc.guard)->check(CLI::NonNegativeNumber);
    table->add_option("--jobs", rc.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto suites = suite_names();
    suites.push_back("all");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", rc.suite, "Suite name or 'all'")->check(CLI::IsMember(suites));
    verify->add_option("--max", rc.max_weight, "Largest weight |a| and length n")->check(CLI::NonNegativeNumber);
    verify->add_option("--guard", rc.guard)->check(CLI::NonNegativeNumber);
    verify->add_option("--order", rc.order, "t-order for prop12, genus bound for exp24")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", rc.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* cache = app.add_subcommand("cache", "Inspect or manage the persistent cache");
    cache->add_option("action", rc.action, "stats | export | import | clear")
        ->required()
        ->check(CLI::IsMember({"stats", "export", "import", "clear"}));
    cache->add_option("file", rc.file, "File for export or import");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() ? e.get_exit_code() : 2;
    }

    try {
        Engines engines;
        if (!rc.cache_path.empty() && std::filesystem::exists(rc.cache_path)) engines.cache->load_file(rc.cache_path);

        // Everything is rendered into a buffer first so that a failure part
        // way through prints nothing but the diagnostic.
        std::ostringstream buffer;
        int code = 0;
        if (psi->parsed()) {
            auto key = PsiKey::make(rc.genus, parse_list("--exp", rc.exponents));
            buffer << engines.psi->integral(key).to_string() << '\n';
        } else if (hodge->parsed()) {
            auto exps = parse_list("--exp", rc.exponents);
            auto lam = parse_list("--lambda", rc.lambda);
            buffer << engines.hodge->hodge_integral(rc.genus, exps, LambdaMonomial::from_indices(lam)).to_string()
                   << '\n';
        } else if (pa->parsed()) {
            auto p = engines.series.assemble(IndexVector::parse(rc.a), rc.guard);
            if (rc.shifted) p = shift_convention(p);
            buffer << render(p, rc.format) << '\n';
        } else if (table->parsed()) {
            code = cmd_table(engines, rc, buffer);
        } else if (verify->parsed()) {
            code = cmd_verify(engines, rc, buffer);
        } else if (cache->parsed()) {
            code = cmd_cache(engines, rc, buffer);
        }

        if (!rc.cache_path.empty() && !cache->parsed()) engines.cache->save_file(rc.cache_path);
        out << buffer.str();
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace hodgepoly
