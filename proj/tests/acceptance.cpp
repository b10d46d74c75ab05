// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hodgepoly/cli.hpp"
#include "hodgepoly/format.hpp"
#include "hodgepoly/verify.hpp"
#include "oracles.hpp"

using namespace hodgepoly;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

std::string run_cli_capture(const std::vector<std::string>& args, int* code = nullptr) {
    std::ostringstream out, err;
    int c = run_cli(args, out, err);
    if (code) *code = c;
    return out.str() + err.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::shared_ptr<SeriesEngine> make_series() {
    auto cache = std::make_shared<IntegralCache>();
    auto hodge = std::make_shared<HodgeEngine>(std::make_shared<PsiEngine>(cache), cache);
    return std::make_shared<SeriesEngine>(hodge);
}

Outcome from_suite(SeriesEngine& engine, const std::string& name, const VerifyConfig& config) {
    Outcome o;
    auto r = run_suite(name, engine, config);
    o.expect(r.checks > 0, name + ": no checks ran");
    for (const auto& f : r.failures) o.expect(false, name + ": " + f);
    if (o.pass) o.notes.push_back(name + ": " + std::to_string(r.checks) + " checks");
    return o;
}

void merge(Outcome& into, const Outcome& from) {
    into.pass = into.pass && from.pass;
    into.notes.insert(into.notes.end(), from.notes.begin(), from.notes.end());
}

std::string table_cold_max4;

Outcome table_reproduction() {
    Outcome o;
    std::ifstream in(std::string(HODGEPOLY_GOLDEN_DIR) + "/table_max4.txt");
    std::stringstream golden;
    golden << in.rdbuf();
    o.expect(!golden.str().empty(), "golden file missing");

    int code = 0;
    table_cold_max4 = run_cli_capture({"table", "--max", "4"}, &code);
    o.expect(code == 0, "table exited with " + std::to_string(code));

    auto want = lines_of(golden.str());
    auto got = lines_of(table_cold_max4);
    o.expect(want.size() == got.size(), "line count differs");
    for (std::size_t i = 0; i < std::min(want.size(), got.size()); ++i)
        if (want[i] != got[i]) o.expect(false, "expected: " + want[i] + "\n         computed: " + got[i]);
    return o;
}

VerifyConfig index_config() {
    VerifyConfig c;
    c.max_weight = 4;
    c.max_length = 4;
    c.guard = 2;
    return c;
}

Outcome property_suites() {
    Outcome o;
    int checks = 0;

    // genus zero: recursion against the closed form, n <= 8
    {
        auto cache = std::make_shared<IntegralCache>();
        PsiEngine recursive(cache, PsiOptions{false});
        std::function<void(int, int, int, std::vector<int>&)> each = [&](int n, int total, int cap,
                                                                          std::vector<int>& d) {
            if (static_cast<int>(d.size()) == n) {
                if (total) return;
                ++checks;
                if (recursive.integral(0, d) != oracle::genus0(d) || psi_genus0(d) != oracle::genus0(d))
                    o.expect(false, "genus 0 mismatch at " + IndexVector(d).to_string());
                return;
            }
            for (int x = std::min(total, cap); x >= 0; --x) {
                d.push_back(x);
                each(n, total - x, x, d);
                d.pop_back();
            }
        };
        for (int n = 3; n <= 8; ++n) {
            std::vector<int> d;
            each(n, n - 3, n - 3, d);
        }
    }

    // expansion-order confluence, dimension <= 8
    {
        auto make = [](HodgeOptions opt) {
            auto cache = std::make_shared<IntegralCache>();
            return std::make_shared<HodgeEngine>(std::make_shared<PsiEngine>(cache), cache, opt);
        };
        auto reference = make({ExpansionOrder::largest_first, 0});
        std::vector<std::shared_ptr<HodgeEngine>> others{make({ExpansionOrder::smallest_first, 0}),
                                                          make({ExpansionOrder::seeded_random, 3}),
                                                          make({ExpansionOrder::seeded_random, 11})};
        std::mt19937 rng(2718);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<int> pick_g(1, 3), pick_n(1, 5);
            const int g = pick_g(rng), n = pick_n(rng);
            const int dim = 3 * g - 3 + n;
            if (dim > 8) continue;
            std::uniform_int_distribution<int> pick_j(1, g);
            std::vector<int> lam;
            int deg = 0;
            while (true) {
                int j = pick_j(rng);
                if (deg + j > dim) break;
                lam.push_back(j);
                deg += j;
                if (rng() % 3 == 0) break;
            }
            auto d = oracle::random_composition(rng, n, dim - deg);
            auto m = LambdaMonomial::from_indices(lam);
            auto expected = reference->hodge_integral(g, d, m);
            for (auto& e : others) {
                ++checks;
                if (e->hodge_integral(g, d, m) != expected)
                    o.expect(false, "order dependence at g=" + std::to_string(g) + " psi=" +
                                        IndexVector(d).to_string() + " lambda=" + IndexVector(lam).to_string());
            }
        }
    }

    // string and dilaton for Hodge integrals, random instances with g <= 3
    {
        auto cache = std::make_shared<IntegralCache>();
        HodgeEngine hodge(std::make_shared<PsiEngine>(cache), cache);
        auto H = [&](int g, const std::vector<int>& d, const std::vector<int>& lam) {
            return hodge.hodge_integral(g, d, LambdaMonomial::from_indices(lam));
        };
        std::mt19937 rng(314159);
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<int> pick_g(1, 3), pick_n(1, 3);
            const int g = pick_g(rng), n = pick_n(rng);
            const int dim = 3 * g - 3 + n;
            std::uniform_int_distribution<int> pick_j(1, g);
            std::vector<int> lam{pick_j(rng)};
            if (rng() % 2) lam.push_back(pick_j(rng));
            int ldeg = 0;
            for (int j : lam) ldeg += j;
            if (ldeg > dim + 1) continue;

            auto d = oracle::random_composition(rng, n, dim + 1 - ldeg);
            auto with0 = d;
            with0.push_back(0);
            Rational rhs;
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (!d[i]) continue;
                auto lowered = d;
                --lowered[i];
                rhs += H(g, lowered, lam);
            }
            ++checks;
            if (H(g, with0, lam) != rhs)
                o.expect(false, "string equation fails at g=" + std::to_string(g) + " psi=" +
                                    IndexVector(d).to_string());

            if (ldeg <= dim) {
                auto e = oracle::random_composition(rng, n, dim - ldeg);
                auto with1 = e;
                with1.push_back(1);
                ++checks;
                if (H(g, with1, lam) != Rational(2 * g - 2 + n) * H(g, e, lam))
                    o.expect(false, "dilaton equation fails at g=" + std::to_string(g) + " psi=" +
                                        IndexVector(e).to_string());
            }
        }
    }
    if (o.pass) o.notes.push_back(std::to_string(checks) + " checks");
    return o;
}

Outcome determinism() {
    Outcome o;
    auto jobs4 = run_cli_capture({"table", "--max", "4", "--jobs", "4"});
    o.expect(jobs4 == table_cold_max4, "table --max 4 differs between --jobs 1 and --jobs 4");

    auto dir = std::filesystem::temp_directory_path() / "hodgepoly_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string store = (dir / "cache").string();
    auto plain = run_cli_capture({"table", "--max", "3"});
    auto cold = run_cli_capture({"--cache", store, "table", "--max", "3", "--jobs", "2"});
    auto warm = run_cli_capture({"--cache", store, "table", "--max", "3"});
    o.expect(plain == cold, "cold cache run differs");
    o.expect(cold == warm, "warm cache run differs");

    for (const auto& fmt : {"text", "json", "latex"}) {
        auto a = run_cli_capture({"pa", "--a", "3,1", "--shifted", "--format", fmt});
        auto b = run_cli_capture({"--cache", store, "pa", "--a", "3,1", "--shifted", "--format", fmt});
        o.expect(a == b, std::string("pa output differs for format ") + fmt);
    }
    auto v1 = run_cli_capture({"verify", "all", "--max", "2"});
    auto v2 = run_cli_capture({"verify", "all", "--max", "2", "--jobs", "3"});
    o.expect(v1 == v2, "verify output depends on --jobs");
    std::filesystem::remove_all(dir);
    return o;
}

}  // namespace

int main() {
    auto engine = make_series();
    const auto config = index_config();

    struct Criterion {
        const char* title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"table --max 4 reproduces the published polynomials", table_reproduction},
        {"polynomiality and monicity for |a| <= 4", [&] { return from_suite(*engine, "theorem01", config); }},
        {"F(alpha,t) = exp(-t^2/24) through t^10",
         [&] {
             auto c = config;
             c.order = 10;
             return from_suite(*engine, "prop12", c);
         }},
        {"int psi^{3g-2} = 1/(24^g g!) for g <= 6",
         [&] {
             auto c = config;
             c.order = 6;
             return from_suite(*engine, "exp24", c);
         }},
        {"A_{g,a} vanishing and top value", [&] { return from_suite(*engine, "avalue", config); }},
        {"string and dilaton rules for P_a", [&] { return from_suite(*engine, "prop22", config); }},
        {"constant terms of P_a", [&] { return from_suite(*engine, "prop21", config); }},
        {"alpha = -1 specialization and Mumford's relation",
         [&] {
             auto o = from_suite(*engine, "cor23", config);
             merge(o, from_suite(*engine, "mumford", config));
             return o;
         }},
        {"genus-0 recursion, expansion-order confluence, Hodge string/dilaton", property_suites},
        {"byte-identical output across --jobs and cache state", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const auto secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].title << "  (" << secs << "s)";
        std::cout << line.str() << '\n';
        for (const auto& n : o.notes) std::cout << "        " << n << '\n';
        std::cout.flush();
        if (!o.pass) ++failed;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << " of " << criteria.size()
              << " criteria passed\n";
    return failed ? 1 : 0;
}
