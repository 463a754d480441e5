#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "pirep/pipeline.hpp"

using namespace pirep;

namespace {

constexpr int EXIT_PASS = 0;
constexpr int EXIT_VERDICT_FAIL = 1;
constexpr int EXIT_INPUT = 2;
constexpr int EXIT_BUDGET = 3;
constexpr int EXIT_NONSPLIT = 4;

struct CommonOpts {
    std::uint64_t seed = 1;
    std::uint64_t envelope_seed = 1;
    std::size_t primes = 2;
    std::string method = "auto";
    unsigned long long cell_budget = 200'000'000ULL;
    bool force = false;
    std::size_t threads = 1;
    std::string cache_dir;
    bool no_cache = false;
    std::size_t state_cap = 100000;
};

RankMethod parse_method(const std::string &m) {
    if (m == "auto")
        return RankMethod::automatic;
    if (m == "exact")
        return RankMethod::exact;
    if (m == "modular")
        return RankMethod::modular;
    throw input_error("unknown method '" + m + "' (expected auto, exact or modular)");
}

EvalOptions eval_options(const CommonOpts &c) {
    EvalOptions e;
    e.method = parse_method(c.method);
    e.primes = c.primes;
    e.seed = c.seed;
    e.cell_budget = c.cell_budget;
    e.force = c.force;
    e.threads = c.threads;
    return e;
}

ExponentOptions exponent_options(const CommonOpts &c) {
    ExponentOptions e;
    e.state_cap = c.state_cap;
    e.seed = c.seed;
    return e;
}

Analysis analyze(const std::string &spec_path, const CommonOpts &c) {
    RepSpec spec = parse_spec(spec_path);
    PipelineOptions p;
    p.envelope_seed = c.envelope_seed;
    if (!c.no_cache)
        p.cache_dir = c.cache_dir;
    return build_analysis(spec, p);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact invariants of matrix Lie algebra representations"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts common;
    const char *env_cache = std::getenv("PI_CACHE_DIR");
    common.cache_dir = env_cache ? env_cache : ".pi-cache";
    if (const char *env_threads = std::getenv("PI_THREADS"))
        common.threads = static_cast<std::size_t>(std::max(1, std::atoi(env_threads)));

    app.add_option("--seed", common.seed, "seed for primes and randomized searches");
    app.add_option("--envelope-seed", common.envelope_seed,
                   "seed for the composition chain splitting");
    app.add_option("--primes", common.primes, "number of primes for modular ranks");
    app.add_option("--method", common.method, "rank method: auto, exact or modular");
    app.add_option("--cell-budget", common.cell_budget, "evaluation matrix cell budget");
    app.add_flag("--force", common.force, "override the cell budget");
    app.add_option("--threads", common.threads, "worker threads for modular ranks");
    app.add_option("--cache-dir", common.cache_dir, "cache directory (PI_CACHE_DIR)");
    app.add_flag("--no-cache", common.no_cache, "disable the analysis cache");
    app.add_option("--state-cap", common.state_cap, "exponent search state cap");

    std::string spec_path;
    std::size_t max_n = 6, cochar_n = 3;

    CLI::App *cmd_analyze = app.add_subcommand("analyze", "structure report as JSON");
    cmd_analyze->add_option("spec", spec_path, "representation file")->required();

    CLI::App *cmd_codim = app.add_subcommand("codim", "codimension sequence as CSV");
    cmd_codim->add_option("spec", spec_path, "representation file")->required();
    cmd_codim->add_option("--max-n", max_n, "largest degree")->required();

    CLI::App *cmd_cochar = app.add_subcommand("cochar", "multiplicity table as CSV");
    cmd_cochar->add_option("spec", spec_path, "representation file")->required();
    cmd_cochar->add_option("--n", cochar_n, "degree")->required();
    std::size_t cochar_max = 6;
    cmd_cochar->add_option("--cochar-max", cochar_max, "largest allowed degree");

    CLI::App *cmd_exponent = app.add_subcommand("exponent", "growth exponent as JSON");
    cmd_exponent->add_option("spec", spec_path, "representation file")->required();

    CLI::App *cmd_verify = app.add_subcommand("verify", "structure checks, exit 0 iff all pass");
    cmd_verify->add_option("spec", spec_path, "representation file")->required();

    CLI::App *cmd_growth = app.add_subcommand("growth", "growth-law report as JSON");
    cmd_growth->add_option("spec", spec_path, "representation file")->required();
    cmd_growth->add_option("--max-n", max_n, "largest degree");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_analyze->parsed()) {
            Analysis a = analyze(spec_path, common);
            LemmaReport lemmas = verify_lemmas(a.rep, a.env, a.levi);
            std::cout << analyze_report_json(a, lemmas);
            return lemmas.all() ? EXIT_PASS : EXIT_VERDICT_FAIL;
        }
        if (cmd_codim->parsed()) {
            Analysis a = analyze(spec_path, common);
            std::vector<CodimResult> results;
            for (std::size_t n = 1; n <= max_n; ++n)
                results.push_back(codimension(a.rep, n, eval_options(common)));
            std::cout << codim_report_csv(results);
            return EXIT_PASS;
        }
        if (cmd_cochar->parsed()) {
            if (cochar_n > cochar_max)
                throw budget_error("cochar: degree exceeds the configured maximum; raise "
                                   "--cochar-max deliberately",
                                   cochar_n, cochar_max);
            Analysis a = analyze(spec_path, common);
            CocharTable table = cocharacter_multiplicities(a.rep, cochar_n, eval_options(common));
            std::cout << cochar_report_csv(table);
            return table.consistent() ? EXIT_PASS : EXIT_VERDICT_FAIL;
        }
        if (cmd_exponent->parsed()) {
            Analysis a = analyze(spec_path, common);
            ExponentResult r = pi_exponent(a.rep, a.env, a.levi, exponent_options(common));
            std::cout << exponent_report_json(r, a);
            if (r.complement_disagreement)
                std::cerr << "warning: alternative invariant complements changed d\n";
            return r.lower_bound_only ? EXIT_BUDGET : EXIT_PASS;
        }
        if (cmd_verify->parsed()) {
            Analysis a = analyze(spec_path, common);
            LemmaReport lemmas = verify_lemmas(a.rep, a.env, a.levi);
            std::cout << verify_report_text(lemmas);
            return lemmas.all() ? EXIT_PASS : EXIT_VERDICT_FAIL;
        }
        if (cmd_growth->parsed()) {
            Analysis a = analyze(spec_path, common);
            GrowthOptions g;
            g.max_n = max_n;
            g.eval = eval_options(common);
            g.exponent = exponent_options(common);
            GrowthReport r = run_growth(a.spec.name, a.rep, a.env, a.levi, g);
            std::cout << growth_report_json(r);
            if (r.verdict == Verdict::pass)
                return EXIT_PASS;
            return r.verdict == Verdict::inconclusive ? EXIT_BUDGET : EXIT_VERDICT_FAIL;
        }
    } catch (const budget_error &e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return EXIT_BUDGET;
    } catch (const nonsplit_error &e) {
        std::cerr << "non-split input: " << e.what() << "\n";
        return EXIT_NONSPLIT;
    } catch (const input_error &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_VERDICT_FAIL;
    }
    return EXIT_INPUT;
}
