#include "hkdv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <string>

#include "hkdv/ilw.hpp"
#include "hkdv/verify.hpp"

namespace hkdv {
namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::string subcommand;
    int hbar_order = 3;
    int mu_order = 6;
    int genus = 3;
    int descendants = 6;
    int degree = 8;
    int z_order = 16;
    std::string format = "text";
    std::string cache;
    bool corrupt_bernoulli = false;

    bool structured() const { return format == "structured"; }

    ordered_json to_json() const
    {
        return {{"hbar_order", hbar_order}, {"mu_order", mu_order},   {"genus", genus},
                {"descendants", descendants}, {"degree", degree},     {"z_order", z_order}};
    }

    SuiteConfig suite() const
    {
        SuiteConfig c;
        c.hbar_order = hbar_order;
        c.mu_order = mu_order;
        c.z_order = z_order;
        c.bounds = {genus, descendants, degree};
        if (corrupt_bernoulli)
            c.bernoulli_numbers = [](int m) { return m == 2 ? Rational(1, 5) : bernoulli(m); };
        return c;
    }
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CachedContext {
public:
    CachedContext(const RunConfig& cfg, int hbar_order) : ctx_(hbar_order), path_(cfg.cache)
    {
        if (!path_.empty() && std::filesystem::exists(path_))
            ctx_.load_cache(path_);
    }
    ~CachedContext()
    {
        if (!path_.empty()) {
            try {
                ctx_.save_cache(path_);
            } catch (const std::exception&) {
                // The cache is advisory.
            }
        }
    }
    const HierarchyContext& get() const { return ctx_; }

private:
    HierarchyContext ctx_;
    std::string path_;
};

ordered_json checks_json(const VerificationReport& r)
{
    ordered_json a = ordered_json::array();
    for (const CheckResult& c : r.checks)
        a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return a;
}

void print_checks(const VerificationReport& r, std::ostream& out)
{
    for (const CheckResult& c : r.checks) {
        out << (c.passed ? "PASS" : "FAIL") << '\t' << c.name;
        if (!c.detail.empty())
            out << '\t' << c.detail;
        out << '\n';
    }
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out)
{
    CachedContext ctx(cfg, cfg.hbar_order);
    const VerificationReport r = run_suite(suite, cfg.suite(), ctx.get());
    if (cfg.structured()) {
        ordered_json doc{{"command", "verify"},        {"suite", suite},      {"config", cfg.to_json()},
                         {"checks", checks_json(r)}, {"passed", r.all_passed()}};
        out << doc.dump(2) << '\n';
    } else {
        print_checks(r, out);
    }
    return r.all_passed() ? kOk : kFailed;
}

int cmd_hamiltonian(const RunConfig& cfg, int n, std::ostream& out)
{
    if (n < -1)
        throw UsageError("hamiltonian index must be >= -1");
    CachedContext ctx(cfg, cfg.hbar_order);
    const Hamiltonian h = ctx.get().hamiltonian(n);
    if (cfg.structured()) {
        ordered_json doc{{"command", "hamiltonian"},
                         {"n", n},
                         {"hbar_order", cfg.hbar_order},
                         {"functional", h.functional.to_string()}};
        out << doc.dump(2) << '\n';
    } else {
        out << h.functional.to_string() << '\n';
    }
    return kOk;
}

int cmd_hodge_table(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.genus > cfg.hbar_order)
        throw UsageError("--genus must not exceed --hbar-order");
    if (cfg.descendants >= TSeries::kMaxTimes)
        throw UsageError("--descendants must be below " + std::to_string(TSeries::kMaxTimes));
    CachedContext ctx(cfg, cfg.hbar_order);
    const HodgeRun run = run_hodge_pipeline(ctx.get(), {cfg.genus, cfg.descendants, cfg.degree});
    if (cfg.structured()) {
        ordered_json entries = ordered_json::array();
        for (const auto& [key, v] : run.table.entries())
            entries.push_back({{"g", key.g}, {"j", key.j}, {"k", key.k}, {"value", v.to_string()}});
        ordered_json doc{{"command", "hodge-table"},
                         {"config", cfg.to_json()},
                         {"entries", entries},
                         {"checks", checks_json(run.checks)},
                         {"passed", run.checks.all_passed()}};
        out << doc.dump(2) << '\n';
    } else {
        out << run.table.export_text();
        for (const CheckResult& c : run.checks.checks)
            if (!c.passed)
                err << "FAIL\t" << c.name << '\t' << c.detail << '\n';
    }
    return run.checks.all_passed() ? kOk : kFailed;
}

int cmd_ilw(const RunConfig& cfg, const std::string& action, int n, std::ostream& out)
{
    if (n < 1)
        throw UsageError("ilw index must be >= 1");
    const SigmaExpansion s = sigma_sequence(n, cfg.mu_order);
    if (action == "sigma") {
        const std::string text = s.sigma(n).to_string();
        if (cfg.structured())
            out << ordered_json{{"command", "ilw sigma"}, {"n", n}, {"mu_order", cfg.mu_order}, {"sigma", text}}.dump(2)
                << '\n';
        else
            out << text << '\n';
        return kOk;
    }
    CachedContext ctx(cfg, (cfg.mu_order + 1) / 2);
    const HamiltonianDecomposition d = decompose_in_hamiltonians(s, n, ctx.get());
    const bool ok = d.residual_is_zero();
    if (cfg.structured()) {
        ordered_json coeffs = ordered_json::array();
        for (const auto& [k, c] : d.coefficients)
            coeffs.push_back({{"k", k}, {"coefficient", c.to_string()}});
        ordered_json doc{{"command", "ilw decompose"},
                         {"n", n},
                         {"mu_order", cfg.mu_order},
                         {"coefficients", coeffs},
                         {"residual", ok ? "0" : d.residual.to_string()},
                         {"leading_matches", d.leading_matches},
                         {"all_real", d.all_real}};
        out << doc.dump(2) << '\n';
    } else {
        out << d.to_text();
    }
    return ok ? kOk : kFailed;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Deformed KdV hierarchy and Hodge integrals", "hkdv"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--hbar-order", cfg.hbar_order, "hbar truncation order G")->check(CLI::PositiveNumber);
    app.add_option("--mu-order", cfg.mu_order, "mu truncation order M")->check(CLI::PositiveNumber);
    app.add_option("--genus", cfg.genus, "genus bound")->check(CLI::PositiveNumber);
    app.add_option("--descendants", cfg.descendants, "descendant bound N")->check(CLI::PositiveNumber);
    app.add_option("--degree", cfg.degree, "weighted degree bound D")->check(CLI::PositiveNumber);
    app.add_option("--z-order", cfg.z_order, "order of the series identities")->check(CLI::Range(2, 200));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--cache", cfg.cache, "Hamiltonian cache file");
    app.add_flag("--corrupt-bernoulli", cfg.corrupt_bernoulli)->group("");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suites{"all"};
    suites.insert(suites.end(), suite_names().begin(), suite_names().end());
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));

    int n = 0;
    auto* hamiltonian = app.add_subcommand("hamiltonian", "print h_n");
    hamiltonian->add_option("n", n)->required();

    auto* hodge = app.add_subcommand("hodge-table", "Hodge integrals from the hierarchy");

    std::string action;
    auto* ilw = app.add_subcommand("ilw", "ILW sigma densities");
    ilw->add_option("action", action)->required()->check(CLI::IsMember({"sigma", "decompose"}));
    ilw->add_option("n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(cfg, suite, out);
        if (hamiltonian->parsed())
            return cmd_hamiltonian(cfg, n, out);
        if (hodge->parsed())
            return cmd_hodge_table(cfg, out, err);
        if (ilw->parsed())
            return cmd_ilw(cfg, action, n, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}

} // namespace hkdv
