#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ineqforge/chains.hpp"
#include "ineqforge/error.hpp"
#include "ineqforge/kernels.hpp"
#include "ineqforge/report.hpp"
#include "ineqforge/sharp_constants.hpp"
#include "ineqforge/special_means.hpp"
#include "ineqforge/suite.hpp"
#include "ineqforge/verifier.hpp"

using namespace ineqforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const CLI::Validator kFinite(
    [](std::string& s) -> std::string {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size() || !std::isfinite(v)) return "not a finite number: " + s;
        } catch (const std::exception&) {
            return "not a number: " + s;
        }
        return {};
    },
    "FINITE");

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

struct Settings {
    std::string config_path;
    std::string catalog_path;
    std::string json_path;
    int samples = 0;
    int refine_depth = 0;
    double endpoint_eps = 0.0;
    double ratio_max = 0.0;
    double epsilon = 1e-3;
    int threads = 0;

    CLI::Option* samples_opt = nullptr;
    CLI::Option* refine_opt = nullptr;
    CLI::Option* eps_opt = nullptr;
    CLI::Option* ratio_opt = nullptr;
    CLI::Option* epsilon_opt = nullptr;
    CLI::Option* threads_opt = nullptr;

    VerificationConfig config;
    double probe_epsilon = 1e-3;

    void resolve() {
        if (!config_path.empty()) {
            for (const auto& [key, value] : read_config_file(config_path)) {
                const auto as_double = [&] {
                    std::string v = value;
                    if (!kFinite(v).empty()) throw UsageError("config " + key + ": not a finite number");
                    return std::stod(v);
                };
                const auto as_int = [&] {
                    const double d = as_double();
                    if (d != std::floor(d)) throw UsageError("config " + key + ": not an integer");
                    return static_cast<int>(d);
                };
                if (key == "samples") config.samples = as_int();
                else if (key == "refine_depth") config.refine_depth = as_int();
                else if (key == "endpoint_eps") config.endpoint_eps = as_double();
                else if (key == "ratio_max") config.ratio_max = as_double();
                else if (key == "margin_floor") config.margin_floor = as_double();
                else if (key == "roundoff_rel") config.roundoff_rel = as_double();
                else if (key == "threads") config.threads = as_int();
                else if (key == "epsilon") probe_epsilon = as_double();
                else throw UsageError("config: unknown key '" + key + "'");
            }
        }
        if (samples_opt->count() > 0) config.samples = samples;
        if (refine_opt->count() > 0) config.refine_depth = refine_depth;
        if (eps_opt->count() > 0) config.endpoint_eps = endpoint_eps;
        if (ratio_opt->count() > 0) config.ratio_max = ratio_max;
        if (threads_opt->count() > 0) config.threads = threads;
        if (epsilon_opt->count() > 0) probe_epsilon = epsilon;
        try {
            config.validate();
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        if (!(probe_epsilon > 0.0)) throw UsageError("--epsilon must be positive");
    }

    const ChainRegistry& registry() {
        if (catalog_path.empty()) return builtin_registry();
        if (!catalog_) {
            std::ifstream in(catalog_path);
            if (!in) throw UsageError("cannot read catalog " + catalog_path);
            catalog_ = read_catalog(in);
        }
        return *catalog_;
    }

private:
    std::optional<ChainRegistry> catalog_;
};

void write_json(const std::string& path, const Json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << j.dump(2) << '\n';
}

void list_ids(std::ostream& out, const std::string& what, const std::vector<std::string>& ids) {
    out << "available " << what << ":";
    for (const auto& id : ids) out << ' ' << id;
    out << '\n';
}

const ChainSpec& lookup_chain(Settings& s, const std::string& id) {
    const ChainSpec* chain = s.registry().find(id);
    if (chain == nullptr) {
        std::cerr << "unknown chain '" << id << "'\n";
        list_ids(std::cerr, "chains", s.registry().ids());
        throw UsageError("unknown chain id");
    }
    return *chain;
}

void print_witness(std::ostream& out, const char* var, const Witness& w) {
    out << "    witness " << var << " = " << num(w.t) << "  lhs = " << num(w.lhs) << "  rhs = " << num(w.rhs)
        << '\n';
}

void print_report(std::ostream& out, const ChainSpec& chain, const VerificationReport& r) {
    const char* var = chain.form == ChainForm::Mean ? "r" : "t";
    out << r.chain << "  " << var << " in (" << num(r.domain.lo) << ", " << num(r.domain.hi) << ")  "
        << verdict_name(r.verdict) << '\n';
    for (const auto& l : r.links) {
        out << "  [" << l.index << "] " << l.lhs << ' ' << relation_symbol(l.relation) << ' ' << l.rhs << '\n'
            << "      " << verdict_name(l.verdict) << "  min margin " << short_num(l.min_margin) << " at " << var
            << " = " << short_num(l.argmin);
        if (l.contact_lo + l.contact_hi > 0) {
            out << "  contact " << l.contact_lo << '/' << l.contact_hi;
        }
        out << '\n';
        if (l.verdict != Verdict::VerifiedNumeric && !l.diagnostic.empty()) {
            out << "      " << l.diagnostic << '\n';
        }
        if (l.witness) print_witness(out, var, *l.witness);
    }
}

int cmd_list(Settings& s, bool probes, bool kernels) {
    if (kernels) {
        for (const auto& id : kernel_ids()) std::cout << id << '\n';
        return kExitOk;
    }
    if (probes) {
        for (const auto& p : builtin_probes()) {
            std::cout << p.id << "  " << p.parameter << (p.direction > 0 ? " + eps" : " - eps") << "  expected "
                      << region_name(p.region) << '\n';
        }
        return kExitOk;
    }
    for (const auto& c : s.registry().all()) {
        std::printf("%-12s %-13s %2zu links  (%s, %s)  %s\n", c.id.c_str(), std::string(form_name(c.form)).c_str(),
                    c.link_count(), short_num(c.domain.lo).c_str(), short_num(c.domain.hi).c_str(),
                    c.description.c_str());
    }
    return kExitOk;
}

int cmd_verify(Settings& s, const std::vector<std::string>& ids) {
    std::vector<const ChainSpec*> chains;
    for (const auto& id : ids) chains.push_back(&lookup_chain(s, id));
    Json all = Json::array();
    bool ok = true;
    for (const ChainSpec* chain : chains) {
        const VerificationReport r = verify_chain(*chain, s.config);
        print_report(std::cout, *chain, r);
        ok = ok && r.verdict == Verdict::VerifiedNumeric;
        all.push_back(to_json(r));
    }
    write_json(s.json_path, all.size() == 1 ? all[0] : all);
    return ok ? kExitOk : kExitFailed;
}

int cmd_constants(Settings& s) {
    Json summary = Json::object();
    Json detail = Json::array();
    for (const auto& spec : constant_specs()) {
        const SolvedConstant c = solve_constant(spec);
        summary[c.name] = c.value;
        detail.push_back(to_json(c));
    }
    std::cout << summary.dump(2) << '\n';
    write_json(s.json_path, detail);
    return kExitOk;
}

int cmd_means(Settings& s, double a, double b, double order) {
    const PositivePair pair(a, b);
    Json j = Json::object();
    for (MeanTag tag : kAllMeanTags) {
        const MeanKind kind{tag, order};
        const double v = evaluate_mean(kind, pair);
        std::printf("%-6s %s\n", mean_name(kind).c_str(), num(v).c_str());
        j[mean_name(kind)] = v;
    }
    write_json(s.json_path, {{"a", a}, {"b", b}, {"means", j}});
    return kExitOk;
}

int cmd_table(const std::string& id, double from, double to, double step, const std::string& csv_path) {
    if (!(step > 0.0)) throw UsageError("--step must be positive");
    if (!(to >= from)) throw UsageError("--to must not be below --from");
    const Kernel k = make_kernel(id);
    const auto count = static_cast<long long>(std::floor((to - from) / step * (1.0 + 1e-12))) + 1;
    std::ostringstream out;
    out << "t,value\n";
    for (long long i = 0; i < count; ++i) {
        const double t = from + static_cast<double>(i) * step;
        out << num(t) << ',' << num(k.eval(t)) << '\n';
    }
    if (csv_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(csv_path);
        if (!f) throw UsageError("cannot write " + csv_path);
        f << out.str();
    }
    return kExitOk;
}

int cmd_sharpness(Settings& s, const std::vector<std::string>& ids) {
    std::vector<SharpnessProbe> probes;
    for (const auto& id : ids) {
        const auto all = builtin_probes();
        const auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.id == id; });
        if (it == all.end()) {
            std::cerr << "unknown probe '" << id << "'\n";
            std::vector<std::string> names;
            for (const auto& p : all) names.push_back(p.id);
            list_ids(std::cerr, "probes", names);
            throw UsageError("unknown probe id");
        }
        lookup_chain(s, it->chain);
        probes.push_back(*it);
        probes.back().epsilon = s.probe_epsilon;
    }
    Json all = Json::array();
    bool ok = true;
    for (const auto& probe : probes) {
        const ProbeResult r = run_probe(s.registry(), probe, s.config);
        const bool pass = r.falsified && r.in_region;
        std::cout << probe.id << "  " << probe.parameter << " = " << num(r.parameter_value) << "  "
                  << (r.falsified ? "falsified" : std::string(verdict_name(r.report.verdict)))
                  << (pass ? "" : "  FAIL") << '\n';
        if (r.witness) {
            std::cout << "    " << (r.in_region ? "inside " : "outside ") << region_name(probe.region) << '\n';
            print_witness(std::cout, "t", *r.witness);
        }
        ok = ok && pass;
        all.push_back(to_json(r));
    }
    write_json(s.json_path, all.size() == 1 ? all[0] : all);
    return ok ? kExitOk : kExitFailed;
}

int cmd_suite(Settings& s, bool quiet) {
    SuiteOptions options;
    options.config = s.config;
    options.epsilon = s.probe_epsilon;
    std::string category;
    options.on_item = [&](const SuiteItem& item) {
        if (quiet && item.passed) return;
        if (item.category != category) {
            category = item.category;
            std::cout << category << '\n';
        }
        std::cout << "  " << (item.passed ? "pass " : "FAIL ") << item.name;
        if (!item.passed || !quiet) std::cout << "  " << item.detail;
        std::cout << '\n';
    };
    const SuiteResult r = run_suite(s.registry(), options);
    std::cout << r.items.size() - r.failures() << '/' << r.items.size() << " passed\n";
    write_json(s.json_path, to_json(r));
    return r.passed() ? kExitOk : kExitFailed;
}

int cmd_endpoints(Settings& s, const std::vector<std::string>& ids) {
    bool ok = true;
    Json all = Json::array();
    for (const auto& id : ids) {
        const EndpointReport r = verify_endpoint_limits(lookup_chain(s, id));
        for (const auto& c : r.claims) {
            std::cout << id << "  " << c.claim.expression << (c.claim.at_hi ? " at hi -> " : " at lo -> ")
                      << num(c.limit) << "  " << (c.converged ? "converged" : "FAIL " + c.diagnostic) << '\n';
            for (std::size_t i = 0; i < c.values.size(); ++i) {
                std::cout << "    delta " << short_num(c.deltas[i]) << "  value " << num(c.values[i]) << "  error "
                          << short_num(c.errors[i]) << '\n';
            }
        }
        if (r.claims.empty()) std::cout << id << "  no endpoint claims\n";
        ok = ok && r.ok;
        all.push_back(to_json(r));
    }
    write_json(s.json_path, all.size() == 1 ? all[0] : all);
    return ok ? kExitOk : kExitFailed;
}

int cmd_monotone(Settings& s, const std::string& id, const std::string& direction, std::vector<double> domain) {
    std::optional<Interval> d;
    if (!domain.empty()) {
        if (domain.size() != 2) throw UsageError("--domain takes two numbers");
        d = Interval{domain[0], domain[1]};
    }
    const Direction dir = direction == "increasing" ? Direction::Increasing : Direction::Decreasing;
    const MonotoneReport r = verify_monotone(id, dir, s.config, d);
    std::cout << r.kernel << "  " << direction << " on (" << num(r.domain.lo) << ", " << num(r.domain.hi) << ")  "
              << (r.monotone ? "monotone_numeric" : "FAIL " + r.diagnostic) << '\n';
    if (r.witness) {
        std::cout << "    f(" << num(r.witness->first.t) << ") = " << num(r.witness->first.lhs) << "  f("
                  << num(r.witness->second.t) << ") = " << num(r.witness->second.lhs) << '\n';
    }
    write_json(s.json_path, to_json(r));
    return r.monotone ? kExitOk : kExitFailed;
}

int cmd_m6(Settings& s, std::vector<double> grid) {
    if (grid.empty()) grid = default_m6_grid();
    const M6Report r = m6_iff_suite(grid, s.config, s.probe_epsilon);
    for (const auto& c : r.cases) {
        std::cout << "p = " << short_num(c.p) << "  alpha = " << num(c.alpha) << "  beta = " << num(c.beta) << "  "
                  << (c.ok ? "ok" : "FAIL") << '\n';
        std::cout << "    boundary " << verdict_name(c.boundary.verdict) << '\n';
        for (const auto& p : c.probes) {
            std::cout << "    " << p.probe.id << "  " << (p.falsified ? "falsified" : "not falsified")
                      << (p.in_region ? " inside " : " outside ") << region_name(p.probe.region) << '\n';
        }
    }
    write_json(s.json_path, to_json(r));
    return r.ok ? kExitOk : kExitFailed;
}

int cmd_export(Settings& s, const std::string& path) {
    if (path.empty()) {
        write_catalog(std::cout, s.registry().all());
        return kExitOk;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    write_catalog(out, s.registry().all());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of trigonometric, hyperbolic and bivariate-mean inequality chains"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "ineqforge 0.1.0");

    Settings s;
    app.add_option("--config", s.config_path, "key=value file with verifier defaults")->check(CLI::ExistingFile);
    app.add_option("--catalog", s.catalog_path, "chain catalog (JSON lines) used instead of the built-in chains")
        ->check(CLI::ExistingFile);
    app.add_option("--json", s.json_path, "write the report as JSON to this path");
    s.samples_opt = app.add_option("--samples", s.samples, "grid points per link")->check(CLI::Range(3, 100000000));
    s.refine_opt = app.add_option("--refine-depth", s.refine_depth, "golden-section steps")->check(CLI::Range(0, 200));
    s.eps_opt = app.add_option("--endpoint-eps", s.endpoint_eps, "fraction of the domain trimmed at each end")
                    ->check(kFinite);
    s.ratio_opt = app.add_option("--ratio-max", s.ratio_max, "upper end of the ratio domain for mean chains")
                      ->check(kFinite);
    s.epsilon_opt = app.add_option("--epsilon", s.epsilon, "parameter perturbation for sharpness probes")
                        ->check(kFinite);
    s.threads_opt = app.add_option("--threads", s.threads, "worker threads (capped by INEQFORGE_THREADS)")
                        ->check(CLI::NonNegativeNumber);

    bool list_probes = false;
    bool list_kernels = false;
    auto* list = app.add_subcommand("list", "list chains, probes or kernels");
    list->add_flag("--probes", list_probes, "list sharpness probes");
    list->add_flag("--kernels", list_kernels, "list kernel ids usable with table and monotone");

    std::vector<std::string> chain_ids;
    auto* verify = app.add_subcommand("verify", "verify chains on their domains");
    verify->add_option("chain", chain_ids, "chain id(s)")->required();

    auto* constants = app.add_subcommand("constants", "solve the sharp constants");

    double a = 0.0;
    double b = 0.0;
    double order = 2.0;
    auto* means = app.add_subcommand("means", "evaluate every mean of a pair");
    means->add_option("--a", a, "first argument")->required()->check(kFinite);
    means->add_option("--b", b, "second argument")->required()->check(kFinite);
    means->add_option("--order", order, "order r of the power mean A_r")->check(kFinite);

    std::string fn;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    std::string csv_path;
    auto* table = app.add_subcommand("table", "tabulate a kernel as CSV");
    table->add_option("function", fn, "kernel id, e.g. sinc or Fp(p=2/3)")->required();
    table->add_option("--from", from, "first t")->required()->check(kFinite);
    table->add_option("--to", to, "last t")->required()->check(kFinite);
    table->add_option("--step", step, "spacing")->required()->check(kFinite);
    table->add_option("--csv", csv_path, "write CSV here instead of stdout");

    std::vector<std::string> probe_ids;
    auto* sharpness = app.add_subcommand("sharpness", "perturb a sharp parameter and expect falsification");
    sharpness->add_option("probe", probe_ids, "probe id(s), e.g. M1:p-")->required();

    bool quiet = false;
    auto* suite = app.add_subcommand("suite", "run every check and print a pass/fail matrix");
    suite->add_flag("-q,--quiet", quiet, "print failures only");

    std::vector<std::string> endpoint_ids;
    auto* endpoints = app.add_subcommand("endpoints", "check the endpoint limits claimed for chains");
    endpoints->add_option("chain", endpoint_ids, "chain id(s)")->required();

    std::string kernel;
    std::string direction;
    std::vector<double> domain;
    auto* monotone = app.add_subcommand("monotone", "check that a kernel is monotone");
    monotone->add_option("kernel", kernel, "kernel id")->required();
    monotone->add_option("direction", direction, "increasing or decreasing")
        ->required()
        ->check(CLI::IsMember({"increasing", "decreasing"}));
    monotone->add_option("--domain", domain, "lo hi")->expected(2)->check(kFinite);

    std::vector<double> grid;
    auto* m6 = app.add_subcommand("m6", "check the three parameter regimes of the cos^p bounds");
    m6->add_option("--p", grid, "values of p (default grid when omitted)")->check(kFinite);

    std::string export_path;
    auto* exporter = app.add_subcommand("export-catalog", "write the chain catalog as JSON lines");
    exporter->add_option("path", export_path, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        s.resolve();
        if (list->parsed()) return cmd_list(s, list_probes, list_kernels);
        if (verify->parsed()) return cmd_verify(s, chain_ids);
        if (constants->parsed()) return cmd_constants(s);
        if (means->parsed()) return cmd_means(s, a, b, order);
        if (table->parsed()) return cmd_table(fn, from, to, step, csv_path);
        if (sharpness->parsed()) return cmd_sharpness(s, probe_ids);
        if (suite->parsed()) return cmd_suite(s, quiet);
        if (endpoints->parsed()) return cmd_endpoints(s, endpoint_ids);
        if (monotone->parsed()) return cmd_monotone(s, kernel, direction, domain);
        if (m6->parsed()) return cmd_m6(s, grid);
        if (exporter->parsed()) return cmd_export(s, export_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
