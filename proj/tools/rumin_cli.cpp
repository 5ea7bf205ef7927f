#include "rumin/complex.hpp"
#include "rumin/error.hpp"
#include "rumin/report.hpp"
#include "rumin/verifier.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace rumin;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2 };

struct CliConfig {
    std::string group;
    std::vector<std::string> binds;
    bool bind_early = false;
    std::vector<std::string> ops;
    std::string format = "text";
    std::string resolvent = "spectral";
    std::string out;
    std::string level = "full";
    std::string inject_fault;
};

Bindings parse_bindings(const std::vector<std::string>& binds, const LieAlgebra& alg) {
    Bindings out;
    for (const auto& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos) throw ParseError("binding '" + b + "' is not of the form name=value");
        std::string name = b.substr(0, eq);
        const auto& params = alg.parameters();
        if (std::find(params.begin(), params.end(), name) == params.end())
            throw ParseError("group '" + alg.name() + "' has no parameter '" + name + "'");
        out[name] = parse_rational(b.substr(eq + 1));
    }
    return out;
}

void emit(const CliConfig& cfg, const std::string& stem, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    static const std::map<std::string, std::string> ext = {{"json", ".json"}, {"latex", ".tex"}, {"text", ".txt"}};
    std::filesystem::create_directories(cfg.out);
    auto path = std::filesystem::path(cfg.out) / (stem + ext.at(cfg.format));
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
    std::cerr << "wrote " << path.string() << "\n";
}

std::string file_stem(const LieAlgebra& alg) {
    std::string s = alg.name();
    for (char& ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') ch = '_';
    return s;
}

int cmd_catalog() {
    for (const auto& name : catalog_names()) {
        Algebra a = catalog(name);
        std::cout << name << "  dim " << a->dimension() << "  weights (";
        for (int i = 0; i < a->dimension(); ++i) std::cout << (i ? "," : "") << a->weight(i).get_str();
        std::cout << ")";
        if (!a->parameters().empty()) {
            std::cout << "  parameters";
            for (const auto& p : a->parameters()) std::cout << " " << p;
        }
        std::cout << "\n";
    }
    return ok;
}

int cmd_validate(const CliConfig& cfg) {
    Algebra alg = resolve_algebra(cfg.group);
    ValidationReport report = validate(*alg);
    if (report.valid()) {
        std::cout << alg->name() << ": valid\n";
        return ok;
    }
    std::cout << alg->name() << ": " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) std::cout << "  " << v << "\n";
    return failed;
}

/// The algebra to compute with and the bindings left for the final matrices.
std::pair<Algebra, Bindings> prepare(const CliConfig& cfg, bool force_early) {
    Algebra alg = resolve_algebra(cfg.group);
    ValidationReport report = validate(*alg);
    if (!report.valid()) throw InvalidAlgebra("group '" + alg->name() + "' is invalid: " + report.violations.front());
    Bindings bindings = parse_bindings(cfg.binds, *alg);
    if ((cfg.bind_early || force_early) && !bindings.empty()) return {alg->specialize(bindings), {}};
    return {alg, bindings};
}

PipelineOptions pipeline_options(const CliConfig& cfg) {
    PipelineOptions o;
    o.resolvent = cfg.resolvent == "direct" ? ResolventRoute::direct : ResolventRoute::spectral;
    if (!cfg.inject_fault.empty()) {
        o.inject_fault = cfg.inject_fault;
        o.strict = false;
    }
    return o;
}

int cmd_compute(const CliConfig& cfg) {
    check_operator_names(cfg.ops);
    auto [alg, late] = prepare(cfg, false);
    RuminComplex c = build_complex(alg, pipeline_options(cfg));
    ComplexReport report;
    try {
        report = make_report(c, cfg.ops, late);
    } catch (const DenominatorVanishes& e) {
        throw DenominatorVanishes(std::string(e.what()) + "; rerun with --bind-early");
    }
    std::string text = cfg.format == "json"    ? to_json(report).dump(2)
                       : cfg.format == "latex" ? to_latex(report)
                                               : to_text(report);
    emit(cfg, file_stem(*report.space->algebra), text);
    return ok;
}

int cmd_verify(const CliConfig& cfg) {
    // Identities are checked over the specialized structure constants.
    auto [alg, late] = prepare(cfg, true);
    SuiteLevel level = cfg.level == "fast" ? SuiteLevel::fast : SuiteLevel::full;
    auto results = run_suite(alg, level, pipeline_options(cfg));
    std::string text;
    if (cfg.format == "json")
        text = nlohmann::ordered_json{{"group", alg->name()}, {"level", cfg.level}, {"passed", all_passed(results)},
                                      {"checks", checks_to_json(results)}}
                   .dump(2);
    else
        text = alg->name() + " (" + cfg.level + ")\n" + checks_to_text(results);
    emit(cfg, file_stem(*alg) + ".verify", text);
    return all_passed(results) ? ok : failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rumin complexes of homogeneous Lie groups"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto group_opt = [&](CLI::App* sub) { sub->add_option("--group", cfg.group, "catalog name or JSON file")->required(); };
    auto bind_opts = [&](CLI::App* sub) {
        sub->add_option("--bind", cfg.binds, "parameter binding name=value (repeatable)");
        sub->add_flag("--bind-early", cfg.bind_early, "substitute into the structure constants before computing");
    };
    auto out_opts = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "latex", "text"}));
        sub->add_option("--out", cfg.out, "output directory (default: stdout)");
    };

    auto* catalog_cmd = app.add_subcommand("catalog", "list built-in groups");
    auto* validate_cmd = app.add_subcommand("validate", "check a group description");
    group_opt(validate_cmd);

    auto* compute_cmd = app.add_subcommand("compute", "compute and print operators");
    group_opt(compute_cmd);
    bind_opts(compute_cmd);
    out_opts(compute_cmd);
    compute_cmd->add_option("--op", cfg.ops, "operator to emit (repeatable, default all)");
    compute_cmd->add_option("--resolvent", cfg.resolvent, "route whose residue defines P")
        ->check(CLI::IsMember({"spectral", "direct"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
    group_opt(verify_cmd);
    bind_opts(verify_cmd);
    out_opts(verify_cmd);
    verify_cmd->add_option("--level", cfg.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify_cmd->add_option("--resolvent", cfg.resolvent, "route whose residue defines P")
        ->check(CLI::IsMember({"spectral", "direct"}));
    verify_cmd->add_option("--inject-fault", cfg.inject_fault, "flip one sign in d or d0 before checking")
        ->check(CLI::IsMember({"d", "d0"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (catalog_cmd->parsed()) return cmd_catalog();
        if (validate_cmd->parsed()) return cmd_validate(cfg);
        if (compute_cmd->parsed()) return cmd_compute(cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
    } catch (const UnknownOperator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const EigenvaluesNotInField& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
