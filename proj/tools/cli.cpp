#include "cli.hpp"

#include <fstream>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "imtl/io.hpp"
#include "imtl/search.hpp"
#include "imtl/transform.hpp"
#include "json.hpp"

namespace imtl::cli {

namespace {

using nlohmann::json;

struct Options {
    std::vector<std::string> models;
    std::string formula;
    std::string target;
    std::string output;
    std::string format = "human";
    std::size_t depth = 3;
    std::size_t instance_depth = 2;
    std::size_t max_worlds = 3;
    std::vector<std::string> vars;
    unsigned jobs = 1;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 1000;
    long time_limit_ms = 0;
};

/// Input problem already reported to the user.
struct InputError {
    std::string message;
};

std::string render_set(WorldSet s, std::size_t worlds) {
    return s == WorldSet::full(worlds) ? std::string("W") : s.to_string();
}

AnyModel load_valid(const std::string& path) {
    AnyModel m;
    try {
        m = load_model_file(path);
    } catch (const ModelFormatError& e) {
        throw InputError{path + ": " + e.what()};
    } catch (const std::invalid_argument& e) {
        throw InputError{path + ": " + e.what()};
    }
    if (auto diags = validate(m); !diags.empty()) {
        std::string msg = path + ": invalid " + kind_name(m) + " model";
        for (const auto& d : diags) msg += "\n  " + d;
        throw InputError{msg};
    }
    return m;
}

Formula parse_formula(const std::string& text) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw InputError{"formula: " + std::string(e.what())};
    }
}

WorldSet evaluate(const AnyModel& m, const Formula& f) {
    return std::visit(
        [&](const auto& x) -> WorldSet {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NimModel>) return truth_set(x, f);
            if constexpr (std::is_same_v<T, Mt1Model>) return eval_mt1(x, f);
            if constexpr (std::is_same_v<T, Mt2Model>) return eval_mt2(x, f);
            if constexpr (std::is_same_v<T, Mt3Model>) return eval_mt3(x, f);
        },
        m);
}

std::vector<std::string> variables_of(const AnyModel& m) {
    return std::visit([](const auto& x) {
        std::vector<std::string> out;
        for (const auto& [name, set] : x.valuation) out.push_back(name);
        return out;
    }, m);
}

int cmd_check(const Options& o, std::ostream& out) {
    const AnyModel m = load_valid(o.models.at(0));
    const Formula f = parse_formula(o.formula);
    const std::size_t n = world_count(m);
    const WorldSet truth = evaluate(m, f);
    const bool satisfied = truth == WorldSet::full(n);
    if (o.format == "records") {
        for (World w = 0; w < n; ++w) out << json{{"record", "world"}, {"world", w}, {"holds", truth.contains(w)}}.dump() << "\n";
        out << json{{"record", "result"}, {"formula", to_string(f)}, {"truth_set", truth.to_vector()}, {"satisfied", satisfied}}
                   .dump()
            << "\n";
    } else {
        out << render_set(truth, n) << "; " << (satisfied ? "satisfied" : "not satisfied") << "\n";
        for (World w = 0; w < n; ++w) out << "  world " << w << ": " << (truth.contains(w) ? "holds" : "fails") << "\n";
    }
    return satisfied ? kHolds : kFails;
}

int cmd_validate(const Options& o, std::ostream& out) {
    AnyModel m;
    try {
        m = load_model_file(o.models.at(0));
    } catch (const ModelFormatError& e) {
        throw InputError{o.models.at(0) + ": " + e.what()};
    } catch (const std::invalid_argument& e) {
        throw InputError{o.models.at(0) + ": " + e.what()};
    }
    const auto diags = validate(m);
    if (o.format == "records") {
        out << json{{"record", "validation"}, {"kind", kind_name(m)}, {"valid", diags.empty()}, {"violations", diags}}.dump()
            << "\n";
    } else {
        out << kind_name(m) << " model with " << world_count(m) << " worlds: " << (diags.empty() ? "valid" : "invalid")
            << "\n";
        for (const auto& d : diags) out << "  " << d << "\n";
    }
    return diags.empty() ? kHolds : kFails;
}

void emit_model(const Options& o, const AnyModel& m, std::ostream& out) {
    if (o.output.empty()) {
        out << save_model(m);
        return;
    }
    std::ofstream file(o.output);
    if (!file) throw InputError{"cannot write " + o.output};
    file << save_model(m);
}

int cmd_transform(const Options& o, std::ostream& out) {
    const AnyModel src = load_valid(o.models.at(0));
    const std::string from = kind_name(src);
    AnyModel result;
    try {
        if (from == "nim" && o.target == "mt1") {
            result = nim_to_mt1(std::get<NimModel>(src));
        } else if (from == "nim" && o.target == "mt3") {
            result = nim_to_mt3(std::get<NimModel>(src));
        } else if (from == "mt2" && o.target == "nim") {
            result = mt2_to_nim(std::get<Mt2Model>(src));
        } else {
            throw InputError{"unsupported direction: " + from + " -> " + o.target};
        }
    } catch (const InvalidModel& e) {
        throw InputError{e.what()};
    }
    emit_model(o, result, out);
    if (!o.output.empty()) {
        std::size_t spaces = std::visit(
            [](const auto& x) -> std::size_t {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, NimModel>) {
                    return 0;
                } else {
                    return x.spaces.size();
                }
            },
            result);
        out << from << " -> " << kind_name(result) << ": " << world_count(result) << " worlds";
        if (kind_name(result) != "nim") out << ", " << spaces << " spaces";
        out << "\n";
    }
    return kHolds;
}

int cmd_equiv(const Options& o, std::ostream& out) {
    if (o.models.size() != 2) throw InputError{"equiv needs exactly two --model files (one nim, one mt1/mt2/mt3)"};
    AnyModel a = load_valid(o.models[0]);
    AnyModel b = load_valid(o.models[1]);
    if (!std::holds_alternative<NimModel>(a)) std::swap(a, b);
    if (!std::holds_alternative<NimModel>(a) || std::holds_alternative<NimModel>(b)) {
        throw InputError{"equiv compares one nim model with one mt1/mt2/mt3 model"};
    }
    const auto& nim = std::get<NimModel>(a);

    std::vector<std::string> vars = o.vars;
    if (vars.empty()) {
        std::set<std::string> names;
        for (const auto& v : variables_of(a)) names.insert(v);
        for (const auto& v : variables_of(b)) names.insert(v);
        vars.assign(names.begin(), names.end());
        if (vars.empty()) vars.push_back("p");
    }
    const auto formulas = enumerate_formulas(vars, o.depth);

    EquivalenceReport report;
    try {
        report = std::visit(
            [&](const auto& mt) -> EquivalenceReport {
                if constexpr (std::is_same_v<std::decay_t<decltype(mt)>, NimModel>) {
                    return {};
                } else {
                    return check_pointwise_equivalence(nim, mt, formulas, o.jobs);
                }
            },
            b);
    } catch (const IncompatibleModels& e) {
        throw InputError{e.what()};
    }

    if (o.format == "records") {
        for (const auto& mm : report.mismatches) {
            out << json{{"record", "mismatch"},
                        {"formula", to_string(mm.formula)},
                        {"world", mm.world},
                        {"nim", mm.nim_verdict},
                        {"mt", mm.mt_verdict}}
                       .dump()
                << "\n";
        }
        out << json{{"record", "result"},
                    {"kind", kind_name(b)},
                    {"formulas", report.formula_count},
                    {"worlds", report.world_count},
                    {"mismatches", report.mismatches.size()}}
                   .dump()
            << "\n";
    } else {
        out << "nim vs " << kind_name(b) << ": " << report.formula_count << " formulas x " << report.world_count
            << " worlds, " << report.mismatches.size() << " mismatches\n";
        constexpr std::size_t kShown = 20;
        for (std::size_t i = 0; i < report.mismatches.size() && i < kShown; ++i) {
            const auto& mm = report.mismatches[i];
            out << "  world " << mm.world << ": " << to_string(mm.formula) << "  nim=" << (mm.nim_verdict ? "true" : "false")
                << " mt=" << (mm.mt_verdict ? "true" : "false") << "\n";
        }
        if (report.mismatches.size() > kShown) out << "  ... " << report.mismatches.size() - kShown << " more\n";
    }
    return report.holds() ? kHolds : kFails;
}

SearchConfig search_config(const Options& o, const Formula& f) {
    SearchConfig cfg;
    cfg.max_worlds = o.max_worlds;
    cfg.jobs = std::max(1U, o.jobs);
    cfg.time_limit = std::chrono::milliseconds(o.time_limit_ms);
    if (o.seed) cfg.enumeration = Randomized{o.samples, *o.seed};
    cfg.variables = o.vars;
    if (cfg.variables.empty()) {
        const auto names = atoms(f);
        cfg.variables.assign(names.begin(), names.end());
    }
    if (cfg.max_worlds == 0) throw InputError{"--max-worlds must be at least 1"};
    return cfg;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    const Formula f = parse_formula(o.formula);
    const SearchConfig cfg = search_config(o, f);
    SearchOutcome outcome;
    try {
        outcome = find_countermodel(f, cfg);
    } catch (const std::invalid_argument& e) {
        throw InputError{e.what()};
    }

    if (const auto* none = std::get_if<NoCountermodelUpTo>(&outcome)) {
        if (o.format == "records") {
            out << json{{"record", "result"},
                        {"outcome", "no_countermodel"},
                        {"max_worlds", none->max_worlds},
                        {"frames", none->frames_checked},
                        {"models", none->models_checked}}
                       .dump()
                << "\n";
        } else {
            out << "no countermodel up to " << none->max_worlds << " worlds (" << none->frames_checked << " frames, "
                << none->models_checked << " models)\n";
        }
        return kHolds;
    }

    const auto& cm = std::get<Countermodel>(outcome);
    if (o.format == "records") {
        out << json{{"record", "result"},
                    {"outcome", "countermodel"},
                    {"world", cm.world},
                    {"model", json::parse(save_model(cm.model))}}
                   .dump()
            << "\n";
        return kFails;
    }
    err << "countermodel: " << to_string(f) << " fails at world " << cm.world << " of a " << cm.model.worlds()
        << "-world model\n";
    if (o.output.empty()) {
        out << save_model(cm.model);
    } else {
        emit_model(o, cm.model, out);
        out << "countermodel written to " << o.output << " (fails at world " << cm.world << ")\n";
    }
    return kFails;
}

int cmd_soundness(const Options& o, std::ostream& out) {
    std::vector<Schema> schemas;
    if (o.formula.empty()) {
        schemas = imtl_axiom_schemas();
    } else {
        schemas.push_back({"custom", parse_formula(o.formula)});
    }
    SearchConfig cfg;
    cfg.max_worlds = o.max_worlds;
    cfg.variables = o.vars.empty() ? std::vector<std::string>{"p", "q"} : o.vars;
    cfg.time_limit = std::chrono::milliseconds(o.time_limit_ms);
    if (o.seed) cfg.enumeration = Randomized{o.samples, *o.seed};
    if (cfg.max_worlds == 0) throw InputError{"--max-worlds must be at least 1"};
    const auto report = soundness_sweep(schemas, cfg, o.instance_depth);
    for (const auto& r : report.results) {
        if (o.format == "records") {
            json rec{{"record", "schema"},
                     {"name", r.schema.name},
                     {"pattern", to_string(r.schema.pattern)},
                     {"instances", r.instances},
                     {"violations", r.violations.size()}};
            if (!r.violations.empty()) {
                rec["first_violation"] = {{"instance", to_string(r.violations.front().instance)},
                                          {"world", r.violations.front().countermodel.world}};
            }
            out << rec.dump() << "\n";
        } else {
            out << r.schema.name << "  " << to_string(r.schema.pattern) << ": " << r.instances << " instances, "
                << r.violations.size() << " violations\n";
            if (!r.violations.empty()) {
                const auto& v = r.violations.front();
                out << "  e.g. " << to_string(v.instance) << " fails at world " << v.countermodel.world << " of a "
                    << v.countermodel.model.worlds() << "-world model\n";
            }
        }
    }
    if (o.format == "human") out << report.models_checked << " models checked\n";
    return report.sound() ? kHolds : kFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-model workbench for intuitionistic modal logic with neighborhood and multi-topological models",
                 "imtl"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "records"}));
    };

    auto* check = app.add_subcommand("check", "Evaluate a formula in a model");
    check->add_option("--model", o.models, "Model file")->required()->expected(1);
    check->add_option("--formula", o.formula, "Formula")->required();
    add_format(check);

    auto* validate_cmd = app.add_subcommand("validate", "Check a model file against its invariants");
    validate_cmd->add_option("--model", o.models, "Model file")->required()->expected(1);
    add_format(validate_cmd);

    auto* transform = app.add_subcommand("transform", "Translate a model (nim->mt1, nim->mt3, mt2->nim)");
    transform->add_option("--model", o.models, "Source model file")->required()->expected(1);
    transform->add_option("--target", o.target, "Target kind")->required()->check(CLI::IsMember({"mt1", "mt2", "mt3", "nim"}));
    transform->add_option("--output,-o", o.output, "Write the result here instead of stdout");

    auto* equiv = app.add_subcommand("equiv", "Check pointwise equivalence of a nim model and an mt model");
    equiv->add_option("--model", o.models, "Model files (give twice)")->required();
    equiv->add_option("--depth", o.depth, "Maximum formula depth (atoms have depth 1)");
    equiv->add_option("--vars", o.vars, "Variables for the formula fleet")->delimiter(',');
    equiv->add_option("--jobs", o.jobs, "Worker threads");
    add_format(equiv);

    auto* search = app.add_subcommand("search", "Search for a countermodel among small NIM models");
    search->add_option("--formula", o.formula, "Formula")->required();
    search->add_option("--max-worlds", o.max_worlds, "Largest world count to try");
    search->add_option("--vars", o.vars, "Variables to valuate (default: those of the formula)")->delimiter(',');
    search->add_option("--jobs", o.jobs, "Worker threads");
    search->add_option("--seed", o.seed, "Sample random models with this seed instead of enumerating");
    search->add_option("--samples", o.samples, "Number of random models with --seed");
    search->add_option("--time-limit", o.time_limit_ms, "Milliseconds; 0 for none");
    search->add_option("--output,-o", o.output, "Write a countermodel here");
    add_format(search);

    auto* soundness = app.add_subcommand("soundness", "Search for countermodels to axiom instances");
    soundness->add_option("--formula", o.formula, "Single schema over metavariables (default: K, T and IPC)");
    soundness->add_option("--max-worlds", o.max_worlds, "Largest world count to try");
    soundness->add_option("--vars", o.vars, "Variables for instances (default p,q)")->delimiter(',');
    soundness->add_option("--depth", o.instance_depth, "Depth of substituted formulas");
    soundness->add_option("--seed", o.seed, "Sample random models with this seed instead of enumerating");
    soundness->add_option("--samples", o.samples, "Number of random models with --seed");
    soundness->add_option("--time-limit", o.time_limit_ms, "Milliseconds; 0 for none");
    add_format(soundness);

    std::vector<std::string> argv_storage{"imtl"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (validate_cmd->parsed()) return cmd_validate(o, out);
        if (transform->parsed()) return cmd_transform(o, out);
        if (equiv->parsed()) return cmd_equiv(o, out);
        if (search->parsed()) return cmd_search(o, out, err);
        if (soundness->parsed()) return cmd_soundness(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.message << "\n";
        return kInputError;
    } catch (const SearchTimeout& e) {
        err << "error: " << e.what() << "\n";
        return kTimeout;
    }
    return kInputError;
}

}  // namespace imtl::cli
