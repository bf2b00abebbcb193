// Acceptance suite: one PASS/FAIL line per criterion, followed by indented
// details. Exits nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "imtl/io.hpp"
#include "imtl/random.hpp"
#include "imtl/search.hpp"
#include "imtl/transform.hpp"
#include "test_support.hpp"

namespace {

using namespace imtl;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(std::string why) {
        pass = false;
        details.push_back(std::move(why));
    }
    void note(std::string what) { details.push_back(std::move(what)); }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

std::set<char> letters(const std::vector<FrameViolation>& vs) {
    std::set<char> out;
    for (const auto& v : vs) out.insert(v.condition);
    return out;
}

std::string letters_string(const std::set<char>& s) { return s.empty() ? "none" : std::string(s.begin(), s.end()); }

Outcome frame_conditions() {
    Outcome o;
    const auto start = Clock::now();
    Rng rng(1001);
    std::size_t still_valid = 0;
    std::size_t rejected = 0;
    for (int i = 0; i < 1000; ++i) {
        const NimFrame f = random_nim_frame(rng, 6);
        if (!validate_frame(f).empty() || !testing::brute_force_frame_letters(f).empty()) {
            o.fail("generated frame " + std::to_string(i) + " rejected: " + describe(validate_frame(f)));
        }
    }
    for (int i = 0; i < 1000; ++i) {
        NimFrame f = random_nim_frame(rng, 6);
        const World w = rng() % f.worlds;
        const World bit = rng() % f.worlds;
        if (rng() % 2) {
            f.min[w].flip(bit);
        } else {
            f.max[w].flip(bit);
        }
        const auto got = letters(validate_frame(f));
        const auto want = testing::brute_force_frame_letters(f);
        if (got != want) {
            o.fail("mutant " + std::to_string(i) + ": validator says " + letters_string(got) + ", brute force says " +
                   letters_string(want));
        }
        (got.empty() ? still_valid : rejected) += 1;
    }
    const double t = seconds_since(start);
    o.note("1000 generated frames valid; 1000 mutants: " + std::to_string(still_valid) + " still valid, " +
           std::to_string(rejected) + " rejected with matching letters");
    o.note("time " + fmt_seconds(t) + " (target < 10 s)");
    if (t >= 10.0) o.fail("over the time target");
    return o;
}

Outcome topology_closure() {
    Outcome o;
    Rng rng(2002);
    std::size_t spaces = 0;
    for (int i = 0; i < 500; ++i) {
        const NimFrame f = random_nim_frame(rng, 6);
        for (World w = 0; w < f.worlds; ++w) {
            const FiniteTopology ow = build_ow(f, w);
            const FiniteTopology qw = build_qw(f, w);
            if (auto v = validate_topology(ow); !v.empty()) o.fail("O_w of frame " + std::to_string(i) + ": " + describe(v));
            if (auto v = validate_topology(qw); !v.empty()) o.fail("Q_w of frame " + std::to_string(i) + ": " + describe(v));
            if (testing::opens_as_ints(ow) != testing::brute_force_ow(f, w)) o.fail("O_w differs from enumeration");
            if (testing::opens_as_ints(qw) != testing::brute_force_qw(f, w)) o.fail("Q_w differs from enumeration");
            spaces += 2;
        }
    }
    o.note(std::to_string(spaces) + " topologies from 500 frames checked");
    return o;
}

Outcome derived_neighborhoods() {
    Outcome o;
    Rng rng(3003);
    for (int i = 0; i < 500; ++i) {
        const Mt2Model m = random_mt2_model(rng, 6, 3, {"p", "q"});
        const NimFrame f = derive_neighborhoods(m).to_frame();
        const auto want = testing::brute_force_frame_letters(f);
        if (!f.t_condition || !want.empty() || !validate_frame(f).empty()) {
            o.fail("model " + std::to_string(i) + " violates " + letters_string(want));
        }
    }
    o.note("500 models, derived frames satisfy a, b, c, e, f");
    return o;
}

struct Corpus {
    std::vector<Formula> formulas;
    std::vector<NimModel> models;
};

std::string first_mismatch(const EquivalenceReport& r) {
    const auto& m = r.mismatches.front();
    return to_string(m.formula) + " at world " + std::to_string(m.world) + " (nim " + (m.nim_verdict ? "true" : "false") +
           ", mt " + (m.mt_verdict ? "true" : "false") + ")";
}

Outcome pointwise_equivalence(const Corpus& corpus) {
    Outcome o;
    const auto start = Clock::now();
    const unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

    std::size_t mt1_bad = 0;
    std::size_t mt3_bad_models = 0;
    std::size_t mt3_bad_pairs = 0;
    std::size_t mt3_box_free_bad = 0;
    std::string mt1_example, mt3_example;
    for (std::size_t i = 0; i < corpus.models.size(); ++i) {
        const NimModel& m = corpus.models[i];
        const auto r1 = check_pointwise_equivalence(m, nim_to_mt1(m), corpus.formulas, jobs);
        if (!r1.holds()) {
            if (mt1_bad++ == 0) mt1_example = "model " + std::to_string(i) + ": " + first_mismatch(r1);
        }
        const auto r3 = check_pointwise_equivalence(m, nim_to_mt3(m), corpus.formulas, jobs);
        if (!r3.holds()) {
            if (mt3_bad_models++ == 0) mt3_example = "model " + std::to_string(i) + ": " + first_mismatch(r3);
            mt3_bad_pairs += r3.mismatches.size();
            for (const auto& mm : r3.mismatches) {
                bool has_box = false;
                for (const auto& s : subformulas(mm.formula)) has_box = has_box || s.kind() == Connective::Box;
                mt3_box_free_bad += has_box ? 0 : 1;
            }
        }
    }

    Rng rng(4004);
    std::size_t mt2_bad = 0;
    std::string mt2_example;
    for (int i = 0; i < 200; ++i) {
        const Mt2Model mt = random_mt2_model(rng, 6, 3, {"p", "q"});
        const auto r = check_pointwise_equivalence(mt2_to_nim(mt), mt, corpus.formulas, jobs);
        if (!r.holds()) {
            if (mt2_bad++ == 0) mt2_example = "model " + std::to_string(i) + ": " + first_mismatch(r);
        }
    }

    const std::string fleet = std::to_string(corpus.formulas.size()) + " formulas";
    o.note("nim -> mt1: " + std::to_string(mt1_bad) + " of " + std::to_string(corpus.models.size()) +
           " models with mismatches over " + fleet);
    if (mt1_bad) o.fail("nim -> mt1 first mismatch, " + mt1_example);
    o.note("mt2 -> nim: " + std::to_string(mt2_bad) + " of 200 models with mismatches over " + fleet);
    if (mt2_bad) o.fail("mt2 -> nim first mismatch, " + mt2_example);
    o.note("nim -> mt3: " + std::to_string(mt3_bad_models) + " of " + std::to_string(corpus.models.size()) +
           " models with mismatches (" + std::to_string(mt3_bad_pairs) + " formula/world pairs, " +
           std::to_string(mt3_box_free_bad) + " of them box-free)");
    if (mt3_bad_models) o.fail("nim -> mt3 first mismatch, " + mt3_example);
    const double t = seconds_since(start);
    o.note("time " + fmt_seconds(t) + " (target < 300 s)");
    if (t >= 300.0) o.fail("over the time target");
    return o;
}

SearchConfig exhaustive(std::size_t max_worlds, std::vector<std::string> vars) {
    SearchConfig cfg;
    cfg.max_worlds = max_worlds;
    cfg.variables = std::move(vars);
    return cfg;
}

bool oracle_falsifies(const Formula& f, const Countermodel& cm) {
    return testing::brute_force_frame_letters(cm.model.frame).empty() && validate_model(cm.model).empty() &&
           !testing::oracle_forces(cm.model, static_cast<int>(cm.world), f);
}

Outcome soundness() {
    Outcome o;
    const auto start = Clock::now();
    const auto report = soundness_sweep(imtl_axiom_schemas(), exhaustive(3, {"p", "q"}), 2);
    std::size_t instances = 0;
    for (const auto& r : report.results) {
        instances += r.instances;
        if (!r.violations.empty()) {
            o.fail(r.schema.name + ": " + std::to_string(r.violations.size()) + " violating instances, e.g. " +
                   to_string(r.violations.front().instance));
        }
    }
    o.note(std::to_string(report.results.size()) + " schemas, " + std::to_string(instances) + " instances, " +
           std::to_string(report.models_checked) + " models up to 3 worlds, " + fmt_seconds(seconds_since(start)));

    for (const char* text : {"~~p -> p", "p | ~p"}) {
        const Formula f = parse(text);
        const auto out = find_countermodel(f, exhaustive(2, {"p"}));
        const auto* cm = std::get_if<Countermodel>(&out);
        if (!cm) {
            o.fail(std::string(text) + ": no countermodel up to 2 worlds");
            continue;
        }
        if (!verify_countermodel(f, *cm) || !oracle_falsifies(f, *cm)) {
            o.fail(std::string(text) + ": countermodel does not verify");
            continue;
        }
        o.note(std::string(text) + ": countermodel with " + std::to_string(cm->model.worlds()) +
               " worlds, fails at world " + std::to_string(cm->world) + ", verified");
    }
    return o;
}

Outcome necessitation() {
    Outcome o;
    for (const char* text : {"p", "p -> q", "[]p"}) {
        const auto r = necessitation_check(parse(text), exhaustive(3, {"p", "q"}));
        o.note(std::string(text) + ": " + std::to_string(r.models_satisfying) + " of " + std::to_string(r.models_checked) +
               " models satisfy it, " + std::to_string(r.violations.size()) + " violations");
        if (!r.violations.empty()) o.fail(std::string(text) + ": box fails in a model satisfying it");
    }
    return o;
}

Outcome hereditary(const Corpus& corpus) {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& m : corpus.models) {
        const auto sets = NimEvaluator(m).truth_sets(corpus.formulas);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (World w : sets[i]) {
                ++pairs;
                if (!m.frame.min[w].subset_of(sets[i])) {
                    o.fail(to_string(corpus.formulas[i]) + " forced at " + std::to_string(w) +
                           " but not throughout min[w]");
                }
            }
        }
    }
    o.note(std::to_string(corpus.models.size() * corpus.formulas.size()) + " model/formula pairs, " +
           std::to_string(pairs) + " forcing instances");
    return o;
}

struct CliCase {
    std::vector<std::string> args;
    int expected;
    std::string expected_prefix;
};

Outcome cli_goldens() {
    Outcome o;
    const std::filesystem::path data = IMTL_TEST_DATA_DIR;
    auto d = [&](const char* name) { return (data / name).string(); };

    std::size_t round_trips = 0;
    Rng rng(8008);
    std::vector<AnyModel> models;
    for (int i = 0; i < 20; ++i) {
        const NimModel n = random_nim_model(rng, 5, {"p", "q"});
        models.emplace_back(n);
        models.emplace_back(nim_to_mt1(n));
        models.emplace_back(random_mt2_model(rng, 5, 3, {"p", "q"}));
        models.emplace_back(nim_to_mt3(n));
    }
    for (const char* f : {"m1.json", "m2.json", "singleton.json", "m1.mt1.json", "two_spaces.mt2.json", "m1.mt3.json"}) {
        models.push_back(load_model_file(d(f)));
    }
    std::set<std::string> kinds;
    for (const auto& m : models) {
        const std::string text = save_model(m);
        const AnyModel back = load_model(text);
        if (!(back == m) || save_model(back) != text) {
            o.fail("round trip changed a " + kind_name(m) + " model");
        }
        kinds.insert(kind_name(m));
        ++round_trips;
    }
    if (kinds.size() != 4) o.fail("not every model kind was exercised");
    o.note(std::to_string(round_trips) + " round trips over nim, mt1, mt2, mt3");

    const auto tmp = std::filesystem::temp_directory_path() / "imtl_acceptance";
    std::filesystem::create_directories(tmp);
    const std::string out_file = (tmp / "out.json").string();

    const std::vector<CliCase> cases{
        {{"check", "--model", d("m1.json"), "--formula", "[]p"}, cli::kFails, "{1}; not satisfied"},
        {{"check", "--model", d("m1.json"), "--formula", "[]p -> p"}, cli::kHolds, "W; satisfied"},
        {{"check", "--model", d("malformed.json"), "--formula", "p"}, cli::kInputError, ""},
        {{"transform", "--model", d("m1.json"), "--target", "mt1", "--output", out_file}, cli::kHolds,
         "nim -> mt1: 2 worlds, 2 spaces"},
        {{"transform", "--model", d("two_spaces.mt2.json"), "--target", "nim", "--output", out_file}, cli::kHolds,
         "mt2 -> nim: 2 worlds"},
        {{"transform", "--model", d("m1.mt1.json"), "--target", "nim"}, cli::kInputError, ""},
        {{"equiv", "--model", d("m1.json"), "--model", d("m1.mt1.json"), "--depth", "3", "--vars", "p"}, cli::kHolds,
         "nim vs mt1: 786 formulas x 2 worlds, 0 mismatches"},
        {{"equiv", "--model", d("m1.json"), "--model", d("m1_wrong_d.mt1.json"), "--depth", "3", "--vars", "p"},
         cli::kFails, "nim vs mt1: 786 formulas x 2 worlds,"},
        {{"equiv", "--model", d("singleton.json"), "--model", d("m1.mt1.json")}, cli::kInputError, ""},
        {{"search", "--formula", "p | ~p", "--max-worlds", "2", "--output", out_file}, cli::kFails,
         "countermodel written to"},
        {{"search", "--formula", "[]p -> p", "--max-worlds", "3"}, cli::kHolds, "no countermodel up to 3"},
        {{"search", "--formula", "[](p & q) -> []p & []q", "--max-worlds", "3"}, cli::kHolds, "no countermodel up to 3"},
    };
    std::size_t ok = 0;
    for (const auto& c : cases) {
        std::ostringstream out, err;
        const int code = cli::run(c.args, out, err);
        std::string line = c.args[0];
        for (std::size_t i = 1; i < c.args.size(); ++i) {
            line += " " + (c.args[i].find('/') != std::string::npos
                               ? std::filesystem::path(c.args[i]).filename().string()
                               : c.args[i]);
        }
        const bool prefix_ok = out.str().rfind(c.expected_prefix, 0) == 0;
        if (code != c.expected || !prefix_ok) {
            o.fail("imtl " + line + ": exit " + std::to_string(code) + ", expected " + std::to_string(c.expected));
        } else {
            ++ok;
        }
        if (c.args[0] == "transform" && code == cli::kHolds) {
            if (!validate(load_model_file(out_file)).empty()) o.fail("imtl " + line + ": output does not validate");
        }
        if (c.args[0] == "search" && code == cli::kFails) {
            std::ostringstream o2, e2;
            if (cli::run({"check", "--model", out_file, "--formula", "p | ~p"}, o2, e2) != cli::kFails) {
                o.fail("countermodel file does not refute the formula under check");
            }
        }
    }
    std::filesystem::remove_all(tmp);
    o.note(std::to_string(ok) + " of " + std::to_string(cases.size()) + " CLI cases with the expected exit code");
    return o;
}

}  // namespace

int main() {
    Corpus corpus;
    corpus.formulas = enumerate_formulas({"p", "q"}, 3);
    Rng rng(4242);
    for (int i = 0; i < 200; ++i) corpus.models.push_back(random_nim_model(rng, 5, {"p", "q"}));

    struct Entry {
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries{
        {"frame conditions and mutants", frame_conditions},
        {"w-topologies and w_min-topologies are topologies", topology_closure},
        {"derived neighborhoods form NIM frames", derived_neighborhoods},
        {"pointwise equivalence of the three translations", [&] { return pointwise_equivalence(corpus); }},
        {"soundness sweep and classical countermodels", soundness},
        {"necessitation", necessitation},
        {"hereditary forcing", [&] { return hereditary(corpus); }},
        {"CLI round trips and exit codes", cli_goldens},
    };

    int failures = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        Outcome o;
        try {
            o = entries[i].run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << entries[i].title << "\n";
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
        std::cout.flush();
        failures += o.pass ? 0 : 1;
    }
    std::cout << (entries.size() - failures) << " of " << entries.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
