#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "uniseq/actions.hpp"
#include "uniseq/closure.hpp"
#include "uniseq/conditions.hpp"
#include "uniseq/equations.hpp"
#include "uniseq/errors.hpp"
#include "uniseq/sequence.hpp"
#include "uniseq/witness.hpp"

namespace uniseq::cli {

namespace {

enum class Format { json, text };

struct RunConfig {
    std::string command;
    std::string input;
    std::string builtin;
    std::int64_t bound = 8;
    bool bound_given = false;
    std::uint64_t seed = 0;
    std::size_t samples = 50;
    Format format = Format::json;
    std::size_t max_set_size = 4;
    unsigned threads = 1;
    std::vector<std::string> words;
    std::vector<std::string> targets;
};

struct Report {
    Json body;
    std::vector<std::string> text;
    int code = holds;
};

const std::map<std::string, SequenceFamily (*)()> builtins = {
    {"banach", families::banach},
    {"sierpinski", families::sierpinski},
    {"aba-ab-bab", families::aba_ab_bab},
    {"ab-power", families::ab_power},
};

SequenceFamily load_family(const RunConfig& cfg)
{
    if (!cfg.builtin.empty())
        return builtins.at(cfg.builtin)();
    if (cfg.input.empty())
        throw InvalidArgument("a family file or --builtin is required");
    return parse_family_file(cfg.input);
}

// Explicit lists default to their own length when --bound is not given.
std::int64_t bound_for(const RunConfig& cfg, const SequenceFamily& family)
{
    if (!cfg.bound_given && family.is_explicit())
        return static_cast<std::int64_t>(family.templates().size());
    return cfg.bound;
}

std::vector<Word> instantiate(const SequenceFamily& family, std::int64_t bound)
{
    if (bound < 2)
        throw InvalidArgument("--bound must be at least 2");
    return family.first(bound);
}

Json word_list(const std::set<Word>& words)
{
    Json out = Json::array();
    for (const auto& w : words)
        out.push_back(w.str());
    return out;
}

std::string joined(const std::set<Word>& words)
{
    std::string out = "{";
    for (const auto& w : words)
        out += (out.size() > 1 ? ", " : "") + display(w);
    return out + "}";
}

Json violations_json(const std::vector<Violation>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs) {
        Json witness = Json::array();
        for (const auto& w : v.witness)
            witness.push_back(w.str());
        out.push_back({{"condition", v.condition}, {"indices", v.indices}, {"witness", witness}});
    }
    return out;
}

void describe(const Verdict& v, std::vector<std::string>& text)
{
    text.push_back(std::string("verdict: ") + (v.holds() ? "holds" : "fails") + " for n <= "
                   + std::to_string(v.bound));
    for (const auto& [label, list] : {std::pair{"violation", &v.violations}, std::pair{"warning", &v.warnings}}) {
        for (const auto& x : *list) {
            std::string line = std::string(label) + ": " + x.condition;
            for (auto i : x.indices)
                line += " " + std::to_string(i);
            for (const auto& w : x.witness)
                line += " " + display(w);
            text.push_back(line);
        }
    }
}

Json closure_json(const ClosureResult& c)
{
    Json rounds = Json::array();
    for (const auto& r : c.rounds)
        rounds.push_back({{"repeated", word_list(r.repeated)}, {"overlaps", word_list(r.overlaps)}});
    return {{"generators", word_list(c.generators.generators())},
            {"iterations", c.rounds.size()},
            {"pool_size", c.pool.size()},
            {"rounds", rounds}};
}

Report do_closure(const RunConfig& cfg)
{
    const auto family = load_family(cfg);
    const auto bound = bound_for(cfg, family);
    const auto words = instantiate(family, bound);
    const auto c = closure(words);
    Report r;
    r.body = {{"command", "closure"}, {"bound", bound}, {"result", closure_json(c)}};
    r.text.push_back("generators: " + joined(c.generators.generators()));
    r.text.push_back("iterations: " + std::to_string(c.rounds.size()));
    r.text.push_back("pool size: " + std::to_string(c.pool.size()));
    for (std::size_t i = 0; i < c.rounds.size(); ++i)
        r.text.push_back("round " + std::to_string(i) + ": repeated " + joined(c.rounds[i].repeated) + ", overlaps "
                         + joined(c.rounds[i].overlaps));
    return r;
}

Report do_check_theorem(const RunConfig& cfg)
{
    const auto family = load_family(cfg);
    const auto bound = bound_for(cfg, family);
    const auto analysis = check_theorem(instantiate(family, bound));
    const auto sandwich = check_sandwich(analysis.closure.generators, analysis.words);

    Json decompositions = Json::array();
    for (const auto& d : analysis.decompositions)
        decompositions.push_back(d ? to_json(*d) : Json(nullptr));
    Report r;
    r.body = {{"command", "check-thm"},
              {"bound", bound},
              {"verdict", analysis.verdict.holds() ? "holds" : "fails"},
              {"violations", violations_json(analysis.verdict.violations)},
              {"warnings", violations_json(analysis.verdict.warnings)},
              {"generators", word_list(analysis.closure.generators.generators())},
              {"decompositions", decompositions},
              {"sandwich", to_json(sandwich)}};
    r.code = analysis.verdict.holds() ? holds : fails;
    describe(analysis.verdict, r.text);
    r.text.push_back("generators: " + joined(analysis.closure.generators.generators()));
    for (const auto& d : analysis.decompositions)
        if (d)
            r.text.push_back("w_" + std::to_string(d->index) + " = " + display(d->prefix) + " . " + display(d->middle)
                             + " . " + display(d->suffix));
    r.text.push_back(std::string("sandwich: ") + (sandwich.holds() ? "holds" : sandwich.applicable ? "fails"
                                                                                                  : "not applicable"));
    return r;
}

Report do_check_corollary(const RunConfig& cfg)
{
    const auto family = load_family(cfg);
    const auto bound = bound_for(cfg, family);
    const auto words = instantiate(family, bound);
    const auto verdict = check_corollary(words);
    const auto c = closure(words);
    Report r;
    r.body = {{"command", "check-cor"},
              {"bound", bound},
              {"verdict", verdict.holds() ? "holds" : "fails"},
              {"violations", violations_json(verdict.violations)},
              {"generators", word_list(c.generators.generators())}};
    r.code = verdict.holds() ? holds : fails;
    describe(verdict, r.text);
    r.text.push_back("generators: " + joined(c.generators.generators()));
    return r;
}

Report do_decompose(const RunConfig& cfg)
{
    const auto family = load_family(cfg);
    const auto bound = bound_for(cfg, family);
    const auto words = instantiate(family, bound);
    const auto c = closure(words);
    Json decompositions = Json::array();
    std::vector<Violation> violations;
    Report r;
    for (std::size_t n = 0; n < words.size(); ++n) {
        const auto index = static_cast<std::int64_t>(n + 1);
        if (auto cut = find_split(words[n], c.generators)) {
            violations.push_back({"split", {index}, {cut->left, cut->middle, cut->right}});
            decompositions.push_back(nullptr);
            r.text.push_back("w_" + std::to_string(index) + " = " + display(words[n]) + " lies across "
                             + display(cut->left) + " . " + display(cut->middle) + " . " + display(cut->right));
            continue;
        }
        const auto d = decompose(words[n], c.generators, index);
        decompositions.push_back(to_json(d));
        r.text.push_back("w_" + std::to_string(index) + " = " + display(d.prefix) + " . " + display(d.middle) + " . "
                         + display(d.suffix));
    }
    r.body = {{"command", "decompose"},
              {"bound", bound},
              {"verdict", violations.empty() ? "holds" : "fails"},
              {"violations", violations_json(violations)},
              {"generators", word_list(c.generators.generators())},
              {"decompositions", decompositions}};
    r.code = violations.empty() ? holds : fails;
    return r;
}

Report do_witness(const RunConfig& cfg)
{
    const auto family = load_family(cfg);
    const auto bound = bound_for(cfg, family);
    (void)instantiate(family, bound);
    std::vector<TargetFunction> targets;
    for (std::int64_t n = 1; n <= bound; ++n)
        targets.push_back(TargetFunction::seeded(cfg.seed, n));
    const auto samples = sample_states(cfg.seed, cfg.samples);

    Report r;
    r.body = {{"command", "witness"}, {"bound", bound}, {"seed", cfg.seed}};
    try {
        const auto report = verify_witness(family, bound, std::move(targets), samples);
        r.body["verdict"] = "holds";
        r.body["witness"] = to_json(report);
        r.text.push_back("verdict: holds for n <= " + std::to_string(bound));
        r.text.push_back("target checks: " + std::to_string(report.target.passed) + " exact");
    } catch (const HypothesisNotVerified& e) {
        r.body["verdict"] = "fails";
        r.body["violations"] = Json::array({{{"condition", "hypothesis"}, {"message", e.what()}}});
        r.text.push_back("verdict: fails; " + std::string(e.what()));
        r.code = fails;
    } catch (const VerificationFailure& e) {
        r.body["verdict"] = "fails";
        r.body["witness"] = to_json(e.report());
        const auto& f = *e.report().first_failure;
        r.text.push_back("verdict: fails; first failure: " + f.check + " check at index " + std::to_string(f.index)
                         + " on " + display(f.word));
        r.text.push_back("live states: " + std::to_string(e.report().live_states));
        r.code = fails;
    }
    return r;
}

Report do_solve(const RunConfig& cfg)
{
    if (cfg.words.empty() || cfg.words.size() != cfg.targets.size())
        throw InvalidArgument("solve needs matching --word and --target pairs");
    std::vector<Word> words;
    std::vector<FiniteMap> targets;
    for (const auto& w : cfg.words)
        words.emplace_back(w);
    for (const auto& t : cfg.targets)
        targets.push_back(FiniteMap::parse(t));

    const auto found = solve(words, targets, {cfg.max_set_size, cfg.threads});
    Json equations = Json::array();
    for (std::size_t i = 0; i < words.size(); ++i)
        equations.push_back({{"word", words[i].str()}, {"target", to_json(targets[i])}});
    Report r;
    r.body = {{"command", "solve"}, {"equations", equations}, {"result", found ? "sat" : "unsat"}};
    if (found) {
        r.body["witness"] = {{"a", to_json(found->a)}, {"b", to_json(found->b)}};
        r.text.push_back("sat: a = " + to_json(found->a).dump() + ", b = " + to_json(found->b).dump());
    } else {
        r.text.push_back("unsat");
        r.code = fails;
    }
    return r;
}

PointSet point_set(const Json& j, const std::string& field)
{
    if (!j.is_array())
        throw ParseError(field + ": expected an array of integers");
    PointSet out;
    for (const auto& p : j) {
        if (!p.is_number_integer())
            throw ParseError(field + ": expected an array of integers");
        out.insert(p.get<Point>());
    }
    return out;
}

Json point_json(const PointSet& s)
{
    return Json(std::vector<Point>(s.begin(), s.end()));
}

Report do_blocks(const RunConfig& cfg)
{
    if (cfg.input.empty())
        throw InvalidArgument("blocks needs an action file");
    std::ifstream in(cfg.input);
    if (!in)
        throw ParseError(cfg.input + ": cannot open file");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error&) {
        throw ParseError(cfg.input + ": malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("ground") || !doc.contains("generators") || !doc["generators"].is_array())
        throw ParseError(cfg.input + ": expected {\"ground\": [...], \"generators\": [...]}");
    const auto ground = point_set(doc["ground"], "$.ground");
    std::vector<PartialPerm> gens;
    for (const auto& g : doc["generators"])
        gens.push_back(partial_perm_from_json(g));

    const auto parts = blocks(gens, ground);
    // Group the blocks into ~-classes, each led by its least block.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes)
            if (block_equivalent(parts[cls.front()], parts[i], gens)) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed)
            classes.push_back({i});
    }

    Report r;
    Json blocks_json = Json::array();
    for (const auto& b : parts)
        blocks_json.push_back(point_json(b));
    Json classes_json = Json::array();
    for (const auto& cls : classes)
        classes_json.push_back(cls);
    r.body = {{"command", "blocks"}, {"result", {{"blocks", blocks_json}, {"classes", classes_json}}}};
    for (std::size_t i = 0; i < parts.size(); ++i)
        r.text.push_back("block " + std::to_string(i) + ": " + point_json(parts[i]).dump());
    for (const auto& cls : classes)
        r.text.push_back("class: " + Json(cls).dump());

    if (doc.contains("lift")) {
        const auto& l = doc["lift"];
        if (!l.is_object() || !l.contains("block") || !l.contains("labels"))
            throw ParseError("$.lift: expected {\"block\": [...], \"labels\": [...]}");
        const auto lifted = lift(gens, ground, point_set(l["block"], "$.lift.block"),
                                 point_set(l["labels"], "$.lift.labels"));
        Json lifted_gens = Json::array();
        Json deficiency = Json::array();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            lifted_gens.push_back(to_json(lifted.generators[k]));
            deficiency.push_back({{"base", domain_deficiency(gens[k], ground)},
                                  {"lifted", domain_deficiency(lifted.generators[k], lifted.ground)}});
        }
        Json copies = Json::array();
        for (const auto& [id, copy] : lifted.copy_of)
            copies.push_back({{"point", id}, {"label", copy.first}, {"of", copy.second}});
        r.body["result"]["lift"] = {{"ground", point_json(lifted.ground)},
                                    {"generators", lifted_gens},
                                    {"copies", copies},
                                    {"deficiency", deficiency}};
        r.text.push_back("lift ground: " + point_json(lifted.ground).dump());
        for (std::size_t k = 0; k < gens.size(); ++k)
            r.text.push_back("lifted generator " + std::to_string(k) + ": " + to_json(lifted.generators[k]).dump());
    }
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Universal sequence toolkit over {a, b}", "uniseq"};
    app.require_subcommand(1);

    std::string format = "json";
    const auto family_command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("family", cfg.input, "Family JSON file");
        sub->add_option("--builtin", cfg.builtin, "Built-in family instead of a file")
            ->check(CLI::IsMember({"banach", "sierpinski", "aba-ab-bab", "ab-power"}));
        sub->add_option("--bound,-N", cfg.bound, "Check indices 1..N (N >= 2)");
        return sub;
    };
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.fallthrough();

    family_command("closure", "Compute the submonoid closure of w_1..w_N");
    family_command("check-thm", "Check the split/decomposition hypotheses up to N");
    family_command("check-cor", "Check the prefix/suffix-overlap-free condition up to N");
    family_command("decompose", "Decompose w_1..w_N into prefix, middle and suffix");
    auto* witness = family_command("witness", "Run the witness construction on sampled states");
    witness->add_option("--seed", cfg.seed, "Seed for targets and samples");
    witness->add_option("--samples", cfg.samples, "Sampled states per index")->check(CLI::PositiveNumber);

    auto* solve_cmd = app.add_subcommand("solve", "Find a, b with (w_i) = t_i in the full transformation monoid");
    solve_cmd->add_option("--word", cfg.words, "Equation word (repeatable)")->required();
    solve_cmd->add_option("--target", cfg.targets, "Target images, e.g. 1,0 (repeatable)")->required();
    solve_cmd->add_option("--max-set-size", cfg.max_set_size, "Largest set size to search");
    solve_cmd->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* blocks_cmd = app.add_subcommand("blocks", "Blocks, block equivalence and lifts of a partial-perm action");
    blocks_cmd->add_option("action", cfg.input, "Action JSON file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return holds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
        if (auto* opt = sub->get_option_no_throw("--bound"); opt != nullptr)
            cfg.bound_given = opt->count() > 0;
    }
    cfg.format = format == "text" ? Format::text : Format::json;

    Report report;
    try {
        if (cfg.command == "closure")
            report = do_closure(cfg);
        else if (cfg.command == "check-thm")
            report = do_check_theorem(cfg);
        else if (cfg.command == "check-cor")
            report = do_check_corollary(cfg);
        else if (cfg.command == "decompose")
            report = do_decompose(cfg);
        else if (cfg.command == "witness")
            report = do_witness(cfg);
        else if (cfg.command == "solve")
            report = do_solve(cfg);
        else
            report = do_blocks(cfg);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    if (cfg.format == Format::json) {
        out << report.body.dump(2) << "\n";
    } else {
        for (const auto& line : report.text)
            out << line << "\n";
    }
    return report.code;
}

} // namespace uniseq::cli
