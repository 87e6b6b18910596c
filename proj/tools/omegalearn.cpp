#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "omega/charsample.hpp"
#include "omega/consistency.hpp"
#include "omega/error.hpp"
#include "omega/io.hpp"
#include "omega/oracle.hpp"
#include "omega/reductions.hpp"
#include "omega/sprout.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace omega;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Output {
    bool as_json = false;
    json doc;

    explicit Output(const std::string& command) { doc = {{"schema", "v1"}, {"command", command}}; }

    /// Plain text for humans; the JSON document collects the same facts.
    void text(const std::string& line) const {
        if (!as_json) std::cout << line << "\n";
    }
    void finish(int status) {
        if (as_json) {
            doc["exit"] = status;
            std::cout << doc.dump(2) << "\n";
        }
    }
};

Sample load_sample(const std::string& path, const std::optional<Alphabet>& expected = {}) {
    auto parsed = parse_sample(read_file(path));
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    if (expected && !(parsed.sample.alphabet == *expected))
        throw Error(ErrorKind::AlphabetMismatch, "sample alphabet differs from the automaton alphabet");
    return parsed.sample;
}

json words_json(const Alphabet& alphabet, const std::vector<OmegaWord>& words) {
    json out = json::array();
    for (const auto& w : words) out.push_back(format_omega_word(alphabet, w));
    return out;
}

int cmd_learn(Output& out, const std::string& type, const std::string& sample_path, const std::string& hoa_path,
              const std::string& dot_path, const std::string& trace_dir) {
    const Sample s = load_sample(sample_path);
    LearnerConfig cfg;
    cfg.type = parse_acceptance_type(type);
    cfg.trace = !trace_dir.empty();
    const LearnResult r = learn(s, cfg);
    const std::string hoa = emit_hoa(r.automaton);
    if (!hoa_path.empty()) write_file(hoa_path, hoa);
    if (!dot_path.empty()) write_file(dot_path, emit_dot(r.automaton.ts, {}, &r.automaton.condition));
    if (cfg.trace) {
        std::filesystem::create_directories(trace_dir);
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "step_%04zu.dot", i + 1);
            write_file((std::filesystem::path(trace_dir) / name).string(),
                       emit_dot(r.trace[i].ts, r.trace[i].inserted));
        }
        if (r.before_extend)
            write_file((std::filesystem::path(trace_dir) / "before_extend.dot").string(), emit_dot(*r.before_extend));
        write_file((std::filesystem::path(trace_dir) / "result.dot").string(),
                   emit_dot(r.automaton.ts, {}, &r.automaton.condition));
    }
    out.doc["type"] = std::string(to_string(cfg.type));
    out.doc["states"] = r.automaton.ts.num_states();
    out.doc["transitions"] = r.automaton.ts.num_transitions();
    out.doc["condition_size"] = condition_size(r.automaton.condition);
    out.doc["iterations"] = r.iterations;
    out.doc["threshold"] = r.threshold;
    out.doc["threshold_hit"] = r.threshold_hit;
    out.doc["hoa"] = hoa;
    if (hoa_path.empty() && !out.as_json) std::cout << hoa;
    if (r.threshold_hit) std::cerr << "note: threshold " << r.threshold << " reached; result built by extension\n";
    return kTrue;
}

int cmd_check(Output& out, const std::string& type_name, const std::string& hoa_path, const std::string& sample_path,
              std::optional<std::size_t> k) {
    const Automaton given = parse_hoa(read_file(hoa_path));
    const TransitionSystem& ts = given.ts;
    const Sample s = load_sample(sample_path, ts.alphabet());
    const AcceptanceType type = parse_acceptance_type(type_name);
    out.doc["type"] = std::string(to_string(type));

    const auto induced = induced_partial_condition(ts, s);
    if (const auto* conflict = std::get_if<ConflictReport>(&induced)) {
        const std::string kind =
            conflict->kind == ConflictReport::Kind::SharedInfinitySet ? "shared-infinity-set" : "indistinguishable";
        const std::string pos = format_omega_word(ts.alphabet(), conflict->positive);
        const std::string neg = format_omega_word(ts.alphabet(), conflict->negative);
        out.doc["consistent"] = false;
        out.doc["conflict"] = {{"kind", kind}, {"positive", pos}, {"negative", neg}};
        out.text("NOT CONSISTENT");
        out.text("conflict: " + kind + " positive " + pos + " negative " + neg);
        return kFalse;
    }
    const auto& h = std::get<PartialCondition>(induced);
    out.doc["h0"] = h.positive.size();
    out.doc["h1"] = h.negative.size();
    std::optional<AcceptanceCondition> found;
    if (k) {
        out.doc["k"] = *k;
        found = brute_force_consistency(ts, h, type, k);
    } else {
        found = solve(h, ts.defined_transitions(), type);
    }
    out.doc["consistent"] = found.has_value();
    if (!found) {
        out.text(k ? "NOT CONSISTENT at k=" + std::to_string(*k) : "NOT CONSISTENT");
        return kFalse;
    }
    const std::string hoa = emit_hoa(Automaton{ts, *found});
    out.doc["condition_size"] = condition_size(*found);
    out.doc["hoa"] = hoa;
    out.text("CONSISTENT");
    if (!out.as_json) std::cout << hoa;
    return kTrue;
}

int cmd_gensample(Output& out, const std::string& hoa_path, const std::string& kind) {
    const Automaton a = parse_hoa(read_file(hoa_path));
    Sample s;
    if (kind == "congruence")
        s = congruence_sample(a);
    else if (kind == "condition")
        s = condition_sample(a);
    else
        s = characteristic_sample(a);
    out.doc["kind"] = kind;
    out.doc["alphabet"] = s.alphabet.symbols();
    out.doc["positive"] = words_json(s.alphabet, s.positive);
    out.doc["negative"] = words_json(s.alphabet, s.negative);
    if (!out.as_json) std::cout << emit_sample(s);
    return kTrue;
}

int cmd_member(Output& out, const std::string& hoa_path, const std::string& word) {
    const Automaton a = parse_hoa(read_file(hoa_path));
    const OmegaWord w = parse_omega_word(a.ts.alphabet(), word);
    const bool accepted = accepts(a, w);
    out.doc["word"] = format_omega_word(a.ts.alphabet(), w);
    out.doc["accepted"] = accepted;
    out.text(accepted ? "accept" : "reject");
    return accepted ? kTrue : kFalse;
}

int cmd_equiv(Output& out, const std::string& path1, const std::string& path2, bool fast_parity) {
    const Automaton a1 = parse_hoa(read_file(path1));
    const Automaton a2 = parse_hoa(read_file(path2));
    const auto witness = fast_parity ? parity_equiv_fast(a1, a2) : equivalence(a1, a2);
    out.doc["equivalent"] = !witness.has_value();
    if (!witness) {
        out.text("EQUIVALENT");
        return kTrue;
    }
    const std::string w = format_omega_word(a1.ts.alphabet(), *witness);
    const bool first = accepts(a1, *witness);
    out.doc["counterexample"] = w;
    out.doc["accepted_by"] = first ? "first" : "second";
    out.text("COUNTEREXAMPLE " + w);
    out.text(std::string("accepted by the ") + (first ? "first" : "second") + " automaton only");
    return kFalse;
}

int cmd_reduce(Output& out, const std::string& graph_path, const std::string& target, const std::string& prefix) {
    const DiGraph g = parse_graph(read_file(graph_path));
    const ReductionInstance inst =
        target == "genbuchi" ? coloring_to_genbuchi_instance(g) : coloring_to_rabin_instance(g);
    // The HOA file carries the transition system; its condition is a placeholder.
    const Automaton carrier{inst.ts, BuchiCondition{inst.ts.empty_set()}};
    const std::string hoa_file = prefix + ".hoa";
    const std::string sample_file = prefix + ".sample";
    write_file(hoa_file, emit_hoa(carrier, "star transition system"));
    write_file(sample_file, emit_sample(inst.sample));
    out.doc["target"] = target;
    out.doc["vertices"] = g.n;
    out.doc["edges"] = g.edges.size();
    out.doc["hoa"] = hoa_file;
    out.doc["sample"] = sample_file;
    out.text("wrote " + hoa_file);
    out.text("wrote " + sample_file);
    return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Passive learning of deterministic omega-automata from ultimately periodic samples"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output (schema v1)");

    const std::vector<std::string> types{"buchi", "genbuchi", "parity", "rabin"};

    std::string type, sample_path, hoa_path, hoa2_path, dot_path, trace_dir, kind = "full", word, graph_path, target,
                                                                             prefix = "reduction";
    std::optional<std::size_t> k;
    bool fast_parity = false;

    auto* learn_cmd = app.add_subcommand("learn", "Run the learner on a sample");
    learn_cmd->add_option("--type", type, "Acceptance type")->required()->check(CLI::IsMember(types));
    learn_cmd->add_option("--sample", sample_path, "Sample file")->required();
    learn_cmd->add_option("--hoa", hoa_path, "Write the automaton here instead of stdout");
    learn_cmd->add_option("--dot", dot_path, "Write a DOT rendering");
    learn_cmd->add_option("--trace", trace_dir, "Write one DOT file per iteration into this directory");

    auto* check_cmd = app.add_subcommand("check", "Decide consistency of a transition system with a sample");
    check_cmd->add_option("--type", type, "Acceptance type")->required()->check(CLI::IsMember(types));
    check_cmd->add_option("--hoa", hoa_path, "Transition system (HOA; its condition is ignored)")->required();
    check_cmd->add_option("--sample", sample_path, "Sample file")->required();
    check_cmd->add_option("--k", k, "Bound the condition size (exhaustive search)");

    auto* gen_cmd = app.add_subcommand("gensample", "Characteristic sample of an automaton");
    gen_cmd->add_option("--hoa", hoa_path, "Automaton")->required();
    gen_cmd->add_option("--kind", kind, "Which part")->check(CLI::IsMember({"congruence", "condition", "full"}));

    auto* member_cmd = app.add_subcommand("member", "Membership of an ultimately periodic word");
    member_cmd->add_option("--hoa", hoa_path, "Automaton")->required();
    member_cmd->add_option("--word", word, "Word u(v)")->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "Language equivalence of two automata");
    equiv_cmd->add_option("--hoa", hoa_path, "First automaton")->required();
    equiv_cmd->add_option("--hoa2", hoa2_path, "Second automaton")->required();
    equiv_cmd->add_flag("--fast-parity", fast_parity, "Use the parity-specific product search");

    auto* reduce_cmd = app.add_subcommand("reduce", "Graph 3-coloring to a consistency instance");
    reduce_cmd->add_option("--graph", graph_path, "Graph file")->required();
    reduce_cmd->add_option("--target", target, "Condition type")->required()->check(CLI::IsMember({"genbuchi", "rabin"}));
    reduce_cmd->add_option("--out", prefix, "Output prefix for <prefix>.hoa and <prefix>.sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        if (as_json) {
            json doc{{"schema", "v1"}, {"error", {{"kind", "usage"}, {"message", e.what()}}}, {"exit", kError}};
            std::cout << doc.dump(2) << "\n";
            return kError;
        }
        app.exit(e);
        return kError;
    }

    CLI::App* sub = app.get_subcommands().front();
    Output out(sub->get_name());
    out.as_json = as_json;
    int status = kError;
    try {
        if (sub == learn_cmd)
            status = cmd_learn(out, type, sample_path, hoa_path, dot_path, trace_dir);
        else if (sub == check_cmd)
            status = cmd_check(out, type, hoa_path, sample_path, k);
        else if (sub == gen_cmd)
            status = cmd_gensample(out, hoa_path, kind);
        else if (sub == member_cmd)
            status = cmd_member(out, hoa_path, word);
        else if (sub == equiv_cmd)
            status = cmd_equiv(out, hoa_path, hoa2_path, fast_parity);
        else
            status = cmd_reduce(out, graph_path, target, prefix);
    } catch (const Error& e) {
        out.doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        if (!as_json) std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        status = kError;
    } catch (const std::exception& e) {
        out.doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
        if (!as_json) std::cerr << "error: " << e.what() << "\n";
        status = kError;
    }
    out.finish(status);
    return status;
}
