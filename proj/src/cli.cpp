#include "spg/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "spg/construct.hpp"
#include "spg/engine.hpp"
#include "spg/gametree.hpp"
#include "spg/io.hpp"

namespace spg {

namespace {

struct RunConfig {
    std::string command;
    std::string action;
    std::string complex_path;
    std::string labeling_path;
    std::string board_spec = "empty";
    std::string ruleset_spec;
    std::string out_path;
    std::string out_dir;
    std::string format = "text";
    std::string kind = "both";
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    double time_cap = 600;
    std::size_t max_basic = 24;
    std::size_t max_gamma = 3;
    bool dry_run = false;
    bool illegal = false;
    bool skip_verify = false;
};

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 3;
    }
    return 1;
}

std::string set_string(const std::vector<std::string>& names)
{
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i ? "," : "") + names[i];
    }
    return out + "}";
}

class Runner {
public:
    Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    int run()
    {
        const std::string key = cfg_.command + " " + cfg_.action;
        static const std::map<std::string, int (Runner::*)()> table = {
            {"complex info", &Runner::complex_info},
            {"complex nonfaces", &Runner::complex_nonfaces},
            {"complex dual", &Runner::complex_dual},
            {"complex flag", &Runner::complex_flag},
            {"game complex", &Runner::game_complex},
            {"game tree", &Runner::game_tree},
            {"game outcome", &Runner::game_outcome},
            {"game value", &Runner::game_value},
            {"construct prop210", &Runner::construct},
            {"construct illegal", &Runner::construct},
            {"construct legal", &Runner::construct},
            {"construct invariant", &Runner::construct},
            {"construct independence", &Runner::construct},
            {"verify roundtrip", &Runner::verify_roundtrip_cmd},
            {"verify legal", &Runner::verify_roundtrip_cmd},
            {"verify illegal", &Runner::verify_roundtrip_cmd},
            {"verify both", &Runner::verify_roundtrip_cmd},
            {"verify condition-iv", &Runner::verify_condition},
            {"verify invariance", &Runner::verify_invariance},
        };
        return (this->*table.at(key))();
    }

private:
    EngineOptions engine_options() const
    {
        EngineOptions o;
        o.max_basic_positions = cfg_.max_basic;
        o.embedding.time_cap_seconds = cfg_.time_cap;
        return o;
    }

    VerifyBudget verify_budget() const
    {
        VerifyBudget b;
        b.max_basic_positions = cfg_.max_basic;
        b.max_gamma_vertices = cfg_.max_gamma;
        b.time_cap_seconds = cfg_.time_cap;
        return b;
    }

    LabeledComplex complex() const
    {
        if (cfg_.complex_path.empty()) {
            throw Error("--complex is required");
        }
        return load_complex(cfg_.complex_path);
    }

    bool dry(const std::string& what)
    {
        if (cfg_.dry_run) {
            out_ << "dry run: " << what << " valid\n";
        }
        return cfg_.dry_run;
    }

    void emit(const std::string& text, const std::string& default_name = "")
    {
        if (!cfg_.out_path.empty()) {
            write_text_file(cfg_.out_path, text);
            out_ << "wrote " << cfg_.out_path << "\n";
        } else if (!cfg_.out_dir.empty() && !default_name.empty()) {
            const auto path = std::filesystem::path(cfg_.out_dir) / default_name;
            write_text_file(path, text);
            out_ << "wrote " << path.string() << "\n";
        } else {
            out_ << text;
        }
    }

    // Legal complex from --complex, or from --ruleset/--board.
    LabeledComplex game_legal_complex()
    {
        if (!cfg_.complex_path.empty()) {
            return complex();
        }
        if (cfg_.ruleset_spec.empty()) {
            throw Error("give --complex or --ruleset with --board");
        }
        return legal_complex(resolve_ruleset(cfg_.ruleset_spec), resolve_board(cfg_.board_spec), engine_options());
    }

    int complex_info()
    {
        const auto c = complex();
        if (dry("complex")) return 0;
        if (cfg_.format == "json") {
            json j = complex_to_json(c);
            j["dimension"] = dimension(c);
            j["pure"] = is_pure(c);
            j["flag"] = is_flag(c);
            j["isolated_vertex"] = has_isolated_vertex(c);
            j["faces"] = c.is_void() ? 0 : faces(c).size();
            emit(dump(j), "info.json");
            return 0;
        }
        std::ostringstream s;
        s << "vertices:";
        for (const auto& v : c.vertices()) {
            s << ' ' << v.name << '(' << to_char(v.part) << ')';
        }
        s << "\nfacets: " << to_string(c) << "\n";
        s << "dimension: " << dimension(c) << "\n";
        s << "pure: " << (is_pure(c) ? "yes" : "no") << "\n";
        s << "flag: " << (is_flag(c) ? "yes" : "no") << "\n";
        s << "isolated vertex: " << (has_isolated_vertex(c) ? "yes" : "no") << "\n";
        s << "faces: " << (c.is_void() ? 0 : faces(c).size()) << "\n";
        emit(s.str(), "info.txt");
        return 0;
    }

    int complex_nonfaces()
    {
        const auto c = complex();
        if (dry("complex")) return 0;
        const auto nf = minimal_nonfaces(c);
        if (cfg_.format == "json") {
            json j = json::array();
            for (VertexMask m : nf) j.push_back(c.names(m));
            emit(dump(j), "nonfaces.json");
            return 0;
        }
        std::string s;
        for (VertexMask m : nf) s += set_string(c.names(m)) + "\n";
        emit(s.empty() ? "none\n" : s, "nonfaces.txt");
        return 0;
    }

    int complex_dual()
    {
        const auto c = complex();
        if (dry("complex")) return 0;
        const auto fi = facet_ideal(c);
        const auto sr = sr_ideal(c);
        const auto alexander = facet_complex(sr);
        if (cfg_.format == "json") {
            emit(dump({{"facet_ideal", ideal_to_json(fi)},
                       {"stanley_reisner_ideal", ideal_to_json(sr)},
                       {"nonface_complex", complex_to_json(alexander)}}),
                 "dual.json");
            return 0;
        }
        emit("facet ideal: " + to_string(fi) + "\nstanley-reisner ideal: " + to_string(sr) +
                 "\nnon-face complex: " + to_string(alexander) + "\n",
             "dual.txt");
        return 0;
    }

    int complex_flag()
    {
        const auto c = complex();
        if (dry("complex")) return 0;
        emit(std::string("flag: ") + (is_flag(c) ? "yes" : "no") + "\n", "flag.txt");
        return 0;
    }

    int game_complex()
    {
        const auto game = resolve_ruleset(cfg_.ruleset_spec);
        const auto board = resolve_board(cfg_.board_spec);
        if (dry("ruleset and board")) return 0;
        const auto a = analyze(game, board, engine_options());
        const auto ideal = cfg_.illegal ? a.illegal_ideal() : a.legal_ideal();
        const auto cx = cfg_.illegal ? a.illegal_complex() : a.legal_complex();
        out_ << "basic positions:";
        for (const auto& e : a.index.entries()) {
            out_ << ' ' << e.variable << '=' << to_string(e.placement);
        }
        out_ << "\n" << (cfg_.illegal ? "illegal" : "legal") << " ideal: " << to_string(ideal) << "\n";
        out_ << (cfg_.illegal ? "illegal" : "legal") << " complex: " << to_string(cx) << "\n";
        if (!cfg_.out_path.empty() || !cfg_.out_dir.empty() || cfg_.format == "json") {
            json j = ideal_to_json(ideal);
            emit(dump(j), cfg_.illegal ? "illegal_ideal.json" : "legal_ideal.json");
        }
        return 0;
    }

    int game_tree()
    {
        const auto c = game_legal_complex();
        if (dry("inputs")) return 0;
        const auto tree = build_tree(c);
        if (cfg_.format == "dot") {
            emit(to_dot(tree), "tree.dot");
            return 0;
        }
        out_ << "legal complex: " << to_string(c) << "\n";
        out_ << "tree nodes: " << tree.size() << "\n";
        return 0;
    }

    int game_outcome()
    {
        const auto c = game_legal_complex();
        if (dry("inputs")) return 0;
        emit("outcome: " + to_string(outcome(c)) + "\n", "outcome.txt");
        return 0;
    }

    int game_value()
    {
        const auto c = game_legal_complex();
        if (dry("inputs")) return 0;
        const auto v = canonical_value(c);
        emit("value: " + to_string(v) + "\noutcome: " + to_string(outcome_of(v)) + "\n", "value.txt");
        return 0;
    }

    int construct()
    {
        std::vector<Realization> rs;
        if (cfg_.action == "invariant" || cfg_.action == "independence") {
            const auto game = resolve_ruleset(cfg_.ruleset_spec);
            const auto board = resolve_board(cfg_.board_spec);
            if (dry("ruleset and board")) return 0;
            rs.push_back(cfg_.action == "invariant" ? to_invariant(game, board, engine_options())
                                                    : to_independence(game, board, engine_options()));
        } else {
            const auto c = complex();
            std::optional<EdgeLabeling> labeling;
            if (!cfg_.labeling_path.empty()) {
                labeling = load_labeling(cfg_.labeling_path);
                labeling->validate(c);
            }
            if (dry("complex")) return 0;
            if (cfg_.action == "prop210") {
                auto [g1, g2] = realize_both(c);
                rs.push_back(std::move(g1));
                rs.push_back(std::move(g2));
            } else if (cfg_.action == "illegal") {
                rs.push_back(labeling ? realize_illegal(c, *labeling) : realize_illegal(c));
            } else {
                rs.push_back(realize_legal(c));
            }
        }
        Verdict overall = Verdict::Pass;
        std::string report;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const auto& r = rs[i];
            const std::string suffix = rs.size() > 1 ? "_" + std::to_string(i + 1) : "";
            out_ << r.provenance << ": board " << r.board.num_vertices() << " vertices, " << r.board.num_edges()
                 << " edges; target " << to_string(r.kind) << " complex " << to_string(r.target) << "\n";
            if (!cfg_.out_dir.empty()) {
                const std::filesystem::path dir(cfg_.out_dir);
                write_text_file(dir / ("board" + suffix + ".json"), dump(board_to_json(r.board)));
                write_text_file(dir / ("ruleset" + suffix + ".json"), dump(r.game.descriptor));
            }
            if (cfg_.skip_verify) {
                continue;
            }
            const auto rep = check_realization(r, verify_budget());
            report += rep.log + "verdict: " + to_string(rep.verdict) + "\n";
            if (rep.verdict == Verdict::Fail || overall == Verdict::Fail) {
                overall = Verdict::Fail;
            } else if (rep.verdict == Verdict::Inconclusive) {
                overall = Verdict::Inconclusive;
            }
        }
        if (cfg_.skip_verify) {
            return 0;
        }
        out_ << report;
        if (!cfg_.out_dir.empty()) {
            write_text_file(std::filesystem::path(cfg_.out_dir) / "report.txt", report);
        }
        out_ << to_string(overall) << "\n";
        return exit_code(overall);
    }

    int verify_roundtrip_cmd()
    {
        const std::string kind = cfg_.action == "roundtrip" ? cfg_.kind : cfg_.action;
        const auto k = round_trip_kind_from_string(kind);
        const auto c = complex();
        if (dry("complex")) return 0;
        const auto rep = verify_roundtrip(k, c, verify_budget());
        out_ << rep.log << to_string(rep.verdict) << "\n";
        if (!cfg_.out_path.empty() || !cfg_.out_dir.empty()) {
            emit(rep.log + "verdict: " + to_string(rep.verdict) + "\n", "report.txt");
        }
        return exit_code(rep.verdict);
    }

    int verify_condition()
    {
        const auto game = resolve_ruleset(cfg_.ruleset_spec);
        const auto board = resolve_board(cfg_.board_spec);
        if (dry("ruleset and board")) return 0;
        const auto rep = check_condition_iv(game, board, engine_options());
        out_ << "positions checked: " << rep.positions_checked << "\n";
        if (!rep.witness.empty()) {
            out_ << "witness: " << rep.witness << "\n";
        }
        out_ << to_string(rep.verdict) << "\n";
        return exit_code(rep.verdict);
    }

    int verify_invariance()
    {
        const auto game = resolve_ruleset(cfg_.ruleset_spec);
        const auto board = resolve_board(cfg_.board_spec);
        if (dry("ruleset and board")) return 0;
        const auto rep = check_invariance(game, board, cfg_.samples, cfg_.seed, engine_options());
        out_ << "basic positions legal: " << (rep.all_basic_legal ? "yes" : "no");
        if (!rep.illegal_basic.empty()) {
            out_ << " (illegal:";
            for (const auto& n : rep.illegal_basic) out_ << ' ' << n;
            out_ << ")";
        }
        out_ << "\nsamples checked: " << rep.samples_checked << "\n";
        if (!rep.counterexample.empty()) {
            out_ << "counterexample: " << rep.counterexample << "\n";
        }
        out_ << to_string(rep.verdict) << "\n";
        return exit_code(rep.verdict);
    }

    const RunConfig& cfg_;
    std::ostream& out_;
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Strong placement games: complexes, ideals, game trees and realizations", "spg"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--dry-run", cfg.dry_run, "Validate inputs without computing");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--out", cfg.out_path, "Output file");
        sub->add_option("--out-dir", cfg.out_dir, "Output directory");
        sub->add_option("--time-cap", cfg.time_cap, "Embedding time cap in seconds (0 = none)");
        sub->add_option("--max-basic", cfg.max_basic, "Cap on basic positions for complex extraction");
    };
    auto game_inputs = [&](CLI::App* sub) {
        sub->add_option("--ruleset", cfg.ruleset_spec,
                        "snort | col | nogo | domineering | free | table-legal:<f> | table-illegal:<f> | gamma:<f>[:<labeling>]");
        sub->add_option("--board", cfg.board_spec, "path:n | cycle:n | grid:RxC | grid-cells:[(r,c),...] | union:(a,b) | file:<json>");
    };

    std::vector<std::pair<CLI::App*, std::pair<std::string, std::string>>> leaves;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* sub = parent->add_subcommand(name, help);
        common(sub);
        leaves.push_back({sub, {parent->get_name(), name}});
        return sub;
    };

    CLI::App* complex_cmd = app.add_subcommand("complex", "Simplicial complex operations")->require_subcommand(1);
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"info", "Vertices, facets, dimension, purity, flagness"},
             {"nonfaces", "Minimal non-faces"},
             {"dual", "Facet and Stanley-Reisner ideals"},
             {"flag", "Whether the complex is flag"}}) {
        leaf(complex_cmd, name, help)->add_option("--complex", cfg.complex_path, "Complex JSON file")->required();
    }

    CLI::App* game_cmd = app.add_subcommand("game", "Game complexes, trees, outcomes and values")->require_subcommand(1);
    {
        auto* c = leaf(game_cmd, "complex", "Legal or illegal complex and ideal of a game on a board");
        game_inputs(c);
        c->get_option("--ruleset")->required();
        c->add_flag("--legal", [&](std::int64_t) { cfg.illegal = false; }, "Legal ideal (default)");
        c->add_flag("--illegal", cfg.illegal, "Illegal ideal");
        for (const std::string name : {"tree", "outcome", "value"}) {
            auto* s = leaf(game_cmd, name, "Game " + name + " from a ruleset and board, or from a legal complex");
            game_inputs(s);
            s->add_option("--complex", cfg.complex_path, "Legal complex JSON file");
        }
    }

    CLI::App* construct_cmd = app.add_subcommand("construct", "Realize complexes as game complexes")->require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> constructions{
        {"prop210", "Cycle table games realizing a complex as legal and as illegal complex"},
        {"illegal", "Gamma-game and gamma-board realizing an illegal complex"},
        {"legal", "Invariant game realizing a legal complex"},
        {"invariant", "Invariant game with the legal complex of --ruleset on --board"},
        {"independence", "Game with a graph as illegal complex and the legal complex of --ruleset on --board"}};
    for (const auto& [name, help] : constructions) {
        auto* s = leaf(construct_cmd, name, help);
        s->add_option("--complex", cfg.complex_path, "Complex JSON file");
        s->add_option("--labeling", cfg.labeling_path, "Edge labelling JSON file");
        s->add_option("--max-gamma", cfg.max_gamma, "Largest gamma-construction to verify");
        s->add_flag("--no-verify", cfg.skip_verify, "Skip the engine round trip");
        game_inputs(s);
    }

    CLI::App* verify_cmd = app.add_subcommand("verify", "Verifiers")->require_subcommand(1);
    {
        auto* rt = leaf(verify_cmd, "roundtrip", "Construction round trip");
        rt->add_option("--kind", cfg.kind, "legal | illegal | both")->check(CLI::IsMember({"legal", "illegal", "both"}));
        for (const std::string name : {"legal", "illegal", "both"}) {
            auto* s = leaf(verify_cmd, name, "Round trip of kind " + name);
            s->add_option("--complex", cfg.complex_path, "Complex JSON file")->required();
            s->add_option("--max-gamma", cfg.max_gamma, "Largest gamma-construction to verify");
        }
        rt->add_option("--complex", cfg.complex_path, "Complex JSON file")->required();
        rt->add_option("--max-gamma", cfg.max_gamma, "Largest gamma-construction to verify");
        auto* civ = leaf(verify_cmd, "condition-iv", "Downward closure of the legality predicate");
        game_inputs(civ);
        civ->get_option("--ruleset")->required();
        auto* inv = leaf(verify_cmd, "invariance", "Invariance checks");
        game_inputs(inv);
        inv->get_option("--ruleset")->required();
        inv->add_option("--samples", cfg.samples, "Sampled sub-board checks");
        inv->add_option("--seed", cfg.seed, "Sampling seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    for (const auto& [sub, names] : leaves) {
        if (sub->parsed()) {
            cfg.command = names.first;
            cfg.action = names.second;
        }
    }
    try {
        return Runner(cfg, out).run();
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        out << "INCONCLUSIVE\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace spg
