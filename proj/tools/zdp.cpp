// zdp: command-line front end for the poset / zero-divisor graph toolkit.
//
// Exit codes: 0 success, 1 violations found (suite, sg sweep) or an invalid
// semigroup table (sg check), 2 bad input.

#include "zdp/applications.hpp"
#include "zdp/classifiers.hpp"
#include "zdp/errors.hpp"
#include "zdp/graph.hpp"
#include "zdp/poset_json.hpp"
#include "zdp/semigroup.hpp"
#include "zdp/suite.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_violation = 1;
constexpr int exit_input = 2;

void write_text(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw zdp::ParseError("cannot write " + path);
    out << text;
}

// `--dot` with no value prints to stdout; with a path writes the file.
struct DotOption {
    std::string path;
    CLI::Option *opt = nullptr;

    void attach(CLI::App *app)
    {
        opt = app->add_option("--dot", path, "Write Graphviz DOT (to stdout when no path is given)")->expected(0, 1);
    }
    auto requested() const -> bool { return opt && opt->count() > 0; }
};

void print_graph(const zdp::Graph &g, const std::string &name, const DotOption &dot)
{
    if (dot.requested()) {
        write_text(dot.path, zdp::to_dot(g, name));
        return;
    }
    std::cout << name << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    for (auto [a, b] : g.edges())
        std::cout << "  " << g.label(a) << " -- " << g.label(b) << "\n";
    std::cout << "complemented " << (zdp::is_complemented(g) ? "true" : "false") << "\n";
    std::cout << "uniquely complemented " << (zdp::is_uniquely_complemented(g) ? "true" : "false") << "\n";
}

auto parse_factors(const std::string &text) -> std::vector<int>
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error &) {
            throw zdp::ParseError("bad factor list '" + text + "'");
        }
    }
    return out;
}

int run_sg_check(const std::string &path, bool as_json)
{
    const zdp::SemigroupTable t = zdp::load_semigroup_file(path);
    const auto diag = zdp::sg_validate(t);
    nlohmann::json j;
    j["valid"] = diag.valid();
    j["commutative"] = diag.commutative;
    j["associative"] = diag.associative;
    j["zero_absorbing"] = diag.zero_absorbing;
    j["messages"] = diag.messages;
    if (diag.valid()) {
        const bool reduced = zdp::sg_is_reduced(t);
        const zdp::Graph g = zdp::sg_graph(t);
        j["reduced"] = reduced;
        j["ac"] = zdp::sg_satisfies_ac(t);
        j["graph_vertices"] = g.labels();
        j["graph_complemented"] = zdp::is_complemented(g);
        j["graph_uniquely_complemented"] = zdp::is_uniquely_complemented(g);
        if (reduced) {
            try {
                const zdp::Poset p = zdp::lagrange_roy_poset(t);
                j["poset"] = zdp::poset_to_json(p);
                j["gamma_equals_graph"] = zdp::gamma(p) == g;
                j["zero_distributive"] = zdp::is_zero_distributive(p);
                j["report"] = zdp::report_to_json(zdp::classify(p));
            } catch (const zdp::NotMeetSemilatticeError &e) {
                j["poset_error"] = e.what();
            }
        }
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "poset" && it.key() != "report")
                std::cout << it.key() << ": " << it.value().dump() << "\n";
    }
    return diag.valid() ? 0 : exit_violation;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Posets, annihilators and complemented zero-divisor graphs"};
    app.require_subcommand(1);

    // classify
    auto *classify_cmd = app.add_subcommand("classify", "Evaluate S1-S9 and the class hypotheses for a poset");
    std::string classify_path;
    bool classify_json = false;
    classify_cmd->add_option("poset", classify_path, "Poset JSON file")->required();
    classify_cmd->add_flag("--json", classify_json, "Print the report as JSON");

    // suite
    auto *suite_cmd = app.add_subcommand("suite", "Check every property on all small posets");
    zdp::SuiteConfig cfg;
    std::string dedup = "canonical";
    std::vector<std::string> check_names;
    std::string suite_json;
    bool list_checks = false;
    suite_cmd->add_option("--max-n", cfg.max_n, "Largest poset size")->capture_default_str();
    suite_cmd->add_option("--dedup", dedup, "labeled | canonical")->capture_default_str();
    suite_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    suite_cmd->add_option("--checks", check_names, "Checks or groups to run (default all)")->delimiter(',');
    suite_cmd->add_option("--seed", cfg.seed, "Seed for sampled posets")->capture_default_str();
    suite_cmd->add_option("--samples", cfg.samples, "Number of sampled posets")->capture_default_str();
    suite_cmd->add_option("--sample-n", cfg.sample_n, "Size of sampled posets");
    suite_cmd->add_option("--ideal-lattice-max-n", cfg.ideal_lattice_max_n, "Largest n for the Id(P) check")
        ->capture_default_str();
    suite_cmd->add_flag("--adjoin-zero", cfg.adjoin_zero, "Adjoin a least element instead of skipping");
    suite_cmd->add_option("--json", suite_json, "Write the report JSON ('-' for stdout)");
    suite_cmd->add_flag("--list-checks", list_checks, "List check names and exit");

    // gen
    auto *gen_cmd = app.add_subcommand("gen", "Write a named or derived poset as JSON");
    gen_cmd->require_subcommand(1);
    std::string gen_out;
    int gen_k = 0;
    std::string gen_a;
    std::string gen_b;
    const auto gen_sub = [&](const std::string &name, const std::string &desc) {
        auto *sub = gen_cmd->add_subcommand(name, desc);
        sub->add_option("--out", gen_out, "Output path (stdout when omitted)");
        return sub;
    };
    auto *gen_chain = gen_sub("chain", "Chain with k elements");
    gen_chain->add_option("k", gen_k)->required()->check(CLI::Range(1, 64));
    auto *gen_boolean = gen_sub("boolean", "Boolean lattice on a k-element set");
    gen_boolean->add_option("k", gen_k)->required()->check(CLI::Range(0, 6));
    auto *gen_anti = gen_sub("antichain0", "k atoms over a least element");
    gen_anti->add_option("k", gen_k)->required()->check(CLI::Range(0, 63));
    auto *gen_m3 = gen_sub("m3", "The diamond M3");
    auto *gen_product = gen_sub("product", "Direct product of two posets");
    gen_product->add_option("first", gen_a)->required();
    gen_product->add_option("second", gen_b)->required();
    auto *gen_dual = gen_sub("dual", "Order dual");
    gen_dual->add_option("poset", gen_a)->required();
    auto *gen_adjoin = gen_sub("adjoin-zero", "Adjoin a new least element");
    gen_adjoin->add_option("poset", gen_a)->required();

    // graph
    auto *graph_cmd = app.add_subcommand("graph", "Graphs of posets");
    graph_cmd->require_subcommand(1);
    auto *graph_gamma = graph_cmd->add_subcommand("gamma", "Zero-divisor graph of a poset");
    std::string graph_path;
    graph_gamma->add_option("poset", graph_path)->required();
    DotOption graph_dot;
    graph_dot.attach(graph_gamma);

    // ring
    auto *ring_cmd = app.add_subcommand("ring", "Comaximal graphs of finite rings");
    ring_cmd->require_subcommand(1);
    auto *ring_cig = ring_cmd->add_subcommand("cig", "Comaximal ideal graph of an Artinian ring");
    std::string factors;
    ring_cig->add_option("--factors", factors, "Ideal chain lengths of the local factors, e.g. 2,1")->required();
    DotOption cig_dot;
    cig_dot.attach(ring_cig);
    auto *ring_cg = ring_cmd->add_subcommand("cg", "Comaximal graph of Z_n");
    int modulus = 0;
    ring_cg->add_option("--n", modulus, "Modulus")->required();
    DotOption cg_dot;
    cg_dot.attach(ring_cg);

    // vs
    auto *vs_cmd = app.add_subcommand("vs", "Vector space graphs");
    vs_cmd->require_subcommand(1);
    auto *vs_ug = vs_cmd->add_subcommand("ug", "Nonzero component union graph of F_q^dim");
    zdp::VectorSpaceSpec vs;
    vs_ug->add_option("--q", vs.q, "Prime field size")->required();
    vs_ug->add_option("--dim", vs.dim, "Dimension")->required();
    DotOption ug_dot;
    ug_dot.attach(vs_ug);

    // sg
    auto *sg_cmd = app.add_subcommand("sg", "Commutative semigroups with zero");
    sg_cmd->require_subcommand(1);
    auto *sg_check = sg_cmd->add_subcommand("check", "Validate a table and analyse its ordered poset");
    std::string sg_path;
    bool sg_json = false;
    sg_check->add_option("table", sg_path)->required();
    sg_check->add_flag("--json", sg_json, "Print JSON");
    auto *sg_sweep = sg_cmd->add_subcommand("sweep", "Check every reduced identity semigroup up to a size");
    int sweep_n = 4;
    sg_sweep->add_option("--max-n", sweep_n)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*classify_cmd) {
            const zdp::Poset p = zdp::load_poset_file(classify_path);
            const auto report = zdp::classify(p);
            if (classify_json)
                std::cout << zdp::report_to_json(report).dump(2) << "\n";
            else
                std::cout << zdp::format_report(report, p);
            return 0;
        }
        if (*suite_cmd) {
            if (list_checks) {
                for (const auto &info : zdp::check_catalog())
                    std::cout << info.name << "  " << info.description << "\n";
                return 0;
            }
            cfg.dedup = zdp::dedup_from_string(dedup);
            cfg.checks = zdp::checks_from_names(check_names);
            if (cfg.samples > 0 && cfg.sample_n == 0)
                cfg.sample_n = cfg.max_n + 1;
            const auto report = zdp::run_suite(cfg);
            if (suite_json != "-")
                std::cout << zdp::format_suite_report(report);
            if (!suite_json.empty())
                write_text(suite_json, zdp::suite_report_to_json(report).dump(2) + "\n");
            return report.violation_count == 0 ? 0 : exit_violation;
        }
        if (*gen_cmd) {
            zdp::Poset p;
            if (*gen_chain)
                p = zdp::chain(gen_k);
            else if (*gen_boolean)
                p = zdp::boolean_lattice(gen_k);
            else if (*gen_anti)
                p = zdp::antichain_with_zero(gen_k);
            else if (*gen_m3)
                p = zdp::m3();
            else if (*gen_product)
                p = zdp::direct_product(zdp::load_poset_file(gen_a), zdp::load_poset_file(gen_b));
            else if (*gen_dual)
                p = zdp::dual(zdp::load_poset_file(gen_a));
            else
                p = zdp::adjoin_zero(zdp::load_poset_file(gen_a));
            write_text(gen_out, zdp::serialize_poset(p) + "\n");
            return 0;
        }
        if (*graph_cmd) {
            const zdp::Poset p = zdp::load_poset_file(graph_path);
            print_graph(zdp::gamma(p), p.name().empty() ? "Gamma" : "Gamma(" + p.name() + ")", graph_dot);
            return 0;
        }
        if (*ring_cig) {
            print_graph(zdp::cig({parse_factors(factors)}), "CIG", cig_dot);
            return 0;
        }
        if (*ring_cg) {
            print_graph(zdp::cg_zn(modulus), "CG", cg_dot);
            return 0;
        }
        if (*vs_ug) {
            print_graph(zdp::ug_vector_space(vs), "UG", ug_dot);
            return 0;
        }
        if (*sg_check)
            return run_sg_check(sg_path, sg_json);
        if (*sg_sweep) {
            const auto rep = zdp::run_semigroup_sweep(sweep_n);
            std::cout << "tables " << rep.tables << ", reduced " << rep.reduced << ", with a.c. " << rep.with_ac
                      << ", violations " << rep.violations.size() << "\n";
            for (const auto &v : rep.violations)
                std::cout << "  " << v << "\n";
            return rep.violations.empty() ? 0 : exit_violation;
        }
    } catch (const zdp::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return 0;
}
