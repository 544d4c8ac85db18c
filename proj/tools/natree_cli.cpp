#include "natree/counterexample.hpp"
#include "natree/textio.hpp"
#include "natree/tree.hpp"
#include "natree/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace natree;

int emit_report(const Report& r, const std::string& format) {
    if (format == "json")
        std::cout << report_to_json(r);
    else
        std::cout << report_to_text(r);
    return r.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Puiseux-series arithmetic, the hyperbolic plane over it, and its quotient tree"};
    app.require_subcommand(1);

    std::string z1_text, z2_text, p1_text, p2_text, p3_text, a_text;
    std::string format = "text";
    std::string window_text = "32";
    unsigned max_n = 32;
    unsigned samples = 0;
    std::uint64_t seed = 0;

    CLI::App* dist = app.add_subcommand("dist", "distances in the plane or the tree");
    dist->require_subcommand(1);
    CLI::App* dist_hp = dist->add_subcommand("hp", "pseudo-distance between plane points");
    dist_hp->add_option("--z1", z1_text, "first point \"x;y\"")->required();
    dist_hp->add_option("--z2", z2_text, "second point \"x;y\"")->required();
    CLI::App* dist_tree = dist->add_subcommand("tree", "distance between tree points");
    dist_tree->add_option("--p1", p1_text, "first tree point \"u;t\"")->required();
    dist_tree->add_option("--p2", p2_text, "second tree point \"u;t\"")->required();

    CLI::App* project_cmd = app.add_subcommand("project", "canonical tree point of a plane point");
    project_cmd->add_option("--z", z1_text, "point \"x;y\"")->required();

    CLI::App* median_cmd = app.add_subcommand("median", "median of three tree points");
    median_cmd->add_option("--p1", p1_text, "tree point \"u;t\"")->required();
    median_cmd->add_option("--p2", p2_text, "tree point \"u;t\"")->required();
    median_cmd->add_option("--p3", p3_text, "tree point \"u;t\"")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string which;
    verify_cmd
        ->add_option("which", which, "cauchy | branching | vertical | obstruction | axioms | crossratio | all")
        ->required()
        ->check(CLI::IsMember(
            {"cauchy", "branching", "vertical", "obstruction", "axioms", "crossratio", "all"}));
    verify_cmd->add_option("--max-n", max_n, "sequence depth (default 32)");
    verify_cmd->add_option("--a", a_text, "series for the obstruction search");
    verify_cmd->add_option("--samples", samples, "sample count (0 = per-suite default)");
    verify_cmd->add_option("--seed", seed, "sampler seed (default 0)");
    verify_cmd->add_option("--window", window_text, "relative truncation window (default 32)");
    verify_cmd->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dist_hp->parsed()) {
            std::cout << to_string(hp_distance(parse_point(z1_text), parse_point(z2_text))) << "\n";
            return 0;
        }
        if (dist_tree->parsed()) {
            std::cout << to_string(tree_distance(parse_tree_point(p1_text), parse_tree_point(p2_text)))
                      << "\n";
            return 0;
        }
        if (project_cmd->parsed()) {
            std::cout << format_tree_point(project(parse_point(z1_text))) << "\n";
            return 0;
        }
        if (median_cmd->parsed()) {
            std::cout << format_tree_point(median(parse_tree_point(p1_text), parse_tree_point(p2_text),
                                                  parse_tree_point(p3_text)))
                      << "\n";
            return 0;
        }

        VerifyParams params;
        params.max_n = max_n;
        params.samples = samples;
        params.seed = seed;
        params.window = parse_rational(window_text);

        if (which == "cauchy") return emit_report(verify_cauchy(params.max_n), format);
        if (which == "vertical") return emit_report(verify_vertical_default(params), format);
        if (which == "branching")
            return emit_report(
                verify_branching(params.max_n, params.samples_or(params.probes_below), params.seed),
                format);
        if (which == "obstruction") {
            if (a_text.empty())
                return emit_report(verify_obstruction_corpus(params.max_n, params.seed), format);
            return emit_report(obstruction_witness(parse_series(a_text), params.max_n), format);
        }
        if (which == "axioms") return emit_report(verify_axioms(params), format);
        if (which == "crossratio") return emit_report(verify_cross_ratio_oracle(params), format);
        return emit_report(merge_reports(verify_all(params), params), format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
