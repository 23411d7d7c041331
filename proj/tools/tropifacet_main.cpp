#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropifacet/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tropifacet::ValidationError("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw tropifacet::ValidationError("cannot write output file '" + out_path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tropifacet;

    CLI::App app{"tropifacet: tropical polytopes, series lifts and facet tropicalization"};
    app.require_subcommand(1);

    std::string instance_path, out_path, lift_kind = "canonical";
    std::uint64_t seed = 0;
    bool seed_given = false;
    long long budget_candidates = 0;
    CommandOptions opts;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("instance", instance_path, "instance JSON file")->required();
        sub->add_option("--out", out_path, "write output to this path instead of stdout");
        sub->add_option("--budget", budget_candidates,
                        "pseudovertex enumeration candidate cap");
        sub->add_flag("--timing", opts.timing, "add elapsed_ms fields to reports");
        sub->add_option("--seed", seed, "perturbation seed")->each([&](const std::string&) {
            seed_given = true;
        });
    };

    auto* analyze = app.add_subcommand(
        "analyze", "extreme points, purity, pseudovertices, canonical representation");
    add_common(analyze);

    auto* lift = app.add_subcommand("lift", "lift construction and facet tropicalization");
    add_common(lift);
    lift->add_option("--lift", lift_kind, "canonical|perturbed|custom")
        ->check(CLI::IsMember({"canonical", "perturbed", "custom"}));
    lift->add_flag("--facets,!--no-facets", opts.facets, "enumerate facets (default on)");

    auto* verify = app.add_subcommand("verify", "run the commuting-diagram pipeline");
    add_common(verify);

    auto* svg = app.add_subcommand("svg", "draw the cell decomposition of a 3-dimensional instance");
    add_common(svg);
    svg->add_flag("--halfspaces", opts.halfspaces, "overlay canonical half-space boundaries");

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget_candidates > 0) opts.budget.max_candidates = budget_candidates;
        if (seed_given) opts.seed = seed;
        const InstanceFile inst = parse_instance(read_file(instance_path));

        if (analyze->parsed()) {
            write_output(cmd_analyze(inst, opts), out_path);
        } else if (lift->parsed()) {
            opts.lift_kind = parse_lift_kind(lift_kind);
            write_output(cmd_lift(inst, opts), out_path);
        } else if (verify->parsed()) {
            const VerifyResult result = cmd_verify(inst, opts);
            write_output(result.report, out_path);
            return result.exit_code;
        } else if (svg->parsed()) {
            write_output(cmd_svg(inst, opts), out_path);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "tropifacet: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
