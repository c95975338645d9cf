#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "totreal/cohomology6.hpp"
#include "totreal/constructions.hpp"
#include "totreal/decisions.hpp"
#include "totreal/errors.hpp"
#include "totreal/parser.hpp"
#include "totreal/report.hpp"

namespace {

using namespace totreal;

int run(int argc, char** argv) {
    CLI::App app{"totally real immersion/embedding calculator"};
    app.require_subcommand(1);

    bool json_out = false, trace = false;
    app.add_flag("--json", json_out, "emit the JSON report");
    app.add_flag("--trace", trace, "include rule traces in the report");

    std::string expr;
    auto* inv_cmd = app.add_subcommand("invariants", "compute invariants of a descriptor");
    inv_cmd->add_option("expr", expr, "descriptor expression")->required();

    auto* dec_cmd = app.add_subcommand("decide", "immersion/embedding verdicts with citations");
    dec_cmd->add_option("expr", expr, "descriptor expression")->required();

    std::string presentation;
    int dim = 0;
    bool embedding = false;
    auto* real_cmd = app.add_subcommand("realize", "realize a finitely presented group");
    real_cmd->add_option("--presentation", presentation, "e.g. 'a,b|abAB' (uppercase = inverse)")
        ->required();
    real_cmd->add_option("--dim", dim, "ambient real dimension N")->required();
    real_cmd->add_flag("--embedding", embedding, "normalize so the embedding criteria hold");

    auto* table_cmd = app.add_subcommand("table1-selfcheck",
                                         "recompute the 5-manifold building-block table");

    std::string ring_file;
    auto* chern_cmd =
        app.add_subcommand("chern6", "p1-vanishing test from a ring/Chern JSON document");
    chern_cmd->add_option("file", ring_file, "JSON document ('-' for stdin)")->required();

    auto* rules_cmd = app.add_subcommand("rules", "dump the rule catalog as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage errors are invalid input (exit 1); --help stays exit 0.
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (inv_cmd->parsed() || dec_cmd->parsed()) {
        ManifoldPtr d = parse_descriptor(expr);
        Report r = dec_cmd->parsed() ? make_decide_report(expr, d)
                                     : make_invariants_report(expr, d);
        if (json_out)
            std::cout << report_to_json(r, trace).dump(2) << "\n";
        else
            std::cout << report_to_text(r, trace);
        return 0;
    }

    if (real_cmd->parsed()) {
        GroupPresentation p = parse_presentation(presentation);
        auto [m, cert] = embedding ? normalize_for_embedding(p, dim) : realize_group(p, dim);
        Report r = make_decide_report("realize " + presentation + " in dim " +
                                          std::to_string(dim),
                                      m);
        r.certificate = &cert;
        if (cert.second_branch && !cert.chosen_branch)
            r.warnings.push_back(
                "H2 of the realization is not computable; both semi-characteristic branches "
                "are reported");
        if (json_out) {
            nlohmann::json j = report_to_json(r, trace);
            j["descriptor"] = print_descriptor(m);
            if (cert.second_branch)
                j["second_branch"] = print_descriptor(*cert.second_branch);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << report_to_text(r, trace);
            std::cout << "descriptor: " << print_descriptor(m) << "\n";
            if (cert.second_branch)
                std::cout << "second branch: " << print_descriptor(*cert.second_branch) << "\n";
        }
        return 0;
    }

    if (table_cmd->parsed()) {
        auto rows = table1_selfcheck();
        int ok = 0;
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& row : rows) {
            if (row.passed) ++ok;
            if (json_out)
                jrows.push_back({{"row", row.name}, {"passed", row.passed}, {"detail", row.detail}});
            else
                std::cout << (row.passed ? "ok   " : "FAIL ") << row.name
                          << (row.detail.empty() ? "" : "  " + row.detail) << "\n";
        }
        if (json_out)
            std::cout << nlohmann::json{{"rows", jrows}, {"verified", ok}, {"total", rows.size()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << ok << "/" << rows.size() << " rows verified\n";
        return ok == static_cast<int>(rows.size()) ? 0 : 1;
    }

    if (chern_cmd->parsed()) {
        std::string text;
        if (ring_file == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream in(ring_file);
            if (!in) throw ValidationError("cannot open '" + ring_file + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        auto [ring, chern] = ring_chern_from_json(text);
        auto cc = complexified_chern(chern, ring);
        TriState p1 = p1_is_zero(chern, ring);
        nlohmann::json j = {{"c1_complexified", cc.c1},
                            {"c2_complexified", cc.c2},
                            {"c3_complexified", cc.c3},
                            {"p1_zero", to_string(p1)},
                            {"h3_has_2torsion", ring.h3_has_2torsion}};
        if (json_out)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << "p1 = 0: " << to_string(p1) << "\n";
        return 0;
    }

    if (rules_cmd->parsed()) {
        std::cout << rule_catalog_json() << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const totreal::EngineFault& e) {
        std::cerr << "internal rule inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const totreal::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
