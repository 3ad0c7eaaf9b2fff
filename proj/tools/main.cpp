#include "barq/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int load_algebra(const std::string& catalog_name, const std::string& input_path, barq::DgAlgebra& out,
                 std::string& err) {
    if (!catalog_name.empty() && !input_path.empty()) {
        err = "give either --catalog or --input, not both";
        return 2;
    }
    if (!catalog_name.empty()) {
        auto e = barq::catalog_find(catalog_name);
        if (!e) {
            err = "unknown catalog entry: " + catalog_name;
            return 2;
        }
        out = e->algebra;
        return 0;
    }
    if (!input_path.empty()) {
        std::ifstream f(input_path);
        if (!f) {
            err = "cannot open " + input_path;
            return 2;
        }
        std::stringstream ss;
        ss << f.rdbuf();
        try {
            out = barq::dg_algebra_from_json(ss.str());
        } catch (const std::exception& ex) {
            err = std::string("bad input: ") + ex.what();
            return 2;
        }
        if (!barq::check_dg_algebra(out).all_pass()) {
            err = "input is not a dg algebra (run `verify algebra` for the witness)";
            return 2;
        }
        return 0;
    }
    err = "need --catalog <name> or --input <path.json>";
    return 2;
}

void emit(const barq::Report& r, const std::map<std::string, std::string>& header, const std::string& out_path) {
    std::string json = barq::report_to_json(r, header);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << json;
    } else {
        std::cout << json;
    }
    // human summary on stdout
    int passed = 0;
    for (auto& c : r.checks)
        if (c.pass) ++passed;
    std::cerr << (r.all_pass() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size() << " checks)\n";
    for (auto& c : r.checks)
        if (!c.pass) std::cerr << "  fail: " << c.name << (c.witness.empty() ? "" : "  at " + c.witness) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for graded Leinster monoids and their bar calculus"};
    app.require_subcommand(1);

    std::string catalog_name, input_path, out_path, negative_control, complex_name = "cobar-bar";
    barq::RunConfig cfg;
    int ln_index = 1;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--catalog", catalog_name, "catalog algebra name");
        cmd->add_option("--input", input_path, "dg algebra JSON path");
        cmd->add_option("--max-weight", cfg.max_weight, "truncation weight N (<= 7)");
        cmd->add_option("--out", out_path, "write the JSON report here");
        cmd->add_option("--jobs", cfg.jobs, "parallelism hint");
    };

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", cfg.suite, "suite name or 'all'")->required();
    add_source(verify);
    verify->add_option("--max-arity", cfg.max_arity, "A-infinity arity bound (<= 5)");
    verify->add_option("--max-length", cfg.max_length, "tensor length bound (<= 4)");
    verify->add_option("--negative-control", cfg.negative_control, "e.g. standard-signs");

    auto* homology = app.add_subcommand("homology", "print a homology table");
    add_source(homology);
    homology->add_option("--complex", complex_name, "algebra|bar|cobar-bar|ln");
    homology->add_option("--ln-index", ln_index, "stratum for --complex ln");

    auto* cat = app.add_subcommand("catalog", "list catalog algebras");
    auto* schema = app.add_subcommand("schema", "print the JSON input schemas");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) {
            for (auto& e : barq::catalog()) {
                std::cout << e.name << ": " << e.doc << "  H = {";
                bool first = true;
                for (auto& [d, h] : e.expected_homology) {
                    if (h == 0) continue;
                    std::cout << (first ? "" : ", ") << d << ": " << h;
                    first = false;
                }
                std::cout << "}\n";
            }
            return 0;
        }
        if (schema->parsed()) {
            std::cout << "dg algebra input:\n" << barq::dg_algebra_schema();
            std::cout << "hand-built monoid input:\n" << barq::monoid_schema();
            return 0;
        }

        std::string err;
        if (!barq::validate_config(cfg, err) && verify->parsed()) {
            std::cerr << "error: " << err << "\n";
            return 2;
        }
        barq::DgAlgebra a;
        if (int rc = load_algebra(catalog_name, input_path, a, err); rc != 0) {
            std::cerr << "error: " << err << "\n";
            return rc;
        }

        if (homology->parsed()) {
            if (cfg.max_weight < 1 || cfg.max_weight > barq::kMaxWeightCap) {
                std::cerr << "error: max-weight must be in 1.." << barq::kMaxWeightCap << "\n";
                return 2;
            }
            barq::Report r;
            auto& c = r.add("homology_" + complex_name);
            try {
                c.table = barq::homology_table(a, complex_name, cfg.max_weight, ln_index);
            } catch (const std::invalid_argument& ex) {
                std::cerr << "error: " << ex.what() << "\n";
                return 2;
            }
            emit(r, {{"command", "homology"}, {"complex", complex_name}, {"algebra", a.name}}, out_path);
            return 0;
        }

        // verify
        barq::Report r = barq::run(a, cfg);
        emit(r,
             {{"command", "verify"},
              {"suite", cfg.suite},
              {"algebra", a.name},
              {"max_weight", std::to_string(cfg.max_weight)},
              {"negative_control", cfg.negative_control}},
             out_path);
        return r.all_pass() ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
