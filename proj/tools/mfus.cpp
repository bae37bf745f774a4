#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mfus/error.hpp"
#include "mfus/parallel.hpp"
#include "mfus/report.hpp"

using namespace mfus;

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with multi-fusion categories, their modules and centers"};
    app.require_subcommand(1);
    app.fallthrough();
    int workers = 0;
    std::string json_out;
    RunOptions opt;
    app.add_option("--workers", workers, "Worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);
    app.add_option("--json-out", json_out, "Also write the report to this file");
    app.add_flag("--oracle", opt.oracle, "Cross-check centers against the brute-force induction route");
    app.add_option("--max-rank", opt.max_rank, "Bound on enumerations")->check(CLI::PositiveNumber);

    std::string file, algebra, ref_a, ref_b, over;
    auto* check = app.add_subcommand("check", "Validate a fusion data file");
    check->add_option("file", file)->required()->check(CLI::ExistingFile);
    auto* center = app.add_subcommand("center", "Drinfeld center with braiding and twists");
    center->add_option("file", file)->required()->check(CLI::ExistingFile);
    auto* dual = app.add_subcommand("dual", "Dual category of the module category of an algebra");
    dual->add_option("file", file)->required()->check(CLI::ExistingFile);
    dual->add_option("--algebra", algebra, "Algebra declared in the file")->required();
    auto* tensor = app.add_subcommand("tensor", "Relative product LMod_A (x)_C RMod_B");
    tensor->add_option("left", ref_a, "Algebra A, as NAME or FILE#NAME")->required();
    tensor->add_option("right", ref_b, "Algebra B, as NAME or FILE#NAME")->required();
    tensor->add_option("--over", over, "Fusion data file of C")->required()->check(CLI::ExistingFile);
    auto* zfun = app.add_subcommand("zfun", "Center of a bimodule category with its central structure");
    zfun->add_option("bimodule", ref_a, "FILE#NAME in a bimodule declaration file")->required();
    auto* verify = app.add_subcommand("verify", "Run a suite file");
    verify->add_option("suite", file)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    set_workers(workers);

    json report;
    try {
        if (*check) report = check_report(file);
        else if (*center) report = center_report(file, opt);
        else if (*dual) report = dual_report(file, algebra);
        else if (*tensor) report = tensor_report(ref_a, ref_b, over);
        else if (*zfun) report = zfun_report(ref_a);
        else report = run_suite(file, opt);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        report = json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}, {"verdict", "fail"}};
    }
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!json_out.empty()) {
        std::ofstream f(json_out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << json_out << "\n";
            return 1;
        }
        f << text;
    }
    return exit_code(report);
}
