#include <iostream>

#include "CLI11.hpp"
#include "skelcat/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"skelcat: checks and solvers for skeletal tensor-category "
                 "and Morita-context data"};
    app.require_subcommand(1);

    skelcat::CliOptions opt;
    std::string suites_csv;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("path", opt.path, "instance JSON file")->required();
        cmd->add_option("--tol-abs", opt.tol.abs_eps, "absolute tolerance");
        cmd->add_option("--tol-rel", opt.tol.rel_eps, "relative tolerance");
        cmd->add_option("--emit", opt.emit, "report format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", opt.out, "write the report to a file");
        cmd->add_option("--jobs", opt.jobs, "parallel workers")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--lenient", opt.lenient,
                      "warn on unknown schema fields instead of rejecting");
    };

    CLI::App* check = app.add_subcommand("check", "run verification suites");
    add_common(check);
    check->add_option("--suites", suites_csv,
                      "comma-separated suite names (default: all applicable)");
    check->add_option("--tier", opt.tier,
                      "tier filter: auto|dimension|structure")
        ->check(CLI::IsMember({"auto", "dimension", "structure"}));
    check->add_option("--seed", opt.seed,
                      "seed for the randomized relabeling suite");

    CLI::App* solve = app.add_subcommand("solve", "solve for structures");
    add_common(solve);
    solve->add_option("--target", opt.target,
                      "what to solve for: pivotal|module-pivotal")
        ->check(CLI::IsMember({"pivotal", "module-pivotal"}));

    CLI11_PARSE(app, argc, argv);

    if (!suites_csv.empty()) {
        std::string cur;
        for (char c : suites_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) opt.suites.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }

    if (check->parsed()) return skelcat::cmd_check(opt, std::cerr);
    return skelcat::cmd_solve(opt, std::cerr);
}
