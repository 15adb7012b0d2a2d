// Command-line front end: model ingestion, point/grid scans,
// theorem-verification suites, degeneration analysis, and machine-readable
// reports (JSON + CSV).

#include <iostream>

#include <CLI11.hpp>

#include "cym/report/runner.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Weil-Petersson / Hodge geometry laboratory for period data"};
    app.require_subcommand(1);

    cym::RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_model) {
        if (needs_model)
            sub->add_option("--model", cfg.model,
                            "model JSON file or preset:<name>")
                ->required();
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--tol", cfg.tol, "tolerance override where applicable");
        sub->add_option("--seed", cfg.seed, "seed for direction sampling");
        sub->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    };

    auto* validate = app.add_subcommand("validate", "check model axioms at points");
    add_common(validate, true);
    validate->add_option("--points", cfg.points_file, "JSON file with points");
    validate->add_option("--grid", cfg.grid_spec, "grid spec re0:re1:nre,im0:im1:nim per modulus");

    auto* report = app.add_subcommand("report", "full geometry report at points");
    add_common(report, true);
    report->add_option("--points", cfg.points_file, "JSON file with points");
    report->add_option("--grid", cfg.grid_spec, "grid spec");

    auto* scan = app.add_subcommand("scan", "CSV summary over a grid");
    add_common(scan, true);
    scan->add_option("--points", cfg.points_file, "JSON file with points");
    scan->add_option("--grid", cfg.grid_spec, "grid spec");

    auto* verify = app.add_subcommand("verify", "run the invariant suite, exit 1 on failure");
    add_common(verify, true);
    verify->add_option("--points", cfg.points_file, "JSON file with points");
    verify->add_option("--grid", cfg.grid_spec, "grid spec");
    verify->add_option("--theta", cfg.theta, "degeneration ray angle");
    verify->add_flag("--extended", cfg.extended_precision,
                     "extended-precision degeneration scans");

    auto* degen = app.add_subcommand("degenerate", "degeneration scan toward z=0");
    add_common(degen, true);
    degen->add_option("--theta", cfg.theta, "ray angle in (-pi, pi)");
    degen->add_option("--radii", cfg.radii, "explicit radius ladder");
    degen->add_flag("--extended", cfg.extended_precision,
                    "extended-precision scan core");

    auto* presets = app.add_subcommand("presets", "write bundled preset model files");
    add_common(presets, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cym::RunResult res = cym::run(cfg);
    for (const std::string& line : res.lines)
        std::cout << line << "\n";
    return res.exit_code;
}
