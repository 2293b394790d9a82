#include <CLI11.hpp>

#include "e8fold/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"e8fold: exact E8 root system, golden-ratio folding, and quaternion polytopes"};
    app.require_subcommand(1);

    e8fold::RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out,-o", cfg.out, "output file (default: stdout)");
        sub->add_option("--format,-f", cfg.format, "json | csv | svg | off");
        sub->add_option("--threads", cfg.threads, "worker threads for edge detection (0 = auto)");
    };

    CLI::App* gen = app.add_subcommand("generate", "emit a Weyl orbit or named construction");
    gen->add_option("--group,-g", cfg.group, "group name (A3,B3,H3,A4,D4,F4,H4,D6,E8)");
    gen->add_option("--orbit", cfg.orbit, "named orbit (421,241,142) or ringed-node bits");
    gen->add_option("--construction,-c", cfg.construction,
                    "T,Tp,S,Sp,I,Ip,A,Ap,J,Jp,F4,dual-snub");
    gen->add_flag("--edges", cfg.with_edges, "attach the minimal-distance edge graph");
    add_common(gen);

    CLI::App* fold = app.add_subcommand("fold", "fold the E8 roots and emit the left/right table");
    fold->add_flag("--table", cfg.text_table, "also print a human-readable table");
    add_common(fold);

    CLI::App* verify = app.add_subcommand("verify", "run the exact verification suite");
    verify->add_flag("--isomorphism", cfg.isomorphism,
                     "full folding isomorphism pipeline (default behaviour)");
    verify->add_flag("--table", cfg.text_table, "also print the per-root table");
    add_common(verify);

    CLI::App* project = app.add_subcommand("project", "2D Petrie or 3D Platonic projection");
    project->add_option("--input,-i", cfg.input, "orbit (421,241,142) or construction name")
        ->required();
    project->add_flag_callback("--petrie", [&] { cfg.projection = "petrie"; },
                               "Petrie / Van Oss basis (default)");
    project->add_flag_callback("--platonic", [&] { cfg.projection = "platonic"; },
                               "3D coordinate-slice projection with norm shells");
    project->add_option("--cull-fraction", cfg.cull_fraction,
                        "fraction of innermost edges dropped from SVG output");
    project->add_flag("--edges", cfg.with_edges, "compute and draw edges");
    project->add_option("--tolerance", cfg.tolerance, "float shell-grouping tolerance");
    add_common(project);

    CLI::App* exp = app.add_subcommand("export", "re-emit a vertex dump canonically");
    exp->add_option("--in", cfg.input, "input JSON vertex dump")->required();
    add_common(exp);

    CLI::App* tables = app.add_subcommand("tables", "octonion multiplication tables");
    tables->add_option("--table", cfg.table, "default | footnote | all");
    tables->add_option("--triads", cfg.triads, "seven oriented triads, e.g. 123,145,167,...");
    add_common(tables);

    CLI11_PARSE(app, argc, argv);

    for (CLI::App* sub : {gen, fold, verify, project, exp, tables})
        if (sub->parsed()) cfg.command = sub->get_name();

    try {
        return e8fold::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "e8fold: " << e.what() << "\n";
        return 1;
    }
}
