// Experiment driver for the proportionate adaptive filter library: runs
// declarative experiment specs, regenerates the named figure presets, and
// prints complexity tables and threshold-crossing speedups.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "paf/complexity.hpp"
#include "paf/emit.hpp"
#include "paf/experiment.hpp"

namespace fs = std::filesystem;

namespace {

void emit_result(const std::vector<paf::LearningCurve>& curves,
                 const std::vector<std::string>& notes, const std::string& outdir,
                 const std::string& name) {
    fs::create_directories(outdir);
    const std::string base = (fs::path(outdir) / name).string();
    if (!curves.empty()) {
        paf::write_curves_csv(curves, base + ".csv");
        paf::write_curves_svg(curves, base + ".svg", name);
        std::cout << "wrote " << base << ".csv, " << base << ".svg\n";
    }
    if (!notes.empty()) {
        std::string text;
        for (const auto& n : notes) text += n + "\n";
        paf::write_text_file(text, base + "_notes.txt");
        for (const auto& n : notes) std::cout << n << "\n";
    }
    for (const auto& c : curves) {
        std::printf("  %-28s steady %8.2f dB%s%s\n", c.label.c_str(), paf::steady_state_db(c),
                    c.diverged ? "  DIVERGED at " : "",
                    c.diverged ? std::to_string(c.diverged_at).c_str() : "");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proportionate adaptive filter experiments"};
    app.require_subcommand(1);

    // run
    std::string spec_path, run_out = "out";
    long run_seed = -1;
    int run_trials = -1, run_threads = -1;
    double run_enr = std::numeric_limits<double>::quiet_NaN();
    std::string run_system, run_label;
    double run_pole = std::numeric_limits<double>::quiet_NaN();
    auto* cmd_run = app.add_subcommand("run", "run one experiment from a spec file");
    cmd_run->add_option("spec", spec_path, "key = value experiment file")->required();
    cmd_run->add_option("--out", run_out, "output directory");
    cmd_run->add_option("--seed", run_seed, "override seed");
    cmd_run->add_option("--trials", run_trials, "override trial count");
    cmd_run->add_option("--threads", run_threads, "worker threads (0 = auto)");
    cmd_run->add_option("--enr-db", run_enr, "override echo-to-noise ratio");
    cmd_run->add_option("--pole", run_pole, "override ar1 pole");
    cmd_run->add_option("--system", run_system,
                        "override system: sparse|semi|dispersive|reference|file:<path>");
    cmd_run->add_option("--label", run_label, "override curve label");

    // preset
    std::string preset_name, preset_out = "out";
    int preset_trials = -1, preset_threads = -1;
    bool paper_scale = false, with_sym4 = false;
    long preset_seed = 1;
    auto* cmd_preset = app.add_subcommand("preset", "regenerate a figure preset");
    cmd_preset->add_option("name", preset_name, "fig1|fig2|fig3|fig5|fig6|fig7|fig8|fig11")
        ->required();
    cmd_preset->add_option("--out", preset_out, "output directory");
    cmd_preset->add_option("--trials", preset_trials, "override trial count");
    cmd_preset->add_option("--seed", preset_seed, "experiment seed");
    cmd_preset->add_option("--threads", preset_threads, "worker threads (0 = auto)");
    cmd_preset->add_flag("--paper-scale", paper_scale, "500-trial averaging");
    cmd_preset->add_flag("--with-sym4", with_sym4,
                         "include the matrix-transform sym4 curve (slow)");

    // complexity
    std::string cx_algo = "pnlms", cx_out;
    int cx_taps = 512, cx_delay = 5;
    auto* cmd_cx = app.add_subcommand("complexity", "per-iteration cost table");
    cmd_cx->add_option("--algo", cx_algo, "pnlms|plms|dplms|dmplms|dwmplms");
    cmd_cx->add_option("--taps", cx_taps, "filter length (power of two)");
    cmd_cx->add_option("--delay", cx_delay, "adaptation delay M");
    cmd_cx->add_option("--out", cx_out, "also write the table to a file");

    // speedup
    std::string sp_csv, sp_a, sp_b;
    double sp_thr = -20.0;
    auto* cmd_sp = app.add_subcommand("speedup", "threshold-crossing ratio between two curves");
    cmd_sp->add_option("--csv", sp_csv, "curve CSV produced by run/preset")->required();
    cmd_sp->add_option("--a", sp_a, "label of the faster candidate")->required();
    cmd_sp->add_option("--b", sp_b, "label of the baseline")->required();
    cmd_sp->add_option("--threshold-db", sp_thr, "crossing threshold in dB");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_run) {
            paf::ExperimentSpec spec = paf::parse_spec_file(spec_path);
            if (run_seed >= 0) spec.seed = static_cast<std::uint64_t>(run_seed);
            if (run_trials > 0) spec.trials = run_trials;
            if (run_threads >= 0) spec.threads = run_threads;
            if (!std::isnan(run_enr)) spec.enr_db = run_enr;
            if (!std::isnan(run_pole)) spec.input.pole = run_pole;
            if (!run_label.empty()) spec.label = run_label;
            if (!run_system.empty()) {
                if (run_system == "sparse") { spec.system_kind = paf::ExperimentSpec::SystemKind::profile; spec.profile = paf::SystemProfile::sparse; }
                else if (run_system == "semi") { spec.system_kind = paf::ExperimentSpec::SystemKind::profile; spec.profile = paf::SystemProfile::semi_sparse; }
                else if (run_system == "dispersive") { spec.system_kind = paf::ExperimentSpec::SystemKind::profile; spec.profile = paf::SystemProfile::dispersive; }
                else if (run_system == "reference") spec.system_kind = paf::ExperimentSpec::SystemKind::reference;
                else if (run_system.rfind("file:", 0) == 0) { spec.system_kind = paf::ExperimentSpec::SystemKind::file; spec.system_path = run_system.substr(5); }
                else throw std::invalid_argument("bad --system value");
            }
            paf::LearningCurve c = paf::run(spec);
            emit_result({c}, {}, run_out, "run_" + c.label);
            std::printf("wall time %.1f s\n", c.wall_seconds);
            return c.diverged ? 2 : 0;
        }
        if (*cmd_preset) {
            paf::PresetOptions opt;
            opt.trials = preset_trials;
            opt.paper_scale = paper_scale;
            opt.with_sym4 = with_sym4;
            opt.seed = static_cast<std::uint64_t>(preset_seed);
            if (preset_threads >= 0) opt.threads = preset_threads;
            paf::PresetResult r = paf::run_preset(preset_name, opt);
            emit_result(r.curves, r.notes, preset_out, r.name);
            if (r.any_diverged) {
                std::cerr << "preset " << r.name << ": divergence flagged\n";
                return 2;
            }
            return 0;
        }
        if (*cmd_cx) {
            const paf::ComplexityReport r =
                paf::complexity_report(paf::algo_from_name(cx_algo), cx_taps, cx_delay);
            const std::string table = paf::format_complexity_table(r);
            std::cout << table;
            if (!cx_out.empty()) paf::write_text_file(table, cx_out);
            return 0;
        }
        if (*cmd_sp) {
            const auto curves = paf::read_curves_csv(sp_csv);
            const paf::LearningCurve *ca = nullptr, *cb = nullptr;
            for (const auto& c : curves) {
                if (c.label == sp_a) ca = &c;
                if (c.label == sp_b) cb = &c;
            }
            if (!ca || !cb) throw std::invalid_argument("label not found in csv");
            const paf::SpeedupResult s = paf::speedup(*ca, *cb, sp_thr);
            if (s.a_reached && s.b_reached)
                std::printf("%s crosses %.1f dB at %ld, %s at %ld: speedup %.2fx\n", sp_a.c_str(),
                            sp_thr, s.a_iter, sp_b.c_str(), s.b_iter, s.ratio);
            else if (s.a_reached)
                std::printf("%s crosses %.1f dB at %ld, %s never crosses: speedup > %.2fx\n",
                            sp_a.c_str(), sp_thr, s.a_iter, sp_b.c_str(), s.lower_bound);
            else
                std::printf("%s never crosses %.1f dB\n", sp_a.c_str(), sp_thr);
            return (s.a_reached) ? 0 : 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
