// kbgen: corpus in, keyboard package out.
//
//   kbgen analyze  --text corpus.txt [--wordlist words.tsv] [--out report.tsv]
//   kbgen synth    --language kl --text corpus.txt --out build/
//   kbgen emit     --language kl build/kl.csv --out build/ [--preview kl.svg]
//   kbgen preview  build/kl.csv --out kl.svg [--view shift]
//   kbgen census
//   kbgen pipeline jobs.tsv --out build/ [--jobs 4]

#include "kbgen/cli.hpp"
#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct CommonConfigFlags {
    std::string config_path;
    std::string language;
    std::string base_layout;
    std::uint64_t min_count = 1;
    double threshold = 0.005;
    std::string currency;
    std::size_t punctuation_limit = 8;
    std::size_t long_press_warn = 9;

    void attach(CLI::App* cmd, bool with_language = true) {
        cmd->add_option("--config", config_path, "key = value config file");
        if (with_language) cmd->add_option("--language", language, "BCP 47 language tag");
        cmd->add_option("--base-layout", base_layout, "base layout name (qwerty, azerty, ...)");
        cmd->add_option("--min-count", min_count, "drop letters seen fewer times than this");
        cmd->add_option("--threshold", threshold, "n-tilde share that selects qwerty_n_tilde");
        cmd->add_option("--currency", currency, "currency symbol appended to the period key");
        cmd->add_option("--punctuation-limit", punctuation_limit,
                        "max punctuation long-presses on the period key");
        cmd->add_option("--long-press-warn", long_press_warn,
                        "warn when a key collects more entries than this");
    }

    kbgen::SynthesisConfig build(const CLI::App* cmd) const {
        kbgen::SynthesisConfig config;
        if (!config_path.empty()) config = kbgen::parse_config_file(config_path);
        const auto* language_option = cmd->get_option_no_throw("--language");
        if (language_option && language_option->count()) config.language_tag = language;
        if (cmd->count("--base-layout")) config.base_layout = base_layout;
        if (cmd->count("--min-count")) config.min_count = min_count;
        if (cmd->count("--threshold")) config.special_letter_threshold = threshold;
        if (cmd->count("--currency")) {
            auto decoded = kbgen::uni::decode_utf8(currency);
            if (!decoded || decoded->size() != 1)
                throw kbgen::usage_error("--currency expects a single character");
            config.currency_symbol = decoded->front();
        }
        if (cmd->count("--punctuation-limit")) config.punctuation_limit = punctuation_limit;
        if (cmd->count("--long-press-warn")) config.long_press_warn = long_press_warn;
        return config;
    }
};

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& warning : warnings) std::cerr << "warning: " << warning << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latin-script keyboard layout generator"};
    app.require_subcommand(1);

    std::string fallback_table_path;
    app.add_option("--fallback-table", fallback_table_path,
                   "override the built-in base-key fallback table");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "character frequency report from corpora");
    kbgen::InputPaths analyze_inputs;
    std::string analyze_out;
    analyze->add_option("--text", analyze_inputs.texts, "plain-text corpus file");
    analyze->add_option("--wordlist", analyze_inputs.wordlists, "word<TAB>count frequency list");
    analyze->add_option("--out", analyze_out, "write TSV here instead of stdout");

    // census
    auto* census = app.add_subcommand("census", "decomposition census over the Latin blocks");

    // synth
    auto* synth = app.add_subcommand("synth", "design a layout from corpora");
    kbgen::InputPaths synth_inputs;
    std::string synth_out = ".";
    CommonConfigFlags synth_flags;
    synth->add_option("--text", synth_inputs.texts, "plain-text corpus file");
    synth->add_option("--wordlist", synth_inputs.wordlists, "word<TAB>count frequency list");
    synth->add_option("--out", synth_out, "output directory");
    synth_flags.attach(synth);

    // emit
    auto* emit = app.add_subcommand("emit", "instantiate a layout CSV as an XML package");
    std::string emit_layout;
    std::string emit_out = "out";
    std::string emit_preview;
    bool emit_force = false;
    CommonConfigFlags emit_flags;
    emit->add_option("layout", emit_layout, "layout CSV file")->required();
    emit->add_option("--out", emit_out, "output directory");
    emit->add_option("--preview", emit_preview, "also write an SVG preview here");
    emit->add_flag("--force", emit_force, "overwrite conflicting files");
    emit_flags.attach(emit);

    // preview
    auto* preview = app.add_subcommand("preview", "render a layout CSV as SVG");
    std::string preview_layout, preview_out, preview_view = "default";
    preview->add_option("layout", preview_layout, "layout CSV file")->required();
    preview->add_option("--out", preview_out, "SVG output path")->required();
    preview->add_option("--view", preview_view, "default or shift")
        ->check(CLI::IsMember({"default", "shift"}));

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "run analyze/synth/emit for many languages");
    std::string pipeline_jobs_file;
    std::string pipeline_out = "out";
    std::size_t pipeline_workers = 0;
    bool pipeline_force = false;
    CommonConfigFlags pipeline_flags;
    pipeline->add_option("jobs_file", pipeline_jobs_file, "jobs file: tag<TAB>input...")
        ->required();
    pipeline->add_option("--out", pipeline_out, "output directory");
    pipeline->add_option("--jobs", pipeline_workers, "worker thread limit (0 = hardware)");
    pipeline->add_flag("--force", pipeline_force, "overwrite conflicting files");
    pipeline_flags.attach(pipeline, /*with_language=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!fallback_table_path.empty())
            kbgen::override_default_fallback_table(kbgen::FallbackTable::load(fallback_table_path));

        std::vector<std::string> warnings;
        if (analyze->parsed()) {
            std::optional<std::filesystem::path> out;
            if (!analyze_out.empty()) out = analyze_out;
            kbgen::cmd_analyze(analyze_inputs, out, std::cout, &warnings);
            print_warnings(warnings);
        } else if (census->parsed()) {
            kbgen::cmd_census(std::cout);
        } else if (synth->parsed()) {
            auto config = synth_flags.build(synth);
            auto result = kbgen::cmd_synth(synth_inputs, config, synth_out, &warnings);
            print_warnings(warnings);
            for (const auto& w : result.report.warnings) std::cerr << "warning: " << w << "\n";
            std::cout << "layout: " << result.layout_csv.generic_string() << "\n";
            std::cout << "report: " << result.report_tsv.generic_string() << "\n";
        } else if (emit->parsed()) {
            auto config = emit_flags.build(emit);
            std::optional<std::filesystem::path> preview_path;
            if (!emit_preview.empty()) preview_path = emit_preview;
            auto manifest = kbgen::cmd_emit(emit_layout, config, emit_out, emit_force, preview_path);
            std::cout << kbgen::manifest_to_tsv(manifest);
        } else if (preview->parsed()) {
            kbgen::cmd_preview(preview_layout,
                               preview_view == "shift" ? kbgen::ViewChoice::shift_view
                                                       : kbgen::ViewChoice::default_view,
                               preview_out);
        } else if (pipeline->parsed()) {
            auto config = pipeline_flags.build(pipeline);
            auto jobs = kbgen::parse_jobs_file(pipeline_jobs_file);
            auto summary =
                kbgen::cmd_pipeline(jobs, config, pipeline_out, pipeline_workers, pipeline_force);
            for (const auto& result : summary.results) {
                if (result.ok)
                    std::cout << result.language_tag << "\tok\n";
                else
                    std::cout << result.language_tag << "\tfailed\t" << result.error << "\n";
            }
            if (summary.failure_count() > 0) {
                std::cerr << "error: " << summary.failure_count() << " of "
                          << summary.results.size() << " jobs failed\n";
                return 2;
            }
        }
    } catch (const kbgen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
