#pragma once

#include "kbgen/android_emit.hpp"
#include "kbgen/char_stats.hpp"
#include "kbgen/preview.hpp"
#include "kbgen/synthesis.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace kbgen {

struct InputPaths {
    std::vector<std::string> texts;
    std::vector<std::string> wordlists;
};

// Loads every input and produces the merged tally; warnings (orphan marks
// and the like) are appended when a sink is given.
CharacterTally load_and_tally(const InputPaths& inputs, std::vector<std::string>* warnings = nullptr);

// `analyze`: tally TSV to `out_path` or to `console`.
void cmd_analyze(const InputPaths& inputs, const std::optional<std::filesystem::path>& out_path,
                 std::ostream& console, std::vector<std::string>* warnings = nullptr);

// `census`: prints the decomposition census for the shipped blocks.
void cmd_census(std::ostream& console);

struct SynthResult {
    std::filesystem::path layout_csv;
    std::filesystem::path report_tsv;
    SynthesisReport report;
};

// `synth`: writes <out>/<tag>.csv and <out>/<tag>.report.tsv.
SynthResult cmd_synth(const InputPaths& inputs, const SynthesisConfig& config,
                      const std::filesystem::path& outdir,
                      std::vector<std::string>* warnings = nullptr);

// `emit`: parses a layout CSV and writes the XML package; optionally also a
// preview SVG next to it.
EmitManifest cmd_emit(const std::filesystem::path& layout_csv, const SynthesisConfig& config,
                      const std::filesystem::path& outdir, bool force,
                      const std::optional<std::filesystem::path>& preview_path);

// `preview`: layout CSV -> SVG file.
void cmd_preview(const std::filesystem::path& layout_csv, ViewChoice view,
                 const std::filesystem::path& out_svg, const RenderStyle& style = {});

struct PipelineJob {
    std::string language_tag;
    InputPaths inputs;
};

struct JobResult {
    std::string language_tag;
    bool ok = false;
    std::string error; // empty when ok
};

struct PipelineSummary {
    std::vector<JobResult> results;
    std::size_t failure_count() const;
};

// Jobs file: `tag<TAB>input...` per line; inputs ending in .tsv are word
// lists, everything else plain text. `#` comments and blank lines skipped.
std::vector<PipelineJob> parse_jobs_file(const std::filesystem::path& path);

// `pipeline`: analyze -> synth -> emit -> preview per job. Tallying and
// synthesis run on up to `workers` threads; files are written in job order
// so reruns are byte-identical. Per-job failures land in the summary.
PipelineSummary cmd_pipeline(std::span<const PipelineJob> jobs, const SynthesisConfig& base_config,
                             const std::filesystem::path& outdir, std::size_t workers, bool force);

} // namespace kbgen
