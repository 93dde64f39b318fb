#include "kbgen/cli.hpp"

#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace kbgen {

namespace fs = std::filesystem;

namespace {

void write_text_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw io_error("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write " + path.string());
    out << content;
    if (!out) throw io_error("write failed for " + path.string());
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

} // namespace

CharacterTally load_and_tally(const InputPaths& inputs, std::vector<std::string>* warnings) {
    std::vector<CorpusDocument> documents;
    documents.reserve(inputs.texts.size());
    for (const auto& path : inputs.texts)
        documents.push_back(load_plain_text(path, 1, warnings));
    std::vector<std::vector<WordFrequencyEntry>> wordlists;
    wordlists.reserve(inputs.wordlists.size());
    for (const auto& path : inputs.wordlists)
        wordlists.push_back(load_word_frequency_list(path, warnings));
    return tally(documents, wordlists);
}

void cmd_analyze(const InputPaths& inputs, const std::optional<fs::path>& out_path,
                 std::ostream& console, std::vector<std::string>* warnings) {
    if (inputs.texts.empty() && inputs.wordlists.empty())
        throw usage_error("analyze needs at least one --text or --wordlist input");
    std::string tsv = tally_to_tsv(load_and_tally(inputs, warnings));
    if (out_path)
        write_text_file(*out_path, tsv);
    else
        console << tsv;
}

void cmd_census(std::ostream& console) {
    CensusResult census = decomposition_census(default_census_blocks());
    console << "blocks:";
    for (const auto& block : default_census_blocks()) console << " [" << block.name << "]";
    console << "\n";
    console << "letters: " << census.total_letters << "\n";
    console << "decomposable: " << census.decomposable << "\n";
    console << "fallback: " << census.fallback << "\n";
    console << "uncovered: " << census.uncovered.size() << "\n";
    for (char32_t cp : census.uncovered)
        console << "  " << uni::encode_utf8(cp) << "\n";
}

SynthResult cmd_synth(const InputPaths& inputs, const SynthesisConfig& config,
                      const fs::path& outdir, std::vector<std::string>* warnings) {
    if (inputs.texts.empty() && inputs.wordlists.empty())
        throw usage_error("synth needs at least one --text or --wordlist input");
    if (config.language_tag.empty())
        throw usage_error("synth needs a language tag (--language or config file)");

    CharacterTally counts = load_and_tally(inputs, warnings);
    auto [layout, report] = synthesize(counts, config);

    SynthResult result;
    result.layout_csv = outdir / (config.language_tag + ".csv");
    result.report_tsv = outdir / (config.language_tag + ".report.tsv");
    write_text_file(result.layout_csv, serialize_layout_csv(layout));
    write_text_file(result.report_tsv, report_to_tsv(report));
    result.report = std::move(report);
    return result;
}

EmitManifest cmd_emit(const fs::path& layout_csv, const SynthesisConfig& config,
                      const fs::path& outdir, bool force,
                      const std::optional<fs::path>& preview_path) {
    if (config.language_tag.empty())
        throw usage_error("emit needs a language tag (--language or config file)");
    Layout layout;
    try {
        layout = parse_layout_csv(read_text_file(layout_csv));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::io) throw;
        throw data_error(layout_csv.string() + ": " + e.what());
    }
    layout.language_tag = config.language_tag;
    layout.name = config.language_tag;
    layout.base_layout_name = config.base_layout.value_or("qwerty");

    EmitManifest manifest = emit_package(layout, config, outdir, force);
    append_manifest_tsv(outdir, manifest);
    if (preview_path)
        write_text_file(*preview_path, render_svg(layout, ViewChoice::default_view));
    return manifest;
}

void cmd_preview(const fs::path& layout_csv, ViewChoice view, const fs::path& out_svg,
                 const RenderStyle& style) {
    Layout layout;
    try {
        layout = parse_layout_csv(read_text_file(layout_csv));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::io) throw;
        throw data_error(layout_csv.string() + ": " + e.what());
    }
    write_text_file(out_svg, render_svg(layout, view, style));
}

std::size_t PipelineSummary::failure_count() const {
    std::size_t failures = 0;
    for (const auto& result : results)
        if (!result.ok) ++failures;
    return failures;
}

std::vector<PipelineJob> parse_jobs_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());

    std::vector<PipelineJob> jobs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        PipelineJob job;
        std::size_t start = 0;
        std::vector<std::string> fields;
        while (start <= line.size()) {
            std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() < 2 || fields.front().empty())
            throw data_error(path.string() + ":" + std::to_string(line_no) +
                             ": expected `tag<TAB>input[<TAB>input...]`");
        job.language_tag = fields.front();
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (fields[i].empty()) continue;
            if (fields[i].ends_with(".tsv"))
                job.inputs.wordlists.push_back(fields[i]);
            else
                job.inputs.texts.push_back(fields[i]);
        }
        if (job.inputs.texts.empty() && job.inputs.wordlists.empty())
            throw data_error(path.string() + ":" + std::to_string(line_no) + ": job has no inputs");
        jobs.push_back(std::move(job));
    }
    return jobs;
}

PipelineSummary cmd_pipeline(std::span<const PipelineJob> jobs, const SynthesisConfig& base_config,
                             const fs::path& outdir, std::size_t workers, bool force) {
    std::set<std::string> seen_tags;
    for (const auto& job : jobs)
        if (!seen_tags.insert(job.language_tag).second)
            throw usage_error("duplicate job tag `" + job.language_tag +
                              "`; output directories must be distinct");

    struct JobState {
        std::optional<Layout> layout;
        SynthesisReport report;
        std::string error;
    };
    std::vector<JobState> states(jobs.size());

    // Tally + synthesis are pure and independent; run them on a small pool.
    std::size_t thread_count = workers == 0
                                   ? std::max<std::size_t>(1, std::thread::hardware_concurrency())
                                   : workers;
    thread_count = std::min(thread_count, jobs.size() == 0 ? std::size_t{1} : jobs.size());
    std::atomic<std::size_t> next{0};
    auto run_worker = [&] {
        while (true) {
            std::size_t index = next.fetch_add(1);
            if (index >= jobs.size()) break;
            JobState& state = states[index];
            try {
                SynthesisConfig config = base_config;
                config.language_tag = jobs[index].language_tag;
                CharacterTally counts = load_and_tally(jobs[index].inputs, nullptr);
                auto [layout, report] = synthesize(counts, config);
                state.layout = std::move(layout);
                state.report = std::move(report);
            } catch (const std::exception& e) {
                state.error = e.what();
            }
        }
    };
    if (thread_count <= 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(run_worker);
        for (auto& t : pool) t.join();
    }

    // File output runs in job order: grid sharing and the manifest stay
    // deterministic regardless of scheduling.
    PipelineSummary summary;
    std::string manifest_tsv;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const std::string& tag = jobs[i].language_tag;
        JobState& state = states[i];
        JobResult result;
        result.language_tag = tag;
        if (!state.error.empty()) {
            result.error = state.error;
            summary.results.push_back(std::move(result));
            continue;
        }
        try {
            SynthesisConfig config = base_config;
            config.language_tag = tag;
            write_text_file(outdir / tag / (tag + ".csv"), serialize_layout_csv(*state.layout));
            write_text_file(outdir / tag / (tag + ".report.tsv"), report_to_tsv(state.report));
            EmitManifest manifest = emit_package(*state.layout, config, outdir, force);
            manifest_tsv += manifest_to_tsv(manifest);
            write_text_file(outdir / tag / "preview.svg",
                            render_svg(*state.layout, ViewChoice::default_view));
            result.ok = true;
        } catch (const std::exception& e) {
            result.error = e.what();
        }
        summary.results.push_back(std::move(result));
    }
    write_text_file(outdir / "manifest.tsv", manifest_tsv);
    return summary;
}

} // namespace kbgen
