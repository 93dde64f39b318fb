#pragma once

#include "kbgen/layout.hpp"
#include "kbgen/synthesis.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace kbgen {

// Identifier for a softkey resource, e.g. latin_n_tilde or latin_Q.
std::string key_id_for(char32_t character, bool shifted);

struct ManifestFile {
    std::string kind;          // ime | keyboard | layout_grid | keymapping | softkeys
    std::string relative_path; // below the output root
    std::size_t byte_length = 0;
    std::string digest; // fnv1a-64 hex of the content
    bool shared = false;
};

struct EmitManifest {
    std::string language_tag;
    std::vector<ManifestFile> files;
    std::vector<std::string> registry_entries;
};

std::string grid_shape_name(const Layout& layout); // "grid_10_10_10_10"

std::string emit_ime_xml(const Layout& layout, const SynthesisConfig& config);
std::string emit_keyboard_xml(const Layout& layout, const SynthesisConfig& config);
std::string emit_layout_grid_xml(const Layout& layout);
std::string emit_keymapping_xml(const Layout& layout);
std::string emit_softkeys_xml(const Layout& layout);

// Writes the five-file package below `outdir` (xml/ under a per-language
// directory) and returns the manifest. An existing grid file of the same
// shape anywhere under `outdir` is reused and marked shared. Conflicting
// file content raises kbgen::Error (io) unless `force` is set.
EmitManifest emit_package(const Layout& layout, const SynthesisConfig& config,
                          const std::filesystem::path& outdir, bool force = false);

std::string manifest_to_tsv(const EmitManifest& manifest);
void append_manifest_tsv(const std::filesystem::path& outdir, const EmitManifest& manifest);

std::string fnv1a_hex(std::string_view bytes);

} // namespace kbgen
