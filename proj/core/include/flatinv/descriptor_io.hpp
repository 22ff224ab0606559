#pragma once

#include "flatinv/crystal.hpp"
#include "flatinv/manifold.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace flatinv {

/// Expected fragment of a ManifoldReport attached to a corpus entry.
struct ExpectedFragment {
    std::optional<std::size_t> b1;
    std::optional<FormClass> form;
};

/// Descriptor plus provenance: where the data comes from and, optionally,
/// the values it is expected to reproduce.
struct CorpusEntry {
    AlmostBieberbachDescriptor descriptor;
    std::string citation; // empty only for bare descriptor files
    std::optional<ExpectedFragment> expected;
};

/// Strict schema-1 JSON parse of a bare descriptor document
/// ("citation"/"expected" are rejected here). Unknown fields are rejected.
AlmostBieberbachDescriptor descriptor_from_json_text(const std::string& text);

/// Parse of a descriptor or corpus-entry document; "citation" and "expected"
/// are accepted, and "expected" requires a nonempty citation.
CorpusEntry corpus_entry_from_json_text(const std::string& text);

/// Reads and parses a file; file name is prefixed to any diagnostic.
CorpusEntry load_corpus_entry(const std::filesystem::path& path);

std::string descriptor_to_json(const AlmostBieberbachDescriptor& d);

/// One-line JSON object with fields label, b1, b2, chi, parity,
/// form {type, n}, route, warnings. Byte-deterministic for equal reports.
std::string report_to_json(const ManifoldReport& r);
std::string report_to_text(const ManifoldReport& r);

std::string form_class_to_json(const FormClass& c);

} // namespace flatinv
