#pragma once

#include "flatinv/descriptor_io.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace flatinv {

enum class EntryStatus { Pass, Mismatch, Error };

std::string_view to_string(EntryStatus status);

struct EntryOutcome {
    std::filesystem::path file;
    std::string label; // descriptor label, or the file stem when loading failed
    EntryStatus status = EntryStatus::Error;
    std::optional<ManifoldReport> report;
    std::string message; // mismatch / error detail
};

struct CorpusRunOptions {
    AnalyzeOptions analyze;
    std::size_t threads = 1;
};

/// Analyze one corpus file in isolation; never throws, failures land in the
/// outcome's status and message.
EntryOutcome run_entry(const std::filesystem::path& file, const AnalyzeOptions& options = {});

/// Batch run over every *.json file in dir, in lexicographic filename order.
/// Entries are independent and may be processed on several threads; the
/// result vector always follows the input order, so output is identical for
/// serial and parallel runs. Throws Error if dir is not a readable directory.
std::vector<EntryOutcome> run_corpus(const std::filesystem::path& dir,
                                     const CorpusRunOptions& options = {});

/// One JSON object per line per entry; byte-deterministic.
std::string outcomes_to_json(const std::vector<EntryOutcome>& outcomes);

/// Plain-text table: label | b1 | b2 | form | status, plus a summary line.
std::string outcomes_to_table(const std::vector<EntryOutcome>& outcomes);

/// 1 if any entry errored, else 2 if any expectation mismatched, else 0.
int corpus_exit_code(const std::vector<EntryOutcome>& outcomes);

} // namespace flatinv
