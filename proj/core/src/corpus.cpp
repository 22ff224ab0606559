#include "flatinv/corpus.hpp"

#include "flatinv/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

namespace flatinv {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(EntryStatus status) {
    switch (status) {
    case EntryStatus::Pass:
        return "pass";
    case EntryStatus::Mismatch:
        return "mismatch";
    case EntryStatus::Error:
        return "error";
    }
    return "?";
}

EntryOutcome run_entry(const fs::path& file, const AnalyzeOptions& options) {
    EntryOutcome outcome;
    outcome.file = file;
    outcome.label = file.stem().string();
    try {
        const CorpusEntry entry = load_corpus_entry(file);
        outcome.label = entry.descriptor.label;
        const ManifoldReport report = analyze(entry.descriptor, options);
        outcome.report = report;
        outcome.status = EntryStatus::Pass;
        if (entry.expected) {
            std::ostringstream mismatch;
            if (entry.expected->b1 && *entry.expected->b1 != report.b1)
                mismatch << "b1: expected " << *entry.expected->b1 << ", got " << report.b1
                         << "; ";
            if (entry.expected->form && !(*entry.expected->form == report.form))
                mismatch << "form: expected " << entry.expected->form->to_text() << ", got "
                         << report.form.to_text() << "; ";
            const std::string detail = mismatch.str();
            if (!detail.empty()) {
                outcome.status = EntryStatus::Mismatch;
                outcome.message = detail.substr(0, detail.size() - 2);
            }
        }
    } catch (const std::exception& e) {
        outcome.status = EntryStatus::Error;
        outcome.report.reset();
        outcome.message = e.what();
    }
    return outcome;
}

std::vector<EntryOutcome> run_corpus(const fs::path& dir, const CorpusRunOptions& options) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw Error(dir.string() + ": not a readable directory");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    std::vector<EntryOutcome> outcomes(files.size());
    const std::size_t workers =
        std::max<std::size_t>(1, std::min(options.threads, files.size() ? files.size() : 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < files.size(); ++i)
            outcomes[i] = run_entry(files[i], options.analyze);
    } else {
        // Entries are pure and independent; each worker claims the next index
        // and writes its own slot, so the aggregate is input-ordered no
        // matter how the work interleaves.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= files.size()) return;
                    outcomes[i] = run_entry(files[i], options.analyze);
                }
            });
        for (std::thread& t : pool) t.join();
    }
    return outcomes;
}

std::string outcomes_to_json(const std::vector<EntryOutcome>& outcomes) {
    std::ostringstream out;
    for (const EntryOutcome& o : outcomes) {
        json obj{{"file", o.file.filename().string()},
                 {"label", o.label},
                 {"status", std::string(to_string(o.status))},
                 {"message", o.message}};
        obj["report"] = o.report ? json::parse(report_to_json(*o.report)) : json(nullptr);
        out << obj.dump() << '\n';
    }
    return out.str();
}

std::string outcomes_to_table(const std::vector<EntryOutcome>& outcomes) {
    std::size_t label_width = 5;
    for (const EntryOutcome& o : outcomes) label_width = std::max(label_width, o.label.size());

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(label_width)) << "label"
        << " | b1 | b2 | form | status\n";
    std::size_t passed = 0;
    for (const EntryOutcome& o : outcomes) {
        out << std::left << std::setw(static_cast<int>(label_width)) << o.label << " | ";
        if (o.report)
            out << std::setw(2) << o.report->b1 << " | " << std::setw(2) << o.report->b2 << " | "
                << std::setw(4) << o.report->form.to_text();
        else
            out << " -" << " | " << " -" << " | " << std::setw(4) << "-";
        out << " | " << (o.status == EntryStatus::Pass ? "PASS"
                         : o.status == EntryStatus::Mismatch ? "FAIL" : "ERROR");
        if (!o.message.empty()) out << "  (" << o.message << ")";
        out << '\n';
        if (o.status == EntryStatus::Pass) ++passed;
    }
    out << outcomes.size() << " entries: " << passed << " passed, "
        << (outcomes.size() - passed) << " failed\n";
    return out.str();
}

int corpus_exit_code(const std::vector<EntryOutcome>& outcomes) {
    bool mismatch = false;
    for (const EntryOutcome& o : outcomes) {
        if (o.status == EntryStatus::Error) return 1;
        if (o.status == EntryStatus::Mismatch) mismatch = true;
    }
    return mismatch ? 2 : 0;
}

} // namespace flatinv
