#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatinv/corpus.hpp"
#include "flatinv/errors.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

using namespace flatinv;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpusDir = FLATINV_CORPUS_DIR;

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("flatinv-test-" + std::to_string(::getpid()) + "-" +
                      std::to_string(counter++))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    void write(const std::string& name, const std::string& content) const {
        std::ofstream out(path / name);
        out << content;
    }
    static inline int counter = 0;
};

} // namespace

TEST_CASE("shipped corpus passes entirely") {
    const std::vector<EntryOutcome> outcomes = run_corpus(kCorpusDir);
    REQUIRE(outcomes.size() == 4);
    // lexicographic filename order
    CHECK(outcomes[0].label == "ab-z2-case5-C2");
    CHECK(outcomes[1].label == "flat-z2-fix2");
    CHECK(outcomes[2].label == "nil-heis-x-s1");
    CHECK(outcomes[3].label == "torus-T4");
    for (const EntryOutcome& o : outcomes) {
        CHECK(o.status == EntryStatus::Pass);
        CHECK(o.message.empty());
        REQUIRE(o.report.has_value());
        CHECK(o.report->chi == 0);
    }
    CHECK(corpus_exit_code(outcomes) == 0);

    // the b1 -> form table
    CHECK(outcomes[0].report->b1 == 1);
    CHECK(outcomes[0].report->form == FormClass::zero());
    CHECK(outcomes[1].report->b1 == 2);
    CHECK(outcomes[1].report->form == FormClass::hyperbolic_class(1));
    CHECK(outcomes[2].report->b1 == 3);
    CHECK(outcomes[2].report->form == FormClass::hyperbolic_class(2));
    CHECK(outcomes[3].report->b1 == 4);
    CHECK(outcomes[3].report->form == FormClass::hyperbolic_class(3));
}

TEST_CASE("serial and parallel runs render identical bytes") {
    const std::string serial_once = outcomes_to_json(run_corpus(kCorpusDir));
    const std::string serial_twice = outcomes_to_json(run_corpus(kCorpusDir));
    CorpusRunOptions parallel;
    parallel.threads = 4;
    const std::string threaded = outcomes_to_json(run_corpus(kCorpusDir, parallel));
    CHECK(serial_once == serial_twice);
    CHECK(serial_once == threaded);
    CHECK(outcomes_to_table(run_corpus(kCorpusDir)) ==
          outcomes_to_table(run_corpus(kCorpusDir, parallel)));
}

TEST_CASE("a planted mismatch fails only its own entry") {
    TempDir dir;
    // genuine b1 = 2 descriptor wearing a b1 = 1 expectation
    dir.write("planted.json", R"({
      "schema": 1, "label": "planted", "nilpotency_class": 1,
      "orientable": true, "spin": true,
      "dim": 4,
      "holonomy_gens": [[1,0,0,0, 0,1,0,0, 0,0,-1,0, 0,0,0,-1]],
      "citation": "deliberately wrong expectation for harness testing",
      "expected": { "b1": 1, "form": { "type": "zero" } }
    })");
    fs::copy_file(kCorpusDir / "torus_t4.json", dir.path / "torus_t4.json");

    const std::vector<EntryOutcome> outcomes = run_corpus(dir.path);
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].label == "planted");
    CHECK(outcomes[0].status == EntryStatus::Mismatch);
    CHECK(outcomes[0].message.find("expected 1, got 2") != std::string::npos);
    CHECK(outcomes[0].report.has_value()); // the report itself was fine
    CHECK(outcomes[1].status == EntryStatus::Pass);
    CHECK(corpus_exit_code(outcomes) == 2);
}

TEST_CASE("a broken entry is isolated") {
    TempDir dir;
    dir.write("broken.json", "{ not json");
    fs::copy_file(kCorpusDir / "ab_z2_case5.json", dir.path / "ab_z2_case5.json");

    const std::vector<EntryOutcome> outcomes = run_corpus(dir.path);
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].status == EntryStatus::Pass); // ab_z2_case5 sorts first
    CHECK(outcomes[1].status == EntryStatus::Error);
    CHECK(outcomes[1].label == "broken"); // falls back to the file stem
    CHECK_FALSE(outcomes[1].report.has_value());
    CHECK_FALSE(outcomes[1].message.empty());
    CHECK(corpus_exit_code(outcomes) == 1);
}

TEST_CASE("non-json files are not corpus entries") {
    TempDir dir;
    dir.write("notes.txt", "not an entry");
    fs::copy_file(kCorpusDir / "torus_t4.json", dir.path / "torus_t4.json");
    CHECK(run_corpus(dir.path).size() == 1);
}

TEST_CASE("empty directory yields an empty run") {
    TempDir dir;
    const std::vector<EntryOutcome> outcomes = run_corpus(dir.path);
    CHECK(outcomes.empty());
    CHECK(corpus_exit_code(outcomes) == 0);
    CHECK(outcomes_to_json(outcomes).empty());
}

TEST_CASE("missing directory is an error") {
    CHECK_THROWS_AS(run_corpus(kCorpusDir / "no-such-subdir"), Error);
}

TEST_CASE("run_entry never throws") {
    const EntryOutcome missing = run_entry(kCorpusDir / "no-such-file.json");
    CHECK(missing.status == EntryStatus::Error);
    CHECK_FALSE(missing.message.empty());

    // analysis failures land in the outcome too
    TempDir dir;
    dir.write("nonorientable.json", R"({
      "schema": 1, "label": "no", "nilpotency_class": 1,
      "orientable": false, "spin": true, "dim": 4, "holonomy_gens": []
    })");
    const EntryOutcome rejected = run_entry(dir.path / "nonorientable.json");
    CHECK(rejected.status == EntryStatus::Error);
    CHECK(rejected.label == "no");
    CHECK(rejected.message.find("orientable") != std::string::npos);
}

TEST_CASE("table rendering") {
    const std::string table = outcomes_to_table(run_corpus(kCorpusDir));
    CHECK(table.find("label") != std::string::npos);
    CHECK(table.find("| b1 | b2 | form | status") != std::string::npos);
    CHECK(table.find("torus-T4") != std::string::npos);
    CHECK(table.find("3H") != std::string::npos);
    CHECK(table.find("4 entries: 4 passed, 0 failed") != std::string::npos);
    CHECK(table.find("ERROR") == std::string::npos);
}
