// flatinv command-line front end.
//
// Subcommands: analyze, snf, abelianize, form, corpus-run. Data goes to
// stdout, diagnostics to stderr. Exit codes: 0 success, 1 parse/validation
// error, 2 expectation mismatch.

#include "flatinv/corpus.hpp"
#include "flatinv/descriptor_io.hpp"
#include "flatinv/errors.hpp"
#include "flatinv/forms.hpp"
#include "flatinv/manifold.hpp"
#include "flatinv/normal_form.hpp"
#include "flatinv/presentation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::string format = "text";
    std::size_t parallel = 1;
    bool strict_spin = true;
    std::size_t max_group_order = flatinv::kDefaultMaxGroupOrder;

    bool json_output() const { return format == "json"; }
    flatinv::AnalyzeOptions analyze_options() const {
        return {strict_spin, max_group_order};
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw flatinv::Error(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json matrix_json(const flatinv::IntMatrix& m) {
    json entries = json::array();
    for (const mpz_class& e : m.data()) entries.push_back(e.get_str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

int cmd_analyze(const std::string& path, const GlobalOptions& global) {
    const flatinv::CorpusEntry entry = flatinv::load_corpus_entry(path);
    const flatinv::ManifoldReport report =
        flatinv::analyze(entry.descriptor, global.analyze_options());
    if (global.json_output())
        std::cout << flatinv::report_to_json(report) << '\n';
    else
        std::cout << flatinv::report_to_text(report);

    if (entry.expected) {
        std::ostringstream mismatch;
        if (entry.expected->b1 && *entry.expected->b1 != report.b1)
            mismatch << "b1: expected " << *entry.expected->b1 << ", got " << report.b1 << "; ";
        if (entry.expected->form && !(*entry.expected->form == report.form))
            mismatch << "form: expected " << entry.expected->form->to_text() << ", got "
                     << report.form.to_text() << "; ";
        const std::string detail = mismatch.str();
        if (!detail.empty()) {
            std::cerr << path << ": expectation mismatch: "
                      << detail.substr(0, detail.size() - 2) << '\n';
            return 2;
        }
    }
    return 0;
}

int cmd_snf(const std::string& path, const GlobalOptions& global) {
    const flatinv::IntMatrix a = flatinv::IntMatrix::parse(slurp(path));
    const flatinv::SNFResult snf = flatinv::smith_normal_form(a);
    if (global.json_output()) {
        json divisors = json::array();
        for (const mpz_class& d : snf.divisors) divisors.push_back(d.get_str());
        json doc{{"divisors", divisors}, {"u", matrix_json(snf.u)}, {"v", matrix_json(snf.v)}};
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "divisors:";
        for (const mpz_class& d : snf.divisors) std::cout << ' ' << d;
        std::cout << "\nu:\n" << snf.u.to_text() << "v:\n" << snf.v.to_text();
    }
    return 0;
}

int cmd_abelianize(const std::string& text, const GlobalOptions& global) {
    const flatinv::Presentation p = flatinv::parse_presentation(text);
    const flatinv::AbelianInvariants inv = flatinv::abelian_invariants(p);
    if (global.json_output()) {
        json torsion = json::array();
        for (const mpz_class& t : inv.torsion) torsion.push_back(t.get_str());
        json doc{{"free_rank", inv.free_rank}, {"torsion", torsion}, {"text", inv.to_text()}};
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << inv.to_text() << '\n';
    }
    return 0;
}

int cmd_form(const std::string& path, const std::string& mode, const GlobalOptions& global) {
    const flatinv::SymForm f(flatinv::IntMatrix::parse(slurp(path)));
    if (mode == "classify") {
        const flatinv::FormClass c = flatinv::classify(f);
        if (global.json_output())
            std::cout << flatinv::form_class_to_json(c) << '\n';
        else
            std::cout << c.to_text() << '\n';
    } else if (mode == "signature") {
        const long s = flatinv::signature(f);
        if (global.json_output())
            std::cout << json{{"signature", s}}.dump() << '\n';
        else
            std::cout << s << '\n';
    } else { // even
        const bool even = flatinv::is_even(f);
        if (global.json_output())
            std::cout << json{{"even", even}}.dump() << '\n';
        else
            std::cout << (even ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_corpus_run(const std::string& dir, const GlobalOptions& global) {
    flatinv::CorpusRunOptions options;
    options.analyze = global.analyze_options();
    options.threads = global.parallel;
    const std::vector<flatinv::EntryOutcome> outcomes = flatinv::run_corpus(dir, options);
    if (outcomes.empty()) std::cerr << dir << ": no corpus entries (*.json) found\n";
    std::cout << (global.json_output() ? flatinv::outcomes_to_json(outcomes)
                                       : flatinv::outcomes_to_table(outcomes));
    return flatinv::corpus_exit_code(outcomes);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topological invariants (b1, b2, intersection form class) of flat and "
                 "almost-flat 4-manifolds from algebraic descriptions of their fundamental "
                 "groups"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--parallel", global.parallel, "Worker threads for corpus-run")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--strict-spin,!--no-strict-spin", global.strict_spin,
                 "Treat a non-spin descriptor with b1 != 1 as an error (default on)");
    app.add_option("--max-group-order", global.max_group_order,
                   "Abort point-group closure beyond this many elements")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string analyze_path;
    auto* analyze = app.add_subcommand(
        "analyze", "Analyze one descriptor or corpus-entry JSON file and print its report");
    analyze->add_option("path", analyze_path, "Descriptor file")->required();
    analyze->fallthrough();

    std::string snf_path;
    auto* snf = app.add_subcommand(
        "snf", "Smith normal form (divisors and both transforms) of a matrix file");
    snf->add_option("path", snf_path, "Matrix file (\"rows cols\" header, row-major entries)")
        ->required();
    snf->fallthrough();

    std::string presentation_text;
    auto* abelianize = app.add_subcommand(
        "abelianize", "Abelian invariants of a finitely presented group");
    abelianize->add_option("presentation", presentation_text,
                           "Presentation, e.g. \"< a, b | [a,b] >\"")
        ->required();
    abelianize->fallthrough();

    std::string form_path, form_mode;
    auto* form = app.add_subcommand("form", "Invariants of a symmetric form given as a matrix file");
    form->add_option("path", form_path, "Matrix file; symmetry is validated")->required();
    form->add_option("mode", form_mode, "What to compute")
        ->check(CLI::IsMember({"classify", "signature", "even"}))
        ->required();
    form->fallthrough();

    std::string corpus_dir;
    auto* corpus_run = app.add_subcommand(
        "corpus-run", "Analyze every *.json entry in a directory and verify expectations");
    corpus_run->add_option("dir", corpus_dir, "Corpus directory")->required();
    corpus_run->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(analyze_path, global);
        if (app.got_subcommand(snf)) return cmd_snf(snf_path, global);
        if (app.got_subcommand(abelianize)) return cmd_abelianize(presentation_text, global);
        if (app.got_subcommand(form)) return cmd_form(form_path, form_mode, global);
        if (app.got_subcommand(corpus_run)) return cmd_corpus_run(corpus_dir, global);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
