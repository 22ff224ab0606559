#include "flatinv/descriptor_io.hpp"

#include "flatinv/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace flatinv {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key))
            throw DescriptorError(where + ": unknown field \"" + key + "\"");
    }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw DescriptorError(where + ": missing field \"" + key + "\"");
    return *it;
}

long long as_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw DescriptorError(where + ": expected an integer");
    return v.get<long long>();
}

bool as_bool(const json& v, const std::string& where) {
    if (!v.is_boolean()) throw DescriptorError(where + ": expected a boolean");
    return v.get<bool>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw DescriptorError(where + ": expected a string");
    return v.get<std::string>();
}

mpq_class parse_rational(const std::string& text, const std::string& where) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw DescriptorError(where + ": invalid rational \"" + text + "\"");
    if (q.get_den() == 0) throw DescriptorError(where + ": zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

// Reads dim + holonomy_gens (+ affine_parts, label) into a CrystalGroup.
CrystalGroup crystal_from_json(const json& obj, const std::string& where,
                               const std::string& fallback_label) {
    CrystalGroup g;
    g.label = obj.contains("label") ? as_string(obj["label"], where + ".label") : fallback_label;
    const long long dim = as_integer(require(obj, "dim", where), where + ".dim");
    if (dim < 0) throw DescriptorError(where + ".dim: must be nonnegative");
    g.dim = static_cast<std::size_t>(dim);

    const json& gens = require(obj, "holonomy_gens", where);
    if (!gens.is_array()) throw DescriptorError(where + ".holonomy_gens: expected an array");
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::string gen_where = where + ".holonomy_gens[" + std::to_string(k) + "]";
        const json& flat = gens[k];
        if (!flat.is_array() || flat.size() != g.dim * g.dim)
            throw DescriptorError(gen_where + ": expected " + std::to_string(g.dim * g.dim) +
                                  " row-major integers");
        IntMatrix h(g.dim, g.dim);
        for (std::size_t i = 0; i < g.dim; ++i)
            for (std::size_t j = 0; j < g.dim; ++j)
                h(i, j) = static_cast<long>(as_integer(flat[i * g.dim + j], gen_where));
        g.holonomy_gens.push_back(std::move(h));
    }

    if (obj.contains("affine_parts")) {
        const json& parts = obj["affine_parts"];
        if (!parts.is_array()) throw DescriptorError(where + ".affine_parts: expected an array");
        std::vector<std::vector<mpq_class>> affine;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const std::string part_where = where + ".affine_parts[" + std::to_string(k) + "]";
            const json& vec = parts[k];
            if (!vec.is_array() || vec.size() != g.dim)
                throw DescriptorError(part_where + ": expected " + std::to_string(g.dim) +
                                      " rational strings");
            std::vector<mpq_class> t;
            for (const json& coord : vec)
                t.push_back(parse_rational(as_string(coord, part_where), part_where));
            affine.push_back(std::move(t));
        }
        g.affine_parts = std::move(affine);
    }
    return g;
}

UnderlyingGroup underlying_from_json(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw DescriptorError(where + ": expected an object");
    reject_unknown_fields(obj, {"label", "dim", "holonomy_gens", "affine_parts", "presentation"},
                          where);
    const bool has_presentation = obj.contains("presentation");
    const bool has_holonomy = obj.contains("holonomy_gens") || obj.contains("dim");
    if (has_presentation && has_holonomy)
        throw DescriptorError(where + ": give either a presentation or holonomy data, not both");
    if (has_presentation)
        return parse_presentation(as_string(obj["presentation"], where + ".presentation"));
    if (has_holonomy) return crystal_from_json(obj, where, "underlying");
    throw DescriptorError(where + ": needs a presentation or holonomy data");
}

FormClass form_class_from_json(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw DescriptorError(where + ": expected an object");
    reject_unknown_fields(obj, {"type", "n"}, where);
    const std::string type = as_string(require(obj, "type", where), where + ".type");
    if (type == "zero") {
        if (obj.contains("n") && as_integer(obj["n"], where + ".n") != 0)
            throw DescriptorError(where + ": the zero class has n = 0");
        return FormClass::zero();
    }
    if (type == "hyperbolic") {
        const long long n = as_integer(require(obj, "n", where), where + ".n");
        if (n < 1) throw DescriptorError(where + ".n: hyperbolic multiplicity must be >= 1");
        return FormClass::hyperbolic_class(static_cast<std::size_t>(n));
    }
    throw DescriptorError(where + ".type: expected \"zero\" or \"hyperbolic\", got \"" + type +
                          "\"");
}

CorpusEntry entry_from_json(const json& doc, bool allow_corpus_fields, const std::string& where) {
    if (!doc.is_object()) throw DescriptorError(where + ": expected a JSON object");

    std::set<std::string> allowed{"schema",       "label",      "nilpotency_class",
                                  "orientable",   "spin",       "is_torus",
                                  "dim",          "holonomy_gens", "affine_parts",
                                  "presentation", "underlying"};
    if (allow_corpus_fields) {
        allowed.insert("citation");
        allowed.insert("expected");
    }
    reject_unknown_fields(doc, allowed, where);

    const long long schema = as_integer(require(doc, "schema", where), where + ".schema");
    if (schema != 1)
        throw DescriptorError(where + ": unsupported schema version " + std::to_string(schema));

    CorpusEntry entry;
    AlmostBieberbachDescriptor& d = entry.descriptor;
    d.label = as_string(require(doc, "label", where), where + ".label");
    if (d.label.empty()) throw DescriptorError(where + ".label: must be nonempty");
    d.nilpotency_class = static_cast<int>(
        as_integer(require(doc, "nilpotency_class", where), where + ".nilpotency_class"));
    d.orientable = as_bool(require(doc, "orientable", where), where + ".orientable");
    d.spin = as_bool(require(doc, "spin", where), where + ".spin");
    if (doc.contains("is_torus")) d.is_torus = as_bool(doc["is_torus"], where + ".is_torus");

    if (doc.contains("holonomy_gens") || doc.contains("dim"))
        d.crystal = crystal_from_json(doc, where, d.label);
    else if (doc.contains("affine_parts"))
        throw DescriptorError(where + ": affine_parts without holonomy_gens");

    if (doc.contains("presentation"))
        d.presentation = parse_presentation(as_string(doc["presentation"], where + ".presentation"));
    if (doc.contains("underlying"))
        d.underlying = underlying_from_json(doc["underlying"], where + ".underlying");

    if (doc.contains("citation")) {
        entry.citation = as_string(doc["citation"], where + ".citation");
        if (entry.citation.empty()) throw DescriptorError(where + ".citation: must be nonempty");
    }
    if (doc.contains("expected")) {
        if (entry.citation.empty())
            throw DescriptorError(where + ": expected values need a citation recording their provenance");
        const json& exp = doc["expected"];
        if (!exp.is_object()) throw DescriptorError(where + ".expected: expected an object");
        reject_unknown_fields(exp, {"b1", "form"}, where + ".expected");
        ExpectedFragment fragment;
        if (exp.contains("b1")) {
            const long long b1 = as_integer(exp["b1"], where + ".expected.b1");
            if (b1 < 0) throw DescriptorError(where + ".expected.b1: must be nonnegative");
            fragment.b1 = static_cast<std::size_t>(b1);
        }
        if (exp.contains("form"))
            fragment.form = form_class_from_json(exp["form"], where + ".expected.form");
        if (!fragment.b1 && !fragment.form)
            throw DescriptorError(where + ".expected: provide b1 and/or form");
        entry.expected = std::move(fragment);
    }

    d.validate();
    return entry;
}

json parse_document(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.what() already carries the byte position of the failure
        throw DescriptorError(where + ": " + e.what());
    }
}

json form_class_json(const FormClass& c) {
    switch (c.kind) {
    case FormClass::Kind::Zero:
        return json{{"type", "zero"}, {"n", 0}};
    case FormClass::Kind::Hyperbolic:
        return json{{"type", "hyperbolic"}, {"n", c.n}};
    case FormClass::Kind::Other:
        return json{{"type", "other"},
                    {"n", 0},
                    {"rank", c.rank},
                    {"signature", c.signature},
                    {"parity", c.even ? "even" : "odd"},
                    {"abs_det", c.abs_det.get_str()}};
    }
    return {};
}

json crystal_json(const CrystalGroup& g, bool with_label) {
    json obj;
    if (with_label && !g.label.empty()) obj["label"] = g.label;
    obj["dim"] = g.dim;
    json gens = json::array();
    for (const IntMatrix& h : g.holonomy_gens) {
        json flat = json::array();
        for (const mpz_class& e : h.data()) flat.push_back(e.get_si());
        gens.push_back(std::move(flat));
    }
    obj["holonomy_gens"] = std::move(gens);
    if (g.affine_parts) {
        json parts = json::array();
        for (const auto& t : *g.affine_parts) {
            json vec = json::array();
            for (const mpq_class& c : t) vec.push_back(c.get_str());
            parts.push_back(std::move(vec));
        }
        obj["affine_parts"] = std::move(parts);
    }
    return obj;
}

std::string presentation_text(const Presentation& p) {
    std::ostringstream out;
    out << "< ";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out << ", ";
        out << p.generators[i];
    }
    out << " |";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        out << (r ? ", " : " ");
        const auto& syllables = p.relators[r].syllables();
        if (syllables.empty()) {
            // the empty word is only expressible via a zero exponent
            out << p.generators.at(0) << "^0";
            continue;
        }
        bool first = true;
        for (const Syllable& s : syllables) {
            if (!first) out << "*";
            out << p.generators[s.generator];
            if (s.exponent != 1) out << "^" << s.exponent;
            first = false;
        }
    }
    out << " >";
    return out.str();
}

} // namespace

AlmostBieberbachDescriptor descriptor_from_json_text(const std::string& text) {
    return entry_from_json(parse_document(text, "descriptor"), false, "descriptor").descriptor;
}

CorpusEntry corpus_entry_from_json_text(const std::string& text) {
    return entry_from_json(parse_document(text, "entry"), true, "entry");
}

CorpusEntry load_corpus_entry(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string where = path.filename().string();
    return entry_from_json(parse_document(buffer.str(), where), true, where);
}

std::string descriptor_to_json(const AlmostBieberbachDescriptor& d) {
    json doc;
    doc["schema"] = 1;
    doc["label"] = d.label;
    doc["nilpotency_class"] = d.nilpotency_class;
    doc["orientable"] = d.orientable;
    doc["spin"] = d.spin;
    if (d.is_torus) doc["is_torus"] = true;
    if (d.crystal) {
        json c = crystal_json(*d.crystal, false);
        for (auto& [key, value] : c.items()) doc[key] = std::move(value);
    }
    if (d.presentation) doc["presentation"] = presentation_text(*d.presentation);
    if (d.underlying) {
        if (const auto* p = std::get_if<Presentation>(&*d.underlying))
            doc["underlying"] = json{{"presentation", presentation_text(*p)}};
        if (const auto* c = std::get_if<CrystalGroup>(&*d.underlying))
            doc["underlying"] = crystal_json(*c, true);
    }
    return doc.dump();
}

std::string form_class_to_json(const FormClass& c) { return form_class_json(c).dump(); }

std::string report_to_json(const ManifoldReport& r) {
    json doc{{"label", r.label},
             {"b1", r.b1},
             {"b2", r.b2},
             {"chi", r.chi},
             {"parity", r.parity},
             {"form", form_class_json(r.form)},
             {"route", std::string(to_string(r.route))},
             {"warnings", r.warnings}};
    return doc.dump();
}

std::string report_to_text(const ManifoldReport& r) {
    std::ostringstream out;
    out << "label:  " << r.label << '\n'
        << "b1:     " << r.b1 << '\n'
        << "b2:     " << r.b2 << '\n'
        << "chi:    " << r.chi << '\n'
        << "parity: " << r.parity << '\n'
        << "form:   " << r.form.to_text() << '\n'
        << "route:  " << to_string(r.route) << '\n';
    for (const std::string& w : r.warnings) out << "warning: " << w << '\n';
    return out.str();
}

} // namespace flatinv
