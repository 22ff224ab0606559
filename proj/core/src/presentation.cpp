#include "flatinv/presentation.hpp"

#include "flatinv/errors.hpp"
#include "flatinv/normal_form.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace flatinv {

Word::Word(std::vector<Syllable> syllables) {
    for (const auto& s : syllables) push(s);
}

void Word::push(const Syllable& s) {
    if (s.exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().generator == s.generator) {
        syllables_.back().exponent += s.exponent;
        if (syllables_.back().exponent == 0) syllables_.pop_back();
    } else {
        syllables_.push_back(s);
    }
}

Word Word::inverse() const {
    Word w;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        w.push({it->generator, -it->exponent});
    return w;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    for (const auto& s : rhs.syllables_) w.push(s);
    return w;
}

Word Word::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Word w;
    for (long i = 0; i < k; ++i) w = w * *this;
    return w;
}

Word Word::generator(std::size_t index, long exponent) {
    Word w;
    w.push({index, exponent});
    return w;
}

Word Word::commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

namespace {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Recursive-descent parser over the presentation grammar. Whitespace and
// '#'-to-end-of-line comments separate tokens everywhere.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Presentation parse() {
        Presentation p;
        expect('<');
        p.generators.push_back(parse_name());
        while (accept(',')) p.generators.push_back(parse_name());
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            for (std::size_t j = i + 1; j < p.generators.size(); ++j)
                if (p.generators[i] == p.generators[j])
                    throw DuplicateGeneratorError(p.generators[i]);
        pres_ = &p;
        expect('|');
        skip_blank();
        if (peek() != '>') {
            p.relators.push_back(parse_relation());
            while (accept(',')) p.relators.push_back(parse_relation());
        }
        expect('>');
        skip_blank();
        if (pos_ != text_.size())
            throw SyntaxError(pos_, "unexpected input after closing '>'");
        return p;
    }

private:
    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    char peek() {
        skip_blank();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw SyntaxError(pos_, std::string("expected '") + c + "'" +
                                        (pos_ < text_.size()
                                             ? std::string(", found '") + text_[pos_] + "'"
                                             : std::string(", found end of input")));
    }

    std::string parse_name() {
        skip_blank();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError(pos_, "expected a generator name");
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long parse_integer() {
        skip_blank();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits_start) throw SyntaxError(pos_, "expected an integer exponent");
        errno = 0;
        long value = std::strtol(text_.substr(start, pos_ - start).c_str(), nullptr, 10);
        if (errno == ERANGE) throw SyntaxError(start, "exponent out of range");
        return value;
    }

    Word parse_relation() {
        Word lhs = parse_word();
        if (accept('=')) {
            Word rhs = parse_word();
            return lhs * rhs.inverse();
        }
        return lhs;
    }

    Word parse_word() {
        Word w = parse_factor();
        while (accept('*')) w = w * parse_factor();
        return w;
    }

    Word parse_factor() {
        char c = peek();
        if (c == '[') {
            ++pos_;
            Word a = parse_word();
            expect(',');
            Word b = parse_word();
            expect(']');
            return Word::commutator(a, b);
        }
        if (c == '(') {
            ++pos_;
            Word w = parse_word();
            expect(')');
            if (accept('^')) return w.pow(parse_integer());
            return w;
        }
        std::string name = parse_name();
        std::size_t index = pres_->generator_index(name);
        long exponent = accept('^') ? parse_integer() : 1;
        return Word::generator(index, exponent);
    }

    const std::string& text_;
    const Presentation* pres_ = nullptr;
    std::size_t pos_ = 0;
};

} // namespace

std::size_t Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return i;
    throw UnknownGeneratorError(std::string(name));
}

void Presentation::validate() const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (!valid_name(generators[i]))
            throw SyntaxError(0, "invalid generator name '" + generators[i] + "'");
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i] == generators[j]) throw DuplicateGeneratorError(generators[i]);
    }
    for (const Word& w : relators)
        for (const Syllable& s : w.syllables())
            if (s.generator >= generators.size())
                throw Error("relator references generator index " + std::to_string(s.generator) +
                            " out of range");
}

Presentation parse_presentation(const std::string& text) {
    Parser parser(text);
    return parser.parse();
}

std::string AbelianInvariants::to_text() const {
    std::ostringstream out;
    bool first = true;
    if (free_rank == 1) {
        out << "Z";
        first = false;
    } else if (free_rank > 1) {
        out << "Z^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) out << " + ";
        out << "Z/" << t;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

IntMatrix relation_matrix(const Presentation& p) {
    p.validate();
    IntMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (const Syllable& s : p.relators[i].syllables()) m(i, s.generator) += s.exponent;
    return m;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
    const SNFResult snf = smith_normal_form(relation_matrix(p));
    AbelianInvariants inv;
    inv.free_rank = p.generators.size() - snf.divisors.size();
    for (const auto& d : snf.divisors)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

std::size_t first_betti(const Presentation& p) { return abelian_invariants(p).free_rank; }

} // namespace flatinv
