#include "braidlog/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace braidlog {

Alphabet::Alphabet(std::vector<std::string> n) : names(std::move(n)) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("Alphabet: duplicate letter '" + names[i] + "'");
    if (names.size() > 200) throw std::invalid_argument("Alphabet: too many letters");
}

int Alphabet::find(std::string_view n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
    return -1;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
}

std::vector<int> Word::multidegree(int alphabet_size) const {
    std::vector<int> md(static_cast<std::size_t>(alphabet_size), 0);
    for (auto l : ls_) md.at(l)++;
    return md;
}

Word Word::concat(const Word& o) const {
    std::vector<std::uint8_t> r = ls_;
    r.insert(r.end(), o.ls_.begin(), o.ls_.end());
    return Word(std::move(r));
}

Word Word::prefix(int len) const {
    return Word(std::vector<std::uint8_t>(ls_.begin(), ls_.begin() + len));
}

Word Word::suffix_from(int start) const {
    return Word(std::vector<std::uint8_t>(ls_.begin() + start, ls_.end()));
}

Word Word::appended(int letter) const {
    std::vector<std::uint8_t> r = ls_;
    r.push_back(static_cast<std::uint8_t>(letter));
    return Word(std::move(r));
}

Word Word::prepended(int letter) const {
    std::vector<std::uint8_t> r;
    r.reserve(ls_.size() + 1);
    r.push_back(static_cast<std::uint8_t>(letter));
    r.insert(r.end(), ls_.begin(), ls_.end());
    return Word(std::move(r));
}

Word Word::reversed() const {
    std::vector<std::uint8_t> r(ls_.rbegin(), ls_.rend());
    return Word(std::move(r));
}

NCPoly NCPoly::unit(AlphabetPtr alpha) {
    NCPoly p(std::move(alpha));
    p.add_term(Word::empty(), Rat(1));
    return p;
}

NCPoly NCPoly::monomial(AlphabetPtr alpha, Word w, Rat c) {
    NCPoly p(std::move(alpha));
    p.add_term(w, c);
    return p;
}

NCPoly NCPoly::letter(AlphabetPtr alpha, int id) {
    if (id < 0 || id >= alpha->size()) throw std::out_of_range("NCPoly::letter: bad id");
    return monomial(std::move(alpha), Word::single(id));
}

void NCPoly::add_term(const Word& w, const Rat& c) {
    if (c.is_zero()) return;
    for (auto l : w.letters())
        if (l >= alpha_->size()) throw std::out_of_range("NCPoly: letter outside alphabet");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> NCPoly::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [w, c] : terms_) {
        if (!d) d = w.degree();
        else if (*d != w.degree()) return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

std::optional<std::vector<int>> NCPoly::homogeneous_multidegree() const {
    std::optional<std::vector<int>> md;
    for (const auto& [w, c] : terms_) {
        auto m = w.multidegree(alpha_->size());
        if (!md) md = m;
        else if (*md != m) return std::nullopt;
    }
    if (!md) md = std::vector<int>(static_cast<std::size_t>(alpha_->size()), 0);
    return md;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(alpha_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

static void check_same_alphabet(const NCPoly& a, const NCPoly& b) {
    if (a.alphabet() != b.alphabet() && !(*a.alphabet() == *b.alphabet()))
        throw std::invalid_argument("NCPoly: alphabet mismatch");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    check_same_alphabet(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    check_same_alphabet(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    return (*a.alphabet() == *b.alphabet()) && a.terms() == b.terms();
}

NCPoly concat_mul(const NCPoly& p, const NCPoly& q) {
    check_same_alphabet(p, q);
    NCPoly r(p.alphabet());
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) r.add_term(u.concat(v), cu * cv);
    return r;
}

NCPoly shuffle_words(const AlphabetPtr& alpha, const Word& u, const Word& v) {
    // Dynamic program over prefix pairs; entry (i,j) holds the shuffle of
    // u[0..i) and v[0..j).
    const int a = u.degree(), b = v.degree();
    std::vector<NCPoly> row(static_cast<std::size_t>(b) + 1, NCPoly(alpha));
    row[0] = NCPoly::unit(alpha);
    for (int j = 1; j <= b; ++j) {
        NCPoly next(alpha);
        for (const auto& [w, c] : row[static_cast<std::size_t>(j - 1)].terms())
            next.add_term(w.appended(v.letter(j - 1)), c);
        row[static_cast<std::size_t>(j)] = std::move(next);
    }
    for (int i = 1; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
            NCPoly next(alpha);
            for (const auto& [w, c] : row[static_cast<std::size_t>(j)].terms())
                next.add_term(w.appended(u.letter(i - 1)), c);
            if (j > 0)
                for (const auto& [w, c] : row[static_cast<std::size_t>(j - 1)].terms())
                    next.add_term(w.appended(v.letter(j - 1)), c);
            row[static_cast<std::size_t>(j)] = std::move(next);
        }
    }
    return row[static_cast<std::size_t>(b)];
}

NCPoly shuffle_mul(const NCPoly& p, const NCPoly& q) {
    check_same_alphabet(p, q);
    NCPoly r(p.alphabet());
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) {
            NCPoly s = shuffle_words(p.alphabet(), u, v);
            s *= cu * cv;
            r += s;
        }
    return r;
}

std::vector<std::tuple<Word, Word, Rat>> deconcat(const NCPoly& p) {
    std::vector<std::tuple<Word, Word, Rat>> out;
    for (const auto& [w, c] : p.terms())
        for (int k = 0; k <= w.degree(); ++k) out.emplace_back(w.prefix(k), w.suffix_from(k), c);
    return out;
}

NCPoly lie_bracket(const NCPoly& p, const NCPoly& q) {
    return concat_mul(p, q) - concat_mul(q, p);
}

Rat coefficient(const NCPoly& p, const Word& w) { return p.coefficient(w); }

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (w.is_empty()) {
            os << a.str();
            continue;
        }
        os << a.str();
        for (auto l : w.letters()) os << "*" << alpha_->name(l);
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + why);
    }
};

// unsigned integer literal
std::string read_digits(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected digits");
    return std::string(c.s.substr(start, c.i - start));
}

// positive rational "p" or "p/q"
Rat read_rat(Cursor& c) {
    std::string num = read_digits(c);
    if (c.peek() == '/') {
        ++c.i;
        std::string den = read_digits(c);
        return Rat::from_string(num + "/" + den);
    }
    return Rat::from_string(num);
}

// letter token, e.g. "X[1,b]"; longest alphabet name matching at the cursor
int read_letter(Cursor& c, const Alphabet& alpha) {
    c.skip_ws();
    int best = -1;
    std::size_t best_len = 0;
    for (int id = 0; id < alpha.size(); ++id) {
        const std::string& n = alpha.name(id);
        if (n.size() > best_len && c.s.substr(c.i, n.size()) == n) {
            best = id;
            best_len = n.size();
        }
    }
    if (best < 0) c.fail("expected a generator name");
    c.i += best_len;
    return best;
}

}  // namespace

NCPoly NCPoly::parse(const AlphabetPtr& alpha, std::string_view text) {
    Cursor c{text};
    NCPoly out(alpha);
    if (c.done()) c.fail("empty input");
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        first = false;
        c.skip_ws();
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = read_rat(c);
            have_coeff = true;
        }
        std::vector<std::uint8_t> letters;
        bool expect_factor = !have_coeff;
        while (true) {
            if (c.peek() == '*') {
                ++c.i;
                expect_factor = true;
            } else if (!expect_factor) {
                break;
            }
            letters.push_back(static_cast<std::uint8_t>(read_letter(c, *alpha)));
            expect_factor = false;
        }
        if (sign < 0) coeff = -coeff;
        out.add_term(Word(std::move(letters)), coeff);
    }
    return out;
}

}  // namespace braidlog
