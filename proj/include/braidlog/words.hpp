#ifndef BRAIDLOG_WORDS_HPP
#define BRAIDLOG_WORDS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "braidlog/rational.hpp"

namespace braidlog {

// A finite ordered alphabet. Letter ids are indices into `names`; the
// declaration order is the total order used everywhere (Lyndon words,
// monomial orders, printing). Immutable once built.
struct Alphabet {
    std::vector<std::string> names;

    explicit Alphabet(std::vector<std::string> n);

    int size() const { return static_cast<int>(names.size()); }
    const std::string& name(int letter) const { return names.at(static_cast<std::size_t>(letter)); }
    // -1 if unknown
    int find(std::string_view name) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names == b.names; }
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

// A word in some alphabet: a finite sequence of letter ids. Ordering is
// degree-then-lex, which is also the canonical term order of NCPoly.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> letters) : ls_(std::move(letters)) {}

    static Word empty() { return Word(); }
    static Word single(int letter) { return Word({static_cast<std::uint8_t>(letter)}); }

    int degree() const { return static_cast<int>(ls_.size()); }
    bool is_empty() const { return ls_.empty(); }
    int letter(int i) const { return ls_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& letters() const { return ls_; }

    std::vector<int> multidegree(int alphabet_size) const;

    Word concat(const Word& o) const;
    Word prefix(int len) const;
    Word suffix_from(int start) const;
    Word appended(int letter) const;
    Word prepended(int letter) const;
    Word reversed() const;

    friend bool operator==(const Word& a, const Word& b) { return a.ls_ == b.ls_; }
    friend bool operator!=(const Word& a, const Word& b) { return a.ls_ != b.ls_; }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.ls_.size() != b.ls_.size()) return a.ls_.size() < b.ls_.size();
        return a.ls_ < b.ls_;
    }

private:
    std::vector<std::uint8_t> ls_;
};

// Noncommutative polynomial: a finite Rat-linear combination of words over a
// single alphabet. Zero coefficients are purged eagerly, so equality is
// structural equality of the term maps.
class NCPoly {
public:
    explicit NCPoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}

    static NCPoly zero(AlphabetPtr alpha) { return NCPoly(std::move(alpha)); }
    static NCPoly unit(AlphabetPtr alpha);                       // the empty word
    static NCPoly monomial(AlphabetPtr alpha, Word w, Rat c = Rat(1));
    static NCPoly letter(AlphabetPtr alpha, int id);

    const AlphabetPtr& alphabet() const { return alpha_; }
    const std::map<Word, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const Rat& c);
    Rat coefficient(const Word& w) const;

    // nullopt if not homogeneous (zero counts as homogeneous of any degree)
    std::optional<int> homogeneous_degree() const;
    std::optional<std::vector<int>> homogeneous_multidegree() const;

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rat& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Rat& c) { return a *= c; }
    friend NCPoly operator*(const Rat& c, NCPoly a) { return a *= c; }
    friend bool operator==(const NCPoly& a, const NCPoly& b);

    // Terms sorted by (degree, lex); coefficients as "p/q".
    std::string str() const;
    // Accepts the same grammar str() emits; whitespace-insensitive.
    // Letter tokens are the alphabet's names, factors joined by '*'.
    static NCPoly parse(const AlphabetPtr& alpha, std::string_view text);

private:
    AlphabetPtr alpha_;
    std::map<Word, Rat> terms_;
};

// Bilinear extension of word concatenation. Degree-additive.
NCPoly concat_mul(const NCPoly& p, const NCPoly& q);
// Bilinear extension of the shuffle of words. Commutative, associative,
// unit = empty word.
NCPoly shuffle_mul(const NCPoly& p, const NCPoly& q);
// All splittings w = uv of each term, with the term's coefficient.
std::vector<std::tuple<Word, Word, Rat>> deconcat(const NCPoly& p);
// concat_mul(p,q) - concat_mul(q,p)
NCPoly lie_bracket(const NCPoly& p, const NCPoly& q);

Rat coefficient(const NCPoly& p, const Word& w);

// Shuffle of two bare words as a multiset of interleavings.
NCPoly shuffle_words(const AlphabetPtr& alpha, const Word& u, const Word& v);

}  // namespace braidlog

#endif
