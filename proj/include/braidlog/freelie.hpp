#ifndef BRAIDLOG_FREELIE_HPP
#define BRAIDLOG_FREELIE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "braidlog/words.hpp"

namespace braidlog {

// A word strictly smaller than all of its proper rotations; standard
// factorization (longest proper Lyndon suffix) cached at construction.
struct LyndonWord {
    Word word;
    // valid when degree >= 2: word = left.concat(right), right the longest
    // proper Lyndon suffix
    Word left, right;
};

bool is_lyndon(const Word& w);

// All Lyndon words of the given multidegree, sorted. Throws on an empty
// alphabet or an all-zero multidegree.
std::vector<LyndonWord> lyndon_words(const AlphabetPtr& alpha, const std::vector<int>& multidegree);
// All Lyndon words of total degree d, sorted.
std::vector<LyndonWord> lyndon_words_total(const AlphabetPtr& alpha, int degree);

// Expansion of the standard bracketing into the free associative algebra.
// Leading (lexicographically smallest) word is the Lyndon word itself with
// coefficient 1.
NCPoly bracketing(const AlphabetPtr& alpha, const LyndonWord& l);

// Dynkin-Specht-Wever criterion: p homogeneous of degree d>=1 is a Lie
// element iff the left-to-right bracketing map sends it to d*p.
bool dynkin_test(const NCPoly& p);

// Left-to-right bracketing [[...[w1,w2],w3]...,wd] extended linearly.
NCPoly left_bracketing_map(const NCPoly& p);

// Necklace count (1/d) sum_{e|d} mu(e) k^{d/e}: the rank of the degree-d
// component of the free Lie algebra on k letters.
long long necklace_count(int k, int d);

// All words of the multidegree / total degree, sorted degree-then-lex.
std::vector<Word> monomials_of_multidegree(const AlphabetPtr& alpha, const std::vector<int>& md);
std::vector<Word> monomials_of_degree(const AlphabetPtr& alpha, int degree);

// --- exact linear algebra -------------------------------------------------

// Sparse row over integer coefficients, entries sorted by column.
// Kept primitive (content 1) with positive leading coefficient.
using SparseIntRow = std::vector<std::pair<int, mpz_class>>;

// Incremental reduced echelon form over Q, computed fraction-free: rows are
// primitive integer vectors, elimination uses cross-multiplication followed
// by content removal, and the row set is kept fully back-substituted. For a
// fixed row space the resulting rows are canonical regardless of insertion
// order.
class EchelonBuilder {
public:
    explicit EchelonBuilder(int ncols) : ncols_(ncols) {}

    // Returns true if the vector enlarged the span.
    bool add(const std::vector<std::pair<int, Rat>>& v);
    bool add_int(SparseIntRow v);

    // Residue of v after elimination against the current rows (supported on
    // non-pivot columns only). Empty iff v lies in the span.
    SparseIntRow reduce(const std::vector<std::pair<int, Rat>>& v) const;
    bool contains(const std::vector<std::pair<int, Rat>>& v) const { return reduce(v).empty(); }

    // Same elimination in rational arithmetic, preserving scale: the unique
    // vector congruent to v modulo the row space that vanishes on all pivot
    // columns. This is a linear map of v.
    std::map<int, Rat> project_residue(const std::map<int, Rat>& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const std::map<int, int>& pivots() const { return pivot_row_; }  // col -> row idx
    // Rows sorted by pivot column (canonical form).
    std::vector<SparseIntRow> sorted_rows() const;

    friend bool operator==(const EchelonBuilder& a, const EchelonBuilder& b) {
        return a.ncols_ == b.ncols_ && a.sorted_rows() == b.sorted_rows();
    }

private:
    int ncols_;
    std::vector<SparseIntRow> rows_;
    std::map<int, int> pivot_row_;
};

SparseIntRow to_int_row(const std::vector<std::pair<int, Rat>>& v);

// A multigraded component of a subspace of the free associative algebra:
// basis vectors all homogeneous of one multidegree (or one total degree),
// with a canonical echelonized coordinate matrix against the enumerated
// monomial list.
class GradedSubspace {
public:
    // All vectors must be homogeneous of the same multidegree.
    static GradedSubspace span(const AlphabetPtr& alpha, const std::vector<NCPoly>& vectors);
    // Same, but grading only by total degree (monomials of mixed multidegree).
    static GradedSubspace span_by_degree(const AlphabetPtr& alpha, int degree,
                                         const std::vector<NCPoly>& vectors);

    int dim() const { return ech_.rank(); }
    const std::vector<Word>& monomials() const { return monos_; }
    const AlphabetPtr& alphabet() const { return alpha_; }
    const std::vector<int>& multidegree() const { return multidegree_; }
    const EchelonBuilder& echelon() const { return ech_; }

    bool contains(const NCPoly& p) const;
    std::vector<std::pair<int, Rat>> coordinates(const NCPoly& p) const;

    // Adds p to the span; true if the dimension grew.
    bool absorb(const NCPoly& p);

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
        return a.monos_ == b.monos_ && a.ech_ == b.ech_;
    }

    friend GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);

private:
    GradedSubspace(AlphabetPtr alpha, std::vector<int> md, std::vector<Word> monos)
        : alpha_(std::move(alpha)),
          multidegree_(std::move(md)),
          monos_(std::move(monos)),
          ech_(static_cast<int>(monos_.size())) {
        for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = static_cast<int>(i);
    }

    AlphabetPtr alpha_;
    std::vector<int> multidegree_;  // empty when graded by total degree only
    std::vector<Word> monos_;
    std::map<Word, int> index_;
    EchelonBuilder ech_;
};

// Intersection computed by the Zassenhaus double-width trick. Both spaces
// must share ambient monomials.
GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);

// dim(a) - dim(b); throws unless b is contained in a.
int quotient_dim(const GradedSubspace& a, const GradedSubspace& b);

}  // namespace braidlog

#endif
