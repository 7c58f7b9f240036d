#ifndef BRAIDLOG_POLYLOG_HPP
#define BRAIDLOG_POLYLOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidlog/arnold.hpp"
#include "braidlog/braid.hpp"
#include "braidlog/freelie.hpp"
#include "braidlog/words.hpp"

namespace braidlog {

// Index (a, kappa) of a polylogarithm functional: a composition a_1..a_N of
// the weight with every a_i >= 1, and a non-decreasing kappa: {1..N} -> {1..n}.
// N = 0 is the counit.
struct PolylogIndex {
    std::vector<int> a;
    std::vector<int> kappa;

    int N() const { return static_cast<int>(a.size()); }
    int weight() const;
    void validate(int n) const;  // throws on malformed data

    std::string str() const;  // "a=(..),k=(..)"

    friend bool operator==(const PolylogIndex& x, const PolylogIndex& y) {
        return x.a == y.a && x.kappa == y.kappa;
    }
    friend bool operator<(const PolylogIndex& x, const PolylogIndex& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.kappa < y.kappa;
    }
};

// All indices of the given weight for an n-variable space, sorted.
std::vector<PolylogIndex> indices_of_weight(int n, int weight);

// The monomial X[b,w]^(a_N - 1) X[kappa(N),b] ... X[b,w]^(a_1 - 1) X[kappa(1),b]
// over the free kernel alphabet.
Word w_word(const BraidPresentation& P, const PolylogIndex& idx);
// Inverse where defined; nullopt exactly on words ending in X[b,w] or with
// X[i,b] left of X[j,b] for i < j.
std::optional<PolylogIndex> index_of(const BraidPresentation& P, const Word& w);
bool is_w_word(const BraidPresentation& P, const Word& w);

// (-1)^N times the coefficient of w_word(idx) in the free projection.
Rat pair_value(const BraidPresentation& P, const PolylogIndex& idx, const NCPoly& u);

// Independent oracle: peels the leftmost letter of a free-kernel word by the
// coaction recursion. Agrees with pair_value on the free kernel.
Rat pair_recursive(const BraidPresentation& P, const PolylogIndex& idx, const Word& f_word);
Rat pair_recursive(const BraidPresentation& P, const PolylogIndex& idx, const NCPoly& f_poly);

// The coaction on the functional indexed by idx: a list of (index, 1-form)
// pairs with the forms in the w[i,j] basis, aggregated by index.
std::vector<std::pair<PolylogIndex, FormVec>> coaction(const ArnoldSpace& A,
                                                       const PolylogIndex& idx);

// Iterated coaction down to weight zero, as a bar word over the 1-form
// alphabet; slot k of each bar word pairs against letter k of a monomial.
NCPoly bar_expansion(const ArnoldSpace& A, const PolylogIndex& idx);

// Duality pairing of a bar element against a free-kernel word, slot by slot.
Rat bar_pairing(const BraidPresentation& P, const NCPoly& bar, const Word& f_word);

// True iff u lies in the joint kernel of all the functionals: every
// coefficient of the free projection on a w-word vanishes.
bool in_J(const BraidPresentation& P, const NCPoly& u);

// Homogeneous basis of the Lie algebra in degree d: Lyndon bracketings of the
// free kernel together with the section image of the lower stage's basis.
std::vector<NCPoly> lie_basis(const BraidPresentation& P, int d);

// Dimension of the degree-d component of the kernel Lie algebra (elements of
// the Lie algebra annihilated by every functional), via the linear system
// over the tower Lyndon basis.
int kernel_lie_dims(int m, int d);

// --- the rank-3 free Lie algebra machinery (x = X[1,b], y = X[2,b], z = X[b,w]) ---

struct LambdaDims {
    int dim_lambda = 0;
    int dim_bracket = 0;   // [lambda, lambda]
    int dim_quotient = 0;  // lambda / [lambda, lambda]
};

// Multidegree (p,q,r) in (x,y,z). lambda is the ideal of elements with
// positive x- and y-degree; its basis at a multidegree is the Lyndon
// bracketing family.
std::vector<NCPoly> lambda_basis(int p, int q, int r);
LambdaDims lambda_dims(int p, int q, int r);
// [lambda,lambda] summed over all multidegrees of total degree d.
int lambda_bracket_dim_total(int d);

enum class PoincareWhich { LambdaAb, L5Dual };

// Coefficient of s1^p s2^q t^r in s1*s2 / ((1-s1-t)(1-s2-t)), by expanding
// the two geometric series exactly. Both named series coincide.
long long poincare_coeff(PoincareWhich which, int p, int q, int r);

struct DualBasesReport {
    int count_i = 0;
    int count_ii = 0;
    bool unitriangular = false;
    bool span_iii_equal = false;
};

// The three families at multidegree (p,q,r), p,q >= 1: (i) the w-words,
// (ii) products of ad_z powers, (iii) the fully bracketed family. Checks the
// change of basis (ii)->(i) is lower unitriangular in exponent-vector order
// and that (iii) spans the same space as (ii) after the w-word projection.
DualBasesReport dual_bases_check(int p, int q, int r);

// The ideal generated by brackets of the x-ideal and the y-ideal equals, in
// degree d, the span of Lyndon bracketings with positive x- and y-degree.
bool triple_kernel_check(int d);

}  // namespace braidlog

#endif
