#ifndef BRAIDLOG_ARNOLD_HPP
#define BRAIDLOG_ARNOLD_HPP

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "braidlog/freelie.hpp"
#include "braidlog/labels.hpp"
#include "braidlog/words.hpp"

namespace braidlog {

// Sparse vector over the 1-form basis (or another small indexed basis).
using FormVec = std::map<int, Rat>;

// Degree <= 2 part of the cohomology ring of the m-point moduli space:
// logarithmic 1-forms w[i,j] in the standard basis, the quadratic relation
// quotient in degree 2, the wedge projections, the bar differential, and the
// dictionary between coordinate dlog forms and the 1-form basis.
class ArnoldSpace {
public:
    static std::shared_ptr<const ArnoldSpace> get(int m);

    const LabelSet& labels() const { return labels_; }
    int m() const { return labels_.m; }
    int n() const { return labels_.n; }

    // --- degree 1 ---
    const AlphabetPtr& forms() const { return forms_; }
    int form_count() const { return forms_->size(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    // -1 for the vanishing form w[a,b]; throws if a pair involves omega
    int form_index(int a, int b) const;

    // --- degree 2 ---
    int wedge_count() const { return static_cast<int>(wedge_pairs_.size()); }
    int wedge_index(int p, int q) const;  // requires p < q
    const std::vector<std::pair<int, int>>& wedge_pairs() const { return wedge_pairs_; }
    // One three-term relator per triple of labels in S \ {omega}, with the
    // vanishing form substituted by zero.
    const std::vector<std::map<int, Rat>>& relators() const { return relators_; }
    int a2_dim() const { return static_cast<int>(a2_cols_.size()); }
    // A2 basis = non-pivot wedge columns under the lex pair order
    const std::vector<int>& a2_basis_columns() const { return a2_cols_; }

    // pi_R(e_p ^ e_q) in A2 coordinates; antisymmetric, relators map to zero.
    std::map<int, Rat> wedge_project(int p, int q) const;
    std::map<int, Rat> wedge_project(const FormVec& u, const FormVec& v) const;

    // --- bar words ---
    // Bar elements are NCPolys over forms(); a word [w1|...|wr] is a tensor
    // word of basis 1-forms.
    // True iff every adjacent-slot wedge projection vanishes after grouping
    // by the surrounding (prefix, suffix) context.
    bool wedge_maps_vanish(const NCPoly& bar) const;

    // b ⊗ alpha -> (last letter moved across and wedged). Weight-1 step:
    // words ⊗ scalar -> words ⊗ 1-form; weight-2 step: ⊗ 1-form -> ⊗ A2.
    // The empty bar word maps to zero by convention.
    struct BarOne {
        std::map<Word, FormVec> terms;  // word ⊗ 1-form
        bool is_zero() const;
    };
    struct BarTwo {
        std::map<Word, std::map<int, Rat>> terms;  // word ⊗ A2 coords
        bool is_zero() const;
    };
    BarOne bar_d(const NCPoly& bar) const;
    BarTwo bar_d(const BarOne& b) const;

    // --- coordinate dlog forms ---
    // Basis: dx_k/x_k (k=1..n), du_{ij}/(u_{ij}-1) (1<=i<j<=n),
    // dz_i/(z_i-1) (i=1..n); same dimension as the 1-form basis.
    int cf_count() const { return forms_->size(); }
    int cf_dx(int k) const;        // k in 1..n
    int cf_du(int i, int j) const; // 1 <= i < j <= n
    int cf_dz1(int i) const;       // i in 1..n
    std::string cf_name(int cf) const;

    FormVec cf_to_arnold(int cf) const;
    // inverse direction, as explicit sums
    FormVec arnold_to_cf(int form) const;

private:
    explicit ArnoldSpace(int m);

    LabelSet labels_;
    std::vector<std::pair<int, int>> pairs_;
    AlphabetPtr forms_;
    std::vector<std::pair<int, int>> wedge_pairs_;
    std::map<std::pair<int, int>, int> wedge_index_;
    std::vector<std::map<int, Rat>> relators_;
    EchelonBuilder relator_ech_;
    std::vector<int> a2_cols_;
    std::map<int, int> a2_ordinal_;  // wedge column -> A2 ordinal
};

}  // namespace braidlog

#endif
