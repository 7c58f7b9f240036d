#ifndef BRAIDLOG_BRAID_HPP
#define BRAIDLOG_BRAID_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidlog/arnold.hpp"
#include "braidlog/labels.hpp"
#include "braidlog/words.hpp"

namespace braidlog {

// Which adjacent inversion the rewriting engine resolves first. The two
// strategies must agree (confluence); tests compare them.
enum class RewriteOrder { Rightmost, Leftmost };

// Normal form of an enveloping-algebra element along the splitting into a
// free part and a left-multiple of the section image. free_part lives in the
// rank-(n+1) free algebra; tail_pbw is the remainder in tower coordinates,
// every word of it containing (and ending in) a positive-depth letter.
struct SplitForm {
    NCPoly free_part;
    NCPoly tail_pbw;
};

// The infinitesimal spherical pure braid algebra on m strands, presented by
// its n(n+3)/2 independent generators, with the tower splitting obtained by
// forgetting the label b, then relabeling and forgetting n, n-1, ... down to
// the trivial three-point algebra. All rewrite tables are built once in the
// constructor; instances are immutable and safely shared across threads.
class BraidPresentation {
public:
    static std::shared_ptr<const BraidPresentation> get(int m);

    const LabelSet& labels() const { return labels_; }
    int m() const { return labels_.m; }
    int n() const { return labels_.n; }

    // Independent generators X[i,j] in lex pair order (same order as the
    // 1-form basis, so the duality pairing matrix is the identity).
    const AlphabetPtr& indep() const { return indep_; }
    const std::vector<std::pair<int, int>>& indep_pairs() const { return pairs_; }
    int gen_index(int a, int b) const;  // -1 if {a,b} is not an independent pair

    // Free-kernel alphabet X[1,b] < ... < X[n,b] < X[b,w].
    const AlphabetPtr& f_alphabet() const { return falpha_; }

    // Tower (PBW) letters: depth-0 letters coincide with the f-alphabet;
    // positive depth letters generate the section image.
    const AlphabetPtr& pbw_alphabet() const { return pbw_; }
    int pbw_count() const { return pbw_->size(); }
    int pbw_depth(int letter) const { return pbw_depth_.at(static_cast<std::size_t>(letter)); }
    int max_depth() const { return max_depth_; }

    // Any generator X[a,b] of the full presentation resolved into the
    // independent set (degree-1 combination; zero for m = 3).
    NCPoly resolve(int a, int b) const;

    // letter-level change of basis
    const NCPoly& indep_letter_to_pbw(int letter) const { return indep_sub_.at(static_cast<std::size_t>(letter)); }
    const NCPoly& pbw_letter_to_indep(int letter) const { return pbw_expand_.at(static_cast<std::size_t>(letter)); }
    NCPoly to_indep(const NCPoly& pbw_poly) const;
    NCPoly f_to_indep(const NCPoly& f_poly) const;

    // Bracket [A,B] of tower letters with depth(A) > depth(B), expanded over
    // letters of depth(B).
    const NCPoly& letter_bracket(int a, int b) const;

    // Full tower normal form: all letters sorted by non-decreasing depth,
    // relations discharged through the letter brackets. The result is the
    // canonical PBW coordinate vector of the input.
    NCPoly to_pbw(const NCPoly& over_indep, RewriteOrder order = RewriteOrder::Rightmost) const;
    SplitForm normal_form(const NCPoly& over_indep, RewriteOrder order = RewriteOrder::Rightmost) const;
    // Component of the normal form in the free kernel; kills every left
    // multiple of the section image.
    NCPoly project_free(const NCPoly& over_indep, RewriteOrder order = RewriteOrder::Rightmost) const;

    NCPoly tail_to_indep(const SplitForm& sf) const { return to_indep(sf.tail_pbw); }

    // The adjoint action of a section generator on the free kernel, as a
    // derivation; g must be an independent generator X[a,i] (i<n) or X[i,j].
    NCPoly adjoint_on_free(int a, int b, const NCPoly& f_poly) const;

    // --- duality data ---
    // Omega in (generator ⊗ 1-form) coordinates; built from the coordinate
    // dlog expansion and converted, then checked to be the identity pairing.
    const std::vector<FormVec>& omega() const { return omega_arnold_; }
    // Projection of the 1-form side onto the free-kernel dual basis
    // (coordinates 0..n; n is the X[b,w] slot). Kills the section-side forms.
    std::vector<FormVec> free_side_projection() const;
    // Projection onto the 1-form basis of the (m-1)-point space; kills the
    // free-kernel forms.
    std::vector<FormVec> section_side_projection() const;
    bool omega_naturality_free() const;
    bool omega_naturality_section() const;

private:
    friend NCPoly section_s(const BraidPresentation& target, const NCPoly& elem);
    friend NCPoly forget_beta(const BraidPresentation& source, const NCPoly& elem);

    explicit BraidPresentation(int m);
    void build_letters();
    void build_brackets();
    void build_omega();

    LabelSet labels_;
    std::vector<std::pair<int, int>> pairs_;
    AlphabetPtr indep_;
    AlphabetPtr falpha_;
    AlphabetPtr pbw_;
    std::vector<int> pbw_depth_;
    int max_depth_ = 0;
    std::vector<NCPoly> indep_sub_;    // indep letter -> poly over pbw letters
    std::vector<NCPoly> pbw_expand_;   // pbw letter -> poly over indep letters
    std::vector<std::vector<NCPoly>> bracket_;  // [A][B], valid when depth(A)>depth(B)
    std::vector<FormVec> omega_arnold_;
    std::shared_ptr<const ArnoldSpace> arnold_;
    std::shared_ptr<const BraidPresentation> child_;  // m-1 tower stage, null for m=3

    // child pbw letter id <-> own pbw letter id (depth shifted by one)
    std::vector<int> lift_from_child_;
    std::vector<int> sec_image_;     // child indep letter -> own indep letter
    std::vector<NCPoly> forget_image_;  // own indep letter -> poly over child indep
};

// The section of the forget-b map: sends each generator of the (m-1)-point
// algebra to the generator of the same name, extended multiplicatively.
NCPoly section_s(const BraidPresentation& target, const NCPoly& elem_of_child);

// Forget the label b: generators touching b die, the others map to their
// relabeled counterparts. Left inverse of section_s.
NCPoly forget_beta(const BraidPresentation& source, const NCPoly& elem);

}  // namespace braidlog

#endif
