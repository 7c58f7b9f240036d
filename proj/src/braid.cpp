#include "braidlog/braid.hpp"

#include <mutex>
#include <stdexcept>

namespace braidlog {

namespace {

void accum_form(FormVec& m, int k, const Rat& c) {
    auto it = m.find(k);
    if (it == m.end()) {
        if (!c.is_zero()) m.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace

BraidPresentation::BraidPresentation(int m) : labels_(m), pairs_(basis_pairs(labels_)) {
    arnold_ = ArnoldSpace::get(m);
    build_letters();
    build_brackets();
    build_omega();
}

std::shared_ptr<const BraidPresentation> BraidPresentation::get(int m) {
    if (m < 3) throw std::invalid_argument("BraidPresentation: need m >= 3");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const BraidPresentation>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (int k = 3; k <= m; ++k) {
        if (cache.count(k)) continue;
        auto sp = std::shared_ptr<BraidPresentation>(new BraidPresentation(k));
        if (k > 3) sp->child_ = cache.at(k - 1);
        // the tower tables need the child; build them now that it is linked
        sp->build_brackets();
        cache.emplace(k, std::shared_ptr<const BraidPresentation>(sp));
    }
    return cache.at(m);
}

int BraidPresentation::gen_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i] == std::make_pair(a, b)) return static_cast<int>(i);
    return -1;
}

void BraidPresentation::build_letters() {
    const int n = labels_.n;

    std::vector<std::string> gnames;
    gnames.reserve(pairs_.size());
    for (auto [a, b] : pairs_) gnames.push_back("X[" + labels_.name(a) + "," + labels_.name(b) + "]");
    indep_ = make_alphabet(std::move(gnames));

    std::vector<std::string> fnames;
    for (int i = 1; i <= n; ++i) fnames.push_back("X[" + std::to_string(i) + ",b]");
    fnames.push_back("X[b,w]");
    falpha_ = make_alphabet(std::move(fnames));

    // tower letters, by depth: at depth 0 the free-kernel letters; at depth
    // d >= 1 the X[i,n+1-d] generators (i <= n-d) followed by the depth-d
    // z-letter (the image of X[b,w] from d levels up the tower)
    std::vector<std::string> pnames;
    for (int i = 0; i <= n; ++i) {
        pnames.push_back(falpha_->name(i));
        pbw_depth_.push_back(0);
    }
    for (int d = 1; d <= n - 1; ++d) {
        const int j = n + 1 - d;
        for (int i = 1; i <= n - d; ++i) {
            pnames.push_back("X[" + std::to_string(i) + "," + std::to_string(j) + "]");
            pbw_depth_.push_back(d);
        }
        pnames.push_back(d == n - 1 ? "X[a,1]" : "Z" + std::to_string(d));
        pbw_depth_.push_back(d);
    }
    max_depth_ = n >= 1 ? n - 1 : 0;
    pbw_ = make_alphabet(std::move(pnames));

    // block offsets and z-letter ids per depth
    auto block_offset = [&](int d) { return d == 0 ? 0 : (n + 1) + (d - 1) * n - (d - 1) * d / 2; };
    auto z_id = [&](int d) { return block_offset(d) + (d == 0 ? n : n - d); };
    auto x_letter = [&](int i, int j) {  // 1 <= i < j <= n+1 (j = n+1 means the b column)
        if (j == n + 1) return i - 1;
        const int d = n + 1 - j;
        return block_offset(d) + (i - 1);
    };

    // independent letter -> tower letters
    indep_sub_.assign(pairs_.size(), NCPoly(pbw_));
    for (std::size_t g = 0; g < pairs_.size(); ++g) {
        auto [a, b] = pairs_[g];
        NCPoly& out = indep_sub_[g];
        if (b == labels_.beta()) {
            out += NCPoly::letter(pbw_, x_letter(a, n + 1));
        } else if (a != labels_.alpha()) {
            out += NCPoly::letter(pbw_, x_letter(a, b));
        } else {
            // X[a,j] = Z_{n-j} - Z_{n-j+1} - sum_{i<j} X[i,j]
            const int j = b;
            out += NCPoly::letter(pbw_, z_id(n - j));
            if (n - j + 1 <= n - 1) out -= NCPoly::letter(pbw_, z_id(n - j + 1));
            for (int i = 1; i < j; ++i) out -= NCPoly::letter(pbw_, x_letter(i, j));
        }
    }

    // tower letter -> independent letters
    pbw_expand_.assign(static_cast<std::size_t>(pbw_->size()), NCPoly(indep_));
    for (int p = 0; p < pbw_->size(); ++p) {
        const int d = pbw_depth_[static_cast<std::size_t>(p)];
        NCPoly& out = pbw_expand_[static_cast<std::size_t>(p)];
        const int off = block_offset(d);
        const int xcount = d == 0 ? n : n - d;
        if (p - off < xcount) {
            const int i = p - off + 1;
            const int j = d == 0 ? labels_.beta() : n + 1 - d;
            out += NCPoly::letter(indep_, gen_index(i, j));
        } else {
            // z-letter of depth d: sum of X[a,i] (i <= n-d) and X[i,j] (j <= n-d)
            for (int i = 1; i <= n - d; ++i) out += NCPoly::letter(indep_, gen_index(0, i));
            for (int i = 1; i <= n - d; ++i)
                for (int j = i + 1; j <= n - d; ++j) out += NCPoly::letter(indep_, gen_index(i, j));
        }
    }
}

void BraidPresentation::build_brackets() {
    const int n = labels_.n;
    const int P = pbw_->size();
    bracket_.assign(static_cast<std::size_t>(P),
                    std::vector<NCPoly>(static_cast<std::size_t>(P), NCPoly(pbw_)));
    if (P == 0) return;

    auto block_offset = [&](int d) { return d == 0 ? 0 : (n + 1) + (d - 1) * n - (d - 1) * d / 2; };

    // [g, X[k,b]] for an independent section generator g, over depth-0 letters
    auto base_ad = [&](int a, int b, int k) {
        NCPoly out(pbw_);
        auto comm = [&](int p, int q) {  // word pq - word qp
            NCPoly r(pbw_);
            r.add_term(Word::single(p).appended(q), Rat(1));
            r.add_term(Word::single(q).appended(p), Rat(-1));
            return r;
        };
        const int ek = k - 1;  // letter id of X[k,b]
        if (a == labels_.alpha()) {
            if (b == k) {
                for (int j = 1; j <= n; ++j)
                    if (j != k) out += comm(j - 1, ek);
                out += comm(n, ek);  // z-letter
            }
        } else {
            if (a == k) out -= comm(b - 1, ek);
            else if (b == k) out -= comm(a - 1, ek);
        }
        return out;
    };

    for (int A = 0; A < P; ++A) {
        const int dA = pbw_depth_[static_cast<std::size_t>(A)];
        for (int B = 0; B < P; ++B) {
            const int dB = pbw_depth_[static_cast<std::size_t>(B)];
            if (dA <= dB) continue;
            if (dB == 0) {
                if (B == n) continue;  // z-letter of the kernel is central for the section
                NCPoly acc(pbw_);
                for (const auto& [w, c] : pbw_expand_[static_cast<std::size_t>(A)].terms()) {
                    auto [a, b] = pairs_[static_cast<std::size_t>(w.letter(0))];
                    NCPoly t = base_ad(a, b, B + 1);
                    t *= c;
                    acc += t;
                }
                bracket_[static_cast<std::size_t>(A)][static_cast<std::size_t>(B)] = std::move(acc);
            } else {
                if (!child_) continue;  // populated on a second pass once the child is linked
                // both letters live dB levels down the tower; delegate and lift
                auto child_block = [&](int d) {
                    const int cn = n - 1;
                    return d == 0 ? 0 : (cn + 1) + (d - 1) * cn - (d - 1) * d / 2;
                };
                auto drop = [&](int id) {
                    const int d = pbw_depth_[static_cast<std::size_t>(id)];
                    return child_block(d - 1) + (id - block_offset(d));
                };
                auto lift = [&](int id) {
                    const int cd = child_->pbw_depth_[static_cast<std::size_t>(id)];
                    return block_offset(cd + 1) + (id - child_block(cd));
                };
                const NCPoly& cb = child_->bracket_[static_cast<std::size_t>(drop(A))]
                                                   [static_cast<std::size_t>(drop(B))];
                NCPoly acc(pbw_);
                for (const auto& [w, c] : cb.terms()) {
                    std::vector<std::uint8_t> ls;
                    for (auto l : w.letters()) ls.push_back(static_cast<std::uint8_t>(lift(l)));
                    acc.add_term(Word(std::move(ls)), c);
                }
                bracket_[static_cast<std::size_t>(A)][static_cast<std::size_t>(B)] = std::move(acc);
            }
        }
    }
}

const NCPoly& BraidPresentation::letter_bracket(int a, int b) const {
    if (pbw_depth_.at(static_cast<std::size_t>(a)) <= pbw_depth_.at(static_cast<std::size_t>(b)))
        throw std::invalid_argument("letter_bracket: need depth(a) > depth(b)");
    return bracket_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

NCPoly BraidPresentation::resolve(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (!labels_.valid(a) || !labels_.valid(b) || a == b)
        throw std::invalid_argument("resolve: bad label pair");
    const int n = labels_.n;
    NCPoly out(indep_);
    int g = gen_index(a, b);
    if (g >= 0) {
        out += NCPoly::letter(indep_, g);
        return out;
    }
    if (a == labels_.alpha() && b == labels_.beta()) {
        for (int i = 1; i <= n; ++i) out -= NCPoly::letter(indep_, gen_index(i, labels_.beta()));
        for (int i = 1; i <= n; ++i) out -= NCPoly::letter(indep_, gen_index(0, i));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out -= NCPoly::letter(indep_, gen_index(i, j));
        return out;
    }
    if (a == labels_.beta() && b == labels_.omega()) {
        for (int i = 1; i <= n; ++i) out += NCPoly::letter(indep_, gen_index(0, i));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out += NCPoly::letter(indep_, gen_index(i, j));
        return out;
    }
    if (a == labels_.alpha() && b == labels_.omega()) {
        for (int i = 1; i <= n; ++i) out += NCPoly::letter(indep_, gen_index(i, labels_.beta()));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out += NCPoly::letter(indep_, gen_index(i, j));
        return out;
    }
    // (i, omega)
    const int i = a;
    out -= NCPoly::letter(indep_, gen_index(0, i));
    for (int j = 1; j <= n; ++j)
        if (j != i) out -= NCPoly::letter(indep_, gen_index(std::min(i, j), std::max(i, j)));
    out -= NCPoly::letter(indep_, gen_index(i, labels_.beta()));
    return out;
}

NCPoly BraidPresentation::to_indep(const NCPoly& pbw_poly) const {
    NCPoly out(indep_);
    for (const auto& [w, c] : pbw_poly.terms()) {
        NCPoly prod = NCPoly::unit(indep_);
        for (auto l : w.letters()) prod = concat_mul(prod, pbw_expand_[l]);
        prod *= c;
        out += prod;
    }
    return out;
}

NCPoly BraidPresentation::f_to_indep(const NCPoly& f_poly) const {
    NCPoly out(indep_);
    for (const auto& [w, c] : f_poly.terms()) {
        NCPoly prod = NCPoly::unit(indep_);
        for (auto l : w.letters()) prod = concat_mul(prod, pbw_expand_[l]);  // f ids == depth-0 ids
        prod *= c;
        out += prod;
    }
    return out;
}

NCPoly BraidPresentation::to_pbw(const NCPoly& p, RewriteOrder order) const {
    if (!(*p.alphabet() == *indep_)) throw std::invalid_argument("to_pbw: expected element over the generator alphabet");
    NCPoly out(pbw_);
    std::vector<std::pair<Word, Rat>> stack;
    for (const auto& [w, c] : p.terms()) {
        NCPoly prod = NCPoly::unit(pbw_);
        for (auto l : w.letters()) prod = concat_mul(prod, indep_sub_[l]);
        for (const auto& [ww, cc] : prod.terms()) stack.emplace_back(ww, c * cc);
    }
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        const int d = w.degree();
        int pos = -1;
        if (order == RewriteOrder::Rightmost) {
            for (int i = d - 2; i >= 0; --i)
                if (pbw_depth_[w.letter(i)] > pbw_depth_[w.letter(i + 1)]) {
                    pos = i;
                    break;
                }
        } else {
            for (int i = 0; i + 1 < d; ++i)
                if (pbw_depth_[w.letter(i)] > pbw_depth_[w.letter(i + 1)]) {
                    pos = i;
                    break;
                }
        }
        if (pos < 0) {
            out.add_term(w, c);
            continue;
        }
        const int A = w.letter(pos), B = w.letter(pos + 1);
        {
            std::vector<std::uint8_t> sw = w.letters();
            std::swap(sw[static_cast<std::size_t>(pos)], sw[static_cast<std::size_t>(pos + 1)]);
            stack.emplace_back(Word(std::move(sw)), c);
        }
        const NCPoly& br = bracket_[static_cast<std::size_t>(A)][static_cast<std::size_t>(B)];
        for (const auto& [bw, bc] : br.terms()) {
            std::vector<std::uint8_t> nw;
            nw.reserve(static_cast<std::size_t>(d));
            for (int i = 0; i < pos; ++i) nw.push_back(static_cast<std::uint8_t>(w.letter(i)));
            for (auto l : bw.letters()) nw.push_back(l);
            for (int i = pos + 2; i < d; ++i) nw.push_back(static_cast<std::uint8_t>(w.letter(i)));
            stack.emplace_back(Word(std::move(nw)), c * bc);
        }
    }
    return out;
}

SplitForm BraidPresentation::normal_form(const NCPoly& p, RewriteOrder order) const {
    NCPoly canon = to_pbw(p, order);
    SplitForm sf{NCPoly(falpha_), NCPoly(pbw_)};
    for (const auto& [w, c] : canon.terms()) {
        bool pure = true;
        for (auto l : w.letters())
            if (pbw_depth_[l] > 0) {
                pure = false;
                break;
            }
        if (pure) sf.free_part.add_term(w, c);  // depth-0 ids coincide with f ids
        else sf.tail_pbw.add_term(w, c);
    }
    return sf;
}

NCPoly BraidPresentation::project_free(const NCPoly& p, RewriteOrder order) const {
    return normal_form(p, order).free_part;
}

NCPoly BraidPresentation::adjoint_on_free(int a, int b, const NCPoly& f_poly) const {
    if (a > b) std::swap(a, b);
    const int n = labels_.n;
    const bool is_s_gen = (a == labels_.alpha() && b >= 1 && b <= n - 1) ||
                          (a >= 1 && a < b && b <= n);
    if (!is_s_gen) throw std::invalid_argument("adjoint_on_free: not a section generator");
    if (!(*f_poly.alphabet() == *falpha_))
        throw std::invalid_argument("adjoint_on_free: expected element over the free kernel alphabet");

    auto ad_letter = [&](int fl) {
        NCPoly out(falpha_);
        if (fl == n) return out;  // X[b,w] is killed
        const int k = fl + 1;
        auto comm = [&](int p, int q) {
            NCPoly r(falpha_);
            r.add_term(Word::single(p).appended(q), Rat(1));
            r.add_term(Word::single(q).appended(p), Rat(-1));
            return r;
        };
        if (a == labels_.alpha()) {
            if (b == k) {
                for (int j = 1; j <= n; ++j)
                    if (j != k) out += comm(j - 1, fl);
                out += comm(n, fl);
            }
        } else {
            if (a == k) out -= comm(b - 1, fl);
            else if (b == k) out -= comm(a - 1, fl);
        }
        return out;
    };

    NCPoly out(falpha_);
    for (const auto& [w, c] : f_poly.terms()) {
        for (int pos = 0; pos < w.degree(); ++pos) {
            NCPoly mid = ad_letter(w.letter(pos));
            if (mid.is_zero()) continue;
            for (const auto& [mw, mc] : mid.terms()) {
                std::vector<std::uint8_t> nw;
                for (int i = 0; i < pos; ++i) nw.push_back(static_cast<std::uint8_t>(w.letter(i)));
                for (auto l : mw.letters()) nw.push_back(l);
                for (int i = pos + 1; i < w.degree(); ++i)
                    nw.push_back(static_cast<std::uint8_t>(w.letter(i)));
                out.add_term(Word(std::move(nw)), c * mc);
            }
        }
    }
    return out;
}

void BraidPresentation::build_omega() {
    const int n = labels_.n;
    const auto& A = *arnold_;
    omega_arnold_.assign(pairs_.size(), FormVec{});

    // the coordinate dlog expansion over the tower spanning set
    std::vector<std::pair<NCPoly, std::map<int, Rat>>> rows;
    for (int i = 1; i <= n - 1; ++i) {
        std::map<int, Rat> cf;
        for (int k = i; k <= n - 1; ++k) cf[A.cf_dx(k)] = Rat(1);
        rows.emplace_back(NCPoly::letter(indep_, gen_index(0, i)), std::move(cf));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::map<int, Rat> cf;
            for (int k = j; k <= n - 1; ++k) cf[A.cf_dx(k)] = Rat(1);
            cf[A.cf_du(i, j)] = Rat(1);
            rows.emplace_back(NCPoly::letter(indep_, gen_index(i, j)), std::move(cf));
        }
    for (int i = 1; i <= n; ++i) {
        std::map<int, Rat> cf{{A.cf_dz1(i), Rat(1)}};
        rows.emplace_back(NCPoly::letter(indep_, gen_index(i, labels_.beta())), std::move(cf));
    }
    if (n >= 1) {
        std::map<int, Rat> cf{{A.cf_dx(n), Rat(1)}};
        rows.emplace_back(resolve(labels_.beta(), labels_.omega()), std::move(cf));
    }

    for (const auto& [gens, cf] : rows)
        for (const auto& [gw, gc] : gens.terms())
            for (const auto& [cfi, cfc] : cf)
                for (const auto& [form, fc] : A.cf_to_arnold(cfi))
                    accum_form(omega_arnold_[static_cast<std::size_t>(gw.letter(0))], form,
                               gc * cfc * fc);

    for (std::size_t g = 0; g < omega_arnold_.size(); ++g) {
        FormVec expect{{static_cast<int>(g), Rat(1)}};
        if (omega_arnold_[g] != expect)
            throw std::logic_error("omega: coordinate expansion is not dual to the generators");
    }
}

std::vector<FormVec> BraidPresentation::free_side_projection() const {
    const int n = labels_.n;
    const auto& A = *arnold_;
    std::vector<FormVec> out(static_cast<std::size_t>(A.form_count()));
    for (int f = 0; f < A.form_count(); ++f) {
        for (const auto& [cf, c] : A.arnold_to_cf(f)) {
            for (int i = 1; i <= n; ++i)
                if (cf == A.cf_dz1(i)) accum_form(out[static_cast<std::size_t>(f)], i - 1, c);
            if (n >= 1 && cf == A.cf_dx(n)) accum_form(out[static_cast<std::size_t>(f)], n, c);
        }
    }
    return out;
}

std::vector<FormVec> BraidPresentation::section_side_projection() const {
    const int n = labels_.n;
    const auto& A = *arnold_;
    auto childA = ArnoldSpace::get(labels_.m - 1);
    std::vector<FormVec> out(static_cast<std::size_t>(A.form_count()));
    for (int f = 0; f < A.form_count(); ++f) {
        FormVec& acc = out[static_cast<std::size_t>(f)];
        for (const auto& [cf, c] : A.arnold_to_cf(f)) {
            // dx_k (k<n) -> dx'_k; du_{ij} (j<n) -> du'_{ij}; du_{in} -> dz'_i;
            // dz_i/(z_i-1) and dx_n drop
            for (int k = 1; k <= n - 1; ++k)
                if (cf == A.cf_dx(k))
                    for (const auto& [fm, fc] : childA->cf_to_arnold(childA->cf_dx(k)))
                        accum_form(acc, fm, c * fc);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (cf == A.cf_du(i, j)) {
                        if (j <= n - 1) {
                            for (const auto& [fm, fc] : childA->cf_to_arnold(childA->cf_du(i, j)))
                                accum_form(acc, fm, c * fc);
                        } else {
                            for (const auto& [fm, fc] : childA->cf_to_arnold(childA->cf_dz1(i)))
                                accum_form(acc, fm, c * fc);
                        }
                    }
        }
    }
    return out;
}

bool BraidPresentation::omega_naturality_free() const {
    const int n = labels_.n;
    auto proj = free_side_projection();
    // LHS: generators of the free kernel tensored with their own dual slots
    std::map<std::pair<int, int>, Rat> lhs;
    for (int i = 1; i <= n; ++i) lhs[{gen_index(i, labels_.beta()), i - 1}] = Rat(1);
    for (const auto& [w, c] : resolve(labels_.beta(), labels_.omega()).terms())
        lhs[{w.letter(0), n}] = c;
    std::map<std::pair<int, int>, Rat> rhs;
    for (std::size_t g = 0; g < omega_arnold_.size(); ++g)
        for (const auto& [form, c] : omega_arnold_[g])
            for (const auto& [slot, pc] : proj[static_cast<std::size_t>(form)]) {
                auto key = std::make_pair(static_cast<int>(g), slot);
                auto it = rhs.find(key);
                Rat nv = (it == rhs.end() ? Rat(0) : it->second) + c * pc;
                if (nv.is_zero()) {
                    if (it != rhs.end()) rhs.erase(it);
                } else {
                    rhs[key] = nv;
                }
            }
    return lhs == rhs;
}

bool BraidPresentation::omega_naturality_section() const {
    const int n = labels_.n;
    if (labels_.m == 3) return true;
    auto proj = section_side_projection();
    auto child = get(labels_.m - 1);
    std::map<std::pair<int, int>, Rat> lhs;
    for (std::size_t cg = 0; cg < child->pairs_.size(); ++cg) {
        auto [a, b] = child->pairs_[cg];
        // same label codes name the image generator here
        lhs[{gen_index(a, b), static_cast<int>(cg)}] = Rat(1);
    }
    std::map<std::pair<int, int>, Rat> rhs;
    for (std::size_t g = 0; g < omega_arnold_.size(); ++g)
        for (const auto& [form, c] : omega_arnold_[g])
            for (const auto& [slot, pc] : proj[static_cast<std::size_t>(form)]) {
                auto key = std::make_pair(static_cast<int>(g), slot);
                auto it = rhs.find(key);
                Rat nv = (it == rhs.end() ? Rat(0) : it->second) + c * pc;
                if (nv.is_zero()) {
                    if (it != rhs.end()) rhs.erase(it);
                } else {
                    rhs[key] = nv;
                }
            }
    return lhs == rhs;
}

NCPoly section_s(const BraidPresentation& target, const NCPoly& elem) {
    auto child = target.child_;
    if (!child) throw std::invalid_argument("section_s: no lower tower stage");
    if (!(*elem.alphabet() == *child->indep_))
        throw std::invalid_argument("section_s: element not over the lower presentation");
    NCPoly out(target.indep_);
    for (const auto& [w, c] : elem.terms()) {
        std::vector<std::uint8_t> nw;
        nw.reserve(w.letters().size());
        for (auto l : w.letters()) {
            auto [a, b] = child->pairs_[l];
            int g = target.gen_index(a, b);
            if (g < 0) throw std::logic_error("section_s: image generator missing");
            nw.push_back(static_cast<std::uint8_t>(g));
        }
        out.add_term(Word(std::move(nw)), c);
    }
    return out;
}

NCPoly forget_beta(const BraidPresentation& source, const NCPoly& elem) {
    auto child = source.child_;
    if (!child) throw std::invalid_argument("forget_beta: no lower tower stage");
    if (!(*elem.alphabet() == *source.indep_))
        throw std::invalid_argument("forget_beta: element not over this presentation");
    const int n = source.labels_.n;
    NCPoly out(child->indep_);
    for (const auto& [w, c] : elem.terms()) {
        NCPoly prod = NCPoly::unit(child->indep_);
        for (auto l : w.letters()) {
            auto [a, b] = source.pairs_[l];
            NCPoly img(child->indep_);
            if (b == source.labels_.beta()) {
                // dies
            } else if (a == source.labels_.alpha() && b == n) {
                img = child->resolve(child->labels_.alpha(), child->labels_.beta());
            } else {
                img = NCPoly::letter(child->indep_, child->gen_index(a, b));
            }
            prod = concat_mul(prod, img);
            if (prod.is_zero()) break;
        }
        prod *= c;
        out += prod;
    }
    return out;
}

}  // namespace braidlog
