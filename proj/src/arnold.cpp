#include "braidlog/arnold.hpp"

#include <mutex>
#include <stdexcept>

namespace braidlog {

namespace {

std::map<int, Rat>& accum(std::map<int, Rat>& m, int k, const Rat& c) {
    auto it = m.find(k);
    if (it == m.end()) {
        if (!c.is_zero()) m.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
    return m;
}

}  // namespace

ArnoldSpace::ArnoldSpace(int m)
    : labels_(m), pairs_(basis_pairs(labels_)), relator_ech_(0) {
    std::vector<std::string> names;
    names.reserve(pairs_.size());
    for (auto [a, b] : pairs_) names.push_back("w[" + labels_.name(a) + "," + labels_.name(b) + "]");
    forms_ = make_alphabet(std::move(names));

    const int F = forms_->size();
    for (int p = 0; p < F; ++p)
        for (int q = p + 1; q < F; ++q) {
            wedge_index_[{p, q}] = static_cast<int>(wedge_pairs_.size());
            wedge_pairs_.emplace_back(p, q);
        }

    // signed wedge of two basis forms as a sparse vector; -1 means the zero
    // form w[a,b]
    auto wedge_vec = [&](int p, int q) -> std::map<int, Rat> {
        std::map<int, Rat> v;
        if (p < 0 || q < 0 || p == q) return v;
        if (p < q) v[wedge_index(p, q)] = Rat(1);
        else v[wedge_index(q, p)] = Rat(-1);
        return v;
    };

    // one relator per label triple {i,j,k} in S \ {omega}
    const int top = labels_.beta();
    for (int i = 0; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j)
            for (int k = j + 1; k <= top; ++k) {
                int wij = form_index(i, j), wik = form_index(i, k), wjk = form_index(j, k);
                std::map<int, Rat> rel;
                for (const auto& [w, c] : wedge_vec(wij, wik)) accum(rel, w, c);
                for (const auto& [w, c] : wedge_vec(wik, wjk)) accum(rel, w, c);
                for (const auto& [w, c] : wedge_vec(wjk, wij)) accum(rel, w, c);
                relators_.push_back(std::move(rel));
            }

    relator_ech_ = EchelonBuilder(wedge_count());
    for (const auto& rel : relators_) {
        std::vector<std::pair<int, Rat>> v(rel.begin(), rel.end());
        relator_ech_.add(v);
    }
    for (int col = 0; col < wedge_count(); ++col)
        if (!relator_ech_.pivots().count(col)) {
            a2_ordinal_[col] = static_cast<int>(a2_cols_.size());
            a2_cols_.push_back(col);
        }
}

std::shared_ptr<const ArnoldSpace> ArnoldSpace::get(int m) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const ArnoldSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto sp = std::shared_ptr<const ArnoldSpace>(new ArnoldSpace(m));
    cache.emplace(m, sp);
    return sp;
}

int ArnoldSpace::form_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (a == labels_.alpha() && b == labels_.beta()) return -1;
    if (!labels_.valid(a) || !labels_.valid(b) || b == labels_.omega() || a == b)
        throw std::invalid_argument("ArnoldSpace::form_index: bad pair");
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i] == std::make_pair(a, b)) return static_cast<int>(i);
    throw std::logic_error("ArnoldSpace::form_index: pair not found");
}

int ArnoldSpace::wedge_index(int p, int q) const {
    auto it = wedge_index_.find({p, q});
    if (it == wedge_index_.end()) throw std::invalid_argument("wedge_index: need p < q");
    return it->second;
}

std::map<int, Rat> ArnoldSpace::wedge_project(int p, int q) const {
    std::map<int, Rat> out;
    if (p == q) return out;
    Rat sign(1);
    if (p > q) {
        std::swap(p, q);
        sign = Rat(-1);
    }
    std::map<int, Rat> v{{wedge_index(p, q), sign}};
    for (const auto& [col, val] : relator_ech_.project_residue(v)) out[a2_ordinal_.at(col)] = val;
    return out;
}

std::map<int, Rat> ArnoldSpace::wedge_project(const FormVec& u, const FormVec& v) const {
    std::map<int, Rat> out;
    for (const auto& [p, cu] : u)
        for (const auto& [q, cv] : v)
            for (const auto& [k, w] : wedge_project(p, q)) accum(out, k, cu * cv * w);
    return out;
}

bool ArnoldSpace::BarOne::is_zero() const {
    for (const auto& [w, fv] : terms)
        if (!fv.empty()) return false;
    return true;
}

bool ArnoldSpace::BarTwo::is_zero() const {
    for (const auto& [w, av] : terms)
        if (!av.empty()) return false;
    return true;
}

ArnoldSpace::BarOne ArnoldSpace::bar_d(const NCPoly& bar) const {
    BarOne out;
    for (const auto& [w, c] : bar.terms()) {
        if (w.is_empty()) continue;  // d(eps ⊗ alpha) = 0
        Word head = w.prefix(w.degree() - 1);
        accum(out.terms[head], w.letter(w.degree() - 1), c);
        if (out.terms[head].empty()) out.terms.erase(head);
    }
    return out;
}

ArnoldSpace::BarTwo ArnoldSpace::bar_d(const BarOne& b) const {
    BarTwo out;
    for (const auto& [w, fv] : b.terms) {
        if (w.is_empty()) continue;
        Word head = w.prefix(w.degree() - 1);
        const int last = w.letter(w.degree() - 1);
        auto& acc = out.terms[head];
        for (const auto& [q, cq] : fv)
            for (const auto& [k, v] : wedge_project(last, q)) accum(acc, k, cq * v);
        if (acc.empty()) out.terms.erase(head);
    }
    return out;
}

bool ArnoldSpace::wedge_maps_vanish(const NCPoly& bar) const {
    auto weight = bar.homogeneous_degree();
    if (!weight) throw std::invalid_argument("wedge_maps_vanish: bar element not weight-homogeneous");
    if (*weight < 2) return true;
    for (int k = 0; k + 1 < *weight; ++k) {
        // group by surrounding context: slot-k wedge must vanish separately
        // for each (prefix, suffix) pair
        std::map<std::pair<Word, Word>, std::map<int, Rat>> ctx;
        for (const auto& [w, c] : bar.terms()) {
            auto key = std::make_pair(w.prefix(k), w.suffix_from(k + 2));
            auto& acc = ctx[key];
            for (const auto& [col, v] : wedge_project(w.letter(k), w.letter(k + 1)))
                accum(acc, col, c * v);
        }
        for (const auto& [key, acc] : ctx)
            if (!acc.empty()) return false;
    }
    return true;
}

int ArnoldSpace::cf_dx(int k) const {
    if (k < 1 || k > n()) throw std::out_of_range("cf_dx");
    return k - 1;
}

int ArnoldSpace::cf_du(int i, int j) const {
    if (!(1 <= i && i < j && j <= n())) throw std::out_of_range("cf_du");
    int idx = n();
    for (int a = 1; a <= n(); ++a)
        for (int b = a + 1; b <= n(); ++b) {
            if (a == i && b == j) return idx;
            ++idx;
        }
    throw std::logic_error("cf_du");
}

int ArnoldSpace::cf_dz1(int i) const {
    if (i < 1 || i > n()) throw std::out_of_range("cf_dz1");
    return n() + n() * (n() - 1) / 2 + (i - 1);
}

std::string ArnoldSpace::cf_name(int cf) const {
    const int nn = n();
    if (cf < nn) return "dx" + std::to_string(cf + 1) + "/x" + std::to_string(cf + 1);
    cf -= nn;
    int du_count = nn * (nn - 1) / 2;
    if (cf < du_count) {
        int idx = 0;
        for (int a = 1; a <= nn; ++a)
            for (int b = a + 1; b <= nn; ++b) {
                if (idx == cf)
                    return "du" + std::to_string(a) + std::to_string(b) + "/(u" + std::to_string(a) +
                           std::to_string(b) + "-1)";
                ++idx;
            }
    }
    cf -= du_count;
    return "dz" + std::to_string(cf + 1) + "/(z" + std::to_string(cf + 1) + "-1)";
}

FormVec ArnoldSpace::cf_to_arnold(int cf) const {
    // dx_k/x_k = w[a,k] - w[a,k+1]   (w[a,n+1] read as zero)
    // du_{ij}/(u_{ij}-1) = w[i,j] - w[a,j]
    // dz_i/(z_i-1) = w[i,b]
    const int nn = n();
    FormVec out;
    if (cf < nn) {
        int k = cf + 1;
        accum(out, form_index(labels_.alpha(), k), Rat(1));
        if (k + 1 <= nn) accum(out, form_index(labels_.alpha(), k + 1), Rat(-1));
        return out;
    }
    int rest = cf - nn;
    int du_count = nn * (nn - 1) / 2;
    if (rest < du_count) {
        int idx = 0;
        for (int a = 1; a <= nn; ++a)
            for (int b = a + 1; b <= nn; ++b) {
                if (idx == rest) {
                    accum(out, form_index(a, b), Rat(1));
                    accum(out, form_index(labels_.alpha(), b), Rat(-1));
                    return out;
                }
                ++idx;
            }
    }
    int i = rest - du_count + 1;
    accum(out, form_index(i, labels_.beta()), Rat(1));
    return out;
}

FormVec ArnoldSpace::arnold_to_cf(int form) const {
    // w[a,i] = sum_{k>=i} dx_k/x_k;  w[i,b] = dz_i/(z_i-1);
    // w[i,j] = sum_{k>=j} dx_k/x_k + du_{ij}/(u_{ij}-1)
    auto [a, b] = pairs_.at(static_cast<std::size_t>(form));
    FormVec out;
    if (a == labels_.alpha()) {
        for (int k = b; k <= n(); ++k) accum(out, cf_dx(k), Rat(1));
        return out;
    }
    if (b == labels_.beta()) {
        accum(out, cf_dz1(a), Rat(1));
        return out;
    }
    for (int k = b; k <= n(); ++k) accum(out, cf_dx(k), Rat(1));
    accum(out, cf_du(a, b), Rat(1));
    return out;
}

}  // namespace braidlog
