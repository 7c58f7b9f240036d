#include "braidlog/freelie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braidlog {

bool is_lyndon(const Word& w) {
    const int d = w.degree();
    if (d == 0) return false;
    for (int r = 1; r < d; ++r) {
        // compare w with its rotation by r
        for (int i = 0; i < d; ++i) {
            int a = w.letter(i);
            int b = w.letter((i + r) % d);
            if (a < b) break;
            if (a > b) return false;
            if (i == d - 1) return false;  // rotation equals w: periodic
        }
    }
    return true;
}

namespace {

// Longest proper suffix that is Lyndon; for a Lyndon word this is the
// standard right factor and the left factor is Lyndon as well.
std::pair<Word, Word> standard_factorization(const Word& w) {
    const int d = w.degree();
    for (int start = 1; start < d; ++start) {
        Word suf = w.suffix_from(start);
        if (is_lyndon(suf)) return {w.prefix(start), suf};
    }
    throw std::logic_error("standard_factorization: no Lyndon suffix");
}

LyndonWord make_lyndon(const Word& w) {
    LyndonWord l;
    l.word = w;
    if (w.degree() >= 2) {
        auto [u, v] = standard_factorization(w);
        l.left = u;
        l.right = v;
    }
    return l;
}

void enumerate_words(const std::vector<int>& remaining, std::vector<std::uint8_t>& acc,
                     std::vector<Word>& out) {
    bool any = false;
    for (std::size_t l = 0; l < remaining.size(); ++l) {
        if (remaining[l] == 0) continue;
        any = true;
        auto rem = remaining;
        rem[l]--;
        acc.push_back(static_cast<std::uint8_t>(l));
        enumerate_words(rem, acc, out);
        acc.pop_back();
    }
    if (!any) out.emplace_back(acc);
}

}  // namespace

std::vector<Word> monomials_of_multidegree(const AlphabetPtr& alpha, const std::vector<int>& md) {
    if (static_cast<int>(md.size()) != alpha->size())
        throw std::invalid_argument("monomials_of_multidegree: multidegree size mismatch");
    std::vector<Word> out;
    std::vector<std::uint8_t> acc;
    enumerate_words(md, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> monomials_of_degree(const AlphabetPtr& alpha, int degree) {
    std::vector<Word> out;
    const int k = alpha->size();
    std::vector<std::uint8_t> acc(static_cast<std::size_t>(degree), 0);
    if (degree == 0) {
        out.push_back(Word::empty());
        return out;
    }
    if (k == 0) return out;
    while (true) {
        out.emplace_back(acc);
        int i = degree - 1;
        while (i >= 0 && acc[static_cast<std::size_t>(i)] == k - 1) {
            acc[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        acc[static_cast<std::size_t>(i)]++;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LyndonWord> lyndon_words(const AlphabetPtr& alpha, const std::vector<int>& md) {
    if (alpha->size() == 0) throw std::invalid_argument("lyndon_words: empty alphabet");
    if (std::accumulate(md.begin(), md.end(), 0) < 1)
        throw std::invalid_argument("lyndon_words: total degree must be >= 1");
    std::vector<LyndonWord> out;
    for (const Word& w : monomials_of_multidegree(alpha, md))
        if (is_lyndon(w)) out.push_back(make_lyndon(w));
    return out;
}

std::vector<LyndonWord> lyndon_words_total(const AlphabetPtr& alpha, int degree) {
    if (alpha->size() == 0) throw std::invalid_argument("lyndon_words: empty alphabet");
    std::vector<LyndonWord> out;
    for (const Word& w : monomials_of_degree(alpha, degree))
        if (is_lyndon(w)) out.push_back(make_lyndon(w));
    return out;
}

NCPoly bracketing(const AlphabetPtr& alpha, const LyndonWord& l) {
    if (l.word.degree() == 0) throw std::invalid_argument("bracketing: empty word");
    if (l.word.degree() == 1) return NCPoly::monomial(alpha, l.word);
    return lie_bracket(bracketing(alpha, make_lyndon(l.left)), bracketing(alpha, make_lyndon(l.right)));
}

NCPoly left_bracketing_map(const NCPoly& p) {
    NCPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        if (w.degree() == 0) continue;
        NCPoly acc = NCPoly::letter(p.alphabet(), w.letter(0));
        for (int i = 1; i < w.degree(); ++i)
            acc = lie_bracket(acc, NCPoly::letter(p.alphabet(), w.letter(i)));
        acc *= c;
        out += acc;
    }
    return out;
}

bool dynkin_test(const NCPoly& p) {
    auto d = p.homogeneous_degree();
    if (!d || *d < 1) throw std::invalid_argument("dynkin_test: need homogeneous degree >= 1");
    NCPoly lhs = left_bracketing_map(p);
    NCPoly rhs = p;
    rhs *= Rat(*d);
    return lhs == rhs;
}

namespace {

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

long long necklace_count(int k, int d) {
    if (d < 1) throw std::invalid_argument("necklace_count: d >= 1");
    long long sum = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) sum += moebius(e) * ipow(k, d / e);
    return sum / d;
}

// --- EchelonBuilder ---------------------------------------------------------

namespace {

void strip_content(SparseIntRow& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) v /= g;
}

// r := a*r - b*s, columns merged; result content-stripped by the caller
SparseIntRow combine(const SparseIntRow& r, const mpz_class& a, const SparseIntRow& s,
                     const mpz_class& b) {
    SparseIntRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j >= s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i >= r.size() || s[j].first < r[i].first) {
            out.emplace_back(s[j].first, -b * s[j].second);
            ++j;
        } else {
            mpz_class v = a * r[i].second - b * s[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseIntRow to_int_row(const std::vector<std::pair<int, Rat>>& v) {
    mpz_class lcm = 1;
    for (const auto& [c, r] : v)
        if (!r.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.den().get_mpz_t());
    std::map<int, mpz_class> acc;
    for (const auto& [c, r] : v) {
        if (r.is_zero()) continue;
        acc[c] += r.num() * (lcm / r.den());
    }
    SparseIntRow out;
    for (auto& [c, z] : acc)
        if (z != 0) out.emplace_back(c, std::move(z));
    strip_content(out);
    return out;
}

bool EchelonBuilder::add(const std::vector<std::pair<int, Rat>>& v) { return add_int(to_int_row(v)); }

bool EchelonBuilder::add_int(SparseIntRow v) {
    strip_content(v);
    while (!v.empty()) {
        auto it = pivot_row_.find(v.front().first);
        if (it == pivot_row_.end()) break;
        const SparseIntRow& row = rows_[static_cast<std::size_t>(it->second)];
        mpz_class p = row.front().second, c = v.front().second, g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
        v = combine(v, p / g, row, c / g);
        strip_content(v);
    }
    if (v.empty()) return false;
    const int piv = v.front().first;
    // back-substitute the new pivot out of older rows
    for (auto& row : rows_) {
        mpz_class at = 0;
        for (const auto& [c, z] : row)
            if (c == piv) {
                at = z;
                break;
            }
        if (at == 0) continue;
        mpz_class p = v.front().second, g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), at.get_mpz_t());
        row = combine(row, p / g, v, at / g);
        strip_content(row);
    }
    pivot_row_[piv] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

SparseIntRow EchelonBuilder::reduce(const std::vector<std::pair<int, Rat>>& v) const {
    SparseIntRow r = to_int_row(v);
    while (!r.empty()) {
        auto it = pivot_row_.find(r.front().first);
        if (it == pivot_row_.end()) {
            // pivots are sorted; anything before the next pivot column stays
            // in the residue, so eliminate deeper entries instead
            bool hit = false;
            for (std::size_t k = 1; k < r.size() && !hit; ++k) {
                auto jt = pivot_row_.find(r[k].first);
                if (jt == pivot_row_.end()) continue;
                const SparseIntRow& row = rows_[static_cast<std::size_t>(jt->second)];
                mpz_class p = row.front().second, c = r[k].second, g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
                r = combine(r, p / g, row, c / g);
                strip_content(r);
                hit = true;
            }
            if (!hit) break;
        } else {
            const SparseIntRow& row = rows_[static_cast<std::size_t>(it->second)];
            mpz_class p = row.front().second, c = r.front().second, g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
            r = combine(r, p / g, row, c / g);
            strip_content(r);
        }
    }
    return r;
}

std::map<int, Rat> EchelonBuilder::project_residue(const std::map<int, Rat>& v) const {
    std::map<int, Rat> work = v;
    while (true) {
        int hit_col = -1;
        for (const auto& [c, val] : work) {
            if (val.is_zero()) continue;
            if (pivot_row_.count(c)) {
                hit_col = c;
                break;
            }
        }
        if (hit_col < 0) break;
        const SparseIntRow& row = rows_[static_cast<std::size_t>(pivot_row_.at(hit_col))];
        Rat factor = work[hit_col] / Rat(row.front().second);
        for (const auto& [c, z] : row) {
            auto it = work.find(c);
            Rat nv = (it == work.end() ? Rat(0) : it->second) - factor * Rat(z);
            if (nv.is_zero()) {
                if (it != work.end()) work.erase(it);
            } else {
                work[c] = nv;
            }
        }
    }
    return work;
}

std::vector<SparseIntRow> EchelonBuilder::sorted_rows() const {
    std::vector<SparseIntRow> out;
    out.reserve(rows_.size());
    for (const auto& [piv, idx] : pivot_row_) out.push_back(rows_[static_cast<std::size_t>(idx)]);
    return out;
}

// --- GradedSubspace ---------------------------------------------------------

namespace {

std::vector<int> require_common_multidegree(const AlphabetPtr& alpha,
                                            const std::vector<NCPoly>& vectors) {
    std::optional<std::vector<int>> md;
    for (const auto& p : vectors) {
        if (p.is_zero()) continue;
        if (!(*p.alphabet() == *alpha))
            throw std::invalid_argument("GradedSubspace: alphabet mismatch");
        auto m = p.homogeneous_multidegree();
        if (!m) throw std::invalid_argument("GradedSubspace: vector not multihomogeneous");
        if (!md) md = *m;
        else if (*md != *m) throw std::invalid_argument("GradedSubspace: multidegree mismatch");
    }
    if (!md) throw std::invalid_argument("GradedSubspace: need at least one nonzero vector");
    return *md;
}

}  // namespace

GradedSubspace GradedSubspace::span(const AlphabetPtr& alpha, const std::vector<NCPoly>& vectors) {
    auto md = require_common_multidegree(alpha, vectors);
    GradedSubspace s(alpha, md, monomials_of_multidegree(alpha, md));
    for (const auto& p : vectors) s.absorb(p);
    return s;
}

GradedSubspace GradedSubspace::span_by_degree(const AlphabetPtr& alpha, int degree,
                                              const std::vector<NCPoly>& vectors) {
    GradedSubspace s(alpha, {}, monomials_of_degree(alpha, degree));
    for (const auto& p : vectors) s.absorb(p);
    return s;
}

std::vector<std::pair<int, Rat>> GradedSubspace::coordinates(const NCPoly& p) const {
    std::vector<std::pair<int, Rat>> v;
    v.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) {
        auto it = index_.find(w);
        if (it == index_.end())
            throw std::invalid_argument("GradedSubspace: vector outside graded component");
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

bool GradedSubspace::contains(const NCPoly& p) const {
    if (p.is_zero()) return true;
    return ech_.contains(coordinates(p));
}

bool GradedSubspace::absorb(const NCPoly& p) {
    if (p.is_zero()) return false;
    return ech_.add(coordinates(p));
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.monomials() != b.monomials())
        throw std::invalid_argument("intersect: graded components differ");
    const int n = static_cast<int>(a.monomials().size());
    // Zassenhaus: echelonize rows [u | u] for u in A and [v | 0] for v in B;
    // rows with zero left half carry an intersection basis in the right half.
    EchelonBuilder wide(2 * n);
    for (const auto& row : a.echelon().sorted_rows()) {
        SparseIntRow dbl = row;
        for (const auto& [c, z] : row) dbl.emplace_back(c + n, z);
        wide.add_int(std::move(dbl));
    }
    for (const auto& row : b.echelon().sorted_rows()) wide.add_int(row);
    GradedSubspace out = a;  // copy ambient, then rebuild the echelon
    out.ech_ = EchelonBuilder(n);
    for (const auto& row : wide.sorted_rows()) {
        if (row.front().first >= n) {
            SparseIntRow shifted;
            shifted.reserve(row.size());
            for (const auto& [c, z] : row) shifted.emplace_back(c - n, z);
            out.ech_.add_int(std::move(shifted));
        }
    }
    return out;
}

int quotient_dim(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.monomials() != b.monomials())
        throw std::invalid_argument("quotient_dim: graded components differ");
    for (const auto& row : b.echelon().sorted_rows()) {
        std::vector<std::pair<int, Rat>> v;
        v.reserve(row.size());
        for (const auto& [c, z] : row) v.emplace_back(c, Rat(z));
        if (!a.echelon().contains(v)) throw std::invalid_argument("quotient_dim: B not contained in A");
    }
    return a.dim() - b.dim();
}

}  // namespace braidlog
