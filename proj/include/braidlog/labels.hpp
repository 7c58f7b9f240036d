#ifndef BRAIDLOG_LABELS_HPP
#define BRAIDLOG_LABELS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidlog {

// The ordered label set {alpha, 1, ..., n, beta, omega} for m = n+3 marked
// points. Codes: 0 = alpha, 1..n numeric, n+1 = beta, n+2 = omega; the code
// order is the label order.
struct LabelSet {
    int m;
    int n;

    explicit LabelSet(int m_) : m(m_), n(m_ - 3) {
        if (m < 3) throw std::invalid_argument("LabelSet: need m >= 3");
    }

    int alpha() const { return 0; }
    int beta() const { return n + 1; }
    int omega() const { return n + 2; }
    bool is_numeric(int code) const { return code >= 1 && code <= n; }
    bool valid(int code) const { return code >= 0 && code <= n + 2; }

    std::string name(int code) const {
        if (code == alpha()) return "a";
        if (code == beta()) return "b";
        if (code == omega()) return "w";
        if (is_numeric(code)) return std::to_string(code);
        throw std::out_of_range("LabelSet: bad label code");
    }

    // -1 if not a label of this set
    int parse(const std::string& s) const {
        if (s == "a") return alpha();
        if (s == "b") return beta();
        if (s == "w") return omega();
        for (int i = 1; i <= n; ++i)
            if (s == std::to_string(i)) return i;
        return -1;
    }
};

// The basis pairs shared by the independent generators X[i,j] and the 1-form
// basis w[i,j]: all i<j drawn from S \ {omega}, with (alpha,beta) excluded.
// Lex order on (i,j) in label order; size n(n+3)/2.
inline std::vector<std::pair<int, int>> basis_pairs(const LabelSet& L) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a <= L.beta(); ++a)
        for (int b = a + 1; b <= L.beta(); ++b) {
            if (a == L.alpha() && b == L.beta()) continue;
            out.emplace_back(a, b);
        }
    return out;
}

}  // namespace braidlog

#endif
