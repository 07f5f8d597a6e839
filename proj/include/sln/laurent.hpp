#pragma once

// Laurent polynomials in q, bigraded (h,q) series, quantum binomials and
// Gaussian multinomials, and the graded ranks of the flag-manifold state
// spaces consumed by the link pipelines.

#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sln {

class LaurentPoly {
  public:
    using Coeff = long long;

    LaurentPoly() = default;
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exp, Coeff c = 1) {
        LaurentPoly p;
        p.set(exp, c);
        return p;
    }

    const std::map<int, Coeff>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Coeff coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }
    void set(int exp, Coeff v) {
        if (v == 0) c_.erase(exp);
        else c_[exp] = v;
    }
    void add(int exp, Coeff v) {
        auto it = c_.find(exp);
        Coeff s = (it == c_.end() ? 0 : it->second) + v;
        if (s == 0) {
            if (it != c_.end()) c_.erase(it);
        } else {
            c_[exp] = s;
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto [e, v] : o.c_) r.add(e, v);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto [e, v] : o.c_) r.add(e, -v);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto [e1, v1] : c_)
            for (auto [e2, v2] : o.c_) r.add(e1 + e2, v1 * v2);
        return r;
    }
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    LaurentPoly shifted(int dq) const {
        LaurentPoly r;
        for (auto [e, v] : c_) r.c_[e + dq] = v;
        return r;
    }
    LaurentPoly inverted() const {  // q -> q^{-1}
        LaurentPoly r;
        for (auto [e, v] : c_) r.c_[-e] = v;
        return r;
    }

    Coeff eval_at_one() const {
        Coeff s = 0;
        for (auto [e, v] : c_) s += v;
        return s;
    }
    int min_exp() const {
        if (c_.empty()) throw std::invalid_argument("min_exp of zero polynomial");
        return c_.begin()->first;
    }
    int max_exp() const {
        if (c_.empty()) throw std::invalid_argument("max_exp of zero polynomial");
        return c_.rbegin()->first;
    }
    bool is_palindromic() const {
        if (c_.empty()) return true;
        int s = min_exp() + max_exp();
        for (auto [e, v] : c_)
            if (coeff(s - e) != v) return false;
        return true;
    }

    // canonical form: ascending exponents, e.g. `q^-2 + 2 + q^2`
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto [e, v] : c_) {
            Coeff a = v;
            if (first) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            if (e == 0) {
                s += std::to_string(a);
            } else {
                if (a != 1) s += std::to_string(a) + "*";
                s += "q";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

  private:
    std::map<int, Coeff> c_;
};

// finitely supported function (h,q) -> Z
using BigradedSeries = std::map<std::pair<int, int>, long long>;

// quantum integer [m] = (q^m - q^-m)/(q - q^-1), zero for m <= 0 handled
// by the binomial below
inline LaurentPoly quantum_integer(int m) {
    LaurentPoly p;
    for (int e = -(m - 1); e <= m - 1; e += 2) p.set(e, 1);
    return p;
}

// bottom-normalized Gaussian binomial in t: lowest term 1, degree k(n-k),
// via the q-Pascal recurrence [n,k] = [n-1,k-1] + t^k [n-1,k]
inline LaurentPoly gaussian_binomial_t(int n, int k) {
    if (k < 0 || k > n) return LaurentPoly();
    std::map<std::pair<int, int>, LaurentPoly> memo;
    std::function<LaurentPoly(int, int)> rec = [&](int nn, int kk) -> LaurentPoly {
        if (kk < 0 || kk > nn) return LaurentPoly();
        if (kk == 0 || kk == nn) return LaurentPoly::one();
        auto it = memo.find({nn, kk});
        if (it != memo.end()) return it->second;
        LaurentPoly v = rec(nn - 1, kk - 1) + rec(nn - 1, kk).shifted(kk);
        memo.emplace(std::make_pair(nn, kk), v);
        return v;
    };
    return rec(n, k);
}

// symmetric quantum binomial: [n]!/([k]![n-k]!), invariant under q <-> 1/q
inline LaurentPoly quantum_binomial(int n, int k) {
    if (k < 0 || k > n) return LaurentPoly();
    LaurentPoly g = gaussian_binomial_t(n, k);
    LaurentPoly out;
    for (auto [e, v] : g.coeffs()) out.set(2 * e - k * (n - k), v);
    return out;
}

// Poincare polynomial of the partial flag manifold F(blocks; N): the
// Gaussian multinomial at t = q^2, bottom-normalized so the constant term
// is q^0.  The residual N - sum(blocks) is appended as a final block.
inline LaurentPoly poincare_flag(std::vector<int> blocks, int N) {
    int total = 0;
    for (int b : blocks) {
        if (b < 0) throw std::invalid_argument("poincare_flag: negative block");
        total += b;
    }
    if (total > N) throw std::invalid_argument("poincare_flag: blocks exceed N");
    if (total < N) blocks.push_back(N - total);
    LaurentPoly result = LaurentPoly::one();
    int remaining = N;
    for (int b : blocks) {
        LaurentPoly g = gaussian_binomial_t(remaining, b);
        LaurentPoly g2;  // t = q^2
        for (auto [e, v] : g.coeffs()) g2.set(2 * e, v);
        result = result * g2;
        remaining -= b;
    }
    return result;
}

// real dimension of F(blocks; N): N^2 - sum n_i^2 over all blocks
// including the residual
inline int flag_dimension(std::vector<int> blocks, int N) {
    int total = 0, sq = 0;
    for (int b : blocks) {
        total += b;
        sq += b * b;
    }
    int res = N - total;
    if (res < 0) throw std::invalid_argument("flag_dimension: blocks exceed N");
    return N * N - sq - res * res;
}

// graded Euler characteristic of a free-rank series
inline LaurentPoly euler_characteristic(const BigradedSeries& ranks) {
    LaurentPoly chi;
    for (const auto& [hq, r] : ranks) {
        auto [h, q] = hq;
        chi.add(q, h % 2 == 0 ? r : -r);
    }
    return chi;
}

}  // namespace sln
