#pragma once

// Bounded chain complexes of finitely generated free abelian groups,
// bigraded by (h,q) with differentials of bidegree (+1,0), and their
// homology as free rank plus a divisor chain of torsion orders.

#include <sln/intmat.hpp>
#include <sln/laurent.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sln {

using Bidegree = std::pair<int, int>;  // (h, q)

struct AbelianGroup {
    long long rank = 0;
    std::vector<Int> torsion;  // divisor chain d1 | d2 | ..., each >= 2

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
};

class BigradedAbelianGroup {
  public:
    using Map = std::map<Bidegree, AbelianGroup>;

    const Map& groups() const { return g_; }
    bool empty() const { return g_.empty(); }

    void set(int h, int q, AbelianGroup grp) {
        if (grp.trivial()) return;
        for (size_t i = 0; i + 1 < grp.torsion.size(); ++i)
            if (grp.torsion[i + 1] % grp.torsion[i] != 0)
                throw std::invalid_argument("BigradedAbelianGroup: torsion not a divisor chain");
        auto [it, fresh] = g_.emplace(Bidegree{h, q}, std::move(grp));
        if (!fresh) throw std::invalid_argument("BigradedAbelianGroup: duplicate bidegree");
    }

    const AbelianGroup* at(int h, int q) const {
        auto it = g_.find({h, q});
        return it == g_.end() ? nullptr : &it->second;
    }

    BigradedAbelianGroup shifted(int dh, int dq) const {
        BigradedAbelianGroup out;
        for (const auto& [hq, grp] : g_) out.g_[{hq.first + dh, hq.second + dq}] = grp;
        return out;
    }

    // direct sum; bidegrees may overlap
    void merge(const BigradedAbelianGroup& o) {
        for (const auto& [hq, grp] : o.g_) {
            AbelianGroup& mine = g_[hq];
            mine.rank += grp.rank;
            // merging divisor chains: combined torsion orders, re-sorted into
            // a chain via pairwise lcm/gcd folding
            std::vector<Int> all = mine.torsion;
            all.insert(all.end(), grp.torsion.begin(), grp.torsion.end());
            mine.torsion = to_divisor_chain(all);
        }
    }

    BigradedSeries free_ranks() const {
        BigradedSeries s;
        for (const auto& [hq, grp] : g_)
            if (grp.rank != 0) s[hq] = grp.rank;
        return s;
    }

    long long total_rank() const {
        long long r = 0;
        for (const auto& [hq, grp] : g_) r += grp.rank;
        return r;
    }

    std::vector<Int> total_torsion() const {  // sorted multiset of all orders
        std::vector<Int> t;
        for (const auto& [hq, grp] : g_) t.insert(t.end(), grp.torsion.begin(), grp.torsion.end());
        std::sort(t.begin(), t.end());
        return t;
    }

    // collapse the h-grading; per-q groups merged
    std::map<int, AbelianGroup> collapse_h() const {
        std::map<int, AbelianGroup> out;
        for (const auto& [hq, grp] : g_) {
            AbelianGroup& a = out[hq.second];
            a.rank += grp.rank;
            std::vector<Int> all = a.torsion;
            all.insert(all.end(), grp.torsion.begin(), grp.torsion.end());
            a.torsion = to_divisor_chain(all);
        }
        return out;
    }

    bool operator==(const BigradedAbelianGroup& o) const { return g_ == o.g_; }

    // fold an arbitrary multiset of orders into a divisor chain
    static std::vector<Int> to_divisor_chain(std::vector<Int> orders) {
        orders.erase(std::remove_if(orders.begin(), orders.end(), [](const Int& d) { return d <= 1; }),
                     orders.end());
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < orders.size(); ++i)
                for (size_t j = i + 1; j < orders.size(); ++j) {
                    Int g, l;
                    mpz_gcd(g.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
                    l = orders[i] / g * orders[j];
                    if (g != orders[i]) {
                        orders[i] = g;
                        orders[j] = l;
                        changed = true;
                    }
                }
        }
        std::sort(orders.begin(), orders.end());
        orders.erase(std::remove_if(orders.begin(), orders.end(), [](const Int& d) { return d <= 1; }),
                     orders.end());
        return orders;
    }

  private:
    Map g_;
};

// Chain complex with differential d : (h,q) -> (h+1,q).  Matrices act on
// column vectors; the matrix stored at (h,q) has rank(h+1,q) rows and
// rank(h,q) columns.  Construction verifies shapes and d(squared) = 0.
class IntegerChainComplex {
  public:
    IntegerChainComplex() = default;
    IntegerChainComplex(std::map<Bidegree, int> ranks, std::map<Bidegree, IntMatrix> differentials)
        : rank_(std::move(ranks)), d_(std::move(differentials)) {
        for (auto it = rank_.begin(); it != rank_.end();) {
            if (it->second < 0) throw std::invalid_argument("IntegerChainComplex: negative rank");
            it = it->second == 0 ? rank_.erase(it) : std::next(it);
        }
        for (auto it = d_.begin(); it != d_.end();) {
            const auto& [hq, m] = *it;
            if (m.rows() != rank_at(hq.first + 1, hq.second) || m.cols() != rank_at(hq.first, hq.second))
                throw std::invalid_argument("IntegerChainComplex: differential shape mismatch");
            it = m.is_zero() ? d_.erase(it) : std::next(it);
        }
        for (const auto& [hq, m] : d_) {
            const IntMatrix* next = differential_ptr(hq.first + 1, hq.second);
            if (next && !((*next) * m).is_zero())
                throw std::invalid_argument("IntegerChainComplex: d*d != 0 at h=" +
                                            std::to_string(hq.first) + " q=" + std::to_string(hq.second));
        }
    }

    const std::map<Bidegree, int>& ranks() const { return rank_; }
    int rank_at(int h, int q) const {
        auto it = rank_.find({h, q});
        return it == rank_.end() ? 0 : it->second;
    }
    // differential leaving (h,q); identically zero blocks may be absent
    IntMatrix differential(int h, int q) const {
        auto it = d_.find({h, q});
        if (it != d_.end()) return it->second;
        return IntMatrix(rank_at(h + 1, q), rank_at(h, q));
    }
    const IntMatrix* differential_ptr(int h, int q) const {
        auto it = d_.find({h, q});
        return it == d_.end() ? nullptr : &it->second;
    }

    std::set<int> q_support() const {
        std::set<int> qs;
        for (const auto& [hq, r] : rank_) qs.insert(hq.second);
        return qs;
    }

    IntegerChainComplex shifted(int dh, int dq) const {
        std::map<Bidegree, int> r;
        std::map<Bidegree, IntMatrix> d;
        for (const auto& [hq, v] : rank_) r[{hq.first + dh, hq.second + dq}] = v;
        for (const auto& [hq, m] : d_) d[{hq.first + dh, hq.second + dq}] = m;
        return IntegerChainComplex(std::move(r), std::move(d));
    }

  private:
    std::map<Bidegree, int> rank_;
    std::map<Bidegree, IntMatrix> d_;
};

// Homology at every bidegree: ker(out)/im(in) via Smith normal form in
// kernel coordinates.  The kernel lattice of an integer matrix is
// saturated, so expressing the incoming image inside it is exact.
inline BigradedAbelianGroup homology(const IntegerChainComplex& c) {
    BigradedAbelianGroup out;
    for (const auto& [hq, n] : c.ranks()) {
        auto [h, q] = hq;
        IntMatrix a = c.differential(h, q);          // out of (h,q)
        IntMatrix b = c.differential(h - 1, q);      // into (h,q)
        IntMatrix ker = kernel_basis(a);             // n x k
        AbelianGroup grp;
        if (ker.cols() == 0) continue;
        if (b.cols() == 0 || b.is_zero()) {
            grp.rank = ker.cols();
        } else {
            IntMatrix x = solve_in_lattice(ker, b);  // image in kernel coordinates
            SnfResult s = smith_normal_form(x);
            grp.rank = ker.cols() - s.rank;
            for (const Int& d : s.divisors)
                if (d > 1) grp.torsion.push_back(d);
        }
        out.set(h, q, std::move(grp));
    }
    return out;
}

// chain endomorphism: per-bidegree square matrices acting on the chain
// groups of a complex
using ChainEndomorphism = std::map<Bidegree, IntMatrix>;

inline bool commutes_with_differential(const IntegerChainComplex& c, const ChainEndomorphism& f) {
    auto block = [&](int h, int q) -> IntMatrix {
        auto it = f.find({h, q});
        if (it != f.end()) return it->second;
        int n = c.rank_at(h, q);
        return IntMatrix(n, n);
    };
    for (const auto& [hq, n] : c.ranks()) {
        auto [h, q] = hq;
        IntMatrix d = c.differential(h, q);
        if (d.rows() == 0) continue;
        if (block(h + 1, q) * d != d * block(h, q)) return false;
    }
    return true;
}

// The image subcomplex im(f): per bidegree a Hermite basis of the image
// lattice, with the differential restricted and re-expressed in those
// bases.  f must commute with d.
inline IntegerChainComplex image_subcomplex(const IntegerChainComplex& c, const ChainEndomorphism& f,
                                            Pivot strategy = Pivot::MinAbs) {
    if (!commutes_with_differential(c, f))
        throw std::invalid_argument("image_subcomplex: endomorphism does not commute with d");
    std::map<Bidegree, IntMatrix> basis;  // columns span im(f) at each bidegree
    std::map<Bidegree, int> ranks;
    for (const auto& [hq, n] : c.ranks()) {
        auto it = f.find(hq);
        if (it == f.end()) continue;
        // column-space basis: HNF of the transpose, nonzero rows transposed back
        HnfResult hn = hermite_normal_form(it->second.transpose(), strategy);
        if (hn.rank == 0) continue;
        IntMatrix b(n, hn.rank);
        for (int j = 0; j < hn.rank; ++j)
            for (int i = 0; i < n; ++i) b(i, j) = hn.h(j, i);
        basis[hq] = std::move(b);
        ranks[hq] = hn.rank;
    }
    std::map<Bidegree, IntMatrix> diff;
    for (const auto& [hq, b] : basis) {
        auto [h, q] = hq;
        auto tgt = basis.find({h + 1, q});
        IntMatrix db = c.differential(h, q) * b;
        if (tgt == basis.end()) {
            if (!db.is_zero())
                throw std::invalid_argument("image_subcomplex: image not closed under d");
            continue;
        }
        diff[hq] = solve_in_lattice(tgt->second, db);
    }
    return IntegerChainComplex(std::move(ranks), std::move(diff));
}

// per-q Euler characteristic identity between chain ranks and homology
inline bool euler_identity_holds(const IntegerChainComplex& c, const BigradedAbelianGroup& h) {
    std::map<int, long long> chain, hom;
    for (const auto& [hq, n] : c.ranks()) chain[hq.second] += hq.first % 2 == 0 ? n : -n;
    for (const auto& [hq, grp] : h.groups()) hom[hq.second] += hq.first % 2 == 0 ? grp.rank : -grp.rank;
    for (auto& [q, v] : chain)
        if (v != (hom.count(q) ? hom[q] : 0)) return false;
    for (auto& [q, v] : hom)
        if (v != (chain.count(q) ? chain[q] : 0)) return false;
    return true;
}

}  // namespace sln
