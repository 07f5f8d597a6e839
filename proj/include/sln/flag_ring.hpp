#pragma once

// Degreewise integer presentations of quotient rings H*(BH)/I for H a
// product of unitary blocks, where I is generated by the positive-degree
// symmetric polynomials of one or more ambient unitary factors.  The
// construction is a degreewise Hermite-style reduction of the ideal
// lattice against the Schur-tuple basis of the block ring; quotient bases
// come from the echelon complement.  Borel's theorem guarantees these
// quotients are torsion-free, which is asserted, not assumed.

#include <sln/intmat.hpp>
#include <sln/laurent.hpp>
#include <sln/schur.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace sln {

// ordered block sizes summing to N, grouped contiguously into the factors
// of the ambient group (one factor = U(N); two factors = U(a) x U(N-a))
struct SubgroupBlocks {
    std::vector<int> blocks;
    std::vector<int> grouping;  // ambient factor sizes; defaults to {N}

    SubgroupBlocks() = default;
    explicit SubgroupBlocks(std::vector<int> b) : blocks(std::move(b)) { grouping = {total()}; validate(); }
    SubgroupBlocks(std::vector<int> b, std::vector<int> g) : blocks(std::move(b)), grouping(std::move(g)) {
        validate();
    }

    int total() const {
        int n = 0;
        for (int b : blocks) n += b;
        return n;
    }

    void validate() const {
        int n = 0;
        for (int b : blocks) {
            if (b < 0) throw std::invalid_argument("SubgroupBlocks: negative block");
            n += b;
        }
        int g = 0;
        for (int f : grouping) {
            if (f < 0) throw std::invalid_argument("SubgroupBlocks: negative factor");
            g += f;
        }
        if (g != n) throw std::invalid_argument("SubgroupBlocks: grouping does not sum to N");
        // factors must be unions of consecutive blocks
        size_t bi = 0;
        for (int f : grouping) {
            int acc = 0;
            while (acc < f) {
                if (bi >= blocks.size()) throw std::invalid_argument("SubgroupBlocks: grouping misaligned");
                acc += blocks[bi++];
            }
            if (acc != f) throw std::invalid_argument("SubgroupBlocks: factor boundary splits a block");
        }
        if (bi != blocks.size() && n > 0)
            throw std::invalid_argument("SubgroupBlocks: trailing blocks outside grouping");
    }

    // list of block indices belonging to each ambient factor
    std::vector<std::vector<int>> factor_blocks() const {
        std::vector<std::vector<int>> out;
        size_t bi = 0;
        for (int f : grouping) {
            std::vector<int> idx;
            int acc = 0;
            while (acc < f) {
                acc += blocks[bi];
                idx.push_back(static_cast<int>(bi));
                ++bi;
            }
            out.push_back(std::move(idx));
        }
        return out;
    }

    // real dimension of G/H with G the product of ambient unitary factors
    int homogeneous_dimension() const {
        int d = 0;
        for (int f : grouping) d += f * f;
        for (int b : blocks) d -= b * b;
        return d;
    }
};

namespace detail {

// Fully back-reduced sparse integer row echelon.  Rows are lattice
// elements in ambient coordinates; the pivot of a row is its leading
// column.  Invariants: entries of any row at other pivot columns are
// reduced mod that pivot (zero when the pivot is 1), and a pivot row has
// no entries before its pivot.
class SparseEchelon {
  public:
    using Row = std::map<int, Int>;

    const std::map<int, Row>& rows() const { return rows_; }
    bool has_pivot(int col) const { return rows_.count(col) != 0; }
    int rank() const { return static_cast<int>(rows_.size()); }

    void insert(Row row) {
        strip(row);
        while (!row.empty()) {
            int col = row.begin()->first;
            auto it = rows_.find(col);
            if (it == rows_.end()) {
                if (row.begin()->second < 0) negate(row);
                tail_reduce(row);
                install(col, std::move(row));
                return;
            }
            Row& piv = it->second;
            const Int& p = piv.at(col);
            const Int& a = row.begin()->second;
            if (a % p == 0) {
                axpy(row, -(a / p), piv);
            } else {
                Int g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
                Int pf = p / g, af = a / g;
                Row newpiv = combine(s, piv, t, row);
                Row rest = combine(pf, row, -af, piv);
                tail_reduce(newpiv);
                replace(col, std::move(newpiv));
                row = std::move(rest);
            }
        }
    }

    // canonical reduction: entries at pivot columns reduced into [0, pivot)
    void reduce(Row& v) const {
        strip(v);
        auto it = v.begin();
        while (it != v.end()) {
            int col = it->first;
            auto pit = rows_.find(col);
            if (pit == rows_.end()) { ++it; continue; }
            const Int& p = pit->second.at(col);
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), p.get_mpz_t());
            if (q != 0) axpy(v, -q, pit->second);
            it = v.lower_bound(col);
            if (it != v.end() && it->first == col) ++it;  // nonzero residue mod a nonunit pivot stays
        }
    }

    bool unit_pivots() const {
        for (const auto& [c, r] : rows_)
            if (r.at(c) != 1) return false;
        return true;
    }

    std::vector<int> nonunit_pivot_cols() const {
        std::vector<int> out;
        for (const auto& [c, r] : rows_)
            if (r.at(c) != 1) out.push_back(c);
        return out;
    }

  private:
    static void strip(Row& r) {
        for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    }
    static void negate(Row& r) {
        for (auto& [c, v] : r) v = -v;
    }
    // r += k * s
    static void axpy(Row& r, const Int& k, const Row& s) {
        for (const auto& [c, v] : s) {
            Int& x = r[c];
            x += k * v;
            if (x == 0) r.erase(c);
        }
    }
    static Row combine(const Int& ka, const Row& a, const Int& kb, const Row& b) {
        Row out;
        for (const auto& [c, v] : a) out[c] = ka * v;
        for (const auto& [c, v] : b) {
            Int& x = out[c];
            x += kb * v;
            if (x == 0) out.erase(c);
        }
        return out;
    }

    // reduce the non-leading entries of a row against existing pivots;
    // keeps entries at other pivot columns in [0, pivot), hence zero at
    // unit pivots, which the residual-lattice extraction relies on
    void tail_reduce(Row& r) {
        if (r.empty()) return;
        auto it = std::next(r.begin());
        while (it != r.end()) {
            int col = it->first;
            auto pit = rows_.find(col);
            if (pit == rows_.end()) { ++it; continue; }
            const Int& p = pit->second.at(col);
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), p.get_mpz_t());
            if (q != 0) axpy(r, -q, pit->second);
            it = r.lower_bound(col);
            if (it != r.end() && it->first == col) ++it;
        }
    }

    void unindex(int pivot_col, const Row& r) {
        for (const auto& [c, v] : r)
            if (c != pivot_col) uses_[c].erase(pivot_col);
    }
    void index(int pivot_col, const Row& r) {
        for (const auto& [c, v] : r)
            if (c != pivot_col) uses_[c].insert(pivot_col);
    }

    void install(int col, Row row) {
        rows_.emplace(col, std::move(row));
        index(col, rows_.at(col));
        back_reduce(col);
    }
    void replace(int col, Row row) {
        auto it = rows_.find(col);
        unindex(col, it->second);
        if (row.begin()->second < 0) negate(row);
        it->second = std::move(row);
        index(col, it->second);
        back_reduce(col);
    }
    // reduce every other row's entry at `col` mod the (possibly new) pivot
    void back_reduce(int col) {
        const Row& piv = rows_.at(col);
        const Int& p = piv.at(col);
        auto uit = uses_.find(col);
        if (uit == uses_.end()) return;
        std::vector<int> holders(uit->second.begin(), uit->second.end());
        for (int h : holders) {
            Row& r = rows_.at(h);
            auto eit = r.find(col);
            if (eit == r.end()) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), eit->second.get_mpz_t(), p.get_mpz_t());
            if (q == 0) continue;
            unindex(h, r);
            axpy(r, -q, piv);
            index(h, r);
        }
    }

    std::map<int, Row> rows_;
    std::map<int, std::set<int>> uses_;  // col -> pivot rows with an entry there
};

}  // namespace detail

// Exception carrying the degree where torsion was detected.
struct TorsionDetected : std::runtime_error {
    int degree;
    explicit TorsionDetected(int d)
        : std::runtime_error("quotient has torsion in degree " + std::to_string(d)), degree(d) {}
};

// A graded ring presented degreewise: ambient Schur-tuple bases, an ideal
// lattice in echelon form per degree, and a chosen free basis of the
// quotient with exact reduction maps.
class QuotientRingPresentation {
  public:
    struct Level {
        std::vector<PartitionTuple> ambient;          // fixed enumeration order
        std::map<PartitionTuple, int, TupleLess> index;
        detail::SparseEchelon ideal;
        std::vector<int> quotient_cols;               // echelon-complement columns
        // general-coordinates fallback (only when some pivot is nonunit):
        // quotient coordinates are obtained from reduced vectors restricted
        // to `mixed_cols` via the unimodular transform `coord`
        bool echelon_basis = true;
        std::vector<int> mixed_cols;
        IntMatrix coord;     // (#mixed) x (#mixed); quotient coords = last k rows of coord * v
        IntMatrix section;   // (#mixed) x k; column j = ambient (restricted) rep of basis j
        int rank = 0;
    };

    BlockShape shape;
    int max_degree = -2;   // highest materialized q-degree (even)
    bool complete = false; // true when all degrees above max_degree vanish

    int rank(int d) const {
        if (d < 0 || d % 2 != 0) return 0;
        auto it = levels_.find(d);
        return it == levels_.end() ? 0 : it->second.rank;
    }

    const Level& level(int d) const {
        auto it = levels_.find(d);
        if (it == levels_.end()) throw std::invalid_argument("level not materialized");
        return it->second;
    }
    bool has_level(int d) const { return levels_.count(d) != 0; }

    LaurentPoly poincare() const {
        LaurentPoly p;
        for (const auto& [d, lv] : levels_)
            if (lv.rank > 0) p.set(d, lv.rank);
        return p;
    }

    // the ambient representative of quotient basis element i in degree d,
    // as a sparse tuple combination
    std::vector<std::pair<PartitionTuple, Int>> basis_representative(int d, int i) const {
        const Level& lv = level(d);
        std::vector<std::pair<PartitionTuple, Int>> out;
        if (lv.echelon_basis) {
            out.push_back({lv.ambient[lv.quotient_cols[i]], 1});
        } else {
            for (int r = 0; r < lv.section.rows(); ++r)
                if (lv.section(r, i) != 0) out.push_back({lv.ambient[lv.mixed_cols[r]], lv.section(r, i)});
        }
        return out;
    }

    // reduce an ambient vector (sparse, by column index) to quotient coords
    std::vector<Int> reduce(int d, detail::SparseEchelon::Row v) const {
        const Level& lv = level(d);
        lv.ideal.reduce(v);
        std::vector<Int> out(lv.rank);
        if (lv.echelon_basis) {
            for (int i = 0; i < lv.rank; ++i) {
                auto it = v.find(lv.quotient_cols[i]);
                if (it != v.end()) {
                    out[i] = it->second;
                    v.erase(it);
                }
            }
            if (!v.empty())
                throw std::logic_error("reduce: residue outside the quotient basis columns");
        } else {
            IntMatrix vec(static_cast<int>(lv.mixed_cols.size()), 1);
            for (size_t r = 0; r < lv.mixed_cols.size(); ++r) {
                auto it = v.find(lv.mixed_cols[r]);
                if (it != v.end()) {
                    vec(static_cast<int>(r), 0) = it->second;
                    v.erase(it);
                }
            }
            if (!v.empty()) throw std::logic_error("reduce: residue outside mixed columns");
            IntMatrix w = lv.coord * vec;
            int k = lv.rank, off = w.rows() - k;
            for (int i = 0; i < k; ++i) out[i] = w(off + i, 0);
        }
        return out;
    }

    friend QuotientRingPresentation presentation_from_ideal(const BlockShape&,
                                                            const std::vector<SchurElement>&, int, bool);

  private:
    std::map<int, Level> levels_;
};

namespace detail {

inline std::vector<PartitionTuple> enumerate_tuples(const BlockShape& shape, int boxes) {
    std::vector<PartitionTuple> out;
    PartitionTuple cur(shape.sizes.size());
    std::function<void(int, int)> rec = [&](int block, int remaining) {
        if (block == shape.blocks()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (const Partition& p : enumerate_box(shape.sizes[block], remaining)) {
            if (p.weight() > remaining) continue;
            cur[block] = p;
            rec(block + 1, remaining - p.weight());
        }
        cur[block] = Partition();
    };
    rec(0, boxes);
    std::sort(out.begin(), out.end(), TupleLess());
    return out;
}

}  // namespace detail

// Build the degreewise presentation of (block ring)/(ideal generated by
// `generators`) through q-degree `through_degree`.  When `expect_free` is
// set, any torsion in any degree raises TorsionDetected.
inline QuotientRingPresentation presentation_from_ideal(const BlockShape& shape,
                                                        const std::vector<SchurElement>& generators,
                                                        int through_degree, bool expect_free = true) {
    for (const SchurElement& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("presentation_from_ideal: zero generator");
        if (!g.is_homogeneous()) throw std::invalid_argument("presentation_from_ideal: inhomogeneous generator");
    }
    QuotientRingPresentation pres;
    pres.shape = shape;
    pres.max_degree = through_degree - through_degree % 2;
    for (int d = 0; d <= through_degree; d += 2) {
        QuotientRingPresentation::Level lv;
        lv.ambient = detail::enumerate_tuples(shape, d / 2);
        for (size_t i = 0; i < lv.ambient.size(); ++i) lv.index.emplace(lv.ambient[i], static_cast<int>(i));
        // ideal lattice rows: generator * (ambient basis of complementary degree)
        for (const SchurElement& g : generators) {
            int dg = g.q_degree();
            if (dg > d) continue;
            const auto& lower = pres.level(d - dg).ambient;
            for (const PartitionTuple& t : lower) {
                SchurElement prod = schur_multiply(g, SchurElement::term(shape, t));
                detail::SparseEchelon::Row row;
                for (const auto& [tt, c] : prod.terms()) row[lv.index.at(tt)] = static_cast<long>(c);
                lv.ideal.insert(std::move(row));
            }
        }
        int n = static_cast<int>(lv.ambient.size());
        for (int c = 0; c < n; ++c)
            if (!lv.ideal.has_pivot(c)) lv.quotient_cols.push_back(c);
        if (lv.ideal.unit_pivots()) {
            lv.rank = static_cast<int>(lv.quotient_cols.size());
        } else {
            // residual coordinates: nonunit pivot columns plus free columns
            std::vector<int> nonunit = lv.ideal.nonunit_pivot_cols();
            lv.echelon_basis = false;
            lv.mixed_cols = nonunit;
            lv.mixed_cols.insert(lv.mixed_cols.end(), lv.quotient_cols.begin(), lv.quotient_cols.end());
            std::sort(lv.mixed_cols.begin(), lv.mixed_cols.end());
            std::map<int, int> where;
            for (size_t i = 0; i < lv.mixed_cols.size(); ++i) where[lv.mixed_cols[i]] = static_cast<int>(i);
            IntMatrix residual(static_cast<int>(nonunit.size()), static_cast<int>(lv.mixed_cols.size()));
            for (size_t r = 0; r < nonunit.size(); ++r)
                for (const auto& [c, v] : lv.ideal.rows().at(nonunit[r])) residual(static_cast<int>(r), where.at(c)) = v;
            SnfResult s = smith_normal_form(residual);
            for (const Int& dv : s.divisors)
                if (dv > 1) {
                    if (expect_free) throw TorsionDetected(d);
                    throw std::runtime_error("presentation_from_ideal: torsion in degree " +
                                             std::to_string(d) + " (unsupported)");
                }
            // with U residual V = D, the transform V^T carries the residual
            // row lattice onto the unit coordinate axes: quotient
            // coordinates of x are the trailing entries of V^T x, and the
            // basis section is the trailing rows of V^{-1}
            int nm = static_cast<int>(lv.mixed_cols.size());
            lv.rank = nm - s.rank;
            lv.coord = s.v.transpose();
            IntMatrix vinv = solve_in_lattice(s.v, IntMatrix::identity(nm));
            lv.section = IntMatrix(nm, lv.rank);
            for (int j = 0; j < lv.rank; ++j)
                for (int r = 0; r < nm; ++r) lv.section(r, j) = vinv(s.rank + j, r);
        }
        pres.levels_[d] = std::move(lv);
    }
    return pres;
}

// H*(G/H) for H given by SubgroupBlocks: the block ring modulo the
// positive-degree classes of every ambient factor, materialized through
// the top degree dim_R(G/H).  Torsion-freeness is Borel's theorem and is
// verified during construction.
inline QuotientRingPresentation build_quotient(const SubgroupBlocks& h) {
    h.validate();
    BlockShape shape = BlockShape::exact(h.blocks);
    std::vector<SchurElement> gens;
    auto factors = h.factor_blocks();
    for (size_t f = 0; f < factors.size(); ++f)
        for (int m = 1; m <= h.grouping[f]; ++m) gens.push_back(elementary_in_blocks(m, shape, factors[f]));
    QuotientRingPresentation pres = presentation_from_ideal(shape, gens, h.homogeneous_dimension(), true);
    pres.complete = true;
    return pres;
}

// the block ring itself, truncated; no ideal
inline QuotientRingPresentation ambient_presentation(const BlockShape& shape, int through_degree) {
    return presentation_from_ideal(shape, {}, through_degree, true);
}

// multiplication operator by a homogeneous class c: per materialized
// degree d, the matrix of quotient_d -> quotient_{d + deg c}
inline std::map<int, IntMatrix> mult_operator(const QuotientRingPresentation& p, const SchurElement& c) {
    if (c.is_zero()) {
        std::map<int, IntMatrix> zero;
        for (int d = 0; d <= p.max_degree; d += 2)
            if (p.rank(d) > 0) zero[d] = IntMatrix(0, p.rank(d));
        return zero;
    }
    if (!c.is_homogeneous()) throw std::invalid_argument("mult_operator: inhomogeneous class");
    int dc = c.q_degree();
    std::map<int, IntMatrix> out;
    for (int d = 0; d <= p.max_degree; d += 2) {
        int n = p.rank(d);
        if (n == 0) continue;
        int dt = d + dc;
        int m = dt <= p.max_degree ? p.rank(dt) : (p.complete ? 0 : -1);
        if (m < 0) continue;  // truncated ring: target outside the window
        IntMatrix mat(m, n);
        const auto& idx = p.level(dt).index;
        for (int j = 0; j < n && m > 0; ++j) {
            detail::SparseEchelon::Row row;
            for (const auto& [t, k] : p.basis_representative(d, j)) {
                SchurElement prod = schur_multiply(c, SchurElement::term(p.shape, t));
                for (const auto& [tt, coeff] : prod.terms()) {
                    Int& x = row[idx.at(tt)];
                    x += k * static_cast<long>(coeff);
                    if (x == 0) row.erase(idx.at(tt));
                }
            }
            std::vector<Int> coords = p.reduce(dt, std::move(row));
            for (int i = 0; i < m; ++i) mat(i, j) = coords[i];
        }
        out[d] = std::move(mat);
    }
    return out;
}

// the basepoint action of the i-th Chern class through a pair of blocks:
// multiplication by sum_{p+q=i} e_p(block_i) e_q(block_j)
inline std::map<int, IntMatrix> chern_action(const QuotientRingPresentation& p, int i,
                                             std::pair<int, int> blockpair) {
    if (blockpair.first == blockpair.second)
        throw std::invalid_argument("chern_action: blocks must be distinct");
    SchurElement c = elementary_in_blocks(i, p.shape, {blockpair.first, blockpair.second});
    return mult_operator(p, c);
}

}  // namespace sln
