#pragma once

// The free integer module on tuples of partitions: the Schur basis of a
// block-symmetric polynomial ring Sym(n_1) (x) ... (x) Sym(n_b).
// Multiplication is Schur-native: Pieri rules for e_k/h_k and dual
// Jacobi-Trudi for general Schur factors.  Monomial expansion exists only
// as a test oracle.

#include <sln/partition.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sln {

using PartitionTuple = std::vector<Partition>;

struct BlockShape {
    std::vector<int> sizes;  // block alphabet sizes, >= 0
    int ambient = 0;         // ambient alphabet size, >= sum of sizes

    BlockShape() = default;
    BlockShape(std::vector<int> s, int n) : sizes(std::move(s)), ambient(n) {
        int total = 0;
        for (int x : sizes) {
            if (x < 0) throw std::invalid_argument("BlockShape: negative block size");
            total += x;
        }
        if (total > ambient) throw std::invalid_argument("BlockShape: blocks exceed ambient alphabet");
    }
    static BlockShape exact(std::vector<int> s) {
        int total = 0;
        for (int x : s) total += x;
        return BlockShape(std::move(s), total);
    }

    int blocks() const { return static_cast<int>(sizes.size()); }
    int total() const {
        int t = 0;
        for (int x : sizes) t += x;
        return t;
    }
    bool operator==(const BlockShape& o) const { return sizes == o.sizes && ambient == o.ambient; }
};

inline int tuple_weight(const PartitionTuple& t) {
    int w = 0;
    for (const Partition& p : t) w += p.weight();
    return w;
}

// fixed total order on tuples: weight, then lexicographic blockwise
struct TupleLess {
    bool operator()(const PartitionTuple& a, const PartitionTuple& b) const {
        int wa = tuple_weight(a), wb = tuple_weight(b);
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    }
};

// Partitions nu obtained from mu by adding a horizontal strip of size k
// (at most one new box per column), with at most max_parts parts.
inline std::vector<Partition> horizontal_strip_additions(const Partition& mu, int k, int max_parts) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> nu;
    // row i can grow to at most mu_{i-1} (so the strip is horizontal)
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        int rows_possible = std::min(max_parts, mu.length() + 1);
        if (row > rows_possible) {
            if (remaining == 0) out.push_back(Partition(nu));
            return;
        }
        int lo = mu.part(row);
        int hi = row == 1 ? mu.part(1) + remaining : std::min(mu.part(row - 1), mu.part(row) + remaining);
        for (int v = hi; v >= lo; --v) {
            nu.push_back(v);
            rec(row + 1, remaining - (v - lo));
            nu.pop_back();
        }
    };
    rec(1, k);
    return out;
}

// Partitions nu obtained from mu by adding a vertical strip of size k
// (at most one new box per row), with at most max_parts parts.
inline std::vector<Partition> vertical_strip_additions(const Partition& mu, int k, int max_parts) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> nu;
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        int rows_possible = std::min(max_parts, mu.length() + k);
        if (row > rows_possible) {
            if (remaining == 0) out.push_back(Partition(nu));
            return;
        }
        for (int add = std::min(1, remaining); add >= 0; --add) {
            int v = mu.part(row) + add;
            if (v == 0) {
                if (remaining == 0) out.push_back(Partition(nu));
                return;
            }
            if (row > 1 && v > nu[row - 2]) continue;
            nu.push_back(v);
            rec(row + 1, remaining - add);
            nu.pop_back();
        }
    };
    rec(1, k);
    return out;
}

class SchurElement {
  public:
    using Coeff = long long;
    using TermMap = std::map<PartitionTuple, Coeff, TupleLess>;

    SchurElement() = default;
    explicit SchurElement(BlockShape shape) : shape_(std::move(shape)) {}

    static SchurElement zero(const BlockShape& shape) { return SchurElement(shape); }
    static SchurElement unit(const BlockShape& shape) {
        SchurElement e(shape);
        e.add_term(PartitionTuple(shape.sizes.size()), 1);
        return e;
    }
    static SchurElement term(const BlockShape& shape, PartitionTuple t, Coeff c = 1) {
        SchurElement e(shape);
        e.add_term(std::move(t), c);
        return e;
    }
    // s_lambda placed in one block, unit elsewhere
    static SchurElement block_class(const BlockShape& shape, int block, const Partition& lambda,
                                    Coeff c = 1) {
        if (block < 0 || block >= shape.blocks())
            throw std::invalid_argument("block_class: block index out of range");
        PartitionTuple t(shape.sizes.size());
        t[block] = lambda;
        return term(shape, std::move(t), c);
    }

    const BlockShape& shape() const { return shape_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(PartitionTuple t, Coeff c) {
        if (c == 0) return;
        if (static_cast<int>(t.size()) != shape_.blocks())
            throw std::invalid_argument("SchurElement: tuple arity mismatch");
        for (int b = 0; b < shape_.blocks(); ++b)
            if (t[b].length() > shape_.sizes[b]) return;  // identically zero in this shape
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(std::move(t), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SchurElement& operator+=(const SchurElement& o) {
        check_shape(o);
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }
    SchurElement operator+(const SchurElement& o) const {
        SchurElement r = *this;
        r += o;
        return r;
    }
    SchurElement operator-(const SchurElement& o) const {
        SchurElement r = *this;
        for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
        return r;
    }
    SchurElement scaled(Coeff k) const {
        SchurElement r(shape_);
        if (k != 0)
            for (const auto& [t, c] : terms_) r.add_term(t, c * k);
        return r;
    }
    bool operator==(const SchurElement& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [t, c] : terms_) {
            int w = tuple_weight(t);
            if (d < 0) d = w;
            else if (d != w) return false;
        }
        return true;
    }
    // q-degree = 2 * boxes; element must be homogeneous and nonzero
    int q_degree() const {
        if (terms_.empty()) throw std::invalid_argument("q_degree: zero element");
        if (!is_homogeneous()) throw std::invalid_argument("q_degree: inhomogeneous element");
        return 2 * tuple_weight(terms_.begin()->first);
    }

    // serialization: `c*s[l1|l2|...|lb]`, partitions as comma-separated parts
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [t, c] : terms_) {
            Coeff a = c;
            if (first) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1) s += std::to_string(a) + "*";
            s += "s[";
            for (size_t b = 0; b < t.size(); ++b) {
                if (b) s += "|";
                s += t[b].to_string();
            }
            s += "]";
        }
        return s;
    }

  private:
    void check_shape(const SchurElement& o) const {
        if (!(shape_ == o.shape_)) throw std::invalid_argument("SchurElement: shape mismatch");
    }

    BlockShape shape_;
    TermMap terms_;
};

// multiply by h_k of one block (Pieri, horizontal strips)
inline SchurElement pieri_h(int k, int block, const SchurElement& v) {
    if (block < 0 || block >= v.shape().blocks())
        throw std::invalid_argument("pieri_h: block index out of range");
    if (k < 0) throw std::invalid_argument("pieri_h: negative k");
    if (k == 0) return v;
    SchurElement out(v.shape());
    int cap = v.shape().sizes[block];
    for (const auto& [t, c] : v.terms()) {
        for (const Partition& nu : horizontal_strip_additions(t[block], k, cap)) {
            PartitionTuple t2 = t;
            t2[block] = nu;
            out.add_term(std::move(t2), c);
        }
    }
    return out;
}

// multiply by e_k of one block (Pieri, vertical strips)
inline SchurElement pieri_e(int k, int block, const SchurElement& v) {
    if (block < 0 || block >= v.shape().blocks())
        throw std::invalid_argument("pieri_e: block index out of range");
    if (k < 0) throw std::invalid_argument("pieri_e: negative k");
    if (k == 0) return v;
    SchurElement out(v.shape());
    int cap = v.shape().sizes[block];
    if (k > cap) return out;  // e_k vanishes beyond the alphabet size
    for (const auto& [t, c] : v.terms()) {
        for (const Partition& nu : vertical_strip_additions(t[block], k, cap)) {
            PartitionTuple t2 = t;
            t2[block] = nu;
            out.add_term(std::move(t2), c);
        }
    }
    return out;
}

// multiply by s_lambda of one block via the dual Jacobi-Trudi determinant
// s_lambda = det(e_{lambda'_i - i + j}); single rows/columns short-circuit
// to the Pieri rules.
inline SchurElement multiply_block_schur(const SchurElement& v, int block, const Partition& lambda) {
    if (lambda.empty()) return v;
    if (lambda.length() == 1) return pieri_h(lambda.part(1), block, v);
    if (lambda.part(1) == 1) return pieri_e(lambda.length(), block, v);
    Partition lt = lambda.transpose();
    const int m = lt.length();
    SchurElement out(v.shape());
    // expand det over permutations, recursing on rows, pruning zero entries
    std::vector<bool> used(m, false);
    std::function<void(int, int, const SchurElement&)> rec = [&](int i, int sign, const SchurElement& acc) {
        if (acc.is_zero()) return;
        if (i == m) {
            out += sign > 0 ? acc : acc.scaled(-1);
            return;
        }
        for (int j = 0; j < m; ++j) {
            if (used[j]) continue;
            int idx = lt.part(i + 1) - (i + 1) + (j + 1);
            if (idx < 0 || idx > v.shape().sizes[block]) continue;  // e vanishes
            // sign of placing column j at row i: count inversions incrementally
            int swaps = 0;
            for (int j2 = 0; j2 < j; ++j2)
                if (!used[j2]) ++swaps;
            used[j] = true;
            rec(i + 1, swaps % 2 == 0 ? sign : -sign, idx == 0 ? acc : pieri_e(idx, block, acc));
            used[j] = false;
        }
    };
    rec(0, 1, v);
    return out;
}

// full product: blockwise via iterated dual Jacobi-Trudi
inline SchurElement schur_multiply(const SchurElement& u, const SchurElement& v) {
    if (!(u.shape() == v.shape())) throw std::invalid_argument("schur_multiply: shape mismatch");
    SchurElement out(u.shape());
    for (const auto& [tu, cu] : u.terms()) {
        SchurElement acc = v.scaled(cu);
        for (int b = 0; b < u.shape().blocks() && !acc.is_zero(); ++b)
            acc = multiply_block_schur(acc, b, tu[b]);
        out += acc;
    }
    return out;
}

// Littlewood-Richardson coefficient c^nu_{lambda mu}; alphabet-independent.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() + mu.weight() != nu.weight()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    int cap = mu.length() + (lambda.empty() ? 0 : lambda.part(1)) + lambda.length();
    cap = std::max(cap, nu.length());
    BlockShape shape = BlockShape::exact({cap});
    SchurElement prod = multiply_block_schur(SchurElement::block_class(shape, 0, mu), 0, lambda);
    auto it = prod.terms().find(PartitionTuple{nu});
    return it == prod.terms().end() ? 0 : it->second;
}

// sum over compositions m = m_1 + ... of e_{m_i} placed in the listed
// blocks; each factor is a single-column class
inline SchurElement elementary_in_blocks(int m, const BlockShape& shape,
                                         const std::vector<int>& blocks) {
    if (m < 0) throw std::invalid_argument("elementary_in_blocks: negative degree");
    SchurElement out(shape);
    PartitionTuple t(shape.sizes.size());
    std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
        if (i == blocks.size()) {
            if (remaining == 0) out.add_term(t, 1);
            return;
        }
        int b = blocks[i];
        int cap = std::min(shape.sizes[b], remaining);
        for (int mb = 0; mb <= cap; ++mb) {
            t[b] = mb == 0 ? Partition() : Partition::box(mb, 1);
            rec(i + 1, remaining - mb);
        }
        t[b] = Partition();
    };
    rec(0, m);
    return out;
}

// image of e_m of the full ambient alphabet in the block ring
inline SchurElement split_full_elementary(int m, const BlockShape& shape) {
    if (shape.total() != shape.ambient)
        throw std::invalid_argument("split_full_elementary: blocks must fill the ambient alphabet");
    std::vector<int> all(shape.sizes.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return elementary_in_blocks(m, shape, all);
}

// enumerate subpartitions of nu with at most max_parts parts
inline std::vector<Partition> subpartitions(const Partition& nu, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int row) {
        out.push_back(Partition(cur));
        if (row > std::min(max_parts, nu.length())) return;
        int hi = std::min(nu.part(row), row == 1 ? nu.part(1) : cur[row - 2]);
        for (int v = 1; v <= hi; ++v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// s_nu(A u B) = sum c^nu_{lambda mu} s_lambda(A) s_mu(B) over a two-block
// shape of sizes (a, b)
inline SchurElement split_schur(const Partition& nu, int a, int b) {
    BlockShape shape({a, b}, a + b);
    SchurElement out(shape);
    for (const Partition& lambda : subpartitions(nu, a))
        for (const Partition& mu : subpartitions(nu, b)) {
            if (lambda.weight() + mu.weight() != nu.weight()) continue;
            long long c = lr_coefficient(lambda, mu, nu);
            if (c != 0) out.add_term(PartitionTuple{lambda, mu}, c);
        }
    return out;
}

// reinterpret a two-block element into blocks (i, j) of a larger shape
inline SchurElement embed_two_blocks(const SchurElement& e, const BlockShape& target, int bi, int bj) {
    if (e.shape().blocks() != 2) throw std::invalid_argument("embed_two_blocks: source must have 2 blocks");
    if (bi == bj || bi < 0 || bj < 0 || bi >= target.blocks() || bj >= target.blocks())
        throw std::invalid_argument("embed_two_blocks: bad target blocks");
    SchurElement out(target);
    for (const auto& [t, c] : e.terms()) {
        PartitionTuple big(target.sizes.size());
        big[bi] = t[0];
        big[bj] = t[1];
        out.add_term(std::move(big), c);
    }
    return out;
}

}  // namespace sln
