#pragma once

// Partitions (Young diagrams), the constrained sets P(l,k), box complement
// and transpose, and the lattice-path bijection between P(r,s) and
// square-free index monomials in r+s letters.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace sln {

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition box(int l, int k) {
        if (l < 0 || k < 0) throw std::invalid_argument("box: negative dimensions");
        if (k == 0) return Partition();
        return Partition(std::vector<int>(l, k));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // the paper convention lambda_j = 0 for j beyond the last part, 1-based
    int part(int j) const {
        if (j < 1) throw std::invalid_argument("Partition::part: index is 1-based");
        return j <= length() ? parts_[j - 1] : 0;
    }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    bool fits_in_box(int l, int k) const { return length() <= l && (empty() || parts_[0] <= k); }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (parts_[i] < mu.parts_[i]) return false;
        return true;
    }

    Partition transpose() const {
        if (empty()) return Partition();
        std::vector<int> t(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++t[j];
        return Partition(std::move(t));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    // total order used for all deterministic basis enumerations:
    // weight first, then lexicographic on the part lists
    bool operator<(const Partition& o) const {
        int w = weight(), ow = o.weight();
        if (w != ow) return w < ow;
        return parts_ < o.parts_;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

  private:
    std::vector<int> parts_;
};

// complement within box(l,k), rotated: (lambda^c)_i = k - lambda_{l+1-i}
inline Partition complement(const Partition& lambda, int l, int k) {
    if (!lambda.fits_in_box(l, k))
        throw std::invalid_argument("complement: partition does not fit in box(" + std::to_string(l) +
                                    "," + std::to_string(k) + ")");
    std::vector<int> c;
    c.reserve(l);
    for (int i = 1; i <= l; ++i) c.push_back(k - lambda.part(l + 1 - i));
    return Partition(std::move(c));
}

// hat = transpose of the complement; lands in P(k,l)
inline Partition hat(const Partition& lambda, int l, int k) {
    return complement(lambda, l, k).transpose();
}

// All partitions in P(l,k), sorted by weight then lexicographically.
inline std::vector<Partition> enumerate_box(int l, int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxpart, int remaining_rows) -> void {
        out.push_back(Partition(cur));
        if (remaining_rows == 0) return;
        for (int p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            self(self, p, remaining_rows - 1);
            cur.pop_back();
        }
    };
    rec(rec, k, l);
    std::sort(out.begin(), out.end());
    return out;
}

// Strictly increasing index set J = (j_1 < ... < j_s) inside {1,...,n}.
// Each index j contributes a q-shift of 2j.
struct IndexSet {
    std::vector<int> elements;
    int ambient = 0;

    IndexSet() = default;
    IndexSet(std::vector<int> el, int n) : elements(std::move(el)), ambient(n) {
        for (size_t i = 0; i < elements.size(); ++i) {
            if (elements[i] < 1 || elements[i] > ambient)
                throw std::invalid_argument("IndexSet: element out of range");
            if (i + 1 < elements.size() && elements[i] >= elements[i + 1])
                throw std::invalid_argument("IndexSet: elements must be strictly increasing");
        }
    }

    int size() const { return static_cast<int>(elements.size()); }
    int q_weight() const {
        int w = 0;
        for (int j : elements) w += 2 * j;
        return w;
    }
};

// Lattice-path bijection between index sets and P(r,s).  Walk the D/L
// string at positions 1..r+s starting from the corner (s,r): an L at a
// position in J moves left, a D records a row of the current width.
inline Partition index_set_to_partition(const IndexSet& J, int r, int s) {
    if (J.size() != s) throw std::invalid_argument("index_set_to_partition: |J| != s");
    if (!J.elements.empty() && J.elements.back() > r + s)
        throw std::invalid_argument("index_set_to_partition: index exceeds r+s");
    std::vector<int> rows;
    int x = s;
    size_t jidx = 0;
    for (int pos = 1; pos <= r + s; ++pos) {
        if (jidx < J.elements.size() && J.elements[jidx] == pos) {
            --x;
            ++jidx;
        } else {
            rows.push_back(x);
        }
    }
    return Partition(std::move(rows));
}

inline IndexSet partition_to_index_set(const Partition& lambda, int r, int s) {
    if (!lambda.fits_in_box(r, s))
        throw std::invalid_argument("partition_to_index_set: partition not in P(r,s)");
    std::vector<int> J;
    int x = s, row = 1;
    for (int pos = 1; pos <= r + s; ++pos) {
        if (row <= r && lambda.part(row) == x) {
            ++row;  // D step
        } else {
            J.push_back(pos);  // L step
            --x;
        }
    }
    return IndexSet(std::move(J), r + s);
}

}  // namespace sln
