// Partition combinatorics and the partition-indexed scalar constants.
#pragma once

#include <vector>

#include "hlv/scalar.hpp"

namespace hlv {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw Error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;

    // Multiplicity of the part value v.
    int multiplicity(int v) const {
        int c = 0;
        for (int p : parts_)
            if (p == v) ++c;
        return c;
    }

    // Arm and leg lengths of every cell of the diagram.
    struct Cell {
        int arm;
        int leg;
    };
    std::vector<Cell> cells() const;

    // Union of parts (multiset sum), sorted decreasingly.
    static Partition disjoint_union(const Partition& a, const Partition& b);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
};

// Canonical order: by size, then reverse-lexicographic within a degree, so
// iteration matches the documented enumeration and printing order.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() > b.parts();
    }
};

Partition conjugate(const Partition& p);
bool dominance_leq(const Partition& mu, const Partition& lambda);
std::vector<Partition> enumerate_partitions(int n);

// Partition made by sorting a composition (positive entries) decreasingly.
Partition sort_to_partition(const std::vector<int>& composition);

// z_lambda(q,t) = prod over cells (q^a - t^{l+1})(q^{a+1} - t^l).
Scalar z_qt(const Partition& lambda, const VarSetPtr& vars);
// N_lambda(u) = prod over cells (q^a - u t^{1+l})(q^{a+1} - u^{-1} t^l); N_lambda(1) = z_qt.
Scalar N_u(const Partition& lambda, const Scalar& u);
// z_lambda = prod_i i^{m_i} m_i! (the power-sum norm).
Rat z_factor(const Partition& lambda);

} // namespace hlv
