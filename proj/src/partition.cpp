#include "hlv/partition.hpp"

#include <algorithm>

namespace hlv {

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(parts_[0], 0);
        for (int p : parts_) {
            for (int j = 0; j < p; ++j) cols[j]++;
        }
    }
    return Partition(std::move(cols));
}

std::vector<Partition::Cell> Partition::cells() const {
    Partition conj = conjugate();
    std::vector<Cell> out;
    for (int i = 0; i < length(); ++i) {
        for (int j = 0; j < parts_[i]; ++j) {
            out.push_back(Cell{parts_[i] - j - 1, conj.parts()[j] - i - 1});
        }
    }
    return out;
}

Partition Partition::disjoint_union(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) { return p.conjugate(); }

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw SizeMismatch("dominance compares equal sizes");
    int sm = 0, sl = 0;
    int k = std::max(mu.length(), lambda.length());
    for (int i = 0; i < k; ++i) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if (sm > sl) return false;
    }
    return true;
}

namespace {
void gen(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen(n - k, k, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw Error("negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    if (n == 0) return {Partition{}};
    return out;
}

Partition sort_to_partition(const std::vector<int>& composition) {
    std::vector<int> v = composition;
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

Scalar z_qt(const Partition& lambda, const VarSetPtr& vars) {
    Scalar q = Scalar::variable(vars, "q");
    Scalar t = Scalar::variable(vars, "t");
    Scalar one(vars, 1);
    Scalar r = one;
    for (auto [a, l] : lambda.cells()) {
        r *= (q.pow(a) - t.pow(l + 1)) * (q.pow(a + 1) - t.pow(l));
    }
    return r;
}

Scalar N_u(const Partition& lambda, const Scalar& u) {
    if (u.is_zero()) throw ZeroArgument();
    const VarSetPtr& vars = u.vars();
    Scalar q = Scalar::variable(vars, "q");
    Scalar t = Scalar::variable(vars, "t");
    Scalar uinv = u.inverse();
    Scalar r(vars, 1);
    for (auto [a, l] : lambda.cells()) {
        r *= (q.pow(a) - u * t.pow(l + 1)) * (q.pow(a + 1) - uinv * t.pow(l));
    }
    return r;
}

Rat z_factor(const Partition& lambda) {
    Rat z = 1;
    int prev = -1, mult = 0;
    auto flush = [&]() {
        for (int i = 2; i <= mult; ++i) z *= i; // m_i!
    };
    for (int p : lambda.parts()) {
        z *= p;
        if (p == prev) {
            ++mult;
        } else {
            flush();
            prev = p;
            mult = 1;
        }
    }
    flush();
    return z;
}

} // namespace hlv
