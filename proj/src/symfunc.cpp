#include "hlv/symfunc.hpp"

#include <algorithm>
#include <numeric>

namespace hlv {

namespace tables {
namespace {

using Mono = std::vector<int>;   // exponent vector in N variables
using PolyMap = std::map<Mono, Rat>;

PolyMap poly_mul(const PolyMap& a, const PolyMap& b) {
    PolyMap r;
    for (auto& [ea, ca] : a) {
        for (auto& [eb, cb] : b) {
            Mono e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rat& c = r[e];
            c += ca * cb;
            if (c == 0) r.erase(e);
        }
    }
    return r;
}

PolyMap power_sum_poly(int k, int N) {
    PolyMap r;
    for (int i = 0; i < N; ++i) {
        Mono e(N, 0);
        e[i] = k;
        r[e] = 1;
    }
    return r;
}

void enum_monomials(int k, int N, int pos, Mono& cur, PolyMap& out, bool squarefree) {
    if (pos == N) {
        if (k == 0) out[cur] = 1;
        return;
    }
    int cap = squarefree ? 1 : k;
    for (int e = 0; e <= cap; ++e) {
        cur[pos] = e;
        enum_monomials(k - e, N, pos + 1, cur, out, squarefree);
    }
    cur[pos] = 0;
}

PolyMap homogeneous_poly(int k, int N, bool squarefree) {
    PolyMap r;
    Mono cur(N, 0);
    enum_monomials(k, N, 0, cur, r, squarefree);
    return r;
}

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<std::vector<int>, size_t> index;
    // to_m[b][i] = m-coordinates of basis element b_{parts[i]}
    std::map<Basis, std::vector<std::vector<Rat>>> to_m;
    std::map<Basis, std::vector<std::vector<Rat>>> from_m;
};

std::vector<Rat> extract_m_coords(const PolyMap& poly, const std::vector<Partition>& parts, int N) {
    std::vector<Rat> row(parts.size(), 0);
    for (size_t j = 0; j < parts.size(); ++j) {
        Mono key(N, 0);
        const auto& pj = parts[j].parts();
        for (size_t i = 0; i < pj.size(); ++i) key[i] = pj[i];
        auto it = poly.find(key);
        if (it != poly.end()) row[j] = it->second;
    }
    return row;
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<Rat>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Rat>> a = m, inv(n, std::vector<Rat>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw Error("transition matrix is singular");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rat d = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

int permutation_sign(const std::vector<int>& sigma) {
    int inv = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

DegreeTables build_tables(int n) {
    DegreeTables tb;
    tb.parts = enumerate_partitions(n);
    for (size_t i = 0; i < tb.parts.size(); ++i) tb.index.emplace(tb.parts[i].parts(), i);
    size_t P = tb.parts.size();
    int N = std::max(n, 1);

    auto expand_products = [&](auto&& factor) {
        std::vector<std::vector<Rat>> rows(P);
        for (size_t i = 0; i < P; ++i) {
            PolyMap acc;
            acc[Mono(N, 0)] = 1;
            for (int part : tb.parts[i].parts()) acc = poly_mul(acc, factor(part));
            rows[i] = extract_m_coords(acc, tb.parts, N);
        }
        return rows;
    };

    tb.to_m[Basis::p] = expand_products([&](int k) { return power_sum_poly(k, N); });
    tb.to_m[Basis::h] = expand_products([&](int k) { return homogeneous_poly(k, N, false); });
    tb.to_m[Basis::e] = expand_products([&](int k) { return homogeneous_poly(k, N, true); });

    // identity for m
    std::vector<std::vector<Rat>> id(P, std::vector<Rat>(P, 0));
    for (size_t i = 0; i < P; ++i) id[i][i] = 1;
    tb.to_m[Basis::m] = id;

    // Schur via Jacobi-Trudi into the h rows
    std::vector<std::vector<Rat>> schur(P, std::vector<Rat>(P, 0));
    for (size_t i = 0; i < P; ++i) {
        const auto& la = tb.parts[i].parts();
        int l = static_cast<int>(la.size());
        std::vector<int> sigma(l);
        std::iota(sigma.begin(), sigma.end(), 0);
        if (l == 0) {
            // empty partition only occurs at n = 0
            schur[i][i] = 1;
            continue;
        }
        do {
            int sign = permutation_sign(sigma);
            std::vector<int> hs;
            bool dead = false;
            for (int r = 0; r < l && !dead; ++r) {
                int idx = la[r] - r + sigma[r];
                if (idx < 0) dead = true;
                else if (idx > 0) hs.push_back(idx);
            }
            if (dead) continue;
            Partition mu = sort_to_partition(hs);
            const auto& hrow = tb.to_m[Basis::h][tb.index.at(mu.parts())];
            for (size_t j = 0; j < P; ++j) schur[i][j] += Rat(sign) * hrow[j];
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    tb.to_m[Basis::s] = schur;

    for (auto& [b, rows] : tb.to_m) tb.from_m[b] = b == Basis::m ? id : invert(rows);
    return tb;
}

DegreeTables& degree_tables(int n) {
    if (n < 0) throw Error("negative degree");
    if (n > kDegreeCap) throw DegreeCapExceeded("degree " + std::to_string(n));
    static std::map<int, DegreeTables> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
    return it->second;
}

} // namespace

const std::vector<Partition>& partitions_of(int n) { return degree_tables(n).parts; }

size_t index_of(const Partition& la) { return degree_tables(la.size()).index.at(la.parts()); }

std::vector<Rat> to_monomial(Basis b, const Partition& la) {
    return degree_tables(la.size()).to_m.at(b)[index_of(la)];
}

std::vector<Rat> from_monomial(Basis b, const Partition& mu) {
    return degree_tables(mu.size()).from_m.at(b)[index_of(mu)];
}

namespace {
// b1_la expressed in basis b2 (memoized; conversions run hot inside kernels).
const std::vector<Rat>& basis_to_basis(Basis b1, Basis b2, const Partition& la) {
    static std::map<std::tuple<Basis, Basis, std::vector<int>>, std::vector<Rat>> cache;
    auto key = std::make_tuple(b1, b2, la.parts());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& tb = degree_tables(la.size());
    const auto& row_m = tb.to_m.at(b1)[index_of(la)];
    const auto& inv = tb.from_m.at(b2);
    std::vector<Rat> out(row_m.size(), 0);
    for (size_t mu = 0; mu < row_m.size(); ++mu) {
        if (row_m[mu] == 0) continue;
        for (size_t nu = 0; nu < out.size(); ++nu) out[nu] += row_m[mu] * inv[mu][nu];
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}
} // namespace

} // namespace tables

SymFunc SymFunc::convert(Basis target) const {
    if (target == basis_) return *this;
    SymFunc r(vars_, target);
    for (auto& [la, c] : terms_) {
        const auto& row = tables::basis_to_basis(basis_, target, la);
        const auto& parts = tables::partitions_of(la.size());
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0) r.add_term(parts[j], c * Scalar(vars_, row[j]));
        }
    }
    return r;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(vars_, basis_);
    for (auto& [la, c] : terms_) r.add_term(la, -c);
    return r;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    check_same_vars(a.vars_, b.vars_);
    if (a.basis_ != b.basis_) return a.convert(Basis::m) + b.convert(Basis::m);
    SymFunc r = a;
    for (auto& [la, c] : b.terms_) r.add_term(la, c);
    return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    check_same_vars(a.vars_, b.vars_);
    SymFunc ap = a.convert(Basis::p), bp = b.convert(Basis::p);
    SymFunc r(a.vars_, Basis::p);
    for (auto& [la, ca] : ap.terms()) {
        for (auto& [mu, cb] : bp.terms()) {
            r.add_term(Partition::disjoint_union(la, mu), ca * cb);
        }
    }
    return r.convert(Basis::m);
}

SymFunc operator*(const SymFunc& a, const Scalar& c) {
    SymFunc r(a.vars_, a.basis_);
    for (auto& [la, v] : a.terms_) r.add_term(la, v * c);
    return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    SymFunc am = a.convert(Basis::m), bm = b.convert(Basis::m);
    if (am.terms().size() != bm.terms().size()) return false;
    auto it = bm.terms().begin();
    for (auto& [la, c] : am.terms()) {
        if (!(la == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

Scalar hall_pair(const SymFunc& F, const SymFunc& G) {
    SymFunc fp = F.convert(Basis::p), gp = G.convert(Basis::p);
    Scalar r(F.vars());
    for (auto& [la, cf] : fp.terms()) {
        Scalar cg = gp.coefficient(la);
        if (cg.is_zero()) continue;
        r += cf * cg * Scalar(F.vars(), z_factor(la));
    }
    return r;
}

Scalar qt_pair(const SymFunc& F, const SymFunc& G) {
    const VarSetPtr& vars = F.vars();
    Scalar q = Scalar::variable(vars, "q"), t = Scalar::variable(vars, "t"), one(vars, 1);
    SymFunc fp = F.convert(Basis::p), gp = G.convert(Basis::p);
    Scalar r(vars);
    for (auto& [la, cf] : fp.terms()) {
        Scalar cg = gp.coefficient(la);
        if (cg.is_zero()) continue;
        Scalar twist(vars, 1);
        for (int part : la.parts()) twist *= (q.pow(part) - one) * (one - t.pow(part));
        r += cf * cg * twist * Scalar(vars, z_factor(la));
    }
    return r;
}

// ---------------------------------------------------------------------------
// tensors

TensorSym TensorSym::convert(Basis target) const {
    if (target == basis_) return *this;
    TensorSym r(k_, vars_, target);
    for (auto& [tu, c] : terms_) {
        // expand slot by slot
        std::vector<std::pair<Tuple, Scalar>> acc{{Tuple{}, c}};
        for (int slot = 0; slot < k_; ++slot) {
            const auto& row = tables::basis_to_basis(basis_, target, tu[slot]);
            const auto& parts = tables::partitions_of(tu[slot].size());
            std::vector<std::pair<Tuple, Scalar>> next;
            for (auto& [pref, pc] : acc) {
                for (size_t j = 0; j < row.size(); ++j) {
                    if (row[j] == 0) continue;
                    Tuple t2 = pref;
                    t2.push_back(parts[j]);
                    next.emplace_back(std::move(t2), pc * Scalar(vars_, row[j]));
                }
            }
            acc = std::move(next);
        }
        for (auto& [t2, c2] : acc) r.add_term(t2, c2);
    }
    return r;
}

TensorSym operator+(const TensorSym& a, const TensorSym& b) {
    if (a.k_ != b.k_) throw Error("tensor arity mismatch");
    if (a.basis_ != b.basis_) return a.convert(Basis::m) + b.convert(Basis::m);
    TensorSym r = a;
    for (auto& [tu, c] : b.terms_) r.add_term(tu, c);
    return r;
}

TensorSym operator-(const TensorSym& a, const TensorSym& b) { return a + b * Scalar(b.vars(), -1); }

TensorSym operator*(const TensorSym& a, const TensorSym& b) {
    if (a.k_ != b.k_) throw Error("tensor arity mismatch");
    TensorSym ap = a.convert(Basis::p), bp = b.convert(Basis::p);
    TensorSym r(a.k_, a.vars_, Basis::p);
    for (auto& [ta, ca] : ap.terms()) {
        for (auto& [tb, cb] : bp.terms()) {
            TensorSym::Tuple tu(a.k_);
            for (int i = 0; i < a.k_; ++i) tu[i] = Partition::disjoint_union(ta[i], tb[i]);
            r.add_term(tu, ca * cb);
        }
    }
    return a.basis() == Basis::p && b.basis() == Basis::p ? r : r.convert(Basis::m);
}

TensorSym operator*(const TensorSym& a, const Scalar& c) {
    TensorSym r(a.k_, a.vars_, a.basis_);
    for (auto& [tu, v] : a.terms_) r.add_term(tu, v * c);
    return r;
}

bool operator==(const TensorSym& a, const TensorSym& b) {
    TensorSym am = a.convert(Basis::m), bm = b.convert(Basis::m);
    if (am.terms().size() != bm.terms().size()) return false;
    auto it = bm.terms().begin();
    for (auto& [tu, c] : am.terms()) {
        if (it->first != tu || c != it->second) return false;
        ++it;
    }
    return true;
}

TensorSym TensorSym::adams(int n) const {
    if (basis_ != Basis::p) throw Error("adams acts on the p basis");
    TensorSym r(k_, vars_, Basis::p);
    for (auto& [tu, c] : terms_) {
        Tuple t2(k_);
        for (int i = 0; i < k_; ++i) {
            std::vector<int> parts = tu[i].parts();
            for (int& x : parts) x *= n;
            t2[i] = Partition(std::move(parts));
        }
        r.add_term(t2, c.adams(n));
    }
    return r;
}

Scalar TensorSym::pair_with_h(const std::vector<Partition>& mus) const {
    if (static_cast<int>(mus.size()) != k_) throw Error("tensor arity mismatch");
    return convert(Basis::m).coefficient(mus);
}

TensorSym TensorSym::embed(const SymFunc& f, int k, int slot) {
    TensorSym r(k, f.vars(), f.basis());
    for (auto& [la, c] : f.terms()) {
        Tuple tu(k);
        tu[slot] = la;
        r.add_term(tu, c);
    }
    return r;
}

SymFunc TensorSym::to_symfunc() const {
    if (k_ != 1) throw Error("not a one-alphabet tensor");
    SymFunc f(vars_, basis_);
    for (auto& [tu, c] : terms_) f.add_term(tu[0], c);
    return f;
}

// ---------------------------------------------------------------------------
// plethysm

AlphabetExpr AlphabetExpr::alphabet(int index) {
    AlphabetExpr e(Kind::Alphabet);
    e.index_ = index;
    return e;
}

AlphabetExpr AlphabetExpr::scalar(Scalar value) {
    AlphabetExpr e(Kind::ScalarLeaf);
    e.value_ = std::make_shared<const Scalar>(std::move(value));
    return e;
}

AlphabetExpr operator+(const AlphabetExpr& a, const AlphabetExpr& b) {
    AlphabetExpr e(AlphabetExpr::Kind::Add);
    e.lhs_ = std::make_shared<const AlphabetExpr>(a);
    e.rhs_ = std::make_shared<const AlphabetExpr>(b);
    return e;
}

AlphabetExpr operator-(const AlphabetExpr& a, const AlphabetExpr& b) {
    AlphabetExpr e(AlphabetExpr::Kind::Sub);
    e.lhs_ = std::make_shared<const AlphabetExpr>(a);
    e.rhs_ = std::make_shared<const AlphabetExpr>(b);
    return e;
}

AlphabetExpr operator*(const AlphabetExpr& a, const AlphabetExpr& b) {
    AlphabetExpr e(AlphabetExpr::Kind::Mul);
    e.lhs_ = std::make_shared<const AlphabetExpr>(a);
    e.rhs_ = std::make_shared<const AlphabetExpr>(b);
    return e;
}

TensorSym AlphabetExpr::power_sum(int n, int k, const VarSetPtr& vars) const {
    switch (kind_) {
        case Kind::Alphabet: {
            if (index_ >= k) throw Error("alphabet index out of range");
            TensorSym r(k, vars, Basis::p);
            TensorSym::Tuple tu(k);
            tu[index_] = Partition{n};
            r.add_term(tu, Scalar(vars, 1));
            return r;
        }
        case Kind::ScalarLeaf: {
            check_same_vars(vars, value_->vars());
            TensorSym r(k, vars, Basis::p);
            r.add_term(TensorSym::Tuple(k), value_->adams(n));
            return r;
        }
        case Kind::Add:
            return lhs_->power_sum(n, k, vars) + rhs_->power_sum(n, k, vars);
        case Kind::Sub:
            return lhs_->power_sum(n, k, vars) - rhs_->power_sum(n, k, vars);
        case Kind::Mul:
            return lhs_->power_sum(n, k, vars) * rhs_->power_sum(n, k, vars);
    }
    throw Error("unreachable");
}

TensorSym plethysm(const SymFunc& F, const AlphabetExpr& A, int k) {
    SymFunc fp = F.convert(Basis::p);
    TensorSym r(k, F.vars(), Basis::p);
    for (auto& [la, c] : fp.terms()) {
        TensorSym term = TensorSym::one(k, F.vars(), Basis::p) * c;
        for (int part : la.parts()) term = term * A.power_sum(part, k, F.vars());
        r += term;
    }
    return r.convert(Basis::m);
}

SymFunc plethysm1(const SymFunc& F, const AlphabetExpr& A) {
    return plethysm(F, A, 1).to_symfunc();
}

Scalar plethysm_scalar(const SymFunc& F, const Scalar& a) {
    TensorSym t = plethysm(F, AlphabetExpr::scalar(a), 0);
    return t.coefficient(TensorSym::Tuple{});
}

Scalar extend_vars(const Scalar& s, const VarSetPtr& target) {
    if (*s.vars() == *target) return s;
    auto remap = [&](const MultiPoly& p) {
        std::vector<size_t> to(p.vars()->size());
        for (size_t i = 0; i < to.size(); ++i) to[i] = target->index(p.vars()->name(i));
        MultiPoly r(target);
        for (auto& [e, c] : p.terms()) {
            ExpVec e2(target->size(), 0);
            for (size_t i = 0; i < e.size(); ++i) e2[to[i]] = e[i];
            r.add_term(e2, c);
        }
        return r;
    };
    return Scalar(remap(s.num()), remap(s.den()));
}

SymFunc extend_vars(const SymFunc& f, const VarSetPtr& target) {
    SymFunc r(target, f.basis());
    for (auto& [la, c] : f.terms()) r.add_term(la, extend_vars(c, target));
    return r;
}

} // namespace hlv
