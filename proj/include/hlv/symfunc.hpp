// Graded symmetric functions in one or several alphabets: basis conversions,
// Hall and (q,t) pairings, and plethystic substitution.
#pragma once

#include <memory>
#include <vector>

#include "hlv/partition.hpp"

namespace hlv {

enum class Basis { m, h, e, p, s };

// Degree cap for the transition-matrix tables. Everything the acceptance
// suite touches stays at degree <= 6; the cap leaves headroom.
constexpr int kDegreeCap = 8;

namespace tables {
const std::vector<Partition>& partitions_of(int n);
size_t index_of(const Partition& la);
// Expansion of the basis element indexed by la in the monomial basis of its
// degree (coordinates in the canonical partition order).
std::vector<Rat> to_monomial(Basis b, const Partition& la);
// Row mu of the inverse transition: m_mu in basis b.
std::vector<Rat> from_monomial(Basis b, const Partition& mu);
} // namespace tables

class SymFunc {
public:
    using TermMap = std::map<Partition, Scalar, PartitionLess>;

    SymFunc(VarSetPtr vars, Basis basis) : vars_(std::move(vars)), basis_(basis) {}
    static SymFunc zero(const VarSetPtr& vars, Basis basis = Basis::m) { return SymFunc(vars, basis); }
    // The basis element b_la itself.
    static SymFunc element(const VarSetPtr& vars, Basis basis, const Partition& la) {
        SymFunc f(vars, basis);
        f.add_term(la, Scalar(vars, 1));
        return f;
    }

    const VarSetPtr& vars() const { return vars_; }
    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& la, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(la, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    Scalar coefficient(const Partition& la) const {
        auto it = terms_.find(la);
        return it == terms_.end() ? Scalar(vars_) : it->second;
    }

    SymFunc convert(Basis target) const;

    SymFunc operator-() const;
    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b); // via the p basis
    friend SymFunc operator*(const SymFunc& a, const Scalar& c);
    friend SymFunc operator*(const Scalar& c, const SymFunc& a) { return a * c; }
    SymFunc& operator+=(const SymFunc& b) { return *this = *this + b; }

    // Equality of the underlying symmetric functions (compared in m).
    friend bool operator==(const SymFunc& a, const SymFunc& b);

    // Apply a map to every coefficient (substitutions, specializations).
    template <typename F>
    SymFunc map_coefficients(F&& f) const {
        SymFunc r(vars_, basis_);
        for (auto& [la, c] : terms_) r.add_term(la, f(c));
        return r;
    }

private:
    VarSetPtr vars_;
    Basis basis_;
    TermMap terms_;
};

Scalar hall_pair(const SymFunc& F, const SymFunc& G);
Scalar qt_pair(const SymFunc& F, const SymFunc& G);

// Tensor products of symmetric functions over k alphabets. All slots share
// one basis tag. Tuples may mix degrees; the series layer enforces the
// equal-degree shape it needs.
class TensorSym {
public:
    using Tuple = std::vector<Partition>;
    struct TupleLess {
        bool operator()(const Tuple& a, const Tuple& b) const {
            PartitionLess less;
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return less(a[i], b[i]);
            }
            return false;
        }
    };
    using TermMap = std::map<Tuple, Scalar, TupleLess>;

    TensorSym(int k, VarSetPtr vars, Basis basis) : k_(k), vars_(std::move(vars)), basis_(basis) {}
    static TensorSym one(int k, const VarSetPtr& vars, Basis basis) {
        TensorSym t(k, vars, basis);
        t.add_term(Tuple(k), Scalar(vars, 1));
        return t;
    }

    int alphabets() const { return k_; }
    Basis basis() const { return basis_; }
    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Tuple& tu, const Scalar& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(tu.size()) != k_) throw Error("tuple arity mismatch");
        auto [it, fresh] = terms_.emplace(tu, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    Scalar coefficient(const Tuple& tu) const {
        auto it = terms_.find(tu);
        return it == terms_.end() ? Scalar(vars_) : it->second;
    }

    TensorSym convert(Basis target) const; // per-slot basis change

    friend TensorSym operator+(const TensorSym& a, const TensorSym& b);
    friend TensorSym operator-(const TensorSym& a, const TensorSym& b);
    friend TensorSym operator*(const TensorSym& a, const TensorSym& b); // via p per slot
    friend TensorSym operator*(const TensorSym& a, const Scalar& c);
    friend TensorSym operator*(const Scalar& c, const TensorSym& a) { return a * c; }
    TensorSym& operator+=(const TensorSym& b) { return *this = *this + b; }

    friend bool operator==(const TensorSym& a, const TensorSym& b);

    // The lambda-ring p_n: scales every part and every coefficient exponent.
    // Defined on the p basis only.
    TensorSym adams(int n) const;

    // Hall pairing against prod_i h_{mu^{(i)}} (reads m-coefficients).
    Scalar pair_with_h(const std::vector<Partition>& mus) const;

    template <typename F>
    TensorSym map_coefficients(F&& f) const {
        TensorSym r(k_, vars_, basis_);
        for (auto& [tu, c] : terms_) r.add_term(tu, f(c));
        return r;
    }

    // Embed a one-alphabet function into slot `slot` of a k-alphabet tensor.
    static TensorSym embed(const SymFunc& f, int k, int slot);
    SymFunc to_symfunc() const; // requires k == 1

private:
    int k_;
    VarSetPtr vars_;
    Basis basis_;
    TermMap terms_;
};

// Alphabet expressions for plethystic substitution. Scalar leaves may be any
// rational function: p_n acts on them through the usual lambda-ring structure
// (exponents times n), which covers monomials and geometric leaves 1/(1-v)
// alike.
class AlphabetExpr {
public:
    static AlphabetExpr alphabet(int index);
    static AlphabetExpr scalar(Scalar value);
    friend AlphabetExpr operator+(const AlphabetExpr& a, const AlphabetExpr& b);
    friend AlphabetExpr operator-(const AlphabetExpr& a, const AlphabetExpr& b);
    friend AlphabetExpr operator*(const AlphabetExpr& a, const AlphabetExpr& b);

    // p_n of this expression as a k-alphabet tensor in the p basis.
    TensorSym power_sum(int n, int k, const VarSetPtr& vars) const;

private:
    enum class Kind { Alphabet, ScalarLeaf, Add, Sub, Mul };
    AlphabetExpr(Kind kind) : kind_(kind) {}

    Kind kind_;
    int index_ = 0;
    std::shared_ptr<const Scalar> value_;
    std::shared_ptr<const AlphabetExpr> lhs_, rhs_;
};

// F[A] over k alphabets.
TensorSym plethysm(const SymFunc& F, const AlphabetExpr& A, int k);
SymFunc plethysm1(const SymFunc& F, const AlphabetExpr& A);
// F evaluated at a pure scalar alphabet.
Scalar plethysm_scalar(const SymFunc& F, const Scalar& a);

// Move a value into a larger variable set (names must embed).
Scalar extend_vars(const Scalar& s, const VarSetPtr& target);
SymFunc extend_vars(const SymFunc& f, const VarSetPtr& target);

} // namespace hlv
