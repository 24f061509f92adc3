// Sparse Laurent polynomials over Q in a fixed ordered variable list.
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "hlv/varset.hpp"

namespace hlv {

using Rat = mpq_class;
using ExpVec = std::vector<int>;

inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

// Descending lexicographic order on exponent vectors: map iteration starts at
// the leading term.
struct LexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rat, LexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}
    MultiPoly(VarSetPtr vars, const Rat& c) : vars_(std::move(vars)) {
        if (c != 0) terms_.emplace(ExpVec(vars_->size(), 0), c);
    }

    static MultiPoly zero(const VarSetPtr& vars) { return MultiPoly(vars); }
    static MultiPoly constant(const VarSetPtr& vars, const Rat& c) { return MultiPoly(vars, c); }
    static MultiPoly variable(const VarSetPtr& vars, const std::string& name, int power = 1) {
        MultiPoly p(vars);
        ExpVec e(vars->size(), 0);
        e[vars->index(name)] = power;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }
    static MultiPoly monomial(const VarSetPtr& vars, ExpVec e, const Rat& c) {
        MultiPoly p(vars);
        if (c != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_vec(terms_.begin()->first));
    }
    bool is_monomial() const { return terms_.size() == 1; }

    // Leading term under the fixed order; poly must be nonzero.
    const std::pair<const ExpVec, Rat>& leading() const { return *terms_.begin(); }

    void add_term(const ExpVec& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_same_vars(a.vars_, b.vars_);
        MultiPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check_same_vars(a.vars_, b.vars_);
        MultiPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_same_vars(a.vars_, b.vars_);
        MultiPoly r(a.vars_);
        ExpVec e(a.vars_ ? a.vars_->size() : 0);
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    friend MultiPoly operator*(const MultiPoly& a, const Rat& c) {
        MultiPoly r(a.vars_);
        if (c == 0) return r;
        for (auto& [e, v] : a.terms_) r.terms_.emplace(e, v * c);
        return r;
    }
    friend MultiPoly operator*(const Rat& c, const MultiPoly& a) { return a * c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Adams operation: multiply every exponent by n (the lambda-ring p_n on a
    // Laurent polynomial ring is the ring map x_i -> x_i^n).
    MultiPoly adams(int n) const {
        MultiPoly r(vars_);
        for (auto& [e, c] : terms_) {
            ExpVec e2(e);
            for (auto& x : e2) x *= n;
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    // Componentwise minimum of exponents over all terms (the monomial content
    // exponent). Poly must be nonzero.
    ExpVec min_exponents() const;
    // Divide by the monomial x^e (exponents may be negative).
    MultiPoly shifted(const ExpVec& e) const;

    static bool is_zero_vec(const ExpVec& e) {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }

private:
    VarSetPtr vars_;
    TermMap terms_;
};

// Exact division; throws NotDivisible when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
// Like exact_divide but returns false instead of throwing.
bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quot);

// GCD normalized to leading coefficient +1. gcd(0, b) = normalized b.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Simultaneous substitution of polynomials for the listed variable indices;
// untouched variables pass through. Substituted variables must not occur with
// negative exponents (callers clear monomial content first).
MultiPoly substitute(const MultiPoly& a, const std::map<size_t, MultiPoly>& bindings);

} // namespace hlv
