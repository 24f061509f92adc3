// Exact rational functions over Q in a fixed variable list: the coefficient
// field for everything downstream.
#pragma once

#include <map>
#include <string>

#include "hlv/multipoly.hpp"

namespace hlv {

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(VarSetPtr vars) : num_(MultiPoly::zero(vars)), den_(MultiPoly::constant(vars, 1)) {}
    Scalar(VarSetPtr vars, const Rat& c)
        : num_(MultiPoly::constant(vars, c)), den_(MultiPoly::constant(vars, 1)) {}
    explicit Scalar(MultiPoly num);
    Scalar(MultiPoly num, MultiPoly den);

    static Scalar variable(const VarSetPtr& vars, const std::string& name, int power = 1) {
        if (power >= 0) return Scalar(MultiPoly::variable(vars, name, power));
        return Scalar(MultiPoly::constant(vars, 1), MultiPoly::variable(vars, name, -power));
    }
    static Scalar constant(const VarSetPtr& vars, const Rat& c) { return Scalar(vars, c); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inverse() const;
    Scalar pow(int k) const;

    // Equality by cross-multiplication; independent of representation.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Fully gcd-reduced canonical representative.
    Scalar reduced() const;
    // Identity of representations (used to test canonicity of reduced()).
    bool same_representation(const Scalar& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }

    // The lambda-ring operation p_n (exponents times n on both sides).
    Scalar adams(int n) const;

    // Simultaneous exact substitution; unmapped variables pass through.
    // Throws PoleAtSpecialization when the denominator vanishes.
    Scalar substitute(const std::map<std::string, Scalar>& bindings) const;

    // The value as a Laurent polynomial; throws NotDivisible when the reduced
    // denominator is not a monomial.
    MultiPoly to_laurent() const;

    // True when the reduced value is a rational number; extracts it.
    bool to_rational(Rat& out) const;

private:
    void normalize();
    void normalize_basic();
    void reduce_inplace();

    MultiPoly num_, den_;
};

// Power-series expansion of s in the named variable up to degree dmax; the
// returned coefficients do not involve that variable. Throws
// PoleAtSpecialization when s has a pole at var = 0.
std::vector<Scalar> expand_in_var(const Scalar& s, const std::string& var, int dmax);

} // namespace hlv
