// Linear algebra over truncated (Laurent) series rings F_p[[x]] with explicit
// precision tracking: normal forms, nilpotent type, kernel form, and the
// straightening of a nilpotent matrix to its standard form.
#pragma once

#include <optional>
#include <vector>

#include "hlv/error.hpp"

namespace hlv {

// Truncated Laurent series over F_p. Coefficients are known for degrees
// < prec(); reads at or past the precision throw InsufficientPrecision,
// never return a silent zero. A series whose known coefficients are all zero
// is "zero to precision" (ord unresolved).
class TSeries {
public:
    TSeries() = default;
    // Polynomial input: coefficients from degree 0, known up to prec.
    static TSeries from_coeffs(int p, int prec, const std::vector<int>& coeffs);
    static TSeries zero(int p, int prec) { return from_coeffs(p, prec, {}); }
    static TSeries constant(int p, int prec, int v) { return from_coeffs(p, prec, {v}); }
    static TSeries monomial(int p, int prec, int degree, int v = 1);

    int prime() const { return p_; }
    int prec() const { return prec_; }
    // Valuation: nullopt when zero to precision.
    std::optional<int> ord() const {
        if (c_.empty()) return std::nullopt;
        return val_;
    }
    bool zero_to_prec() const { return c_.empty(); }

    // Coefficient of x^d; throws InsufficientPrecision for d >= prec().
    int coeff(int d) const;

    TSeries operator-() const;
    friend TSeries operator+(const TSeries& a, const TSeries& b);
    friend TSeries operator-(const TSeries& a, const TSeries& b);
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    friend TSeries operator/(const TSeries& a, const TSeries& b);
    TSeries inverse() const;
    TSeries shifted(int k) const; // times x^k

    // Equality of all coefficients below the smaller precision.
    friend bool agree_to_precision(const TSeries& a, const TSeries& b);

private:
    void normalize();

    int p_ = 2;
    int val_ = 0;
    int prec_ = 0;
    std::vector<int> c_; // c_[i] is the coefficient of x^{val_+i}; c_[0] != 0
};

class TSMatrix {
public:
    TSMatrix() = default;
    TSMatrix(int rows, int cols, int p, int prec)
        : rows_(rows), cols_(cols), p_(p), e_(rows * cols, TSeries::zero(p, prec)) {}
    static TSMatrix identity(int n, int p, int prec);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int prime() const { return p_; }
    TSeries& at(int i, int j) { return e_[i * cols_ + j]; }
    const TSeries& at(int i, int j) const { return e_[i * cols_ + j]; }

    friend TSMatrix operator*(const TSMatrix& a, const TSMatrix& b);
    friend TSMatrix operator+(const TSMatrix& a, const TSMatrix& b);
    friend TSMatrix operator-(const TSMatrix& a, const TSMatrix& b);
    TSMatrix inverse() const;
    TSMatrix submatrix(int i0, int j0, int rows, int cols) const;
    void paste(int i0, int j0, const TSMatrix& block);
    TSMatrix transpose() const;

    // Constant term matrix entries; needs precision >= 1 everywhere.
    std::vector<std::vector<int>> constant_term() const;

    friend bool agree_to_precision(const TSMatrix& a, const TSMatrix& b);

private:
    int rows_ = 0, cols_ = 0, p_ = 2;
    std::vector<TSeries> e_;
};

struct HermiteResult {
    TSMatrix g;  // invertible, g * M = H
    TSMatrix h;  // upper triangular
    std::vector<std::optional<int>> diag_orders; // nullopt: unresolved at precision
};
HermiteResult hermite_form(const TSMatrix& m);

struct SmithResult {
    TSMatrix g1, d, g2; // g1 * M * g2 = d diagonal, orders weakly increasing
    std::vector<std::optional<int>> orders;
};
SmithResult smith_form(const TSMatrix& m);

// Type of a nilpotent matrix: lambda_i = rank ker theta^i - rank ker theta^{i-1},
// ranks taken over the fraction field (invariant factors of order < precision).
std::vector<int> nilpotent_type(const TSMatrix& theta);

// The standard nilpotent matrix of type lambda (constant entries).
TSMatrix standard_nilpotent(const std::vector<int>& lambda, int p, int prec);

struct KernelFormResult {
    TSMatrix g;      // g theta g^{-1} = form
    TSMatrix form;   // block upper triangular, superdiagonal blocks upper triangular
    std::vector<int> block_sizes; // = type(theta)
    // ord of the diagonal entries of each superdiagonal block; all zero iff
    // theta is conjugate to N_lambda over the truncated ring.
    std::vector<std::optional<int>> pivot_orders;
};
KernelFormResult kernel_form(const TSMatrix& theta);

struct ClassifyResult {
    TSMatrix g;              // kernel-strict, g theta g^{-1} = N_lambda (to precision)
    std::vector<int> type;   // lambda
    int degree = 0;          // d = ord det of the block straightener
    int worst_pole = 0;      // largest pole order used by g
};
ClassifyResult classify(const TSMatrix& theta);

} // namespace hlv
