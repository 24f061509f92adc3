#include "hlv/multipoly.hpp"

#include <algorithm>

#include "hlv/error.hpp"

namespace hlv {

ExpVec MultiPoly::min_exponents() const {
    ExpVec m = terms_.begin()->first;
    for (auto& [e, c] : terms_) {
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

MultiPoly MultiPoly::shifted(const ExpVec& e) const {
    MultiPoly r(vars_);
    for (auto& [ea, c] : terms_) {
        ExpVec e2(ea);
        for (size_t i = 0; i < e2.size(); ++i) e2[i] -= e[i];
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

namespace {

bool exp_divides(const ExpVec& small, const ExpVec& big) {
    for (size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// Division of true polynomials (non-negative exponents) by repeated leading
// term cancellation. If the quotient exists it is found; otherwise the loop
// gets stuck and we report failure.
bool divide_plain(const MultiPoly& a, const MultiPoly& b, MultiPoly& quot) {
    quot = MultiPoly::zero(a.vars());
    MultiPoly r = a;
    const auto& [eb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        if (!exp_divides(eb, er)) return false;
        MultiPoly m = MultiPoly::monomial(a.vars(), exp_sub(er, eb), cr / cb);
        quot += m;
        r -= m * b;
    }
    return true;
}

} // namespace

bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quot) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) {
        quot = MultiPoly::zero(a.vars());
        return true;
    }
    check_same_vars(a.vars(), b.vars());
    // Laurent input: shift both into non-negative exponents, divide, shift back.
    ExpVec sa = a.min_exponents(), sb = b.min_exponents();
    MultiPoly q;
    if (!divide_plain(a.shifted(sa), b.shifted(sb), q)) return false;
    quot = q.shifted(exp_sub(sb, sa));
    return true;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_exact_divide(a, b, q)) throw NotDivisible();
    return q;
}

namespace {

int degree_in(const MultiPoly& p, size_t v) {
    int d = 0;
    for (auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

// Coefficient of x_v^k, with the exponent of x_v zeroed out.
MultiPoly coeff_of(const MultiPoly& p, size_t v, int k) {
    MultiPoly r(p.vars());
    for (auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        ExpVec e2(e);
        e2[v] = 0;
        r.add_term(e2, c);
    }
    return r;
}

MultiPoly times_power(const MultiPoly& p, size_t v, int k) {
    MultiPoly r(p.vars());
    for (auto& [e, c] : p.terms()) {
        ExpVec e2(e);
        e2[v] += k;
        r.add_term(e2, c);
    }
    return r;
}

MultiPoly normalize_leading(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rat(1) / p.leading().second);
}

MultiPoly gcd_rec(MultiPoly a, MultiPoly b, size_t nvars);

// gcd of all x_v-coefficients of p (a polynomial in variables < v after the
// coefficient extraction).
MultiPoly content_in(const MultiPoly& p, size_t v) {
    MultiPoly g = MultiPoly::zero(p.vars());
    for (int k = 0; k <= degree_in(p, v); ++k) {
        MultiPoly c = coeff_of(p, v, k);
        if (c.is_zero()) continue;
        g = gcd_rec(g, c, v);
        if (g.is_constant()) break;
    }
    return g;
}

// Primitive polynomial remainder sequence on true polynomials whose variables
// are limited to indices < nvars.
MultiPoly gcd_rec(MultiPoly a, MultiPoly b, size_t nvars) {
    if (a.is_zero()) return normalize_leading(b);
    if (b.is_zero()) return normalize_leading(a);
    // strip monomial content
    a = a.shifted(a.min_exponents());
    b = b.shifted(b.min_exponents());
    // find the main variable
    size_t v = nvars;
    while (v > 0 && degree_in(a, v - 1) == 0 && degree_in(b, v - 1) == 0) --v;
    if (v == 0) return MultiPoly::constant(a.vars(), 1);
    --v;
    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly cont = gcd_rec(ca, cb, v);
    a = exact_divide(a, ca);
    b = exact_divide(b, cb);
    if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b in x_v
        MultiPoly r = a;
        MultiPoly lb = coeff_of(b, v, degree_in(b, v));
        int db = degree_in(b, v);
        while (!r.is_zero() && degree_in(r, v) >= db) {
            int dr = degree_in(r, v);
            MultiPoly lr = coeff_of(r, v, dr);
            r = lb * r - times_power(lr * b, v, dr - db);
        }
        if (!r.is_zero()) r = exact_divide(r, content_in(r, v));
        a = b;
        b = r;
    }
    return normalize_leading(cont * a);
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : normalize_leading(b.shifted(b.min_exponents()));
    if (b.is_zero()) return normalize_leading(a.shifted(a.min_exponents()));
    check_same_vars(a.vars(), b.vars());
    return gcd_rec(a, b, a.vars()->size());
}

MultiPoly substitute(const MultiPoly& a, const std::map<size_t, MultiPoly>& bindings) {
    MultiPoly r(a.vars());
    for (auto& [e, c] : a.terms()) {
        MultiPoly term(a.vars(), c);
        ExpVec rest(e);
        for (auto& [v, val] : bindings) {
            int k = e[v];
            rest[v] = 0;
            if (k < 0) throw Error("substitution into a negative exponent");
            for (int i = 0; i < k; ++i) term *= val;
        }
        r += term * MultiPoly::monomial(a.vars(), rest, 1);
    }
    return r;
}

} // namespace hlv
