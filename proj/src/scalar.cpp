#include "hlv/scalar.hpp"

#include "hlv/error.hpp"

namespace hlv {

namespace {
// Full gcd reduction is attempted only past this size; equality testing uses
// cross-multiplication and exact answers are certified by exact_divide, so
// intermediates may stay unreduced.
constexpr size_t kReduceThreshold = 160;
} // namespace

Scalar::Scalar(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), 1)) {
    normalize();
}

Scalar::Scalar(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    check_same_vars(num_.vars(), den_.vars());
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void Scalar::normalize_basic() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(den_.vars(), 1);
        return;
    }
    // remove the monomial content of the pair
    ExpVec mn = num_.min_exponents(), md = den_.min_exponents();
    for (size_t i = 0; i < mn.size(); ++i) mn[i] = std::min(mn[i], md[i]);
    if (!MultiPoly::is_zero_vec(mn)) {
        num_ = num_.shifted(mn);
        den_ = den_.shifted(mn);
    }
    // leading coefficient of the denominator is +1
    Rat lc = den_.leading().second;
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

void Scalar::normalize() {
    normalize_basic();
    if (num_.term_count() + den_.term_count() > kReduceThreshold) reduce_inplace();
}

void Scalar::reduce_inplace() {
    if (num_.is_zero() || den_.is_monomial()) return; // nothing to cancel past normalize_basic
    // fast path: the denominator divides the numerator outright
    MultiPoly q;
    if (try_exact_divide(num_, den_, q)) {
        num_ = std::move(q);
        den_ = MultiPoly::constant(den_.vars(), 1);
        normalize_basic();
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (g.is_constant()) return;
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
    normalize_basic();
}

Scalar Scalar::reduced() const {
    Scalar r = *this;
    r.reduce_inplace();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return Scalar(a.num_ - b.num_, a.den_);
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
    Scalar base = k >= 0 ? *this : inverse();
    int n = k >= 0 ? k : -k;
    Scalar r(vars(), Rat(1));
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

Scalar Scalar::adams(int n) const {
    return Scalar(num_.adams(n), den_.adams(n));
}

namespace {

Scalar eval_poly(const MultiPoly& p, const std::map<size_t, Scalar>& bound) {
    const VarSetPtr& vars = p.vars();
    Scalar acc(vars);
    for (auto& [e, c] : p.terms()) {
        Scalar term(vars, c);
        ExpVec rest(e);
        for (auto& [v, val] : bound) {
            if (e[v] == 0) continue;
            rest[v] = 0;
            term *= val.pow(e[v]);
        }
        term *= Scalar(MultiPoly::monomial(vars, rest, 1));
        acc += term;
    }
    return acc;
}

} // namespace

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
    std::map<size_t, Scalar> bound;
    for (auto& [name, val] : bindings) {
        check_same_vars(vars(), val.vars());
        bound.emplace(vars()->index(name), val);
    }
    Scalar n = eval_poly(num_, bound);
    Scalar d = eval_poly(den_, bound);
    if (d.is_zero()) throw PoleAtSpecialization();
    return n / d;
}

MultiPoly Scalar::to_laurent() const {
    Scalar r = reduced();
    if (r.num_.is_zero()) return r.num_;
    if (!r.den_.is_monomial())
        throw NotDivisible("value is not a Laurent polynomial");
    // den is a monomial with coefficient +1 after normalization
    return r.num_.shifted(r.den_.leading().first);
}

std::vector<Scalar> expand_in_var(const Scalar& s, const std::string& var, int dmax) {
    const VarSetPtr& vars = s.vars();
    size_t v = vars->index(var);
    auto layers = [&](const MultiPoly& p) {
        std::map<int, MultiPoly> out;
        for (auto& [e, c] : p.terms()) {
            ExpVec e2(e);
            int d = e2[v];
            e2[v] = 0;
            auto [it, fresh] = out.emplace(d, MultiPoly::zero(vars));
            it->second.add_term(e2, c);
        }
        return out;
    };
    auto num = layers(s.num()), den = layers(s.den());
    if (den.empty()) throw DivisionByZero();
    int vd = den.begin()->first;
    int vn = num.empty() ? vd : num.begin()->first;
    if (vn < vd) throw PoleAtSpecialization("pole in " + var);
    Scalar lead(den.begin()->second);
    std::vector<Scalar> coeff(dmax + 1, Scalar(vars));
    for (int i = 0; i <= dmax; ++i) {
        auto nit = num.find(vd + i);
        Scalar acc = nit == num.end() ? Scalar(vars) : Scalar(nit->second);
        for (int l = 1; l <= i; ++l) {
            auto dit = den.find(vd + l);
            if (dit == den.end()) continue;
            acc -= Scalar(dit->second) * coeff[i - l];
        }
        coeff[i] = acc / lead;
    }
    return coeff;
}

bool Scalar::to_rational(Rat& out) const {
    MultiPoly l;
    try {
        l = to_laurent();
    } catch (const NotDivisible&) {
        return false;
    }
    if (l.is_zero()) {
        out = 0;
        return true;
    }
    if (!l.is_constant()) return false;
    out = l.leading().second;
    return true;
}

} // namespace hlv
