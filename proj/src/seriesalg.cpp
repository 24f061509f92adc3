#include "hlv/seriesalg.hpp"

#include <algorithm>

namespace hlv {

namespace {
int mod_inverse(int a, int p) {
    int t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw Error("not invertible mod p");
    return ((t % p) + p) % p;
}
} // namespace

void TSeries::normalize() {
    if (val_ + static_cast<int>(c_.size()) > prec_) {
        c_.resize(prec_ - val_ > 0 ? prec_ - val_ : 0);
    }
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + lead);
        val_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) val_ = prec_;
}

TSeries TSeries::from_coeffs(int p, int prec, const std::vector<int>& coeffs) {
    TSeries s;
    s.p_ = p;
    s.val_ = 0;
    s.prec_ = prec;
    s.c_.assign(coeffs.begin(), coeffs.end());
    for (int& x : s.c_) x = ((x % p) + p) % p;
    s.normalize();
    return s;
}

TSeries TSeries::monomial(int p, int prec, int degree, int v) {
    TSeries s;
    s.p_ = p;
    s.val_ = degree;
    s.prec_ = prec;
    v = ((v % p) + p) % p;
    if (v != 0 && degree < prec) s.c_ = {v};
    s.normalize();
    return s;
}

int TSeries::coeff(int d) const {
    if (d >= prec_) throw InsufficientPrecision("coefficient read past precision");
    if (d < val_ || d >= val_ + static_cast<int>(c_.size())) return 0;
    return c_[d - val_];
}

TSeries TSeries::operator-() const {
    TSeries r = *this;
    for (int& x : r.c_) x = (p_ - x) % p_;
    return r;
}

TSeries operator+(const TSeries& a, const TSeries& b) {
    TSeries r;
    r.p_ = a.p_;
    r.prec_ = std::min(a.prec_, b.prec_);
    int hi = std::max(a.val_ + static_cast<int>(a.c_.size()), b.val_ + static_cast<int>(b.c_.size()));
    hi = std::min(hi, r.prec_);
    r.val_ = std::min(std::min(a.val_, b.val_), hi);
    r.c_.assign(std::max(hi - r.val_, 0), 0);
    auto acc = [&](const TSeries& s) {
        for (size_t i = 0; i < s.c_.size(); ++i) {
            int d = s.val_ + static_cast<int>(i);
            if (d < hi) {
                int& x = r.c_[d - r.val_];
                x = (x + s.c_[i]) % r.p_;
            }
        }
    };
    acc(a);
    acc(b);
    r.normalize();
    return r;
}

TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

TSeries operator*(const TSeries& a, const TSeries& b) {
    TSeries r;
    r.p_ = a.p_;
    r.prec_ = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
    int hi = a.val_ + b.val_ + static_cast<int>(a.c_.size() + b.c_.size());
    hi = std::min(hi, r.prec_);
    r.val_ = std::min(a.val_ + b.val_, hi);
    r.c_.assign(std::max(hi - r.val_, 0), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        for (size_t j = 0; j < b.c_.size(); ++j) {
            int d = a.val_ + static_cast<int>(i) + b.val_ + static_cast<int>(j);
            if (d < hi) {
                int& x = r.c_[d - r.val_];
                x = (x + a.c_[i] * b.c_[j]) % r.p_;
            }
        }
    }
    r.normalize();
    return r;
}

TSeries TSeries::inverse() const {
    if (c_.empty())
        throw InsufficientPrecision("cannot invert: order is unresolved at this precision");
    int rel = prec_ - val_;
    std::vector<int> w(rel, 0);
    int inv0 = mod_inverse(c_[0], p_);
    w[0] = inv0;
    for (int n = 1; n < rel; ++n) {
        int s = 0;
        for (int k = 1; k <= n; ++k) {
            int ak = k < static_cast<int>(c_.size()) ? c_[k] : 0;
            s = (s + ak * w[n - k]) % p_;
        }
        w[n] = (p_ - s) % p_ * inv0 % p_;
    }
    TSeries r;
    r.p_ = p_;
    r.val_ = -val_;
    r.prec_ = prec_ - 2 * val_;
    r.c_ = std::move(w);
    r.normalize();
    return r;
}

TSeries operator/(const TSeries& a, const TSeries& b) { return a * b.inverse(); }

TSeries TSeries::shifted(int k) const {
    TSeries r = *this;
    r.val_ += k;
    r.prec_ += k;
    return r;
}

bool agree_to_precision(const TSeries& a, const TSeries& b) {
    int prec = std::min(a.prec_, b.prec_);
    int lo = std::min(a.val_, b.val_);
    for (int d = lo; d < prec; ++d) {
        int ca = (d < a.val_ || d >= a.val_ + static_cast<int>(a.c_.size())) ? 0 : a.c_[d - a.val_];
        int cb = (d < b.val_ || d >= b.val_ + static_cast<int>(b.c_.size())) ? 0 : b.c_[d - b.val_];
        if (ca != cb) return false;
    }
    return true;
}

TSMatrix TSMatrix::identity(int n, int p, int prec) {
    TSMatrix m(n, n, p, prec);
    for (int i = 0; i < n; ++i) m.at(i, i) = TSeries::constant(p, prec, 1);
    return m;
}

TSMatrix operator*(const TSMatrix& a, const TSMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
    TSMatrix r(a.rows_, b.cols_, a.p_, 1);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < b.cols_; ++j) {
            TSeries acc = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

TSMatrix operator+(const TSMatrix& a, const TSMatrix& b) {
    TSMatrix r = a;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

TSMatrix operator-(const TSMatrix& a, const TSMatrix& b) {
    TSMatrix r = a;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

TSMatrix TSMatrix::inverse() const {
    if (rows_ != cols_) throw Error("not square");
    int n = rows_;
    TSMatrix a = *this;
    int prec = 1 << 30;
    for (auto& s : e_) prec = std::min(prec, s.prec());
    TSMatrix inv = TSMatrix::identity(n, p_, prec);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        std::optional<int> best;
        for (int r = c; r < n; ++r) {
            auto o = a.at(r, c).ord();
            if (o && (!best || *o < *best)) {
                best = o;
                piv = r;
            }
        }
        if (piv < 0) throw InsufficientPrecision("matrix not invertible at this precision");
        for (int j = 0; j < n; ++j) {
            std::swap(a.e_[c * n + j], a.e_[piv * n + j]);
            std::swap(inv.e_[c * n + j], inv.e_[piv * n + j]);
        }
        TSeries d = a.at(c, c);
        for (int r = 0; r < n; ++r) {
            if (r == c || a.at(r, c).zero_to_prec()) continue;
            TSeries f = a.at(r, c) / d;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(c, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(c, j);
            }
        }
        TSeries dinv = d.inverse();
        for (int j = 0; j < n; ++j) {
            a.at(c, j) = a.at(c, j) * dinv;
            inv.at(c, j) = inv.at(c, j) * dinv;
        }
    }
    return inv;
}

TSMatrix TSMatrix::submatrix(int i0, int j0, int rows, int cols) const {
    TSMatrix r(rows, cols, p_, 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

void TSMatrix::paste(int i0, int j0, const TSMatrix& block) {
    for (int i = 0; i < block.rows_; ++i)
        for (int j = 0; j < block.cols_; ++j) at(i0 + i, j0 + j) = block.at(i, j);
}

TSMatrix TSMatrix::transpose() const {
    TSMatrix r(cols_, rows_, p_, 1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<std::vector<int>> TSMatrix::constant_term() const {
    std::vector<std::vector<int>> m(rows_, std::vector<int>(cols_, 0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j).coeff(0);
    return m;
}

bool agree_to_precision(const TSMatrix& a, const TSMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.e_.size(); ++i) {
        if (!agree_to_precision(a.e_[i], b.e_[i])) return false;
    }
    return true;
}

HermiteResult hermite_form(const TSMatrix& m) {
    int rows = m.rows(), cols = m.cols(), p = m.prime();
    int prec = 1 << 30;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) prec = std::min(prec, m.at(i, j).prec());
    HermiteResult res{TSMatrix::identity(rows, p, prec), m, {}};
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        std::optional<int> best;
        for (int i = r; i < rows; ++i) {
            auto o = res.h.at(i, c).ord();
            if (o && (!best || *o < *best)) {
                best = o;
                piv = i;
            }
        }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(res.h.at(r, j), res.h.at(piv, j));
        for (int j = 0; j < rows; ++j) std::swap(res.g.at(r, j), res.g.at(piv, j));
        for (int i = r + 1; i < rows; ++i) {
            if (res.h.at(i, c).zero_to_prec()) continue;
            TSeries f = res.h.at(i, c) / res.h.at(r, c);
            for (int j = 0; j < cols; ++j) res.h.at(i, j) = res.h.at(i, j) - f * res.h.at(r, j);
            for (int j = 0; j < rows; ++j) res.g.at(i, j) = res.g.at(i, j) - f * res.g.at(r, j);
        }
        ++r;
    }
    for (int i = 0; i < std::min(rows, cols); ++i) res.diag_orders.push_back(res.h.at(i, i).ord());
    return res;
}

SmithResult smith_form(const TSMatrix& m) {
    int rows = m.rows(), cols = m.cols(), p = m.prime();
    int prec = 1 << 30;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) prec = std::min(prec, m.at(i, j).prec());
    SmithResult res{TSMatrix::identity(rows, p, prec), m, TSMatrix::identity(cols, p, prec), {}};
    int k = 0;
    for (; k < std::min(rows, cols); ++k) {
        int pi = -1, pj = -1;
        std::optional<int> best;
        for (int i = k; i < rows; ++i) {
            for (int j = k; j < cols; ++j) {
                auto o = res.d.at(i, j).ord();
                if (o && (!best || *o < *best)) {
                    best = o;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break; // the rest is zero to precision
        for (int j = 0; j < cols; ++j) std::swap(res.d.at(k, j), res.d.at(pi, j));
        for (int j = 0; j < rows; ++j) std::swap(res.g1.at(k, j), res.g1.at(pi, j));
        for (int i = 0; i < rows; ++i) std::swap(res.d.at(i, k), res.d.at(i, pj));
        for (int i = 0; i < cols; ++i) std::swap(res.g2.at(i, k), res.g2.at(i, pj));
        for (int i = k + 1; i < rows; ++i) {
            if (res.d.at(i, k).zero_to_prec()) continue;
            TSeries f = res.d.at(i, k) / res.d.at(k, k);
            for (int j = 0; j < cols; ++j) res.d.at(i, j) = res.d.at(i, j) - f * res.d.at(k, j);
            for (int j = 0; j < rows; ++j) res.g1.at(i, j) = res.g1.at(i, j) - f * res.g1.at(k, j);
        }
        for (int j = k + 1; j < cols; ++j) {
            if (res.d.at(k, j).zero_to_prec()) continue;
            TSeries f = res.d.at(k, j) / res.d.at(k, k);
            for (int i = 0; i < rows; ++i) res.d.at(i, j) = res.d.at(i, j) - f * res.d.at(i, k);
            for (int i = 0; i < cols; ++i) res.g2.at(i, j) = res.g2.at(i, j) - f * res.g2.at(i, k);
        }
        res.orders.push_back(best);
    }
    while (static_cast<int>(res.orders.size()) < std::min(rows, cols)) res.orders.push_back(std::nullopt);
    return res;
}

namespace {

// Rank over the fraction field to working precision: invariant factors whose
// order is resolved.
int rank_K(const TSMatrix& m) {
    auto smith = smith_form(m);
    int r = 0;
    for (auto& o : smith.orders)
        if (o) ++r;
    return r;
}

TSMatrix mat_power(const TSMatrix& m, int k) {
    int prec = 1 << 30;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) prec = std::min(prec, m.at(i, j).prec());
    TSMatrix r = TSMatrix::identity(m.rows(), m.prime(), prec);
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

} // namespace

std::vector<int> nilpotent_type(const TSMatrix& theta) {
    if (theta.rows() != theta.cols()) throw Error("not square");
    int n = theta.rows();
    TSMatrix pw = mat_power(theta, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!pw.at(i, j).zero_to_prec()) throw NotNilpotent();
        }
    }
    std::vector<int> type;
    int prev_kernel = 0;
    TSMatrix acc = theta;
    for (int i = 1; i <= n && prev_kernel < n; ++i) {
        int kernel = n - rank_K(acc);
        type.push_back(kernel - prev_kernel);
        prev_kernel = kernel;
        acc = acc * theta;
    }
    while (!type.empty() && type.back() == 0) type.pop_back();
    return type;
}

TSMatrix standard_nilpotent(const std::vector<int>& lambda, int p, int prec) {
    int n = 0;
    for (int x : lambda) n += x;
    TSMatrix m(n, n, p, prec);
    int off = 0;
    for (size_t b = 0; b + 1 < lambda.size(); ++b) {
        // block (b, b+1) = [Id; 0]
        for (int j = 0; j < lambda[b + 1]; ++j) {
            m.at(off + j, off + lambda[b] + j) = TSeries::constant(p, prec, 1);
        }
        off += lambda[b];
    }
    return m;
}

namespace {

// Saturated basis of ker theta^k as the columns of an n x dim matrix.
TSMatrix kernel_basis(const TSMatrix& power) {
    auto smith = smith_form(power);
    std::vector<int> zero_cols;
    for (size_t j = 0; j < smith.orders.size(); ++j) {
        if (!smith.orders[j]) zero_cols.push_back(static_cast<int>(j));
    }
    for (int j = static_cast<int>(smith.orders.size()); j < power.cols(); ++j) zero_cols.push_back(j);
    TSMatrix out(power.cols(), static_cast<int>(zero_cols.size()), power.prime(), 1);
    for (int i = 0; i < power.cols(); ++i) {
        for (size_t j = 0; j < zero_cols.size(); ++j) out.at(i, static_cast<int>(j)) = smith.g2.at(i, zero_cols[j]);
    }
    return out;
}

// Solve K * C = B for C, where the columns of K are part of a basis of R^n.
TSMatrix solve_in_basis(const TSMatrix& K, const TSMatrix& B) {
    int n = K.rows(), k = K.cols(), r = B.cols(), p = K.prime();
    // row reduce [K | B]
    TSMatrix a = K, b = B;
    std::vector<int> pivot_row(k, -1);
    int row = 0;
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        std::optional<int> best;
        for (int i = row; i < n; ++i) {
            auto o = a.at(i, c).ord();
            if (o && (!best || *o < *best)) {
                best = o;
                piv = i;
            }
        }
        if (piv < 0) throw InsufficientPrecision("kernel basis is degenerate at this precision");
        for (int j = 0; j < k; ++j) std::swap(a.at(row, j), a.at(piv, j));
        for (int j = 0; j < r; ++j) std::swap(b.at(row, j), b.at(piv, j));
        TSeries d = a.at(row, c);
        for (int i = 0; i < n; ++i) {
            if (i == row || a.at(i, c).zero_to_prec()) continue;
            TSeries f = a.at(i, c) / d;
            for (int j = 0; j < k; ++j) a.at(i, j) = a.at(i, j) - f * a.at(row, j);
            for (int j = 0; j < r; ++j) b.at(i, j) = b.at(i, j) - f * b.at(row, j);
        }
        TSeries dinv = d.inverse();
        for (int j = 0; j < k; ++j) a.at(row, j) = a.at(row, j) * dinv;
        for (int j = 0; j < r; ++j) b.at(row, j) = b.at(row, j) * dinv;
        pivot_row[c] = row;
        ++row;
    }
    TSMatrix c(k, r, p, 1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < r; ++j) c.at(i, j) = b.at(pivot_row[i], j);
    }
    return c;
}

// Complete the saturated k x r matrix C (r <= k) to an invertible k x k
// matrix whose first r columns are C.
TSMatrix complete_to_invertible(const TSMatrix& C) {
    int k = C.rows(), r = C.cols(), p = C.prime();
    auto her = hermite_form(C); // g * C = [T; 0] with T upper triangular
    for (int i = 0; i < r; ++i) {
        auto o = her.h.at(i, i).ord();
        if (!o) throw InsufficientPrecision("saturation not certifiable");
        if (*o != 0) throw Error("submodule is not saturated");
    }
    TSMatrix ginv = her.g.inverse();
    int prec = 1 << 30;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prec = std::min(prec, ginv.at(i, j).prec());
    TSMatrix u(k, k, p, prec);
    u.paste(0, 0, C);
    // complement columns: g^{-1} applied to the trailing unit vectors
    for (int j = r; j < k; ++j) {
        for (int i = 0; i < k; ++i) u.at(i, j) = ginv.at(i, j);
    }
    return u;
}

} // namespace

KernelFormResult kernel_form(const TSMatrix& theta) {
    int n = theta.rows(), p = theta.prime();
    std::vector<int> lambda = nilpotent_type(theta);
    int stages = static_cast<int>(lambda.size());

    // adapted basis: columns of ker theta, then a lift of ker theta^2 / ker theta, ...
    TSMatrix basis(n, n, p, 1);
    TSMatrix prev;
    int col = 0;
    TSMatrix acc = theta;
    for (int i = 1; i <= stages; ++i) {
        TSMatrix K = i < stages ? kernel_basis(acc) : TSMatrix::identity(n, p, theta.at(0, 0).prec());
        if (i == 1) {
            basis.paste(0, 0, K);
            col = K.cols();
        } else {
            TSMatrix C = solve_in_basis(K, prev);
            TSMatrix U = complete_to_invertible(C);
            // new stage columns: K * (completion part of U)
            TSMatrix comp = U.submatrix(0, C.cols(), U.rows(), U.cols() - C.cols());
            TSMatrix stage = K * comp;
            basis.paste(0, col, stage);
            col += stage.cols();
        }
        prev = basis.submatrix(0, 0, n, col);
        if (i < stages) acc = acc * theta;
    }

    TSMatrix binv = basis.inverse();
    TSMatrix form = binv * theta * basis;
    TSMatrix g = binv;

    // straighten the superdiagonal blocks to upper triangular, last block first
    std::vector<int> offset(stages + 1, 0);
    for (int i = 0; i < stages; ++i) offset[i + 1] = offset[i] + lambda[i];
    std::vector<TSMatrix> blocks(stages);
    int prec = theta.at(0, 0).prec();
    blocks[stages - 1] = TSMatrix::identity(lambda[stages - 1], p, prec);
    for (int i = stages - 2; i >= 0; --i) {
        TSMatrix w = form.submatrix(offset[i], offset[i + 1], lambda[i], lambda[i + 1]) *
                     blocks[i + 1].inverse();
        blocks[i] = hermite_form(w).g;
    }
    TSMatrix G(n, n, p, prec);
    for (int i = 0; i < stages; ++i) G.paste(offset[i], offset[i], blocks[i]);
    form = G * form * G.inverse();
    g = G * g;

    KernelFormResult res{std::move(g), std::move(form), lambda, {}};
    for (int i = 0; i + 1 < stages; ++i) {
        for (int j = 0; j < lambda[i + 1]; ++j) {
            res.pivot_orders.push_back(res.form.at(offset[i] + j, offset[i + 1] + j).ord());
        }
    }
    return res;
}

ClassifyResult classify(const TSMatrix& theta) {
    KernelFormResult kf = kernel_form(theta);
    const std::vector<int>& lambda = kf.block_sizes;
    int stages = static_cast<int>(lambda.size());
    int n = theta.rows(), p = theta.prime();
    std::vector<int> offset(stages + 1, 0);
    for (int i = 0; i < stages; ++i) offset[i + 1] = offset[i] + lambda[i];
    int prec = theta.at(0, 0).prec();

    // block-diagonal straightener h: h_1 = Id, h_{i+1} = top block of h_i theta_{i,i+1}
    std::vector<TSMatrix> h(stages);
    h[0] = TSMatrix::identity(lambda[0], p, prec);
    int degree = 0;
    for (int i = 1; i < stages; ++i) {
        TSMatrix w = h[i - 1] * kf.form.submatrix(offset[i - 1], offset[i], lambda[i - 1], lambda[i]);
        h[i] = w.submatrix(0, 0, lambda[i], lambda[i]);
        for (int j = 0; j < lambda[i]; ++j) {
            auto o = h[i].at(j, j).ord();
            if (!o)
                throw InsufficientPrecision("straightener pivot order unresolved at this precision");
            degree += *o;
        }
    }
    TSMatrix H(n, n, p, prec);
    for (int i = 0; i < stages; ++i) H.paste(offset[i], offset[i], h[i]);
    TSMatrix cur = H * kf.form * H.inverse();
    TSMatrix g = H * kf.g;

    // clear the blocks above the superdiagonal, rightmost column first
    for (int j = stages - 1; j >= 2; --j) {
        for (int i = 0; i <= j - 2; ++i) {
            TSMatrix block = cur.submatrix(offset[i], offset[j], lambda[i], lambda[j]);
            bool zero = true;
            for (int a = 0; a < block.rows() && zero; ++a)
                for (int b = 0; b < block.cols() && zero; ++b)
                    if (!block.at(a, b).zero_to_prec()) zero = false;
            if (zero) continue;
            // f = I + C in block (i, j-1) with C = [-block | 0]
            TSMatrix f = TSMatrix::identity(n, p, 1 << 30);
            for (int a = 0; a < lambda[i]; ++a) {
                for (int b = 0; b < lambda[j]; ++b) {
                    f.at(offset[i] + a, offset[j - 1] + b) = -block.at(a, b);
                }
            }
            TSMatrix finv = TSMatrix::identity(n, p, 1 << 30);
            for (int a = 0; a < lambda[i]; ++a) {
                for (int b = 0; b < lambda[j]; ++b) {
                    finv.at(offset[i] + a, offset[j - 1] + b) = block.at(a, b);
                }
            }
            cur = f * cur * finv;
            g = f * g;
        }
    }

    TSMatrix target = standard_nilpotent(lambda, p, prec);
    if (!agree_to_precision(cur, target))
        throw InsufficientPrecision("straightening failed to reach the standard form");

    int worst = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto o = g.at(i, j).ord();
            if (o && *o < 0) worst = std::max(worst, -*o);
        }
    }
    return ClassifyResult{std::move(g), lambda, degree, worst};
}

} // namespace hlv
