#include "mubforge/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mubforge {

// ---------------------------------------------------------------------------
// CMatrix

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::mul(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
    CMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            cdouble aik = at(i, k);
            if (aik == cdouble(0.0, 0.0)) continue;
            for (int j = 0; j < dim_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

CMatrix CMatrix::dagger() const {
    CMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

CMatrix CMatrix::add(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
    CMatrix r(dim_);
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
    return r;
}

CMatrix CMatrix::sub(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
    CMatrix r(dim_);
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - o.a_[t];
    return r;
}

CMatrix CMatrix::scaled(cdouble s) const {
    CMatrix r(dim_);
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] * s;
    return r;
}

CMatrix CMatrix::tensor(const CMatrix& o) const { return mubforge::tensor(*this, o); }

cdouble CMatrix::trace() const {
    cdouble t = 0.0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
    double m = 0.0;
    for (size_t t = 0; t < a_.size(); ++t) m = std::max(m, std::abs(a_[t] - o.a_[t]));
    return m;
}

cdouble CMatrix::determinant() const {
    std::vector<cdouble> w = a_;
    int n = dim_;
    cdouble det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(w[static_cast<size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(w[static_cast<size_t>(r) * n + col]);
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(w[static_cast<size_t>(pivot) * n + j], w[static_cast<size_t>(col) * n + j]);
            det = -det;
        }
        cdouble p = w[static_cast<size_t>(col) * n + col];
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            cdouble f = w[static_cast<size_t>(r) * n + col] / p;
            if (f == cdouble(0.0, 0.0)) continue;
            for (int j = col; j < n; ++j) w[static_cast<size_t>(r) * n + j] -= f * w[static_cast<size_t>(col) * n + j];
        }
    }
    return det;
}

CVector CMatrix::apply(const CVector& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("CMatrix: vector length mismatch");
    CVector y(dim_, cdouble(0.0, 0.0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

CVector CMatrix::column(int j) const {
    CVector c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = at(i, j);
    return c;
}

// ---------------------------------------------------------------------------
// ExactSum

cdouble ExactSum::eval() const {
    if (mult == 0) return 0.0;
    return phase.eval() * (static_cast<double>(mult) / std::sqrt(static_cast<double>(sqrt_den)));
}

// ---------------------------------------------------------------------------
// PhaseMatrix

PhaseMatrix::PhaseMatrix(int dim, long long order, long long sqrt_den)
    : dim_(dim), order_(order), sqrt_den_(sqrt_den), exps_(static_cast<size_t>(dim) * dim, std::nullopt) {
    if (dim < 1) throw std::invalid_argument("PhaseMatrix: dimension must be positive");
    if (order < 1) throw std::invalid_argument("PhaseMatrix: order must be positive");
    if (sqrt_den < 1) throw std::invalid_argument("PhaseMatrix: scale denominator must be positive");
}

PhaseMatrix PhaseMatrix::identity(int dim) {
    PhaseMatrix m(dim, 1);
    for (int i = 0; i < dim; ++i) m.set(i, i, 0);
    return m;
}

std::optional<Phase> PhaseMatrix::at(int i, int j) const {
    auto e = exps_[static_cast<size_t>(i) * dim_ + j];
    if (!e) return std::nullopt;
    return Phase(order_, *e);
}

void PhaseMatrix::set(int i, int j, long long exponent) {
    exps_[static_cast<size_t>(i) * dim_ + j] = mod_reduce(exponent, order_);
}

void PhaseMatrix::set_phase(int i, int j, const Phase& p) {
    if (order_ % p.order() != 0) throw std::invalid_argument("PhaseMatrix: phase order does not divide common order");
    set(i, j, p.exponent() * (order_ / p.order()));
}

void PhaseMatrix::set_zero(int i, int j) { exps_[static_cast<size_t>(i) * dim_ + j] = std::nullopt; }

PhaseMatrix PhaseMatrix::rescaled(long long new_order) const {
    if (new_order % order_ != 0) throw std::invalid_argument("PhaseMatrix: rescale order must be a multiple");
    PhaseMatrix r(dim_, new_order, sqrt_den_);
    long long f = new_order / order_;
    for (size_t t = 0; t < exps_.size(); ++t)
        if (exps_[t]) r.exps_[t] = *exps_[t] * f;
    return r;
}

PhaseMatrix PhaseMatrix::reduced() const {
    long long g = order_;
    for (const auto& e : exps_)
        if (e) g = std::gcd(g, *e);
    if (g <= 1) return *this;
    PhaseMatrix r(dim_, order_ / g, sqrt_den_);
    for (size_t t = 0; t < exps_.size(); ++t)
        if (exps_[t]) r.exps_[t] = *exps_[t] / g;
    return r;
}

PhaseMatrix PhaseMatrix::dagger() const {
    PhaseMatrix r(dim_, order_, sqrt_den_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            auto e = exps_[static_cast<size_t>(i) * dim_ + j];
            if (e) r.set(j, i, -*e);
        }
    return r;
}

PhaseMatrix PhaseMatrix::scalar_mul(const Phase& p) const {
    long long n = std::lcm(order_, p.order());
    PhaseMatrix r = rescaled(n);
    long long add = p.exponent() * (n / p.order());
    for (auto& e : r.exps_)
        if (e) e = mod_reduce(*e + add, n);
    return r;
}

PhaseMatrix PhaseMatrix::column_scaled(const std::vector<Phase>& col_factors) const {
    if (static_cast<int>(col_factors.size()) != dim_) throw std::invalid_argument("PhaseMatrix: column factor count mismatch");
    long long n = order_;
    for (const auto& p : col_factors) n = std::lcm(n, p.order());
    PhaseMatrix r = rescaled(n);
    for (int j = 0; j < dim_; ++j) {
        long long add = col_factors[j].exponent() * (n / col_factors[j].order());
        for (int i = 0; i < dim_; ++i) {
            auto& e = r.exps_[static_cast<size_t>(i) * dim_ + j];
            if (e) e = mod_reduce(*e + add, n);
        }
    }
    return r;
}

CMatrix PhaseMatrix::eval() const {
    CMatrix m(dim_);
    double s = 1.0 / std::sqrt(static_cast<double>(sqrt_den_));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            auto e = exps_[static_cast<size_t>(i) * dim_ + j];
            if (e) m.at(i, j) = Phase(order_, *e).eval() * s;
        }
    return m;
}

CVector PhaseMatrix::eval_column(int j) const {
    CVector c(dim_, cdouble(0.0, 0.0));
    double s = 1.0 / std::sqrt(static_cast<double>(sqrt_den_));
    for (int i = 0; i < dim_; ++i) {
        auto e = exps_[static_cast<size_t>(i) * dim_ + j];
        if (e) c[i] = Phase(order_, *e).eval() * s;
    }
    return c;
}

bool PhaseMatrix::is_monomial() const {
    for (int i = 0; i < dim_; ++i) {
        int nz = 0;
        for (int j = 0; j < dim_; ++j)
            if (exps_[static_cast<size_t>(i) * dim_ + j]) ++nz;
        if (nz != 1) return false;
    }
    for (int j = 0; j < dim_; ++j) {
        int nz = 0;
        for (int i = 0; i < dim_; ++i)
            if (exps_[static_cast<size_t>(i) * dim_ + j]) ++nz;
        if (nz != 1) return false;
    }
    return true;
}

bool PhaseMatrix::is_diagonal() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (i != j && exps_[static_cast<size_t>(i) * dim_ + j]) return false;
    return true;
}

std::optional<ExactSum> PhaseMatrix::trace_exact() const {
    std::vector<long long> terms;
    for (int i = 0; i < dim_; ++i) {
        auto e = exps_[static_cast<size_t>(i) * dim_ + i];
        if (e) terms.push_back(*e);
    }
    auto c = collapse_phase_sum(std::move(terms), order_);
    if (!c) return std::nullopt;
    ExactSum s;
    s.mult = c->first;
    s.phase = Phase(order_, c->second);
    s.sqrt_den = sqrt_den_;
    return s;
}

bool PhaseMatrix::operator==(const PhaseMatrix& o) const {
    if (dim_ != o.dim_) return false;
    bool all_zero = true;
    for (const auto& e : exps_)
        if (e) { all_zero = false; break; }
    if (all_zero) {
        for (const auto& e : o.exps_)
            if (e) return false;
        return true;
    }
    if (sqrt_den_ != o.sqrt_den_) return false;
    long long n = std::lcm(order_, o.order_);
    long long fa = n / order_, fb = n / o.order_;
    for (size_t t = 0; t < exps_.size(); ++t) {
        if (exps_[t].has_value() != o.exps_[t].has_value()) return false;
        if (exps_[t] && *exps_[t] * fa != *o.exps_[t] * fb) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact sum collapse

std::optional<std::pair<long long, long long>> collapse_phase_sum(std::vector<long long> exps, long long n) {
    if (exps.empty()) return std::make_pair(0LL, 0LL);
    bool all_equal = true;
    for (size_t t = 1; t < exps.size(); ++t)
        if (exps[t] != exps[0]) { all_equal = false; break; }
    if (all_equal) return std::make_pair(static_cast<long long>(exps.size()), exps[0]);

    // Complete-coset test: m copies of {r, r + n/g, ..., r + (g-1)n/g} sum to 0.
    std::map<long long, long long> mult;
    for (long long e : exps) ++mult[e];
    long long g = static_cast<long long>(mult.size());
    if (g < 2 || n % g != 0) return std::nullopt;
    long long step = n / g;
    long long m = mult.begin()->second;
    long long base = mult.begin()->first % step;
    for (const auto& [e, c] : mult)
        if (c != m || e % step != base) return std::nullopt;
    return std::make_pair(0LL, 0LL);
}

std::optional<PhaseMatrix> exact_mul(const PhaseMatrix& a, const PhaseMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("exact_mul: dimension mismatch");
    int d = a.dim();
    long long n = std::lcm(a.order(), b.order());
    long long fa = n / a.order(), fb = n / b.order();

    std::vector<std::optional<std::pair<long long, long long>>> cell(static_cast<size_t>(d) * d);
    long long common_mult = -1;
    std::vector<long long> terms;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            terms.clear();
            for (int k = 0; k < d; ++k) {
                auto ea = a.exponent_at(i, k);
                if (!ea) continue;
                auto eb = b.exponent_at(k, j);
                if (!eb) continue;
                terms.push_back(mod_reduce(*ea * fa + *eb * fb, n));
            }
            auto c = collapse_phase_sum(terms, n);
            if (!c) return std::nullopt;
            if (c->first > 0) {
                if (common_mult == -1) common_mult = c->first;
                else if (common_mult != c->first) return std::nullopt;
            }
            cell[static_cast<size_t>(i) * d + j] = c;
        }

    long long s = a.sqrt_den() * b.sqrt_den();
    if (common_mult == -1) {
        PhaseMatrix r(d, 1, 1);
        return r;  // exact zero matrix
    }
    // Fold multiplicity into the global scale: m / sqrt(s) = 1 / sqrt(s / m^2).
    if (s % (common_mult * common_mult) != 0) return std::nullopt;
    long long s_out = s / (common_mult * common_mult);

    PhaseMatrix r(d, n, s_out);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& c = cell[static_cast<size_t>(i) * d + j];
            if (c->first > 0) r.set(i, j, c->second);
        }
    return r;
}

PhaseMatrix tensor(const PhaseMatrix& a, const PhaseMatrix& b) {
    int d1 = a.dim(), d2 = b.dim();
    long long n = std::lcm(a.order(), b.order());
    long long fa = n / a.order(), fb = n / b.order();
    PhaseMatrix r(d1 * d2, n, a.sqrt_den() * b.sqrt_den());
    for (int i1 = 0; i1 < d1; ++i1)
        for (int j1 = 0; j1 < d1; ++j1) {
            auto ea = a.exponent_at(i1, j1);
            if (!ea) continue;
            for (int i2 = 0; i2 < d2; ++i2)
                for (int j2 = 0; j2 < d2; ++j2) {
                    auto eb = b.exponent_at(i2, j2);
                    if (!eb) continue;
                    r.set(i1 * d2 + i2, j1 * d2 + j2, *ea * fa + *eb * fb);
                }
        }
    return r;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    int d1 = a.dim(), d2 = b.dim();
    CMatrix r(d1 * d2);
    for (int i1 = 0; i1 < d1; ++i1)
        for (int j1 = 0; j1 < d1; ++j1)
            for (int i2 = 0; i2 < d2; ++i2)
                for (int j2 = 0; j2 < d2; ++j2)
                    r.at(i1 * d2 + i2, j1 * d2 + j2) = a.at(i1, j1) * b.at(i2, j2);
    return r;
}

MatVar mat_mul(const PhaseMatrix& a, const PhaseMatrix& b) {
    auto e = exact_mul(a, b);
    if (e) return *e;
    return a.eval().mul(b.eval());
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) { return a.mul(b); }

CMatrix eval(const MatVar& m) {
    if (std::holds_alternative<PhaseMatrix>(m)) return std::get<PhaseMatrix>(m).eval();
    return std::get<CMatrix>(m);
}

PhaseMatrix dagger(const PhaseMatrix& a) { return a.dagger(); }
CMatrix dagger(const CMatrix& a) { return a.dagger(); }

bool is_unitary(const PhaseMatrix& a, double tol) {
    auto p = exact_mul(a.dagger(), a);
    if (p) return *p == PhaseMatrix::identity(a.dim());
    return is_unitary(a.eval(), tol);
}

bool is_unitary(const CMatrix& a, double tol) {
    if (tol <= 0) throw std::invalid_argument("is_unitary: tolerance must be positive");
    return a.dagger().mul(a).max_abs_diff(CMatrix::identity(a.dim())) <= tol;
}

bool is_hadamard(const PhaseMatrix& a, double tol) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (a.is_zero_at(i, j)) return false;
    if (a.sqrt_den() == a.dim()) return is_unitary(a, tol);
    return is_hadamard(a.eval(), tol);
}

bool is_hadamard(const CMatrix& a, double tol) {
    if (tol <= 0) throw std::invalid_argument("is_hadamard: tolerance must be positive");
    double target = 1.0 / std::sqrt(static_cast<double>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (std::abs(std::abs(a.at(i, j)) - target) > tol) return false;
    return is_unitary(a, tol);
}

cdouble hs_trace_inner(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("hs_trace_inner: dimension mismatch");
    cdouble t = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) t += std::conj(a.at(i, j)) * b.at(i, j);
    return t;
}

cdouble hs_trace_inner(const PhaseMatrix& a, const PhaseMatrix& b) {
    auto e = hs_inner_exact(a, b);
    if (e) return e->eval();
    return hs_trace_inner(a.eval(), b.eval());
}

std::optional<ExactSum> hs_inner_exact(const PhaseMatrix& a, const PhaseMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("hs_inner_exact: dimension mismatch");
    long long n = std::lcm(a.order(), b.order());
    long long fa = n / a.order(), fb = n / b.order();
    std::vector<long long> terms;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            auto ea = a.exponent_at(i, j);
            if (!ea) continue;
            auto eb = b.exponent_at(i, j);
            if (!eb) continue;
            terms.push_back(mod_reduce(*eb * fb - *ea * fa, n));
        }
    auto c = collapse_phase_sum(std::move(terms), n);
    if (!c) return std::nullopt;
    ExactSum s;
    s.mult = c->first;
    s.phase = Phase(n, c->second);
    s.sqrt_den = a.sqrt_den() * b.sqrt_den();
    return s;
}

cdouble inner_product(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner_product: length mismatch");
    cdouble s = 0.0;
    for (size_t t = 0; t < x.size(); ++t) s += std::conj(x[t]) * y[t];
    return s;
}

double norm2(const CVector& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace mubforge
