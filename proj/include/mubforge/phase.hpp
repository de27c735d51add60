#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mubforge {

/// Reduced fraction num/den with den > 0. Small helper for the half-integer
/// and r-dependent exponents that occur throughout the library.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// An exact root of unity exp(2*pi*i * e/N), stored as (order N, exponent e)
/// with 0 <= e < N. Multiplication promotes to the lcm of the two orders.
class Phase {
  public:
    Phase() : order_(1), exp_(0) {}

    Phase(long long order, long long exponent) : order_(order) {
        if (order < 1) throw std::invalid_argument("Phase: order must be a positive integer");
        exp_ = exponent % order_;
        if (exp_ < 0) exp_ += order_;
    }

    static Phase one() { return Phase(1, 0); }

    /// exp(2*pi*i * t) for rational t.
    static Phase from_turns(const Rational& t) { return Phase(t.den, t.num); }

    long long order() const { return order_; }
    long long exponent() const { return exp_; }

    Phase times(const Phase& o) const {
        long long n = std::lcm(order_, o.order_);
        return Phase(n, exp_ * (n / order_) + o.exp_ * (n / o.order_));
    }
    Phase operator*(const Phase& o) const { return times(o); }

    Phase conj() const { return Phase(order_, -exp_); }

    Phase pow(long long k) const {
        long long e = (exp_ * (k % order_)) % order_;
        return Phase(order_, e);
    }

    /// Same value re-expressed over an order that is a multiple of the current one.
    Phase rescaled(long long new_order) const {
        if (new_order % order_ != 0) throw std::invalid_argument("Phase: rescale order must be a multiple");
        return Phase(new_order, exp_ * (new_order / order_));
    }

    /// Canonical form with gcd(e, N) factored out (unique value representation).
    Phase reduced() const {
        long long g = std::gcd(exp_, order_);
        return g > 1 ? Phase(order_ / g, exp_ / g) : *this;
    }

    std::complex<double> eval() const {
        static const double two_pi = 6.283185307179586476925286766559;
        return std::polar(1.0, two_pi * static_cast<double>(exp_) / static_cast<double>(order_));
    }

    /// Value equality: e1/N1 == e2/N2 as fractions in [0,1).
    bool operator==(const Phase& o) const { return exp_ * o.order_ == o.exp_ * order_; }
    bool operator!=(const Phase& o) const { return !(*this == o); }

    bool is_one() const { return exp_ == 0; }
    bool is_minus_one() const { return order_ % 2 == 0 && exp_ * 2 == order_; }

    std::string str() const;

  private:
    long long order_;
    long long exp_;
};

std::ostream& operator<<(std::ostream& os, const Phase& p);

/// q^e with q = exp(2*pi*i/N).
inline Phase root_of_unity(long long n, long long e) { return Phase(n, e); }

/// exp(2*pi*i * x / d) for rational x; houses half-integer powers of the
/// d-th root exactly (order divides d * x.den).
inline Phase root_power(long long d, const Rational& x) {
    return Phase::from_turns(Rational(x.num, x.den * d));
}

inline long long mod_reduce(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace mubforge
