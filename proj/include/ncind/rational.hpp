#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ncind {

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator so that equal values always compare equal.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class &q) : v_(q) { v_.canonicalize(); }

    static Rational parse(const std::string &s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(raw_tag{}, q);
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Rational operator+(const Rational &a, const Rational &b) { return Rational(raw_tag{}, a.v_ + b.v_); }
    friend Rational operator-(const Rational &a, const Rational &b) { return Rational(raw_tag{}, a.v_ - b.v_); }
    friend Rational operator*(const Rational &a, const Rational &b) { return Rational(raw_tag{}, a.v_ * b.v_); }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(raw_tag{}, a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(raw_tag{}, -v_); }
    Rational &operator+=(const Rational &b) { v_ += b.v_; return *this; }
    Rational &operator-=(const Rational &b) { v_ -= b.v_; return *this; }
    Rational &operator*=(const Rational &b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }

    const mpq_class &raw() const { return v_; }

  private:
    struct raw_tag {};
    Rational(raw_tag, const mpq_class &q) : v_(q) {}
    mpq_class v_;
};

inline Rational abs(const Rational &a) { return a < Rational(0) ? -a : a; }

} // namespace ncind
