#pragma once

// Exact scalar arithmetic. All coefficients in the library are rationals
// with arbitrary-precision integer parts; GMP supplies the bignum layer.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spinclif {

using BigInt = mpz_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Canonical form invariant: gcd(|num|, den) = 1 and den >= 1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(const BigInt& n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { canonicalize(); }
    Rational(const BigInt& n, const BigInt& d) : q_(n, d) { canonicalize(); }

    // Accepts "p", "-p" or "p/q".
    static Rational from_string(std::string_view s) {
        std::string str(s);
        auto slash = str.find('/');
        Rational r;
        if (slash == std::string::npos) {
            r.q_ = mpq_class(BigInt(str), 1);
        } else {
            BigInt num(str.substr(0, slash));
            BigInt den(str.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("rational with zero denominator: " + str);
            r.q_ = mpq_class(num, den);
            r.canonicalize();
        }
        return r;
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        return Rational(1) / *this;
    }

    double to_double() const { return q_.get_d(); }

    // "p/q", with "/q" omitted when q = 1.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    void canonicalize() { q_.canonicalize(); }

    mpq_class q_;
};

// Half-integer spin label, stored as 2s.
class HalfInt {
public:
    HalfInt() : twice_(0) {}
    explicit HalfInt(int twice) : twice_(twice) {
        if (twice < 0) throw std::invalid_argument("negative spin");
    }
    static HalfInt of_int(int s) { return HalfInt(2 * s); }

    // Accepts "0", "2", "1/2", "3/2", ...
    static HalfInt parse(std::string_view s) {
        std::string str(s);
        auto slash = str.find('/');
        if (slash == std::string::npos) return HalfInt(2 * std::stoi(str));
        if (str.substr(slash + 1) != "2")
            throw std::invalid_argument("spin must be a half-integer: " + str);
        int n = std::stoi(str.substr(0, slash));
        return HalfInt(n);
    }

    int twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    bool is_zero() const { return twice_ == 0; }
    int dim() const { return twice_ + 1; }              // 2s+1
    Rational value() const { return Rational(twice_, 2); }
    Rational s_times_s_plus_one() const { return Rational(twice_ * (twice_ + 2), 4); }

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice_ == b.twice_; }
    friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.twice_ != b.twice_; }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    int twice_;
};

}  // namespace spinclif
