#ifndef PAINLEVE_SCALAR_HPP
#define PAINLEVE_SCALAR_HPP

#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include <painleve/bigfloat.hpp>

namespace painleve
{

// Field element used for every parameter and series coefficient.
//
// Two backends share one type: an exact rational (always canonical, positive
// denominator) and a rounded complex big-float. Arithmetic between exact
// values stays exact; anything touching a rounded value, or an irrational
// root, is rounded at the larger operand precision. Precision never drops
// below min_bits.
class Scalar
{
public:
    static constexpr unsigned default_bits = 256;
    static constexpr unsigned min_bits = 64;

    Scalar();
    Scalar(long value); // NOLINT(google-explicit-constructor): literals mix freely
    Scalar(int value) : Scalar(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    Scalar(double) = delete; // decimal input goes through parse()
    explicit Scalar(mpq_class value, unsigned bits = default_bits);
    explicit Scalar(const BigFloat &re);
    Scalar(const BigFloat &re, const BigFloat &im);

    // "p/q" or an integer parses exact; anything else ("0.25", "1e-20")
    // parses as a rounded value at the requested precision.
    static Scalar parse(std::string_view text, unsigned bits = default_bits);

    bool is_exact() const { return std::holds_alternative<mpq_class>(value_); }
    unsigned bits() const { return bits_; }
    Scalar with_bits(unsigned bits) const;
    Scalar rounded() const; // same value on the big-float backend

    const mpq_class &rational() const;
    BigFloat real() const;
    BigFloat imag() const;
    BigFloat magnitude() const;
    double to_double() const { return real().to_double(); }

    bool is_zero() const;
    bool is_real() const;
    bool is_finite() const;

    Scalar conj() const;
    std::string to_string() const;
    std::string to_string(int digits) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar &a, const Scalar &b);
    friend Scalar operator-(const Scalar &a, const Scalar &b);
    friend Scalar operator*(const Scalar &a, const Scalar &b);
    friend Scalar operator/(const Scalar &a, const Scalar &b);
    Scalar &operator+=(const Scalar &b) { return *this = *this + b; }
    Scalar &operator-=(const Scalar &b) { return *this = *this - b; }
    Scalar &operator*=(const Scalar &b) { return *this = *this * b; }
    Scalar &operator/=(const Scalar &b) { return *this = *this / b; }

    // Structural equality: same backend and identical components.
    friend bool operator==(const Scalar &a, const Scalar &b);

private:
    struct Complex {
        BigFloat re;
        BigFloat im;
    };

    Complex as_complex(unsigned bits) const;

    std::variant<mpq_class, Complex> value_;
    unsigned bits_ = default_bits;
};

Scalar pow(const Scalar &x, int n);
Scalar sqrt(const Scalar &x);

// Principal root has argument in (-pi/n, pi/n]; branch b multiplies it by
// exp(2*pi*i*b/n). Exact whenever the result is a rational number.
Scalar nth_root(const Scalar &x, unsigned n, unsigned branch = 0);

// |a - b| <= tol
bool near(const Scalar &a, const Scalar &b, const BigFloat &tol);
bool near(const Scalar &a, const Scalar &b, double tol);

// 2^-e at the given precision, as a BigFloat; the usual decision threshold
// is threshold_for(bits) = 2^-(bits/2).
BigFloat threshold_for(unsigned bits);

} // namespace painleve

#endif
