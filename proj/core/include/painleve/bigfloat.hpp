#ifndef PAINLEVE_BIGFLOAT_HPP
#define PAINLEVE_BIGFLOAT_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace painleve
{

// Owning wrapper around an mpfr_t. Every value carries its own precision;
// binary operations round to the larger of the two operand precisions.
class BigFloat
{
public:
    explicit BigFloat(unsigned bits = 256);
    BigFloat(long value, unsigned bits);
    BigFloat(const mpq_class &value, unsigned bits);
    BigFloat(std::string_view decimal, unsigned bits);

    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    long exponent2() const; // floor(log2|x|)+1, the mpfr exponent; 0 for zero

    // Scientific notation with enough digits to round-trip at bits().
    std::string to_string() const;
    std::string to_string(int digits) const;

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator-(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator*(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator/(const BigFloat &a, const BigFloat &b);
    BigFloat &operator+=(const BigFloat &b) { return *this = *this + b; }
    BigFloat &operator-=(const BigFloat &b) { return *this = *this - b; }
    BigFloat &operator*=(const BigFloat &b) { return *this = *this * b; }
    BigFloat &operator/=(const BigFloat &b) { return *this = *this / b; }

    friend std::partial_ordering operator<=>(const BigFloat &a, const BigFloat &b);
    friend bool operator==(const BigFloat &a, const BigFloat &b);

    friend BigFloat abs(const BigFloat &x);
    friend BigFloat sqrt(const BigFloat &x);
    friend BigFloat root(const BigFloat &x, unsigned long n); // x >= 0
    friend BigFloat hypot(const BigFloat &a, const BigFloat &b);
    friend BigFloat atan2(const BigFloat &y, const BigFloat &x);
    friend BigFloat cos(const BigFloat &x);
    friend BigFloat sin(const BigFloat &x);
    friend BigFloat log(const BigFloat &x);
    friend BigFloat exp(const BigFloat &x);
    friend BigFloat pow(const BigFloat &x, const BigFloat &y);
    friend BigFloat ldexp(const BigFloat &x, long e);

    static BigFloat from_double(double value, unsigned bits);
    static BigFloat pi(unsigned bits);
    // 2^e at the given precision
    static BigFloat pow2(long e, unsigned bits);

private:
    mpfr_t value_;
};

BigFloat max(const BigFloat &a, const BigFloat &b);

} // namespace painleve

#endif
