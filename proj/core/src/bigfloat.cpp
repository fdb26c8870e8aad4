#include <painleve/bigfloat.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace painleve
{

namespace
{

mpfr_prec_t common_bits(const BigFloat &a, const BigFloat &b)
{
    return static_cast<mpfr_prec_t>(std::max(a.bits(), b.bits()));
}

} // namespace

BigFloat::BigFloat(unsigned bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, unsigned bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class &value, unsigned bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view decimal, unsigned bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    std::string text(decimal);
    if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
}

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    // Leave other in a valid (tiny, zero) state so its destructor is safe.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    if (this != &other) {
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

long BigFloat::exponent2() const
{
    if (!mpfr_regular_p(value_)) {
        return 0;
    }
    return mpfr_get_exp(value_);
}

std::string BigFloat::to_string() const
{
    // ceil(bits * log10(2)) + 2 significant digits round-trip.
    const int digits = static_cast<int>(std::ceil(bits() * 0.30102999566398120)) + 2;
    return to_string(digits);
}

std::string BigFloat::to_string(int digits) const
{
    if (mpfr_zero_p(value_)) {
        return mpfr_signbit(value_) ? "-0" : "0";
    }
    if (mpfr_nan_p(value_)) {
        return "nan";
    }
    if (mpfr_inf_p(value_)) {
        return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
    }
    const int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
    std::vector<char> buffer(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
    return std::string(buffer.data(), static_cast<std::size_t>(n));
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(bits());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(static_cast<unsigned>(common_bits(a, b)));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(static_cast<unsigned>(common_bits(a, b)));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(static_cast<unsigned>(common_bits(a, b)));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(static_cast<unsigned>(common_bits(a, b)));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat &a, const BigFloat &b)
{
    if (mpfr_unordered_p(a.value_, b.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigFloat &a, const BigFloat &b)
{
    return mpfr_equal_p(a.value_, b.value_) != 0;
}

BigFloat abs(const BigFloat &x)
{
    BigFloat r(x.bits());
    mpfr_abs(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat &x)
{
    BigFloat r(x.bits());
    mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat root(const BigFloat &x, unsigned long n)
{
    BigFloat r(x.bits());
#if MPFR_VERSION >= MPFR_VERSION_NUM(4, 0, 0)
    mpfr_rootn_ui(r.value_, x.value_, n, MPFR_RNDN);
#else
    mpfr_root(r.value_, x.value_, n, MPFR_RNDN);
#endif
    return r;
}

BigFloat hypot(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(static_cast<unsigned>(common_bits(a, b)));
    mpfr_hypot(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat &y, const BigFloat &x)
{
    BigFloat r(static_cast<unsigned>(common_bits(y, x)));
    mpfr_atan2(r.value_, y.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat &x)
{
    BigFloat r(x.bits());
    mpfr_cos(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat &x)
{
    BigFloat r(x.bits());
    mpfr_sin(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat &x)
{
    BigFloat r(x.bits());
    mpfr_log(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat &x)
{
    BigFloat r(x.bits());
    mpfr_exp(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat &x, const BigFloat &y)
{
    BigFloat r(static_cast<unsigned>(common_bits(x, y)));
    mpfr_pow(r.value_, x.value_, y.value_, MPFR_RNDN);
    return r;
}

BigFloat ldexp(const BigFloat &x, long e)
{
    BigFloat r(x.bits());
    mpfr_mul_2si(r.value_, x.value_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double value, unsigned bits)
{
    BigFloat r(bits);
    mpfr_set_d(r.value_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(unsigned bits)
{
    BigFloat r(bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e, unsigned bits)
{
    BigFloat r(1, bits);
    mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat &a, const BigFloat &b)
{
    return (a < b) ? b : a;
}

} // namespace painleve
