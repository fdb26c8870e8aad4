#include <painleve/scalar.hpp>

#include <algorithm>
#include <string>

#include <painleve/errors.hpp>

namespace painleve
{

namespace
{

unsigned clamp_bits(unsigned bits)
{
    return std::max(bits, Scalar::min_bits);
}

bool is_integer_text(std::string_view text)
{
    if (text.empty()) {
        return false;
    }
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) {
        return false;
    }
    return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_integer(std::string_view text)
{
    std::string s(text);
    if (!s.empty() && s[0] == '+') {
        s.erase(0, 1);
    }
    return mpz_class(s, 10);
}

// Exact n-th root of a non-negative integer, if it is a perfect power.
bool exact_root(const mpz_class &value, unsigned long n, mpz_class &out)
{
    return mpz_root(out.get_mpz_t(), value.get_mpz_t(), n) != 0;
}

} // namespace

Scalar::Scalar() : value_(mpq_class(0)) {}

Scalar::Scalar(long value) : value_(mpq_class(value)) {}

Scalar::Scalar(long num, long den)
{
    if (den == 0) {
        throw ContractViolation("Scalar: zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
}

Scalar::Scalar(mpq_class value, unsigned bits) : bits_(clamp_bits(bits))
{
    if (value.get_den() == 0) {
        throw ContractViolation("Scalar: zero denominator");
    }
    value.canonicalize();
    value_ = std::move(value);
}

Scalar::Scalar(const BigFloat &re) : value_(Complex{re, BigFloat(re.bits())}), bits_(clamp_bits(re.bits()))
{
    if (bits_ != re.bits()) {
        *this = with_bits(bits_);
    }
}

Scalar::Scalar(const BigFloat &re, const BigFloat &im) : bits_(clamp_bits(std::max(re.bits(), im.bits())))
{
    BigFloat r(bits_), i(bits_);
    mpfr_set(r.get(), re.get(), MPFR_RNDN);
    mpfr_set(i.get(), im.get(), MPFR_RNDN);
    value_ = Complex{std::move(r), std::move(i)};
}

Scalar Scalar::parse(std::string_view text, unsigned bits)
{
    bits = clamp_bits(bits);
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den)) {
            throw ContractViolation("malformed rational literal '" + std::string(text) + "'");
        }
        mpz_class d = parse_integer(den);
        if (d == 0) {
            throw ContractViolation("zero denominator in '" + std::string(text) + "'");
        }
        return Scalar(mpq_class(parse_integer(num), d), bits);
    }
    if (is_integer_text(text)) {
        return Scalar(mpq_class(parse_integer(text)), bits);
    }
    try {
        return Scalar(BigFloat(text, bits));
    } catch (const std::invalid_argument &) {
        throw ContractViolation("malformed number '" + std::string(text) + "'");
    }
}

Scalar Scalar::with_bits(unsigned bits) const
{
    bits = clamp_bits(bits);
    if (is_exact()) {
        Scalar r = *this;
        r.bits_ = bits;
        return r;
    }
    const auto &c = std::get<Complex>(value_);
    BigFloat re(bits), im(bits);
    mpfr_set(re.get(), c.re.get(), MPFR_RNDN);
    mpfr_set(im.get(), c.im.get(), MPFR_RNDN);
    Scalar r;
    r.value_ = Complex{std::move(re), std::move(im)};
    r.bits_ = bits;
    return r;
}

Scalar Scalar::rounded() const
{
    if (!is_exact()) {
        return *this;
    }
    return Scalar(real(), BigFloat(bits_));
}

const mpq_class &Scalar::rational() const
{
    if (!is_exact()) {
        throw ContractViolation("Scalar::rational on a rounded value");
    }
    return std::get<mpq_class>(value_);
}

Scalar::Complex Scalar::as_complex(unsigned bits) const
{
    if (is_exact()) {
        return Complex{BigFloat(std::get<mpq_class>(value_), bits), BigFloat(bits)};
    }
    const auto &c = std::get<Complex>(value_);
    if (c.re.bits() == bits) {
        return c;
    }
    BigFloat re(bits), im(bits);
    mpfr_set(re.get(), c.re.get(), MPFR_RNDN);
    mpfr_set(im.get(), c.im.get(), MPFR_RNDN);
    return Complex{std::move(re), std::move(im)};
}

BigFloat Scalar::real() const
{
    return as_complex(bits_).re;
}

BigFloat Scalar::imag() const
{
    return as_complex(bits_).im;
}

BigFloat Scalar::magnitude() const
{
    if (is_exact()) {
        return BigFloat(abs(std::get<mpq_class>(value_)), bits_);
    }
    const auto &c = std::get<Complex>(value_);
    return hypot(c.re, c.im);
}

bool Scalar::is_zero() const
{
    if (is_exact()) {
        return std::get<mpq_class>(value_) == 0;
    }
    const auto &c = std::get<Complex>(value_);
    return c.re.is_zero() && c.im.is_zero();
}

bool Scalar::is_real() const
{
    return is_exact() || std::get<Complex>(value_).im.is_zero();
}

bool Scalar::is_finite() const
{
    if (is_exact()) {
        return true;
    }
    const auto &c = std::get<Complex>(value_);
    return c.re.is_finite() && c.im.is_finite();
}

Scalar Scalar::conj() const
{
    if (is_exact()) {
        return *this;
    }
    const auto &c = std::get<Complex>(value_);
    return Scalar(c.re, -c.im);
}

std::string Scalar::to_string() const
{
    if (is_exact()) {
        return std::get<mpq_class>(value_).get_str();
    }
    const auto &c = std::get<Complex>(value_);
    if (c.im.is_zero()) {
        return c.re.to_string();
    }
    return "(" + c.re.to_string() + ", " + c.im.to_string() + ")";
}

std::string Scalar::to_string(int digits) const
{
    if (is_exact()) {
        return std::get<mpq_class>(value_).get_str();
    }
    const auto &c = std::get<Complex>(value_);
    if (c.im.is_zero()) {
        return c.re.to_string(digits);
    }
    return "(" + c.re.to_string(digits) + ", " + c.im.to_string(digits) + ")";
}

Scalar Scalar::operator-() const
{
    if (is_exact()) {
        return Scalar(mpq_class(-std::get<mpq_class>(value_)), bits_);
    }
    const auto &c = std::get<Complex>(value_);
    return Scalar(-c.re, -c.im);
}

Scalar operator+(const Scalar &a, const Scalar &b)
{
    const unsigned bits = std::max(a.bits_, b.bits_);
    if (a.is_exact() && b.is_exact()) {
        return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)), bits);
    }
    const auto x = a.as_complex(bits);
    const auto y = b.as_complex(bits);
    return Scalar(x.re + y.re, x.im + y.im);
}

Scalar operator-(const Scalar &a, const Scalar &b)
{
    const unsigned bits = std::max(a.bits_, b.bits_);
    if (a.is_exact() && b.is_exact()) {
        return Scalar(mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)), bits);
    }
    const auto x = a.as_complex(bits);
    const auto y = b.as_complex(bits);
    return Scalar(x.re - y.re, x.im - y.im);
}

Scalar operator*(const Scalar &a, const Scalar &b)
{
    const unsigned bits = std::max(a.bits_, b.bits_);
    if (a.is_exact() && b.is_exact()) {
        return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)), bits);
    }
    const auto x = a.as_complex(bits);
    const auto y = b.as_complex(bits);
    if (x.im.is_zero() && y.im.is_zero()) {
        return Scalar(x.re * y.re, BigFloat(bits));
    }
    return Scalar(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
}

Scalar operator/(const Scalar &a, const Scalar &b)
{
    if (b.is_zero()) {
        throw ContractViolation("Scalar: division by zero");
    }
    const unsigned bits = std::max(a.bits_, b.bits_);
    if (a.is_exact() && b.is_exact()) {
        return Scalar(mpq_class(std::get<mpq_class>(a.value_) / std::get<mpq_class>(b.value_)), bits);
    }
    const auto x = a.as_complex(bits);
    const auto y = b.as_complex(bits);
    if (y.im.is_zero()) {
        return Scalar(x.re / y.re, x.im / y.re);
    }
    const BigFloat den = y.re * y.re + y.im * y.im;
    return Scalar((x.re * y.re + x.im * y.im) / den, (x.im * y.re - x.re * y.im) / den);
}

bool operator==(const Scalar &a, const Scalar &b)
{
    if (a.is_exact() != b.is_exact()) {
        return false;
    }
    if (a.is_exact()) {
        return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    }
    const auto &x = std::get<Scalar::Complex>(a.value_);
    const auto &y = std::get<Scalar::Complex>(b.value_);
    return x.re == y.re && x.im == y.im;
}

Scalar pow(const Scalar &x, int n)
{
    if (n < 0) {
        return Scalar(1) / pow(x, -n);
    }
    Scalar result = Scalar(1).with_bits(x.bits());
    Scalar base = x;
    unsigned e = static_cast<unsigned>(n);
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Scalar sqrt(const Scalar &x)
{
    return nth_root(x, 2, 0);
}

namespace
{

// Multiply by exp(i*pi*p/n).
Scalar rotate(const Scalar &z, long p, unsigned n)
{
    const long period = 2L * static_cast<long>(n);
    p = ((p % period) + period) % period;
    if (p == 0) {
        return z;
    }
    if ((2 * p) % static_cast<long>(n) == 0) {
        // quarter turns are exact
        const long quarter = (2 * p) / static_cast<long>(n);
        if (quarter == 2) {
            return -z;
        }
        const BigFloat re = z.real();
        const BigFloat im = z.imag();
        return quarter == 1 ? Scalar(-im, re) : Scalar(im, -re);
    }
    const unsigned bits = z.bits();
    const BigFloat angle = BigFloat::pi(bits) * BigFloat(p, bits) / BigFloat(static_cast<long>(n), bits);
    return z * Scalar(cos(angle), sin(angle));
}

} // namespace

Scalar nth_root(const Scalar &x, unsigned n, unsigned branch)
{
    if (n == 0) {
        throw ContractViolation("nth_root: n must be positive");
    }
    if (branch >= n) {
        throw ContractViolation("nth_root: branch must be below n");
    }
    if (!x.is_finite()) {
        throw ContractViolation("nth_root: non-finite argument");
    }
    if (x.is_zero()) {
        return x.is_exact() ? Scalar(mpq_class(0), x.bits()) : Scalar(BigFloat(x.bits()), BigFloat(x.bits()));
    }
    const unsigned bits = x.bits();
    if (x.is_real()) {
        const BigFloat re = x.real();
        const bool negative = re.sign() < 0;
        Scalar base;
        bool have_exact = false;
        if (x.is_exact()) {
            const mpq_class q = abs(x.rational());
            mpz_class num, den;
            if (exact_root(q.get_num(), n, num) && exact_root(q.get_den(), n, den)) {
                base = Scalar(mpq_class(num, den), bits);
                have_exact = true;
            }
        }
        if (!have_exact) {
            base = Scalar(root(abs(re), n), BigFloat(bits));
        }
        // arg(x) is 0 or pi; the root picks up arg/n plus the branch rotation
        const long p = 2L * static_cast<long>(branch) + (negative ? 1 : 0);
        return rotate(base, p, n);
    }
    const BigFloat re = x.real();
    const BigFloat im = x.imag();
    const BigFloat mag = root(hypot(re, im), n);
    const BigFloat arg = atan2(im, re) / BigFloat(static_cast<long>(n), bits);
    Scalar principal(mag * cos(arg), mag * sin(arg));
    return rotate(principal, 2L * static_cast<long>(branch), n);
}

bool near(const Scalar &a, const Scalar &b, const BigFloat &tol)
{
    return (a - b).magnitude() <= tol;
}

bool near(const Scalar &a, const Scalar &b, double tol)
{
    return near(a, b, BigFloat::from_double(tol, std::max(a.bits(), b.bits())));
}

BigFloat threshold_for(unsigned bits)
{
    return BigFloat::pow2(-static_cast<long>(bits / 2), bits);
}

} // namespace painleve
