#include <painleve/puiseux_series.hpp>

#include <algorithm>
#include <utility>

#include <painleve/errors.hpp>

namespace painleve
{

namespace
{

bool exact_zero(const Scalar &s)
{
    return s.is_exact() && s.is_zero();
}

bool is_integer(const mpq_class &q)
{
    return q.get_den() == 1;
}

long to_long(const mpq_class &q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p()) {
        throw ContractViolation("series exponent arithmetic left the integer lattice");
    }
    return q.get_num().get_si();
}

unsigned common_den(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    unsigned den = std::max(a.den(), b.den());
    mpq_class shift = (a.lead() - b.lead()) * den;
    if (!is_integer(shift) && den == 1) {
        den = 2;
        shift = (a.lead() - b.lead()) * den;
    }
    if (!is_integer(shift)) {
        throw ContractViolation("series on incompatible exponent lattices");
    }
    return den;
}

void check_centers(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    if (!(a.center() == b.center())) {
        throw ContractViolation("series with different centers");
    }
}

} // namespace

PuiseuxSeries::PuiseuxSeries() = default;

PuiseuxSeries::PuiseuxSeries(mpq_class lead, unsigned den, std::vector<Scalar> coeffs, Scalar center)
    : lead_(std::move(lead)), den_(den), coeffs_(std::move(coeffs)), center_(std::move(center))
{
    lead_.canonicalize();
    if (den_ != 1 && den_ != 2) {
        throw ContractViolation("PuiseuxSeries: step must be 1 or 1/2");
    }
    if (!is_integer(lead_ * den_)) {
        throw ContractViolation("PuiseuxSeries: lead exponent off the step lattice");
    }
}

PuiseuxSeries PuiseuxSeries::zero(const mpq_class &order, unsigned den)
{
    return PuiseuxSeries(order, den, {});
}

PuiseuxSeries PuiseuxSeries::monomial(const Scalar &coeff, const mpq_class &exponent, const mpq_class &order,
                                      unsigned den)
{
    const long count = to_long((order - exponent) * den);
    if (count <= 0) {
        return zero(order, den);
    }
    std::vector<Scalar> c(static_cast<std::size_t>(count), Scalar(mpq_class(0), coeff.bits()));
    c[0] = coeff;
    return PuiseuxSeries(exponent, den, std::move(c));
}

mpq_class PuiseuxSeries::order() const
{
    mpq_class span(static_cast<long>(coeffs_.size()), den_);
    span.canonicalize();
    return lead_ + span;
}

Scalar PuiseuxSeries::coeff_at(const mpq_class &e) const
{
    if (e >= order()) {
        throw ContractViolation("coefficient requested beyond the truncation order");
    }
    const mpq_class offset = (e - lead_) * den_;
    if (offset < 0 || !is_integer(offset)) {
        return Scalar(mpq_class(0), bits());
    }
    return coeffs_[static_cast<std::size_t>(to_long(offset))];
}

bool PuiseuxSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar &s) { return s.is_zero(); });
}

unsigned PuiseuxSeries::bits() const
{
    unsigned b = Scalar::min_bits;
    for (const auto &c : coeffs_) {
        b = std::max(b, c.bits());
    }
    return coeffs_.empty() ? Scalar::default_bits : b;
}

PuiseuxSeries PuiseuxSeries::with_den(unsigned den) const
{
    if (den == den_) {
        return *this;
    }
    if (den == 2 && den_ == 1) {
        std::vector<Scalar> c;
        c.reserve(2 * coeffs_.size());
        for (const auto &x : coeffs_) {
            c.push_back(x);
            c.emplace_back(mpq_class(0), x.bits());
        }
        return PuiseuxSeries(lead_, 2, std::move(c), center_);
    }
    // 2 -> 1 needs every off-lattice slot to vanish exactly
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i % 2 == 0) {
            c.push_back(coeffs_[i]);
        } else if (!exact_zero(coeffs_[i])) {
            throw ContractViolation("series has half-step terms; cannot use step 1");
        }
    }
    if (coeffs_.size() % 2 != 0) {
        // the dropped trailing slot would have been known; order shrinks by 1/2
        c.pop_back();
    }
    return PuiseuxSeries(lead_, 1, std::move(c), center_);
}

PuiseuxSeries PuiseuxSeries::with_center(const Scalar &t0) const
{
    PuiseuxSeries s = *this;
    s.center_ = t0;
    return s;
}

PuiseuxSeries PuiseuxSeries::truncated(const mpq_class &order) const
{
    if (order > this->order()) {
        throw ContractViolation("cannot extend a series past its truncation order");
    }
    const long count = std::max(0L, to_long((order - lead_) * den_));
    if (count == 0) {
        PuiseuxSeries z(order, den_, {}, center_);
        return z;
    }
    std::vector<Scalar> c(coeffs_.begin(), coeffs_.begin() + count);
    return PuiseuxSeries(lead_, den_, std::move(c), center_);
}

PuiseuxSeries PuiseuxSeries::normalized() const
{
    std::size_t skip = 0;
    while (skip < coeffs_.size() && exact_zero(coeffs_[skip])) {
        ++skip;
    }
    if (skip == 0) {
        return *this;
    }
    std::vector<Scalar> c(coeffs_.begin() + static_cast<std::ptrdiff_t>(skip), coeffs_.end());
    return PuiseuxSeries(exponent(skip), den_, std::move(c), center_);
}

PuiseuxSeries PuiseuxSeries::operator-() const
{
    PuiseuxSeries s = *this;
    for (auto &c : s.coeffs_) {
        c = -c;
    }
    return s;
}

PuiseuxSeries operator+(const PuiseuxSeries &a0, const PuiseuxSeries &b0)
{
    check_centers(a0, b0);
    const unsigned den = common_den(a0, b0);
    const PuiseuxSeries a = a0.with_den(den);
    const PuiseuxSeries b = b0.with_den(den);
    const mpq_class lead = std::min(a.lead(), b.lead());
    const mpq_class order = std::min(a.order(), b.order());
    const long count = std::max(0L, to_long((order - lead) * den));
    std::vector<Scalar> c(static_cast<std::size_t>(count), Scalar(mpq_class(0), std::max(a.bits(), b.bits())));
    const long sa = to_long((a.lead() - lead) * den);
    const long sb = to_long((b.lead() - lead) * den);
    for (long i = 0; i < count; ++i) {
        const long ia = i - sa;
        const long ib = i - sb;
        if (ia >= 0 && ia < static_cast<long>(a.size())) {
            c[static_cast<std::size_t>(i)] += a.coeffs()[static_cast<std::size_t>(ia)];
        }
        if (ib >= 0 && ib < static_cast<long>(b.size())) {
            c[static_cast<std::size_t>(i)] += b.coeffs()[static_cast<std::size_t>(ib)];
        }
    }
    if (count == 0) {
        return PuiseuxSeries(order, den, {}, a.center());
    }
    return PuiseuxSeries(lead, den, std::move(c), a.center());
}

PuiseuxSeries operator-(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    return a + (-b);
}

PuiseuxSeries operator*(const PuiseuxSeries &a0, const PuiseuxSeries &b0)
{
    check_centers(a0, b0);
    const unsigned den = common_den(a0, b0);
    const PuiseuxSeries a = a0.with_den(den);
    const PuiseuxSeries b = b0.with_den(den);
    const mpq_class lead = a.lead() + b.lead();
    const mpq_class order = std::min(a.lead() + b.order(), b.lead() + a.order());
    const long count = std::max(0L, to_long((order - lead) * den));
    if (count == 0) {
        return PuiseuxSeries(order, den, {}, a.center());
    }
    std::vector<Scalar> c(static_cast<std::size_t>(count), Scalar(mpq_class(0), std::max(a.bits(), b.bits())));
    const auto &ac = a.coeffs();
    const auto &bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size() && i < c.size(); ++i) {
        if (exact_zero(ac[i])) {
            continue;
        }
        for (std::size_t j = 0; j < bc.size() && i + j < c.size(); ++j) {
            if (exact_zero(bc[j])) {
                continue;
            }
            c[i + j] += ac[i] * bc[j];
        }
    }
    return PuiseuxSeries(lead, den, std::move(c), a.center());
}

PuiseuxSeries operator*(const Scalar &s, const PuiseuxSeries &a)
{
    PuiseuxSeries r = a;
    for (auto &c : r.coeffs_) {
        if (!exact_zero(c)) {
            c = s * c;
        }
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::derivative() const
{
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class e = exponent(i);
        if (exact_zero(coeffs_[i]) || e == 0) {
            c.emplace_back(mpq_class(0), coeffs_[i].bits());
        } else {
            c.push_back(Scalar(e, coeffs_[i].bits()) * coeffs_[i]);
        }
    }
    return PuiseuxSeries(lead_ - 1, den_, std::move(c), center_);
}

PuiseuxSeries PuiseuxSeries::pow(unsigned n) const
{
    if (n == 0) {
        // 1 + O(t^(order - lead)) relative error carries through
        return monomial(Scalar(mpq_class(1), bits()), 0, trunc_order(), den_).with_center(center_);
    }
    PuiseuxSeries r = *this;
    for (unsigned i = 1; i < n; ++i) {
        r = r * *this;
    }
    return r;
}

Scalar PuiseuxSeries::evaluate(const Scalar &t) const
{
    const Scalar u = t - center_;
    if (coeffs_.empty()) {
        return Scalar(mpq_class(0), t.bits());
    }
    const Scalar s = den_ == 1 ? u : nth_root(u, den_, 0);
    Scalar acc(mpq_class(0), std::max(t.bits(), bits()));
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * s + coeffs_[i];
    }
    const long lead_steps = to_long(lead_ * den_);
    return acc * painleve::pow(s, static_cast<int>(lead_steps));
}

BigFloat PuiseuxSeries::max_abs_coeff() const
{
    BigFloat m(bits());
    for (const auto &c : coeffs_) {
        m = max(m, c.magnitude());
    }
    return m;
}

} // namespace painleve
