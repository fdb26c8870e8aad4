#include <doctest.h>

#include <random>

#include <painleve/puiseux_series.hpp>

using namespace painleve;

namespace
{

PuiseuxSeries random_series(std::mt19937_64 &rng, long lead, std::size_t n)
{
    std::uniform_int_distribution<long> d(-20, 20);
    std::vector<Scalar> c(n);
    for (auto &e : c) {
        e = Scalar(d(rng), 1 + (d(rng) + 20) % 7);
    }
    return PuiseuxSeries(mpq_class(lead), 1, std::move(c));
}

bool same(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    return (a - b).is_zero();
}

} // namespace

TEST_SUITE("puiseux_series")
{
    TEST_CASE("geometric series squared")
    {
        const PuiseuxSeries g(mpq_class(0), 1, std::vector<Scalar>(8, Scalar(1)));
        const PuiseuxSeries sq = g * g;
        CHECK(sq.order() == mpq_class(8));
        for (int k = 0; k < 8; ++k) {
            CHECK(sq.coeff_at(mpq_class(k)) == Scalar(k + 1));
        }
    }

    TEST_CASE("truncation order of a product with a pole")
    {
        const PuiseuxSeries a(mpq_class(-2), 1, std::vector<Scalar>(6, Scalar(1)));
        const PuiseuxSeries b(mpq_class(0), 1, std::vector<Scalar>(10, Scalar(1)));
        CHECK((a * b).order() == mpq_class(4));
        CHECK((a + b).order() == mpq_class(4));
    }

    TEST_CASE("derivative of a half-integer series")
    {
        const PuiseuxSeries x = PuiseuxSeries::monomial(Scalar(3), mpq_class(-3, 2), mpq_class(2), 2);
        const PuiseuxSeries dx = x.derivative();
        CHECK(dx.coeff_at(mpq_class(-5, 2)) == Scalar(-9, 2));
        CHECK(dx.den() == 2);
    }

    TEST_CASE("ring identities on random series")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 25; ++trial) {
            const PuiseuxSeries a = random_series(rng, -2, 9);
            const PuiseuxSeries b = random_series(rng, -1, 7);
            const PuiseuxSeries c = random_series(rng, 0, 8);
            CHECK(same((a * b) * c, a * (b * c)));
            CHECK(same(a * (b + c), a * b + a * c));
            CHECK(same((a * b).derivative(), a.derivative() * b + a * b.derivative()));
            CHECK(same(a.pow(3), a * a * a));
        }
    }

    TEST_CASE("evaluation and recentering")
    {
        const PuiseuxSeries s(mpq_class(-2), 1, {Scalar(1), Scalar(0), Scalar(2)}, Scalar(1));
        // (t - 1)^-2 + 2 at t = 3
        CHECK(s.evaluate(Scalar(3)) == Scalar(9, 4));
        CHECK(s.with_center(Scalar(0)).evaluate(Scalar(2)) == Scalar(9, 4));
        const PuiseuxSeries h = PuiseuxSeries::monomial(Scalar(1), mpq_class(1, 2), mpq_class(3), 2);
        CHECK(near(h.evaluate(Scalar(1, 4)), Scalar(1, 2), 1e-70));
    }

    TEST_CASE("denominator change keeps the value")
    {
        const PuiseuxSeries s(mpq_class(-2), 1, {Scalar(1), Scalar(2), Scalar(3)});
        const PuiseuxSeries h = s.with_den(2);
        CHECK(h.den() == 2);
        CHECK(h.order() == s.order());
        CHECK(h.coeff_at(mpq_class(-1)) == Scalar(2));
        CHECK(h.coeff_at(mpq_class(-3, 2)).is_zero());
        CHECK(same(h.with_den(2), h));
    }

    TEST_CASE("max coefficient")
    {
        const PuiseuxSeries s(mpq_class(0), 1, {Scalar(1), Scalar(-7, 2), Scalar(3)});
        CHECK(s.max_abs_coeff() == BigFloat(mpq_class(7, 2), 256));
        CHECK(PuiseuxSeries::zero(mpq_class(4)).is_zero());
    }
}
