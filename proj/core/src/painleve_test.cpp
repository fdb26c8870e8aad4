#include <painleve/painleve_test.hpp>

#include <algorithm>
#include <limits>

#include <mpfr.h>

#include <painleve/errors.hpp>

namespace painleve
{

namespace
{

bool same_value(const Scalar &a, const Scalar &b)
{
    if (a.is_exact() && b.is_exact()) {
        return a == b;
    }
    return near(a, b, threshold_for(std::max(a.bits(), b.bits())));
}

bool is_integer(const Scalar &v)
{
    if (v.is_exact()) {
        return v.rational().get_den() == 1;
    }
    const BigFloat tol = threshold_for(v.bits());
    if (abs(v.imag()) > tol) {
        return false;
    }
    const BigFloat re = v.real();
    BigFloat r(re.bits());
    mpfr_round(r.get(), re.get());
    return abs(re - r) <= tol;
}

bool less_by_parts(const Scalar &a, const Scalar &b)
{
    const BigFloat ar = a.real();
    const BigFloat br = b.real();
    if (ar != br) {
        return ar < br;
    }
    return a.imag() < b.imag();
}

ResonanceSet finish(std::vector<Scalar> values)
{
    std::sort(values.begin(), values.end(), less_by_parts);
    ResonanceSet set;
    set.all_integer = std::all_of(values.begin(), values.end(), is_integer);
    bool skipped_t0 = false;
    for (const auto &v : values) {
        if (!skipped_t0 && same_value(v, Scalar(-1))) {
            skipped_t0 = true;
            continue;
        }
        if (v.real().sign() < 0 && !(abs(v.real()) <= threshold_for(v.bits()))) {
            set.has_extra_negative = true;
        }
    }
    set.values = std::move(values);
    return set;
}

Scalar case2_root(const Scalar &C)
{
    return sqrt(Scalar(1) - Scalar(48) / C);
}

void require_nonzero(const Scalar &C)
{
    if (C.is_zero()) {
        throw UnsupportedParameter("unsupported-parameter: C = 0 (Case 2 formulas divide by C)");
    }
}

} // namespace

std::string to_string(BalanceCase c)
{
    return c == BalanceCase::case1 ? "Case1" : "Case2";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::integrable_candidate: return "integrable-candidate";
    case Verdict::three_parameter_candidate: return "three-parameter-candidate";
    case Verdict::logarithmic: return "logarithmic";
    case Verdict::generic: break;
    }
    return "generic";
}

std::vector<DominantBalance> find_dominant_balances(const Scalar &C)
{
    require_nonzero(C);
    std::vector<DominantBalance> out;

    const Scalar a_squared = Scalar(9) * (Scalar(2) + C);
    if (a_squared.is_zero()) {
        DominantBalance b;
        b.case_tag = BalanceCase::case1;
        b.alpha = Scalar(-2);
        b.beta = Scalar(-2);
        b.a_alpha = Scalar(0);
        b.b_beta = Scalar(-3);
        b.logarithmic = true;
        b.note = "a_alpha = 0: both sign branches coincide and the dominant behaviour is logarithmic";
        out.push_back(b);
    } else {
        const Scalar a = sqrt(a_squared);
        for (int s : {1, -1}) {
            DominantBalance b;
            b.case_tag = BalanceCase::case1;
            b.alpha = Scalar(-2);
            b.beta = Scalar(-2);
            b.a_alpha = Scalar(s) * a;
            b.b_beta = Scalar(-3);
            b.sign = s;
            out.push_back(b);
        }
    }

    const Scalar d = case2_root(C);
    for (int s : {1, -1}) {
        DominantBalance b;
        b.case_tag = BalanceCase::case2;
        b.alpha = (Scalar(1) - Scalar(s) * d) / Scalar(2);
        b.beta = Scalar(-2);
        b.b_beta = Scalar(6) / C;
        b.sign = s;
        if (!(b.alpha.real() > BigFloat(-2, b.alpha.bits()))) {
            b.note = "Re(alpha) <= beta: outside the Case 2 ordering";
        }
        out.push_back(b);
    }
    return out;
}

ResonanceSet resonances(const DominantBalance &balance, const Scalar &C)
{
    require_nonzero(C);
    if (balance.case_tag == BalanceCase::case1) {
        const Scalar half_d = sqrt(Scalar(1) - Scalar(24) * (Scalar(1) + C)) / Scalar(2);
        return finish({Scalar(-1), Scalar(6), Scalar(5, 2) - half_d, Scalar(5, 2) + half_d});
    }
    return finish({Scalar(-1), Scalar(0), Scalar(6), Scalar(balance.sign) * case2_root(C)});
}

Polynomial kowalevski_polynomial(const DominantBalance &balance, const PolynomialODESystem &sys)
{
    const Scalar &alpha = balance.alpha;
    const Scalar &beta = balance.beta;
    const Scalar a = balance.a_alpha.value_or(Scalar(0));
    const Scalar &b = balance.b_beta;

    // Partial derivatives of the leading-order part of p at (a, b).
    auto leading_partials = [&](const BivariatePolynomial &p, const Scalar &target) {
        Scalar px;
        Scalar py;
        for (const auto &[m, c] : p.terms()) {
            const Scalar weight = Scalar(m.first) * alpha + Scalar(m.second) * beta;
            if (!same_value(weight, target)) {
                continue;
            }
            if (m.first > 0) {
                px += c * Scalar(m.first) * pow(a, m.first - 1) * pow(b, m.second);
            }
            if (m.second > 0) {
                py += c * Scalar(m.second) * pow(a, m.first) * pow(b, m.second - 1);
            }
        }
        return std::pair{px, py};
    };
    const auto [px, py] = leading_partials(sys.rhs_x, alpha - Scalar(2));
    const auto [qx, qy] = leading_partials(sys.rhs_y, beta - Scalar(2));

    // (e + r)(e + r - 1) - diag
    auto diagonal = [](const Scalar &e, const Scalar &shift) {
        return Polynomial::from({e * (e - Scalar(1)) - shift, Scalar(2) * e - Scalar(1), Scalar(1)});
    };
    const Polynomial k00 = diagonal(alpha, px);
    const Polynomial k11 = diagonal(beta, qy);
    return k00 * k11 - Polynomial::from({py * qx});
}

ResonanceSet resonances_from_kowalevski(const DominantBalance &balance, const Scalar &C)
{
    require_nonzero(C);
    const PolynomialODESystem sys = build_henon_heiles(C, Scalar(0));
    const Polynomial det = kowalevski_polynomial(balance, sys);
    return finish(roots(det));
}

BigFloat multiset_distance(const std::vector<Scalar> &a, const std::vector<Scalar> &b)
{
    unsigned bits = Scalar::default_bits;
    for (const auto &v : a) {
        bits = std::max(bits, v.bits());
    }
    if (a.size() != b.size()) {
        return BigFloat::from_double(std::numeric_limits<double>::infinity(), bits);
    }
    std::vector<bool> used(b.size(), false);
    BigFloat worst(bits);
    for (const auto &x : a) {
        std::size_t best = b.size();
        BigFloat best_d(bits);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) {
                continue;
            }
            const BigFloat d = (x - b[j]).magnitude();
            if (best == b.size() || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        used[best] = true;
        worst = max(worst, best_d);
    }
    return worst;
}

ClassificationVerdict classify(const Scalar &C, const Scalar &lambda)
{
    require_nonzero(C);
    ClassificationVerdict v;
    for (const auto &b : find_dominant_balances(C)) {
        v.balances.emplace_back(b, resonances(b, C));
    }

    if (same_value(C, Scalar(-1))) {
        if (same_value(lambda, Scalar(1))) {
            v.label = Verdict::integrable_candidate;
            v.detail = "integrable case C = -1, lambda = 1";
        } else {
            v.detail = "C = -1 admits Laurent solutions only at lambda = 1";
        }
    } else if (same_value(C, Scalar(-6))) {
        v.label = Verdict::integrable_candidate;
        v.detail = "integrable case C = -6, any lambda";
    } else if (same_value(C, Scalar(-16))) {
        if (same_value(lambda, Scalar(1, 16))) {
            v.label = Verdict::integrable_candidate;
            v.detail = "integrable case C = -16, lambda = 1/16";
        } else {
            v.detail = "C = -16 admits Laurent solutions only at lambda = 1/16";
        }
    } else if (same_value(C, Scalar(-16, 5))) {
        v.label = Verdict::three_parameter_candidate;
        v.detail = "Case 2, alpha = -3/2: three-parameter Puiseux solutions (t0, a2, b4)";
    } else if (same_value(C, Scalar(-4, 3))) {
        v.label = Verdict::three_parameter_candidate;
        v.detail = "Case 1: three-parameter Laurent solutions (t0, f2, f4)";
    } else if (same_value(C, Scalar(-2))) {
        v.label = Verdict::logarithmic;
        v.detail = "C = -2: a_alpha = 0, dominant term includes a logarithm";
    } else {
        v.detail = "no balance has all resonances integer";
        for (const auto &[b, r] : v.balances) {
            if (r.all_integer) {
                v.detail = "integer resonances in " + to_string(b.case_tag) + " only; not on the candidate list";
                break;
            }
        }
    }
    return v;
}

std::vector<CandidateC> candidate_C_values()
{
    const std::string case2_alpha = "alpha = (1 - sqrt(1 - 48/C))/2";
    std::vector<CandidateC> out;
    out.push_back({Scalar(-1), "Case1", Scalar(-2), "requires lambda = 1"});
    out.push_back({Scalar(-4, 3), "Case1", Scalar(-2), "three-parameter Laurent series"});
    for (const Scalar &C : {Scalar(-16, 5), Scalar(-6), Scalar(-16)}) {
        const Scalar alpha = (Scalar(1) - case2_root(C)) / Scalar(2);
        out.push_back({C, "Case2", alpha, case2_alpha});
    }
    out.push_back({Scalar(-2), "two types of singular behaviour coincide", std::nullopt, "a_alpha = 0, logarithmic"});
    return out;
}

} // namespace painleve
