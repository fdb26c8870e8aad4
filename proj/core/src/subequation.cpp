#include <painleve/subequation.hpp>

#include <algorithm>

#include <painleve/dense_matrix.hpp>
#include <painleve/errors.hpp>

namespace painleve
{

namespace
{

// y^j (y')^k for every (j, k) of the ansatz except (0, 0), which is the
// constant 1 and is handled by the callers.
struct TermTable {
    std::vector<std::pair<int, int>> index;
    std::vector<PuiseuxSeries> series; // empty placeholder at the constant slot
    mpq_class first_power;             // most negative exponent over all terms
    mpq_class known_until;             // smallest order() over the non-constant terms
};

TermTable build_terms(const PuiseuxSeries &y, int m)
{
    if (y.den() != 1) {
        throw ContractViolation("fit needs an integer-step series; fit the y-series or substitute x = sqrt(t) u");
    }
    if (m < 1 || m > 4) {
        throw ContractViolation("subequation degree m must lie in 1..4");
    }
    const PuiseuxSeries dy = y.derivative();
    std::vector<PuiseuxSeries> ypow{PuiseuxSeries(), y};
    for (int j = 2; j <= 2 * m; ++j) {
        ypow.push_back(ypow.back() * y);
    }
    std::vector<PuiseuxSeries> dpow{PuiseuxSeries(), dy};
    for (int k = 2; k <= m; ++k) {
        dpow.push_back(dpow.back() * dy);
    }

    TermTable t;
    t.index = SubequationAnsatz::index_set(m);
    t.first_power = 0;
    bool have_order = false;
    for (const auto &[j, k] : t.index) {
        if (j == 0 && k == 0) {
            t.series.emplace_back();
            continue;
        }
        PuiseuxSeries s = j == 0 ? dpow[static_cast<std::size_t>(k)]
                          : k == 0 ? ypow[static_cast<std::size_t>(j)]
                                   : ypow[static_cast<std::size_t>(j)] * dpow[static_cast<std::size_t>(k)];
        t.first_power = std::min(t.first_power, s.lead());
        t.known_until = have_order ? std::min(t.known_until, s.order()) : s.order();
        have_order = true;
        t.series.push_back(std::move(s));
    }
    return t;
}

Scalar term_coeff(const TermTable &t, std::size_t i, const mpq_class &e)
{
    const auto &[j, k] = t.index[i];
    if (j == 0 && k == 0) {
        return e == 0 ? Scalar(1) : Scalar(0);
    }
    return t.series[i].coeff_at(e);
}

int consecutive_zeros(const PuiseuxSeries &r, const mpq_class &from, const BigFloat &tol)
{
    int n = 0;
    for (mpq_class e = from; e < r.order(); e += 1) {
        if (!(r.coeff_at(e).magnitude() <= tol)) {
            break;
        }
        ++n;
    }
    return n;
}

} // namespace

std::vector<std::pair<int, int>> SubequationAnsatz::index_set(int m)
{
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k <= m; ++k) {
        for (int j = 0; j <= 2 * m - 2 * k; ++j) {
            out.emplace_back(j, k);
        }
    }
    return out;
}

Scalar SubequationAnsatz::at(int j, int k) const
{
    const auto it = h.find({j, k});
    return it == h.end() ? Scalar(0) : it->second;
}

bool SubequationAnsatz::is_trivial() const
{
    return std::all_of(h.begin(), h.end(), [](const auto &kv) { return kv.second.is_zero(); });
}

SubequationAnsatz SubequationAnsatz::scaled_to(int j, int k) const
{
    const Scalar pivot = at(j, k);
    if (pivot.is_zero()) {
        throw ContractViolation("cannot normalize on a zero coefficient");
    }
    SubequationAnsatz out = *this;
    for (auto &[key, v] : out.h) {
        v = v / pivot;
    }
    out.h[{j, k}] = Scalar(1);
    return out;
}

PuiseuxSeries SubequationAnsatz::residual(const PuiseuxSeries &y) const
{
    const TermTable t = build_terms(y, m);
    PuiseuxSeries acc = PuiseuxSeries::zero(t.known_until).with_center(y.center());
    for (std::size_t i = 0; i < t.index.size(); ++i) {
        const auto &[j, k] = t.index[i];
        const Scalar c = at(j, k);
        if (j == 0 && k == 0) {
            acc = acc + PuiseuxSeries::monomial(c, 0, std::max(t.known_until, mpq_class(1))).with_center(y.center());
        } else {
            acc = acc + c * t.series[i];
        }
    }
    return acc;
}

int available_match_order(const PuiseuxSeries &y, int m)
{
    const TermTable t = build_terms(y, m);
    const mpq_class n = t.known_until - t.first_power;
    return n > 0 ? static_cast<int>(n.get_num().get_si() / n.get_den().get_si()) : 0;
}

FitResult fit(const PuiseuxSeries &y, int m, int match_order)
{
    const TermTable t = build_terms(y, m);
    const auto unknowns = static_cast<int>(t.index.size());
    if (match_order < unknowns + 2) {
        throw ContractViolation("match_order " + std::to_string(match_order) + " is below unknowns + 2 = "
                                + std::to_string(unknowns + 2));
    }
    if (t.first_power + match_order > t.known_until) {
        throw ContractViolation("series too short: at most " + std::to_string(available_match_order(y, m))
                                + " powers can be matched for m=" + std::to_string(m));
    }

    DenseMatrix a(static_cast<std::size_t>(match_order), t.index.size());
    for (int r = 0; r < match_order; ++r) {
        const mpq_class e = t.first_power + r;
        for (std::size_t c = 0; c < t.index.size(); ++c) {
            a(static_cast<std::size_t>(r), c) = term_coeff(t, c, e);
        }
    }
    const BigFloat a_max = a.max_abs();

    // Column equilibration on the rounded backend.
    std::vector<Scalar> scale(t.index.size(), Scalar(1));
    if (!a.all_exact()) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            BigFloat col(a.bits());
            for (std::size_t r = 0; r < a.rows(); ++r) {
                col = max(col, a(r, c).magnitude());
            }
            if (!col.is_zero()) {
                scale[c] = Scalar(BigFloat(1, col.bits()) / col);
                for (std::size_t r = 0; r < a.rows(); ++r) {
                    a(r, c) *= scale[c];
                }
            }
        }
    }

    FitResult out;
    out.match_order = match_order;
    const auto null = nullspace(a);
    out.raw_nullspace_dim = static_cast<int>(null.size());
    const BigFloat tol = threshold_for(std::max(a.bits(), y.bits())) * max(BigFloat(1, a_max.bits()), a_max);
    for (const auto &v : null) {
        SubequationAnsatz ans;
        ans.m = m;
        std::size_t big = 0;
        for (std::size_t c = 0; c < v.size(); ++c) {
            const Scalar hc = v[c] * scale[c];
            ans.h[t.index[c]] = hc;
            if (hc.magnitude() > ans.h[t.index[big]].magnitude()) {
                big = c;
            }
        }
        if (ans.is_trivial()) {
            continue;
        }
        ans = ans.scaled_to(t.index[big].first, t.index[big].second);
        const int verified = consecutive_zeros(ans.residual(y), t.first_power, tol);
        if (verified < match_order) {
            continue;
        }
        out.basis.push_back(std::move(ans));
        out.residual_orders.push_back(verified);
    }
    out.nullspace_dim = static_cast<int>(out.basis.size());
    return out;
}

std::vector<Scalar> shift_polynomial(const std::vector<Scalar> &p, const Scalar &s)
{
    std::vector<Scalar> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        mpz_class binom = 1;
        for (std::size_t r = 0; r <= i; ++r) {
            if (r > 0) {
                binom = binom * static_cast<unsigned long>(i - r + 1) / static_cast<unsigned long>(r);
            }
            // C(i, r) y^r s^(i - r)
            out[r] += Scalar(mpq_class(binom)) * p[i] * pow(s, static_cast<int>(i - r));
        }
    }
    return out;
}

QuarticReport transform_quartic(const QuarticForm &q)
{
    QuarticReport r;
    r.P0 = q.P0;
    r.half_power_G = q.G;
    r.half_power_E = q.E;
    r.identically_zero = q.A.is_zero() && q.G.is_zero() && q.B.is_zero() && q.E.is_zero() && q.Cq.is_zero();
    // In w = rho^2 = y - P0: y_t^2 = 4 w rho_t^2 = A w^3 + B w^2 + Cq w + G w^(5/2) + E w^(3/2).
    const std::vector<Scalar> in_w{Scalar(0), q.Cq, q.B, q.A};
    r.poly = shift_polynomial(in_w, -q.P0);
    r.polynomial = q.G.is_zero() && q.E.is_zero();
    if (r.polynomial) {
        SubequationAnsatz a;
        a.m = 2;
        for (const auto &idx : SubequationAnsatz::index_set(2)) {
            a.h[idx] = Scalar(0);
        }
        a.h[{0, 2}] = Scalar(1);
        for (int j = 0; j <= 3; ++j) {
            a.h[{j, 0}] = -r.poly[static_cast<std::size_t>(j)];
        }
        r.ansatz = a;
    }
    return r;
}

std::vector<ResiduePair> residue_pairing(const std::vector<std::pair<BranchSpec, PuiseuxSeries>> &branches,
                                         double tol)
{
    for (const auto &[spec, y] : branches) {
        const BranchSpec &ref = branches.front().first;
        if (spec.series_case != ref.series_case || !near(spec.lambda, ref.lambda, 0.0)) {
            throw ContractViolation("residue_pairing needs branches of one case and one lambda");
        }
    }
    std::vector<Scalar> residues;
    for (const auto &[spec, y] : branches) {
        residues.push_back(y.coeff_at(-1));
    }
    std::vector<bool> used(branches.size(), false);
    std::vector<ResiduePair> out;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (used[i]) {
            continue;
        }
        used[i] = true;
        ResiduePair p;
        p.first = i;
        p.residue = residues[i];
        if (near(residues[i], Scalar(0), tol)) {
            p.self_paired = true;
            out.push_back(p);
            continue;
        }
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            if (!used[j] && near(residues[i], -residues[j], tol)) {
                used[j] = true;
                p.second = j;
                break;
            }
        }
        out.push_back(p);
    }
    return out;
}

} // namespace painleve
