#include "uqrep/intertwine.hpp"

#include <algorithm>
#include <cmath>

namespace uqrep {

namespace {

constexpr double kFactorEps = 1e-12;

Complex l_minus(long long l, Complex c, const QValue& q) {
    return q_bracket(Complex(static_cast<double>(l), 0.0) - c, q);
}

} // namespace

Complex DiagonalIntertwiner::value_at(const Weight& w) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), w);
    if (it == weights.end() || *it != w)
        throw std::out_of_range("DiagonalIntertwiner: weight outside the window");
    return values[static_cast<size_t>(it - weights.begin())];
}

DiagonalIntertwiner DiagonalIntertwiner::restricted_to(const std::set<Weight>& support) const {
    DiagonalIntertwiner out = *this;
    for (size_t i = 0; i < weights.size(); ++i)
        if (!support.count(weights[i])) out.values[i] = Complex(0.0, 0.0);
    return out;
}

DiagonalIntertwiner intertwiner_recursive(const PrincipalParams& p, const Window& win,
                                          const QValue& q) {
    PrincipalParams target = p;
    std::swap(target.c1, target.c2);
    return intertwiner_recursive_to(p, target, win, q);
}

DiagonalIntertwiner intertwiner_recursive_to(const PrincipalParams& p,
                                             const PrincipalParams& target,
                                             const Window& win, const QValue& q) {
    if (target.m != p.m)
        throw std::invalid_argument("intertwiner: representations restrict to different "
                                    "compact weights (m differs)");
    if (target.m0 != p.m0)
        throw std::invalid_argument("intertwiner: c1 + c2 differs");
    win.validate();

    DiagonalIntertwiner A;
    A.from = p;
    A.to = target;
    A.weights = principal_weights(p.m, win, 0);
    A.values.assign(A.weights.size(), Complex(0.0, 0.0));
    A.normalization = A.weights.front();

    auto index_of = [&](const Weight& w) -> long long {
        auto it = std::lower_bound(A.weights.begin(), A.weights.end(), w);
        if (it == A.weights.end() || *it != w) return -1;
        return it - A.weights.begin();
    };

    // Edge factors [l_sn - c1'] / [l_sn - c1]; any vanishing factor makes the
    // recursion singular here.
    auto edge = [&](const Weight& w, int s) -> std::pair<Complex, Complex> {
        const long long lsn = w[s - 1] - s;
        const Complex num = l_minus(lsn, target.c1, q);
        const Complex den = l_minus(lsn, p.c1, q);
        if (std::abs(num) < kFactorEps || std::abs(den) < kFactorEps)
            throw VanishingFactorError("vanishing q-number factor on a window edge; "
                                       "use analytic_order");
        return {num, den};
    };

    // Weights are lex-sorted, so every non-minimal weight has a predecessor
    // already filled.
    A.values[0] = Complex(1.0, 0.0);
    const int n = p.n();
    for (size_t wi = 1; wi < A.weights.size(); ++wi) {
        const Weight& w = A.weights[wi];
        for (int s = 1; s <= n; ++s) {
            Weight pred = w;
            pred[s - 1] -= 1;
            const long long pi = index_of(pred);
            if (pi < 0) continue;
            const auto [num, den] = edge(pred, s);
            A.values[wi] = A.values[pi] * num / den;
            break;
        }
    }

    // Loop consistency over all e-edges, plus the f-derived factors.
    double worst = 0.0;
    for (size_t wi = 0; wi < A.weights.size(); ++wi) {
        const Weight& w = A.weights[wi];
        for (int s = 1; s <= n; ++s) {
            Weight up = w;
            up[s - 1] += 1;
            const long long ui = index_of(up);
            if (ui < 0) continue;
            const auto [num, den] = edge(w, s);
            const Complex lhs = A.values[ui] * den, rhs = A.values[wi] * num;
            const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
            worst = std::max(worst, std::abs(lhs - rhs) / scale);

            const long long lsn = w[s - 1] - s;
            const Complex fn = l_minus(lsn, p.c2, q);
            const Complex fd = l_minus(lsn, target.c2, q);
            const Complex flhs = A.values[ui] * fd, frhs = A.values[wi] * fn;
            const double fscale = std::max({std::abs(flhs), std::abs(frhs), 1.0});
            worst = std::max(worst, std::abs(flhs - frhs) / fscale);
        }
    }
    if (worst > 1e-10)
        throw LoopInconsistencyError("recursion path-dependent (deviation " +
                                     std::to_string(worst) + "): no intertwiner");
    return A;
}

Complex intertwiner_product(const Weight& mn, const Weight& m, Complex c1, Complex c2,
                            int k, const QValue& q) {
    const int n = static_cast<int>(mn.size());
    if (n < 2) throw std::invalid_argument("intertwiner_product: needs n >= 2");
    if (k < 1 || k > n - 1) throw std::out_of_range("intertwiner_product: k out of range");
    const auto lw = l_row(mn);
    const auto lm = l_params(m);
    Complex a(1.0, 0.0);
    for (int r = 1; r <= k; ++r)
        for (long long sig = lm[r - 1] + 1; sig <= lw[r - 1] - 1; ++sig)
            a *= q_bracket(Complex(static_cast<double>(sig), 0.0) - c2, q);
    for (int s = k + 1; s <= n; ++s)
        for (long long tau = lw[s - 1]; tau <= lm[s - 2] - 1; ++tau)
            a *= q_bracket(Complex(static_cast<double>(tau), 0.0) - c1, q);
    return a;
}

DiagonalIntertwiner intertwiner_from_products(const PrincipalParams& p, const Window& win,
                                              const QValue& q, int k) {
    const int n = p.n();
    if (n < 2) throw std::invalid_argument("intertwiner_from_products: needs n >= 2");
    if (k == 0) k = n - 1;
    DiagonalIntertwiner A;
    A.from = p;
    A.to = p;
    std::swap(A.to.c1, A.to.c2);
    A.weights = principal_weights(p.m, win, 0);
    A.values.reserve(A.weights.size());
    for (const Weight& w : A.weights) {
        const Complex num = intertwiner_product(w, p.m, p.c1, p.c2, k, q);
        const Complex den = intertwiner_product(w, p.m, p.c2, p.c1, k, q);
        if (std::abs(den) < kFactorEps)
            throw VanishingFactorError("product form singular at a window weight");
        A.values.push_back(num / den);
    }
    A.normalization = A.weights.front();
    return A;
}

namespace {

struct Factor {
    long long arg_at_c0;   // value of the q-number argument at c1 = c0
    int dz;                // d(argument)/d(c1): +1 or -1
    bool numerator;
};

// Factor catalog of b_w(c1) = a(c1,c2)/a(c2,c1) (split k = n-1) with
// c2 = m0 - c1.  For n = 1 the product form is anchored at the minimal
// window weight (b there = 1).
void catalog(const Weight& w, const Weight& m, long long m0, long long c0,
             long long n1_anchor_l, std::vector<Factor>& out) {
    const int n = static_cast<int>(w.size());
    const auto lw = l_row(w);
    const long long c2_0 = m0 - c0;
    if (n == 1) {
        // b_w = prod_{v=l_min}^{l_w - 1} [v - c2]/[v - c1]
        for (long long v = n1_anchor_l; v <= lw[0] - 1; ++v) {
            out.push_back({v - c2_0, +1, true});
            out.push_back({v - c0, -1, false});
        }
        return;
    }
    const auto lm = l_params(m);
    for (int r = 1; r <= n - 1; ++r)
        for (long long sig = lm[r - 1] + 1; sig <= lw[r - 1] - 1; ++sig) {
            out.push_back({sig - c2_0, +1, true});    // [sigma - c2] in a(c1,c2)
            out.push_back({sig - c0, -1, false});     // [sigma - c1] in a(c2,c1)
        }
    for (long long tau = lw[n - 1]; tau <= lm[n - 2] - 1; ++tau) {
        out.push_back({tau - c0, -1, true});          // [tau - c1] in a(c1,c2)
        out.push_back({tau - c2_0, +1, false});       // [tau - c2] in a(c2,c1)
    }
}

} // namespace

std::map<Weight, AnalyticOrder> analytic_order(const Weight& m, long long m0, long long c0,
                                               const Window& win, const QValue& q) {
    win.validate();
    const auto weights = principal_weights(m, win, 0);
    const long long anchor_l = weights.front()[0] - 1;  // n = 1 only
    const double d0 = q_number_derivative(QExponent(0LL), q).value().real();

    std::map<Weight, AnalyticOrder> out;
    for (const Weight& w : weights) {
        std::vector<Factor> factors;
        catalog(w, m, m0, c0, anchor_l, factors);
        AnalyticOrder ao;
        Complex lead(1.0, 0.0);
        for (const Factor& f : factors) {
            if (f.arg_at_c0 == 0) {
                const Complex v(static_cast<double>(f.dz) * d0, 0.0);
                if (f.numerator) {
                    ao.order += 1;
                    lead *= v;
                } else {
                    ao.order -= 1;
                    lead /= v;
                }
            } else {
                const Complex v(q_bracket(f.arg_at_c0, q), 0.0);
                lead = f.numerator ? lead * v : lead / v;
            }
        }
        ao.leading = lead;
        out[w] = ao;
    }
    return out;
}

DiagonalIntertwiner residue_intertwiner(const Weight& m, long long m0, long long c0,
                                        int pole_order, const Window& win, const QValue& q) {
    const auto orders = analytic_order(m, m0, c0, win, q);
    int min_ord = 0;
    for (const auto& [w, ao] : orders) min_ord = std::min(min_ord, ao.order);
    if (min_ord >= 0)
        throw std::domain_error("residue_intertwiner: c0 is not a pole");
    if (-min_ord != pole_order)
        throw std::domain_error("residue_intertwiner: measured pole order " +
                                std::to_string(-min_ord) + " differs from requested " +
                                std::to_string(pole_order));

    DiagonalIntertwiner B;
    B.from.m = m;
    B.from.c1 = Complex(static_cast<double>(c0), 0.0);
    B.from.c2 = Complex(static_cast<double>(m0 - c0), 0.0);
    B.from.m0 = m0;
    B.to = B.from;
    std::swap(B.to.c1, B.to.c2);
    for (const auto& [w, ao] : orders) {
        B.weights.push_back(w);
        B.values.push_back(ao.order == min_ord ? ao.leading : Complex(0.0, 0.0));
    }
    B.normalization = B.weights.front();
    return B;
}

double intertwining_residual(const DiagonalIntertwiner& A, const WindowedRep& T,
                             const WindowedRep& Tp) {
    if (T.basis.dim() != Tp.basis.dim() || T.basis.weights != Tp.basis.weights)
        throw std::invalid_argument("intertwining_residual: bases differ");
    const Eigen::Index dim = T.basis.dim();
    std::vector<SparseOperator::Triplet> td;
    td.reserve(static_cast<size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Weight& w = T.basis.weights[T.basis.weight_of[i]];
        td.emplace_back(i, i, A.value_at(w));
    }
    const auto D = SparseOperator::from_triplets(dim, dim, td);

    double worst = 0.0;
    auto check = [&](const SparseOperator& a, const SparseOperator& b) {
        worst = std::max(worst, (D * a - b * D).max_abs_on_columns(T.interior));
    };
    for (size_t i = 0; i < T.gens.k.size(); ++i) {
        check(T.gens.k[i], Tp.gens.k[i]);
        check(T.gens.kinv[i], Tp.gens.kinv[i]);
    }
    for (size_t i = 0; i < T.gens.e.size(); ++i) {
        check(T.gens.e[i], Tp.gens.e[i]);
        check(T.gens.f[i], Tp.gens.f[i]);
    }
    return worst;
}

} // namespace uqrep
