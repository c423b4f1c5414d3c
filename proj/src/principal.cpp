#include "uqrep/principal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace uqrep {

PrincipalParams make_params(Weight m, Complex c1, Complex c2, double tol) {
    validate_weight(m);
    const Complex sum = c1 + c2;
    const long long m0 = std::llround(sum.real());
    if (std::abs(sum.imag()) > tol || std::abs(sum.real() - static_cast<double>(m0)) > tol)
        throw std::invalid_argument("c1 + c2 must be an integer");
    return PrincipalParams{std::move(m), c1, c2, m0};
}

int PrincipalBasis::weight_index(const Weight& w) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), w);
    if (it == weights.end() || *it != w) return -1;
    return static_cast<int>(it - weights.begin());
}

double omega(const Weight& m, const Weight& mn, const std::vector<long long>& row_nm1,
             int s, const QValue& q) {
    const int n = static_cast<int>(mn.size());
    if (s < 1 || s > n) throw std::out_of_range("omega: s out of range");
    if (static_cast<int>(row_nm1.size()) != n - 1)
        throw std::invalid_argument("omega: row n-1 has wrong length");
    if (n >= 2 && !principal_weight_ok(m, mn))
        throw std::invalid_argument("omega: weight violates the interleaving constraints");

    // Raising coordinate s must stay inside the interleaving box.
    if (n >= 2) {
        Weight up = mn;
        up[s - 1] += 1;
        if (!principal_weight_ok(m, up)) return 0.0;
    }

    const auto lmn = l_row(mn);
    const auto lm = l_params(m);
    const auto lb = l_row(row_nm1);
    const long long lsn = lmn[s - 1];

    double num = 1.0;
    for (int j = 1; j <= n - 1; ++j)
        num *= q_bracket(lb[j - 1] - lsn - 1, q) * q_bracket(lm[j - 1] - lsn, q);
    double den = 1.0;
    for (int r = 1; r <= n; ++r) {
        if (r == s) continue;
        den *= q_bracket(lsn - lmn[r - 1] + 1, q) * q_bracket(lsn - lmn[r - 1], q);
    }

    const double radicand = num / den;
    if (radicand < -1e-9 * std::max(1.0, std::abs(num / den)))
        throw std::logic_error("omega: negative radicand");
    return std::sqrt(std::max(0.0, radicand));
}

WindowedRep build_principal(const PrincipalParams& p, const Window& win, const QValue& q) {
    win.validate();
    const int n = p.n();

    WindowedRep rep;
    rep.params = p;
    rep.window = win;
    rep.q_value = q.real();

    auto& basis = rep.basis;
    basis.weights = principal_weights(p.m, win, 0);
    basis.block_offset.assign(basis.weights.size() + 1, 0);
    for (size_t wi = 0; wi < basis.weights.size(); ++wi) {
        auto block = enumerate_tableaux(basis.weights[wi]);
        basis.block_offset[wi] = static_cast<Eigen::Index>(basis.tableaux.size());
        for (auto& t : block) {
            basis.lookup[t.flat_key()] = static_cast<Eigen::Index>(basis.tableaux.size());
            basis.weight_of.push_back(static_cast<int>(wi));
            basis.tableaux.push_back(std::move(t));
        }
    }
    basis.block_offset.back() = basis.dim();

    const long long hi_bound =
        (n == 1 ? win.upper_slack : p.m.front() + win.upper_slack) - win.interior_margin;
    const long long lo_bound =
        (n == 1 ? -win.lower_slack : p.m.back() - win.lower_slack) + win.interior_margin;
    rep.interior.assign(basis.dim(), 0);
    bool any_interior = false;
    for (Eigen::Index i = 0; i < basis.dim(); ++i) {
        const Weight& w = basis.weights[basis.weight_of[i]];
        const bool in = w.front() <= hi_bound && w.back() >= lo_bound;
        rep.interior[i] = in ? 1 : 0;
        any_interior |= in;
    }
    if (!any_interior) throw std::invalid_argument("window too small: empty interior");

    const Eigen::Index dim = basis.dim();
    GeneratorSet& g = rep.gens;
    g.rank = n + 1;

    // k_1..k_n act by the compact formulas on the full tableau.
    for (int r = 1; r <= n; ++r) {
        std::vector<SparseOperator::Triplet> kd, kid;
        for (Eigen::Index c = 0; c < dim; ++c) {
            const GTTableau& M = basis.tableaux[c];
            long long a = 0;
            for (int i = 1; i <= r; ++i) a += M.at(i, r);
            for (int i = 1; i <= r - 1; ++i) a -= M.at(i, r - 1);
            const double qa = std::pow(q.real(), static_cast<double>(a));
            kd.emplace_back(c, c, Complex(qa, 0.0));
            kid.emplace_back(c, c, Complex(1.0 / qa, 0.0));
        }
        g.k.push_back(SparseOperator::from_triplets(dim, dim, kd));
        g.kinv.push_back(SparseOperator::from_triplets(dim, dim, kid));
    }
    // k_{n+1}: diagonal with integer exponent from c1 + c2 = m0.
    {
        long long msum = 0;
        for (long long v : p.m) msum += v;
        std::vector<SparseOperator::Triplet> kd, kid;
        for (Eigen::Index c = 0; c < dim; ++c) {
            const Weight& w = basis.weights[basis.weight_of[c]];
            long long wsum = 0;
            for (long long v : w) wsum += v;
            const long long a = p.m0 + n + 2 + msum - wsum;
            const double qa = std::pow(q.real(), static_cast<double>(a));
            kd.emplace_back(c, c, Complex(qa, 0.0));
            kid.emplace_back(c, c, Complex(1.0 / qa, 0.0));
        }
        g.k.push_back(SparseOperator::from_triplets(dim, dim, kd));
        g.kinv.push_back(SparseOperator::from_triplets(dim, dim, kid));
    }

    // e_r, f_r for r < n: blockwise compact action.
    for (int r = 1; r <= n - 1; ++r) {
        std::vector<SparseOperator::Triplet> te, tf;
        for (Eigen::Index c = 0; c < dim; ++c) {
            const GTTableau& M = basis.tableaux[c];
            for (int j = 1; j <= r; ++j) {
                if (auto up = apply_shift(M, r, j, +1)) {
                    const double a = gt_coefficient(M, r, j, q);
                    if (a != 0.0) te.emplace_back(basis.lookup.at(up->flat_key()), c, Complex(a, 0.0));
                }
                if (auto dn = apply_shift(M, r, j, -1)) {
                    const double a = gt_coefficient(*dn, r, j, q);
                    if (a != 0.0) tf.emplace_back(basis.lookup.at(dn->flat_key()), c, Complex(a, 0.0));
                }
            }
        }
        g.e.push_back(SparseOperator::from_triplets(dim, dim, te));
        g.f.push_back(SparseOperator::from_triplets(dim, dim, tf));
    }

    // e_n, f_n: shift the top row; images outside the window are dropped.
    {
        std::vector<SparseOperator::Triplet> te, tf;
        const std::vector<long long> empty_row;
        for (Eigen::Index c = 0; c < dim; ++c) {
            const GTTableau& M = basis.tableaux[c];
            const Weight& w = basis.weights[basis.weight_of[c]];
            const auto lw = l_row(w);
            const auto& row_nm1 = n >= 2 ? M.row(n - 1) : empty_row;
            for (int s = 1; s <= n; ++s) {
                Weight up = w;
                up[s - 1] += 1;
                if (basis.weight_index(up) >= 0) {
                    const double om = omega(p.m, w, row_nm1, s, q);
                    if (om != 0.0) {
                        const Complex coeff =
                            q_bracket(Complex(static_cast<double>(lw[s - 1]), 0.0) - p.c1, q) * om;
                        GTTableau Mup = M;
                        Mup.at(s, n) += 1;
                        te.emplace_back(basis.lookup.at(Mup.flat_key()), c, coeff);
                    }
                }
                Weight dn = w;
                dn[s - 1] -= 1;
                if (basis.weight_index(dn) >= 0) {
                    const double om = omega(p.m, dn, row_nm1, s, q);
                    if (om != 0.0) {
                        const Complex coeff =
                            q_bracket(p.c2 + 1.0 - Complex(static_cast<double>(lw[s - 1]), 0.0), q) * om;
                        GTTableau Mdn = M;
                        Mdn.at(s, n) -= 1;
                        tf.emplace_back(basis.lookup.at(Mdn.flat_key()), c, coeff);
                    }
                }
            }
        }
        g.e.push_back(SparseOperator::from_triplets(dim, dim, te));
        g.f.push_back(SparseOperator::from_triplets(dim, dim, tf));
    }

    return rep;
}

RelationReport verify_principal_relations(const WindowedRep& rep, const QValue& q, double tol) {
    bool any = false;
    for (char c : rep.interior) any |= (c != 0);
    if (!any) throw std::invalid_argument("empty interior");

    const RelationReport detail =
        verify_generator_relations(rep.gens, q, tol, &rep.interior, /*top_only=*/true);

    const int R = rep.gens.rank;
    RelationReport out;
    out.tolerance = tol;
    double fam[7] = {0, 0, 0, 0, 0, 0, 0};  // indices 0..6 ~ (21)..(26) at 1..6
    for (const auto& item : detail.items) {
        int i = -1, j = -1;
        std::sscanf(item.relation.c_str() + item.relation.find('['),
                    "[%d,%d]", &i, &j);
        const std::string& nm = item.relation;
        int f = 0;
        if (nm.rfind("kinv", 0) == 0 || nm.rfind("kk", 0) == 0) f = 1;
        else if (nm.rfind("kek", 0) == 0 || nm.rfind("kfk", 0) == 0) f = 2;
        else if (nm.rfind("ef", 0) == 0) f = (i == R - 1 && j == R - 1) ? 6 : 3;
        else if (nm.rfind("ee", 0) == 0 || nm.rfind("ff", 0) == 0) f = 3;
        else if (nm.rfind("serre_e", 0) == 0) f = 4;
        else if (nm.rfind("serre_f", 0) == 0) f = 5;
        fam[f] = std::max(fam[f], item.residual);
    }
    const char* names[7] = {"",
                            "(21) k_{n+1} inverses and commuting",
                            "(22) k scaling of e_n, f_n",
                            "(23) distant commutation with e_n, f_n",
                            "(24) q-Serre e_{n-1}, e_n",
                            "(25) q-Serre f_{n-1}, f_n",
                            "(26) [e_n, f_n]"};
    for (int f = 1; f <= 6; ++f) {
        if (rep.n() == 1 && (f == 4 || f == 5)) continue;  // no index n-1 partner
        out.items.push_back({names[f], fam[f]});
    }
    return out;
}

namespace {

Scalar a_squared(const PhiArgs& a, int j, long long mid_shift, const QValue& q) {
    const int n = static_cast<int>(a.mid.size());
    const QExponent mj = a.mid[j - 1] + mid_shift;
    Scalar num = Scalar::rational(1);
    for (int i = 1; i <= n + 1; ++i) {
        if (i == 1 && a.omit_top_first) continue;
        if (i == n + 1 && a.omit_top_last) continue;
        num *= q_number(a.top[i - 1] - mj, q);
    }
    for (int i = 1; i <= n - 1; ++i) num *= q_number(a.bot[i - 1] - mj - 1, q);
    Scalar den = Scalar::rational(1);
    for (int i = 1; i <= n; ++i) {
        if (i == j) continue;
        den *= q_number(a.mid[i - 1] - mj, q) * q_number(a.mid[i - 1] - mj - 1, q);
    }
    return -(num / den);
}

} // namespace

Scalar phi(const PhiArgs& args, const QValue& q) {
    const int n = static_cast<int>(args.mid.size());
    if (static_cast<int>(args.top.size()) != n + 1 ||
        static_cast<int>(args.bot.size()) != n - 1)
        throw std::invalid_argument("phi: arrays must have sizes n+1, n, n-1");

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const QExponent d = args.mid[i - 1] - args.mid[j - 1];
            for (long long off : {-1LL, 0LL, 1LL}) {
                const QExponent dd = d + off;
                if (zero_order(dd) > 0 ||
                    (!dd.exact_integer() && std::abs(dd.value()) < 1e-12))
                    throw std::domain_error(
                        "phi: vanishing denominator (mid values repeated or at unit gap)");
            }
        }

    Scalar sum = Scalar::rational(0);
    for (int j = 1; j <= n; ++j)
        sum += a_squared(args, j, -1, q) - a_squared(args, j, 0, q);
    return sum;
}

} // namespace uqrep
