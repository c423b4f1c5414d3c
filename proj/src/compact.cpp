#include "uqrep/compact.hpp"

#include <cmath>
#include <stdexcept>

namespace uqrep {

double gt_coefficient(const GTTableau& M, int r, int j, const QValue& q) {
    const int n = M.size();
    if (r < 1 || r >= n || j < 1 || j > r)
        throw std::out_of_range("gt_coefficient: (r, j) out of range");

    const auto lr = l_row(M.row(r));
    const auto lup = l_row(M.row(r + 1));
    const long long ljr = lr[j - 1];

    double num = 1.0;
    for (int i = 1; i <= r + 1; ++i) num *= q_bracket(lup[i - 1] - ljr, q);
    if (r >= 2) {
        const auto ldn = l_row(M.row(r - 1));
        for (int i = 1; i <= r - 1; ++i) num *= q_bracket(ldn[i - 1] - ljr - 1, q);
    }
    double den = 1.0;
    for (int i = 1; i <= r; ++i) {
        if (i == j) continue;
        den *= q_bracket(lr[i - 1] - ljr, q) * q_bracket(lr[i - 1] - ljr - 1, q);
    }

    const double radicand = -num / den;
    // The product is non-negative whenever the raised tableau keeps
    // betweenness; anything clearly negative indicates an index bug.
    if (radicand < -1e-9 * std::max(1.0, std::abs(num / den)))
        throw std::logic_error("gt_coefficient: negative radicand on a legal shift");
    return std::sqrt(std::max(0.0, radicand));
}

GeneratorSet build_compact_rep(const Weight& hw, const QValue& q) {
    validate_weight(hw);
    const int n = static_cast<int>(hw.size());
    if (n == 0) throw std::invalid_argument("empty highest weight");

    const auto basis = enumerate_tableaux(hw);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    std::map<std::vector<long long>, Eigen::Index> index;
    for (Eigen::Index i = 0; i < dim; ++i) index[basis[i].flat_key()] = i;

    GeneratorSet g;
    g.rank = n;
    for (int r = 1; r <= n; ++r) {
        std::vector<SparseOperator::Triplet> kd, kid;
        kd.reserve(basis.size());
        for (Eigen::Index c = 0; c < dim; ++c) {
            const GTTableau& M = basis[c];
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
    for (int r = 1; r <= n - 1; ++r) {
        std::vector<SparseOperator::Triplet> te, tf;
        for (Eigen::Index c = 0; c < dim; ++c) {
            const GTTableau& M = basis[c];
            for (int j = 1; j <= r; ++j) {
                if (auto up = apply_shift(M, r, j, +1)) {
                    const double a = gt_coefficient(M, r, j, q);
                    if (a != 0.0) te.emplace_back(index.at(up->flat_key()), c, Complex(a, 0.0));
                }
                if (auto dn = apply_shift(M, r, j, -1)) {
                    const double a = gt_coefficient(*dn, r, j, q);
                    if (a != 0.0) tf.emplace_back(index.at(dn->flat_key()), c, Complex(a, 0.0));
                }
            }
        }
        g.e.push_back(SparseOperator::from_triplets(dim, dim, te));
        g.f.push_back(SparseOperator::from_triplets(dim, dim, tf));
    }
    return g;
}

namespace {

double residual(const SparseOperator& lhs, const std::vector<char>* interior) {
    return interior ? lhs.max_abs_on_columns(*interior) : lhs.max_abs();
}

std::string tag(const char* name, int i, int j = -1) {
    std::string s(name);
    s += "[" + std::to_string(i);
    if (j >= 0) s += "," + std::to_string(j);
    s += "]";
    return s;
}

} // namespace

RelationReport verify_generator_relations(const GeneratorSet& g, const QValue& q,
                                          double tol,
                                          const std::vector<char>* interior,
                                          bool top_only) {
    const int R = g.rank;
    if (static_cast<int>(g.k.size()) != R || static_cast<int>(g.kinv.size()) != R ||
        static_cast<int>(g.e.size()) != R - 1 || static_cast<int>(g.f.size()) != R - 1)
        throw std::invalid_argument("malformed generator set");
    for (const auto& op : g.k)
        if (op.rows() != g.dim() || op.cols() != g.dim())
            throw std::invalid_argument("generator dimension mismatch");

    RelationReport rep;
    rep.tolerance = tol;
    const double qr = q.real();
    const Complex qm2(qr - 1.0 / qr, 0.0);
    const auto I = SparseOperator::identity(g.dim());
    auto add = [&](const std::string& name, const SparseOperator& lhs) {
        rep.items.push_back({name, residual(lhs, interior)});
    };

    for (int i = 1; i <= R; ++i) {
        if (top_only && i != R) continue;
        add(tag("kinv", i), g.k[i - 1] * g.kinv[i - 1] - I);
        add(tag("kinv'", i), g.kinv[i - 1] * g.k[i - 1] - I);
    }
    for (int i = 1; i <= R; ++i)
        for (int j = i + 1; j <= R; ++j) {
            if (top_only && j != R) continue;
            add(tag("kk", i, j), g.k[i - 1] * g.k[j - 1] - g.k[j - 1] * g.k[i - 1]);
        }

    for (int i = 1; i <= R; ++i)
        for (int j = 1; j <= R - 1; ++j) {
            if (top_only && !(i == R || j == R - 1)) continue;
            const double se = (i == j ? 1.0 : 0.0) - (i == j + 1 ? 1.0 : 0.0);
            const Complex pe(std::pow(qr, se), 0.0);
            add(tag("kek", i, j),
                g.k[i - 1] * g.e[j - 1] * g.kinv[i - 1] - g.e[j - 1].scaled(pe));
            const Complex pf(std::pow(qr, -se), 0.0);
            add(tag("kfk", i, j),
                g.k[i - 1] * g.f[j - 1] * g.kinv[i - 1] - g.f[j - 1].scaled(pf));
        }

    for (int i = 1; i <= R - 1; ++i)
        for (int j = 1; j <= R - 1; ++j) {
            if (top_only && !(i == R - 1 || j == R - 1)) continue;
            SparseOperator lhs = g.e[i - 1] * g.f[j - 1] - g.f[j - 1] * g.e[i - 1];
            if (i == j)
                lhs = lhs - (g.k[i - 1] * g.kinv[i] - g.kinv[i - 1] * g.k[i]).scaled(1.0 / qm2);
            add(tag("ef", i, j), lhs);
        }

    for (int i = 1; i <= R - 1; ++i)
        for (int j = 1; j <= R - 1; ++j) {
            if (std::abs(i - j) <= 1) continue;
            if (top_only && !(i == R - 1 || j == R - 1)) continue;
            add(tag("ee", i, j), g.e[i - 1] * g.e[j - 1] - g.e[j - 1] * g.e[i - 1]);
            add(tag("ff", i, j), g.f[i - 1] * g.f[j - 1] - g.f[j - 1] * g.f[i - 1]);
        }

    const Complex q2(qr + 1.0 / qr, 0.0);
    for (int i = 1; i <= R - 1; ++i)
        for (int j = 1; j <= R - 1; ++j) {
            if (std::abs(i - j) != 1) continue;
            if (top_only && !(i == R - 1 || j == R - 1)) continue;
            const auto &ei = g.e[i - 1], &ej = g.e[j - 1];
            add(tag("serre_e", i, j), ei * ei * ej - (ei * ej * ei).scaled(q2) + ej * ei * ei);
            const auto &fi = g.f[i - 1], &fj = g.f[j - 1];
            add(tag("serre_f", i, j), fi * fi * fj - (fi * fj * fi).scaled(q2) + fj * fi * fi);
        }

    return rep;
}

RelationReport verify_compact_relations(const GeneratorSet& g, const QValue& q, double tol) {
    const RelationReport detail = verify_generator_relations(g, q, tol);
    RelationReport rep;
    rep.tolerance = tol;
    rep.items = {
        {"(1) k inverses and commuting",
         std::max(detail.family_residual("kinv"), detail.family_residual("kk"))},
        {"(2) k e k^-1 scaling",
         std::max(detail.family_residual("kek"), detail.family_residual("kfk"))},
        {"(3) [e_i, f_j]", detail.family_residual("ef")},
        {"(4) distant commutation",
         std::max(detail.family_residual("ee"), detail.family_residual("ff"))},
        {"(5) q-Serre e", detail.family_residual("serre_e")},
        {"(6) q-Serre f", detail.family_residual("serre_f")},
    };
    return rep;
}

std::map<Weight, std::vector<Eigen::Index>> restriction_decomposition(const Weight& hw) {
    const auto basis = enumerate_tableaux(hw);
    std::map<Weight, std::vector<Eigen::Index>> blocks;
    const int n = static_cast<int>(hw.size());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(basis.size()); ++i) {
        Weight second = n >= 2 ? basis[i].row(n - 1) : Weight{};
        blocks[second].push_back(i);
    }
    return blocks;
}

} // namespace uqrep
