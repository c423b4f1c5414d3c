#include "uqrep/star.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace uqrep {

const char* to_string(UnitaryClass c) {
    switch (c) {
        case UnitaryClass::PrincipalStar: return "PrincipalStar";
        case UnitaryClass::Strange: return "Strange";
        case UnitaryClass::Supplementary: return "Supplementary";
        case UnitaryClass::D: return "D";
        case UnitaryClass::E: return "E";
        case UnitaryClass::F: return "F";
        case UnitaryClass::G: return "G";
        case UnitaryClass::H: return "H";
        case UnitaryClass::NotStar: return "NotStar";
    }
    return "?";
}

PrincipalParams hermitian_adjoint(const PrincipalParams& p) {
    PrincipalParams out = p;
    out.c1 = std::conj(p.c2);
    out.c2 = std::conj(p.c1);
    return out;
}

namespace {

bool dense(const std::vector<long long>& chain) {
    for (size_t i = 1; i < chain.size(); ++i)
        if (chain[i] != chain[i - 1] - 1) return false;
    return true;
}

std::string chain_str(const std::vector<long long>& chain) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < chain.size(); ++i) os << (i ? "," : "") << chain[i];
    os << ")";
    return os.str();
}

// One step of the §7 identifications toward the R-families of Theorem 3.
ConstituentLabel step_into_r_family(const ConstituentLabel& lab) {
    ConstituentLabel cur = lab;
    while (cur.kind == ConstituentKind::Rhat || cur.kind == ConstituentKind::Rbreve) {
        ConstituentLabel next = cur;
        const int n = cur.L.n();
        if (cur.kind == ConstituentKind::Rbreve) {
            next.kind = ConstituentKind::Rminus;
            next.r = cur.r + 1;
            next.s = cur.s;
            next.L = cur.L.permuted(cur.r, n);
        } else if (cur.r == 1 && cur.s == n) {
            next.kind = ConstituentKind::FiniteDim;
            next.finite_hw = finite_dim_weight(cur.L);
        } else if (cur.s < n) {
            next.kind = ConstituentKind::Rminus;
            next.s = cur.s + 1;
            next.L = cur.L.permuted(cur.s, n + 1);
        } else {
            next.kind = ConstituentKind::Rplus;
            next.r = cur.r - 1;
            next.L = cur.L.permuted(cur.r - 1, n);
        }
        cur = next;
    }
    return cur;
}

} // namespace

UnitaryReport unitary_class(const PrincipalParams& p, const QValue& q, double tol) {
    const Classification cls = classify(p, q, tol);
    const Complex c1 = cls.canonical.c1, c2 = cls.canonical.c2;

    if (std::abs(c1 - std::conj(c2)) < tol)
        return {UnitaryClass::PrincipalStar, "c1 = conj(c2)"};

    const double half = M_PI / (2.0 * std::abs(q.log()));
    if (std::abs(std::abs(c1.imag()) - half) < tol * (1.0 + half) &&
        std::abs(c1.imag() + c2.imag()) < tol)
        return {UnitaryClass::Strange, "Im c1 = -Im c2 = pi/2h"};

    if (std::abs(c1.imag()) < tol && std::abs(c2.imag()) < tol) {
        const auto l = l_params(p.m);
        const double x1 = c1.real(), x2 = c2.real();
        const int nl = static_cast<int>(l.size());
        for (int r = 1; r <= nl; ++r)
            for (int s = 1; s <= nl; ++s) {
                if (!(std::abs(static_cast<double>(l[r - 1]) - x1) < 1.0 &&
                      std::abs(static_cast<double>(l[s - 1]) - x2) < 1.0))
                    continue;
                std::vector<long long> chain;
                if (x1 > x2 && r <= s)
                    chain.assign(l.begin() + (r - 1), l.begin() + s);
                else if (x1 < x2 && s <= r)
                    chain.assign(l.begin() + (s - 1), l.begin() + r);
                else
                    continue;
                if (dense(chain))
                    return {UnitaryClass::Supplementary,
                            "r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                                ", dense " + chain_str(chain)};
            }
    }
    return {UnitaryClass::NotStar, "no Theorem-3 condition holds"};
}

UnitaryReport unitary_class(const ConstituentLabel& label, const QValue& q) {
    if (label.kind == ConstituentKind::Full)
        return unitary_class(label.L.params(), q);
    const ConstituentLabel lab = step_into_r_family(label);
    if (lab.kind == ConstituentKind::FiniteDim)
        return {UnitaryClass::NotStar, "finite-dimensional constituent (untwisted)"};

    const auto& l = lab.L.l;
    const long long c1 = lab.L.c1_int(), c2 = lab.L.c2_int();
    const int i = lab.r, j = lab.s;

    auto range = [&](int a, int b) {  // l_a .. l_b inclusive
        return std::vector<long long>(l.begin() + (a - 1), l.begin() + b);
    };

    switch (lab.kind) {
        case ConstituentKind::Rminus: {
            if (c1 <= c2) break;
            if (i == j) return {UnitaryClass::D, "i = j"};
            std::vector<long long> chain{c1};
            auto mid = range(i, j - 1);
            chain.insert(chain.end(), mid.begin(), mid.end());
            if (dense(chain)) return {UnitaryClass::D, "dense " + chain_str(chain)};
            break;
        }
        case ConstituentKind::Rplus: {
            if (c1 <= c2) break;
            if (i == j) return {UnitaryClass::E, "i = j"};
            auto chain = range(i, j - 1);
            chain.push_back(c2);
            if (dense(chain)) return {UnitaryClass::E, "dense " + chain_str(chain)};
            break;
        }
        case ConstituentKind::RtildePlus: {
            if (i < j) {
                auto chain = range(i, j - 1);
                chain.push_back(c2);
                if (dense(chain)) return {UnitaryClass::F, "dense " + chain_str(chain)};
            } else {
                auto chain = range(j, i);
                if (dense(chain)) return {UnitaryClass::F, "dense " + chain_str(chain)};
            }
            break;
        }
        case ConstituentKind::RtildeMinus: {
            if (i < j) {
                auto chain = range(i, j - 1);
                if (dense(chain)) return {UnitaryClass::G, "dense " + chain_str(chain)};
            } else {
                std::vector<long long> chain{c2};
                auto mid = range(j, i);
                chain.insert(chain.end(), mid.begin(), mid.end());
                if (dense(chain)) return {UnitaryClass::G, "dense " + chain_str(chain)};
            }
            break;
        }
        case ConstituentKind::RplusOne:
        case ConstituentKind::RminusOne:
            if (c1 == c2) return {UnitaryClass::H, "c1 = c2"};
            break;
        default:
            break;
    }
    return {UnitaryClass::NotStar, "condition of Theorem 3 fails for " + lab.name()};
}

namespace {

PositivityReport scan_signs(std::vector<std::pair<Weight, Complex>> raw, double tol,
                            std::string note) {
    PositivityReport rep;
    rep.note = std::move(note);

    // Normalize so the first weight carries +1, then demand realness.
    Complex pivot(0.0, 0.0);
    for (const auto& [w, v] : raw)
        if (std::abs(v) > tol) {
            pivot = v;
            break;
        }
    if (pivot == Complex(0.0, 0.0))
        throw NoIntertwinerError("positivity: intertwiner vanishes on the carrier");

    double scale = 0.0;
    for (const auto& [w, v] : raw) scale = std::max(scale, std::abs(v));
    bool pos = false, neg = false;
    for (auto& [w, v] : raw) {
        const Complex t = v / pivot;
        if (std::abs(t.imag()) > 1e-6 * std::max(1.0, std::abs(t)))
            throw std::logic_error("positivity: non-real normalized diagonal");
        rep.values.emplace_back(w, t.real());
        if (t.real() > tol * scale / std::abs(pivot)) pos = true;
        else if (t.real() < -tol * scale / std::abs(pivot)) neg = true;
        else { pos = true; neg = true; }  // a zero on the carrier: degenerate
    }
    rep.sign = (pos && neg) ? FormSign::Indefinite
                            : (neg ? FormSign::Negative : FormSign::Positive);
    return rep;
}

} // namespace

PositivityReport verify_form_positivity(const PrincipalParams& p, const Window& win,
                                        const QValue& q, double tol) {
    const Classification cls = classify(p, q, tol);
    const PrincipalParams& P = cls.canonical;

    if (std::abs(P.c1 - std::conj(P.c2)) < tol) {
        PositivityReport rep;
        rep.sign = FormSign::Positive;
        rep.note = "Q = identity (c1 = conj(c2))";
        for (const Weight& w : principal_weights(P.m, win, 0)) rep.values.emplace_back(w, 1.0);
        return rep;
    }

    if (cls.integral) {
        // Reducible point: the meromorphic family evaluated at the point.
        const auto orders = analytic_order(P.m, P.m0, cls.c1i, win, q);
        int min_ord = 0;
        for (const auto& [w, ao] : orders) min_ord = std::min(min_ord, ao.order);
        if (min_ord < 0)
            throw NoIntertwinerError(
                "positivity: intertwiner family has a pole here; use a constituent label");
        std::vector<std::pair<Weight, Complex>> raw;
        for (const auto& [w, ao] : orders)
            raw.emplace_back(w, ao.order == 0 ? ao.leading : Complex(0.0, 0.0));
        return scan_signs(std::move(raw), tol, "regular value at an integer point");
    }

    DiagonalIntertwiner Q;
    try {
        Q = intertwiner_recursive_to(P, hermitian_adjoint(P), win, q);
    } catch (const LoopInconsistencyError& e) {
        throw NoIntertwinerError(std::string("positivity: ") + e.what());
    }
    std::vector<std::pair<Weight, Complex>> raw;
    for (size_t i = 0; i < Q.weights.size(); ++i) raw.emplace_back(Q.weights[i], Q.values[i]);
    return scan_signs(std::move(raw), tol, "recursive intertwiner toward adjoint parameters");
}

PositivityReport verify_form_positivity(const ConstituentLabel& lab, const Window& win,
                                        const QValue& q, double tol) {
    if (lab.kind == ConstituentKind::Full)
        return verify_form_positivity(lab.L.params(), win, q, tol);

    const auto carrier = constituent_weights(lab, win);
    if (carrier.empty())
        throw std::invalid_argument("positivity: constituent carrier empty in this window");

    const long long c1 = lab.L.c1_int(), c2 = lab.L.c2_int();
    const auto orders = analytic_order(lab.L.m(), c1 + c2, c1, win, q);

    int carrier_ord = 0;
    bool first = true;
    std::vector<std::pair<Weight, Complex>> raw;
    for (const Weight& w : carrier) {
        const auto& ao = orders.at(w);
        if (first) {
            carrier_ord = ao.order;
            first = false;
        } else if (ao.order != carrier_ord) {
            throw std::logic_error("positivity: analytic order not constant on a constituent");
        }
        raw.emplace_back(w, ao.leading);
    }
    return scan_signs(std::move(raw), tol,
                      "leading coefficients at order " + std::to_string(carrier_ord));
}

GeneratorSet twist_k_signs(const GeneratorSet& g) {
    GeneratorSet out = g;
    for (auto& op : out.k) op = op.scaled(Complex(-1.0, 0.0));
    for (auto& op : out.kinv) op = op.scaled(Complex(-1.0, 0.0));
    return out;
}

GeneratorSet twist_finite_dim(const GeneratorSet& g) {
    if (g.rank < 2 || g.f.empty())
        throw std::invalid_argument("finite-dim twist needs a gl_{n+1} generator set");
    GeneratorSet out = g;
    out.k.back() = out.k.back().scaled(Complex(-1.0, 0.0));
    out.kinv.back() = out.kinv.back().scaled(Complex(-1.0, 0.0));
    out.f.back() = out.f.back().scaled(Complex(-1.0, 0.0));
    return out;
}

RelationReport verify_star_conditions(const GeneratorSet& g, int noncompact_index,
                                      double tol) {
    RelationReport rep;
    rep.tolerance = tol;
    for (int i = 1; i <= g.rank; ++i) {
        rep.items.push_back({"k*[" + std::to_string(i) + "]",
                             (g.k[i - 1].adjoint() - g.k[i - 1]).max_abs()});
        rep.items.push_back({"kinv*[" + std::to_string(i) + "]",
                             (g.kinv[i - 1].adjoint() - g.kinv[i - 1]).max_abs()});
    }
    for (int j = 1; j <= g.rank - 1; ++j) {
        const double sign = (j == noncompact_index) ? -1.0 : 1.0;
        rep.items.push_back(
            {"e*[" + std::to_string(j) + "]",
             (g.e[j - 1].adjoint() - g.f[j - 1].scaled(sign)).max_abs()});
        rep.items.push_back(
            {"f*[" + std::to_string(j) + "]",
             (g.f[j - 1].adjoint() - g.e[j - 1].scaled(sign)).max_abs()});
    }
    return rep;
}

double hermitian_adjoint_residual(const WindowedRep& T, const WindowedRep& Tadj) {
    if (T.basis.dim() != Tadj.basis.dim())
        throw std::invalid_argument("hermitian_adjoint_residual: bases differ");
    const int n = T.n();
    double worst = 0.0;
    auto upd = [&](const SparseOperator& lhs, const SparseOperator& rhs) {
        worst = std::max(worst, (lhs - rhs).max_abs_on_columns(Tadj.interior));
    };
    for (int i = 0; i <= n; ++i) {
        upd(T.gens.k[i].adjoint(), Tadj.gens.k[i]);
        upd(T.gens.kinv[i].adjoint(), Tadj.gens.kinv[i]);
    }
    for (int j = 1; j <= n; ++j) {
        const double sign = (j == n) ? -1.0 : 1.0;
        upd(T.gens.f[j - 1].adjoint().scaled(sign), Tadj.gens.e[j - 1]);
        upd(T.gens.e[j - 1].adjoint().scaled(sign), Tadj.gens.f[j - 1]);
    }
    return worst;
}

} // namespace uqrep
