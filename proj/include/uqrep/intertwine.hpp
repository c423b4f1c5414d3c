// Diagonal intertwining operators between principal-series representations,
// their closed product form, and the pole/zero analysis at integer points.

#pragma once

#include <set>

#include "uqrep/principal.hpp"

namespace uqrep {

/// An edge factor of the recursion vanishes inside the window; the analytic
/// order machinery must be used instead.
class VanishingFactorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The recursion is path-dependent beyond tolerance: the two parameter sets
/// do not admit an intertwiner.
class LoopInconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operator diagonal on the weight blocks: one value b per windowed weight
/// (constant across alpha inside a block).
struct DiagonalIntertwiner {
    PrincipalParams from, to;
    std::vector<Weight> weights;   // sorted
    std::vector<Complex> values;
    Weight normalization;

    Complex value_at(const Weight& w) const;
    DiagonalIntertwiner restricted_to(const std::set<Weight>& support) const;
};

/// b propagated along the weight graph from the recursion the implemented
/// e_n/f_n coefficients impose, pinned to 1 at the minimal window weight;
/// target (m, c2, c1).
DiagonalIntertwiner intertwiner_recursive(const PrincipalParams& p, const Window& win,
                                          const QValue& q);

/// Same with an explicit target parameter set (must share m and m0).
DiagonalIntertwiner intertwiner_recursive_to(const PrincipalParams& p,
                                             const PrincipalParams& target,
                                             const Window& win, const QValue& q);

/// The double-product a_{m_n}(m, c1, c2) for a chosen split index k in 1..n-1.
Complex intertwiner_product(const Weight& mn, const Weight& m, Complex c1, Complex c2,
                            int k, const QValue& q);

/// Intertwiner toward (m, c2, c1) built from the product form
/// b = a(c1,c2)/a(c2,c1); k = 0 selects the default split n-1.
DiagonalIntertwiner intertwiner_from_products(const PrincipalParams& p, const Window& win,
                                              const QValue& q, int k = 0);

/// Laurent data of b_{m_n}(c1) at an integer point c0 (c2 = m0 - c1 held):
/// order > 0 is a zero, < 0 a pole; leading is the coefficient of
/// (c1 - c0)^order.
struct AnalyticOrder {
    int order = 0;
    Complex leading{0.0, 0.0};
};

std::map<Weight, AnalyticOrder> analytic_order(const Weight& m, long long m0, long long c0,
                                               const Window& win, const QValue& q);

/// Residue-type operator at a pole of the stated order: entries are the
/// leading coefficients where the per-weight order is minimal, zero above.
DiagonalIntertwiner residue_intertwiner(const Weight& m, long long m0, long long c0,
                                        int pole_order, const Window& win, const QValue& q);

/// max over generators g of |A T(g) - T'(g) A| on interior columns.
double intertwining_residual(const DiagonalIntertwiner& A, const WindowedRep& T,
                             const WindowedRep& Tp);

} // namespace uqrep
