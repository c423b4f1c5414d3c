// Finite-dimensional irreducible representations of U_q(u_n) on the GT basis
// and the machine check of the defining relations.

#pragma once

#include <map>

#include "uqrep/sparse.hpp"
#include "uqrep/tableau.hpp"

namespace uqrep {

/// Generator matrices k_1..k_R (with inverses) and e_1..e_{R-1}, f_1..f_{R-1}
/// on a common basis.
struct GeneratorSet {
    int rank = 0;
    std::vector<SparseOperator> k, kinv, e, f;

    Eigen::Index dim() const { return k.empty() ? 0 : k.front().rows(); }
};

/// Matrix element A^j_r(M) of Jimbo's formulas; the caller guarantees that
/// raising m_{jr} keeps betweenness (there the radicand is non-negative).
double gt_coefficient(const GTTableau& M, int r, int j, const QValue& q);

/// Representation T_m of U_q(u_n) by the GT-basis formulas: k_r diagonal with
/// exponent a_r, e_r/f_r with coefficients A^j_r over legal shifts.
GeneratorSet build_compact_rep(const Weight& hw, const QValue& q);

/// Residuals of the defining relations for an arbitrary generator set.
/// With `interior` the residuals are measured on interior columns only; with
/// `top_only` the list is restricted to relations involving k_R, e_{R-1} or
/// f_{R-1} (the principal-series check).
RelationReport verify_generator_relations(const GeneratorSet& g, const QValue& q,
                                          double tol,
                                          const std::vector<char>* interior = nullptr,
                                          bool top_only = false);

/// Relations (k-inverses, k-e-k scaling, [e,f], distant commutation, q-Serre)
/// for a compact representation, full-column residuals.
RelationReport verify_compact_relations(const GeneratorSet& g, const QValue& q,
                                        double tol = 1e-10);

/// Partition of the GT basis of hw by the second tableau row: the
/// restriction to U_q(u_{n-1}) acts block-diagonally on these index sets.
std::map<Weight, std::vector<Eigen::Index>> restriction_decomposition(const Weight& hw);

} // namespace uqrep
