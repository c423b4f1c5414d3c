// Windowed principal-series representations T_{m,c1,c2} of U_q(u_{n,1}) and
// the identity machinery behind their relation proof.

#pragma once

#include <optional>

#include "uqrep/compact.hpp"

namespace uqrep {

/// Data (m, c1, c2) with c1 + c2 equal to an integer m0.
struct PrincipalParams {
    Weight m;      // length n-1
    Complex c1{0.0, 0.0}, c2{0.0, 0.0};
    long long m0 = 0;

    int n() const { return static_cast<int>(m.size()) + 1; }
};

/// Validates monotonicity of m and integrality of c1 + c2.
PrincipalParams make_params(Weight m, Complex c1, Complex c2, double tol = 1e-9);

/// Basis of the windowed space: full GT tableaux whose top row runs over the
/// windowed principal weights, grouped in blocks per weight.
struct PrincipalBasis {
    std::vector<Weight> weights;
    std::vector<Eigen::Index> block_offset;   // per weight; sentinel dim at end
    std::vector<GTTableau> tableaux;          // ordered by (weight, tableau key)
    std::vector<int> weight_of;               // basis index -> weight index
    std::map<std::vector<long long>, Eigen::Index> lookup;

    Eigen::Index dim() const { return static_cast<Eigen::Index>(tableaux.size()); }
    int weight_index(const Weight& w) const;  // -1 when outside the window
};

struct WindowedRep {
    PrincipalParams params;
    Window window;
    double q_value = 0.0;
    PrincipalBasis basis;
    GeneratorSet gens;            // rank n+1
    std::vector<char> interior;   // per basis vector

    int n() const { return params.n(); }
};

/// omega_s(m, m_n, alpha) of the e_n/f_n formulas; row_nm1 is the top row of
/// alpha (row n-1 of the tableau, empty for n = 1).  Returns 0 when m_n^{+s}
/// leaves the interleaving constraints; the alpha-dependent factor vanishes
/// exactly when the shifted tableau would break betweenness.
double omega(const Weight& m, const Weight& mn, const std::vector<long long>& row_nm1,
             int s, const QValue& q);

WindowedRep build_principal(const PrincipalParams& p, const Window& win, const QValue& q);

/// Relations of the extended algebra on interior columns, reported per
/// family (21)-(26).
RelationReport verify_principal_relations(const WindowedRep& rep, const QValue& q,
                                          double tol = 1e-10);

/// Arguments of the diagonal commutator function Phi: the three coordinate
/// arrays (sizes n+1, n, n-1) with optional omission of the first/last
/// top-row multiplier (the dotted variants of the shift identity).
struct PhiArgs {
    std::vector<QExponent> top;
    std::vector<QExponent> mid;
    std::vector<QExponent> bot;
    bool omit_top_first = false;
    bool omit_top_last = false;
};

/// Phi = sum_j ((A^j(M^{-j}))^2 - (A^j(M))^2) built from the squared GT
/// coefficients; exact-rational for integer data and rational q.  Throws
/// std::domain_error when a denominator factor vanishes (repeated or
/// unit-gap mid values).
Scalar phi(const PhiArgs& args, const QValue& q);

} // namespace uqrep
