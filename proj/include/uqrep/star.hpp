// Hermitian-adjointness pairing, the unitarizability classes, explicit
// positivity of the invariant form, and the sign-twisted representations.

#pragma once

#include "uqrep/intertwine.hpp"
#include "uqrep/structure.hpp"

namespace uqrep {

/// No intertwiner toward the Hermitian-adjoint parameters exists.
class NoIntertwinerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class UnitaryClass {
    PrincipalStar,   // (a) c1 = conj(c2)
    Strange,         // (b) Im c1 = -Im c2 = pi/2h
    Supplementary,   // (c) real c's near a dense l-chain
    D,               // (d) R-^{ij}
    E,               // (e) R+^{ij}
    F,               // (f) Rtilde+^{ij}
    G,               // (g) Rtilde-^{ij}
    H,               // (h) R+-^{i}(m, c, c)
    NotStar,
};

const char* to_string(UnitaryClass c);

struct UnitaryReport {
    UnitaryClass cls = UnitaryClass::NotStar;
    std::string witness;
};

/// (m, conj(c2), conj(c1)); an involution.
PrincipalParams hermitian_adjoint(const PrincipalParams& p);

/// Theorem-3 membership for a full principal-series representation.
UnitaryReport unitary_class(const PrincipalParams& p, const QValue& q, double tol = 1e-9);

/// Theorem-3 membership for a constituent; hat/breve labels are first
/// rewritten once into their R-family form.
UnitaryReport unitary_class(const ConstituentLabel& lab, const QValue& q);

enum class FormSign { Positive, Negative, Indefinite };

struct PositivityReport {
    FormSign sign = FormSign::Indefinite;
    std::vector<std::pair<Weight, double>> values;  // Q diagonal per weight
    std::string note;
};

/// Sign pattern of the diagonal of the intertwiner Q toward the
/// Hermitian-adjoint parameters over the window; class (a) short-circuits
/// to Q = identity.  Throws NoIntertwinerError when no Q exists.
PositivityReport verify_form_positivity(const PrincipalParams& p, const Window& win,
                                        const QValue& q, double tol = 1e-9);

/// Same restricted to a constituent carrier, with Q the leading-coefficient
/// (residue-type) equivalence operator at the integer point.
PositivityReport verify_form_positivity(const ConstituentLabel& lab, const Window& win,
                                        const QValue& q, double tol = 1e-9);

/// Sign twist T'(k_j) = -T(k_j) for all j (e, f unchanged).
GeneratorSet twist_k_signs(const GeneratorSet& g);

/// Finite-dimensional twist: negate T(k_{n+1}) and T(f_n) only.
GeneratorSet twist_finite_dim(const GeneratorSet& g);

/// Residuals of the *-conditions: k_i^dagger = k_i, e_i^dagger = f_i except
/// e_p^dagger = -f_p at the noncompact index p (p = 0 checks the compact
/// form).
RelationReport verify_star_conditions(const GeneratorSet& g, int noncompact_index,
                                      double tol = 1e-12);

/// Matrix test of Hermitian adjointness: max over generators a of
/// |T(a^*)^dagger - T'(a)| on interior columns.
double hermitian_adjoint_residual(const WindowedRep& T, const WindowedRep& Tadj);

} // namespace uqrep
