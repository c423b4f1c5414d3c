// Reducibility classification of principal-series parameters, the invariant
// subspace lattices with their constituent labels, and the equivalence
// normal form.

#pragma once

#include <set>

#include "uqrep/principal.hpp"

namespace uqrep {

/// Shifted coordinates (l_1,...,l_{n-1}, c_1, c_2); the equivalence
/// relations act on it by transpositions of positions 1..n+1.
struct LVector {
    std::vector<long long> l;
    Complex c1{0.0, 0.0}, c2{0.0, 0.0};

    int n() const { return static_cast<int>(l.size()) + 1; }
    Weight m() const;                      // m_j = l_j + j + 1
    PrincipalParams params(double tol = 1e-9) const;
    /// s_{ik}: swap positions i and k (1-based over l..., c1, c2).  The
    /// resulting l-part must stay strictly decreasing integers.
    LVector permuted(int i, int k) const;
    long long c1_int() const;
    long long c2_int() const;
    std::string str() const;

    bool operator==(const LVector& o) const;
};

LVector lvector_of(const PrincipalParams& p);

enum class ParamCase {
    IrreducibleGeneric,
    IrreducibleSpecial,
    Case1,
    Case2,
    Case3,
    Case4,
    SwappedCase1,
    SwappedCase2,
    SwappedCase3,
};

const char* to_string(ParamCase c);

struct Classification {
    ParamCase kind = ParamCase::IrreducibleGeneric;
    int r = 0, s = 0;          // interval data of the (unswapped) case
    bool integral = false;
    long long c1i = 0, c2i = 0;
    int shift_k = 0;           // applied i*pi/h twists to reach the strip
    PrincipalParams canonical;
};

/// Placement of c1, c2 relative to l_0 = +inf > l_1 > ... > l_{n-1} > -inf
/// after reducing Im c1 into (-pi/2h, pi/2h].  Swapped cases carry the
/// interval data of the classification of (c2, c1).
Classification classify(const PrincipalParams& p, const QValue& q, double tol = 1e-9);

enum class ConstituentKind {
    Full,
    Rhat,
    Rminus,
    Rplus,
    Rbreve,
    RtildeMinus,
    RtildePlus,
    RplusOne,
    RminusOne,
    FiniteDim,
};

struct ConstituentLabel {
    ConstituentKind kind = ConstituentKind::Full;
    int r = 0, s = 0;
    LVector L;
    Weight finite_hw;   // FiniteDim only

    std::string name() const;
    bool operator==(const ConstituentLabel& o) const;
};

/// Semidirect-sum diagram: layers ordered quotient -> sub, each layer either
/// a single constituent or a braced direct sum.
struct Lattice {
    std::vector<ConstituentLabel> nodes;
    std::vector<std::pair<int, int>> arrows;   // quotient -> sub
    std::vector<std::vector<int>> layers;      // node indices per layer

    std::string shape() const;
};

/// The decomposition diagram of a reducible representation; throws
/// std::invalid_argument on irreducible parameters.
Lattice decompose(const PrincipalParams& p, const QValue& q, double tol = 1e-9);

/// Highest weight of the finite-dimensional constituent identified with
/// Rhat^{1,n}: (c1+1, l_1+2, ..., l_{n-1}+n, c2+n+1).
Weight finite_dim_weight(const LVector& L);

/// Windowed carrier weights of a constituent.
std::vector<Weight> constituent_weights(const ConstituentLabel& lab, const Window& win);

/// Repeated application of the equivalence rewrites toward the R+/Rtilde+
/// families with minimal indices; `chain` collects the visited labels.
ConstituentLabel normal_form(const ConstituentLabel& lab,
                             std::vector<std::string>* chain = nullptr);

struct EquivalenceWitness {
    bool equivalent = false;
    std::vector<std::string> chain;
    bool weight_sets_match = false;
};

/// Normal forms coincide + windowed weight-set cross-check (compared on the
/// common coordinate box of the two windows).
EquivalenceWitness equivalent(const ConstituentLabel& a, const ConstituentLabel& b,
                              const Window& win);

/// Support scan: no column of e_n/f_n from a weight in S reaches a row
/// outside S (within the window).
bool weight_set_invariant(const WindowedRep& rep, const std::set<Weight>& S);

/// Connectivity of S under nonzero e_n/f_n matrix entries between S-blocks
/// (the reachability criterion for irreducibility of a constituent).
bool weight_set_connected(const WindowedRep& rep, const std::set<Weight>& S);

} // namespace uqrep
