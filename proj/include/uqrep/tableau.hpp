// Gel'fand-Tsetlin tableaux, highest weights, branching and the windowed
// principal-series weight lattice.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "uqrep/scalar.hpp"

namespace uqrep {

using Weight = std::vector<long long>;

/// Throws std::invalid_argument unless w is non-increasing.
void validate_weight(const Weight& w);

/// Finite truncation of the principal-series weight lattice: the top
/// coordinate may exceed m_1 by at most upper_slack, the bottom one may
/// drop below m_{n-1} by at most lower_slack.  Relation checks are confined
/// to vectors at distance >= interior_margin from the cut.
struct Window {
    long long upper_slack = 6;
    long long lower_slack = 6;
    long long interior_margin = 3;

    void validate() const;
};

/// Triangular pattern (rows 1..n, row j has j entries, row n = highest
/// weight) with the betweenness conditions m_{i,j+1} >= m_{ij} >= m_{i+1,j+1}.
class GTTableau {
public:
    GTTableau() = default;
    explicit GTTableau(std::vector<std::vector<long long>> rows);

    int size() const { return static_cast<int>(rows_.size()); }
    /// m_{i,j}, 1-based.
    long long at(int i, int j) const { return rows_[j - 1][i - 1]; }
    long long& at(int i, int j) { return rows_[j - 1][i - 1]; }
    const std::vector<long long>& row(int j) const { return rows_[j - 1]; }
    const std::vector<long long>& top() const { return rows_.back(); }

    bool betweenness_ok() const;

    /// Rows read top-to-bottom, left-to-right; defines the basis order.
    std::vector<long long> flat_key() const;

    bool operator==(const GTTableau& o) const { return rows_ == o.rows_; }

private:
    std::vector<std::vector<long long>> rows_;
};

/// All tableaux with the given top row, ordered by flat_key.  The list
/// position is the basis index.
std::vector<GTTableau> enumerate_tableaux(const Weight& hw);

/// m_{pos,row} -> m_{pos,row} +- 1 when betweenness survives, nullopt
/// otherwise.  Out-of-range (row, pos) throws std::out_of_range.
std::optional<GTTableau> apply_shift(const GTTableau& M, int row, int pos, int sign);

/// The (n-1)-row weights interleaving hw (restriction multiplicity one).
std::vector<Weight> branching(const Weight& hw);

/// All length-n weights m_n with m_{1n} >= m_1 >= m_{2n} >= ... >= m_{nn}
/// inside the window.  For n = 1 the lattice is anchored at `anchor`.
std::vector<Weight> principal_weights(const Weight& m, const Window& win,
                                      long long anchor = 0);

/// Shifted row coordinates l_{ik} = m_{ik} - i.
std::vector<long long> l_row(const std::vector<long long>& row);

/// Shifted parameter coordinates l_j = m_j - j - 1.
std::vector<long long> l_params(const Weight& m);

/// Brute-force betweenness validation of a candidate principal weight
/// against m (the window bound is checked separately).
bool principal_weight_ok(const Weight& m, const Weight& mn);

} // namespace uqrep
