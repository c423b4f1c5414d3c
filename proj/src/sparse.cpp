#include "uqrep/sparse.hpp"

namespace uqrep {

double SparseOperator::max_abs_on_columns(const std::vector<char>& mask) const {
    if (static_cast<Index>(mask.size()) != cols())
        throw std::invalid_argument("column mask size mismatch");
    double m = 0.0;
    for_each([&](Index, Index c, Complex v) {
        if (mask[static_cast<size_t>(c)]) m = std::max(m, std::abs(v));
    });
    return m;
}

double RelationReport::family_residual(const std::string& prefix) const {
    double m = 0.0;
    for (const auto& it : items)
        if (it.relation.rfind(prefix, 0) == 0) m = std::max(m, it.residual);
    return m;
}

} // namespace uqrep
