// Sparse generator matrices on an enumerated GT basis, plus the relation
// report shared by all verifiers.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "uqrep/scalar.hpp"

namespace uqrep {

class SparseOperator {
public:
    using Index = Eigen::Index;
    using Triplet = Eigen::Triplet<Complex>;

    SparseOperator() = default;
    SparseOperator(Index rows, Index cols) : mat_(rows, cols) {}
    explicit SparseOperator(Eigen::SparseMatrix<Complex> m) : mat_(std::move(m)) {
        mat_.prune([](Index, Index, const Complex& v) { return v != Complex(0.0, 0.0); });
        mat_.makeCompressed();
    }

    static SparseOperator identity(Index n) {
        Eigen::SparseMatrix<Complex> m(n, n);
        m.setIdentity();
        return SparseOperator(std::move(m));
    }

    static SparseOperator from_triplets(Index rows, Index cols,
                                        const std::vector<Triplet>& ts) {
        Eigen::SparseMatrix<Complex> m(rows, cols);
        m.setFromTriplets(ts.begin(), ts.end());
        return SparseOperator(std::move(m));
    }

    Index rows() const { return mat_.rows(); }
    Index cols() const { return mat_.cols(); }
    Index nonzeros() const { return mat_.nonZeros(); }
    const Eigen::SparseMatrix<Complex>& matrix() const { return mat_; }

    SparseOperator operator*(const SparseOperator& o) const {
        check(cols() == o.rows());
        return SparseOperator(Eigen::SparseMatrix<Complex>(mat_ * o.mat_));
    }
    SparseOperator operator+(const SparseOperator& o) const {
        check(rows() == o.rows() && cols() == o.cols());
        return SparseOperator(Eigen::SparseMatrix<Complex>(mat_ + o.mat_));
    }
    SparseOperator operator-(const SparseOperator& o) const {
        check(rows() == o.rows() && cols() == o.cols());
        return SparseOperator(Eigen::SparseMatrix<Complex>(mat_ - o.mat_));
    }
    SparseOperator scaled(Complex a) const {
        return SparseOperator(Eigen::SparseMatrix<Complex>(a * mat_));
    }
    SparseOperator adjoint() const {
        return SparseOperator(Eigen::SparseMatrix<Complex>(mat_.adjoint()));
    }

    Complex coeff(Index r, Index c) const { return mat_.coeff(r, c); }

    double max_abs() const {
        double m = 0.0;
        for_each([&](Index, Index, Complex v) { m = std::max(m, std::abs(v)); });
        return m;
    }

    /// Max |entry| over the selected columns (mask.size() == cols()).
    double max_abs_on_columns(const std::vector<char>& mask) const;

    void for_each(const std::function<void(Index, Index, Complex)>& fn) const {
        for (Index k = 0; k < mat_.outerSize(); ++k)
            for (Eigen::SparseMatrix<Complex>::InnerIterator it(mat_, k); it; ++it)
                fn(it.row(), it.col(), it.value());
    }

private:
    static void check(bool ok) {
        if (!ok) throw std::invalid_argument("SparseOperator: dimension mismatch");
    }

    Eigen::SparseMatrix<Complex> mat_;
};

/// Per-relation residuals from a verification run.
struct RelationReport {
    struct Item {
        std::string relation;
        double residual = 0.0;
    };
    std::vector<Item> items;
    double tolerance = 1e-10;

    double max_residual() const {
        double m = 0.0;
        for (const auto& it : items) m = std::max(m, it.residual);
        return m;
    }
    bool pass() const { return max_residual() < tolerance; }
    /// Max residual among items whose name starts with the given prefix.
    double family_residual(const std::string& prefix) const;
};

} // namespace uqrep
