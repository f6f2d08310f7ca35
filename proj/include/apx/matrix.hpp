#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace apx {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }

    double* row(int i) { return v_.data() + static_cast<size_t>(i) * cols_; }
    const double* row(int i) const { return v_.data() + static_cast<size_t>(i) * cols_; }

    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    void fill(double x) { v_.assign(v_.size(), x); }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

/// Pairwise similarities s(i,j); the diagonal holds preference values.
/// No symmetry is assumed anywhere.
struct SimilarityMatrix {
    Matrix values;

    SimilarityMatrix() = default;
    explicit SimilarityMatrix(int n, double fill = 0.0) : values(n, n, fill) {}

    int size() const { return values.rows(); }

    double operator()(int i, int j) const { return values(i, j); }
    double& operator()(int i, int j) { return values(i, j); }

    void set_preference(double p) {
        for (int i = 0; i < size(); ++i) values(i, i) = p;
    }

    /// All s(i,j) with i != j, row-major order.
    std::vector<double> off_diagonal() const {
        const int n = size();
        std::vector<double> out;
        out.reserve(static_cast<size_t>(n) * (n - 1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) out.push_back(values(i, j));
        return out;
    }

    bool all_finite() const {
        for (double x : values.data())
            if (!std::isfinite(x)) return false;
        return true;
    }
};

}  // namespace apx
