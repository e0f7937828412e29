#pragma once

#include <complex>
#include <Eigen/Dense>

namespace darkcomb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Largest absolute entry of a matrix (0 for empty).
inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Relative Hermiticity defect, ||H - H^dag||_max / max(1, ||H||_max).
inline double hermiticity_defect(const Matrix& h) {
    return (h - h.adjoint()).cwiseAbs().maxCoeff() / std::max(1.0, max_abs(h));
}

} // namespace darkcomb
