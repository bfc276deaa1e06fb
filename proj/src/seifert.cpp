#include "torus/seifert.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace torus {

namespace {

// One-variable factor of the brick-grid Seifert form: (n-1) x (n-1)
// bidiagonal, 1 on the diagonal, -1 above it.
long long bidiag(long long i, long long j) {
    if (i == j) return 1;
    if (j == i + 1) return -1;
    return 0;
}

}  // namespace

SeifertMatrix seifert_matrix_torus(long long p, long long q) {
    if (p < 2 || q < p || q > 8)
        throw std::domain_error("Seifert oracle covers 2 <= p <= q <= 8 only");
    const long long rows = q - 1, cols = p - 1;
    SeifertMatrix m;
    m.size = rows * cols;
    m.entries.assign(m.size, std::vector<long long>(m.size, 0));
    // Brick (r,c): the cycle through crossings r, r+1 of column c. The
    // Seifert form factors over the two grid directions; the overall sign
    // is calibrated so that sigma(T(2,3)) = -2.
    for (long long r1 = 0; r1 < rows; ++r1)
        for (long long c1 = 0; c1 < cols; ++c1)
            for (long long r2 = 0; r2 < rows; ++r2)
                for (long long c2 = 0; c2 < cols; ++c2)
                    m.entries[r1 * cols + c1][r2 * cols + c2] =
                        -bidiag(r1, r2) * bidiag(c1, c2);
    return m;
}

long long oracle_signature(const SeifertMatrix& matrix, const Theta& theta) {
    const long long n = matrix.size;
    if (n == 0) return 0;
    const double angle = 2.0 * M_PI * to_double(theta.value());
    const std::complex<double> omega(std::cos(angle), std::sin(angle));
    const std::complex<double> w = 1.0 - omega;

    Eigen::MatrixXcd h(n, n);
    double max_entry = 0.0;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            h(i, j) = w * static_cast<double>(matrix.entries[i][j]) +
                      std::conj(w) * static_cast<double>(matrix.entries[j][i]);
            max_entry = std::max(max_entry, std::abs(h(i, j)));
        }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                           Eigen::EigenvaluesOnly);
    const double tol = std::ldexp(max_entry * static_cast<double>(n), -30);
    long long sig = 0;
    for (long long i = 0; i < n; ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (std::abs(lambda) < tol)
            throw EvaluationRejected(
                "eigenvalue too close to zero at theta = " + theta.str());
        sig += lambda > 0 ? 1 : -1;
    }
    return sig;
}

}  // namespace torus
