#pragma once

#include <stdexcept>
#include <vector>

#include "torus/link.hpp"
#include "torus/theta.hpp"

namespace torus {

/// The oracle refuses to answer rather than risk a wrong sign: thrown when
/// an eigenvalue of the Hermitian form is too close to zero to classify.
class EvaluationRejected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integer Seifert matrix of the fiber surface of the closed positive
/// braid (s_1 ... s_{p-1})^q, in the brick-grid basis, ordered row-major
/// over the (q-1) x (p-1) grid. Desk-scale oracle: 2 <= p <= q <= 8.
struct SeifertMatrix {
    long long size = 0;
    std::vector<std::vector<long long>> entries;
};

SeifertMatrix seifert_matrix_torus(long long p, long long q);

/// Signature of (1-omega) M + (1-conj(omega)) M^T at omega = exp(2 pi i
/// theta). Eigenvalue signs are accepted only when |lambda| clears a
/// tolerance scaled to the matrix norm; anything closer raises
/// EvaluationRejected instead of returning a guess.
long long oracle_signature(const SeifertMatrix& matrix, const Theta& theta);

}  // namespace torus
