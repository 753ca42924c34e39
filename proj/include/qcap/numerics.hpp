// Dense complex linear algebra and scalar entropy utilities.
//
// Conventions used across the library:
//   * bipartite systems use the lexicographic basis |i>|j> -> index i*d2 + j,
//     i.e. the first tensor factor is the slow index;
//   * all logarithms are base 2, so entropies and capacities are in bits.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qcap/errors.hpp"

namespace qcap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Point on the probability simplex. Weights >= 0 (entries above -1e-12 are
// clamped to zero) and summing to 1 within 1e-10.
class ProbVector {
  public:
    explicit ProbVector(std::vector<double> weights);

    static ProbVector uniform(int n);
    static ProbVector point_mass(int n, int index);

    int size() const { return static_cast<int>(weights_.size()); }
    double operator[](int i) const { return weights_[static_cast<size_t>(i)]; }
    const std::vector<double>& weights() const { return weights_; }

  private:
    std::vector<double> weights_;
};

// Eigendecomposition of a Hermitian matrix: ascending eigenvalues, matching
// eigenvector columns.
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

// Tolerances shared by the validation layers.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdEigTol = 1e-10;
inline constexpr double kEntropyEigFloor = 1e-12;

Spectrum hermitian_eig(const ComplexMatrix& a);

// Partial trace of a (d1*d2)x(d1*d2) matrix; keep = 0 keeps the first factor,
// keep = 1 the second.
ComplexMatrix partial_trace(const ComplexMatrix& a, int d1, int d2, int keep);

// Transpose of one tensor factor; involutive.
ComplexMatrix partial_transpose(const ComplexMatrix& a, int d1, int d2, int which);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Principal square root of a PSD matrix. Eigenvalues in [-1e-8, 0) are
// clamped to zero, anything more negative throws NotPsdError.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a);

// Sum of singular values.
double trace_norm(const ComplexMatrix& a);

// H(p) = -sum p_i log2 p_i, with 0 log 0 = 0.
double shannon_entropy(const ProbVector& p);
double shannon_entropy(const std::vector<double>& p);

// h(x) = -x log2 x - (1-x) log2(1-x) on [0,1].
double binary_entropy(double x);

inline double log2_safe(double x) { return x > 0.0 ? std::log2(x) : 0.0; }

} // namespace qcap
