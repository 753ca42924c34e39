#include "qcap/numerics.hpp"

#include <cmath>
#include <limits>

namespace qcap {

ProbVector::ProbVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty())
        throw InvalidDistributionError("ProbVector: empty weight list");
    double sum = 0.0;
    for (double& w : weights_) {
        if (w < -1e-12)
            throw InvalidDistributionError("ProbVector: negative weight " + std::to_string(w));
        if (w < 0.0)
            w = 0.0;
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw InvalidDistributionError("ProbVector: weights sum to " + std::to_string(sum) +
                                       ", expected 1 within 1e-10");
}

ProbVector ProbVector::uniform(int n) {
    return ProbVector(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

ProbVector ProbVector::point_mass(int n, int index) {
    std::vector<double> w(static_cast<size_t>(n), 0.0);
    w.at(static_cast<size_t>(index)) = 1.0;
    return ProbVector(std::move(w));
}

Spectrum hermitian_eig(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw NotSquareError("hermitian_eig: matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol)
        throw NotHermitianError("hermitian_eig: ||A - A^dag||_max = " + std::to_string(asym));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eig: eigensolver failed to converge");
    return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix partial_trace(const ComplexMatrix& a, int d1, int d2, int keep) {
    const int n = d1 * d2;
    if (a.rows() != n || a.cols() != n)
        throw DimensionMismatchError("partial_trace: matrix size does not match d1*d2 = " +
                                     std::to_string(n));
    if (keep != 0 && keep != 1)
        throw DimensionMismatchError("partial_trace: keep must be 0 or 1");

    if (keep == 0) {
        ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
        for (int i = 0; i < d1; ++i)
            for (int ip = 0; ip < d1; ++ip)
                for (int j = 0; j < d2; ++j)
                    out(i, ip) += a(i * d2 + j, ip * d2 + j);
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
    for (int j = 0; j < d2; ++j)
        for (int jp = 0; jp < d2; ++jp)
            for (int i = 0; i < d1; ++i)
                out(j, jp) += a(i * d2 + j, i * d2 + jp);
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& a, int d1, int d2, int which) {
    const int n = d1 * d2;
    if (a.rows() != n || a.cols() != n)
        throw DimensionMismatchError("partial_transpose: matrix size does not match d1*d2 = " +
                                     std::to_string(n));
    if (which != 0 && which != 1)
        throw DimensionMismatchError("partial_transpose: which must be 0 or 1");

    ComplexMatrix out(n, n);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j)
            for (int ip = 0; ip < d1; ++ip)
                for (int jp = 0; jp < d2; ++jp) {
                    if (which == 0)
                        out(i * d2 + j, ip * d2 + jp) = a(ip * d2 + j, i * d2 + jp);
                    else
                        out(i * d2 + j, ip * d2 + jp) = a(i * d2 + jp, ip * d2 + j);
                }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
    Spectrum s = hermitian_eig(a);
    RealVector lam = s.eigenvalues;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam[i] < -1e-8)
            throw NotPsdError("matrix_sqrt_psd: eigenvalue " + std::to_string(lam[i]) +
                              " below -1e-8");
        if (lam[i] < 0.0)
            lam[i] = 0.0;
    }
    return s.eigenvectors * lam.cwiseSqrt().asDiagonal() * s.eigenvectors.adjoint();
}

double trace_norm(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw NotSquareError("trace_norm: matrix is not square");
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues().sum();
}

double shannon_entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double w : p) {
        if (w < -1e-12)
            throw InvalidDistributionError("shannon_entropy: negative weight");
        if (w > 0.0)
            h -= w * std::log2(w);
    }
    return h;
}

double shannon_entropy(const ProbVector& p) { return shannon_entropy(p.weights()); }

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw OutOfRangeError("binary_entropy: argument " + std::to_string(x) + " outside [0,1]");
    x = std::min(1.0, std::max(0.0, x));
    double h = 0.0;
    if (x > 0.0)
        h -= x * std::log2(x);
    if (x < 1.0)
        h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

} // namespace qcap
