#include "qcap/information.hpp"

#include <cmath>
#include <limits>

namespace qcap {

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.mat(), Eigen::EigenvaluesOnly);
    double h = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()[i];
        if (lam > kEntropyEigFloor)
            h -= lam * std::log2(lam);
    }
    return h;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimensionMismatchError("relative_entropy: dimensions differ");
    // tr rho log rho
    double tr_rho_log_rho = 0.0;
    {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.mat(), Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double lam = es.eigenvalues()[i];
            if (lam > kEntropyEigFloor)
                tr_rho_log_rho += lam * std::log2(lam);
        }
    }
    // tr rho log sigma in the eigenbasis of sigma; weight on a null direction
    // of sigma means the support condition fails.
    double tr_rho_log_sigma = 0.0;
    Spectrum s = hermitian_eig(sigma.mat());
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        const double mu = s.eigenvalues[k];
        const double w =
            (s.eigenvectors.col(k).adjoint() * rho.mat() * s.eigenvectors.col(k))(0).real();
        if (mu > kEntropyEigFloor) {
            tr_rho_log_sigma += w * std::log2(mu);
        } else if (w > 1e-10) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return tr_rho_log_rho - tr_rho_log_sigma;
}

PurifiedState purify(const DensityMatrix& rho) {
    const int d = rho.dim();
    Spectrum s = hermitian_eig(rho.mat());
    ComplexVector phi = ComplexVector::Zero(d * d);
    for (int i = 0; i < d; ++i) {
        double p = s.eigenvalues[i];
        if (p < 0.0)
            p = 0.0; // validated >= -1e-10 already
        const double sq = std::sqrt(p);
        for (int m = 0; m < d; ++m)
            phi[m * d + i] += sq * s.eigenvectors(m, i);
    }
    phi.normalize();
    return PurifiedState{rho, std::move(phi)};
}

double coherent_information(const DensityMatrix& rho, const KrausChannel& ch) {
    if (rho.dim() != ch.d_in())
        throw DimensionMismatchError("coherent_information: state dim does not equal d_in");
    const double h_out = von_neumann_entropy(apply(ch, rho));
    const double h_env = von_neumann_entropy(apply(complementary(ch), rho));
    return h_out - h_env;
}

double coherent_information_purification(const DensityMatrix& rho, const KrausChannel& ch) {
    if (rho.dim() != ch.d_in())
        throw DimensionMismatchError("coherent_information: state dim does not equal d_in");
    const PurifiedState phi = purify(rho);
    const DensityMatrix joint = DensityMatrix::pure(phi.vector);
    const DensityMatrix out_joint = apply_extended(ch, joint, rho.dim());
    return von_neumann_entropy(apply(ch, rho)) - von_neumann_entropy(out_joint);
}

double coherent_mutual_information(const DensityMatrix& rho, const KrausChannel& ch) {
    return von_neumann_entropy(rho) + coherent_information(rho, ch);
}

double channel_coherent_info(const KrausChannel& ch) {
    return coherent_information(DensityMatrix::maximally_mixed(ch.d_in()), ch);
}

} // namespace qcap
