// Entropic quantities: von Neumann entropy, relative entropy, purification,
// coherent information, coherent mutual information, and the channel
// invariant I(Phi) = I_c(pi_d, Phi). All values are in bits.
#pragma once

#include "qcap/channels.hpp"

namespace qcap {

// H(rho) = -sum lambda log2 lambda; eigenvalues <= 1e-12 contribute zero.
double von_neumann_entropy(const DensityMatrix& rho);

// R(rho||sigma) = tr rho log2 rho - tr rho log2 sigma; +infinity when the
// support of rho leaks outside the support of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// |phi_rho> = sum_i sqrt(p_i) |v_i>|i> on system (x) reference.
struct PurifiedState {
    DensityMatrix base;
    ComplexVector vector; // dim d^2
};

PurifiedState purify(const DensityMatrix& rho);

// I_c(rho, Phi) = H(Phi(rho)) - H(Phi^c(rho)); the environment route is the
// default, the purification route is kept as an independent cross-check.
double coherent_information(const DensityMatrix& rho, const KrausChannel& ch);
double coherent_information_purification(const DensityMatrix& rho, const KrausChannel& ch);

// J(rho, Phi) = H(rho) + I_c(rho, Phi); nonnegative.
double coherent_mutual_information(const DensityMatrix& rho, const KrausChannel& ch);

// I(Phi) = I_c(pi_d, Phi).
double channel_coherent_info(const KrausChannel& ch);

} // namespace qcap
