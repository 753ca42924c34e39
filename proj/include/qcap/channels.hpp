// Channel representations (Kraus, Choi, isometric dilation), conversions,
// the complementary channel, classification predicates, and a zoo of named
// channel families.
//
// Choi states use the layout (output factor, reference factor): the joint
// matrix acts on C^{d_out} (x) C^{d_in} and tracing out the output factor
// leaves the maximally mixed reference marginal.
#pragma once

#include <optional>
#include <vector>

#include "qcap/numerics.hpp"

namespace qcap {

// Unit-trace positive-semidefinite matrix. Validated on construction:
// Hermitian within 1e-10, eigenvalues >= -1e-10, trace 1 within 1e-10.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix mat);

    static DensityMatrix maximally_mixed(int d);
    static DensityMatrix pure(const ComplexVector& psi);
    static DensityMatrix diagonal(const ProbVector& p);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const ComplexMatrix& mat() const { return mat_; }

  private:
    ComplexMatrix mat_;
};

// Channel given by Kraus operators, each d_out x d_in, with the completeness
// sum within 1e-9 of the identity (entrywise max).
class KrausChannel {
  public:
    KrausChannel(int d_in, int d_out, std::vector<ComplexMatrix> kraus);

    static KrausChannel identity(int d);
    static KrausChannel unitary(const ComplexMatrix& u);

    int d_in() const { return d_in_; }
    int d_out() const { return d_out_; }
    int kraus_count() const { return static_cast<int>(kraus_.size()); }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  private:
    int d_in_;
    int d_out_;
    std::vector<ComplexMatrix> kraus_;
};

// Dual bipartite state of a channel, layout (output, reference). The
// reference marginal must equal pi_{d_in} within 1e-9.
class ChoiState {
  public:
    ChoiState(int d_in, int d_out, DensityMatrix joint);

    int d_in() const { return d_in_; }
    int d_out() const { return d_out_; }
    const DensityMatrix& state() const { return joint_; }
    const ComplexMatrix& mat() const { return joint_.mat(); }

  private:
    int d_in_;
    int d_out_;
    DensityMatrix joint_;
};

struct ChannelClass {
    bool unital = false;
    bool trace_preserving = false;
    bool extreme = false;
    bool ppt_choi = false;
    bool eb_witnessed = false; // a rank-one Kraus representation was found
    bool qc = false;
    bool cq = false;
};

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

// (Phi (x) 1_ref)(rho_joint); the channel acts on the first tensor factor.
DensityMatrix apply_extended(const KrausChannel& ch, const DensityMatrix& rho_joint, int ref_dim);

ChoiState choi_of(const KrausChannel& ch);

// Canonical Kraus operators from the Choi eigenvectors (eigenvalues > 1e-10).
KrausChannel channel_from_choi(const ChoiState& choi);

// Channel action read out of the Choi state: Phi(rho) = d tr_ref[w (1 (x) rho^t)].
DensityMatrix choi_apply(const ChoiState& choi, const DensityMatrix& rho);

// Map from the input to the environment of the isometric dilation; output
// dimension equals the Kraus count of the given representation.
KrausChannel complementary(const KrausChannel& ch);

// Isometry V = sum_i |i>_E (x) K_i, shape (r*d_out) x d_in, V^dag V = 1.
ComplexMatrix dilation(const KrausChannel& ch);

// Same channel re-expressed in the canonical (Choi-eigenvector) Kraus form.
KrausChannel canonical_kraus(const KrausChannel& ch);

ChannelClass classify(const KrausChannel& ch);

// Kraus-level tensor product and composition (after . before).
KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b);
KrausChannel compose(const KrausChannel& after, const KrausChannel& before);

// Discrete Weyl operators: X|j> = |j+1 mod d>, Z|j> = e^{2 pi i j / d}|j>,
// weyl_op(d, a, b) = X^a Z^b. These d^2 operators are pairwise orthogonal.
ComplexMatrix weyl_x(int d);
ComplexMatrix weyl_z(int d);
ComplexMatrix weyl_op(int d, int a, int b);

// --- channel zoo ---

// Constant channel rho -> sigma.
KrausChannel zoo_replacement(int d_in, const DensityMatrix& sigma);

// rho -> (1-p) rho + p |e><e| with erasure flag state |e> = |d>.
KrausChannel zoo_erasure(int d, double p);

// Mixture of the d^2 Weyl operators; probs indexed by a*d + b.
KrausChannel zoo_pauli(int d, const ProbVector& probs);

// (1-p) rho + p/(d^2-1) sum_i sigma_i rho sigma_i^dag.
KrausChannel zoo_depolarizing(int d, double p);

// Schur-product dephasing rho -> rho o S with S_ij = <psi_j|psi_i>,
// |psi_i> = U_i|0>; one unitary per basis index.
KrausChannel zoo_schur_dephasing(const std::vector<ComplexMatrix>& unitaries);

// Holevo form rho -> sum_b R_b tr(E_b rho), one output state per POVM element.
KrausChannel zoo_eb_holevo(const std::vector<ComplexMatrix>& povm,
                           const std::vector<DensityMatrix>& states);

// Quantum-to-classical: rho -> sum_j tr(F_j rho)|j><j|.
KrausChannel zoo_qc(const std::vector<ComplexMatrix>& povm);

// Classical-to-quantum: rho -> sum_k <k|rho|k> R_k.
KrausChannel zoo_cq(const std::vector<DensityMatrix>& states);

// Qudit amplitude damping with lowering rates gammas[n], d = gammas.size()+1.
KrausChannel zoo_ad_qudit(const std::vector<double>& gammas);

// Qubit extreme channel K_0 = cos(a)|0><0| + cos(b)|1><1|,
// K_1 = sin(a)|1><0| + sin(b)|0><1|.
KrausChannel zoo_qubit_extreme(double a, double b);

// QC channel realizing a column-stochastic matrix on diagonal states.
KrausChannel simulate_classical(const RealMatrix& stochastic);

} // namespace qcap
