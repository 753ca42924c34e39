#include "qcap/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcap {

namespace {

constexpr double kCompletenessTol = 1e-9;
constexpr double kChoiMarginalTol = 1e-9;
constexpr double kChoiRankTol = 1e-10;
constexpr double kZeroKrausTol = 1e-14;

void check_density(const ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw InvalidStateError(std::string(who) + ": matrix is not square");
    if (m.rows() < 1)
        throw InvalidStateError(std::string(who) + ": empty matrix");
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol)
        throw InvalidStateError(std::string(who) + ": not Hermitian, ||A - A^dag||_max = " +
                                std::to_string(asym));
    const double tr_err = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
    if (tr_err > 1e-10)
        throw InvalidStateError(std::string(who) + ": trace deviates from 1 by " +
                                std::to_string(tr_err));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPsdEigTol)
        throw InvalidStateError(std::string(who) + ": minimum eigenvalue " +
                                std::to_string(solver.eigenvalues().minCoeff()) + " below -1e-10");
}

// Rank-one Kraus sets witness entanglement breaking; the left/right singular
// vectors then expose the QC/CQ structure.
struct RankOneDecomposition {
    bool all_rank_one = false;
    std::vector<ComplexVector> left;
    std::vector<ComplexVector> right;
};

RankOneDecomposition rank_one_decomposition(const std::vector<ComplexMatrix>& kraus) {
    RankOneDecomposition out;
    out.all_rank_one = true;
    for (const auto& k : kraus) {
        Eigen::JacobiSVD<ComplexMatrix> svd(k, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        if (sv.size() == 0 || sv[0] <= 0.0) {
            out.all_rank_one = false;
            return out;
        }
        for (Eigen::Index i = 1; i < sv.size(); ++i) {
            if (sv[i] > 1e-9 * sv[0]) {
                out.all_rank_one = false;
                return out;
            }
        }
        out.left.push_back(svd.matrixU().col(0));
        out.right.push_back(svd.matrixV().col(0));
    }
    return out;
}

bool pairwise_orthogonal(const std::vector<ComplexVector>& vecs, double tol) {
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = i + 1; j < vecs.size(); ++j)
            if (std::abs(vecs[i].dot(vecs[j])) > tol)
                return false;
    return true;
}

void check_unitary(const ComplexMatrix& u, const char* who) {
    const ComplexMatrix gram = u.adjoint() * u;
    const double err =
        (gram - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-9)
        throw InvalidChannelError(std::string(who) + ": ||U^dag U - 1||_max = " +
                                  std::to_string(err));
}

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    check_density(mat_, "DensityMatrix");
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
    return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
    const double n = psi.norm();
    if (std::abs(n - 1.0) > 1e-9)
        throw InvalidStateError("DensityMatrix::pure: vector norm deviates from 1 by " +
                                std::to_string(std::abs(n - 1.0)));
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::diagonal(const ProbVector& p) {
    ComplexMatrix m = ComplexMatrix::Zero(p.size(), p.size());
    for (int i = 0; i < p.size(); ++i)
        m(i, i) = p[i];
    return DensityMatrix(std::move(m));
}

KrausChannel::KrausChannel(int d_in, int d_out, std::vector<ComplexMatrix> kraus)
    : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
    if (d_in_ < 1 || d_out_ < 1)
        throw InvalidChannelError("KrausChannel: dimensions must be positive");
    if (kraus_.empty())
        throw InvalidChannelError("KrausChannel: no Kraus operators");
    for (const auto& k : kraus_)
        if (k.rows() != d_out_ || k.cols() != d_in_)
            throw InvalidChannelError("KrausChannel: Kraus operator is " +
                                      std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                                      ", expected " + std::to_string(d_out_) + "x" +
                                      std::to_string(d_in_));
    ComplexMatrix sum = ComplexMatrix::Zero(d_in_, d_in_);
    for (const auto& k : kraus_)
        sum += k.adjoint() * k;
    const double residual =
        (sum - ComplexMatrix::Identity(d_in_, d_in_)).cwiseAbs().maxCoeff();
    if (residual > kCompletenessTol)
        throw InvalidChannelError("KrausChannel: completeness residual " +
                                  std::to_string(residual) + " exceeds 1e-9");
}

KrausChannel KrausChannel::identity(int d) {
    return KrausChannel(d, d, {ComplexMatrix::Identity(d, d)});
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u) {
    check_unitary(u, "KrausChannel::unitary");
    return KrausChannel(static_cast<int>(u.cols()), static_cast<int>(u.rows()), {u});
}

ChoiState::ChoiState(int d_in, int d_out, DensityMatrix joint)
    : d_in_(d_in), d_out_(d_out), joint_(std::move(joint)) {
    if (joint_.dim() != d_in_ * d_out_)
        throw InvalidChoiError("ChoiState: joint dimension " + std::to_string(joint_.dim()) +
                               " does not equal d_out*d_in");
    const ComplexMatrix marginal = partial_trace(joint_.mat(), d_out_, d_in_, 1);
    const double err =
        (marginal - ComplexMatrix::Identity(d_in_, d_in_) / static_cast<double>(d_in_))
            .cwiseAbs()
            .maxCoeff();
    if (err > kChoiMarginalTol)
        throw InvalidChoiError("ChoiState: reference marginal deviates from pi_d by " +
                               std::to_string(err));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.d_in())
        throw DimensionMismatchError("apply: state dim " + std::to_string(rho.dim()) +
                                     " != channel d_in " + std::to_string(ch.d_in()));
    ComplexMatrix out = ComplexMatrix::Zero(ch.d_out(), ch.d_out());
    for (const auto& k : ch.kraus())
        out += k * rho.mat() * k.adjoint();
    return DensityMatrix(std::move(out));
}

DensityMatrix apply_extended(const KrausChannel& ch, const DensityMatrix& rho_joint,
                             int ref_dim) {
    if (rho_joint.dim() != ch.d_in() * ref_dim)
        throw DimensionMismatchError("apply_extended: joint dim does not equal d_in*ref_dim");
    const ComplexMatrix id_ref = ComplexMatrix::Identity(ref_dim, ref_dim);
    ComplexMatrix out =
        ComplexMatrix::Zero(ch.d_out() * ref_dim, ch.d_out() * ref_dim);
    for (const auto& k : ch.kraus()) {
        const ComplexMatrix kext = kron(k, id_ref);
        out += kext * rho_joint.mat() * kext.adjoint();
    }
    return DensityMatrix(std::move(out));
}

ChoiState choi_of(const KrausChannel& ch) {
    const int d = ch.d_in();
    const int n = ch.d_out() * d;
    // w = (1/d) sum_k v_k v_k^dag with v_k the row-major vectorization of K_k.
    ComplexMatrix joint = ComplexMatrix::Zero(n, n);
    for (const auto& k : ch.kraus()) {
        ComplexVector v(n);
        for (int m = 0; m < ch.d_out(); ++m)
            for (int i = 0; i < d; ++i)
                v[m * d + i] = k(m, i);
        joint += v * v.adjoint();
    }
    joint /= static_cast<double>(d);
    return ChoiState(d, ch.d_out(), DensityMatrix(std::move(joint)));
}

KrausChannel channel_from_choi(const ChoiState& choi) {
    const int d_in = choi.d_in();
    const int d_out = choi.d_out();
    Spectrum s = hermitian_eig(choi.mat());
    std::vector<ComplexMatrix> kraus;
    for (Eigen::Index idx = 0; idx < s.eigenvalues.size(); ++idx) {
        const double lam = s.eigenvalues[idx];
        if (lam <= kChoiRankTol)
            continue;
        const double scale = std::sqrt(static_cast<double>(d_in) * lam);
        ComplexMatrix k(d_out, d_in);
        for (int m = 0; m < d_out; ++m)
            for (int i = 0; i < d_in; ++i)
                k(m, i) = scale * s.eigenvectors(m * d_in + i, idx);
        kraus.push_back(std::move(k));
    }
    return KrausChannel(d_in, d_out, std::move(kraus));
}

DensityMatrix choi_apply(const ChoiState& choi, const DensityMatrix& rho) {
    if (rho.dim() != choi.d_in())
        throw DimensionMismatchError("choi_apply: state dim does not equal choi d_in");
    const ComplexMatrix probe =
        kron(ComplexMatrix::Identity(choi.d_out(), choi.d_out()), rho.mat().transpose());
    ComplexMatrix out =
        static_cast<double>(choi.d_in()) *
        partial_trace(choi.mat() * probe, choi.d_out(), choi.d_in(), 0);
    // symmetrize away the last-bit float asymmetry before validation
    out = (out + out.adjoint().eval()) / 2.0;
    return DensityMatrix(std::move(out));
}

KrausChannel complementary(const KrausChannel& ch) {
    const int r = ch.kraus_count();
    // L_m = (1_E (x) <m|) V, i.e. (L_m)_{i,k} = (K_i)_{m,k}.
    std::vector<ComplexMatrix> env_kraus;
    env_kraus.reserve(static_cast<size_t>(ch.d_out()));
    for (int m = 0; m < ch.d_out(); ++m) {
        ComplexMatrix l(r, ch.d_in());
        for (int i = 0; i < r; ++i)
            l.row(i) = ch.kraus()[static_cast<size_t>(i)].row(m);
        env_kraus.push_back(std::move(l));
    }
    return KrausChannel(ch.d_in(), r, std::move(env_kraus));
}

ComplexMatrix dilation(const KrausChannel& ch) {
    const int r = ch.kraus_count();
    ComplexMatrix v(r * ch.d_out(), ch.d_in());
    for (int i = 0; i < r; ++i)
        v.block(i * ch.d_out(), 0, ch.d_out(), ch.d_in()) = ch.kraus()[static_cast<size_t>(i)];
    return v;
}

KrausChannel canonical_kraus(const KrausChannel& ch) { return channel_from_choi(choi_of(ch)); }

ChannelClass classify(const KrausChannel& ch) {
    ChannelClass cls;

    ComplexMatrix sum = ComplexMatrix::Zero(ch.d_in(), ch.d_in());
    for (const auto& k : ch.kraus())
        sum += k.adjoint() * k;
    cls.trace_preserving =
        (sum - ComplexMatrix::Identity(ch.d_in(), ch.d_in())).cwiseAbs().maxCoeff() <= 1e-9;

    const DensityMatrix out_of_mixed = apply(ch, DensityMatrix::maximally_mixed(ch.d_in()));
    cls.unital = (out_of_mixed.mat() -
                  ComplexMatrix::Identity(ch.d_out(), ch.d_out()) / ch.d_out())
                     .cwiseAbs()
                     .maxCoeff() <= 1e-9;

    const KrausChannel canon = canonical_kraus(ch);
    const auto& ks = canon.kraus();
    const int r = canon.kraus_count();

    // Extreme iff {K_i^dag K_j} is linearly independent; judged by the
    // numerical rank of their Gram matrix (relative threshold 1e-8).
    {
        std::vector<ComplexMatrix> prods;
        prods.reserve(static_cast<size_t>(r) * r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                prods.push_back(ks[static_cast<size_t>(i)].adjoint() * ks[static_cast<size_t>(j)]);
        const int n = static_cast<int>(prods.size());
        ComplexMatrix gram(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                gram(a, b) = (prods[static_cast<size_t>(a)].adjoint() *
                              prods[static_cast<size_t>(b)])
                                 .trace();
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
        const double max_eig = es.eigenvalues().maxCoeff();
        int rank = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            if (es.eigenvalues()[i] > 1e-8 * max_eig)
                ++rank;
        cls.extreme = (rank == n);
    }

    {
        const ChoiState choi = choi_of(ch);
        const ComplexMatrix pt =
            partial_transpose(choi.mat(), ch.d_out(), ch.d_in(), 1);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(pt, Eigen::EigenvaluesOnly);
        cls.ppt_choi = es.eigenvalues().minCoeff() >= -1e-9;
    }

    // EB witness: a rank-one Kraus representation, canonical or as given.
    RankOneDecomposition dec = rank_one_decomposition(ks);
    if (!dec.all_rank_one)
        dec = rank_one_decomposition(ch.kraus());
    if (dec.all_rank_one) {
        cls.eb_witnessed = true;
        cls.qc = pairwise_orthogonal(dec.left, 1e-8);
        cls.cq = pairwise_orthogonal(dec.right, 1e-8);
    }
    return cls;
}

KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<size_t>(a.kraus_count()) * b.kraus_count());
    for (const auto& ka : a.kraus())
        for (const auto& kb : b.kraus())
            kraus.push_back(kron(ka, kb));
    return KrausChannel(a.d_in() * b.d_in(), a.d_out() * b.d_out(), std::move(kraus));
}

KrausChannel compose(const KrausChannel& after, const KrausChannel& before) {
    if (after.d_in() != before.d_out())
        throw DimensionMismatchError("compose: inner dimensions do not match");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<size_t>(after.kraus_count()) * before.kraus_count());
    for (const auto& ka : after.kraus())
        for (const auto& kb : before.kraus())
            kraus.push_back(ka * kb);
    return KrausChannel(before.d_in(), after.d_out(), std::move(kraus));
}

ComplexMatrix weyl_x(int d) {
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
        x((j + 1) % d, j) = 1.0;
    return x;
}

ComplexMatrix weyl_z(int d) {
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
        z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
    return z;
}

ComplexMatrix weyl_op(int d, int a, int b) {
    // (X^a Z^b)|j> = w^{jb} |j+a mod d>
    ComplexMatrix w = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
        w((j + a) % d, j) = std::polar(1.0, 2.0 * std::numbers::pi * j * b / d);
    return w;
}

KrausChannel zoo_replacement(int d_in, const DensityMatrix& sigma) {
    Spectrum s = hermitian_eig(sigma.mat());
    std::vector<ComplexMatrix> kraus;
    for (Eigen::Index a = 0; a < s.eigenvalues.size(); ++a) {
        const double mu = s.eigenvalues[a];
        if (mu <= kEntropyEigFloor)
            continue;
        for (int i = 0; i < d_in; ++i) {
            ComplexMatrix k = ComplexMatrix::Zero(sigma.dim(), d_in);
            k.col(i) = std::sqrt(mu) * s.eigenvectors.col(a);
            kraus.push_back(std::move(k));
        }
    }
    return KrausChannel(d_in, sigma.dim(), std::move(kraus));
}

KrausChannel zoo_erasure(int d, double p) {
    if (p < 0.0 || p > 1.0)
        throw OutOfRangeError("zoo_erasure: p outside [0,1]");
    std::vector<ComplexMatrix> kraus;
    if (p < 1.0) {
        ComplexMatrix embed = ComplexMatrix::Zero(d + 1, d);
        embed.topRows(d) = ComplexMatrix::Identity(d, d) * std::sqrt(1.0 - p);
        kraus.push_back(std::move(embed));
    }
    if (p > 0.0) {
        for (int i = 0; i < d; ++i) {
            ComplexMatrix k = ComplexMatrix::Zero(d + 1, d);
            k(d, i) = std::sqrt(p);
            kraus.push_back(std::move(k));
        }
    }
    return KrausChannel(d, d + 1, std::move(kraus));
}

KrausChannel zoo_pauli(int d, const ProbVector& probs) {
    if (probs.size() != d * d)
        throw DimensionMismatchError("zoo_pauli: need d^2 probabilities");
    std::vector<ComplexMatrix> kraus;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const double p = probs[a * d + b];
            if (p <= 0.0)
                continue;
            kraus.push_back(std::sqrt(p) * weyl_op(d, a, b));
        }
    return KrausChannel(d, d, std::move(kraus));
}

KrausChannel zoo_depolarizing(int d, double p) {
    if (p < 0.0 || p > 1.0)
        throw OutOfRangeError("zoo_depolarizing: p outside [0,1]");
    std::vector<double> probs(static_cast<size_t>(d) * d, p / (d * d - 1));
    probs[0] = 1.0 - p;
    return zoo_pauli(d, ProbVector(std::move(probs)));
}

KrausChannel zoo_schur_dephasing(const std::vector<ComplexMatrix>& unitaries) {
    const int d = static_cast<int>(unitaries.size());
    if (d < 1)
        throw InvalidChannelError("zoo_schur_dephasing: need at least one unitary");
    std::vector<ComplexVector> psi;
    for (const auto& u : unitaries) {
        if (u.rows() != d || u.cols() != d)
            throw DimensionMismatchError("zoo_schur_dephasing: unitaries must be d x d with d "
                                         "equal to their count");
        check_unitary(u, "zoo_schur_dephasing");
        psi.push_back(u.col(0)); // U|0>
    }
    std::vector<ComplexMatrix> kraus;
    for (int j = 0; j < d; ++j) {
        ComplexMatrix k = ComplexMatrix::Zero(d, d);
        for (int i = 0; i < d; ++i)
            k(i, i) = psi[static_cast<size_t>(i)][j]; // <j|psi_i>
        kraus.push_back(std::move(k));
    }
    return KrausChannel(d, d, std::move(kraus));
}

KrausChannel zoo_eb_holevo(const std::vector<ComplexMatrix>& povm,
                           const std::vector<DensityMatrix>& states) {
    if (povm.empty() || povm.size() != states.size())
        throw DimensionMismatchError("zoo_eb_holevo: need one output state per POVM element");
    const int d_in = static_cast<int>(povm.front().rows());
    const int d_out = states.front().dim();
    ComplexMatrix sum = ComplexMatrix::Zero(d_in, d_in);
    for (const auto& e : povm) {
        if (e.rows() != d_in || e.cols() != d_in)
            throw DimensionMismatchError("zoo_eb_holevo: POVM elements must share one dimension");
        Spectrum s = hermitian_eig(e);
        if (s.eigenvalues.minCoeff() < -1e-9)
            throw NotPsdError("zoo_eb_holevo: POVM element not PSD");
        sum += e;
    }
    if ((sum - ComplexMatrix::Identity(d_in, d_in)).cwiseAbs().maxCoeff() > 1e-9)
        throw InvalidChannelError("zoo_eb_holevo: POVM does not sum to identity");

    std::vector<ComplexMatrix> kraus;
    for (size_t b = 0; b < povm.size(); ++b) {
        if (states[b].dim() != d_out)
            throw DimensionMismatchError("zoo_eb_holevo: output states must share one dimension");
        Spectrum se = hermitian_eig(povm[b]);
        Spectrum sr = hermitian_eig(states[b].mat());
        for (Eigen::Index ke = 0; ke < se.eigenvalues.size(); ++ke) {
            if (se.eigenvalues[ke] <= kEntropyEigFloor)
                continue;
            for (Eigen::Index a = 0; a < sr.eigenvalues.size(); ++a) {
                if (sr.eigenvalues[a] <= kEntropyEigFloor)
                    continue;
                const double scale = std::sqrt(se.eigenvalues[ke] * sr.eigenvalues[a]);
                kraus.push_back(scale * sr.eigenvectors.col(a) *
                                se.eigenvectors.col(ke).adjoint());
            }
        }
    }
    return KrausChannel(d_in, d_out, std::move(kraus));
}

KrausChannel zoo_qc(const std::vector<ComplexMatrix>& povm) {
    if (povm.empty())
        throw InvalidChannelError("zoo_qc: empty POVM");
    const int d_in = static_cast<int>(povm.front().rows());
    const int d_out = static_cast<int>(povm.size());
    ComplexMatrix sum = ComplexMatrix::Zero(d_in, d_in);
    std::vector<ComplexMatrix> kraus;
    for (int j = 0; j < d_out; ++j) {
        const auto& f = povm[static_cast<size_t>(j)];
        if (f.rows() != d_in || f.cols() != d_in)
            throw DimensionMismatchError("zoo_qc: POVM elements must share one dimension");
        Spectrum s = hermitian_eig(f);
        if (s.eigenvalues.minCoeff() < -1e-9)
            throw NotPsdError("zoo_qc: POVM element not PSD");
        sum += f;
        for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
            if (s.eigenvalues[k] <= kEntropyEigFloor)
                continue;
            ComplexMatrix op = ComplexMatrix::Zero(d_out, d_in);
            op.row(j) = std::sqrt(s.eigenvalues[k]) * s.eigenvectors.col(k).adjoint();
            kraus.push_back(std::move(op));
        }
    }
    if ((sum - ComplexMatrix::Identity(d_in, d_in)).cwiseAbs().maxCoeff() > 1e-9)
        throw InvalidChannelError("zoo_qc: POVM does not sum to identity");
    return KrausChannel(d_in, d_out, std::move(kraus));
}

KrausChannel zoo_cq(const std::vector<DensityMatrix>& states) {
    if (states.empty())
        throw InvalidChannelError("zoo_cq: empty state list");
    const int d_in = static_cast<int>(states.size());
    const int d_out = states.front().dim();
    std::vector<ComplexMatrix> kraus;
    for (int k = 0; k < d_in; ++k) {
        if (states[static_cast<size_t>(k)].dim() != d_out)
            throw DimensionMismatchError("zoo_cq: states must share one dimension");
        Spectrum s = hermitian_eig(states[static_cast<size_t>(k)].mat());
        for (Eigen::Index a = 0; a < s.eigenvalues.size(); ++a) {
            if (s.eigenvalues[a] <= kEntropyEigFloor)
                continue;
            ComplexMatrix op = ComplexMatrix::Zero(d_out, d_in);
            op.col(k) = std::sqrt(s.eigenvalues[a]) * s.eigenvectors.col(a);
            kraus.push_back(std::move(op));
        }
    }
    return KrausChannel(d_in, d_out, std::move(kraus));
}

KrausChannel zoo_ad_qudit(const std::vector<double>& gammas) {
    const int d = static_cast<int>(gammas.size()) + 1;
    if (d < 2)
        throw InvalidChannelError("zoo_ad_qudit: need at least one rate");
    std::vector<ComplexMatrix> kraus;
    for (int n = 0; n < d - 1; ++n) {
        const double g = gammas[static_cast<size_t>(n)];
        if (g < 0.0 || g > 1.0)
            throw OutOfRangeError("zoo_ad_qudit: gamma outside [0,1]");
        if (g == 0.0)
            continue;
        ComplexMatrix k = ComplexMatrix::Zero(d, d);
        k(n, n + 1) = std::sqrt(g);
        kraus.push_back(std::move(k));
    }
    ComplexMatrix k_last = ComplexMatrix::Zero(d, d);
    k_last(0, 0) = 1.0;
    for (int n = 0; n < d - 1; ++n)
        k_last(n + 1, n + 1) = std::sqrt(1.0 - gammas[static_cast<size_t>(n)]);
    kraus.push_back(std::move(k_last));
    return KrausChannel(d, d, std::move(kraus));
}

KrausChannel zoo_qubit_extreme(double a, double b) {
    ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
    k0(0, 0) = std::cos(a);
    k0(1, 1) = std::cos(b);
    ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
    k1(1, 0) = std::sin(a);
    k1(0, 1) = std::sin(b);
    std::vector<ComplexMatrix> kraus;
    if (k0.cwiseAbs().maxCoeff() > kZeroKrausTol)
        kraus.push_back(std::move(k0));
    if (k1.cwiseAbs().maxCoeff() > kZeroKrausTol)
        kraus.push_back(std::move(k1));
    return KrausChannel(2, 2, std::move(kraus));
}

KrausChannel simulate_classical(const RealMatrix& stochastic) {
    const int n_out = static_cast<int>(stochastic.rows());
    const int n_in = static_cast<int>(stochastic.cols());
    if (n_out < 1 || n_in < 1)
        throw NotStochasticError("simulate_classical: empty matrix");
    for (int i = 0; i < n_in; ++i) {
        double col = 0.0;
        for (int j = 0; j < n_out; ++j) {
            if (stochastic(j, i) < -1e-12)
                throw NotStochasticError("simulate_classical: negative entry at (" +
                                         std::to_string(j) + "," + std::to_string(i) + ")");
            col += stochastic(j, i);
        }
        if (std::abs(col - 1.0) > 1e-9)
            throw NotStochasticError("simulate_classical: column " + std::to_string(i) +
                                     " sums to " + std::to_string(col));
    }
    std::vector<ComplexMatrix> povm;
    for (int j = 0; j < n_out; ++j) {
        ComplexMatrix f = ComplexMatrix::Zero(n_in, n_in);
        for (int i = 0; i < n_in; ++i)
            f(i, i) = std::max(0.0, stochastic(j, i));
        povm.push_back(std::move(f));
    }
    return zoo_qc(povm);
}

} // namespace qcap
