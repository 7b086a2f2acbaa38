#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "quenchcrit/dicke.hpp"
#include "quenchcrit/lmg.hpp"

// Exact finite-N two-point-measurement work statistics for both models,
// via dense diagonalization with total-spin sector decomposition. The
// N-spin product space splits into spin-j blocks of dimension 2j+1
// appearing mult(N, j) times; collective operators act within one block,
// so the 2^N-dimensional thermal trace reduces to a multiplicity-weighted
// sum over sectors.

namespace quenchcrit::oracle {

struct SpinSector {
    double j = 0.0;
    std::uint64_t multiplicity = 0;
    int dim = 0;  // 2j + 1
};

/// Allowed total spins for N spin-1/2s: N mod 2 / 2, ..., N/2 step 1.
std::vector<double> sector_spins(int n);

/// mult(N, j) = C(N, N/2-j) - C(N, N/2-j-1) (second term zero when the
/// index is negative). Exact integer arithmetic; valid for N <= 64.
std::uint64_t sector_multiplicity(int n, double j);

/// ln mult(N, j) via lgamma, usable at any N (the thermal traces for
/// large N work entirely in the log domain).
double log_sector_multiplicity(int n, double j);

std::vector<SpinSector> sectors(int n);

struct SpinMatrices {
    Eigen::MatrixXd jx;
    Eigen::MatrixXcd jy;
    Eigen::MatrixXd jz;  // diagonal j, j-1, ..., -j
};

SpinMatrices spin_matrices(double j);

enum class ModelKind { Lmg, DickeSector };

/// One dense block: LMG restricted to spin j, or a Dicke spin-j sector
/// with a boson cutoff M (dimension (2j+1)(M+1)).
struct ModelMatrixSpec {
    std::variant<lmg::LmgParams, dicke::DickeParams> params;
    double j = 0.0;
    std::optional<int> boson_cutoff;  // Dicke only

    ModelKind kind() const {
        return std::holds_alternative<lmg::LmgParams>(params) ? ModelKind::Lmg
                                                              : ModelKind::DickeSector;
    }
};

/// Real-symmetric sector Hamiltonian:
///   LMG:   -chi Jz - Jx^2 / N
///   Dicke: eps Jz x I + omega I x a'a + (2 gamma/sqrt(N)) Jx x (a'+a)
/// Throws CutoffMissing for a Dicke spec without boson_cutoff and
/// DimensionGuard beyond the size caps (LMG blocks <= 2049, Dicke sector
/// dimension <= 4096).
Eigen::MatrixXd build_hamiltonian(const ModelMatrixSpec& spec);

/// Smallest M in a doubling search with |lnZ(M) - lnZ(2M)| <= tol.
/// Throws CutoffExplosion past the cap (default 512).
int choose_boson_cutoff(const dicke::DickeParams& p, double tol, int cap = 512);

/// ln sum_j mult(j) sum_k e^{-beta lambda_jk} over all sector spectra
/// (log-sum-exp; multiplicities handled in the log domain).
double exact_log_partition(const lmg::LmgParams& p);
double exact_log_partition(const dicke::DickeParams& p, int boson_cutoff);

struct WorkAtom {
    double w = 0.0;
    double prob = 0.0;
};

/// Finite atom list of the two-point-measurement work distribution,
/// sorted by w; adjacent atoms differ by more than merge_tol.
struct WorkDistribution {
    std::vector<WorkAtom> atoms;
    double merge_tol = 0.0;

    double total_probability() const;
};

/// Sudden-quench (identity evolution) work distribution. The initial
/// thermal state is taken at inverse temperature beta; the quench must
/// change only the work parameter (chi or gamma), which commutes with the
/// sector decomposition. Throws MismatchedSpaces otherwise.
WorkDistribution work_distribution_sudden(const lmg::LmgParams& initial,
                                          const lmg::LmgParams& final_, double beta);
WorkDistribution work_distribution_sudden(const dicke::DickeParams& initial,
                                          const dicke::DickeParams& final_, double beta,
                                          int boson_cutoff);

/// G(u) = sum_k prob_k e^{i u w_k}; G(0) = 1.
std::complex<double> characteristic_function_exact(const WorkDistribution& d,
                                                   std::complex<double> u);

/// ln G(u), evaluated with a max-shift so e^{-Im(u) w} never overflows.
std::complex<double> log_characteristic_function_exact(const WorkDistribution& d,
                                                       std::complex<double> u);

struct WorkMoments {
    double mean = 0.0;
    double variance = 0.0;
};

WorkMoments work_moments(const WorkDistribution& d);

} // namespace quenchcrit::oracle
