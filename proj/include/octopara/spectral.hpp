#pragma once

#include <cstdint>
#include <vector>

#include "octopara/operator.hpp"
#include "octopara/polarization.hpp"

namespace octopara {

// P_z(x) = z <z, x> for a unit slice paravector z: para-linear, self-adjoint
// and idempotent under regular composition. Throws NotUnitError / NotSliceError.
ParaLinearOperator slice_projection(const SliceParavector& z, double tol = 1e-9);
ParaLinearOperator slice_projection(const OVector& z, double tol = 1e-9);

struct StrongEigenpair {
    double lambda;
    SliceParavector z;
};

// ||Tz - z lambda|| <= tol * ||T|| * ||z||.
bool strong_eigencheck(const ParaLinearOperator& t, const SliceParavector& z, double lambda,
                       double tol = 1e-10);
bool strong_eigencheck(const ParaLinearOperator& t, const OVector& z, const Octonion& lambda,
                       double tol = 1e-10);

struct SpectralDecomposition {
    int dim = 0;
    std::vector<StrongEigenpair> pairs;       // nonzero eigenvalues, |lambda| descending
    std::vector<SliceParavector> kernel;      // slice basis of ker T

    // pairs + kernel always form a weak associative orthonormal basis, so
    // their count equals dim.
    std::vector<SliceParavector> full_basis() const;
};

// Spectral decomposition of a self-adjoint para-linear operator with
// standard strong eigenvalues. Deterministic given (t, tol, seed). Throws
// NotSelfAdjointError, or NotStandardStrongError(lambda) when some real
// eigenspace admits no spanning slice-paravector system.
SpectralDecomposition decompose(const ParaLinearOperator& t, double tol = 1e-10,
                                uint64_t seed = 0);

// sum_i lambda_i P_{z_i}, as real matrices.
ParaLinearOperator reconstruct(const SpectralDecomposition& d);

// ||T ⊛ P_z - P_z ⊙ lambda||.
double eigen_commutation_residual(const ParaLinearOperator& t, const StrongEigenpair& pair);

// A random weak associative orthonormal basis of H (n slice paravectors):
// random orthonormal real patterns split into groups, each group mixed by a
// random complex unitary over a random axis. Used by tests and the verify
// suites to build operators with known spectral data.
std::vector<SliceParavector> random_weak_associative_system(int dim, Rng& rng);

}  // namespace octopara
