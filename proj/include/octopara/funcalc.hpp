#pragma once

#include <span>
#include <utility>
#include <vector>

#include "octopara/spectral.hpp"

namespace octopara {

// An O-valued function known through its values on a finite spectrum,
// always including 0. Tables are lossless here because sigma(T) is finite.
class SpectrumFunction {
public:
    explicit SpectrumFunction(std::vector<std::pair<double, Octonion>> table);

    // Table of f(lambda) = sum_k coeffs[k] * lambda^k over the given points.
    static SpectrumFunction polynomial(std::span<const double> coeffs,
                                       std::span<const double> points);
    static SpectrumFunction constant(const Octonion& value, std::span<const double> points);

    // Throws SpectrumMismatchError when lambda has no entry.
    const Octonion& at(double lambda) const;
    bool covers(double lambda) const;

    double sup_norm() const;
    bool is_real() const;

    SpectrumFunction conjugated() const;                       // f*
    SpectrumFunction operator+(const SpectrumFunction&) const;
    SpectrumFunction operator*(const SpectrumFunction&)const;  // pointwise fg
    SpectrumFunction scaled(const Octonion& p) const;          // f p

    const std::vector<std::pair<double, Octonion>>& table() const { return table_; }

private:
    std::vector<std::pair<double, Octonion>> table_;
};

// Spectrum points of a decomposition (each lambda_i plus 0).
std::vector<double> spectrum_points(const SpectralDecomposition& d);

// Right functional calculus Phi(f) = P_0 ⊙ f(0) + sum_i P_{z_i} ⊙ f(lambda_i).
ParaLinearOperator phi(const SpectrumFunction& f, const SpectralDecomposition& d);

// Left functional calculus Psi(f) = f(0) ⊙ P_0 + sum_i f(lambda_i) ⊙ P_{z_i}.
ParaLinearOperator psi(const SpectrumFunction& f, const SpectralDecomposition& d);

// T^⊛k, left-associated regular composition powers; k = 0 gives the identity.
ParaLinearOperator power_op(const ParaLinearOperator& t, int k);

}  // namespace octopara
