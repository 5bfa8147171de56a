#include "octopara/funcalc.hpp"

#include <algorithm>
#include <cmath>

namespace octopara {

namespace {

bool lambda_match(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

SpectrumFunction::SpectrumFunction(std::vector<std::pair<double, Octonion>> table)
    : table_(std::move(table)) {
    std::sort(table_.begin(), table_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

SpectrumFunction SpectrumFunction::polynomial(std::span<const double> coeffs,
                                              std::span<const double> points) {
    std::vector<std::pair<double, Octonion>> t;
    t.reserve(points.size());
    for (double x : points) {
        double v = 0, xk = 1;
        for (double c : coeffs) {
            v += c * xk;
            xk *= x;
        }
        t.emplace_back(x, Octonion::real(v));
    }
    return SpectrumFunction(std::move(t));
}

SpectrumFunction SpectrumFunction::constant(const Octonion& value,
                                            std::span<const double> points) {
    std::vector<std::pair<double, Octonion>> t;
    for (double x : points) t.emplace_back(x, value);
    return SpectrumFunction(std::move(t));
}

const Octonion& SpectrumFunction::at(double lambda) const {
    for (const auto& [x, v] : table_)
        if (lambda_match(x, lambda)) return v;
    throw SpectrumMismatchError("function table has no entry for lambda = " +
                                std::to_string(lambda));
}

bool SpectrumFunction::covers(double lambda) const {
    for (const auto& [x, v] : table_)
        if (lambda_match(x, lambda)) return true;
    return false;
}

double SpectrumFunction::sup_norm() const {
    double m = 0;
    for (const auto& [x, v] : table_) m = std::max(m, v.norm());
    return m;
}

bool SpectrumFunction::is_real() const {
    for (const auto& [x, v] : table_)
        if (abs_max(v.im()) != 0.0) return false;
    return true;
}

SpectrumFunction SpectrumFunction::conjugated() const {
    auto t = table_;
    for (auto& [x, v] : t) v = v.conj();
    return SpectrumFunction(std::move(t));
}

SpectrumFunction SpectrumFunction::operator+(const SpectrumFunction& g) const {
    auto t = table_;
    for (auto& [x, v] : t) v += g.at(x);
    return SpectrumFunction(std::move(t));
}

SpectrumFunction SpectrumFunction::operator*(const SpectrumFunction& g) const {
    auto t = table_;
    for (auto& [x, v] : t) v = v * g.at(x);
    return SpectrumFunction(std::move(t));
}

SpectrumFunction SpectrumFunction::scaled(const Octonion& p) const {
    auto t = table_;
    for (auto& [x, v] : t) v = v * p;
    return SpectrumFunction(std::move(t));
}

std::vector<double> spectrum_points(const SpectralDecomposition& d) {
    std::vector<double> pts{0.0};
    for (const auto& p : d.pairs) {
        bool seen = false;
        for (double q : pts) seen |= lambda_match(q, p.lambda);
        if (!seen) pts.push_back(p.lambda);
    }
    return pts;
}

namespace {

ParaLinearOperator assemble(const SpectrumFunction& f, const SpectralDecomposition& d,
                            Side side) {
    if (!f.covers(0.0))
        throw SpectrumMismatchError("function table must always cover lambda = 0");
    for (const auto& p : d.pairs)
        if (!f.covers(p.lambda))
            throw SpectrumMismatchError("function table misses spectrum point " +
                                        std::to_string(p.lambda));

    ParaLinearOperator p0 = ParaLinearOperator::zero(d.dim);
    for (const auto& z : d.kernel) p0 += slice_projection(z);
    ParaLinearOperator acc = scalar_action(p0, f.at(0.0), side);
    for (const auto& p : d.pairs)
        acc += scalar_action(slice_projection(p.z), f.at(p.lambda), side);
    return acc;
}

}  // namespace

ParaLinearOperator phi(const SpectrumFunction& f, const SpectralDecomposition& d) {
    return assemble(f, d, Side::right);
}

ParaLinearOperator psi(const SpectrumFunction& f, const SpectralDecomposition& d) {
    return assemble(f, d, Side::left);
}

ParaLinearOperator power_op(const ParaLinearOperator& t, int k) {
    ParaLinearOperator acc = ParaLinearOperator::identity(t.dim());
    for (int i = 0; i < k; ++i) acc = regular_compose(acc, t);
    return acc;
}

}  // namespace octopara
