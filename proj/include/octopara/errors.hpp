#pragma once

#include <stdexcept>
#include <string>

namespace octopara {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDivisionError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct ShapeMismatchError : Error {
    using Error::Error;
};

// Carries the first offending probe so callers can reproduce the failure.
struct NotParaLinearError : Error {
    NotParaLinearError(int p_index_, int basis_index_, double residual_)
        : Error("matrix is not para-linear: Re B_p residual " + std::to_string(residual_) +
                " at p=e" + std::to_string(p_index_) + ", basis index " +
                std::to_string(basis_index_)),
          p_index(p_index_), basis_index(basis_index_), residual(residual_) {}
    int p_index;
    int basis_index;
    double residual;
};

struct NotRealPartError : Error {
    using Error::Error;
};

struct ZeroVectorError : Error {
    using Error::Error;
};

struct BasisNotOrthonormalError : Error {
    using Error::Error;
};

struct NotUnitError : Error {
    using Error::Error;
};

struct NotSliceError : Error {
    using Error::Error;
};

struct NotSelfAdjointError : Error {
    using Error::Error;
};

struct NotStandardStrongError : Error {
    explicit NotStandardStrongError(double lambda_, const std::string& detail = "")
        : Error("eigenvalue " + std::to_string(lambda_) +
                " is not standard strong: no slice-paravector system spans its eigenspace" +
                (detail.empty() ? "" : " (" + detail + ")")),
          lambda(lambda_) {}
    double lambda;
};

struct SpectrumMismatchError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct UnknownSuiteError : Error {
    using Error::Error;
};

}  // namespace octopara
