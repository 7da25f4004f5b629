#pragma once

#include <stdexcept>
#include <string>

namespace latpol {

enum class ErrorKind {
    SingularMatrix,
    ZeroVector,
    NotIntegralSum,
    NotCoprime,
    NotFullDimensional,
    EmptyInput,
    BudgetExceeded,
    HullBudgetExceeded,
    DegenerateFace,
    OriginNotInterior,
    PointNotInterior,
    MultipleInteriorPoints,
    DimensionMismatch,
    ParameterOutOfRange,
    SamplingExhausted,
    NoFeasibleStart,
    Parse,
    InvalidArgument,
    Internal
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace latpol
