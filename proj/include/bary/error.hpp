#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bary {

enum class Errc {
    DegenerateAngles,
    EulerViolation,
    CollinearNeighbours,
    OutsideHull,
    SingularSystem,
    MissingDirection,
    AsymmetryResidual,
    BudgetExhausted,
    NumericalFailure,
    WrongFamily,
    Disagreement,
    InvalidInput,
    ParseError,
    SchemaError,
    BadParameters,
};

std::string_view to_string(Errc code) noexcept;

// Single exception type for the library; the code says what went wrong.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace bary
