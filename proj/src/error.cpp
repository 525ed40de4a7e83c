#include "bary/error.hpp"

namespace bary {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::DegenerateAngles: return "DegenerateAngles";
        case Errc::EulerViolation: return "EulerViolation";
        case Errc::CollinearNeighbours: return "CollinearNeighbours";
        case Errc::OutsideHull: return "OutsideHull";
        case Errc::SingularSystem: return "SingularSystem";
        case Errc::MissingDirection: return "MissingDirection";
        case Errc::AsymmetryResidual: return "AsymmetryResidual";
        case Errc::BudgetExhausted: return "BudgetExhausted";
        case Errc::NumericalFailure: return "NumericalFailure";
        case Errc::WrongFamily: return "WrongFamily";
        case Errc::Disagreement: return "Disagreement";
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::ParseError: return "ParseError";
        case Errc::SchemaError: return "SchemaError";
        case Errc::BadParameters: return "BadParameters";
    }
    return "Unknown";
}

}  // namespace bary
