#include "arakelov/error.hpp"

namespace arakelov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::DegreeBound: return "DegreeBound";
    case ErrorCode::UnclassifiableOrders: return "UnclassifiableOrders";
    case ErrorCode::AllSlicesDegenerate: return "AllSlicesDegenerate";
    case ErrorCode::GenericAmbiguous: return "GenericAmbiguous";
    case ErrorCode::AuditFailure: return "AuditFailure";
    case ErrorCode::IsotrivialFamily: return "IsotrivialFamily";
    case ErrorCode::SingularOnPath: return "SingularOnPath";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::RootIsolationFailure: return "RootIsolationFailure";
    case ErrorCode::RankOrder: return "RankOrder";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MaximalityViolation: return "MaximalityViolation";
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::MissingSlot: return "MissingSlot";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::Overdetermined: return "Overdetermined";
    case ErrorCode::NegativeDifference: return "NegativeDifference";
    case ErrorCode::SpecError: return "SpecError";
  }
  return "Unknown";
}

}  // namespace arakelov
