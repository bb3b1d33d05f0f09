#include "ordwork/error.hpp"

namespace ordwork {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CycleError: return "CycleError";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::AmbiguousLeast: return "AmbiguousLeast";
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::InvalidNode: return "InvalidNode";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::NotTriRelated: return "NotTriRelated";
    case ErrorCode::BadLetter: return "BadLetter";
    case ErrorCode::WellFounded: return "WellFounded";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::InvalidWarp: return "InvalidWarp";
    case ErrorCode::NotAWave: return "NotAWave";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::MalformedLabel: return "MalformedLabel";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace ordwork
