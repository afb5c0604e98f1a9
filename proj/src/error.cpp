#include "arnold/error.hpp"

namespace arnold {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::RepeatedAbsValue: return "RepeatedAbsValue";
    case ErrorCode::AbsValueOutOfRange: return "AbsValueOutOfRange";
    case ErrorCode::MalformedCycleForm: return "MalformedCycleForm";
    case ErrorCode::MalformedCudCycleForm: return "MalformedCudCycleForm";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::IllegalFlip: return "IllegalFlip";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::MalformedSequence: return "MalformedSequence";
    case ErrorCode::MalformedCycle: return "MalformedCycle";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::MissingPeak: return "MissingPeak";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace arnold
