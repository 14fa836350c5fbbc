#include "dnaks/error.hpp"

namespace dnaks {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::NonIntegerWeight: return "NonIntegerWeight";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::OverlappingCF: return "OverlappingCF";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DuplexPresent: return "DuplexPresent";
    case ErrorCode::StrandExplosion: return "StrandExplosion";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::MalformedStrand: return "MalformedStrand";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace dnaks
