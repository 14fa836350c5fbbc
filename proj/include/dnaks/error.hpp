#pragma once

#include <stdexcept>
#include <string>

namespace dnaks {

enum class ErrorCode {
  Io,
  Parse,
  BadArgument,
  // instance validation
  NonIntegerWeight,
  Disconnected,
  OverlappingCF,
  BadK,
  DuplicateEdge,
  BadVertex,
  EmptySet,
  // tube operations
  DuplexPresent,
  StrandExplosion,
  NonTerminating,
  // solving
  NoSolution,
  SizeGuard,
  MalformedStrand,
  InsufficientData,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace dnaks
