#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtree {

enum class ErrorCode {
  MalformedLine,
  SelfLoop,
  DuplicateEdge,
  EmptyInput,
  Disconnected,
  HasCycle,
  Empty,
  NotATree,
  NotClassUnion,
  NotIndependent,
  NotClique,
  NotColorClassUnion,
  Overlap,
  NotMonochromatic,
  NotOrbitClosed,
  ColorInUse,
  InvalidVertex,
  ParseError,
  TooLarge,
  OutOfRange,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every qtree operation. The message is a complete
// one-line diagnostic suitable for the CLI error stream.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure inside a group expression; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              "parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qtree
