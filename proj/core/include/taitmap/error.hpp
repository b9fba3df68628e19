#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace taitmap {

enum class ErrorKind {
  kParse,
  kDuplicateId,
  kNonTrivalent,
  kDuplicateHalfEdge,
  kUnmatchedHalfEdge,
  kUnknownHalfEdge,
  kFixedPointTwin,
  kNonPlanar,
  kInvalidMove,
  kNoFreeLoop,
  kIrreducible,
  kNotBipartite,
  kDomain,
  kNotInSU3,
  kInadmissible,
  kEigenspace,
  kRetriesExhausted,
  kUnknownFamily,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace taitmap
