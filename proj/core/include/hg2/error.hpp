#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hg2 {

enum class Errc {
  EmptyLabel,
  DuplicateNode,
  DuplicateEdge,
  UnknownVertex,
  EmptyHeadOrTail,
  HeadTailOverlap,
  NegativeWeight,
  UnknownEndpoint,
  UnknownId,
  MalformedPath,
  NotAHyperpath,
  DegenerateQuery,
  DanglingConnector,
  DuplicateSourceConnector,
  InvalidRoute,
  InvalidTrace,
  TraceMismatch,
  ParseError,
  SchemaError,
  SemanticError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `location()` is a JSON-pointer style
/// path to the offending element when one is known ("/edges/2/head/0"),
/// otherwise empty. For `Errc::SemanticError`, `cause()` holds the
/// construction error that was detected; for all other codes it equals
/// `code()`.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string location = {});
  Error(Errc code, Errc cause, const std::string& message, std::string location);

  Errc code() const noexcept { return code_; }
  Errc cause() const noexcept { return cause_; }
  const std::string& location() const noexcept { return location_; }

 private:
  Errc code_;
  Errc cause_;
  std::string location_;
};

}  // namespace hg2
