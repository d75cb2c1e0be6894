#include "hg2/error.hpp"

namespace hg2 {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyLabel: return "EmptyLabel";
    case Errc::DuplicateNode: return "DuplicateNode";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::EmptyHeadOrTail: return "EmptyHeadOrTail";
    case Errc::HeadTailOverlap: return "HeadTailOverlap";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::UnknownEndpoint: return "UnknownEndpoint";
    case Errc::UnknownId: return "UnknownId";
    case Errc::MalformedPath: return "MalformedPath";
    case Errc::NotAHyperpath: return "NotAHyperpath";
    case Errc::DegenerateQuery: return "DegenerateQuery";
    case Errc::DanglingConnector: return "DanglingConnector";
    case Errc::DuplicateSourceConnector: return "DuplicateSourceConnector";
    case Errc::InvalidRoute: return "InvalidRoute";
    case Errc::InvalidTrace: return "InvalidTrace";
    case Errc::TraceMismatch: return "TraceMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string location)
    : Error(code, code, message, std::move(location)) {}

Error::Error(Errc code, Errc cause, const std::string& message, std::string location)
    : std::runtime_error(message), code_(code), cause_(cause), location_(std::move(location)) {}

}  // namespace hg2
