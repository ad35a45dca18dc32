#include "catspec/errors.hpp"

namespace catspec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeLegCount: return "NegativeLegCount";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::FamilySizeMismatch: return "FamilySizeMismatch";
    case ErrorCode::SpecTooSmall: return "SpecTooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NoRootFound: return "NoRootFound";
  }
  return "Unknown";
}

}  // namespace catspec
