#pragma once

#include <string>

#include "json.hpp"
#include "linftrees/dissimilarity.hpp"
#include "linftrees/rational_linalg.hpp"
#include "linftrees/tree_metrics.hpp"
#include "linftrees/ultrametrics.hpp"

namespace linftrees {

/// Parses a dissimilarity map from JSON {"labels": [...], "values": [...]} or
/// from a plain text matrix (lower-triangular rows, optionally labeled, or a
/// full square matrix which must be symmetric with a zero diagonal).
/// Diagnostics name the offending pair. Throws ParseError.
DissimilarityMap parse_dissimilarity(const std::string& content);
DissimilarityMap load_dissimilarity(const std::string& path);

struct TypeInput {
  RatMatrix basis;
  RatVector point;
};

/// JSON {"basis": [["1","1","0"]], "point": ["0","0","-1"]}.
TypeInput parse_type_input(const std::string& content);
TypeInput load_type_input(const std::string& path);

nlohmann::json report_ultra(const DissimilarityMap& delta);
nlohmann::json report_tree(const DissimilarityMap& delta, FitMode mode);
nlohmann::json report_type(const RatMatrix& basis, const RatVector& point);
nlohmann::json report_census(const CensusOptions& options);

/// Canonical byte-stable serialization (sorted keys, two-space indent).
std::string to_output_string(const nlohmann::json& report);

/// Plain-text rendering of any of the four reports.
std::string render_text(const nlohmann::json& report);

}  // namespace linftrees
