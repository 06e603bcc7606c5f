#include "linftrees/reports.hpp"

#include <fstream>
#include <sstream>

#include "linftrees/errors.hpp"
#include "linftrees/oriented_matroid.hpp"

namespace linftrees {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational rational_from_json(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) {
      // decimal round-trip keeps e.g. 21.5 exact; reject anything lossy
      std::ostringstream ss;
      ss << v;
      return Rational::from_string(ss.str());
    }
  } catch (const ParseError& e) {
    throw ParseError("value for " + where + " is not a rational: " + e.what());
  }
  throw ParseError("value for " + where + " is not a rational");
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

DissimilarityMap parse_dissimilarity_json(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("values")) {
    throw ParseError("dissimilarity JSON needs a \"values\" array");
  }
  const auto& jvalues = j.at("values");
  if (!jvalues.is_array()) throw ParseError("\"values\" must be an array");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  } else {
    // infer n from the pair count
    std::size_t n = 2;
    while (n * (n - 1) / 2 < jvalues.size()) ++n;
    labels = default_labels(n);
  }
  const std::size_t n = labels.size();
  const std::size_t expect = n * (n - 1) / 2;
  if (jvalues.size() != expect) {
    throw ParseError("expected " + std::to_string(expect) + " values for " + std::to_string(n) +
                     " labels (pairs in lexicographic order), got " +
                     std::to_string(jvalues.size()));
  }
  RatVector values(expect);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      values[idx] = rational_from_json(jvalues[idx], "pair (" + labels[i] + "," + labels[k] + ")");
      ++idx;
    }
  }
  return DissimilarityMap(std::move(labels), std::move(values));
}

DissimilarityMap parse_dissimilarity_text(const std::string& content) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  if (rows.empty()) throw ParseError("empty dissimilarity input");

  auto is_number = [](const std::string& s) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '.' &&
          c != '/') {
        return false;
      }
    }
    return !s.empty();
  };

  const bool labeled = !is_number(rows[0][0]);
  const std::size_t n = rows.size() + (labeled ? 0 : 1);
  const bool full_square = !labeled && rows.size() >= 2 && rows[0].size() == rows.size();

  std::vector<std::string> labels;
  DissimilarityMap out(default_labels(2), RatVector(1));
  if (full_square) {
    const std::size_t nn = rows.size();
    labels = default_labels(nn);
    RatVector values(nn * (nn - 1) / 2);
    for (std::size_t i = 0; i < nn; ++i) {
      if (rows[i].size() != nn) {
        throw ParseError("square matrix row " + std::to_string(i + 1) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " +
                         std::to_string(nn));
      }
    }
    for (std::size_t i = 0; i < nn; ++i) {
      if (Rational::from_string(rows[i][i]) != Rational(0)) {
        throw ParseError("square matrix has nonzero diagonal at (" + labels[i] + "," + labels[i] +
                         ")");
      }
      for (std::size_t j = i + 1; j < nn; ++j) {
        const Rational a = Rational::from_string(rows[i][j]);
        const Rational b = Rational::from_string(rows[j][i]);
        if (a != b) {
          throw ParseError("square matrix is asymmetric at pair (" + labels[i] + "," + labels[j] +
                           ")");
        }
        values[DissimilarityMap::pair_index(nn, i, j)] = a;
      }
    }
    return DissimilarityMap(std::move(labels), std::move(values));
  }

  // lower-triangular: row k (0-based over data rows) holds k+offset entries
  RatVector values(n * (n - 1) / 2);
  if (labeled) {
    for (const auto& row : rows) labels.push_back(row[0]);
  } else {
    labels = default_labels(n);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t i = labeled ? r : r + 1;  // leaf index of this row
    const std::size_t expect = i;
    const std::size_t got = rows[r].size() - (labeled ? 1 : 0);
    if (got != expect) {
      throw ParseError("row for '" + labels[i] + "' has " + std::to_string(got) +
                       " entries, expected " + std::to_string(expect));
    }
    for (std::size_t j = 0; j < i; ++j) {
      const std::string& tok = rows[r][j + (labeled ? 1 : 0)];
      try {
        values[DissimilarityMap::pair_index(n, j, i)] = Rational::from_string(tok);
      } catch (const ParseError& e) {
        throw ParseError("value for pair (" + labels[j] + "," + labels[i] + "): " + e.what());
      }
    }
  }
  return DissimilarityMap(std::move(labels), std::move(values));
}

}  // namespace

DissimilarityMap parse_dissimilarity(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_dissimilarity_json(content);
    break;
  }
  return parse_dissimilarity_text(content);
}

DissimilarityMap load_dissimilarity(const std::string& path) {
  return parse_dissimilarity(read_file(path));
}

TypeInput parse_type_input(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j.contains("point")) {
    throw ParseError("type input needs \"basis\" (rows) and \"point\"");
  }
  const auto& jb = j.at("basis");
  if (!jb.is_array() || jb.empty()) throw ParseError("\"basis\" must be a nonempty array of rows");
  const std::size_t cols = jb[0].size();
  TypeInput input;
  input.basis = RatMatrix(jb.size(), cols);
  for (std::size_t r = 0; r < jb.size(); ++r) {
    if (jb[r].size() != cols) throw ParseError("basis rows have inconsistent lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      input.basis.at(r, c) =
          rational_from_json(jb[r][c], "basis entry (" + std::to_string(r) + "," +
                                           std::to_string(c) + ")");
    }
  }
  const auto& jp = j.at("point");
  if (!jp.is_array() || jp.size() != cols) {
    throw ParseError("\"point\" must have one entry per basis column");
  }
  input.point.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    input.point[c] = rational_from_json(jp[c], "point entry " + std::to_string(c));
  }
  return input;
}

TypeInput load_type_input(const std::string& path) { return parse_type_input(read_file(path)); }

namespace {

nlohmann::json rationals_to_json(const RatVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

}  // namespace

nlohmann::json report_ultra(const DissimilarityMap& delta) {
  nlohmann::json j;
  j["command"] = "ultra";
  j["labels"] = delta.labels();
  j["input"] = rationals_to_json(delta.values());
  j["subdominant"] = rationals_to_json(subdominant(delta).values());
  j["distance"] = distance_to_ultrametrics(delta).str();
  j["canonical_closest"] = rationals_to_json(canonical_closest(delta).values());
  const auto top = top_set(delta);
  nlohmann::json topologies = nlohmann::json::array();
  for (const auto& t : top) topologies.push_back(t.str());
  j["topologies"] = topologies;
  j["district"] = district_label(top);
  j["dimension"] = closest_set_dimension(delta);
  return j;
}

nlohmann::json report_tree(const DissimilarityMap& delta, FitMode mode) {
  const ComponentReport report = closest_tree_components(delta, mode);
  nlohmann::json j;
  j["command"] = "tree";
  j["mode"] = mode == FitMode::TreeMetric ? "tree" : "grassmannian";
  j["labels"] = delta.labels();
  j["input"] = rationals_to_json(delta.values());
  j["distance"] = report.distance.str();

  const TreeDistanceResult sweep = distance_to_tree_metrics(delta, mode);
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [t, d] : sweep.table) {
    nlohmann::json row;
    row["splits"] = t.split_strings();
    row["distance"] = d.str();
    row["is_min"] = d == sweep.distance;
    table.push_back(row);
  }
  j["table"] = table;

  nlohmann::json attaining = nlohmann::json::array();
  for (const auto& fit : report.attaining) {
    nlohmann::json row;
    row["splits"] = fit.topology.split_strings();
    row["dimension"] = fit.dimension;
    attaining.push_back(row);
  }
  j["attaining"] = attaining;
  nlohmann::json adj = nlohmann::json::array();
  for (auto [a, b] : report.adjacency) adj.push_back({a, b});
  j["adjacency"] = adj;
  j["components"] = report.component_of;
  j["component_count"] = report.component_count;
  return j;
}

nlohmann::json report_type(const RatMatrix& basis, const RatVector& point) {
  const LinearSubspace l = LinearSubspace::from_basis(basis, basis.cols);
  nlohmann::json j;
  j["command"] = "type";
  j["point"] = rationals_to_json(point);
  j["distance"] = linf_distance(point, l).str();
  const SignVector sigma = type_of(point, l);
  j["type"] = sigma.str();
  j["rank"] = sign_rank(sigma, l);
  j["dimension"] = closest_set_dim(point, l);
  j["uniform"] = is_uniform(l);
  return j;
}

nlohmann::json report_census(const CensusOptions& options) {
  const auto counts = district_census(options);
  nlohmann::json j;
  j["command"] = "census";
  j["seed"] = options.seed;
  j["samples"] = options.sample_count;
  j["box"] = {options.box_lo, options.box_hi};
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [label, count] : counts) labels[label] = count;
  j["labels"] = labels;
  j["distinct_count"] = counts.size();
  return j;
}

std::string to_output_string(const nlohmann::json& report) { return report.dump(2) + "\n"; }

namespace {

std::string joined(const nlohmann::json& arr, const char* sep) {
  std::string out;
  bool first = true;
  for (const auto& e : arr) {
    if (!first) out += sep;
    first = false;
    out += e.is_string() ? e.get<std::string>() : e.dump();
  }
  return out;
}

}  // namespace

std::string render_text(const nlohmann::json& report) {
  std::ostringstream out;
  const std::string command = report.value("command", "");
  if (command == "ultra") {
    out << "labels: " << joined(report["labels"], " ") << "\n";
    out << "input: " << joined(report["input"], " ") << "\n";
    out << "subdominant: " << joined(report["subdominant"], " ") << "\n";
    out << "distance: " << report["distance"].get<std::string>() << "\n";
    out << "canonical_closest: " << joined(report["canonical_closest"], " ") << "\n";
    out << "topologies: " << joined(report["topologies"], " ") << "\n";
    out << "district: " << report["district"].get<std::string>() << "\n";
    out << "dimension: " << report["dimension"] << "\n";
  } else if (command == "tree") {
    out << "mode: " << report["mode"].get<std::string>() << "\n";
    out << "distance: " << report["distance"].get<std::string>() << "\n";
    for (const auto& row : report["table"]) {
      out << (row["is_min"].get<bool>() ? "* " : "  ") << joined(row["splits"], " ") << "  ->  "
          << row["distance"].get<std::string>() << "\n";
    }
    out << "attaining:\n";
    for (const auto& row : report["attaining"]) {
      out << "  {" << joined(row["splits"], ", ") << "} dimension " << row["dimension"] << "\n";
    }
    out << "component_count: " << report["component_count"] << "\n";
  } else if (command == "type") {
    out << "type: " << report["type"].get<std::string>() << "\n";
    out << "rank: " << report["rank"] << "\n";
    out << "dimension: " << report["dimension"] << "\n";
    out << "distance: " << report["distance"].get<std::string>() << "\n";
    out << "uniform: " << (report["uniform"].get<bool>() ? "true" : "false") << "\n";
  } else if (command == "census") {
    for (auto it = report["labels"].begin(); it != report["labels"].end(); ++it) {
      out << it.key() << ": " << it.value() << "\n";
    }
    out << "distinct_count: " << report["distinct_count"] << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace linftrees
