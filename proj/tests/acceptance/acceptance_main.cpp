// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] = path to the linf-trees binary, argv[2] = fixtures dir.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "linftrees/oriented_matroid.hpp"
#include "linftrees/reports.hpp"
#include "linftrees/svg_fan.hpp"
#include "linftrees/tree_metrics.hpp"
#include "linftrees/ultrametrics.hpp"
#include "oracles.hpp"

using namespace linftrees;

namespace {

std::string g_cli;
std::string g_fixtures;

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      log << "\n    FAILED: " << what;
    }
  }
};

RatVector rv(const std::vector<std::string>& values) {
  RatVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = Rational::from_string(values[i]);
  return v;
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= n; ++i) l.push_back(std::to_string(i));
  return l;
}

DissimilarityMap dmap(std::vector<std::string> labels, std::vector<std::string> values) {
  return DissimilarityMap(std::move(labels), rv(values));
}

std::string values_str(const DissimilarityMap& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.pair_count(); ++i) {
    if (i) out += ',';
    out += d.values()[i].str();
  }
  return out + ")";
}

// ---------------------------------------------------------------- criterion 1
bool criterion_1(Check& c) {
  const auto a = dmap({"A", "B", "C", "D"}, {"2", "4", "6", "8", "10", "12"});
  c.expect(subdominant(a).values() == rv({"2", "4", "6", "4", "6", "6"}),
           "subdominant of (2,4,6,8,10,12)");
  c.expect(distance_to_ultrametrics(a) == Rational(3), "distance of (2,4,6,8,10,12)");
  c.expect(canonical_closest(a).values() == rv({"5", "7", "9", "7", "9", "9"}),
           "canonical closest of (2,4,6,8,10,12)");

  const auto b = dmap({"A", "B", "C", "D"}, {"5", "8", "9", "6", "9", "9"});
  c.expect(subdominant(b).values() == rv({"5", "6", "9", "6", "9", "9"}),
           "subdominant of (5,8,9,6,9,9)");
  c.expect(canonical_closest(b).values() == rv({"6", "7", "10", "7", "10", "10"}),
           "canonical closest of (5,8,9,6,9,9)");

  const auto d = dmap({"A", "B", "C", "D"}, {"5", "5", "10", "5", "9", "11"});
  c.expect(canonical_closest(d).values() == rv({"6", "6", "10", "6", "10", "10"}),
           "canonical closest of (5,5,10,5,9,11)");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 2
bool criterion_2(Check& c) {
  const auto delta = dmap({"1", "2", "3"}, {"1", "1", "3"});
  c.expect(distance_to_ultrametrics(delta) == Rational(1), "distance of (1,1,3)");
  for (const auto& u : {std::vector<std::string>{"2", "1", "2"},
                        std::vector<std::string>{"1", "2", "2"},
                        std::vector<std::string>{"2", "2", "2"}}) {
    c.expect(in_closest_set(delta, dmap({"1", "2", "3"}, u)),
             "membership of (" + u[0] + "," + u[1] + "," + u[2] + ")");
  }
  c.expect(district(delta) == "{(123),(2(13)),(3(12))}", "district of (1,1,3)");

  oracles::Rng rng(20260810);
  int agreements = 0;
  for (int it = 0; it < 1000; ++it) {
    RatVector v(3);
    for (auto& e : v) e = Rational(rng.integer(0, 12), 1 + rng.integer(0, 1));
    const DissimilarityMap p(numeric_labels(3), v);
    if (district(p) == oracles::district3_closed_form(p)) ++agreements;
  }
  c.expect(agreements == 1000,
           "closed-form predicate agreed on " + std::to_string(agreements) + "/1000 points");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 3
bool criterion_3(Check& c) {
  const auto d1 = dmap(numeric_labels(4), {"10", "20", "21", "23", "25", "27"});
  const auto d2 = dmap(numeric_labels(4), {"10", "23", "21", "20", "25", "27"});
  c.expect(subdominant(d1).values() == rv({"10", "20", "21", "20", "21", "21"}),
           "shared subdominant of the segment endpoints (first)");
  c.expect(subdominant(d2).values() == rv({"10", "20", "21", "20", "21", "21"}),
           "shared subdominant of the segment endpoints (second)");
  c.expect(district(d1) == "{(4(3(12)))}", "district of (10,20,21,23,25,27)");
  c.expect(district(d2) == "{(4(3(12)))}", "district of (10,23,21,20,25,27)");

  RatVector mid(6);
  for (std::size_t i = 0; i < 6; ++i) mid[i] = (d1.values()[i] + d2.values()[i]) / Rational(2);
  c.expect(district(DissimilarityMap(d1.labels(), mid)) == "{(3(4(12)))}",
           "district of the midpoint");
  c.expect(district(DissimilarityMap::componentwise_max(d1, d2.shifted(Rational(-3, 2)))) ==
               "{(3(4(12)))}",
           "district of max(d1, d2 - 3/2)");

  const auto e1 = dmap(numeric_labels(4), {"4", "8", "12", "9", "21", "22"});
  const auto e2 = dmap(numeric_labels(4), {"4", "8", "12", "9", "13", "14"});
  const std::string district_e1 = district(e1);
  const std::string district_e2 = district(e2);
  c.expect(district_e1 == "{(4(3(12)))}",
           "district of (4,8,12,9,21,22): expected {(4(3(12)))}, computed " + district_e1);
  c.expect(top_set(e2).size() == 3,
           "top set of (4,8,12,9,13,14): expected 3 topologies, computed " + district_e2);
  return c.ok;
}

// ---------------------------------------------------------------- criterion 4
bool criterion_4(Check& c) {
  const RootedTopology t = RootedTopology::parse("(D(ABC))");
  const auto u = polytomy_witness_base(t);
  c.expect(u.values() == rv({"5", "5", "10", "5", "10", "10"}), "base ultrametric of (D(ABC))");
  const auto delta = construct_polytomy_witness(t, Rational(1));
  c.expect(delta.values() == rv({"5", "5", "10", "5", "9", "11"}), "polytomy witness values");

  std::set<std::string> top;
  for (const auto& s : top_set(delta)) top.insert(s.str());
  c.expect(top.count("(D(ABC))") == 1, "witness keeps the tritomy");
  for (const auto& res : resolutions(t)) {
    c.expect(top.count(res.str()) == 1, "witness keeps resolution " + res.str());
  }
  for (const auto& m : {std::vector<std::string>{"4", "6", "10", "6", "10", "10"},
                        std::vector<std::string>{"6", "4", "10", "6", "10", "10"},
                        std::vector<std::string>{"6", "6", "10", "4", "10", "10"}}) {
    c.expect(in_closest_set(delta, dmap({"A", "B", "C", "D"}, m)),
             "resolution ultrametric (" + m[0] + "," + m[1] + ",...) is closest");
  }

  const auto tritomy_witness =
      construct_polytomy_witness(RootedTopology::parse("(CD(AB))"), Rational(4));
  std::size_t binary = 0;
  for (const auto& s : top_set(tritomy_witness)) binary += s.is_binary();
  c.expect(binary == 5, "single-cherry witness reaches (2n-3)!!/3 = 5 binary topologies, got " +
                            std::to_string(binary));
  return c.ok;
}

// ---------------------------------------------------------------- criterion 5
bool criterion_5(Check& c) {
  const auto delta4 = dmap({"A", "B", "C", "D"}, {"5", "8", "9", "6", "9", "9"});
  c.expect(closest_set_dimension(delta4) == 2, "dimension of (5,8,9,6,9,9) is 2 = n-2");
  const auto top4 = top_set(delta4);
  c.expect(top4.size() == 1 && top4[0].str() == "(D(C(AB)))",
           "top set of (5,8,9,6,9,9) is the caterpillar alone");

  // five-leaf construction, checked against the vertex-enumeration oracle
  const auto u5 = dmap({"A", "B", "C", "D", "E"},
                       {"5", "7", "9", "12", "7", "9", "12", "9", "12", "12"});
  const RootedTopology t5 = topology_of_ultrametric(u5).topology;
  const auto delta5 = construct_dim_witness(t5, u5, "A", "B", "C", Rational(1));
  c.expect(closest_set_dimension(delta5) == 3, "five-leaf witness dimension is 3 = n-2");

  const Rational r5 = distance_to_ultrametrics(delta5);
  const auto view = flatten(t5, delta5.labels());
  const auto cs = equidistant_ball_constraints(view, delta5, r5, false);
  const auto oracle = oracles::dimension_by_vertices(view.n_internal, cs);
  c.expect(oracle.has_value() && *oracle == 3,
           "vertex-enumeration oracle confirms dimension 3 at five leaves");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 6
bool criterion_6(Check& c) {
  oracles::Rng rng(424242);
  int subspaces = 0, circuit_hits = 0, nonuniform_witnessed = 0;
  while (subspaces < 20) {
    const std::size_t m = 2 + subspaces % 4;  // ambient 2..5
    const std::size_t d = 1 + rng.integer(0, static_cast<long>(m) - 2);
    RatMatrix rows(d, m);
    for (auto& e : rows.entries) e = Rational(rng.integer(-3, 3));
    if (rank(rows) != d) continue;
    const LinearSubspace l = LinearSubspace::from_basis(std::move(rows), m);
    ++subspaces;

    const auto covectors = enumerate_covectors(l);
    const std::set<SignVector> covector_set(covectors.begin(), covectors.end());

    for (const auto& sigma : covectors) {
      RatVector mu = u_vector(sigma);
      for (auto& e : mu) e = -e;
      if (!(type_of(mu, l) == sigma)) {
        c.expect(false, "type(-u(sigma)) = sigma failed for sigma = " + sigma.str());
        return c.ok;
      }
    }

    const bool uniform = is_uniform(l);
    if (!uniform) {
      for (const auto& sigma : covectors) {
        if (sigma.is_zero() || sign_rank(sigma, l) >= l.dim()) continue;
        RatVector mu = u_vector(sigma);
        for (auto& e : mu) e = -e;
        c.expect(closest_set_dim(mu, l) >= 1, "non-uniform witness has positive dimension");
        ++nonuniform_witnessed;
        break;
      }
    }

    for (int pt = 0; pt < 100; ++pt) {
      const RatVector x = rng.vector(m, -8, 8, 3);
      const SignVector sigma = type_of(x, l);
      if (!covector_set.count(sigma)) {
        c.expect(false, "observed type " + sigma.str() + " is not a covector");
        return c.ok;
      }
      const Rational r = linf_distance(x, l);
      const std::size_t formula = r.is_zero() ? 0 : l.dim() - sign_rank(sigma, l);
      if (uniform && formula != 0) {
        c.expect(false, "uniform subspace with a positive-dimensional closest set");
        return c.ok;
      }
      if (!r.is_zero()) {
        std::vector<LinearConstraint> cs;
        for (std::size_t k = 0; k < l.dual_basis().rows; ++k) {
          cs.push_back({l.dual_basis().row(k), Relation::Equal, Rational(0)});
        }
        for (std::size_t i = 0; i < m; ++i) {
          RatVector up(m), lo(m);
          up[i] = 1;
          lo[i] = -1;
          cs.push_back({up, Relation::LessEq, x[i] + r});
          cs.push_back({lo, Relation::LessEq, r - x[i]});
        }
        const auto oracle = polyhedron_dimension(m, cs);
        if (!oracle || *oracle != formula) {
          c.expect(false,
                   "dimension formula d - rank(sigma) disagreed with the affine-hull oracle "
                   "at type " + sigma.str());
          return c.ok;
        }
      }
    }

    // generic integer points: circuit supports, boundary samples skipped
    for (int pt = 0; pt < 40; ++pt) {
      RatVector x(m);
      for (auto& e : x) e = Rational(rng.integer(-15, 15));
      const SignVector sigma = type_of(x, l);
      if (sigma.is_zero()) continue;
      bool minimal = true;
      for (const auto& tau : covectors) {
        if (tau.is_zero() || tau == sigma) continue;
        const auto st = sigma.support(), tt = tau.support();
        if (tt.size() < st.size() && std::includes(st.begin(), st.end(), tt.begin(), tt.end())) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        ++circuit_hits;
        continue;
      }
      const auto gens = covectors_above(sigma, l);
      RatMatrix span(l.dim() + gens.size(), m);
      for (std::size_t rr = 0; rr < l.dim(); ++rr) {
        for (std::size_t cc = 0; cc < m; ++cc) span.at(rr, cc) = l.basis().at(rr, cc);
      }
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const RatVector uu = u_vector(gens[g]);
        for (std::size_t cc = 0; cc < m; ++cc) span.at(l.dim() + g, cc) = uu[cc];
      }
      if (rank(span) >= m) {
        c.expect(false, "non-circuit type " + sigma.str() + " at a full-dimensional cone");
        return c.ok;
      }
    }
  }
  c.log << " [" << subspaces << " subspaces, " << circuit_hits << " circuit samples, "
        << nonuniform_witnessed << " non-uniform witnesses]";
  c.expect(circuit_hits > 100, "enough generic circuit samples");
  c.expect(nonuniform_witnessed > 0, "at least one non-uniform subspace seen");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 7
bool criterion_7(Check& c) {
  const auto delta = dmap(numeric_labels(6), {"35", "22", "32", "49", "42", "26", "34", "23",
                                              "32", "39", "41", "34", "46", "49", "32"});
  std::vector<std::set<std::string>> attained;
  for (const FitMode mode : {FitMode::TreeMetric, FitMode::Grassmannian}) {
    const char* tag = mode == FitMode::TreeMetric ? "tree" : "grassmannian";
    const auto report = closest_tree_components(delta, mode);
    c.expect(report.distance == Rational(5), std::string("distance 5 in mode ") + tag);
    c.expect(report.attaining.size() == 2, std::string("two attaining topologies in ") + tag);
    c.expect(report.component_count == 2, std::string("two components in ") + tag);
    c.expect(report.adjacency.empty(), std::string("attaining polyhedra disjoint in ") + tag);
    std::set<std::string> names;
    std::map<std::string, std::size_t> dims;
    for (const auto& fit : report.attaining) {
      std::string key;
      for (const auto& s : fit.topology.split_strings()) key += s + ";";
      names.insert(key);
      dims[key] = fit.dimension;
    }
    c.expect(names.count("134|256;13|2456;25|1346;") == 1 &&
                 dims["134|256;13|2456;25|1346;"] == 4,
             std::string("four-dimensional piece with splits 13|2456,134|256,25|1346 in ") + tag);
    c.expect(names.count("134|256;14|2356;56|1234;") == 1 &&
                 dims["134|256;14|2356;56|1234;"] == 6,
             std::string("six-dimensional piece with splits 14|2356,134|256,56|1234 in ") + tag);
    attained.push_back(names);
  }
  c.expect(attained[0] == attained[1], "tree and grassmannian closest sets coincide here");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 8
bool criterion_8(Check& c) {
  const auto trees4 = enumerate_unrooted_binary(numeric_labels(4));
  const UnrootedTopology* t4 = nullptr;
  for (const auto& t : trees4) {
    if (t.split_strings() == std::vector<std::string>{"12|34"}) t4 = &t;
  }
  c.expect(t4 != nullptr, "found the 12|34 quartet tree");
  const auto z4 = dmap(numeric_labels(4), {"2", "3", "3", "3", "3", "2"});
  const auto delta4 = construct_tree_dim_witness(*t4, z4, "1", "2", "3", "4", Rational(1, 2));
  const auto report4 = closest_tree_components(delta4, FitMode::TreeMetric);
  c.expect(report4.attaining.size() == 1 && report4.attaining[0].dimension == 2,
           "four-leaf witness dimension 2n-6 = 2");

  const auto trees5 = enumerate_unrooted_binary(numeric_labels(5));
  const UnrootedTopology* t5 = nullptr;
  for (const auto& t : trees5) {
    auto s = t.split_strings();
    std::sort(s.begin(), s.end());
    if (s == std::vector<std::string>{"12|345", "45|123"}) t5 = &t;
  }
  c.expect(t5 != nullptr, "found the five-leaf caterpillar");
  const auto z5 = dmap(numeric_labels(5), {"4", "6", "8", "8", "6", "8", "8", "8", "8", "4"});
  const auto delta5 = construct_tree_dim_witness(*t5, z5, "1", "2", "3", "4", Rational(1, 2));
  const auto report5 = closest_tree_components(delta5, FitMode::TreeMetric);
  c.expect(report5.attaining.size() == 1 && report5.attaining[0].dimension == 4,
           "five-leaf witness dimension 2n-6 = 4");

  SignVector sigma(10);
  sigma.set(DissimilarityMap::pair_index(5, 0, 3), Sign::Plus);
  sigma.set(DissimilarityMap::pair_index(5, 1, 2), Sign::Plus);
  sigma.set(DissimilarityMap::pair_index(5, 0, 2), Sign::Minus);
  sigma.set(DissimilarityMap::pair_index(5, 1, 3), Sign::Minus);
  c.expect(sign_rank(sigma, topology_affine_hull(*t5)) == 3,
           "perturbation sign vector has rank 3");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 9
bool criterion_9(Check& c) {
  CensusOptions opts;  // repo defaults: seed 1729, 50000 samples in [0,100]^6
  const auto counts = district_census(opts);
  c.expect(counts.size() <= 37,
           "never more than 37 generic districts (got " + std::to_string(counts.size()) + ")");
  c.expect(counts.size() == 37,
           "exactly 37 districts at the default configuration (got " +
               std::to_string(counts.size()) + ")");

  // the labels realized by the earlier criteria all occur in the census
  std::vector<DissimilarityMap> probes = {
      dmap(numeric_labels(4), {"10", "20", "21", "23", "25", "27"}),
      dmap(numeric_labels(4), {"10", "23", "21", "20", "25", "27"}),
      dmap(numeric_labels(4), {"10", "43/2", "21", "43/2", "25", "27"}),
      dmap(numeric_labels(4), {"10", "43/2", "21", "23", "25", "27"}),
      dmap(numeric_labels(4), {"4", "8", "12", "9", "21", "22"}),
      dmap(numeric_labels(4), {"4", "8", "12", "9", "13", "14"}),
      dmap(numeric_labels(4), {"5", "5", "10", "5", "9", "11"}),
      construct_polytomy_witness(RootedTopology::parse("(34(12))"), Rational(4)),
  };
  for (const auto& p : probes) {
    const std::string label = district(p);
    c.expect(counts.count(label) == 1,
             "census realizes the district " + label + " of " + values_str(p));
  }
  std::size_t total = 0;
  for (const auto& [label, n] : counts) total += n;
  c.expect(total == opts.sample_count, "census counts add up");
  c.log << " [" << counts.size() << " districts in " << total << " samples]";
  return c.ok;
}

// --------------------------------------------------------------- criterion 10
std::string run_cli(const std::string& args, const std::string& out_path, Check& c) {
  const std::string cmd = g_cli + " " + args + " --output " + out_path;
  const int rc = std::system(cmd.c_str());
  c.expect(rc == 0, "command succeeded: " + cmd);
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool criterion_10(Check& c) {
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"ultra --input " + g_fixtures + "/ultra_paper_a.json", "ultra"},
      {"ultra --format text --input " + g_fixtures + "/ultra_dim2.json", "ultra_text"},
      {"tree --input " + g_fixtures + "/tree4_example.json --mode tree", "tree"},
      {"tree --input " + g_fixtures + "/tree4_example.json --mode grassmannian", "grass"},
      {"type --input " + g_fixtures + "/type_line.json", "type"},
      {"fan3 --input " + g_fixtures + "/three_leaf_claw.json", "fan3"},
      {"census --samples 300 --seed 1729", "census"},
  };
  for (const auto& [args, tag] : runs) {
    const std::string a = run_cli(args, "/tmp/linf_accept_" + tag + "_a", c);
    const std::string b = run_cli(args, "/tmp/linf_accept_" + tag + "_b", c);
    c.expect(!a.empty() && a == b, "byte-identical reruns of: " + args);
  }
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance_criteria <linf-trees binary> <fixtures dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];

  const std::vector<std::pair<std::string, std::function<bool(Check&)>>> criteria = {
      {"1 subdominant/canonical golden values", criterion_1},
      {"2 three-leaf distances, memberships, closed-form districts", criterion_2},
      {"3 four-leaf top-set golden values", criterion_3},
      {"4 polytomy and tritomy witnesses", criterion_4},
      {"5 closest-set dimension n-2", criterion_5},
      {"6 linear-subspace type/rank/dimension property suite", criterion_6},
      {"7 six-leaf disconnected tree-metric instance", criterion_7},
      {"8 tree dimension witnesses 2n-6 and rank 3", criterion_8},
      {"9 district census", criterion_9},
      {"10 deterministic command output", criterion_10},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    bool ok = false;
    try {
      ok = fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.log << "\n    EXCEPTION: " << e.what();
    }
    std::cout << "criterion " << name << ": " << (ok && c.ok ? "PASS" : "FAIL") << c.log.str()
              << "\n";
    std::cout.flush();
    if (!(ok && c.ok)) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
