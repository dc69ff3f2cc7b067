// Instance generators: hardness reductions, seeded random databases, and a
// catalog of small named fixtures with known optima.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mapr/errors.hpp"
#include "mapr/model.hpp"
#include "mapr/random.hpp"

namespace mapr {

namespace detail {

inline std::vector<Rat> binary_target(const Rat& share_of_one) {
  return {Rat(1) - share_of_one, share_of_one};
}

}  // namespace detail

// Exact cover by 3-sets as committee selection: one binary attribute per
// element, one candidate per set, and a target share of 1/t for membership
// with k = t = universe_size / 3. A perfect committee picks exactly one
// covering set per element, i.e. an exact cover.
inline Instance from_x3c(int universe_size, const std::vector<std::array<int, 3>>& sets) {
  if (universe_size < 3 || universe_size % 3 != 0)
    throw DomainError("universe size must be a positive multiple of 3");
  const int t = universe_size / 3;
  if (static_cast<int>(sets.size()) < t)
    throw DomainError("need at least " + std::to_string(t) + " sets for a size-" +
                      std::to_string(t) + " committee");

  std::vector<AttributeSchema::Attribute> attrs;
  std::vector<std::vector<Rat>> targets;
  for (int e = 1; e <= universe_size; ++e) {
    attrs.push_back({"e" + std::to_string(e), {"0", "1"}});
    targets.push_back(detail::binary_target(Rat(1, t)));
  }

  std::vector<CandidateDatabase::Candidate> cands;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::vector<int> values(static_cast<std::size_t>(universe_size), 0);
    for (int e : sets[s]) {
      if (e < 1 || e > universe_size)
        throw DomainError("set element " + std::to_string(e) + " outside the universe");
      if (values[static_cast<std::size_t>(e - 1)] == 1)
        throw DomainError("set " + std::to_string(s + 1) + " repeats element " +
                          std::to_string(e));
      values[static_cast<std::size_t>(e - 1)] = 1;
    }
    cands.push_back({"S" + std::to_string(s + 1), std::move(values)});
  }

  return Instance(CandidateDatabase(AttributeSchema(std::move(attrs)), std::move(cands)),
                  TargetDistribution(std::move(targets)), t);
}

// Perfect code (independent perfect domination) as committee selection: one
// binary attribute per vertex marking its closed neighbourhood, one
// candidate per vertex, membership target 1/k. A perfect committee hits
// every closed neighbourhood exactly once.
inline Instance from_perfect_code(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                                  int k) {
  if (num_vertices < 1) throw DomainError("graph needs at least one vertex");
  if (k < 1 || k > num_vertices)
    throw DomainError("code size must lie in [1, " + std::to_string(num_vertices) + "]");

  std::vector<std::vector<char>> adj(static_cast<std::size_t>(num_vertices),
                                     std::vector<char>(static_cast<std::size_t>(num_vertices), 0));
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > num_vertices || v < 1 || v > num_vertices)
      throw DomainError("edge endpoint outside the vertex range");
    if (u == v) throw DomainError("self-loops are not allowed");
    if (adj[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)])
      throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = 1;
    adj[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] = 1;
  }

  std::vector<AttributeSchema::Attribute> attrs;
  std::vector<std::vector<Rat>> targets;
  for (int v = 1; v <= num_vertices; ++v) {
    attrs.push_back({"N" + std::to_string(v), {"0", "1"}});
    targets.push_back(detail::binary_target(Rat(1, k)));
  }

  std::vector<CandidateDatabase::Candidate> cands;
  for (int u = 1; u <= num_vertices; ++u) {
    std::vector<int> values(static_cast<std::size_t>(num_vertices), 0);
    for (int v = 1; v <= num_vertices; ++v)
      if (u == v || adj[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)])
        values[static_cast<std::size_t>(v - 1)] = 1;
    cands.push_back({"v" + std::to_string(u), std::move(values)});
  }

  return Instance(CandidateDatabase(AttributeSchema(std::move(attrs)), std::move(cands)),
                  TargetDistribution(std::move(targets)), k);
}

struct RandomOptions {
  bool ensure_fs = false;        // start from k copies of the full vector space
  bool natural_targets = false;  // draw targets as multiples of 1/k
  bool plant_perfect = false;    // read the target off a random committee
};

// Seeded random instance over the given attribute domains. Candidates are
// drawn first (values attribute by attribute), then the target, so every
// choice is reproducible from the seed alone.
inline Instance random_instance(const std::vector<int>& domain_sizes, int m, int k,
                                std::uint64_t seed, const RandomOptions& options = {}) {
  if (domain_sizes.empty()) throw ParameterError("no attribute domains given");
  for (int q : domain_sizes)
    if (q < 2) throw ParameterError("every domain needs at least two values");
  if (m < 1) throw ParameterError("database size must be positive");
  if (k < 1 || k > m) throw ParameterError("committee size must lie in [1, m]");

  const std::size_t p = domain_sizes.size();
  std::mt19937_64 rng(seed);

  std::vector<AttributeSchema::Attribute> attrs;
  for (std::size_t i = 0; i < p; ++i) {
    AttributeSchema::Attribute a;
    a.name = "X" + std::to_string(i + 1);
    for (int j = 1; j <= domain_sizes[i]; ++j) a.values.push_back("v" + std::to_string(j));
    attrs.push_back(std::move(a));
  }

  std::vector<std::vector<int>> rows;
  if (options.ensure_fs) {
    long long space = 1;
    for (int q : domain_sizes) {
      space *= q;
      if (space > m) throw ParameterError("database too small for full supply");
    }
    if (space * k > m) throw ParameterError("database too small for full supply");
    std::vector<int> vec(p, 0);
    bool done = false;
    while (!done) {
      for (int copy = 0; copy < k; ++copy) rows.push_back(vec);
      std::size_t i = p;
      while (true) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++vec[i] < domain_sizes[i]) break;
        vec[i] = 0;
      }
    }
  }
  while (static_cast<int>(rows.size()) < m) {
    std::vector<int> vec(p);
    for (std::size_t i = 0; i < p; ++i)
      vec[i] = static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(domain_sizes[i])));
    rows.push_back(std::move(vec));
  }

  std::vector<CandidateDatabase::Candidate> cands;
  for (int c = 0; c < m; ++c) cands.push_back({"c" + std::to_string(c + 1), rows[static_cast<std::size_t>(c)]});
  CandidateDatabase db(AttributeSchema(std::move(attrs)), std::move(cands));

  std::vector<std::vector<Rat>> targets(p);
  if (options.plant_perfect) {
    Committee planted(sample_without_replacement(rng, m, k));
    RepresentationVector rep = representation_vector(db, planted);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < rep.counts[i].size(); ++j)
        targets[i].push_back(rep.fraction(i, j));
  } else if (options.natural_targets) {
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<int> seats(static_cast<std::size_t>(domain_sizes[i]), 0);
      for (int s = 0; s < k; ++s)
        ++seats[bounded_random(rng, static_cast<std::uint64_t>(domain_sizes[i]))];
      for (int s : seats) targets[i].emplace_back(s, k);
    }
  } else {
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<int> weights(static_cast<std::size_t>(domain_sizes[i]));
      int total = 0;
      while (total == 0) {
        total = 0;
        for (int& w : weights) {
          w = static_cast<int>(bounded_random(rng, 10));
          total += w;
        }
      }
      for (int w : weights) targets[i].emplace_back(w, total);
    }
  }

  return Instance(std::move(db), TargetDistribution(std::move(targets)), k);
}

struct MonotonicityCounterexample {
  Instance instance;            // target with the larger probed share
  TargetDistribution reduced;   // probed entry lowered, other ratios kept
  std::size_t attribute = 0;
  std::size_t value = 0;
  LossKind kind = LossKind::L1;
};

// Two groups of eight candidates tied together by an 8x8 grid of
// indicator attributes: committee members mixing the groups pay at least
// lambda * 7/2 on the grid, so only the two pure committees can be optimal.
// On the probed attribute the lowered target flips which pure committee
// wins, and it wins with a larger share of the probed value, violating
// population monotonicity. lambda replicates the grid attributes; 1 is
// already enough to dominate the probed attribute's influence.
inline MonotonicityCounterexample population_monotonicity_counterexample(int lambda = 1) {
  if (lambda < 1) throw ParameterError("lambda must be at least 1");

  std::vector<AttributeSchema::Attribute> attrs;
  attrs.push_back({"X1", {"v1", "v2", "v3", "v4", "v5"}});
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int r = 0; r < lambda; ++r) {
        std::string name = "G" + std::to_string(i) + "_" + std::to_string(j);
        if (lambda > 1) name += "_" + std::to_string(r + 1);
        attrs.push_back({std::move(name), {"0", "1"}});
      }

  std::vector<CandidateDatabase::Candidate> cands;
  const int grid = 64 * lambda;
  for (int i = 1; i <= 8; ++i) {
    std::vector<int> values(static_cast<std::size_t>(1 + grid), 0);
    values[0] = i <= 4 ? 0 : 2;  // v1 for A1..A4, v3 for A5..A8
    for (int j = 1; j <= 8; ++j)
      for (int r = 0; r < lambda; ++r)
        values[static_cast<std::size_t>(1 + ((i - 1) * 8 + (j - 1)) * lambda + r)] = 1;
    cands.push_back({"A" + std::to_string(i), std::move(values)});
  }
  const int b_value[8] = {0, 0, 1, 1, 2, 2, 3, 4};
  for (int j = 1; j <= 8; ++j) {
    std::vector<int> values(static_cast<std::size_t>(1 + grid), 0);
    values[0] = b_value[j - 1];
    for (int i = 1; i <= 8; ++i)
      for (int r = 0; r < lambda; ++r)
        values[static_cast<std::size_t>(1 + ((i - 1) * 8 + (j - 1)) * lambda + r)] = 1;
    cands.push_back({"B" + std::to_string(j), std::move(values)});
  }

  auto targets_for = [&](std::vector<Rat> x1) {
    std::vector<std::vector<Rat>> t;
    t.push_back(std::move(x1));
    for (int a = 0; a < grid; ++a) t.push_back(detail::binary_target(Rat(1, 8)));
    return TargetDistribution(std::move(t));
  };

  MonotonicityCounterexample out;
  out.instance =
      Instance(CandidateDatabase(AttributeSchema(std::move(attrs)), std::move(cands)),
               targets_for({Rat(1, 4), Rat(0), Rat(39, 128), Rat(57, 128), Rat(0)}), 8);
  out.reduced = targets_for({Rat(0), Rat(0), Rat(13, 32), Rat(19, 32), Rat(0)});
  out.attribute = 0;
  out.value = 0;
  out.kind = LossKind::L1;
  return out;
}

namespace detail {

inline Instance make_catalog_instance(
    std::vector<AttributeSchema::Attribute> attrs,
    std::vector<std::pair<std::string, std::vector<int>>> rows,
    std::vector<std::vector<Rat>> targets, int k) {
  std::vector<CandidateDatabase::Candidate> cands;
  cands.reserve(rows.size());
  for (auto& [name, values] : rows) cands.push_back({std::move(name), std::move(values)});
  return Instance(CandidateDatabase(AttributeSchema(std::move(attrs)), std::move(cands)),
                  TargetDistribution(std::move(targets)), k);
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "intro",        "differ-1", "differ-2",       "differ-3",
      "differ-4",     "quota-cx", "nonreversal-cx", "ilp-feasible",
      "ilp-infeasible", "ls1-lb", "ls2-lb",         "fs-illustration",
      "popmono-cx"};
  return names;
}

// Named fixtures with externally known optima, used as ground truth by the
// test suite and reachable from the command line as paper:<name>.
inline Instance catalog_instance(const std::string& name) {
  using Row = std::pair<std::string, std::vector<int>>;

  if (name == "intro") {
    return detail::make_catalog_instance(
        {{"sex", {"F", "M"}},
         {"group", {"A", "B", "C"}},
         {"age", {"J", "S"}},
         {"affiliation", {"E", "L"}}},
        {Row{"Ann", {0, 0, 0, 1}}, Row{"Bob", {1, 0, 0, 0}}, Row{"Charlie", {1, 0, 1, 1}},
         Row{"Donna", {0, 1, 1, 0}}, Row{"Ernest", {1, 0, 1, 1}}, Row{"George", {1, 0, 1, 0}},
         Row{"Helena", {0, 1, 1, 0}}, Row{"John", {1, 1, 0, 0}}, Row{"Kevin", {1, 2, 0, 0}},
         Row{"Laura", {0, 2, 0, 1}}},
        {{Rat(1, 2), Rat(1, 2)},
         {Rat(11, 20), Rat(1, 4), Rat(1, 5)},
         {Rat(3, 10), Rat(7, 10)},
         {Rat(7, 10), Rat(3, 10)}},
        4);
  }
  if (name == "differ-1" || name == "differ-2") {
    return detail::make_catalog_instance(
        {{"X1", {"v1", "v2"}}, {"X2", {"v1", "v2"}}, {"X3", {"v1", "v2"}}},
        {Row{"A", {1, 0, 0}}, Row{"B", {1, 0, 0}}, Row{"C", {0, 1, 1}}, Row{"D", {0, 1, 1}}},
        {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}}, 2);
  }
  if (name == "differ-3") {
    return detail::make_catalog_instance(
        {{"X1", {"v1", "v2", "v3", "v4"}}, {"X2", {"v1", "v2"}}},
        {Row{"A", {0, 1}}, Row{"B", {1, 1}}, Row{"C", {2, 0}}, Row{"D", {3, 0}}},
        {{Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)}, {Rat(9, 10), Rat(1, 10)}}, 2);
  }
  if (name == "differ-4") {
    return detail::make_catalog_instance(
        {{"X1", {"v1", "v2"}}, {"X2", {"v1", "v2"}}},
        {Row{"A", {0, 0}}, Row{"B", {0, 0}}, Row{"C", {1, 1}}},
        {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  }
  if (name == "quota-cx") {
    return detail::make_catalog_instance(
        {{"X1", {"v1", "v2"}}, {"X2", {"v1", "v2"}}},
        {Row{"a", {1, 1}}, Row{"b", {0, 0}}},
        {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, 1);
  }
  if (name == "nonreversal-cx") {
    return detail::make_catalog_instance(
        {{"X1", {"v1", "v2"}}, {"X2", {"v1", "v2"}}},
        {Row{"a", {0, 0}}, Row{"b", {0, 0}}, Row{"c", {0, 0}}, Row{"d", {1, 1}},
         Row{"e", {1, 1}}, Row{"f", {1, 1}}},
        {{Rat(7, 20), Rat(13, 20)}, {Rat(1), Rat(0)}}, 3);
  }
  if (name == "ilp-feasible" || name == "ilp-infeasible") {
    // Bucket multiplicities 4/2/2/2 admit exactly one feasible seat split;
    // shrinking the last bucket to one candidate removes it.
    std::vector<Row> rows;
    const int zeros = name == "ilp-feasible" ? 4 : 5;
    const int both = name == "ilp-feasible" ? 2 : 1;
    int n = 0;
    for (int c = 0; c < zeros; ++c) rows.push_back(Row{"c" + std::to_string(++n), {0, 0}});
    for (int c = 0; c < 2; ++c) rows.push_back(Row{"c" + std::to_string(++n), {1, 0}});
    for (int c = 0; c < 2; ++c) rows.push_back(Row{"c" + std::to_string(++n), {0, 1}});
    for (int c = 0; c < both; ++c) rows.push_back(Row{"c" + std::to_string(++n), {1, 1}});
    return detail::make_catalog_instance(
        {{"X1", {"0", "1"}}, {"X2", {"0", "1"}}}, std::move(rows),
        {{Rat(1, 5), Rat(4, 5)}, {Rat(3, 5), Rat(2, 5)}}, 5);
  }
  if (name == "ls1-lb") {
    return detail::make_catalog_instance(
        {{"X1", {"0", "1"}}, {"X2", {"0", "1"}}, {"X3", {"0", "1"}}},
        {Row{"a1", {1, 1, 1}}, Row{"a2", {0, 0, 1}}, Row{"b1", {1, 0, 0}}, Row{"b2", {0, 1, 0}}},
        {{Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(0)}}, 2);
  }
  if (name == "ls2-lb") {
    const std::vector<std::pair<std::string, std::array<int, 7>>> patterns = {
        {"a", {1, 0, 1, 1, 0, 0, 1}},  {"ap", {0, 1, 0, 0, 1, 1, 1}},
        {"b", {0, 0, 0, 0, 0, 0, 0}},  {"bp", {0, 0, 1, 1, 1, 1, 0}},
        {"c", {1, 1, 1, 1, 0, 0, 0}},  {"cp", {1, 1, 0, 0, 1, 1, 0}}};
    std::vector<AttributeSchema::Attribute> attrs;
    std::vector<std::vector<Rat>> targets;
    for (int i = 1; i <= 7; ++i) {
      attrs.push_back({"X" + std::to_string(i), {"0", "1"}});
      targets.push_back(i < 7 ? std::vector<Rat>{Rat(1, 2), Rat(1, 2)}
                              : std::vector<Rat>{Rat(1), Rat(0)});
    }
    std::vector<Row> rows;
    for (const auto& [tag, bits] : patterns)
      for (int copy = 1; copy <= 2; ++copy)
        rows.push_back(Row{tag + std::to_string(copy), std::vector<int>(bits.begin(), bits.end())});
    return detail::make_catalog_instance(std::move(attrs), std::move(rows), std::move(targets), 4);
  }
  if (name == "fs-illustration") {
    std::vector<Row> rows;
    int n = 0;
    for (int v1 = 0; v1 < 3; ++v1)
      for (int v2 = 0; v2 < 2; ++v2)
        for (int copy = 0; copy < 4; ++copy)
          rows.push_back(Row{"c" + std::to_string(++n), {v1, v2}});
    return detail::make_catalog_instance(
        {{"X1", {"v1", "v2", "v3"}}, {"X2", {"v1", "v2"}}}, std::move(rows),
        {{Rat(9, 20), Rat(1, 20), Rat(1, 2)}, {Rat(7, 10), Rat(3, 10)}}, 4);
  }
  if (name == "popmono-cx") return population_monotonicity_counterexample().instance;

  throw ParameterError("unknown catalog instance '" + name + "'");
}

}  // namespace mapr
