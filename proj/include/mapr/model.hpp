// Core model: attribute schemas, candidate databases, target distributions,
// committees, representation vectors and the three loss measures.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mapr/errors.hpp"
#include "mapr/rational.hpp"

namespace mapr {

enum class LossKind { L1, L1Max, LMax };

inline std::string to_string(LossKind kind) {
  switch (kind) {
    case LossKind::L1: return "l1";
    case LossKind::L1Max: return "l1max";
    case LossKind::LMax: return "lmax";
  }
  return "";
}

// Named attributes, each with an ordered list of value labels. Names and
// labels must be non-empty; attribute names must be unique, labels unique
// within their attribute. Every attribute needs at least two values.
struct AttributeSchema {
  struct Attribute {
    std::string name;
    std::vector<std::string> values;
  };

  std::vector<Attribute> attributes;

  AttributeSchema() = default;
  explicit AttributeSchema(std::vector<Attribute> attrs) : attributes(std::move(attrs)) {
    validate();
  }

  std::size_t attribute_count() const { return attributes.size(); }
  std::size_t domain_size(std::size_t i) const { return attributes[i].values.size(); }

  std::size_t total_values() const {
    std::size_t n = 0;
    for (const auto& a : attributes) n += a.values.size();
    return n;
  }

  // Index of the named attribute, or throws SchemaError.
  std::size_t attribute_index(const std::string& name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i)
      if (attributes[i].name == name) return i;
    throw SchemaError("unknown attribute '" + name + "'");
  }

  std::size_t value_index(std::size_t attr, const std::string& label) const {
    const auto& vals = attributes[attr].values;
    for (std::size_t j = 0; j < vals.size(); ++j)
      if (vals[j] == label) return j;
    throw SchemaError("unknown value '" + label + "' for attribute '" +
                      attributes[attr].name + "'");
  }

  void validate() const {
    if (attributes.empty()) throw SchemaError("schema has no attributes");
    for (const auto& a : attributes) {
      if (a.name.empty()) throw SchemaError("empty attribute name");
      if (a.values.size() < 2)
        throw SchemaError("attribute '" + a.name + "' needs at least two values");
      for (const auto& v : a.values) {
        if (v.empty()) throw SchemaError("empty value label in attribute '" + a.name + "'");
        if (std::count(a.values.begin(), a.values.end(), v) != 1)
          throw SchemaError("duplicate value '" + v + "' in attribute '" + a.name + "'");
      }
      if (std::count_if(attributes.begin(), attributes.end(),
                        [&](const Attribute& b) { return b.name == a.name; }) != 1)
        throw SchemaError("duplicate attribute name '" + a.name + "'");
    }
  }
};

// Candidates with one value index per attribute. Names must be unique and
// non-empty; value indices must lie inside the schema domains.
struct CandidateDatabase {
  struct Candidate {
    std::string name;
    std::vector<int> values;  // values[i] indexes schema.attributes[i].values
  };

  AttributeSchema schema;
  std::vector<Candidate> candidates;

  CandidateDatabase() = default;
  CandidateDatabase(AttributeSchema s, std::vector<Candidate> cands)
      : schema(std::move(s)), candidates(std::move(cands)) {
    validate();
  }

  std::size_t size() const { return candidates.size(); }

  void validate() const {
    schema.validate();
    for (const auto& c : candidates) {
      if (c.name.empty()) throw SchemaError("empty candidate name");
      if (c.values.size() != schema.attribute_count())
        throw SchemaError("candidate '" + c.name + "' has " +
                          std::to_string(c.values.size()) + " values, schema has " +
                          std::to_string(schema.attribute_count()) + " attributes");
      for (std::size_t i = 0; i < c.values.size(); ++i)
        if (c.values[i] < 0 || static_cast<std::size_t>(c.values[i]) >= schema.domain_size(i))
          throw SchemaError("candidate '" + c.name + "' has an out-of-range value for attribute '" +
                            schema.attributes[i].name + "'");
      if (std::count_if(candidates.begin(), candidates.end(),
                        [&](const Candidate& d) { return d.name == c.name; }) != 1)
        throw SchemaError("duplicate candidate name '" + c.name + "'");
    }
  }
};

// One probability vector per attribute: non-negative entries summing to 1.
struct TargetDistribution {
  std::vector<std::vector<Rat>> entries;  // entries[i][j] for value j of attribute i

  TargetDistribution() = default;
  explicit TargetDistribution(std::vector<std::vector<Rat>> e) : entries(std::move(e)) {
    validate();
  }

  const Rat& at(std::size_t i, std::size_t j) const { return entries[i][j]; }

  void validate() const {
    if (entries.empty()) throw DomainError("target distribution has no attributes");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      Rat sum(0);
      if (entries[i].size() < 2)
        throw DomainError("target for attribute " + std::to_string(i) +
                          " needs at least two entries");
      for (const Rat& v : entries[i]) {
        if (v < Rat(0))
          throw DomainError("negative target entry in attribute " + std::to_string(i));
        sum += v;
      }
      if (sum != Rat(1))
        throw DomainError("target for attribute " + std::to_string(i) +
                          " sums to " + to_string(sum) + ", expected 1");
    }
  }

  // Entry sizes must match the schema domains.
  void check_schema(const AttributeSchema& schema) const {
    if (entries.size() != schema.attribute_count())
      throw SchemaError("target covers " + std::to_string(entries.size()) +
                        " attributes, schema has " + std::to_string(schema.attribute_count()));
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].size() != schema.domain_size(i))
        throw SchemaError("target for attribute '" + schema.attributes[i].name +
                          "' has the wrong number of entries");
  }
};

// A set of distinct candidate indices, kept sorted.
struct Committee {
  std::vector<int> members;

  Committee() = default;
  explicit Committee(std::vector<int> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] < 0) throw SchemaError("negative candidate index in committee");
      if (i > 0 && members[i] == members[i - 1])
        throw SchemaError("duplicate candidate index " + std::to_string(members[i]) +
                          " in committee");
    }
  }

  int size() const { return static_cast<int>(members.size()); }

  bool operator==(const Committee& other) const { return members == other.members; }
  bool operator<(const Committee& other) const { return members < other.members; }
};

// Per-attribute value frequencies of a committee of size k, stored as seat
// counts. Each attribute's counts sum to k, so the fractions sum to 1 and
// have denominators dividing k.
struct RepresentationVector {
  std::vector<std::vector<int>> counts;  // counts[i][j], seats with value j on attribute i
  int k = 0;

  RepresentationVector() = default;
  RepresentationVector(std::vector<std::vector<int>> c, int committee_size)
      : counts(std::move(c)), k(committee_size) {
    if (k <= 0) throw DomainError("committee size must be positive");
    for (std::size_t i = 0; i < counts.size(); ++i) {
      int sum = 0;
      for (int v : counts[i]) {
        if (v < 0) throw DomainError("negative seat count");
        sum += v;
      }
      if (sum != k)
        throw DomainError("seat counts for attribute " + std::to_string(i) +
                          " sum to " + std::to_string(sum) + ", expected " + std::to_string(k));
    }
  }

  int seats(std::size_t i, std::size_t j) const { return counts[i][j]; }
  Rat fraction(std::size_t i, std::size_t j) const { return Rat(counts[i][j], k); }

  bool operator==(const RepresentationVector& other) const {
    return k == other.k && counts == other.counts;
  }
};

// The unit every solver consumes.
struct Instance {
  CandidateDatabase db;
  TargetDistribution target;
  int k = 0;

  Instance() = default;
  Instance(CandidateDatabase d, TargetDistribution t, int committee_size)
      : db(std::move(d)), target(std::move(t)), k(committee_size) {
    validate();
  }

  void validate() const {
    db.validate();
    target.validate();
    target.check_schema(db.schema);
    if (k <= 0) throw DomainError("committee size must be positive");
    if (static_cast<std::size_t>(k) > db.size())
      throw DomainError("committee size " + std::to_string(k) + " exceeds database size " +
                        std::to_string(db.size()));
  }
};

// An approval ballot naming one value per attribute.
struct Ballot {
  std::vector<int> preferred;  // preferred[i] indexes attribute i's values
};

inline RepresentationVector representation_vector(const CandidateDatabase& db,
                                                  const Committee& committee) {
  if (committee.members.empty()) throw EmptyInputError("empty committee");
  std::vector<std::vector<int>> counts(db.schema.attribute_count());
  for (std::size_t i = 0; i < counts.size(); ++i)
    counts[i].assign(db.schema.domain_size(i), 0);
  for (int c : committee.members) {
    if (c < 0 || static_cast<std::size_t>(c) >= db.size())
      throw SchemaError("candidate index " + std::to_string(c) + " outside database of size " +
                        std::to_string(db.size()));
    const auto& vals = db.candidates[c].values;
    for (std::size_t i = 0; i < counts.size(); ++i) ++counts[i][vals[i]];
  }
  return RepresentationVector(std::move(counts), committee.size());
}

// Distance between a representation vector and a target distribution.
//   L1    : sum of |r - pi| over every attribute and value
//   L1Max : per attribute take the largest |r - pi|, then sum
//   LMax  : largest |r - pi| overall
inline Rat loss(LossKind kind, const TargetDistribution& target,
                const RepresentationVector& rep) {
  if (target.entries.size() != rep.counts.size())
    throw SchemaError("target and representation cover different attribute counts");
  Rat total(0);
  for (std::size_t i = 0; i < target.entries.size(); ++i) {
    if (target.entries[i].size() != rep.counts[i].size())
      throw SchemaError("target and representation disagree on the domain of attribute " +
                        std::to_string(i));
    Rat attr_max(0);
    for (std::size_t j = 0; j < target.entries[i].size(); ++j) {
      Rat d = rat_abs(rep.fraction(i, j) - target.at(i, j));
      switch (kind) {
        case LossKind::L1: total += d; break;
        case LossKind::L1Max:
        case LossKind::LMax:
          if (d > attr_max) attr_max = d;
          break;
      }
    }
    if (kind == LossKind::L1Max) total += attr_max;
    if (kind == LossKind::LMax && attr_max > total) total = attr_max;
  }
  return total;
}

// True when the committee realises the target exactly (zero loss under any
// of the three measures).
inline bool is_perfect(const CandidateDatabase& db, const Committee& committee,
                       const TargetDistribution& target) {
  target.check_schema(db.schema);
  RepresentationVector rep = representation_vector(db, committee);
  for (std::size_t i = 0; i < target.entries.size(); ++i)
    for (std::size_t j = 0; j < target.entries[i].size(); ++j)
      if (rep.fraction(i, j) != target.at(i, j)) return false;
  return true;
}

inline bool is_perfect(const Instance& inst, const Committee& committee) {
  if (committee.size() != inst.k)
    throw SchemaError("committee size " + std::to_string(committee.size()) +
                      " does not match instance k=" + std::to_string(inst.k));
  return is_perfect(inst.db, committee, inst.target);
}

// A target is natural for size k when every scaled entry k*pi is an integer,
// i.e. some committee could match it exactly given enough candidates.
inline bool is_natural(const TargetDistribution& target, int k) {
  if (k <= 0) throw DomainError("committee size must be positive");
  for (const auto& attr : target.entries)
    for (const Rat& v : attr)
      if ((Rat(k) * v).denominator() != 1) return false;
  return true;
}

// Builds the target from approval ballots: each entry is the share of
// ballots preferring that value.
inline TargetDistribution targets_from_ballots(const AttributeSchema& schema,
                                               const std::vector<Ballot>& ballots) {
  if (ballots.empty()) throw EmptyInputError("no ballots");
  std::vector<std::vector<Rat>> entries(schema.attribute_count());
  std::vector<std::vector<int>> counts(schema.attribute_count());
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i].assign(schema.domain_size(i), 0);
  for (const Ballot& b : ballots) {
    if (b.preferred.size() != schema.attribute_count())
      throw SchemaError("ballot names " + std::to_string(b.preferred.size()) +
                        " values, schema has " + std::to_string(schema.attribute_count()) +
                        " attributes");
    for (std::size_t i = 0; i < b.preferred.size(); ++i) {
      int j = b.preferred[i];
      if (j < 0 || static_cast<std::size_t>(j) >= schema.domain_size(i))
        throw SchemaError("ballot names an out-of-range value for attribute '" +
                          schema.attributes[i].name + "'");
      ++counts[i][j];
    }
  }
  int n = static_cast<int>(ballots.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    entries[i].reserve(counts[i].size());
    for (int c : counts[i]) entries[i].emplace_back(c, n);
  }
  return TargetDistribution(std::move(entries));
}

}  // namespace mapr
