// Reduction of a general instance to one with only binary attributes: every
// (attribute, value) pair becomes an indicator attribute.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mapr/model.hpp"
#include "mapr/rational.hpp"

namespace mapr {

struct BinaryTransform {
  Instance instance;
  // origin[a] = (attribute, value) of the source pair behind indicator a.
  std::vector<std::pair<std::size_t, std::size_t>> origin;
};

// Indicator attribute "attr=label" has values {"0", "1"}; a candidate holds
// "1" exactly when it holds that value in the source instance, and the
// indicator's target for "1" is the source entry pi.
inline BinaryTransform to_binary(const Instance& inst) {
  const AttributeSchema& schema = inst.db.schema;
  BinaryTransform out;

  std::vector<AttributeSchema::Attribute> attrs;
  std::vector<std::vector<Rat>> targets;
  for (std::size_t i = 0; i < schema.attribute_count(); ++i) {
    for (std::size_t j = 0; j < schema.domain_size(i); ++j) {
      attrs.push_back({schema.attributes[i].name + "=" + schema.attributes[i].values[j],
                       {"0", "1"}});
      targets.push_back({Rat(1) - inst.target.at(i, j), inst.target.at(i, j)});
      out.origin.emplace_back(i, j);
    }
  }

  std::vector<CandidateDatabase::Candidate> cands;
  cands.reserve(inst.db.size());
  for (const auto& c : inst.db.candidates) {
    std::vector<int> values;
    values.reserve(attrs.size());
    for (std::size_t i = 0; i < schema.attribute_count(); ++i)
      for (std::size_t j = 0; j < schema.domain_size(i); ++j)
        values.push_back(c.values[i] == static_cast<int>(j) ? 1 : 0);
    cands.push_back({c.name, std::move(values)});
  }

  out.instance = Instance(CandidateDatabase(AttributeSchema(std::move(attrs)), std::move(cands)),
                          TargetDistribution(std::move(targets)), inst.k);
  return out;
}

struct TransformIdentityReport {
  Rat l1_original, l1_transformed, l1_ratio;
  Rat l1max_original, l1max_transformed, l1max_ratio;
  Rat lmax_original, lmax_transformed;
  bool lmax_equal = false;
};

// Evaluates one committee on both sides of the transform. The L1 loss
// doubles exactly and the LMax loss is preserved; the L1Max ratio lies in
// [1, max domain size]. Zero-loss committees report the fixed ratios 2
// and 1 so the identities stay total.
inline TransformIdentityReport verify_transform_identities(const Instance& inst,
                                                           const Committee& committee) {
  BinaryTransform bt = to_binary(inst);
  RepresentationVector rep = representation_vector(inst.db, committee);
  RepresentationVector rep_bin = representation_vector(bt.instance.db, committee);

  TransformIdentityReport rep_out;
  rep_out.l1_original = loss(LossKind::L1, inst.target, rep);
  rep_out.l1_transformed = loss(LossKind::L1, bt.instance.target, rep_bin);
  rep_out.l1max_original = loss(LossKind::L1Max, inst.target, rep);
  rep_out.l1max_transformed = loss(LossKind::L1Max, bt.instance.target, rep_bin);
  rep_out.lmax_original = loss(LossKind::LMax, inst.target, rep);
  rep_out.lmax_transformed = loss(LossKind::LMax, bt.instance.target, rep_bin);

  rep_out.l1_ratio =
      rep_out.l1_original == Rat(0) ? Rat(2) : rep_out.l1_transformed / rep_out.l1_original;
  rep_out.l1max_ratio = rep_out.l1max_original == Rat(0)
                            ? Rat(1)
                            : rep_out.l1max_transformed / rep_out.l1max_original;
  rep_out.lmax_equal = rep_out.lmax_original == rep_out.lmax_transformed;
  return rep_out;
}

}  // namespace mapr
