// Runs the ten-point release checklist end to end, printing one verdict
// line per criterion, and exits nonzero when any criterion fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mapr/apportionment.hpp"
#include "mapr/axioms.hpp"
#include "mapr/buckets.hpp"
#include "mapr/cli.hpp"
#include "mapr/generators.hpp"
#include "mapr/io.hpp"
#include "mapr/local_search.hpp"
#include "mapr/model.hpp"
#include "mapr/random.hpp"
#include "mapr/rational.hpp"
#include "mapr/solvers.hpp"
#include "mapr/transform.hpp"
#include "oracles.hpp"

using namespace mapr;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << s << "s";
  return out.str();
}

std::string fmt(const Rat& r) { return to_string(r); }

const char* kind_name(LossKind kind) {
  switch (kind) {
    case LossKind::L1: return "L1";
    case LossKind::L1Max: return "L1Max";
    default: return "LMax";
  }
}

constexpr std::array<LossKind, 3> kAllKinds{LossKind::L1, LossKind::L1Max, LossKind::LMax};

// Collects failure notes for one checklist item and prints its verdict line.
struct Criterion {
  explicit Criterion(int number) : number_(number) {}

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok_ = false;
    if (notes_.size() < 6) notes_.push_back(what);
    ++failure_count_;
  }

  bool finish(const std::string& summary) const {
    std::ostringstream line;
    line << (ok_ ? "[PASS]" : "[FAIL]") << " criterion " << number_ << ": " << summary;
    if (!ok_) {
      line << " -- ";
      for (std::size_t i = 0; i < notes_.size(); ++i) line << (i ? "; " : "") << notes_[i];
      if (failure_count_ > static_cast<long long>(notes_.size()))
        line << "; and " << failure_count_ - static_cast<long long>(notes_.size())
             << " further mismatches";
    }
    std::cout << line.str() << "\n";
    return ok_;
  }

  int number_;
  bool ok_ = true;
  long long failure_count_ = 0;
  std::vector<std::string> notes_;
};

std::set<Committee> optima_set(const SolveReport& report) {
  return std::set<Committee>(report.committees.begin(), report.committees.end());
}

bool contains_committee(const SolveReport& report, const Committee& committee) {
  return std::find(report.committees.begin(), report.committees.end(), committee) !=
         report.committees.end();
}

Rat committee_loss(const Instance& inst, LossKind kind, const Committee& committee) {
  return loss(kind, inst.target, representation_vector(inst.db, committee));
}

// -------------------------------------------------------------------------
// 1. The introductory fixture reproduces its documented optima under all
//    three losses, by exhaustive search, in under a second.

bool criterion1() {
  Criterion c(1);
  auto t0 = Clock::now();
  Instance intro = catalog_instance("intro");
  SolveReport l1 = brute_force(intro, LossKind::L1, true);
  SolveReport l1max = brute_force(intro, LossKind::L1Max, true);
  SolveReport lmax = brute_force(intro, LossKind::LMax, true);
  double elapsed = seconds_since(t0);

  const Committee cdgk({2, 3, 5, 8});  // Charlie, Donna, George, Kevin
  const Committee acdg({0, 2, 3, 5});  // Ann, Charlie, Donna, George

  c.expect(l1.loss_value == Rat(4, 5),
           "documented L1 optimum is 4/5 but exhaustive search finds " + fmt(l1.loss_value));
  c.expect(contains_committee(l1, cdgk),
           "{Charlie,Donna,George,Kevin} is not L1-optimal (its own L1 loss is " +
               fmt(committee_loss(intro, LossKind::L1, cdgk)) + ")");
  c.expect(l1max.loss_value == Rat(2, 5),
           "documented L1Max optimum is 2/5 but exhaustive search finds " +
               fmt(l1max.loss_value));
  c.expect(contains_committee(l1max, cdgk),
           "{Charlie,Donna,George,Kevin} is not L1Max-optimal (its own L1Max loss is " +
               fmt(committee_loss(intro, LossKind::L1Max, cdgk)) + ")");
  c.expect(lmax.loss_value == Rat(1, 5),
           "LMax optimum should be 1/5, found " + fmt(lmax.loss_value));
  c.expect(contains_committee(lmax, acdg), "{Ann,Charlie,Donna,George} is not LMax-optimal");
  c.expect(elapsed < 1.0, "runtime " + fmt_seconds(elapsed) + " exceeds the 1s budget");
  return c.finish("introductory fixture matches its documented optima under all three losses (" +
                  fmt_seconds(elapsed) + ")");
}

// -------------------------------------------------------------------------
// 2. On seeded single-attribute instances with ample supply, the optimal
//    seat allocations under every loss are exactly the tied
//    largest-remainder allocations.

Rat allocation_loss(LossKind kind, const std::vector<int>& alloc, const std::vector<Rat>& pi,
                    int k) {
  Rat sum(0), worst(0);
  for (std::size_t j = 0; j < pi.size(); ++j) {
    Rat d = Rat(alloc[j], k) - pi[j];
    if (d < Rat(0)) d = -d;
    sum += d;
    if (d > worst) worst = d;
  }
  return kind == LossKind::L1 ? sum : worst;  // one attribute: L1Max == LMax == worst
}

bool criterion2() {
  Criterion c(2);
  auto t0 = Clock::now();
  int trials = 0, l1_mismatch_trials = 0, max_mismatch_trials = 0;
  std::string example;
  for (int t = 0; t < 200; ++t) {
    const int q = 2 + t % 4;
    const int k = 1 + (t / 4) % 6;
    std::mt19937_64 rng(7100 + static_cast<std::uint64_t>(t));
    std::vector<long long> raw(static_cast<std::size_t>(q), 0);
    long long total = 0;
    while (total == 0) {
      total = 0;
      for (auto& w : raw) {
        w = static_cast<long long>(bounded_random(rng, 10));
        total += w;
      }
    }
    std::vector<Rat> weights, pi;
    for (long long w : raw) {
      weights.push_back(Rat(w));
      pi.push_back(Rat(w, total));
    }

    std::vector<std::string> labels;
    for (int j = 1; j <= q; ++j) labels.push_back("v" + std::to_string(j));
    std::vector<CandidateDatabase::Candidate> rows;
    for (int j = 0; j < q; ++j)
      for (int i = 0; i < k; ++i)
        rows.push_back({"c" + std::to_string(rows.size() + 1), {j}});
    Instance inst(CandidateDatabase(AttributeSchema({{"X1", labels}}), std::move(rows)),
                  TargetDistribution({pi}), k);

    ApportionmentResult ap = largest_remainder(weights, k);
    std::set<std::vector<int>> hamilton(ap.all_tied.begin(), ap.all_tied.end());

    std::vector<std::vector<int>> allocs;
    std::vector<int> scratch;
    oracle::compositions(k, q, scratch, allocs);

    bool l1_mismatch = false, max_mismatch = false;
    for (LossKind kind : kAllKinds) {
      std::optional<Rat> best;
      std::set<std::vector<int>> argmin;
      for (const auto& alloc : allocs) {
        Rat v = allocation_loss(kind, alloc, pi, k);
        if (!best || v < *best) {
          best = v;
          argmin.clear();
        }
        if (v == *best) argmin.insert(alloc);
      }
      // Always true: every tied largest-remainder allocation is optimal.
      c.expect(std::includes(argmin.begin(), argmin.end(), hamilton.begin(), hamilton.end()),
               std::string("a tied largest-remainder allocation lost optimality under ") +
                   kind_name(kind) + " (trial " + std::to_string(t) + ")");
      Rat brute_best = brute_force(inst, kind).loss_value;
      c.expect(brute_best == *best, std::string("committee-level ") + kind_name(kind) +
                                        " optimum differs from the allocation optimum (trial " +
                                        std::to_string(t) + ")");
      if (argmin != hamilton) {
        (kind == LossKind::L1 ? l1_mismatch : max_mismatch) = true;
        if (example.empty()) {
          std::vector<int> extra;
          for (const auto& alloc : argmin)
            if (!hamilton.count(alloc)) {
              extra = alloc;
              break;
            }
          std::ostringstream note;
          note << "e.g. trial " << t << " (weights";
          for (long long w : raw) note << " " << w;
          note << ", k=" << k << ") has the extra " << kind_name(kind) << "-optimal split (";
          for (std::size_t j = 0; j < extra.size(); ++j) note << (j ? "," : "") << extra[j];
          note << ") beyond the " << hamilton.size() << " tied allocations";
          example = note.str();
        }
      }
    }
    l1_mismatch_trials += l1_mismatch ? 1 : 0;
    max_mismatch_trials += max_mismatch ? 1 : 0;
    ++trials;
  }
  double elapsed = seconds_since(t0);
  c.expect(trials >= 200, "only " + std::to_string(trials) + " instances checked");
  c.expect(l1_mismatch_trials == 0, std::to_string(l1_mismatch_trials) +
                                        " trials broke the L1 set equality");
  c.expect(max_mismatch_trials == 0,
           "documented set equality fails under the max losses on " +
               std::to_string(max_mismatch_trials) + " of " + std::to_string(trials) +
               " trials; a remainder tie plus an untouched binding deviation admits optimal "
               "splits outside the tie set, " +
               example);
  c.expect(elapsed < 30.0, "runtime " + fmt_seconds(elapsed) + " exceeds the 30s budget");
  return c.finish("largest-remainder ties are exactly the optimal seat splits on " +
                  std::to_string(trials) + " single-attribute instances, all losses (" +
                  fmt_seconds(elapsed) + ")");
}

// -------------------------------------------------------------------------
// 3. The four loss-separating fixtures reproduce their documented optima
//    exactly.

bool criterion3() {
  Criterion c(3);
  const Committee AB({0, 1}), AC({0, 2}), AD({0, 3}), BC({1, 2}), BD({1, 3}), CD({2, 3});

  Instance d1 = catalog_instance("differ-1");
  SolveReport d1_l1 = brute_force(d1, LossKind::L1, true);
  SolveReport d1_l1max = brute_force(d1, LossKind::L1Max, true);
  SolveReport d1_lmax = brute_force(d1, LossKind::LMax, true);
  c.expect(d1_l1.loss_value == Rat(2) && optima_set(d1_l1) == std::set<Committee>{CD},
           "differ-1 L1 optimum should be {C,D} at loss 2");
  c.expect(d1_l1max.loss_value == Rat(1) && optima_set(d1_l1max) == std::set<Committee>{CD},
           "differ-1 L1Max optimum should be {C,D} at loss 1");
  c.expect(d1_lmax.loss_value == Rat(1, 2) &&
               optima_set(d1_lmax) == std::set<Committee>{AC, AD, BC, BD},
           "differ-1 LMax optima should be the four mixed pairs at loss 1/2");

  Instance d2 = catalog_instance("differ-2");
  c.expect(serialize_instance(d1) == serialize_instance(d2),
           "differ-1 and differ-2 should be the same instance");
  SolveReport d2_l1max = brute_force(d2, LossKind::L1Max, true);
  SolveReport d2_lmax = brute_force(d2, LossKind::LMax, true);
  c.expect(optima_set(d2_l1max) == std::set<Committee>{CD} &&
               optima_set(d2_lmax) == std::set<Committee>{AC, AD, BC, BD},
           "differ-2 should separate the L1Max and LMax optima");

  Instance d3 = catalog_instance("differ-3");
  SolveReport d3_l1 = brute_force(d3, LossKind::L1, true);
  SolveReport d3_l1max = brute_force(d3, LossKind::L1Max, true);
  c.expect(d3_l1.loss_value == Rat(9, 5),
           "differ-3 L1 optimum should be 9/5, found " + fmt(d3_l1.loss_value));
  c.expect(optima_set(d3_l1) == std::set<Committee>{AB, AC, AD, BC, BD},
           "differ-3 L1 optima should be every pair except {C,D}");
  c.expect(committee_loss(d3, LossKind::L1, CD) == Rat(11, 5),
           "differ-3 {C,D} should cost 11/5 under L1");
  c.expect(d3_l1max.loss_value == Rat(3, 5) && optima_set(d3_l1max) == std::set<Committee>{CD},
           "differ-3 L1Max optimum should be {C,D} at 3/5");

  Instance d4 = catalog_instance("differ-4");
  SolveReport d4_l1 = brute_force(d4, LossKind::L1, true);
  SolveReport d4_l1max = brute_force(d4, LossKind::L1Max, true);
  SolveReport d4_lmax = brute_force(d4, LossKind::LMax, true);
  const std::set<Committee> d4_pairs{Committee({0, 1}), Committee({0, 2}), Committee({1, 2})};
  c.expect(d4_l1.loss_value == Rat(2) && optima_set(d4_l1) == d4_pairs,
           "differ-4 L1 should tie all three pairs at loss 2");
  c.expect(d4_l1max.loss_value == Rat(1) && optima_set(d4_l1max) == d4_pairs,
           "differ-4 L1Max should tie all three pairs at loss 1");
  c.expect(d4_lmax.loss_value == Rat(1, 2) &&
               optima_set(d4_lmax) == std::set<Committee>{Committee({0, 2}), Committee({1, 2})},
           "differ-4 LMax optima should be the strict subset {A,C},{B,C} at 1/2");
  return c.finish("all four loss-separating fixtures reproduce their documented optima");
}

// -------------------------------------------------------------------------
// 4. On seeded full-supply instances the pairing solver is exactly optimal
//    for both sum losses, and its committee is also LMax-optimal.

bool criterion4() {
  Criterion c(4);
  const std::vector<std::vector<int>> shapes = {{2}, {3}, {4}, {2, 2}, {2, 3}, {2, 2, 2}};
  int trials = 0;
  for (int t = 0; t < 100; ++t) {
    const auto& shape = shapes[static_cast<std::size_t>(t) % shapes.size()];
    int k = 2 + t % 3;
    int space = 1;
    for (int d : shape) space *= d;
    int m = space * k + t % 3;
    RandomOptions opt;
    opt.ensure_fs = true;
    Instance inst = random_instance(shape, m, k, 4200 + static_cast<std::uint64_t>(t), opt);
    if (!full_supply_check(inst.db, inst.k)) {
      c.expect(false, "generator lost full supply on trial " + std::to_string(t));
      continue;
    }
    SolveReport fs_l1 = solve_full_supply(inst, LossKind::L1);
    SolveReport fs_l1max = solve_full_supply(inst, LossKind::L1Max);
    c.expect(fs_l1.loss_value == brute_force(inst, LossKind::L1).loss_value,
             "pairing solver missed the L1 optimum on trial " + std::to_string(t));
    c.expect(fs_l1max.loss_value == brute_force(inst, LossKind::L1Max).loss_value,
             "pairing solver missed the L1Max optimum on trial " + std::to_string(t));
    c.expect(committee_loss(inst, LossKind::LMax, fs_l1.committees[0]) ==
                 brute_force(inst, LossKind::LMax).loss_value,
             "pairing committee is not LMax-optimal on trial " + std::to_string(t));
    ++trials;
  }
  c.expect(trials >= 100, "only " + std::to_string(trials) + " instances checked");
  return c.finish("pairing solver is optimal for both sum losses and LMax-optimal on " +
                  std::to_string(trials) + " full-supply instances");
}

// -------------------------------------------------------------------------
// 5. The binary transform doubles L1, preserves LMax, and keeps the L1Max
//    ratio within [1, max domain size] on random committee pairs.

bool criterion5() {
  Criterion c(5);
  const std::vector<std::vector<int>> shapes = {{2}, {3}, {2, 2}, {4, 2}, {2, 2, 2}, {5}};
  int pairs = 0, zero_pairs = 0;
  for (int t = 0; t < 200; ++t) {
    const auto& shape = shapes[static_cast<std::size_t>(t) % shapes.size()];
    int m = 8 + t % 7;
    int k = 2 + t % 5;
    RandomOptions opt;
    if (t % 5 == 0) opt.plant_perfect = true;
    else if (t % 5 == 1) opt.natural_targets = true;
    Instance inst = random_instance(shape, m, k, 5300 + static_cast<std::uint64_t>(t), opt);

    Committee committee;
    if (t % 25 == 0) {
      SolveReport pc = perfect_committee(inst);
      if (pc.feasible) committee = pc.committees[0];
    }
    if (committee.members.empty()) {
      std::mt19937_64 rng(5600 + static_cast<std::uint64_t>(t));
      committee = Committee(sample_without_replacement(rng, m, k));
    }

    int max_q = 0;
    for (std::size_t i = 0; i < inst.db.schema.attribute_count(); ++i)
      max_q = std::max(max_q, static_cast<int>(inst.db.schema.domain_size(i)));

    TransformIdentityReport rep = verify_transform_identities(inst, committee);
    c.expect(rep.l1_transformed == Rat(2) * rep.l1_original,
             "L1 did not double exactly on trial " + std::to_string(t));
    c.expect(rep.lmax_equal && rep.lmax_transformed == rep.lmax_original,
             "LMax was not preserved on trial " + std::to_string(t));
    c.expect(rep.l1max_transformed == rep.l1_original,
             "transformed L1Max should equal the original L1 on trial " + std::to_string(t));
    c.expect(rep.l1max_ratio >= Rat(1) && rep.l1max_ratio <= Rat(max_q),
             "L1Max ratio " + fmt(rep.l1max_ratio) + " left [1, " + std::to_string(max_q) +
                 "] on trial " + std::to_string(t));
    if (rep.l1_original == Rat(0)) ++zero_pairs;
    ++pairs;
  }
  c.expect(pairs >= 200, "only " + std::to_string(pairs) + " pairs checked");
  c.expect(zero_pairs >= 1, "no zero-loss pair exercised the ratio conventions");
  return c.finish("transform identities hold on " + std::to_string(pairs) +
                  " committee pairs (" + std::to_string(zero_pairs) + " with zero loss)");
}

// -------------------------------------------------------------------------
// 6. Swap-search quality: the additive gap bounds hold across seeds, and
//    the two tight fixtures stall exactly at their bound while a perfect
//    committee exists.

bool criterion6() {
  Criterion c(6);
  int instances = 0;
  for (int t = 0; t < 200; ++t) {
    int p = 1 + t % 8;
    int k = 4 + t % 3;
    int m = 12 + t % 3;
    RandomOptions opt;
    opt.natural_targets = true;
    Instance inst = random_instance(std::vector<int>(static_cast<std::size_t>(p), 2), m, k,
                                    6000 + static_cast<std::uint64_t>(t), opt);
    Rat best = brute_force(inst, LossKind::L1).loss_value;
    ApproximationBound bound2 = approximation_bound(2, p, k);
    for (std::uint64_t s = 0; s < 10; ++s) {
      LocalSearchOptions o1;
      o1.radius = 1;
      o1.seed = s;
      Rat gap1 = local_search(inst, LossKind::L1, o1).loss_value - best;
      c.expect(gap1 <= Rat(p), "radius-1 gap " + fmt(gap1) + " exceeds " + std::to_string(p) +
                                   " (trial " + std::to_string(t) + ", seed " +
                                   std::to_string(s) + ")");
      LocalSearchOptions o2;
      o2.radius = 2;
      o2.seed = s;
      Rat gap2 = local_search(inst, LossKind::L1, o2).loss_value - best;
      c.expect(to_double(gap2) <= bound2.value + 1e-9,
               "radius-2 gap " + fmt(gap2) + " exceeds the bound (trial " + std::to_string(t) +
                   ", seed " + std::to_string(s) + ")");
    }
    ++instances;
  }
  c.expect(instances >= 200, "only " + std::to_string(instances) + " instances swept");

  Instance lb1 = catalog_instance("ls1-lb");
  LocalSearchOptions o1;
  o1.radius = 1;
  o1.initial = Committee({0, 1});
  SolveReport r1 = local_search(lb1, LossKind::L1, o1);
  c.expect(r1.loss_value == Rat(2, 3) * Rat(static_cast<int>(lb1.db.schema.attribute_count())),
           "radius-1 fixture should stall at 2/3 of the attribute count, found " +
               fmt(r1.loss_value));
  c.expect(!oracle::improving_swap_exists(lb1, LossKind::L1, {0, 1}, 1),
           "radius-1 fixture has an improving single swap after all");
  c.expect(is_perfect(lb1, Committee({2, 3})), "radius-1 fixture lost its perfect committee");

  Instance lb2 = catalog_instance("ls2-lb");
  LocalSearchOptions o2;
  o2.radius = 2;
  o2.initial = Committee({0, 1, 2, 3});
  SolveReport r2 = local_search(lb2, LossKind::L1, o2);
  c.expect(r2.loss_value == Rat(2, 7) * Rat(static_cast<int>(lb2.db.schema.attribute_count())),
           "radius-2 fixture should stall at 2/7 of the attribute count, found " +
               fmt(r2.loss_value));
  c.expect(!oracle::improving_swap_exists(lb2, LossKind::L1, {0, 1, 2, 3}, 2),
           "radius-2 fixture has an improving swap of size <= 2 after all");
  c.expect(is_perfect(lb2, Committee({4, 6, 8, 10})),
           "radius-2 fixture lost its perfect committee");
  return c.finish("swap-search gap bounds hold on " + std::to_string(instances) +
                  " binary instances x 10 seeds, and both tight fixtures stall at their bound "
                  "with a perfect committee available");
}

// -------------------------------------------------------------------------
// 7. The bucket machinery: the worked feasibility pair behaves as
//    documented, and feasibility plus optimal losses match brute force on
//    random instances.

bool criterion7() {
  Criterion c(7);
  Instance feas = catalog_instance("ilp-feasible");
  SolveReport pf = perfect_committee(feas);
  c.expect(pf.feasible && !pf.committees.empty(), "worked example reported infeasible");
  if (pf.feasible && !pf.committees.empty()) {
    const Committee& picked = pf.committees[0];
    c.expect(is_perfect(feas, picked), "returned committee does not meet the target exactly");
    BucketTable table = BucketTable::build(feas.db);
    std::map<std::vector<int>, int> taken;
    for (const auto& vec : table.vectors) taken[vec] = 0;
    int total = 0;
    for (int idx : picked.members) {
      taken[feas.db.candidates[static_cast<std::size_t>(idx)].values] += 1;
      ++total;
    }
    for (std::size_t b = 0; b < table.size(); ++b) {
      int count = taken[table.vectors[b]];
      c.expect(count >= 0 && count <= table.multiplicity[b],
               "bucket count leaves [0, multiplicity]");
    }
    c.expect(total == feas.k, "bucket counts do not sum to k");
    const std::map<std::vector<int>, int> witness{
        {{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 0}, {{1, 1}, 2}};
    c.expect(taken == witness, "allocation differs from the documented witness (1,2,0,2)");
  }
  SolveReport pi = perfect_committee(catalog_instance("ilp-infeasible"));
  c.expect(!pi.feasible && pi.committees.empty(), "infeasible variant reported feasible");

  const std::vector<std::vector<int>> shapes = {{2}, {3}, {2, 2}, {2, 3}, {2, 2, 2}};
  int trials = 0, feasible_seen = 0;
  for (int t = 0; t < 100; ++t) {
    const auto& shape = shapes[static_cast<std::size_t>(t) % shapes.size()];
    int m = 6 + t % 9;
    int k = 2 + t % 5;
    RandomOptions opt;
    if (t % 4 == 0) opt.plant_perfect = true;
    else if (t % 4 == 1) opt.natural_targets = true;
    Instance inst = random_instance(shape, m, k, 7400 + static_cast<std::uint64_t>(t), opt);
    bool brute_perfect = brute_force(inst, LossKind::L1).loss_value == Rat(0);
    SolveReport pc = perfect_committee(inst);
    c.expect(pc.feasible == brute_perfect,
             "feasibility disagrees with brute force on trial " + std::to_string(t));
    if (pc.feasible) {
      c.expect(is_perfect(inst, pc.committees[0]),
               "feasible answer is not a perfect committee on trial " + std::to_string(t));
      ++feasible_seen;
    }
    for (LossKind kind : kAllKinds)
      c.expect(solve_buckets_optimal(inst, kind).loss_value ==
                   brute_force(inst, kind).loss_value,
               std::string("bucket optimum differs from brute force under ") + kind_name(kind) +
                   " on trial " + std::to_string(t));
    ++trials;
  }
  c.expect(trials >= 100, "only " + std::to_string(trials) + " instances checked");
  c.expect(feasible_seen > 0 && feasible_seen < trials, "feasibility outcomes were one-sided");
  return c.finish("worked feasibility pair behaves as documented; feasibility and bucket optima "
                  "match brute force on " +
                  std::to_string(trials) + " instances (" + std::to_string(feasible_seen) +
                  " feasible)");
}

// -------------------------------------------------------------------------
// 8. Hardness-reduction instances: feasibility of a perfect committee
//    matches independent cover/code oracles, exhaustively where the space
//    allows and on seeded samples beyond.

bool criterion8() {
  Criterion c(8);
  auto t0 = Clock::now();
  long long mismatches = 0;

  // Exhaustive: every collection of 2..8 distinct triples over 6 elements.
  std::vector<std::array<int, 3>> pool6;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int d = b + 1; d <= 6; ++d) pool6.push_back({a, b, d});
  long long cover6 = 0, cover6_feasible = 0;
  for (int s = 2; s <= 8; ++s) {
    std::vector<char> mask(pool6.size(), 0);
    std::fill(mask.begin(), mask.begin() + s, 1);
    do {
      std::vector<std::array<int, 3>> sets;
      for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) sets.push_back(pool6[i]);
      bool lib = perfect_committee(from_x3c(6, sets)).feasible;
      bool orc = oracle::exact_cover_exists(6, sets);
      if (lib != orc) ++mismatches;
      ++cover6;
      cover6_feasible += lib ? 1 : 0;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  c.expect(cover6 == 263929,
           "universe-6 enumeration covered " + std::to_string(cover6) + " collections");
  c.expect(cover6_feasible > 0 && cover6_feasible < cover6,
           "universe-6 outcomes were one-sided");

  // Sampled: collections of 3..8 triples over 9 elements, half with a
  // planted cover.
  long long cover9 = 0, cover9_feasible = 0;
  for (int t = 0; t < 4000; ++t) {
    std::mt19937_64 rng(8800 + static_cast<std::uint64_t>(t));
    int s = 3 + t % 6;
    std::set<std::array<int, 3>> chosen;
    if (t % 2 == 0) {
      std::vector<int> perm = sample_without_replacement(rng, 9, 9);
      for (int block = 0; block < 3; ++block) {
        std::array<int, 3> tri{perm[3 * block] + 1, perm[3 * block + 1] + 1,
                               perm[3 * block + 2] + 1};
        std::sort(tri.begin(), tri.end());
        chosen.insert(tri);
      }
    }
    while (static_cast<int>(chosen.size()) < s) {
      std::vector<int> pick = sample_without_replacement(rng, 9, 3);
      std::array<int, 3> tri{pick[0] + 1, pick[1] + 1, pick[2] + 1};
      std::sort(tri.begin(), tri.end());
      chosen.insert(tri);
    }
    std::vector<std::array<int, 3>> sets(chosen.begin(), chosen.end());
    bool lib = perfect_committee(from_x3c(9, sets)).feasible;
    bool orc = oracle::exact_cover_exists(9, sets);
    if (lib != orc) ++mismatches;
    ++cover9;
    cover9_feasible += lib ? 1 : 0;
  }
  c.expect(cover9_feasible > 0 && cover9_feasible < cover9, "universe-9 outcomes were one-sided");

  // Exhaustive: every graph on up to 6 vertices, every committee size.
  long long code_cases = 0, code_feasible = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all_edges.push_back({u, v});
    const int e = static_cast<int>(all_edges.size());
    for (long long emask = 0; emask < (1LL << e); ++emask) {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < e; ++i)
        if ((emask >> i) & 1) edges.push_back(all_edges[static_cast<std::size_t>(i)]);
      for (int k = 1; k <= n; ++k) {
        bool lib = perfect_committee(from_perfect_code(n, edges, k)).feasible;
        bool orc = oracle::perfect_code_exists(n, edges, k);
        if (lib != orc) ++mismatches;
        ++code_cases;
        code_feasible += lib ? 1 : 0;
      }
    }
  }
  c.expect(code_cases == 202013,
           "graph enumeration covered " + std::to_string(code_cases) + " cases");
  c.expect(code_feasible > 0 && code_feasible < code_cases, "graph outcomes were one-sided");

  // Sampled: graphs on 7 and 8 vertices; every fourth trial is a disjoint
  // union of stars, which always carries a code of its star count.
  long long code_sampled = 0, code_sampled_feasible = 0;
  for (int t = 0; t < 4000; ++t) {
    const int n = 7 + t % 2;
    std::mt19937_64 rng(8900 + static_cast<std::uint64_t>(t));
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    if (t % 4 == 0) {
      int stars = 1 + static_cast<int>(bounded_random(rng, 3));
      for (int v = stars + 1; v <= n; ++v)
        edges.push_back({1 + static_cast<int>(bounded_random(rng, stars)), v});
      std::sort(edges.begin(), edges.end());
      k = stars;
    } else {
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
          if (bounded_random(rng, 2) == 0) edges.push_back({u, v});
      k = 1 + static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(n)));
    }
    bool lib = perfect_committee(from_perfect_code(n, edges, k)).feasible;
    bool orc = oracle::perfect_code_exists(n, edges, k);
    if (lib != orc) ++mismatches;
    ++code_sampled;
    code_sampled_feasible += lib ? 1 : 0;
  }
  c.expect(code_sampled_feasible > 0 && code_sampled_feasible < code_sampled,
           "sampled graph outcomes were one-sided");

  double elapsed = seconds_since(t0);
  c.expect(mismatches == 0, std::to_string(mismatches) + " feasibility mismatches");
  return c.finish("cover and code feasibility match the independent oracles: " +
                  std::to_string(cover6) + " universe-6 collections (exhaustive) + " +
                  std::to_string(cover9) + " universe-9 samples, " + std::to_string(code_cases) +
                  " graph cases to 6 vertices (exhaustive) + " + std::to_string(code_sampled) +
                  " samples on 7-8 vertices (" + fmt_seconds(elapsed) + ")");
}

// -------------------------------------------------------------------------
// 9. Fairness properties: the two counterexample fixtures violate their
//    property at every optimum, full-supply committees stay clean, and the
//    seat-drop paradox is found by search.

// Halve the probed entry and rescale the rest of the row proportionally.
TargetDistribution reduce_entry(const TargetDistribution& target, std::size_t attribute,
                                std::size_t value) {
  std::vector<std::vector<Rat>> entries = target.entries;
  Rat old_share = entries[attribute][value];
  Rat new_share = old_share / Rat(2);
  Rat scale = (Rat(1) - new_share) / (Rat(1) - old_share);
  for (std::size_t j = 0; j < entries[attribute].size(); ++j) entries[attribute][j] *= scale;
  entries[attribute][value] = new_share;
  return TargetDistribution(std::move(entries));
}

// First entry strictly between 0 and 1, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> reducible_entry(
    const TargetDistribution& target) {
  for (std::size_t i = 0; i < target.entries.size(); ++i)
    for (std::size_t j = 0; j < target.entries[i].size(); ++j)
      if (target.at(i, j) > Rat(0) && target.at(i, j) < Rat(1)) return {{i, j}};
  return std::nullopt;
}

bool criterion9() {
  Criterion c(9);

  Instance qcx = catalog_instance("quota-cx");
  for (LossKind kind : kAllKinds) {
    SolveReport r = brute_force(qcx, kind, true);
    c.expect(!r.committees.empty(), "quota fixture produced no optima");
    for (const Committee& b : r.committees)
      c.expect(!check_quota(qcx.target, representation_vector(qcx.db, b)).empty(),
               std::string("a quota fixture optimum stays within quota under ") +
                   kind_name(kind));
  }

  Instance ncx = catalog_instance("nonreversal-cx");
  for (LossKind kind : kAllKinds) {
    SolveReport r = brute_force(ncx, kind, true);
    c.expect(!r.committees.empty(), "reversal fixture produced no optima");
    for (const Committee& b : r.committees)
      c.expect(!check_non_reversal(ncx.target, representation_vector(ncx.db, b)).empty(),
               std::string("a reversal fixture optimum keeps the target order under ") +
                   kind_name(kind));
  }

  const std::vector<std::vector<int>> shapes = {{2}, {3}, {2, 2}};
  int probed = 0;
  for (int t = 0; t < 80 && probed < 60; ++t) {
    const auto& shape = shapes[static_cast<std::size_t>(t) % shapes.size()];
    int k = 2 + t % 3;
    int space = 1;
    for (int d : shape) space *= d;
    RandomOptions opt;
    opt.ensure_fs = true;
    Instance inst =
        random_instance(shape, space * k, k, 9300 + static_cast<std::uint64_t>(t), opt);
    auto entry = reducible_entry(inst.target);
    if (!entry) continue;
    TargetDistribution reduced = reduce_entry(inst.target, entry->first, entry->second);
    for (LossKind kind : kAllKinds) {
      SolveReport fs = solve_full_supply(inst, kind);
      RepresentationVector rep = representation_vector(inst.db, fs.committees[0]);
      c.expect(check_non_reversal(inst.target, rep).empty(),
               std::string("full-supply committee reverses the target order under ") +
                   kind_name(kind) + " (trial " + std::to_string(t) + ")");
      c.expect(check_quota(inst.target, rep).empty(),
               std::string("full-supply committee breaks quota under ") + kind_name(kind) +
                   " (trial " + std::to_string(t) + ")");
      auto pm =
          population_monotonicity_probe(inst, reduced, entry->first, entry->second, kind);
      c.expect(pm.holds, std::string("population monotonicity failed under ") + kind_name(kind) +
                             " on full-supply trial " + std::to_string(t));
    }
    ++probed;
  }
  c.expect(probed >= 50, "only " + std::to_string(probed) + " full-supply instances probed");

  // Search small vote vectors for a committee-growth seat drop, then make
  // the probe confirm it on the induced single-attribute instance.
  struct Paradox {
    std::vector<long long> votes;
    int k = 0;
  };
  std::optional<Paradox> found;
  for (int parties = 2; parties <= 4 && !found; ++parties) {
    std::vector<long long> cur(static_cast<std::size_t>(parties), 1);
    while (!found) {
      std::vector<Rat> w(cur.begin(), cur.end());
      for (int k = 2; k <= 11 && !found; ++k) {
        ApportionmentResult r1 = largest_remainder(w, k);
        if (r1.all_tied.size() != 1) continue;
        ApportionmentResult r2 = largest_remainder(w, k + 1);
        if (r2.all_tied.size() != 1) continue;
        for (int j = 0; j < parties; ++j)
          if (r2.canonical[static_cast<std::size_t>(j)] <
              r1.canonical[static_cast<std::size_t>(j)]) {
            found = Paradox{cur, k};
            break;
          }
      }
      int i = parties - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == 8) --i;
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < parties; ++j) cur[static_cast<std::size_t>(j)] =
          cur[static_cast<std::size_t>(i)];
    }
  }
  c.expect(found.has_value(), "no seat-drop vote vector found with <= 4 parties and k <= 12");
  std::string paradox_note = "none";
  if (found) {
    std::vector<Rat> w(found->votes.begin(), found->votes.end());
    ApportionmentResult r1 = largest_remainder(w, found->k);
    ApportionmentResult r2 = largest_remainder(w, found->k + 1);
    long long total = 0;
    for (long long v : found->votes) total += v;

    const int parties = static_cast<int>(found->votes.size());
    std::vector<std::string> labels;
    for (int j = 1; j <= parties; ++j) labels.push_back("p" + std::to_string(j));
    std::vector<CandidateDatabase::Candidate> rows;
    std::vector<Rat> pi;
    for (int j = 0; j < parties; ++j) {
      int supply = std::max(r1.canonical[static_cast<std::size_t>(j)],
                            r2.canonical[static_cast<std::size_t>(j)]);
      for (int i = 0; i < supply; ++i)
        rows.push_back({labels[static_cast<std::size_t>(j)] + "_" + std::to_string(i), {j}});
      pi.push_back(Rat(found->votes[static_cast<std::size_t>(j)], total));
    }
    Instance inst(CandidateDatabase(AttributeSchema({{"party", labels}}), std::move(rows)),
                  TargetDistribution({pi}), found->k);
    HouseMonotonicityResult hm = house_monotonicity_probe(inst, found->k + 1, LossKind::L1);
    c.expect(!hm.holds && hm.witness.has_value(),
             "probe did not flag the located seat-drop instance");

    std::ostringstream note;
    note << "votes (";
    for (std::size_t j = 0; j < found->votes.size(); ++j)
      note << (j ? "," : "") << found->votes[j];
    note << ") at k=" << found->k << "->" << found->k + 1;
    paradox_note = note.str();
  }
  return c.finish("counterexample fixtures violate their property at every optimum, " +
                  std::to_string(probed) +
                  " full-supply probes are clean, and a seat-drop paradox was located: " +
                  paradox_note);
}

// -------------------------------------------------------------------------
// 10. Determinism: repeat runs are byte-identical and every catalog
//     instance round-trips through the file format unchanged.

bool criterion10() {
  Criterion c(10);
  auto snapshot = [](int which) -> std::string {
    switch (which) {
      case 0: {
        Instance inst = catalog_instance("intro");
        return solve_report_json(inst, LossKind::L1, brute_force(inst, LossKind::L1, true))
            .dump(2);
      }
      case 1: {
        Instance inst = catalog_instance("fs-illustration");
        return solve_report_json(inst, LossKind::L1, solve_full_supply(inst, LossKind::L1))
            .dump(2);
      }
      case 2: {
        Instance inst = catalog_instance("fs-illustration");
        LocalSearchOptions o;
        o.radius = 2;
        o.seed = 17;
        return solve_report_json(inst, LossKind::L1, local_search(inst, LossKind::L1, o))
            .dump(2);
      }
      case 3: {
        Instance inst = catalog_instance("intro");
        return solve_report_json(inst, LossKind::LMax,
                                 solve_buckets_optimal(inst, LossKind::LMax))
            .dump(2);
      }
      case 4: {
        Instance inst = catalog_instance("ilp-feasible");
        return solve_report_json(inst, std::nullopt, perfect_committee(inst)).dump(2);
      }
      case 5: {
        Instance inst = random_instance({2, 3}, 12, 4, 777);
        LocalSearchOptions o;
        o.radius = 1;
        o.seed = 9;
        return solve_report_json(inst, LossKind::L1Max,
                                 local_search(inst, LossKind::L1Max, o))
            .dump(2);
      }
      default: {
        std::vector<Rat> w{Rat(7), Rat(4), Rat(1)};
        return apportion_report_json(w, 4, QuotaKind::Hare, largest_remainder(w, 4)).dump(2);
      }
    }
  };
  for (int which = 0; which < 7; ++which)
    c.expect(snapshot(which) == snapshot(which),
             "run " + std::to_string(which) + " is not byte-identical on repeat");

  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "mapr_acceptance_intro.json";
  {
    std::ofstream out(path);
    out << serialize_instance(catalog_instance("intro"));
  }
  auto cli_once = [&path]() {
    std::ostringstream out, err;
    int code = cli::run({"solve", path.string(), "--algo", "local", "--loss", "l1", "--l", "2",
                         "--seed", "11"},
                        out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  std::string first = cli_once();
  c.expect(first == cli_once(), "CLI invocation differs between identical runs");
  c.expect(first.rfind("0\n", 0) == 0, "CLI invocation failed");
  std::error_code ec;
  fs::remove(path, ec);

  int round_trips = 0;
  for (const std::string& name : catalog_names()) {
    std::string once = serialize_instance(catalog_instance(name));
    c.expect(once == serialize_instance(parse_instance(once)),
             "catalog instance '" + name + "' changed bytes on a round trip");
    ++round_trips;
  }
  return c.finish("repeat solver runs are byte-identical and all " +
                  std::to_string(round_trips) + " catalog instances round-trip unchanged");
}

}  // namespace

int main() {
  int passed = 0;
  passed += criterion1() ? 1 : 0;
  passed += criterion2() ? 1 : 0;
  passed += criterion3() ? 1 : 0;
  passed += criterion4() ? 1 : 0;
  passed += criterion5() ? 1 : 0;
  passed += criterion6() ? 1 : 0;
  passed += criterion7() ? 1 : 0;
  passed += criterion8() ? 1 : 0;
  passed += criterion9() ? 1 : 0;
  passed += criterion10() ? 1 : 0;
  std::cout << passed << " of 10 criteria passed\n";
  return passed == 10 ? 0 : 1;
}
