#include "support.hpp"

#include <gtest/gtest.h>

using namespace fixtures;

namespace {

BuildOptions stages(std::size_t n, std::size_t depth = 8) {
  BuildOptions o;
  o.stages = n;
  o.seq_depth = depth;
  return o;
}

QItem item(std::size_t fam, std::size_t id, Rat lo, Rat hi) { return {fam, id, lo, hi}; }

std::vector<std::string> labels(const std::vector<QItem>& q) {
  std::vector<std::string> out;
  for (const auto& i : q) out.push_back(i.label());
  return out;
}

using Labels = std::vector<std::string>;

FamilyState ladder() {
  FamilyState s;
  s.queues = {{item(0, 0, q(0), q(1))},
              {item(1, 0, q(0), q(1, 2)), item(1, 1, q(1, 2), q(1))},
              {item(2, 0, q(0), q(1, 4)), item(2, 1, q(1, 4), q(1, 2))},
              {item(3, 0, q(0), q(1, 8))},
              {item(4, 0, q(0), q(1, 16))}};
  return s;
}

}  // namespace

TEST(BuildCountable, Examples) {
  const BuildArtifact z = build(three_two(), stages(3));
  EXPECT_EQ(z.mode, BuildMode::Countable);
  EXPECT_EQ(z.stages[1], zigzag());
  EXPECT_EQ(z.stages[3], zigzag());
  EXPECT_EQ(z.error_bound(0), q(1));
  EXPECT_EQ(z.error_bound(1), q(0));

  const BuildArtifact id = build(StepSpec::constant(fin(1)), stages(3));
  for (const Plf& g : id.stages) EXPECT_EQ(g, Plf::identity());

  const BuildArtifact f = build(five_three(), stages(3));
  EXPECT_EQ(plf_indicatrix(f.stages[2]).normalized(), five_three());
  EXPECT_EQ(f.stages[2], f.stages[3]);
  EXPECT_EQ(f.error_bound(2), q(0));
}

TEST(BuildCountable, ExampleStream) {
  SimpleStream ex = SimpleStream::from_items(example_stream());
  const BuildArtifact a = build_countable(ex, StepSpec::constant(Card::omega()), stages(3));
  const StepSpec ind = plf_indicatrix(a.stages[2]);
  const StepSpec want = spec({q(0), q(3, 4), q(1)}, {fin(5), fin(3)}, {fin(3), fin(4), fin(2)});
  EXPECT_TRUE(same_profile(ind, want)) << ind.str();
  EXPECT_TRUE(verify_artifact(a).empty());
}

TEST(BuildCountable, OmegaCounts) {
  const BuildArtifact a = build(omega(), stages(5));
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(plf_level_count(a.stages[n], q(1, 3)), static_cast<long>(2 * n + 1));
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_LE(a.error_bound(n), a.error_bound(n - 1));
  EXPECT_LE(a.error_bound(4), q(1, 4));
  const auto fails = verify_artifact(a, {q(1, 7), q(5, 11)});
  EXPECT_TRUE(fails.empty()) << fails.front();
}

TEST(BuildGeneral, ContinuumTree) {
  const BuildArtifact a = build(continuum(), stages(2, 4));
  EXPECT_EQ(a.mode, BuildMode::General);
  std::set<int> last;
  for (std::size_t r : a.rects_at(1)) last.insert(a.rects[r].d.address.back());
  EXPECT_EQ(last, (std::set<int>{0, 1, 2}));
  EXPECT_GE(plf_level_count(a.stages[2], q(1, 2)), 7);
  const auto fails = verify_artifact(a);
  EXPECT_TRUE(fails.empty()) << fails.front();
}

TEST(BuildGeneral, PointContinuumGating) {
  const StepSpec f = spec({q(0), q(1, 2), q(1)}, {Card::omega(), Card::omega()},
                          {Card::omega(), Card::continuum(), Card::omega()});
  ASSERT_TRUE(validate(f).ok());
  const BuildArtifact a = build(f, stages(3, 6));
  EXPECT_EQ(a.mode, BuildMode::General);
  std::size_t branching = 0;
  for (const Rect& r : a.rects) {
    if (!r.parent || r.d.address.back() == 0) continue;
    ++branching;
    EXPECT_TRUE(a.rects[*r.parent].d.yrange().contains(q(1, 2)));
  }
  EXPECT_GT(branching, 0u);
  const auto fails = verify_artifact(a);
  EXPECT_TRUE(fails.empty()) << fails.front();
}

TEST(FamilyStep, Shifts) {
  const FamilyState s = ladder();
  const FamilyState same = family_step(s, {}, {});
  for (std::size_t j = 0; j < s.queues.size(); ++j) EXPECT_EQ(labels(same.queues[j]), labels(s.queues[j]));

  const FamilyState one = family_step(s, {s.queues[0][0]}, {{{q(0), q(1)}, false}});
  EXPECT_EQ(labels(one.queues[0]), (Labels{"1.0", "1.1"}));
  EXPECT_EQ(labels(one.queues[1]), (Labels{"2.0", "2.1"}));
  EXPECT_EQ(labels(one.queues[2]), (Labels{"3.0"}));
  EXPECT_EQ(labels(one.queues[3]), (Labels{"4.0"}));
  EXPECT_TRUE(one.queues[4].empty());

  const std::vector<QItem> used{s.queues[0][0], s.queues[1][0], s.queues[1][1], s.queues[2][0], s.queues[2][1]};
  const FamilyState three = family_step(s, used, {{{q(0), q(1)}, true}});
  EXPECT_EQ(labels(three.queues[0]), (Labels{"3.0"}));
  EXPECT_EQ(labels(three.queues[1]), (Labels{"4.0"}));

  // 1.1 is no longer nested in queue 0 after the shift, so it is promoted
  const FamilyState partial = family_step(s, {s.queues[0][0]}, {{{q(0), q(1, 2)}, false}});
  EXPECT_EQ(labels(partial.queues[0]), (Labels{"1.0", "1.1"}));
  EXPECT_EQ(labels(partial.queues[1]), (Labels{"2.0", "2.1"}));

  EXPECT_THROW(family_step(s, {s.queues[0][0]}, {{{q(0), q(1)}, true}}), std::logic_error);
}

TEST(Branches, Examples) {
  const BuildArtifact z = build(three_two(), stages(1));
  EXPECT_EQ(branches_through(z, q(1, 2), 1).size(), 1u);

  const BuildArtifact w = build(omega(), stages(5));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = branches_through(w, q(1, 2), n);
    EXPECT_GE(c.size(), 1u);
    EXPECT_LE(c.size(), 2u);
  }
}

TEST(PerfectWitness, Examples) {
  const BuildArtifact a = build(continuum(), stages(3, 4));
  // (1,1,1,...) routes left at every branching, so its coded point is 0
  const Rat y(1, 96);
  const Witness full = perfect_witness(a, {1, 1, 1}, y, 3);
  EXPECT_TRUE(full.complete);
  EXPECT_EQ(full.leaves, 8u);
  for (const auto& [tau, r] : full.nodes) EXPECT_TRUE(a.rects[r].d.yrange().contains(y));

  const Witness single = perfect_witness(a, {0, 0, 1}, y, 3);
  EXPECT_TRUE(single.complete);
  EXPECT_EQ(single.leaves, 2u);

  EXPECT_THROW(perfect_witness(build(omega(), stages(2)), {1, 1}, q(1, 2), 2), std::invalid_argument);
}

TEST(BuilderProperty, StageLawAndBanachIdentity) {
  std::mt19937_64 rng(61);
  int built = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const StepSpec f = random_odd_spec(rng);
    if (!validate(f).ok()) continue;
    ++built;
    const BuildArtifact a = build(f, stages(5));
    for (std::size_t n = 0; n + 1 <= a.top(); ++n) {
      const StepSpec fn = stored_partial(a, n);
      ASSERT_FALSE(disagreement(plf_indicatrix(a.stages[n + 1]), fn, {})) << f.str() << " n=" << n;
      ASSERT_EQ(plf_variation(a.stages[n + 1]), integral(fn));
    }
    ASSERT_TRUE(same_profile(plf_indicatrix(a.stages.back()), f)) << f.str();
    const auto fails = verify_artifact(a);
    ASSERT_TRUE(fails.empty()) << fails.front();
  }
  EXPECT_GT(built, 10);
}
