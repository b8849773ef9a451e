#include "support.hpp"

#include <gtest/gtest.h>

using namespace fixtures;

namespace {

bool has_clause(const ValidationResult& r, Clause c) {
  for (const auto& v : r.violations)
    if (v.clause == c) return true;
  return false;
}

}  // namespace

TEST(SideValues, Examples) {
  EXPECT_EQ(side_values(plateau_spec(), q(1, 2)), (SideValues{fin(3), fin(5)}));
  EXPECT_EQ(side_values(three_two(), q(0)).left, fin(1));
  EXPECT_EQ(side_values(three_two(), q(1)).right, fin(1));
  // 1/4 is in the Cantor set; nearby off-set points carry omega on both sides
  EXPECT_EQ(side_values(cantor_overlay(), q(1, 4)), (SideValues{Card::omega(), Card::omega()}));
}

TEST(ConditionAt, Examples) {
  const auto v = condition_at(StepSpec::constant(fin(2)), q(1, 2), Region::Inside);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->clause, Clause::StarParity);

  const StepSpec f = three_two();
  EXPECT_FALSE(condition_at(f, q(0), Region::Boundary));

  const StepSpec spike = spec({q(0), q(1, 2), q(1)}, {fin(1), fin(1)}, {fin(1), Card::omega(), fin(1)});
  const auto w = condition_at(spike, q(1, 2), Region::Inside);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->clause, Clause::DoubleStar);
}

TEST(ConditionAt, ParityByRegion) {
  // sides 3 and 1 at a level with value 2: equality with odd sides
  const StepSpec f = spec({q(0), q(1, 2), q(1)}, {fin(3), fin(1)}, {fin(2), fin(2), fin(1)});
  EXPECT_FALSE(condition_at(f, q(1, 2), Region::Inside));
  const auto below = condition_at(f, q(1, 2), Region::Below);
  ASSERT_TRUE(below);
  EXPECT_EQ(below->clause, Clause::StarParity);
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(StepSpec::constant(fin(1))).ok());
  EXPECT_TRUE(validate(three_two()).ok());
  EXPECT_TRUE(validate(five_three()).ok());

  const ValidationResult two = validate(StepSpec::constant(fin(2)));
  EXPECT_FALSE(two.ok());
  EXPECT_TRUE(has_clause(two, Clause::StarParity));

  const StepSpec bad_overlay({q(0), q(1)}, {fin(3)}, {fin(2), fin(2)},
                             {Overlay{0, CSet({CComponent::cantor(q(0), q(1))})}});
  const ValidationResult r = validate(bad_overlay);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_clause(r, Clause::OverlayRule));
}

TEST(Validate, InfiniteProfiles) {
  EXPECT_TRUE(validate(omega()).ok());
  EXPECT_TRUE(validate(continuum()).ok());
  EXPECT_TRUE(validate(cantor_overlay()).ok());
  const ValidationResult p = validate(plateau_spec());
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p.certificate->exceptional.size(), 1u);
  EXPECT_EQ(p.certificate->exceptional[0], q(1, 2));
}

TEST(Validate, Endpoints) {
  const StepSpec tent = spec({q(0), q(1, 2), q(1)}, {fin(2), fin(2)}, {fin(1), fin(3), fin(1)});
  EXPECT_TRUE(validate(tent, q(1, 2), q(1, 2)).ok());
  EXPECT_FALSE(validate(tent).ok());
  // reflection of an accepted profile stays accepted
  const ValidationResult r = validate(three_two(), q(1), q(0));
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.certificate->reflected);
  // F(0) = F(1) = a forces at least two preimages at a
  EXPECT_FALSE(validate(StepSpec::constant(fin(1)), q(1, 2), q(1, 2)).ok());
  EXPECT_THROW(validate(three_two(), q(2), q(0)), SpecError);
}

TEST(IsSimplePre, Examples) {
  EXPECT_FALSE(is_simple_pre(three_two()));
  const auto lone_two = is_simple_pre(spec({q(0), q(1, 2), q(1)}, {fin(1), fin(1)}, {fin(1), fin(2), fin(1)}));
  ASSERT_TRUE(lone_two);
  EXPECT_EQ(lone_two->clause, Clause::SimpleEndpoint);
  const auto spike = is_simple_pre(spec({q(0), q(1, 2), q(1)}, {fin(1), fin(1)}, {fin(1), fin(3), fin(1)}));
  ASSERT_TRUE(spike);
  EXPECT_EQ(spike->clause, Clause::SimpleOpen);
  for (const auto& p : example_stream()) EXPECT_FALSE(is_simple_pre(p));
}

TEST(HatSpec, Examples) {
  EXPECT_EQ(hat_spec(three_two(), q(0), q(1)), three_two());
  const StepSpec tent = spec({q(0), q(1, 2), q(1)}, {fin(2), fin(2)}, {fin(1), fin(3), fin(1)});
  EXPECT_EQ(hat_spec(tent, q(1, 2), q(1, 2)).normalized(), StepSpec::constant(fin(1)));
  const StepSpec g = spec({q(0), q(1, 3), q(2, 3), q(1)}, {fin(2), fin(1), fin(2)}, {fin(1), fin(2), fin(2), fin(1)});
  EXPECT_EQ(hat_spec(g, q(1, 3), q(2, 3)).normalized(), StepSpec::constant(fin(1)));
  EXPECT_THROW(hat_spec(StepSpec::constant(fin(1)), q(1, 3), q(2, 3)), SpecError);
}

// Every continuous PLF's indicatrix must be accepted with its own endpoint values.
TEST(ValidateProperty, AcceptsEveryPlfIndicatrix) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Plf g = random_plf(rng, 8);
    const ValidationResult r = validate(plf_indicatrix(g), g.front().y, g.back().y);
    ASSERT_TRUE(r.ok()) << plf_indicatrix(g).str() << " a=" << g.front().y << " b=" << g.back().y << ": "
                        << r.violations.front().str();
  }
}
