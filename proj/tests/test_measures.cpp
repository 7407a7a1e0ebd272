#include <gtest/gtest.h>

#include "generators.hpp"
#include "measlat/measures.hpp"
#include "measlat/oracle.hpp"

namespace measlat {
namespace {

using testing::space_of;

const ExtNonneg kInf = ExtNonneg::infinity();

bool leq_by_sets(const Measure& m, const Measure& n) {
  for (const auto& a : enumerate_sets(m.space()))
    if (eval(m, a) > eval(n, a))
      return false;
  return true;
}

TEST(Eval, Examples) {
  const auto x = space_of(2);
  EXPECT_EQ(eval(dirac(x, 0), x.full_set()), ExtNonneg(1));
  EXPECT_EQ(eval(make_measure(x, {ExtNonneg(3), ExtNonneg(4)}), x.empty_set()), ExtNonneg(0));
  EXPECT_EQ(eval(make_measure(x, {ExtNonneg(Rational(1, 2)), kInf}), x.full_set()), kInf);
}

TEST(Eval, SpaceMismatch) {
  const auto x = space_of(2);
  const MeasurableSpace y({"p", "q"});
  EXPECT_THROW(eval(dirac(x, 0), y.full_set()), Error);
}

TEST(Measure, RejectsWrongWeightCount) {
  EXPECT_THROW(make_measure(space_of(2), {ExtNonneg(1)}), Error);
}

TEST(Leq, Examples) {
  const auto x = space_of(2);
  const Measure da = dirac(x, 0);
  const Measure db = dirac(x, 1);
  EXPECT_TRUE(leq(zero_measure(x), da));
  EXPECT_TRUE(leq(da, infinity_measure(x)));
  EXPECT_FALSE(leq(da, db));
  EXPECT_FALSE(leq(db, da));
  // Frozen by comparing all four sets of the two-atom space.
  EXPECT_FALSE(leq_by_sets(da, db));
  EXPECT_FALSE(leq_by_sets(db, da));
}

TEST(Leq, AtomwiseEqualsSetwiseExhaustive) {
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto ms = testing::all_measures(space_of(n), testing::grid5());
    for (const auto& m : ms)
      for (const auto& k : ms)
        ASSERT_EQ(leq(m, k), leq_by_sets(m, k)) << m.to_string() << " vs " << k.to_string();
  }
  testing::Gen gen(3);
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto x = space_of(n);
    for (int i = 0; i < 300; ++i) {
      const Measure m = gen.measure(x);
      const Measure k = gen.bernoulli() ? gen.below(m) : gen.measure(x);
      ASSERT_EQ(leq(m, k), leq_by_sets(m, k));
      ASSERT_EQ(leq(k, m), leq_by_sets(k, m));
    }
  }
}

TEST(Leq, PartialOrderLaws) {
  testing::Gen gen(5);
  for (int i = 0; i < 2000; ++i) {
    const auto x = space_of(1 + gen.index(4));
    const Measure a = gen.measure(x);
    const Measure b = gen.below(a);
    const Measure c = gen.below(b);
    EXPECT_TRUE(leq(a, a));
    EXPECT_TRUE(leq(c, a)) << "transitivity";
    if (leq(a, b) && leq(b, a))
      EXPECT_EQ(a, b) << "antisymmetry";
    const Measure d = gen.measure(x);
    if (leq(a, d) && leq(d, a))
      EXPECT_EQ(a, d);
  }
}

TEST(Extremes, Examples) {
  const auto x = space_of(2);
  const Measure inf = infinity_measure(x);
  EXPECT_EQ(eval(inf, x.empty_set()), ExtNonneg(0));
  EXPECT_EQ(eval(inf, x.atom(0)), kInf);
  for (const auto& a : enumerate_sets(x))
    EXPECT_EQ(eval(zero_measure(x), a), ExtNonneg(0));
  // n = 0: the infinity measure is the zero measure.
  EXPECT_EQ(infinity_measure(MeasurableSpace()), zero_measure(MeasurableSpace()));
}

TEST(Extremes, BoundEveryMeasure) {
  testing::Gen gen(8);
  for (int i = 0; i < 1000; ++i) {
    const auto x = space_of(gen.index(6));
    const Measure m = gen.measure(x);
    EXPECT_TRUE(leq(zero_measure(x), m));
    EXPECT_TRUE(leq(m, infinity_measure(x)));
  }
}

TEST(Arithmetic, AddAndScale) {
  const auto x = space_of(2);
  EXPECT_EQ(add_measures(dirac(x, 0), dirac(x, 1)), make_measure(x, {ExtNonneg(1), ExtNonneg(1)}));
  const Measure half = make_measure(x, {ExtNonneg(Rational(1, 2)), ExtNonneg(Rational(1, 2))});
  EXPECT_EQ(scale(4, half), make_measure(x, {ExtNonneg(2), ExtNonneg(2)}));
  EXPECT_EQ(scale(0, make_measure(x, {kInf, ExtNonneg(5)})), zero_measure(x));
}

TEST(SubMeasures, Examples) {
  const auto x = space_of(2);
  const auto m = [&](ExtNonneg a, ExtNonneg b) { return make_measure(x, {a, b}); };
  EXPECT_EQ(sub_measures(m(ExtNonneg(3), ExtNonneg(1)), m(ExtNonneg(1), ExtNonneg(2))),
            SignedMeasure(x, {ExtSigned(2), ExtSigned(-1)}));
  EXPECT_EQ(sub_measures(m(kInf, ExtNonneg(0)), m(ExtNonneg(0), ExtNonneg(0))),
            SignedMeasure(x, {ExtSigned::infinity(), ExtSigned(0)}));
  try {
    sub_measures(m(ExtNonneg(5), ExtNonneg(0)), m(kInf, ExtNonneg(0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedDifference);
    EXPECT_EQ(e.atom(), std::optional<std::size_t>(0));
  }
}

TEST(IsMeasure, DiracMinAndMaxAreNotMeasures) {
  const auto x = space_of(2);
  const auto min_report = is_measure(pointwise_min(dirac(x, 0), dirac(x, 1)));
  ASSERT_FALSE(min_report.is_measure);
  EXPECT_EQ(min_report.witness->set, x.full_set());
  EXPECT_EQ(min_report.witness->mismatch(), "0 + 0 != 1");

  const auto max_report = is_measure(pointwise_max(dirac(x, 0), dirac(x, 1)));
  ASSERT_FALSE(max_report.is_measure);
  EXPECT_EQ(max_report.witness->set, x.full_set());
  EXPECT_EQ(max_report.witness->mismatch(), "1 + 1 != 1");
}

TEST(IsMeasure, EmptySetMustBeZero) {
  const auto x = space_of(1);
  const auto report = is_measure(SetFunctionTable(x, {ExtNonneg(2), ExtNonneg(2)}));
  ASSERT_FALSE(report.is_measure);
  EXPECT_TRUE(report.witness->set.empty());
  EXPECT_EQ(report.witness->mismatch(), "0 != 2");
}

TEST(IsMeasure, InducedTablesAreMeasures) {
  testing::Gen gen(21);
  for (int i = 0; i < 500; ++i) {
    const Measure m = gen.measure(space_of(gen.index(6)));
    EXPECT_TRUE(is_measure(tabulate(m)).is_measure) << m.to_string();
  }
}

TEST(IsMeasure, AgreesWithPairwiseAdditivity) {
  testing::Gen gen(23);
  // Small value pool so that random tables are additive reasonably often.
  const std::vector<ExtNonneg> pool{ExtNonneg(0), ExtNonneg(1), ExtNonneg(2), kInf};
  int failures = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto x = space_of(gen.index(5));
    SetFunctionTable t = [&] {
      if (gen.index(3) == 0)
        return tabulate(gen.measure(x));
      if (gen.index(2) == 0) {
        const Measure m = gen.measure(x);
        const Measure k = gen.measure(x);
        return gen.index(2) == 0 ? pointwise_min(m, k) : pointwise_max(m, k);
      }
      std::vector<ExtNonneg> values;
      for (std::size_t s = 0; s < (std::size_t{1} << x.size()); ++s)
        values.push_back(pool[gen.index(pool.size())]);
      return SetFunctionTable(x, std::move(values));
    }();
    const bool atom_check = is_measure(t).is_measure;
    ASSERT_EQ(atom_check, oracle_pairwise_additive(t).additive);
    failures += atom_check ? 0 : 1;
  }
  EXPECT_GT(failures, 100);
}

TEST(IsMeasure, DetectsMinOfMeasuresWithDifferentArgmins) {
  testing::Gen gen(29);
  for (int i = 0; i < 500; ++i) {
    const auto x = space_of(2 + gen.index(3));
    const Measure m = gen.finite_measure(x);
    const Measure k = gen.finite_measure(x);
    // If m is strictly smaller on one atom and k on another, min(m, k)
    // undercounts their union.
    bool m_wins = false;
    bool k_wins = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      m_wins = m_wins || m.weight(j) < k.weight(j);
      k_wins = k_wins || k.weight(j) < m.weight(j);
    }
    EXPECT_EQ(is_measure(pointwise_min(m, k)).is_measure, !(m_wins && k_wins));
    EXPECT_EQ(is_measure(pointwise_max(m, k)).is_measure, !(m_wins && k_wins));
  }
}

} // namespace
} // namespace measlat
