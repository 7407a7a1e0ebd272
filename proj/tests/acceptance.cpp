// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or runs over its time budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "generators.hpp"
#include "measlat/cli/commands.hpp"
#include "measlat/decomposition.hpp"
#include "measlat/oracle.hpp"

namespace {

using namespace measlat;
using measlat::testing::Gen;
using measlat::testing::space_of;

const std::string kFixtures = MEASLAT_FIXTURES_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
};

#define REQUIRE(cond, msg)                                                                                         \
  do {                                                                                                             \
    if (!(cond))                                                                                                   \
      return Outcome{false, msg};                                                                                  \
  } while (0)

std::string describe(const Measure& m) { return "(" + m.to_string() + ")"; }

// 1
Outcome dirac_min_max_tables() {
  const cli::Options opts;
  std::ostringstream out, err;
  int code = cli::cmd_check(kFixtures + "/example1.json", kFixtures + "/example1_min_table.json", opts, out, err);
  REQUIRE(code == 1 && out.str() == "FAIL witness a|b: 0 + 0 != 1\n", "min table: exit " + std::to_string(code) +
                                                                          " output " + out.str() + err.str());
  std::ostringstream out2, err2;
  code = cli::cmd_check(kFixtures + "/example1.json", kFixtures + "/example1_max_table.json", opts, out2, err2);
  REQUIRE(code == 1 && out2.str() == "FAIL witness a|b: 1 + 1 != 1\n", "max table: exit " + std::to_string(code) +
                                                                           " output " + out2.str() + err2.str());
  return {true, "min: 0 + 0 != 1, max: 1 + 1 != 1 at {a,b}"};
}

// 2
Outcome dirac_meet() {
  const auto space = space_of(2);
  const Measure da = dirac(space, 0), db = dirac(space, 1);
  const Measure m = meet2(da, db);
  REQUIRE(m == zero_measure(space), "meet2 = " + describe(m));
  std::size_t sets = 0;
  for (const auto& a : enumerate_sets(space)) {
    const auto w = oracle_meet2(da, db, a);
    REQUIRE(w.value == ExtNonneg::zero() && eval(m, a) == w.value, "oracle disagrees on " + a.to_string());
    ++sets;
  }
  return {true, "zero measure, oracle agrees on " + std::to_string(sets) + " sets"};
}

bool binary_agrees(const Measure& m, const Measure& n, std::string& why) {
  const Measure lo = meet2(m, n), hi = join2(m, n);
  for (const auto& a : enumerate_sets(m.space())) {
    if (eval(lo, a) != oracle_meet2(m, n, a).value) {
      why = "meet2 on " + describe(m) + " " + describe(n) + " at " + a.to_string();
      return false;
    }
    if (eval(hi, a) != oracle_join2(m, n, a).value) {
      why = "join2 on " + describe(m) + " " + describe(n) + " at " + a.to_string();
      return false;
    }
  }
  return true;
}

// 3
Outcome binary_oracle_grid() {
  std::size_t pairs = 0;
  std::string why;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = testing::all_measures(space_of(n), testing::grid5());
    for (const auto& m : all)
      for (const auto& k : all) {
        REQUIRE(binary_agrees(m, k, why), why);
        ++pairs;
      }
  }
  const auto space4 = space_of(4);
  const auto all4 = testing::all_measures(space4, testing::grid5());
  Gen gen(3);
  for (int i = 0; i < 10000; ++i) {
    const auto& m = all4[gen.index(all4.size())];
    const auto& k = all4[gen.index(all4.size())];
    REQUIRE(binary_agrees(m, k, why), why);
    ++pairs;
  }
  return {true, std::to_string(pairs) + " pairs (exhaustive n<=3, 10000 sampled at n=4)"};
}

// Every multiset of at most three grid4 measures on n <= 3 atoms, in a
// fixed order, handed to `visit`.
template <class Visit>
bool for_each_grid_family(Visit&& visit) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = testing::all_measures(space_of(n), testing::grid4());
    const std::size_t k = all.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!visit(MeasureFamily({all[i]})))
        return false;
      for (std::size_t j = i; j < k; ++j) {
        if (!visit(MeasureFamily({all[i], all[j]})))
          return false;
        for (std::size_t l = j; l < k; ++l)
          if (!visit(MeasureFamily({all[i], all[j], all[l]})))
            return false;
      }
    }
  }
  return true;
}

std::string describe(const MeasureFamily& f) {
  std::string s;
  for (const auto& m : f.members())
    s += describe(m);
  return s;
}

bool family_agrees(const MeasureFamily& f, std::string& why) {
  const Measure lo = meet_family(f), hi = join_family(f);
  for (const auto& a : enumerate_sets(f.space())) {
    const auto ml = oracle_family_meet(f, a);
    if (eval(lo, a) != ml.value) {
      why = "meet_family on " + describe(f) + " at " + a.to_string() + ", oracle " + ml.value.to_string() + " via " +
            ml.witness.to_string(f);
      return false;
    }
    const auto jl = oracle_family_join(f, a);
    if (eval(hi, a) != jl.value) {
      why = "join_family on " + describe(f) + " at " + a.to_string() + ", oracle " + jl.value.to_string() + " via " +
            jl.witness.to_string(f);
      return false;
    }
  }
  return true;
}

// 4
Outcome family_oracle_grid() {
  std::size_t families = 0;
  std::string why;
  const bool grid_ok = for_each_grid_family([&](const MeasureFamily& f) {
    ++families;
    return family_agrees(f, why);
  });
  REQUIRE(grid_ok, why);
  const std::size_t grid = families;
  Gen gen(4);
  for (int i = 0; i < 1000; ++i) {
    const auto space = space_of(1 + gen.index(4));
    const auto f = gen.family(space, 1 + gen.index(3));
    REQUIRE(family_agrees(f, why), why);
    ++families;
  }
  return {true, std::to_string(grid) + " grid families + " + std::to_string(families - grid) + " random"};
}

// 5
Outcome lattice_laws() {
  Gen gen(5);
  std::size_t instances = 0;
  for (int i = 0; i < 5000; ++i) {
    const auto space = space_of(1 + gen.index(4));
    const Measure a = gen.measure(space), b = gen.measure(space), c = gen.measure(space);
    const std::string ctx = describe(a) + " " + describe(b) + " " + describe(c);
    REQUIRE(meet2(a, b) == meet2(b, a) && join2(a, b) == join2(b, a), "commutativity " + ctx);
    REQUIRE(meet2(meet2(a, b), c) == meet2(a, meet2(b, c)), "meet associativity " + ctx);
    REQUIRE(join2(join2(a, b), c) == join2(a, join2(b, c)), "join associativity " + ctx);
    REQUIRE(meet2(a, a) == a && join2(a, a) == a, "idempotence " + ctx);
    REQUIRE(meet2(a, join2(a, b)) == a && join2(a, meet2(a, b)) == a, "absorption " + ctx);

    const Measure lo = meet2(a, b), hi = join2(a, b);
    REQUIRE(leq(lo, a) && leq(lo, b) && leq(a, hi) && leq(b, hi), "bound " + ctx);
    // c is below a and b exactly when it is below their meet, dually for join.
    REQUIRE((leq(c, a) && leq(c, b)) == leq(c, lo), "meet universality " + ctx);
    REQUIRE((leq(a, c) && leq(b, c)) == leq(hi, c), "join universality " + ctx);
    const Measure under = gen.below(lo);
    REQUIRE(leq(under, lo), "sampled lower bound " + ctx);

    const MeasureFamily f({a, b, c});
    const auto glb = oracle_is_glb(meet_family(f), f, 1000, static_cast<std::uint64_t>(i));
    REQUIRE(glb.is_glb, "oracle_is_glb " + ctx);
    const auto lub = oracle_is_lub(join_family(f), f, 1000, static_cast<std::uint64_t>(i));
    REQUIRE(lub.is_glb, "oracle_is_lub " + ctx);
    ++instances;
  }
  return {true, std::to_string(instances) + " instances, 1000 sampled bounds each"};
}

// 6
Outcome jordan_route() {
  Gen gen(6);
  std::size_t finite = 0, undefined = 0;
  while (finite < 5000 || undefined < 1000) {
    const auto space = space_of(1 + gen.index(4));
    const Measure n = gen.measure(space, 0.2);
    if (finite < 5000) {
      const Measure m = gen.finite_measure(space);
      REQUIRE(meet_via_jordan(m, n) == meet2(m, n), "meet_via_jordan " + describe(m) + " " + describe(n));
      REQUIRE(join_via_jordan(m, n) == join2(m, n), "join_via_jordan " + describe(m) + " " + describe(n));
      ++finite;
    }
    Measure m = gen.measure(space, 0.3);
    if (m.is_finite())
      continue;
    bool threw = false;
    try {
      (void)sub_measures(n, m);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::UndefinedDifference;
    }
    REQUIRE(threw, "no UndefinedDifference for " + describe(n) + " - " + describe(m));
    ++undefined;
  }
  return {true, std::to_string(finite) + " finite pairs agree, " + std::to_string(undefined) +
                    " infinite pairs raise UndefinedDifference"};
}

// 7
Outcome jordan_hahn_grid() {
  std::size_t measures = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto space = space_of(n);
    for (const auto& s : testing::all_signed(space, testing::signed_grid5())) {
      const std::string ctx = s.to_string();
      const JordanPair jp = jordan_decompose(s);
      const HahnDecomposition h = hahn_decompose(s);
      REQUIRE(reconstruct(jp) == s, "reconstruction " + ctx);
      REQUIRE(is_disjoint(h.positive_set, h.negative_set) && unite(h.positive_set, h.negative_set) == space.full_set(),
              "hahn sets do not partition X for " + ctx);
      REQUIRE(eval(jp.positive, h.negative_set).is_zero() && eval(jp.negative, h.positive_set).is_zero(),
              "parts not singular for " + ctx);
      for (const auto& a : enumerate_sets(space)) {
        REQUIRE(sup_over_subsets(s, a) == ExtSigned(eval(jp.positive, a)), "positive part at " + a.to_string() + " " + ctx);
        const ExtNonneg neg = eval(jp.negative, a);
        REQUIRE(neg.is_finite() && inf_over_subsets(s, a) == ExtSigned(Rational(-neg.value())),
                "negative part at " + a.to_string() + " " + ctx);
      }
      ++measures;
    }
  }
  return {true, std::to_string(measures) + " signed measures, n <= 4"};
}

// 8
Outcome index_partition_coincidence() {
  std::size_t families = 0;
  std::string why;
  const bool ok = for_each_grid_family([&](const MeasureFamily& f) {
    ++families;
    const Measure lo = meet_family(f);
    for (const auto& a : enumerate_sets(f.space())) {
      if (index_partition_formula(f, a) != eval(lo, a)) {
        why = "index partition on " + describe(f) + " at " + a.to_string();
        return false;
      }
    }
    return true;
  });
  REQUIRE(ok, why);
  return {true, std::to_string(families) + " grid families agree on every set"};
}

// 9
Outcome order_extremes() {
  Gen gen(9);
  for (std::size_t n = 0; n <= 4; ++n)
    REQUIRE(eval(infinity_measure(space_of(n)), space_of(n).empty_set()).is_zero(), "infinity_measure(empty) != 0");
  for (int i = 0; i < 10000; ++i) {
    const auto space = space_of(gen.index(5));
    const Measure m = gen.measure(space, 0.25);
    REQUIRE(leq(zero_measure(space), m) && leq(m, infinity_measure(space)), "extremes violated by " + describe(m));
  }
  return {true, "10000 measures between zero and infinity"};
}

// 10
Outcome double_sums() {
  Gen gen(10);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t rows = 1 + gen.index(6), cols = 1 + gen.index(6);
    std::vector<std::vector<ExtNonneg>> grid(rows);
    for (auto& row : grid)
      for (std::size_t c = 0; c < cols; ++c)
        row.push_back(gen.nonneg(0.1));
    std::vector<ExtNonneg> row_sums, col_sums;
    for (const auto& row : grid)
      row_sums.push_back(sum(row));
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<ExtNonneg> column;
      for (const auto& row : grid)
        column.push_back(row[c]);
      col_sums.push_back(sum(column));
    }
    REQUIRE(sum(row_sums) == sum(col_sums), "grid " + std::to_string(i) + ": " + sum(row_sums).to_string() +
                                                " != " + sum(col_sums).to_string());
  }
  return {true, "1000 grids"};
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "pointwise min/max tables are not measures", 1, dirac_min_max_tables},
      {2, "meet of two Diracs is zero", 60, dirac_meet},
      {3, "binary meet/join match the set oracle", 60, binary_oracle_grid},
      {4, "family meet/join match the partition oracle", 120, family_oracle_grid},
      {5, "complete lattice laws", 60, lattice_laws},
      {6, "Jordan route matches meet2/join2", 60, jordan_route},
      {7, "Jordan/Hahn decomposition", 60, jordan_hahn_grid},
      {8, "index partition formula coincides on finite data", 120, index_partition_coincidence},
      {9, "zero and infinity are the extremes", 60, order_extremes},
      {10, "row-major and column-major sums agree", 60, double_sums},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) {
      outcome.ok = false;
      outcome.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    failures += outcome.ok ? 0 : 1;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << seconds;
    std::cout << "criterion " << c.number << ": " << (outcome.ok ? "PASS" : "FAIL") << "  " << c.name << "  ["
              << outcome.detail << "; " << time.str() << " s]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
