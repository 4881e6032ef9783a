#include <gtest/gtest.h>

#include <random>

#include "aggregate.hpp"
#include "modetab/error.hpp"

using namespace modetab;
using testsupport::FrameFixture;

namespace {

PredicateKey key(const char* name, std::uint32_t arity) { return {Symbol(name), arity}; }
Term num(std::int64_t v) { return Term::integer(v); }
Term atom(const char* a) { return Term::atom(a); }
Term var(VarId v) { return Term::var(v); }

using K = InsertOutcome::Kind;

}  // namespace

TEST(ModeArray, OrdersByGroup) {
  auto m = ModeArray::compile(key("p", 3), std::vector<Mode>{Mode::All, Mode::Index, Mode::Min});
  std::vector<ModeEntry> expect{{2, Mode::Index}, {3, Mode::Min}, {1, Mode::All}};
  EXPECT_EQ(std::vector<ModeEntry>(m.entries().begin(), m.entries().end()), expect);
  EXPECT_EQ(m.mode_of(1), Mode::All);
  EXPECT_FALSE(m.is_traditional());
}

TEST(ModeArray, KeepsSourceOrderWithinAGroup) {
  auto m = ModeArray::compile(key("q", 5), std::vector<Mode>{Mode::First, Mode::Max, Mode::Index,
                                                             Mode::Min, Mode::Index});
  std::vector<ModeEntry> expect{
      {3, Mode::Index}, {5, Mode::Index}, {2, Mode::Max}, {4, Mode::Min}, {1, Mode::First}};
  EXPECT_EQ(std::vector<ModeEntry>(m.entries().begin(), m.entries().end()), expect);
}

TEST(ModeArray, RejectsTwoSumOrLastArguments) {
  EXPECT_THROW(ModeArray::compile(key("p", 2), std::vector<Mode>{Mode::Sum, Mode::Last}), ModeError);
  EXPECT_THROW(ModeArray::compile(key("p", 2), std::vector<Mode>{Mode::Sum, Mode::Sum}), ModeError);
  EXPECT_NO_THROW(ModeArray::compile(key("p", 2), std::vector<Mode>{Mode::Index, Mode::Sum}));
}

TEST(ModeArray, Traditional) {
  auto m = ModeArray::traditional(2);
  EXPECT_TRUE(m.is_traditional());
  EXPECT_EQ(m.entries()[1], (ModeEntry{2, Mode::Index}));
}

TEST(ModeNames, RoundTrip) {
  for (Mode m : {Mode::Index, Mode::First, Mode::Last, Mode::Min, Mode::Max, Mode::Sum, Mode::All}) {
    EXPECT_EQ(parse_mode(mode_name(m)), m);
  }
  EXPECT_EQ(parse_mode("avg"), std::nullopt);
}

TEST(SubstitutionArray, CountsFreshVariablesPerArgument) {
  auto m = ModeArray::compile(key("p", 3), std::vector<Mode>{Mode::Index, Mode::Index, Mode::Min});
  // p(a, f(X, Y), Z)
  auto s = build_substitution_array(
      m, std::vector<Term>{atom("a"), Term::compound("f", {var(0), var(1)}), var(2)});
  SubstitutionArray expect{{Mode::Index, 0}, {Mode::Index, 2}, {Mode::Min, 1}};
  EXPECT_EQ(s, expect);
  EXPECT_EQ(total_vars(s), 3u);
  EXPECT_EQ(compact(s), (SubstitutionArray{{Mode::Index, 2}, {Mode::Min, 1}}));
}

TEST(SubstitutionArray, RepeatedVariableCountsOnce) {
  auto m = ModeArray::compile(key("p", 2), std::vector<Mode>{Mode::Index, Mode::Max});
  auto s = build_substitution_array(m, std::vector<Term>{var(0), var(0)});
  EXPECT_EQ(s, (SubstitutionArray{{Mode::Index, 1}, {Mode::Max, 0}}));
}

TEST(Preferable, MinAndMax) {
  EXPECT_EQ(preferable(Mode::Min, num(5), num(3)), Preference::Replace);
  EXPECT_EQ(preferable(Mode::Min, num(3), num(5)), Preference::KeepOld);
  EXPECT_EQ(preferable(Mode::Min, num(3), Term::floating(3.0)), Preference::Tie);
  EXPECT_EQ(preferable(Mode::Max, num(3), num(5)), Preference::Replace);
  EXPECT_EQ(preferable(Mode::Max, atom("b"), atom("a")), Preference::KeepOld);
}

TEST(Insert, MinKeepsTheSmallest) {
  FrameFixture f({Mode::Index, Mode::Min});
  EXPECT_EQ(f.insert({atom("d"), num(5)}).kind, K::New);
  auto r = f.insert({atom("d"), num(3)});
  EXPECT_EQ(r.kind, K::Replaced);
  EXPECT_EQ(r.invalidated, 1u);
  EXPECT_EQ(f.insert({atom("d"), num(4)}).kind, K::Rejected);
  EXPECT_EQ(f.insert({atom("d"), num(3)}).kind, K::Rejected);
  EXPECT_EQ(f.insert({atom("e"), num(9)}).kind, K::New);
  EXPECT_EQ(dump_chain(*f.frame), "d 5 [invalid]\nd 3 [valid]\ne 9 [valid]\n");
}

TEST(Insert, MinWithAllKeepsEveryTiedWitness) {
  FrameFixture f({Mode::Index, Mode::Min, Mode::All});
  EXPECT_EQ(f.insert({atom("d"), num(5), atom("x")}).kind, K::New);
  EXPECT_EQ(f.insert({atom("d"), num(5), atom("y")}).kind, K::Added);
  EXPECT_EQ(f.insert({atom("d"), num(7), atom("z")}).kind, K::Rejected);
  auto r = f.insert({atom("d"), num(4), atom("w")});
  EXPECT_EQ(r.kind, K::Replaced);
  EXPECT_EQ(r.invalidated, 2u);
  EXPECT_EQ(f.insert({atom("d"), num(4), atom("v")}).kind, K::Added);
  auto valid = f.valid();
  EXPECT_EQ(valid.size(), 2u);
  EXPECT_TRUE(valid.count({atom("d"), num(4), atom("w")}));
  EXPECT_TRUE(valid.count({atom("d"), num(4), atom("v")}));
}

TEST(Insert, SumAccumulates) {
  FrameFixture f({Mode::Index, Mode::Sum});
  EXPECT_EQ(f.insert({atom("k"), num(2)}).kind, K::New);
  auto r = f.insert({atom("k"), num(1)});
  EXPECT_EQ(r.kind, K::SumUpdated);
  ASSERT_TRUE(r.total);
  EXPECT_EQ(*r.total, num(3));
  EXPECT_EQ(f.valid().size(), 1u);
  EXPECT_TRUE(f.valid().count({atom("k"), num(3)}));
  // a float contribution turns the total into a float
  f.insert({atom("k"), Term::floating(0.5)});
  EXPECT_TRUE(f.valid().count({atom("k"), Term::floating(3.5)}));
}

TEST(Insert, SumErrors) {
  FrameFixture f({Mode::Index, Mode::Sum});
  EXPECT_THROW(f.insert({atom("k"), atom("x")}), TypeError);
  EXPECT_THROW(f.insert({atom("k"), var(0)}), InstantiationError);
  f.insert({atom("k"), num(INT64_MAX)});
  EXPECT_THROW(f.insert({atom("k"), num(1)}), EvaluationError);
}

TEST(Insert, FirstAndLast) {
  FrameFixture first({Mode::Index, Mode::First});
  EXPECT_EQ(first.insert({atom("k"), num(1)}).kind, K::New);
  EXPECT_EQ(first.insert({atom("k"), num(2)}).kind, K::Rejected);
  EXPECT_TRUE(first.valid().count({atom("k"), num(1)}));

  FrameFixture last({Mode::Index, Mode::Last});
  EXPECT_EQ(last.insert({atom("k"), num(1)}).kind, K::New);
  EXPECT_EQ(last.insert({atom("k"), num(2)}).kind, K::Replaced);
  EXPECT_EQ(last.insert({atom("k"), num(2)}).kind, K::Rejected);
  EXPECT_EQ(last.valid().size(), 1u);
  EXPECT_TRUE(last.valid().count({atom("k"), num(2)}));
}

TEST(Insert, IndexOnlyIsVariantTabling) {
  FrameFixture f({Mode::Index, Mode::Index});
  EXPECT_EQ(f.insert({atom("a"), var(0)}).kind, K::New);
  EXPECT_EQ(f.insert({atom("a"), var(5)}).kind, K::Rejected);
  EXPECT_EQ(f.insert({atom("a"), num(1)}).kind, K::New);
  EXPECT_EQ(f.valid().size(), 2u);
}

TEST(Insert, RejectionLeavesTheTableUntouched) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> key_d(0, 3), val_d(0, 9);
  for (Mode agg : {Mode::Min, Mode::Max, Mode::First, Mode::Last}) {
    FrameFixture f({Mode::Index, agg});
    for (int i = 0; i < 300; ++i) {
      std::string before = dump_chain(*f.frame);
      auto nodes = f.frame->answers().node_count();
      auto r = f.insert({num(key_d(rng)), num(val_d(rng))});
      if (r.kind == K::Rejected) {
        ASSERT_EQ(dump_chain(*f.frame), before);
        ASSERT_EQ(f.frame->answers().node_count(), nodes);
      }
    }
  }
}

TEST(Insert, InvalidationStaysInsideTheKeySegment) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> key_d(0, 4), val_d(0, 20);
  for (Mode agg : {Mode::Min, Mode::Max, Mode::Last, Mode::Sum}) {
    FrameFixture f({Mode::Index, agg});
    for (int i = 0; i < 300; ++i) {
      std::int64_t k = key_d(rng);
      std::vector<AnswerLeaf*> other_keys;
      for (AnswerLeaf* l = next_valid(*f.frame, nullptr); l; l = next_valid(*f.frame, l)) {
        if (!(answer_terms(*l)[0] == num(k))) other_keys.push_back(l);
      }
      f.insert({num(k), num(val_d(rng))});
      for (AnswerLeaf* l : other_keys) ASSERT_TRUE(l->valid) << "key " << k << " touched another key";
    }
  }
}

TEST(Insert, CompletedTableRefusesInserts) {
  FrameFixture f({Mode::Index, Mode::Min});
  f.insert({atom("a"), num(1)});
  complete_table(*f.frame);
  EXPECT_THROW(f.insert({atom("a"), num(0)}), StructureError);
}

class AggregationSuite : public ::testing::TestWithParam<std::vector<Mode>> {};

TEST_P(AggregationSuite, MatchesStraightLineFold) {
  const auto modes = GetParam();
  std::mt19937_64 rng(1000 + static_cast<int>(modes[1]) * 10 + static_cast<int>(modes.size()));
  std::uniform_int_distribution<int> len_d(1, 40), key_d(0, 5), val_d(-10, 10), all_d(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    FrameFixture f(modes);
    std::vector<std::vector<std::int64_t>> cands;
    int n = len_d(rng);
    for (int i = 0; i < n; ++i) {
      std::vector<std::int64_t> c{key_d(rng), val_d(rng)};
      if (modes.size() == 3) c.push_back(all_d(rng));
      cands.push_back(c);
      std::vector<Term> terms;
      for (auto v : c) terms.push_back(num(v));
      f.insert(terms);
    }
    ASSERT_EQ(f.valid(), testsupport::reference_aggregate(modes, cands)) << "trial " << trial;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Modes, AggregationSuite,
    ::testing::Values(std::vector<Mode>{Mode::Index, Mode::Min}, std::vector<Mode>{Mode::Index, Mode::Max},
                      std::vector<Mode>{Mode::Index, Mode::First},
                      std::vector<Mode>{Mode::Index, Mode::Last}, std::vector<Mode>{Mode::Index, Mode::Sum},
                      std::vector<Mode>{Mode::Index, Mode::Min, Mode::All},
                      std::vector<Mode>{Mode::Index, Mode::Max, Mode::All}));
