// Tables, validation, lunar verdicts and the example corpus.
#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace lunar {
namespace {

  using testing::random_injective_table;
  using testing::random_nonempty_subset;
  using testing::random_table;
  using testing::reference_lunar_condition;

  MapTable grid(std::vector<std::vector<std::string>> const& cells) {
    std::vector<std::string> rows, cols;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      rows.push_back(std::to_string(i));
    }
    for (std::size_t j = 0; j < cells.front().size(); ++j) {
      cols.push_back(std::to_string(j));
    }
    return MapTable::from_strings(rows, cols, cells);
  }

  std::vector<MapTable> lunar_corpus() {
    return {nat_window(6),
            nat_power_window(2, 4),
            free_monoid_window(2, 3),
            sl2_window(3),
            group_division(cyclic_group_table(5)),
            polynomial_map({1, 2, 1, 3, 6, 6})};
  }

  bool holds_witness(MapTable const& t, LunarWitness const& w) {
    return t.at(w.a, w.x) == t.at(w.b, w.y) && t.at(w.c, w.x) == t.at(w.d, w.y)
           && t.at(w.a, w.z) == t.at(w.b, w.w) && t.at(w.c, w.z) != t.at(w.d, w.w);
  }

  TEST(MapTable, RejectsEmptyAndRagged) {
    EXPECT_THROW(MapTable::from_strings({}, {"x"}, {}), InputError);
    EXPECT_THROW(MapTable::from_strings({"a"}, {"x", "y"}, {{"1"}}), InputError);
    EXPECT_THROW(MapTable::from_strings({"a", "b"}, {"x"}, {{"1"}}), InputError);
    EXPECT_THROW(MapTable({"a"}, {"x"}, {3}, {"p"}), InputError);
  }

  TEST(MapTable, InternsLabelsInFirstAppearanceOrder) {
    auto t = grid({{"q", "p"}, {"p", "r"}});
    EXPECT_EQ(t.n_labels(), 3u);
    EXPECT_EQ(t.label_name(0), "q");
    EXPECT_EQ(t.at(1, 0), t.at(0, 1));
    EXPECT_EQ(t.cell_name(1, 1), "r");
    EXPECT_EQ(t, grid({{"q", "p"}, {"p", "r"}}));
  }

  TEST(ValidateMap, NatWindowHasUnitZero) {
    auto d = validate_map(nat_window(4));
    EXPECT_TRUE(d.coordinatewise_injective);
    EXPECT_TRUE(d.is_monoid_window);
    ASSERT_TRUE(d.unit_index.has_value());
    EXPECT_EQ(*d.unit_index, 0u);
  }

  TEST(ValidateMap, CheckerboardIsInjectiveButNoMonoid) {
    auto d = validate_map(checkerboard3());
    EXPECT_TRUE(d.coordinatewise_injective);
    EXPECT_FALSE(d.is_monoid_window);
    EXPECT_FALSE(d.bad_row.has_value());
    EXPECT_FALSE(d.bad_col.has_value());
  }

  TEST(ValidateMap, RepeatInRowGivesWitness) {
    auto d = validate_map(grid({{"a", "b", "a"}, {"c", "d", "e"}}));
    EXPECT_FALSE(d.coordinatewise_injective);
    ASSERT_TRUE(d.bad_row.has_value());
    EXPECT_EQ(d.bad_row->index, 0u);
    EXPECT_EQ(d.bad_row->first, 0u);
    EXPECT_EQ(d.bad_row->second, 2u);
  }

  TEST(ValidateMap, RepeatInColumnGivesWitness) {
    auto d = validate_map(grid({{"a", "b"}, {"c", "b"}}));
    EXPECT_FALSE(d.coordinatewise_injective);
    ASSERT_TRUE(d.bad_col.has_value());
    EXPECT_EQ(d.bad_col->index, 1u);
  }

  TEST(ValidateMap, InjectiveIffNoWitnessOnRandomTables) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
      auto d = validate_map(random_table(rng, 4, 4, 5));
      EXPECT_EQ(d.coordinatewise_injective, !d.bad_row && !d.bad_col);
    }
  }

  TEST(CancellativeMonoid, NatWindowAndCyclicGroup) {
    auto n = cancellative_monoid_check(nat_window(5));
    EXPECT_TRUE(n.coordinatewise_injective);
    ASSERT_TRUE(n.unit_index);
    EXPECT_EQ(*n.unit_index, 0u);
    auto z = cancellative_monoid_check(cyclic_group_table(4));
    EXPECT_TRUE(z.coordinatewise_injective);
    ASSERT_TRUE(z.unit_index);
    EXPECT_EQ(*z.unit_index, 0u);
  }

  TEST(CancellativeMonoid, ConstantRowIsNotCancellative) {
    auto t = MapTable::from_strings({"0", "1"}, {"0", "1"}, {{"0", "1"}, {"1", "1"}});
    auto d = cancellative_monoid_check(t);
    EXPECT_FALSE(d.coordinatewise_injective);
    EXPECT_TRUE(d.bad_row || d.bad_col);
  }

  TEST(CheckLunar, CorpusWindowsAreLunar) {
    for (auto const& t : lunar_corpus()) {
      auto r = check_lunar(t);
      EXPECT_TRUE(r.is_lunar) << t.origin();
      EXPECT_TRUE(r.window_local);
      EXPECT_FALSE(r.witness);
      EXPECT_FALSE(r.overlap_witness);
    }
  }

  TEST(CheckLunar, CubicPolynomialWindow) {
    EXPECT_TRUE(check_lunar(polynomial_map({1, 1, 1, 3, 6, 6})).is_lunar);
  }

  TEST(CheckLunar, CheckerboardOverlapWitness) {
    auto r = check_lunar(checkerboard3());
    EXPECT_FALSE(r.is_lunar);
    EXPECT_FALSE(r.window_local);
    ASSERT_TRUE(r.overlap_witness);
    // 0-based: Sol(0,1) and Sol(1,2) share (1,2).
    EXPECT_EQ(r.overlap_witness->first_rep, IndexPair(0, 1));
    EXPECT_EQ(r.overlap_witness->second_rep, IndexPair(1, 2));
    EXPECT_EQ(r.overlap_witness->point, IndexPair(1, 2));
  }

  TEST(CheckLunar, CheckerboardBruteWitnessSatisfiesHypotheses) {
    auto t = checkerboard3();
    auto r = check_lunar(t, LunarMethod::brute);
    EXPECT_FALSE(r.is_lunar);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(holds_witness(t, *r.witness));
  }

  TEST(CheckLunar, QuadraticFormWindows) {
    // x^2 + y^2 + xy: the 12-window has no violation, the 15-window does.
    auto twelve = quadratic_map({1, 1, 1, 12, 12});
    EXPECT_TRUE(validate_map(twelve).coordinatewise_injective);
    EXPECT_TRUE(check_lunar(twelve).is_lunar);
    EXPECT_TRUE(check_lunar(twelve, LunarMethod::brute).is_lunar);

    auto fifteen = quadratic_map({1, 1, 1, 15, 15});
    auto fast    = check_lunar(fifteen);
    auto brute   = check_lunar(fifteen, LunarMethod::brute);
    EXPECT_FALSE(fast.is_lunar);
    EXPECT_FALSE(brute.is_lunar);
    ASSERT_TRUE(brute.witness);
    EXPECT_EQ(*brute.witness, (LunarWitness{0, 8, 8, 14, 10, 3, 8, 0}));
    EXPECT_TRUE(holds_witness(fifteen, *brute.witness));
  }

  TEST(CheckLunar, NonInjectiveSurfacesDiagnostics) {
    auto r = check_lunar(grid({{"a", "a"}, {"b", "c"}}));
    EXPECT_FALSE(r.is_lunar);
    ASSERT_TRUE(r.injectivity);
    EXPECT_FALSE(r.injectivity->coordinatewise_injective);
    EXPECT_FALSE(r.witness);
    EXPECT_FALSE(r.overlap_witness);
  }

  TEST(CheckLunar, FastBruteAndReferenceAgreeOnRandomTables) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 3000; ++i) {
      auto       t     = random_table(rng, 4, 4, 1 + i % 6);
      bool const ref   = reference_lunar_condition(t);
      auto const fast  = check_lunar(t, LunarMethod::fast, false);
      auto const brute = check_lunar(t, LunarMethod::brute, false);
      ASSERT_EQ(fast.is_lunar, ref) << i;
      ASSERT_EQ(brute.is_lunar, ref) << i;
      if (!brute.is_lunar) {
        ASSERT_TRUE(holds_witness(t, *brute.witness));
      }
      ASSERT_EQ(fast.is_lunar, !fast.overlap_witness.has_value());
    }
  }

  TEST(CheckLunar, FastAndBruteAgreeOnCorpus) {
    auto tables = lunar_corpus();
    tables.push_back(checkerboard3());
    tables.push_back(quadratic_map({1, 1, 1, 6, 6}));
    tables.push_back(nat_power_window(3, 2));
    for (auto const& t : tables) {
      EXPECT_EQ(check_lunar(t).is_lunar, check_lunar(t, LunarMethod::brute).is_lunar)
          << t.origin();
    }
  }

  TEST(CheckLunar, BruteWitnessIsLexicographicallySmallest) {
    std::mt19937_64 rng(5);
    int             seen = 0;
    for (int i = 0; i < 400 && seen < 40; ++i) {
      auto t = random_table(rng, 3, 3, 3);
      auto r = check_lunar(t, LunarMethod::brute, false);
      if (r.is_lunar) {
        continue;
      }
      ++seen;
      auto const& w = *r.witness;
      std::size_t const n = t.n_rows(), m = t.n_cols();
      bool earlier = false;
      for (std::size_t a = 0; a < n && !earlier; ++a)
        for (std::size_t b = 0; b < n && !earlier; ++b)
          for (std::size_t c = 0; c < n && !earlier; ++c)
            for (std::size_t d = 0; d < n && !earlier; ++d)
              for (std::size_t x = 0; x < m && !earlier; ++x)
                for (std::size_t y = 0; y < m && !earlier; ++y)
                  for (std::size_t z = 0; z < m && !earlier; ++z)
                    for (std::size_t v = 0; v < m && !earlier; ++v) {
                      LunarWitness cand{a, b, c, d, x, y, z, v};
                      if (cand == w) {
                        goto done;
                      }
                      earlier = holds_witness(t, cand);
                    }
    done:
      EXPECT_FALSE(earlier);
    }
    EXPECT_GT(seen, 0);
  }

  TEST(Corpus, CheckerboardLayout) {
    auto t = checkerboard3();
    EXPECT_EQ(t.cell_name(0, 0), "red");
    EXPECT_EQ(t.cell_name(0, 1), "orange");
    EXPECT_EQ(t.cell_name(0, 2), "blue");
    EXPECT_EQ(t.cell_name(1, 0), "blue");
    EXPECT_EQ(t.cell_name(2, 0), "purple");
    EXPECT_EQ(t.cell_name(2, 1), "grey");
    EXPECT_EQ(t.cell_name(2, 2), "red");
  }

  TEST(Corpus, TransposeKeepsVerdict) {
    for (auto const& t : {nat_window(3), checkerboard3(), polynomial_map({1, 2, 1, 3, 4, 5}),
                          quadratic_map({1, 1, 1, 15, 15})}) {
      EXPECT_EQ(check_lunar(t).is_lunar, check_lunar(transpose_table(t)).is_lunar);
    }
  }

  TEST(Corpus, TransposeVerdictOnRandomTables) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
      auto t = random_table(rng, 4, 4, 4);
      EXPECT_EQ(check_lunar(t, LunarMethod::fast, false).is_lunar,
                check_lunar(transpose_table(t), LunarMethod::fast, false).is_lunar);
    }
  }

  TEST(Corpus, TensorOfNatWindowsIsNatPowerWindow) {
    auto t = tensor_tables(nat_window(2), nat_window(2));
    auto p = nat_power_window(2, 2);
    EXPECT_TRUE(t.same_map(p));
  }

  TEST(Corpus, TensorAndRefineOfLunarTablesAreLunar) {
    auto const corpus = std::vector<MapTable>{nat_window(3), group_division(cyclic_group_table(3)),
                                              polynomial_map({1, 2, 1, 2, 3, 3})};
    for (auto const& l : corpus) {
      for (auto const& r : corpus) {
        EXPECT_TRUE(check_lunar(tensor_tables(l, r)).is_lunar);
        EXPECT_TRUE(check_lunar(refine_tables(l, r)).is_lunar);
      }
    }
  }

  TEST(Corpus, RestrictionsOfLunarTablesAreLunar) {
    std::mt19937_64 rng(99);
    for (auto const& t : lunar_corpus()) {
      for (int i = 0; i < 50; ++i) {
        auto rows = random_nonempty_subset(rng, t.n_rows());
        auto cols = random_nonempty_subset(rng, t.n_cols());
        ASSERT_TRUE(check_lunar(restrict_table(t, rows, cols)).is_lunar) << t.origin();
      }
    }
  }

  TEST(Corpus, RandomInjectiveRestrictionsKeepVerdictOfLunarInputs) {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 200; ++i) {
      auto t = random_injective_table(rng, 3, 3, 5);
      if (!check_lunar(t).is_lunar) {
        continue;
      }
      auto rows = random_nonempty_subset(rng, 3);
      auto cols = random_nonempty_subset(rng, 3);
      EXPECT_TRUE(check_lunar(restrict_table(t, rows, cols)).is_lunar);
    }
  }

  TEST(Corpus, MonoidWindowsMatchLunarMonoidCondition) {
    for (auto const& t : {nat_window(5), cyclic_group_table(4), nat_power_window(2, 3)}) {
      EXPECT_EQ(check_lunar(t).is_lunar, lunar_monoid_condition(t));
      EXPECT_TRUE(lunar_monoid_condition(t));
    }
  }

  TEST(Corpus, SpecRoundTripBuildsSameTable) {
    CorpusSpec spec{corpus::Restrict{make_spec(corpus::NatWindow{5}), {0, 2, 4}, {1, 3}}};
    auto       t = make_corpus(spec);
    EXPECT_EQ(t.n_rows(), 3u);
    EXPECT_EQ(t.n_cols(), 2u);
    EXPECT_EQ(t.cell_name(2, 1), "7");
    auto again = make_corpus(corpus_from_json(corpus_to_json(spec)));
    EXPECT_TRUE(t.same_map(again));
  }

  TEST(Corpus, InvalidParametersAreInputErrors) {
    EXPECT_THROW(sl2_window(0), InputError);
    EXPECT_THROW(polynomial_map({0, 1, 1, 1, 3, 3}), InputError);
    EXPECT_THROW(restrict_table(nat_window(3), {}, {0}), InputError);
    auto not_group = MapTable::from_strings({"0", "1"}, {"0", "1"}, {{"0", "0"}, {"0", "1"}});
    EXPECT_THROW(group_division(not_group), InputError);
  }

  TEST(Corpus, GroupDivisionIsLunar) {
    for (std::size_t n : {2u, 5u, 7u}) {
      auto t = group_division(cyclic_group_table(n));
      EXPECT_TRUE(check_lunar(t).is_lunar);
      EXPECT_EQ(t.n_labels(), n);
    }
  }

  TEST(Corpus, SL2WindowIsInjective) {
    auto t = sl2_window(3);
    EXPECT_TRUE(validate_map(t).coordinatewise_injective);
    EXPECT_EQ(t.n_rows(), 15u);
  }

  TEST(TableJson, RoundTrip) {
    auto t = checkerboard3();
    EXPECT_EQ(table_from_json(table_to_json(t)), t);
    EXPECT_THROW(table_from_json(json::parse(R"({"rows":["a"],"cells":[["x"]]})")), InputError);
  }

}  // namespace
}  // namespace lunar
