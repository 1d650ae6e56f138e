#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "wasc/wasc.hpp"

using namespace wasc;

namespace {

std::string compact(const WeakAscentSequence& w) { return format_compact(w.view()); }

// Heights of the path (1 = up, 0 = flat): first visits in order, then the
// repeated heights in non-increasing order.
oracle::Word bits_oracle(const BitSequence& bits) {
  std::vector<std::uint32_t> heights{0};
  for (auto b : bits) heights.push_back(heights.back() + b);
  oracle::Word firsts, repeats;
  std::set<std::uint32_t> seen;
  for (auto h : heights) {
    if (seen.insert(h).second) firsts.push_back(h);
    else repeats.push_back(h);
  }
  std::sort(repeats.rbegin(), repeats.rend());
  firsts.insert(firsts.end(), repeats.begin(), repeats.end());
  return firsts;
}

std::vector<std::vector<int>> dense(const WMatrix& m) {
  std::vector<std::vector<int>> out(m.dimension(), std::vector<int>(m.dimension(), 0));
  for (auto [r, c] : m.ones()) out[r - 1][c - 1] = 1;
  return out;
}

}  // namespace

// --- bits <-> 001 ---

TEST(Bits001, KnownExamples) {
  EXPECT_EQ(compact(bits_to_wasc001(parse_bits("0101"))), "01210");
  EXPECT_EQ(compact(bits_to_wasc001(parse_bits("1001"))), "01211");
  EXPECT_EQ(compact(bits_to_wasc001(parse_bits("0000"))), "00000");
  EXPECT_EQ(format_bits(wasc001_to_bits(parse_sequence("01220"))), "0110");
  EXPECT_EQ(format_bits(wasc001_to_bits(parse_sequence("01221"))), "1010");
  EXPECT_EQ(format_bits(wasc001_to_bits(parse_sequence("0"))), "");
  EXPECT_EQ(compact(bits_to_wasc001({})), "0");
}

TEST(Bits001, Rejections) {
  EXPECT_THROW(wasc001_to_bits(parse_sequence("001")), DomainError);
  EXPECT_THROW(wasc001_to_bits(WeakAscentSequence{}), DomainError);
  EXPECT_THROW(parse_bits("012"), ParseError);
}

TEST(Bits001, MatchesHeightOracleAndRoundTrips) {
  for (std::size_t len = 0; len <= 10; ++len) {
    std::set<WeakAscentSequence> image;
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      BitSequence bits(len);
      for (std::size_t i = 0; i < len; ++i) bits[i] = (code >> i) & 1u;
      const WeakAscentSequence w = bits_to_wasc001(bits);
      ASSERT_EQ(w.letters(), bits_oracle(bits));
      ASSERT_FALSE(oracle::contains(w.letters(), {0, 0, 1}));
      ASSERT_EQ(wasc001_to_bits(w), bits);
      image.insert(w);
    }
    EXPECT_EQ(image.size(), std::size_t{1} << len);
    if (len + 1 <= 7) EXPECT_EQ(image.size(), oracle::count_avoiders(len + 1, {0, 0, 1})) << len;
    EXPECT_EQ(image.size(), count_avoiders(len + 1, Pattern{0, 0, 1})) << len;
  }
}

// --- operations / compositions <-> 012 ---

TEST(Ops012, OperationChain) {
  const OperationSequence ops = parse_operations("E4,I,I,O,O,E2,O,I,E3");
  EXPECT_EQ(compact(apply_ops(ops)), "0000000744004033");
  EXPECT_EQ(compact(apply_ops(parse_operations("E4"))), "00004");
  EXPECT_EQ(compact(apply_ops({})), "0");
  EXPECT_EQ(wasc012_to_ops(parse_sequence("0000000744004033")), ops);
  EXPECT_EQ(format_operations(wasc012_to_ops(parse_sequence("00"))), "O");
  EXPECT_EQ(format_operations(wasc012_to_ops(parse_sequence("01"))), "I");
  EXPECT_EQ(format_composition(ops_to_composition(ops)), "122121112111112212221");
  EXPECT_EQ(format_composition(ops_to_composition({Operation::O()})), "11");
  EXPECT_EQ(format_composition(ops_to_composition({Operation::I()})), "2");
  EXPECT_TRUE(ops_to_composition({}).empty());
  EXPECT_EQ(composition_to_ops(parse_composition("1221.2.11.121.11.11.2.2.12221")), ops);
}

TEST(Ops012, IntermediateStepsOfTheChain) {
  const std::vector<std::pair<std::string, std::string>> steps{
      {"E4", "0004"},          {"E4,I", "00041"},          {"E4,I,I", "000411"},
      {"E4,I,I,O", "0004110"}, {"E4,I,I,O,O", "00041100"}, {"E4,I,I,O,O,E2", "0000522002"},
  };
  for (const auto& [ops, body] : steps) EXPECT_EQ(compact(apply_ops(parse_operations(ops))), "0" + body) << ops;
}

TEST(Ops012, Rejections) {
  EXPECT_THROW(wasc012_to_ops(parse_sequence("012")), DomainError);
  EXPECT_THROW(composition_to_ops(parse_composition("1")), DomainError);
  EXPECT_THROW(parse_operations("E1"), ParseError);
  EXPECT_THROW(parse_operations("X"), ParseError);
  EXPECT_THROW(parse_composition("13"), ParseError);
}

TEST(Ops012, ExhaustiveRoundTripAgainstCompositionCount) {
  for (std::size_t n = 1; n <= 9; ++n) {
    // all 1-2 compositions of 2(n-1), listed independently
    std::vector<Composition12> comps;
    Composition12 current;
    auto rec = [&](auto& self, unsigned left) -> void {
      if (left == 0) {
        comps.push_back(current);
        return;
      }
      for (std::uint8_t part = 1; part <= std::min<unsigned>(2, left); ++part) {
        current.push_back(part);
        self(self, left - part);
        current.pop_back();
      }
    };
    rec(rec, static_cast<unsigned>(2 * (n - 1)));
    ASSERT_EQ(comps.size(), oracle::fibonacci(static_cast<unsigned>(2 * n - 1)));
    std::set<WeakAscentSequence> image;
    for (const auto& c : comps) {
      const WeakAscentSequence w = apply_ops(composition_to_ops(c));
      ASSERT_EQ(w.size(), n);
      ASSERT_FALSE(oracle::contains(w.letters(), {0, 1, 2}));
      ASSERT_EQ(ops_to_composition(wasc012_to_ops(w)), c);
      image.insert(w);
    }
    EXPECT_EQ(image.size(), comps.size());
    if (n <= 7) EXPECT_EQ(image.size(), oracle::count_avoiders(n, {0, 1, 2})) << n;
    EXPECT_EQ(image.size(), count_avoiders(n, Pattern{0, 1, 2})) << n;
  }
}

// --- WMat ---

TEST(WMatrixModel, KnownExamples) {
  const WMatrix m = wasc_to_wmat(parse_sequence("00211015"));
  const std::set<WMatrix::Position> expected{{1, 1}, {1, 2}, {3, 3}, {2, 3}, {2, 4}, {1, 4}, {2, 5}, {6, 6}};
  EXPECT_EQ(m.dimension(), 6u);
  EXPECT_EQ(m.ones(), expected);
  EXPECT_EQ(wasc_to_wmat(parse_sequence("0012")).ones(), (std::set<WMatrix::Position>{{1, 1}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(wasc_to_wmat(parse_sequence("0")).ones(), (std::set<WMatrix::Position>{{1, 1}}));
  EXPECT_EQ(compact(wmat_to_wasc(m)), "00211015");
}

TEST(WMatrixModel, Rejections) {
  EXPECT_THROW(WMatrix::from_columns({}), DomainError);
  EXPECT_THROW(WMatrix::from_columns({{1}, {}}), DomainError);
  EXPECT_THROW(WMatrix::from_columns({{2}}), DomainError);
  EXPECT_THROW(WMatrix::from_columns({{1}, {2}, {1}}), DomainError);  // top of column 2 below bottom of column 3
  EXPECT_THROW(parse_wmatrix("01/00"), DomainError);
  EXPECT_NO_THROW(parse_wmatrix("10/01"));
  EXPECT_THROW(parse_wmatrix("12/00"), ParseError);
  EXPECT_THROW(parse_wmatrix("100/010"), ParseError);
  EXPECT_THROW(wasc_to_wmat(WeakAscentSequence{}), DomainError);
}

TEST(WMatrixModel, IndependentEnumerationMatchesDefinition) {
  // matrices with n ones, grouped by dimension, from the cell-subset oracle
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::vector<std::vector<int>>> from_oracle, from_library, from_sequences;
    for (std::size_t d = 1; d <= n; ++d) {
      for (const auto& m : oracle::all_wmatrices(d)) {
        if (oracle::ones(m) == n) from_oracle.insert(m);
      }
    }
    for_each_wmatrix(n, [&](const WMatrix& m) { from_library.insert(dense(m)); });
    for (const auto& w : enumerate(n)) from_sequences.insert(dense(wasc_to_wmat(w)));
    EXPECT_EQ(from_library, from_oracle) << n;
    EXPECT_EQ(from_sequences, from_oracle) << n;
    EXPECT_EQ(from_oracle.size(), oracle::all_sequences(n).size()) << n;
  }
}

TEST(WMatrixModel, RoundTripOnAllSequences) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_sequence(n, [&](const WeakAscentSequence& w) {
      const WMatrix m = wasc_to_wmat(w);
      ASSERT_EQ(m.dimension(), w.weak_ascents() + 1);
      ASSERT_EQ(m.count_ones(), n);
      ASSERT_EQ(wmat_to_wasc(m), w);
      ASSERT_EQ(parse_wmatrix(format_wmatrix(m)), m);
    });
  }
}

TEST(WMatrixModel, ShapeCharacterizations) {
  EXPECT_TRUE(is_wmat021_shape(wasc_to_wmat(parse_sequence("0012"))));
  EXPECT_TRUE(is_wmat021_shape(wasc_to_wmat(parse_sequence("0"))));
  // 0120244 has no 0-2-1 subsequence, so its matrix is of 021 shape
  const auto w = parse_sequence("0120244");
  EXPECT_EQ(is_wmat021_shape(wasc_to_wmat(w)), !oracle::contains(w.letters(), {0, 2, 1}));
  EXPECT_TRUE(is_wmat021_shape(wasc_to_wmat(w)));
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& v : enumerate(n)) {
      const WMatrix m = wasc_to_wmat(v);
      ASSERT_EQ(is_wmat021_shape(m), !oracle::contains(v.letters(), {0, 2, 1})) << to_string(v);
      ASSERT_EQ(has_wmat011_rows(m), !oracle::contains(v.letters(), {0, 1, 1})) << to_string(v);
    }
  }
}

// --- augmented sequences <-> 021 ---

TEST(Aug021, ParsingAndFormatting) {
  const auto s = parse_augmented("(1,2[1],1[0],0)");
  EXPECT_EQ(format_augmented(s), "1,2[1],1[0],0");
  EXPECT_EQ(format_augmented(parse_augmented("2,1[0],1[0]")), "2,1[0],1[0],0");
  EXPECT_EQ(format_augmented(parse_augmented("2,1,1")), "2,1[0],1[0],0");
  EXPECT_THROW(parse_augmented("1,2[2],0"), DomainError);
  EXPECT_THROW(parse_augmented("0,1"), DomainError);
  EXPECT_THROW(parse_augmented("1[0]"), DomainError);
  EXPECT_THROW(parse_augmented("1,2[1"), ParseError);
}

TEST(Aug021, MarkedPaths) {
  EXPECT_EQ(augmented_to_marked_path(parse_augmented("1,3[1],2[1],0,0,4[3],0,0,1[0],0,1[0],0")).steps(),
            "HDHHhDHhDDDHhhhDDDHDDHDD");
  EXPECT_EQ(augmented_to_marked_path(parse_augmented("2,1[0],1[0],0")).steps(), "HHDHDHDD");
  EXPECT_EQ(augmented_to_marked_path(parse_augmented("1")).steps(), "HD");
  EXPECT_EQ(augmented_to_marked_path(parse_augmented("1,2[1],1[0],0")).steps(), "HDHhDHDD");
  EXPECT_THROW(MarkedDyckPath("DH"), DomainError);
  EXPECT_THROW(MarkedDyckPath("HX"), ParseError);
  const MarkedDyckPath p("HDHHhDHhDDDHhhhDDDHDDHDD");
  EXPECT_EQ(augmented_to_marked_path(marked_path_to_augmented(p)), p);
}

TEST(Aug021, KnownImages) {
  EXPECT_EQ(compact(augmented_to_wasc021(parse_augmented("2,1[0],1[0]"))), "0012");
  EXPECT_EQ(compact(augmented_to_wasc021(parse_augmented("1,2[1],1[0],0"))), "0101");
  const auto m = marked_path_to_wmatrix(augmented_to_marked_path(parse_augmented("1,2[1],1[0],0")));
  EXPECT_EQ(format_wmatrix(m), "110\n011\n000\n");
  EXPECT_EQ(format_wmatrix(marked_path_to_wmatrix(MarkedDyckPath("HHDHDHDD"))), "1100\n0010\n0001\n0000\n");
}

TEST(Aug021, SevenLabelledTreesOfSizeFour) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"1,3[2],0,0", "111/010/000"},    {"1,3[1],0,0", "101/011/000"},   {"1,2[1],1[0],0", "110/011/000"},
      {"1,2[1],0,1[0]", "110/010/001"}, {"1,1[0],2[1],0", "101/010/001"}, {"2,2[1],0,0", "111/001/000"},
      {"2,0,2[1],0", "111/000/001"},
  };
  std::vector<std::string> positive_label_sequences;
  for_each_augmented(4, [&](const AugmentedSequence& s) {
    if (!s.all_labels_zero()) positive_label_sequences.push_back(format_augmented(s));
  });
  EXPECT_EQ(positive_label_sequences.size(), cases.size());
  for (const auto& [aug, matrix] : cases) {
    const auto s = parse_augmented(aug);
    EXPECT_EQ(marked_path_to_wmatrix(augmented_to_marked_path(s)), parse_wmatrix(matrix)) << aug;
    EXPECT_NE(std::find(positive_label_sequences.begin(), positive_label_sequences.end(), format_augmented(s)),
              positive_label_sequences.end())
        << aug;
  }
}

TEST(Aug021, Rejections) {
  EXPECT_THROW(wasc021_to_augmented(parse_sequence("0021")), DomainError);
  EXPECT_THROW(wasc021_to_augmented(WeakAscentSequence{}), DomainError);
  EXPECT_THROW(wmatrix_to_marked_path(wasc_to_wmat(parse_sequence("0021"))), DomainError);
}

TEST(Aug021, ExhaustiveRoundTripAndCounts) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<WeakAscentSequence> image;
    std::size_t items = 0;
    for_each_augmented(n, [&](const AugmentedSequence& s) {
      ++items;
      const WeakAscentSequence w = augmented_to_wasc021(s);
      ASSERT_EQ(w.size(), n);
      ASSERT_FALSE(oracle::contains(w.letters(), {0, 2, 1})) << format_augmented(s);
      ASSERT_EQ(wasc021_to_augmented(w), s) << format_augmented(s);
      image.insert(w);
    });
    const std::size_t expected = oracle::count_avoiders(n, {0, 2, 1});
    EXPECT_EQ(items, expected) << n;
    EXPECT_EQ(image.size(), expected) << n;
  }
}

TEST(Aug021, AllZeroLabelsAreCatalan) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t zero_labels = 0;
    for_each_augmented(n, [&](const AugmentedSequence& s) {
      if (!s.all_labels_zero()) return;
      ++zero_labels;
      EXPECT_FALSE(contains(augmented_to_wasc021(s), Pattern{0, 2, 1}));
    });
    EXPECT_EQ(zero_labels, oracle::catalan(static_cast<unsigned>(n))) << n;
  }
}

// --- followers of 011-avoiders ---

TEST(Followers011, KnownAndSmallExamples) {
  EXPECT_EQ(format_partition(follower_partition(parse_sequence("0001300524"))), "{1,4,8} {2} {3,5,7} {} {6}");
  EXPECT_EQ(follower_partition(parse_sequence("0")), (FollowerPartition{{1}}));
  EXPECT_EQ(follower_partition(parse_sequence("000")), (FollowerPartition{{1}, {2}, {3}}));
  EXPECT_THROW(follower_partition(parse_sequence("011")), DomainError);
  EXPECT_THROW(follower_partition(WeakAscentSequence{}), DomainError);
}

TEST(Followers011, ExactCoverWithOneBlockPerZero) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : enumerate(n, Pattern{0, 1, 1})) {
      const auto blocks = follower_partition(w);
      std::multiset<Letter> all;
      for (const auto& b : blocks) all.insert(b.begin(), b.end());
      std::multiset<Letter> expected;
      for (Letter v = 1; v <= w.weak_ascents() + 1; ++v) expected.insert(v);
      ASSERT_EQ(all, expected) << to_string(w);
      ASSERT_EQ(blocks.size(), static_cast<std::size_t>(std::count(w.begin(), w.end(), 0u)));
    }
  }
}

// A letter placed right after a descent is not a candidate, so it never
// shows up in any chain; two sequences differing only there collide.
TEST(Followers011, PartitionDoesNotDetermineTheSequence) {
  EXPECT_EQ(follower_partition(parse_sequence("0102")), follower_partition(parse_sequence("0120")));
  EXPECT_EQ(follower_partition(parse_sequence("00031")), follower_partition(parse_sequence("00032")));
  std::map<FollowerPartition, std::size_t> distinct;
  std::size_t total = 0;
  for (const auto& w : enumerate(4, Pattern{0, 1, 1})) {
    ++distinct[follower_partition(w)];
    ++total;
  }
  EXPECT_EQ(total, 14u);
  EXPECT_EQ(distinct.size(), 13u);
}
