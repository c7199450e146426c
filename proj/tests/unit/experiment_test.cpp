#include <gtest/gtest.h>

#include "../common/synthetic.hpp"
#include "readengine/error.hpp"
#include "readengine/experiment.hpp"

namespace readengine {
namespace {

// `n` exposures of `word`, the first `selected` of which were selected.
void add(std::vector<ExperimentRecord>& out, const std::string& pair, const std::string& word, int n, int selected,
         int high = 0, int recalled = 0) {
  for (int i = 0; i < n; ++i) {
    ExperimentRecord r;
    r.participant_id = word + std::to_string(i);
    r.pair_id = pair;
    r.word = word;
    r.selected = i < selected;
    r.ues_items = i < high ? std::array<int, 8>{5, 1, 5, 1, 5, 1, 5, 1} : std::array<int, 8>{2, 4, 2, 4, 2, 4, 2, 4};
    r.recalled = i < recalled;
    out.push_back(r);
  }
}

TEST(DerivePairs, FirstAppearanceOrder) {
  std::vector<ExperimentRecord> rs;
  add(rs, "b", "maven", 2, 1);
  add(rs, "a", "fish", 1, 0);
  add(rs, "b", "star", 2, 1);
  add(rs, "a", "seafood", 1, 0);
  const auto pairs = derive_pairs(rs);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].pair_id, "b");
  EXPECT_EQ(pairs[0].first, "maven");
  EXPECT_EQ(pairs[0].second, "star");
  EXPECT_EQ(pairs[1].pair_id, "a");
}

TEST(DerivePairs, ListsEveryMalformedPair) {
  std::vector<ExperimentRecord> rs;
  add(rs, "solo", "one", 1, 0);
  add(rs, "ok", "x", 1, 0);
  add(rs, "ok", "y", 1, 0);
  add(rs, "crowd", "a", 1, 0);
  add(rs, "crowd", "b", 1, 0);
  add(rs, "crowd", "c", 1, 0);
  try {
    derive_pairs(rs);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("solo"), std::string::npos) << msg;
    EXPECT_NE(msg.find("crowd"), std::string::npos) << msg;
    EXPECT_EQ(msg.find("ok"), std::string::npos) << msg;
  }
}

TEST(Labeling, SignificantSelectionDifference) {
  std::vector<ExperimentRecord> rs;
  add(rs, "p1", "star", 161, 80);
  add(rs, "p1", "maven", 161, 30);
  const auto pairs = derive_pairs(rs);
  const auto analysis = analyze_pairs(rs, pairs);
  ASSERT_TRUE(analysis[0].tests[0].result.has_value());
  EXPECT_LT(analysis[0].tests[0].result->p_value, 0.05);
  const auto labels = label_from_experiment(rs, pairs);
  ASSERT_EQ(labels.size(), 2u);
  EXPECT_EQ(labels[0].word, "star");
  EXPECT_EQ(labels[0].labels.at(Dimension::participation), 1);
  EXPECT_EQ(labels[1].labels.at(Dimension::participation), 0);
  EXPECT_EQ(labels[0].labels.at(Dimension::ie), 0);
}

TEST(Labeling, IdenticalCountsLabelBothZero) {
  std::vector<ExperimentRecord> rs;
  add(rs, "p1", "star", 100, 40, 50, 20);
  add(rs, "p1", "maven", 100, 40, 50, 20);
  for (const auto& w : label_from_experiment(rs, derive_pairs(rs))) {
    for (Dimension d : kAllDimensions) EXPECT_EQ(w.labels.at(d), 0) << w.word << " " << to_string(d);
  }
}

TEST(Labeling, DegenerateTableIsNotSignificant) {
  std::vector<ExperimentRecord> rs;
  add(rs, "p1", "star", 50, 0);
  add(rs, "p1", "maven", 50, 0);
  const auto analysis = analyze_pairs(rs, derive_pairs(rs));
  EXPECT_FALSE(analysis[0].tests[0].result.has_value());
  EXPECT_FALSE(analysis[0].tests[0].significant);
}

TEST(Labeling, IeIsConjunction) {
  std::vector<ExperimentRecord> rs;
  add(rs, "p1", "star", 160, 100, 100, 100);
  add(rs, "p1", "maven", 160, 40, 40, 40);
  const auto labels = label_from_experiment(rs, derive_pairs(rs));
  EXPECT_EQ(labels[0].labels.at(Dimension::ie), 1);
  EXPECT_EQ(labels[1].labels.at(Dimension::ie), 0);
}

TEST(Labeling, RejectsBadAlphaAndItems) {
  std::vector<ExperimentRecord> rs;
  add(rs, "p1", "star", 10, 5);
  add(rs, "p1", "maven", 10, 5);
  const auto pairs = derive_pairs(rs);
  EXPECT_THROW(label_from_experiment(rs, pairs, 1.0), ArgumentError);
  rs[3].ues_items[2] = 7;
  EXPECT_THROW(label_from_experiment(rs, pairs), DataError);
}

TEST(Labeling, RecoversPlantedPairs) {
  const auto s = synthetic::study1(50, {15, 16, 14}, 77);
  const auto pairs = derive_pairs(s.records);
  const auto labels = label_from_experiment(s.records, pairs);
  ASSERT_EQ(labels.size(), 100u);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t d = 0; d < 3; ++d) {
      for (int k = 0; k < 2; ++k) {
        const int expected = s.planted[p][d] && s.winner[p] == k ? 1 : 0;
        EXPECT_EQ(labels[2 * p + static_cast<std::size_t>(k)].labels.at(kTestedDimensions[d]), expected);
      }
    }
  }
}

}  // namespace
}  // namespace readengine
