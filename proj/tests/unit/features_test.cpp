#include <gtest/gtest.h>

#include <cmath>

#include "readengine/error.hpp"
#include "readengine/features.hpp"
#include "support.hpp"

namespace readengine {
namespace {

TEST(Syllables, Heuristic) {
  EXPECT_EQ(syllable_count("star"), 1);
  EXPECT_EQ(syllable_count("a"), 1);
  EXPECT_EQ(syllable_count("energy"), 3);
  EXPECT_EQ(syllable_count("maven"), 2);
  EXPECT_EQ(syllable_count("the"), 1);
  EXPECT_EQ(syllable_count("table"), 2);
  EXPECT_EQ(syllable_count("yes"), 1);
  EXPECT_EQ(syllable_count("Cake"), 1);
  EXPECT_THROW(syllable_count("123"), ArgumentError);
}

TEST(Flesch, SingleMonosyllable) { EXPECT_NEAR(flesch_reading_ease("star"), 121.22, 1e-9); }

TEST(Flesch, ShortSentence) {
  // 206.835 - 1.015 * 3 - 84.6 * 1
  EXPECT_NEAR(flesch_reading_ease("The cat sat."), 119.19, 1e-9);
}

TEST(Flesch, SentenceRuns) {
  // two sentences, four words, four syllables
  EXPECT_NEAR(flesch_reading_ease("Run fast!! Stop now?"), 206.835 - 1.015 * 2 - 84.6, 1e-9);
  EXPECT_THROW(flesch_reading_ease(""), ArgumentError);
  EXPECT_THROW(flesch_reading_ease("..."), ArgumentError);
}

TEST(Features, NamesRoundTrip) {
  for (Feature f : kAllFeatures) EXPECT_EQ(feature_from_name(feature_name(f)), f);
  EXPECT_FALSE(feature_from_name("colour").has_value());
  EXPECT_EQ(feature_name(Feature::emotionality_max), "emotionality_max");
}

TEST(Features, ArrayRoundTrip) {
  ReadFeatures f;
  f.definitions_synsets = 3;
  f.zipf = 4.5;
  f.flesch = 36.62;
  EXPECT_EQ(ReadFeatures::from_array(f.to_array()), f);
  f.set(Feature::hyponyms, 7);
  EXPECT_EQ(f.get(Feature::hyponyms), 7.0);
}

TEST(Features, StarOnFixture) {
  const auto f = extract_features("star", testing::mini_bundle());
  EXPECT_EQ(f.definitions_synsets, 4);
  EXPECT_EQ(f.hypernyms, 2);
  EXPECT_EQ(f.hyponyms, 2);
  EXPECT_DOUBLE_EQ(f.pos_max, 0.625);
  EXPECT_DOUBLE_EQ(f.neg_max, 0.5);
  EXPECT_DOUBLE_EQ(f.emotionality_max, 0.75);
  EXPECT_DOUBLE_EQ(f.emotionality_sum, 1.5);
  EXPECT_EQ(f.length, 4);
  EXPECT_EQ(f.syllables, 1);
  EXPECT_NEAR(f.flesch, 121.22, 1e-9);
  EXPECT_DOUBLE_EQ(f.frequency, 0.01);
  EXPECT_NEAR(f.zipf, 7.0, 1e-12);
  EXPECT_EQ(extract_features("STAR", testing::mini_bundle()), f);
}

TEST(Features, UnknownTokenDefaults) {
  const auto f = extract_features("zzxqy", testing::mini_bundle());
  EXPECT_EQ(f.definitions_synsets, 0);
  EXPECT_EQ(f.hypernyms, 0);
  EXPECT_EQ(f.hyponyms, 0);
  EXPECT_EQ(f.pos_max, 0.0);
  EXPECT_EQ(f.neg_max, 0.0);
  EXPECT_EQ(f.emotionality_max, 0.0);
  EXPECT_EQ(f.emotionality_sum, 0.0);
  EXPECT_EQ(f.length, 5);
  EXPECT_EQ(f.syllables, 1);
  EXPECT_EQ(f.frequency, 0.0);
  EXPECT_EQ(f.zipf, 0.0);
}

TEST(Features, RejectsEmptyAndWhitespace) {
  EXPECT_THROW(extract_features("", testing::mini_bundle()), ArgumentError);
  EXPECT_THROW(extract_features("rock star", testing::mini_bundle()), ArgumentError);
}

TEST(Features, PolysemyOnFullResources) {
  const auto& b = testing::full_bundle();
  EXPECT_EQ(extract_features("maven", b).definitions_synsets, 1);
  EXPECT_EQ(extract_features("star", b).definitions_synsets, 12);
}

}  // namespace
}  // namespace readengine
