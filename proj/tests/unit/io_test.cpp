#include <gtest/gtest.h>

#include <fstream>

#include "readengine/error.hpp"
#include "readengine/io.hpp"
#include "support.hpp"

namespace readengine {
namespace {

using testing::scratch_dir;

std::filesystem::path write(const std::filesystem::path& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

TEST(Csv, QuotingAndLineNumbers) {
  const auto t = io::parse_csv("a,b\r\n\"x, y\",\"say \"\"hi\"\"\"\n\n\"multi\nline\",2\n3,4", "mem");
  EXPECT_EQ(t.header, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0][0], "x, y");
  EXPECT_EQ(t.rows[0][1], "say \"hi\"");
  EXPECT_EQ(t.rows[1][0], "multi\nline");
  EXPECT_EQ(t.line_numbers[2], 6u);
  EXPECT_EQ(t.column("b"), 1u);
  EXPECT_EQ(t.column("c"), std::string::npos);
}

TEST(Csv, RaggedRowNamesLine) {
  try {
    io::parse_csv("a,b\n1,2\n3\n", "f.csv");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.file(), "f.csv");
  }
  EXPECT_THROW(io::parse_csv("a\n\"open", "f.csv"), ParseError);
  EXPECT_THROW(io::parse_csv("", "f.csv"), ParseError);
}

TEST(Csv, EscapeRoundTrip) {
  const std::string nasty = "a \"quoted\", value";
  const auto t = io::parse_csv("h\n" + io::csv_escape(nasty) + "\n", "mem");
  EXPECT_EQ(t.rows[0][0], nasty);
  EXPECT_EQ(io::csv_escape("plain"), "plain");
}

TEST(ReadLines, SkipsBlankAndTrims) {
  const auto dir = scratch_dir("lines");
  EXPECT_EQ(io::read_lines(write(dir / "w.txt", " maven \n\n\tstar\r\n")), (std::vector<std::string>{"maven", "star"}));
  EXPECT_THROW(io::read_lines(dir / "missing.txt"), ResourceError);
}

TEST(Study1Csv, ParsesAndValidates) {
  const auto dir = scratch_dir("s1");
  const std::string header = "participant_id,pair_id,word,selected,ea,ea_n,fa,fa_n,pu,pu_n,rw,rw_n,recalled\n";
  const auto recs = io::read_study1_csv(write(dir / "ok.csv", header + "u1,p1,Star,1,5,1,4,2,5,1,4,2,0\n"));
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].word, "star");
  EXPECT_TRUE(recs[0].selected);
  EXPECT_EQ(recs[0].ues_items[3], 2);
  EXPECT_DOUBLE_EQ(recs[0].perception_score(), 4.5);
  EXPECT_THROW(io::read_study1_csv(write(dir / "bad.csv", header + "u1,p1,star,1,9,1,4,2,5,1,4,2,0\n")), ParseError);
  EXPECT_THROW(io::read_study1_csv(write(dir / "flag.csv", header + "u1,p1,star,yes,5,1,4,2,5,1,4,2,0\n")),
               ParseError);
  EXPECT_THROW(io::read_study1_csv(write(dir / "cols.csv", "participant_id,pair_id\nu,p\n")), ParseError);
}

TEST(Study3Csv, Variants) {
  const auto dir = scratch_dir("s3");
  const std::string header = "pair_id,variant,selection_rate,evaluation_avg,retention_rate\n";
  const auto recs = io::read_study3_csv(write(dir / "ok.csv", header + "t1,original,47.8,3.98,58.77\nt1,Modified,58.97,4.46,69.37\n"));
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[1].variant, TitleVariant::modified);
  EXPECT_DOUBLE_EQ(recs[1].evaluation_avg, 4.46);
  EXPECT_THROW(io::read_study3_csv(write(dir / "bad.csv", header + "t1,other,1,2,3\n")), ParseError);
  EXPECT_THROW(io::read_study3_csv(write(dir / "nan.csv", header + "t1,original,x,2,3\n")), ParseError);
}

TEST(LabeledCsv, RoundTripWithFeatures) {
  LabeledWord w{"star", ReadFeatures{}, {}};
  w.features->zipf = 4.921421;
  w.features->definitions_synsets = 12;
  w.features->frequency = 8.3448e-05;
  for (Dimension d : kAllDimensions) w.labels[d] = d == Dimension::participation ? 1 : 0;
  const std::vector<LabeledWord> rows{w, {"maven", ReadFeatures{}, {{Dimension::ie, 1}}}};
  const auto dir = scratch_dir("labeled");
  const auto back = io::read_labeled_csv(write(dir / "l.csv", io::labeled_csv(rows)));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].features, w.features);
  EXPECT_EQ(back[0].labels, w.labels);
  EXPECT_EQ(back[1].labels.at(Dimension::ie), 1);
  EXPECT_EQ(back[1].labels.at(Dimension::participation), 0);
}

TEST(LabeledCsv, FeatureColumnsAllOrNone) {
  const auto dir = scratch_dir("labeled2");
  const auto plain = io::read_labeled_csv(write(dir / "a.csv", "word,ie\nstar,1\nmaven,0\n"));
  EXPECT_FALSE(plain[0].features.has_value());
  EXPECT_THROW(io::read_labeled_csv(write(dir / "b.csv", "word,ie,zipf\nstar,1,3\n")), ParseError);
  EXPECT_THROW(io::read_labeled_csv(write(dir / "c.csv", "word,ie\nstar,2\n")), ParseError);
  EXPECT_THROW(io::read_labeled_csv(write(dir / "d.csv", "word,zipf\nstar,2\n")), ParseError);
}

TEST(ModelArtifact, RoundTrip) {
  TrainedModel m;
  m.coefficients = paper_coefficients(Dimension::ie);
  m.config.iterations = 123;
  m.config.seed = 7;
  m.feature_means[11] = 3.25;
  m.feature_scales.fill(1.0);
  const auto text = io::model_to_json(m);
  const auto back = io::model_from_json(text, "mem");
  EXPECT_EQ(back.coefficients.kind, ModelKind::logistic);
  EXPECT_EQ(back.coefficients.weights.size(), m.coefficients.weights.size());
  for (const auto& [f, w] : m.coefficients.weights) EXPECT_NEAR(back.coefficients.weights.at(f), w, 1e-6 * std::abs(w));
  EXPECT_EQ(back.config.iterations, 123);
  EXPECT_EQ(back.config.seed, 7u);
  EXPECT_EQ(back.feature_means[11], 3.25);
  EXPECT_EQ(io::model_to_json(back), text);
}

TEST(ModelArtifact, MinimalAndInvalid) {
  const auto m = io::model_from_json(R"({"kind":"logistic","intercept":-1,"weights":{"zipf":2}})", "mem");
  EXPECT_EQ(m.coefficients.weights.at(Feature::zipf), 2.0);
  EXPECT_THROW(io::model_from_json("{", "mem"), ParseError);
  EXPECT_THROW(io::model_from_json(R"({"kind":"tree","intercept":0,"weights":{}})", "mem"), ParseError);
  EXPECT_THROW(io::model_from_json(R"({"kind":"linear","intercept":0,"weights":{"colour":1}})", "mem"), ParseError);
  EXPECT_THROW(io::model_from_json(R"({"kind":"linear","weights":{}})", "mem"), ParseError);
}

}  // namespace
}  // namespace readengine
