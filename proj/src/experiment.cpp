#include "readengine/experiment.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "readengine/error.hpp"

namespace readengine {

namespace {

double rate(std::uint64_t k, std::uint64_t n) { return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n); }

DimensionTest run_test(Dimension dimension, const WordExposure& first, const WordExposure& second, double alpha) {
  DimensionTest out;
  out.dimension = dimension;
  double first_rate = 0.0;
  double second_rate = 0.0;
  try {
    switch (dimension) {
      case Dimension::participation:
        out.result = chi_square_2x2({first.selected, first.exposures - first.selected, second.selected,
                                     second.exposures - second.selected});
        first_rate = first.selection_rate();
        second_rate = second.selection_rate();
        break;
      case Dimension::perception:
        out.result = two_proportion_z(first.high_perception, first.exposures, second.high_perception, second.exposures);
        first_rate = first.high_perception_rate();
        second_rate = second.high_perception_rate();
        break;
      case Dimension::perseverance:
        out.result = chi_square_2x2({first.recalled, first.exposures - first.recalled, second.recalled,
                                     second.exposures - second.recalled});
        first_rate = first.recall_rate();
        second_rate = second.recall_rate();
        break;
      case Dimension::ie:
        throw ArgumentError("ie is not tested directly");
    }
  } catch (const DegenerateError&) {
    return out;
  }
  out.significant = out.result->p_value < alpha && first_rate != second_rate;
  if (out.significant) out.winner = first_rate > second_rate ? 0 : 1;
  return out;
}

}  // namespace

double WordExposure::selection_rate() const { return rate(selected, exposures); }
double WordExposure::high_perception_rate() const { return rate(high_perception, exposures); }
double WordExposure::recall_rate() const { return rate(recalled, exposures); }
double WordExposure::mean_perception() const {
  return exposures == 0 ? 0.0 : perception_sum / static_cast<double>(exposures);
}

std::vector<WordPair> derive_pairs(std::span<const ExperimentRecord> records) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::string>> words;
  for (const auto& r : records) {
    auto [it, inserted] = words.try_emplace(r.pair_id);
    if (inserted) order.push_back(r.pair_id);
    if (std::find(it->second.begin(), it->second.end(), r.word) == it->second.end()) it->second.push_back(r.word);
  }
  std::vector<std::string> orphans;
  std::vector<WordPair> pairs;
  for (const auto& id : order) {
    const auto& w = words.at(id);
    if (w.size() != 2) {
      orphans.push_back(id + " (" + std::to_string(w.size()) + " words)");
      continue;
    }
    pairs.push_back({id, w[0], w[1]});
  }
  if (!orphans.empty()) {
    std::string msg = "pairs without exactly two words:";
    for (const auto& o : orphans) msg += " " + o;
    throw DataError(msg);
  }
  return pairs;
}

std::vector<PairAnalysis> analyze_pairs(std::span<const ExperimentRecord> records, std::span<const WordPair> pairs,
                                        double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("alpha must be in (0, 1)");

  std::vector<PairAnalysis> out(pairs.size());
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!by_id.emplace(pairs[i].pair_id, i).second) throw DataError("duplicate pair id " + pairs[i].pair_id);
    out[i].pair_id = pairs[i].pair_id;
    out[i].words[0].word = pairs[i].first;
    out[i].words[1].word = pairs[i].second;
  }

  for (const auto& r : records) {
    const auto it = by_id.find(r.pair_id);
    if (it == by_id.end()) throw DataError("record for unmatched pair id " + r.pair_id);
    PairAnalysis& pa = out[it->second];
    WordExposure* w = nullptr;
    if (r.word == pa.words[0].word) w = &pa.words[0];
    else if (r.word == pa.words[1].word) w = &pa.words[1];
    else throw DataError("word '" + r.word + "' is not part of pair " + r.pair_id);
    for (int item : r.ues_items) {
      if (item < 1 || item > 5) throw DataError("UES item outside 1..5 for participant " + r.participant_id);
    }
    const double perception = r.perception_score();
    ++w->exposures;
    w->selected += r.selected ? 1 : 0;
    w->recalled += r.recalled ? 1 : 0;
    w->high_perception += perception >= kHighPerceptionThreshold ? 1 : 0;
    w->perception_sum += perception;
  }

  for (auto& pa : out) {
    for (const auto& w : pa.words) {
      if (w.exposures == 0) throw DataError("word '" + w.word + "' in pair " + pa.pair_id + " has no exposures");
    }
    for (std::size_t d = 0; d < kTestedDimensions.size(); ++d) {
      pa.tests[d] = run_test(kTestedDimensions[d], pa.words[0], pa.words[1], alpha);
    }
  }
  return out;
}

std::vector<LabeledWord> label_from_experiment(std::span<const ExperimentRecord> records,
                                               std::span<const WordPair> pairs, double alpha) {
  const auto analyses = analyze_pairs(records, pairs, alpha);
  std::vector<LabeledWord> out;
  out.reserve(2 * analyses.size());
  for (const auto& pa : analyses) {
    for (int side = 0; side < 2; ++side) {
      LabeledWord lw;
      lw.word = pa.words[static_cast<std::size_t>(side)].word;
      int all = 1;
      for (const auto& test : pa.tests) {
        const int label = test.winner == side ? 1 : 0;
        lw.labels[test.dimension] = label;
        all &= label;
      }
      lw.labels[Dimension::ie] = all;
      out.push_back(std::move(lw));
    }
  }
  return out;
}

}  // namespace readengine
