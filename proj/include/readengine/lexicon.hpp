#pragma once

// In-memory stores for the three lexical resources: a WordNet 3.0 database
// (wndb text format), SentiWordNet 3.0 scores, and a word-frequency list.
// All stores are immutable once loaded and safe to share between threads.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace readengine {

enum class PartOfSpeech : std::uint8_t {
  noun,
  verb,
  adjective,
  adjective_satellite,
  adverb,
};

inline constexpr PartOfSpeech kAllPartsOfSpeech[] = {
    PartOfSpeech::noun, PartOfSpeech::verb, PartOfSpeech::adjective,
    PartOfSpeech::adjective_satellite, PartOfSpeech::adverb};

// wndb ss_type characters: n v a s r.
char to_wndb_char(PartOfSpeech pos);
std::optional<PartOfSpeech> pos_from_wndb_char(char c);

struct SynsetId {
  PartOfSpeech pos = PartOfSpeech::noun;
  std::uint32_t offset = 0;

  auto operator<=>(const SynsetId&) const = default;
};

// "n:09762509"
std::string to_string(const SynsetId& id);

struct SynsetIdHash {
  std::size_t operator()(const SynsetId& id) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(id.pos) << 32) | id.offset);
  }
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;  // as printed in the data file, markers stripped
  std::string gloss;
  std::vector<SynsetId> hypernym_ids;
  std::vector<SynsetId> hyponym_ids;
};

enum class Relation { hypernym, hyponym };

class LexicalDatabase {
 public:
  // Reads index.{noun,verb,adj,adv} and data.{noun,verb,adj,adv} from
  // `directory`. Only '@' and '~' pointers are kept.
  static LexicalDatabase load(const std::filesystem::path& directory);

  // Synsets for the normalized lemma. Without `pos`, parts of speech are
  // visited in the order n, v, a, s, r; within one, index (sense) order.
  std::vector<const Synset*> synsets_of(std::string_view lemma,
                                        std::optional<PartOfSpeech> pos = std::nullopt) const;

  // Direct (one-step) relations. Throws IntegrityError for an unknown id.
  const std::vector<SynsetId>& related_synsets(SynsetId id, Relation relation) const;

  const Synset* find(SynsetId id) const;
  const Synset& at(SynsetId id) const;  // IntegrityError when absent

  std::size_t synset_count() const { return synsets_.size(); }
  std::size_t index_entry_count() const { return index_.size(); }

  // Every synset in data-file order (noun, verb, adj, adv files).
  const std::vector<Synset>& synsets() const { return synsets_; }

  // Index keys in load order, for deterministic iteration.
  const std::vector<std::pair<std::string, PartOfSpeech>>& index_keys() const {
    return index_order_;
  }
  const std::vector<SynsetId>& index_lookup(const std::string& normalized_lemma,
                                            PartOfSpeech pos) const;

  // Full scan: index round-trip, pointer closure, no self-hypernyms, no
  // duplicate pointers. Throws IntegrityError on the first violation.
  void verify_integrity() const;

 private:
  struct IndexKeyHash {
    std::size_t operator()(const std::pair<std::string, PartOfSpeech>& k) const noexcept {
      return std::hash<std::string>{}(k.first) ^ (static_cast<std::size_t>(k.second) * 0x9e3779b97f4a7c15ULL);
    }
  };

  std::vector<Synset> synsets_;
  std::unordered_map<SynsetId, std::size_t, SynsetIdHash> by_id_;
  std::unordered_map<std::pair<std::string, PartOfSpeech>, std::vector<SynsetId>, IndexKeyHash> index_;
  std::vector<std::pair<std::string, PartOfSpeech>> index_order_;
};

struct SentimentScore {
  double pos_score = 0.0;
  double neg_score = 0.0;

  bool operator==(const SentimentScore&) const = default;
};

class SentimentTable {
 public:
  // SentiWordNet 3.0 TSV: POS, 8-digit ID, PosScore, NegScore, SynsetTerms,
  // Gloss. Lines starting with '#' and blank lines are ignored.
  static SentimentTable load(const std::filesystem::path& path);

  // SentiWordNet tags adjective satellites as 'a'; a satellite id is looked
  // up under the adjective key. Absent ids are neutral (0, 0).
  SentimentScore sentiment_of(SynsetId id) const;

  std::size_t size() const { return entries_.size(); }
  bool contains(SynsetId id) const;
  const std::unordered_map<SynsetId, SentimentScore, SynsetIdHash>& entries() const {
    return entries_;
  }

 private:
  std::unordered_map<SynsetId, SentimentScore, SynsetIdHash> entries_;
};

struct ZipfValue {
  double frequency = 0.0;  // count / total
  double zipf = 0.0;       // log10 occurrences per billion words
};

class FrequencyTable {
 public:
  // "word<TAB>count" lines with an optional "word<TAB>count" header.
  static FrequencyTable load(const std::filesystem::path& path);
  static FrequencyTable from_counts(std::vector<std::pair<std::string, std::uint64_t>> counts);

  std::uint64_t count_of(std::string_view word) const;
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }

  // Unseen words give (0, 0). With `add_k > 0`, additive smoothing over the
  // vocabulary replaces the floor; zero by default.
  ZipfValue zipf_of(std::string_view word, double add_k = 0.0) const;

  // Words in file order.
  const std::vector<std::string>& words() const { return order_; }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::vector<std::string> order_;
  std::uint64_t total_ = 0;
};

}  // namespace readengine
