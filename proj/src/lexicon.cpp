#include "readengine/lexicon.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "readengine/error.hpp"
#include "readengine/text.hpp"

namespace readengine {

namespace {

constexpr std::array<const char*, 4> kFileSuffixes = {"noun", "verb", "adj", "adv"};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

// Calls fn(line, line_number) for each line, stripping "\r\n".
template <typename Fn>
void for_each_line(std::string_view content, Fn&& fn) {
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    auto end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_number;
    fn(line, line_number);
    pos = end + 1;
  }
}

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = s.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, tab - start));
    start = tab + 1;
  }
}

template <typename T>
std::optional<T> parse_integer(std::string_view s, int base = 10) {
  T value{};
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first == last) return std::nullopt;
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view s) {
  double value = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first == last) return std::nullopt;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::string strip_adjective_marker(std::string_view word) {
  if (!word.empty() && word.back() == ')') {
    const auto open = word.rfind('(');
    if (open != std::string_view::npos && open > 0) return std::string(word.substr(0, open));
  }
  return std::string(word);
}

// Index of the data file holding synsets of this wndb pos character.
std::optional<std::size_t> file_index_for(char c) {
  switch (c) {
    case 'n': return 0;
    case 'v': return 1;
    case 'a':
    case 's': return 2;
    case 'r': return 3;
    default: return std::nullopt;
  }
}

struct PendingPointer {
  std::size_t from;
  Relation relation;
  std::size_t file;
  std::uint32_t offset;
};

std::uint64_t file_offset_key(std::size_t file, std::uint32_t offset) {
  return (static_cast<std::uint64_t>(file) << 32) | offset;
}

}  // namespace

char to_wndb_char(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::noun: return 'n';
    case PartOfSpeech::verb: return 'v';
    case PartOfSpeech::adjective: return 'a';
    case PartOfSpeech::adjective_satellite: return 's';
    case PartOfSpeech::adverb: return 'r';
  }
  return '?';
}

std::optional<PartOfSpeech> pos_from_wndb_char(char c) {
  switch (c) {
    case 'n': return PartOfSpeech::noun;
    case 'v': return PartOfSpeech::verb;
    case 'a': return PartOfSpeech::adjective;
    case 's': return PartOfSpeech::adjective_satellite;
    case 'r': return PartOfSpeech::adverb;
    default: return std::nullopt;
  }
}

std::string to_string(const SynsetId& id) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c:%08u", to_wndb_char(id.pos), id.offset);
  return buf;
}

LexicalDatabase LexicalDatabase::load(const std::filesystem::path& directory) {
  for (const char* kind : {"index", "data"}) {
    for (const char* suffix : kFileSuffixes) {
      const auto path = directory / (std::string(kind) + "." + suffix);
      if (!std::filesystem::is_regular_file(path)) {
        throw ResourceError("missing WordNet file " + path.string());
      }
    }
  }

  LexicalDatabase db;
  std::vector<PendingPointer> pointers;
  std::unordered_map<std::uint64_t, std::size_t> by_file_offset;

  for (std::size_t file = 0; file < kFileSuffixes.size(); ++file) {
    const std::string name = std::string("data.") + kFileSuffixes[file];
    const std::string content = read_file(directory / name);
    for_each_line(content, [&](std::string_view line, std::size_t line_number) {
      if (line.empty() || line.starts_with("  ")) return;
      auto fail = [&](const std::string& what) { throw ParseError(name, line_number, what); };

      const auto bar = line.find(" | ");
      std::string_view head = line.substr(0, bar);
      std::string_view gloss = bar == std::string_view::npos ? std::string_view{} : line.substr(bar + 3);
      while (!gloss.empty() && gloss.back() == ' ') gloss.remove_suffix(1);

      const auto fields = split_spaces(head);
      if (fields.size() < 6) fail("too few fields in synset line");
      const auto offset = parse_integer<std::uint32_t>(fields[0]);
      if (!offset || fields[0].size() != 8) fail("bad synset offset '" + std::string(fields[0]) + "'");
      if (fields[2].size() != 1) fail("bad ss_type");
      const auto pos = pos_from_wndb_char(fields[2][0]);
      if (!pos || file_index_for(fields[2][0]) != file) fail("ss_type does not match data file");
      const auto word_count = parse_integer<std::size_t>(fields[3], 16);
      if (!word_count || *word_count == 0) fail("bad w_cnt");

      Synset synset;
      synset.id = SynsetId{*pos, *offset};
      synset.gloss = std::string(gloss);
      std::size_t cursor = 4;
      if (fields.size() < cursor + 2 * *word_count + 1) fail("truncated word list");
      for (std::size_t w = 0; w < *word_count; ++w) {
        synset.lemmas.push_back(strip_adjective_marker(fields[cursor]));
        cursor += 2;
      }
      const auto pointer_count = parse_integer<std::size_t>(fields[cursor++]);
      if (!pointer_count) fail("bad p_cnt");
      if (fields.size() < cursor + 4 * *pointer_count) fail("truncated pointer list");

      const std::size_t self = db.synsets_.size();
      for (std::size_t p = 0; p < *pointer_count; ++p, cursor += 4) {
        const std::string_view symbol = fields[cursor];
        const auto target = parse_integer<std::uint32_t>(fields[cursor + 1]);
        const std::string_view target_pos = fields[cursor + 2];
        if (!target || target_pos.size() != 1 || !file_index_for(target_pos[0])) {
          fail("malformed pointer " + std::to_string(p + 1));
        }
        if (symbol == "@") {
          pointers.push_back({self, Relation::hypernym, *file_index_for(target_pos[0]), *target});
        } else if (symbol == "~") {
          pointers.push_back({self, Relation::hyponym, *file_index_for(target_pos[0]), *target});
        }
      }

      if (!by_file_offset.emplace(file_offset_key(file, *offset), self).second) {
        fail("duplicate synset offset " + std::string(fields[0]));
      }
      db.by_id_.emplace(synset.id, self);
      db.synsets_.push_back(std::move(synset));
    });
  }

  for (const auto& ptr : pointers) {
    Synset& from = db.synsets_[ptr.from];
    const auto it = by_file_offset.find(file_offset_key(ptr.file, ptr.offset));
    if (it == by_file_offset.end()) {
      char target[16];
      std::snprintf(target, sizeof target, "%08u", ptr.offset);
      throw IntegrityError("dangling pointer from " + to_string(from.id) + " to " +
                           std::string(1, "nvar"[ptr.file]) + ":" + target);
    }
    const SynsetId to = db.synsets_[it->second].id;
    auto& list = ptr.relation == Relation::hypernym ? from.hypernym_ids : from.hyponym_ids;
    if (std::find(list.begin(), list.end(), to) == list.end()) list.push_back(to);
  }

  for (std::size_t file = 0; file < kFileSuffixes.size(); ++file) {
    const std::string name = std::string("index.") + kFileSuffixes[file];
    const std::string content = read_file(directory / name);
    for_each_line(content, [&](std::string_view line, std::size_t line_number) {
      if (line.empty() || line.starts_with("  ")) return;
      auto fail = [&](const std::string& what) { throw ParseError(name, line_number, what); };

      const auto fields = split_spaces(line);
      if (fields.size() < 6) fail("too few fields in index line");
      const auto synset_count = parse_integer<std::size_t>(fields[2]);
      const auto pointer_count = parse_integer<std::size_t>(fields[3]);
      if (!synset_count || !pointer_count) fail("bad synset_cnt or p_cnt");
      if (fields.size() != 4 + *pointer_count + 2 + *synset_count) fail("field count mismatch");
      if (fields[1].size() != 1 || file_index_for(fields[1][0]) != file) fail("pos does not match index file");

      const std::string lemma = text::normalize_lemma(fields[0]);
      for (std::size_t k = 0; k < *synset_count; ++k) {
        const std::string_view token = fields[4 + *pointer_count + 2 + k];
        const auto offset = parse_integer<std::uint32_t>(token);
        if (!offset) fail("bad synset offset '" + std::string(token) + "'");
        const auto it = by_file_offset.find(file_offset_key(file, *offset));
        if (it == by_file_offset.end()) {
          throw IntegrityError(name + ":" + std::to_string(line_number) + ": index entry '" + lemma +
                               "' names missing synset " + std::string(token));
        }
        const SynsetId id = db.synsets_[it->second].id;
        auto key = std::make_pair(lemma, id.pos);
        auto [slot, inserted] = db.index_.try_emplace(key);
        if (inserted) db.index_order_.push_back(std::move(key));
        if (std::find(slot->second.begin(), slot->second.end(), id) == slot->second.end()) {
          slot->second.push_back(id);
        }
      }
    });
  }

  return db;
}

std::vector<const Synset*> LexicalDatabase::synsets_of(std::string_view lemma,
                                                        std::optional<PartOfSpeech> pos) const {
  std::vector<const Synset*> out;
  const std::string key = text::normalize_lemma(lemma);
  if (key.empty()) return out;
  for (PartOfSpeech p : kAllPartsOfSpeech) {
    if (pos && *pos != p) continue;
    const auto it = index_.find({key, p});
    if (it == index_.end()) continue;
    for (const SynsetId& id : it->second) out.push_back(&at(id));
  }
  return out;
}

const std::vector<SynsetId>& LexicalDatabase::related_synsets(SynsetId id, Relation relation) const {
  const Synset& s = at(id);
  return relation == Relation::hypernym ? s.hypernym_ids : s.hyponym_ids;
}

const Synset* LexicalDatabase::find(SynsetId id) const {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &synsets_[it->second];
}

const Synset& LexicalDatabase::at(SynsetId id) const {
  const Synset* s = find(id);
  if (s == nullptr) throw IntegrityError("unknown synset " + to_string(id));
  return *s;
}

const std::vector<SynsetId>& LexicalDatabase::index_lookup(const std::string& normalized_lemma,
                                                           PartOfSpeech pos) const {
  static const std::vector<SynsetId> kEmpty;
  const auto it = index_.find({normalized_lemma, pos});
  return it == index_.end() ? kEmpty : it->second;
}

void LexicalDatabase::verify_integrity() const {
  for (const auto& key : index_order_) {
    for (const SynsetId& id : index_.at(key)) {
      const Synset* s = find(id);
      if (s == nullptr) throw IntegrityError("index entry '" + key.first + "' names missing synset " + to_string(id));
      if (id.pos != key.second) throw IntegrityError("index entry '" + key.first + "' has mismatched pos for " + to_string(id));
      const bool listed = std::any_of(s->lemmas.begin(), s->lemmas.end(), [&](const std::string& l) {
        return text::normalize_lemma(l) == key.first;
      });
      if (!listed) throw IntegrityError("synset " + to_string(id) + " does not list lemma '" + key.first + "'");
    }
  }
  for (const Synset& s : synsets_) {
    if (s.lemmas.empty()) throw IntegrityError("synset " + to_string(s.id) + " has no lemmas");
    for (const auto* list : {&s.hypernym_ids, &s.hyponym_ids}) {
      std::unordered_set<SynsetId, SynsetIdHash> seen;
      for (const SynsetId& target : *list) {
        if (find(target) == nullptr) {
          throw IntegrityError("dangling pointer from " + to_string(s.id) + " to " + to_string(target));
        }
        if (!seen.insert(target).second) {
          throw IntegrityError("duplicate pointer from " + to_string(s.id) + " to " + to_string(target));
        }
      }
    }
    if (std::find(s.hypernym_ids.begin(), s.hypernym_ids.end(), s.id) != s.hypernym_ids.end()) {
      throw IntegrityError("synset " + to_string(s.id) + " is its own hypernym");
    }
  }
}

SentimentTable SentimentTable::load(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) throw ResourceError("missing SentiWordNet file " + path.string());
  const std::string name = path.filename().string();
  const std::string content = read_file(path);
  SentimentTable table;
  for_each_line(content, [&](std::string_view line, std::size_t line_number) {
    if (line.empty() || line.front() == '#') return;
    auto fail = [&](const std::string& what) { throw ParseError(name, line_number, what); };
    const auto fields = split_tabs(line);
    if (fields.size() < 5) fail("expected 6 tab-separated fields");
    if (fields[0].size() != 1) fail("bad POS '" + std::string(fields[0]) + "'");
    auto pos = pos_from_wndb_char(fields[0][0]);
    if (!pos) fail("bad POS '" + std::string(fields[0]) + "'");
    if (*pos == PartOfSpeech::adjective_satellite) pos = PartOfSpeech::adjective;
    const auto offset = parse_integer<std::uint32_t>(fields[1]);
    if (!offset) fail("bad synset ID '" + std::string(fields[1]) + "'");
    const auto pos_score = parse_double(fields[2]);
    const auto neg_score = parse_double(fields[3]);
    if (!pos_score || !neg_score) fail("non-numeric score");
    if (*pos_score < 0.0 || *pos_score > 1.0 || *neg_score < 0.0 || *neg_score > 1.0) {
      fail("score outside [0,1]");
    }
    if (*pos_score + *neg_score > 1.0 + 1e-9) fail("PosScore + NegScore exceeds 1");
    const SynsetId id{*pos, *offset};
    if (!table.entries_.emplace(id, SentimentScore{*pos_score, *neg_score}).second) {
      fail("duplicate entry " + to_string(id));
    }
  });
  return table;
}

SentimentScore SentimentTable::sentiment_of(SynsetId id) const {
  if (id.pos == PartOfSpeech::adjective_satellite) id.pos = PartOfSpeech::adjective;
  const auto it = entries_.find(id);
  return it == entries_.end() ? SentimentScore{} : it->second;
}

bool SentimentTable::contains(SynsetId id) const {
  if (id.pos == PartOfSpeech::adjective_satellite) id.pos = PartOfSpeech::adjective;
  return entries_.contains(id);
}

FrequencyTable FrequencyTable::load(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) throw ResourceError("missing frequency file " + path.string());
  const std::string name = path.filename().string();
  const std::string content = read_file(path);
  FrequencyTable table;
  for_each_line(content, [&](std::string_view line, std::size_t line_number) {
    if (line.empty()) return;
    auto fail = [&](const std::string& what) { throw ParseError(name, line_number, what); };
    const auto fields = split_tabs(line);
    if (fields.size() != 2) fail("expected word<TAB>count");
    if (line_number == 1 && text::to_lower(fields[0]) == "word" && text::to_lower(fields[1]) == "count") return;
    if (!fields[1].empty() && fields[1].front() == '-') fail("negative count");
    const auto count = parse_integer<std::uint64_t>(fields[1]);
    if (!count) fail("count is not a non-negative integer: '" + std::string(fields[1]) + "'");
    std::string word = text::to_lower(fields[0]);
    if (word.empty()) fail("empty word");
    if (!table.counts_.emplace(word, *count).second) fail("duplicate word '" + word + "'");
    table.order_.push_back(std::move(word));
    table.total_ += *count;
  });
  if (table.total_ == 0) throw ParseError(name, 0, "total count must be positive");
  return table;
}

FrequencyTable FrequencyTable::from_counts(std::vector<std::pair<std::string, std::uint64_t>> counts) {
  FrequencyTable table;
  for (auto& [word, count] : counts) {
    std::string key = text::to_lower(word);
    if (!table.counts_.emplace(key, count).second) throw ArgumentError("duplicate word '" + key + "'");
    table.order_.push_back(std::move(key));
    table.total_ += count;
  }
  if (table.total_ == 0) throw ArgumentError("total count must be positive");
  return table;
}

std::uint64_t FrequencyTable::count_of(std::string_view word) const {
  const auto it = counts_.find(text::to_lower(word));
  return it == counts_.end() ? 0 : it->second;
}

ZipfValue FrequencyTable::zipf_of(std::string_view word, double add_k) const {
  const double count = static_cast<double>(count_of(word));
  if (add_k > 0.0) {
    const double smoothed = (count + add_k) / (static_cast<double>(total_) + add_k * static_cast<double>(counts_.size() + 1));
    return {smoothed, std::log10(smoothed * 1e9)};
  }
  if (count == 0.0) return {};
  const double frequency = count / static_cast<double>(total_);
  return {frequency, std::log10(frequency * 1e9)};
}

}  // namespace readengine
