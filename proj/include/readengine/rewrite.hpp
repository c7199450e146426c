#pragma once

// Prescriptive rewriting: swap a word for a co-lemma of one of its synsets
// when the engagement model scores the co-lemma higher.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "readengine/features.hpp"
#include "readengine/model.hpp"
#include "readengine/text.hpp"

namespace readengine {

struct Token {
  std::string surface;
  std::string normalized;  // lowercase word form; empty for separators
  bool is_word = false;
  text::Span span;
};

// Lossless: concatenating every surface reproduces the input.
std::vector<Token> tokenize(std::string_view text);

// The 127-word English stopword list.
std::span<const std::string_view> stopwords();
bool is_stopword(std::string_view normalized_word);

struct Alternative {
  std::string lemma;  // wndb form: lowercase, underscores for spaces
  SynsetId shared_synset;
};

// Source of meaning-preserving alternatives for a word. Scoring and policy
// are applied on top of whatever the provider proposes.
class CandidateProvider {
 public:
  virtual ~CandidateProvider() = default;
  virtual std::vector<Alternative> alternatives(std::string_view normalized_word,
                                                const ResourceBundle& resources) const = 0;
};

// Every co-lemma of every synset containing the word, in synsets_of order.
class WordNetCandidateProvider final : public CandidateProvider {
 public:
  std::vector<Alternative> alternatives(std::string_view normalized_word,
                                        const ResourceBundle& resources) const override;
};

const CandidateProvider& wordnet_provider();

struct SubstitutionCandidate {
  std::string original;     // normalized original word
  std::string replacement;  // wndb lemma form
  SynsetId shared_synset;
  double original_score = 0.0;
  double replacement_score = 0.0;
  double delta = 0.0;  // replacement_score - original_score
};

struct RewritePolicy {
  CoefficientVector model = paper_coefficients(Dimension::ie);
  double min_delta = 0.0;  // a substitution needs delta > min_delta
  std::optional<std::size_t> max_substitutions;
  bool skip_stopwords = true;
  bool allow_multiword = false;
};

// Sorted by descending delta, ties by replacement. Excludes the word itself,
// duplicates, multiword lemmas (unless allowed), lemmas that would not stay a
// single word token, and stopword originals when skip_stopwords is set.
std::vector<SubstitutionCandidate> candidates_for(std::string_view word, const ResourceBundle& resources,
                                                  const RewritePolicy& policy,
                                                  const CandidateProvider& provider = wordnet_provider());

struct RewriteResult {
  std::string original_text;
  std::string modified_text;
  std::vector<SubstitutionCandidate> substitutions;
  // Mean model score over word tokens; empty when the text has no words.
  std::optional<double> original_mean_score;
  std::optional<double> modified_mean_score;
};

// Each word token independently takes its best candidate when delta >
// min_delta, left to right, up to max_substitutions. The replacement copies
// the original's casing (ALL CAPS, Initial capital, or lowercase).
RewriteResult rewrite_text(std::string_view text, const ResourceBundle& resources, const RewritePolicy& policy,
                           const CandidateProvider& provider = wordnet_provider());

namespace kernels {

std::vector<RewriteResult> rewrite_serial(std::span<const std::string> texts, const ResourceBundle& resources,
                                          const RewritePolicy& policy);
std::vector<RewriteResult> rewrite_parallel(std::span<const std::string> texts, const ResourceBundle& resources,
                                            const RewritePolicy& policy);

}  // namespace kernels

}  // namespace readengine
