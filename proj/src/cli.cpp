#include "readengine/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_util.hpp"
#include "readengine/error.hpp"
#include "readengine/io.hpp"
#include "readengine/kernels.hpp"
#include "readengine/text.hpp"

namespace readengine::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_alpha(std::string_view s, const std::string& where) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ArgumentError(where + ": alpha is not a number");
  }
  if (!(v > 0.0 && v < 1.0)) throw ArgumentError(where + ": alpha must be in (0, 1)");
  return v;
}

// Options shared by every subcommand, filled by CLI11.
struct Flags {
  std::string config_path;
  std::optional<std::string> model;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
  double min_delta = 0.0;
  std::optional<std::size_t> max_subs;
  std::optional<std::string> dimension;
  std::string mode;
  std::string output;
  std::optional<std::string> format;
  std::string input;
};

ResourceBundle load_resources(const Config& c) {
  if (c.wordnet_dir.empty()) throw ResourceError("wordnet_dir is not configured");
  if (c.sentiwordnet_path.empty()) throw ResourceError("sentiwordnet_path is not configured");
  if (c.frequency_path.empty()) throw ResourceError("frequency_path is not configured");
  return ResourceBundle::load(c.wordnet_dir, c.sentiwordnet_path, c.frequency_path);
}

CoefficientVector resolve_model(const std::string& spec) {
  if (const auto d = dimension_from_name(spec)) return paper_coefficients(*d);
  return io::read_model(spec).coefficients;
}

Dimension require_dimension(const std::string& name) {
  const auto d = dimension_from_name(name);
  if (!d) throw ArgumentError("unknown dimension '" + name + "'");
  return *d;
}

// Fills in missing feature vectors, loading resources only when needed.
void ensure_features(std::vector<LabeledWord>& rows, const Config& config) {
  std::vector<std::string> missing;
  for (const auto& r : rows) {
    if (!r.features) missing.push_back(text::to_lower(r.word));
  }
  if (missing.empty()) return;
  const auto resources = load_resources(config);
  const auto features = kernels::extract_features_parallel(missing, resources);
  std::size_t k = 0;
  for (auto& r : rows) {
    if (!r.features) r.features = features[k++];
  }
}

class Emitter {
 public:
  Emitter(const Flags& flags, std::ostream& out, CommandOutcome& outcome)
      : flags_(flags), out_(out), outcome_(outcome) {}

  void operator()(std::string_view content) {
    if (flags_.output.empty()) {
      out_ << content;
      out_.flush();
      return;
    }
    io::write_file(flags_.output, content);
    outcome_.report_path = flags_.output;
  }

 private:
  const Flags& flags_;
  std::ostream& out_;
  CommandOutcome& outcome_;
};

OutputFormat pick_format(const Flags& flags, const Config& config, OutputFormat fallback) {
  if (flags.format) {
    const auto f = output_format_from_name(*flags.format);
    if (!f) throw ArgumentError("unknown format '" + *flags.format + "'");
    return *f;
  }
  return config.output_format.value_or(fallback);
}

void cmd_features(const Flags& flags, const Config& config, Emitter& emit) {
  auto words = io::read_lines(flags.input);
  const auto format = pick_format(flags, config, OutputFormat::csv);
  const auto resources = load_resources(config);
  for (auto& w : words) w = text::to_lower(w);
  FeatureTable table{words, kernels::extract_features_parallel(words, resources)};
  emit(emit_report(table, format));
}

void cmd_score(const Flags& flags, const Config& config, Emitter& emit) {
  auto words = io::read_lines(flags.input);
  const auto format = pick_format(flags, config, OutputFormat::csv);
  const auto model = resolve_model(flags.model.value_or(config.default_model));
  const auto resources = load_resources(config);
  for (auto& w : words) w = text::to_lower(w);
  const auto features = kernels::extract_features_parallel(words, resources);
  ScoreTable table{words, kernels::score_parallel(features, model)};
  emit(emit_report(table, format));
}

void cmd_rewrite(const Flags& flags, const Config& config, Emitter& emit) {
  const auto titles = io::read_lines(flags.input);
  const auto format = pick_format(flags, config, OutputFormat::csv);
  RewritePolicy policy;
  policy.model = resolve_model(flags.model.value_or(config.default_model));
  policy.min_delta = flags.min_delta;
  policy.max_substitutions = flags.max_subs;
  const auto resources = load_resources(config);
  RewriteBatch batch{kernels::rewrite_parallel(titles, resources, policy)};
  emit(emit_report(batch, format));
  if (format == OutputFormat::csv && !flags.output.empty()) {
    io::write_file(flags.output + ".json", emit_report(batch, OutputFormat::json));
  }
}

void cmd_train(const Flags& flags, const Config& config, Emitter& emit) {
  if (!flags.dimension) throw ArgumentError("train needs --dimension");
  const Dimension dim = require_dimension(*flags.dimension);
  auto rows = io::read_labeled_csv(flags.input);
  std::vector<TrainingSample> samples;
  for (const auto& r : rows) {
    if (!r.labels.contains(dim)) throw DataError("labeled data has no '" + std::string(to_string(dim)) + "' column");
  }
  ensure_features(rows, config);
  samples.reserve(rows.size());
  for (const auto& r : rows) samples.push_back({*r.features, r.labels.at(dim)});
  TrainConfig tc;
  tc.seed = flags.seed.value_or(config.seed);
  emit(io::model_to_json(fit_logistic(samples, tc)));
}

void cmd_evaluate(const Flags& flags, const Config& config, Emitter& emit) {
  const auto format = pick_format(flags, config, OutputFormat::text);
  const auto model = resolve_model(flags.model.value_or(config.default_model));
  if (model.kind != ModelKind::logistic) throw ArgumentError("evaluate needs a logistic model");
  const Dimension dim = require_dimension(flags.dimension.value_or("ie"));
  auto rows = io::read_labeled_csv(flags.input);
  for (const auto& r : rows) {
    if (!r.labels.contains(dim)) throw DataError("labeled data has no '" + std::string(to_string(dim)) + "' column");
  }
  ensure_features(rows, config);
  std::vector<int> predictions;
  std::vector<int> labels;
  for (const auto& r : rows) {
    predictions.push_back(classify(logistic_probability(*r.features, model)));
    labels.push_back(r.labels.at(dim));
  }
  emit(emit_report(evaluate_classification(predictions, labels), format));
}

void cmd_label(const Flags& flags, const Config& config, Emitter& emit) {
  const auto records = io::read_study1_csv(flags.input);
  const auto pairs = derive_pairs(records);
  const auto labeled = label_from_experiment(records, pairs, flags.alpha.value_or(config.alpha));
  emit(io::labeled_csv(labeled));
}

void cmd_stats(const Flags& flags, const Config& config, Emitter& emit) {
  const double alpha = flags.alpha.value_or(config.alpha);
  const auto format = pick_format(flags, config, OutputFormat::json);
  if (flags.mode == "study1") {
    emit(emit_report(study1_report(io::read_study1_csv(flags.input), alpha), format));
  } else if (flags.mode == "study3") {
    emit(emit_report(study3_report(io::read_study3_csv(flags.input), alpha), format));
  } else {
    throw ArgumentError("--mode must be study1 or study3");
  }
}

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  err << canonical_json({{"error", kind}, {"message", message}}) << "\n";
}

}  // namespace

Config default_config() {
  Config c;
#ifdef READENGINE_DEFAULT_RESOURCE_DIR
  const std::filesystem::path dir = READENGINE_DEFAULT_RESOURCE_DIR;
  c.wordnet_dir = dir / "wordnet-3.0";
  c.sentiwordnet_path = dir / "SentiWordNet_3.0.0.txt";
  c.frequency_path = dir / "subtlex-us.tsv";
#endif
  return c;
}

Config Config::load(const std::filesystem::path& path) {
  const std::string source = path.string();
  const std::string content = io::read_file(path);
  const auto base = path.parent_path();
  auto resolve = [&](std::string_view v) {
    std::filesystem::path p{std::string(v)};
    return p.is_relative() ? base / p : p;
  };

  Config c = default_config();
  std::istringstream in(content);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    const auto body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, n, "expected key=value");
    const auto key = trim(body.substr(0, eq));
    const auto value = trim(body.substr(eq + 1));
    if (key == "wordnet_dir") {
      c.wordnet_dir = resolve(value);
    } else if (key == "sentiwordnet_path") {
      c.sentiwordnet_path = resolve(value);
    } else if (key == "frequency_path") {
      c.frequency_path = resolve(value);
    } else if (key == "default_model") {
      c.default_model = dimension_from_name(value) ? std::string(value) : resolve(value).string();
    } else if (key == "alpha") {
      c.alpha = parse_alpha(value, source + ":" + std::to_string(n));
    } else if (key == "seed") {
      std::uint64_t s = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
      if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError(source, n, "seed must be a non-negative integer");
      }
      c.seed = s;
    } else if (key == "output_format") {
      c.output_format = output_format_from_name(value);
      if (!c.output_format) throw ParseError(source, n, "unknown output_format '" + std::string(value) + "'");
    } else {
      throw ParseError(source, n, "unknown key '" + std::string(key) + "'");
    }
  }
  return c;
}

CommandOutcome run_command(const std::vector<std::string>& args, const Config& config, std::ostream& out,
                           std::ostream& err) {
  CLI::App app{"Score, rewrite and analyse words and titles for reader engagement.", "read-engine"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Flags flags;
  app.add_option("--config", flags.config_path, "key=value config file");
  app.add_option("--alpha", flags.alpha, "significance level");
  app.add_option("--seed", flags.seed, "random seed");
  app.add_option("--output", flags.output, "write the primary output here instead of stdout");
  app.add_option("--format", flags.format, "json, csv or text");
  app.fallthrough();

  auto* features = app.add_subcommand("features", "READ feature vectors for a word list");
  auto* score = app.add_subcommand("score", "model score per word");
  auto* rewrite = app.add_subcommand("rewrite", "substitute synonyms that raise the predicted score");
  auto* train = app.add_subcommand("train", "fit a logistic model on a labeled CSV");
  auto* evaluate = app.add_subcommand("evaluate", "classification metrics for a logistic model");
  auto* label = app.add_subcommand("label", "derive word labels from Study 1 records");
  auto* stats = app.add_subcommand("stats", "study report");
  for (auto* sub : {features, score, rewrite, train, evaluate, label, stats}) {
    sub->add_option("input", flags.input, "input file")->required();
    sub->fallthrough();
  }
  for (auto* sub : {score, rewrite, evaluate}) {
    sub->add_option("--model", flags.model, "participation, perception, ie, or an artifact path");
  }
  rewrite->add_option("--min-delta", flags.min_delta, "minimum score gain for a substitution");
  rewrite->add_option("--max-subs", flags.max_subs, "substitution budget per title");
  train->add_option("--dimension", flags.dimension, "label column to fit");
  evaluate->add_option("--dimension", flags.dimension, "label column to compare against");
  stats->add_option("--mode", flags.mode, "study1 or study3")->required();

  // CLI11 reports a stray word as "A subcommand is required"; name it instead.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.starts_with("--")) {
      if (a.find('=') == std::string::npos && a != "--help" && a != "--help-all") ++i;
      continue;
    }
    if (a.starts_with("-")) continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      report_error(err, "usage_error", "unknown subcommand '" + a + "'");
      out << app.help();
      return {1, std::nullopt};
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {0, std::nullopt};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {0, std::nullopt};
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage_error", e.what());
    out << app.help();
    return {1, std::nullopt};
  }

  CommandOutcome outcome;
  try {
    Config effective = flags.config_path.empty() ? config : Config::load(flags.config_path);
    if (flags.alpha && !(*flags.alpha > 0.0 && *flags.alpha < 1.0)) throw ArgumentError("--alpha must be in (0, 1)");
    if (flags.max_subs && *flags.max_subs == 0) throw ArgumentError("--max-subs must be positive");
    Emitter emit(flags, out, outcome);

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "features") cmd_features(flags, effective, emit);
    else if (name == "score") cmd_score(flags, effective, emit);
    else if (name == "rewrite") cmd_rewrite(flags, effective, emit);
    else if (name == "train") cmd_train(flags, effective, emit);
    else if (name == "evaluate") cmd_evaluate(flags, effective, emit);
    else if (name == "label") cmd_label(flags, effective, emit);
    else cmd_stats(flags, effective, emit);
  } catch (const ResourceError& e) {
    report_error(err, e.kind(), e.what());
    return {2, std::nullopt};
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return {1, std::nullopt};
  }
  return outcome;
}

}  // namespace readengine::cli
