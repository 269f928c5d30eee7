/*
 * Copyright 2026 The Peyv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "peyv/errors.hpp"
#include "peyv/eval.hpp"
#include "peyv/lemmatizer.hpp"
#include "peyv/ngram_model.hpp"
#include "peyv/noun_lemmatizer.hpp"
#include "peyv/spellchecker.hpp"
#include "peyv/textfile.hpp"
#include "peyv/unicode.hpp"

namespace {

struct Config {
  std::string orthography;
  std::string confusions;
  std::string lexicon;
  std::string affixes;
  std::string templates;
  std::string exceptions;
  std::string model;
  std::string n_values = "3,4,5";
  std::string min_word_freq = "3";
  std::string alpha = "70";
  std::string top_k = "10";
  std::string mode = "ngram_only";
  std::string passes = "1";
};

std::string resolve(const std::filesystem::path& base, const std::string& value) {
  if (value.empty()) return value;
  std::filesystem::path p(value);
  if (p.is_absolute()) return value;
  return (base / p).lexically_normal().string();
}

Config load_config(const std::string& path) {
  Config c;
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  const auto lines = peyv::read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw peyv::ParseError(path + ":" + std::to_string(i + 1) + ": expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "orthography") c.orthography = resolve(base, value);
    else if (key == "confusions") c.confusions = resolve(base, value);
    else if (key == "lexicon") c.lexicon = resolve(base, value);
    else if (key == "affixes") c.affixes = resolve(base, value);
    else if (key == "templates") c.templates = resolve(base, value);
    else if (key == "exceptions") c.exceptions = resolve(base, value);
    else if (key == "model") c.model = resolve(base, value);
    else if (key == "n_values") c.n_values = value;
    else if (key == "min_word_freq") c.min_word_freq = value;
    else if (key == "alpha") c.alpha = value;
    else if (key == "top_k") c.top_k = value;
    else if (key == "mode") c.mode = value;
    else if (key == "passes") c.passes = value;
    else throw peyv::ParseError(path + ":" + std::to_string(i + 1) + ": unknown key '" + key + "'");
  }
  return c;
}

const std::string& need(const std::string& value, const char* key) {
  if (value.empty())
    throw peyv::ValidationError(std::string("config key '") + key + "' is required for this command");
  return value;
}

std::int64_t parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw peyv::ParseError(std::string("bad ") + what + ": '" + text + "'");
  }
}

std::vector<std::size_t> parse_n_values(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& field : peyv::split(text, ',')) {
    const std::int64_t v = parse_int(field, "gram size");
    if (v < 1) throw peyv::ValidationError("gram size must be at least 1");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<int> parse_k_values(const std::string& text) {
  std::vector<int> out;
  for (const auto& field : peyv::split(text, ','))
    out.push_back(static_cast<int>(parse_int(field, "prediction count")));
  return out;
}

std::vector<peyv::Rational> parse_alpha_values(const std::string& text) {
  std::vector<peyv::Rational> out;
  for (const auto& field : peyv::split(text, ','))
    out.push_back(peyv::Rational::parse_decimal(field));
  return out;
}

peyv::CheckMode parse_mode(const std::string& text) {
  if (text == "ngram_only") return peyv::CheckMode::ngram_only;
  if (text == "with_lexicon") return peyv::CheckMode::with_lexicon;
  throw peyv::ValidationError("unknown mode '" + text + "' (expected ngram_only or with_lexicon)");
}

// Everything a command might need, loaded on demand. The lemmatizer holds
// references into this struct, so it lives exactly as long as the command.
struct Engine {
  peyv::NormalizationTable table;
  peyv::ConfusionGroups groups;
  peyv::Lexicon lexicon;
  peyv::AffixInventory affixes;
  std::optional<peyv::Lemmatizer> lemmatizer;
  std::optional<peyv::NGramIndex> index;

  void load_table(const Config& c) {
    table = peyv::NormalizationTable::load(need(c.orthography, "orthography"));
  }
  void load_groups(const Config& c) {
    if (!c.confusions.empty()) groups = peyv::ConfusionGroups::load(c.confusions, table);
  }
  void load_lemmatizer(const Config& c) {
    lexicon = peyv::Lexicon::load(need(c.lexicon, "lexicon"), table);
    if (!c.exceptions.empty()) lexicon.load_exceptions(c.exceptions, table);
    affixes = peyv::AffixInventory::load(need(c.affixes, "affixes"), table);
    auto templates = peyv::load_verb_templates(need(c.templates, "templates"), table);
    lemmatizer.emplace(lexicon, affixes, std::move(templates));
  }
  void load_index(const Config& c, const std::string& model_override) {
    const std::string path = model_override.empty() ? c.model : model_override;
    index = peyv::NGramIndex::load(need(path, "model"));
  }
};

std::vector<std::string> read_input_words(const std::string& path) {
  std::vector<std::string> lines;
  if (path.empty() || path == "-") {
    std::string line;
    while (std::getline(std::cin, line)) lines.push_back(line);
  } else {
    lines = peyv::read_lines(path);
  }
  std::vector<std::string> words;
  for (std::string& line : lines) {
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::size_t last = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(first, last - first + 1));
  }
  return words;
}

std::string join_suggestions(const std::vector<std::u32string>& suggestions) {
  std::string out;
  for (std::size_t i = 0; i < suggestions.size(); ++i) {
    if (i > 0) out += '|';
    out += peyv::utf8_encode(suggestions[i]);
  }
  return out;
}

int cmd_build(const Config& config, const std::string& corpus, const std::string& out_model,
              const std::string& nvalues_flag, const std::string& minfreq_flag) {
  Engine engine;
  engine.load_table(config);

  peyv::NGramIndex::Params params;
  params.n_values = parse_n_values(nvalues_flag.empty() ? config.n_values : nvalues_flag);
  params.min_word_freq =
      parse_int(minfreq_flag.empty() ? config.min_word_freq : minfreq_flag, "min_word_freq");
  params.validate();

  peyv::IndexBuilder builder(params, engine.table);
  builder.record_source("orthography", peyv::read_file(need(config.orthography, "orthography")));
  builder.add_corpus(corpus);
  const peyv::NGramIndex index = builder.build();

  const std::string model_path = out_model.empty() ? need(config.model, "model") : out_model;
  index.save(model_path);

  const peyv::NGramIndex::Stats stats = index.stats();
  if (stats.total_tokens == 0) std::cerr << "warning: corpus produced no tokens\n";
  std::cout << "tokens\t" << stats.total_tokens << "\n";
  std::cout << "distinct_words\t" << stats.distinct_words << "\n";
  std::cout << "dropped_words\t" << stats.dropped_words << "\n";
  for (const auto& [n, count] : stats.grams_per_n)
    std::cout << "grams_n" << n << "\t" << count << "\n";
  std::cout << "model\t" << model_path << "\n";
  return 0;
}

int cmd_lemmatize(const Config& config, const std::string& input, bool tree, bool json,
                  bool features) {
  Engine engine;
  engine.load_table(config);
  engine.load_lemmatizer(config);

  for (const std::string& raw : read_input_words(input)) {
    const std::u32string word = engine.table.apply(peyv::utf8_decode(raw));
    const peyv::Lemma lemma = engine.lemmatizer->lemmatize(word);
    if (json) {
      nlohmann::ordered_json j;
      j["word"] = peyv::utf8_encode(word);
      j["lemma"] = peyv::utf8_encode(lemma.root);
      j["pos"] = peyv::pos_name(lemma.pos);
      j["confidence"] = lemma.confidence == peyv::Confidence::lexicon_match ? "lexicon_match"
                                                                            : "heuristic";
      if (lemma.verb) j["features"] = peyv::to_string(*lemma.verb);
      if (tree && lemma.analysis)
        j["tree"] = nlohmann::ordered_json::parse(peyv::tree_to_json_string(*lemma.analysis));
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << peyv::utf8_encode(lemma.root);
    if (features && lemma.verb) std::cout << "\t" << peyv::to_string(*lemma.verb);
    std::cout << "\n";
    if (tree && lemma.analysis) std::cout << peyv::render_tree(*lemma.analysis);
  }
  return 0;
}

int cmd_check(const Config& config, const std::string& input, const std::string& mode_flag,
              const std::string& model_flag, bool json) {
  Engine engine;
  engine.load_table(config);
  engine.load_groups(config);
  engine.load_index(config, model_flag);
  const peyv::CheckMode mode = parse_mode(mode_flag.empty() ? config.mode : mode_flag);
  if (mode == peyv::CheckMode::with_lexicon) engine.load_lemmatizer(config);
  const peyv::SpellChecker checker(*engine.index, engine.groups,
                                   engine.lemmatizer ? &*engine.lemmatizer : nullptr);

  for (const std::string& raw : read_input_words(input)) {
    const std::u32string word = engine.table.apply(peyv::utf8_decode(raw));
    const peyv::DetectionReport report = checker.detect(word, mode);
    if (json) {
      nlohmann::ordered_json j;
      j["word"] = peyv::utf8_encode(word);
      j["flagged"] = report.flagged;
      auto& grams = j["grams"] = nlohmann::ordered_json::array();
      for (const auto& obs : report.grams) {
        grams.push_back({{"gram", peyv::utf8_encode(obs.gram)},
                         {"position", peyv::position_name(obs.position)},
                         {"offset", obs.offset},
                         {"n", obs.n},
                         {"frequency", obs.frequency}});
      }
      if (report.culprit) {
        j["culprit"] = {{"gram", peyv::utf8_encode(report.culprit->gram)},
                        {"position", peyv::position_name(report.culprit->position)},
                        {"offset", report.culprit->offset},
                        {"n", report.culprit->n},
                        {"frequency", report.culprit->frequency}};
      }
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << peyv::utf8_encode(word) << "\t" << (report.flagged ? "true" : "false") << "\t"
              << (report.culprit ? peyv::utf8_encode(report.culprit->gram) : "") << "\n";
  }
  return 0;
}

int cmd_correct(const Config& config, const std::string& input, const std::string& mode_flag,
                const std::string& model_flag, const std::string& alpha_flag,
                const std::string& topk_flag, const std::string& passes_flag, bool json) {
  Engine engine;
  engine.load_table(config);
  engine.load_groups(config);
  engine.load_index(config, model_flag);
  const peyv::CheckMode mode = parse_mode(mode_flag.empty() ? config.mode : mode_flag);
  if (mode == peyv::CheckMode::with_lexicon) engine.load_lemmatizer(config);
  const peyv::SpellChecker checker(*engine.index, engine.groups,
                                   engine.lemmatizer ? &*engine.lemmatizer : nullptr);

  peyv::RankParams params;
  params.alpha = peyv::Rational::parse_decimal(alpha_flag.empty() ? config.alpha : alpha_flag);
  params.top_k = static_cast<int>(parse_int(topk_flag.empty() ? config.top_k : topk_flag, "top_k"));
  params.validate();
  const int passes =
      static_cast<int>(parse_int(passes_flag.empty() ? config.passes : passes_flag, "passes"));
  if (passes < 1 || passes > 3) throw peyv::ValidationError("passes must be between 1 and 3");

  for (const std::string& raw : read_input_words(input)) {
    const std::u32string word = engine.table.apply(peyv::utf8_decode(raw));
    const peyv::DetectionReport report = checker.detect(word, mode);
    const std::vector<std::u32string> suggestions = checker.correct(word, params, mode, passes);
    if (json) {
      nlohmann::ordered_json j;
      j["word"] = peyv::utf8_encode(word);
      j["flagged"] = report.flagged;
      auto& list = j["suggestions"] = nlohmann::ordered_json::array();
      for (const auto& s : suggestions) list.push_back(peyv::utf8_encode(s));
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << peyv::utf8_encode(word) << "\t" << (report.flagged ? "true" : "false") << "\t"
              << join_suggestions(suggestions) << "\n";
  }
  return 0;
}

int cmd_eval(const Config& config, const std::string& gold_path, const std::string& task,
             const std::string& mode_flag, const std::string& model_flag,
             const std::string& alpha_flag, const std::string& topk_flag,
             const std::string& sweep_alphas, const std::string& sweep_ks,
             const std::string& tsv_out) {
  Engine engine;
  engine.load_table(config);
  const std::vector<peyv::GoldPair> gold = peyv::load_gold(gold_path, engine.table);

  if (task == "lemmatize") {
    engine.load_lemmatizer(config);
    const peyv::EvalReport report = peyv::accuracy_report(gold, [&](const std::u32string& input) {
      return engine.lemmatizer->lemmatize(input).root;
    });
    std::cout << peyv::format_report(report);
    if (!tsv_out.empty()) peyv::write_file(tsv_out, peyv::report_tsv(report));
    return 0;
  }
  if (task != "correct") throw peyv::ValidationError("unknown task '" + task + "'");

  engine.load_groups(config);
  engine.load_index(config, model_flag);
  const peyv::CheckMode mode = parse_mode(mode_flag.empty() ? config.mode : mode_flag);
  if (mode == peyv::CheckMode::with_lexicon) engine.load_lemmatizer(config);
  const peyv::SpellChecker checker(*engine.index, engine.groups,
                                   engine.lemmatizer ? &*engine.lemmatizer : nullptr);

  peyv::RankParams params;
  params.alpha = peyv::Rational::parse_decimal(alpha_flag.empty() ? config.alpha : alpha_flag);
  params.top_k = static_cast<int>(parse_int(topk_flag.empty() ? config.top_k : topk_flag, "top_k"));
  params.validate();

  if (!sweep_alphas.empty()) {
    const std::vector<peyv::Rational> alphas = parse_alpha_values(sweep_alphas);
    const std::vector<int> ks = parse_k_values(sweep_ks.empty() ? "1,2,5,10" : sweep_ks);
    const peyv::SweepResult sweep = peyv::alpha_sweep(
        gold,
        [&](const std::u32string& input, const peyv::Rational& alpha) {
          peyv::RankParams p = params;
          p.alpha = alpha;
          p.top_k = 0;
          for (int k : ks) p.top_k = std::max(p.top_k, k);
          return checker.correct(input, p, mode);
        },
        alphas, ks);
    std::cout << peyv::format_sweep(sweep);
    if (!tsv_out.empty()) peyv::write_file(tsv_out, peyv::sweep_tsv(sweep));
    return 0;
  }

  const peyv::EvalReport report = peyv::hit_at_k(
      gold,
      [&](const std::u32string& input) { return checker.correct(input, params, mode); },
      params.top_k);
  std::cout << peyv::format_report(report);
  if (!tsv_out.empty()) peyv::write_file(tsv_out, peyv::report_tsv(report));
  return 0;
}

int cmd_validate(const Config& config) {
  Engine engine;
  std::vector<std::string> problems;
  engine.load_table(config);
  std::cout << "ok\torthography\t" << config.orthography << "\n";

  const auto check = [&problems](const char* what, const std::string& path, auto&& fn) {
    if (path.empty()) return;
    try {
      fn();
      std::cout << "ok\t" << what << "\t" << path << "\n";
    } catch (const peyv::IoError&) {
      throw; // missing files are I/O failures, not data problems
    } catch (const peyv::Error& e) {
      problems.push_back(e.what());
      std::cout << "fail\t" << what << "\t" << path << "\n";
    }
  };

  check("confusions", config.confusions, [&] { engine.load_groups(config); });
  check("lexicon", config.lexicon, [&] {
    engine.lexicon = peyv::Lexicon::load(config.lexicon, engine.table);
    if (!config.exceptions.empty()) engine.lexicon.load_exceptions(config.exceptions, engine.table);
    const auto counts = engine.lexicon.counts();
    std::cout << "lexicon\tnouns=" << counts.nouns << " verbs=" << counts.verbs
              << " other=" << counts.other << " exceptions=" << counts.exceptions << "\n";
  });
  check("affixes", config.affixes, [&] {
    engine.affixes = peyv::AffixInventory::load(config.affixes, engine.table);
    const auto counts = engine.affixes.counts();
    std::cout << "affixes\tinflectional=" << counts.inflectional
              << " derivational=" << counts.derivational << " prefixes=" << counts.prefixes
              << " suffixes=" << counts.suffixes << "\n";
  });
  check("templates", config.templates, [&] {
    const auto templates = peyv::load_verb_templates(config.templates, engine.table);
    std::cout << "templates\tcount=" << templates.size() << "\n";
  });
  if (!config.model.empty() && !std::filesystem::exists(config.model)) {
    std::cout << "skip\tmodel\t" << config.model << " (not built yet)\n";
  } else {
    check("model", config.model, [&] {
      const peyv::NGramIndex index = peyv::NGramIndex::load(config.model);
      for (const auto& [name, checksum] : index.source_checksums()) {
        if (name == "orthography" && !config.orthography.empty()) {
          if (peyv::fnv1a64(peyv::read_file(config.orthography)) != checksum)
            std::cerr << "warning: model was built against a different orthography table\n";
        }
      }
    });
  }

  if (!problems.empty()) {
    for (const std::string& p : problems) std::cerr << "error: " << p << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sorani Kurdish lemmatization and spell checking toolkit"};
  app.require_subcommand(1);
  app.fallthrough(); // accept --config after the subcommand name too

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file");

  auto* build = app.add_subcommand("build", "Build the gram frequency model from a corpus");
  std::string build_corpus, build_out, build_nvalues, build_minfreq;
  build->add_option("corpus", build_corpus, "corpus directory (*.txt) or line-per-document file")
      ->required();
  build->add_option("--out", build_out, "model output path (overrides config)");
  build->add_option("--nvalues", build_nvalues, "gram sizes, e.g. 3,4,5");
  build->add_option("--min-word-freq", build_minfreq, "drop words seen fewer times than this");

  auto* lemmatize = app.add_subcommand("lemmatize", "Lemmatize words (one per line)");
  std::string lem_input;
  bool lem_tree = false, lem_json = false, lem_features = false;
  lemmatize->add_option("input", lem_input, "word list file, or - for stdin");
  lemmatize->add_flag("--tree", lem_tree, "print the pruning analysis");
  lemmatize->add_flag("--json", lem_json, "machine-readable output");
  lemmatize->add_flag("--features", lem_features, "append verb features to matches");

  auto* check = app.add_subcommand("check", "Detect misspelled words");
  std::string check_input, check_mode, check_model;
  bool check_json = false;
  check->add_option("input", check_input, "word list file, or - for stdin");
  check->add_option("--mode", check_mode, "ngram_only or with_lexicon");
  check->add_option("--model", check_model, "model file (overrides config)");
  check->add_flag("--json", check_json, "machine-readable output");

  auto* correct = app.add_subcommand("correct", "Suggest corrections for misspelled words");
  std::string cor_input, cor_mode, cor_model, cor_alpha, cor_topk, cor_passes;
  bool cor_json = false;
  correct->add_option("input", cor_input, "word list file, or - for stdin");
  correct->add_option("--mode", cor_mode, "ngram_only or with_lexicon");
  correct->add_option("--model", cor_model, "model file (overrides config)");
  correct->add_option("--alpha", cor_alpha, "ranking bias");
  correct->add_option("--topk", cor_topk, "number of suggestions");
  correct->add_option("--passes", cor_passes, "correction passes (1-3)");
  correct->add_flag("--json", cor_json, "machine-readable output");

  auto* eval = app.add_subcommand("eval", "Score predictions against a gold file");
  std::string eval_gold, eval_task = "correct", eval_mode, eval_model, eval_alpha, eval_topk;
  std::string eval_sweep, eval_ks, eval_tsv;
  eval->add_option("gold", eval_gold, "gold TSV: input, gold, optional group")->required();
  eval->add_option("--task", eval_task, "correct or lemmatize");
  eval->add_option("--mode", eval_mode, "ngram_only or with_lexicon");
  eval->add_option("--model", eval_model, "model file (overrides config)");
  eval->add_option("--alpha", eval_alpha, "ranking bias");
  eval->add_option("--topk", eval_topk, "predictions per word");
  eval->add_option("--sweep-alpha", eval_sweep, "comma list of alphas to sweep");
  eval->add_option("--ks", eval_ks, "comma list of prediction counts for the sweep");
  eval->add_option("--tsv", eval_tsv, "write the TSV report here");

  auto* validate = app.add_subcommand("validate", "Check all configured data files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Config config;
    if (!config_path.empty()) config = load_config(config_path);
    if (build->parsed())
      return cmd_build(config, build_corpus, build_out, build_nvalues, build_minfreq);
    if (lemmatize->parsed())
      return cmd_lemmatize(config, lem_input, lem_tree, lem_json, lem_features);
    if (check->parsed()) return cmd_check(config, check_input, check_mode, check_model, check_json);
    if (correct->parsed())
      return cmd_correct(config, cor_input, cor_mode, cor_model, cor_alpha, cor_topk, cor_passes,
                         cor_json);
    if (eval->parsed())
      return cmd_eval(config, eval_gold, eval_task, eval_mode, eval_model, eval_alpha, eval_topk,
                      eval_sweep, eval_ks, eval_tsv);
    if (validate->parsed()) return cmd_validate(config);
  } catch (const peyv::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const peyv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
