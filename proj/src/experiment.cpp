#include "sentree/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace sentree {

std::vector<const DepTree*> Corpus::document_trees(const Treebank& source, size_t doc) const {
  const DocumentSpan& span = documents[doc];
  std::vector<const DepTree*> out;
  out.reserve(static_cast<size_t>(span.end - span.first));
  for (int i = span.first; i < span.end; ++i)
    out.push_back(&source.trees[static_cast<size_t>(i)]);
  return out;
}

std::vector<DocumentSpan> parse_labels(const std::string& text, const std::string& source) {
  std::vector<DocumentSpan> spans;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != 4)
      throw ParseError(source + ":" + std::to_string(line_no) +
                       ": expected 4 tab-separated columns (id, pos|neg, first, end)");
    DocumentSpan span;
    span.id = fields[0];
    span.gold = polarity_from_name(fields[1]);
    try {
      span.first = std::stoi(fields[2]);
      span.end = std::stoi(fields[3]);
    } catch (const std::exception&) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": non-integer sentence range");
    }
    spans.push_back(std::move(span));
  }
  return spans;
}

namespace {

void validate_spans(const std::vector<DocumentSpan>& spans, size_t sentence_count,
                    const std::string& source) {
  std::vector<std::string> bad_range, bad_overlap, duplicates;
  std::map<std::string, int> seen;
  for (const DocumentSpan& s : spans) {
    if (++seen[s.id] == 2) duplicates.push_back(s.id);
    if (s.first < 0 || s.end <= s.first || s.end > static_cast<int>(sentence_count))
      bad_range.push_back(s.id);
  }
  std::vector<const DocumentSpan*> ordered;
  for (const DocumentSpan& s : spans) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const DocumentSpan* a, const DocumentSpan* b) { return a->first < b->first; });
  for (size_t i = 1; i < ordered.size(); ++i)
    if (ordered[i]->first < ordered[i - 1]->end) bad_overlap.push_back(ordered[i]->id);

  auto join = [](const std::vector<std::string>& ids) {
    std::string out;
    for (const std::string& id : ids) out += (out.empty() ? "" : ", ") + id;
    return out;
  };
  if (!duplicates.empty())
    throw DataError(source + ": duplicate document ids: " + join(duplicates));
  if (!bad_range.empty())
    throw DataError(source + ": sentence ranges out of bounds or empty for documents: " +
                    join(bad_range));
  if (!bad_overlap.empty())
    throw DataError(source + ": overlapping sentence ranges for documents: " + join(bad_overlap));
}

}  // namespace

std::vector<DocumentSpan> load_labels(const std::string& path, const Treebank& corpus) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open labels file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<DocumentSpan> spans = parse_labels(buf.str(), path);
  validate_spans(spans, corpus.trees.size(), path);
  return spans;
}

ExperimentSpec experiment_spec_from_json_text(const std::string& text,
                                              const std::string& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("experiment spec: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("experiment spec: top level must be an object");

  auto resolve = [&base_dir](const std::string& path) {
    if (base_dir.empty() || path.empty() || std::filesystem::path(path).is_absolute())
      return path;
    return (std::filesystem::path(base_dir) / path).string();
  };

  ExperimentSpec spec;
  for (const char* key : {"corpus", "labels", "lexicon"})
    if (!doc.contains(key))
      throw DataError(std::string("experiment spec: missing required key '") + key + "'");
  spec.corpus_path = resolve(doc["corpus"].get<std::string>());
  spec.labels_path = resolve(doc["labels"].get<std::string>());
  spec.lexicon_path = resolve(doc["lexicon"].get<std::string>());

  if (doc.contains("inputs")) {
    for (const auto& item : doc["inputs"]) {
      NamedInput input;
      input.name = item.at("name").get<std::string>();
      input.path = resolve(item.at("path").get<std::string>());
      spec.inputs.push_back(std::move(input));
    }
  }
  if (doc.contains("subsets")) {
    spec.subsets.clear();
    for (const auto& item : doc["subsets"])
      spec.subsets.push_back(subset_from_name(item.get<std::string>()));
  }
  if (doc.contains("rules")) spec.base_rules = ruleset_from_json_text(doc["rules"].dump());
  if (doc.contains("seed")) spec.seed = doc["seed"].get<uint64_t>();
  if (doc.contains("curve")) {
    const auto& curve = doc["curve"];
    if (curve.contains("targets"))
      spec.curve_targets = curve["targets"].get<std::vector<double>>();
    if (curve.contains("seeds"))
      spec.curve_seeds = curve["seeds"].get<std::vector<uint64_t>>();
    if (curve.contains("label_error_share"))
      spec.curve_label_error_share = curve["label_error_share"].get<double>();
    if (curve.contains("label_inventory"))
      spec.curve_label_inventory = curve["label_inventory"].get<std::vector<std::string>>();
  }
  return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open experiment spec: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base_dir = std::filesystem::path(path).parent_path().string();
  try {
    return experiment_spec_from_json_text(buf.str(), base_dir);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

int Experiment::input_index(const std::string& name) const {
  for (size_t i = 0; i < input_names.size(); ++i)
    if (input_names[i] == name) return static_cast<int>(i);
  return -1;
}

void add_input(Experiment& exp, const std::string& name, Treebank trees) {
  if (exp.input_index(name) != -1) throw DataError("duplicate input name: " + name);
  // attachment_scores performs the token-wise alignment check
  attachment_scores(exp.corpus.trees, trees);
  exp.input_names.push_back(name);
  exp.input_trees.push_back(std::move(trees));
}

Experiment load_experiment(const ExperimentSpec& spec) {
  Experiment exp;
  exp.corpus.trees = parse_conll_file(spec.corpus_path);
  exp.corpus.documents = load_labels(spec.labels_path, exp.corpus.trees);
  exp.lexicon = load_lexicon(spec.lexicon_path);
  for (const NamedInput& input : spec.inputs)
    add_input(exp, input.name, parse_conll_file(input.path));
  return exp;
}

ClassificationResult classify_corpus(const Corpus& corpus, const Treebank& trees,
                                     const Lexicon& lex, const RuleSet& rules) {
  ClassificationResult result;
  result.labels.reserve(corpus.documents.size());
  result.correct.reserve(corpus.documents.size());
  long right = 0;
  for (size_t d = 0; d < corpus.documents.size(); ++d) {
    Polarity label = classify_document(corpus.document_trees(trees, d), lex, rules);
    bool ok = label == corpus.documents[d].gold;
    result.labels.push_back(label);
    result.correct.push_back(ok);
    right += ok;
  }
  if (!corpus.documents.empty())
    result.accuracy_percent =
        100.0 * static_cast<double>(right) / static_cast<double>(corpus.documents.size());
  return result;
}

AblationTable run_ablation(const Experiment& exp, const ExperimentSpec& spec) {
  AblationTable table;
  table.inputs = exp.input_names;
  table.subsets = spec.subsets;
  table.cells.resize(exp.input_trees.size());
  for (size_t row = 0; row < exp.input_trees.size(); ++row) {
    table.cells[row].reserve(spec.subsets.size());
    for (RuleSubset subset : spec.subsets) {
      RuleSet rules = ruleset_for_subset(spec.base_rules, subset);
      table.cells[row].push_back(
          classify_corpus(exp.corpus, exp.input_trees[row], exp.lexicon, rules)
              .accuracy_percent);
    }
  }
  return table;
}

CurveSeries run_curve(const Experiment& exp, const ExperimentSpec& spec) {
  if (spec.curve_targets.empty()) throw DataError("curve: no LAS targets given");
  std::vector<uint64_t> seeds = spec.curve_seeds;
  if (seeds.empty()) seeds.push_back(spec.seed);

  CurveSeries series;
  series.corpus_name = std::filesystem::path(spec.corpus_path).filename().string();
  if (series.corpus_name.empty()) series.corpus_name = "corpus";
  RuleSet all_rules = ruleset_for_subset(spec.base_rules, RuleSubset::All);

  for (double target : spec.curve_targets) {
    double las_sum = 0.0, acc_sum = 0.0;
    for (uint64_t seed : seeds) {
      PerturbationConfig cfg;
      cfg.target_las = target;
      cfg.label_error_share = spec.curve_label_error_share;
      cfg.seed = seed;
      cfg.label_inventory = spec.curve_label_inventory;
      auto [perturbed, report] = perturb_treebank(exp.corpus.trees, cfg);
      ClassificationResult cls = classify_corpus(exp.corpus, perturbed, exp.lexicon, all_rules);
      CurveRun run;
      run.target_las = target;
      run.seed = seed;
      run.achieved_las = report.achieved_las;
      run.accuracy_percent = cls.accuracy_percent;
      run.outcomes = cls.correct;
      las_sum += run.achieved_las;
      acc_sum += run.accuracy_percent;
      series.runs.push_back(std::move(run));
    }
    CurvePoint point;
    point.las = las_sum / static_cast<double>(seeds.size());
    point.accuracy_percent = acc_sum / static_cast<double>(seeds.size());
    series.points.push_back(point);
  }
  std::sort(series.points.begin(), series.points.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.las < b.las; });
  return series;
}

ComparisonResult compare_systems(const Experiment& exp, const ExperimentSpec& spec,
                                 const std::string& input_a, const std::string& input_b,
                                 RuleSubset subset) {
  int a = exp.input_index(input_a);
  int b = exp.input_index(input_b);
  if (a == -1) throw DataError("unknown input: " + input_a);
  if (b == -1) throw DataError("unknown input: " + input_b);
  RuleSet rules = ruleset_for_subset(spec.base_rules, subset);
  ClassificationResult ra =
      classify_corpus(exp.corpus, exp.input_trees[static_cast<size_t>(a)], exp.lexicon, rules);
  ClassificationResult rb =
      classify_corpus(exp.corpus, exp.input_trees[static_cast<size_t>(b)], exp.lexicon, rules);
  return chi_squared_compare(ra.correct, rb.correct);
}

TimingStats time_classification(const Corpus& corpus, const Treebank& trees, const Lexicon& lex,
                                const RuleSet& rules, int runs) {
  TimingStats stats;
  stats.runs = runs;
  double total = 0.0;
  for (int r = 0; r < runs; ++r) {
    auto start = std::chrono::steady_clock::now();
    volatile double sink = classify_corpus(corpus, trees, lex, rules).accuracy_percent;
    (void)sink;
    auto stop = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(stop - start).count();
    total += seconds;
    if (r == 0 || seconds < stats.minimum) stats.minimum = seconds;
    if (r == 0 || seconds > stats.maximum) stats.maximum = seconds;
  }
  stats.average = total / static_cast<double>(runs);
  return stats;
}

}  // namespace sentree
