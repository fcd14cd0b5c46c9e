#ifndef SENTREE_EXPERIMENT_HPP
#define SENTREE_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sentree/conll.hpp"
#include "sentree/eval.hpp"
#include "sentree/lexicon.hpp"
#include "sentree/perturb.hpp"
#include "sentree/rules.hpp"
#include "sentree/sentiment.hpp"

namespace sentree {

// One labeled document: a half-open range [first, end) of sentence
// indexes into the corpus treebank.
struct DocumentSpan {
  std::string id;
  Polarity gold = Polarity::Positive;
  int first = 0;
  int end = 0;
};

struct Corpus {
  Treebank trees;
  std::vector<DocumentSpan> documents;

  std::vector<const DepTree*> document_trees(const Treebank& source, size_t doc) const;
};

// Sidecar TSV: doc_id <TAB> pos|neg <TAB> first <TAB> end  (0-based,
// half-open). '#' comments allowed. Spans must be non-empty, in range and
// non-overlapping; violations raise DataError listing the offending ids.
std::vector<DocumentSpan> parse_labels(const std::string& text,
                                       const std::string& source = "<string>");
std::vector<DocumentSpan> load_labels(const std::string& path, const Treebank& corpus);

struct NamedInput {
  std::string name;
  std::string path;  // empty for in-memory inputs
};

// Declarative experiment description (JSON file for the CLI).
struct ExperimentSpec {
  std::string corpus_path;
  std::string labels_path;
  std::string lexicon_path;
  std::vector<NamedInput> inputs;
  std::vector<RuleSubset> subsets = default_subsets();
  RuleSet base_rules = RuleSet::all();
  uint64_t seed = 0;
  // curve parameters
  std::vector<double> curve_targets;
  std::vector<uint64_t> curve_seeds;
  double curve_label_error_share = 0.5;
  std::vector<std::string> curve_label_inventory;
};

ExperimentSpec experiment_spec_from_json_text(const std::string& text,
                                              const std::string& base_dir = "");
ExperimentSpec load_experiment_spec(const std::string& path);

// Loaded, alignment-checked experiment data.
struct Experiment {
  Corpus corpus;
  Lexicon lexicon;
  std::vector<std::string> input_names;
  std::vector<Treebank> input_trees;  // each aligned token-wise with corpus

  int input_index(const std::string& name) const;  // -1 when absent
};

Experiment load_experiment(const ExperimentSpec& spec);
// Registers an in-memory input treebank (alignment-checked).
void add_input(Experiment& exp, const std::string& name, Treebank trees);

// rows = inputs, columns = rule subsets, cells = accuracy percentages.
struct AblationTable {
  std::vector<std::string> inputs;
  std::vector<RuleSubset> subsets;
  std::vector<std::vector<double>> cells;
};

// Per-document classification outcome for one input/ruleset.
struct ClassificationResult {
  std::vector<Polarity> labels;
  std::vector<bool> correct;
  double accuracy_percent = 0.0;
};

ClassificationResult classify_corpus(const Corpus& corpus, const Treebank& trees,
                                     const Lexicon& lex, const RuleSet& rules);

AblationTable run_ablation(const Experiment& exp, const ExperimentSpec& spec);

// LAS/accuracy point averaged over seeds at one target.
struct CurvePoint {
  double las = 0.0;
  double accuracy_percent = 0.0;
};

struct CurveRun {
  double target_las = 0.0;
  uint64_t seed = 0;
  double achieved_las = 0.0;
  double accuracy_percent = 0.0;
  std::vector<bool> outcomes;
};

struct CurveSeries {
  std::string corpus_name;
  std::vector<CurvePoint> points;  // sorted ascending by las
  std::vector<CurveRun> runs;
};

CurveSeries run_curve(const Experiment& exp, const ExperimentSpec& spec);

// Chi-squared comparison of two inputs' per-document outcomes under one
// rule subset.
ComparisonResult compare_systems(const Experiment& exp, const ExperimentSpec& spec,
                                 const std::string& input_a, const std::string& input_b,
                                 RuleSubset subset);

// Wall-clock seconds over `runs` repetitions of classifying the corpus
// (classification only; inputs and lexicon are already in memory).
struct TimingStats {
  double average = 0.0;
  double minimum = 0.0;
  double maximum = 0.0;
  int runs = 0;
};

TimingStats time_classification(const Corpus& corpus, const Treebank& trees,
                                const Lexicon& lex, const RuleSet& rules, int runs = 5);

}  // namespace sentree

#endif
