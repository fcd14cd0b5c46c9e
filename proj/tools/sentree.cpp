#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentree/conll.hpp"
#include "sentree/eval.hpp"
#include "sentree/experiment.hpp"
#include "sentree/lexicon.hpp"
#include "sentree/perturb.hpp"
#include "sentree/report.hpp"
#include "sentree/rules.hpp"
#include "sentree/sentiment.hpp"

namespace {

using namespace sentree;

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty())
    std::cout << content;
  else
    write_text_file(output_path, content);
}

struct EvaluateArgs {
  std::string gold_path;
  std::string pred_path;
  bool exclude_punct = false;
  std::string format = "csv";
  std::string output;
};

int run_evaluate(const EvaluateArgs& args) {
  Treebank gold = parse_conll_file(args.gold_path);
  Treebank pred = parse_conll_file(args.pred_path);
  AttachmentScores scores = attachment_scores(gold, pred, args.exclude_punct);
  std::vector<LabelPR> labels = per_label_table(gold, pred);
  ReportFormat format = report_format_from_name(args.format);
  emit(format == ReportFormat::Csv ? evaluation_csv(scores, labels)
                                   : evaluation_json(scores, labels),
       args.output);
  return 0;
}

struct ClassifyArgs {
  std::string corpus_path;
  std::string labels_path;
  std::string lexicon_path;
  std::string input_path;
  std::string rules_subset = "All";
  std::string rules_config;
  bool timing = false;
  std::string format = "csv";
  std::string output;
};

int run_classify(const ClassifyArgs& args) {
  Corpus corpus;
  corpus.trees = parse_conll_file(args.corpus_path);
  corpus.documents = load_labels(args.labels_path, corpus.trees);
  Lexicon lexicon = load_lexicon(args.lexicon_path);

  Treebank input;
  const Treebank* trees = &corpus.trees;
  if (!args.input_path.empty()) {
    input = parse_conll_file(args.input_path);
    attachment_scores(corpus.trees, input);  // alignment check
    trees = &input;
  }

  RuleSet base = args.rules_config.empty() ? RuleSet::all() : load_ruleset(args.rules_config);
  RuleSet rules = ruleset_for_subset(base, subset_from_name(args.rules_subset));

  ClassificationResult result = classify_corpus(corpus, *trees, lexicon, rules);
  ReportFormat format = report_format_from_name(args.format);
  emit(format == ReportFormat::Csv ? classification_csv(corpus, result)
                                   : classification_json(corpus, result),
       args.output);

  if (args.timing) {
    TimingStats stats = time_classification(corpus, *trees, lexicon, rules);
    std::string report =
        format == ReportFormat::Csv ? timing_csv(stats) : timing_json(stats);
    if (args.output.empty())
      std::cerr << report;
    else
      write_text_file(args.output + ".timing", report);
  }
  return 0;
}

struct AblateArgs {
  std::string spec_path;
  std::string rules_list;
  std::string format = "csv";
  std::string output;
};

int run_ablate_cmd(const AblateArgs& args) {
  ExperimentSpec spec = load_experiment_spec(args.spec_path);
  if (!args.rules_list.empty()) {
    spec.subsets.clear();
    std::string item;
    std::istringstream in(args.rules_list);
    while (std::getline(in, item, ','))
      if (!item.empty()) spec.subsets.push_back(subset_from_name(item));
    if (spec.subsets.empty()) throw DataError("--rules: empty subset list");
  }
  Experiment exp = load_experiment(spec);
  if (exp.input_names.empty()) throw DataError(args.spec_path + ": no inputs to ablate");
  AblationTable table = run_ablation(exp, spec);
  ReportFormat format = report_format_from_name(args.format);
  emit(format == ReportFormat::Csv ? ablation_csv(table) : ablation_json(table), args.output);
  return 0;
}

struct PerturbArgs {
  std::string gold_path;
  std::string config_path;
  double target_las = -1.0;
  double label_error_share = -1.0;
  int64_t seed = -1;
  std::string format = "json";
  std::string output;
  std::string report_path;
};

int run_perturb(const PerturbArgs& args) {
  Treebank gold = parse_conll_file(args.gold_path);
  PerturbationConfig cfg;
  if (!args.config_path.empty()) cfg = load_perturbation_config(args.config_path);
  if (args.target_las >= 0.0) cfg.target_las = args.target_las;
  if (args.label_error_share >= 0.0) cfg.label_error_share = args.label_error_share;
  if (args.seed >= 0) cfg.seed = static_cast<uint64_t>(args.seed);
  if (cfg.target_las < 0.0 || cfg.target_las > 1.0)
    throw DataError("target LAS must be in [0,1]");
  if (cfg.label_error_share < 0.0 || cfg.label_error_share > 1.0)
    throw DataError("label error share must be in [0,1]");

  auto [perturbed, report] = perturb_treebank(gold, cfg);
  if (args.output.empty())
    std::cout << write_conll(perturbed);
  else
    write_conll_file(perturbed, args.output);

  ReportFormat format = report_format_from_name(args.format);
  std::string report_text = format == ReportFormat::Csv ? perturbation_report_csv(report)
                                                        : perturbation_report_json(report);
  if (args.report_path.empty())
    std::cerr << report_text;
  else
    write_text_file(args.report_path, report_text);
  return 0;
}

struct CurveArgs {
  std::string spec_path;
  int64_t seed = -1;
  std::string format = "json";
  std::string output;
};

int run_curve_cmd(const CurveArgs& args) {
  ExperimentSpec spec = load_experiment_spec(args.spec_path);
  if (args.seed >= 0) spec.curve_seeds = {static_cast<uint64_t>(args.seed)};
  Experiment exp = load_experiment(spec);
  CurveSeries series = run_curve(exp, spec);
  ReportFormat format = report_format_from_name(args.format);
  emit(format == ReportFormat::Csv ? curve_csv(series) : curve_json(series), args.output);
  return 0;
}

struct CompareArgs {
  std::string spec_path;
  std::string input_a;
  std::string input_b;
  std::string rules_subset = "All";
  std::string format = "csv";
  std::string output;
};

int run_compare(const CompareArgs& args) {
  ExperimentSpec spec = load_experiment_spec(args.spec_path);
  Experiment exp = load_experiment(spec);
  ComparisonResult result =
      compare_systems(exp, spec, args.input_a, args.input_b, subset_from_name(args.rules_subset));
  ReportFormat format = report_format_from_name(args.format);
  emit(format == ReportFormat::Csv ? comparison_csv(result) : comparison_json(result),
       args.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dependency-tree sentiment classification and parser-evaluation toolkit"};
  app.require_subcommand(1);

  EvaluateArgs evaluate_args;
  auto* evaluate = app.add_subcommand("evaluate", "attachment scores and per-label precision/recall");
  evaluate->add_option("gold", evaluate_args.gold_path, "gold treebank (CoNLL)")->required();
  evaluate->add_option("pred", evaluate_args.pred_path, "predicted treebank (CoNLL)")->required();
  evaluate->add_flag("--exclude-punct", evaluate_args.exclude_punct,
                     "skip punctuation tokens (upos PUNCT or .)");
  evaluate->add_option("--format", evaluate_args.format, "csv|json");
  evaluate->add_option("-o,--output", evaluate_args.output, "output file (default stdout)");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "per-document polarity over a labeled corpus");
  classify->add_option("--corpus", classify_args.corpus_path, "corpus treebank (CoNLL)")->required();
  classify->add_option("--labels", classify_args.labels_path, "document labels (TSV)")->required();
  classify->add_option("--lexicon", classify_args.lexicon_path, "sentiment lexicon (TSV)")->required();
  classify->add_option("--input", classify_args.input_path,
                       "classify these trees instead of the corpus ones (must align)");
  classify->add_option("--rules", classify_args.rules_subset,
                       "rule subset: All|None|Intensification|but|if|Negation");
  classify->add_option("--rules-config", classify_args.rules_config, "ruleset JSON file");
  classify->add_flag("--timing", classify_args.timing,
                     "run 5 timed repetitions; stats to stderr or <output>.timing");
  classify->add_option("--format", classify_args.format, "csv|json");
  classify->add_option("-o,--output", classify_args.output, "output file (default stdout)");

  AblateArgs ablate_args;
  auto* ablate = app.add_subcommand("ablate", "accuracy table: inputs x rule subsets");
  ablate->add_option("spec", ablate_args.spec_path, "experiment spec (JSON)")->required();
  ablate->add_option("--rules", ablate_args.rules_list,
                     "comma-separated subset columns (default All,None,Intensification,but,if,Negation)");
  ablate->add_option("--format", ablate_args.format, "csv|json");
  ablate->add_option("-o,--output", ablate_args.output, "output file (default stdout)");

  PerturbArgs perturb_args;
  auto* perturb = app.add_subcommand("perturb", "degrade a gold treebank to a target LAS");
  perturb->add_option("gold", perturb_args.gold_path, "gold treebank (CoNLL)")->required();
  perturb->add_option("--config", perturb_args.config_path, "perturbation config (JSON)");
  perturb->add_option("--target-las", perturb_args.target_las, "target LAS in [0,1]");
  perturb->add_option("--label-error-share", perturb_args.label_error_share,
                      "fraction of corruptions that are label-only");
  perturb->add_option("--seed", perturb_args.seed, "random seed");
  perturb->add_option("--format", perturb_args.format, "report format: csv|json");
  perturb->add_option("-o,--output", perturb_args.output, "perturbed treebank file (default stdout)");
  perturb->add_option("--report", perturb_args.report_path,
                      "achieved-scores report file (default stderr)");

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "LAS vs sentiment accuracy series");
  curve->add_option("spec", curve_args.spec_path, "experiment spec (JSON) with a curve section")
      ->required();
  curve->add_option("--seed", curve_args.seed, "replace the spec's seed list with this one seed");
  curve->add_option("--format", curve_args.format, "csv|json");
  curve->add_option("-o,--output", curve_args.output, "output file (default stdout)");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "chi-squared test between two inputs");
  compare->add_option("spec", compare_args.spec_path, "experiment spec (JSON)")->required();
  compare->add_option("--a", compare_args.input_a, "first input name")->required();
  compare->add_option("--b", compare_args.input_b, "second input name")->required();
  compare->add_option("--rules", compare_args.rules_subset,
                      "rule subset: All|None|Intensification|but|if|Negation");
  compare->add_option("--format", compare_args.format, "csv|json");
  compare->add_option("-o,--output", compare_args.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (evaluate->parsed()) return run_evaluate(evaluate_args);
    if (classify->parsed()) return run_classify(classify_args);
    if (ablate->parsed()) return run_ablate_cmd(ablate_args);
    if (perturb->parsed()) return run_perturb(perturb_args);
    if (curve->parsed()) return run_curve_cmd(curve_args);
    if (compare->parsed()) return run_compare(compare_args);
  } catch (const sentree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
