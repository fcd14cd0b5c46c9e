#ifndef SENTREE_EVAL_HPP
#define SENTREE_EVAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sentree/conll.hpp"

namespace sentree {

// LAS: correct head + correct label; UAS: correct head; LA: correct label.
struct AttachmentScores {
  double las = 0.0;
  double uas = 0.0;
  double la = 0.0;
  long scored_tokens = 0;
};

// Precision/recall for one dependency label. A true positive requires the
// predicted label, the gold label and the head to all be correct. Precision
// (recall) is absent when there are no predicted (gold) tokens for the label.
struct LabelPR {
  std::string label;
  long tp = 0;
  long fp = 0;
  long fn = 0;
  std::optional<double> precision;
  std::optional<double> recall;
};

// Pearson chi-squared comparison of two per-document outcome vectors.
// contingency[system][0] = correct, contingency[system][1] = incorrect.
struct ComparisonResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::array<std::array<long, 2>, 2> contingency{};
};

// Token-wise scores over aligned treebanks. With exclude_punct, tokens
// whose upos is the punctuation tag ("PUNCT" or ".") are not scored.
// Throws AlignmentError naming the first mismatching sentence.
AttachmentScores attachment_scores(const Treebank& gold, const Treebank& pred,
                                   bool exclude_punct = false);

LabelPR per_label_pr(const Treebank& gold, const Treebank& pred,
                     const std::string& label);

// All labels occurring in gold or pred, sorted.
std::vector<LabelPR> per_label_table(const Treebank& gold, const Treebank& pred);

// Pearson chi-squared with df=1, no continuity correction; upper-tail
// p-value via erfc(sqrt(statistic/2)). Throws DegenerateTableError when any
// expected cell count is zero and AlignmentError on length mismatch.
ComparisonResult chi_squared_compare(const std::vector<bool>& outcomes_a,
                                     const std::vector<bool>& outcomes_b);

// Upper-tail probability of the chi-squared distribution with one degree
// of freedom (the regularized upper incomplete gamma at a = 1/2).
double chi_squared_upper_tail_df1(double statistic);

}  // namespace sentree

#endif
