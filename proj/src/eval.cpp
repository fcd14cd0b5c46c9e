#include "sentree/eval.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sentree {

namespace {

bool is_punct(const Token& t) { return t.upos == "PUNCT" || t.upos == "."; }

void require_aligned(const Treebank& gold, const Treebank& pred) {
  if (gold.trees.size() != pred.trees.size()) {
    throw AlignmentError("treebanks differ in sentence count: " +
                         std::to_string(gold.trees.size()) + " vs " +
                         std::to_string(pred.trees.size()));
  }
  for (size_t i = 0; i < gold.trees.size(); ++i) {
    const DepTree& g = gold.trees[i];
    const DepTree& p = pred.trees[i];
    if (g.size() != p.size()) {
      throw AlignmentError("sentence " + std::to_string(i + 1) + ": token count mismatch: " +
                           std::to_string(g.size()) + " vs " + std::to_string(p.size()));
    }
    for (int id = 1; id <= g.size(); ++id) {
      if (g.token(id).form != p.token(id).form) {
        throw AlignmentError("sentence " + std::to_string(i + 1) + ": form mismatch at token " +
                             std::to_string(id));
      }
    }
  }
}

}  // namespace

AttachmentScores attachment_scores(const Treebank& gold, const Treebank& pred,
                                   bool exclude_punct) {
  require_aligned(gold, pred);
  long scored = 0, head_ok = 0, label_ok = 0, both_ok = 0;
  for (size_t i = 0; i < gold.trees.size(); ++i) {
    const DepTree& g = gold.trees[i];
    const DepTree& p = pred.trees[i];
    for (int id = 1; id <= g.size(); ++id) {
      const Token& gt = g.token(id);
      const Token& pt = p.token(id);
      if (exclude_punct && is_punct(gt)) continue;
      ++scored;
      bool h = gt.head == pt.head;
      bool l = gt.deprel == pt.deprel;
      head_ok += h;
      label_ok += l;
      both_ok += h && l;
    }
  }
  AttachmentScores s;
  s.scored_tokens = scored;
  if (scored > 0) {
    s.uas = static_cast<double>(head_ok) / static_cast<double>(scored);
    s.la = static_cast<double>(label_ok) / static_cast<double>(scored);
    s.las = static_cast<double>(both_ok) / static_cast<double>(scored);
  }
  return s;
}

LabelPR per_label_pr(const Treebank& gold, const Treebank& pred, const std::string& label) {
  require_aligned(gold, pred);
  LabelPR pr;
  pr.label = label;
  for (size_t i = 0; i < gold.trees.size(); ++i) {
    const DepTree& g = gold.trees[i];
    const DepTree& p = pred.trees[i];
    for (int id = 1; id <= g.size(); ++id) {
      const Token& gt = g.token(id);
      const Token& pt = p.token(id);
      bool tp = pt.deprel == label && gt.deprel == label && gt.head == pt.head;
      if (tp) {
        ++pr.tp;
        continue;
      }
      if (pt.deprel == label) ++pr.fp;
      if (gt.deprel == label) ++pr.fn;
    }
  }
  if (pr.tp + pr.fp > 0)
    pr.precision = static_cast<double>(pr.tp) / static_cast<double>(pr.tp + pr.fp);
  if (pr.tp + pr.fn > 0)
    pr.recall = static_cast<double>(pr.tp) / static_cast<double>(pr.tp + pr.fn);
  return pr;
}

std::vector<LabelPR> per_label_table(const Treebank& gold, const Treebank& pred) {
  require_aligned(gold, pred);
  std::set<std::string> labels;
  for (const DepTree& t : gold.trees)
    for (const Token& tok : t.tokens) labels.insert(tok.deprel);
  for (const DepTree& t : pred.trees)
    for (const Token& tok : t.tokens) labels.insert(tok.deprel);
  std::vector<LabelPR> table;
  table.reserve(labels.size());
  for (const std::string& label : labels) table.push_back(per_label_pr(gold, pred, label));
  return table;
}

double chi_squared_upper_tail_df1(double statistic) {
  if (statistic <= 0.0) return 1.0;
  return std::erfc(std::sqrt(statistic / 2.0));
}

ComparisonResult chi_squared_compare(const std::vector<bool>& outcomes_a,
                                     const std::vector<bool>& outcomes_b) {
  if (outcomes_a.empty() || outcomes_b.empty())
    throw AlignmentError("outcome vectors must be non-empty");
  if (outcomes_a.size() != outcomes_b.size()) {
    throw AlignmentError("outcome vectors differ in length: " +
                         std::to_string(outcomes_a.size()) + " vs " +
                         std::to_string(outcomes_b.size()));
  }
  ComparisonResult res;
  auto& table = res.contingency;
  for (bool ok : outcomes_a) ++table[0][ok ? 0 : 1];
  for (bool ok : outcomes_b) ++table[1][ok ? 0 : 1];

  const double n = static_cast<double>(outcomes_a.size() + outcomes_b.size());
  double col_total[2] = {static_cast<double>(table[0][0] + table[1][0]),
                         static_cast<double>(table[0][1] + table[1][1])};
  double row_total[2] = {static_cast<double>(table[0][0] + table[0][1]),
                         static_cast<double>(table[1][0] + table[1][1])};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (row_total[r] * col_total[c] == 0.0)
        throw DegenerateTableError("expected cell count is zero (column totals " +
                                   std::to_string(static_cast<long>(col_total[0])) + "/" +
                                   std::to_string(static_cast<long>(col_total[1])) + ")");

  double stat = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      double expected = row_total[r] * col_total[c] / n;
      double diff = static_cast<double>(table[r][c]) - expected;
      stat += diff * diff / expected;
    }
  }
  res.statistic = stat;
  res.p_value = chi_squared_upper_tail_df1(stat);
  return res;
}

}  // namespace sentree
