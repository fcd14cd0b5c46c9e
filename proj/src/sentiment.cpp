#include "sentree/sentiment.hpp"

#include <utility>

namespace sentree {

SemanticOrientation apply_intensification(SemanticOrientation so, double weight) {
  return so * (1.0 + weight);
}

SemanticOrientation apply_negation(SemanticOrientation so, NegationStrategy strategy,
                                   double shift_amount) {
  if (strategy == NegationStrategy::Flip) return so == 0.0 ? 0.0 : -so;
  if (so > 0.0) return so - shift_amount;
  if (so < 0.0) return so + shift_amount;
  return 0.0;
}

SemanticOrientation apply_but(SemanticOrientation main_so, SemanticOrientation but_clause_so,
                              double factor) {
  return main_so * factor + but_clause_so;
}

SemanticOrientation apply_if(SemanticOrientation) { return 0.0; }

std::string polarity_name(Polarity p) {
  return p == Polarity::Positive ? "pos" : "neg";
}

Polarity polarity_from_name(const std::string& name) {
  std::string n = lowercased(name);
  if (n == "pos" || n == "positive") return Polarity::Positive;
  if (n == "neg" || n == "negative") return Polarity::Negative;
  throw DataError("unknown polarity label '" + name + "' (want pos or neg)");
}

namespace {

using Kind = QueuedOperation::Kind;

struct FoldContext {
  const DepTree& tree;
  const Lexicon& lex;
  const RuleSet& rules;
  std::vector<std::vector<int>> kids;
  AnalysisDiagnostics* diag;
};

// Operations this token queues for the fold of its head. A token carries at
// most one: its single deprel selects at most one trigger pattern.
std::vector<QueuedOperation> trigger_ops(const Token& t, const FoldContext& cx) {
  std::vector<QueuedOperation> ops;
  const RuleSet& r = cx.rules;
  if (r.intensification && r.intensification_requires_deprel.contains(t.deprel)) {
    auto [found, weight] = cx.lex.intensifier_weight(t.form);
    if (found)
      ops.push_back({weight < 0.0 ? Kind::Attenuate : Kind::Intensify, weight, t.id, t.head});
  }
  if (r.negation && t.deprel == "neg")
    ops.push_back({Kind::Negate, r.shift_amount, t.id, t.head});
  if (r.conditional && t.deprel == "mark" && cx.lex.is_conditional_marker(t.form))
    ops.push_back({Kind::Nullify, 0.0, t.id, t.head});
  return ops;
}

// "but" is handled structurally at the parent fold, not via the queue.
bool is_but_trigger(const Token& t, const FoldContext& cx) {
  return cx.rules.but && t.deprel == "cc" && cx.lex.is_adversative_marker(t.form);
}

struct BranchResult {
  SemanticOrientation so = 0.0;
  // Operations queued inside this branch still awaiting a matching fold.
  std::vector<QueuedOperation> pending;
};

BranchResult fold(int id, const FoldContext& cx) {
  const Token& tok = cx.tree.token(id);

  struct ChildBranch {
    int id;
    SemanticOrientation so;
    bool but_trigger;
    const std::string* deprel;
  };
  std::vector<ChildBranch> branches;
  std::vector<QueuedOperation> queue;
  for (int c : cx.kids[static_cast<size_t>(id)]) {
    BranchResult br = fold(c, cx);
    const Token& ct = cx.tree.token(c);
    branches.push_back({c, br.so, is_but_trigger(ct, cx), &ct.deprel});
    for (QueuedOperation& op : br.pending) queue.push_back(std::move(op));
  }

  SemanticOrientation word = cx.lex.word_so(tok.form, tok.upos);

  // Dequeue in queued (token) order; everything queued one level down
  // matches this fold. Intensification first: the target is the leftmost
  // branch labeled with a target deprel, else the head word itself.
  ChildBranch* target_branch = nullptr;
  for (ChildBranch& b : branches) {
    if (cx.rules.intensification_target_deprel.contains(*b.deprel)) {
      target_branch = &b;
      break;
    }
  }
  for (const QueuedOperation& op : queue) {
    if (op.kind != Kind::Intensify && op.kind != Kind::Attenuate) continue;
    if (target_branch)
      target_branch->so = apply_intensification(target_branch->so, op.parameter);
    else
      word = apply_intensification(word, op.parameter);
    if (cx.diag) ++cx.diag->applied_operations;
  }

  // Adversative segmentation: the head word and branches before the first
  // trigger form the main segment; each trigger's own branch opens the
  // segment it belongs to.
  std::vector<SemanticOrientation> segments{word};
  for (const ChildBranch& b : branches) {
    if (b.but_trigger) segments.push_back(b.so);
    else segments.back() += b.so;
  }

  // Negation applies to the main segment, each negator in token order.
  for (const QueuedOperation& op : queue) {
    if (op.kind != Kind::Negate) continue;
    segments[0] = apply_negation(segments[0], cx.rules.negation_strategy, op.parameter);
    if (cx.diag) ++cx.diag->applied_operations;
  }

  SemanticOrientation acc = segments[0];
  for (size_t i = 1; i < segments.size(); ++i)
    acc = apply_but(acc, segments[i], cx.rules.but_main_factor);

  for (const QueuedOperation& op : queue) {
    if (op.kind != Kind::Nullify) continue;
    acc = apply_if(acc);
    if (cx.diag) ++cx.diag->applied_operations;
  }

  BranchResult out;
  out.so = acc;
  out.pending = trigger_ops(tok, cx);
  return out;
}

}  // namespace

SemanticOrientation analyze_tree(const DepTree& tree, const Lexicon& lex, const RuleSet& rules,
                                 AnalysisDiagnostics* diag) {
  FoldContext cx{tree, lex, rules, children_index(tree), diag};
  int root = tree.root_id();
  BranchResult result = fold(root, cx);
  if (diag) {
    // The root has no fold above it: anything it queues dies here.
    diag->discarded_operations += static_cast<long>(result.pending.size());
    if (is_but_trigger(tree.token(root), cx)) ++diag->discarded_operations;
  }
  return result.so;
}

SemanticOrientation document_so(const std::vector<const DepTree*>& doc, const Lexicon& lex,
                                const RuleSet& rules) {
  if (doc.empty()) throw DataError("empty document");
  SemanticOrientation total = 0.0;
  for (const DepTree* tree : doc) total += analyze_tree(*tree, lex, rules);
  return total;
}

Polarity classify_document(const std::vector<const DepTree*>& doc, const Lexicon& lex,
                           const RuleSet& rules) {
  return document_so(doc, lex, rules) > rules.classification_threshold ? Polarity::Positive
                                                                       : Polarity::Negative;
}

}  // namespace sentree
