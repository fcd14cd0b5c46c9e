#ifndef SENTREE_SENTIMENT_HPP
#define SENTREE_SENTIMENT_HPP

#include <string>
#include <vector>

#include "sentree/conll.hpp"
#include "sentree/lexicon.hpp"
#include "sentree/rules.hpp"

namespace sentree {

// Signed real value: sign is the polarity, magnitude the strength.
using SemanticOrientation = double;

enum class Polarity : uint8_t { Positive, Negative };

std::string polarity_name(Polarity p);
Polarity polarity_from_name(const std::string& name);

// Operation queued at a trigger token and dequeued at the fold of the
// shallowest ancestor whose branch matches its target; at most one
// application. Operations still pending above the sentence root are
// discarded and counted.
struct QueuedOperation {
  enum class Kind : uint8_t { Intensify, Attenuate, Negate, Nullify };
  Kind kind;
  double parameter = 0.0;
  int origin = 0;        // trigger token id
  int target_head = 0;   // fold level (head of origin) where the target lives
};

struct AnalysisDiagnostics {
  long discarded_operations = 0;  // operations unmatched at the sentence root
  long applied_operations = 0;
};

// Semantic orientation of one tree: post-order fold over the dependency
// structure. With every rule disabled this is exactly the sum of per-token
// lexicon values; enabled rules queue operations at their trigger tokens
// (intensifiers under advmod/amod/nmod, "but" under cc, negation under neg,
// "if" under mark) and apply them one fold above. Unknown words score 0.
SemanticOrientation analyze_tree(const DepTree& tree, const Lexicon& lex,
                                 const RuleSet& rules,
                                 AnalysisDiagnostics* diag = nullptr);

// so * (1 + weight); weight > -1, negative weights are downtoners.
SemanticOrientation apply_intensification(SemanticOrientation so, double weight);

// Flip: -so. Shift(a): so moved by a toward (and possibly past) the
// opposite sign; 0 stays 0.
SemanticOrientation apply_negation(SemanticOrientation so, NegationStrategy strategy,
                                   double shift_amount = 4.0);

// main_so * factor + but_clause_so.
SemanticOrientation apply_but(SemanticOrientation main_so,
                              SemanticOrientation but_clause_so, double factor);

// Contribution of a subtree under the scope of a conditional clause.
SemanticOrientation apply_if(SemanticOrientation subtree_so);

// Sums analyze_tree over the document's sentences; Positive iff the total
// exceeds rules.classification_threshold (ties are Negative). Throws
// DataError on an empty document.
Polarity classify_document(const std::vector<const DepTree*>& doc, const Lexicon& lex,
                           const RuleSet& rules);

SemanticOrientation document_so(const std::vector<const DepTree*>& doc,
                                const Lexicon& lex, const RuleSet& rules);

}  // namespace sentree

#endif
