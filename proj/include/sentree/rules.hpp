#ifndef SENTREE_RULES_HPP
#define SENTREE_RULES_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sentree/error.hpp"

namespace sentree {

enum class Rule : uint8_t { Intensification, But, Negation, If };

enum class NegationStrategy : uint8_t { Flip, Shift };

// Which compositional operations run and with what parameters.
struct RuleSet {
  bool intensification = false;
  bool but = false;
  bool negation = false;
  bool conditional = false;  // the "if" rule

  std::set<std::string> intensification_requires_deprel{"advmod", "amod", "nmod"};
  std::set<std::string> intensification_target_deprel{"acomp"};
  NegationStrategy negation_strategy = NegationStrategy::Flip;
  double shift_amount = 4.0;
  double but_main_factor = 0.5;
  double classification_threshold = 0.0;

  bool enabled(Rule r) const;
  RuleSet& enable(Rule r, bool on = true);

  static RuleSet none();  // every rule off: plain word-sum baseline
  static RuleSet all();   // the four rules on, default parameters
};

// The six canonical table columns. "All" and "None" are aggregates; the
// other four enable exactly one rule.
enum class RuleSubset : uint8_t { All, None, Intensification, But, If, Negation };

// Display names as used in report headers: All, None, Intensification,
// but, if, Negation.
std::string subset_name(RuleSubset s);
RuleSubset subset_from_name(const std::string& name);  // case-insensitive
std::vector<RuleSubset> default_subsets();

// Applies a subset column to a parameter template.
RuleSet ruleset_for_subset(const RuleSet& base, RuleSubset subset);

// JSON document with keys enabled_rules (array of rule names or "All"/
// "None"), negation_strategy ("flip"|"shift"), shift_amount,
// but_main_factor, threshold. Missing keys keep defaults.
RuleSet ruleset_from_json_text(const std::string& text);
RuleSet load_ruleset(const std::string& path);

}  // namespace sentree

#endif
