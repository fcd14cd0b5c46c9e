#ifndef SENTREE_PERTURB_HPP
#define SENTREE_PERTURB_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sentree/conll.hpp"
#include "sentree/eval.hpp"

namespace sentree {

// Controlled degradation of a gold treebank to a target LAS.
// label_error_share of the corrupted tokens get a wrong label only; the
// rest are reattached to a different head (possibly with a wrong label
// too). An empty label_inventory is filled from the gold treebank's
// deprels.
struct PerturbationConfig {
  double target_las = 1.0;
  double label_error_share = 0.5;
  uint64_t seed = 0;
  std::vector<std::string> label_inventory;
};

struct PerturbationReport {
  double achieved_las = 1.0;
  double achieved_uas = 1.0;
  double achieved_la = 1.0;
  long corrupted_tokens = 0;
  // cycle-avoidance retries plus reattachments abandoned for label-only
  // corruption (retry cap, root tokens, too-short sentences)
  long discarded_reattachments = 0;
};

// Deterministic given (gold, cfg). Output trees stay valid; forms, lemmas
// and upos are untouched. Tokens that cannot be corrupted (e.g. no
// alternative label exists) are left intact and show up as a shortfall in
// achieved_las rather than an error.
std::pair<Treebank, PerturbationReport> perturb_treebank(const Treebank& gold,
                                                         const PerturbationConfig& cfg);

PerturbationConfig perturbation_config_from_json_text(const std::string& text);
PerturbationConfig load_perturbation_config(const std::string& path);

}  // namespace sentree

#endif
