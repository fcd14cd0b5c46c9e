#include "sentree/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sentree {

namespace {

enum class ErrorKind { LabelOnly, Head };

// Bounded draw via modulo so byte-identical output does not depend on the
// standard library's distribution implementation.
uint64_t draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

std::mt19937_64 sentence_stream(uint64_t seed, size_t sentence_index) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(sentence_index)};
  return std::mt19937_64(seq);
}

// Replacement label different from `current`, or empty when none exists.
std::string pick_other_label(const std::vector<std::string>& inventory,
                             const std::string& current, std::mt19937_64& rng) {
  std::vector<const std::string*> alternatives;
  for (const std::string& label : inventory)
    if (label != current) alternatives.push_back(&label);
  if (alternatives.empty()) return {};
  return *alternatives[draw(rng, alternatives.size())];
}

// True iff attaching `token_id` under `candidate` would close a cycle,
// i.e. `candidate` sits inside token_id's subtree.
bool creates_cycle(const DepTree& tree, int token_id, int candidate) {
  int cur = candidate;
  while (cur != 0) {
    if (cur == token_id) return true;
    cur = tree.token(cur).head;
  }
  return false;
}

}  // namespace

std::pair<Treebank, PerturbationReport> perturb_treebank(const Treebank& gold,
                                                         const PerturbationConfig& cfg) {
  Treebank out = gold;
  PerturbationReport report;

  std::vector<std::string> inventory = cfg.label_inventory;
  if (inventory.empty()) {
    std::set<std::string> labels;
    for (const DepTree& tree : gold.trees)
      for (const Token& tok : tree.tokens) labels.insert(tok.deprel);
    inventory.assign(labels.begin(), labels.end());
  }

  const size_t total = gold.token_count();
  const long n_corrupt =
      std::lround((1.0 - cfg.target_las) * static_cast<double>(total));
  if (total == 0 || n_corrupt <= 0) {
    AttachmentScores s = attachment_scores(gold, out);
    report.achieved_las = s.las;
    report.achieved_uas = s.uas;
    report.achieved_la = s.la;
    return {std::move(out), report};
  }
  const long n_label_only =
      std::lround(cfg.label_error_share * static_cast<double>(n_corrupt));

  // Global selection: partial Fisher-Yates over all token slots. The first
  // n_label_only picks take label errors, the rest head errors.
  std::mt19937_64 selector(cfg.seed);
  std::vector<size_t> slots(total);
  for (size_t i = 0; i < total; ++i) slots[i] = i;
  for (long i = 0; i < n_corrupt; ++i) {
    size_t j = static_cast<size_t>(i) + draw(selector, total - static_cast<size_t>(i));
    std::swap(slots[static_cast<size_t>(i)], slots[j]);
  }

  // sentence index -> [(token id, kind)], token order
  std::vector<size_t> sentence_start(gold.trees.size());
  size_t acc = 0;
  for (size_t s = 0; s < gold.trees.size(); ++s) {
    sentence_start[s] = acc;
    acc += gold.trees[s].tokens.size();
  }
  std::vector<std::vector<std::pair<int, ErrorKind>>> plan(gold.trees.size());
  for (long i = 0; i < n_corrupt; ++i) {
    size_t slot = slots[static_cast<size_t>(i)];
    size_t s = static_cast<size_t>(std::upper_bound(sentence_start.begin(), sentence_start.end(),
                                                    slot) -
                                   sentence_start.begin()) -
               1;
    int token_id = static_cast<int>(slot - sentence_start[s]) + 1;
    plan[s].emplace_back(token_id, i < n_label_only ? ErrorKind::LabelOnly : ErrorKind::Head);
  }

  for (size_t s = 0; s < plan.size(); ++s) {
    if (plan[s].empty()) continue;
    std::sort(plan[s].begin(), plan[s].end());
    DepTree& tree = out.trees[s];
    const int n = tree.size();
    std::mt19937_64 rng = sentence_stream(cfg.seed, s);

    for (auto [token_id, kind] : plan[s]) {
      Token& tok = tree.token(token_id);
      const int gold_head = gold.trees[s].token(token_id).head;
      const std::string& gold_label = gold.trees[s].token(token_id).deprel;

      bool want_head = kind == ErrorKind::Head;
      bool also_label = false;
      if (want_head) {
        also_label = draw(rng, 2) == 1;
        // Root tokens and 1-token sentences cannot be reattached.
        if (tok.head == 0 || n < 2) {
          ++report.discarded_reattachments;
          want_head = false;
          also_label = true;
        }
      }

      if (want_head) {
        int new_head = 0;
        for (int attempt = 0; attempt < 100; ++attempt) {
          int candidate = static_cast<int>(draw(rng, static_cast<uint64_t>(n))) + 1;
          if (candidate == token_id || candidate == gold_head ||
              creates_cycle(tree, token_id, candidate)) {
            ++report.discarded_reattachments;
            continue;
          }
          new_head = candidate;
          break;
        }
        if (new_head != 0) {
          tok.head = new_head;
        } else {
          ++report.discarded_reattachments;
          also_label = true;
        }
      }

      if (!want_head || also_label) {
        std::string replacement = pick_other_label(inventory, gold_label, rng);
        if (!replacement.empty()) tok.deprel = std::move(replacement);
      }
    }
  }

  for (size_t s = 0; s < out.trees.size(); ++s) {
    for (int id = 1; id <= out.trees[s].size(); ++id) {
      const Token& a = gold.trees[s].token(id);
      const Token& b = out.trees[s].token(id);
      if (a.head != b.head || a.deprel != b.deprel) ++report.corrupted_tokens;
    }
  }
  AttachmentScores scores = attachment_scores(gold, out);
  report.achieved_las = scores.las;
  report.achieved_uas = scores.uas;
  report.achieved_la = scores.la;
  return {std::move(out), report};
}

PerturbationConfig perturbation_config_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("perturbation config: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("perturbation config: top level must be an object");
  PerturbationConfig cfg;
  if (doc.contains("target_las")) cfg.target_las = doc["target_las"].get<double>();
  if (doc.contains("label_error_share"))
    cfg.label_error_share = doc["label_error_share"].get<double>();
  if (doc.contains("seed")) cfg.seed = doc["seed"].get<uint64_t>();
  if (doc.contains("label_inventory"))
    cfg.label_inventory = doc["label_inventory"].get<std::vector<std::string>>();
  if (cfg.target_las < 0.0 || cfg.target_las > 1.0)
    throw DataError("perturbation config: target_las must be in [0,1]");
  if (cfg.label_error_share < 0.0 || cfg.label_error_share > 1.0)
    throw DataError("perturbation config: label_error_share must be in [0,1]");
  return cfg;
}

PerturbationConfig load_perturbation_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open perturbation config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return perturbation_config_from_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace sentree
