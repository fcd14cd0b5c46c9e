#ifndef SENTREE_CONLL_HPP
#define SENTREE_CONLL_HPP

#include <string>
#include <vector>

#include "sentree/error.hpp"

namespace sentree {

// One word of a sentence, modeled on the 10-column CoNLL-X record:
// id, form, lemma, upos, xpos, feats, head, deprel, phead, pdeprel.
// head == 0 denotes the artificial root. Empty string fields are
// rendered as "_" on write; parsing keeps "_" verbatim.
struct Token {
  int id = 0;
  std::string form;
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;
  std::string deprel;
  std::string phead = "_";
  std::string pdeprel = "_";

  bool operator==(const Token&) const = default;
};

// A validated single-rooted dependency tree. sentence_id does not take
// part in equality; it is bookkeeping (ordinal within the source file).
struct DepTree {
  std::vector<Token> tokens;
  std::string sentence_id;

  int size() const { return static_cast<int>(tokens.size()); }
  const Token& token(int id) const { return tokens[static_cast<size_t>(id) - 1]; }
  Token& token(int id) { return tokens[static_cast<size_t>(id) - 1]; }
  // id of the token whose head is 0; requires a valid tree.
  int root_id() const;

  bool operator==(const DepTree& other) const { return tokens == other.tokens; }
};

struct Treebank {
  std::vector<DepTree> trees;
  std::string provenance;

  size_t token_count() const;
};

// Single violation found by validate_tree.
struct ValidationIssue {
  enum class Kind { MultiRoot, NoRoot, Cycle, HeadOutOfRange, SelfHead, IdGap };
  Kind kind;
  std::vector<int> token_ids;
  std::string message;
};

using ValidationReport = std::vector<ValidationIssue>;

// Lines skipped or ignored while parsing (multi-word/empty-node ids, comments).
struct ParseStats {
  int skipped_span_lines = 0;
  int comment_lines = 0;
};

// Parses blank-line-separated sentences of tab-separated 8/9/10-column
// lines. Throws ParseError (naming the line) on malformed records and
// ValidationError (naming the sentence) on trees that are not single-rooted
// acyclic. Lines whose id contains '-' or '.' (multi-word ranges, empty
// nodes) are skipped and counted in stats.
Treebank parse_conll(const std::string& text, ParseStats* stats = nullptr);

Treebank parse_conll_file(const std::string& path, ParseStats* stats = nullptr);

// Serializes to normalized 10-column lines, one blank line after each
// sentence, trailing newline included. parse_conll(write_conll(tb)) == tb
// for any parsed treebank.
std::string write_conll(const Treebank& tb);

void write_conll_file(const Treebank& tb, const std::string& path);

// Empty report iff the tree satisfies all DepTree invariants. Violations
// are report entries, never exceptions.
ValidationReport validate_tree(const DepTree& tree);

// Child ids (sorted) per token id; index 0 holds the sentence root(s).
std::vector<std::vector<int>> children_index(const DepTree& tree);

}  // namespace sentree

#endif
