#ifndef SENTREE_LEXICON_HPP
#define SENTREE_LEXICON_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentree/error.hpp"

namespace sentree {

// Word lists driving the sentiment engine. Forms are stored lowercased;
// upos "_" means "any part of speech". Lookup prefers the (form, upos)
// entry over the (form, any) entry; unknown words score 0.
class Lexicon {
 public:
  // Subjective semantic-orientation entry. Throws DataError on duplicates.
  void add_subjective(std::string form, std::string upos, double so);
  // Intensifier weight, > -1 (negative weights are downtoners).
  void add_intensifier(std::string form, double weight);
  void add_negator(std::string form);

  double word_so(std::string_view form, std::string_view upos) const;
  // Weight for an intensifier form; false in .first when absent.
  std::pair<bool, double> intensifier_weight(std::string_view form) const;
  bool is_negator(std::string_view form) const;
  bool is_adversative_marker(std::string_view form) const;
  bool is_conditional_marker(std::string_view form) const;

  size_t subjective_count() const { return subjective_entries_; }
  size_t intensifier_count() const { return intensifiers_.size(); }
  size_t negator_count() const { return negators_.size(); }

  std::unordered_set<std::string> adversative_markers{"but"};
  std::unordered_set<std::string> conditional_markers{"if"};

 private:
  // form -> [(upos-or-"_", so)]
  std::unordered_map<std::string, std::vector<std::pair<std::string, double>>> subjective_;
  std::unordered_map<std::string, double> intensifiers_;
  std::unordered_set<std::string> negators_;
  size_t subjective_entries_ = 0;
};

std::string lowercased(std::string_view s);

// Tab-separated lexicon file. Lines:
//   so  <form> <upos|_> <value>
//   int <form> <upos|_> <weight>
//   neg <form>
// Blank lines and '#' comments allowed. Throws DataError on duplicate
// (form, upos) within a kind and on intensifier weights <= -1; ParseError
// on malformed lines (naming the line number).
Lexicon load_lexicon(const std::string& path);
Lexicon parse_lexicon(const std::string& text, const std::string& source = "<string>");

}  // namespace sentree

#endif
