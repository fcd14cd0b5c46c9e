#include "sentree/conll.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sentree {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string field_or_underscore(const std::string& s) {
  return s.empty() ? std::string("_") : s;
}

void finish_sentence(std::vector<Token>& pending, int ordinal, Treebank& tb) {
  if (pending.empty()) return;
  DepTree tree;
  tree.tokens = std::move(pending);
  tree.sentence_id = std::to_string(ordinal);
  pending.clear();
  ValidationReport report = validate_tree(tree);
  if (!report.empty()) {
    std::ostringstream msg;
    msg << "sentence " << tree.sentence_id << ": invalid tree:";
    for (const auto& issue : report) msg << " [" << issue.message << "]";
    throw ValidationError(msg.str());
  }
  tb.trees.push_back(std::move(tree));
}

}  // namespace

int DepTree::root_id() const {
  for (const Token& t : tokens)
    if (t.head == 0) return t.id;
  return 0;
}

size_t Treebank::token_count() const {
  size_t n = 0;
  for (const DepTree& t : trees) n += t.tokens.size();
  return n;
}

Treebank parse_conll(const std::string& text, ParseStats* stats) {
  Treebank tb;
  std::vector<Token> pending;
  int ordinal = 1;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line = (nl == std::string::npos) ? text.substr(pos)
                                                 : text.substr(pos, nl - pos);
    pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (line.empty()) {
      if (!pending.empty()) finish_sentence(pending, ordinal++, tb);
      continue;
    }
    if (line[0] == '#') {
      if (stats) ++stats->comment_lines;
      continue;
    }

    std::vector<std::string> fields = split_tabs(line);
    // Multi-word ranges / empty nodes ("2-4", "5.1") are not tokens.
    if (fields[0].find('-') != std::string::npos ||
        fields[0].find('.') != std::string::npos) {
      if (stats) ++stats->skipped_span_lines;
      continue;
    }
    if (fields.size() < 8 || fields.size() > 10) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 8-10 columns, got " +
                       std::to_string(fields.size()));
    }

    Token tok;
    if (!parse_int(fields[0], tok.id))
      throw ParseError("line " + std::to_string(line_no) + ": non-integer id '" + fields[0] + "'");
    tok.form = field_or_underscore(fields[1]);
    tok.lemma = field_or_underscore(fields[2]);
    tok.upos = field_or_underscore(fields[3]);
    tok.xpos = field_or_underscore(fields[4]);
    tok.feats = field_or_underscore(fields[5]);
    if (!parse_int(fields[6], tok.head))
      throw ParseError("line " + std::to_string(line_no) + ": non-integer head '" + fields[6] + "'");
    tok.deprel = fields[7];
    tok.phead = fields.size() > 8 ? field_or_underscore(fields[8]) : "_";
    tok.pdeprel = fields.size() > 9 ? field_or_underscore(fields[9]) : "_";
    pending.push_back(std::move(tok));
  }
  if (!pending.empty()) finish_sentence(pending, ordinal++, tb);
  return tb;
}

Treebank parse_conll_file(const std::string& path, ParseStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open treebank file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Treebank tb = parse_conll(buf.str(), stats);
  tb.provenance = path;
  return tb;
}

std::string write_conll(const Treebank& tb) {
  std::string out;
  out.reserve(tb.token_count() * 40);
  for (const DepTree& tree : tb.trees) {
    for (const Token& t : tree.tokens) {
      out += std::to_string(t.id);
      out += '\t';
      out += field_or_underscore(t.form);
      out += '\t';
      out += field_or_underscore(t.lemma);
      out += '\t';
      out += field_or_underscore(t.upos);
      out += '\t';
      out += field_or_underscore(t.xpos);
      out += '\t';
      out += field_or_underscore(t.feats);
      out += '\t';
      out += std::to_string(t.head);
      out += '\t';
      out += field_or_underscore(t.deprel);
      out += '\t';
      out += field_or_underscore(t.phead);
      out += '\t';
      out += field_or_underscore(t.pdeprel);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

void write_conll_file(const Treebank& tb, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  out << write_conll(tb);
  if (!out) throw DataError("failed writing output file: " + path);
}

ValidationReport validate_tree(const DepTree& tree) {
  ValidationReport report;
  const int n = tree.size();

  std::vector<int> roots;
  bool ids_ok = true;
  for (int i = 0; i < n; ++i) {
    const Token& t = tree.tokens[static_cast<size_t>(i)];
    if (t.id != i + 1) {
      report.push_back({ValidationIssue::Kind::IdGap,
                        {t.id},
                        "id gap: token at position " + std::to_string(i + 1) + " has id " +
                            std::to_string(t.id)});
      ids_ok = false;
    }
    if (t.head < 0 || t.head > n) {
      report.push_back({ValidationIssue::Kind::HeadOutOfRange,
                        {t.id},
                        "head out of range at token " + std::to_string(t.id) + ": " +
                            std::to_string(t.head)});
    }
    if (t.head == t.id) {
      report.push_back({ValidationIssue::Kind::SelfHead,
                        {t.id},
                        "self-headed token " + std::to_string(t.id)});
    }
    if (t.head == 0) roots.push_back(t.id);
  }
  if (roots.empty()) {
    report.push_back({ValidationIssue::Kind::NoRoot, {}, "no root (no token with head 0)"});
  } else if (roots.size() > 1) {
    std::string ids;
    for (int id : roots) ids += (ids.empty() ? "" : ",") + std::to_string(id);
    report.push_back({ValidationIssue::Kind::MultiRoot, roots, "multi-root: tokens " + ids});
  }

  // Cycle check only makes sense once ids and head ranges hold.
  bool ranges_ok = std::all_of(tree.tokens.begin(), tree.tokens.end(), [&](const Token& t) {
    return t.head >= 0 && t.head <= n && t.head != t.id;
  });
  if (ids_ok && ranges_ok) {
    // 0 = unvisited, 1 = on current chain, 2 = resolved to root
    std::vector<int> state(static_cast<size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
      if (state[static_cast<size_t>(start)] != 0) continue;
      std::vector<int> chain;
      int cur = start;
      while (cur != 0 && state[static_cast<size_t>(cur)] == 0) {
        state[static_cast<size_t>(cur)] = 1;
        chain.push_back(cur);
        cur = tree.token(cur).head;
      }
      if (cur != 0 && state[static_cast<size_t>(cur)] == 1) {
        // walked back into the current chain
        std::vector<int> cycle(chain.begin() +
                                   (std::find(chain.begin(), chain.end(), cur) - chain.begin()),
                               chain.end());
        std::string ids;
        for (int id : cycle) ids += (ids.empty() ? "" : ",") + std::to_string(id);
        report.push_back({ValidationIssue::Kind::Cycle, cycle, "cycle through tokens " + ids});
      }
      for (int id : chain) state[static_cast<size_t>(id)] = 2;
    }
  }
  return report;
}

std::vector<std::vector<int>> children_index(const DepTree& tree) {
  std::vector<std::vector<int>> kids(static_cast<size_t>(tree.size()) + 1);
  for (const Token& t : tree.tokens) kids[static_cast<size_t>(t.head)].push_back(t.id);
  return kids;
}

}  // namespace sentree
