#include "generators.hpp"

#include <algorithm>

#include "sentree/sentiment.hpp"

namespace sentree::testing {

Lexicon toy_lexicon() {
  Lexicon lex;
  lex.add_subjective("good", "_", 2.0);
  lex.add_subjective("bad", "_", -1.5);
  lex.add_intensifier("very", 0.25);
  lex.add_intensifier("slightly", -0.5);
  lex.add_negator("not");
  return lex;
}

const std::vector<std::string>& rule_relevant_labels() {
  static const std::vector<std::string> labels{"advmod", "acomp", "cc", "mark", "neg", "dep"};
  return labels;
}

namespace {

bool valid_heads(const std::vector<int>& heads) {
  const int n = static_cast<int>(heads.size());
  int roots = 0;
  for (int h : heads) roots += h == 0;
  if (roots != 1) return false;
  for (int start = 1; start <= n; ++start) {
    int cur = start;
    int steps = 0;
    while (cur != 0) {
      cur = heads[static_cast<size_t>(cur) - 1];
      if (++steps > n) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> enumerate_head_vectors(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> heads(static_cast<size_t>(n), 0);
  while (true) {
    if (valid_heads(heads)) out.push_back(heads);
    int i = 0;
    while (i < n && heads[static_cast<size_t>(i)] == n) {
      heads[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++heads[static_cast<size_t>(i)];
  }
  return out;
}

DepTree make_tree(const std::vector<int>& heads, const std::vector<std::string>& deprels,
                  const std::vector<std::string>& forms,
                  const std::vector<std::string>& upos) {
  DepTree tree;
  for (size_t i = 0; i < heads.size(); ++i) {
    Token t;
    t.id = static_cast<int>(i) + 1;
    t.form = forms[i];
    t.upos = upos.empty() ? "X" : upos[i];
    t.head = heads[i];
    t.deprel = deprels[i];
    tree.tokens.push_back(std::move(t));
  }
  return tree;
}

DepTree random_tree(std::mt19937_64& rng, int n, const std::vector<std::string>& labels,
                    const std::vector<std::string>& forms) {
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
  }
  std::vector<int> heads(static_cast<size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    // attach to a token placed earlier in the order: stays acyclic
    int parent = order[rng() % static_cast<uint64_t>(i)];
    heads[static_cast<size_t>(order[static_cast<size_t>(i)]) - 1] = parent;
  }
  std::vector<std::string> deprels, tree_forms;
  for (int i = 0; i < n; ++i) {
    deprels.push_back(labels[rng() % labels.size()]);
    tree_forms.push_back(forms[rng() % forms.size()]);
  }
  return make_tree(heads, deprels, tree_forms);
}

Treebank random_treebank(uint64_t seed, int sentences, int min_len, int max_len,
                         const std::vector<std::string>& labels,
                         const std::vector<std::string>& forms) {
  std::mt19937_64 rng(seed);
  Treebank tb;
  for (int s = 0; s < sentences; ++s) {
    int n = min_len + static_cast<int>(rng() % static_cast<uint64_t>(max_len - min_len + 1));
    DepTree tree = random_tree(rng, n, labels, forms);
    tree.sentence_id = std::to_string(s + 1);
    tb.trees.push_back(std::move(tree));
  }
  tb.provenance = "synthetic";
  return tb;
}

namespace {

// named forms used by the benchmark patterns
struct PatternWords {
  std::string strong_for;   // aligned with the document polarity
  std::string strong_against;
  std::string weak_for;
};

PatternWords words_for(int sigma) {
  if (sigma > 0) return {"good", "awful", "fine"};
  return {"awful", "good", "poor"};
}

std::string filler(std::mt19937_64& rng) {
  static const std::vector<std::string> pool{"the",  "it",    "was",   "film", "plot",
                                             "scene", "thing", "really", "quite", "seems"};
  return pool[rng() % pool.size()];
}

// "it was not AGAINST thing": flips to the document polarity via negation
DepTree negation_pattern(int sigma, std::mt19937_64& rng) {
  PatternWords w = words_for(sigma);
  return make_tree({4, 4, 4, 0, 4},
                   {"nsubj", "cop", "neg", "root", "dep"},
                   {filler(rng), filler(rng), "not", w.strong_against, filler(rng)},
                   {"X", "X", "X", "ADJ", "X"});
}

// "it is very FOR indeed": intensified adjectival complement, sign-stable
DepTree intensifier_pattern(int sigma, std::mt19937_64& rng) {
  PatternWords w = words_for(sigma);
  return make_tree({2, 0, 2, 2, 2},
                   {"nsubj", "root", "advmod", "acomp", "dep"},
                   {filler(rng), filler(rng), "very", w.strong_for, filler(rng)},
                   {"X", "X", "X", "ADJ", "X"});
}

// "AGAINST was AGAINST but FOR FOR-weak": main clause outweighed once
// attenuated, so the adversative fold decides the sign
DepTree adversative_pattern(int sigma, std::mt19937_64& rng) {
  PatternWords w = words_for(sigma);
  return make_tree({3, 3, 0, 3, 3, 3},
                   {"dep", "cop", "root", "cc", "conj", "dep"},
                   {w.strong_against, filler(rng), w.strong_against, "but", w.strong_for,
                    w.weak_for},
                   {"ADJ", "X", "ADJ", "X", "ADJ", "ADJ"});
}

// "if AGAINST happens , FOR-weak overall": the conditional clause is
// ignored, leaving the weak aligned word
DepTree conditional_pattern(int sigma, std::mt19937_64& rng) {
  PatternWords w = words_for(sigma);
  return make_tree({3, 3, 5, 5, 0, 5},
                   {"mark", "dep", "advcl", "det", "root", "dep"},
                   {"if", w.strong_against, filler(rng), filler(rng), w.weak_for, filler(rng)},
                   {"X", "ADJ", "X", "X", "ADJ", "X"});
}

// One long flat sentence whose sign hangs on a single weak word at the
// root. Neutral fillers never move the score, but any stray "neg" label
// introduced under the root flips the whole document, so these documents
// degrade as soon as labels start to go wrong and then plateau.
DepTree coin_pattern(int sigma, std::mt19937_64& rng) {
  PatternWords w = words_for(sigma);
  const int fillers = 300;
  std::vector<int> heads(static_cast<size_t>(fillers) + 1, 1);
  std::vector<std::string> labels(static_cast<size_t>(fillers) + 1);
  std::vector<std::string> forms(static_cast<size_t>(fillers) + 1);
  heads[0] = 0;
  labels[0] = "root";
  forms[0] = w.weak_for;
  static const char* kFilerLabels[3] = {"dep", "nsubj", "det"};
  for (int i = 1; i <= fillers; ++i) {
    labels[static_cast<size_t>(i)] = kFilerLabels[i % 3];
    forms[static_cast<size_t>(i)] = filler(rng);
  }
  return make_tree(heads, labels, forms);
}

}  // namespace

Benchmark build_benchmark(uint64_t seed, int documents) {
  Benchmark bench;
  bench.lexicon.add_subjective("good", "_", 2.0);
  bench.lexicon.add_subjective("awful", "_", -2.0);
  bench.lexicon.add_subjective("fine", "_", 1.0);
  bench.lexicon.add_subjective("poor", "_", -1.0);
  bench.lexicon.add_intensifier("very", 0.25);
  bench.lexicon.add_intensifier("slightly", -0.5);
  bench.lexicon.add_negator("not");

  std::mt19937_64 rng(seed);
  RuleSet all = RuleSet::all();
  int next_sentence = 0;
  for (int d = 0; d < documents; ++d) {
    int sigma = d % 2 == 0 ? 1 : -1;
    bool fragile = d % 24 == 0;
    bool coin = !fragile && d % 9 == 4;
    std::vector<DepTree> trees;
    if (fragile) {
      trees.push_back(negation_pattern(sigma, rng));
      trees.push_back(conditional_pattern(sigma, rng));
    } else if (coin) {
      trees.push_back(coin_pattern(sigma, rng));
    } else {
      trees.push_back(negation_pattern(sigma, rng));
      trees.push_back(intensifier_pattern(sigma, rng));
      trees.push_back(adversative_pattern(sigma, rng));
      trees.push_back(negation_pattern(sigma, rng));
      trees.push_back(conditional_pattern(sigma, rng));
      trees.push_back(adversative_pattern(sigma, rng));
      trees.push_back(negation_pattern(sigma, rng));
      trees.push_back(conditional_pattern(sigma, rng));
    }

    DocumentSpan span;
    span.id = "doc" + std::to_string(d + 1);
    span.first = next_sentence;
    span.end = next_sentence + static_cast<int>(trees.size());
    next_sentence = span.end;

    std::vector<const DepTree*> doc;
    for (DepTree& tree : trees) {
      tree.sentence_id = std::to_string(bench.corpus.trees.trees.size() + 1);
      bench.corpus.trees.trees.push_back(std::move(tree));
    }
    for (int i = span.first; i < span.end; ++i)
      doc.push_back(&bench.corpus.trees.trees[static_cast<size_t>(i)]);
    span.gold = classify_document(doc, bench.lexicon, all);
    bench.corpus.documents.push_back(std::move(span));
  }
  bench.corpus.trees.provenance = "benchmark";
  return bench;
}

}  // namespace sentree::testing
