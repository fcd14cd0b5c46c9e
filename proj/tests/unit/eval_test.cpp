#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "oracle.hpp"
#include "sentree/eval.hpp"

using namespace sentree;
using sentree::testing::make_tree;

namespace {

Treebank bank(std::initializer_list<DepTree> trees) {
  Treebank tb;
  for (const DepTree& t : trees) tb.trees.push_back(t);
  return tb;
}

// gold five-token sentence plus a prediction wrong in controlled places:
// heads correct for tokens 1-4, labels correct for 1,2,3,5
std::pair<Treebank, Treebank> five_token_pair() {
  std::vector<std::string> forms{"a", "b", "c", "d", "e"};
  Treebank gold = bank({make_tree({2, 0, 2, 2, 4}, {"nsubj", "root", "dobj", "advmod", "amod"},
                                  forms)});
  Treebank pred = bank({make_tree({2, 0, 2, 2, 3}, {"nsubj", "root", "dobj", "xcomp", "amod"},
                                  forms)});
  return {gold, pred};
}

}  // namespace

TEST_CASE("identical treebanks score 1.0 on all metrics") {
  auto [gold, pred] = five_token_pair();
  AttachmentScores s = attachment_scores(gold, gold);
  CHECK(s.las == 1.0);
  CHECK(s.uas == 1.0);
  CHECK(s.la == 1.0);
  CHECK(s.scored_tokens == 5);
}

TEST_CASE("five-token hand-counted case: las 0.60, uas 0.80, la 0.80") {
  auto [gold, pred] = five_token_pair();
  AttachmentScores s = attachment_scores(gold, pred);
  CHECK(s.uas == doctest::Approx(0.80));
  CHECK(s.la == doctest::Approx(0.80));
  CHECK(s.las == doctest::Approx(0.60));
}

TEST_CASE("all heads wrong forces uas and las to zero") {
  std::vector<std::string> forms{"a", "b", "c"};
  Treebank gold = bank({make_tree({2, 0, 2}, {"dep", "root", "dep"}, forms)});
  Treebank pred = bank({make_tree({3, 3, 0}, {"dep", "root", "dep"}, forms)});
  AttachmentScores s = attachment_scores(gold, pred);
  CHECK(s.uas == 0.0);
  CHECK(s.las == 0.0);
  // labels all match, so label accuracy survives intact
  CHECK(s.la == 1.0);
}

TEST_CASE("punctuation exclusion removes PUNCT and dot tagged tokens") {
  Treebank gold = bank({make_tree({2, 0, 2, 2}, {"dep", "root", "punct", "punct"},
                                  {"a", "b", ",", "."},
                                  {"X", "X", "PUNCT", "."})});
  Treebank pred = bank({make_tree({2, 0, 3, 1}, {"dep", "root", "punct", "punct"},
                                  {"a", "b", ",", "."},
                                  {"X", "X", "PUNCT", "."})});
  AttachmentScores with_punct = attachment_scores(gold, pred, false);
  CHECK(with_punct.scored_tokens == 4);
  CHECK(with_punct.uas == doctest::Approx(0.5));
  AttachmentScores without = attachment_scores(gold, pred, true);
  CHECK(without.scored_tokens == 2);
  CHECK(without.las == 1.0);
  CHECK(without.uas == 1.0);
}

TEST_CASE("misaligned treebanks raise alignment errors naming the sentence") {
  Treebank gold = bank({make_tree({0}, {"root"}, {"a"}),
                        make_tree({0, 1}, {"root", "dep"}, {"a", "b"})});
  Treebank shorter = bank({make_tree({0}, {"root"}, {"a"})});
  CHECK_THROWS_AS(attachment_scores(gold, shorter), AlignmentError);

  Treebank token_mismatch = bank({make_tree({0}, {"root"}, {"a"}),
                                  make_tree({0}, {"root"}, {"a"})});
  CHECK_THROWS_WITH_AS(attachment_scores(gold, token_mismatch),
                       doctest::Contains("sentence 2"), AlignmentError);

  Treebank form_mismatch = bank({make_tree({0}, {"root"}, {"x"}),
                                 make_tree({0, 1}, {"root", "dep"}, {"a", "b"})});
  CHECK_THROWS_WITH_AS(attachment_scores(gold, form_mismatch),
                       doctest::Contains("sentence 1"), AlignmentError);
}

TEST_CASE("per-label precision and recall require the head to be correct") {
  // gold has 2 neg tokens; pred labels 3 tokens neg, 2 of them fully correct
  std::vector<std::string> forms{"a", "b", "c", "d", "e"};
  Treebank gold = bank({make_tree({2, 0, 2, 2, 2}, {"neg", "root", "neg", "dep", "dep"}, forms)});
  Treebank pred = bank({make_tree({2, 0, 2, 2, 2}, {"neg", "root", "neg", "neg", "dep"}, forms)});
  LabelPR pr = per_label_pr(gold, pred, "neg");
  CHECK(pr.tp == 2);
  CHECK(pr.fp == 1);
  CHECK(pr.fn == 0);
  REQUIRE(pr.precision.has_value());
  REQUIRE(pr.recall.has_value());
  CHECK(*pr.precision == doctest::Approx(2.0 / 3.0));
  CHECK(*pr.recall == doctest::Approx(1.0));
}

TEST_CASE("a correct label on a wrong head is both a false positive and a false negative") {
  std::vector<std::string> forms{"a", "b"};
  Treebank gold = bank({make_tree({2, 0}, {"neg", "root"}, forms)});
  Treebank pred = bank({make_tree({0, 1}, {"root", "neg"}, forms)});
  LabelPR pr = per_label_pr(gold, pred, "neg");
  CHECK(pr.tp == 0);
  CHECK(pr.fp == 1);
  CHECK(pr.fn == 1);
  CHECK(*pr.precision == 0.0);
  CHECK(*pr.recall == 0.0);
}

TEST_CASE("identity prediction gives 1.0 precision and recall for every label") {
  auto [gold, pred] = five_token_pair();
  for (const LabelPR& pr : per_label_table(gold, gold)) {
    CHECK(*pr.precision == 1.0);
    CHECK(*pr.recall == 1.0);
    CHECK(pr.fp == 0);
    CHECK(pr.fn == 0);
  }
}

TEST_CASE("unpredicted label has undefined precision, zero recall") {
  std::vector<std::string> forms{"a", "b"};
  Treebank gold = bank({make_tree({2, 0}, {"neg", "root"}, forms)});
  Treebank pred = bank({make_tree({2, 0}, {"dep", "root"}, forms)});
  LabelPR pr = per_label_pr(gold, pred, "neg");
  CHECK_FALSE(pr.precision.has_value());
  REQUIRE(pr.recall.has_value());
  CHECK(*pr.recall == 0.0);

  LabelPR never_gold = per_label_pr(gold, pred, "dep");
  CHECK_FALSE(never_gold.recall.has_value());
  REQUIRE(never_gold.precision.has_value());
  CHECK(*never_gold.precision == 0.0);
}

TEST_CASE("property: las <= min(uas, la) and tp sum equals las numerator") {
  std::mt19937_64 rng(99);
  const auto& labels = sentree::testing::rule_relevant_labels();
  std::vector<std::string> forms{"a", "b", "c"};
  for (int round = 0; round < 200; ++round) {
    int n_sent = 1 + static_cast<int>(rng() % 4);
    Treebank gold, pred;
    for (int s = 0; s < n_sent; ++s) {
      int n = 1 + static_cast<int>(rng() % 6);
      DepTree g = sentree::testing::random_tree(rng, n, labels, forms);
      DepTree p = sentree::testing::random_tree(rng, n, labels, forms);
      for (int id = 1; id <= n; ++id) p.token(id).form = g.token(id).form;
      gold.trees.push_back(std::move(g));
      pred.trees.push_back(std::move(p));
    }
    AttachmentScores s = attachment_scores(gold, pred);
    CHECK(s.las <= std::min(s.uas, s.la) + 1e-12);
    CHECK(s.las >= 0.0);
    CHECK(s.uas <= 1.0);

    long tp_sum = 0;
    for (const LabelPR& pr : per_label_table(gold, pred)) tp_sum += pr.tp;
    CHECK(tp_sum ==
          std::lround(s.las * static_cast<double>(s.scored_tokens)));

    // permuting sentences identically on both sides changes nothing
    Treebank gold_rev = gold, pred_rev = pred;
    std::reverse(gold_rev.trees.begin(), gold_rev.trees.end());
    std::reverse(pred_rev.trees.begin(), pred_rev.trees.end());
    AttachmentScores r = attachment_scores(gold_rev, pred_rev);
    CHECK(r.las == s.las);
    CHECK(r.uas == s.uas);
    CHECK(r.la == s.la);
  }
}

TEST_CASE("chi-squared matches the frozen closed-form constants") {
  std::vector<bool> a(200, true), b(200, true);
  std::fill(a.begin() + 146, a.end(), false);
  std::fill(b.begin() + 136, b.end(), false);
  ComparisonResult r = chi_squared_compare(a, b);
  CHECK(r.contingency[0][0] == 146);
  CHECK(r.contingency[0][1] == 54);
  CHECK(r.contingency[1][0] == 136);
  CHECK(r.contingency[1][1] == 64);
  // reference values from an independent Pearson computation
  CHECK(r.statistic == doctest::Approx(1.2020675561966583).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(0.272908831705794).epsilon(1e-12));
}

TEST_CASE("identical outcomes give statistic 0 and p-value 1") {
  std::vector<bool> a{true, false, true, true};
  ComparisonResult r = chi_squared_compare(a, a);
  CHECK(r.statistic == 0.0);
  CHECK(r.p_value == 1.0);
}

TEST_CASE("all-correct systems form a degenerate table") {
  std::vector<bool> a(10, true);
  CHECK_THROWS_AS(chi_squared_compare(a, a), DegenerateTableError);
  std::vector<bool> none(10, false);
  CHECK_THROWS_AS(chi_squared_compare(none, none), DegenerateTableError);
}

TEST_CASE("outcome vectors must be non-empty and equally long") {
  std::vector<bool> a{true}, empty;
  CHECK_THROWS_AS(chi_squared_compare(a, empty), AlignmentError);
  std::vector<bool> b{true, false};
  CHECK_THROWS_AS(chi_squared_compare(a, b), AlignmentError);
}

TEST_CASE("property: chi-squared is symmetric and p decreases as the statistic grows") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 50; ++round) {
    size_t n = 20 + rng() % 200;
    std::vector<bool> a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
      a[i] = rng() % 3 != 0;
      b[i] = rng() % 2 != 0;
    }
    long correct_a = static_cast<long>(std::count(a.begin(), a.end(), true));
    long correct_b = static_cast<long>(std::count(b.begin(), b.end(), true));
    bool degenerate = correct_a + correct_b == 0 ||
                      correct_a + correct_b == static_cast<long>(2 * n);
    if (degenerate) continue;
    ComparisonResult ab = chi_squared_compare(a, b);
    ComparisonResult ba = chi_squared_compare(b, a);
    CHECK(ab.statistic == doctest::Approx(ba.statistic).epsilon(1e-12));
    CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));
  }

  double prev = chi_squared_upper_tail_df1(0.0);
  CHECK(prev == 1.0);
  for (double stat = 0.25; stat < 30.0; stat += 0.25) {
    double p = chi_squared_upper_tail_df1(stat);
    CHECK(p < prev);
    prev = p;
  }
}
