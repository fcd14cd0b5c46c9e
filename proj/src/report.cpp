#include "sentree/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace sentree {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

double rounded(double value, int decimals) {
  return std::stod(fixed(value, decimals));
}

using ordered_json = nlohmann::ordered_json;

}  // namespace

ReportFormat report_format_from_name(const std::string& name) {
  std::string n = lowercased(name);
  if (n == "csv") return ReportFormat::Csv;
  if (n == "json") return ReportFormat::Json;
  throw DataError("unknown report format '" + name + "' (want csv or json)");
}

std::string ablation_csv(const AblationTable& table) {
  std::string out = "input";
  for (RuleSubset s : table.subsets) out += "," + subset_name(s);
  out += '\n';
  for (size_t row = 0; row < table.inputs.size(); ++row) {
    out += table.inputs[row];
    for (double cell : table.cells[row]) out += "," + fixed(cell, 2);
    out += '\n';
  }
  return out;
}

std::string ablation_json(const AblationTable& table) {
  ordered_json doc = ordered_json::array();
  for (size_t row = 0; row < table.inputs.size(); ++row) {
    ordered_json entry;
    entry["input"] = table.inputs[row];
    for (size_t col = 0; col < table.subsets.size(); ++col)
      entry[subset_name(table.subsets[col])] = rounded(table.cells[row][col], 2);
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string evaluation_csv(const AttachmentScores& scores, const std::vector<LabelPR>& labels) {
  std::string out = "metric,value\n";
  out += "las," + fixed(scores.las, 6) + "\n";
  out += "uas," + fixed(scores.uas, 6) + "\n";
  out += "la," + fixed(scores.la, 6) + "\n";
  out += "scored_tokens," + std::to_string(scores.scored_tokens) + "\n";
  out += "\nlabel,tp,fp,fn,precision,recall,note\n";
  for (const LabelPR& pr : labels) {
    std::string note;
    if (!pr.precision.has_value()) note = "precision undefined (no predictions)";
    if (!pr.recall.has_value())
      note += std::string(note.empty() ? "" : "; ") + "recall undefined (no gold tokens)";
    out += pr.label + "," + std::to_string(pr.tp) + "," + std::to_string(pr.fp) + "," +
           std::to_string(pr.fn) + "," + fixed(pr.precision.value_or(0.0), 6) + "," +
           fixed(pr.recall.value_or(0.0), 6) + "," + note + "\n";
  }
  return out;
}

std::string evaluation_json(const AttachmentScores& scores, const std::vector<LabelPR>& labels) {
  ordered_json doc;
  doc["las"] = rounded(scores.las, 6);
  doc["uas"] = rounded(scores.uas, 6);
  doc["la"] = rounded(scores.la, 6);
  doc["scored_tokens"] = scores.scored_tokens;
  doc["labels"] = ordered_json::array();
  for (const LabelPR& pr : labels) {
    ordered_json entry;
    entry["label"] = pr.label;
    entry["tp"] = pr.tp;
    entry["fp"] = pr.fp;
    entry["fn"] = pr.fn;
    entry["precision"] = rounded(pr.precision.value_or(0.0), 6);
    entry["precision_defined"] = pr.precision.has_value();
    entry["recall"] = rounded(pr.recall.value_or(0.0), 6);
    entry["recall_defined"] = pr.recall.has_value();
    doc["labels"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string classification_csv(const Corpus& corpus, const ClassificationResult& result) {
  std::string out = "doc_id,gold,predicted,correct\n";
  for (size_t d = 0; d < corpus.documents.size(); ++d) {
    out += corpus.documents[d].id + "," + polarity_name(corpus.documents[d].gold) + "," +
           polarity_name(result.labels[d]) + "," + (result.correct[d] ? "1" : "0") + "\n";
  }
  out += "\naccuracy," + fixed(result.accuracy_percent, 2) + "\n";
  return out;
}

std::string classification_json(const Corpus& corpus, const ClassificationResult& result) {
  ordered_json doc;
  doc["documents"] = ordered_json::array();
  for (size_t d = 0; d < corpus.documents.size(); ++d) {
    ordered_json entry;
    entry["id"] = corpus.documents[d].id;
    entry["gold"] = polarity_name(corpus.documents[d].gold);
    entry["predicted"] = polarity_name(result.labels[d]);
    entry["correct"] = static_cast<bool>(result.correct[d]);
    doc["documents"].push_back(std::move(entry));
  }
  doc["accuracy"] = rounded(result.accuracy_percent, 2);
  return doc.dump(2) + "\n";
}

std::string curve_json(const CurveSeries& series) {
  ordered_json doc = ordered_json::array();
  for (const CurvePoint& p : series.points) {
    ordered_json entry;
    entry["las"] = rounded(p.las, 6);
    entry["accuracy_by_corpus"][series.corpus_name] = rounded(p.accuracy_percent, 2);
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string curve_csv(const CurveSeries& series) {
  std::string out = "las,corpus,accuracy\n";
  for (const CurvePoint& p : series.points)
    out += fixed(p.las, 6) + "," + series.corpus_name + "," + fixed(p.accuracy_percent, 2) + "\n";
  return out;
}

std::string comparison_csv(const ComparisonResult& r) {
  std::string out = "statistic,p_value,a_correct,a_incorrect,b_correct,b_incorrect\n";
  out += fixed(r.statistic, 6) + "," + fixed(r.p_value, 6) + "," +
         std::to_string(r.contingency[0][0]) + "," + std::to_string(r.contingency[0][1]) + "," +
         std::to_string(r.contingency[1][0]) + "," + std::to_string(r.contingency[1][1]) + "\n";
  return out;
}

std::string comparison_json(const ComparisonResult& r) {
  ordered_json doc;
  doc["statistic"] = rounded(r.statistic, 6);
  doc["p_value"] = rounded(r.p_value, 6);
  doc["contingency"] = {{r.contingency[0][0], r.contingency[0][1]},
                        {r.contingency[1][0], r.contingency[1][1]}};
  return doc.dump(2) + "\n";
}

std::string perturbation_report_json(const PerturbationReport& r) {
  ordered_json doc;
  doc["achieved_las"] = rounded(r.achieved_las, 6);
  doc["achieved_uas"] = rounded(r.achieved_uas, 6);
  doc["achieved_la"] = rounded(r.achieved_la, 6);
  doc["corrupted_tokens"] = r.corrupted_tokens;
  doc["discarded_reattachments"] = r.discarded_reattachments;
  return doc.dump(2) + "\n";
}

std::string perturbation_report_csv(const PerturbationReport& r) {
  std::string out = "achieved_las,achieved_uas,achieved_la,corrupted_tokens,discarded_reattachments\n";
  out += fixed(r.achieved_las, 6) + "," + fixed(r.achieved_uas, 6) + "," +
         fixed(r.achieved_la, 6) + "," + std::to_string(r.corrupted_tokens) + "," +
         std::to_string(r.discarded_reattachments) + "\n";
  return out;
}

std::string timing_csv(const TimingStats& t) {
  std::string out = "avg_seconds,min_seconds,max_seconds,runs\n";
  out += fixed(t.average, 6) + "," + fixed(t.minimum, 6) + "," + fixed(t.maximum, 6) + "," +
         std::to_string(t.runs) + "\n";
  return out;
}

std::string timing_json(const TimingStats& t) {
  ordered_json doc;
  doc["avg_seconds"] = rounded(t.average, 6);
  doc["min_seconds"] = rounded(t.minimum, 6);
  doc["max_seconds"] = rounded(t.maximum, 6);
  doc["runs"] = t.runs;
  return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  out << content;
  if (!out) throw DataError("failed writing output file: " + path);
}

}  // namespace sentree
