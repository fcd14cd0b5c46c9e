#ifndef SENTREE_REPORT_HPP
#define SENTREE_REPORT_HPP

#include <string>
#include <vector>

#include "sentree/eval.hpp"
#include "sentree/experiment.hpp"

namespace sentree {

enum class ReportFormat : uint8_t { Csv, Json };

ReportFormat report_format_from_name(const std::string& name);

// All emitters are deterministic: fixed column/key order, fixed numeric
// formatting. Accuracy cells carry two decimals; scores six.

std::string ablation_csv(const AblationTable& table);
std::string ablation_json(const AblationTable& table);

// Header "metric,value" block followed by a blank line and the per-label
// "label,tp,fp,fn,precision,recall,note" block. Undefined precision/recall
// serialize as 0.000000 with a note.
std::string evaluation_csv(const AttachmentScores& scores,
                           const std::vector<LabelPR>& labels);
std::string evaluation_json(const AttachmentScores& scores,
                            const std::vector<LabelPR>& labels);

std::string classification_csv(const Corpus& corpus, const ClassificationResult& result);
std::string classification_json(const Corpus& corpus, const ClassificationResult& result);

// JSON array of {las, accuracy_by_corpus} objects sorted ascending by las.
std::string curve_json(const CurveSeries& series);
std::string curve_csv(const CurveSeries& series);

std::string comparison_csv(const ComparisonResult& r);
std::string comparison_json(const ComparisonResult& r);

std::string perturbation_report_json(const PerturbationReport& r);
std::string perturbation_report_csv(const PerturbationReport& r);

std::string timing_csv(const TimingStats& t);
std::string timing_json(const TimingStats& t);

// Throws DataError when the path cannot be opened for writing.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sentree

#endif
