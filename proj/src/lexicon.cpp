#include "sentree/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sentree {

std::string lowercased(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void Lexicon::add_subjective(std::string form, std::string upos, double so) {
  form = lowercased(form);
  auto& slots = subjective_[form];
  for (const auto& [pos, _] : slots) {
    if (pos == upos)
      throw DataError("duplicate subjective entry (" + form + ", " + upos + ")");
  }
  slots.emplace_back(std::move(upos), so);
  ++subjective_entries_;
}

void Lexicon::add_intensifier(std::string form, double weight) {
  if (weight <= -1.0)
    throw DataError("intensifier weight must be > -1: " + form + " has " +
                    std::to_string(weight));
  form = lowercased(form);
  if (intensifiers_.contains(form))
    throw DataError("duplicate intensifier entry " + form);
  intensifiers_.emplace(std::move(form), weight);
}

void Lexicon::add_negator(std::string form) {
  form = lowercased(form);
  if (negators_.contains(form)) throw DataError("duplicate negator entry " + form);
  negators_.insert(std::move(form));
}

double Lexicon::word_so(std::string_view form, std::string_view upos) const {
  auto it = subjective_.find(lowercased(form));
  if (it == subjective_.end()) return 0.0;
  const double* any = nullptr;
  for (const auto& [pos, so] : it->second) {
    if (pos == upos) return so;
    if (pos == "_") any = &so;
  }
  return any ? *any : 0.0;
}

std::pair<bool, double> Lexicon::intensifier_weight(std::string_view form) const {
  auto it = intensifiers_.find(lowercased(form));
  if (it == intensifiers_.end()) return {false, 0.0};
  return {true, it->second};
}

bool Lexicon::is_negator(std::string_view form) const {
  return negators_.contains(lowercased(form));
}

bool Lexicon::is_adversative_marker(std::string_view form) const {
  return adversative_markers.contains(lowercased(form));
}

bool Lexicon::is_conditional_marker(std::string_view form) const {
  return conditional_markers.contains(lowercased(form));
}

namespace {

double parse_double(const std::string& s, int line_no, const std::string& source) {
  try {
    size_t consumed = 0;
    double v = std::stod(s, &consumed);
    if (consumed != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(source + ":" + std::to_string(line_no) + ": non-numeric value '" + s + "'");
  }
}

}  // namespace

Lexicon parse_lexicon(const std::string& text, const std::string& source) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

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

    const std::string& kind = fields[0];
    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError(source + ":" + std::to_string(line_no) + ": " + what);
    };
    try {
      if (kind == "so" || kind == "int") {
        // kind, form, [upos], value
        if (fields.size() != 3 && fields.size() != 4)
          throw fail("expected 3 or 4 columns for '" + kind + "' line");
        const std::string& form = fields[1];
        std::string upos = fields.size() == 4 ? fields[2] : std::string("_");
        if (upos.empty()) upos = "_";
        double value = parse_double(fields.back(), line_no, source);
        if (kind == "so")
          lex.add_subjective(form, upos, value);
        else
          lex.add_intensifier(form, value);
      } else if (kind == "neg") {
        if (fields.size() != 2) throw fail("expected 2 columns for 'neg' line");
        lex.add_negator(fields[1]);
      } else {
        throw fail("unknown entry kind '" + kind + "' (want so/int/neg)");
      }
    } catch (const DataError& e) {
      throw DataError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return lex;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str(), path);
}

}  // namespace sentree
