#include "sentree/rules.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sentree/lexicon.hpp"

namespace sentree {

bool RuleSet::enabled(Rule r) const {
  switch (r) {
    case Rule::Intensification: return intensification;
    case Rule::But: return but;
    case Rule::Negation: return negation;
    case Rule::If: return conditional;
  }
  return false;
}

RuleSet& RuleSet::enable(Rule r, bool on) {
  switch (r) {
    case Rule::Intensification: intensification = on; break;
    case Rule::But: but = on; break;
    case Rule::Negation: negation = on; break;
    case Rule::If: conditional = on; break;
  }
  return *this;
}

RuleSet RuleSet::none() { return RuleSet{}; }

RuleSet RuleSet::all() {
  RuleSet rs;
  rs.intensification = rs.but = rs.negation = rs.conditional = true;
  return rs;
}

std::string subset_name(RuleSubset s) {
  switch (s) {
    case RuleSubset::All: return "All";
    case RuleSubset::None: return "None";
    case RuleSubset::Intensification: return "Intensification";
    case RuleSubset::But: return "but";
    case RuleSubset::If: return "if";
    case RuleSubset::Negation: return "Negation";
  }
  return "?";
}

RuleSubset subset_from_name(const std::string& name) {
  std::string n = lowercased(name);
  if (n == "all") return RuleSubset::All;
  if (n == "none") return RuleSubset::None;
  if (n == "intensification") return RuleSubset::Intensification;
  if (n == "but") return RuleSubset::But;
  if (n == "if") return RuleSubset::If;
  if (n == "negation") return RuleSubset::Negation;
  throw DataError("unknown rule subset '" + name +
                  "' (want All/None/Intensification/but/if/Negation)");
}

std::vector<RuleSubset> default_subsets() {
  return {RuleSubset::All,  RuleSubset::None, RuleSubset::Intensification,
          RuleSubset::But, RuleSubset::If,   RuleSubset::Negation};
}

RuleSet ruleset_for_subset(const RuleSet& base, RuleSubset subset) {
  RuleSet rs = base;
  rs.intensification = rs.but = rs.negation = rs.conditional = false;
  switch (subset) {
    case RuleSubset::All:
      rs.intensification = rs.but = rs.negation = rs.conditional = true;
      break;
    case RuleSubset::None: break;
    case RuleSubset::Intensification: rs.intensification = true; break;
    case RuleSubset::But: rs.but = true; break;
    case RuleSubset::If: rs.conditional = true; break;
    case RuleSubset::Negation: rs.negation = true; break;
  }
  return rs;
}

namespace {

Rule rule_from_name(const std::string& name) {
  std::string n = lowercased(name);
  if (n == "intensification") return Rule::Intensification;
  if (n == "but") return Rule::But;
  if (n == "negation") return Rule::Negation;
  if (n == "if") return Rule::If;
  throw DataError("unknown rule name '" + name + "'");
}

}  // namespace

RuleSet ruleset_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("ruleset config: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("ruleset config: top level must be an object");

  RuleSet rs = RuleSet::all();
  if (doc.contains("enabled_rules")) {
    const auto& enabled = doc["enabled_rules"];
    if (enabled.is_string()) {
      rs = ruleset_for_subset(rs, subset_from_name(enabled.get<std::string>()));
    } else if (enabled.is_array()) {
      rs = RuleSet::none();
      for (const auto& item : enabled) {
        if (!item.is_string()) throw DataError("ruleset config: enabled_rules entries must be strings");
        std::string name = item.get<std::string>();
        std::string n = lowercased(name);
        if (n == "all") {
          rs = RuleSet::all();
        } else if (n == "none") {
          // explicit no-op
        } else {
          rs.enable(rule_from_name(name));
        }
      }
    } else {
      throw DataError("ruleset config: enabled_rules must be a string or array");
    }
  }
  if (doc.contains("negation_strategy")) {
    std::string s = lowercased(doc["negation_strategy"].get<std::string>());
    if (s == "flip")
      rs.negation_strategy = NegationStrategy::Flip;
    else if (s == "shift")
      rs.negation_strategy = NegationStrategy::Shift;
    else
      throw DataError("ruleset config: negation_strategy must be 'flip' or 'shift'");
  }
  if (doc.contains("shift_amount")) {
    rs.shift_amount = doc["shift_amount"].get<double>();
    if (rs.shift_amount <= 0.0) throw DataError("ruleset config: shift_amount must be > 0");
  }
  if (doc.contains("but_main_factor")) {
    rs.but_main_factor = doc["but_main_factor"].get<double>();
    if (rs.but_main_factor <= 0.0 || rs.but_main_factor > 1.0)
      throw DataError("ruleset config: but_main_factor must be in (0,1]");
  }
  if (doc.contains("threshold")) rs.classification_threshold = doc["threshold"].get<double>();
  return rs;
}

RuleSet load_ruleset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open ruleset config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ruleset_from_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace sentree
