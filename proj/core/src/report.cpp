#include "fcnlab/harness.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace fcnlab {

namespace {

using Json = nlohmann::ordered_json;

Json opt(const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); }

Json tally_json(const SampleTally& t) {
  Json j;
  j["instances"] = t.instances;
  j["checks"] = t.checks;
  j["substantive"] = t.substantive;
  j["vacuous"] = t.vacuous;
  j["undefined"] = t.undefined;
  j["violations"] = t.violations;
  j["counterexamples"] = t.counterexamples;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["claim_id"] = v.claim_id;
  j["status"] = std::string(verdict_name(v.status));
  Json ev;
  ev["formula_value"] = opt(v.evidence.formula_value);
  ev["certificate_size"] = opt(v.evidence.certificate_size);
  ev["oracle_value"] = opt(v.evidence.oracle_value);
  ev["oracle_lower"] = opt(v.evidence.oracle_lower);
  ev["oracle_upper"] = opt(v.evidence.oracle_upper);
  Json values = Json::object();
  for (const auto& [k, x] : v.evidence.values) values[k] = x;
  ev["values"] = values;
  Json ws = Json::array();
  for (const auto& w : v.evidence.witnesses) {
    Json jw;
    jw["name"] = w.name;
    jw["size"] = w.size;
    jw["valid"] = w.valid;
    jw["certificate"] = Json::parse(w.certificate_json);
    ws.push_back(jw);
  }
  ev["witnesses"] = ws;
  ev["tally"] = v.evidence.tally ? tally_json(*v.evidence.tally) : Json(nullptr);
  j["evidence"] = ev;
  j["flags"] = v.flags;
  j["notes"] = v.notes;
  return j;
}

std::string cell(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : "-"; }

}  // namespace

std::string report_to_json(const HarnessReport& report) {
  Json doc;
  doc["seed"] = report.seed;
  doc["levels"] = report.levels;
  Json vs = Json::array();
  for (const auto& v : report.verdicts) vs.push_back(verdict_json(v));
  doc["verdicts"] = vs;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& v : report.verdicts) ++counts[static_cast<int>(v.status)];
  doc["summary"] = {{"Confirmed", counts[0]}, {"Refuted", counts[1]}, {"Undecided", counts[2]}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const HarnessReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "claim" << std::setw(11) << "status" << std::setw(9)
      << "formula" << std::setw(6) << "cert" << std::setw(12) << "solver"
      << "details\n";
  for (const auto& v : report.verdicts) {
    std::string solver = "-";
    if (v.evidence.oracle_value) {
      solver = std::to_string(*v.evidence.oracle_value);
    } else if (v.evidence.oracle_lower) {
      solver = "[" + std::to_string(*v.evidence.oracle_lower) + "," +
               cell(v.evidence.oracle_upper) + "]";
    }
    std::string details = v.notes;
    if (const auto& t = v.evidence.tally; t && t->instances > 1) {
      details = std::to_string(t->instances) + " instances, " + std::to_string(t->checks) +
                " checks (" + std::to_string(t->substantive) + " substantive, " +
                std::to_string(t->vacuous) + " vacuous, " + std::to_string(t->undefined) +
                " undefined), " + std::to_string(t->violations) + " violations" +
                (v.notes.empty() ? "" : "; " + v.notes);
    }
    out << std::setw(12) << v.claim_id << std::setw(11) << verdict_name(v.status) << std::setw(9)
        << cell(v.evidence.formula_value) << std::setw(6) << cell(v.evidence.certificate_size)
        << std::setw(12) << solver << details << "\n";
    for (const auto& f : v.flags) out << std::setw(12) << "" << "! " << f << "\n";
  }
  return out.str();
}

}  // namespace fcnlab
