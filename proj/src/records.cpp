#include "aec/records.hpp"

#include <json.hpp>

#include "aec/predicates.hpp"

namespace aec {

namespace {

using Json = nlohmann::ordered_json;

Json lemma_entries(const LemmaReport& report) {
  Json out = Json::array();
  for (const auto& e : report.entries) {
    Json entry;
    entry["id"] = e.id;
    entry["name"] = e.name;
    entry["status"] = to_string(e.status);
    entry["applicable"] = e.applicable();
    entry["holds"] = e.holds();
    entry["witness"] = e.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::string hunt_record_line(const HuntRecord& r) {
  Json j;
  j["graph"] = r.graph6;
  j["n"] = r.graph.num_vertices();
  j["m"] = r.graph.num_edges();
  j["max_degree"] = r.max_degree;
  j["predicates"] = {
      {"subcubic_non_regular", is_subcubic_non_regular(r.graph)},
      {"delta4_non_regular", is_delta4_non_regular(r.graph)},
      {"three_plus_independent", three_plus_independent(r.graph).value},
      {"mad_below_4", r.mad < 4},
  };
  j["mad"] = to_string(r.mad);
  j["bound"] = r.kappa;
  if (r.index.index) {
    j["index"] = *r.index.index;
  } else {
    j["index"] = std::to_string(r.index.lower) + ".." + std::to_string(r.index.upper);
  }
  j["status"] = r.violation ? "violation" : (r.unknown ? "unknown" : "ok");
  j["minimality"] = r.minimality ? Json(to_string(*r.minimality)) : Json(nullptr);
  j["lemmas"] = r.audit ? lemma_entries(*r.audit) : Json(nullptr);
  return j.dump();
}

std::string hunt_summary_line(const HuntReport& report, const HuntOptions& options) {
  Json j;
  j["summary"] = "hunt";
  j["max_n"] = options.max_n;
  j["rule"] = to_string(options.rule);
  j["class"] = to_string(options.graph_class);
  j["graphs"] = report.records.size();
  j["violations"] = report.violations;
  j["unknown"] = report.unknown;
  return j.dump();
}

std::string lemma_report_line(const LemmaReport& report, const std::string& graph6) {
  Json j;
  j["graph"] = graph6;
  j["kappa"] = report.kappa;
  j["max_degree"] = report.max_degree;
  j["assume_minimal"] = report.assume_minimal;
  j["all_hold"] = report.all_hold();
  j["lemmas"] = lemma_entries(report);
  return j.dump();
}

std::string ledger_line(const ChargeLedger& ledger, const std::string& graph6, int kappa) {
  Json j;
  j["graph"] = graph6;
  j["kappa"] = kappa;
  Json transfers = Json::array();
  for (const auto& t : ledger.transfers) {
    transfers.push_back({{"from", t.from}, {"to", t.to}, {"amount", to_string(t.amount)}, {"rule", t.rule}});
  }
  Json initial = Json::array();
  Json final_charge = Json::array();
  for (const auto& c : ledger.initial) initial.push_back(to_string(c));
  for (const auto& c : ledger.final_charge) final_charge.push_back(to_string(c));
  j["initial"] = std::move(initial);
  j["transfers"] = std::move(transfers);
  j["final"] = std::move(final_charge);
  j["total_initial"] = to_string(ledger.total_initial());
  j["total_final"] = to_string(ledger.total_final());
  j["all_nonnegative"] = ledger.all_nonnegative();
  return j.dump();
}

}  // namespace aec
