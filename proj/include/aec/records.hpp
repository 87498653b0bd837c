#pragma once

#include <string>

#include "aec/density.hpp"
#include "aec/hunt.hpp"
#include "aec/lemmas.hpp"

namespace aec {

// Line-delimited JSON records with a fixed field order. Each function returns
// one line without the trailing newline.

std::string hunt_record_line(const HuntRecord& r);
std::string hunt_summary_line(const HuntReport& report, const HuntOptions& options);
std::string lemma_report_line(const LemmaReport& report, const std::string& graph6);
std::string ledger_line(const ChargeLedger& ledger, const std::string& graph6, int kappa);

}  // namespace aec
