#include "pi1lab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pi1lab {

std::string to_string(Verdict v) {
  return v == Verdict::pass ? "PASS" : "FAIL";
}

void ProbeReport::fail(Witness counter) {
  counter.counter = true;
  verdict = Verdict::fail;
  witnesses.push_back(std::move(counter));
}

std::string serialize(const ProbeReport& report) {
  if (!report.passed() &&
      std::none_of(report.witnesses.begin(), report.witnesses.end(),
                   [](const Witness& w) { return w.counter; })) {
    throw std::logic_error("FAIL report '" + report.probe + "' carries no counter-witness");
  }
  std::ostringstream out;
  out << "[probe " << report.probe << "]\n";
  out << "claim: " << report.claim << "\n";
  out << "verdict: " << to_string(report.verdict) << "\n";
  if (!report.parameters.empty()) {
    out << "parameters:\n";
    for (const auto& [k, v] : report.parameters) {
      out << "  " << k << ": " << v << "\n";
    }
  }
  for (const auto& [k, v] : report.results) {
    out << k << ": " << v << "\n";
  }
  for (const auto& table : report.tables) {
    out << "table " << table.title << ":\n";
    out << "  ";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? " | " : "") << table.columns[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
      out << "  ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? " | " : "") << row[i];
      }
      out << "\n";
    }
    out << "end table\n";
  }
  if (!report.witnesses.empty()) {
    out << "witnesses:\n";
    for (const auto& w : report.witnesses) {
      out << (w.counter ? "  - counter: " : "  - loop: ") << w.description << "\n";
      if (!w.word.empty()) {
        out << "    word: " << w.word << "\n";
      }
      for (const auto& [k, v] : w.certificates) {
        out << "    " << k << ": " << v << "\n";
      }
    }
  }
  for (const auto& note : report.notes) {
    out << "note: " << note << "\n";
  }
  return out.str();
}

}  // namespace pi1lab
