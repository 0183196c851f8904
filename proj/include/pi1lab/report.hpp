// Structured verdict records emitted by the probes, with a plain-text
// serialization meant for golden-file comparison.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pi1lab {

enum class Verdict { pass, fail };

std::string to_string(Verdict v);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct Witness {
  std::string description;
  std::string word;
  KeyValues certificates;
  bool counter = false;  // a counter-witness backing a FAIL verdict
};

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct ProbeReport {
  std::string probe;
  std::string claim;
  Verdict verdict = Verdict::pass;
  KeyValues parameters;
  KeyValues results;
  std::vector<Witness> witnesses;
  std::vector<ReportTable> tables;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::pass; }
  /// Marks the report failed and records the counter-witness.
  void fail(Witness counter);
};

/// Plain-text rendering. Throws std::logic_error for a FAIL report without a
/// counter-witness.
std::string serialize(const ProbeReport& report);

}  // namespace pi1lab
