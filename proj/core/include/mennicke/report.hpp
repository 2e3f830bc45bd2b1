#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mennicke {

struct ReportLine {
  std::string label;
  bool ok = false;
  std::string detail;
};

// Ordered list of named checks plus free-form notes.
class Report {
 public:
  Report& check(std::string label, bool ok, std::string detail = {});
  Report& note(std::string text);
  // Appends the lines and notes of other, prefixing labels.
  Report& merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;
  const std::vector<ReportLine>& lines() const { return lines_; }
  const std::vector<std::string>& notes() const { return notes_; }

  // One line: "n/m checks passed" followed by the failing labels, if any.
  std::string summary() const;
  std::string to_text() const;

 private:
  std::vector<ReportLine> lines_;
  std::vector<std::string> notes_;
};

}  // namespace mennicke
