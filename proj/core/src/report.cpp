#include "mennicke/report.hpp"

namespace mennicke {

Report& Report::check(std::string label, bool ok, std::string detail) {
  lines_.push_back({std::move(label), ok, std::move(detail)});
  return *this;
}

Report& Report::note(std::string text) {
  notes_.push_back(std::move(text));
  return *this;
}

Report& Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& l : other.lines_) lines_.push_back({prefix + l.label, l.ok, l.detail});
  for (const auto& n : other.notes_) notes_.push_back(n);
  return *this;
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& l : lines_) n += l.ok ? 0 : 1;
  return n;
}

std::string Report::summary() const {
  std::string out = std::to_string(lines_.size() - failures()) + "/" +
                    std::to_string(lines_.size()) + " checks passed";
  if (!passed()) {
    out += "; failed:";
    for (const auto& l : lines_)
      if (!l.ok) out += " [" + l.label + (l.detail.empty() ? "" : ": " + l.detail) + "]";
  }
  return out;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& l : lines_) {
    out += l.ok ? "  [ok]   " : "  [FAIL] ";
    out += l.label;
    if (!l.detail.empty()) out += ": " + l.detail;
    out += '\n';
  }
  for (const auto& n : notes_) out += "  note: " + n + '\n';
  return out;
}

}  // namespace mennicke
