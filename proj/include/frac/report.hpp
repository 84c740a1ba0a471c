#pragma once

#include <string>
#include <vector>

namespace frac {

/// One verified quantity: passes when value is finite and <= tolerance.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Structured verification output.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  const Check& add(std::string name, double value, double tolerance);
  void append(const Report& other);

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;
  double worst_value() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace frac
