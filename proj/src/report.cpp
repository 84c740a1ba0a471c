#include "frac/report.hpp"

#include <algorithm>
#include <cmath>

namespace frac {

const Check& Report::add(std::string name, double value, double tolerance) {
  const bool ok = std::isfinite(value) && value <= tolerance;
  checks_.push_back({std::move(name), value, tolerance, ok});
  return checks_.back();
}

void Report::append(const Report& other) {
  for (const Check& c : other.checks_) checks_.push_back({other.title_ + ": " + c.name, c.value, c.tolerance, c.passed});
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

double Report::worst_value() const {
  double worst = 0.0;
  for (const Check& c : checks_) worst = std::max(worst, c.value);
  return worst;
}

}  // namespace frac
