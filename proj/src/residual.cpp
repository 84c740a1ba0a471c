#include "frac/residual.hpp"

#include <algorithm>
#include <map>

#include "frac/error.hpp"

namespace frac {

ResidualReport ResidualReport::assemble(std::span<const FracSeries> parts) {
  if (parts.empty()) throw DomainError("ResidualReport: no equation parts");
  FracSeries sum = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) sum = add(sum, parts[i]);
  const double through = sum.cutoff();

  std::map<ExponentKey, double> scale;
  for (const FracSeries& part : parts) {
    for (const Term& t : part.terms()) {
      if (!within_cutoff(t.exponent, through)) continue;
      double& s = scale[t.key];
      s = std::max(s, std::abs(t.coefficient));
    }
  }
  const IndexPair& idx = sum.indices();
  std::vector<OrderResidual> orders;
  orders.reserve(scale.size());
  for (const auto& [key, s] : scale) {
    orders.push_back({key, idx.exponent(key), sum.coefficient(key), s});
  }
  std::sort(orders.begin(), orders.end(), [](const OrderResidual& a, const OrderResidual& b) {
    return a.exponent != b.exponent ? a.exponent < b.exponent : a.key < b.key;
  });
  return ResidualReport(std::move(sum), through, std::move(orders));
}

double ResidualReport::max_relative() const {
  double worst = 0.0;
  for (const auto& o : orders_) worst = std::max(worst, o.relative());
  return worst;
}

}  // namespace frac
