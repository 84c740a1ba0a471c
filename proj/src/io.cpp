#include "frac/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "frac/error.hpp"

namespace frac {
namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw DomainError(std::string("JSON field '") + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

IndexPair indices_from_json(const json& j) {
  const double alpha = number(j, "alpha");
  const double base = number_or(j, "base", 0.0);
  const Side side = side_from_string(j.value("side", std::string("right")));
  if (j.contains("beta") && !j.at("beta").is_null()) {
    return IndexPair::two(alpha, number(j, "beta"), base, side);
  }
  return IndexPair::single(alpha, base, side);
}

}  // namespace

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

json series_to_json(const FracSeries& s) {
  const IndexPair& idx = s.indices();
  json j;
  j["alpha"] = idx.alpha();
  if (idx.beta()) j["beta"] = *idx.beta();
  j["base"] = idx.base();
  j["side"] = std::string(to_string(idx.side()));
  j["cutoff"] = s.cutoff();
  json terms = json::array();
  for (const Term& t : s.terms()) {
    const auto [m, n] = idx.labels(t.key);
    terms.push_back({{"m", m}, {"n", n}, {"c", t.coefficient}});
  }
  j["terms"] = std::move(terms);
  return j;
}

FracSeries series_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("series JSON must be an object");
  const IndexPair idx = indices_from_json(j);
  SeriesBuilder b(idx, number(j, "cutoff"));
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) throw DomainError("series JSON 'terms' must be an array");
    for (const json& t : j.at("terms")) {
      if (!t.contains("m") || !t.at("m").is_number_integer()) {
        throw DomainError("series term needs an integer 'm'");
      }
      const auto m = t.at("m").get<std::int64_t>();
      const auto n = t.value("n", std::int64_t{0});
      b.add_at(m, n, number(t, "c"));
    }
  }
  const FracSeries s = b.build();
  if (s.dropped() != 0) throw DomainError("series JSON holds terms above its cutoff");
  return s;
}

json problem_to_json(const FdeProblem& p) {
  const IndexPair& idx = p.indices();
  json j;
  j["alpha"] = idx.alpha();
  if (idx.beta()) j["beta"] = *idx.beta();
  j["base"] = idx.base();
  json terms = json::array();
  for (const OperatorTerm& t : p.terms()) {
    terms.push_back({{"shift", t.shift}, {"order", t.order}, {"coeff", t.coefficient}});
  }
  j["terms"] = std::move(terms);
  j["rhs"] = series_to_json(p.rhs());
  j["y0"] = p.initial_value();
  return j;
}

FdeProblem problem_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("problem JSON must be an object");
  const IndexPair idx = indices_from_json(j);
  if (!j.contains("rhs")) throw DomainError("problem JSON needs an 'rhs' series");
  json rhs_json = j.at("rhs");
  // The rhs inherits the problem's lattice when it does not restate it.
  for (const char* key : {"alpha", "beta", "base"}) {
    if (!rhs_json.contains(key) && j.contains(key)) rhs_json[key] = j.at(key);
  }
  const FracSeries rhs = series_from_json(rhs_json);
  if (!(rhs.indices() == idx)) {
    throw IncompatibleError("problem rhs uses a different alpha/beta/base than the problem");
  }
  std::vector<OperatorTerm> terms;
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw DomainError("problem JSON needs a 'terms' array");
  }
  for (const json& t : j.at("terms")) {
    terms.push_back({number_or(t, "shift", 0.0), number_or(t, "order", 0.0),
                     number_or(t, "coeff", 1.0)});
  }
  return FdeProblem(std::move(terms), rhs, number_or(j, "y0", 0.0));
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks()) {
    checks.push_back({{"name", c.name},
                      {"value", std::isfinite(c.value) ? json(c.value) : json(nullptr)},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
  }
  return {{"title", r.title()}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

json residual_to_json(const ResidualReport& r) {
  const IndexPair& idx = r.residual().indices();
  json orders = json::array();
  for (const OrderResidual& o : r.orders()) {
    const auto [m, n] = idx.labels(o.key);
    orders.push_back({{"m", m},
                      {"n", n},
                      {"exponent", o.exponent},
                      {"residual", o.residual},
                      {"scale", o.scale},
                      {"relative", o.relative()}});
  }
  return {{"exact_through", r.exact_through()},
          {"dropped", r.dropped()},
          {"max_relative", r.max_relative()},
          {"orders", std::move(orders)}};
}

std::string series_to_csv(const FracSeries& s) {
  std::ostringstream os;
  os << "m,n,exponent,coefficient\n";
  for (const Term& t : s.terms()) {
    const auto [m, n] = s.indices().labels(t.key);
    os << m << ',' << n << ',' << shortest(t.exponent) << ',' << shortest(t.coefficient) << '\n';
  }
  return os.str();
}

}  // namespace frac
