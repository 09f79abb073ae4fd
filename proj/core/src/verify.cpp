#include "flatkit/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace flatkit {

namespace {

void require_rank3(const Matroid& m, const char* check) {
  if (m.rank() != 3)
    throw std::invalid_argument(std::string(check) + " requires a rank-3 matroid");
}

Int binom2(int r) { return Int(r) * (r - 1) / 2; }

std::string param_name(const std::string& base,
                       std::initializer_list<std::pair<const char*, int>> params) {
  std::ostringstream out;
  out << base << '(';
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out << ',';
    out << key << '=' << value;
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace

bool is_near_pencil(const Matroid& m) {
  if (m.rank() != 3) return false;
  for (const auto& line : flats_of_rank(m, 2))
    if (line.elements.size() == m.size() - 1) return true;
  return false;
}

CheckReport melchior_check(const Matroid& m, int jobs) {
  require_rank3(m, "melchior");
  auto lines = flats_of_rank(m, 2, jobs);
  Int sum = 0;
  for (const auto& line : lines) sum += line.elements.size() - 3;
  CheckReport report;
  report.name = "melchior";
  report.lhs = Rational(sum);
  report.rhs = Rational(-3);
  report.holds = report.lhs <= report.rhs;
  report.context["n"] = m.size();
  report.context["lines"] = lines.size();
  return report;
}

CheckReport hirzebruch_check(const Matroid& m, int jobs) {
  require_rank3(m, "hirzebruch");
  if (is_near_pencil(m))
    throw std::invalid_argument("hirzebruch does not apply to near-pencils");
  auto lines = flats_of_rank(m, 2, jobs);
  Int sum = 0;
  Int m2 = 0;
  for (const auto& line : lines) {
    sum += line.elements.size() - 4;
    if (line.elements.size() == 2) ++m2;
  }
  CheckReport report;
  report.name = "hirzebruch";
  report.lhs = Rational(sum);
  report.rhs = Rational(-(Int(m.size()) + m2));
  report.holds = report.lhs <= report.rhs;
  report.context["n"] = m.size();
  report.context["m_2"] = Rational(m2);
  report.context["lines"] = lines.size();
  return report;
}

CheckReport dbe_check(const Matroid& m, int jobs) {
  require_rank3(m, "dbe");
  auto lines = flats_of_rank(m, 2, jobs);
  CheckReport report;
  report.name = "dbe";
  report.lhs = m.size();
  report.rhs = lines.size();
  report.holds = report.lhs <= report.rhs;
  report.context["n"] = m.size();
  report.context["lines"] = lines.size();
  return report;
}

CheckReport top_heavy_check(const Matroid& m, int a, int b, int jobs) {
  const int r = m.rank();
  if (!(1 <= a && a < b && b <= r - a))
    throw std::invalid_argument("top-heavy needs 1 <= a < b <= r - a");
  CheckReport report;
  report.name = param_name("top-heavy", {{"a", a}, {"b", b}});
  report.lhs = flats_of_rank(m, a, jobs).size();
  report.rhs = flats_of_rank(m, b, jobs).size();
  report.holds = report.lhs <= report.rhs;
  report.context["n"] = m.size();
  report.context["r"] = r;
  return report;
}

CheckReport line_bound_check(const Matroid& m, const SearchLimits& limits, int jobs) {
  require_rank3(m, "line-bound");
  auto lines = flats_of_rank(m, 2, jobs);
  const int n = m.size();
  const int g2 = largest_k_degenerate(m, 2, std::nullopt, limits).set.size();
  CheckReport report;
  report.name = "line-bound";
  report.lhs = Rational(Int(n) * (n - g2), 12);
  report.rhs = lines.size();
  report.holds = report.lhs <= report.rhs;
  report.context["n"] = n;
  report.context["g_2"] = g2;
  report.context["lines"] = lines.size();
  return report;
}

CheckReport average_line_check(const Matroid& m, int jobs) {
  require_rank3(m, "average-line");
  auto stats = flat_size_stats(m, 2, jobs);
  CheckReport report;
  report.name = "average-line";
  report.lhs = stats.average;
  report.rhs = 6;
  report.holds = report.lhs <= report.rhs;
  report.context["n"] = m.size();
  report.context["lines"] = stats.count;
  report.context["total"] = stats.total_size;
  return report;
}

std::vector<CheckReport> strat1_check(const Matroid& m, int k,
                                      const SearchLimits& limits, int jobs) {
  (void)jobs;
  auto strat = optimal_stratification(m, k, limits);
  const int n = m.size();
  std::vector<CheckReport> reports;
  for (int i = 2; i <= k; ++i) {
    const int xi = strat.level(i).set.size();
    const int gi = largest_k_degenerate(m, i, std::nullopt, limits).set.size();
    CheckReport report;
    report.name = param_name("strat1", {{"k", k}, {"i", i}});
    report.lhs = n - xi;
    report.rhs = Rational(Int(k + 1 - i) * (n - gi));
    report.holds = report.lhs <= report.rhs;
    report.context["n"] = n;
    report.context["|X_i|"] = xi;
    report.context["g_i"] = gi;
    reports.push_back(std::move(report));
  }
  return reports;
}

CheckReport strat2_check(const Matroid& m, int k, const SearchLimits& limits,
                         int jobs) {
  if (k < 2) throw std::invalid_argument("strat2 needs k >= 2");
  const int n = m.size();
  const int d = essential_dimension(m, limits);
  auto strat = optimal_stratification(m, k, limits);

  Int lhs = 0;
  if (k <= m.rank())
    for (const auto& f : flats_of_rank(m, k, jobs)) lhs += f.elements.size() - k;

  Int rhs = boost::multiprecision::pow(Int(2), static_cast<unsigned>(k) * (k - 1));
  rhs *= n;  // the X_1 = empty factor
  const int top = std::min(d, k);
  for (int i = 2; i <= top; ++i) rhs *= n - strat.level(i).set.size();

  CheckReport report;
  report.name = param_name("strat2", {{"k", k}});
  report.lhs = Rational(lhs);
  report.rhs = Rational(rhs);
  report.holds = report.lhs <= report.rhs;
  report.context["n"] = n;
  report.context["d"] = d;
  for (int i = 2; i <= top; ++i)
    report.context["|X_" + std::to_string(i) + "|"] = strat.level(i).set.size();
  if (d < k) report.note = "product truncated at d = " + std::to_string(d);
  return report;
}

RatioReport lund_ratio(const Matroid& m, int k, const SearchLimits& limits, int jobs) {
  if (k < 2) throw std::invalid_argument("lund-ratio needs k >= 2");
  const int n = m.size();
  RatioReport report;
  report.name = param_name("lund-ratio", {{"k", k}});
  Int denom = n;
  for (int i = 2; i <= k; ++i) {
    const int gi = largest_k_degenerate(m, i, std::nullopt, limits).set.size();
    report.context["g_" + std::to_string(i)] = gi;
    if (i == k && n - gi <= 0)
      throw std::domain_error("lund ratio undefined: matroid is k-degenerate");
    denom *= n - gi;
  }
  const std::size_t count = k <= m.rank() ? flats_of_rank(m, k, jobs).size() : 0;
  report.ratio = Rational(Int(count), denom);
  report.context["n"] = n;
  report.context["flats"] = count;
  return report;
}

CheckReport plane_theorem_probe(const MatroidPtr& m, int jobs) {
  if (m->rank() < 4) throw std::invalid_argument("plane probe needs rank >= 4");
  auto stats = flat_size_stats(*truncate_to(m, 4), 3, jobs);

  bool two_line_sum = false;
  auto lines = flats_of_rank(*m, 2, jobs);
  for (std::size_t i = 0; i < lines.size() && !two_line_sum; ++i)
    for (std::size_t j = i + 1; j < lines.size() && !two_line_sum; ++j) {
      ElementSet u = lines[i].elements | lines[j].elements;
      if (u == m->all() && m->rank(u) == 4) two_line_sum = true;
    }

  CheckReport report;
  report.name = "plane-probe";
  report.lhs = stats.average;
  report.rhs = stats.average;
  report.holds = true;
  report.context["n"] = m->size();
  report.context["planes"] = stats.count;
  report.context["average"] = stats.average;
  report.context["is_two_line_sum"] = two_line_sum ? 1 : 0;
  report.note = "informational";
  return report;
}

Rational average_flat_size(const Matroid& m, bool include_trivial, int jobs) {
  const int r = m.rank();
  Int total = 0, count = 0;
  for (const auto& f : all_flats(m, jobs)) {
    if (!include_trivial && (f.rank == 0 || f.rank == r)) continue;
    total += f.elements.size();
    ++count;
  }
  if (count == 0) throw std::domain_error("no flats in the requested range");
  return Rational(total, count);
}

CheckReport hyperplane_average_probe(const GainGraphMatroid& m, int jobs) {
  const int r = m.rank();
  if (r < 2) throw std::invalid_argument("hyperplane probe needs rank >= 2");
  auto stats = flat_size_stats(m, r - 1, jobs);
  CheckReport report;
  report.name = "hyperplane-probe";
  report.lhs = stats.average - Rational(binom2(r));
  report.rhs = 0;
  report.holds = true;
  report.context["n"] = m.size();
  report.context["r"] = r;
  report.context["t"] = m.group_order();
  report.context["hyperplanes"] = stats.count;
  report.context["average"] = stats.average;
  report.note = "informational";
  return report;
}

}  // namespace flatkit
