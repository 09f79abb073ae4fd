#include "flatkit/generators.hpp"

#include "flatkit/cyclotomic.hpp"
#include "flatkit/matrix.hpp"

#include <stdexcept>

namespace flatkit {

namespace {

std::vector<GainGraphMatroid::Edge> dowling_edges(int r, int t) {
  std::vector<GainGraphMatroid::Edge> edges;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int g = 0; g < t; ++g) edges.push_back({i, j, g});
  return edges;
}

}  // namespace

Instance dowling(int r, int t, bool delete_joints) {
  if (r < 2 || t < 1) throw std::invalid_argument("dowling needs r >= 2 and t >= 1");
  std::vector<int> joints;
  if (!delete_joints)
    for (int i = 1; i <= r; ++i) joints.push_back(i);
  auto m = std::make_shared<GainGraphMatroid>(r, t, std::move(joints),
                                              dowling_edges(r, t));
  Instance inst;
  inst.matroid = m;
  inst.meta.name = "dowling(" + std::to_string(r) + "," + std::to_string(t) +
                   (delete_joints ? ",nojoints)" : ")");
  inst.meta.complex_rep = true;
  inst.meta.real = t <= 2;
  inst.meta.params = {{"r", std::to_string(r)},
                      {"t", std::to_string(t)},
                      {"joints", delete_joints ? "0" : "1"}};
  return inst;
}

Instance uniform(int r, int n) {
  Instance inst;
  inst.matroid = std::make_shared<UniformMatroid>(r, n);
  inst.meta.name = "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")";
  inst.meta.real = inst.meta.complex_rep = true;
  inst.meta.params = {{"r", std::to_string(r)}, {"n", std::to_string(n)}};
  return inst;
}

std::shared_ptr<const LinearMatroid<Rational>> uniform_vandermonde(int r, int n) {
  if (r < 0 || r > n) throw std::invalid_argument("uniform needs 0 <= r <= n");
  Matrix<Rational> m(r, n);
  for (int j = 0; j < n; ++j) {
    Rational power(1);
    for (int i = 0; i < r; ++i) {
      m.at(i, j) = power;
      power *= j;
    }
  }
  return std::make_shared<LinearMatroid<Rational>>(std::move(m), numeric_labels(n));
}

Instance graphic_k4() {
  Matrix<Rational> m(4, 6);
  std::vector<std::string> labels;
  int col = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      m.at(i, col) = 1;
      m.at(j, col) = -1;
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      ++col;
    }
  Instance inst;
  inst.matroid = std::make_shared<LinearMatroid<Rational>>(std::move(m), labels);
  inst.meta.name = "k4";
  inst.meta.real = inst.meta.complex_rep = true;
  return inst;
}

Instance figure1(int a) {
  if (a < 2) throw std::invalid_argument("figure1 needs a >= 2");
  // Triangle edges of K4 in label order e12,e13,e14,e23,e24,e34 sit at
  // indices 0 (e12), 1 (e13), 3 (e23); after each two-sum the remaining
  // basepoints shift to 0 and then 1.
  MatroidPtr m = graphic_k4().matroid;
  m = two_sum(m, 0, uniform(2, a + 2).matroid, 0);
  m = two_sum(m, 0, uniform(2, a + 2).matroid, 0);
  m = two_sum(m, 1, uniform(2, a + 2).matroid, 0);
  Instance inst;
  inst.matroid = m;
  inst.meta.name = "figure1(" + std::to_string(a) + ")";
  inst.meta.real = inst.meta.complex_rep = true;
  inst.meta.params = {{"a", std::to_string(a)}};
  return inst;
}

Instance random_config(int r, int n, std::uint64_t seed) {
  if (r < 1 || r > n) throw std::invalid_argument("random_config needs 1 <= r <= n");
  SplitMix64 rng(seed);
  Matrix<Rational> m(r, n);
  constexpr int kColumnAttempts = 10000;
  for (int j = 0; j < n; ++j) {
    bool ok = false;
    for (int attempt = 0; attempt < kColumnAttempts && !ok; ++attempt) {
      for (int i = 0; i < r; ++i)
        m.at(i, j) = Rational(static_cast<long long>(rng.next() % 2001) - 1000);
      // redraw loops and parallel pairs so the matroid comes out simple
      ok = true;
      bool zero = true;
      for (int i = 0; i < r && zero; ++i) zero = m.at(i, j).is_zero();
      if (zero) {
        ok = false;
        continue;
      }
      for (int prev = 0; prev < j && ok; ++prev) {
        Matrix<Rational> pair(r, 2);
        for (int i = 0; i < r; ++i) {
          pair.at(i, 0) = m.at(i, prev);
          pair.at(i, 1) = m.at(i, j);
        }
        if (matrix_rank(pair) < 2) ok = false;
      }
    }
    if (!ok) throw std::runtime_error("random_config: rejection budget exhausted");
  }
  Instance inst;
  inst.matroid = std::make_shared<LinearMatroid<Rational>>(std::move(m),
                                                           numeric_labels(n));
  inst.meta.name = "random(" + std::to_string(r) + "," + std::to_string(n) +
                   ",seed=" + std::to_string(seed) + ")";
  inst.meta.real = inst.meta.complex_rep = true;
  inst.meta.params = {{"r", std::to_string(r)},
                      {"n", std::to_string(n)},
                      {"seed", std::to_string(seed)}};
  return inst;
}

Instance from_incidence(int n, std::vector<ElementSet> lines, bool real,
                        bool complex_rep) {
  Instance inst;
  inst.matroid = std::make_shared<IncidenceRank3Matroid>(n, std::move(lines));
  inst.meta.name = "incidence(" + std::to_string(n) + ")";
  inst.meta.real = real;
  inst.meta.complex_rep = complex_rep;
  inst.meta.declared_only = true;
  return inst;
}

MatroidPtr dowling_linear(int r, int t, bool delete_joints) {
  if (r < 2 || t < 1) throw std::invalid_argument("dowling needs r >= 2 and t >= 1");
  auto edges = dowling_edges(r, t);
  const int njoints = delete_joints ? 0 : r;
  const int n = njoints + static_cast<int>(edges.size());

  std::vector<std::string> labels;
  for (int i = 1; i <= njoints; ++i) labels.push_back("v" + std::to_string(i));
  for (const auto& e : edges)
    labels.push_back("e" + std::to_string(e.i) + "." + std::to_string(e.j) + "." +
                     std::to_string(e.g));

  if (t <= 2) {
    Matrix<Rational> m(r, n);
    for (int i = 0; i < njoints; ++i) m.at(i, i) = 1;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      int col = njoints + static_cast<int>(k);
      m.at(e.i - 1, col) = 1;
      m.at(e.j - 1, col) = (t == 2 && e.g == 1) ? 1 : -1;  // -(zeta^g), zeta = -1
    }
    return std::make_shared<LinearMatroid<Rational>>(std::move(m), labels);
  }

  const Cyclotomic zero = Cyclotomic::zero(t);
  Matrix<Cyclotomic> m(r, n, zero);
  for (int i = 0; i < njoints; ++i) m.at(i, i) = Cyclotomic::one(t);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    int col = njoints + static_cast<int>(k);
    m.at(e.i - 1, col) = Cyclotomic::one(t);
    m.at(e.j - 1, col) = -Cyclotomic::root_power(t, e.g);
  }
  return std::make_shared<LinearMatroid<Cyclotomic>>(std::move(m), labels);
}

}  // namespace flatkit
