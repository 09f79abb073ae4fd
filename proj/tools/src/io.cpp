#include "flatkit_cli/io.hpp"

#include "flatkit/cyclotomic.hpp"
#include "flatkit/matrix.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace flatkit::io {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Content lines with comments stripped, paired with 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  int lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (split_ws(line).empty()) continue;
    out.emplace_back(lineno, line);
  }
  return out;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

int parse_int_tok(int lineno, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(lineno, "expected integer, got '" + tok + "'");
  }
}

Rational parse_rational_tok(int lineno, const std::string& tok) {
  try {
    return parse_rational(tok);
  } catch (const std::exception& e) {
    fail(lineno, std::string("bad rational '") + tok + "': " + e.what());
  }
}

Instance parse_linear(const std::vector<std::pair<int, std::string>>& lines,
                      const std::string& name) {
  auto head = split_ws(lines[0].second);
  Instance inst;
  inst.meta.name = name;
  std::size_t row_start = 1;
  int rows = 0, cols = 0;
  if (head.size() == 4 && head[1] == "rational") {
    rows = parse_int_tok(lines[0].first, head[2]);
    cols = parse_int_tok(lines[0].first, head[3]);
    if (rows < 0 || cols < 0) fail(lines[0].first, "negative matrix dimensions");
    if (lines.size() - row_start != static_cast<std::size_t>(rows))
      fail(lines[0].first, "expected " + std::to_string(rows) + " matrix rows");
    Matrix<Rational> m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      const auto& [lineno, line] = lines[row_start + r];
      auto toks = split_ws(line);
      if (static_cast<int>(toks.size()) != cols)
        fail(lineno, "expected " + std::to_string(cols) + " entries");
      for (int c = 0; c < cols; ++c) m.at(r, c) = parse_rational_tok(lineno, toks[c]);
    }
    inst.matroid =
        std::make_shared<LinearMatroid<Rational>>(std::move(m), numeric_labels(cols));
    inst.meta.real = inst.meta.complex_rep = true;
  } else if (head.size() == 5 && head[1] == "cyclotomic") {
    int order = parse_int_tok(lines[0].first, head[2]);
    rows = parse_int_tok(lines[0].first, head[3]);
    cols = parse_int_tok(lines[0].first, head[4]);
    if (order < 1) fail(lines[0].first, "cyclotomic order must be positive");
    if (rows < 0 || cols < 0) fail(lines[0].first, "negative matrix dimensions");
    if (lines.size() - row_start != static_cast<std::size_t>(rows))
      fail(lines[0].first, "expected " + std::to_string(rows) + " matrix rows");
    const std::size_t degree = cyclotomic_polynomial(order).size() - 1;
    Matrix<Cyclotomic> m(rows, cols, Cyclotomic::zero(order));
    for (int r = 0; r < rows; ++r) {
      const auto& [lineno, line] = lines[row_start + r];
      auto toks = split_ws(line);
      if (static_cast<int>(toks.size()) != cols)
        fail(lineno, "expected " + std::to_string(cols) + " entries");
      for (int c = 0; c < cols; ++c) {
        auto parts = split_on(toks[c], ',');
        if (parts.size() != degree)
          fail(lineno, "cyclotomic entry needs " + std::to_string(degree) +
                           " coefficients");
        std::vector<Rational> coeffs;
        for (const auto& p : parts) coeffs.push_back(parse_rational_tok(lineno, p));
        m.at(r, c) = Cyclotomic::from_polynomial(order, std::move(coeffs));
      }
    }
    inst.matroid =
        std::make_shared<LinearMatroid<Cyclotomic>>(std::move(m), numeric_labels(cols));
    inst.meta.complex_rep = true;
    inst.meta.params["order"] = std::to_string(order);
  } else {
    fail(lines[0].first, "expected 'linear rational R N' or 'linear cyclotomic M R N'");
  }
  return inst;
}

Instance parse_gain(const std::vector<std::pair<int, std::string>>& lines,
                    const std::string& name) {
  auto head = split_ws(lines[0].second);
  if (head.size() != 3) fail(lines[0].first, "expected 'gain R T'");
  int r = parse_int_tok(lines[0].first, head[1]);
  int t = parse_int_tok(lines[0].first, head[2]);
  std::vector<int> joints;
  std::vector<GainGraphMatroid::Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [lineno, line] = lines[i];
    auto toks = split_ws(line);
    if (toks[0] == "joint" && toks.size() == 2) {
      joints.push_back(parse_int_tok(lineno, toks[1]));
    } else if (toks[0] == "edge" && toks.size() == 4) {
      edges.push_back({parse_int_tok(lineno, toks[1]), parse_int_tok(lineno, toks[2]),
                       parse_int_tok(lineno, toks[3])});
    } else {
      fail(lineno, "expected 'joint i' or 'edge i j g'");
    }
  }
  Instance inst;
  try {
    inst.matroid =
        std::make_shared<GainGraphMatroid>(r, t, std::move(joints), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("gain file: ") + e.what());
  }
  inst.meta.name = name;
  inst.meta.complex_rep = true;
  inst.meta.real = t <= 2;
  inst.meta.params = {{"r", std::to_string(r)}, {"t", std::to_string(t)}};
  return inst;
}

std::pair<bool, bool> parse_flags(int lineno, const std::string& spec) {
  bool real = false, complex_rep = false;
  for (const auto& tok : split_on(spec, ',')) {
    if (tok == "real")
      real = true;
    else if (tok == "complex")
      complex_rep = true;
    else if (tok == "none" || tok.empty())
      ;
    else
      fail(lineno, "unknown representability flag '" + tok + "'");
  }
  return {real, complex_rep};
}

Instance parse_incidence(const std::vector<std::pair<int, std::string>>& lines,
                         const std::string& name) {
  auto head = split_ws(lines[0].second);
  if (head.size() != 3 || head[1].empty())
    fail(lines[0].first, "expected 'incidence N flags=...'");
  int n = parse_int_tok(lines[0].first, head[1]);
  if (head[2].rfind("flags=", 0) != 0) fail(lines[0].first, "expected flags=...");
  auto [real, complex_rep] = parse_flags(lines[0].first, head[2].substr(6));
  std::vector<ElementSet> incidence_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [lineno, line] = lines[i];
    auto toks = split_ws(line);
    if (toks[0] != "line" || toks.size() < 2) fail(lineno, "expected 'line e1 e2 ...'");
    ElementSet s;
    for (std::size_t j = 1; j < toks.size(); ++j) {
      int e = parse_int_tok(lineno, toks[j]);
      if (e < 0 || e >= n) fail(lineno, "point out of range");
      s = s.with(e);
    }
    incidence_lines.push_back(s);
  }
  Instance inst;
  try {
    inst = from_incidence(n, std::move(incidence_lines), real, complex_rep);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("incidence file: ") + e.what());
  }
  inst.meta.name = name;
  return inst;
}

// Construction scripts: one "name = verb args..." per line, evaluated top to
// bottom; the last assignment is the result. Representability flags are
// intersected across operands.
Instance parse_script(const std::vector<std::pair<int, std::string>>& lines,
                      const std::string& name) {
  std::map<std::string, Instance> env;
  const Instance* last = nullptr;

  auto lookup = [&](int lineno, const std::string& id) -> const Instance& {
    auto it = env.find(id);
    if (it == env.end()) fail(lineno, "undefined name '" + id + "'");
    return it->second;
  };
  auto elems_from = [&](int lineno, const std::vector<std::string>& toks,
                        std::size_t from, const Instance& of) {
    ElementSet s;
    for (std::size_t i = from; i < toks.size(); ++i) {
      int e = parse_int_tok(lineno, toks[i]);
      if (e < 0 || e >= of.matroid->size()) fail(lineno, "element id out of range");
      s = s.with(e);
    }
    return s;
  };

  for (const auto& [lineno, line] : lines) {
    auto toks = split_ws(line);
    if (toks.size() < 3 || toks[1] != "=") fail(lineno, "expected 'name = verb ...'");
    const std::string& id = toks[0];
    if (env.count(id)) fail(lineno, "name '" + id + "' already defined");
    const std::string& verb = toks[2];
    std::vector<std::string> args(toks.begin() + 3, toks.end());
    Instance value;
    try {
      if (verb == "uniform" && args.size() == 2) {
        value = uniform(parse_int_tok(lineno, args[0]), parse_int_tok(lineno, args[1]));
      } else if (verb == "k4" && args.empty()) {
        value = graphic_k4();
      } else if (verb == "dowling" && (args.size() == 2 || args.size() == 3)) {
        bool nojoints = args.size() == 3;
        if (nojoints && args[2] != "nojoints") fail(lineno, "expected 'nojoints'");
        value = dowling(parse_int_tok(lineno, args[0]), parse_int_tok(lineno, args[1]),
                        nojoints);
      } else if (verb == "direct_sum" && args.size() == 2) {
        const Instance& a = lookup(lineno, args[0]);
        const Instance& b = lookup(lineno, args[1]);
        value.matroid = direct_sum(a.matroid, b.matroid);
        value.meta.real = a.meta.real && b.meta.real;
        value.meta.complex_rep = a.meta.complex_rep && b.meta.complex_rep;
      } else if (verb == "two_sum" && args.size() == 4) {
        const Instance& a = lookup(lineno, args[0]);
        const Instance& b = lookup(lineno, args[2]);
        value.matroid = two_sum(a.matroid, parse_int_tok(lineno, args[1]), b.matroid,
                                parse_int_tok(lineno, args[3]));
        value.meta.real = a.meta.real && b.meta.real;
        value.meta.complex_rep = a.meta.complex_rep && b.meta.complex_rep;
      } else if (verb == "truncate" && args.size() == 2) {
        const Instance& a = lookup(lineno, args[0]);
        value.matroid = truncate_to(a.matroid, parse_int_tok(lineno, args[1]));
        value.meta = a.meta;
      } else if (verb == "principal_truncate" && args.size() >= 2) {
        const Instance& a = lookup(lineno, args[0]);
        value.matroid =
            principal_truncate(a.matroid, elems_from(lineno, toks, 4, a));
        value.meta = a.meta;
      } else if (verb == "restrict" && args.size() >= 1) {
        const Instance& a = lookup(lineno, args[0]);
        value.matroid = restrict_to(a.matroid, elems_from(lineno, toks, 4, a));
        value.meta = a.meta;
      } else if (verb == "contract" && args.size() >= 1) {
        const Instance& a = lookup(lineno, args[0]);
        value.matroid = contract(a.matroid, elems_from(lineno, toks, 4, a));
        value.meta = a.meta;
      } else {
        fail(lineno, "unknown construction '" + verb + "' (or wrong arity)");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(lineno, verb + ": " + e.what());
    }
    value.meta.name = name + ":" + id;
    auto [it, ok] = env.emplace(id, std::move(value));
    last = &it->second;
  }
  if (!last) throw ParseError("empty construction script");
  Instance result = *last;
  result.meta.name = name;
  return result;
}

}  // namespace

Instance parse_instance(const std::string& text, const std::string& name) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty instance file");
  auto head = split_ws(lines[0].second);
  if (head[0] == "linear") return parse_linear(lines, name);
  if (head[0] == "gain") return parse_gain(lines, name);
  if (head[0] == "incidence") return parse_incidence(lines, name);
  if (lines[0].second.find('=') != std::string::npos) return parse_script(lines, name);
  throw ParseError("unrecognized instance format (header '" + head[0] + "')");
}

Instance load_instance(const std::string& path) {
  return parse_instance(read_file(path), std::filesystem::path(path).stem().string());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

namespace {

std::string flags_string(const InstanceMeta& meta) {
  std::string out;
  if (meta.real) out = "real";
  if (meta.complex_rep) out += out.empty() ? "complex" : ",complex";
  return out.empty() ? "none" : out;
}

template <typename S>
std::string serialize_matrix(const std::string& header, const Matrix<S>& m,
                             std::string (*entry)(const S&)) {
  std::ostringstream out;
  out << header << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << entry(m.at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

std::string rational_entry(const Rational& q) { return rational_str(q); }
std::string cyclotomic_entry(const Cyclotomic& c) { return c.str(); }

}  // namespace

std::string serialize(const Instance& inst) {
  const Matroid* m = inst.matroid.get();
  if (auto* gg = dynamic_cast<const GainGraphMatroid*>(m)) {
    std::ostringstream out;
    out << "gain " << gg->vertices() << ' ' << gg->group_order() << '\n';
    for (int v : gg->joints()) out << "joint " << v << '\n';
    for (const auto& e : gg->edges())
      out << "edge " << e.i << ' ' << e.j << ' ' << e.g << '\n';
    return out.str();
  }
  if (auto* lin = dynamic_cast<const LinearMatroid<Rational>*>(m)) {
    return serialize_matrix("linear rational " + std::to_string(lin->matrix().rows()) +
                                " " + std::to_string(lin->matrix().cols()),
                            lin->matrix(), rational_entry);
  }
  if (auto* cyc = dynamic_cast<const LinearMatroid<Cyclotomic>*>(m)) {
    return serialize_matrix(
        "linear cyclotomic " + std::to_string(cyc->matrix().zero().order()) + " " +
            std::to_string(cyc->matrix().rows()) + " " +
            std::to_string(cyc->matrix().cols()),
        cyc->matrix(), cyclotomic_entry);
  }
  if (auto* inc = dynamic_cast<const IncidenceRank3Matroid*>(m)) {
    std::ostringstream out;
    out << "incidence " << inc->size() << " flags=" << flags_string(inst.meta) << '\n';
    for (const auto& line : inc->declared_lines()) {
      out << "line";
      for (int e : line.elements()) out << ' ' << e;
      out << '\n';
    }
    return out.str();
  }
  if (dynamic_cast<const UniformMatroid*>(m)) {
    // materialize the Vandermonde representation
    auto van = uniform_vandermonde(m->rank(), m->size());
    return serialize_matrix("linear rational " + std::to_string(van->matrix().rows()) +
                                " " + std::to_string(van->matrix().cols()),
                            van->matrix(), rational_entry);
  }
  throw std::invalid_argument(
      "composite matroids are serialized as construction scripts, not data files");
}

std::string gen_dowling_file(int r, int t, bool delete_joints) {
  return serialize(dowling(r, t, delete_joints));
}

std::string gen_uniform_file(int r, int n) {
  auto van = uniform_vandermonde(r, n);
  return serialize_matrix("linear rational " + std::to_string(r) + " " +
                              std::to_string(n),
                          van->matrix(), rational_entry);
}

std::string gen_k4_file() { return serialize(graphic_k4()); }

std::string gen_random_file(int r, int n, std::uint64_t seed) {
  std::string body = serialize(random_config(r, n, seed));
  return "# random rational configuration, splitmix64 seed " + std::to_string(seed) +
         "\n" + body;
}

std::string gen_figure1_script(int a) {
  if (a < 2) throw std::invalid_argument("figure1 needs a >= 2");
  const std::string pts = std::to_string(a + 2);
  std::ostringstream out;
  out << "# three 2-sums of " << pts << "-point lines onto a triangle of M(K4)\n"
      << "base = k4\n"
      << "line1 = uniform 2 " << pts << "\n"
      << "s1 = two_sum base 0 line1 0\n"
      << "line2 = uniform 2 " << pts << "\n"
      << "s2 = two_sum s1 0 line2 0\n"
      << "line3 = uniform 2 " << pts << "\n"
      << "s3 = two_sum s2 1 line3 0\n";
  return out.str();
}

std::string gen_direct_sum_script(int left, int right) {
  std::ostringstream out;
  out << "left = uniform 2 " << left << "\n"
      << "right = uniform 2 " << right << "\n"
      << "sum = direct_sum left right\n";
  return out.str();
}

std::string gen_two_sum_script(int left, int right) {
  std::ostringstream out;
  out << "left = uniform 2 " << left << "\n"
      << "right = uniform 2 " << right << "\n"
      << "sum = two_sum left 0 right 0\n";
  return out.str();
}

}  // namespace flatkit::io
