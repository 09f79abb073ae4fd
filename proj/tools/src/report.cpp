#include "flatkit_cli/report.hpp"

#include "flatkit/version.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

namespace flatkit::report {

namespace {

const std::set<std::string> kTheoremChecks = {
    "melchior", "hirzebruch", "dbe",    "top-heavy",
    "line-bound", "average-line", "strat1", "strat2"};

std::string version_string() {
  return std::string(kToolName) + " " + kVersion;
}

std::string base_name(const std::string& check) {
  return check.substr(0, check.find('('));
}

std::string kind_of(const Matroid* m) {
  if (dynamic_cast<const GainGraphMatroid*>(m)) return "gain";
  if (dynamic_cast<const LinearMatroid<Rational>*>(m)) return "linear-rational";
  if (dynamic_cast<const LinearMatroid<Cyclotomic>*>(m)) return "linear-cyclotomic";
  if (dynamic_cast<const IncidenceRank3Matroid*>(m)) return "incidence";
  if (dynamic_cast<const UniformMatroid*>(m)) return "uniform";
  return "composite";
}

json labels_json(const Matroid& m, ElementSet s) {
  json out = json::array();
  for (int e : s.elements()) out.push_back(m.ground().label(e));
  return out;
}

json check_json(const CheckReport& r) {
  json out;
  out["name"] = r.name;
  out["lhs"] = fraction_str(r.lhs);
  out["rhs"] = fraction_str(r.rhs);
  out["holds"] = r.holds;
  json ctx = json::object();
  for (const auto& [k, v] : r.context) ctx[k] = fraction_str(v);
  out["context"] = ctx;
  if (r.note) out["note"] = *r.note;
  return out;
}

json skipped_json(const std::string& name, const std::string& reason) {
  json out;
  out["name"] = name;
  out["skipped"] = reason;
  return out;
}

json ratio_json(const RatioReport& r) {
  json out;
  out["name"] = r.name;
  out["ratio"] = fraction_str(r.ratio);
  json ctx = json::object();
  for (const auto& [k, v] : r.context) ctx[k] = fraction_str(v);
  out["context"] = ctx;
  return out;
}

json stats_json(const FlatStats& s) {
  json out;
  out["rank"] = s.rank;
  out["count"] = s.count;
  out["total"] = s.total_size;
  out["average"] = fraction_str(s.average);
  return out;
}

void sort_by_name(json& arr) {
  std::sort(arr.begin(), arr.end(), [](const json& a, const json& b) {
    return a.at("name").get<std::string>() < b.at("name").get<std::string>();
  });
}

struct Battery {
  json checks = json::array();
  json ratios = json::array();
  bool violation = false;

  void add(const CheckReport& r) {
    checks.push_back(check_json(r));
    if (!r.holds && kTheoremChecks.count(base_name(r.name))) violation = true;
  }
  void skip(const std::string& name, const std::string& reason) {
    checks.push_back(skipped_json(name, "precondition: " + reason));
  }
};

// Runs one named check family against a (simple) matroid, appending result or
// skip entries. Unknown names throw.
void run_check(Battery& b, const std::string& name, const Instance& inst,
               const Matroid& m, const Options& opt) {
  const int r = m.rank();
  const auto& meta = inst.meta;
  if (name == "melchior") {
    if (r != 3) return b.skip(name, "rank != 3");
    if (!meta.real) return b.skip(name, "not flagged real-representable");
    return b.add(melchior_check(m, opt.jobs));
  }
  if (name == "hirzebruch") {
    if (r != 3) return b.skip(name, "rank != 3");
    if (!meta.complex_rep) return b.skip(name, "not flagged complex-representable");
    if (is_near_pencil(m)) return b.skip(name, "near-pencil input");
    return b.add(hirzebruch_check(m, opt.jobs));
  }
  if (name == "dbe") {
    if (r != 3) return b.skip(name, "rank != 3");
    return b.add(dbe_check(m, opt.jobs));
  }
  if (name == "top-heavy") {
    bool any = false;
    for (int a = 1; a < r; ++a)
      for (int bb = a + 1; bb <= r - a; ++bb) {
        b.add(top_heavy_check(m, a, bb, opt.jobs));
        any = true;
      }
    if (!any) b.skip(name, "no legal (a,b) pairs for rank " + std::to_string(r));
    return;
  }
  if (name == "line-bound") {
    if (r != 3) return b.skip(name, "rank != 3");
    if (!meta.complex_rep) return b.skip(name, "not flagged complex-representable");
    return b.add(line_bound_check(m, opt.limits, opt.jobs));
  }
  if (name == "average-line") {
    if (r != 3) return b.skip(name, "rank != 3");
    if (!meta.complex_rep) return b.skip(name, "not flagged complex-representable");
    return b.add(average_line_check(m, opt.jobs));
  }
  if (name == "strat1") {
    for (int k = 2; k <= 4; ++k)
      for (auto& rep : strat1_check(m, k, opt.limits, opt.jobs)) b.add(rep);
    return;
  }
  if (name == "strat2") {
    if (!meta.complex_rep) return b.skip(name, "not flagged complex-representable");
    for (int k = 2; k <= 4; ++k) b.add(strat2_check(m, k, opt.limits, opt.jobs));
    return;
  }
  if (name == "lund-ratio") {
    for (int k = 2; k <= 4; ++k) {
      try {
        b.ratios.push_back(ratio_json(lund_ratio(m, k, opt.limits, opt.jobs)));
      } catch (const std::domain_error&) {
        b.skip("lund-ratio(k=" + std::to_string(k) + ")",
               "matroid is k-degenerate (zero denominator)");
      }
    }
    return;
  }
  if (name == "plane-probe") {
    if (r < 4) return b.skip(name, "rank < 4");
    return b.add(plane_theorem_probe(inst.matroid, opt.jobs));
  }
  if (name == "average-flat-size") {
    CheckReport all;
    all.name = "average-flat-size(all)";
    all.lhs = all.rhs = average_flat_size(m, true, opt.jobs);
    all.holds = true;
    all.context["n"] = m.size();
    all.note = "informational";
    b.add(all);
    try {
      CheckReport proper;
      proper.name = "average-flat-size(proper)";
      proper.lhs = proper.rhs = average_flat_size(m, false, opt.jobs);
      proper.holds = true;
      proper.context["n"] = m.size();
      proper.note = "informational";
      b.add(proper);
    } catch (const std::domain_error&) {
      b.skip("average-flat-size(proper)", "no proper flats");
    }
    return;
  }
  if (name == "hyperplane-probe") {
    auto* gg = dynamic_cast<const GainGraphMatroid*>(inst.matroid.get());
    if (!gg) return b.skip(name, "not a gain-graph instance");
    return b.add(hyperplane_average_probe(*gg, opt.jobs));
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

const std::vector<std::string> kCheckNames = {
    "melchior",   "hirzebruch", "dbe",    "top-heavy",   "line-bound",
    "average-line", "strat1",   "strat2", "lund-ratio",  "plane-probe",
    "average-flat-size", "hyperplane-probe"};

json instance_json(const Instance& inst) {
  const Matroid& m = *inst.matroid;
  json out;
  out["name"] = inst.meta.name;
  out["kind"] = kind_of(&m);
  out["n"] = m.size();
  out["rank"] = m.rank();
  out["simple"] = m.is_simple();
  json flags = json::array();
  if (inst.meta.real) flags.push_back("real");
  if (inst.meta.complex_rep) flags.push_back("complex");
  if (inst.meta.declared_only) flags.push_back("declared-only");
  out["flags"] = flags;
  json params = json::object();
  for (const auto& [k, v] : inst.meta.params) params[k] = v;
  out["params"] = params;
  return out;
}

json flats_document(const Instance& inst, std::optional<int> rank, bool list,
                    const Options& opt) {
  const Matroid& m = *inst.matroid;
  json doc;
  doc["version"] = version_string();
  doc["instance"] = instance_json(inst);
  if (list) {
    json flats = json::array();
    auto emit = [&](const Flat& f) {
      json one;
      one["rank"] = f.rank;
      one["size"] = f.elements.size();
      one["elements"] = labels_json(m, f.elements);
      flats.push_back(one);
    };
    if (rank) {
      for (const auto& f : flats_of_rank(m, *rank, opt.jobs)) emit(f);
    } else {
      for (const auto& f : all_flats(m, opt.jobs)) emit(f);
    }
    doc["flats"] = flats;
    return doc;
  }
  json stats = json::array();
  if (rank) {
    stats.push_back(stats_json(flat_size_stats(m, *rank, opt.jobs)));
  } else {
    for (int k = 0; k <= m.rank(); ++k)
      stats.push_back(stats_json(flat_size_stats(m, k, opt.jobs)));
    json avg;
    avg["include_trivial"] = opt.include_trivial;
    avg["value"] = fraction_str(average_flat_size(m, opt.include_trivial, opt.jobs));
    doc["average_flat_size"] = avg;
  }
  doc["stats"] = stats;
  return doc;
}

json degeneracy_document(const Instance& inst, int k, bool stratify,
                         const Options& opt) {
  json doc;
  doc["version"] = version_string();
  doc["instance"] = instance_json(inst);

  MatroidPtr m = inst.matroid;
  if (!m->is_simple()) {
    auto simplified = simplify(m);
    m = simplified.matroid;
    doc["simplified"] = true;
    doc["instance"]["n_simple"] = m->size();
  }

  auto witness_json = [&](const DegeneracyWitness& w) {
    json out;
    out["rank_sum"] = w.rank_sum;
    json flats = json::array();
    for (const auto& f : w.flats) {
      json one;
      one["rank"] = f.rank;
      one["elements"] = labels_json(*m, f.elements);
      flats.push_back(one);
    }
    out["flats"] = flats;
    return out;
  };

  auto largest = largest_k_degenerate(*m, k, std::nullopt, opt.limits);
  doc["k"] = k;
  doc["g"] = largest.set.size();
  doc["set"] = labels_json(*m, largest.set);
  doc["witness"] = witness_json(largest.witness);
  if (stratify) {
    auto strat = optimal_stratification(*m, k, opt.limits);
    json levels = json::array();
    for (int i = 2; i <= k; ++i) {
      json level;
      level["i"] = i;
      level["size"] = strat.level(i).set.size();
      level["elements"] = labels_json(*m, strat.level(i).set);
      levels.push_back(level);
    }
    doc["stratification"] = levels;
    doc["essential_dimension"] = essential_dimension(*m, opt.limits);
  }
  return doc;
}

json verify_document(const Instance& inst, const std::vector<std::string>& checks,
                     const Options& opt, int& exit_code) {
  json doc;
  doc["version"] = version_string();
  doc["instance"] = instance_json(inst);

  Instance target = inst;
  if (!inst.matroid->is_simple()) {
    target.matroid = simplify(inst.matroid).matroid;
    doc["simplified"] = true;
    doc["instance"]["n_simple"] = target.matroid->size();
  }

  Battery battery;
  const auto& names = checks.empty() ? kCheckNames : checks;
  for (const auto& name : names) run_check(battery, name, target, *target.matroid, opt);
  sort_by_name(battery.checks);
  sort_by_name(battery.ratios);
  doc["checks"] = battery.checks;
  doc["ratios"] = battery.ratios;
  exit_code = battery.violation ? kExitViolation : kExitOk;
  return doc;
}

json corpus_document(const std::string& dir, const Options& opt, int& exit_code) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext == ".mtx" || ext == ".gg" || ext == ".inc" || ext == ".rk")
      paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());

  exit_code = kExitOk;
  json instances = json::array();
  for (const auto& path : paths) {
    Instance inst = io::load_instance(path);  // parse failures abort the report
    json entry;
    entry["name"] = inst.meta.name;
    entry["info"] = instance_json(inst);
    try {
      const Matroid& m = *inst.matroid;
      const int r = m.rank();
      if (r >= 1)
        entry["hyperplane_stats"] = stats_json(flat_size_stats(m, r - 1, opt.jobs));
      if (r >= 2) entry["line_stats"] = stats_json(flat_size_stats(m, 2, opt.jobs));
      if (r >= 3) entry["plane_stats"] = stats_json(flat_size_stats(m, 3, opt.jobs));
      int check_exit = kExitOk;
      json verify = verify_document(inst, {}, opt, check_exit);
      entry["checks"] = verify["checks"];
      entry["ratios"] = verify["ratios"];
      if (verify.contains("simplified")) entry["simplified"] = true;
      exit_code = std::max(exit_code, check_exit);
    } catch (const SearchLimitExceeded& e) {
      entry["error"] = e.what();
      exit_code = std::max(exit_code, kExitBudget);
    }
    instances.push_back(entry);
  }
  json doc;
  doc["version"] = version_string();
  doc["instances"] = instances;
  return doc;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::string render_csv(const json& doc) {
  std::ostringstream out;
  if (doc.contains("instances")) {
    // plot-ready convergence series: one row per instance
    out << "instance,t,average\n";
    for (const auto& entry : doc["instances"]) {
      std::string t;
      const auto& info = entry.at("info");
      if (info.contains("params") && info["params"].contains("t"))
        t = info["params"]["t"].get<std::string>();
      std::string avg;
      if (entry.contains("hyperplane_stats"))
        avg = entry["hyperplane_stats"]["average"].get<std::string>();
      out << csv_escape(entry.at("name").get<std::string>()) << ',' << t << ',' << avg
          << '\n';
    }
    return out.str();
  }
  if (doc.contains("checks")) {
    out << "instance,check,lhs,rhs,holds\n";
    const std::string inst = doc.at("instance").at("name").get<std::string>();
    for (const auto& c : doc["checks"]) {
      out << csv_escape(inst) << ',' << csv_escape(c.at("name").get<std::string>())
          << ',';
      if (c.contains("skipped")) {
        out << ",,skipped\n";
      } else {
        out << c.at("lhs").get<std::string>() << ',' << c.at("rhs").get<std::string>()
            << ',' << (c.at("holds").get<bool>() ? "true" : "false") << '\n';
      }
    }
    return out.str();
  }
  if (doc.contains("stats")) {
    out << "instance,rank,count,total,average\n";
    const std::string inst = doc.at("instance").at("name").get<std::string>();
    for (const auto& s : doc["stats"]) {
      out << csv_escape(inst) << ',' << s.at("rank").get<int>() << ','
          << s.at("count").get<std::uint64_t>() << ','
          << s.at("total").get<std::uint64_t>() << ','
          << s.at("average").get<std::string>() << '\n';
    }
    return out.str();
  }
  if (doc.contains("g")) {
    out << "instance,quantity,value\n";
    const std::string inst = doc.at("instance").at("name").get<std::string>();
    out << csv_escape(inst) << ",g_" << doc.at("k").get<int>() << ','
        << doc.at("g").get<std::uint64_t>() << '\n';
    if (doc.contains("stratification")) {
      for (const auto& level : doc["stratification"])
        out << csv_escape(inst) << ",|X_" << level.at("i").get<int>() << "|,"
            << level.at("size").get<std::uint64_t>() << '\n';
      out << csv_escape(inst) << ",essential_dimension,"
          << doc.at("essential_dimension").get<int>() << '\n';
    }
    return out.str();
  }
  throw std::invalid_argument("document has no CSV rendering");
}

}  // namespace

std::string render(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") return render_csv(doc);
  throw std::invalid_argument("unknown format '" + format + "' (json|csv)");
}

}  // namespace flatkit::report
