// Command implementations behind the cmpart CLI. Each returns its report as a
// string so the same code serves the executable and the tests.
#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmpart/arith.hpp"
#include "cmpart/cm.hpp"
#include "cmpart/error.hpp"
#include "cmpart/groups.hpp"
#include "cmpart/params.hpp"
#include "cmpart/partitions.hpp"
#include "cmpart/rouquier.hpp"
#include "cmpart/verify.hpp"

namespace cmpart::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kSizeBound = 1'000'000;
inline constexpr int kSchema = 1;

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct JobSpec {
  std::optional<int> m, d, n;
  std::optional<std::string> params;  // inline JSON or a file path
  bool generic = false;
  std::string format = "json";
  bool force = false;
  bool scaled = false;
  std::optional<int> k_bound;
};

/// Parameters as read from --params: either class values (k, c) or an (h, H) vector.
struct ParamSource {
  std::optional<int> m, d, n;
  Rat k{-1};
  std::map<int, Rat> c;
  std::optional<std::vector<Rat>> H;
};

namespace detail {

inline Rat rat_from_json(const Json& v, const std::string& what) {
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(BigInt(v.get<std::int64_t>()), BigInt(1));
  throw Error(what + " must be an integer or a \"p/q\" string");
}

inline std::string read_source(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return text;
  std::ifstream in(text);
  if (!in) throw Error("cannot open parameter file " + text);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Json poly_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (auto [e, c] : p.terms()) out[std::to_string(e)] = c;
  return out;
}

inline Json rats_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline Json ints_json(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline ParamSource parse_params(const std::string& text_or_path) {
  Json j;
  try {
    j = Json::parse(detail::read_source(text_or_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed parameter JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("parameters must be a JSON object");
  ParamSource ps;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& key = it.key();
    const auto& v = it.value();
    if (key == "m" || key == "d" || key == "n") {
      if (!v.is_number_integer()) throw Error("\"" + key + "\" must be an integer");
      (key == "m" ? ps.m : key == "d" ? ps.d : ps.n) = v.get<int>();
    } else if (key == "k" || key == "h") {
      ps.k = detail::rat_from_json(v, "\"" + key + "\"");
    } else if (key == "c") {
      if (!v.is_object()) throw Error("\"c\" must map class indices to values");
      for (auto c = v.begin(); c != v.end(); ++c) {
        int i = 0;
        try {
          std::size_t used = 0;
          i = std::stoi(c.key(), &used);
          if (used != c.key().size()) throw Error("");
        } catch (...) {
          throw Error("class index \"" + c.key() + "\" is not an integer");
        }
        ps.c[i] = detail::rat_from_json(c.value(), "c_" + c.key());
      }
    } else if (key == "H") {
      if (!v.is_array()) throw Error("\"H\" must be an array");
      std::vector<Rat> H;
      for (const auto& x : v) H.push_back(detail::rat_from_json(x, "H entry"));
      ps.H = std::move(H);
    } else {
      throw Error("unknown parameter key \"" + key + "\"");
    }
  }
  if (ps.H && !ps.c.empty()) throw Error("give either \"c\" or \"H\", not both");
  return ps;
}

/// Group of the job, with values from --params filling in missing flags.
inline GroupParams resolve_group(const JobSpec& job, const std::optional<ParamSource>& ps, bool need_n = true) {
  auto pick = [&](const std::optional<int>& flag, const std::optional<int>& file, const char* name, std::optional<int> dflt) {
    if (flag && file && *flag != *file) throw Error(std::string("conflicting values for ") + name);
    if (flag) return *flag;
    if (file) return *file;
    if (dflt) return *dflt;
    throw Error(std::string("missing -") + name);
  };
  const std::optional<int> none;
  const int m = pick(job.m, ps ? ps->m : none, "m", none);
  const int d = pick(job.d, ps ? ps->d : none, "d", 1);
  const int n = pick(job.n, ps ? ps->n : none, "n", need_n ? none : std::optional<int>(1));
  return GroupParams::make(m, d, n);
}

inline ParamsC params_c(const GroupParams& g, const ParamSource& ps);

inline ParamsH params_h(const GroupParams& g, const ParamSource& ps) {
  if (ps.H) {
    if (static_cast<int>(ps.H->size()) != g.m) throw Error("\"H\" needs m entries");
    ParamsH ph{ps.k, *ps.H};
    ph.validate();
    return ph;
  }
  return c_to_h(params_c(g, ps));
}

inline ParamsC params_c(const GroupParams& g, const ParamSource& ps) {
  if (ps.H) return h_to_c(params_h(g, ps));
  std::vector<Rat> values(static_cast<std::size_t>(g.m - 1), Rat(0));
  for (const auto& [i, v] : ps.c) {
    if (i < 1 || i >= g.m) throw Error("class index " + std::to_string(i) + " out of range 1..m-1");
    values[static_cast<std::size_t>(i - 1)] = v;
  }
  return ParamsC::rational(g.m, ps.k, values);
}

/// Shift data for a CM or Rouquier job.
struct ResolvedJob {
  GroupParams g;
  ShiftData sd;
  std::string source;
};

inline void guard_size(const GroupParams& g, bool force) {
  if (!force && count_multipartitions(g.m, g.n) > kSizeBound)
    throw Error("|P(m,n)| = " + count_multipartitions(g.m, g.n).str() + " exceeds 10^6; pass --force to proceed");
}

inline ResolvedJob resolve(const JobSpec& job) {
  if (job.generic && job.params) throw Error("--generic and --params are mutually exclusive");
  if (!job.generic && !job.params) throw Error("one of --params or --generic is required");
  std::optional<ParamSource> ps;
  if (job.params) ps = parse_params(*job.params);
  const auto g = resolve_group(job, ps);
  if (g.n < 1) throw Error("n must be at least 1");
  guard_size(g, job.force);
  if (job.generic) return {g, gap_witness(g), "generic"};
  auto sd = shift_data_from(params_h(g, *ps));
  if (!is_p_cyclic(sd, g.p())) throw Error("parameter is not p-cyclic (it does not extend by zero from G(m,d,n))");
  return {g, sd, "params"};
}

inline Json header(const std::string& command, const GroupParams& g) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["group"] = {{"m", g.m}, {"d", g.d}, {"n", g.n}};
  return j;
}

inline Json shift_json(const ResolvedJob& r) {
  return {{"source", r.source}, {"e", r.sd.e}, {"s", detail::ints_json(r.sd.s)}};
}

/// Label strings and upstairs representatives of a partition of Irr G(m,d,n).
/// For d = 1 the labels are plain multipartitions.
inline std::vector<std::string> label_strings(const GroupParams& g, const BlockPartition<IrrLabel>& bp) {
  std::vector<std::string> out;
  for (const auto& l : bp.labels()) out.push_back(g.d == 1 ? l.orbit.to_string() : l.to_string());
  return out;
}

inline std::string render_partition(const std::string& command, const ResolvedJob& r, const BlockPartition<IrrLabel>& bp,
                                     const JobSpec& job, Json extra = Json::object()) {
  const auto labels = label_strings(r.g, bp);
  if (job.format == "tsv") {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) out += std::to_string(bp.block_of(i)) + "\t" + labels[i] + "\n";
    return out;
  }
  if (job.format != "json") throw Error("unknown format " + job.format);
  Json j = header(command, r.g);
  j["parameter"] = shift_json(r);
  j["labels"] = labels;
  Json blocks = Json::array(), residues = Json::array();
  for (const auto& b : bp.blocks()) {
    blocks.push_back(b);
    auto res = shifted_residue(bp.labels()[b.front()].orbit, r.sd.s);
    if (job.scaled) res = res.substitute_power(static_cast<int>(r.sd.e));
    residues.push_back(detail::poly_json(res));
  }
  j["num_blocks"] = bp.num_blocks();
  j["blocks"] = blocks;
  j[job.scaled ? "residues_scaled" : "residues"] = residues;
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  return detail::dump(j);
}

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }
}

inline CommandResult cmd_enumerate(const JobSpec& job) {
  return guarded([&] {
    if (!job.m || !job.n) throw Error("enumerate needs -m and -n");
    if (*job.m < 1 || *job.n < 0) throw Error("need m >= 1 and n >= 0");
    auto count = count_multipartitions(*job.m, *job.n);
    if (!job.force && count > kSizeBound) throw Error("|P(m,n)| = " + count.str() + " exceeds 10^6; pass --force to proceed");
    auto all = enumerate_multipartitions(*job.m, *job.n);
    if (job.format == "json") {
      Json j;
      j["schema"] = kSchema;
      j["command"] = "enumerate";
      j["m"] = *job.m;
      j["n"] = *job.n;
      j["count"] = all.size();
      Json list = Json::array();
      for (const auto& l : all) list.push_back(l.to_string());
      j["multipartitions"] = list;
      return CommandResult{0, detail::dump(j), ""};
    }
    if (job.format != "tsv") throw Error("unknown format " + job.format);
    std::string out;
    for (const auto& l : all) out += l.to_string() + "\n";
    return CommandResult{0, out, std::to_string(all.size()) + " multipartitions\n"};
  });
}

inline CommandResult cmd_residue(const std::string& label, const std::vector<std::int64_t>& shift, std::int64_t e) {
  return guarded([&] {
    auto l = MultiPartition::parse(label);
    std::vector<std::int64_t> s = shift.empty() ? std::vector<std::int64_t>(static_cast<std::size_t>(l.m()), 0) : shift;
    if (e < 1) throw Error("e must be positive");
    Json j;
    j["schema"] = kSchema;
    j["command"] = "residue";
    j["multipartition"] = l.to_string();
    Json comps = Json::array();
    for (const auto& c : l.components()) comps.push_back(detail::poly_json(c.residue()));
    j["components"] = comps;
    j["s"] = detail::ints_json(s);
    j["e"] = e;
    auto res = shifted_residue(l, s);
    j["shifted"] = detail::poly_json(res);
    j["shifted_scaled"] = detail::poly_json(res.substitute_power(static_cast<int>(e)));
    j["text"] = res.to_string();
    return CommandResult{0, detail::dump(j), ""};
  });
}

inline CommandResult cmd_params(const JobSpec& job) {
  return guarded([&] {
    if (!job.params) throw Error("params needs --params");
    auto ps = parse_params(*job.params);
    const auto g = resolve_group(job, ps, false);
    const auto pc = params_c(g, ps);
    Json j;
    j["schema"] = kSchema;
    j["command"] = "params";
    j["group"] = {{"m", g.m}, {"d", g.d}};
    j["k"] = pc.k.to_string();
    Json c = Json::object();
    for (int i = 1; i < g.m; ++i) c[std::to_string(i)] = pc.value(i).to_string();
    j["c"] = c;
    j["supported_on_multiples_of_d"] = pc.supported_on_multiples_of(g.d);
    const auto exact = c_to_h_exact(pc);
    j["p_cyclic"] = is_p_cyclic(exact, g.p());
    bool rational = true;
    for (const auto& x : exact) rational = rational && x.is_rational();
    if (!rational) {
      Json H = Json::array();
      for (const auto& x : exact) H.push_back(x.to_string());
      j["H"] = H;
      j["rational"] = false;
      return CommandResult{0, detail::dump(j), ""};
    }
    const auto ph = params_h(g, ps);
    j["rational"] = true;
    j["h"] = ph.h.to_string();
    j["H"] = detail::rats_json(ph.H);
    const auto norm = normalized(ph);
    j["H_normalized"] = detail::rats_json(norm.H);
    const auto sd = integerize(norm);
    j["e"] = sd.e;
    j["s"] = detail::ints_json(sd.s);
    const auto hp = hecke_params(sd);
    j["hecke"] = {{"nR0", hp.nR0}, {"nR1", hp.nR1}, {"nS", detail::ints_json(hp.nS)}};
    return CommandResult{0, detail::dump(j), ""};
  });
}

inline CommandResult cmd_cm(const JobSpec& job) {
  return guarded([&] {
    auto r = resolve(job);
    return CommandResult{0, render_partition("cm", r, cm_partition_k(r.g, r.sd), job), ""};
  });
}

inline Json comparison_json(const Comparison& c) {
  Json j;
  j["refines"] = c.refines;
  j["equal"] = c.equal;
  if (c.counterexample) j["counterexample"] = {c.counterexample->first, c.counterexample->second};
  else j["counterexample"] = nullptr;
  return j;
}

inline CommandResult cmd_rouquier(const JobSpec& job, const std::string& compare_with = "") {
  return guarded([&] {
    if (!compare_with.empty() && compare_with != "cm") throw Error("--compare accepts only \"cm\"");
    auto r = resolve(job);
    const auto hp = hecke_params(r.sd);
    auto fam = rouquier_families_k(r.g, hp, job.k_bound);
    Json extra;
    Json hs = Json::array();
    for (const auto& h : hyperplanes_containing(hp, r.g.m, job.k_bound)) hs.push_back(h.to_string());
    extra["hyperplanes"] = hs;
    if (!compare_with.empty()) extra["comparison"] = comparison_json(compare_partitions(fam, cm_partition_k(r.g, r.sd)));
    if (job.format == "tsv") return CommandResult{0, render_partition("rouquier", r, fam, job), ""};
    return CommandResult{0, render_partition("rouquier", r, fam, job, extra), ""};
  });
}

/// Rouquier families against CM blocks, report only.
inline CommandResult cmd_compare(const JobSpec& job) {
  return guarded([&] {
    auto r = resolve(job);
    auto fam = rouquier_families_k(r.g, hecke_params(r.sd), job.k_bound);
    auto cmb = cm_partition_k(r.g, r.sd);
    Json j = header("compare", r.g);
    j["parameter"] = shift_json(r);
    j["rouquier_blocks"] = fam.num_blocks();
    j["cm_blocks"] = cmb.num_blocks();
    j["comparison"] = comparison_json(compare_partitions(fam, cmb));
    return CommandResult{0, detail::dump(j), ""};
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"classes", "counting", "params", "sdorbit", "descent",
                                              "generic", "essential", "chain", "refinement"};
  return names;
}

inline std::vector<ShiftData> suite_shifts(const JobSpec& job, const GroupParams& g) {
  std::vector<ShiftData> out;
  if (job.params) {
    out.push_back(shift_data_from(params_h(g, parse_params(*job.params))));
  } else {
    for (const auto& ph : verify::sample_p_cyclic_params(g)) out.push_back(shift_data_from(ph));
  }
  return out;
}

inline CommandResult cmd_verify(const std::string& suite, const JobSpec& job) {
  return guarded([&] {
    std::optional<ParamSource> ps;
    if (job.params) ps = parse_params(*job.params);
    auto need = [&](bool with_n) {
      auto g = resolve_group(job, ps, with_n);
      if (with_n) guard_size(g, job.force);
      return g;
    };
    verify::SuiteResult res;
    if (suite == "classes") {
      auto g = need(true);
      if (!job.force && group_order(GroupParams{g.m, 1, g.n}) > kSizeBound) throw Error("group order exceeds 10^6; pass --force");
      res = verify::classes(g);
    } else if (suite == "counting") {
      res = verify::counting(need(true));
    } else if (suite == "params") {
      res = verify::params(job.m.value_or(6), 100, 20240601u);
    } else if (suite == "sdorbit") {
      auto g = need(true);
      res = verify::sdorbit(g, suite_shifts(job, g), 1000, 7u);
    } else if (suite == "descent") {
      auto g = need(true);
      res.suite = "descent";
      for (const auto& sd : suite_shifts(job, g)) {
        auto part = verify::descent(g, sd);
        res.passed = res.passed && part.passed;
        for (auto& d : part.details) res.details.push_back(std::move(d));
      }
    } else if (suite == "generic") {
      res = verify::generic(need(true));
    } else if (suite == "essential") {
      res = verify::essential(job.m.value_or(12));
    } else if (suite == "chain") {
      if (!job.m || !job.n) throw Error("chain needs -m and -n");
      guard_size(GroupParams{*job.m, 1, *job.n}, job.force);
      res = verify::chain(*job.m, *job.n);
    } else if (suite == "refinement") {
      auto g = need(true);
      res = verify::refinement(g, suite_shifts(job, g));
    } else {
      throw Error("unknown suite " + suite);
    }
    Json j;
    j["schema"] = kSchema;
    j["command"] = "verify";
    j["suite"] = res.suite;
    j["passed"] = res.passed;
    j["details"] = res.details;
    return CommandResult{res.passed ? 0 : 1, detail::dump(j), ""};
  });
}

/// Brute-force group facts: order, reflection classes under G(m,d,n) and
/// G(m,1,n), class count against the number of ({lambda}, epsilon) labels.
inline CommandResult cmd_oracle(const JobSpec& job) {
  return guarded([&] {
    auto g = resolve_group(job, std::nullopt);
    const std::uint64_t bound = job.force ? std::numeric_limits<std::uint64_t>::max() : kSizeBound;
    const GroupParams big{g.m, 1, g.n};
    if (group_order(big) > bound) throw Error("group order exceeds 10^6; pass --force");
    Json j = header("oracle", g);
    j["order"] = group_order(g).str();
    auto classes_json = [&](const GroupParams& under) {
      Json arr = Json::array();
      for (const auto& c : conjugacy_classes_of_reflections(g, under, bound)) {
        Json elems = Json::array();
        for (const auto& e : c.elements) elems.push_back(e.to_string());
        arr.push_back({{"label", c.label}, {"size", c.elements.size()}, {"elements", elems}});
      }
      return arr;
    };
    j["reflections"] = reflections(g, bound).size();
    j["classes_self"] = classes_json(g);
    j["classes_under_G(m,1,n)"] = classes_json(big);
    const auto count = conjugacy_class_count(g, bound);
    const auto labels = irr_labels(g);
    j["conjugacy_classes"] = count;
    j["irr_labels"] = labels.size();
    j["counts_agree"] = count == labels.size();
    return CommandResult{count == labels.size() ? 0 : 1, detail::dump(j), ""};
  });
}

}  // namespace cmpart::cli
