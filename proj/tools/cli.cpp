#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "codedcache/analysis.hpp"
#include "codedcache/config.hpp"
#include "codedcache/delivery_graph.hpp"
#include "codedcache/errors.hpp"
#include "codedcache/placement.hpp"
#include "codedcache/transmission.hpp"
#include "codedcache/verifier.hpp"

namespace codedcache::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for anything that should end in exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int k1 = -1;
  int k2 = -1;
  int t1 = -1;
  int t2 = -1;
  int n = -1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t subpacket_bytes = kDefaultSubpacketBytes;
  std::string config_path;
  std::string demands = "worst";
  std::string format;
  std::string out_path;
  std::optional<std::uint64_t> cap;
  std::string mutate;
  bool dump_caches = false;
  bool dump_graph = false;
  bool dump_plan = false;
  bool oracle = false;

  // sweep
  std::string k1_range = "2:6";
  std::string k2_range = "2:5";
  std::string n_list = "7,sum";
  bool sweep_verify = false;
  unsigned threads = 0;

  // region
  int points = 100;
  std::string domain = "all";

  // explicit flags, so a config file only fills what the command line omits
  bool seed_given = false;
  bool bytes_given = false;
};

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

std::uint64_t resolve_cap(const Options& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("CODEDCACHE_CAP")) {
    std::uint64_t v = 0;
    const std::string s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v == 0) {
      throw UsageError("CODEDCACHE_CAP must be a positive integer, got '" + s + "'");
    }
    return v;
  }
  return kDefaultCap;
}

void load_config_file(Options& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw UsageError("cannot open config file " + o.config_path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number_integer()) throw UsageError("config key '" + key + "' must be an integer");
    if (key == "k1") {
      if (o.k1 < 0) o.k1 = value.get<int>();
    } else if (key == "k2") {
      if (o.k2 < 0) o.k2 = value.get<int>();
    } else if (key == "t1") {
      if (o.t1 < 0) o.t1 = value.get<int>();
    } else if (key == "t2") {
      if (o.t2 < 0) o.t2 = value.get<int>();
    } else if (key == "n") {
      if (o.n < 0) o.n = value.get<int>();
    } else if (key == "subpacket_bytes") {
      if (!o.bytes_given) o.subpacket_bytes = value.get<std::size_t>();
    } else if (key == "seed") {
      if (!o.seed_given) o.seed = value.get<std::uint64_t>();
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

SystemConfig resolve_config(Options& o, bool simulated = true) {
  load_config_file(o);
  for (auto [v, name] : {std::pair{o.k1, "--k1"}, {o.k2, "--k2"}, {o.t1, "--t1"}, {o.t2, "--t2"}, {o.n, "--n"}}) {
    if (v < 0) throw UsageError(std::string("missing ") + name);
  }
  if (o.subpacket_bytes == 0) throw UsageError("--subpacket-bytes must be positive");
  return simulated ? validate_config(o.k1, o.k2, o.t1, o.t2, o.n) : validate_parameters(o.k1, o.k2, o.t1, o.t2, o.n);
}

DemandVector resolve_demand(const SystemConfig& cfg, const std::string& spec, std::uint64_t seed) {
  if (spec == "worst") return DemandVector::worst_case(cfg);
  if (spec == "all-same") return DemandVector::all_same(cfg);
  if (spec == "random") {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, cfg.files() - 1);
    std::vector<int> d(static_cast<std::size_t>(cfg.users()));
    for (int& x : d) x = pick(rng);
    return DemandVector(cfg, std::move(d));
  }
  if (spec.rfind("explicit:", 0) == 0) {
    std::vector<int> d;
    for (const std::string& part : split(spec.substr(9), ',')) d.push_back(parse_int(part, "demand"));
    return DemandVector(cfg, std::move(d));
  }
  throw UsageError("--demands must be worst, random, all-same or explicit:d0,d1,...");
}

void check_cap(const SubPacketUniverse& u, std::uint64_t cap) {
  if (u.per_file() > cap) {
    throw UsageError("configuration needs " + std::to_string(u.per_file()) + " sub-packets per file, above the cap of " +
                     std::to_string(cap) + " (raise with --cap or CODEDCACHE_CAP)");
  }
}

json config_json(const SystemConfig& cfg) {
  return json{{"k1", cfg.k1()}, {"k2", cfg.k2()}, {"t1", cfg.t1()}, {"t2", cfg.t2()}, {"n", cfg.files()},
              {"m1", to_string(cfg.m1())}, {"m2", to_string(cfg.m2())}};
}

json set_json(UserSet s) { return json(s.members()); }

json caches_json(const SystemConfig& cfg, const SubPacketUniverse& u) {
  const CacheContents cache = concat_placement(cfg);
  json users = json::array();
  for (int k = 0; k < cfg.users(); ++k) {
    users.push_back({{"user", k},
                     {"group", cfg.group_of(k) == Group::Fixed ? "fixed" : "mobile"},
                     {"cached_per_file", cache.cached_per_file(k, u)},
                     {"fraction", to_string(cache_fraction(cache, k, u))}});
  }
  return json{{"per_file", u.per_file()}, {"fixed_caches_untouched", cache.fixed_caches_untouched()}, {"users", users}};
}

inline constexpr std::size_t kMaxDumpedEdges = 200'000;

json graph_json(const SubPacketUniverse& u, const DeliveryVertices& v, const RestrictedGraph& r, const Matching& m) {
  json xs = json::array();
  for (const XVertex& x : v.x) {
    xs.push_back({{"s1", set_json(x.s1)}, {"b", set_json(x.b)}, {"l2", x.l2}, {"m1", x.m1}});
  }
  json ys = json::array();
  for (const YVertex& y : v.y) {
    ys.push_back({{"a", set_json(y.a)}, {"s2", set_json(y.s2)}, {"l1", y.l1}, {"m2", y.m2}});
  }
  json g{{"x", xs}, {"y", ys}};
  const BipartiteGraph full = build_edges(u, v);
  g["edge_count"] = full.edge_count();
  if (full.edge_count() <= kMaxDumpedEdges) {
    json edges = json::array();
    for (std::uint32_t xi = 0; xi < full.left_size(); ++xi) {
      for (std::uint32_t yi : full.neighbors(xi)) edges.push_back({xi, yi});
    }
    g["edges"] = edges;
  } else {
    g["edges"] = nullptr;
  }
  const bool sx = r.side == Side::SaturateX;
  json pairs = json::array();
  for (std::size_t i = 0; i < r.left_ids.size(); ++i) {
    const std::int32_t j = m.left_to_right[i];
    if (j == kUnmatched) continue;
    const std::uint32_t a = r.left_ids[i];
    const std::uint32_t b = r.right_ids[static_cast<std::size_t>(j)];
    pairs.push_back(sx ? json{a, b} : json{b, a});
  }
  g["side"] = to_string(r.side);
  g["layer_limit"] = r.layer_limit;
  g["matching"] = pairs;
  return g;
}

std::string vertex_label(VertexRef r) { return (r.part == Part::X ? "X" : "Y") + std::to_string(r.index); }

json plan_json(const DeliveryPlan& plan) {
  json msgs = json::array();
  for (const CodedMessage& m : plan.messages) {
    json vs = json::array();
    for (VertexRef r : m.vertices) vs.push_back(vertex_label(r));
    json cs = json::array();
    for (const SubPacketId& id : m.constituents) cs.push_back(to_string(id));
    msgs.push_back({{"kind", to_string(m.kind)}, {"vertices", vs}, {"constituents", cs}});
  }
  return msgs;
}

struct Emitter {
  std::ostream& out;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }
};

std::string text_of(const json& j, const std::string& indent = "") {
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n" << text_of(value, indent + "  ");
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      os << indent << key << ": " << value.dump() << '\n';
    }
  }
  return os.str();
}

std::string render(const json& j, const std::string& format) {
  if (format == "text") return text_of(j);
  if (format == "json" || format.empty()) return j.dump(2) + "\n";
  throw UsageError("this command supports --format json or text");
}

// ---------------------------------------------------------------------------

json plan_summary(const DeliveryPlan& plan) {
  return json{{"matched", plan.matched},
              {"direct", plan.direct},
              {"chain", plan.chain},
              {"total", plan.messages.size()},
              {"F", plan.per_file},
              {"rate", to_string(achieved_rate(plan))},
              {"bound", to_string(rate_bound(plan.cfg))}};
}

int cmd_simulate(Options& o, const Emitter& em) {
  const SystemConfig cfg = resolve_config(o);
  const DemandVector demand = resolve_demand(cfg, o.demands, o.seed);
  const SubPacketUniverse u(cfg);
  check_cap(u, resolve_cap(o));

  auto vertices = std::make_shared<DeliveryVertices>();
  vertices->x = build_x_vertices(u, demand);
  vertices->y = build_y_vertices(u, demand);
  const RestrictedGraph restricted = restrict_subgraph(u, *vertices);
  const Matching matching = saturating_matching(restricted);
  const DeliveryPlan plan = plan_csm_delivery(u, demand, vertices, restricted, matching);

  json j = plan_summary(plan);
  j["side"] = to_string(plan.side);
  j["L"] = plan.layer_limit;
  j["x_vertices"] = vertices->x.size();
  j["y_vertices"] = vertices->y.size();
  j["baseline"] = to_string(rate_baseline_split(cfg));
  j["config"] = config_json(cfg);
  j["demand"] = plan.demand;
  if (o.dump_caches) j["caches"] = caches_json(cfg, u);
  if (o.dump_graph) j["graph"] = graph_json(u, *vertices, restricted, matching);
  if (o.dump_plan) j["plan"] = plan_json(plan);
  em.write(render(j, o.format));
  return kExitOk;
}

void apply_mutation(DeliveryPlan& plan, const std::string& spec) {
  if (spec.empty()) return;
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (colon == std::string::npos) throw UsageError("--mutate expects drop-message:i or flip-byte:i");
  const int i = parse_int(spec.substr(colon + 1), "mutation index");
  if (i < 0 || static_cast<std::size_t>(i) >= plan.messages.size()) {
    throw UsageError("mutation index " + std::to_string(i) + " outside the " + std::to_string(plan.messages.size()) +
                     " messages");
  }
  if (kind == "drop-message") {
    plan.messages.erase(plan.messages.begin() + i);
  } else if (kind == "flip-byte") {
    plan.messages[static_cast<std::size_t>(i)].payload.at(0) ^= std::byte{0x01};
  } else {
    throw UsageError("unknown mutation '" + kind + "'");
  }
}

int cmd_verify(Options& o, const Emitter& em) {
  const SystemConfig cfg = resolve_config(o);
  const DemandVector demand = resolve_demand(cfg, o.demands, o.seed);
  const SubPacketUniverse u(cfg);
  check_cap(u, resolve_cap(o));
  const CacheContents cache = concat_placement(cfg);
  DeliveryPlan plan = build_csm_plan(u, demand);
  const FileStore store(u, o.subpacket_bytes, o.seed);
  materialize_payloads(plan, u, store);
  apply_mutation(plan, o.mutate);

  json report{{"ok", true}, {"config", config_json(cfg)}, {"demand", plan.demand}, {"seed", o.seed},
              {"subpacket_bytes", o.subpacket_bytes}, {"messages", plan.messages.size()},
              {"rate", to_string(achieved_rate(plan))}};
  auto fail = [&](json diag) {
    report["ok"] = false;
    report["failure"] = std::move(diag);
    em.write(render(report, o.format));
    return kExitVerifyFailed;
  };

  for (int k = 0; k < cfg.users(); ++k) {
    const DecodeResult r = peel(k, plan, u, cache);
    if (!r.complete()) {
      return fail({{"kind", "undecodable"},
                   {"user", k},
                   {"file", demand[k]},
                   {"subpacket", to_string(r.missing.front())},
                   {"missing", r.missing.size()}});
    }
    const std::vector<std::byte> got = reconstruct_file(k, plan, u, cache, store);
    const auto want = store.file(demand[k]);
    const auto diff = std::mismatch(got.begin(), got.end(), want.begin(), want.end());
    if (diff.first != got.end()) {
      const auto offset = static_cast<std::size_t>(diff.first - got.begin());
      const SubPacketId id = u.id_at(static_cast<std::uint64_t>(demand[k]) * plan.per_file + offset / o.subpacket_bytes);
      return fail({{"kind", "mismatch"},
                   {"user", k},
                   {"file", demand[k]},
                   {"subpacket", to_string(id)},
                   {"offset", offset}});
    }
  }
  if (o.oracle) {
    json oracle = json::array();
    for (int k = 0; k < cfg.users(); ++k) {
      try {
        const OracleResult r = gf2_oracle(k, plan, u, cache);
        oracle.push_back({{"user", k}, {"decodable", r.decodable}, {"rank", r.rank}, {"unknowns", r.unknowns}});
        if (!r.decodable) {
          return fail({{"kind", "oracle-disagrees"}, {"user", k}, {"subpacket", to_string(r.unreachable.front())}});
        }
      } catch (const SizeLimit& e) {
        oracle.push_back({{"user", k}, {"skipped", e.what()}});
      }
    }
    report["oracle"] = oracle;
  }
  report["users"] = cfg.users();
  report["file_bytes"] = store.file_bytes();
  em.write(render(report, o.format));
  return kExitOk;
}

json report_json(const SystemConfig& cfg, const RateReport& r) {
  json j{{"config", config_json(cfg)},
         {"rate_mn_fixed", to_string(r.rate_mn_fixed)},
         {"rate_mn_mobile", to_string(r.rate_mn_mobile)},
         {"baseline", to_string(r.rate_baseline)},
         {"bound", to_string(r.rate_bound)},
         {"exact", to_string(r.rate_exact)}};
  j["achieved"] = r.achieved ? json(to_string(*r.achieved)) : json(nullptr);
  j["rate_rd"] = r.rate_rd;
  j["rate_csm_lambda"] = r.rate_csm_lambda;
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  j["in_region"] = r.region_flag;
  j["ceiling_tight"] = ceiling_is_tight(cfg);
  j["optimality"] = {
      {"claim", "rate within a factor 12 of the optimum"},
      {"status", "derived, not measured: the optimum is unknown"},
      {"derivation", "ratio to the decentralized rate below 2, times the factor-6 gap of the decentralized scheme"}};
  return j;
}

int cmd_compare(Options& o, const Emitter& em) {
  const SystemConfig cfg = resolve_config(o);
  const DemandVector demand = resolve_demand(cfg, o.demands, o.seed);
  const SubPacketUniverse u(cfg);
  check_cap(u, resolve_cap(o));
  const DeliveryPlan plan = build_csm_plan(u, demand);
  const Rational achieved = achieved_rate(plan);
  const RateReport r = make_rate_report(cfg, achieved);
  json j = report_json(cfg, r);
  j["achieved_below_baseline"] = achieved < r.rate_baseline;
  j["achieved_within_bound"] = achieved <= r.rate_bound;
  em.write(render(j, o.format));
  return kExitOk;
}

int cmd_analyze(Options& o, const Emitter& em) {
  const SystemConfig cfg = resolve_config(o, false);
  em.write(render(report_json(cfg, make_rate_report(cfg)), o.format));
  return kExitOk;
}

int cmd_region(Options& o, const Emitter& em) {
  const int k1 = o.k1 < 0 ? 500 : o.k1;
  const int k2 = o.k2 < 0 ? 100 : o.k2;
  GridSpec grid;
  grid.points = o.points;
  if (o.domain == "all") {
    grid.domain = RegionDomain::All;
  } else if (o.domain == "above") {
    grid.domain = RegionDomain::Lambda1AboveLambda2;
  } else {
    throw UsageError("--domain must be all or above");
  }
  const std::vector<RegionRow> rows = region_scan(k1, k2, grid);
  if (o.format.empty() || o.format == "csv") {
    std::ostringstream os;
    write_region_csv(os, rows);
    em.write(os.str());
    return kExitOk;
  }
  if (o.format != "json") throw UsageError("region supports --format csv or json");
  json arr = json::array();
  for (const RegionRow& r : rows) {
    arr.push_back({{"lambda1", r.lambda1},
                   {"lambda2", r.lambda2},
                   {"in_region", r.in_region},
                   {"rate_csm", r.rate_csm},
                   {"rate_rd", r.rate_rd},
                   {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)}});
  }
  em.write(arr.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& s, const char* what) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) {
    const int v = parse_int(parts[0], what);
    return {v, v};
  }
  if (parts.size() != 2) throw UsageError(std::string("bad ") + what + " range '" + s + "'");
  const int lo = parse_int(parts[0], what);
  const int hi = parse_int(parts[1], what);
  if (lo > hi) throw UsageError(std::string("empty ") + what + " range '" + s + "'");
  return {lo, hi};
}

struct SweepJob {
  int k1, k2, t1, t2, n;
};

struct SweepRow {
  SweepJob job{};
  std::string status = "ok";
  std::string note;
  std::string side;
  int L = 0;
  std::uint64_t F = 0;
  std::size_t matched = 0, direct = 0, chain = 0;
  Rational achieved, bound, baseline;
  double rd = 0;
  bool ok_saturating = false;
  bool ok_bound = false;
  bool ok_closed_form = false;
  std::optional<bool> ok_equal_lambda;
  std::optional<bool> ok_decode;

  bool all_ok() const {
    return status == "skipped" ||
           (status == "ok" && ok_saturating && ok_bound && ok_closed_form && ok_equal_lambda.value_or(true) &&
            ok_decode.value_or(true));
  }
};

SweepRow run_sweep_row(const SweepJob& job, std::uint64_t cap, bool verify, std::uint64_t seed, std::size_t bytes) {
  SweepRow row;
  row.job = job;
  try {
    const SystemConfig cfg = validate_config(job.k1, job.k2, job.t1, job.t2, job.n);
    const SubPacketUniverse u(cfg);
    row.F = u.per_file();
    if (u.per_file() > cap) {
      row.status = "skipped";
      row.note = "sub-packets per file above cap";
      return row;
    }
    const DemandVector demand = DemandVector::worst_case(cfg);
    auto vertices = std::make_shared<DeliveryVertices>();
    vertices->x = build_x_vertices(u, demand);
    vertices->y = build_y_vertices(u, demand);
    const RestrictedGraph restricted = restrict_subgraph(u, *vertices);
    Matching matching;
    try {
      matching = saturating_matching(restricted);
      row.ok_saturating = true;
    } catch (const SaturationFailure& e) {
      row.status = "failed";
      row.note = e.what();
      return row;
    }
    const DeliveryPlan plan = plan_csm_delivery(u, demand, vertices, restricted, matching);
    row.side = to_string(plan.side);
    row.L = plan.layer_limit;
    row.matched = plan.matched;
    row.direct = plan.direct;
    row.chain = plan.chain;
    row.achieved = achieved_rate(plan);
    row.bound = rate_bound(cfg);
    row.baseline = rate_baseline_split(cfg);
    row.rd = rate_rd_two_group(cfg.k1(), cfg.k2(), to_double(cfg.lambda1()), to_double(cfg.lambda2()));
    row.ok_bound = row.achieved <= row.bound;
    row.ok_closed_form = plan.messages.size() == closed_form_message_count(cfg) && row.achieved == rate_csm_exact(cfg);
    if (cfg.lambda1() == cfg.lambda2()) row.ok_equal_lambda = row.achieved == Rational(cfg.k1() - cfg.t1(), cfg.t1());
    if (verify) {
      try {
        row.ok_decode = byte_verify(cfg, demand, seed, bytes).ok;
      } catch (const Error& e) {
        row.ok_decode = false;
        row.note = e.what();
      }
    }
  } catch (const Error& e) {
    row.status = "failed";
    row.note = e.what();
  }
  return row;
}

std::string flag(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "na"; }

int cmd_sweep(Options& o, const Emitter& em, std::ostream& err) {
  const auto [k1_lo, k1_hi] = parse_range(o.k1_range, "k1");
  const auto [k2_lo, k2_hi] = parse_range(o.k2_range, "k2");
  const std::vector<std::string> n_items = split(o.n_list, ',');
  if (n_items.empty()) throw UsageError("--n-list is empty");
  const std::uint64_t cap = resolve_cap(o);

  std::vector<SweepJob> jobs;
  for (int k1 = k1_lo; k1 <= k1_hi; ++k1) {
    for (int k2 = k2_lo; k2 <= k2_hi; ++k2) {
      std::vector<int> ns;
      for (const std::string& item : n_items) {
        const int n = item == "sum" ? k1 + k2 : parse_int(item, "n");
        if (std::find(ns.begin(), ns.end(), n) == ns.end()) ns.push_back(n);
      }
      for (int t1 = 1; t1 < k1; ++t1) {
        if (o.t1 >= 0 && t1 != o.t1) continue;
        for (int t2 = 1; t2 < k2; ++t2) {
          if (o.t2 >= 0 && t2 != o.t2) continue;
          for (int n : ns) jobs.push_back({k1, k2, t1, t2, n});
        }
      }
    }
  }

  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<std::size_t>(o.threads ? o.threads : hw, std::max<std::size_t>(1, jobs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
          rows[i] = run_sweep_row(jobs[i], cap, o.sweep_verify, o.seed, o.subpacket_bytes);
        }
      });
    }
  }

  bool all_ok = true;
  for (const SweepRow& r : rows) {
    all_ok &= r.all_ok();
    if (r.status == "skipped") {
      err << "skipped K1=" << r.job.k1 << " K2=" << r.job.k2 << " t1=" << r.job.t1 << " t2=" << r.job.t2
          << " N=" << r.job.n << ": " << r.F << " sub-packets per file exceeds cap " << cap << '\n';
    }
  }

  const std::string format = o.format.empty() ? "csv" : o.format;
  std::ostringstream os;
  if (format == "csv") {
    os << "k1,k2,t1,t2,n,status,side,L,F,matched,direct,chain,achieved,bound,baseline,rd,"
          "ok_saturating,ok_bound,ok_closed_form,ok_equal_lambda,ok_decode\n";
    os.precision(12);
    for (const SweepRow& r : rows) {
      os << r.job.k1 << ',' << r.job.k2 << ',' << r.job.t1 << ',' << r.job.t2 << ',' << r.job.n << ',' << r.status
         << ',' << r.side << ',' << r.L << ',' << r.F << ',' << r.matched << ',' << r.direct << ',' << r.chain << ','
         << to_string(r.achieved) << ',' << to_string(r.bound) << ',' << to_string(r.baseline) << ',' << r.rd << ','
         << flag(r.ok_saturating) << ',' << flag(r.ok_bound) << ',' << flag(r.ok_closed_form) << ','
         << flag(r.ok_equal_lambda) << ',' << flag(r.ok_decode) << '\n';
    }
  } else if (format == "json" || format == "text") {
    json arr = json::array();
    for (const SweepRow& r : rows) {
      json j{{"k1", r.job.k1}, {"k2", r.job.k2}, {"t1", r.job.t1}, {"t2", r.job.t2}, {"n", r.job.n},
             {"status", r.status}};
      if (!r.note.empty()) j["note"] = r.note;
      if (r.status == "ok") {
        j.update(json{{"side", r.side}, {"L", r.L}, {"F", r.F}, {"matched", r.matched}, {"direct", r.direct},
                      {"chain", r.chain}, {"total", r.matched + r.direct + r.chain},
                      {"rate", to_string(r.achieved)}, {"bound", to_string(r.bound)},
                      {"baseline", to_string(r.baseline)}, {"rd", r.rd}, {"ok_saturating", r.ok_saturating},
                      {"ok_bound", r.ok_bound}, {"ok_closed_form", r.ok_closed_form}});
        j["ok_equal_lambda"] = r.ok_equal_lambda ? json(*r.ok_equal_lambda) : json(nullptr);
        j["ok_decode"] = r.ok_decode ? json(*r.ok_decode) : json(nullptr);
      }
      arr.push_back(j);
    }
    if (format == "json") {
      os << arr.dump(2) << '\n';
    } else {
      for (const auto& j : arr) os << text_of(j) << '\n';
    }
  } else {
    throw UsageError("sweep supports --format csv, json or text");
  }
  em.write(os.str());
  return all_ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

void add_config_options(CLI::App* sub, Options& o) {
  sub->add_option("--k1", o.k1, "fixed users K1");
  sub->add_option("--k2", o.k2, "mobile users K2");
  sub->add_option("--t1", o.t1, "fixed-group cache parameter t1");
  sub->add_option("--t2", o.t2, "mobile-group cache parameter t2");
  sub->add_option("--n", o.n, "number of files N");
  sub->add_option("--config", o.config_path, "JSON file with k1,k2,t1,t2,n,subpacket_bytes,seed");
}

void add_run_options(CLI::App* sub, Options& o) {
  sub->add_option_function<std::uint64_t>("--seed", [&o](std::uint64_t v) { o.seed = v; o.seed_given = true; },
                                          "seed for file contents and random demands");
  sub->add_option_function<std::size_t>("--subpacket-bytes",
                                        [&o](std::size_t v) { o.subpacket_bytes = v; o.bytes_given = true; },
                                        "bytes per sub-packet");
  sub->add_option("--demands", o.demands, "worst | random | all-same | explicit:d0,d1,...");
  sub->add_option("--cap", o.cap, "maximum sub-packets per file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Two-group coded caching simulator"};
  app.require_subcommand(1, 1);

  auto* simulate = app.add_subcommand("simulate", "build the delivery plan and summarize it");
  add_config_options(simulate, o);
  add_run_options(simulate, o);
  simulate->add_flag("--dump-caches", o.dump_caches, "include the per-user cache census");
  simulate->add_flag("--dump-graph", o.dump_graph, "include vertices, edges and the matching");
  simulate->add_flag("--dump-plan", o.dump_plan, "include every message's constituents");

  auto* verify = app.add_subcommand("verify", "byte-level decode check for every user");
  add_config_options(verify, o);
  add_run_options(verify, o);
  verify->add_option("--mutate", o.mutate, "drop-message:i | flip-byte:i");
  verify->add_flag("--oracle", o.oracle, "also run the binary-field rank check");

  auto* compare = app.add_subcommand("compare", "achieved rate against the bound, baseline and decentralized rate");
  add_config_options(compare, o);
  add_run_options(compare, o);

  auto* analyze = app.add_subcommand("analyze", "rate report without simulating");
  add_config_options(analyze, o);

  auto* region = app.add_subcommand("region", "scan the (lambda1, lambda2) grid");
  region->add_option("--k1", o.k1, "fixed users (default 500)");
  region->add_option("--k2", o.k2, "mobile users (default 100)");
  region->add_option("--points", o.points, "grid points per axis");
  region->add_option("--domain", o.domain, "all | above (lambda1 > lambda2 only)");

  auto* sweep = app.add_subcommand("sweep", "simulate every valid (t1, t2) over ranges of K1, K2 and N");
  sweep->add_option("--k1", o.k1_range, "K1 value or lo:hi");
  sweep->add_option("--k2", o.k2_range, "K2 value or lo:hi");
  sweep->add_option("--t1", o.t1, "restrict to one t1");
  sweep->add_option("--t2", o.t2, "restrict to one t2");
  sweep->add_option("--n", o.n_list, "comma list of N values; 'sum' means K1+K2");
  sweep->add_option("--cap", o.cap, "maximum sub-packets per file");
  sweep->add_flag("--verify", o.sweep_verify, "also byte-verify every row");
  sweep->add_option_function<std::uint64_t>("--seed", [&o](std::uint64_t v) { o.seed = v; }, "seed for verification");
  sweep->add_option("--threads", o.threads, "worker threads (0 = hardware)");

  for (CLI::App* sub : {simulate, verify, compare, analyze, region, sweep}) {
    sub->add_option("--format", o.format, "json | csv | text");
    sub->add_option("--out", o.out_path, "write the result to this file");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Emitter em{out, o.out_path};
  try {
    if (*simulate) return cmd_simulate(o, em);
    if (*verify) return cmd_verify(o, em);
    if (*compare) return cmd_compare(o, em);
    if (*analyze) return cmd_analyze(o, em);
    if (*region) return cmd_region(o, em);
    if (*sweep) return cmd_sweep(o, em, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DecodeFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const MismatchError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace codedcache::cli
