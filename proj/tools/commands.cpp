#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gkn/geometry.hpp"
#include "gkn/independence.hpp"
#include "run_config.hpp"

namespace gkn::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

template <typename T, typename Reader>
T parse_file(const std::string& path, Reader reader) {
  std::istringstream is(read_file(path));
  return reader(is);
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::pass: return kOk;
    case Verdict::claim_failure: return kClaimFailure;
    case Verdict::inconsistent: return kInconsistent;
  }
  return kInconsistent;
}

int exit_code_for(CertStatus s) {
  switch (s) {
    case CertStatus::ok: return kOk;
    case CertStatus::malformed: return kMalformed;
    case CertStatus::hash_mismatch: return kHashMismatch;
    case CertStatus::sweep_failed: return kClaimFailure;
    case CertStatus::alpha_mismatch: return kAlphaMismatch;
    case CertStatus::alpha_not_below_n: return kNotCertifying;
  }
  return kMalformed;
}

void require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw ConfigError(cfg.command + ": --seed is required (no implicit randomness)");
}

void guard_k(const RunConfig& cfg, int k) {
  if (k == 4 && !cfg.allow_k4) throw ConfigError("k = 4 is outside the supported range k >= 5; pass --allow-k4 to use it");
  if (k < 4) throw ConfigError("k must be at least 5 (or 4 with --allow-k4)");
}

void guard_capacity(const RunConfig& cfg, int n) {
  if (n > cfg.capacity)
    throw ConfigError("N = " + std::to_string(n) + " exceeds capacity " + std::to_string(cfg.capacity));
}

}  // namespace

int capacity_from_env() {
  const char* raw = std::getenv("GKN_CAPACITY");
  if (raw == nullptr || *raw == '\0') return kMaxVertices;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(raw, &used);
  } catch (const std::exception&) {
    throw ConfigError("GKN_CAPACITY must be an integer");
  }
  if (raw[used] != '\0' || value < 1 || value > kMaxVertices)
    throw ConfigError("GKN_CAPACITY must be in 1..64 (only the single-word profile is built)");
  return value;
}

Shard parse_shard(const std::string& spec) {
  const auto slash = spec.find('/');
  if (slash == std::string::npos) throw ConfigError("--shard expects i/n");
  Shard s;
  try {
    s.index = std::stoi(spec.substr(0, slash));
    s.count = std::stoi(spec.substr(slash + 1));
  } catch (const std::exception&) {
    throw ConfigError("--shard expects i/n");
  }
  if (s.count < 1 || s.index < 0 || s.index >= s.count) throw ConfigError("--shard needs 0 <= i < n");
  return s;
}

void RunConfig::validate() const {
  if (command == "construct" || command == "search") {
    require_seed(*this);
    guard_k(*this, k);
    guard_capacity(*this, n_ground);
    if (n_ground < k + 1) throw ConfigError("--N must be at least k + 1");
  }
  if (command == "search" && (trials < 1 || n_target < 1)) throw ConfigError("search needs --trials >= 1 and --n >= 1");
  if (command == "verify" && coloring.empty()) throw ConfigError("verify needs --coloring");
  if (command == "alpha" && input.empty()) throw ConfigError("alpha needs --input");
  if (command == "prob-bound") {
    if (k < 4) throw ConfigError("prob-bound needs k >= 4");
    if (n_target < k) throw ConfigError("prob-bound needs --n >= k");
    if (mc_samples > 0) require_seed(*this);
  }
  if (command == "motzkin") {
    if (input.empty()) {
      require_seed(*this);
      if (d < 1 || d > 3) throw ConfigError("--d must be 1, 2 or 3");
      if (points < d + 3) throw ConfigError("--points must be at least d + 3");
      guard_capacity(*this, points);
      if (trials < 1) throw ConfigError("--trials must be positive");
    }
  }
  if (command == "cert-verify" && cert.empty()) throw ConfigError("cert-verify needs --cert");
  if (command == "merge-reports" && inputs.empty()) throw ConfigError("merge-reports needs report files");
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const Params params{cfg.k, cfg.n_ground, *cfg.seed};
  params.validate(cfg.capacity);
  const Coloring phi = cfg.planted > 0 ? sample_planted_coloring(params, cfg.planted) : sample_coloring(params);
  const LinkHypergraph g = build_g(phi);
  const ParityHypergraph h = build_h(g);

  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string());
  const fs::path coloring_path = dir / (cfg.prefix + ".coloring");
  const fs::path g_path = dir / (cfg.prefix + ".G.edges");
  const fs::path h_path = dir / (cfg.prefix + ".H.edges");
  write_file(coloring_path, coloring_to_string(phi));
  std::ostringstream gs;
  write_edge_list(gs, g.edges);
  write_file(g_path, gs.str());
  std::ostringstream hs;
  write_edge_list(hs, h.edges);
  write_file(h_path, hs.str());

  out << "coloring " << coloring_path.string() << '\n'
      << "G " << g_path.string() << " edges " << g.edges.size() << '\n'
      << "H " << h_path.string() << " edges " << h.edges.size() << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Coloring phi = parse_file<Coloring>(cfg.coloring, [](std::istream& is) { return read_coloring(is); });
  guard_k(cfg, phi.k());
  guard_capacity(cfg, phi.n());
  LinkHypergraph g = cfg.graph.empty()
                         ? build_g(phi)
                         : link_from_edges(parse_file<EdgeSet>(cfg.graph, [](std::istream& is) { return read_edge_list(is); }));
  if (g.edges.uniformity() != phi.k() - 1 || g.edges.ground_size() != phi.n())
    throw FormatError("graph file does not match the coloring's k and N");
  const ParityHypergraph h = build_h(g);
  const SweepReport report = full_sweep(g.edges, h.edges, phi.k(), phi.seed(), cfg.shard);
  const std::string text = report_to_string(report);

  if (!cfg.report.empty()) {
    write_file(cfg.report, text);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.rfind("fail ", 0) == 0 || line.rfind("sweep ", 0) == 0) out << line << '\n';
  } else {
    out << text;
  }

  if (report.verdict != Verdict::pass && !report.failures.empty()) {
    // Reproduction bundle: the first failing subset plus everything needed to rebuild it.
    std::ostringstream bundle;
    const SweepFailure& f = report.failures.front();
    bundle << "repro v1\n"
           << "failure " << f.kind << ' ' << to_string(f.subset) << " : " << f.detail << '\n'
           << coloring_to_string(phi);
    if (!cfg.graph.empty()) {
      bundle << "graph\n";
      write_edge_list(bundle, g.edges);
    }
    const std::string path = (cfg.report.empty() ? std::string("verify") : cfg.report) + ".repro";
    write_file(path, bundle.str());
    out << "repro " << path << '\n';
  }
  return exit_code_for(report.verdict);
}

int cmd_alpha(const RunConfig& cfg, std::ostream& out) {
  const EdgeSet h = parse_file<EdgeSet>(cfg.input, [](std::istream& is) { return read_edge_list(is); });
  guard_capacity(cfg, h.ground_size());
  const AlphaResult r = alpha_exact(h, cfg.node_budget);
  if (r.status == AlphaStatus::budget_exceeded) {
    out << "budget exceeded: " << r.alpha << " <= alpha <= " << r.upper_bound << '\n'
        << "witness " << to_string(r.witness) << '\n'
        << "nodes " << r.nodes << '\n';
    return kBudgetExceeded;
  }
  out << r.alpha << '\n' << "witness " << to_string(r.witness) << '\n' << "nodes " << r.nodes << '\n';
  return kOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const SearchResult result = search_colorings(cfg.k, cfg.n_ground, cfg.trials, cfg.n_target, *cfg.seed);
  const LowerBoundCertificate& best = result.best;
  for (const auto& [seed, alpha] : result.trials) out << "trial seed " << seed << " alpha " << alpha << '\n';
  out << "best seed " << best.seed << " alpha " << best.alpha << '\n';
  if (!cfg.cert.empty()) {
    write_file(cfg.cert, certificate_to_string(best));
    out << "certificate " << cfg.cert << '\n';
  }
  if (best.alpha >= cfg.n_target) {
    out << "alpha " << best.alpha << " is not below n = " << cfg.n_target << "; nothing certified\n";
    return kNotCertifying;
  }
  out << "certifies g_" << cfg.k << '(' << cfg.n_target << ") > " << cfg.n_ground << '\n';
  return kOk;
}

int cmd_prob_bound(const RunConfig& cfg, std::ostream& out) {
  const EdgeProbability p = edge_probability_exact(cfg.k, cfg.mc_samples > 0 ? cfg.mc_samples : 1'000'000,
                                                   cfg.seed.value_or(1));
  out << "k " << cfg.k << '\n';
  out << "p " << p.numerator << '/' << p.denominator << " = " << p.decimal() << " ("
      << (p.method == ProbabilityMethod::exhaustive ? "exhaustive" : "monte-carlo") << ")\n";
  if (cfg.mc_samples > 0) {
    const EdgeProbability mc = edge_probability_monte_carlo(cfg.k, cfg.mc_samples, *cfg.seed);
    out << "p-mc " << mc.numerator << '/' << mc.denominator << " = " << mc.decimal() << " se " << mc.standard_error()
        << '\n';
  }
  const SteinerPacking packing = greedy_steiner_packing(cfg.n_target, cfg.k);
  out << "m " << packing.blocks.size() << '\n';
  const auto feasible = max_feasible_n(cfg.n_target, p.value(), static_cast<double>(packing.blocks.size()));
  if (!feasible) {
    out << "max-log2-N none\n";
  } else {
    out << "max-log2-N " << std::setprecision(12) << feasible->log2_max_n << '\n';
    if (feasible->max_n) out << "max-N " << *feasible->max_n << '\n';
  }
  return kOk;
}

int cmd_motzkin(const RunConfig& cfg, std::ostream& out) {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::map<int, std::uint64_t> counts;
  std::uint64_t rejections = 0;
  const auto check_all = [&](const PointConfiguration& c) {
    for (VertexSet s : enumerate_subsets(c.size(), c.dimension() + 3)) {
      const MotzkinCount m = motzkin_count(c, s);
      ++checked;
      ++counts[m.count];
      if (m.verdict) ++passed;
      else out << "violation " << to_string(s) << " count " << m.count << '\n';
    }
  };
  if (!cfg.input.empty()) {
    const PointConfiguration c =
        parse_file<PointConfiguration>(cfg.input, [](std::istream& is) { return read_points(is); });
    guard_capacity(cfg, c.size());
    check_all(c);
  } else {
    SplitMix64 seeds(*cfg.seed);
    for (int i = 0; i < cfg.trials; ++i) {
      RandomConfiguration rc = random_general_position(cfg.d, cfg.points, cfg.range, seeds.next());
      rejections += rc.rejections;
      check_all(rc.points);
    }
    out << "rejected " << rejections << '\n';
  }
  for (const auto& [count, times] : counts) out << "count " << count << ' ' << times << '\n';
  out << passed << '/' << checked << " in {0,2,4}\n";
  return passed == checked ? kOk : kClaimFailure;
}

int cmd_cert_verify(const RunConfig& cfg, std::ostream& out) {
  const CertVerdict v = verify_certificate_text(read_file(cfg.cert));
  out << to_string(v.status) << ": " << v.message << '\n';
  return exit_code_for(v.status);
}

int cmd_merge_reports(const RunConfig& cfg, std::ostream& out) {
  std::vector<SweepReport> shards;
  for (const std::string& path : cfg.inputs)
    shards.push_back(parse_file<SweepReport>(path, [](std::istream& is) { return read_report(is); }));
  const SweepReport merged = merge_reports(shards);
  const std::string text = report_to_string(merged);
  if (cfg.report.empty()) {
    out << text;
  } else {
    write_file(cfg.report, text);
    out << text.substr(text.rfind("sweep "));
  }
  return exit_code_for(merged.verdict);
}

}  // namespace gkn::cli
