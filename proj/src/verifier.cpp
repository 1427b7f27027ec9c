#include "gkn/verifier.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace gkn {
namespace {

void require_link_shape(const EdgeSet& g, VertexSet s) {
  if (s.size() != g.uniformity() + 2)
    throw DomainError("subset " + to_string(s) + " must have k+1 = " + std::to_string(g.uniformity() + 2) +
                      " vertices");
}

std::string pairs_detail(const T3Witness& w) {
  std::string out = "pairs";
  for (std::size_t i = 0; i < w.pairs.size(); ++i) out += (i == 0 ? " " : " / ") + to_string(w.pairs[i]);
  return out;
}

Verdict worse(Verdict a, Verdict b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

}  // namespace

Claim1Result check_claim1(const EdgeSet& g, const EdgeSet& h, VertexSet s) {
  require_link_shape(g, s);
  if (h.uniformity() != g.uniformity() + 1) throw DomainError("claim1: H must be (k)-uniform for (k-1)-uniform G");
  Claim1Result r;
  r.g_count = induced_count(g, s);
  r.h_count = induced_count(h, s);
  for (int x : s.members()) r.k_subset_sum += induced_count(g, s.without(x));
  if (r.k_subset_sum != 2 * r.g_count)
    throw InternalInconsistency("double count failed on " + to_string(s) + ": sum " +
                                std::to_string(r.k_subset_sum) + " != 2 * " + std::to_string(r.g_count));
  return r;
}

Claim2Result check_claim2(const EdgeSet& g, VertexSet e) {
  if (e.size() != g.uniformity() + 1) throw DomainError("claim2: e must be a k-set");
  return Claim2Result{induced_count(g, e)};
}

std::optional<T3Witness> check_claim3(const EdgeSet& g, VertexSet s) {
  if (s.size() < 6) throw DomainError("claim3: needs |S| >= 6");
  const LinkGraph link = build_link_graph(g, s);
  const auto& es = link.edges;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      if (!(es[a] & es[b]).empty()) continue;
      for (std::size_t c = b + 1; c < es.size(); ++c)
        if ((es[c] & (es[a] | es[b])).empty()) return T3Witness{s, {es[a], es[b], es[c]}};
    }
  return std::nullopt;
}

int LinkGraph::degree(int v) const {
  const auto it = neighbours.find(v);
  return it == neighbours.end() ? 0 : it->second.size();
}

int LinkGraph::max_degree() const {
  int best = 0;
  for (const auto& [v, nb] : neighbours) best = std::max(best, nb.size());
  return best;
}

int LinkGraph::matching_number() const {
  std::function<int(std::size_t, VertexSet)> grow = [&](std::size_t from, VertexSet used) {
    int best = 0;
    for (std::size_t i = from; i < edges.size(); ++i)
      if ((edges[i] & used).empty()) best = std::max(best, 1 + grow(i + 1, used | edges[i]));
    return best;
  };
  return grow(0, VertexSet());
}

LinkGraph build_link_graph(const EdgeSet& g, VertexSet s) {
  require_link_shape(g, s);
  LinkGraph link;
  link.vertices = s;
  for (int v : s.members()) link.neighbours[v] = VertexSet();
  for (VertexSet pair : enumerate_subsets(s.max(), 2)) {
    if (!pair.is_subset_of(s)) continue;
    if (!g.contains(s - pair)) continue;
    link.edges.push_back(pair);
    link.neighbours[pair.min()].insert(pair.max());
    link.neighbours[pair.max()].insert(pair.min());
  }
  return link;
}

std::string StructureClass::name() const {
  std::string out;
  const auto add = [&](const std::string& part) { out += (out.empty() ? "" : "+") + part; };
  for (int c : cycles) add("C" + std::to_string(c));
  for (int p : paths) add("P" + std::to_string(p));
  if (isolated > 0) add("I" + std::to_string(isolated));
  return out;
}

StructureClass classify_structure(const LinkGraph& link) {
  if (link.max_degree() > 2) throw DomainError("classify: G' has a vertex of degree > 2");
  StructureClass cls;
  VertexSet seen;
  for (int start : link.vertices.members()) {
    if (seen.contains(start)) continue;
    VertexSet component;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (component.contains(v)) continue;
      component.insert(v);
      for (int w : link.neighbours.at(v).members()) stack.push_back(w);
    }
    seen = seen | component;
    int degree_sum = 0;
    for (int v : component.members()) degree_sum += link.degree(v);
    const int edge_count = degree_sum / 2;
    if (edge_count == 0)
      ++cls.isolated;
    else if (edge_count == component.size())
      cls.cycles.push_back(edge_count);
    else
      cls.paths.push_back(edge_count);
  }
  std::sort(cls.cycles.rbegin(), cls.cycles.rend());
  std::sort(cls.paths.rbegin(), cls.paths.rend());
  return cls;
}

InducedProfile classify_profile(const EdgeSet& g, const EdgeSet& h, VertexSet s) {
  const LinkGraph link = build_link_graph(g, s);
  InducedProfile p;
  p.s = s;
  p.structure = classify_structure(link);
  p.g_count = induced_count(g, s);
  if (p.g_count != link.edges.size())
    throw InternalInconsistency("G' on " + to_string(s) + " has " + std::to_string(link.edges.size()) +
                                " edges but |G[S]| = " + std::to_string(p.g_count));
  p.h_count = induced_count(h, s);
  std::uint64_t degree_one = 0;
  for (int v : s.members())
    if (link.degree(v) == 1) ++degree_one;
  if (degree_one != p.h_count)
    throw InternalInconsistency("|H[S]| = " + std::to_string(p.h_count) + " on " + to_string(s) + " but G' has " +
                                std::to_string(degree_one) + " degree-1 vertices");
  p.pass = p.h_count == 0 || p.h_count == 2 || p.h_count == 4;
  return p;
}

std::map<std::uint64_t, std::uint64_t> induced_count_histogram(const EdgeSet& edges, IndexRange range) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (VertexSet s : SubsetRange(edges.ground_size(), edges.uniformity() + 1, range)) ++hist[induced_count(edges, s)];
  return hist;
}

std::map<std::uint64_t, std::uint64_t> induced_count_histogram(const EdgeSet& edges) {
  return induced_count_histogram(edges, {0, binomial(edges.ground_size(), edges.uniformity() + 1)});
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::claim_failure: return "fail";
    case Verdict::inconsistent: return "inconsistent";
  }
  return "?";
}

std::uint64_t SweepReport::h_count_of(std::uint64_t h) const {
  const auto it = h_histogram.find(h);
  return it == h_histogram.end() ? 0 : it->second;
}

SweepReport full_sweep(const EdgeSet& g, const EdgeSet& h, int k, std::uint64_t seed, Shard shard) {
  const int n = g.ground_size();
  if (g.uniformity() != k - 1 || h.uniformity() != k || h.ground_size() != n)
    throw DomainError("sweep: G must be (k-1)-uniform and H k-uniform on the same ground set");
  if (n < k + 1) throw DomainError("sweep: N must be at least k + 1");

  SweepReport report;
  report.k = k;
  report.n = n;
  report.seed = seed;
  report.shard = shard;
  const auto fail = [&](std::string kind, VertexSet s, std::string detail, Verdict v) {
    report.failures.push_back(SweepFailure{std::move(kind), s, std::move(detail)});
    report.verdict = worse(report.verdict, v);
  };

  for (VertexSet s : SubsetRange(n, k + 1, shard_range(binomial(n, k + 1), shard.index, shard.count))) {
    ++report.subsets_checked;
    Claim1Result c1;
    try {
      c1 = check_claim1(g, h, s);
    } catch (const InternalInconsistency& e) {
      fail("internal", s, e.what(), Verdict::inconsistent);
      continue;
    }
    ++report.h_histogram[c1.h_count];
    if (!c1.even()) fail("claim1", s, "h " + std::to_string(c1.h_count), Verdict::claim_failure);
    if (s.size() >= 6)
      if (auto w = check_claim3(g, s)) fail("claim3", s, pairs_detail(*w), Verdict::claim_failure);

    const LinkGraph link = build_link_graph(g, s);
    if (link.max_degree() > 2) {
      fail("h-count", s, "G' max degree " + std::to_string(link.max_degree()), Verdict::claim_failure);
      continue;
    }
    try {
      const InducedProfile p = classify_profile(g, h, s);
      auto& entry = report.classes[p.structure.name()];
      entry.first = p.h_count;
      ++entry.second;
      if (!p.pass) fail("h-count", s, "h " + std::to_string(p.h_count), Verdict::claim_failure);
    } catch (const InternalInconsistency& e) {
      fail("internal", s, e.what(), Verdict::inconsistent);
    }
  }

  for (VertexSet e : SubsetRange(n, k, shard_range(binomial(n, k), shard.index, shard.count))) {
    ++report.ksets_checked;
    const Claim2Result c2 = check_claim2(g, e);
    if (!c2.holds()) fail("claim2", e, "count " + std::to_string(c2.count), Verdict::claim_failure);
  }
  return report;
}

SweepReport merge_reports(const std::vector<SweepReport>& shards) {
  if (shards.empty()) throw DomainError("merge: no reports");
  const SweepReport& first = shards.front();
  const int count = first.shard.count;
  if (static_cast<int>(shards.size()) != count)
    throw DomainError("merge: expected " + std::to_string(count) + " shards, got " + std::to_string(shards.size()));

  std::vector<const SweepReport*> ordered(static_cast<std::size_t>(count), nullptr);
  for (const SweepReport& r : shards) {
    if (r.k != first.k || r.n != first.n || r.seed != first.seed || r.shard.count != count)
      throw DomainError("merge: reports come from different sweeps");
    if (r.shard.index < 0 || r.shard.index >= count || ordered[r.shard.index] != nullptr)
      throw DomainError("merge: duplicate or invalid shard index " + std::to_string(r.shard.index));
    ordered[r.shard.index] = &r;
  }

  SweepReport merged;
  merged.k = first.k;
  merged.n = first.n;
  merged.seed = first.seed;
  std::vector<SweepFailure> kset_failures;
  for (const SweepReport* r : ordered) {
    merged.subsets_checked += r->subsets_checked;
    merged.ksets_checked += r->ksets_checked;
    for (const auto& [h, c] : r->h_histogram) merged.h_histogram[h] += c;
    for (const auto& [name, entry] : r->classes) {
      auto& m = merged.classes[name];
      if (m.second > 0 && m.first != entry.first) throw DomainError("merge: class " + name + " has two h values");
      m.first = entry.first;
      m.second += entry.second;
    }
    for (const SweepFailure& f : r->failures)
      (f.subset.size() == merged.k ? kset_failures : merged.failures).push_back(f);
    merged.verdict = worse(merged.verdict, r->verdict);
  }
  merged.failures.insert(merged.failures.end(), kset_failures.begin(), kset_failures.end());
  return merged;
}

void write_report(std::ostream& os, const SweepReport& r) {
  os << "report v1\n";
  os << "params " << r.k << ' ' << r.n << ' ' << r.seed << '\n';
  if (!r.shard.whole()) os << "shard " << r.shard.index << ' ' << r.shard.count << '\n';
  for (const SweepFailure& f : r.failures) os << "fail " << f.kind << ' ' << to_string(f.subset) << " : " << f.detail << '\n';
  os << "checked " << r.subsets_checked << ' ' << r.ksets_checked << '\n';
  for (const auto& [h, c] : r.h_histogram) os << "h " << h << ' ' << c << '\n';
  for (const auto& [name, entry] : r.classes) os << "class " << name << ' ' << entry.first << ' ' << entry.second << '\n';
  os << "sweep " << r.k << ' ' << r.n << ' ' << r.seed << ' ' << to_string(r.verdict) << ' ' << r.h_count_of(0) << ' '
     << r.h_count_of(2) << ' ' << r.h_count_of(4) << '\n';
}

std::string report_to_string(const SweepReport& report) {
  std::ostringstream os;
  write_report(os, report);
  return os.str();
}

SweepReport read_report(std::istream& is) {
  SweepReport r;
  std::string line;
  if (!std::getline(is, line) || line != "report v1") throw FormatError("report: missing 'report v1' header");
  bool have_params = false;
  bool have_summary = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (have_summary) throw FormatError("report: content after summary line");
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "params") {
      if (!(row >> r.k >> r.n >> r.seed)) throw FormatError("report: bad params line");
      have_params = true;
    } else if (tag == "shard") {
      if (!(row >> r.shard.index >> r.shard.count) || r.shard.count < 1) throw FormatError("report: bad shard line");
    } else if (tag == "fail") {
      SweepFailure f;
      row >> f.kind;
      std::vector<int> vs;
      std::string token;
      while (row >> token && token != ":") vs.push_back(std::stoi(token));
      if (token != ":") throw FormatError("report: bad fail line");
      f.subset = VertexSet(std::span<const int>(vs));
      std::getline(row >> std::ws, f.detail);
      r.failures.push_back(std::move(f));
    } else if (tag == "checked") {
      if (!(row >> r.subsets_checked >> r.ksets_checked)) throw FormatError("report: bad checked line");
    } else if (tag == "h") {
      std::uint64_t h = 0;
      std::uint64_t c = 0;
      if (!(row >> h >> c)) throw FormatError("report: bad h line");
      r.h_histogram[h] = c;
    } else if (tag == "class") {
      std::string name;
      std::uint64_t h = 0;
      std::uint64_t c = 0;
      if (!(row >> name >> h >> c)) throw FormatError("report: bad class line");
      r.classes[name] = {h, c};
    } else if (tag == "sweep") {
      int k = 0;
      int n = 0;
      std::uint64_t seed = 0;
      std::string verdict;
      if (!(row >> k >> n >> seed >> verdict)) throw FormatError("report: bad summary line");
      if (!have_params || k != r.k || n != r.n || seed != r.seed) throw FormatError("report: summary disagrees with params");
      if (verdict == "pass")
        r.verdict = Verdict::pass;
      else if (verdict == "fail")
        r.verdict = Verdict::claim_failure;
      else if (verdict == "inconsistent")
        r.verdict = Verdict::inconsistent;
      else
        throw FormatError("report: unknown verdict " + verdict);
      have_summary = true;
    } else {
      throw FormatError("report: unknown line '" + line + "'");
    }
  }
  if (!have_summary) throw FormatError("report: missing summary line");
  return r;
}

}  // namespace gkn
