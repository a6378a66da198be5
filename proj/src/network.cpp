#include "kgspin/network.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace kgspin {

int ContractionNetwork::add_index() { return num_indices_++; }

void ContractionNetwork::add_factor(TwoBox b, int u, int v) {
  if (u < 0 || v < 0 || u >= num_indices_ || v >= num_indices_ || u == v)
    throw invalid_parameter("factor indices out of range");
  factors_.push_back(NetFactor{b, u, v});
}

void ContractionNetwork::set_boundary(std::vector<int> boundary) {
  for (int b : boundary)
    if (b < 0 || b >= num_indices_)
      throw invalid_parameter("boundary index out of range");
  boundary_ = std::move(boundary);
}

std::vector<int> ContractionNetwork::external_indices() const {
  std::vector<int> ext;
  for (int b : boundary_)
    if (std::find(ext.begin(), ext.end(), b) == ext.end()) ext.push_back(b);
  return ext;
}

std::vector<int> ContractionNetwork::internal_indices() const {
  std::set<int> ext(boundary_.begin(), boundary_.end());
  std::vector<int> in;
  for (int i = 0; i < num_indices_; ++i)
    if (!ext.count(i)) in.push_back(i);
  return in;
}

void ContractionNetwork::validate() const {
  std::vector<char> seen(num_indices_, 0);
  for (const auto& f : factors_) seen[f.u] = seen[f.v] = 1;
  for (int i : internal_indices())
    if (!seen[i])
      throw invalid_parameter("internal index " + std::to_string(i) +
                              " occurs in no factor");
}

static TwoBox box_of_name(const std::string& s) {
  if (s == "I") return TwoBox::I;
  if (s == "J") return TwoBox::J;
  if (s == "A") return TwoBox::A;
  if (s == "T") return TwoBox::T;
  throw invalid_parameter("unknown factor name: " + s);
}

static const char* box_name(TwoBox b) {
  switch (b) {
    case TwoBox::I: return "I";
    case TwoBox::J: return "J";
    case TwoBox::A: return "A";
    case TwoBox::T: return "T";
  }
  return "?";
}

ContractionNetwork ContractionNetwork::parse(std::istream& is) {
  ContractionNetwork net;
  std::map<std::string, int> names;
  auto id_of = [&](const std::string& nm) {
    auto it = names.find(nm);
    if (it != names.end()) return it->second;
    int id = net.add_index();
    names.emplace(nm, id);
    return id;
  };
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "factor") {
      std::string box, u, v;
      if (!(ls >> box >> u >> v))
        throw invalid_parameter("bad factor line: " + line);
      net.add_factor(box_of_name(box), id_of(u), id_of(v));
    } else if (kind == "external") {
      std::vector<int> bd;
      std::string nm;
      while (ls >> nm) bd.push_back(id_of(nm));
      net.set_boundary(bd);
    } else {
      throw invalid_parameter("bad network line: " + line);
    }
  }
  net.validate();
  return net;
}

void ContractionNetwork::print(std::ostream& os) const {
  for (const auto& f : factors_)
    os << "factor " << box_name(f.box) << " i" << f.u << " i" << f.v << "\n";
  os << "external";
  for (int b : boundary_) os << " i" << b;
  os << "\n";
}

std::vector<int> choose_order(const ContractionNetwork& net) {
  // Interaction graph over all indices; greedily eliminate internals by
  // min-fill, breaking ties by degree then id.
  const int m = net.num_indices();
  std::vector<std::set<int>> nbr(m);
  for (const auto& f : net.factors()) {
    nbr[f.u].insert(f.v);
    nbr[f.v].insert(f.u);
  }
  std::set<int> remaining;
  for (int i : net.internal_indices()) remaining.insert(i);
  std::vector<int> order;
  while (!remaining.empty()) {
    int best = -1;
    long best_fill = -1, best_deg = -1;
    for (int z : remaining) {
      std::vector<int> ns(nbr[z].begin(), nbr[z].end());
      long fill = 0;
      for (size_t a = 0; a < ns.size(); ++a)
        for (size_t b = a + 1; b < ns.size(); ++b)
          if (!nbr[ns[a]].count(ns[b])) ++fill;
      long deg = static_cast<long>(ns.size());
      if (best == -1 || fill < best_fill ||
          (fill == best_fill && (deg < best_deg ||
                                 (deg == best_deg && z < best)))) {
        best = z;
        best_fill = fill;
        best_deg = deg;
      }
    }
    order.push_back(best);
    std::vector<int> ns(nbr[best].begin(), nbr[best].end());
    for (size_t a = 0; a < ns.size(); ++a)
      for (size_t b = a + 1; b < ns.size(); ++b) {
        nbr[ns[a]].insert(ns[b]);
        nbr[ns[b]].insert(ns[a]);
      }
    for (int x : ns) nbr[x].erase(best);
    nbr[best].clear();
    remaining.erase(best);
  }
  return order;
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<uint8_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Sparse table: scope (sorted index ids) -> assignment -> value.
struct Table {
  std::vector<int> scope;
  std::unordered_map<std::vector<uint8_t>, Rat, VecHash> entries;
};

Table join(const Table& a, const Table& b, uint64_t cap,
           const std::string& ctx) {
  Table r;
  std::vector<int> shared;
  r.scope = a.scope;
  std::vector<std::pair<int, int>> bmap;  // (pos in b.scope, pos in r.scope)
  for (size_t j = 0; j < b.scope.size(); ++j) {
    auto it = std::find(r.scope.begin(), r.scope.end(), b.scope[j]);
    if (it == r.scope.end()) {
      r.scope.push_back(b.scope[j]);
      bmap.emplace_back(static_cast<int>(j),
                        static_cast<int>(r.scope.size()) - 1);
    } else {
      bmap.emplace_back(static_cast<int>(j),
                        static_cast<int>(it - r.scope.begin()));
    }
  }
  // Hash-join on the shared positions of b.
  std::vector<int> b_shared_pos, b_shared_rpos, b_new_pos, b_new_rpos;
  for (auto [bj, rj] : bmap) {
    if (rj < static_cast<int>(a.scope.size())) {
      b_shared_pos.push_back(bj);
      b_shared_rpos.push_back(rj);
    } else {
      b_new_pos.push_back(bj);
      b_new_rpos.push_back(rj);
    }
  }
  std::unordered_map<std::vector<uint8_t>, std::vector<const std::pair<
      const std::vector<uint8_t>, Rat>*>, VecHash>
      bucket;
  for (const auto& e : b.entries) {
    std::vector<uint8_t> key(b_shared_pos.size());
    for (size_t t = 0; t < b_shared_pos.size(); ++t)
      key[t] = e.first[b_shared_pos[t]];
    bucket[key].push_back(&e);
  }
  for (const auto& ea : a.entries) {
    std::vector<uint8_t> key(b_shared_rpos.size());
    for (size_t t = 0; t < b_shared_rpos.size(); ++t)
      key[t] = ea.first[b_shared_rpos[t]];
    auto it = bucket.find(key);
    if (it == bucket.end()) continue;
    for (const auto* eb : it->second) {
      std::vector<uint8_t> asg(r.scope.size());
      std::copy(ea.first.begin(), ea.first.end(), asg.begin());
      for (size_t t = 0; t < b_new_pos.size(); ++t)
        asg[b_new_rpos[t]] = eb->first[b_new_pos[t]];
      r.entries[std::move(asg)] += ea.second * eb->second;
      if (r.entries.size() > cap)
        throw capacity_error("intermediate table exceeds cap", ctx);
    }
  }
  return r;
}

Table sum_index(const Table& t, int z) {
  auto it = std::find(t.scope.begin(), t.scope.end(), z);
  if (it == t.scope.end()) return t;
  size_t pos = static_cast<size_t>(it - t.scope.begin());
  Table r;
  r.scope = t.scope;
  r.scope.erase(r.scope.begin() + pos);
  for (const auto& e : t.entries) {
    std::vector<uint8_t> asg = e.first;
    asg.erase(asg.begin() + pos);
    r.entries[std::move(asg)] += e.second;
  }
  for (auto it2 = r.entries.begin(); it2 != r.entries.end();)
    it2 = (it2->second == 0) ? r.entries.erase(it2) : std::next(it2);
  return r;
}

Table factor_table(const NetFactor& f, const KneserGraph& g,
                   const std::map<int, int>& pins) {
  Table t;
  const int d = g.num_vertices();
  auto pu = pins.find(f.u), pv = pins.find(f.v);
  auto value = [&](int x, int y) -> Rat {
    switch (f.box) {
      case TwoBox::I: return x == y ? 1 : 0;
      case TwoBox::J: return 1;
      case TwoBox::A: return g.adjacent(x, y) ? 1 : 0;
      case TwoBox::T: return (x != y && !g.adjacent(x, y)) ? 1 : 0;
    }
    return 0;
  };
  const bool u_pinned = pu != pins.end(), v_pinned = pv != pins.end();
  if (!u_pinned) t.scope.push_back(f.u);
  if (!v_pinned && f.v != f.u) t.scope.push_back(f.v);
  for (int x = 0; x < d; ++x) {
    if (u_pinned && x != pu->second) continue;
    for (int y = 0; y < d; ++y) {
      if (v_pinned && y != pv->second) continue;
      Rat v = value(x, y);
      if (v == 0) continue;
      std::vector<uint8_t> asg;
      if (!u_pinned) asg.push_back(static_cast<uint8_t>(x));
      if (!v_pinned && f.v != f.u) asg.push_back(static_cast<uint8_t>(y));
      t.entries[asg] += v;
    }
  }
  return t;
}

// Eliminates the given indices from the factor list; returns the joined
// table over everything else.
Table eliminate(const ContractionNetwork& net, const KneserGraph& g,
                const std::map<int, int>& pins, const std::vector<int>& order,
                uint64_t cap) {
  std::vector<Table> tables;
  for (const auto& f : net.factors())
    tables.push_back(factor_table(f, g, pins));
  if (tables.empty()) tables.push_back(Table{{}, {{{}, Rat(1)}}});

  auto touches = [](const Table& t, int z) {
    return std::find(t.scope.begin(), t.scope.end(), z) != t.scope.end();
  };
  for (int z : order) {
    std::vector<Table> touching, rest;
    for (auto& t : tables)
      (touches(t, z) ? touching : rest).push_back(std::move(t));
    if (touching.empty()) {
      // Free index: contributes a factor d (or 1 when pinned).
      Table unit{{}, {{{}, pins.count(z) ? Rat(1) : Rat(g.num_vertices())}}};
      rest.push_back(std::move(unit));
      tables = std::move(rest);
      continue;
    }
    std::stable_sort(touching.begin(), touching.end(),
                     [](const Table& x, const Table& y) {
                       return x.entries.size() < y.entries.size();
                     });
    Table acc = std::move(touching.front());
    for (size_t i = 1; i < touching.size(); ++i)
      acc = join(acc, touching[i], cap, "index " + std::to_string(z));
    acc = sum_index(acc, z);
    rest.push_back(std::move(acc));
    tables = std::move(rest);
  }
  Table out = std::move(tables.front());
  for (size_t i = 1; i < tables.size(); ++i)
    out = join(out, tables[i], cap, "final join");
  return out;
}

std::vector<int> effective_order(const ContractionNetwork& net,
                                 const EvalOptions& opts) {
  if (!opts.order.empty()) {
    auto in = net.internal_indices();
    std::vector<int> sorted = opts.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != in)
      throw invalid_parameter(
          "order must be a permutation of the internal indices");
    return opts.order;
  }
  return choose_order(net);
}

}  // namespace

Rat evaluate_at(const ContractionNetwork& net, const KneserGraph& g,
                const std::vector<int>& boundary_vertices,
                const EvalOptions& opts) {
  net.validate();
  if (boundary_vertices.size() != net.boundary().size())
    throw invalid_parameter("boundary pin length mismatch");
  std::map<int, int> pins;
  for (size_t i = 0; i < boundary_vertices.size(); ++i) {
    int id = net.boundary()[i], val = boundary_vertices[i];
    if (val < 0 || val >= g.num_vertices())
      throw invalid_parameter("pinned vertex out of range");
    auto it = pins.find(id);
    if (it != pins.end() && it->second != val) return Rat(0);  // GHZ clash
    pins[id] = val;
  }
  auto order = effective_order(net, opts);
  Table t = eliminate(net, g, pins, order, opts.table_cap);
  if (!t.scope.empty())
    throw invalid_parameter("internal error: unpinned scope after pinning");
  Rat acc(0);
  for (const auto& e : t.entries) acc += e.second;
  return acc;
}

InvariantTensor evaluate(const ContractionNetwork& net, const KneserGraph& g,
                         EvalMode mode, const EvalOptions& opts) {
  net.validate();
  const int arity = static_cast<int>(net.boundary().size());
  if (mode == EvalMode::Auto)
    mode = arity <= 4 ? EvalMode::PerOrbit : EvalMode::SparseForward;

  InvariantTensor out(arity, g.n());
  if (mode == EvalMode::PerOrbit) {
    for (const Pattern& p : enumerate_patterns(arity, g.n())) {
      // Representative tuple: realize pattern labels as the points 1..s.
      std::vector<int> verts;
      verts.reserve(arity);
      for (const auto& pr : p.pairs)
        verts.push_back(g.index_of(Vertex(pr[0], pr[1])));
      Rat v = evaluate_at(net, g, verts, opts);
      if (v != 0) out.set(p, v);
    }
    return out;
  }

  auto order = effective_order(net, opts);
  Table t = eliminate(net, g, {}, order, opts.table_cap);
  // Externals not touched by any factor range freely.
  for (int b : net.external_indices()) {
    if (std::find(t.scope.begin(), t.scope.end(), b) != t.scope.end())
      continue;
    Table range;
    range.scope = {b};
    for (int x = 0; x < g.num_vertices(); ++x)
      range.entries[{static_cast<uint8_t>(x)}] = 1;
    t = join(t, range, opts.table_cap, "free external");
  }
  std::map<int, size_t> pos;  // index id -> scope position
  for (size_t i = 0; i < t.scope.size(); ++i) pos[t.scope[i]] = i;
  for (const auto& e : t.entries) {
    if (e.second == 0) continue;
    PairTuple tuple;
    tuple.reserve(arity);
    for (int b : net.boundary()) {
      const Vertex& v = g.vertex(e.first[pos[b]]);
      tuple.push_back({uint8_t(v.a), uint8_t(v.b)});
    }
    Pattern p = canonicalize(tuple);
    Rat prev = out.value(p);
    if (prev != 0 && prev != e.second)
      throw invalid_parameter("internal error: non-invariant network value");
    out.set(p, e.second);
  }
  return out;
}

}  // namespace kgspin
