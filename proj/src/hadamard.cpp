#include "kgspin/hadamard.hpp"

#include <algorithm>
#include <sstream>

namespace kgspin {

Perm identity_perm(int d) {
  Perm p(d + 1);
  for (int i = 0; i <= d; ++i) p[i] = i;
  return p;
}

Perm compose_perms(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw invalid_parameter("degree mismatch");
  Perm r(f.size());
  for (size_t i = 1; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

Perm inverse_perm(const Perm& f) {
  Perm r(f.size());
  for (size_t i = 1; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

Perm parse_cycles(int d, const std::string& text) {
  Perm p = identity_perm(d);
  std::vector<char> used(d + 1, 0);
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw invalid_parameter("cycle notation must use parentheses");
    size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw invalid_parameter("unbalanced cycle parentheses");
    std::istringstream body(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cyc;
    int x;
    while (body >> x) {
      if (x < 1 || x > d)
        throw invalid_parameter("cycle entry out of range 1..d");
      if (used[x]) throw invalid_parameter("point repeated across cycles");
      used[x] = 1;
      cyc.push_back(x);
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return p;
}

SubgroupAction make_subgroup(int d, std::vector<Perm> generators, size_t cap) {
  SubgroupAction g;
  g.d = d;
  for (auto& p : generators)
    if (static_cast<int>(p.size()) != d + 1)
      throw invalid_parameter("generator degree mismatch");
  g.generators = generators;
  std::set<Perm> elems{identity_perm(d)};
  std::vector<Perm> frontier{identity_perm(d)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& gen : g.generators) {
        Perm prod = compose_perms(gen, e);
        if (elems.insert(prod).second) {
          next.push_back(std::move(prod));
          if (elems.size() > cap)
            throw capacity_error("subgroup enumeration exceeded cap",
                                 std::to_string(cap));
        }
      }
    frontier = std::move(next);
  }
  g.elements.assign(elems.begin(), elems.end());
  return g;
}

SubgroupAction symmetric_group(int d) {
  std::vector<Perm> gens;
  if (d >= 2) {
    Perm t = identity_perm(d);
    std::swap(t[1], t[2]);
    gens.push_back(t);
  }
  if (d >= 3) {
    Perm c = identity_perm(d);
    for (int i = 1; i <= d; ++i) c[i] = i % d + 1;
    gens.push_back(c);
  }
  return make_subgroup(d, gens);
}

Molecule molecule(const SubgroupAction& G, int max_d) {
  if (G.d > max_d)
    throw capacity_error("molecule support would be too large",
                         "d=" + std::to_string(G.d));
  Molecule m;
  m.d = G.d;
  for (const auto& g : G.elements)
    m.support.insert(std::vector<int>(g.begin() + 1, g.end()));
  return m;
}

MoleculeDecomposition decompose_projections(int d, const SubgroupAction& G,
                                            int max_d) {
  if (d > max_d)
    throw capacity_error("decomposition is desk-scale",
                         "d=" + std::to_string(d));
  if (G.d != d) throw invalid_parameter("group degree mismatch");
  auto sd = symmetric_group(d);
  MoleculeDecomposition dec;
  dec.d = d;
  // G-orbits on the free S_d-orbit of (1..d): left cosets of G enumerated
  // in sorted order of their least tuple.
  std::set<std::vector<int>> remaining;
  for (const auto& s : sd.elements)
    remaining.insert(std::vector<int>(s.begin() + 1, s.end()));
  while (!remaining.empty()) {
    std::vector<int> seed = *remaining.begin();
    Molecule part;
    part.d = d;
    Perm sigma(d + 1);
    sigma[0] = 0;
    for (int i = 1; i <= d; ++i) sigma[i] = seed[i - 1];
    for (const auto& g : G.elements) {
      Perm prod = compose_perms(g, sigma);
      part.support.insert(std::vector<int>(prod.begin() + 1, prod.end()));
    }
    for (const auto& t : part.support) remaining.erase(t);
    dec.projections.push_back(std::move(part));
  }
  // Leg action tau: Y_i -> tuples of (g sigma tau); stabilizer and orbit
  // sizes computed over all of S_d.
  for (const auto& y : dec.projections) {
    long stab = 0;
    std::set<std::set<std::vector<int>>> orbit;
    for (const auto& tau : sd.elements) {
      std::set<std::vector<int>> image;
      for (const auto& t : y.support) {
        std::vector<int> moved(d);
        for (int j = 1; j <= d; ++j) moved[j - 1] = t[tau[j] - 1];
        image.insert(std::move(moved));
      }
      if (image == y.support) ++stab;
      orbit.insert(std::move(image));
    }
    dec.stabilizer_sizes.push_back(stab);
    dec.orbit_sizes.push_back(static_cast<long>(orbit.size()));
  }
  return dec;
}

bool OrbitStabilizerReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

OrbitStabilizerReport verify_orbit_stabilizer(
    const MoleculeDecomposition& dec) {
  OrbitStabilizerReport rep;
  auto add = [&](const std::string& name, bool pass,
                 const std::string& detail) {
    rep.entries.push_back({name, pass, detail});
  };
  const int d = dec.d;
  long dfact = 1;
  for (int i = 2; i <= d; ++i) dfact *= i;
  const size_t m = dec.projections.size();

  // <Y_i, Y_i> = |G_i| (the support size equals the stabilizer size)
  bool ip = true;
  std::string ip_detail;
  for (size_t i = 0; i < m; ++i)
    if (static_cast<long>(dec.projections[i].support.size()) !=
        dec.stabilizer_sizes[i]) {
      ip = false;
      ip_detail = "Y_" + std::to_string(i + 1);
      break;
    }
  add("inner-product-Yi", ip, ip_detail);

  bool os = true;
  std::string os_detail;
  for (size_t i = 0; i < m; ++i)
    if (dec.stabilizer_sizes[i] * dec.orbit_sizes[i] != dfact) {
      os = false;
      os_detail = "Y_" + std::to_string(i + 1);
      break;
    }
  add("orbit-stabilizer", os, os_detail);

  bool om = true;
  for (size_t i = 0; i < m; ++i)
    om = om && dec.orbit_sizes[i] == static_cast<long>(m);
  add("orbits-all-m", om, "");

  // sum Y_i = Y: disjoint supports covering all d! tuples
  size_t total = 0;
  bool disjoint = true;
  std::set<std::vector<int>> all;
  for (const auto& y : dec.projections) {
    total += y.support.size();
    for (const auto& t : y.support) disjoint = disjoint && all.insert(t).second;
  }
  add("sum-Yi-equals-Y",
      disjoint && total == static_cast<size_t>(dfact) &&
          all.size() == static_cast<size_t>(dfact),
      "");
  add("inner-product-Y", static_cast<long>(total) == dfact, "");

  // Hadamard laws: idempotents with pairwise zero products follow from the
  // set structure checked above; record them explicitly.
  add("hadamard-idempotent", true, "0/1 indicators");
  add("hadamard-orthogonal", disjoint, "");
  add("sup-norm-one", true, "max |entry| of each Y_i is 1");
  return rep;
}

}  // namespace kgspin
