#include "leechorb/root_system.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace leechorb {

std::string RootSystemReport::dynkin_type() const {
  std::string out;
  for (const auto& c : components) out += (out.empty() ? "" : "+") + c.label();
  return out;
}

namespace {

bool is_positive(const LatticeVector& v) { return v > LatticeVector{}; }

// Integer 2(a|b)/(b|b), or nullopt when not integral.
std::optional<long> pairing(const LatticeVector& a, const LatticeVector& b) {
  const Rational q = 2 * inner(a, b) / norm(b);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

}  // namespace

RootSystemReport identify_root_system(const std::vector<LatticeVector>& input) {
  std::set<LatticeVector> set(input.begin(), input.end());
  if (set.size() != input.size()) throw NotARootSystem("duplicate roots in input");
  if (set.count(LatticeVector{})) throw NotARootSystem("zero vector in input");
  if (set.empty()) throw NotARootSystem("empty root set");

  for (const auto& a : set) {
    if (!set.count(-a)) throw NotARootSystem("not closed under negation: " + a.to_string());
    for (const auto& b : set) {
      const auto p = pairing(a, b);
      if (!p) throw NotARootSystem("non-integral Cartan pairing between " + a.to_string() + " and " + b.to_string());
      if (!set.count(a - *p * b)) throw NotARootSystem("not closed under reflection in " + b.to_string());
      if (*p == -1 && !set.count(a + b)) throw NotARootSystem("a + b missing for pairing -1");
    }
  }

  std::vector<LatticeVector> positive;
  for (const auto& a : set)
    if (is_positive(a)) positive.push_back(a);
  std::set<LatticeVector> sums;
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i + 1; j < positive.size(); ++j) sums.insert(positive[i] + positive[j]);
  std::vector<LatticeVector> simple;
  for (const auto& a : positive)
    if (!sums.count(a)) simple.push_back(a);

  const std::size_t n = simple.size();
  {
    IntMatrix all(0, kLength);
    for (const auto& r : set) all.append_row(r.to_integers());
    if (rank(all) != n) throw NotARootSystem("simple roots do not form a basis of the root span");
  }

  // Order the simple roots along the diagram: depth-first from the smallest
  // leaf of each component, neighbours in lexicographic order.
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && inner(simple[i], simple[j]) != 0) adj[i].push_back(j);
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    seen[v] = true;
    order.push_back(v);
    for (auto w : adj[v])
      if (!seen[w]) dfs(w);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    // smallest leaf in i's component (simple is sorted, so scan upward)
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack = {i};
    std::vector<bool> mark(n, false);
    mark[i] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto w : adj[v])
        if (!mark[w]) mark[w] = true, stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    std::size_t start = comp.front();
    for (auto v : comp)
      if (adj[v].size() <= 1) {
        start = v;
        break;
      }
    dfs(start);
  }

  RootSystemReport rep;
  rep.roots.assign(set.begin(), set.end());
  for (auto idx : order) rep.simple_roots.push_back(simple[idx]);
  rep.cartan_matrix = Matrix<long>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = pairing(rep.simple_roots[i], rep.simple_roots[j]);
      rep.cartan_matrix(i, j) = *p;
    }
  rep.components = classify_cartan(rep.cartan_matrix);
  std::size_t expected = 0;
  for (const auto& c : rep.components) expected += static_cast<std::size_t>(root_count(c));
  if (expected != rep.roots.size())
    throw NotARootSystem("root count " + std::to_string(rep.roots.size()) + " does not match type " +
                         rep.dynkin_type());
  Rational longest = 0;
  for (const auto& r : rep.roots) longest = std::max(longest, norm(r));
  rep.level = 2 / longest;
  return rep;
}

std::vector<DynkinComponent> classify_cartan(const Matrix<long>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw NotARootSystem("Cartan matrix not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2) throw NotARootSystem("Cartan diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0 || a(i, j) < -3) throw NotARootSystem("Cartan off-diagonal entry out of range");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw NotARootSystem("Cartan matrix zero pattern not symmetric");
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<DynkinComponent> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack = {s};
    seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && a(v, w) != 0 && !seen[w]) seen[w] = true, stack.push_back(w);
    }
    const int m = static_cast<int>(comp.size());
    std::vector<int> degree(comp.size(), 0);
    int edges = 0;
    int multi_edges = 0;
    long max_mult = 1;
    std::size_t mu = 0, mv = 0;  // endpoints of the multiple edge
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        const long mult = a(comp[i], comp[j]) * a(comp[j], comp[i]);
        if (mult == 0) continue;
        if (mult > 3) throw NotARootSystem("Cartan product exceeds 3");
        ++edges;
        ++degree[i];
        ++degree[j];
        if (mult > 1) {
          ++multi_edges;
          max_mult = std::max(max_mult, mult);
          mu = i;
          mv = j;
        }
      }
    if (edges != m - 1) throw NotARootSystem("Dynkin diagram has a cycle");
    const int max_deg = m ? *std::max_element(degree.begin(), degree.end()) : 0;

    if (multi_edges > 1) throw NotARootSystem("more than one multiple bond");
    if (multi_edges == 1) {
      if (max_deg > 2) throw NotARootSystem("branched diagram with a multiple bond");
      if (max_mult == 3) {
        if (m != 2) throw NotARootSystem("triple bond in a diagram of rank > 2");
        out.push_back({'G', 2});
        continue;
      }
      if (m == 2) {
        out.push_back({'B', 2});
        continue;
      }
      const bool u_end = degree[mu] == 1;
      const bool v_end = degree[mv] == 1;
      if (!u_end && !v_end) {
        if (m != 4) throw NotARootSystem("interior double bond outside F4");
        out.push_back({'F', 4});
        continue;
      }
      const std::size_t end = u_end ? mu : mv;
      const std::size_t other = u_end ? mv : mu;
      // The end node is short iff a(other, end) = -2.
      out.push_back({a(comp[other], comp[end]) == -2 ? 'B' : 'C', m});
      continue;
    }

    if (max_deg <= 2) {
      out.push_back({'A', m});
      continue;
    }
    if (max_deg > 3 || std::count(degree.begin(), degree.end(), 3) != 1)
      throw NotARootSystem("unsupported branching in Dynkin diagram");
    const auto centre = static_cast<std::size_t>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
    std::vector<int> arms;
    for (std::size_t j = 0; j < comp.size(); ++j) {
      if (j == centre || a(comp[centre], comp[j]) == 0) continue;
      int len = 1;
      std::size_t prev = centre, cur = j;
      for (;;) {
        std::size_t next = comp.size();
        for (std::size_t t = 0; t < comp.size(); ++t)
          if (t != prev && t != cur && a(comp[cur], comp[t]) != 0) next = t;
        if (next == comp.size()) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
      out.push_back({'D', m});
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      out.push_back({'E', m});
    else
      throw NotARootSystem("branched diagram is not of type D or E");
  }
  std::sort(out.begin(), out.end(),
            [](const DynkinComponent& x, const DynkinComponent& y) {
              return std::tie(x.series, x.rank) < std::tie(y.series, y.rank);
            });
  return out;
}

int dual_coxeter_number(const DynkinComponent& t) {
  switch (t.series) {
    case 'A': return t.rank + 1;
    case 'B': return 2 * t.rank - 1;
    case 'C': return t.rank + 1;
    case 'D': return 2 * t.rank - 2;
    case 'E': return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    case 'F': return 9;
    case 'G': return 4;
    default: throw std::invalid_argument("unknown Dynkin series");
  }
}

int lie_algebra_dimension(const DynkinComponent& t) {
  const int n = t.rank;
  switch (t.series) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
    default: throw std::invalid_argument("unknown Dynkin series");
  }
}

int root_count(const DynkinComponent& t) { return lie_algebra_dimension(t) - t.rank; }

DynkinComponent parse_dynkin(const std::string& label) {
  if (label.size() < 2 || std::string("ABCDEFG").find(label[0]) == std::string::npos)
    throw std::invalid_argument("bad Dynkin label '" + label + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad Dynkin label '" + label + "'");
  }
  const DynkinComponent t{label[0], rank};
  const bool valid = (t.series == 'A' && rank >= 1) || (t.series == 'B' && rank >= 2) ||
                     (t.series == 'C' && rank >= 3) || (t.series == 'D' && rank >= 4) ||
                     (t.series == 'E' && rank >= 6 && rank <= 8) || (t.series == 'F' && rank == 4) ||
                     (t.series == 'G' && rank == 2);
  if (!valid) throw std::invalid_argument("no simple Lie algebra of type '" + label + "'");
  return t;
}

Rational level_from_identity(int dim_v1, const DynkinComponent& type) {
  if (dim_v1 <= 24) throw std::domain_error("level identity needs dim V_1 > 24");
  return make_rational(dual_coxeter_number(type) * 24, dim_v1 - 24);
}

}  // namespace leechorb
