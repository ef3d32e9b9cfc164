#include "gramclass/quiver.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

#include "gramclass/error.hpp"

namespace gramclass {

void validate(const Quiver& q) {
  check(q.vertices >= 1, Errc::InvalidVertex, "quiver needs at least one vertex");
  for (const auto& [s, t] : q.arrows) {
    check(s >= 1 && s <= q.vertices && t >= 1 && t <= q.vertices, Errc::InvalidVertex,
          "arrow endpoint out of range");
    check(s != t, Errc::HasLoop, "quiver has a loop");
  }
  // Connectivity of the underlying graph.
  std::vector<char> seen(size_t(q.vertices) + 1, 0);
  std::queue<int> bfs;
  bfs.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (const auto& [s, t] : q.arrows) {
      int other = -1;
      if (s == v) other = t;
      else if (t == v) other = s;
      if (other != -1 && !seen[size_t(other)]) {
        seen[size_t(other)] = 1;
        ++reached;
        bfs.push(other);
      }
    }
  }
  check(reached == q.vertices, Errc::Disconnected, "quiver is not connected");
}

IntMatrix incidence(const Quiver& q) {
  IntMatrix m(q.m(), q.n());
  for (int i = 0; i < q.n(); ++i) {
    m.at(q.arrows[size_t(i)].first - 1, i) += 1;
    m.at(q.arrows[size_t(i)].second - 1, i) -= 1;
  }
  return m;
}

GramPair gram(const Quiver& q) {
  IntMatrix I = incidence(q);
  IntMatrix G = I.transposed() * I;
  IntMatrix Ghat(q.n(), q.n());
  for (int i = 0; i < q.n(); ++i) {
    Ghat.at(i, i) = 1;
    for (int j = i + 1; j < q.n(); ++j) Ghat.at(i, j) = G.at(i, j);
  }
  return {G, Ghat};
}

int Walk::target(const Quiver& q) const {
  int v = start;
  for (const auto& [a, sgn] : steps) {
    const auto& [s, t] = q.arrows[size_t(a) - 1];
    v = sgn > 0 ? t : s;
  }
  return v;
}

Walk Walk::reversed(const Quiver& q) const {
  Walk r;
  r.start = target(q);
  r.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) r.steps.push_back({it->first, -it->second});
  return r;
}

std::string Walk::str() const {
  if (steps.empty()) return "(trivial)";
  std::ostringstream os;
  for (size_t i = 0; i < steps.size(); ++i) {
    if (i) os << ' ';
    os << steps[i].first;
    if (steps[i].second < 0) os << "^-1";
  }
  return os.str();
}

void validate_walk(const Quiver& q, const Walk& w) {
  check(w.start >= 1 && w.start <= q.vertices, Errc::InvalidVertex, "walk start out of range");
  int v = w.start;
  for (const auto& [a, sgn] : w.steps) {
    check(a >= 1 && a <= q.n(), Errc::InvalidWalk, "walk uses an unknown arrow");
    check(sgn == 1 || sgn == -1, Errc::InvalidWalk, "walk step sign must be +1 or -1");
    const auto& [s, t] = q.arrows[size_t(a) - 1];
    int from = sgn > 0 ? s : t;
    check(from == v, Errc::InvalidWalk, "walk steps do not chain");
    v = sgn > 0 ? t : s;
  }
}

Walk structural_walk(const Quiver& q, int v, WalkDir dir) {
  check(v >= 1 && v <= q.vertices, Errc::InvalidVertex, "walk start out of range");
  Walk w;
  w.start = v;
  int cur = v;
  int prev = dir == WalkDir::Descending ? q.n() + 1 : 0;
  while (true) {
    int found = 0, sign = 0;
    if (dir == WalkDir::Descending) {
      for (int a = prev - 1; a >= 1 && !found; --a) {
        const auto& [s, t] = q.arrows[size_t(a) - 1];
        if (s == cur) { found = a; sign = 1; }
        else if (t == cur) { found = a; sign = -1; }
      }
    } else {
      for (int a = prev + 1; a <= q.n() && !found; ++a) {
        const auto& [s, t] = q.arrows[size_t(a) - 1];
        if (s == cur) { found = a; sign = 1; }
        else if (t == cur) { found = a; sign = -1; }
      }
    }
    if (!found) break;
    w.steps.push_back({found, sign});
    const auto& [s, t] = q.arrows[size_t(found) - 1];
    cur = sign > 0 ? t : s;
    prev = found;
  }
  return w;
}

Permutation Permutation::identity(int m) {
  Permutation p;
  p.img.resize(size_t(m));
  for (int i = 0; i < m; ++i) p.img[size_t(i)] = i + 1;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img.assign(img.size(), 0);
  for (int i = 0; i < size(); ++i) p.img[size_t(img[size_t(i)] - 1)] = i + 1;
  return p;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  check(size() == rhs.size(), Errc::ShapeMismatch, "permutation size mismatch");
  Permutation p;
  p.img.resize(img.size());
  for (int v = 1; v <= size(); ++v) p.img[size_t(v) - 1] = apply(rhs.apply(v));
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<char> seen(img.size() + 1, 0);
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= size(); ++v) {
    if (seen[size_t(v)]) continue;
    std::vector<int> cycle;
    int u = v;
    while (!seen[size_t(u)]) {
      seen[size_t(u)] = 1;
      cycle.push_back(u);
      u = apply(u);
    }
    out.push_back(std::move(cycle));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

Partition Permutation::cycle_type() const {
  Partition p;
  for (const auto& c : cycles()) p.parts.push_back(int(c.size()));
  return p;
}

IntMatrix Permutation::matrix() const {
  IntMatrix m(size(), size());
  for (int j = 1; j <= size(); ++j) m.at(apply(j) - 1, j - 1) = 1;
  return m;
}

XiResult xi_and_cycle_type(const Quiver& q) {
  XiResult r;
  r.xi.img.resize(size_t(q.m()));
  for (int v = 1; v <= q.m(); ++v)
    r.xi.img[size_t(v) - 1] = structural_walk(q, v, WalkDir::Descending).target(q);
  r.orbits = r.xi.cycles();
  r.cycle_type = r.xi.cycle_type();
  return r;
}

IntMatrix coxeter_laplacian(const Quiver& q) {
  IntMatrix I = incidence(q);
  IntMatrix ghat_inv = inverse_unimodular(gram(q).Ghat);
  return IntMatrix::identity(q.m()) - I * ghat_inv * I.transposed();
}

Quiver inverse_quiver(const Quiver& q) {
  const int n = q.n();
  std::vector<int> src(size_t(n) + 1, 0), tgt(size_t(n) + 1, 0);
  for (int v = 1; v <= q.m(); ++v) {
    Walk w = structural_walk(q, v, WalkDir::Descending);
    int end = w.target(q);
    for (const auto& [a, sgn] : w.steps) {
      if (sgn < 0) src[size_t(a)] = end;
      else tgt[size_t(a)] = end;
    }
  }
  for (int i = 1; i <= n; ++i)
    check(src[size_t(i)] >= 1 && tgt[size_t(i)] >= 1, Errc::Internal,
          "a signed arrow is not covered by the descending walks");
  Quiver out;
  out.vertices = q.m();
  out.arrows.reserve(size_t(n));
  for (int i = 1; i <= n; ++i) out.arrows.push_back({src[size_t(i)], tgt[size_t(i)]});
  return out;
}

Quiver transform(const Quiver& q, const Permutation& rho, bool flip) {
  check(rho.size() == q.m(), Errc::ShapeMismatch, "permutation size mismatch");
  Quiver out;
  out.vertices = q.vertices;
  out.arrows.reserve(q.arrows.size());
  for (const auto& [s, t] : q.arrows) {
    int a = rho.apply(s), b = rho.apply(t);
    out.arrows.push_back(flip ? std::pair{b, a} : std::pair{a, b});
  }
  return out;
}

IntVector incidence_vector(const Walk& w, int n) {
  IntVector v(size_t(n), Int(0));
  for (const auto& [a, sgn] : w.steps) v[size_t(a) - 1] += sgn;
  return v;
}

Walk connecting_walk(const Quiver& q, int u, int v) {
  check(u >= 1 && u <= q.vertices && v >= 1 && v <= q.vertices, Errc::InvalidVertex,
        "connecting walk endpoint out of range");
  // BFS with neighbors visited in arrow-index order, forward first.
  std::vector<int> par_vertex(size_t(q.vertices) + 1, 0);
  std::vector<std::pair<int, int>> par_step(size_t(q.vertices) + 1, {0, 0});
  std::vector<char> seen(size_t(q.vertices) + 1, 0);
  std::queue<int> bfs;
  bfs.push(u);
  seen[size_t(u)] = 1;
  while (!bfs.empty() && !seen[size_t(v)]) {
    int cur = bfs.front();
    bfs.pop();
    for (int a = 1; a <= q.n(); ++a) {
      const auto& [s, t] = q.arrows[size_t(a) - 1];
      int other = -1, sgn = 0;
      if (s == cur) { other = t; sgn = 1; }
      else if (t == cur) { other = s; sgn = -1; }
      if (other == -1 || seen[size_t(other)]) continue;
      seen[size_t(other)] = 1;
      par_vertex[size_t(other)] = cur;
      par_step[size_t(other)] = {a, sgn};
      bfs.push(other);
    }
  }
  check(seen[size_t(v)], Errc::Disconnected, "no path between the requested vertices");
  Walk w;
  w.start = u;
  std::vector<std::pair<int, int>> rev;
  for (int cur = v; cur != u; cur = par_vertex[size_t(cur)]) rev.push_back(par_step[size_t(cur)]);
  w.steps.assign(rev.rbegin(), rev.rend());
  return w;
}

std::vector<IntVector> beta_vectors(const Quiver& q) {
  XiResult xr = xi_and_cycle_type(q);
  IntMatrix idag = incidence(inverse_quiver(q));
  std::vector<IntVector> out;
  out.reserve(xr.orbits.size());
  for (const auto& orbit : xr.orbits) {
    IntVector b(size_t(q.n()), Int(0));
    for (int v : orbit)
      for (int j = 0; j < q.n(); ++j) b[size_t(j)] -= idag.at(v - 1, j);
    out.push_back(std::move(b));
  }
  return out;
}

Quiver random_quiver(int m, int n, std::uint64_t seed) {
  check(m >= 2, Errc::InfeasibleShape, "need at least two vertices");
  check(n >= m - 1, Errc::InfeasibleShape, "need at least m-1 arrows for connectivity");
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int bound) { return int(rng() % std::uint64_t(bound)); };
  std::vector<std::pair<int, int>> arrows;
  arrows.reserve(size_t(n));
  // Random spanning tree: attach each new vertex to an earlier one.
  for (int k = 2; k <= m; ++k) {
    int other = 1 + draw(k - 1);
    if (draw(2) == 0) arrows.push_back({other, k});
    else arrows.push_back({k, other});
  }
  for (int e = 0; e < n - (m - 1); ++e) {
    int s = 1 + draw(m);
    int t = 1 + draw(m - 1);
    if (t >= s) ++t;
    arrows.push_back({s, t});
  }
  // Shuffle the arrow order; order matters for all walk-based invariants.
  for (int i = n - 1; i > 0; --i) {
    int j = draw(i + 1);
    std::swap(arrows[size_t(i)], arrows[size_t(j)]);
  }
  Quiver q;
  q.vertices = m;
  q.arrows = std::move(arrows);
  return q;
}

}  // namespace gramclass
