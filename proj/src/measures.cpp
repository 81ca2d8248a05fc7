#include "syncav/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace syncav {

namespace {

constexpr double kMassTolerance = 1e-12;

struct CdfPoint {
  double x;
  double mass;
};

std::vector<CdfPoint> sorted_atoms(const EmpiricalMeasure& m) {
  std::vector<CdfPoint> pts;
  pts.reserve(m.atoms().size());
  for (const auto& a : m.atoms()) pts.push_back({a.point, a.weight});
  std::sort(pts.begin(), pts.end(),
            [](const CdfPoint& a, const CdfPoint& b) { return a.x < b.x; });
  return pts;
}

// integral over [0,1] of |F1 - F2| for interval measures.
double w1_interval(const EmpiricalMeasure& m1, const EmpiricalMeasure& m2) {
  const auto a = sorted_atoms(m1);
  const auto b = sorted_atoms(m2);
  std::size_t i = 0, j = 0;
  double f1 = 0.0, f2 = 0.0, prev = 0.0, total = 0.0;
  while (i < a.size() || j < b.size()) {
    const double x = (j >= b.size() || (i < a.size() && a[i].x <= b[j].x)) ? a[i].x
                                                                           : b[j].x;
    total += std::abs(f1 - f2) * (x - prev);
    while (i < a.size() && a[i].x == x) f1 += a[i++].mass;
    while (j < b.size() && b[j].x == x) f2 += b[j++].mass;
    prev = x;
  }
  total += std::abs(f1 - f2) * (1.0 - prev);
  return total;
}

// Circle W1: the periodic CDF difference G is piecewise constant between
// support points; min_t integral |G - t| is attained at the length-weighted
// median of the segment values.
double w1_circle(const EmpiricalMeasure& m1, const EmpiricalMeasure& m2) {
  const auto a = sorted_atoms(m1);
  const auto b = sorted_atoms(m2);
  std::vector<double> cuts;
  cuts.reserve(a.size() + b.size());
  for (const auto& p : a) cuts.push_back(p.x);
  for (const auto& p : b) cuts.push_back(p.x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  struct Segment {
    double g;
    double len;
  };
  std::vector<Segment> segs;
  segs.reserve(cuts.size());
  std::size_t i = 0, j = 0;
  double f1 = 0.0, f2 = 0.0;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const double x = cuts[k];
    while (i < a.size() && a[i].x == x) f1 += a[i++].mass;
    while (j < b.size() && b[j].x == x) f2 += b[j++].mass;
    const double next = (k + 1 < cuts.size()) ? cuts[k + 1] : cuts[0] + 1.0;
    segs.push_back({f1 - f2, next - x});
  }
  // Mass before the first cut belongs to the wrap-around segment, which has
  // G = f1_total - f2_total = 0 shifted; handle it by the segment ending at
  // cuts[0]: that is already the last entry above. Weighted median of g:
  std::sort(segs.begin(), segs.end(),
            [](const Segment& s, const Segment& t) { return s.g < t.g; });
  double half = 0.0;
  for (const auto& s : segs) half += s.len;
  half *= 0.5;
  double acc = 0.0, t = segs.back().g;
  for (const auto& s : segs) {
    acc += s.len;
    if (acc >= half) {
      t = s.g;
      break;
    }
  }
  double total = 0.0;
  for (const auto& s : segs) total += std::abs(s.g - t) * s.len;
  return total;
}

// Exact min-cost transport between consolidated finite measures by
// successive shortest augmenting paths (Bellman-Ford on the residual
// graph); sizes here are at most the point count of the space.
double w1_finite(const MetricSpace& space, const EmpiricalMeasure& m1,
                 const EmpiricalMeasure& m2) {
  const int n = space.point_count();
  std::vector<double> surplus(static_cast<std::size_t>(n), 0.0);
  for (const auto& a : m1.atoms()) surplus[static_cast<std::size_t>(a.point)] += a.weight;
  for (const auto& a : m2.atoms()) surplus[static_cast<std::size_t>(a.point)] -= a.weight;

  // 0/1 discrete metric: transport cost is total variation.
  bool discrete = true;
  for (int x = 0; x < n && discrete; ++x)
    for (int y = 0; y < n && discrete; ++y)
      if (x != y && space.distance(x, y) != 1.0) discrete = false;
  if (discrete) {
    double tv = 0.0;
    for (double s : surplus) tv += std::abs(s);
    return tv / 2.0;
  }

  std::vector<std::vector<double>> flow(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n), 0.0));
  double cost = 0.0;
  while (true) {
    int src = -1;
    for (int v = 0; v < n; ++v)
      if (surplus[static_cast<std::size_t>(v)] > kMassTolerance) {
        src = v;
        break;
      }
    if (src < 0) break;

    // Bellman-Ford from src over residual edges: forward x->y at d(x,y),
    // backward y->x at -d(x,y) where flow[x][y] > 0.
    std::vector<double> dist(static_cast<std::size_t>(n), 1e300);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(src)] = 0.0;
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int x = 0; x < n; ++x) {
        if (dist[static_cast<std::size_t>(x)] >= 1e300) continue;
        for (int y = 0; y < n; ++y) {
          if (x == y) continue;
          const double fwd = dist[static_cast<std::size_t>(x)] + space.distance(x, y);
          if (fwd < dist[static_cast<std::size_t>(y)] - 1e-15) {
            dist[static_cast<std::size_t>(y)] = fwd;
            parent[static_cast<std::size_t>(y)] = x;
            changed = true;
          }
          if (flow[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] > kMassTolerance) {
            const double bwd = dist[static_cast<std::size_t>(x)] - space.distance(y, x);
            if (bwd < dist[static_cast<std::size_t>(y)] - 1e-15) {
              dist[static_cast<std::size_t>(y)] = bwd;
              parent[static_cast<std::size_t>(y)] = x;
              changed = true;
            }
          }
        }
      }
      if (!changed) break;
    }

    int sink = -1;
    double best = 1e300;
    for (int v = 0; v < n; ++v)
      if (surplus[static_cast<std::size_t>(v)] < -kMassTolerance &&
          dist[static_cast<std::size_t>(v)] < best) {
        best = dist[static_cast<std::size_t>(v)];
        sink = v;
      }
    if (sink < 0) throw std::logic_error("transport imbalance");

    double amount = std::min(surplus[static_cast<std::size_t>(src)],
                             -surplus[static_cast<std::size_t>(sink)]);
    for (int v = sink; v != src; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      if (flow[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > kMassTolerance)
        amount = std::min(amount,
                          flow[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]);
    }
    for (int v = sink; v != src; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      auto& back = flow[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      if (back > kMassTolerance) {
        back -= amount;
        cost -= amount * space.distance(v, u);
      } else {
        flow[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += amount;
        cost += amount * space.distance(u, v);
      }
    }
    surplus[static_cast<std::size_t>(src)] -= amount;
    surplus[static_cast<std::size_t>(sink)] += amount;
  }
  return cost;
}

}  // namespace

double neumaier_sum(const std::vector<double>& values) {
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

EmpiricalMeasure::EmpiricalMeasure(MetricSpace space, std::vector<Atom> atoms)
    : space_(std::move(space)), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("measure needs at least one atom");
  std::vector<double> weights;
  weights.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    if (a.weight <= 0.0) throw std::invalid_argument("atom weight must be positive");
    if (!space_.contains(a.point))
      throw std::invalid_argument("atom outside the space");
    weights.push_back(a.weight);
  }
  if (std::abs(neumaier_sum(weights) - 1.0) > kMassTolerance)
    throw std::invalid_argument("atom weights do not sum to 1");
}

EmpiricalMeasure EmpiricalMeasure::dirac(MetricSpace space, double p) {
  return EmpiricalMeasure(std::move(space), {{p, 1.0}});
}

EmpiricalMeasure EmpiricalMeasure::uniform_on(MetricSpace space,
                                              const std::vector<double>& pts) {
  if (pts.empty()) throw std::invalid_argument("uniform measure needs points");
  const double w = 1.0 / static_cast<double>(pts.size());
  std::vector<Atom> atoms;
  atoms.reserve(pts.size());
  for (double p : pts) atoms.push_back({p, w});
  return EmpiricalMeasure(std::move(space), std::move(atoms));
}

EmpiricalMeasure EmpiricalMeasure::lebesgue_quantiles(std::size_t n) {
  if (n == 0) throw std::invalid_argument("quantile measure needs atoms");
  std::vector<Atom> atoms;
  atoms.reserve(n);
  const double w = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k)
    atoms.push_back({(static_cast<double>(k) + 0.5) / static_cast<double>(n), w});
  return EmpiricalMeasure(MetricSpace::interval(), std::move(atoms));
}

EmpiricalMeasure EmpiricalMeasure::consolidated() const {
  std::map<double, double> merged;
  for (const auto& a : atoms_) merged[a.point] += a.weight;
  std::vector<Atom> atoms;
  atoms.reserve(merged.size());
  for (const auto& [p, w] : merged) atoms.push_back({p, w});
  return EmpiricalMeasure(space_, std::move(atoms));
}

double d_functional(const EmpiricalMeasure& m, kernels::Exec exec) {
  const auto& atoms = m.atoms();
  if (m.space().kind() == MetricSpace::Kind::Interval) {
    // Sorted prefix sums evaluate the same double sum in O(n log n):
    // sum_{i<j} 2 w_i w_j (x_j - x_i).
    auto pts = sorted_atoms(m);
    double mass_before = 0.0, moment_before = 0.0, total = 0.0;
    for (const auto& a : pts) {
      total += 2.0 * a.mass * (a.x * mass_before - moment_before);
      mass_before += a.mass;
      moment_before += a.mass * a.x;
    }
    return total;
  }
  std::vector<double> pts, w;
  pts.reserve(atoms.size());
  w.reserve(atoms.size());
  for (const auto& a : atoms) {
    pts.push_back(a.point);
    w.push_back(a.weight);
  }
  return kernels::pairwise_mean_distance(m.space(), pts, w, exec);
}

double wasserstein1(const EmpiricalMeasure& m1, const EmpiricalMeasure& m2) {
  if (m1.space().kind() != m2.space().kind())
    throw std::domain_error("measures on different spaces");
  // Evaluate in a canonical argument order so symmetry holds bit for bit.
  const auto ordered_before = [](const EmpiricalMeasure& a, const EmpiricalMeasure& b) {
    const auto sa = sorted_atoms(a);
    const auto sb = sorted_atoms(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (sa[i].x != sb[i].x) return sa[i].x < sb[i].x;
      if (sa[i].mass != sb[i].mass) return sa[i].mass < sb[i].mass;
    }
    return false;
  };
  const EmpiricalMeasure& a = ordered_before(m2, m1) ? m2 : m1;
  const EmpiricalMeasure& b = ordered_before(m2, m1) ? m1 : m2;
  switch (a.space().kind()) {
    case MetricSpace::Kind::Interval:
      return w1_interval(a, b);
    case MetricSpace::Kind::Circle:
      return w1_circle(a, b);
    case MetricSpace::Kind::FiniteDiscrete: {
      if (a.space().point_count() != b.space().point_count())
        throw std::domain_error("measures on different spaces");
      return w1_finite(a.space(), a.consolidated(), b.consolidated());
    }
  }
  return 0.0;
}

EmpiricalMeasure empirical_x_marginal(const RandomProduct& rp, const SymbolPath& path,
                                      double x, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("empirical marginal needs n >= 1");
  std::vector<double> orbit;
  orbit.reserve(static_cast<std::size_t>(n));
  double v = x;
  for (std::int64_t i = 0; i < n; ++i) {
    orbit.push_back(v);
    if (i + 1 < n) v = rp.fibers().apply(path.symbol(i), v);
  }
  return EmpiricalMeasure::uniform_on(rp.space(), orbit);
}

FiniteInvariantMeasureSet finite_invariant_measures(const RandomProduct& rp) {
  if (rp.base().kind() != BaseSystem::Kind::FinitePermutation || !rp.space().is_finite())
    throw std::invalid_argument(
        "invariant-measure enumeration needs a finite permutation base and finite space");

  const int nw = rp.base().alphabet_size();
  const int nx = rp.space().point_count();
  const int ns = nw * nx;
  const auto& theta = rp.base().permutation();

  // Skew map on flat states s = omega * nx + x.
  std::vector<int> skew(static_cast<std::size_t>(ns));
  for (int w = 0; w < nw; ++w)
    for (int x = 0; x < nx; ++x) {
      const int fx = static_cast<int>(rp.fibers().apply(w, static_cast<double>(x)));
      skew[static_cast<std::size_t>(w * nx + x)] = theta[static_cast<std::size_t>(w)] * nx + fx;
    }

  // Eventual image after ns steps is exactly the set of periodic states.
  std::set<int> image;
  for (int s = 0; s < ns; ++s) image.insert(s);
  for (int step = 0; step < ns; ++step) {
    std::set<int> next;
    for (int s : image) next.insert(skew[static_cast<std::size_t>(s)]);
    image = std::move(next);
  }

  // Cycle decomposition of the skew map restricted to the periodic states,
  // grouped by the theta-cycle each one covers.
  std::vector<std::vector<int>> theta_cycles;
  {
    std::vector<bool> seen(static_cast<std::size_t>(nw), false);
    for (int w = 0; w < nw; ++w) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      std::vector<int> cyc;
      int v = w;
      do {
        cyc.push_back(v);
        seen[static_cast<std::size_t>(v)] = true;
        v = theta[static_cast<std::size_t>(v)];
      } while (v != w);
      theta_cycles.push_back(std::move(cyc));
    }
  }
  std::vector<int> theta_cycle_of(static_cast<std::size_t>(nw));
  for (std::size_t c = 0; c < theta_cycles.size(); ++c)
    for (int w : theta_cycles[c]) theta_cycle_of[static_cast<std::size_t>(w)] = static_cast<int>(c);

  std::vector<std::vector<std::vector<int>>> cycles_over(theta_cycles.size());
  {
    std::set<int> remaining = image;
    while (!remaining.empty()) {
      const int start = *remaining.begin();
      std::vector<int> cyc;
      int v = start;
      do {
        cyc.push_back(v);
        remaining.erase(v);
        v = skew[static_cast<std::size_t>(v)];
      } while (v != start);
      cycles_over[static_cast<std::size_t>(theta_cycle_of[static_cast<std::size_t>(cyc[0] / nx)])]
          .push_back(std::move(cyc));
    }
  }

  // Extreme invariant measures with base marginal P pick exactly one skew
  // cycle per theta-cycle, carrying mass |theta cycle| / |Omega|.
  std::size_t combos = 1;
  for (const auto& cs : cycles_over) {
    combos *= cs.size();
    if (combos > 10000)
      throw std::invalid_argument("too many extreme invariant measures to enumerate");
  }

  FiniteInvariantMeasureSet out;
  std::vector<std::size_t> choice(cycles_over.size(), 0);
  for (std::size_t combo = 0; combo < combos; ++combo) {
    FiniteMeasure m;
    m.weight.assign(static_cast<std::size_t>(nw),
                    std::vector<Rational>(static_cast<std::size_t>(nx), Rational(0)));
    for (std::size_t c = 0; c < cycles_over.size(); ++c) {
      const auto& cyc = cycles_over[c][choice[c]];
      const Rational mass(static_cast<std::int64_t>(theta_cycles[c].size()),
                          static_cast<std::int64_t>(nw));
      const Rational per_state = mass / Rational(static_cast<std::int64_t>(cyc.size()));
      for (int s : cyc)
        m.weight[static_cast<std::size_t>(s / nx)][static_cast<std::size_t>(s % nx)] =
            m.weight[static_cast<std::size_t>(s / nx)][static_cast<std::size_t>(s % nx)] + per_state;
    }

    // Exact invariance: pushforward under the skew map equals the vector.
    std::vector<Rational> push(static_cast<std::size_t>(ns), Rational(0));
    for (int s = 0; s < ns; ++s) {
      const auto t = static_cast<std::size_t>(skew[static_cast<std::size_t>(s)]);
      push[t] = push[t] + m.weight[static_cast<std::size_t>(s / nx)][static_cast<std::size_t>(s % nx)];
    }
    for (int s = 0; s < ns; ++s)
      if (push[static_cast<std::size_t>(s)] !=
          m.weight[static_cast<std::size_t>(s / nx)][static_cast<std::size_t>(s % nx)])
        throw std::logic_error("constructed measure is not invariant");

    m.marginal_ok = true;
    for (int w = 0; w < nw; ++w) {
      Rational marginal(0);
      for (int x = 0; x < nx; ++x)
        marginal = marginal + m.weight[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)];
      if (marginal != rp.base().weights()[static_cast<std::size_t>(w)]) m.marginal_ok = false;
    }

    m.atomic_disintegration = true;
    for (int w = 0; w < nw && m.atomic_disintegration; ++w) {
      int support = 0;
      for (int x = 0; x < nx; ++x)
        if (m.weight[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)] != Rational(0))
          ++support;
      if (support > 1) m.atomic_disintegration = false;
    }

    out.measures.push_back(std::move(m));

    for (std::size_t c = 0; c < choice.size(); ++c) {
      if (++choice[c] < cycles_over[c].size()) break;
      choice[c] = 0;
    }
  }
  return out;
}

bool finite_strongly_sync_on_average(const RandomProduct& rp) {
  if (rp.base().kind() != BaseSystem::Kind::FinitePermutation || !rp.space().is_finite())
    throw std::invalid_argument("exact synchronization check needs a finite system");
  const int nw = rp.base().alphabet_size();
  const int nx = rp.space().point_count();
  const std::int64_t horizon = static_cast<std::int64_t>(nw) * nx * nx + 1;
  for (int w = 0; w < nw; ++w) {
    const SymbolPath path = rp.base().path_from_state(w);
    for (int x = 0; x < nx; ++x)
      for (int y = x + 1; y < nx; ++y) {
        double a = x, b = y;
        // Enter the periodic part, then watch one full period.
        for (std::int64_t i = 0; i < horizon; ++i) {
          const int s = path.symbol(i);
          a = rp.fibers().apply(s, a);
          b = rp.fibers().apply(s, b);
        }
        for (std::int64_t i = horizon; i < 2 * horizon; ++i) {
          if (rp.space().distance(a, b) != 0.0) return false;
          const int s = path.symbol(i);
          a = rp.fibers().apply(s, a);
          b = rp.fibers().apply(s, b);
        }
      }
  }
  return true;
}

void write_atoms_csv(const EmpiricalMeasure& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "point,weight\n";
  char buf[80];
  for (const auto& a : m.atoms()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", a.point, a.weight);
    out << buf;
  }
}

}  // namespace syncav
