#include "tough/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace tough {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t dim) {
  if (a.size() != dim * dim) throw SpectralError("jacobi_eigenvalues: matrix size mismatch");
  const double tol = 1e-10 * static_cast<double>(std::max<std::size_t>(dim, 1));
  constexpr int kMaxSweeps = 100;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * dim + j]; };

  auto max_off = [&] {
    double m = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) m = std::max(m, std::abs(at(i, j)));
    return m;
  };

  int sweep = 0;
  while (max_off() >= tol) {
    if (++sweep > kMaxSweeps) throw SpectralError("jacobi_eigenvalues: no convergence after 100 sweeps");
    for (std::size_t p = 0; p + 1 < dim; ++p)
      for (std::size_t q = p + 1; q < dim; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = at(p, p), aqq = at(q, q);
        const double th = (aqq - app) / (2.0 * apq);
        const double t = (th >= 0 ? 1.0 : -1.0) / (std::abs(th) + std::sqrt(th * th + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < dim; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
  }
  std::vector<double> ev(dim);
  for (std::size_t i = 0; i < dim; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

std::vector<EigenGroup> group_eigenvalues(const std::vector<double>& descending, double tol) {
  std::vector<EigenGroup> out;
  std::size_t i = 0;
  while (i < descending.size()) {
    std::size_t j = i + 1;
    while (j < descending.size() && descending[j - 1] - descending[j] <= tol) ++j;
    double sum = 0.0;
    for (std::size_t k = i; k < j; ++k) sum += descending[k];
    EigenGroup grp;
    grp.value = sum / static_cast<double>(j - i);
    grp.multiplicity = j - i;
    const double r = std::round(grp.value);
    if (std::abs(grp.value - r) < 1e-6) {
      grp.integer = static_cast<long long>(r);
      grp.value = r;
    }
    out.push_back(grp);
    i = j;
  }
  return out;
}

Spectrum spectrum(const Graph& g, double group_tol) {
  const std::size_t n = g.order();
  if (n == 0) throw SpectralError("spectrum: empty graph");
  std::vector<double> a(n * n, 0.0);
  for (auto [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1.0;
  Spectrum sp;
  sp.eigenvalues = jacobi_eigenvalues(std::move(a), n);
  sp.grouped = group_eigenvalues(sp.eigenvalues, group_tol);
  sp.group_tol = group_tol;
  return sp;
}

LambdaSummary lambda_summary(const Spectrum& sp, std::size_t k) {
  if (sp.eigenvalues.size() < 2) throw SpectralError("lambda_summary: need at least two eigenvalues");
  const double kd = static_cast<double>(k);
  if (std::abs(sp.eigenvalues.front() - kd) > 1e-8 * std::max(1.0, kd))
    throw SpectralError("lambda_summary: largest eigenvalue " + std::to_string(sp.eigenvalues.front()) +
                        " differs from the degree " + std::to_string(k));
  LambdaSummary s;
  s.lambda2 = sp.eigenvalues[1];
  s.lambda_min = sp.eigenvalues.back();
  s.lambda_abs = std::max(std::abs(s.lambda2), std::abs(s.lambda_min));
  return s;
}

double theta(std::size_t k) {
  if (k < 2) throw std::invalid_argument("theta: k must be at least 2");
  const double kd = static_cast<double>(k);
  const double extra = (k % 2 == 1) ? 8.0 : 12.0;
  return (kd - 2.0 + std::sqrt(kd * kd + extra)) / 2.0;
}

QuotientMatrix check_equitable(const Graph& g, const std::vector<VertexSet>& parts) {
  const std::size_t n = g.order();
  VertexSet seen(n);
  for (const auto& p : parts) {
    if (p.universe() != n) throw NotEquitable("part over a different vertex universe");
    if (p.empty()) throw NotEquitable("empty part");
    if (bits::intersects(seen.words(), p.words())) throw NotEquitable("parts overlap");
    seen |= p;
  }
  if (seen.size() != n) throw NotEquitable("parts do not cover every vertex");

  QuotientMatrix q;
  q.size = parts.size();
  q.entries.assign(q.size * q.size, 0.0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Vertex first = bits::find_first(parts[i].words());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const std::size_t ref = bits::count_and(g.row(first), parts[j].words());
      bits::for_each(parts[i].words(), [&](Vertex v) {
        const std::size_t c = bits::count_and(g.row(v), parts[j].words());
        if (c != ref)
          throw NotEquitable("vertices " + std::to_string(first) + " and " + std::to_string(v) + " of part " +
                             std::to_string(i) + " have " + std::to_string(ref) + " vs " + std::to_string(c) +
                             " neighbours in part " + std::to_string(j));
      });
      q.entries[i * q.size + j] = static_cast<double>(ref);
    }
  }
  return q;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
  std::vector<double> roots;
  if (q.size == 1) {
    roots = {q.at(0, 0)};
  } else if (q.size == 2) {
    const double tr = q.at(0, 0) + q.at(1, 1);
    const double det = q.at(0, 0) * q.at(1, 1) - q.at(0, 1) * q.at(1, 0);
    const double disc = std::max(0.0, tr * tr - 4.0 * det);
    roots = {(tr + std::sqrt(disc)) / 2.0, (tr - std::sqrt(disc)) / 2.0};
  } else if (q.size == 3) {
    // x^3 - c2 x^2 + c1 x - c0 with c2 = trace, c1 = sum of principal 2x2 minors, c0 = det.
    auto m = [&](std::size_t i, std::size_t j) { return q.at(i, j); };
    const double c2 = m(0, 0) + m(1, 1) + m(2, 2);
    const double c1 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                      m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const double c0 = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                      m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                      m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    // Depressed cubic y^3 + p y + r with x = y + c2/3.
    const double shift = c2 / 3.0;
    const double p = c1 - c2 * c2 / 3.0;
    const double r = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;
    if (std::abs(p) < 1e-14) {
      const double y = std::cbrt(-r);
      roots = {y + shift, y + shift, y + shift};
    } else {
      // Real spectrum: p <= 0, clamp the acos argument against rounding.
      const double mag = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
      const double arg = std::clamp(3.0 * r / (2.0 * p) * std::sqrt(std::max(0.0, -3.0 / p)), -1.0, 1.0);
      const double phi = std::acos(arg) / 3.0;
      for (int j = 0; j < 3; ++j) roots.push_back(mag * std::cos(phi - 2.0 * std::numbers::pi * j / 3.0) + shift);
    }
  } else {
    throw SpectralError("quotient_eigenvalues: closed form only for size <= 3");
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

std::optional<SrgParams> srg_check(const Graph& g) {
  const auto k = regularity(g);
  if (!k || !is_connected(g)) return std::nullopt;
  const std::size_t n = g.order();
  std::optional<std::size_t> lam, mu;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = bits::count_and(g.row(u), g.row(v));
      auto& slot = g.adjacent(u, v) ? lam : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  // Complete graphs have no non-adjacent pair; mu is reported as 0.
  return SrgParams{n, *k, lam.value_or(0), mu.value_or(0)};
}

std::vector<EigenGroup> srg_spectrum(const SrgParams& p) {
  const double n = static_cast<double>(p.n), k = static_cast<double>(p.k);
  const double d = static_cast<double>(p.lam) - static_cast<double>(p.mu);
  const double delta = d * d + 4.0 * (k - static_cast<double>(p.mu));
  if (delta <= 0.0) throw SpectralError("srg_spectrum: degenerate parameters");
  const double sq = std::sqrt(delta);
  const double r = (d + sq) / 2.0, s = (d - sq) / 2.0;
  const double f = ((n - 1.0) - (2.0 * k + (n - 1.0) * d) / sq) / 2.0;
  const double gm = ((n - 1.0) + (2.0 * k + (n - 1.0) * d) / sq) / 2.0;
  auto integral = [](double x) {
    const double rx = std::round(x);
    if (std::abs(x - rx) > 1e-6 || rx < 0) throw SpectralError("srg_spectrum: non-integral multiplicity");
    return static_cast<std::size_t>(rx);
  };
  auto group = [](double value, std::size_t mult) {
    EigenGroup e{value, mult, std::nullopt};
    const double rv = std::round(value);
    if (std::abs(value - rv) < 1e-6) {
      e.integer = static_cast<long long>(rv);
      e.value = rv;
    }
    return e;
  };
  std::vector<EigenGroup> out{group(k, 1)};
  const std::size_t fm = integral(f), gmul = integral(gm);
  if (fm > 0) out.push_back(group(r, fm));
  if (gmul > 0) out.push_back(group(s, gmul));
  return out;
}

bool interlacing_holds(const Spectrum& parent, const Spectrum& sub) {
  const std::size_t n = parent.eigenvalues.size(), m = sub.eigenvalues.size();
  if (m > n) throw SpectralError("interlacing_holds: subgraph larger than parent");
  constexpr double tol = 1e-7;
  for (std::size_t i = 0; i < m; ++i) {
    if (parent.eigenvalues[i] < sub.eigenvalues[i] - tol) return false;
    if (sub.eigenvalues[i] < parent.eigenvalues[i + n - m] - tol) return false;
  }
  return true;
}

HoffmanBound hoffman_ratio_bound(std::size_t n, std::size_t k, const Spectrum& sp) {
  const double lmin = sp.eigenvalues.back();
  if (lmin >= 0.0) throw SpectralError("hoffman_ratio_bound: smallest eigenvalue must be negative");
  HoffmanBound h;
  const double kd = static_cast<double>(k), nd = static_cast<double>(n);
  h.value = nd * (-lmin) / (kd - lmin);
  const double r = std::round(lmin);
  if (std::abs(lmin - r) < 1e-6) {
    const auto li = static_cast<std::int64_t>(r);
    h.exact = Rational(static_cast<std::int64_t>(n) * (-li), static_cast<std::int64_t>(k) - li);
  }
  return h;
}

HoffmanBound hoffman_ratio_bound(const Graph& g) {
  const auto k = regularity(g);
  if (!k) throw SpectralError("hoffman_ratio_bound: graph is not regular");
  if (!is_connected(g)) throw SpectralError("hoffman_ratio_bound: graph is not connected");
  return hoffman_ratio_bound(g.order(), *k, spectrum(g));
}

}  // namespace tough
