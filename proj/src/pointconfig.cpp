#include "latdef/pointconfig.hpp"

#include "latdef/errors.hpp"
#include "latdef/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latdef {

PointConfiguration PointConfiguration::make(std::size_t ambient, std::vector<Point> pts) {
  for (const auto& p : pts)
    if (p.size() != ambient) throw input_error("PointConfiguration: point length mismatch");
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PointConfiguration{ambient, std::move(pts)};
}

bool PointConfiguration::contains(const Point& p) const {
  return std::binary_search(points.begin(), points.end(), p, lex_less);
}

Family Family::make(std::vector<PointConfiguration> members) {
  if (members.empty()) throw input_error("Family: at least one member required");
  for (const auto& m : members)
    if (m.ambient_dim != members[0].ambient_dim)
      throw input_error("Family: members must share the ambient dimension");
  return Family{std::move(members)};
}

PointConfiguration Face::complement() const {
  std::vector<Point> rest;
  for (const auto& p : parent.points)
    if (!points.contains(p)) rest.push_back(p);
  return PointConfiguration::make(parent.ambient_dim, std::move(rest));
}

std::size_t CayleySumResult::parts() const {
  std::size_t k = 0;
  for (auto t : summand_tags) k = std::max(k, t + 1);
  return k;
}

PointConfiguration CayleySumResult::part(std::size_t i) const {
  std::vector<Point> pts;
  for (std::size_t j = 0; j < config.points.size(); ++j)
    if (summand_tags[j] == i) pts.push_back(config.points[j]);
  return PointConfiguration::make(config.ambient_dim, std::move(pts));
}

int dimension(const PointConfiguration& a) {
  if (a.empty()) return -1;
  return static_cast<int>(difference_lattice(a).rank());
}

PointConfiguration minkowski_sum(const PointConfiguration& a, const PointConfiguration& b) {
  if (a.ambient_dim != b.ambient_dim) throw input_error("minkowski_sum: ambient mismatch");
  if (a.empty() || b.empty()) throw precondition_error("minkowski_sum: summands must be non-empty");
  std::vector<Point> pts;
  pts.reserve(a.size() * b.size());
  for (const auto& p : a.points)
    for (const auto& q : b.points) pts.push_back(add(p, q));
  return PointConfiguration::make(a.ambient_dim, std::move(pts));
}

PointConfiguration minkowski_sum(const Family& f) {
  PointConfiguration s = f.members[0];
  if (s.empty()) throw precondition_error("minkowski_sum: summands must be non-empty");
  for (std::size_t i = 1; i < f.members.size(); ++i) s = minkowski_sum(s, f.members[i]);
  return s;
}

CayleySumResult cayley_sum(const Family& f) {
  std::size_t n = f.ambient_dim(), k = f.k();
  for (const auto& m : f.members)
    if (m.empty()) throw precondition_error("cayley_sum: all members must be non-empty");
  std::vector<std::pair<Point, std::size_t>> tagged;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    for (const auto& p : f.members[i].points) {
      Point q(n + k, Integer(0));
      for (std::size_t c = 0; c < n; ++c) q[c] = p[c];
      if (i > 0) q[n + i - 1] = 1;
      tagged.emplace_back(std::move(q), i);
    }
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
  std::vector<Point> pts;
  std::vector<std::size_t> tags;
  for (auto& [p, t] : tagged) {
    pts.push_back(p);
    tags.push_back(t);
  }
  return CayleySumResult{PointConfiguration{n + k, std::move(pts)}, std::move(tags)};
}

Lattice difference_lattice(const PointConfiguration& a) {
  if (a.empty()) throw precondition_error("difference_lattice: configuration is empty");
  std::vector<Point> gens;
  for (std::size_t i = 1; i < a.points.size(); ++i)
    gens.push_back(sub(a.points[i], a.points[0]));
  return lattice_span(gens, a.ambient_dim);
}

Lattice family_lattice(const Family& f) {
  Lattice l = difference_lattice(f.members[0]);
  for (std::size_t i = 1; i < f.members.size(); ++i)
    l = lattice_sum(l, difference_lattice(f.members[i]));
  return l;
}

bool is_spanning(const Family& f) { return is_full(family_lattice(f)); }

bool is_spanning(const PointConfiguration& a) { return is_full(difference_lattice(a)); }

PointConfiguration standard_simplex(std::size_t k) {
  std::vector<Point> pts;
  pts.emplace_back(k, Integer(0));
  for (std::size_t i = 0; i < k; ++i) {
    Point e(k, Integer(0));
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return PointConfiguration::make(k, std::move(pts));
}

LatticeChart make_chart(const Point& base, const Lattice& saturated) {
  return LatticeChart{base, saturated.basis, saturated.rank()};
}

LatticeChart make_chart(const PointConfiguration& a) {
  if (a.empty()) throw precondition_error("make_chart: configuration is empty");
  return make_chart(a.points[0], saturation(difference_lattice(a)));
}

Point LatticeChart::to_local(const Point& x) const {
  auto y = solve_integer(basis, sub(x, base));
  if (!y) throw input_error("LatticeChart: point outside the chart lattice");
  return *y;
}

Point LatticeChart::to_ambient(const Point& y) const { return add(base, matvec(basis, y)); }

std::vector<Face> faces(const PointConfiguration& a) {
  if (a.empty()) throw precondition_error("faces: configuration is empty");
  std::size_t m = a.size();
  Hull hull = convex_hull(a);
  // collect facet point sets as index masks, then close under intersection
  std::vector<std::pair<std::vector<bool>, Point>> facet_sets;
  for (const auto& fc : hull.hpoly.facets) {
    std::vector<bool> mask(m, false);
    for (std::size_t i = 0; i < m; ++i)
      if (dot(fc.normal, a.points[i]) == fc.offset) mask[i] = true;
    facet_sets.emplace_back(std::move(mask), fc.normal);
  }
  std::set<std::vector<bool>> closed;
  closed.insert(std::vector<bool>(m, true));
  for (const auto& [mask, w] : facet_sets) closed.insert(mask);
  for (;;) {
    std::vector<std::vector<bool>> fresh;
    for (const auto& x : closed)
      for (const auto& y : closed) {
        std::vector<bool> z(m);
        bool any = false;
        for (std::size_t i = 0; i < m; ++i) {
          z[i] = x[i] && y[i];
          any = any || z[i];
        }
        if (any && !closed.count(z)) fresh.push_back(std::move(z));
      }
    if (fresh.empty()) break;
    for (auto& z : fresh) closed.insert(std::move(z));
  }
  std::vector<Face> out;
  for (const auto& mask : closed) {
    Point w(a.ambient_dim, Integer(0));
    for (const auto& [fmask, fw] : facet_sets) {
      bool contains_face = true;
      for (std::size_t i = 0; i < m; ++i)
        if (mask[i] && !fmask[i]) { contains_face = false; break; }
      if (contains_face) w = add(w, fw);
    }
    std::vector<Point> pts;
    for (std::size_t i = 0; i < m; ++i)
      if (mask[i]) pts.push_back(a.points[i]);
    Face f{a, primitive(w), PointConfiguration::make(a.ambient_dim, std::move(pts))};
    // the summed normal must select exactly this face
    Integer best = dot(f.normal, a.points[0]);
    for (const auto& p : a.points) best = std::max(best, dot(f.normal, p));
    for (std::size_t i = 0; i < m; ++i)
      if ((dot(f.normal, a.points[i]) == best) != mask[i])
        throw input_error("faces: inconsistent witness normal");
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
    if (x.points.size() != y.points.size()) return x.points.size() > y.points.size();
    return x.points.points < y.points.points;
  });
  return out;
}

namespace {

// configuration rewritten in chart coordinates, full-dimensional by construction
std::vector<Point> local_points(const PointConfiguration& a, const LatticeChart& chart) {
  std::vector<Point> loc;
  loc.reserve(a.size());
  for (const auto& p : a.points) loc.push_back(chart.to_local(p));
  return loc;
}

IntMatrix difference_matrix(const std::vector<Point>& pts, std::size_t base, std::size_t dim,
                            const std::vector<std::size_t>& idx) {
  IntMatrix d(dim, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) d.at(i, j) = pts[idx[j]][i] - pts[base][i];
  return d;
}

}  // namespace

std::optional<AffineIso> is_isomorphic(const PointConfiguration& a, const PointConfiguration& b) {
  if (a.empty() || b.empty())
    throw precondition_error("is_isomorphic: configurations must be non-empty");
  if (a.size() != b.size()) return std::nullopt;
  int da = dimension(a), db = dimension(b);
  if (da != db) return std::nullopt;
  std::size_t d = static_cast<std::size_t>(da);

  LatticeChart ca = make_chart(a), cb = make_chart(b);
  std::vector<Point> ap = local_points(a, ca), bp = local_points(b, cb);

  if (d == 0) {
    return AffineIso{ca.base, ca.basis, IntMatrix::identity(0), Point{}, cb.base, cb.basis};
  }

  // difference lattices in chart coordinates must have equal Smith invariants
  {
    auto inv_of = [d](const std::vector<Point>& pts) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 1; i < pts.size(); ++i) idx.push_back(i);
      IntMatrix diffs = difference_matrix(pts, 0, d, idx);
      return smith_normal_form(diffs).invariant_factors();
    };
    if (inv_of(ap) != inv_of(bp)) return std::nullopt;
  }

  PointConfiguration apc{d, ap}, bpc{d, bp};
  Hull ha = convex_hull(apc), hb = convex_hull(bpc);
  if (ha.vpoly.vertices.size() != hb.vpoly.vertices.size()) return std::nullopt;

  // affine basis of the source: a vertex plus d points with independent
  // differences, found greedily
  std::size_t p0 = 0;
  while (!std::binary_search(ha.vpoly.vertices.begin(), ha.vpoly.vertices.end(), ap[p0], lex_less))
    ++p0;
  std::vector<std::size_t> base_idx;
  {
    std::vector<Point> chosen;
    for (std::size_t i = 0; i < ap.size() && base_idx.size() < d; ++i) {
      if (i == p0) continue;
      chosen.push_back(sub(ap[i], ap[p0]));
      if (lattice_span(chosen, d).rank() == chosen.size())
        base_idx.push_back(i);
      else
        chosen.pop_back();
    }
  }
  IntMatrix pmat = difference_matrix(ap, p0, d, base_idx);
  Integer pdet = determinant(pmat);

  std::vector<Point> bverts = hb.vpoly.vertices;
  std::vector<std::size_t> cand(bp.size());
  for (std::size_t i = 0; i < bp.size(); ++i) cand[i] = i;

  std::vector<std::size_t> pick(d);
  std::vector<bool> used(bp.size(), false);

  // ordered tuples (q_0, ..., q_d) of distinct target points; q_0 a vertex
  for (std::size_t q0 = 0; q0 < bp.size(); ++q0) {
    if (!std::binary_search(bverts.begin(), bverts.end(), bp[q0], lex_less)) continue;
    std::fill(used.begin(), used.end(), false);
    used[q0] = true;
    // depth-first over images of the basis points
    std::vector<std::size_t> stack;
    std::size_t next = 0;
    for (;;) {
      if (stack.size() == d) {
        IntMatrix qmat = difference_matrix(bp, q0, d, stack);
        if ((determinant(qmat) == pdet) || (determinant(qmat) == -pdet)) {
          auto msol = solve_integer_columns(pmat.transposed(), qmat.transposed());
          if (msol) {
            IntMatrix m = msol->transposed();
            // candidate map: y |-> m*(y - ap[p0]) + bp[q0]; must send ap onto bp
            bool ok = true;
            std::set<Point> image;
            for (const auto& y : ap) {
              Point z = add(matvec(m, sub(y, ap[p0])), bp[q0]);
              if (!bpc.contains(z)) { ok = false; break; }
              image.insert(z);
            }
            if (ok && image.size() == bp.size()) {
              Point shift = sub(bp[q0], matvec(m, ap[p0]));
              return AffineIso{ca.base, ca.basis, m, shift, cb.base, cb.basis};
            }
          }
        }
        // backtrack
        if (stack.empty()) break;
        next = stack.back() + 1;
        used[stack.back()] = false;
        stack.pop_back();
        continue;
      }
      if (next >= bp.size()) {
        if (stack.empty()) break;
        next = stack.back() + 1;
        used[stack.back()] = false;
        stack.pop_back();
        continue;
      }
      if (!used[next]) {
        used[next] = true;
        stack.push_back(next);
        next = 0;
        continue;
      }
      ++next;
    }
  }
  return std::nullopt;
}

Point AffineIso::apply(const Point& x) const {
  auto y = solve_integer(src_basis, sub(x, src_base));
  if (!y) throw input_error("AffineIso: point outside the source lattice");
  Point z = add(matvec(map, *y), shift);
  return add(dst_base, matvec(dst_basis, z));
}

}  // namespace latdef
