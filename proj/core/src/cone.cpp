#include "toric/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

namespace {

// Working representation for the double description method: the cone
// span(lin) + Cone(rays), together with the inequalities inserted so far.
struct DdState {
  std::size_t n = 0;
  std::vector<IntVec> lin;
  std::vector<IntVec> rays;
  std::vector<IntVec> inserted;
};

DdState dd_full_space(std::size_t n) {
  DdState s;
  s.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    s.lin.push_back(e);
  }
  return s;
}

// r1, r2 extreme rays with <a,r1> > 0 > <a,r2> are adjacent iff the face of
// the cone where their common active constraints vanish has dimension
// lineality + 2 (exact rank test).
bool dd_adjacent(const DdState& s, const IntVec& r1, const IntVec& r2) {
  std::vector<IntVec> active;
  for (const IntVec& a : s.inserted) {
    if (dot(a, r1) == 0 && dot(a, r2) == 0) active.push_back(a);
  }
  // solution space of the active constraints inside the span of the cone:
  // dim = n - rank(active ∪ span^perp)
  std::vector<IntVec> gens = s.lin;
  gens.insert(gens.end(), s.rays.begin(), s.rays.end());
  std::vector<IntVec> perp = kernel_basis(IntMat::from_rows(gens, s.n));
  std::vector<IntVec> stack = active;
  stack.insert(stack.end(), perp.begin(), perp.end());
  std::size_t codim = stack.empty() ? 0 : lattice_rank(IntMat::from_rows(stack, s.n));
  return s.n - codim == s.lin.size() + 2;
}

void dd_insert(DdState& s, const IntVec& a) {
  // Lineality crossing: trade one lineality generator for a ray.
  std::size_t cross = s.lin.size();
  for (std::size_t i = 0; i < s.lin.size(); ++i) {
    if (dot(a, s.lin[i]) != 0) {
      cross = i;
      break;
    }
  }
  if (cross != s.lin.size()) {
    IntVec l0 = s.lin[cross];
    Int p0 = dot(a, l0);
    if (p0 < 0) {
      l0 = -l0;
      p0 = -p0;
    }
    std::vector<IntVec> new_lin;
    for (std::size_t i = 0; i < s.lin.size(); ++i) {
      if (i == cross) continue;
      Int pi = dot(a, s.lin[i]);
      IntVec adj = s.lin[i] * p0 - l0 * pi;
      new_lin.push_back(primitive(adj));
    }
    std::vector<IntVec> new_rays;
    for (const IntVec& r : s.rays) {
      Int pr = dot(a, r);
      IntVec adj = r * p0 - l0 * pr;
      if (!adj.is_zero()) new_rays.push_back(primitive(adj));
    }
    new_rays.push_back(l0);
    std::sort(new_rays.begin(), new_rays.end());
    new_rays.erase(std::unique(new_rays.begin(), new_rays.end()), new_rays.end());
    s.lin = std::move(new_lin);
    s.rays = std::move(new_rays);
    s.inserted.push_back(a);
    return;
  }

  std::vector<const IntVec*> plus, zero, minus;
  for (const IntVec& r : s.rays) {
    Int p = dot(a, r);
    if (p > 0)
      plus.push_back(&r);
    else if (p == 0)
      zero.push_back(&r);
    else
      minus.push_back(&r);
  }
  if (minus.empty()) {
    s.inserted.push_back(a);
    return;
  }
  std::vector<IntVec> new_rays;
  for (const IntVec* r : plus) new_rays.push_back(*r);
  for (const IntVec* r : zero) new_rays.push_back(*r);
  for (const IntVec* rp : plus) {
    for (const IntVec* rm : minus) {
      if (!dd_adjacent(s, *rp, *rm)) continue;
      Int pp = dot(a, *rp);
      Int pm = dot(a, *rm);
      IntVec comb = (*rm) * pp - (*rp) * pm;  // <a,comb> = 0, positive combination
      if (!comb.is_zero()) new_rays.push_back(primitive(comb));
    }
  }
  std::sort(new_rays.begin(), new_rays.end());
  new_rays.erase(std::unique(new_rays.begin(), new_rays.end()), new_rays.end());
  s.rays = std::move(new_rays);
  s.inserted.push_back(a);
}

DdState dd_from_hrep(std::size_t n, const std::vector<IntVec>& ineq,
                     const std::vector<IntVec>& eq) {
  DdState s = dd_full_space(n);
  for (const IntVec& e : eq) {
    if (e.is_zero()) continue;
    dd_insert(s, e);
    dd_insert(s, -e);
  }
  for (const IntVec& f : ineq) {
    if (f.is_zero()) continue;
    dd_insert(s, f);
  }
  return s;
}

std::vector<IntVec> dd_generators(const DdState& s) {
  std::vector<IntVec> gens = s.rays;
  for (const IntVec& l : s.lin) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

struct Cone::Cache {
  std::once_flag flag;
  HRep hrep;
  std::size_t dim = 0;
};

Cone::Cone() : rank_(0), cache_(std::make_shared<Cache>()) {}

Cone Cone::from_rays(std::size_t rank, std::vector<IntVec> generators) {
  std::vector<IntVec> rays;
  for (const IntVec& g : generators) {
    if (g.dim() != rank)
      domain_error("DimensionMismatch", "Cone", "generator dimension does not match rank");
    if (g.is_zero()) continue;
    rays.push_back(primitive(g));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  Cone c;
  c.rank_ = rank;
  c.rays_ = rays;
  c.cache_ = std::make_shared<Cache>();
  if (rays.size() <= 1) return c;

  // Detect a lineality direction; extreme-ray reduction is only canonical on
  // strongly convex cones, so non-pointed generator sets are kept verbatim.
  const HRep& h = c.hrep();
  std::vector<IntVec> stack = h.ineq;
  stack.insert(stack.end(), h.eq.begin(), h.eq.end());
  bool pointed = stack.empty() ? rank == 0 : lattice_rank(IntMat::from_rows(stack, rank)) == rank;
  if (!pointed) return c;

  std::vector<IntVec> extreme;
  for (const IntVec& r : rays) {
    std::vector<IntVec> active = h.eq;
    for (const IntVec& f : h.ineq)
      if (dot(f, r) == 0) active.push_back(f);
    std::size_t codim = active.empty() ? 0 : lattice_rank(IntMat::from_rows(active, rank));
    if (rank - codim == 1) extreme.push_back(r);
  }
  if (extreme.size() != rays.size()) {
    Cone reduced;
    reduced.rank_ = rank;
    reduced.rays_ = std::move(extreme);
    reduced.cache_ = std::make_shared<Cache>();
    return reduced;
  }
  return c;
}

const HRep& Cone::hrep() const {
  std::call_once(cache_->flag, [this] {
    DdState s = dd_full_space(rank_);
    for (const IntVec& r : rays_) dd_insert(s, r);
    HRep h;
    h.ineq = s.rays;
    h.eq = s.lin;
    std::sort(h.ineq.begin(), h.ineq.end());
    std::sort(h.eq.begin(), h.eq.end());
    cache_->hrep = std::move(h);
    cache_->dim = rays_.empty() ? 0 : lattice_rank(IntMat::from_rows(rays_, rank_));
  });
  return cache_->hrep;
}

std::size_t Cone::dim() const {
  hrep();
  return cache_->dim;
}

std::string Cone::str() const {
  std::ostringstream os;
  os << "Cone{";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) os << ", ";
    os << rays_[i].str();
  }
  os << "}";
  return os.str();
}

Cone dual_cone(const Cone& c) {
  DdState s = dd_full_space(c.rank());
  for (const IntVec& r : c.rays()) dd_insert(s, r);
  return Cone::from_rays(c.rank(), dd_generators(s));
}

Cone cone_from_hrep(std::size_t rank, const std::vector<IntVec>& ineq,
                    const std::vector<IntVec>& eq) {
  DdState s = dd_from_hrep(rank, ineq, eq);
  return Cone::from_rays(rank, dd_generators(s));
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank())
    domain_error("RankMismatch", "intersect", "cones live in different ambient ranks");
  const HRep& ha = a.hrep();
  const HRep& hb = b.hrep();
  std::vector<IntVec> ineq = ha.ineq;
  ineq.insert(ineq.end(), hb.ineq.begin(), hb.ineq.end());
  std::vector<IntVec> eq = ha.eq;
  eq.insert(eq.end(), hb.eq.begin(), hb.eq.end());
  return cone_from_hrep(a.rank(), ineq, eq);
}

Cone cone_sum(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank())
    domain_error("RankMismatch", "cone_sum", "cones live in different ambient ranks");
  std::vector<IntVec> gens = a.rays();
  gens.insert(gens.end(), b.rays().begin(), b.rays().end());
  return Cone::from_rays(a.rank(), gens);
}

bool contains(const Cone& c, const IntVec& x) {
  const HRep& h = c.hrep();
  for (const IntVec& e : h.eq)
    if (dot(e, x) != 0) return false;
  for (const IntVec& f : h.ineq)
    if (dot(f, x) < 0) return false;
  return true;
}

bool cone_subset(const Cone& a, const Cone& b) {
  for (const IntVec& r : a.rays())
    if (!contains(b, r)) return false;
  return true;
}

bool cone_equal(const Cone& a, const Cone& b) { return cone_subset(a, b) && cone_subset(b, a); }

namespace {

std::vector<IntVec> lineality_basis(const Cone& c) {
  const HRep& h = c.hrep();
  std::vector<IntVec> stack = h.ineq;
  stack.insert(stack.end(), h.eq.begin(), h.eq.end());
  if (stack.empty()) {
    std::vector<IntVec> full;
    for (std::size_t i = 0; i < c.rank(); ++i) {
      IntVec e(c.rank());
      e[i] = 1;
      full.push_back(e);
    }
    return full;
  }
  return kernel_basis(IntMat::from_rows(stack, c.rank()));
}

}  // namespace

bool is_strongly_convex(const Cone& c) { return lineality_basis(c).empty(); }

bool is_simplicial(const Cone& c) {
  if (c.rays().empty()) return true;
  return lattice_rank(IntMat::from_rows(c.rays(), c.rank())) == c.ray_count();
}

bool is_smooth(const Cone& c) {
  if (c.rays().empty()) return true;
  IntMat m = IntMat::from_rows(c.rays(), c.rank());
  if (lattice_rank(m) != c.ray_count()) return false;
  SnfDecomposition snf = smith_normal_form(m);
  for (const Int& d : snf.invariant_factors)
    if (d != 1) return false;
  return snf.invariant_factors.size() == c.ray_count();
}

bool is_face(const Cone& f, const Cone& c) {
  if (f.rank() != c.rank())
    domain_error("RankMismatch", "is_face", "cones live in different ambient ranks");
  if (!cone_subset(f, c)) return false;
  IntVec p = relative_interior_point(f);
  const HRep& h = c.hrep();
  std::vector<IntVec> active;
  for (const IntVec& g : h.ineq)
    if (dot(g, p) == 0) active.push_back(g);
  // minimal face of c containing p
  std::vector<IntVec> gens;
  for (const IntVec& r : c.rays()) {
    bool on = true;
    for (const IntVec& g : active)
      if (dot(g, r) != 0) {
        on = false;
        break;
      }
    if (on) gens.push_back(r);
  }
  for (const IntVec& l : lineality_basis(c)) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  Cone minimal = Cone::from_rays(c.rank(), gens);
  return cone_equal(f, minimal);
}

std::vector<Cone> faces(const Cone& c) {
  if (!is_strongly_convex(c))
    domain_error("NotStronglyConvex", "faces", "face enumeration requires a pointed cone");
  const HRep& h = c.hrep();
  const std::size_t nf = h.ineq.size();
  if (nf > 20) domain_error("RankTooLarge", "faces", "too many facets for subset enumeration");
  std::set<std::vector<IntVec>> seen;
  std::vector<Cone> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << nf); ++mask) {
    std::vector<IntVec> gens;
    for (const IntVec& r : c.rays()) {
      bool on = true;
      for (std::size_t i = 0; i < nf && on; ++i)
        if (mask & (std::size_t(1) << i))
          if (dot(h.ineq[i], r) != 0) on = false;
      if (on) gens.push_back(r);
    }
    Cone face = Cone::from_rays(c.rank(), gens);
    if (seen.insert(face.rays()).second) out.push_back(face);
  }
  std::sort(out.begin(), out.end(),
            [](const Cone& a, const Cone& b) { return a.rays() < b.rays(); });
  return out;
}

IntVec relative_interior_point(const Cone& c) {
  IntVec p(c.rank());
  for (const IntVec& r : c.rays()) p = p + r;
  return p;
}

ConeFiberProduct cone_fiber_product(const Cone& c1, const Cone& c2, const IntMat& phi1,
                                    const IntMat& phi2) {
  if (phi1.rows() != phi2.rows())
    domain_error("TargetMismatch", "cone_fiber_product", "maps have different target ranks");
  if (phi1.cols() != c1.rank() || phi2.cols() != c2.rank())
    domain_error("TargetMismatch", "cone_fiber_product", "map source does not match cone rank");
  const std::size_t n1 = c1.rank(), n2 = c2.rank();

  IntMat stacked(phi1.rows(), n1 + n2);
  for (std::size_t i = 0; i < phi1.rows(); ++i) {
    for (std::size_t j = 0; j < n1; ++j) stacked.at(i, j) = phi1.at(i, j);
    for (std::size_t j = 0; j < n2; ++j) stacked.at(i, n1 + j) = -phi2.at(i, j);
  }
  std::vector<IntVec> kernel = kernel_basis(stacked);
  const std::size_t k = kernel.size();

  auto pull_back = [&](const IntVec& f, std::size_t offset, std::size_t len) {
    IntVec g(k);
    for (std::size_t j = 0; j < k; ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < len; ++i) s += f[i] * kernel[j][offset + i];
      g[j] = s;
    }
    return g;
  };

  std::vector<IntVec> ineq, eq;
  const HRep& h1 = c1.hrep();
  const HRep& h2 = c2.hrep();
  for (const IntVec& f : h1.ineq) ineq.push_back(pull_back(f, 0, n1));
  for (const IntVec& f : h2.ineq) ineq.push_back(pull_back(f, n1, n2));
  for (const IntVec& e : h1.eq) eq.push_back(pull_back(e, 0, n1));
  for (const IntVec& e : h2.eq) eq.push_back(pull_back(e, n1, n2));

  ConeFiberProduct out;
  out.cone = cone_from_hrep(k, ineq, eq);
  out.kernel_basis = std::move(kernel);
  return out;
}

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVec>& generators,
                                                            std::size_t dim) {
  std::vector<std::vector<std::size_t>> simplices;
  if (generators.empty() || dim == 0) return simplices;
  const std::size_t n = generators.front().dim();

  // Lex-first maximal independent subset seeds the triangulation.
  std::vector<std::size_t> seed;
  std::vector<IntVec> chosen;
  for (std::size_t i = 0; i < generators.size() && seed.size() < dim; ++i) {
    chosen.push_back(generators[i]);
    if (lattice_rank(IntMat::from_rows(chosen, n)) == chosen.size())
      seed.push_back(i);
    else
      chosen.pop_back();
  }
  if (seed.size() != dim) domain_error("DimensionMismatch", "placing_triangulation",
                                       "generators do not span the stated dimension");
  simplices.push_back(seed);

  auto facet_normal = [&](const std::vector<std::size_t>& simplex, std::size_t drop) {
    std::vector<IntVec> facet_gens;
    for (std::size_t idx : simplex)
      if (idx != drop) facet_gens.push_back(generators[idx]);
    std::vector<IntVec> span_perp = kernel_basis(IntMat::from_rows(facet_gens, n));
    // normal within the configuration span: orthogonal to the facet but not
    // to the dropped generator
    for (const IntVec& cand : span_perp) {
      Int p = dot(cand, generators[drop]);
      if (p > 0) return cand;
      if (p < 0) return IntVec(-cand);
    }
    domain_error("DimensionMismatch", "placing_triangulation", "degenerate simplex facet");
    return IntVec();  // unreachable
  };

  std::set<std::size_t> placed(seed.begin(), seed.end());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (placed.count(g)) continue;
    std::vector<std::vector<std::size_t>> attach;
    for (const auto& simplex : simplices) {
      for (std::size_t drop : simplex) {
        IntVec a = facet_normal(simplex, drop);  // inward for this simplex
        if (dot(a, generators[g]) >= 0) continue;  // not visible
        bool on_hull = true;
        for (std::size_t other : placed) {
          if (dot(a, generators[other]) < 0) {
            on_hull = false;
            break;
          }
        }
        if (!on_hull) continue;
        std::vector<std::size_t> ns;
        for (std::size_t idx : simplex)
          if (idx != drop) ns.push_back(idx);
        ns.push_back(g);
        std::sort(ns.begin(), ns.end());
        attach.push_back(ns);
      }
    }
    std::sort(attach.begin(), attach.end());
    attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
    simplices.insert(simplices.end(), attach.begin(), attach.end());
    placed.insert(g);
  }
  return simplices;
}

}  // namespace toric
