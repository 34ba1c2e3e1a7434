#include "hrec/fem.hpp"

#include <cmath>

#include "hrec/errors.hpp"
#include "hrec/parallel.hpp"
#include "hrec/quadrature.hpp"

namespace hrec {

ExactField zero_field() {
  return {[](double, double) { return 0.0; },
          [](double, double) { return std::array<double, 2>{0.0, 0.0}; }};
}

ExactField constant_field(double c) {
  return {[c](double, double) { return c; },
          [](double, double) { return std::array<double, 2>{0.0, 0.0}; }};
}

FeFunction::FeFunction(std::shared_ptr<const GridMesh> mesh)
    : mesh_(std::move(mesh)), coeffs_(mesh_->num_nodes(), 0.0) {}

FeFunction::FeFunction(std::shared_ptr<const GridMesh> mesh, std::vector<double> coeffs)
    : mesh_(std::move(mesh)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != mesh_->num_nodes())
    throw ConfigError("FeFunction: coefficient count must equal the node count");
}

BoundaryFunction::BoundaryFunction(std::shared_ptr<const GridMesh> mesh)
    : mesh_(std::move(mesh)), values_(mesh_->num_boundary_nodes(), 0.0) {}

BoundaryFunction::BoundaryFunction(std::shared_ptr<const GridMesh> mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != mesh_->num_boundary_nodes())
    throw ConfigError("BoundaryFunction: value count must equal the boundary chain length");
}

std::array<std::array<double, 4>, 4> q1_element_stiffness() {
  // exact integration of Q1 shape gradients on a square; h-independent in 2D
  constexpr double s = 1.0 / 6.0;
  return {{{4 * s, -1 * s, -2 * s, -1 * s},
           {-1 * s, 4 * s, -1 * s, -2 * s},
           {-2 * s, -1 * s, 4 * s, -1 * s},
           {-1 * s, -2 * s, -1 * s, 4 * s}}};
}

SparseMatrix assemble_stiffness(const GridMesh& mesh) {
  const int nps = mesh.nodes_per_side();
  const int k = mesh.cells_per_side();
  const int n = mesh.num_nodes();
  const auto ke = q1_element_stiffness();

  std::vector<int> offsets(n + 1, 0);
  for (int id = 0; id < n; ++id) {
    const int i = id % nps, j = id / nps;
    const int ni = 1 + (i > 0) + (i < nps - 1);
    const int nj = 1 + (j > 0) + (j < nps - 1);
    offsets[id + 1] = offsets[id] + ni * nj;
  }
  std::vector<int> cols(offsets[n]);
  std::vector<double> vals(cols.size(), 0.0);

  par::for_each(n, [&](std::int64_t id64) {
    const int id = static_cast<int>(id64);
    const int i = id % nps, j = id / nps;
    double stencil[3][3] = {};
    static constexpr int loc_i[4] = {0, 1, 1, 0}; // SW,SE,NE,NW
    static constexpr int loc_j[4] = {0, 0, 1, 1};
    for (int cy = j - 1; cy <= j; ++cy) {
      if (cy < 0 || cy >= k) continue;
      for (int cx = i - 1; cx <= i; ++cx) {
        if (cx < 0 || cx >= k) continue;
        int la = 0;
        for (int a = 0; a < 4; ++a)
          if (cx + loc_i[a] == i && cy + loc_j[a] == j) la = a;
        for (int lb = 0; lb < 4; ++lb)
          stencil[cy + loc_j[lb] - j + 1][cx + loc_i[lb] - i + 1] += ke[la][lb];
      }
    }
    int at = offsets[id];
    for (int dj = -1; dj <= 1; ++dj) {
      if (j + dj < 0 || j + dj >= nps) continue;
      for (int di = -1; di <= 1; ++di) {
        if (i + di < 0 || i + di >= nps) continue;
        cols[at] = (j + dj) * nps + (i + di);
        vals[at] = stencil[dj + 1][di + 1];
        ++at;
      }
    }
  });
  return {n, n, std::move(offsets), std::move(cols), std::move(vals)};
}

SparseMatrix assemble_boundary_h1(const GridMesh& mesh) {
  const int p = mesh.num_boundary_nodes();
  const double h = mesh.h();
  // per edge of length h: mass (h/6)[[2,1],[1,2]], stiffness (1/h)[[1,-1],[-1,1]]
  const double diag = 2.0 * (2.0 * h / 6.0 + 1.0 / h);
  const double off = h / 6.0 - 1.0 / h;
  std::vector<Triplet> trips;
  trips.reserve(3 * p);
  for (int a = 0; a < p; ++a) {
    trips.push_back({a, (a + p - 1) % p, off});
    trips.push_back({a, a, diag});
    trips.push_back({a, (a + 1) % p, off});
  }
  return SparseMatrix::from_triplets(p, p, std::move(trips));
}

namespace {

// Per-cell quadrature of f * N_a for all cells (parallel), then a serial
// scatter into the nodal vector: bitwise reproducible for any thread count.
std::vector<double> weighted_load(const GridMesh& mesh,
                                  const std::function<double(double, double)>& f,
                                  int quad_points) {
  const int k = mesh.cells_per_side();
  const double h = mesh.h();
  const GaussRule rule = gauss_rule(quad_points);
  const int q = quad_points;
  std::vector<std::array<double, 4>> cell(mesh.num_cells());
  par::for_each(mesh.num_cells(), [&](std::int64_t c) {
    const int cx = static_cast<int>(c) % k;
    const int cy = static_cast<int>(c) / k;
    std::array<double, 4> acc = {0.0, 0.0, 0.0, 0.0};
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        const double xi = rule.x[a], eta = rule.x[b];
        const double wq = rule.w[a] * rule.w[b] * h * h;
        const double fv = f((cx + xi) * h, (cy + eta) * h);
        const auto nv = q1_values(xi, eta);
        for (int l = 0; l < 4; ++l) acc[l] += wq * fv * nv[l];
      }
    cell[c] = acc;
  });
  std::vector<double> out(mesh.num_nodes(), 0.0);
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const auto ids = mesh.cell_nodes(c % k, c / k);
    for (int l = 0; l < 4; ++l) out[ids[l]] += cell[c][l];
  }
  return out;
}

} // namespace

std::vector<double> assemble_load(const GridMesh& mesh, const ExactField& f, int quad_points) {
  return weighted_load(mesh, f.value, quad_points);
}

DirichletSolver::DirichletSolver(std::shared_ptr<const GridMesh> mesh, double tol)
    : mesh_(std::move(mesh)), tol_(tol), stiffness_(assemble_stiffness(*mesh_)),
      interior_factor_([&] {
        const int n = mesh_->num_nodes();
        std::vector<int> interior_map(n), chain_map(n);
        for (int id = 0; id < n; ++id) {
          interior_map[id] = mesh_->interior_index(id);
          chain_map[id] = mesh_->chain_pos(id);
        }
        interior_block_ = stiffness_.extract(mesh_->interior_ids(), interior_map,
                                             mesh_->num_interior_nodes());
        interior_to_chain_ = stiffness_.extract(mesh_->interior_ids(), chain_map,
                                                mesh_->num_boundary_nodes());
        return SpdFactorization(interior_block_);
      }()) {}

std::vector<double> DirichletSolver::solve_interior(std::span<const double> load_interior) const {
  std::vector<double> x = interior_factor_.solve(load_interior);
  std::vector<double> ax = interior_block_.apply(x);
  double rr = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const double d = ax[i] - load_interior[i];
    rr += d * d;
    bb += load_interior[i] * load_interior[i];
  }
  const double res = bb > 0.0 ? std::sqrt(rr / bb) : std::sqrt(rr);
  if (!(res <= tol_)) throw SolverError("Dirichlet solve missed the residual contract", res);
  return x;
}

FeFunction DirichletSolver::solve(const ExactField* f, const BoundaryFunction& g) const {
  const int m = mesh_->num_interior_nodes();
  std::vector<double> b(m, 0.0);
  if (f != nullptr) {
    const std::vector<double> load = assemble_load(*mesh_, *f, 3);
    const auto& ids = mesh_->interior_ids();
    for (int i = 0; i < m; ++i) b[i] = load[ids[i]];
  }
  const std::vector<double> coupled = interior_to_chain_.apply(g.values());
  for (int i = 0; i < m; ++i) b[i] -= coupled[i];
  const std::vector<double> x = solve_interior(b);

  FeFunction u(mesh_);
  const auto& chain = mesh_->boundary_chain();
  for (std::size_t p = 0; p < chain.size(); ++p) u.coeffs()[chain[p]] = g.values()[p];
  const auto& ids = mesh_->interior_ids();
  for (int i = 0; i < m; ++i) u.coeffs()[ids[i]] = x[i];
  return u;
}

FeFunction solve_dirichlet_poisson(std::shared_ptr<const GridMesh> mesh, const ExactField* f,
                                   const BoundaryFunction& g, double tol) {
  return DirichletSolver(std::move(mesh), tol).solve(f, g);
}

FeFunction harmonic_extension(std::shared_ptr<const GridMesh> mesh, const BoundaryFunction& g,
                              double tol) {
  return DirichletSolver(std::move(mesh), tol).solve(nullptr, g);
}

double evaluate(const FeFunction& v, Point p) {
  const auto cell = v.mesh().locate_cell(p);
  const auto ids = v.mesh().cell_nodes(cell.cx, cell.cy);
  const auto nv = q1_values(cell.xi, cell.eta);
  return nv[0] * v.coeffs()[ids[0]] + nv[1] * v.coeffs()[ids[1]] + nv[2] * v.coeffs()[ids[2]] +
         nv[3] * v.coeffs()[ids[3]];
}

FeFunction interpolate(std::shared_ptr<const GridMesh> mesh, const ExactField& ref) {
  FeFunction out(mesh);
  const GridMesh& g = *mesh;
  par::for_each(g.num_nodes(), [&](std::int64_t id) {
    const Point p = g.node_coord(static_cast<int>(id));
    out.coeffs()[id] = ref.value(p.x, p.y);
  });
  return out;
}

BoundaryFunction trace(const FeFunction& v) {
  BoundaryFunction g(v.mesh_ptr());
  const auto& chain = v.mesh().boundary_chain();
  for (std::size_t p = 0; p < chain.size(); ++p) g.values()[p] = v.coeffs()[chain[p]];
  return g;
}

BoundaryFunction boundary_values(std::shared_ptr<const GridMesh> mesh, const ExactField& ref) {
  BoundaryFunction g(mesh);
  const auto& chain = mesh->boundary_chain();
  for (std::size_t p = 0; p < chain.size(); ++p) {
    const Point pt = mesh->node_coord(chain[p]);
    g.values()[p] = ref.value(pt.x, pt.y);
  }
  return g;
}

namespace {

struct CellCoeffs {
  double c0, c1, c2, c3; // SW,SE,NE,NW
};

inline CellCoeffs cell_coeffs(const FeFunction& v, int cx, int cy) {
  const auto ids = v.mesh().cell_nodes(cx, cy);
  return {v.coeffs()[ids[0]], v.coeffs()[ids[1]], v.coeffs()[ids[2]], v.coeffs()[ids[3]]};
}

inline double bilinear(const CellCoeffs& c, double xi, double eta) {
  return c.c0 * (1 - xi) * (1 - eta) + c.c1 * xi * (1 - eta) + c.c2 * xi * eta +
         c.c3 * (1 - xi) * eta;
}

inline std::array<double, 2> bilinear_grad(const CellCoeffs& c, double xi, double eta, double h) {
  return {((c.c1 - c.c0) * (1 - eta) + (c.c2 - c.c3) * eta) / h,
          ((c.c3 - c.c0) * (1 - xi) + (c.c2 - c.c1) * xi) / h};
}

double error_quadrature(const FeFunction& v, const ExactField& ref, int quad_points,
                        bool with_gradient) {
  const GridMesh& mesh = v.mesh();
  const int k = mesh.cells_per_side();
  const double h = mesh.h();
  const GaussRule rule = gauss_rule(quad_points);
  const int q = quad_points;
  const double total = par::sum(mesh.num_cells(), [&](std::int64_t c) {
    const int cx = static_cast<int>(c) % k;
    const int cy = static_cast<int>(c) / k;
    const CellCoeffs cc = cell_coeffs(v, cx, cy);
    double acc = 0.0;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        const double xi = rule.x[a], eta = rule.x[b];
        const double wq = rule.w[a] * rule.w[b] * h * h;
        const double x = (cx + xi) * h, y = (cy + eta) * h;
        const double dv = bilinear(cc, xi, eta) - ref.value(x, y);
        double cellsum = dv * dv;
        if (with_gradient) {
          const auto gv = bilinear_grad(cc, xi, eta, h);
          const auto gr = ref.gradient(x, y);
          const double dx = gv[0] - gr[0], dy = gv[1] - gr[1];
          cellsum += dx * dx + dy * dy;
        }
        acc += wq * cellsum;
      }
    return acc;
  });
  return std::sqrt(total);
}

} // namespace

double h1_error(const FeFunction& v, const ExactField& ref, int quad_points) {
  return error_quadrature(v, ref, quad_points, true);
}

double l2_error(const FeFunction& v, const ExactField& ref, int quad_points) {
  return error_quadrature(v, ref, quad_points, false);
}

double linf_error_on_nodes(const FeFunction& v, const ExactField& ref) {
  const GridMesh& mesh = v.mesh();
  return par::max_abs(mesh.num_nodes(), [&](std::int64_t id) {
    const Point p = mesh.node_coord(static_cast<int>(id));
    return v.coeffs()[id] - ref.value(p.x, p.y);
  });
}

double fe_h1_norm(const FeFunction& v) { return h1_error(v, zero_field(), 2); }

double fe_difference_h1(const FeFunction& coarse, const FeFunction& fine) {
  if (coarse.mesh().level() > fine.mesh().level())
    throw ConfigError("fe_difference_h1: first argument must be the coarser function");
  const GridMesh& fm = fine.mesh();
  const GridMesh& cm = coarse.mesh();
  const int k = fm.cells_per_side();
  const double hf = fm.h();
  const double hc = cm.h();
  const GaussRule rule = gauss_rule(2); // both restrictions are bilinear per fine cell: exact
  const double total = par::sum(fm.num_cells(), [&](std::int64_t c) {
    const int cx = static_cast<int>(c) % k;
    const int cy = static_cast<int>(c) / k;
    const CellCoeffs fc = cell_coeffs(fine, cx, cy);
    double acc = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double xi = rule.x[a], eta = rule.x[b];
        const double wq = rule.w[a] * rule.w[b] * hf * hf;
        const double x = (cx + xi) * hf, y = (cy + eta) * hf;
        const auto cref = cm.locate_cell({x, y});
        const CellCoeffs cc = cell_coeffs(coarse, cref.cx, cref.cy);
        const double dv = bilinear(fc, xi, eta) - bilinear(cc, cref.xi, cref.eta);
        const auto gf = bilinear_grad(fc, xi, eta, hf);
        const auto gc = bilinear_grad(cc, cref.xi, cref.eta, hc);
        const double dx = gf[0] - gc[0], dy = gf[1] - gc[1];
        acc += wq * (dv * dv + dx * dx + dy * dy);
      }
    return acc;
  });
  return std::sqrt(total);
}

double fe_difference_linf_nodes(const FeFunction& coarse, const FeFunction& fine) {
  if (coarse.mesh().level() > fine.mesh().level())
    throw ConfigError("fe_difference_linf_nodes: first argument must be the coarser function");
  const GridMesh& fm = fine.mesh();
  return par::max_abs(fm.num_nodes(), [&](std::int64_t id) {
    const Point p = fm.node_coord(static_cast<int>(id));
    return evaluate(coarse, p) - fine.coeffs()[id];
  });
}

} // namespace hrec
