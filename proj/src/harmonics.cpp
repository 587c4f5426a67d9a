#include "minrep/harmonics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "minrep/parallel.hpp"
#include "minrep/quadrature.hpp"

namespace minrep {

double gegenbauer(double alpha, int k, double t) {
  if (k < 0) throw std::invalid_argument("gegenbauer: k >= 0 required");
  if (alpha <= -0.5) throw std::invalid_argument("gegenbauer: alpha > -1/2");
  if (alpha == 0.0) {
    const double tc = std::clamp(t, -1.0, 1.0);
    return std::cos(k * std::acos(tc));
  }
  if (k == 0) return 1.0;
  double cm1 = 1.0;
  double c = 2.0 * alpha * t;
  for (int j = 2; j <= k; ++j) {
    const double next =
        (2.0 * t * (j + alpha - 1.0) * c - (j + 2.0 * alpha - 2.0) * cm1) / j;
    cm1 = c;
    c = next;
  }
  return c;
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

long long dim_harmonics(int p, int k) {
  if (p < 1 || k < 0) throw std::invalid_argument("dim_harmonics: bad args");
  if (p == 1) return k <= 1 ? 1 : 0;
  return binom(p + k - 2, k) + binom(p + k - 3, k - 1);
}

double sphere_volume(int p) {
  return 2.0 * std::pow(M_PI, 0.5 * p) / std::tgamma(0.5 * p);
}

double zonal_kernel(int p, int a, double t) {
  if (p == 2) {
    const double tc = std::clamp(t, -1.0, 1.0);
    return std::cos(a * std::acos(tc));
  }
  const double alpha = 0.5 * (p - 2);
  return gegenbauer(alpha, a, t) / gegenbauer(alpha, a, 1.0);
}

void zonal_kernel_all(int p, int kmax, double t, double* out) {
  if (p == 2) {
    const double th = std::acos(std::clamp(t, -1.0, 1.0));
    for (int k = 0; k <= kmax; ++k) out[k] = std::cos(k * th);
    return;
  }
  const double alpha = 0.5 * (p - 2);
  double cm1 = 1.0, c1v = 2.0 * alpha * t;
  double nm1 = 1.0, n1v = 2.0 * alpha;  // values at t = 1
  out[0] = 1.0;
  if (kmax >= 1) out[1] = c1v / n1v;
  for (int j = 2; j <= kmax; ++j) {
    const double cj =
        (2.0 * t * (j + alpha - 1.0) * c1v - (j + 2.0 * alpha - 2.0) * cm1) / j;
    const double nj =
        (2.0 * (j + alpha - 1.0) * n1v - (j + 2.0 * alpha - 2.0) * nm1) / j;
    out[j] = cj / nj;
    cm1 = c1v;
    c1v = cj;
    nm1 = n1v;
    n1v = nj;
  }
}

namespace {

// elementwise zonal kernel of one degree over a matrix of inner products
void zonal_kernel_inplace(int p, int a, Eigen::MatrixXd& dots) {
  const auto n = dots.size();
  double* d = dots.data();
  if (p == 2) {
    for (Eigen::Index i = 0; i < n; ++i)
      d[i] = std::cos(a * std::acos(std::clamp(d[i], -1.0, 1.0)));
    return;
  }
  const double alpha = 0.5 * (p - 2);
  const double norm = gegenbauer(alpha, a, 1.0);
  if (a == 0) {
    dots.setOnes();
    return;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = d[i];
    double cm1 = 1.0, c = 2.0 * alpha * t;
    for (int j = 2; j <= a; ++j) {
      const double next =
          (2.0 * t * (j + alpha - 1.0) * c - (j + 2.0 * alpha - 2.0) * cm1) /
          j;
      cm1 = c;
      c = next;
    }
    d[i] = c / norm;
  }
}

std::shared_ptr<const ZonalBasis> build_zonal_basis(int p, int a) {
  const long long dim = dim_harmonics(p, a);
  int m = static_cast<int>(2 * dim + 2);
  for (int attempt = 0;; ++attempt) {
    // deterministic well-spread centers: greedy farthest-point selection
    // from a random pool
    std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ (uint64_t(p) << 32) ^
                        uint64_t(a * 2654435761u) ^ uint64_t(attempt));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int pool_n = std::max(24 * m, 512);
    Eigen::MatrixXd pool(pool_n, p);
    for (int i = 0; i < pool_n; ++i) {
      Eigen::VectorXd v(p);
      do {
        for (int j = 0; j < p; ++j) v[j] = gauss(rng);
      } while (v.norm() < 1e-8);
      pool.row(i) = v.transpose() / v.norm();
    }
    Eigen::MatrixXd centers(m, p);
    centers.row(0) = pool.row(0);
    Eigen::VectorXd mindist =
        (pool.rowwise() - centers.row(0)).rowwise().squaredNorm();
    for (int s = 1; s < m; ++s) {
      int best;
      mindist.maxCoeff(&best);
      centers.row(s) = pool.row(best);
      mindist = mindist.cwiseMin(
          (pool.rowwise() - centers.row(s)).rowwise().squaredNorm());
    }

    Eigen::MatrixXd gram = centers * centers.transpose();
    zonal_kernel_inplace(p, a, gram);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double cutoff = 1e-10 * ev[m - 1];
    int rank = 0;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
      if (ev[i] > cutoff) {
        inv[i] = 1.0 / ev[i];
        ++rank;
      }
    }
    if (rank < dim && attempt < 3) {
      m *= 2;
      continue;
    }
    if (rank < dim)
      throw std::runtime_error("zonal basis: rank-deficient fundamental system");

    auto basis = std::make_shared<ZonalBasis>();
    basis->p = p;
    basis->degree = a;
    basis->dim = dim;
    basis->centers = std::move(centers);
    basis->gram = std::move(gram);
    basis->gram_pinv =
        es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
    return basis;
  }
}

}  // namespace

SphereFactor::SphereFactor(int p, int exact_degree) : p_(p), degree_(exact_degree) {
  if (p < 2) throw std::invalid_argument("SphereFactor: p >= 2 required");
  if (exact_degree < 1)
    throw std::invalid_argument("SphereFactor: exact_degree >= 1 required");
  volume_ = sphere_volume(p);

  const int nphi = 2 * (exact_degree / 2 + 1);
  std::vector<QuadRule> levels;  // theta levels, outermost first
  for (int k = 1; k <= p - 2; ++k) {
    const double expo = 0.5 * (p - k - 2);
    levels.push_back(gauss_jacobi(exact_degree / 2 + 1, expo, expo));
  }

  int total = nphi;
  for (const auto& lv : levels) total *= static_cast<int>(lv.nodes.size());
  nodes_.resize(total, p);
  weights_.resize(total);
  antipode_.resize(total);

  const int nlev = static_cast<int>(levels.size());
  std::vector<int> idx(nlev, 0);
  for (int flat = 0; flat < total; ++flat) {
    // decode multi-index (theta levels.., phi)
    int rem = flat;
    const int jphi = rem % nphi;
    rem /= nphi;
    for (int k = nlev - 1; k >= 0; --k) {
      const int nk = static_cast<int>(levels[k].nodes.size());
      idx[k] = rem % nk;
      rem /= nk;
    }

    double w = 2.0 * M_PI / nphi;
    double sprod = 1.0;
    for (int k = 0; k < nlev; ++k) {
      const double t = levels[k].nodes[idx[k]];
      nodes_(flat, k) = sprod * t;
      sprod *= std::sqrt(std::max(0.0, 1.0 - t * t));
      w *= levels[k].weights[idx[k]];
    }
    const double phi = 2.0 * M_PI * jphi / nphi;
    nodes_(flat, p - 2) = sprod * std::cos(phi);
    nodes_(flat, p - 1) = sprod * std::sin(phi);
    weights_[flat] = w;

    // antipode: mirror every theta index, shift phi by half a turn
    int aflat = (jphi + nphi / 2) % nphi;
    int stride = nphi;
    for (int k = nlev - 1; k >= 0; --k) {
      const int nk = static_cast<int>(levels[k].nodes.size());
      aflat += stride * (nk - 1 - idx[k]);
      stride *= nk;
    }
    antipode_[flat] = aflat;
  }
}

std::shared_ptr<const ZonalBasis> SphereFactor::basis(int a) const {
  auto it = bases_.find(a);
  if (it == bases_.end()) it = bases_.emplace(a, build_zonal_basis(p_, a)).first;
  return it->second;
}

Eigen::MatrixXd SphereFactor::kernel_matrix(int a,
                                            const Eigen::MatrixXd& points) const {
  Eigen::MatrixXd dots = points * nodes_.transpose();
  zonal_kernel_inplace(p_, a, dots);
  return dots;
}

Eigen::MatrixXd SphereFactor::projection_to_centers(int a) const {
  const auto b = basis(a);
  Eigen::MatrixXd e = kernel_matrix(a, b->centers);
  const double scale = static_cast<double>(b->dim) / volume_;
  e = scale * e * weights_.asDiagonal();
  return e;
}

QuadratureGrid::QuadratureGrid(Signature sig, int exact_degree)
    : sig_(sig), degree_(exact_degree) {
  if (sig.p < 2 || sig.q < 2)
    throw std::invalid_argument("build_grid: numeric grids need p,q >= 2");
  u_ = std::make_shared<SphereFactor>(sig.p, exact_degree);
  v_ = std::make_shared<SphereFactor>(sig.q, exact_degree);
  long long cap = 8'000'000;
  if (const char* env = std::getenv("MINREP_MAX_NODES")) {
    const long long c = std::atoll(env);
    if (c > 0) cap = c;
  }
  const long long total =
      static_cast<long long>(u_->size()) * static_cast<long long>(v_->size());
  if (total > cap)
    throw std::runtime_error("build_grid: node count " + std::to_string(total) +
                             " exceeds cap " + std::to_string(cap) +
                             " (MINREP_MAX_NODES)");
}

double QuadratureGrid::total_weight() const {
  return u_->weights().sum() * v_->weights().sum();
}

SpherePoint QuadratureGrid::point(int k) const {
  const int i = k / v_->size(), j = k % v_->size();
  return SpherePoint(u_->nodes().row(i).transpose(),
                     v_->nodes().row(j).transpose());
}

int QuadratureGrid::antipode_index(int k) const {
  const int i = k / v_->size(), j = k % v_->size();
  return u_->antipode()[i] * v_->size() + v_->antipode()[j];
}

GridPtr build_grid(const Signature& sig, int exact_degree) {
  return std::make_shared<const QuadratureGrid>(sig, exact_degree);
}

GridFunction::GridFunction(GridPtr g, Eigen::VectorXcd v)
    : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid->size())
    throw std::invalid_argument("GridFunction: value count != node count");
}

GridFunction GridFunction::from_function(
    const GridPtr& g, const std::function<Complex(const SpherePoint&)>& f) {
  Eigen::VectorXcd vals(g->size());
  parallel_for(g->size(), [&](int lo, int hi) {
    for (int k = lo; k < hi; ++k) vals[k] = f(g->point(k));
  });
  return GridFunction(g, std::move(vals));
}

Complex l2_inner(const GridFunction& f, const GridFunction& g) {
  if (f.grid.get() != g.grid.get())
    throw std::invalid_argument("l2_inner: functions on different grids");
  const int nq = f.grid->vfactor().size();
  Complex acc(0.0, 0.0);
  const auto& wu = f.grid->ufactor().weights();
  const auto& wv = f.grid->vfactor().weights();
  for (int k = 0; k < f.size(); ++k)
    acc += wu[k / nq] * wv[k % nq] * f.values[k] * std::conj(g.values[k]);
  return acc;
}

double l2_norm(const GridFunction& f) {
  return std::sqrt(std::abs(l2_inner(f, f)));
}

// ||sum c_st phi_s psi_t||^2 from the cached kernel Grams of both bases
double ZonalComponent::norm_sq() const {
  const Eigen::MatrixXcd t = ubasis->gram * coef * vbasis->gram;
  const double scale = (sphere_volume(ubasis->p) / ubasis->dim) *
                       (sphere_volume(vbasis->p) / vbasis->dim);
  return scale * t.cwiseProduct(coef.conjugate()).sum().real();
}

Complex ZonalComponent::evaluate(const SpherePoint& z) const {
  const int mu = static_cast<int>(ubasis->centers.rows());
  const int mv = static_cast<int>(vbasis->centers.rows());
  Eigen::VectorXd phiu(mu), phiv(mv);
  for (int s = 0; s < mu; ++s)
    phiu[s] = zonal_kernel(ubasis->p, ubasis->degree,
                           ubasis->centers.row(s).dot(z.u));
  for (int t = 0; t < mv; ++t)
    phiv[t] = zonal_kernel(vbasis->p, vbasis->degree,
                           vbasis->centers.row(t).dot(z.v));
  return phiu.transpose() * (coef * phiv);
}

double SpectralFunction::component_norm_sq(KTypeLabel l) const {
  auto it = comps_.find(l);
  return it == comps_.end() ? 0.0 : it->second.norm_sq();
}

double SpectralFunction::norm_sq() const {
  double acc = 0.0;
  for (const auto& [l, c] : comps_) acc += c.norm_sq();
  return acc;
}

Complex SpectralFunction::evaluate(const SpherePoint& z) const {
  Complex acc(0.0, 0.0);
  for (const auto& [l, c] : comps_) acc += c.evaluate(z);
  return acc;
}

Eigen::VectorXcd SpectralFunction::evaluate_many(
    const std::vector<SpherePoint>& pts) const {
  Eigen::VectorXcd out(pts.size());
  parallel_for(static_cast<int>(pts.size()), [&](int lo, int hi) {
    for (int k = lo; k < hi; ++k) out[k] = evaluate(pts[k]);
  });
  return out;
}

namespace {

using RowMat =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// grid values as a (Np x Nq) real pair
struct SplitValues {
  Eigen::MatrixXd re, im;
};

SplitValues split_values(const GridFunction& f) {
  const int np = f.grid->ufactor().size(), nq = f.grid->vfactor().size();
  Eigen::Map<const RowMat> m(f.values.data(), np, nq);
  return {m.real(), m.imag()};
}

ZonalComponent fit_component(KTypeLabel label, const Eigen::MatrixXd& ep,
                             const Eigen::MatrixXd& eq, const SplitValues& sv,
                             std::shared_ptr<const ZonalBasis> bu,
                             std::shared_ptr<const ZonalBasis> bv) {
  const Eigen::MatrixXd vre = ep * sv.re * eq.transpose();
  const Eigen::MatrixXd vim = ep * sv.im * eq.transpose();
  ZonalComponent c;
  c.label = label;
  c.ubasis = std::move(bu);
  c.vbasis = std::move(bv);
  const Eigen::MatrixXd cre = c.ubasis->gram_pinv * vre * c.vbasis->gram_pinv;
  const Eigen::MatrixXd cim = c.ubasis->gram_pinv * vim * c.vbasis->gram_pinv;
  c.coef = cre.cast<Complex>();
  c.coef.imag() = cim;
  return c;
}

GridFunction materialize(const GridPtr& grid, const ZonalComponent& c) {
  const SphereFactor& uf = grid->ufactor();
  const SphereFactor& vf = grid->vfactor();
  const Eigen::MatrixXd ku = uf.kernel_matrix(c.label.a, c.ubasis->centers);
  const Eigen::MatrixXd kv = vf.kernel_matrix(c.label.b, c.vbasis->centers);
  const Eigen::MatrixXd re =
      ku.transpose() * c.coef.real() * kv;  // Np x Nq
  const Eigen::MatrixXd im = ku.transpose() * c.coef.imag() * kv;
  Eigen::VectorXcd vals(grid->size());
  Eigen::Map<RowMat> out(vals.data(), uf.size(), vf.size());
  out.real() = re;
  out.imag() = im;
  return GridFunction(grid, std::move(vals));
}

}  // namespace

GridFunction SpectralFunction::component_values(KTypeLabel l) const {
  auto it = comps_.find(l);
  if (it == comps_.end()) {
    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(grid_->size());
    return GridFunction(grid_, std::move(zero));
  }
  return materialize(grid_, it->second);
}

GridFunction SpectralFunction::to_grid() const {
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(grid_->size());
  for (const auto& [l, c] : comps_) acc += materialize(grid_, c).values;
  return GridFunction(grid_, std::move(acc));
}

ZonalComponent project_component(const GridFunction& f, KTypeLabel label) {
  const QuadratureGrid& grid = *f.grid;
  const SphereFactor& uf = grid.ufactor();
  const SphereFactor& vf = grid.vfactor();
  const Eigen::MatrixXd ep = uf.projection_to_centers(label.a);
  const Eigen::MatrixXd eq = vf.projection_to_centers(label.b);
  return fit_component(label, ep, eq, split_values(f), uf.basis(label.a),
                       vf.basis(label.b));
}

GridFunction project_ktype(const GridFunction& f, KTypeLabel label) {
  return materialize(f.grid, project_component(f, label));
}

SpectralFunction decompose(const GridFunction& f, int a_max, int b_max) {
  if (a_max < 0 || b_max < 0)
    throw std::invalid_argument("decompose: cutoffs must be >= 0");
  const QuadratureGrid& grid = *f.grid;
  const SphereFactor& uf = grid.ufactor();
  const SphereFactor& vf = grid.vfactor();
  const SplitValues sv = split_values(f);

  std::vector<Eigen::MatrixXd> eq(b_max + 1);
  std::vector<std::shared_ptr<const ZonalBasis>> bv(b_max + 1);
  for (int b = 0; b <= b_max; ++b) {
    eq[b] = vf.projection_to_centers(b);
    bv[b] = vf.basis(b);
  }

  SpectralFunction out(f.grid);
  double captured = 0.0;
  for (int a = 0; a <= a_max; ++a) {
    const Eigen::MatrixXd ep = uf.projection_to_centers(a);
    auto bu = uf.basis(a);
    const Eigen::MatrixXd hre = ep * sv.re;  // m_a x Nq
    const Eigen::MatrixXd him = ep * sv.im;
    for (int b = 0; b <= b_max; ++b) {
      ZonalComponent c;
      c.label = {a, b};
      c.ubasis = bu;
      c.vbasis = bv[b];
      const Eigen::MatrixXd vre = hre * eq[b].transpose();
      const Eigen::MatrixXd vim = him * eq[b].transpose();
      const Eigen::MatrixXd cre = bu->gram_pinv * vre * bv[b]->gram_pinv;
      const Eigen::MatrixXd cim = bu->gram_pinv * vim * bv[b]->gram_pinv;
      c.coef = cre.cast<Complex>();
      c.coef.imag() = cim;
      captured += c.norm_sq();
      out.components().emplace(c.label, std::move(c));
    }
  }
  const double total = l2_norm(f);
  out.set_tail_mass(total * total - captured);
  return out;
}

}  // namespace minrep
