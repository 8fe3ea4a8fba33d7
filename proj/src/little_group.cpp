#include "iqh/little_group.hpp"

#include <cmath>

#include "iqh/errors.hpp"

namespace iqh {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 4x4 linear solve over a field: returns X with A X = B, rows of a/b
// being matrix rows. Pivot by largest absolute value; works for double
// and for exact rationals.
template <typename S>
std::array<std::array<S, 4>, 4> solve4(std::array<std::array<S, 4>, 4> a,
                                       std::array<std::array<S, 4>, 4> b) {
  using std::abs;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == S(0)) throw DataError("singular basis in little-group construction");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    S inv = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] = a[col][j] / inv;
      b[col][j] = b[col][j] / inv;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      S f = a[r][col];
      if (f == S(0)) continue;
      for (int j = 0; j < 4; ++j) {
        a[r][j] = a[r][j] - f * a[col][j];
        b[r][j] = b[r][j] - f * b[col][j];
      }
    }
  }
  return b;
}

// Paraboloid-basis construction of the unique little-group element that
// induces the plane motion (u,v) -> R(phi)(u,v) + (alpha,beta). Works in
// any frame {k, e1, e2, b} with k.b = 2, e_i.e_j = -delta_ij and all
// other products zero. The lift of a plane point to the paraboloid
// {x.x = 0, k.x = 2} is b + u e1 + v e2 + (u^2+v^2)/4 k; propagating four
// lifted points through the motion pins the matrix down uniquely.
template <typename S, typename Vec>
std::array<std::array<S, 4>, 4> little_from_motion(const S& c, const S& s, const S& alpha,
                                                   const S& beta, const Vec& k, const Vec& e1,
                                                   const Vec& e2, const Vec& b) {
  const S quarter = S(1) / S(4);
  auto lift = [&](const S& u, const S& v) {
    std::array<S, 4> x;
    S t = (u * u + v * v) * quarter;
    for (int i = 0; i < 4; ++i) x[i] = b[i] + u * e1[i] + v * e2[i] + t * k[i];
    return x;
  };
  auto moved = [&](const S& u, const S& v) {
    return lift(c * u - s * v + alpha, s * u + c * v + beta);
  };

  const std::array<std::pair<S, S>, 4> points = {
      std::pair<S, S>{S(0), S(0)}, {S(1), S(0)}, {S(0), S(1)}, {S(-1), S(-1)}};

  // Lambda N = M with the lifted points as columns of N and M. Stored
  // transposed, the solve N^T Lambda^T = M^T fits solve4's row layout.
  std::array<std::array<S, 4>, 4> n_t{}, m_t{};
  for (int p = 0; p < 4; ++p) {
    auto np = lift(points[p].first, points[p].second);
    auto mp = moved(points[p].first, points[p].second);
    for (int i = 0; i < 4; ++i) {
      n_t[p][i] = np[i];
      m_t[p][i] = mp[i];
    }
  }
  std::array<std::array<S, 4>, 4> lambda_t = solve4(n_t, m_t);
  std::array<std::array<S, 4>, 4> lambda;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) lambda[i][j] = lambda_t[j][i];
  }
  return lambda;
}

void require_little_group(const Mat4& lambda, const Vec4& k) {
  double scale = std::max(1.0, k.cwiseAbs().maxCoeff());
  if (k_residual(lambda, k) > kRoundTripTol * scale) {
    throw DomainError("matrix does not fix k: not in the little group");
  }
  if (metric_residual(lambda) > kRoundTripTol) {
    throw DomainError("matrix does not preserve the metric");
  }
}

}  // namespace

Mat4 minkowski_metric() {
  Mat4 g = Mat4::Zero();
  g(0, 0) = 1;
  g(1, 1) = g(2, 2) = g(3, 3) = -1;
  return g;
}

double minkowski_dot(const Vec4& a, const Vec4& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

std::complex<double> minkowski_dot(const CVec4& a, const CVec4& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

double metric_residual(const Mat4& lambda) {
  Mat4 g = minkowski_metric();
  return (lambda.transpose() * g * lambda - g).cwiseAbs().maxCoeff();
}

double k_residual(const Mat4& lambda, const Vec4& k) {
  return (lambda * k - k).cwiseAbs().maxCoeff();
}

E2Element compose(const E2Element& a, const E2Element& b) {
  double phi = a.phi + b.phi;
  while (phi > kPi) phi -= 2 * kPi;
  while (phi <= -kPi) phi += 2 * kPi;
  double ca = std::cos(a.phi), sa = std::sin(a.phi);
  return E2Element{phi, ca * b.alpha - sa * b.beta + a.alpha, sa * b.alpha + ca * b.beta + a.beta};
}

LightFrame adapted_frame(const Vec4& k) {
  double k0 = k(0);
  if (k0 <= 0 || std::abs(minkowski_dot(k, k)) > kConstructionTol * std::max(1.0, k0 * k0)) {
    throw DomainError("momentum must be light-like with k0 > 0");
  }
  Eigen::Vector3d n = Eigen::Vector3d(k(1), k(2), k(3)).normalized();

  // Spatial rotation taking z to n; x-axis flip when n is opposite to z.
  Eigen::Vector3d z(0, 0, 1);
  Eigen::Matrix3d rot;
  if ((n + z).norm() < 1e-12) {
    rot = Eigen::AngleAxisd(kPi, Eigen::Vector3d::UnitX()).toRotationMatrix();
  } else {
    Eigen::Vector3d axis = z.cross(n);
    double sin_angle = axis.norm();
    if (sin_angle < 1e-15) {
      rot = Eigen::Matrix3d::Identity();
    } else {
      rot = Eigen::AngleAxisd(std::atan2(sin_angle, z.dot(n)), axis / sin_angle)
                .toRotationMatrix();
    }
  }

  LightFrame f;
  f.k = k;
  f.e1 = Vec4(0, rot(0, 0), rot(1, 0), rot(2, 0));
  f.e2 = Vec4(0, rot(0, 1), rot(1, 1), rot(2, 1));
  f.nminus = Vec4(1, -n(0), -n(1), -n(2)) / k0;
  return f;
}

Mat4 standard_transform(const Vec4& k) {
  LightFrame f = adapted_frame(k);
  // Frame correspondence: the standard frame (1,0,0,1), e1, e2,
  // (1,0,0,-1) has the same Gram of Minkowski products as (k, e1, e2,
  // nminus), so mapping one onto the other is a Lorentz transformation.
  Mat4 s;
  s.col(0) = 0.5 * (f.k + f.nminus);
  s.col(1) = f.e1;
  s.col(2) = f.e2;
  s.col(3) = 0.5 * (f.k - f.nminus);
  return s;
}

Mat4 e2_to_little(const E2Element& g, const Vec4& k) {
  LightFrame f = adapted_frame(k);
  auto lambda = little_from_motion<double>(std::cos(g.phi), std::sin(g.phi), g.alpha, g.beta, f.k,
                                           f.e1, f.e2, f.nminus);
  Mat4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out(i, j) = lambda[i][j];
  }
  return out;
}

E2Element little_to_e2(const Mat4& lambda, const Vec4& k) {
  require_little_group(lambda, k);
  LightFrame f = adapted_frame(k);
  Vec4 g_e1 = lambda * f.e1;
  Vec4 g_b = lambda * f.nminus;
  E2Element out;
  out.phi = std::atan2(-minkowski_dot(f.e2, g_e1), -minkowski_dot(f.e1, g_e1));
  out.alpha = -minkowski_dot(f.e1, g_b);
  out.beta = -minkowski_dot(f.e2, g_b);
  return out;
}

Eigen::Matrix2cd spiral_basis_matrix(const Mat4& lambda, const Vec4& k) {
  require_little_group(lambda, k);
  LightFrame f = adapted_frame(k);
  Eigen::Matrix2d b;
  b(0, 0) = -minkowski_dot(f.e1, lambda * f.e1);
  b(0, 1) = -minkowski_dot(f.e1, lambda * f.e2);
  b(1, 0) = -minkowski_dot(f.e2, lambda * f.e1);
  b(1, 1) = -minkowski_dot(f.e2, lambda * f.e2);

  const std::complex<double> im(0, 1);
  Eigen::Matrix2cd v;  // plane coordinates (x, y) -> spiral coordinates
  v << 1.0, -im, 1.0, im;
  v /= std::sqrt(2.0);
  return v * b.cast<std::complex<double>>() * v.inverse();
}

SubspaceSpec SubspaceSpec::mpar(const Vec4& k) {
  return SubspaceSpec{SubspaceTag::Mpar, {k.cast<std::complex<double>>()}};
}

SubspaceSpec SubspaceSpec::mperp(const Vec4& k) {
  LightFrame f = adapted_frame(k);
  return SubspaceSpec{SubspaceTag::Mperp,
                      {k.cast<std::complex<double>>(), f.e1.cast<std::complex<double>>(),
                       f.e2.cast<std::complex<double>>()}};
}

SubspaceSpec SubspaceSpec::mplus1(const Vec4& k) {
  LightFrame f = adapted_frame(k);
  const std::complex<double> im(0, 1);
  CVec4 spiral =
      (f.e1.cast<std::complex<double>>() + im * f.e2.cast<std::complex<double>>()) / std::sqrt(2.0);
  return SubspaceSpec{SubspaceTag::Mplus1, {k.cast<std::complex<double>>(), spiral}};
}

SubspaceSpec SubspaceSpec::mminus1(const Vec4& k) {
  LightFrame f = adapted_frame(k);
  const std::complex<double> im(0, 1);
  CVec4 spiral =
      (f.e1.cast<std::complex<double>>() - im * f.e2.cast<std::complex<double>>()) / std::sqrt(2.0);
  return SubspaceSpec{SubspaceTag::Mminus1, {k.cast<std::complex<double>>(), spiral}};
}

SubspaceSpec SubspaceSpec::custom(std::vector<CVec4> basis) {
  return SubspaceSpec{SubspaceTag::Custom, std::move(basis)};
}

InvarianceResult subspace_invariance_check(const Mat4& lambda, const SubspaceSpec& s) {
  if (s.basis.empty()) throw DataError("empty subspace basis");
  Eigen::MatrixXcd b(4, s.basis.size());
  for (std::size_t i = 0; i < s.basis.size(); ++i) b.col(static_cast<int>(i)) = s.basis[i];

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(b);
  if (qr.rank() < static_cast<int>(s.basis.size())) {
    throw DataError("subspace basis is linearly dependent");
  }

  double worst = 0;
  Eigen::Matrix4cd lc = lambda.cast<std::complex<double>>();
  for (const CVec4& v : s.basis) {
    CVec4 w = lc * v;
    Eigen::VectorXcd coeffs = qr.solve(w);
    double residual = (b * coeffs - w).norm() / std::max(1.0, w.norm());
    worst = std::max(worst, residual);
  }
  return InvarianceResult{worst <= kConstructionTol, worst};
}

SeededRng SeededRng::at_index(std::uint64_t seed, std::uint64_t index) {
  SeededRng r(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  r.next_u64();
  return r;
}

std::uint64_t SeededRng::next_u64() {
  // splitmix64
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SeededRng::uniform(double lo, double hi) {
  double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

E2Element random_e2(SeededRng& rng) {
  return E2Element{rng.uniform(-kPi, kPi), rng.uniform(-2, 2), rng.uniform(-2, 2)};
}

Mat4 random_little_element(const Vec4& k, SeededRng& rng) {
  return e2_to_little(random_e2(rng), k);
}

int orbit_span(const CVec4& v, const Vec4& k, int samples, std::uint64_t seed) {
  if (samples < 20) throw DataError("orbit_span needs at least 20 samples");
  Eigen::MatrixXcd orbit(samples, 4);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < samples; ++i) {
    SeededRng rng = SeededRng::at_index(seed, static_cast<std::uint64_t>(i));
    Mat4 lambda = random_little_element(k, rng);
    orbit.row(i) = (lambda.cast<std::complex<double>>() * v).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(orbit);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRoundTripTol * sv(0)) ++rank;
  }
  return rank;
}

RationalMat4 e2_to_little_exact(const Rational& cos_phi, const Rational& sin_phi,
                                const Rational& alpha, const Rational& beta) {
  if (cos_phi * cos_phi + sin_phi * sin_phi != 1) {
    throw DomainError("exact rotation needs cos^2 + sin^2 = 1");
  }
  std::array<Rational, 4> k{1, 0, 0, 1};
  std::array<Rational, 4> e1{0, 1, 0, 0};
  std::array<Rational, 4> e2{0, 0, 1, 0};
  std::array<Rational, 4> b{1, 0, 0, -1};
  return little_from_motion<Rational>(cos_phi, sin_phi, alpha, beta, k, e1, e2, b);
}

}  // namespace iqh
