#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "iqh/scalar.hpp"

namespace iqh {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using CVec4 = Eigen::Vector4cd;

/// Construction tolerance (metric preservation, k fixing) and the looser
/// round-trip / rank tolerance.
inline constexpr double kConstructionTol = 1e-9;
inline constexpr double kRoundTripTol = 1e-8;

Mat4 minkowski_metric();
double minkowski_dot(const Vec4& a, const Vec4& b);
std::complex<double> minkowski_dot(const CVec4& a, const CVec4& b);

/// max |Lambda^T g Lambda - g|.
double metric_residual(const Mat4& lambda);
double k_residual(const Mat4& lambda, const Vec4& k);

/// Euclidean motion of the factor plane: rotation by phi followed from
/// the left, translations in plane units.
struct E2Element {
  double phi{0};
  double alpha{0};
  double beta{0};
};

/// Motion composition a after b: compose(a, b)(p) = a(b(p)).
E2Element compose(const E2Element& a, const E2Element& b);

/// Light-cone adapted frame: k.nminus = 2, e_i.e_j = -delta_ij, all other
/// products zero.
struct LightFrame {
  Vec4 k;
  Vec4 e1;
  Vec4 e2;
  Vec4 nminus;
};

/// Frame for a light-like k with k0 > 0; throws DomainError otherwise.
LightFrame adapted_frame(const Vec4& k);

/// Proper orthochronous transformation taking (1,0,0,1) to k.
Mat4 standard_transform(const Vec4& k);

/// The little-group element inducing the given plane motion, built by
/// propagating a four-point paraboloid basis; Lambda k = k and metric
/// preservation hold within kConstructionTol.
Mat4 e2_to_little(const E2Element& g, const Vec4& k);

/// Induced Euclidean motion of the factor plane of {k.x = const}.
/// Throws DomainError when Lambda does not fix k within tolerance.
E2Element little_to_e2(const Mat4& lambda, const Vec4& k);

/// Action on the factor space M_perp / M_par in the spiral basis
/// e^(+-1) = (e1 +- i e2)/sqrt(2); diag(e^{-i phi}, e^{+i phi}) for a
/// rotation by phi.
Eigen::Matrix2cd spiral_basis_matrix(const Mat4& lambda, const Vec4& k);

enum class SubspaceTag { Mpar, Mperp, Mplus1, Mminus1, Custom };

struct SubspaceSpec {
  SubspaceTag tag{SubspaceTag::Custom};
  std::vector<CVec4> basis;

  static SubspaceSpec mpar(const Vec4& k);
  static SubspaceSpec mperp(const Vec4& k);
  static SubspaceSpec mplus1(const Vec4& k);
  static SubspaceSpec mminus1(const Vec4& k);
  static SubspaceSpec custom(std::vector<CVec4> basis);
};

struct InvarianceResult {
  bool invariant{false};
  double residual{0};
};

/// True iff Lambda * span(S) stays inside span(S); the reported residual
/// is the largest relative least-squares projection error.
InvarianceResult subspace_invariance_check(const Mat4& lambda, const SubspaceSpec& s);

/// Deterministic splitmix64 stream; sample index i always sees the same
/// substream regardless of threading.
struct SeededRng {
  std::uint64_t state;

  explicit SeededRng(std::uint64_t seed) : state(seed) {}
  static SeededRng at_index(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform(double lo, double hi);
};

E2Element random_e2(SeededRng& rng);
Mat4 random_little_element(const Vec4& k, SeededRng& rng);

/// Numerical rank (tolerance kRoundTripTol, relative) of the orbit
/// {Lambda_i v} under `samples` seeded random little-group elements.
int orbit_span(const CVec4& v, const Vec4& k, int samples, std::uint64_t seed);

/// Exact-check mode: the same paraboloid construction over the rationals
/// in the standard frame k = (1,0,0,1). Requires cos^2 + sin^2 = 1; the
/// result fixes k and preserves the metric exactly.
using RationalMat4 = std::array<std::array<Rational, 4>, 4>;
RationalMat4 e2_to_little_exact(const Rational& cos_phi, const Rational& sin_phi,
                                const Rational& alpha, const Rational& beta);

}  // namespace iqh
