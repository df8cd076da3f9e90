#pragma once

#include "pld/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pld::geom {

// Slowly varying factor phi(t) for regularly varying profiles f(t) = t^alpha * phi(t).
// Named family; no general expression parser.
struct SlowlyVarying {
  enum class Kind { One, LogPower };
  Kind kind = Kind::One;
  double beta = 0.0;  // phi = (ln t)^beta for LogPower

  double value(double t) const;
  double derivative(double t) const;
};

// Cross-section profile f(x1) of an x1-oriented product domain.
class Profile {
public:
  enum class Kind { PowerLaw, RegularlyVarying, LinearCone, Tabulated };

  static Profile power_law(double alpha, double scale = 1.0, double domain_start = 1.0);
  static Profile regularly_varying(double alpha, SlowlyVarying phi, double scale = 1.0,
                                   double domain_start = 1.0);
  static Profile linear_cone(double slope, double domain_start = 1.0);
  static Profile tabulated(std::vector<double> ts, std::vector<double> fs);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double slope() const { return slope_; }
  double domain_start() const { return t_start_; }

  double value(double t) const;
  double derivative(double t) const;

  // f(t/s)*s reparameterization used by dilation tests; PowerLaw/LinearCone only.
  Profile dilated(double s) const;

private:
  Profile() = default;
  Kind kind_ = Kind::PowerLaw;
  double alpha_ = 0.0;
  double scale_ = 1.0;
  double slope_ = 1.0;
  double t_start_ = 1.0;
  SlowlyVarying phi_;
  std::vector<double> tab_t_, tab_f_;
};

// Convex base set in R^{n-1}, origin strictly inside.
class BaseSet {
public:
  enum class Kind { Ball, Box, Polygon };

  static BaseSet ball(int dim, double radius);
  static BaseSet box(Vec halfwidths);
  static BaseSet polygon(const std::vector<Eigen::Vector2d>& vertices);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  // Minkowski gauge: < 1 strictly inside, = 1 on the boundary.
  double gauge(const Vec& y) const;
  bool contains(const Vec& y, double tol = 0.0) const { return gauge(y) <= 1.0 + tol; }

  // Supporting-plane outward unit normal at boundary point y (gauge(y) ~ 1).
  // Averaged over active faces at edges/vertices.
  Vec outward_normal(const Vec& y) const;

  // Distance from an inside point to the boundary of the set scaled by factor s.
  double boundary_distance(const Vec& y, double s) const;

  double inradius() const;  // measured from the origin
  double diameter() const;
  double support(const Vec& dir) const;

private:
  BaseSet() = default;
  Kind kind_ = Kind::Ball;
  int dim_ = 2;
  double radius_ = 1.0;
  Vec halfwidths_;
  // Polygon as half-spaces n.y <= b (unit n), plus vertices for diameter.
  std::vector<Eigen::Vector2d> verts_;
  std::vector<Eigen::Vector2d> edge_normals_;
  std::vector<double> edge_offsets_;
};

// Axial obstacle cylinder {|x_bar - center| <= radius} x [t0, t1].
struct ObstacleCylinder {
  double radius = 0.0;
  double t0 = 0.0, t1 = 0.0;
  Vec center;  // dim n-1; zero if empty

  bool contains(double x1, const Vec& xbar, double tol) const;
  double boundary_distance(double x1, const Vec& xbar) const;  // signed: >0 inside
};

struct DomainSpec {
  int n = 3;  // ambient dimension >= 3
  BaseSet base;
  Profile profile;
  std::vector<ObstacleCylinder> obstacles;

  // Cross-section membership: x_bar in f(x1)*Omega.
  double gauge_at(double x1, const Vec& xbar) const;
  DomainSpec dilated(double s) const;
};

enum class Membership { InteriorOfD, InG, OnGamma1, OnGamma2, Outside };

std::string to_string(Membership m);

// Classifies x against D = D~ \ G with relative tolerance band tol_rel.
Membership contains(const DomainSpec& d, const Vec& x, double tol_rel = 1e-9);

// Outward unit field l(x) on Gamma2; throws if x is not classified on Gamma2.
Vec outward_field(const DomainSpec& d, const Vec& x, double tol_rel = 1e-9);

// Distance (sampled lower estimate) from an inside point to Gamma2 = boundary of D~.
double gamma2_distance(const DomainSpec& d, const Vec& x);

struct AdmissibilityParams {
  double a = 2.0;   // in (1,4)
  double q = 0.45;  // in (0, a/4)
  int N0 = 3;

  double lambda() const;  // 2 q^N0 / a
  void validate() const;
};

class LayerSequence {
public:
  LayerSequence(std::vector<double> taus, double rho, AdmissibilityParams adm);

  int count() const { return static_cast<int>(taus_.size()); }  // number of taus
  double tau(int j) const;                                      // 1-based
  double radius(int j) const;                                   // R_j = rho*(tau_{j+1}-tau_j), j in [1, count-1]
  double rho() const { return rho_; }
  const AdmissibilityParams& adm() const { return adm_; }
  const std::vector<double>& taus() const { return taus_; }

private:
  std::vector<double> taus_;
  double rho_;
  AdmissibilityParams adm_;
};

// tau_j = F(j + j_offset), F inverse of t/f(t); exact power formula when available.
LayerSequence tau_sequence(const Profile& profile, int J, double rho, AdmissibilityParams adm,
                           int j_offset = 0);

// Geometric sequence tau_j = base^j (cone-style layering).
LayerSequence geometric_layers(double base, int J, double rho, AdmissibilityParams adm);

struct ProfileConditionReport {
  bool ok = false;
  double C_feqvR = 0.0;  // smallest sampled constant with C^-1 R_j < f < C R_j
  bool subexp_ok = false;
  std::string detail;
};

ProfileConditionReport check_profile_conditions(const Profile& profile, const LayerSequence& layers,
                                                int j_lo, int j_hi);

struct BallChain {
  bool ok = false;
  std::vector<Vec> points;      // z^0 ... z^N
  double min_lens_margin = 0.0; // min over pairs of (witness clearance - qR)
  std::string failure;
  Vec witness_xi;
};

// Constructive chain of condition (B): z^0 on the axis, straight march toward xi.
BallChain ball_chain(const DomainSpec& d, const LayerSequence& layers, int j, const Vec& xi);

struct LayerAdmissibility {
  int j = 0;
  bool ok = false;
  double margin_A = 0.0;    // dist(z0, Gamma2) - a R_j
  bool B_ok = false;
  int max_chain_len = 0;
  double min_lens_margin = 0.0;
  double margin_C = 0.0;    // min sampled (x - z^i) . l(x)
  std::string failure;
};

struct AdmissibilityReport {
  bool ok = false;
  std::vector<LayerAdmissibility> layers;
  double cone_phi = 0.0;  // recorded inner-cone half angle (sanity value, not enforced)
  std::string verdict;    // "sampled-verified" or failure description
};

struct SamplingConfig {
  int xi_per_section = 64;
  int boundary_per_ball = 256;
  std::uint64_t seed = 1;
  double tol_geo = 1e-9;
};

AdmissibilityReport check_admissibility(const DomainSpec& d, const LayerSequence& layers, int j_lo,
                                        int j_hi, const SamplingConfig& cfg = {});

}  // namespace pld::geom
