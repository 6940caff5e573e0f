#pragma once

// Vectorial facet mechanics (simplified LDPM with isotropic damage and
// exponential softening) and the conduit transport law (intact permeability
// plus cubic crack flow).

#include <algorithm>
#include <cmath>
#include <span>

#include "poromesh/core.hpp"

namespace poromesh::law {

struct MechParams {
  double E0 = 0;     // normal elastic constant [Pa]
  double alpha = 0;  // tangential/normal stiffness ratio [-]
  double ft = 0;     // tensile strength [Pa]
  double Gt = 0;     // tensile fracture energy [J/m^2]

  void validate() const {
    if (E0 <= 0 || ft <= 0 || Gt <= 0) throw ConfigError("MechParams: E0, ft, Gt must be positive");
    if (alpha <= 0 || alpha > 1.0) throw ConfigError("MechParams: alpha must lie in (0,1]");
  }

  // K_t > 0 requires 2 E0 Gt > ft^2 l; checked against the longest facet.
  void validate_for_length(double l) const {
    if (2.0 * E0 * Gt <= ft * ft * l)
      throw ConfigError("MechParams: facet length " + std::to_string(l) +
                        " violates K_t positivity (2 E0 Gt <= ft^2 l)");
    if (kt(l) <= ks(l))
      throw ConfigError("MechParams: K_t <= K_s, exponent n_t undefined for l=" + std::to_string(l));
  }

  double kt(double l) const { return 2.0 * E0 * ft * ft * l / (2.0 * E0 * Gt - ft * ft * l); }
  double ks(double l) const {
    return 18.0 * alpha * E0 * ft * ft * l / (32.0 * alpha * E0 * Gt - 9.0 * ft * ft * l);
  }
};

struct MechFacetState {
  double damage = 0.0;  // non-decreasing in [0,1)
  double max_eps_n = 0.0;
  double max_eps_t = 0.0;
};

struct TransportParams {
  double capacity = 0;    // c [s^2/m^2]; Biot modulus M_b = 1/c
  double rho_w0 = 0;      // fluid density at reference pressure [kg/m^3]
  double kappa = 0;       // intrinsic permeability [m^2]
  double viscosity = 0;   // mu [Pa s]
  double tortuosity = 1;  // crack tortuosity xi [-]
  double Kw = 0;          // fluid bulk modulus [Pa]
  double biot_b = 0;      // Biot coefficient [-]
  double p0 = 0;          // reference pressure [Pa]

  double biot_modulus() const { return 1.0 / capacity; }
  double intact_lambda() const { return rho_w0 * kappa / viscosity; }

  void validate() const {
    if (capacity <= 0 || rho_w0 <= 0 || kappa <= 0 || viscosity <= 0 || Kw <= 0 || tortuosity < 0)
      throw ConfigError("TransportParams: physical values must be positive");
    if (biot_b < 0 || biot_b > 1) throw ConfigError("TransportParams: b must lie in [0,1]");
  }
};

// Direction of straining, tan(omega) = eps_N / (sqrt(alpha) eps_T).
inline double straining_direction(double eps_n, double eps_t, double alpha) {
  return std::atan2(eps_n, std::sqrt(alpha) * eps_t);
}

// Equivalent strength, two branches meeting at omega0.
inline double equivalent_strength(double omega, double omega0, const MechParams& p) {
  const double s = std::sin(omega), c = std::cos(omega);
  if (omega < omega0) return 16.0 * p.ft / std::sqrt(s * s + p.alpha * c * c);
  const double num = 4.52 * s - std::sqrt(20.0704 * s * s + 9.0 * p.alpha * c * c);
  const double den = 0.04 * s * s - p.alpha * c * c;
  return p.ft * num / den;
}

// omega0 solves f_eq branch continuity.  The second branch has a pole at
// sin^2 w = alpha/(0.04+alpha); the root lies between the pole and 0.
inline double solve_omega0(const MechParams& p) {
  const double pole = -std::asin(std::sqrt(p.alpha / (0.04 + p.alpha)));
  double lo = pole + 1e-9, hi = -1e-12;
  auto gap = [&](double w) {
    return equivalent_strength(w, 1.0, p) - equivalent_strength(w, -10.0, p);
  };  // omega0 sentinel forces branch 1 / branch 2 respectively
  double glo = gap(lo), ghi = gap(hi);
  if (glo * ghi > 0) throw ConfigError("MechParams: no branch intersection for omega0");
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi), gm = gap(mid);
    if (gm * glo <= 0) {
      hi = mid;
      ghi = gm;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

// Initial post-peak slope K(omega); -K_t in pure tension, 0.26 E0 in pure
// compression, both branches vanish at omega0.
inline double softening_slope(double omega, double omega0, double l, const MechParams& p) {
  const double half_pi = std::acos(0.0);
  if (omega < omega0) {
    const double r = (omega + half_pi) / (omega0 + half_pi);
    return 0.26 * p.E0 * (1.0 - r * r);
  }
  const double Kt = p.kt(l), Ks = p.ks(l);
  const double nt = std::log(Kt / (Kt - Ks)) / std::log(1.0 - 2.0 * omega0 / (2.0 * half_pi));
  const double r = (omega - half_pi) / (omega0 - half_pi);
  return -Kt * (1.0 - std::pow(r, nt));
}

// Precomputed per-parameter-set constants.
class FacetLaw {
 public:
  FacetLaw() = default;
  FacetLaw(const MechParams& p) : p_(p) {
    p_.validate();
    omega0_ = solve_omega0(p_);
  }

  const MechParams& params() const { return p_; }
  double omega0() const { return omega0_; }

  struct Result {
    double s_n = 0, s_m = 0, s_l = 0;  // solid tractions [Pa]
    double delta_n = 0;                // normal crack opening [m]
  };

  // Evaluates solid traction and updates the damage state in place.
  // Strain ordering is (N, M, L); l is the facet length.
  Result solid_traction(double eps_n, double eps_m, double eps_l, double l,
                        MechFacetState& state) const {
    const double eps_t = std::hypot(eps_m, eps_l);
    const double eps_eq = std::sqrt(eps_n * eps_n + p_.alpha * eps_t * eps_t);
    Result r;
    if (eps_eq > 0) {
      state.max_eps_n = std::max(state.max_eps_n, eps_n);
      state.max_eps_t = std::max(state.max_eps_t, eps_t);
      const double omega = straining_direction(eps_n, eps_t, p_.alpha);
      const double feq = equivalent_strength(omega, omega0_, p_);
      const double K = softening_slope(omega, omega0_, l, p_);
      const double hist = std::sqrt(state.max_eps_n * state.max_eps_n +
                                    p_.alpha * state.max_eps_t * state.max_eps_t);
      double chi;
      if (omega < omega0_)
        chi = eps_eq;
      else if (omega < 0)
        chi = eps_eq * (omega / omega0_) + hist * (1.0 - omega / omega0_);
      else
        chi = hist;
      const double over = std::max(0.0, chi - feq / p_.E0);
      const double s_eq = feq * std::exp(K / feq * over);
      state.damage = std::clamp(std::max(state.damage, 1.0 - s_eq / (p_.E0 * eps_eq)), 0.0, 1.0);
    }
    const double sec = (1.0 - state.damage) * p_.E0;
    r.s_n = sec * eps_n;
    r.s_m = sec * p_.alpha * eps_m;
    r.s_l = sec * p_.alpha * eps_l;
    r.delta_n = std::max(0.0, (eps_n - r.s_n / p_.E0) * l);
    return r;
  }

 private:
  MechParams p_;
  double omega0_ = 0;
};

// Total traction t = s - b p_a e_N expressed in the facet frame: only the
// normal component is altered.
inline Vec3 total_traction(const Vec3& s_local, double p_a, double biot_b) {
  return Vec3(s_local.x() - biot_b * p_a, s_local.y(), s_local.z());
}

// Conduit permeability coefficient: intact term plus cubic crack flow over
// the mechanical elements crossing the conduit.  Closed (negative) openings
// do not contribute.  The pressure argument is accepted for Eq.-level
// generality but the shipped law ignores it.
inline double conduit_permeability(std::span<const double> delta_n, std::span<const double> crack_len,
                                   double S, const TransportParams& tp, double p_lambda = 0) {
  (void)p_lambda;
  double crack = 0;
  for (size_t i = 0; i < delta_n.size(); ++i) {
    const double d = std::max(0.0, delta_n[i]);
    crack += d * d * d * crack_len[i];
  }
  return tp.intact_lambda() + tp.tortuosity * tp.rho_w0 / (12.0 * tp.viscosity * S) * crack;
}

// Darcy-type mass flux along the conduit direction.
inline double flux(double lambda, double g) { return -lambda * g; }

}  // namespace poromesh::law
