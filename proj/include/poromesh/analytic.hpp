#pragma once

// Closed-form references: Terzaghi consolidation (pressure and traction
// loading) and the steady pressurized hollow cylinder.

#include <cmath>
#include <stdexcept>

#include "poromesh/core.hpp"

namespace poromesh::analytic {

struct PoroelasticConstants {
  double E = 0, nu = 0;  // drained elastic constants
  double b = 0;          // Biot coefficient
  double Mb = 0;         // Biot modulus [Pa]
  double L = 0;          // drainage length [m]
  double lambda = 0;     // macroscopic permeability coefficient [s]

  double G() const { return E / (2.0 * (1.0 + nu)); }
  double K() const { return E / (3.0 * (1.0 - 2.0 * nu)); }
  double upsilon() const { return b * (1.0 - 2.0 * nu) / (2.0 * (1.0 - nu)); }
  double Ku() const { return Mb * b * b + K(); }
  double nu_u() const {
    const double ku = Ku(), g = G();
    return (3.0 * ku - 2.0 * g) / (2.0 * (3.0 * ku + g));
  }
  double C() const {
    const double nuu = nu_u();
    return (1.0 - nuu) * (1.0 - 2.0 * nu) / (Mb * (1.0 - nu) * (1.0 - 2.0 * nuu));
  }
  double tau(double t) const { return lambda * t / (4.0 * C() * L * L); }

  // Default S for the traction case: matches the instantaneous undrained
  // pore pressure of uniaxial-strain loading, p(0+) = Mb b t / (Ku + 4G/3).
  double default_S() const {
    return upsilon() * L * (Ku() + 4.0 * G() / 3.0) / (G() * Mb * b);
  }

  void validate() const {
    if (E <= 0 || nu <= 0 || nu >= 0.5 || Mb <= 0 || L <= 0 || lambda <= 0)
      throw ConfigError("PoroelasticConstants: invalid values");
    if (nu_u() + 1e-15 < nu || nu_u() > 0.5)
      throw ConfigError("PoroelasticConstants: nu_u out of range");
    if (C() <= 0) throw ConfigError("PoroelasticConstants: C must be positive");
  }
};

namespace detail {
// Kahan accumulator; series terms are added in consecutive pairs.
struct Kahan {
  double sum = 0, c = 0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};
}  // namespace detail

// F1 = 1 - sum over odd m of 4/(m pi) sin(m pi chi / 2) exp(-m^2 pi^2 tau).
inline double terzaghi_F1(double chi, double tau) {
  if (tau <= 0) return chi == 0 ? 1.0 : 0.0;  // exact limit
  const double pi = std::acos(-1.0);
  detail::Kahan acc;
  int terms = 0;
  const int min_terms = tau < 1e-4 ? 50 : 2;
  for (long m = 1; m < 4000000; m += 4) {
    double t1 = 4.0 / (m * pi) * std::sin(m * pi * chi / 2.0) * std::exp(-double(m) * m * pi * pi * tau);
    long m2 = m + 2;
    double t2 = 4.0 / (m2 * pi) * std::sin(m2 * pi * chi / 2.0) * std::exp(-double(m2) * m2 * pi * pi * tau);
    acc.add(t1 + t2);
    terms += 2;
    if (terms >= min_terms && std::abs(t1) + std::abs(t2) < 1e-12 * std::max(1.0, std::abs(acc.sum))) break;
  }
  return 1.0 - acc.sum;
}

// F2 = sum over odd m of 8/(m^2 pi^2) cos(m pi chi / 2) [1 - exp(-m^2 pi^2 tau)].
inline double terzaghi_F2(double chi, double tau) {
  if (tau <= 0) return 0.0;
  const double pi = std::acos(-1.0);
  detail::Kahan acc;
  int terms = 0;
  const int min_terms = tau < 1e-4 ? 50 : 2;
  for (long m = 1; m < 4000000; m += 4) {
    auto term = [&](long k) {
      return 8.0 / (double(k) * k * pi * pi) * std::cos(k * pi * chi / 2.0) *
             (1.0 - std::exp(-double(k) * k * pi * pi * tau));
    };
    double t1 = term(m), t2 = term(m + 2);
    acc.add(t1 + t2);
    terms += 2;
    if (terms >= min_terms && std::abs(t1) + std::abs(t2) < 1e-12 * std::max(1.0, std::abs(acc.sum))) break;
  }
  return acc.sum;
}

enum class TerzaghiCase { Pressure, Traction };

struct TerzaghiResult {
  double p = 0;  // pore pressure [Pa]
  double u = 0;  // axial displacement [m]
};

// chi = x/L in [0,1], tau the dimensionless time.  `load` is p* or t*.
// S (traction case only) defaults to the documented undrained calibration.
inline TerzaghiResult terzaghi(double chi, double tau, TerzaghiCase which,
                               const PoroelasticConstants& cst, double load, double S = 0) {
  const double F1 = terzaghi_F1(chi, tau);
  const double F2 = terzaghi_F2(chi, tau);
  const double G = cst.G(), ups = cst.upsilon();
  TerzaghiResult r;
  if (which == TerzaghiCase::Pressure) {
    r.p = load * F1;
    r.u = -load * ups * cst.L / G * F2;
  } else {
    if (S == 0) S = cst.default_S();
    const double nuu = cst.nu_u(), nu = cst.nu;
    r.p = load * ups * cst.L / (G * S) * (1.0 - F1);
    r.u = load * cst.L *
          ((1.0 - 2.0 * nuu) * (1.0 - chi) / (2.0 * G * (1.0 - nuu)) +
           (nuu - nu) * F2 / (2.0 * G * (1.0 - nu) * (1.0 - nuu)));
  }
  return r;
}

struct CylinderResult {
  double p = 0;    // pore pressure [Pa]
  double u_r = 0;  // radial displacement [m]
};

// Steady pressurized hollow cylinder, pressure p_i at r_i, zero at r_o.
inline CylinderResult cylinder(double r, const PoroelasticConstants& cst, double p_i,
                               double r_i, double r_o) {
  if (r < r_i || r > r_o) throw ConfigError("cylinder: r outside [r_i, r_o]");
  const double lnoi = std::log(r_o / r_i);
  const double nu = cst.nu, E = cst.E, b = cst.b;
  CylinderResult res;
  res.p = p_i * std::log(r_o / r) / lnoi;
  const double ro2 = r_o * r_o, ri2 = r_i * r_i;
  const double biot_part =
      -p_i * b / E * (1.0 - nu * nu) / 2.0 *
      (ro2 / (ro2 - ri2) * (ro2 * (1.0 + nu) / (r * (1.0 - nu)) + r) +
       r * (1.0 / (1.0 + nu) - std::log(r / r_i)) / lnoi);
  const double lame_part = -p_i * (1.0 - b) / E * ro2 * ri2 / (ro2 - ri2) *
                           ((1.0 + nu) / r + r * (1.0 - nu) / ro2);
  res.u_r = biot_part + lame_part;
  return res;
}

}  // namespace poromesh::analytic
