#pragma once

#include <optional>
#include <string>

#include "rlab/rational.hpp"

namespace rlab {

enum class RateKind {
  lp_approx,             // Theorem-1 style two-branch L^p approximation in m
  lp_endpoint_p2,        // p = 2 endpoint rate in m
  barron_approx,         // Barron-class approximation in m
  sobolev_approx_high,   // Sobolev approximation, alpha >= s + d
  sobolev_approx_low,    // Sobolev approximation, integer alpha in (0, s + d)
  gen_upper_barron,      // regularized ERM rate over the Barron class (log factor)
  gen_upper_sobolev,     // regularized ERM rate over W^{alpha,inf} (log factor)
  minimax_lower_sobolev,
  minimax_lower_barron,
  local_complexity_n,    // n^(-1/2) factor of the local complexity bound
  funk_hecke_decay,      // |lambda_i| ~ i^(-(d+2s+1)/2)
};

RateKind rate_kind_from_string(const std::string& name);
std::string to_string(RateKind kind);

struct ExponentQuery {
  RateKind kind = RateKind::lp_approx;
  int d = 2;
  int s = 1;
  std::optional<Rational> p;
  std::optional<Rational> alpha;
};

struct ScheduleInfo {
  Rational m_exponent;       // m ~ n^(m_exponent)
  Rational lambda_exponent;  // lambda ~ n^(-lambda_exponent) (log n included)
  bool lambda_log_factor = true;
};

struct ExponentResult {
  Rational exponent;  // decay magnitude, positive convention
  bool log_factor = false;
  std::optional<Rational> p_star;
  std::optional<ScheduleInfo> schedule;
};

// Exact rational exponent for the queried rate; throws std::out_of_range with
// the valid interval named when parameters leave the kind's validity range.
ExponentResult theoretical_exponent(const ExponentQuery& query);

// Breakpoint of the spherical-harmonic projection estimate, (2d+2)/(d+3).
Rational p_star(int d);

// Projection-theorem exponent zeta(p); two branches split at p_star.
Rational zeta_rational(int d, const Rational& p);

// Critical modulus order gamma* = -(gamma+1)/2 with gamma = 2 zeta - (d+2s+1).
Rational gamma_star(int d, int s, const Rational& p);

// Intermediate sphere-approximation exponent (error vs the F2-norm budget R).
Rational lemma_sphere_exponent(int d, int s, const Rational& p);

}  // namespace rlab
