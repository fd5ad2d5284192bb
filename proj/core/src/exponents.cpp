#include "rlab/exponents.hpp"

#include <stdexcept>

namespace rlab {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::out_of_range(message);
}

const Rational kOne(1), kTwo(2);

}  // namespace

RateKind rate_kind_from_string(const std::string& name) {
  if (name == "lp_approx") return RateKind::lp_approx;
  if (name == "lp_endpoint_p2") return RateKind::lp_endpoint_p2;
  if (name == "barron_approx") return RateKind::barron_approx;
  if (name == "sobolev_approx_high") return RateKind::sobolev_approx_high;
  if (name == "sobolev_approx_low") return RateKind::sobolev_approx_low;
  if (name == "gen_upper_barron") return RateKind::gen_upper_barron;
  if (name == "gen_upper_sobolev") return RateKind::gen_upper_sobolev;
  if (name == "minimax_lower_sobolev") return RateKind::minimax_lower_sobolev;
  if (name == "minimax_lower_barron") return RateKind::minimax_lower_barron;
  if (name == "local_complexity_n") return RateKind::local_complexity_n;
  if (name == "funk_hecke_decay") return RateKind::funk_hecke_decay;
  throw std::invalid_argument("unknown rate kind: " + name);
}

std::string to_string(RateKind kind) {
  switch (kind) {
    case RateKind::lp_approx: return "lp_approx";
    case RateKind::lp_endpoint_p2: return "lp_endpoint_p2";
    case RateKind::barron_approx: return "barron_approx";
    case RateKind::sobolev_approx_high: return "sobolev_approx_high";
    case RateKind::sobolev_approx_low: return "sobolev_approx_low";
    case RateKind::gen_upper_barron: return "gen_upper_barron";
    case RateKind::gen_upper_sobolev: return "gen_upper_sobolev";
    case RateKind::minimax_lower_sobolev: return "minimax_lower_sobolev";
    case RateKind::minimax_lower_barron: return "minimax_lower_barron";
    case RateKind::local_complexity_n: return "local_complexity_n";
    case RateKind::funk_hecke_decay: return "funk_hecke_decay";
  }
  return "unknown";
}

Rational p_star(int d) { return Rational(2 * d + 2, d + 3); }

Rational zeta_rational(int d, const Rational& p) {
  require(p >= kOne && p <= kTwo, "zeta: p must lie in [1, 2]");
  if (p <= p_star(d)) return Rational(d) * (kOne / p - Rational(1, 2)) - Rational(1, 2);
  return Rational(d - 1, 2) * (kOne / p - Rational(1, 2));
}

Rational gamma_star(int d, int s, const Rational& p) {
  const Rational gamma = Rational(2) * zeta_rational(d, p) - Rational(d + 2 * s + 1);
  return -(gamma + kOne) / kTwo;
}

Rational lemma_sphere_exponent(int d, int s, const Rational& p) {
  require(p >= kOne && p < kTwo, "lemma_sphere_exponent: p must lie in [1, 2)");
  if (p <= p_star(d)) {
    // (p(2s+2d+1)-2d) / (d(2-p))
    return (p * Rational(2 * s + 2 * d + 1) - Rational(2 * d)) / (Rational(d) * (kTwo - p));
  }
  // (p(4s+3d-1)-2d+2) / (2d-2-pd+3p)
  return (p * Rational(4 * s + 3 * d - 1) - Rational(2 * d) + kTwo) /
         (Rational(2 * d - 2) - p * Rational(d) + Rational(3) * p);
}

ExponentResult theoretical_exponent(const ExponentQuery& q) {
  ExponentResult out;
  const int d = q.d;
  const int s = q.s;
  require(d >= 1, "theoretical_exponent: d must be >= 1");
  require(s >= 0, "theoretical_exponent: s must be >= 0");
  switch (q.kind) {
    case RateKind::lp_approx: {
      require(d >= 2, "lp_approx: d must be >= 2");
      require(q.p.has_value(), "lp_approx: p required");
      const Rational p = *q.p;
      require(p >= kOne && p < kTwo, "lp_approx: p must lie in [1, 2)");
      out.p_star = p_star(d);
      if (p <= *out.p_star)
        out.exponent = (p * Rational(2 * s + 2 * d + 1) - Rational(2 * d)) /
                       (Rational(2 * d) * p);
      else
        out.exponent = (p * Rational(4 * s + 3 * d - 1) - Rational(2 * d) + kTwo) /
                       (Rational(4 * d) * p);
      break;
    }
    case RateKind::lp_endpoint_p2:
      out.exponent = Rational(2 * s + d + 1, 2 * d);
      break;
    case RateKind::barron_approx:
      out.exponent = Rational(1, 2) + Rational(2 * s + 1, 2 * d);
      break;
    case RateKind::sobolev_approx_high: {
      require(q.alpha.has_value(), "sobolev_approx_high: alpha required");
      require(*q.alpha >= Rational(s + d), "sobolev_approx_high: needs alpha >= s + d");
      out.exponent = Rational(d + 2 * s, 2 * (d + 1));
      break;
    }
    case RateKind::sobolev_approx_low: {
      require(q.alpha.has_value(), "sobolev_approx_low: alpha required");
      const Rational alpha = *q.alpha;
      require(alpha.is_integer() && alpha > Rational(0) && alpha < Rational(s + d),
              "sobolev_approx_low: needs integer alpha in (0, s + d)");
      out.exponent = alpha * Rational(d + 2 * s) / Rational(2 * (s + d) * (d + 1));
      break;
    }
    case RateKind::gen_upper_barron: {
      out.exponent = Rational(d + 2 * s + 1, 2 * d + 2 * s + 1);
      out.log_factor = true;
      out.schedule = ScheduleInfo{Rational(d, 2 * d + 2 * s + 1),
                                  Rational(d + 2 * s + 1, 2 * d + 2 * s + 1), true};
      break;
    }
    case RateKind::gen_upper_sobolev: {
      require(q.alpha.has_value(), "gen_upper_sobolev: alpha required");
      const Rational alpha = *q.alpha;
      const Rational cutoff = Rational(s) + Rational(d + 1, 2);
      require(alpha.is_integer() && alpha > Rational(0) && alpha < cutoff,
              "gen_upper_sobolev: needs integer alpha in (0, s + (d+1)/2); "
              "use gen_upper_barron for alpha >= s + (d+1)/2");
      out.exponent = Rational(2) * alpha / (Rational(2) * alpha + Rational(d));
      out.log_factor = true;
      out.schedule = ScheduleInfo{
          Rational(d) / (Rational(2) * alpha + Rational(d)),
          Rational(1, 2) + Rational(2 * s + 1) / (Rational(4) * alpha + Rational(2 * d)), true};
      break;
    }
    case RateKind::minimax_lower_sobolev: {
      require(q.alpha.has_value(), "minimax_lower_sobolev: alpha required");
      const Rational alpha = *q.alpha;
      require(alpha > Rational(0), "minimax_lower_sobolev: alpha must be > 0");
      out.exponent = Rational(2) * alpha / (Rational(2) * alpha + Rational(d));
      break;
    }
    case RateKind::minimax_lower_barron:
      out.exponent = Rational(d + 2 * s + 1, 2 * d + 2 * s + 1);
      break;
    case RateKind::local_complexity_n:
      out.exponent = Rational(1, 2);
      break;
    case RateKind::funk_hecke_decay:
      require(d >= 2, "funk_hecke_decay: d must be >= 2");
      out.exponent = Rational(d + 2 * s + 1, 2);
      break;
  }
  return out;
}

}  // namespace rlab
