#include "pslab/hb_identity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "pslab/compensated.hpp"
#include "pslab/errors.hpp"

namespace pslab {

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

bool HBParamReport::all_hold() const {
  return std::all_of(constraints.begin(), constraints.end(), [](const auto& c) { return c.holds; });
}

std::string HBParamReport::failures() const {
  std::string out;
  for (const auto& c : constraints) {
    if (c.holds) continue;
    if (!out.empty()) out += "; ";
    out += c.name + " (" + std::to_string(c.lhs) + " vs " + std::to_string(c.rhs) + ")";
  }
  return out;
}

HBParamReport check_params(const HBParams& p) {
  HBParamReport r;
  r.params = p;
  r.constraints.push_back({"u >= 1", p.u, 1.0, p.u >= 1.0});
  r.constraints.push_back({"u^2 <= z", p.u * p.u, p.z, p.u * p.u <= p.z});
  const double lhs = 128.0 * p.u * p.z * p.z;
  r.constraints.push_back({"128 u z^2 <= X", lhs, p.X, lhs <= p.X * (1.0 + 1e-12)});
  const double v3 = p.v * p.v * p.v;
  r.constraints.push_back({"2^20 X <= v^3", std::ldexp(p.X, 20), v3, std::ldexp(p.X, 20) <= v3});
  return r;
}

HBParamReport default_params(double X) {
  HBParams p;
  p.X = X;
  p.u = std::pow(X, 0.2) / 128.0;
  p.z = std::pow(X, 0.4);
  p.v = 128.0 * std::cbrt(X);
  return check_params(p);
}

void validate(const HBParams& p) {
  const auto r = check_params(p);
  if (!r.all_hold()) throw ConstraintViolation("decomposition constraints fail: " + r.failures());
}

std::string to_string(TermKind k) { return k == TermKind::type_i ? "TypeI" : "TypeII"; }

// ---------------------------------------------------------------------------
// Construction
//
// For n <= U^3 and M(s) = sum_{m<=U} mu(m) m^-s,
//   Lambda = sum_{j=1}^{3} (-1)^(j-1) C(3,j) mu_U^{*j} * 1^{*(j-1)} * log
// because (1 - zeta M)^3 has no coefficients below (U+1)^3. Each j-term is a
// sum over 2j variables: one log variable, j-1 constant variables and j
// Moebius variables <= U.
//
// A tuple with some smooth (log or constant) variable >= z goes to a type I
// sum whose inner variable is the first such one. The remaining tuples have
// all smooth variables < z; their ranges are cut into dyadic pieces (Moebius
// ranges are cut at u) and each box is a type II sum over the subproduct that
// fits [u, v].
// ---------------------------------------------------------------------------

namespace {

enum class Role { log_var, one_var, mu_var };

struct Piece {
  Role role;
  std::int64_t lo;
  std::int64_t hi;
};

struct Tables {
  std::int64_t X = 0;
  double log_x = 1.0;
  std::vector<int> mu;        // up to U
  std::vector<double> log_n;  // up to X
};

std::vector<int> moebius_table(std::int64_t n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<std::int64_t> primes;
  if (n >= 0) mu[0] = 0;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (const auto p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

std::int64_t icbrt_ceil(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(x)));
  while (r > 0 && r * r * r >= x) --r;
  while (r * r * r < x) ++r;
  return r;
}

std::int64_t ceil_to_int(double t) { return static_cast<std::int64_t>(std::ceil(t - 1e-9)); }

double role_coeff(const Tables& t, Role role, std::int64_t n) {
  switch (role) {
    case Role::mu_var:
      return t.mu[n];
    case Role::one_var:
      return 1.0;
    case Role::log_var:
      return t.log_n[n] / t.log_x;
  }
  return 0.0;
}

// Dirichlet convolution of the pieces' coefficient functions, truncated at cap.
CoeffArray convolve(const Tables& t, const std::vector<Piece>& pieces, std::int64_t cap) {
  CoeffArray acc{1, {1.0}};
  for (const auto& p : pieces) {
    const std::int64_t lo = acc.lo * p.lo;
    if (lo > cap) return {lo, {}};
    const std::int64_t hi = std::min(cap, acc.hi() * p.hi);  // no overflow: both <= X
    CoeffArray next{lo, std::vector<double>(hi - lo + 1, 0.0)};
    for (std::int64_t m = acc.lo; m <= acc.hi(); ++m) {
      const double am = acc.values[m - acc.lo];
      if (am == 0.0) continue;
      const std::int64_t xmax = std::min(p.hi, hi / m);
      for (std::int64_t x = p.lo; x <= xmax; ++x) next.values[m * x - lo] += am * role_coeff(t, p.role, x);
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<std::pair<std::int64_t, std::int64_t>> dyadic_pieces(std::int64_t lo, std::int64_t hi) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = lo; a <= hi;) {
    std::int64_t next = 1;
    while (next <= a) next <<= 1;  // next power of two above a
    const std::int64_t b = std::min(hi, next - 1);
    out.emplace_back(a, b);
    a = b + 1;
  }
  return out;
}

struct Blueprint {
  TermKind kind;
  int order;
  double scalar;
  std::vector<Piece> outer;
  std::vector<Piece> inner;  // type_ii only
  std::int64_t outer_cap;
  std::int64_t inner_lo;
  std::int64_t inner_cap;
  int log_power;
  bool classified;
};

int binom3(int j) { return j == 2 ? 3 : (j == 1 ? 3 : 1); }

bool has_log(const std::vector<Piece>& ps) {
  return std::any_of(ps.begin(), ps.end(), [](const Piece& p) { return p.role == Role::log_var; });
}

// Enumerates every term of the construction in a fixed order.
void plan(std::int64_t X, const HBParams& params, double log_x,
          const std::function<void(Blueprint&&)>& emit) {
  const std::int64_t U = icbrt_ceil(X);
  const std::int64_t zc = std::max<std::int64_t>(1, ceil_to_int(params.z));
  const std::int64_t uc = std::max<std::int64_t>(1, ceil_to_int(params.u));

  for (int j = 1; j <= 3; ++j) {
    const double sign = (j % 2 == 1 ? 1.0 : -1.0) * binom3(j);
    std::vector<Role> roles{Role::log_var};
    for (int i = 0; i < j - 1; ++i) roles.push_back(Role::one_var);
    for (int i = 0; i < j; ++i) roles.push_back(Role::mu_var);
    const int nv = static_cast<int>(roles.size());

    // Type I: first smooth variable that reaches z.
    if (zc <= X) {
      for (int s = 0; s < j; ++s) {
        std::vector<Piece> outer;
        bool empty = false;
        for (int i = 0; i < nv; ++i) {
          if (i == s) continue;
          if (roles[i] == Role::mu_var) {
            outer.push_back({roles[i], 1, U});
          } else if (i < s) {
            if (zc - 1 < 1) empty = true;
            outer.push_back({roles[i], 1, zc - 1});
          } else {
            outer.push_back({roles[i], 1, X});
          }
        }
        if (empty) continue;
        Blueprint bp;
        bp.kind = TermKind::type_i;
        bp.order = j;
        bp.scalar = sign * (has_log(outer) ? log_x : 1.0);
        bp.outer = std::move(outer);
        bp.outer_cap = X / zc;
        bp.inner_lo = zc;
        bp.inner_cap = X;
        bp.log_power = roles[s] == Role::log_var ? 1 : 0;
        bp.classified = true;
        emit(std::move(bp));
      }
    }

    // Type II: every smooth variable below z, boxes.
    const std::int64_t smooth_hi = std::min(zc - 1, X);
    if (smooth_hi < 1) continue;
    const auto smooth_cuts = dyadic_pieces(1, smooth_hi);
    std::vector<std::pair<std::int64_t, std::int64_t>> mu_cuts;
    if (uc > 1 && uc <= U) {
      mu_cuts = {{1, uc - 1}, {uc, U}};
    } else {
      mu_cuts = {{1, U}};
    }

    std::vector<Piece> box(nv);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t lo_prod) {
      if (i == nv) {
        // choose the inner group
        int best = -1;
        std::int64_t best_lo = -1;
        int best_size = 0;
        for (int mask = 1; mask < (1 << nv); ++mask) {
          std::int64_t lo_s = 1, lo_c = 1;
          double hi_s = 1.0;
          int size = 0;
          for (int k = 0; k < nv; ++k) {
            if (mask & (1 << k)) {
              lo_s *= box[k].lo;
              hi_s *= static_cast<double>(box[k].hi);
              ++size;
            } else {
              lo_c *= box[k].lo;
            }
          }
          const double hi_eff = std::min(hi_s, static_cast<double>(X / lo_c));
          if (static_cast<double>(lo_s) < params.u || hi_eff > params.v) continue;
          if (lo_s > best_lo || (lo_s == best_lo && size < best_size)) {
            best = mask;
            best_lo = lo_s;
            best_size = size;
          }
        }
        bool classified = best >= 0;
        if (!classified) {
          for (int k = 0; k < nv; ++k)
            if (roles[k] == Role::mu_var) {
              best = 1 << k;
              break;
            }
        }
        Blueprint bp;
        bp.kind = TermKind::type_ii;
        bp.order = j;
        bp.log_power = 0;
        bp.classified = classified;
        std::int64_t lo_s = 1, lo_c = 1;
        double hi_s = 1.0;
        for (int k = 0; k < nv; ++k) {
          if (best & (1 << k)) {
            bp.inner.push_back(box[k]);
            lo_s *= box[k].lo;
            hi_s *= static_cast<double>(box[k].hi);
          } else {
            bp.outer.push_back(box[k]);
            lo_c *= box[k].lo;
          }
        }
        bp.inner_lo = lo_s;
        bp.inner_cap = static_cast<std::int64_t>(std::min(hi_s, static_cast<double>(X / lo_c)));
        bp.outer_cap = X / lo_s;
        bp.scalar = sign * (has_log(bp.outer) || has_log(bp.inner) ? log_x : 1.0);
        emit(std::move(bp));
        return;
      }
      const auto& cuts = roles[i] == Role::mu_var ? mu_cuts : smooth_cuts;
      for (const auto& [lo, hi] : cuts) {
        if (lo_prod * lo > X) break;
        box[i] = {roles[i], lo, hi};
        rec(i + 1, lo_prod * lo);
      }
    };
    rec(0, 1);
  }
}

bool all_zero(const CoeffArray& a) {
  return std::all_of(a.values.begin(), a.values.end(), [](double v) { return v == 0.0; });
}

std::vector<cplx> random_g(std::int64_t X, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> g(X + 1);
  for (std::int64_t n = 1; n <= X; ++n) {
    const double r = unit(rng);
    g[n] = r * unit_exp(unit(rng));
  }
  return g;
}

}  // namespace

DecompStats count_terms(std::int64_t X, const HBParams& params) {
  if (X < 2) throw DomainError("decomposition requires X >= 2");
  DecompStats s;
  plan(X, params, std::log(static_cast<double>(X)), [&](Blueprint&& bp) {
    if (bp.kind == TermKind::type_i) {
      ++s.type_i;
    } else {
      ++s.type_ii;
      if (!bp.classified) ++s.unclassified;
    }
  });
  return s;
}

Decomposition decompose(std::int64_t X, const HBParams& params, const DecomposeOptions& opts) {
  if (X < 2) throw DomainError("decomposition requires X >= 2");
  Tables t;
  t.X = X;
  t.log_x = std::log(static_cast<double>(X));
  t.mu = moebius_table(icbrt_ceil(X));
  t.log_n.resize(X + 1, 0.0);
  for (std::int64_t n = 1; n <= X; ++n) t.log_n[n] = std::log(static_cast<double>(n));

  std::vector<Blueprint> blueprints;
  plan(X, params, t.log_x, [&](Blueprint&& bp) { blueprints.push_back(std::move(bp)); });

  Decomposition d;
  d.X = X;
  d.report = check_params(params);
  std::vector<DecompTerm> built(blueprints.size());
  std::vector<char> keep(blueprints.size(), 0);
  const auto nb = static_cast<std::int64_t>(blueprints.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < nb; ++i) {
    const auto& bp = blueprints[i];
    DecompTerm term;
    term.kind = bp.kind;
    term.scalar_coeff = bp.scalar;
    term.x_limit = X;
    term.identity_order = bp.order;
    term.classified = bp.classified;
    term.log_power = bp.log_power;
    term.inner_lo = bp.inner_lo;
    term.outer = convolve(t, bp.outer, bp.outer_cap);
    if (bp.kind == TermKind::type_ii) term.inner = convolve(t, bp.inner, bp.inner_cap);
    if (term.outer.values.empty() || all_zero(term.outer)) continue;
    if (bp.kind == TermKind::type_ii && (term.inner.values.empty() || all_zero(term.inner))) continue;
    built[i] = std::move(term);
    keep[i] = 1;
  }
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (!keep[i]) continue;
    auto& term = built[i];
    if (term.kind == TermKind::type_i) {
      ++d.stats.type_i;
    } else {
      ++d.stats.type_ii;
      if (!term.classified) ++d.stats.unclassified;
    }
    d.terms.push_back(std::move(term));
  }
  d.advisory = !d.report.all_hold() || d.stats.unclassified > 0;

  if (!coefficient_bounds_hold(d)) throw SelfTestFailure("coefficient exceeds d(m)^5");

  std::mt19937_64 rng(opts.seed);
  const double psi = chebyshev_psi(X);
  for (int k = 0; k < opts.self_test_count; ++k) {
    const auto g = random_g(X, rng);
    const double err = std::abs(recombine(d, g) - direct_lambda_sum(X, g));
    d.self_test_max_error = std::max(d.self_test_max_error, err);
    if (err > 1e-9 * psi)
      throw SelfTestFailure("recombination differs from sum Lambda(n) G(n) by " + std::to_string(err));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

cplx eval_term(const DecompTerm& term, std::span<const cplx> g) {
  const std::int64_t X = term.x_limit;
  if (static_cast<std::int64_t>(g.size()) < X + 1) throw DomainError("G must be tabulated on [0, X]");
  CompensatedComplexSum acc;
  const auto& a = term.outer;
  for (std::int64_t m = a.lo; m <= a.hi(); ++m) {
    const double am = a.values[m - a.lo];
    if (am == 0.0) continue;
    cplx inner{0.0, 0.0};
    const std::int64_t nmax = X / m;
    if (term.kind == TermKind::type_i) {
      for (std::int64_t n = term.inner_lo; n <= nmax; ++n) {
        const double w = term.log_power == 0 ? 1.0 : std::log(static_cast<double>(n));
        inner += w * g[m * n];
      }
    } else {
      const auto& b = term.inner;
      const std::int64_t top = std::min(b.hi(), nmax);
      for (std::int64_t n = b.lo; n <= top; ++n) inner += b.values[n - b.lo] * g[m * n];
    }
    acc.add(am * inner);
  }
  return term.scalar_coeff * acc.value();
}

cplx recombine(const Decomposition& d, std::span<const cplx> g) {
  const auto n = static_cast<std::int64_t>(d.terms.size());
  std::vector<cplx> parts(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) parts[i] = eval_term(d.terms[i], g);
  CompensatedComplexSum total;
  for (const auto& p : parts) total.add(p);
  return total.value();
}

cplx direct_lambda_sum(std::int64_t X, std::span<const cplx> g) {
  CompensatedComplexSum acc;
  for (std::int64_t n = 2; n <= X; ++n) {
    const double lam = von_mangoldt(n);
    if (lam != 0.0) acc.add(lam * g[n]);
  }
  return acc.value();
}

double chebyshev_psi(std::int64_t X) {
  CompensatedSum acc;
  for (std::int64_t n = 2; n <= X; ++n) acc.add(von_mangoldt(n));
  return acc.value();
}

bool coefficient_bounds_hold(const Decomposition& d) {
  const std::int64_t X = d.X;
  std::vector<std::int64_t> div(X + 1, 0);
  for (std::int64_t i = 1; i <= X; ++i)
    for (std::int64_t k = i; k <= X; k += i) ++div[k];
  auto ok = [&](const CoeffArray& a) {
    for (std::int64_t m = a.lo; m <= a.hi(); ++m) {
      const double d5 = std::pow(static_cast<double>(div[m]), 5);
      if (std::fabs(a.values[m - a.lo]) > d5 * (1.0 + 1e-12)) return false;
    }
    return true;
  };
  for (const auto& t : d.terms) {
    if (!ok(t.outer)) return false;
    if (t.kind == TermKind::type_ii && !ok(t.inner)) return false;
  }
  return true;
}

}  // namespace pslab
