#include "joinmeet/subalgebra.hpp"

#include <algorithm>
#include <set>

#include "joinmeet/asl.hpp"
#include "joinmeet/classify.hpp"
#include "joinmeet/error.hpp"

namespace joinmeet {

GroebnerBasis presentation_ideal_gb(const PresentationMap& m, const MonomialOrder& order_A, GroebnerOptions opts) {
  if (m.size() == 0) {
    GroebnerBasis empty;
    empty.order = order_A;
    return empty;
  }
  // y-variables first, so order_A applies to the kept block unchanged.
  const std::size_t s = m.size(), nx = m.target()->size();
  std::vector<std::string> names = m.source()->names;
  for (const auto& n : m.target()->names) names.push_back(n);
  auto ring = make_ring(std::move(names));
  std::vector<Polynomial> xs;
  for (std::size_t v = 0; v < nx; ++v) xs.push_back(Polynomial::variable(ring, static_cast<Var>(s + v)));
  const std::int64_t g = m.image_degree();
  std::vector<Polynomial> gens;
  std::vector<Var> keep;
  std::vector<std::int64_t> grading(s, g);
  grading.resize(s + nx, 1);
  for (std::size_t e = 0; e < s; ++e) {
    gens.push_back(Polynomial::variable(ring, static_cast<Var>(e)) - m.images()[e].substitute(xs, ring));
    keep.push_back(static_cast<Var>(e));
  }
  if (opts.degree_cap) opts.degree_cap = static_cast<std::uint32_t>(*opts.degree_cap * g);
  opts.grading = grading;
  EliminationOptions eo;
  eo.keep_order = order_A;
  eo.gb = opts;
  auto gb = eliminate(gens, keep, eo);

  std::vector<Polynomial> back;
  for (std::size_t e = 0; e < s; ++e) back.push_back(Polynomial::variable(m.source(), static_cast<Var>(e)));
  for (std::size_t v = 0; v < nx; ++v) back.push_back(Polynomial(m.source()));
  for (auto& p : gb.generators) p = p.substitute(back, m.source());
  return gb;
}

std::map<std::uint32_t, std::size_t> eliminate_generator_degrees(const PresentationMap& m, std::uint32_t max_degree,
                                                                 std::size_t max_pairs) {
  GroebnerOptions go;
  go.max_pairs = max_pairs;
  auto gb = presentation_ideal_gb(m, MonomialOrder::degrevlex(), go);
  std::vector<Var> vars;
  for (std::size_t e = 0; e < m.size(); ++e) vars.push_back(static_cast<Var>(e));
  return minimal_generator_degrees(gb, vars, {}, max_degree);
}

PolynomialRingVerdict is_polynomial_ring(const Lattice& l, std::uint32_t cap, const PolynomialRingOptions& opts) {
  if (!is_distributive(l)) throw NotDistributive();
  PolynomialRingVerdict v;
  v.cap = cap;
  v.planar = is_planar(l);
  v.has_d54_sublattice = find_d54_sublattice(l).has_value();
  v.combinatorial = v.planar && !v.has_d54_sublattice;

  const auto sys = join_meet_system(l);
  const auto m = presentation_of(sys);
  if (m.size() == 0) {
    v.leading_certificate = true;
    v.certificate_order = "rank_weight";
  } else if (m.size() <= m.target()->size()) {
    if (leading_exponents_independent(m, sys.order)) {
      v.leading_certificate = true;
      v.certificate_order = "rank_weight";
    } else if (leading_exponents_independent(m, diagonal_weight_order(l))) {
      v.leading_certificate = true;
      v.certificate_order = "diagonal_weight";
    } else if (find_independent_leading_order(m, opts.search_trials)) {
      v.leading_certificate = true;
      v.certificate_order = "weight_search";
    }
  }

  KernelOptions ko = opts.kernel;
  ko.stop_at_nonzero = true;
  ko.minimal_generators = false;
  auto rep = graded_kernel(m, cap, ko);
  if (!rep.kernel_zero() && ko.field.is_prime()) {
    // A prime can only enlarge the kernel; settle nonzero counts over Q.
    ko.field = FieldMode::rationals();
    rep = graded_kernel(m, cap, ko);
  }
  v.kernel_zero = rep.kernel_zero();
  for (const auto& d : rep.degrees)
    if (d.dim_kernel > 0) {
      v.first_relation_degree = d.degree;
      break;
    }

  if (v.combinatorial != v.kernel_zero)
    throw TheoremViolation("polynomial-ring verdicts disagree: combinatorial " + std::string(v.combinatorial ? "yes" : "no") +
                           ", kernel through degree " + std::to_string(cap) + (v.kernel_zero ? " zero" : " nonzero"));
  if (v.leading_certificate && (!v.combinatorial || !v.kernel_zero))
    throw TheoremViolation("independent leading exponents on a lattice that is not a polynomial ring");
  return v;
}

MonomialOrder q_lattice_revlex(const Lattice& l, const PresentationMap& m) {
  const auto q = q_lattice(l);
  return revlex_from_poset(thin_asl_structure(m, q));
}

QuadraticReport quadratic_presentation_check(const Lattice& l, std::uint32_t cap, const QuadraticOptions& opts) {
  if (!is_distributive(l)) throw NotDistributive();
  QuadraticReport r;
  r.cap = cap;
  const auto m = presentation_of(join_meet_system(l));
  const auto rep = graded_kernel(m, cap, opts.kernel);
  r.generator_degrees = rep.generator_degrees();
  r.generated_in_degree_2 = true;
  for (const auto& [d, n] : r.generator_degrees)
    if (d >= 3 && n > 0) r.generated_in_degree_2 = false;

  const bool thin = is_thin(l);
  r.gb_order = thin ? "Q_L revlex" : "degrevlex";
  if (!opts.compute_gb) return r;
  if (m.size() == 0) {
    r.quadratic_gb = true;
    return r;
  }
  const auto order = thin ? q_lattice_revlex(l, m) : MonomialOrder::degrevlex();
  GroebnerOptions go;
  go.max_pairs = opts.max_pairs;
  try {
    auto gb = presentation_ideal_gb(m, order, go);
    if (!buchberger_criterion(gb.generators, order))
      throw InvariantViolation("elimination basis of the presentation ideal fails Buchberger's criterion");
    r.gb_size = gb.generators.size();
    std::uint32_t top = 0;
    for (const auto& p : gb.generators) top = std::max(top, p.degree());
    if (!gb.generators.empty()) r.gb_max_degree = top;
    r.quadratic_gb = top <= 2;
  } catch (const BudgetExceeded&) {
  }
  return r;
}

PresentationMap retract_images(const Lattice& l, std::size_t a, std::size_t b, const JoinMeetSystem& sys) {
  if (a >= l.size() || b >= l.size() || !l.leq(a, b)) throw InputError("retract needs a <= b");
  const auto iv = interval(l, a, b);
  const auto isys = join_meet_system(iv);
  std::vector<Polynomial> vals;
  for (std::size_t v = 0; v < l.size(); ++v) {
    if (l.leq(a, v) && l.leq(v, b))
      vals.push_back(Polynomial::variable(isys.ring, static_cast<Var>(iv.index_of(l.label(v)))));
    else
      vals.push_back(Polynomial(isys.ring));
  }
  auto key = [](const std::string& p, const std::string& q) { return p < q ? std::make_pair(p, q) : std::make_pair(q, p); };
  std::map<std::pair<std::string, std::string>, Polynomial> got;
  for (std::size_t e = 0; e < sys.pairs.size(); ++e) {
    auto img = sys.binomials[e].substitute(vals, isys.ring);
    if (img.is_zero()) continue;
    got.emplace(key(l.label(sys.pairs[e].first), l.label(sys.pairs[e].second)), std::move(img));
  }
  if (got.size() != isys.pairs.size())
    throw InvariantViolation("retract has " + std::to_string(got.size()) + " nonzero images, the interval has " +
                             std::to_string(isys.pairs.size()) + " binomials");
  std::vector<Polynomial> images;
  for (std::size_t e = 0; e < isys.pairs.size(); ++e) {
    auto it = got.find(key(iv.label(isys.pairs[e].first), iv.label(isys.pairs[e].second)));
    if (it == got.end() || (it->second != isys.binomials[e] && it->second != -isys.binomials[e]))
      throw InvariantViolation("retract image differs from the interval binomial " + isys.tags[e]);
    images.push_back(it->second);
  }
  return PresentationMap(isys.ring, isys.tags, std::move(images));
}

MonomialOrder pullback_order(const PresentationMap& m, const MonomialOrder& order_S, const MonomialOrder& tiebreak) {
  if (order_S.kind() != MonomialOrder::Kind::weight) throw InputError("pullback needs a weight order on S");
  const auto& w = order_S.weights();
  std::vector<std::int64_t> wy;
  for (const auto& f : m.images()) {
    std::int64_t t = 0;
    for (auto [v, e] : f.leading_term(order_S).m.entries()) t += static_cast<std::int64_t>(e) * (v < w.size() ? w[v] : 0);
    wy.push_back(t);
  }
  return MonomialOrder::weight(std::move(wy), tiebreak);
}

LiftResult lift_groebner(const PresentationMap& m, const MonomialOrder& order_S, const MonomialOrder& order_A,
                         std::uint32_t max_degree, std::size_t max_pairs) {
  LiftResult res;
  std::vector<Polynomial> leads;
  std::set<Monomial> seen;
  for (const auto& f : m.images()) {
    const auto lt = f.leading_term(order_S).m;
    if (!seen.insert(lt).second) throw InputError("leading monomials of the generators are not distinct");
    leads.push_back(Polynomial::monomial(m.target(), lt));
  }
  if (m.size() == 0) {
    res.complete = true;
    res.buchberger_ok = true;
    return res;
  }
  const PresentationMap toric(m.target(), m.tags(), std::move(leads));
  GroebnerOptions go;
  go.max_pairs = max_pairs;
  go.degree_cap = max_degree;
  auto gj = presentation_ideal_gb(toric, order_A, go);
  res.complete = !gj.truncated;
  std::vector<Polynomial> ys;
  for (std::size_t e = 0; e < m.size(); ++e) ys.push_back(Polynomial::variable(m.source(), static_cast<Var>(e)));
  for (const auto& g : gj.generators) {
    if (g.degree() > max_degree) {
      res.complete = false;
      continue;
    }
    if (g.terms().size() > 2) throw InvariantViolation("toric Gröbner basis element is not a binomial");
    res.toric.push_back(g.substitute(ys, m.source()));
  }

  KernelOptions ko;
  ko.order = order_A;
  ko.minimal_generators = false;
  GradedKernel ker(m, ko);
  std::map<std::uint32_t, std::vector<Polynomial>> basis;
  for (std::size_t j = 0; j < res.toric.size(); ++j) {
    const auto& g = res.toric[j];
    const auto d = g.degree();
    auto [it, fresh] = basis.try_emplace(d);
    if (fresh) it->second = ker.kernel_basis(d);
    const auto lead = g.leading_term(order_A).m;
    auto hit = std::find_if(it->second.begin(), it->second.end(),
                            [&](const Polynomial& h) { return h.leading_term(order_A).m == lead; });
    if (hit == it->second.end())
      throw HypothesisUnmet(j, Polynomial::monomial(m.source(), lead).to_string(order_A));
    res.lifted.push_back(*hit);
  }
  res.buchberger_ok = buchberger_criterion(res.lifted, order_A);
  if (res.complete && !res.buchberger_ok)
    throw TheoremViolation("lifted set of a complete toric Gröbner basis fails Buchberger's criterion");
  return res;
}

}  // namespace joinmeet
