#include "joinmeet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "joinmeet/asl.hpp"
#include "joinmeet/classify.hpp"
#include "joinmeet/error.hpp"
#include "joinmeet/grassmannian.hpp"
#include "joinmeet/lattice_json.hpp"
#include "joinmeet/subalgebra.hpp"

namespace joinmeet::cli {

namespace {

// std::map-backed objects: keys come out sorted.
using Json = nlohmann::json;

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string load_text(const std::string& input, std::istream& in) {
  if (input.empty() || input == "-") return read_all(in);
  if (!std::filesystem::exists(input) && has_builtin_fixture(input)) return builtin_fixture(input);
  std::ifstream f(input);
  if (!f) throw InputError("cannot read '" + input + "'");
  return read_all(f);
}

Lattice load_lattice(const RunConfig& c, std::istream& in) { return lattice_from_json(load_text(c.input, in)); }

Json labels(const Lattice& l, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(l.label(i));
  return out;
}

Json degree_map(const std::map<std::uint32_t, std::size_t>& m) {
  Json out = Json::object();
  for (const auto& [d, n] : m) out[std::to_string(d)] = n;
  return out;
}

KernelOptions kernel_options(const RunConfig& c) {
  KernelOptions k;
  k.field = FieldMode::parse(c.field);
  k.budget_cells = c.budget_cells;
  return k;
}

Json classify_json(const Lattice& l) {
  const auto r = classify(l);
  Json j;
  j["size"] = l.size();
  j["distributive"] = r.distributive;
  j["simple"] = r.simple;
  j["planar"] = r.planar;
  j["thin"] = r.thin;
  j["apexes"] = labels(l, r.apexes);
  j["rank"] = r.rank;
  j["rho"] = r.rho;
  j["theta"] = r.theta ? Json(*r.theta) : Json(nullptr);
  j["has_D54_sublattice"] = r.has_d54_sublattice;
  j["consecutive_theta3"] = r.consecutive_theta3;
  j["join_irreducibles"] = labels(l, join_irreducible_elements(l));
  Json iv = Json::array();
  for (const auto& g : r.grid_intervals)
    iv.push_back({{"bottom", l.label(g.bottom)}, {"top", l.label(g.top)}, {"r", g.r}, {"s", g.s}});
  j["grid_intervals"] = iv;
  j["D_2^2*3^2_intervals"] = r.distributive ? find_grid_intervals(l, 2, 2).size() : 0;
  return j;
}

Json binomials_json(const Lattice& l) {
  const auto sys = join_meet_system(l);
  Json list = Json::array();
  for (std::size_t e = 0; e < sys.pairs.size(); ++e) {
    auto [a, b] = sys.pairs[e];
    list.push_back({{"pair", {l.label(a), l.label(b)}},
                    {"join", l.label(l.join(a, b))},
                    {"meet", l.label(l.meet(a, b))},
                    {"polynomial", sys.binomials[e].to_string(sys.order)},
                    {"leading", monomial_string(sys.binomials[e].leading_term(sys.order).m, *sys.ring)}});
  }
  return {{"order", "rank_weight"}, {"count", sys.pairs.size()}, {"binomials", list}};
}

Json kernel_json(const PresentationMap& m, const RunConfig& c) {
  const auto rep = graded_kernel(m, c.max_degree, kernel_options(c));
  Json degrees = Json::object();
  for (const auto& d : rep.degrees) {
    Json gens = Json::array();
    for (const auto& g : d.minimal_generators) gens.push_back(g.to_string(rep.order));
    degrees[std::to_string(d.degree)] = {{"monomials", d.monomials},
                                         {"dim_kernel", d.dim_kernel},
                                         {"hilbert", d.hilbert},
                                         {"minimal_generators", gens}};
  }
  return {{"cap", rep.cap},
          {"field", rep.field.name()},
          // Generators are always recomputed and verified over Q.
          {"generator_field", "Q"},
          {"variables", m.size()},
          {"degrees", degrees},
          {"generator_degrees", degree_map(rep.generator_degrees())}};
}

Json quadratic_json(const Lattice& l, const RunConfig& c) {
  QuadraticOptions o;
  o.kernel = kernel_options(c);
  o.max_pairs = c.budget_pairs;
  const auto r = quadratic_presentation_check(l, c.max_degree, o);
  return {{"cap", r.cap},
          {"generator_degrees", degree_map(r.generator_degrees)},
          {"generated_in_degree_2", r.generated_in_degree_2},
          {"quadratic_gb", r.quadratic_gb ? Json(*r.quadratic_gb) : Json(nullptr)},
          {"gb_max_degree", r.gb_max_degree ? Json(*r.gb_max_degree) : Json(nullptr)},
          {"gb_size", r.gb_size},
          {"gb_order", r.gb_order}};
}

Json asl_json(const AslStructure& a, const AslReport& r) {
  const auto& p = *a.poset;
  auto chain_str = [&](const StandardMonomial& s) {
    std::string out;
    for (auto e : s.chain) out += (out.empty() ? "" : "*") + p.label(e);
    return out;
  };
  Json asl1 = Json::array();
  for (const auto& d : r.asl1)
    asl1.push_back({{"degree", d.degree}, {"standard", d.standard}, {"hilbert", d.hilbert}, {"ok", d.ok}});
  Json rels = Json::array();
  const auto order = revlex_from_poset(a);
  for (const auto& s : r.relations) {
    Json terms = Json::array();
    for (const auto& [q, m] : s.terms) terms.push_back({{"coefficient", q.get_str()}, {"monomial", chain_str(m)}});
    rels.push_back({{"alpha", p.label(s.alpha)},
                    {"beta", p.label(s.beta)},
                    {"terms", terms},
                    {"relation", s.relation.to_string(order)},
                    {"asl2", s.asl2_ok},
                    {"unique", s.unique},
                    {"revlex_lead", s.revlex_lead_ok}});
  }
  Json missing = Json::array();
  for (auto [x, y] : r.no_expression) missing.push_back({p.label(x), p.label(y)});
  return {{"max_degree", r.max_degree},
          {"asl1", asl1},
          {"asl1_ok", r.asl1_ok},
          {"relations", rels},
          {"no_expression", missing},
          {"weakly_asl", r.weakly},
          {"asl", r.asl},
          {"initial_asl", r.initial_asl ? Json(*r.initial_asl) : Json(nullptr)},
          {"transfer_consistent", r.transfer_consistent}};
}

Json asl_command(const Lattice& l, const RunConfig& c, std::istream& in) {
  const auto sys = join_meet_system(l);
  const auto m = presentation_of(sys);
  if (c.poset.empty()) {
    if (!is_thin(l)) throw InputError("asl needs --poset unless the lattice is thin");
    const auto q = q_lattice(l);
    const auto a = thin_asl_structure(m, q);
    auto j = asl_json(a, asl_check(a, c.max_degree, sys.order));
    j["poset"] = "Q_L";
    j["q_chain"] = is_chain(q);
    return j;
  }
  // Poset elements are labelled by the presentation tags "a,b".
  const auto p = poset_from_json(load_text(c.poset, in));
  std::vector<std::size_t> inj;
  for (std::size_t e = 0; e < p.size(); ++e) {
    auto it = std::find(m.tags().begin(), m.tags().end(), p.label(e));
    if (it == m.tags().end()) throw InputError("poset label '" + p.label(e) + "' is not a presentation tag");
    inj.push_back(static_cast<std::size_t>(it - m.tags().begin()));
  }
  const AslStructure a(m, p, inj);
  auto j = asl_json(a, asl_check(a, c.max_degree, sys.order));
  j["poset"] = c.poset;
  return j;
}

Json thin_survey(const RunConfig& c) {
  Json ranks = Json::object();
  std::size_t total = 0, chain_agree = 0, quadratic = 0, gb_quadratic = 0, gb_done = 0;
  for (std::size_t rank = 2; rank <= c.rank; ++rank) {
    Json list = Json::array();
    for (const auto& l : enumerate_thin_lattices(rank)) {
      const bool chain = is_chain(q_lattice(l));
      const bool d54 = find_d54_sublattice(l).has_value();
      if (chain == d54) throw TheoremViolation("Q_L chain verdict disagrees with the D_{2*3^3} search");
      QuadraticOptions o;
      o.kernel = kernel_options(c);
      o.compute_gb = c.gb;
      o.max_pairs = c.budget_pairs;
      const auto r = quadratic_presentation_check(l, c.max_degree, o);
      if (!r.generated_in_degree_2)
        throw TheoremViolation("thin lattice with a minimal generator above degree 2: " + to_json(l));
      Json e = {{"lattice", Json::parse(to_json(l))},
                {"q_chain", chain},
                {"has_D54_sublattice", d54},
                {"generator_degrees", degree_map(r.generator_degrees)}};
      if (c.gb) {
        e["quadratic_gb"] = r.quadratic_gb ? Json(*r.quadratic_gb) : Json(nullptr);
        gb_done += r.quadratic_gb.has_value();
        gb_quadratic += r.quadratic_gb.value_or(false);
        if (r.quadratic_gb == false) throw TheoremViolation("thin lattice without a quadratic Gröbner basis: " + to_json(l));
      }
      ++total;
      ++chain_agree;
      ++quadratic;
      list.push_back(std::move(e));
    }
    ranks[std::to_string(rank)] = list;
  }
  Json j = {{"max_rank", c.rank},
            {"cap", c.max_degree},
            {"lattices", total},
            {"lemma_chain_agree", chain_agree},
            {"generated_in_degree_2", quadratic},
            {"ranks", ranks}};
  if (c.gb) {
    j["gb_completed"] = gb_done;
    j["gb_quadratic"] = gb_quadratic;
  }
  return j;
}

Json planar_survey(const RunConfig& c) {
  PolynomialRingOptions o;
  o.kernel = kernel_options(c);
  std::size_t total = 0, rings = 0, certified = 0;
  Json list = Json::array();
  for (const auto& l : enumerate_planar_lattices(c.size)) {
    const auto v = is_polynomial_ring(l, c.max_degree, o);
    ++total;
    rings += v.kernel_zero;
    certified += v.leading_certificate;
    list.push_back({{"size", l.size()},
                    {"has_D54_sublattice", v.has_d54_sublattice},
                    {"combinatorial", v.combinatorial},
                    {"kernel_zero", v.kernel_zero},
                    {"leading_certificate", v.leading_certificate},
                    {"first_relation_degree", v.first_relation_degree ? Json(*v.first_relation_degree) : Json(nullptr)}});
  }
  // Disagreement throws TheoremViolation inside is_polynomial_ring.
  return {{"max_poset_size", c.size},
          {"cap", c.max_degree},
          {"lattices", total},
          {"polynomial_rings", rings},
          {"leading_certificates", certified},
          {"agree", total},
          {"theorem_violations", 0},
          {"instances", list}};
}

Json grass_json(const RunConfig& c) {
  const auto g = grass_lattice(c.d, c.n);
  auto sym_labels = [&](const std::vector<PluckerSymbol>& s) {
    Json out = Json::array();
    for (const auto& x : s) out.push_back(x.label(c.n));
    return out;
  };
  const auto ji = lattice_join_irreducibles(g);
  const auto rep = grass_asl_check(c.d, c.n, c.max_degree);
  Json chains = Json::array();
  for (const auto& ch : chain_decomposition(g)) {
    Json one = Json::array();
    for (auto e : ch) one.push_back(g.symbols[e].label(c.n));
    chains.push_back(one);
  }
  const auto a = AslStructure(plucker_presentation(g), g.lattice.poset());
  return {{"d", c.d},
          {"n", c.n},
          {"size", g.symbols.size()},
          {"distributive", is_distributive(g.lattice)},
          {"join_irreducibles", sym_labels(ji)},
          {"join_irreducibles_match", ji == appendix_join_irreducibles(c.d, c.n)},
          {"chains", chains},
          {"psi_multiplicative", psi_multiplicativity(c.d, c.n)},
          {"incomparable_pairs", rep.incomparable_pairs},
          {"asl", asl_json(a, rep.report)}};
}

Json fixtures_verify() {
  struct Expect {
    const char* name;
    std::size_t size;
    bool planar, simple, thin;
    std::size_t theta;
  };
  const Expect table[] = {{"b3", 8, false, true, false, 3},
                          {"fig2", 0, true, true, true, 2},
                          {"fig4", 0, false, true, false, 3},
                          {"fig5", 0, true, true, false, 3}};
  Json out = Json::object();
  bool all = true;
  for (const auto& e : table) {
    const auto l = lattice_from_json(builtin_fixture(e.name));
    const auto r = classify(l);
    Json checks = {{"distributive", r.distributive},
                   {"planar", r.planar == e.planar},
                   {"simple", r.simple == e.simple},
                   {"thin", r.thin == e.thin},
                   {"theta", r.theta == e.theta},
                   {"birkhoff", lattice_isomorphic(l, ideals_lattice(join_irreducibles(l))).has_value()}};
    if (e.size) checks["size"] = l.size() == e.size;
    bool ok = true;
    for (const auto& [k, v] : checks.items()) ok = ok && v.get<bool>();
    all = all && ok;
    out[e.name] = {{"checks", checks}, {"ok", ok}};
  }
  if (!all) throw InvariantViolation("builtin fixture check failed: " + out.dump());
  return {{"fixtures", out}, {"ok", all}};
}

}  // namespace

std::string execute(const RunConfig& c, std::istream& in) {
  if (c.max_degree == 0) throw InputError("--max-degree must be positive");
  if (c.budget_cells == 0 || c.budget_pairs == 0) throw InputError("budgets must be positive");
  FieldMode::parse(c.field);
  const auto& s = c.subcommand;
  if (s == "divisor") {
    if (c.number == 0) throw InputError("divisor needs N >= 1");
    return to_json(divisor_lattice(c.number)) + "\n";
  }
  if (s == "boolean") return to_json(boolean_lattice(c.number)) + "\n";

  Json j;
  if (s == "classify") j = classify_json(load_lattice(c, in));
  else if (s == "binomials") j = binomials_json(load_lattice(c, in));
  else if (s == "kernel") j = kernel_json(presentation_of(join_meet_system(load_lattice(c, in))), c);
  else if (s == "quadratic") j = quadratic_json(load_lattice(c, in), c);
  else if (s == "asl") j = asl_command(load_lattice(c, in), c, in);
  else if (s == "thin-survey") j = thin_survey(c);
  else if (s == "planar-survey") j = planar_survey(c);
  else if (s == "grass") j = grass_json(c);
  else if (s == "fixtures-verify") j = fixtures_verify();
  else throw InputError("unknown subcommand '" + s + "'");
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"join-meet binomial algebra workbench", "joinmeet"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-degree", c.max_degree, "degree cap")->check(CLI::PositiveNumber);
  app.add_option("--field", c.field, "q or fp:<prime>");
  app.add_option("--budget-cells", c.budget_cells, "matrix cell budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-pairs", c.budget_pairs, "S-pair budget")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "write the report here");

  auto with_input = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", c.input, "lattice JSON file, builtin fixture, or - for stdin");
    return sub;
  };
  with_input("classify", "classification report");
  with_input("binomials", "nonzero join-meet binomials");
  with_input("kernel", "graded kernel of the presentation map");
  with_input("quadratic", "quadratic generation and Gröbner basis degree");
  with_input("asl", "straightening-law checks")->add_option("--poset", c.poset, "poset JSON on presentation tags");
  app.add_subcommand("thin-survey", "all thin lattices up to a rank")
      ->add_option("--rank", c.rank, "maximum rank")
      ->check(CLI::Range(2, 21));
  app.get_subcommand("thin-survey")->add_flag("--gb", c.gb, "also compute Gröbner bases");
  app.add_subcommand("planar-survey", "polynomial-ring equivalence on planar lattices")
      ->add_option("--size", c.size, "maximum poset size")
      ->check(CLI::Range(1, 9));
  auto* grass = app.add_subcommand("grass", "Plücker symbols of L(d, n)");
  grass->add_option("--d", c.d)->required();
  grass->add_option("--n", c.n)->required();
  app.add_subcommand("divisor", "divisor lattice fixture")->add_option("N", c.number)->required();
  app.add_subcommand("boolean", "Boolean lattice fixture")->add_option("K", c.number)->required()->check(CLI::Range(0, 16));
  auto* fixtures = app.add_subcommand("fixtures", "builtin fixtures");
  fixtures->require_subcommand(1);
  fixtures->add_subcommand("verify", "re-derive fixture invariants");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "fixtures") c.subcommand = "fixtures-verify";

  auto fail = [&](const char* kind, const std::exception& e, int code) {
    err << Json{{"error", kind}, {"message", e.what()}}.dump() << "\n";
    return code;
  };
  try {
    const auto text = execute(c, in);
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out);
      if (!f) throw InputError("cannot write '" + c.out + "'");
      f << text;
    }
    return kOk;
  } catch (const InputError& e) {
    return fail("input", e, kInput);
  } catch (const BudgetExceeded& e) {
    return fail("budget", e, kBudget);
  } catch (const InvariantViolation& e) {
    return fail("invariant", e, kInvariant);
  } catch (const std::exception& e) {
    return fail("internal", e, kInvariant);
  }
}

}  // namespace joinmeet::cli
