#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellrim/cells.hpp"
#include "cellrim/parabolic.hpp"
#include "cellrim/paths.hpp"
#include "cellrim/serialize.hpp"
#include "cellrim/transport.hpp"

using namespace cellrim;

namespace {

enum Exit { kOk = 0, kUsage = 1, kGuard = 2, kMath = 3 };

struct Output {
  std::string format = "ascii";
  bool plain = false;
  bool json() const { return format == "json"; }
};

int default_guard() {
  if (const char* env = std::getenv("CELLRIM_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("CELLRIM_MAX_N is not an integer: ") + env);
    }
  }
  return kDefaultMaxN;
}

int guard_or_default(const std::optional<int>& g) { return g ? *g : default_guard(); }

std::string word_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int s : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

json report_json(const std::string& suite, const Report& r) {
  json out;
  out["suite"] = suite;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["checks"] = std::move(checks);
  out["passed"] = r.passed();
  return out;
}

int emit_report(const Output& out, const std::string& suite, const Report& r) {
  if (out.json()) {
    print_json(report_json(suite, r));
  } else {
    for (const auto& c : r.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ')';
      std::cout << '\n';
    }
    std::cout << suite << ": " << (r.passed() ? "all passed" : "FAILED") << '\n';
  }
  return r.passed() ? kOk : kMath;
}

// rim ---------------------------------------------------------------------

int cmd_rim(const Output& out, const std::string& comp, const std::optional<int>& g) {
  const Composition lambda(parse_int_list(comp));
  const auto E = rim_diagrams(lambda, guard_or_default(g));
  if (out.json()) {
    print_json(rim_result_json(lambda, E));
    return kOk;
  }
  std::cout << "lambda " << lambda.to_string() << "  rim size " << E.all.size() << "  special "
            << E.special.size() << '\n';
  int i = 0;
  for (const auto& D : E.all) {
    std::cout << '\n'
              << '[' << ++i << "] " << word_string(reduced_word(w_of_diagram(D)))
              << (is_special(D) ? "  special" : "") << '\n'
              << render_ascii(D, out.plain);
  }
  return kOk;
}

// cell --------------------------------------------------------------------

int cmd_cell(const Output& out, const std::string& comp, const std::string& perm, const std::optional<int>& g) {
  const int guard = guard_or_default(g);
  if (!perm.empty()) {
    const Permutation x(parse_int_list(perm));
    if (x.degree() > guard) {
      throw GuardExceeded("n = " + std::to_string(x.degree()) + " exceeds the enumeration limit " +
                          std::to_string(guard));
    }
    const auto cell = right_cell_of(x);
    if (out.json()) {
      json j;
      j["perm"] = x;
      j["Q"] = rs_pair(x).Q;
      j["cell"] = cell;
      print_json(j);
    } else {
      std::cout << "right cell of " << x.to_string() << "  Q = " << rs_pair(x).Q.to_string() << "  size "
                << cell.size() << '\n';
      for (const auto& y : cell) std::cout << "  " << y.to_string() << '\n';
    }
    return kOk;
  }
  const Composition lambda(parse_int_list(comp));
  const auto Z = z_ideal(lambda, guard);
  const auto Y = prefix_maximal(Z);
  const auto w_J = longest_in(j_of_composition(lambda));
  if (out.json()) {
    json j;
    j["lambda"] = lambda;
    j["w_J"] = w_J;
    j["ideal"] = Z;
    j["rim"] = Y;
    print_json(j);
  } else {
    std::cout << "lambda " << lambda.to_string() << "  w_J " << w_J.to_string() << "  ideal size " << Z.size()
              << "  rim size " << Y.size() << '\n';
    for (const auto& e : Z) {
      std::cout << "  " << e.to_string() << "  " << word_string(reduced_word(e))
                << (std::find(Y.begin(), Y.end(), e) != Y.end() ? "  *" : "") << '\n';
    }
  }
  return kOk;
}

// diagram -----------------------------------------------------------------

struct Annotations {
  std::optional<DeterminingTuple> tuple;
  std::optional<FormPath> form;
};

Annotations annotate(const Diagram& D) {
  Annotations a;
  const auto lambda = row_composition(D);
  if (auto shape = StuShape::from_composition(lambda); shape && shape->trailing_ones == 1) {
    if (satisfies_hypothesis_dagger(D, *shape)) a.tuple = determining_tuple(D, *shape);
  }
  if (lambda.num_parts() == 4 && lambda[3] == 1 && is_admissible(D)) a.form = find_form_path(D);
  return a;
}

int emit_diagram(const Output& out, const Diagram& D, json extra = json::object()) {
  const auto a = annotate(D);
  if (out.json()) {
    json j = D;
    j["lambda"] = row_composition(D);
    j["w"] = w_of_diagram(D);
    j["special"] = is_special(D);
    for (auto& [k, v] : extra.items()) j[k] = v;
    if (a.tuple) j["tuple"] = *a.tuple;
    if (a.form) {
      j["form"] = to_string(a.form->form);
      j["form_path"] = a.form->path;
    }
    print_json(j);
    return kOk;
  }
  std::cout << render_ascii(D, out.plain);
  std::cout << "lambda " << row_composition(D).to_string() << "  special " << (is_special(D) ? "yes" : "no")
            << '\n';
  for (auto& [k, v] : extra.items()) std::cout << k << ' ' << v.dump() << '\n';
  if (a.tuple) std::cout << "tuple " << a.tuple->to_string() << '\n';
  if (a.form) std::cout << to_string(a.form->form) << ' ' << a.form->path.to_string() << '\n';
  return kOk;
}

struct FamilyArgs {
  std::string stu;
  std::string order = "s,t,u";
  std::string C;
  int v = 0;
  std::string params;
};

int cmd_family(const Output& out, Family fam, const FamilyArgs& args) {
  const auto stu = parse_int_list(args.stu);
  if (stu.size() != 3) throw std::invalid_argument("--stu needs three values s,t,u");
  const StuShape shape(stu[0], stu[1], stu[2], parse_stu_order(args.order));
  FamilyParams p;
  p.variant = fam;
  p.C = parse_int_list(args.C);
  p.v = args.v;
  const auto v = parse_int_list(args.params);
  if (fam == Family::M) {
    if (v.size() != 5) throw std::invalid_argument("M needs --params eps,eta,theta,zeta,psi");
    p.epsilon = v[0];
    p.eta = v[1];
    p.theta = v[2];
    p.zeta = v[3];
    p.psi = v[4];
  } else if (fam == Family::N) {
    if (v.size() != 5) throw std::invalid_argument("N needs --params eta,eps,theta,phi,zeta");
    p.eta = v[0];
    p.epsilon = v[1];
    p.theta = v[2];
    p.phi = v[3];
    p.zeta = v[4];
  } else if (!v.empty()) {
    throw std::invalid_argument("--params only applies to M and N");
  }
  return emit_diagram(out, family_diagram(p, shape), {{"params", p.to_string()}});
}

int cmd_check(const Output& out, const std::string& nodes) {
  const Diagram D(parse_nodes(nodes));
  const auto type = subsequence_type(D);
  const auto lambda = row_composition(D);
  const bool admissible = is_admissible(D);
  const bool typed = has_kpath_of_type(D.nodes(), lambda.sorted_descending().conjugate());
  json extra;
  extra["admissible"] = admissible;
  extra["subsequence_type"] = type;
  extra["kpath_of_conjugate_type"] = typed;
  return emit_diagram(out, D, std::move(extra));
}

// verify ------------------------------------------------------------------

Report verify_tables(int s, int t, int u, int ones, int guard) {
  Report r;
  for (auto order : {StuOrder::STU, StuOrder::SUT, StuOrder::TSU, StuOrder::TUS, StuOrder::UST, StuOrder::UTS}) {
    const StuShape shape(s, t, u, order, ones);
    const auto lambda = shape.lambda();
    for (const auto& c : verify_rim_family(lambda, guard).checks) {
      r.add(lambda.to_string() + " " + c.name, c.passed, c.detail);
    }
  }
  return r;
}

Report verify_oracle(int max_n) {
  Report r;
  for (int n = 1; n <= max_n; ++n) {
    int bad = 0;
    const auto all = compositions_of(n);
    for (const auto& lambda : all) {
      if (z_ideal(lambda, max_n) != z_ideal_by_admissibility(lambda, max_n)) ++bad;
    }
    r.add("n = " + std::to_string(n) + " RS ideal equals admissible ideal", bad == 0,
          std::to_string(bad) + " of " + std::to_string(all.size()) + " compositions differ");
  }
  return r;
}

Report verify_bijections(int max_n) {
  Report r;
  for (int n = 1; n <= max_n; ++n) {
    int rot_bad = 0, psi_bad = 0, psi_cases = 0;
    for (const auto& lambda : compositions_of(n)) {
      const auto E = rim_diagrams_brute_force(lambda, max_n);
      if (rim_diagrams_brute_force(lambda.reversed(), max_n) != rotated(E)) ++rot_bad;
      if (n < max_n && lambda[lambda.num_parts() - 1] == 1) {
        ++psi_cases;
        if (rim_diagrams_brute_force(lambda.with_trailing_one(), max_n) != psi_image(E)) ++psi_bad;
      }
    }
    r.add("n = " + std::to_string(n) + " rotation", rot_bad == 0, std::to_string(rot_bad) + " mismatches");
    if (psi_cases > 0) {
      r.add("n = " + std::to_string(n) + " psi", psi_bad == 0,
            std::to_string(psi_bad) + " of " + std::to_string(psi_cases) + " mismatches");
    }
  }
  return r;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

Report verify_random(std::uint64_t seed, int samples, int max_n) {
  Report r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(2, std::max(2, max_n));
  int prefix_bad = 0, word_bad = 0, rs_bad = 0, ideal_bad = 0, coset_bad = 0, type_bad = 0;
  for (int k = 0; k < samples; ++k) {
    const int n = degree(rng);
    const auto x = random_permutation(n, rng);
    const auto xp = random_permutation(n, rng);
    const bool by_length = length(xp) + length(xp.inverse() * x) == length(x);
    if (is_prefix(xp, x) != by_length) ++prefix_bad;
    if (inversion_set_from_word(n, reduced_word(x)) != inversion_set(x)) ++word_bad;
    const auto pq = rs_pair(x);
    if (rs_inverse(pq.P, pq.Q) != x) ++rs_bad;

    std::vector<int> parts;
    for (int left = n; left > 0;) {
      const int p = std::uniform_int_distribution<int>(1, left)(rng);
      parts.push_back(p);
      left -= p;
    }
    const Composition lambda(parts);
    if (z_ideal(lambda, max_n) != z_ideal_by_admissibility(lambda, max_n)) ++ideal_bad;
    const auto J = j_of_composition(lambda);
    const auto [w, d] = coset_decompose(x, J);
    if (!(w * d == x && in_subgroup(w, J) && is_coset_representative(d, J) && length(w) + length(d) == length(x))) {
      ++coset_bad;
    }
  }
  for (int k = 0; k < samples; ++k) {
    const int n = degree(rng);
    std::vector<Node> nodes;
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= n; ++b) {
        if (std::bernoulli_distribution(0.4)(rng)) nodes.push_back({a, b});
      }
    }
    if (nodes.empty()) continue;
    const Diagram D(nodes);
    if (subsequence_type(D).size() != D.size()) ++type_bad;
  }
  const auto n = std::to_string(samples);
  r.add("prefix iff lengths add", prefix_bad == 0, std::to_string(prefix_bad) + " of " + n);
  r.add("word route inversion set", word_bad == 0, std::to_string(word_bad) + " of " + n);
  r.add("RS round trip", rs_bad == 0, std::to_string(rs_bad) + " of " + n);
  r.add("RS ideal equals admissible ideal", ideal_bad == 0, std::to_string(ideal_bad) + " of " + n);
  r.add("coset decomposition", coset_bad == 0, std::to_string(coset_bad) + " of " + n);
  r.add("subsequence type is a partition of |D|", type_bad == 0, std::to_string(type_bad) + " of " + n);
  return r;
}

// oracle ------------------------------------------------------------------

int cmd_oracle_perm(const Output& out, const std::string& perm) {
  const Permutation x(parse_int_list(perm));
  const auto pq = rs_pair(x);
  json inv = json::array();
  for (const auto& a : inversion_set(x).roots()) inv.push_back(json::array({a.i, a.j}));
  if (out.json()) {
    json j;
    j["perm"] = x;
    j["length"] = length(x);
    j["reduced_word"] = reduced_word(x);
    j["inversions"] = std::move(inv);
    j["P"] = pq.P;
    j["Q"] = pq.Q;
    print_json(j);
  } else {
    std::cout << "perm " << x.to_string() << "\nlength " << length(x) << "\nreduced word "
              << word_string(reduced_word(x)) << "\ninversions " << inv.dump() << "\nP " << pq.P.to_string()
              << "\nQ " << pq.Q.to_string() << '\n';
  }
  return kOk;
}

int cmd_calibrate(const Output& out, const std::string& degrees) {
  const auto c = calibrate_right_cell_convention(parse_int_list(degrees));
  const std::string chosen = c.q_passes() && !c.p_passes() ? "Q" : c.p_passes() && !c.q_passes() ? "P" : "none";
  const bool ok = chosen == (right_cell_component() == TableauComponent::Q ? "Q" : "P");
  if (out.json()) {
    print_json({{"cases", c.cases},
                {"P_mismatches", c.p_mismatches},
                {"Q_mismatches", c.q_mismatches},
                {"component", chosen},
                {"matches_library", ok}});
  } else {
    std::cout << "cases " << c.cases << "\nP mismatches " << c.p_mismatches << "\nQ mismatches " << c.q_mismatches
              << "\ncomponent " << chosen << (ok ? "" : "  (library disagrees)") << '\n';
  }
  return ok ? kOk : kMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rims of Kazhdan-Lusztig right cells in symmetric groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "ascii"}));
  app.add_flag("--plain-x", out.plain, "ASCII 'x' and '.' in diagrams");

  std::optional<int> guard;
  std::string comp, perm;

  auto* rim = app.add_subcommand("rim", "Rim of the right cell of w_J and its diagrams");
  rim->add_option("--composition", comp, "e.g. 3,2,1,1")->required();
  rim->add_option("--max-n", guard, "Brute-force limit (default CELLRIM_MAX_N or 9)");

  auto* cell = app.add_subcommand("cell", "Right cell of a permutation, or the ideal Z of a composition");
  auto* cell_comp = cell->add_option("--composition", comp);
  auto* cell_perm = cell->add_option("--perm", perm, "One-line notation");
  cell_comp->excludes(cell_perm);
  cell->add_option("--max-n", guard, "Brute-force limit");

  auto* diagram = app.add_subcommand("diagram", "Build, render and check diagrams");
  diagram->require_subcommand(1);
  std::string partition, nodes, tuple;
  auto* young = diagram->add_subcommand("young", "Young diagram");
  young->add_option("--partition", partition)->required();
  auto* check = diagram->add_subcommand("check", "Admissibility and path data of a node list");
  check->add_option("--nodes", nodes, "\"1,1;1,2;2,1\"")->required();
  auto* from_tuple = diagram->add_subcommand("tuple", "Diagram of a determining tuple");
  from_tuple->add_option("--tuple", tuple, "e.g. 2,1,1,1,4,1b,3,3,1")->required();
  FamilyArgs fargs;
  std::vector<std::pair<CLI::App*, Family>> families;
  for (auto fam : {Family::F, Family::G, Family::H, Family::M, Family::N}) {
    auto* sub = diagram->add_subcommand(to_string(fam), to_string(fam) + " family diagram");
    sub->add_option("--stu", fargs.stu, "s,t,u")->required();
    sub->add_option("--order", fargs.order, "Order of s,t,u in the first three rows, e.g. u,s,t");
    sub->add_option("--C", fargs.C, "Column set");
    if (fam == Family::H) sub->add_option("--v", fargs.v, "Least element of C");
    if (fam == Family::M || fam == Family::N) sub->add_option("--params", fargs.params)->required();
    families.emplace_back(sub, fam);
  }

  auto* verify = app.add_subcommand("verify", "Verification suites; exit 3 on any failure");
  verify->require_subcommand(1);
  int s = 3, t = 2, u = 1, ones = 1, bound = 0, samples = 200;
  std::uint64_t seed = 20240601;
  auto* tables = verify->add_subcommand("tables", "Rim counts against the closed-form tables");
  tables->add_option("--s", s);
  tables->add_option("--t", t);
  tables->add_option("--u", u);
  tables->add_option("--ones", ones, "Trailing ones");
  tables->add_option("--max-n", guard, "Brute-force limit");
  auto* voracle = verify->add_subcommand("oracle", "RS ideal against admissible ideal");
  voracle->add_option("--max-n", bound)->default_val(5);
  auto* bij = verify->add_subcommand("bijections", "Rotation and psi transports");
  bij->add_option("--max-n", bound)->default_val(6);
  auto* random = verify->add_subcommand("random", "Randomized property checks");
  random->add_option("--seed", seed);
  random->add_option("--samples", samples);
  random->add_option("--max-n", bound)->default_val(6);

  auto* oracle = app.add_subcommand("oracle", "Permutation data and RS calibration");
  std::string degrees = "4,5,6";
  auto* oracle_perm = oracle->add_option("--perm", perm);
  auto* calibrate = oracle->add_flag("--calibrate", "Compare P and Q against admissibility");
  oracle->add_option("--degrees", degrees, "Degrees for --calibrate");
  oracle_perm->excludes(calibrate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*rim) return cmd_rim(out, comp, guard);
    if (*cell) {
      if (comp.empty() && perm.empty()) throw std::invalid_argument("cell needs --composition or --perm");
      return cmd_cell(out, comp, perm, guard);
    }
    if (*young) return emit_diagram(out, young_diagram(Composition(parse_int_list(partition))));
    if (*check) return cmd_check(out, nodes);
    if (*from_tuple) return emit_diagram(out, tuple_to_diagram(DeterminingTuple::parse(tuple)));
    for (const auto& [sub, fam] : families) {
      if (*sub) return cmd_family(out, fam, fargs);
    }
    if (*tables) return emit_report(out, "tables", verify_tables(s, t, u, ones, guard_or_default(guard)));
    if (*voracle) return emit_report(out, "oracle", verify_oracle(bound));
    if (*bij) return emit_report(out, "bijections", verify_bijections(bound));
    if (*random) return emit_report(out, "random", verify_random(seed, samples, bound));
    if (*oracle) {
      if (*calibrate) return cmd_calibrate(out, degrees);
      if (perm.empty()) throw std::invalid_argument("oracle needs --perm or --calibrate");
      return cmd_oracle_perm(out, perm);
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    }
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
