#include "infdef/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "infdef/error.hpp"
#include "infdef/serialize.hpp"

namespace infdef::cli {

namespace {

struct Options {
  std::string vars;
  std::string field = "Q";
  bool json = false;
  std::string method;
  std::vector<std::string> polys;

  std::string base, over, left, right, source, target;
  std::string map, left_map, right_map;
  std::string assign;
  std::vector<std::string> terms, left_terms, right_terms;

  int n = 0, d = 0, q = 0, genus = 0;
  unsigned cap = MuOptions{}.truncation_cap;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& part : split(s, ',')) out.push_back(trim(part));
  return out;
}

RingPtr make_ring(const Options& o) { return Ring::make(split_names(o.vars), parse_field(o.field)); }

std::vector<Polynomial> parse_list(const std::string& text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_poly(part, ring));
  return out;
}

// "k" or "vars|generators", e.g. "t|t^3" or "a,b|a^2,a*b,b^2".
PresentedAlgebra parse_algebra(const std::string& spec, const Field& field) {
  std::string s = trim(spec);
  if (s == "k") return present_quotient(Ring::make({}, field), {});
  auto bar = s.find('|');
  if (bar == std::string::npos)
    throw Error(ErrorKind::syntax, "algebra must be 'k' or 'vars|generators', got '" + s + "'");
  RingPtr ring = Ring::make(split_names(s.substr(0, bar)), field);
  auto gens = parse_list(s.substr(bar + 1), ring);
  return present_quotient(ring, gens);
}

AlgebraMorphism parse_map(const PresentedAlgebra& src, const PresentedAlgebra& tgt,
                          const std::string& images) {
  std::vector<Polynomial> imgs = parse_list(images, tgt.ring);
  if (imgs.empty() && src.ring->nvars() > 0 && tgt.algebra.dimension() == 1)
    imgs.assign(src.ring->nvars(), Polynomial(tgt.ring));
  return morphism_from_images(src, tgt, imgs);
}

// Deformation of f over `base` from "label=poly" terms at maximal-ideal labels.
DeformationOverA parse_deformation(const Polynomial& f, const FiniteKAlgebra& base,
                                   const std::vector<std::string>& terms) {
  std::vector<Polynomial> coeffs(base.dimension(), Polynomial(f.ring()));
  coeffs[0] = f;
  for (const auto& term : terms) {
    auto eq = term.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::syntax, "deformation term must be 'label=polynomial', got '" + term + "'");
    std::string label = trim(term.substr(0, eq));
    const auto& labels = base.labels();
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      throw Error(ErrorKind::syntax, "unknown basis label '" + label + "'");
    if (it == labels.begin())
      throw Error(ErrorKind::syntax, "the central fiber is the positional polynomial");
    auto i = static_cast<std::size_t>(it - labels.begin());
    coeffs[i] += parse_poly(term.substr(eq + 1), f.ring());
  }
  return DeformationOverA(base, std::move(coeffs));
}

const std::string& single_poly(const Options& o, std::size_t count = 1) {
  if (o.polys.size() != count)
    throw UsageError("expected " + std::to_string(count) + " polynomial argument(s)");
  return o.polys.front();
}

struct Result {
  Json json;
  std::string text;  // overrides the generic text rendering when non-empty
};

std::string render_text(const Json& j) {
  if (!j.is_object()) return j.is_string() ? j.get<std::string>() : j.dump();
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += key;
    out += ": ";
    out += value.is_string() ? value.get<std::string>() : value.dump();
    out += '\n';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

Result cmd_tjurina(const Options& o) {
  return {to_json(tjurina(parse_poly(single_poly(o), make_ring(o)))), {}};
}

Result cmd_ks_class(const Options& o) {
  RingPtr ring = make_ring(o);
  single_poly(o, 2);
  TjurinaData td = tjurina(parse_poly(o.polys[0], ring));
  Vector cls = ks_class(td, parse_poly(o.polys[1], ring));
  Json basis = Json::array();
  for (const auto& m : td.basis) basis.push_back(ring->format(m));
  return {Json{{"basis", std::move(basis)}, {"class", to_json(cls)}}, {}};
}

Result cmd_miniversal(const Options& o) {
  return {to_json(miniversal_family(tjurina(parse_poly(single_poly(o), make_ring(o))))), {}};
}

Result cmd_specialize(const Options& o) {
  RingPtr ring = make_ring(o);
  MiniversalFamily mf = miniversal_family(tjurina(parse_poly(single_poly(o), ring)));
  PresentedAlgebra base = parse_algebra(o.base, ring->field());
  std::vector<Vector> assignment;
  for (const auto& p : parse_list(o.assign, base.ring)) assignment.push_back(base.coordinates(p));
  DeformationOverA d = specialize_family(mf, base.algebra, assignment);
  return {to_json(d), d.to_string()};
}

Result cmd_lift(const Options& o) {
  RingPtr ring = make_ring(o);
  Polynomial f = parse_poly(single_poly(o), ring);
  PresentedAlgebra base = parse_algebra(o.base, ring->field());
  PresentedAlgebra over = parse_algebra(o.over, ring->field());
  AlgebraMorphism ext = parse_map(over, base, o.map);
  DeformationOverA lifted = lift_deformation(parse_deformation(f, base.algebra, o.terms), ext);
  return {to_json(lifted), lifted.to_string()};
}

Result cmd_glue(const Options& o) {
  RingPtr ring = make_ring(o);
  Polynomial f = parse_poly(single_poly(o), ring);
  PresentedAlgebra left = parse_algebra(o.left, ring->field());
  PresentedAlgebra right = parse_algebra(o.right, ring->field());
  PresentedAlgebra base = parse_algebra(o.base, ring->field());
  AlgebraMorphism p = parse_map(left, base, o.left_map);
  AlgebraMorphism q = parse_map(right, base, o.right_map);
  GluedDeformation g = glue_deformations(parse_deformation(f, left.algebra, o.left_terms),
                                         parse_deformation(f, right.algebra, o.right_terms), p, q);
  return {to_json(g.deformation), g.deformation.to_string()};
}

Result cmd_mu(const Options& o) {
  RingPtr ring = make_ring(o);
  std::vector<Polynomial> gens;
  for (const auto& s : o.polys) gens.push_back(parse_poly(s, ring));
  MuResult r = mu_generators(ring, gens, MuOptions{o.cap});
  Json history = Json::array();
  for (const auto& [n, v] : r.history) history.push_back(Json::array({n, v}));
  return {Json{{"mu", r.value}, {"truncations", std::move(history)}}, std::to_string(r.value)};
}

Result cmd_algebra(const Options& o) {
  RingPtr ring = make_ring(o);
  std::vector<Polynomial> gens;
  for (const auto& s : o.polys) gens.push_back(parse_poly(s, ring));
  return {to_json(algebra_from_quotient(ring, gens)), {}};
}

Result cmd_fprod(const Options& o) {
  Field field = parse_field(o.field);
  PresentedAlgebra left = parse_algebra(o.left, field);
  PresentedAlgebra right = parse_algebra(o.right, field);
  PresentedAlgebra base = parse_algebra(o.base, field);
  FiberedProduct fp = fibered_product(parse_map(left, base, o.left_map),
                                      parse_map(right, base, o.right_map));
  return {Json{{"algebra", to_json(fp.algebra)},
               {"to_left", to_json(fp.to_left.matrix())},
               {"to_right", to_json(fp.to_right.matrix())}},
          {}};
}

Result cmd_factor_ext(const Options& o) {
  Field field = parse_field(o.field);
  PresentedAlgebra src = parse_algebra(o.source, field);
  PresentedAlgebra tgt = parse_algebra(o.target, field);
  SmallExtensionChain chain = factor_small_extension(parse_map(src, tgt, o.map));
  Json steps = Json::array();
  std::string text = "length: " + std::to_string(chain.length());
  for (const auto& step : chain.steps) {
    steps.push_back(to_json(step));
    text += "\nstep: dim " + std::to_string(step.source().dimension()) + " -> dim " +
            std::to_string(step.target().dimension());
  }
  return {Json{{"length", chain.length()}, {"steps", std::move(steps)}}, text};
}

Result cmd_cohomology(const Options& o) {
  std::string method = o.method.empty() ? "formula" : o.method;
  CohomologyQuery query{o.n, o.d, o.q};
  Json j{{"n", o.n}, {"d", o.d}, {"q", o.q}};
  if (method == "formula" || method == "both") j["formula"] = coh_dim(query, CohMethod::formula);
  if (method == "cech" || method == "both") j["cech"] = coh_dim(query, CohMethod::cech);
  if (!j.contains("formula") && !j.contains("cech"))
    throw UsageError("cohomology --method must be formula, cech or both");
  std::string text = method == "both" ? std::string{} : j[method].dump();
  return {j, text};
}

Result cmd_delta(const Options& o) {
  std::string method = o.method.empty() ? "closed_form" : o.method;
  Json j = Json::object();
  if (method == "closed_form" || method == "both")
    j["closed_form"] = delta_surjective(o.n, o.d, DeltaMethod::closed_form);
  if (method == "linear_algebra" || method == "both")
    j["linear_algebra"] = delta_surjective(o.n, o.d, DeltaMethod::linear_algebra);
  if (j.empty()) throw UsageError("delta --method must be closed_form, linear_algebra or both");
  return {j, {}};
}

Result cmd_hypersurface_report(const Options& o) {
  return {to_json(hypersurface_report(o.n, o.d)), {}};
}

Result cmd_curve_moduli(const Options& o) {
  std::uint64_t dim = curve_moduli_dim(o.genus);
  return {Json{{"genus", o.genus}, {"dimension", dim}}, std::to_string(dim)};
}

Result cmd_chi_normal(const Options& o) {
  NormalChi c = chi_normal_p3(o.d, o.genus);
  return {Json{{"d", o.d},
               {"genus", o.genus},
               {"chi", c.total},
               {"twisted_term", c.twisted_term},
               {"structure_term", c.structure_term},
               {"tangent_term", c.tangent_term}},
          std::to_string(c.total)};
}

void print_error(const Options& o, std::ostream& out, std::ostream& err, std::string_view kind,
                 const std::string& message) {
  if (o.json)
    out << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
  else
    err << "error[" << kind << "]: " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in infinitesimal deformation theory", "infdef"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--vars", o.vars, "comma-separated variable names");
  app.add_option("--field", o.field, "Q or Fp:<p>");
  app.add_flag("--json", o.json, "emit JSON");
  app.add_option("--method", o.method, "formula|cech|closed_form|linear_algebra|both");

  std::map<std::string, std::function<Result(const Options&)>> handlers;
  auto verb = [&](const std::string& name, const std::string& help,
                  std::function<Result(const Options&)> fn) {
    handlers[name] = std::move(fn);
    return app.add_subcommand(name, help);
  };
  auto poly_args = [&](CLI::App* sc, const char* desc) {
    sc->add_option("polynomials", o.polys, desc);
  };
  auto ints = [&](CLI::App* sc, std::initializer_list<std::pair<const char*, int*>> list) {
    for (auto [flag, target] : list) sc->add_option(flag, *target)->required();
  };

  poly_args(verb("tjurina", "Tjurina algebra of f", cmd_tjurina), "f");
  poly_args(verb("ks-class", "Kodaira-Spencer class of f + eps*g", cmd_ks_class), "f g");
  poly_args(verb("miniversal", "miniversal family of f", cmd_miniversal), "f");
  {
    auto* sc = verb("specialize", "pull the miniversal family back to an algebra", cmd_specialize);
    poly_args(sc, "f");
    sc->add_option("--base", o.base, "target algebra, 'k' or 'vars|gens'")->required();
    sc->add_option("--assign", o.assign, "comma-separated parameter images")->required();
  }
  {
    auto* sc = verb("lift", "lift a deformation along a small extension", cmd_lift);
    poly_args(sc, "f");
    sc->add_option("--base", o.base, "algebra of the deformation")->required();
    sc->add_option("--over", o.over, "source algebra of the extension")->required();
    sc->add_option("--map", o.map, "images of the source variables");
    sc->add_option("--term", o.terms, "label=polynomial");
  }
  {
    auto* sc = verb("glue", "glue two deformations over a fibered product", cmd_glue);
    poly_args(sc, "f");
    sc->add_option("--left", o.left)->required();
    sc->add_option("--right", o.right)->required();
    sc->add_option("--base", o.base)->required();
    sc->add_option("--left-map", o.left_map);
    sc->add_option("--right-map", o.right_map);
    sc->add_option("--left-term", o.left_terms, "label=polynomial");
    sc->add_option("--right-term", o.right_terms, "label=polynomial");
  }
  {
    auto* sc = verb("mu", "minimal number of generators of an ideal", cmd_mu);
    poly_args(sc, "generators");
    sc->add_option("--cap", o.cap, "truncation cap");
  }
  poly_args(verb("algebra", "present k[vars]/(gens)", cmd_algebra), "generators");
  {
    auto* sc = verb("fprod", "fibered product of two algebra maps", cmd_fprod);
    sc->add_option("--left", o.left)->required();
    sc->add_option("--right", o.right)->required();
    sc->add_option("--base", o.base)->required();
    sc->add_option("--left-map", o.left_map);
    sc->add_option("--right-map", o.right_map);
  }
  {
    auto* sc = verb("factor-ext", "factor a surjection into tiny extensions", cmd_factor_ext);
    sc->add_option("--source", o.source)->required();
    sc->add_option("--target", o.target)->required();
    sc->add_option("--map", o.map);
  }
  ints(verb("cohomology", "dim H^q(P^n, O(d))", cmd_cohomology),
       {{"--n", &o.n}, {"--d", &o.d}, {"--q", &o.q}});
  ints(verb("delta", "surjectivity of the coboundary for hypersurfaces", cmd_delta),
       {{"--n", &o.n}, {"--d", &o.d}});
  ints(verb("hypersurface-report", "deformation report for a smooth hypersurface",
            cmd_hypersurface_report),
       {{"--n", &o.n}, {"--d", &o.d}});
  ints(verb("curve-moduli", "dimension of the miniversal base of a curve", cmd_curve_moduli),
       {{"--genus", &o.genus}});
  ints(verb("chi-normal", "chi of the normal sheaf of a space curve", cmd_chi_normal),
       {{"--d", &o.d}, {"--genus", &o.genus}});

  std::vector<const char*> argv{"infdef"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Result r = handlers.at(name)(o);
    if (o.json)
      out << r.json.dump(2) << '\n';
    else
      out << (r.text.empty() ? render_text(r.json) : r.text) << '\n';
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    print_error(o, out, err, to_string(e.kind()), e.what());
    return 1;
  }
}

}  // namespace infdef::cli
