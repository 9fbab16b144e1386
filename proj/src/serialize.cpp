#include "infdef/serialize.hpp"

#include <cctype>

#include "infdef/error.hpp"

namespace infdef {

Scalar parse_scalar(std::string_view text, const Field& field) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid = [](const std::string& part) {
    std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (part.size() == start) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-')
    throw Error(ErrorKind::syntax, "malformed scalar '" + s + "'");
  return field.from_fraction(mpz_class(num), mpz_class(den));
}

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

Json to_json(const FiniteKAlgebra& a) {
  Json table = Json::array();
  for (const auto& row : a.table()) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(to_json(v));
    table.push_back(std::move(jr));
  }
  return Json{{"field", a.field().to_string()},
              {"dimension", a.dimension()},
              {"basis", a.labels()},
              {"structure_constants", std::move(table)},
              {"order", a.order()}};
}

FiniteKAlgebra algebra_from_json(const Json& j) {
  try {
    Field field = parse_field(j.value("field", std::string("Q")));
    auto labels = j.at("basis").get<std::vector<std::string>>();
    std::vector<std::vector<Vector>> table;
    for (const auto& row : j.at("structure_constants")) {
      std::vector<Vector> r;
      for (const auto& v : row) {
        Vector vec;
        for (const auto& s : v) vec.push_back(parse_scalar(s.get<std::string>(), field));
        r.push_back(std::move(vec));
      }
      table.push_back(std::move(r));
    }
    FiniteKAlgebra a(field, std::move(labels), std::move(table));
    if (j.contains("dimension") && j.at("dimension").get<std::size_t>() != a.dimension())
      throw Error(ErrorKind::invalid_algebra, "declared dimension does not match the table");
    if (j.contains("order") && j.at("order").get<std::size_t>() != a.order())
      throw Error(ErrorKind::invalid_algebra, "declared order does not match the table");
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::syntax, std::string("malformed algebra JSON: ") + e.what());
  }
}

Json to_json(const AlgebraMorphism& m) {
  return Json{{"source", to_json(m.source())},
              {"target", to_json(m.target())},
              {"matrix", to_json(m.matrix())}};
}

Json to_json(const DeformationOverA& d) {
  Json eq = Json::object();
  for (std::size_t i = 0; i < d.coefficients().size(); ++i)
    eq[d.base().labels()[i]] = d.coefficients()[i].to_string();
  return Json{{"variables", d.ring()->variables()},
              {"base", to_json(d.base())},
              {"equation", std::move(eq)}};
}

DeformationOverA deformation_from_json(const Json& j) {
  try {
    FiniteKAlgebra base = algebra_from_json(j.at("base"));
    RingPtr ring = Ring::make(j.at("variables").get<std::vector<std::string>>(), base.field());
    const Json& eq = j.at("equation");
    std::vector<Polynomial> coeffs;
    for (const auto& label : base.labels()) {
      if (eq.contains(label))
        coeffs.push_back(parse_poly(eq.at(label).get<std::string>(), ring));
      else
        coeffs.emplace_back(ring);
    }
    for (const auto& [label, value] : eq.items()) {
      (void)value;
      if (std::find(base.labels().begin(), base.labels().end(), label) == base.labels().end())
        throw Error(ErrorKind::syntax, "equation refers to unknown basis label '" + label + "'");
    }
    return DeformationOverA(std::move(base), std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::syntax, std::string("malformed deformation JSON: ") + e.what());
  }
}

Json to_json(const TjurinaData& td) {
  Json basis = Json::array();
  for (const auto& m : td.basis) basis.push_back(td.f.ring()->format(m));
  Json gb = Json::array();
  for (const auto& g : td.gb.generators) gb.push_back(g.to_string());
  return Json{{"f", td.f.to_string()},
              {"tjurina", td.tjurina_number()},
              {"basis", std::move(basis)},
              {"groebner_basis", std::move(gb)}};
}

Json to_json(const MiniversalFamily& mf) {
  Json dirs = Json::array();
  for (const auto& g : mf.directions) dirs.push_back(g.to_string());
  return Json{{"f", mf.f.to_string()},
              {"parameters", mf.parameters},
              {"directions", std::move(dirs)},
              {"family", mf.family.to_string()},
              {"kodaira_spencer", to_json(mf.kodaira_spencer)}};
}

Json to_json(const HypersurfaceReport& r) {
  return Json{{"n", r.n},
              {"d", r.d},
              {"hilb_tangent_dim", r.hilb_tangent_dim},
              {"hilb_obstruction_dim", r.hilb_obstruction_dim},
              {"delta_surjective", r.delta_surjective},
              {"all_deformations_embedded", r.all_deformations_embedded},
              {"citations", r.citations}};
}

}  // namespace infdef
