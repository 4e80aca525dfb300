#include "torica/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "torica/error.hpp"

namespace torica {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidInput, std::string(what) + " is not valid JSON: " + e.what());
  }
}

const json& field(const json& obj, const char* key, const char* what) {
  require(obj.is_object(), ErrorCode::InvalidInput, std::string(what) + " must be a JSON object");
  auto it = obj.find(key);
  require(it != obj.end(), ErrorCode::InvalidInput,
          std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  require(v.is_number_integer(), ErrorCode::InvalidInput, where + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_array(const json& v, const std::string& where) {
  require(v.is_array(), ErrorCode::InvalidInput, where + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(as_int(x, where));
  return out;
}

Rational as_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  require(v.is_string(), ErrorCode::InvalidInput, where + " must be a \"p/q\" string or integer");
  return parse_rational(v.get<std::string>());
}

}  // namespace

Fan fan_from_json(const std::string& text) {
  const json j = parse(text, "fan");
  const std::int64_t d = as_int(field(j, "dim", "fan"), "dim");
  require(d >= 1 && d <= 64, ErrorCode::InvalidInput, "dim must lie in [1, 64]");

  const json& rj = field(j, "rays", "fan");
  require(rj.is_array(), ErrorCode::InvalidInput, "rays must be an array");
  std::vector<std::vector<std::int64_t>> rays;
  for (std::size_t i = 0; i < rj.size(); ++i) {
    auto r = int_array(rj[i], "ray " + std::to_string(i));
    require(static_cast<std::int64_t>(r.size()) == d, ErrorCode::InvalidInput,
            "ray " + std::to_string(i) + " has the wrong length");
    Integer g = 0;
    for (auto x : r) g = gcd(g, Integer(std::to_string(x)));
    require(g == 1, ErrorCode::NonPrimitiveRay,
            "ray " + std::to_string(i) + " is not primitive (gcd " + g.get_str() + ")");
    rays.push_back(std::move(r));
  }

  const json& cj = field(j, "max_cones", "fan");
  require(cj.is_array(), ErrorCode::InvalidInput, "max_cones must be an array");
  std::vector<Cone> cones;
  for (std::size_t c = 0; c < cj.size(); ++c) {
    Cone cone;
    for (auto x : int_array(cj[c], "cone " + std::to_string(c))) {
      require(x >= 0, ErrorCode::InvalidInput, "negative ray index in cone " + std::to_string(c));
      cone.push_back(static_cast<std::size_t>(x));
    }
    cones.push_back(std::move(cone));
  }
  return Fan(static_cast<int>(d), std::move(rays), std::move(cones));
}

std::string fan_to_json(const Fan& fan) {
  json j;
  j["dim"] = fan.dim();
  j["rays"] = fan.rays();
  j["max_cones"] = fan.max_cones();
  return j.dump();
}

GradedPolynomial polynomial_from_json(const ToricVariety& X, const std::string& text) {
  const json j = parse(text, "polynomial");
  const auto b = int_array(field(j, "degree_divisor", "polynomial"), "degree_divisor");
  require(b.size() == X.n(), ErrorCode::InvalidInput,
          "degree_divisor has " + std::to_string(b.size()) + " entries, the fan has " +
              std::to_string(X.n()) + " rays");
  const DivisorClass beta = X.class_of(b);

  const json& tj = field(j, "terms", "polynomial");
  require(tj.is_array(), ErrorCode::InvalidInput, "terms must be an array");
  GradedPolynomial::Terms terms;
  for (std::size_t t = 0; t < tj.size(); ++t) {
    const std::string where = "term " + std::to_string(t);
    const auto e = int_array(field(tj[t], "exponents", where.c_str()), where + " exponents");
    require(e.size() == X.n(), ErrorCode::InvalidInput, where + " has the wrong number of exponents");
    Exponent a;
    for (auto x : e) {
      require(x >= 0 && x <= std::numeric_limits<int>::max(), ErrorCode::InvalidInput,
              where + " has a negative or oversized exponent");
      a.push_back(static_cast<int>(x));
    }
    const Rational c = as_rational(field(tj[t], "coeff", where.c_str()), where + " coeff");
    auto [it, inserted] = terms.emplace(a, c);
    if (!inserted) it->second += c;
  }
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  return make_polynomial(X, beta, terms);
}

std::string polynomial_to_json(const ToricVariety& X, const GradedPolynomial& f) {
  json j;
  json b = json::array();
  for (const auto& x : X.representative(f.degree())) b.push_back(to_int64(x));
  j["degree_divisor"] = b;
  json terms = json::array();
  for (const auto& [a, c] : f.terms()) terms.push_back({{"exponents", a}, {"coeff", c.get_str()}});
  j["terms"] = terms;
  return j.dump();
}

IntVector parse_divisor(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream is(s);
  IntVector out;
  std::string tok;
  while (is >> tok) {
    Integer v;
    require(v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) == 0, ErrorCode::InvalidInput,
            "cannot parse divisor entry '" + tok + "'");
    out.push_back(v);
  }
  require(!out.empty(), ErrorCode::InvalidInput, "empty divisor");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace torica
