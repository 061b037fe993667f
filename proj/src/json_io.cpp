#include "dw/json_io.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>

namespace dw {

namespace {

int require_n(const Json& params) {
  if (!params.is_object() || !params.contains("n") ||
      !params["n"].is_number_integer())
    throw ValidationError("family parameters need an integer \"n\"");
  return params["n"].get<int>();
}

}  // namespace

FiniteGroup named_group(const std::string& family, const Json& params) {
  try {
    if (family == "cyclic") {
      int n = require_n(params);
      if (n < 1 || n > 64)
        throw ValidationError("cyclic supports 1 <= n <= 64");
      return FiniteGroup::cyclic(n);
    }
    if (family == "dihedral") {
      int n = require_n(params);
      if (n < 1 || n > 32)
        throw ValidationError("dihedral supports 1 <= n <= 32");
      return FiniteGroup::dihedral(n);
    }
    if (family == "symmetric") {
      int n = require_n(params);
      if (n < 1 || n > 5)
        throw ValidationError("symmetric supports 1 <= n <= 5");
      return FiniteGroup::symmetric(n);
    }
    if (family == "alternating") {
      int n = require_n(params);
      if (n < 1 || n > 5)
        throw ValidationError("alternating supports 1 <= n <= 5");
      return FiniteGroup::alternating(n);
    }
    if (family == "quaternion") {
      int n = require_n(params);
      if (n > 64) throw ValidationError("quaternion supports order <= 64");
      return FiniteGroup::quaternion(n);
    }
    if (family == "direct_product") {
      if (!params.is_object() || !params.contains("factors") ||
          !params["factors"].is_array() || params["factors"].size() != 2)
        throw ValidationError(
            "direct_product needs \"factors\": [groupdef, groupdef]");
      return FiniteGroup::direct_product(group_from_json(params["factors"][0]),
                                         group_from_json(params["factors"][1]));
    }
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("bad family parameters: ") + e.what());
  }
  throw ValidationError("unknown group family \"" + family +
                        "\" (expected cyclic, dihedral, symmetric, "
                        "alternating, quaternion or direct_product)");
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("group definition must be an object");
  int present = j.contains("table") + j.contains("generators") +
                j.contains("family");
  if (present != 1)
    throw ValidationError(
        "group definition needs exactly one of table, generators, family");
  std::string name = j.value("name", "");
  try {
    if (j.contains("table")) {
      auto table = j["table"].get<std::vector<std::vector<int>>>();
      return FiniteGroup::from_table(std::move(table), name);
    }
    if (j.contains("generators")) {
      auto gens = j["generators"].get<std::vector<std::vector<int>>>();
      return FiniteGroup::from_permutations(gens, name);
    }
    auto g = named_group(j["family"].get<std::string>(),
                         j.value("params", Json::object()));
    return g;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed group definition: ") +
                          e.what());
  }
}

GroupPresentation presentation_from_json(const Json& j) {
  try {
    GroupPresentation p;
    p.num_generators = j.at("generators").get<int>();
    if (j.contains("relators"))
      p.relators = j["relators"].get<std::vector<std::vector<int>>>();
    p.validate();
    return p;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed presentation: ") + e.what());
  }
}

Json presentation_to_json(const GroupPresentation& p) {
  return Json{{"generators", p.num_generators}, {"relators", p.relators}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

FiniteGroup resolve_group(const std::string& token) {
  if (token == "trivial") return FiniteGroup::cyclic(1);

  // Direct products, e.g. Z2xZ2 or Z2xZ4.
  auto split = token.find('x');
  if (split != std::string::npos && split > 0 && split + 1 < token.size() &&
      std::isalpha(static_cast<unsigned char>(token[0])) &&
      std::isalpha(static_cast<unsigned char>(token[split + 1]))) {
    return FiniteGroup::direct_product(resolve_group(token.substr(0, split)),
                                       resolve_group(token.substr(split + 1)));
  }

  if (token.size() >= 2 &&
      std::isalpha(static_cast<unsigned char>(token[0]))) {
    bool digits = true;
    for (std::size_t i = 1; i < token.size() && digits; ++i)
      digits = std::isdigit(static_cast<unsigned char>(token[i]));
    if (digits) {
      int n = std::stoi(token.substr(1));
      Json params{{"n", n}};
      switch (token[0]) {
        case 'Z':
        case 'C':
          return named_group("cyclic", params);
        case 'S':
          return named_group("symmetric", params);
        case 'A':
          return named_group("alternating", params);
        case 'D':
          return named_group("dihedral", params);
        case 'Q':
          return named_group("quaternion", params);
        default:
          break;
      }
    }
  }

  if (std::filesystem::exists(token)) return group_from_json(load_json_file(token));
  throw ValidationError("unknown group \"" + token +
                        "\": use Z<n>, S<n>, A<n>, D<n>, Q<order>, trivial, "
                        "products like Z2xZ2, or a JSON file path");
}

double json_round(double v) {
  double r = std::round(v * 1e12) / 1e12;
  if (r == 0.0) r = 0.0;  // normalize -0
  return r;
}

Json complex_to_json(Complex c) {
  return Json{{"re", json_round(c.real())}, {"im", json_round(c.imag())}};
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Json chartable_to_json(const CharacterTable& ct) {
  Json table = Json::array();
  for (int i = 0; i < ct.num_classes(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < ct.num_classes(); ++j)
      row.push_back(complex_to_json(ct.chars(i, j)));
    table.push_back(std::move(row));
  }
  return Json{{"classes", ct.class_sizes},
              {"degrees", ct.degrees},
              {"table", std::move(table)}};
}

}  // namespace dw
