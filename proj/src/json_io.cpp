#include "cliffcalc/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffcalc {

namespace {

std::string mask_key(const Signature& sig, BladeMask mask) {
  std::string key;
  for (int a = 1; a <= sig.n(); ++a) {
    if (mask & (BladeMask(1) << (a - 1))) {
      if (!key.empty()) key += ',';
      key += std::to_string(a);
    }
  }
  return key;
}

BladeMask key_mask(const Signature& sig, const std::string& key) {
  if (key.empty()) return 0;
  BladeMask mask = 0;
  int previous = 0;
  std::size_t i = 0;
  while (i < key.size()) {
    std::size_t j = i;
    while (j < key.size() && key[j] != ',') ++j;
    const std::string part = key.substr(i, j - i);
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad blade key '" + key + "'");
    }
    if (index < 1 || index > sig.n()) {
      throw std::invalid_argument("blade key '" + key + "' has index out of range for " +
                                  sig.str());
    }
    if (index <= previous) {
      throw std::invalid_argument("blade key '" + key + "' is not strictly ascending");
    }
    previous = index;
    mask |= BladeMask(1) << (index - 1);
    i = j + 1;
    if (j == key.size()) break;
    if (i == key.size()) throw std::invalid_argument("bad blade key '" + key + "'");
  }
  return mask;
}

Complex pair_to_complex(const nlohmann::json& value, const std::string& key) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
    throw std::invalid_argument("coefficient for '" + key + "' must be a [re, im] pair");
  }
  const double re = value[0].get<double>();
  const double im = value[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::invalid_argument("coefficient for '" + key + "' is not finite");
  }
  return {re, im};
}

}  // namespace

nlohmann::json multivector_to_json(const Multivector& u) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (BladeMask mask = 0; mask < BladeMask(u.coeffs.size()); ++mask) {
    const Complex c = u.coeffs[mask];
    if (c == Complex{}) continue;
    coeffs[mask_key(u.sig, mask)] = nlohmann::json::array({c.real(), c.imag()});
  }
  return nlohmann::json{{"p", u.sig.p}, {"q", u.sig.q}, {"coeffs", coeffs}};
}

Multivector multivector_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) {
    throw std::invalid_argument("multivector JSON needs integer fields \"p\" and \"q\"");
  }
  if (!j["p"].is_number_integer() || !j["q"].is_number_integer()) {
    throw std::invalid_argument("\"p\" and \"q\" must be integers");
  }
  const Signature sig(j["p"].get<int>(), j["q"].get<int>());
  Multivector out(sig);
  if (j.contains("coeffs")) {
    const auto& coeffs = j["coeffs"];
    if (!coeffs.is_object()) throw std::invalid_argument("\"coeffs\" must be an object");
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      out.coeffs[key_mask(sig, it.key())] = pair_to_complex(it.value(), it.key());
    }
  }
  return out;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : m.entries()) {
    entries.push_back(nlohmann::json::array({e.real(), e.imag()}));
  }
  return nlohmann::json{{"dim", m.dim()}, {"entries", entries}};
}

}  // namespace cliffcalc
