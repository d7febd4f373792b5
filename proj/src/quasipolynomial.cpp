#include "hurwitz/quasipolynomial.hpp"

#include "json.hpp"

namespace hurwitz {

std::string QuasiPoly::to_json() const {
  nlohmann::ordered_json j;
  j["modulus"] = modulus;
  j["envelope_base"] = envelope_base;
  j["branches"] = nlohmann::ordered_json::array();
  for (const auto& [residues, poly] : branches) {
    nlohmann::ordered_json b;
    b["residues"] = residues;
    b["poly"] = nlohmann::ordered_json::parse(poly.to_json());
    j["branches"].push_back(b);
  }
  return j.dump();
}

}  // namespace hurwitz
