#include "hurwitz/rational.hpp"

namespace hurwitz {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace hurwitz
