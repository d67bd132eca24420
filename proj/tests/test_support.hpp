#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexcone/lexvec.hpp"
#include "lexcone/poset.hpp"

namespace lexcone::testing {

inline Poset wedge_poset() { return Poset::from_covers({"s", "t", "m"}, {{"s", "m"}, {"t", "m"}}); }
inline Poset chain(std::initializer_list<std::string> labels) { return Poset::chain(labels); }
inline Poset antichain(std::initializer_list<std::string> labels) { return Poset::antichain(labels); }

// Vector from (label, "p/q") pairs.
inline LexVector vec(const Poset& p, std::initializer_list<std::pair<std::string, std::string>> entries) {
  LexVector v(p);
  for (const auto& [label, value] : entries) v.add_to(p.index(label), parse_rational(value));
  return v;
}

inline Rational q(const char* text) { return parse_rational(text); }

}  // namespace lexcone::testing
