#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "levelcert/complex.hpp"
#include "levelcert/ring.hpp"

namespace testing_support {

inline levelcert::RingHandle ring(std::vector<std::string> vars, std::vector<std::string> rels,
                                  std::uint64_t p = 101) {
  return levelcert::make_ring(p, std::move(vars), levelcert::MonomialOrder::grevlex, rels);
}

inline levelcert::PolyMatrix mat(const levelcert::RingHandle& R,
                                 std::initializer_list<std::initializer_list<const char*>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  levelcert::PolyMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (auto e : row) m.at(i, j++) = R->parse(e);
    ++i;
  }
  return m;
}

inline levelcert::Ideal ideal(const levelcert::RingHandle& R, std::initializer_list<const char*> gens) {
  std::vector<levelcert::Polynomial> g;
  for (auto t : gens) g.push_back(R->parse(t));
  return levelcert::Ideal(R, g);
}

/// 0 -> R(-n) -> ... -> R(-1) -> R -> 0 with every differential f (degree-1 form).
inline levelcert::ChainComplex chain_of(const levelcert::RingHandle& R, const char* f, int n) {
  std::vector<std::vector<int>> tw;
  std::vector<levelcert::PolyMatrix> ds;
  for (int i = 0; i <= n; ++i) {
    tw.push_back({i});
    if (i > 0) ds.push_back(mat(R, {{f}}));
  }
  return levelcert::ChainComplex::make(R, 0, tw, ds);
}

/// F with every generator degree raised by s.
inline levelcert::ChainComplex twisted(const levelcert::ChainComplex& F, int s) {
  std::vector<std::vector<int>> tw;
  std::vector<levelcert::PolyMatrix> ds;
  for (int i = F.lo(); i <= F.hi(); ++i) {
    auto t = F.twists(i);
    for (auto& x : t) x += s;
    tw.push_back(t);
    if (i > F.lo()) ds.push_back(F.differential(i));
  }
  return levelcert::ChainComplex::make(F.ring(), F.lo(), tw, ds);
}

inline std::vector<long long> lengths(const levelcert::ChainComplex& F) {
  std::vector<long long> out;
  for (int i = F.lo(); i <= F.hi(); ++i) out.push_back(levelcert::homology(F, i).length.value_or(-1));
  return out;
}

}  // namespace testing_support
