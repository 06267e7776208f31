#include "branecalc/algebra.hpp"

#include <algorithm>

namespace branecalc {

FreeGCA::FreeGCA(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Generator& g = gens_[i];
    if (g.degree < 1)
      throw input_error("generator '" + g.name + "' has degree " +
                        std::to_string(g.degree) + " < 1");
    if (g.name.empty()) throw input_error("generator with empty name");
    if (!index_.emplace(g.name, i).second)
      throw input_error("duplicate generator name '" + g.name + "'");
  }
}

AlgebraPtr FreeGCA::make(std::vector<Generator> gens) {
  return AlgebraPtr(new FreeGCA(std::move(gens)));
}

int FreeGCA::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : static_cast<int>(it->second);
}

std::size_t FreeGCA::index_of(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw input_error("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(i);
}

int FreeGCA::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += m.exp[i] * gens_[i].degree;
  return d;
}

Monomial FreeGCA::gen_monomial(std::size_t i) const {
  Monomial m = one();
  m.exp[i] = 1;
  return m;
}

std::optional<std::pair<int, Monomial>> FreeGCA::multiply(const Monomial& a,
                                                          const Monomial& b) const {
  const std::size_t n = gens_.size();
  Monomial out = one();
  // Count transpositions of odd generators: each odd factor of b at index j
  // moves left past every odd factor of a at index i > j.
  long swaps = 0;
  long odd_a_above = 0;  // number of odd a-factors with index > current j
  for (std::size_t i = 0; i < n; ++i)
    if (odd(i)) odd_a_above += a.exp[i];
  for (std::size_t j = 0; j < n; ++j) {
    if (odd(j)) {
      odd_a_above -= a.exp[j];
      if (b.exp[j]) {
        if (a.exp[j] + b.exp[j] > 1) return std::nullopt;  // odd square
        swaps += odd_a_above;
      }
    }
    out.exp[j] = a.exp[j] + b.exp[j];
  }
  return std::make_pair(swaps % 2 == 0 ? 1 : -1, std::move(out));
}

bool FreeGCA::mono_less(const Monomial& a, const Monomial& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  // Higher exponent on an earlier generator sorts first.
  return a.exp > b.exp;
}

std::string FreeGCA::mono_str(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!s.empty()) s += ' ';
    s += gens_[i].name + "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> monomials_of_degree(const FreeGCA& alg, int n,
                                          const std::vector<bool>* allowed) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  Monomial cur = alg.one();
  // Recursive enumeration generator by generator; every generator has
  // degree >= 1, so each graded piece is finite.
  auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
    if (rem == 0) {
      // remaining generators get exponent 0
      out.push_back(cur);
      return;
    }
    if (i == alg.size()) return;
    bool usable = !allowed || (*allowed)[i];
    int max_e = usable ? rem / alg.gen(i).degree : 0;
    if (usable && alg.odd(i)) max_e = std::min(max_e, 1);
    for (int e = max_e; e >= 0; --e) {
      cur.exp[i] = e;
      self(self, i + 1, rem - e * alg.gen(i).degree);
    }
    cur.exp[i] = 0;
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return alg.mono_less(a, b); });
  return out;
}

}  // namespace branecalc
