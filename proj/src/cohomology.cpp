#include "branecalc/cohomology.hpp"

#include <algorithm>

namespace branecalc {

namespace {

std::map<Monomial, int> index_basis(const std::vector<Monomial>& basis) {
  std::map<Monomial, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  return idx;
}

SparseVec to_sparse(const Element& a, const std::map<Monomial, int>& idx) {
  SparseVec out;
  for (const auto& [m, c] : a.terms()) {
    auto it = idx.find(m);
    if (it == idx.end())
      throw verify_error("element has a term outside the expected degree slice");
    out[it->second] = c;
  }
  return out;
}

}  // namespace

std::vector<Rational> coords_in_basis(const Element& a,
                                      const std::vector<Monomial>& basis) {
  auto idx = index_basis(basis);
  std::vector<Rational> out(basis.size(), 0);
  for (const auto& [j, c] : to_sparse(a, idx)) out[j] = c;
  return out;
}

DegreeSlice build_slice(const SullivanModel& m, int n) {
  DegreeSlice s;
  s.degree = n;
  s.basis = monomials_of_degree(*m.algebra, n);
  s.next_basis = monomials_of_degree(*m.algebra, n + 1);
  s.matrix_of_d.cols = static_cast<int>(s.basis.size());
  auto idx = index_basis(s.next_basis);
  std::vector<SparseVec> cols(s.basis.size());
  for (std::size_t j = 0; j < s.basis.size(); ++j)
    cols[j] = to_sparse(m.d.apply(Element::term(m.algebra, s.basis[j], 1)), idx);
  s.matrix_of_d.rows.assign(s.next_basis.size(), {});
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) s.matrix_of_d.rows[r][static_cast<int>(j)] = c;
  return s;
}

std::vector<int> cohomology_dims(const SullivanModel& m, int n_max) {
  if (n_max < 0) throw input_error("n_max must be >= 0");
  std::vector<int> dims;
  int prev_rank = 0;
  for (int n = 0; n <= n_max; ++n) {
    DegreeSlice s = build_slice(m, n);
    int rk = rank(s.matrix_of_d);
    dims.push_back(static_cast<int>(s.basis.size()) - rk - prev_rank);
    prev_rank = rk;
  }
  return dims;
}

bool is_cocycle(const Element& a, const SullivanModel& m) {
  if (a.is_zero()) return true;
  require_same_algebra(m.algebra, a.algebra(), "is_cocycle");
  a.homogeneous_degree();  // rejects inhomogeneous input
  return m.d.apply(a).is_zero();
}

std::optional<Element> coboundary_preimage(const Element& a, const SullivanModel& m) {
  if (a.is_zero()) return Element::zero(m.algebra);
  if (!is_cocycle(a, m)) throw input_error("coboundary_preimage: input is not a cocycle");
  int n = *a.homogeneous_degree();
  if (n == 0) return std::nullopt;  // nonzero constants are never exact
  DegreeSlice s = build_slice(m, n - 1);
  auto x = solve(s.matrix_of_d, coords_in_basis(a, s.next_basis));
  if (!x) return std::nullopt;
  Element z(m.algebra);
  for (std::size_t j = 0; j < s.basis.size(); ++j)
    if ((*x)[j] != 0) z += Element::term(m.algebra, s.basis[j], (*x)[j]);
  return z;
}

std::vector<Monomial> module_basis_up_to(const FreeGCA& alg,
                                         const std::vector<bool>& base, int n_max) {
  std::vector<bool> allowed(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) allowed[i] = !base[i];
  std::vector<Monomial> out;
  for (int n = 0; n <= n_max; ++n)
    for (Monomial& m : monomials_of_degree(alg, n, &allowed)) out.push_back(std::move(m));
  return out;
}

HomElement hom_differential(const HomElement& f, const Derivation& d_src,
                            const Derivation& d_tgt, int n_max) {
  const ModuleMorphism& mu = f.map;
  ModuleMorphism out(mu.source(), mu.target(), mu.base_flags(), f.degree + 1,
                     mu.default_zero());
  int sign = f.degree % 2 == 0 ? 1 : -1;
  for (const Monomial& m : module_basis_up_to(*mu.source(), mu.base_flags(), n_max)) {
    Element value = d_tgt.apply(mu.image(m)) -
                    mu.apply(d_src.apply(Element::term(mu.source(), m, 1))) * Rational(sign);
    out.set_image(m, std::move(value));
  }
  return {std::move(out), f.degree + 1};
}

bool hom_is_cocycle(const HomElement& f, const Derivation& d_src,
                    const Derivation& d_tgt, int n_max, std::string* witness) {
  HomElement Df = hom_differential(f, d_src, d_tgt, n_max);
  for (const auto& [m, img] : Df.map.images())
    if (!img.is_zero()) {
      if (witness) *witness = f.map.source()->mono_str(m);
      return false;
    }
  return true;
}

AlgebraMorphism lift_through_surjection(const SullivanModel& src,
                                        const AlgebraMorphism& f,
                                        const SullivanModel& through,
                                        const AlgebraMorphism& p, int n_max) {
  require_same_algebra(src.algebra, f.source(), "lift: f source");
  require_same_algebra(through.algebra, p.source(), "lift: p source");
  require_same_algebra(f.target(), p.target(), "lift: targets");

  std::vector<std::size_t> order(src.algebra->size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return src.algebra->gen(a).degree < src.algebra->gen(b).degree;
  });

  std::vector<std::optional<Element>> images(src.algebra->size());
  auto phi_apply = [&](const Element& a) {
    Element out(through.algebra);
    for (const auto& [m, c] : a.terms()) {
      Element term = Element::unit(through.algebra);
      for (std::size_t i = 0; i < src.algebra->size(); ++i)
        for (int e = 0; e < m.exp[i]; ++e) {
          if (!images[i])
            throw input_error("lift: differential of a generator references '" +
                              src.algebra->gen(i).name + "' of equal or higher degree");
          term = term * *images[i];
        }
      out += term * c;
    }
    return out;
  };

  for (std::size_t i : order) {
    int n = src.algebra->gen(i).degree;
    if (n > n_max)
      throw input_error("lift: generator '" + src.algebra->gen(i).name +
                        "' exceeds the truncation degree");
    Element target_d = phi_apply(src.d.image(i));
    DegreeSlice slice = build_slice(through, n);
    std::vector<Monomial> p_basis = monomials_of_degree(*p.target(), n);
    auto p_idx = index_basis(p_basis);

    SparseMatrix sys;
    sys.cols = static_cast<int>(slice.basis.size());
    sys.rows = slice.matrix_of_d.rows;  // d(z) block
    std::size_t d_rows = sys.rows.size();
    sys.rows.resize(d_rows + p_basis.size());
    for (std::size_t j = 0; j < slice.basis.size(); ++j) {
      Element pj = p.apply(Element::term(through.algebra, slice.basis[j], 1));
      for (const auto& [r, c] : to_sparse(pj, p_idx))
        sys.rows[d_rows + r][static_cast<int>(j)] = c;
    }
    std::vector<Rational> rhs = coords_in_basis(target_d, slice.next_basis);
    std::vector<Rational> frhs = coords_in_basis(f.image(i), p_basis);
    rhs.insert(rhs.end(), frhs.begin(), frhs.end());

    auto x = solve(sys, rhs);
    if (!x)
      throw verify_error("lift: no solution in degree " + std::to_string(n) +
                         " (p may fail to be a quasi-isomorphism in range, or "
                         "n_max is too small)");
    Element z(through.algebra);
    for (std::size_t j = 0; j < slice.basis.size(); ++j)
      if ((*x)[j] != 0) z += Element::term(through.algebra, slice.basis[j], (*x)[j]);
    images[i] = std::move(z);
  }

  std::vector<Element> final_images;
  for (auto& img : images) final_images.push_back(std::move(*img));
  AlgebraMorphism phi(src.algebra, through.algebra, std::move(final_images));
  std::string w;
  if (!phi.chain_map(src.d, through.d, &w))
    throw verify_error("lift: result is not a chain map at '" + w + "'");
  for (std::size_t i = 0; i < src.algebra->size(); ++i)
    if (!(p.apply(phi.image(i)) == f.image(i)))
      throw verify_error("lift: p∘φ != f at '" + src.algebra->gen(i).name + "'");
  return phi;
}

int default_truncation(const SullivanModel& m) {
  int top = 0;
  for (const Generator& g : m.algebra->gens()) top = std::max(top, g.degree);
  return 2 * top + 4;
}

}  // namespace branecalc
