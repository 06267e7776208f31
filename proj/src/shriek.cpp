#include "branecalc/shriek.hpp"

namespace branecalc {

namespace {

void require_pure(const SullivanModel& m, const char* what) {
  PurityResult p = check_pure(m);
  if (!p.pure)
    throw input_error(std::string(what) + " requires a pure model; generator '" +
                      p.witness + "' violates purity");
}

void strip_zeros(std::vector<SparseVec>& rows) {
  for (SparseVec& r : rows)
    for (auto it = r.begin(); it != r.end();)
      it = it->second == 0 ? r.erase(it) : std::next(it);
}

}  // namespace

int gorenstein_shift_mbar(const SullivanModel& m, int k) {
  int out = 0;
  for (std::size_t i : even_generators(m)) out += m.algebra->gen(i).degree - k + 1;
  for (std::size_t j : odd_generators(m)) out -= m.algebra->gen(j).degree - k;
  return out;
}

int gorenstein_shift_m(const SullivanModel& m) {
  int out = 0;
  for (std::size_t j : odd_generators(m)) out += m.algebra->gen(j).degree;
  for (std::size_t i : even_generators(m)) out -= m.algebra->gen(i).degree - 1;
  return out;
}

GammaResult build_shriek_constant(const SullivanModel& m, int k, int n_max) {
  if (k < 2 || k % 2 != 0)
    throw input_error("out of scope: γ is constructed for even k ≥ 2 only");
  require_pure(m, "build_shriek_constant");
  if (!check_k_connected(m, k))
    throw input_error("build_shriek_constant requires a k-connected model");
  if (n_max < 0) n_max = default_truncation(m);

  GammaResult out{{}, build_disk_model(m, k), build_sphere_model(m, k - 1)};
  const AlgebraPtr& disk_alg = out.disk.model.algebra;
  const AlgebraPtr& sph_alg = out.sphere.model.algebra;

  std::vector<bool> base(disk_alg->size());
  for (std::size_t i = 0; i < base.size(); ++i)
    base[i] = disk_alg->gen(i).susp_level < k;

  int mbar = gorenstein_shift_mbar(m, k);
  ModuleMorphism gamma(disk_alg, sph_alg, base, mbar, /*default_zero=*/true);

  Monomial top = disk_alg->one();
  for (std::size_t j : odd_generators(m))
    top.exp[disk_alg->index_of(susp_name(k, m.algebra->gen(j).name))] = 1;
  Element img = Element::unit(sph_alg);
  for (std::size_t i : even_generators(m))
    img = img * Element::generator(sph_alg, susp_name(k - 1, m.algebra->gen(i).name));
  gamma.set_image(top, img);
  out.gamma = ShriekMap{{std::move(gamma), mbar}, 1};

  std::string w;
  if (!hom_is_cocycle(out.gamma.hom, out.disk.model.d, out.sphere.model.d, n_max, &w))
    throw verify_error("D(γ) != 0 on module-basis monomial " + w);
  return out;
}

EtaResult build_shriek_diagonal(const SullivanModel& m, int n_max,
                                const PathNames& names) {
  require_pure(m, "build_shriek_diagonal");
  if (n_max < 0) n_max = default_truncation(m);
  const int window = n_max + 1;

  EtaResult out{{}, build_path_model(m, names)};
  const AlgebraPtr& alg = out.path.model.algebra;
  const Derivation& d = out.path.model.d;

  std::vector<bool> base(alg->size());
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = alg->gen(i).susp_level == 0;

  // η's genuine target ΛV⊗ΛV, with the differential restricted from M(I).
  std::vector<Generator> bgens;
  std::map<std::string, std::string> kill_susp;
  for (std::size_t i = 0; i < alg->size(); ++i) {
    if (base[i])
      bgens.push_back(alg->gen(i));
    else
      kill_susp[alg->gen(i).name] = "";
  }
  AlgebraPtr b_alg = FreeGCA::make(std::move(bgens));
  AlgebraMorphism to_base = AlgebraMorphism::by_names(alg, b_alg, kill_susp);
  Derivation bd(b_alg, 1);
  for (std::size_t i = 0; i < alg->size(); ++i)
    if (base[i]) bd.set_image(alg->gen(i).name, to_base.apply(d.image(i)));
  out.target = SullivanModel{b_alg, std::move(bd)};

  int mdeg = gorenstein_shift_m(m);

  Monomial top = alg->one();
  for (std::size_t i : even_generators(m))
    top.exp[alg->index_of(names.susp_prefix + m.algebra->gen(i).name)] = 1;
  Element topval = Element::unit(alg);
  for (std::size_t j : odd_generators(m)) {
    const std::string& y = m.algebra->gen(j).name;
    topval = topval * (Element::generator(alg, y + names.right_suffix) -
                       Element::generator(alg, y + names.left_suffix));
  }

  // Unknown blocks: the value of η on each module-basis monomial, in
  // coordinates over the base-only monomials of the value degree.
  struct Block {
    std::vector<Monomial> basis;
    int offset = -1;  // global column offset; -1 when no unknowns
    bool prescribed = false;
  };
  std::map<Monomial, Block> blocks;
  int total_cols = 0;
  for (const Monomial& mu : module_basis_up_to(*alg, base, window)) {
    Block b;
    b.prescribed = mu == top;
    int vdeg = alg->degree(mu) + mdeg;
    if (!b.prescribed && vdeg >= 0) {
      b.basis = monomials_of_degree(*alg, vdeg, &base);
      if (!b.basis.empty()) {
        b.offset = total_cols;
        total_cols += static_cast<int>(b.basis.size());
      }
    }
    blocks.emplace(mu, std::move(b));
  }
  if (!blocks.count(top))
    throw input_error("η's prescribed monomial exceeds the truncation window");

  // Equations: D(η)(μ') = 0 over the base-only monomials of degree
  // deg(μ') + |η| + 1, for every module-basis monomial μ' of degree ≤ n_max.
  ModuleMorphism splitter(alg, alg, base, mdeg, /*default_zero=*/true);
  std::vector<SparseVec> rows;
  std::vector<Rational> rhs;
  int sgn_m = mdeg % 2 == 0 ? 1 : -1;
  for (const auto& [mu, blk] : blocks) {
    if (alg->degree(mu) > n_max) continue;
    int rowdeg = alg->degree(mu) + mdeg + 1;
    if (rowdeg < 0) continue;
    std::vector<Monomial> row_basis = monomials_of_degree(*alg, rowdeg, &base);
    std::map<Monomial, int> row_index;
    for (std::size_t r = 0; r < row_basis.size(); ++r)
      row_index[row_basis[r]] = static_cast<int>(r);
    int row0 = static_cast<int>(rows.size());
    rows.resize(row0 + row_basis.size());
    rhs.resize(rows.size(), 0);
    auto add = [&](const Element& e, const Rational& c, int col) {
      // col >= 0: coefficient column; col < 0: constant, moved to the rhs
      for (const auto& [mono, v] : e.terms()) {
        auto it = row_index.find(mono);
        if (it == row_index.end())
          throw verify_error("η completion: term outside the expected slice");
        if (col >= 0)
          rows[row0 + it->second][col] += c * v;
        else
          rhs[row0 + it->second] -= c * v;
      }
    };
    // d(η(μ'))
    if (blk.prescribed) {
      add(d.apply(topval), 1, -1);
    } else {
      for (std::size_t j = 0; j < blk.basis.size(); ++j)
        add(d.apply(Element::term(alg, blk.basis[j], 1)), 1,
            blk.offset + static_cast<int>(j));
    }
    // −(−1)^{|η|} η(d(μ'))
    Element dmu = d.apply(Element::term(alg, mu, 1));
    for (const auto& [ms, c] : dmu.terms()) {
      ModuleMorphism::Split sp = splitter.split(ms);
      int sign = sp.sign;
      if (mdeg % 2 != 0 && alg->degree(sp.base) % 2 != 0) sign = -sign;
      Rational coeff = Rational(-sgn_m) * c * sign;
      const Block& bm = blocks.at(sp.module);
      Element bb = Element::term(alg, sp.base, 1);
      if (bm.prescribed) {
        add(bb * topval, coeff, -1);
      } else if (bm.offset >= 0) {
        for (std::size_t j = 0; j < bm.basis.size(); ++j) {
          auto prod = alg->multiply(sp.base, bm.basis[j]);
          if (!prod) continue;
          auto it = row_index.find(prod->second);
          if (it == row_index.end())
            throw verify_error("η completion: product outside the slice");
          rows[row0 + it->second][bm.offset + static_cast<int>(j)] +=
              coeff * prod->first;
        }
      }
    }
  }
  strip_zeros(rows);

  SparseMatrix A;
  A.cols = total_cols;
  A.rows = std::move(rows);
  auto x = solve(A, rhs);
  if (!x)
    throw verify_error("η completion infeasible within truncation degree " +
                       std::to_string(n_max));

  ModuleMorphism eta(alg, b_alg, base, mdeg, /*default_zero=*/false);
  for (const auto& [mu, blk] : blocks) {
    if (blk.prescribed) {
      eta.set_image(mu, to_base.apply(topval));
      continue;
    }
    Element value(alg);
    for (std::size_t j = 0; j < blk.basis.size(); ++j) {
      const Rational& c = (*x)[blk.offset + static_cast<int>(j)];
      if (c != 0) value += Element::term(alg, blk.basis[j], c);
    }
    eta.set_image(mu, to_base.apply(value));
  }
  out.eta = ShriekMap{{std::move(eta), mdeg}, 1};

  std::string w;
  if (!hom_is_cocycle(out.eta.hom, d, out.target.d, n_max, &w))
    throw verify_error("D(η) != 0 on module-basis monomial " + w);
  return out;
}

}  // namespace branecalc
