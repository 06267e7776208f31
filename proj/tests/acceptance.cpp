// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <iostream>
#include <sstream>
#include <vector>

#include "branecalc/brane.hpp"
#include "branecalc/parser.hpp"
#include "helpers.hpp"

using namespace branecalc;
using bctest::gen;

namespace {

struct Gate {
  int failures = 0;

  void report(int num, const std::string& title, bool ok,
              const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << num << ": " << title;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
  }

  void run(int num, const std::string& title, bool (*fn)(std::string&)) {
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(num, title, ok, detail);
  }
};

BraneEngine engine(const SullivanModel& m, int k, int n_max,
                   SectionMode mode = SectionMode::Auto) {
  return build_brane_engine(m, k, n_max, mode);
}

// 1: composite sends sx to -s^{k-1}x for (k,n) in {(2,2),(2,3),(4,3)}
bool criterion1(std::string& detail) {
  struct Case {
    int k, n;
  };
  for (Case c : {Case{2, 2}, Case{2, 3}, Case{4, 3}}) {
    SullivanModel m = bctest::lambda_x(2 * c.n);
    BraneEngine eng = engine(m, c.k, default_truncation(m));
    CompositeResult comp = compose_operations(brane_coproduct_dual(eng),
                                              brane_product_dual(eng), eng.n_max);
    AlgebraPtr t = comp.op.source.algebra;
    Element expected = -gen(t, "s" + std::to_string(c.k - 1) + "x");
    if (comp.op.apply(gen(t, "sx")) != expected || !comp.report.nontrivial) {
      detail = "(k,n)=(" + std::to_string(c.k) + "," + std::to_string(c.n) + ")";
      return false;
    }
  }
  return true;
}

// 2: coproduct vanishes identically for the odd-generator sphere models
bool criterion2(std::string& detail) {
  for (int xdeg : {4, 6}) {
    SullivanModel m = bctest::sphere_model(xdeg);
    int n_max = default_truncation(m);
    BraneEngine eng = engine(m, 2, n_max);
    BraneOperation delta = brane_coproduct_dual(eng);
    for (int n = 0; n <= n_max; ++n)
      for (const Monomial& b : monomials_of_degree(*delta.source.algebra, n))
        if (!delta.apply(Element::term(delta.source.algebra, b, 1)).is_zero()) {
          detail = "nonzero at " + delta.source.algebra->mono_str(b) +
                   " (x degree " + std::to_string(xdeg) + ")";
          return false;
        }
  }
  return true;
}

// 3: closed forms for Λx(4), k=2 through degree 12
bool criterion3(std::string& detail) {
  SullivanModel m = bctest::lambda_x(4);
  BraneEngine eng = engine(m, 2, 12);
  BraneOperation delta = brane_coproduct_dual(eng);
  BraneOperation mu = brane_product_dual(eng);
  AlgebraPtr sk = delta.source.algebra, t = delta.target.algebra;
  AlgebraMorphism iota = AlgebraMorphism::by_names(sk, t, {{"s2x", "ss1x"}});
  AlgebraMorphism rho = AlgebraMorphism::by_names(
      t, sk, {{"ss1x", "s2x"}, {"sx", ""}, {"s1x", ""}});
  for (int n = 0; n <= 12; ++n)
    for (const Monomial& b : monomials_of_degree(*sk, n)) {
      Element a = Element::term(sk, b, 1);
      if (delta.apply(a) != gen(t, "s1x") * iota.apply(a)) {
        detail = "coproduct at " + sk->mono_str(b);
        return false;
      }
    }
  Element sx = gen(t, "sx"), s1x = gen(t, "s1x");
  for (int n = 0; n <= 9; ++n)
    for (const Monomial& b : monomials_of_degree(*sk, n)) {
      Element beta = iota.apply(Element::term(sk, b, 1));
      bool ok = mu.apply(sx * beta) == -rho.apply(beta) &&
                mu.apply(beta).is_zero() && mu.apply(s1x * beta).is_zero() &&
                mu.apply(sx * s1x * beta).is_zero();
      if (!ok) {
        detail = "product at coset of " + sk->mono_str(b);
        return false;
      }
    }
  return true;
}

// 4: structural invariant suite on the six-fixture corpus
bool criterion4(std::string& detail) {
  struct Fixture {
    const char* name;
    SullivanModel model;
    int n_max;
  };
  std::vector<Fixture> corpus;
  corpus.push_back({"lambda_x4", bctest::lambda_x(4), 12});
  corpus.push_back({"lambda_x6", bctest::lambda_x(6), 16});
  corpus.push_back({"s4", bctest::sphere_model(4), 18});
  corpus.push_back({"s6", bctest::sphere_model(6), 26});
  corpus.push_back({"two_even", bctest::two_even_model(), 14});
  corpus.push_back({"product_spheres", bctest::product_spheres_model(), 14});
  for (const Fixture& f : corpus) {
    VerifyReport rep = run_verify_suite(f.model, 2, f.n_max);
    if (!rep.all_ok) {
      detail = std::string(f.name) + ": " + rep.first_failure;
      return false;
    }
    std::vector<int> base = cohomology_dims(f.model, f.n_max);
    if (cohomology_dims(build_disk_model(f.model, 2).model, f.n_max) != base ||
        cohomology_dims(build_path_model(f.model).model, f.n_max) != base) {
      detail = std::string(f.name) + ": resolution cohomology mismatch";
      return false;
    }
  }
  return true;
}

// 5: degree shifts for Λx(2n)
bool criterion5(std::string& detail) {
  struct Case {
    int k, n;
  };
  for (Case c : {Case{2, 2}, Case{2, 3}, Case{4, 3}}) {
    SullivanModel m = bctest::lambda_x(2 * c.n);
    BraneEngine eng = engine(m, c.k, 14);
    if (brane_coproduct_dual(eng).degree_shift != 2 * c.n - c.k + 1 ||
        brane_product_dual(eng).degree_shift != 1 - 2 * c.n) {
      detail = "(k,n)=(" + std::to_string(c.k) + "," + std::to_string(c.n) + ")";
      return false;
    }
  }
  return true;
}

// 6: solver and explicit sections agree on cohomology classes to degree 12
bool criterion6(std::string& detail) {
  SullivanModel m = bctest::lambda_x(4);
  BraneEngine ex = engine(m, 2, 12, SectionMode::Explicit);
  BraneEngine so = engine(m, 2, 12, SectionMode::Solver);
  struct Pair {
    BraneOperation a, b;
  };
  std::vector<Pair> ops;
  ops.push_back({brane_coproduct_dual(ex), brane_coproduct_dual(so)});
  ops.push_back({brane_product_dual(ex), brane_product_dual(so)});
  for (const Pair& p : ops) {
    AlgebraMorphism src_iso =
        AlgebraMorphism::by_names(p.a.source.algebra, p.b.source.algebra);
    AlgebraMorphism tgt_iso =
        AlgebraMorphism::by_names(p.a.target.algebra, p.b.target.algebra);
    for (int n = 0; n <= 12; ++n)
      for (const Monomial& b : monomials_of_degree(*p.a.source.algebra, n)) {
        Element e = Element::term(p.a.source.algebra, b, 1);
        if (!is_cocycle(e, p.a.source)) continue;
        Element diff =
            tgt_iso.apply(p.a.apply(e)) - p.b.apply(src_iso.apply(e));
        if (!diff.is_zero() && !coboundary_preimage(diff, p.b.target)) {
          detail = p.a.kind + " at " + p.a.source.algebra->mono_str(b);
          return false;
        }
      }
  }
  return true;
}

// 7: two even generators, composite nonzero, both section routes agree
bool criterion7(std::string& detail) {
  SullivanModel m = bctest::two_even_model();
  CompositeReport reports[2];
  int i = 0;
  for (SectionMode mode : {SectionMode::Auto, SectionMode::Solver}) {
    BraneEngine eng = engine(m, 2, 14, mode);
    reports[i++] = compose_operations(brane_coproduct_dual(eng),
                                      brane_product_dual(eng), 14)
                       .report;
  }
  if (!reports[0].nontrivial || !reports[1].nontrivial) {
    detail = "composite trivial in some mode";
    return false;
  }
  if (reports[0].witnesses.size() != reports[1].witnesses.size()) {
    detail = "witness sets differ";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "one even generator: composite sends sx to -s^{k-1}x", criterion1);
  gate.run(2, "odd-generator sphere models: coproduct dual vanishes", criterion2);
  gate.run(3, "closed operation formulas through degree 12", criterion3);
  gate.run(4, "structural invariant suite on the fixture corpus", criterion4);
  gate.run(5, "degree shifts 2n-k+1 and 1-2n", criterion5);
  gate.run(6, "solver/explicit sections agree on classes", criterion6);
  gate.run(7, "two even generators: nontrivial composite, both routes", criterion7);
  if (gate.failures) {
    std::cout << gate.failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 7 criteria passed\n";
  return 0;
}
