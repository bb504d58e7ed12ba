// Acceptance gates. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bernalg/cli.hpp"
#include "bernalg/dsl.hpp"
#include "bernalg/theorem_lab.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace bernalg;
using Q = Rational;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects failure messages for one criterion.
class Gate {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

PeirceData<Q> peirce_of(const Presentation<Q>& p) {
  const auto b = p.baric();
  return peirce(b, find_idempotent(b));
}

Subspace<Q> random_subspace_of(const Subspace<Q>& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(0, s.dim());
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<Vec<Q>> vs;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    Vec<Q> c(s.dim());
    for (auto& x : c) x = coin(rng) == 0 ? Q(0) : ScalarTraits<Q>::random(rng);
    vs.push_back(s.from_coordinates(c));
  }
  return Subspace<Q>::span(vs, s.ambient_dim());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string cli_output(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  run_cli(args, in, out, err);
  return out.str();
}

Vec<Q> u(std::size_t n, std::size_t k) { return unit_vector<Q>(n, k); }

// --- criteria ---------------------------------------------------------------

void criterion1(Gate& g) {
  std::vector<Presentation<Q>> algebras;
  for (std::size_t n = 2; n <= 8; ++n) {
    algebras.push_back(make_family<Q>(FamilyKind::bdown, n));
    algebras.push_back(make_family<Q>(FamilyKind::bup, n));
  }
  algebras.push_back(make_family<Q>(FamilyKind::jordan3, 0));
  for (const auto& p : algebras) {
    const std::string name = p.algebra.name();
    const auto& a = p.algebra;
    const auto b = p.baric();
    g.require(check_identity(a, IdentityId::bernstein, b.weight_span()).holds(), name + ": Bernstein identity");
    const auto pd = peirce_of(p);
    g.require(check_peirce_relations(a, pd).holds(), name + ": Peirce relations");
    const auto plenary = power_chain(a, pd.N, PowerKind::plenary);
    g.require(plenary.nil_index && *plenary.nil_index <= 3, name + ": N^(3) = 0");
    for (const auto& t : power_chain(a, pd.N, PowerKind::principal).terms)
      g.require(is_ideal(a, t), name + ": principal power is an ideal");
    const auto u_plus_u2 = subspace_sum(pd.U, subspace_product(a, pd.U, pd.U));
    g.require(subspace_product(a, pd.annU, u_plus_u2).is_zero(), name + ": annU (U + U^2) = 0");
    g.require(subspace_leq(subspace_product(a, pd.V, pd.V), pd.annU), name + ": V^2 <= annU");
  }
}

void criterion2(Gate& g) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const auto ss = make_family<Q>(FamilyKind::squareshift, n).algebra;
    g.require(generated_subalgebra(ss, {u(n, n - 1)}).is_full(), "squareshift " + tag + ": <e_n> = N");
    g.require(power_chain(ss, Subspace<Q>::full(n), PowerKind::principal).nil_index == n + 1,
              "squareshift " + tag + ": principal index n+1");
    if (n >= 3) {
      for (const auto& a : {ss, make_family<Q>(FamilyKind::zhevlakov, n).algebra}) {
        const auto c = check_identity(a, IdentityId::square_square_zero);
        g.require(!c.holds(), a.name() + ": (x^2)^2 = 0 fails");
        if (!c.holds())
          g.require(!is_zero_vector(evaluate_witness(a, IdentityId::square_square_zero, *c.witness)),
                    a.name() + ": witness reproduces");
      }
    }
    const auto c = classify(make_family<Q>(FamilyKind::bdown, n).baric());
    g.require(c.is_bernstein(), "bdown " + tag + ": Bernstein");
    if (n >= 3) g.require(!c.is_jordan() && c.jordan->witness, "bdown " + tag + ": not Jordan, with witness");
    g.require(!c.is_nuclear() && c.nuclear->witness, "bdown " + tag + ": not nuclear, with witness");
  }
}

void criterion3(Gate& g, const std::vector<Presentation<Q>>& bernstein) {
  std::size_t jordan = 0;
  for (const auto& p : bernstein) {
    const auto c = classify(p.baric());
    const bool a = c.jordan_identity->holds();
    const bool cc = c.cube_weight->holds();
    const bool d = c.jordan->holds();
    g.require(a == cc && cc == d, p.algebra.name() + ": conditions (a), (c), (d) agree");
    jordan += d ? 1 : 0;
  }
  g.require(jordan > 0 && jordan < bernstein.size(), "corpus contains both Jordan and non-Jordan algebras");
}

void criterion4(Gate& g, const std::vector<Presentation<Q>>& bernstein) {
  auto all = corpus::nilpotent();
  for (const auto& p : bernstein) {
    all.push_back(p);
    all.push_back(corpus::barideal_algebra(p));
  }
  std::size_t nil3 = 0;
  for (const auto& p : all) {
    const auto& a = p.algebra;
    if (!check_identity(a, IdentityId::cube_zero).holds()) continue;
    ++nil3;
    g.require(check_identity(a, IdentityId::jacobi).holds(), a.name() + ": Jacobi");
    g.require(check_identity(a, IdentityId::jordan).holds(), a.name() + ": Jordan");
    const auto plenary = power_chain(a, Subspace<Q>::full(a.dim()), PowerKind::plenary);
    g.require(plenary.nil_index && *plenary.nil_index <= 4, a.name() + ": N^(4) = 0");
  }
  g.require(nil3 >= 3, "at least three nil-of-index-3 algebras");
}

void criterion5(Gate& g, const std::vector<Presentation<Q>>& bernstein) {
  for (const auto& p : bernstein) {
    const auto& a = p.algebra;
    const auto pd = peirce_of(p);
    const bool n_nil = power_chain(a, pd.N, PowerKind::principal).nil_index.has_value();
    const bool m_nil = mult_closure_nilpotent(a, pd).nilpotent;
    const bool gfp0 = greatest_fixed_subspace(a, pd).gfp.is_zero();
    g.require(n_nil == m_nil && m_nil == gfp0, a.name() + ": three conditions agree");
    const std::string name = a.name();
    if (name.rfind("bdown", 0) == 0 || name.rfind("bup", 0) == 0)
      if (name.find('_') == std::string::npos) g.require(n_nil && m_nil && gfp0, name + ": all three hold");
  }
}

template <std::uint32_t P>
void ni_vi_exhaustive(Gate& g, const Presentation<bernalg::Fp<P>>& pr) {
  using F = bernalg::Fp<P>;
  const auto b = pr.baric();
  const auto p = peirce(b, find_idempotent(b));
  if (p.N.dim() > 3) return;
  const oracle::Table<F> t(pr.algebra);
  const auto n_set = oracle::set_of<P>(p.N);
  const auto v_set = oracle::set_of<P>(p.V);
  const auto ann = oracle::set_of<P>(p.annU);
  for (const auto& s : oracle::subspaces_within<P>(n_set, pr.algebra.dim())) {
    const bool ni = oracle::product_set<P>(t, n_set, s) == s;
    const bool vi = oracle::product_set<P>(t, v_set, s) == s;
    bool ok = ni == vi;
    if (ni) ok = ok && oracle::set_leq(s, ann) && oracle::is_ideal_set<P>(t, s);
    const auto r = lemma51_check(pr.algebra, p, Subspace<F>::span(oracle::points<P>(s), pr.algebra.dim()));
    g.require(ok && r.conclusion_holds && r.NI_eq_I == ni && r.VI_eq_I == vi,
              pr.algebra.name() + " over F_" + std::to_string(P) + ": NI = I versus VI = I on an enumerated subspace");
  }
}

void criterion6(Gate& g, const std::vector<Presentation<Q>>& bernstein) {
  using F5 = bernalg::Fp<5>;
  using F7 = bernalg::Fp<7>;
  for (std::size_t n = 1; n <= 2; ++n) {
    ni_vi_exhaustive<5>(g, make_family<F5>(FamilyKind::bdown, n));
    ni_vi_exhaustive<5>(g, make_family<F5>(FamilyKind::bup, n));
  }
  ni_vi_exhaustive<5>(g, make_family<F5>(FamilyKind::jordan3, 0));
  ni_vi_exhaustive<7>(g, make_family<F7>(FamilyKind::jordan3, 0));
  ni_vi_exhaustive<5>(g, corpus::uvu<F5>());
  ni_vi_exhaustive<7>(g, corpus::uvu<F7>());
  ni_vi_exhaustive<5>(g, corpus::ke<F5>());

  std::mt19937_64 rng(51);
  for (const auto& p : bernstein) {
    const auto pd = peirce_of(p);
    for (int t = 0; t < 100; ++t) {
      const auto r = lemma51_check(p.algebra, pd, random_subspace_of(pd.N, rng));
      g.require(r.conclusion_holds, p.algebra.name() + ": NI = I versus VI = I on a random subspace");
    }
    const auto gfp = greatest_fixed_subspace(p.algebra, pd).gfp;
    g.require(lemma51_check(p.algebra, pd, gfp).conclusion_holds, p.algebra.name() + ": NI = I versus VI = I on the gfp");
  }
}

void criterion7(Gate& g) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto ss = make_family<Q>(FamilyKind::squareshift, n).algebra;
    const auto c = thm43_decompose(ss, Subspace<Q>::full(n), {u(n, n - 1)});
    g.require(c.eq4_all_hold && c.eq4_checked_up_to == c.m, ss.name() + ": inclusions N^i <= F^i + N^(i+1)");
    g.require(c.n_equals_F_plus_Nm && c.N_nilpotent, ss.name() + ": N = F + N^m and N^m = 0");

    const auto bd = make_family<Q>(FamilyKind::bdown, n);
    const auto d = thm43_decompose(bd.algebra, bd.baric().barideal(), {u(n + 2, n + 1), u(n + 2, 1)});
    g.require(d.eq4_all_hold && d.eq4_checked_up_to == d.m, bd.algebra.name() + ": inclusions N^i <= F^i + N^(i+1)");
    g.require(d.n_equals_F_plus_Nm && d.N_nilpotent, bd.algebra.name() + ": N = F + N^m and N^m = 0");
  }
}

void criterion8(Gate& g, const std::vector<Presentation<Q>>& bernstein) {
  std::mt19937_64 rng(8);
  std::size_t agreeing_true = 0;
  for (const auto& p : bernstein) {
    const auto pd = peirce_of(p);
    for (int t = 0; t < 50; ++t) {
      Subspace<Q> s = random_subspace_of(pd.annU, rng);
      // every other sample is closed under V, so both sides can be true
      if (t % 2 == 1) s = generated_ideal(p.algebra, s.basis_vectors(), pd.annU);
      const auto r = submodule_ideal_check(p.algebra, pd, s);
      g.require(r.is_submodule == r.is_ideal_in_A, p.algebra.name() + ": submodule <=> ideal");
      agreeing_true += (r.is_submodule && !s.is_zero()) ? 1 : 0;
    }
  }
  g.require(agreeing_true > 0, "some nonzero submodules were sampled");
}

void criterion9(Gate& g, const std::vector<Presentation<Q>>& bernstein) {
  for (const auto& p : bernstein) {
    const auto b = p.baric();
    const auto q = quotient(b, peirce_of(p).annU);
    const auto c = classify(q);
    g.require(c.is_bernstein() && c.is_jordan() && c.jordan_identity->holds() && c.cube_weight->holds(),
              p.algebra.name() + ": A/annU is Bernstein-Jordan");
  }
}

void criterion10(Gate& g, double& dim12_seconds) {
  const std::filesystem::path dir(BERNALG_GOLDEN_DIR);
  std::vector<std::filesystem::path> files(std::filesystem::directory_iterator(dir), {});
  std::sort(files.begin(), files.end());
  std::size_t algebras = 0;
  for (const auto& f : files) {
    if (f.extension() == ".alg") {
      ++algebras;
      const auto parsed = parse_algebra(slurp(f));
      const std::string text = serialize_algebra(parsed);
      g.require(parse_algebra(text) == parsed && serialize_algebra(parse_algebra(text)) == text,
                f.filename().string() + ": round trip");
    }
  }
  g.require(algebras >= 5, "golden algebra files present");

  for (const char* file : {"bdown3.alg", "uvu.alg", "mocklie5.alg", "corrupt_peirce.alg"}) {
    const std::string path = (dir / file).string();
    for (const char* cmd : {"check", "classify"}) {
      const auto first = cli_output({"--json", "--seed-rng", "7", cmd, path});
      const auto second = cli_output({"--json", "--seed-rng", "7", cmd, path});
      g.require(!first.empty() && first == second, std::string(cmd) + " " + file + ": byte-identical report");
    }
  }
  g.require(cli_output({"--json", "classify", (dir / "bdown3.alg").string()}) == slurp(dir / "classify_bdown3.json"),
            "classify report matches the pinned golden");

  const auto big = make_family<Q>(FamilyKind::bdown, 10);
  const auto t0 = Clock::now();
  const auto c = check_identity(big.algebra, IdentityId::bernstein, std::span<const Q>(*big.weight));
  dim12_seconds = seconds_since(t0);
  g.require(big.algebra.dim() == 12 && c.holds(), "bdown10 (dimension 12) is Bernstein");
  g.require(dim12_seconds < 10.0, "dimension-12 Bernstein check under 10 s");
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const auto bernstein = corpus::bernstein();
  double dim12 = 0;
  double c1_seconds = 0;

  struct Criterion {
    int id;
    std::string title;
    std::function<void(Gate&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Bernstein corpus soundness", [&](Gate& g) {
         const auto t0 = Clock::now();
         criterion1(g);
         c1_seconds = seconds_since(t0);
       }},
      {2, "worked examples: squareshift, zhevlakov, bdown", criterion2},
      {3, "Jordan conditions (a), (c), (d) agree", [&](Gate& g) { criterion3(g, bernstein); }},
      {4, "nil index 3 implies Jacobi, Jordan and N^(4) = 0", [&](Gate& g) { criterion4(g, bernstein); }},
      {5, "N nilpotent <=> M(V) nilpotent <=> gfp = 0", [&](Gate& g) { criterion5(g, bernstein); }},
      {6, "NI = I versus VI = I, exhaustive and random", [&](Gate& g) { criterion6(g, bernstein); }},
      {7, "decomposition certificates", criterion7},
      {8, "submodules of annU are ideals", [&](Gate& g) { criterion8(g, bernstein); }},
      {9, "A/annU is Jordan", [&](Gate& g) { criterion9(g, bernstein); }},
      {10, "round trip, determinism, dimension-12 timing", [&](Gate& g) { criterion10(g, dim12); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Gate g;
    const auto t0 = Clock::now();
    try {
      c.run(g);
    } catch (const std::exception& e) {
      g.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    const bool ok = g.failed() == 0;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << g.checks()
              << " checks, " << g.failed() << " failed, " << std::fixed << std::setprecision(2) << secs << " s)";
    if (c.id == 1) std::cout << " [suite " << c1_seconds << " s, limit 60 s]";
    if (c.id == 10) std::cout << " [dimension-12 check " << dim12 << " s, limit 10 s]";
    std::cout << "\n";
    for (const auto& f : g.failures()) std::cout << "    " << f << "\n";
  }
  const double total = seconds_since(start);
  std::cout << "total " << std::fixed << std::setprecision(2) << total << " s\n";
  return failed == 0 ? 0 : 1;
}
