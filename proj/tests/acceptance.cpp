// Acceptance suite: one pass/fail line per criterion, exit code 0 only if
// every criterion holds.  All thresholds are exact integer identities; the
// random criteria use fixed seeds.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "polyflag/campaign.hpp"
#include "polyflag/exceptions.hpp"
#include "polyflag/flags.hpp"
#include "polyflag/hanner.hpp"
#include "test_util.hpp"

using namespace polyflag;
namespace tu = polyflag::testutil;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds,
            const std::string& note = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion
              << ": " << what << " (" << seconds << " s)"
              << (note.empty() ? "" : " -- " + note) << std::endl;
    if (!pass) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& what, Fn&& body) {
    auto t0 = Clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        pass = false;
        note = e.what();
    }
    auto t1 = Clock::now();
    report(number, what, pass, std::chrono::duration<double>(t1 - t0).count(), note);
}

Polytope path4_clique() {
    Graph G;
    G.n = 4;
    G.add_edge(0, 1);
    G.add_edge(1, 2);
    G.add_edge(2, 3);
    return clique_polytope(G);
}

bool hanner_or_false(const Polytope& P) {
    try {
        return is_hanner(P);
    } catch (const GraphUndefinedError&) {
        return false;
    }
}

struct FuzzInstance {
    Polytope polytope;
    FlagsBySign by_sign;
};

// Criterion 3/4 corpus: shared between the two checks.
std::vector<FuzzInstance> fuzz_corpus() {
    std::vector<FuzzInstance> out;
    auto add = [&](int d, int n, unsigned long long seed) {
        Polytope P = random_unconditional(d, n, seed);
        FlagsBySign by = count_flags_by_sign(P);
        out.push_back({std::move(P), std::move(by)});
    };
    for (int i = 0; i < 200; ++i) add(3, 1 + i % 2, 20260000ULL + i);
    for (int i = 0; i < 50; ++i) add(4, 1 + i % 2, 20264000ULL + i);
    return out;
}

// Criterion 5/6 corpus.
std::vector<Polytope> lemma_corpus() {
    std::vector<Polytope> out;
    for (int d = 1; d <= 4; ++d)
        for (auto& P : enumerate_hanner_types(d)) out.push_back(std::move(P));
    out.push_back(path4_clique());
    for (int i = 0; i < 25; ++i)
        out.push_back(random_unconditional(3, 1 + i % 2, 20265000ULL + i));
    return out;
}

}  // namespace

int main() {
    std::cout << "== acceptance suite ==" << std::endl;

    criterion(1, "appendix reproduction: dual-facet counts 44/24, 8*44+4*24 = 448",
              [&](std::string& note) {
                  auto rep = run_appendix();
                  std::ostringstream os;
                  os << "weighted=" << rep.weighted_total
                     << " direct=" << rep.direct_total;
                  note = os.str();
                  if (!rep.pass || rep.rows.size() != 12) return false;
                  for (const auto& row : rep.rows)
                      if (row.dual_facet_flags != row.expected ||
                          row.flags_through_vertex != row.expected)
                          return false;
                  return rep.weighted_total == 448 && rep.direct_total == 448;
              });

    criterion(2, "hanner types d=1..4 have exactly 2^d d! flags and 3^d faces",
              [&](std::string& note) {
                  const std::size_t expected_types[] = {0, 1, 2, 4, 10};
                  long long types = 0;
                  for (int d = 1; d <= 4; ++d) {
                      auto hanners = enumerate_hanner_types(d);
                      if (hanners.size() != expected_types[d]) return false;
                      for (const auto& P : hanners) {
                          ++types;
                          if (count_flags(P) != flag_bound(d)) return false;
                          auto f = P.lattice().f_vector();
                          long long nonempty = 0;
                          for (std::size_t i = 1; i < f.size(); ++i) nonempty += f[i];
                          long long three_d = 1;
                          for (int i = 0; i < d; ++i) three_d *= 3;
                          if (nonempty != three_d) return false;
                      }
                  }
                  note = std::to_string(types) + " types";
                  return types == 17;
              });

    auto corpus = fuzz_corpus();

    criterion(3, "200 random d=3 and 50 d=4 instances: flags >= 2^d d!, equality iff hanner",
              [&](std::string& note) {
                  long long minimizers = 0, strict = 0;
                  for (const auto& inst : corpus) {
                      const int d = inst.polytope.ambient_dim();
                      const long long bound = flag_bound(d);
                      if (inst.by_sign.total < bound) return false;
                      const bool minimal = inst.by_sign.total == bound;
                      if (hanner_or_false(inst.polytope) != minimal) return false;
                      (minimal ? minimizers : strict) += 1;
                  }
                  note = std::to_string(corpus.size()) + " instances, " +
                         std::to_string(minimizers) + " minimizers, " +
                         std::to_string(strict) + " strict";
                  return corpus.size() == 250;
              });

    criterion(4, "per-orthant signed flag counts >= d! and partition the total",
              [&](std::string& note) {
                  long long orthants = 0;
                  for (const auto& inst : corpus) {
                      const int d = inst.polytope.ambient_dim();
                      long long dfact = 1;
                      for (int i = 2; i <= d; ++i) dfact *= i;
                      if (static_cast<int>(inst.by_sign.per_orthant.size()) != (1 << d))
                          return false;
                      long long sum = 0;
                      for (const auto& [cone, n] : inst.by_sign.per_orthant) {
                          if (n < dfact) return false;
                          sum += n;
                          ++orthants;
                      }
                      if (sum != inst.by_sign.total) return false;
                  }
                  note = std::to_string(orthants) + " orthant buckets";
                  return true;
              });

    auto lemmas = lemma_corpus();

    criterion(5, "injection family: injective, disjoint images, factorial bounds",
              [&](std::string& note) {
                  long long cones = 0;
                  for (const auto& P : lemmas) {
                      auto rep = verify_injection_family(P);
                      cones += static_cast<long long>(rep.rows.size());
                  }
                  note = std::to_string(lemmas.size()) + " polytopes, " +
                         std::to_string(cones) + " cones";
                  return lemmas.size() == 17 + 1 + 25;
              });

    criterion(6, "flip lemmas: ladder, unique projection edge, unique cut facet",
              [&](std::string& note) {
                  long long flags_checked = 0;
                  for (const auto& P : lemmas) {
                      const int d = P.dim();
                      ProjectionCache cache(P);
                      for (const auto& F : enumerate_flags(P)) {
                          for (int i = 0; i <= d - 1; ++i)
                              for (int j = i; j <= d - 1; ++j)
                                  if (!check_ladder(P, F, i, j)) return false;
                          unique_projection_edge(P, F, cache);
                          unique_facet(P, F);
                          ++flags_checked;
                      }
                  }
                  note = std::to_string(flags_checked) + " flags";
                  return flags_checked > 0;
              });

    criterion(7, "graph laws: complement/induced/union; minimizers recovered from graphs",
              [&](std::string& note) {
                  long long laws = 0;
                  std::vector<std::vector<Polytope>> by_dim(5);
                  for (int d = 1; d <= 4; ++d) by_dim[d] = enumerate_hanner_types(d);
                  for (int d = 1; d <= 4; ++d)
                      for (const auto& P : by_dim[d]) {
                          Graph G = polytope_graph(P);
                          if (!(polytope_graph(polar(P)) == G.complement()))
                              return false;
                          ++laws;
                          for (int mask = 1; mask < (1 << d); ++mask) {
                              std::vector<int> J;
                              for (int i = 0; i < d; ++i)
                                  if (mask >> i & 1) J.push_back(i);
                              if (static_cast<int>(J.size()) < 2 ||
                                  static_cast<int>(J.size()) == d)
                                  continue;
                              if (!(polytope_graph(coordinate_section(P, J)) ==
                                    G.induced(J)))
                                  return false;
                              ++laws;
                          }
                      }
                  // disjoint-union law for orthogonal joins of the types
                  for (int da = 1; da <= 3; ++da)
                      for (int db = 1; da + db <= 4; ++db)
                          for (const auto& A : by_dim[da])
                              for (const auto& B : by_dim[db]) {
                                  std::vector<RatVector> pts;
                                  for (const auto& v : A.vertices()) {
                                      RatVector x = v;
                                      x.insert(x.end(), db, Rational(0));
                                      pts.push_back(std::move(x));
                                  }
                                  for (const auto& v : B.vertices()) {
                                      RatVector x(da, Rational(0));
                                      x.insert(x.end(), v.begin(), v.end());
                                      pts.push_back(std::move(x));
                                  }
                                  Polytope J = hull(pts);
                                  Graph GJ = polytope_graph(J);
                                  Graph GU = polytope_graph(A).disjoint_union(
                                      polytope_graph(B));
                                  if (!(GJ == GU)) return false;
                                  ++laws;
                              }
                  // minimizers are clique polytopes of their graphs with
                  // vertices in {-1,0,1}^d
                  for (int d = 1; d <= 4; ++d)
                      for (const auto& P : by_dim[d]) {
                          if (count_flags(P) != flag_bound(d)) return false;
                          if (!(clique_polytope(polytope_graph(P)) == P)) return false;
                          for (const auto& v : P.vertices())
                              for (const auto& x : v)
                                  if (x != 0 && x != 1 && x != -1) return false;
                          ++laws;
                      }
                  note = std::to_string(laws) + " law checks";
                  return true;
              });

    criterion(8, "flag signs well-defined: kept cones meet-closed, dim(sign) >= dim",
              [&](std::string& note) {
                  long long scans = 0;
                  for (const auto& P : lemmas) {
                      SignOracle oracle(P);
                      for (const auto& F : enumerate_flags(P)) {
                          auto res = flag_sign_scan(oracle, F);  // throws on violation
                          if (res.sign.dim() < P.dim()) return false;
                          ++scans;
                      }
                  }
                  note = std::to_string(scans) + " sign scans";
                  return scans > 0;
              });

    criterion(9, "oracle cross-checks: f-vectors and 1000 feasibility systems",
              [&](std::string& note) {
                  auto cube = hull(tu::cube_verts(3));
                  if (cube.lattice().f_vector() !=
                      std::vector<long long>{1, 8, 12, 6, 1})
                      return false;
                  auto cross = hull(tu::cross_verts(3));
                  if (cross.lattice().f_vector() !=
                      std::vector<long long>{1, 6, 12, 8, 1})
                      return false;
                  auto P = path4_clique();
                  auto f = P.lattice().f_vector();
                  auto g = polar(P).lattice().f_vector();
                  std::reverse(g.begin(), g.end());
                  if (f != g || f[1] != 12 || f[5] != 12 || f[0] != 1 || f[6] != 1)
                      return false;
                  long long alt = 0;
                  for (int i = 0; i <= 4; ++i) alt += (i % 2 ? -1 : 1) * f[i + 1];
                  if (alt != 1) return false;

                  tu::Rng rng(20269000ULL);
                  int agree = 0;
                  for (int trial = 0; trial < 1000; ++trial) {
                      LinearSystem sys;
                      sys.dim = rng.uniform(2, 3);
                      auto row = [&] {
                          RatVector a(sys.dim);
                          bool nz = false;
                          for (auto& x : a) {
                              x = rng.uniform(-3, 3);
                              nz = nz || x != 0;
                          }
                          if (!nz) a[0] = 1;
                          return a;
                      };
                      int n_eq = rng.uniform(0, 1), n_ge = rng.uniform(1, 4),
                          n_gt = rng.uniform(0, 3);
                      for (int i = 0; i < n_eq; ++i) sys.add_eq(row(), rng.uniform(-2, 2));
                      for (int i = 0; i < n_ge; ++i) sys.add_ge(row(), rng.uniform(-4, 2));
                      for (int i = 0; i < n_gt; ++i) sys.add_gt(row(), rng.uniform(-4, 2));
                      for (int i = 0; i < sys.dim; ++i) {
                          sys.add_ge(unit_vec(sys.dim, i), -5);
                          sys.add_le(unit_vec(sys.dim, i), 5);
                      }
                      if (solve_feasibility(sys).feasible !=
                          tu::feasible_bruteforce(sys))
                          return false;
                      ++agree;
                  }
                  note = "f-vectors ok, " + std::to_string(agree) +
                         " feasibility systems agree";
                  return agree == 1000;
              });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: ")
              << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
    return failures == 0 ? 0 : 1;
}
