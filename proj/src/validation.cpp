#include "finfish/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <utility>

#include <json.hpp>

#include "finfish/bivariate.hpp"
#include "finfish/closed_forms.hpp"
#include "finfish/fish_grammar.hpp"
#include "finfish/fish_surface.hpp"
#include "finfish/power_series.hpp"
#include "finfish/series_catalog.hpp"
#include "finfish/ternary_trees.hpp"

namespace finfish {

namespace {

std::string str_of(const Int& v) { return v.str(); }
std::string str_of(const Rat& v) { return v.str(); }
std::string str_of(long long v) { return std::to_string(v); }
std::string str_of(const std::string& v) { return v; }

class Runner {
 public:
  Runner(std::string suite, std::string params) {
    rep_.suite = std::move(suite);
    rep_.params = std::move(params);
  }

  void count() { ++rep_.checked; }

  template <class E, class A>
  void equal(std::vector<long long> tuple, const E& expected, const A& actual,
             const std::string& note) {
    count();
    if (expected == actual) return;
    fail(std::move(tuple), str_of(expected), str_of(actual), note);
  }

  void require(std::vector<long long> tuple, bool cond, const std::string& note) {
    count();
    if (!cond) fail(std::move(tuple), "true", "false", note);
  }

  // Records the first failure only; later ones are still counted by the
  // callers' count() but do not overwrite the minimal counterexample.
  void fail(std::vector<long long> tuple, std::string expected, std::string actual,
            std::string note) {
    if (!rep_.pass) return;
    rep_.pass = false;
    rep_.failure =
        SuiteFailure{std::move(tuple), std::move(expected), std::move(actual), std::move(note)};
  }

  SuiteReport& report() { return rep_; }

 private:
  SuiteReport rep_;
};

template <class Body>
SuiteReport run_suite(const std::string& suite, const std::string& params, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Runner r(suite, params);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail({}, "completion", e.what(), "suite aborted by exception");
  }
  r.report().seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r.report();
}

std::vector<long long> key_tuple(const StatKey& k) {
  return {k[0], k[1], k[2], k[3], k[4]};
}

}  // namespace

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["params"] = params;
  j["pass"] = pass;
  j["checked"] = checked;
  if (failure) {
    j["failure"] = {{"tuple", failure->tuple},
                    {"expected", failure->expected},
                    {"actual", failure->actual},
                    {"note", failure->note}};
  }
  j["seconds"] = seconds;
  return j.dump();
}

StatKey AlignmentMap::fish_key(const StatKey& tree_key) const {
  int parity_a = parity_a_is_non_root_even ? tree_key[2] : tree_key[3];
  int parity_b = parity_a_is_non_root_even ? tree_key[3] : tree_key[2];
  // parityA marks lsize-1 and parityB marks rsize-1; fish key order is
  // (size, tails, rsize, lsize, fin)
  return {tree_key[0] + 1, tree_key[1] + 1, parity_b + 1, parity_a + 1, tree_key[4] + 1};
}

std::string AlignmentMap::name() const {
  return parity_a_is_non_root_even ? "A=nonRootEven" : "A=odd";
}

SuiteReport check_formulas(int max_n) {
  return run_suite("formulas", "maxN=" + std::to_string(max_n), [&](Runner& r) {
    std::map<int, Int> by_size;
    for_each_term(max_n + 1,
                  [&](const TermPtr&, const FishComplex& f) { ++by_size[stats(f).size]; });
    for (int n = 1; n <= max_n; ++n) {
      auto it = by_size.find(n + 1);
      r.equal({n}, fish_count(n), it == by_size.end() ? Int(0) : it->second,
              "fish of size n+1 vs closed form");
    }

    JointTable jt = joint_distribution(max_n + 1);
    std::map<std::pair<int, int>, Int> counts, tails;
    for (const auto& [k, c] : jt) {
      counts[{k[3], k[2]}] += c;  // (lsize, rsize)
      tails[{k[3], k[2]}] += Int(k[1]) * c;
    }
    for (int i = 1; i <= max_n; ++i)
      for (int j = 1; i + j <= max_n + 1; ++j) {
        auto key = std::make_pair(i, j);
        auto ic = counts.find(key);
        r.equal({i, j}, fish_count_ij(i, j), ic == counts.end() ? Int(0) : ic->second,
                "(lsize, rsize) count vs closed form");
        auto it = tails.find(key);
        r.equal({i, j}, marked_tail_count(i, j), it == tails.end() ? Int(0) : it->second,
                "tail-weighted (lsize, rsize) count vs closed form");
      }
  });
}

SuiteReport check_series_vs_enum(int order) {
  return run_suite("series", "order=" + std::to_string(order), [&](Runner& r) {
    MSeries P = build_P(order);
    JointTable jt = joint_distribution(order + 1);
    std::map<StatKey, std::pair<Rat, Int>> merged;
    for (int k = 0; k <= order; ++k)
      for (const auto& [e, c] : P.coeff(k))
        merged[{k + 1, e[0] + 1, e[1] + 1, e[2] + 1, e[3] + 1}].first = c;
    for (const auto& [k, c] : jt) merged[k].second = c;
    for (const auto& [k, pr] : merged)
      r.equal(key_tuple(k), Rat(pr.second), pr.first, "series coefficient vs grammar count");
  });
}

SuiteReport check_oracle(int max_area) {
  return run_suite("oracle", "maxArea=" + std::to_string(max_area), [&](Runner& r) {
    std::set<std::string> grammar_codes;
    std::map<int, int> nonpoly, nonplanar;
    std::set<std::string> oracle_codes = enumerate_by_area(max_area);
    for (const std::string& code : oracle_codes) {
      FishComplex f = parse_canonical_code(code);
      Classification cls = classify(f);
      int area = f.cell_count();
      if (!cls.polyomino) ++nonpoly[area];
      if (!cls.planar) ++nonplanar[area];

      TermPtr t = decompose(f);
      r.equal({area}, code, canonical_code(build(*t)),
              "build(decompose(fish)) preserves the canonical code");
    }

    for_each_term(max_area + 1, [&](const TermPtr& t, const FishComplex& f) {
      if (f.cell_count() <= max_area) grammar_codes.insert(canonical_code(f));
      TermPtr back = decompose(f);
      r.equal({stats(f).size}, term_to_string(*t), term_to_string(*back),
              "decompose(build(term)) returns the term");
    });

    r.count();
    std::vector<std::string> sym;
    std::set_symmetric_difference(oracle_codes.begin(), oracle_codes.end(), grammar_codes.begin(),
                                  grammar_codes.end(), std::back_inserter(sym));
    if (!sym.empty()) {
      bool in_oracle = oracle_codes.count(sym.front()) > 0;
      r.fail({}, in_oracle ? sym.front() : std::string("(absent)"),
             in_oracle ? std::string("(absent)") : sym.front(),
             std::string("canonical-code sets differ; smallest code is in the ") +
                 (in_oracle ? "oracle" : "grammar") + " set only");
    }

    for (int a = 1; a <= std::min(max_area, 3); ++a)
      r.equal({a}, 0LL, static_cast<long long>(nonpoly[a]), "non-polyomino census");
    if (max_area >= 4) r.equal({4}, 2LL, static_cast<long long>(nonpoly[4]), "non-polyomino census");
    for (int a = 1; a <= std::min(max_area, 4); ++a)
      r.equal({a}, 0LL, static_cast<long long>(nonplanar[a]), "non-planar census");
    if (max_area >= 5) r.equal({5}, 1LL, static_cast<long long>(nonplanar[5]), "non-planar census");
  });
}

SuiteReport check_fincore(int max_size) {
  return run_suite("fincore", "maxSize=" + std::to_string(max_size), [&](Runner& r) {
    JointTable fish = joint_distribution(max_size);
    JointTable trees = joint_distribution_trees(max_size - 1);
    std::map<std::array<int, 2>, std::pair<Int, Int>> merged;
    for (const auto& [k, c] : fish) merged[{k[0], k[4]}].first += c;
    for (const auto& [k, c] : trees) merged[{k[0] + 1, k[4] + 1}].second += c;
    std::map<int, Int> totals;
    for (const auto& [sf, pr] : merged) {
      r.equal({sf[0], sf[1]}, pr.first, pr.second, "fish (size, fin) vs tree (nodes+1, core+1)");
      totals[sf[0]] += pr.first;
    }
    for (int s = 2; s <= max_size; ++s)
      r.equal({s}, fish_count(s - 1), totals[s], "per-size total vs closed form");
  });
}

SuiteReport check_conjecture(int max_size) {
  return run_suite("conjecture", "maxSize=" + std::to_string(max_size), [&](Runner& r) {
    JointTable fish = joint_distribution(max_size);
    JointTable trees = joint_distribution_trees(max_size - 1);
    const AlignmentMap maps[2] = {{true}, {false}};
    std::optional<SuiteFailure> firsts[2];
    for (int m = 0; m < 2; ++m) {
      std::map<StatKey, std::pair<Int, Int>> merged;
      for (const auto& [k, c] : fish) merged[k].first = c;
      for (const auto& [k, c] : trees) merged[maps[m].fish_key(k)].second = c;
      for (const auto& [k, pr] : merged) {
        r.count();
        if (pr.first != pr.second && !firsts[m])
          firsts[m] = SuiteFailure{key_tuple(k), pr.first.str(), pr.second.str(),
                                   "joint mismatch under orientation " + maps[m].name()};
      }
    }
    std::string matched;
    for (int m = 0; m < 2; ++m)
      if (!firsts[m]) matched += (matched.empty() ? "" : "+") + maps[m].name();
    r.report().params += " orientation=" + (matched.empty() ? std::string("none") : matched);
    if (matched.empty())
      r.fail(firsts[0]->tuple, firsts[0]->expected, firsts[0]->actual,
             firsts[0]->note + "; the other orientation fails too");
  });
}

SuiteReport check_identities(int order) {
  return run_suite("identities", "order=" + std::to_string(order), [&](Runner& r) {
    auto eq = [&r](const MSeries& lhs, const MSeries& rhs, const std::string& note) {
      r.count();
      if (auto d = MSeries::first_difference(lhs, rhs))
        r.fail({d->t, d->e[0], d->e[1], d->e[2], d->e[3]}, d->lhs.str(), d->rhs.str(), note);
    };

    MSeries one = MSeries::constant(order, 1);
    MSeries t = MSeries::monomial(order, 1, 1);
    MSeries y = MSeries::monomial(order, 1, 0, {1, 0, 0, 0});
    MSeries a = MSeries::monomial(order, 1, 0, {0, 1, 0, 0});
    MSeries b = MSeries::monomial(order, 1, 0, {0, 0, 1, 0});

    MSeries P = build_P(order);
    Parametrization par = build_parametrization(order);
    UVPair uv = build_U_V(order);
    MarkedSeries m = build_marked(order);
    PuParametrization pp = build_Pu_param(order);

    eq(par.P1, P.at_u1(), "tail parametrization of P(1) = fin equation at u=1");
    eq(pp.Pu, P, "refined parametrization of P(u) = fin equation");
    eq(par.B, m.greater, "B = P(U)");

    const MSeries& PU = m.greater;
    const MSeries& U = uv.U;
    MSeries abPU2 = a * b * PU * PU;
    MSeries bridge = y * a * b * PU.pow(3) * (one + a * PU) * (one + b * PU) *
                     ((one - abPU2) * (one - abPU2)).inverse();
    eq(PU, t * U * U * (one + a * PU) * (one + b * PU), "P(U) = tU^2(1+aP(U))(1+bP(U))");
    eq(U, one + y * abPU2 * (one - abPU2).inverse(), "U = 1 + y ab P(U)^2/(1 - ab P(U)^2)");
    eq(PU - par.P1, bridge, "P(U) - P(1) = y ab P(U)^3(1+aP(U))(1+bP(U))/(1-ab P(U)^2)^2");
    eq(par.P1, PU - bridge, "closed form of P(1) in P(U)");

    MSeries theta = par.P1.theta_t();
    eq(par.P1 + m.minus + m.minus + m.greater + m.less, theta + theta,
       "P(1) + 2P^- + P^> + P^< = twice the size-weighted P(1)");
    eq(par.P1 + m.less, m.greater, "P(1) + P^< = P^>");
    eq(m.minus + m.greater, theta, "P^- + P^> = size-weighted P(1)");

    eq(uv.V, y * t * a * b * delta(P).subst_u(uv.U), "V = ytab (Delta P)(U)");
    eq(y * t * a * b * m.less, uv.V * uv.V, "ytab P^< = V^2");
    eq(m.greater, P.subst_u(uv.U), "P^> = P(U) by direct substitution");

    RSPair rs = build_RS(order);
    MSeries by1 = par.B.specialize(true, false, false, false);
    MSeries p1y1 = par.P1.specialize(true, false, false, false);
    eq(by1, t * (one + rs.R) * (one + rs.S), "B = t(1+R)(1+S) at y=1");
    eq(p1y1, t * (one + rs.R) * (one + rs.S) * (one - rs.R * rs.S),
       "P(1) = t(1+R)(1+S)(1-RS) at y=1");

    // the same chain again at y=a=b=1, two orders higher, plus the tree side
    const int n2 = order + 2;
    Collapse c111{true, true, true};
    MSeries one2 = MSeries::constant(n2, 1);
    MSeries P111 = build_P(n2, c111);
    Parametrization par111 = build_parametrization(n2, c111);
    PuParametrization pp111 = build_Pu_param(n2, c111);
    eq(P111.at_u1(), par111.P1, "parametrization of P(1) at y=a=b=1");
    eq(pp111.Pu, P111, "parametrization of P(u) at y=a=b=1");

    TreeSeries ts = build_tree_series(n2, 7);
    eq(ts.T, (one2 - ts.B).inverse(), "T = 1/(1-B)");
    eq(ts.T - one2, ts.X * (one2 + ts.X * ts.X).inverse(), "T - 1 = X/(1+X^2)");
    eq(ts.B, ts.X * (one2 + ts.X + ts.X * ts.X).inverse(), "B = X/(1+X+X^2)");
    eq(ts.Bu, (ts.Tu - one2) * (one2 - ts.B), "B(u) = (T(u)-1)(1-B)");
    eq(ts.Tu.at_u1(), ts.T, "T(u) at u=1");
    eq(one2 + P111, ts.Tu * (one2 + ts.B) - ts.Tu * ts.Tu * ts.B,
       "1 + P(u) = T(u)(1+B) - T(u)^2 B at y=a=b=1");
    eq(one2 + P111, ts.tju(0), "1 + P(u) = T_0(u)");
    eq(par111.B, ts.B, "tail series at y=a=b=1 = t T^2");

    const int max_nodes = std::min(8, n2);
    for (int j = 0; j <= 3; ++j)
      for (int n = 1; n <= max_nodes; ++n) {
        std::vector<TernaryTree> all = trees_with_nodes(j, n);
        r.equal({j, n}, Rat(static_cast<long long>(all.size())), ts.tj(j).coeff(n, {0, 0, 0, 0}),
                "T_j coefficient vs brute-force count");
        std::map<int, std::pair<long long, Rat>> by_core;
        for (const auto& tr : all) ++by_core[tree_stats(tr, j).core].first;
        for (const auto& [e, c] : ts.tju(j).coeff(n)) by_core[e[3]].second = c;
        for (const auto& [core, pr] : by_core)
          r.equal({j, n, core}, Rat(pr.first), pr.second,
                  "T_j(u) (nodes, core) coefficient vs brute force");
      }

    const int marked_max = std::min(9, order + 1);
    std::map<int, Int> sum_tails, sum_branch, sum_rest;
    for_each_term(marked_max, [&](const TermPtr&, const FishComplex& f) {
      FishStats st = stats(f);
      sum_tails[st.size] += st.tails;
      sum_branch[st.size] += st.tails - 1;
      sum_rest[st.size] += st.size - st.tails;
    });
    MSeries g111 = m.greater.specialize(true, true, true, true);
    MSeries l111 = m.less.specialize(true, true, true, true);
    MSeries m111 = m.minus.specialize(true, true, true, true);
    for (int s = 2; s <= marked_max; ++s) {
      r.equal({s}, Rat(sum_tails[s]), g111.coeff(s - 1, {0, 0, 0, 0}),
              "sum of tails per size vs P^>");
      r.equal({s}, Rat(sum_branch[s]), l111.coeff(s - 1, {0, 0, 0, 0}),
              "sum of tails-1 per size vs P^<");
      r.equal({s}, Rat(sum_rest[s]), m111.coeff(s - 1, {0, 0, 0, 0}),
              "sum of size-tails per size vs P^-");
    }

    const int d = 8;
    BiSeries bone = BiSeries::constant(d, d, 1);
    BiSeries x1 = BiSeries::monomial(d, d, 1, 1, 0);
    BiSeries x2 = BiSeries::monomial(d, d, 1, 0, 1);
    BiSeries phi1 = (bone + x1) * (bone + x2).pow(2);
    BiSeries phi2 = (bone + x1).pow(2) * (bone + x2);
    BiSeries tailn = (bone + x1) * (bone + x2);
    BiSeries fishn = tailn * (bone - x1 * x2);
    for (int i = 2; i <= 4; ++i)
      for (int j = 2; j <= 4; ++j) {
        r.equal({i, j}, Rat(fish_count_ij(i, j)),
                bivariate_lagrange(phi1, phi2, fishn, i - 1, j - 1),
                "kernel extraction of the (i,j) fish count");
        r.equal({i, j}, Rat(marked_tail_count(i, j)),
                bivariate_lagrange(phi1, phi2, tailn, i - 1, j - 1),
                "kernel extraction of the (i,j) marked-tail count");
      }
    std::mt19937 gen(12345);
    std::uniform_int_distribution<int> small(0, 3), offset(-2, 2), ord(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
      BiSeries q1 = bone, q2 = bone, fr(d, d);
      for (int e1 = 0; e1 <= 1; ++e1)
        for (int e2 = 0; e2 <= 1; ++e2)
          if (e1 + e2 > 0) {
            q1.add_term(e1, e2, small(gen));
            q2.add_term(e1, e2, small(gen));
          }
      for (int e1 = 0; e1 <= 2; ++e1)
        for (int e2 = 0; e2 <= 2; ++e2) fr.add_term(e1, e2, offset(gen));
      int k1 = ord(gen), k2 = ord(gen);
      r.equal({trial}, direct_extract(q1, q2, fr, k1, k2), bivariate_lagrange(q1, q2, fr, k1, k2),
              "kernel vs direct composition on a random system");
    }
  });
}

AreaSummary area_report(int max_size) {
  AreaSummary out;
  out.report = run_suite("area", "maxSize=" + std::to_string(max_size), [&](Runner& r) {
    std::map<int, std::pair<Int, Int>> acc;  // size -> (fish, total area)
    for_each_term(max_size, [&](const TermPtr&, const FishComplex& f) {
      auto& [cnt, tot] = acc[stats(f).size];
      cnt += 1;
      tot += f.cell_count();
    });
    for (int s = 2; s <= max_size; ++s) {
      const auto& [cnt, tot] = acc[s];
      AreaRow row;
      row.size = s;
      row.fish = cnt;
      row.total_area = tot;
      row.mean_area = Rat(tot, cnt);
      row.mean_per_size = row.mean_area / Rat(s);
      if (!out.rows.empty()) {
        const AreaRow& prev = out.rows.back();
        row.slope = std::log(row.mean_area.convert_to<double>() /
                             prev.mean_area.convert_to<double>()) /
                    std::log(static_cast<double>(s) / static_cast<double>(s - 1));
        r.require({s}, row.mean_area > prev.mean_area, "mean area strictly increases");
        r.require({s}, row.mean_per_size > prev.mean_per_size,
                  "mean area per size strictly increases");
      }
      out.rows.push_back(row);
    }
  });
  return out;
}

}  // namespace finfish
