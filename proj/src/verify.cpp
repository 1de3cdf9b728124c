/*
Copyright 2026 The weyl-strata Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "weylstrata/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>

#include "weylstrata/errors.hpp"
#include "weylstrata/oracle.hpp"
#include "weylstrata/parabolic_closure.hpp"
#include "weylstrata/parallel.hpp"

namespace weylstrata {

namespace {

/// Accumulates checks for one work item; items are merged in index order.
class Collector {
 public:
  template <typename Witness>
  void check(const std::string& name, bool ok, Witness&& witness) {
    Tally& t = tally(name);
    ++t.cases;
    if (!ok) {
      ++t.failed;
      failures_.push_back({name, witness(), false});
    }
  }

  template <typename Witness>
  void observe(const std::string& name, bool flagged, Witness&& witness) {
    Observation& o = observation(name);
    ++o.checked;
    if (flagged && o.flagged++ == 0) o.first_witness = witness();
  }

  /// A library error escaped a suite body.
  void error(const Error& e) {
    if (e.is_consistency_failure()) {
      check(std::string(to_string(e.code())), false, [&] { return std::string(e.what()); });
    } else {
      failures_.push_back({"internal", e.what(), true});
    }
  }

  void merge(const Collector& other) {
    for (const auto& t : other.tallies_) {
      Tally& mine = tally(t.check);
      mine.cases += t.cases;
      mine.failed += t.failed;
    }
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
    for (const auto& o : other.observations_) {
      Observation& mine = observation(o.check);
      mine.checked += o.checked;
      if (o.flagged > 0 && mine.flagged == 0) mine.first_witness = o.first_witness;
      mine.flagged += o.flagged;
    }
  }

  void into(Report& r) const {
    r.cases = 0;
    for (const auto& t : tallies_) r.cases += t.cases;
    r.tallies = tallies_;
    r.failures = failures_;
    r.observations = observations_;
  }

 private:
  Tally& tally(const std::string& name) {
    for (auto& t : tallies_)
      if (t.check == name) return t;
    tallies_.push_back({name, 0, 0});
    return tallies_.back();
  }

  Observation& observation(const std::string& name) {
    for (auto& o : observations_)
      if (o.check == name) return o;
    observations_.push_back({name, 0, 0, {}});
    return observations_.back();
  }

  std::vector<Tally> tallies_;
  std::vector<Failure> failures_;
  std::vector<Observation> observations_;
};

template <typename Body>
void guarded(Collector& c, Body&& body) {
  try {
    body(c);
  } catch (const Error& e) {
    c.error(e);
  }
}

/// Runs body(i, collector) for every i in [0, n) and merges in index order.
template <typename Body>
Collector collect(std::size_t n, int jobs, Body&& body) {
  std::vector<Collector> parts(n);
  parallel_for(n, jobs, [&](std::size_t i) { guarded(parts[i], [&](Collector& c) { body(i, c); }); });
  Collector out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

std::string w_str(const WeylGroup& g, WeylElement w) { return word_string(g, w); }

std::vector<Subset> stable_subsets(const WeylGroup& g, const DiagramAut& delta) {
  std::vector<Subset> out;
  for (auto k : subsets_of(g.all_nodes()))
    if (delta.fixes(k)) out.push_back(k);
  return out;
}

std::vector<Subset> all_subsets(const WeylGroup& g) {
  std::vector<Subset> out;
  for (auto k : subsets_of(g.all_nodes())) out.push_back(k);
  return out;
}

std::string pair_str(const WeylGroup& g, std::uint32_t code) {
  const auto [a, b] = pair_of(g, code);
  return "(" + w_str(g, a) + "," + w_str(g, b) + ")";
}

std::string pair_prefix(const AdmissibleTriple& c, const AdmissibleTriple& cp) {
  return "c=" + describe(c) + " c'=" + describe(cp) + " ";
}

// ---- partition ----

Collector suite_partition(const WeylGroup& g, const VerifyOptions& opt) {
  const auto pairs = triple_pairs(g);
  const bool order_checks = g.rank() <= 2;
  return collect(pairs.size(), opt.jobs, [&](std::size_t idx, Collector& out) {
    const auto& [c, cp] = pairs[idx];
    const auto pieces = partition_WxW(g, c, cp);
    std::vector<int> hits(g.order() * g.order(), 0);
    for (const auto& p : pieces)
      for (auto m : p.members) ++hits[m];
    const auto bad = std::find_if(hits.begin(), hits.end(), [](int h) { return h != 1; });
    out.check("disjoint-cover", bad == hits.end(), [&] {
      const auto code = static_cast<std::uint32_t>(bad - hits.begin());
      return pair_prefix(c, cp) + "pair " + pair_str(g, code) + " lies in " + std::to_string(*bad) + " pieces";
    });

    for (const auto& p : pieces) {
      bool ok = satisfies_I_conditions(g, p.w1, p.w2, c, cp, p.i);
      for (int j : c.j1.nodes())
        if (satisfies_I_conditions(g, p.w1, p.w2, c, cp, Subset::single(j)) && !p.i.contains(j)) ok = false;
      out.check("I-maximal", ok, [&] {
        return pair_prefix(c, cp) + "w1=" + w_str(g, p.w1) + " w2=" + w_str(g, p.w2) + " I=" + to_string(p.i);
      });
    }

    const DoubleCosetSpace space(g, c, cp);
    for (const auto& o : space.cosets())
      if (o.distinguished())
        out.check("coset-uniqueness", o.reps.size() == 1, [&] {
          std::string reps;
          for (auto r : o.reps) reps += pair_str(g, r);
          return pair_prefix(c, cp) + "coset of " + pair_str(g, o.members.front()) + " has representatives " + reps;
        });
    // Every (w1, w2) with w1 in W^{J1}, w2 in ^{J2'}W meets a distinguished coset by definition;
    // the count of such pairs must equal the number of distinguished cosets.
    std::size_t minimal_pairs = 0;
    for (auto a : g.elements())
      for (auto b : g.elements())
        if (g.is_right_minimal(a, c.j1) && g.is_left_minimal(b, cp.j2)) ++minimal_pairs;
    const auto dist = space.distinguished();
    out.check("coset-existence", minimal_pairs == dist.size(), [&] {
      return pair_prefix(c, cp) + std::to_string(minimal_pairs) + " minimal pairs but " +
             std::to_string(dist.size()) + " distinguished cosets";
    });

    if (!order_checks) return;
    const std::size_t d = dist.size();
    std::vector<char> leq(d * d, 0);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const auto r = space.compare(dist[a], dist[b]);
        leq[a * d + b] = r.some;
        out.observe("some-any", r.some != r.any, [&] {
          return pair_prefix(c, cp) + "cosets of " + pair_str(g, space.cosets()[dist[a]].reps.front()) + " and " +
                 pair_str(g, space.cosets()[dist[b]].reps.front());
        });
      }
    auto name = [&](std::size_t a) { return pair_str(g, space.cosets()[dist[a]].reps.front()); };
    for (std::size_t a = 0; a < d; ++a) {
      out.check("coset-order", leq[a * d + a], [&] { return pair_prefix(c, cp) + "not reflexive at " + name(a); });
      for (std::size_t b = 0; b < d; ++b) {
        if (a == b || !leq[a * d + b]) continue;
        out.check("coset-order", !leq[b * d + a],
                  [&] { return pair_prefix(c, cp) + "not antisymmetric: " + name(a) + ", " + name(b); });
        for (std::size_t e = 0; e < d; ++e)
          if (leq[b * d + e])
            out.check("coset-order", leq[a * d + e], [&] {
              return pair_prefix(c, cp) + "not transitive: " + name(a) + " <= " + name(b) + " <= " + name(e);
            });
      }
    }
  });
}

// ---- bruhat-oracle ----

Collector suite_bruhat(const WeylGroup& g, const VerifyOptions& opt) {
  const oracle::Group og(g.cartan());
  const auto elems = g.elements();
  return collect(elems.size(), opt.jobs, [&](std::size_t i, Collector& out) {
    const auto w = elems[i];
    for (auto u : elems) {
      const bool fast = g.bruhat_leq(u, w);
      const bool slow = oracle::subword_leq(og, g, u, w);
      out.check("bruhat-oracle", fast == slow, [&] {
        return "u=" + w_str(g, u) + " w=" + w_str(g, w) + " bruhat_leq=" + (fast ? "true" : "false") +
               " subword=" + (slow ? "true" : "false");
      });
    }
  });
}

// ---- closure-poset ----

Collector suite_closure_poset(const WeylGroup& g, const DiagramAut& delta, const VerifyOptions& opt) {
  Collector out;
  for (auto k : all_subsets(g)) {
    guarded(out, [&](Collector& c) {
      const ClosurePoset poset(g, k, delta, opt.jobs);
      const auto violation = poset.partial_order_violation();
      c.check("partial-order", !violation, [&] { return "K=" + to_string(k) + " " + *violation; });
      for (std::size_t i = 0; i < poset.size(); ++i) {
        const int di = poset.dimension(i);
        c.check("dimension-nonnegative", di >= 0, [&] { return describe(g, poset.pieces()[i]); });
        const auto& down = poset.downset(i);
        for (auto j = down.find_first(); j != boost::dynamic_bitset<>::npos; j = down.find_next(j)) {
          if (j == i) continue;
          const int dj = poset.dimension(j);
          auto witness = [&] {
            return describe(g, poset.pieces()[j]) + " (dim " + std::to_string(dj) + ") <= " +
                   describe(g, poset.pieces()[i]) + " (dim " + std::to_string(di) + ")";
          };
          c.check("dimension-monotone", dj <= di, witness);
          c.observe("dimension-tie", dj == di, witness);
        }
      }
      if (k == g.all_nodes()) {
        for (auto j1 : all_subsets(g))
          for (auto j2 : all_subsets(g)) {
            const auto a = poset.index_of(make_piece(g, j1, g.identity(), g.identity(), k, delta));
            const auto b = poset.index_of(make_piece(g, j2, g.identity(), g.identity(), k, delta));
            c.check("semistable-order", poset.leq(a, b) == j1.is_subset_of(j2),
                    [&] { return "Z_{" + to_string(j1) + ",1} vs Z_{" + to_string(j2) + ",1}"; });
          }
      }
    });
  }
  return out;
}

// ---- boundary-profile ----

Collector suite_boundary_profile(const WeylGroup& g, const DiagramAut& delta, const VerifyOptions& opt) {
  Collector out;
  const bool direct = g.rank() <= 2;
  for (auto k : all_subsets(g)) {
    guarded(out, [&](Collector& c) {
      const ClosurePoset poset(g, k, delta, opt.jobs);
      const std::size_t slots = std::size_t{1} << g.rank();
      for (std::size_t i = 0; i < poset.size(); ++i) {
        const auto& p = poset.pieces()[i];
        std::vector<int> best(slots, -1);
        const auto& down = poset.downset(i);
        for (auto j = down.find_first(); j != boost::dynamic_bitset<>::npos; j = down.find_next(j)) {
          auto& slot = best[poset.pieces()[j].j.bits()];
          slot = std::max(slot, poset.dimension(j));
        }
        std::map<Subset, int> derived;
        for (auto jp : subsets_of(p.j)) {
          derived[jp] = best[jp.bits()];
          const int expected = poset.dimension(i) - p.j.size() + jp.size();
          c.check("profile-formula", best[jp.bits()] == expected, [&] {
            return describe(g, p) + " J'=" + to_string(jp) + " max dim " + std::to_string(best[jp.bits()]) +
                   ", formula " + std::to_string(expected);
          });
        }
        if (direct)
          c.check("profile-direct", boundary_profile(g, p) == derived, [&] { return describe(g, p); });
      }
    });
  }
  return out;
}

// ---- lemma7 ----

Collector suite_lemma7(const WeylGroup& g, const DiagramAut& delta, const VerifyOptions& opt) {
  const auto js = all_subsets(g);
  const auto ks = stable_subsets(g, delta);
  return collect(js.size(), opt.jobs, [&](std::size_t idx, Collector& out) {
    const Subset j = js[idx];
    for (auto k : ks) {
      std::optional<EpsilonMap> m;
      try {
        m = epsilon(g, j, k, delta);
      } catch (const Error& e) {
        if (!e.is_consistency_failure()) throw;
        out.check("epsilon-bijection", false, [&] { return std::string(e.what()); });
        continue;
      }
      out.check("epsilon-bijection", true, [] { return std::string(); });
      for (const auto& [w, x] : m->pairs) {
        const Subset formula = k_cap_w_j_delta(g, w, j, k, delta);
        const Subset maximal = max_stable_preimage(g, x, j, k, delta);
        auto where = [&] {
          return "J=" + to_string(j) + " K=" + to_string(k) + " w=" + w_str(g, w) + " eps(w)=" + w_str(g, x);
        };
        out.check("k-cap-formula", formula == maximal, [&] {
          return where() + " max preimage " + to_string(maximal) + ", K cap w(J_delta) " + to_string(formula);
        });
        const auto piece = make_piece(g, j, g.apply_aut(delta, x), x, k, delta);
        const Subset k1 = K1_of(g, piece, K1Reading::kDeltaJ);
        out.check("k1-cross-check", k1 == formula,
                  [&] { return where() + " K1=" + to_string(k1) + " formula " + to_string(formula); });
        const Subset literal = K1_of(g, piece, K1Reading::kLiteral);
        out.observe("k1-literal-reading", literal != formula,
                    [&] { return where() + " literal K1=" + to_string(literal) + " formula " + to_string(formula); });
      }
    }
  });
}

// ---- theorem-pp ----

std::string first_difference(const WeylGroup& g, const std::vector<PieceIndex>& a, const std::vector<PieceIndex>& b) {
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) == b.end()) return "only in first: " + describe(g, p);
  for (const auto& p : b)
    if (std::find(a.begin(), a.end(), p) == a.end()) return "only in second: " + describe(g, p);
  return "same members, different order or multiplicity";
}

Collector suite_theorem_pp(const WeylGroup& g, const DiagramAut& delta, const VerifyOptions& opt) {
  const auto ks = stable_subsets(g, delta);
  Collector out = collect(ks.size(), opt.jobs, [&](std::size_t idx, Collector& c) {
    const Subset k = ks[idx];
    const auto pci = parabolic_closure_index(g, k, delta);
    const auto sets = pp_index_sets(g, k, delta);
    const std::string where = "K=" + to_string(k) + " ";
    c.check("pp-twisted-reps", sets.by_twisted_reps == pci,
            [&] { return where + first_difference(g, pci, sets.by_twisted_reps); });
    c.check("pp-j-outer", sets.j_outer == pci, [&] { return where + first_difference(g, pci, sets.j_outer); });
    c.check("pp-w-outer", sets.w_outer == pci, [&] { return where + first_difference(g, pci, sets.w_outer); });
    if (k == g.all_nodes()) {
      std::vector<PieceIndex> expected;
      for (const auto& s : semistable_g_pieces(g, delta))
        expected.push_back(make_piece(g, s.j, s.w, g.identity(), k, delta));
      std::sort(expected.begin(), expected.end(), canonical_less);
      c.check("semistable-agreement", pci == expected, [&] { return where + first_difference(g, expected, pci); });
    }
    std::vector<IsolatedIndex> brute;
    for (auto j : all_subsets(g))
      for (auto w : epsilon_domain(g, j, k, delta)) {
        const auto image = g.maps_into_simples(g.inverse(w), k);
        if (image && image->is_subset_of(j_delta(j, delta))) brute.push_back({j, w});
      }
    const auto iso = isolated_boundary_index(g, k, delta);
    c.check("isolated-index", iso == brute, [&] {
      return where + std::to_string(iso.size()) + " indices, direct scan finds " + std::to_string(brute.size());
    });
  });

  guarded(out, [&](Collector& c) {
    const auto ss = semistable_g_pieces(g, delta);
    bool ok = ss.size() == (std::size_t{1} << g.rank());
    for (const auto& s : ss) ok = ok && s.w == g.identity();
    c.check("semistable-count", ok, [&] { return std::to_string(ss.size()) + " semi-stable G-pieces"; });
  });

  // Recorded, not asserted: closure behaviour of the index sets.
  guarded(out, [&](Collector& c) {
    std::vector<ClosurePoset> posets;
    std::vector<boost::dynamic_bitset<>> members;
    for (auto k : ks) {
      posets.emplace_back(g, k, delta, opt.jobs);
      boost::dynamic_bitset<> in(posets.back().size());
      for (const auto& p : parabolic_closure_index(g, k, delta)) in.set(posets.back().index_of(p));
      members.push_back(std::move(in));
    }
    for (std::size_t a = 0; a < ks.size(); ++a) {
      const auto& poset = posets[a];
      std::vector<signed char> semistable(poset.size(), -1);
      for (auto i = members[a].find_first(); i != boost::dynamic_bitset<>::npos; i = members[a].find_next(i)) {
        const auto& p = poset.pieces()[i];
        c.observe("pci-in-semistable-locus", !in_semistable_locus(g, p.j, p.w, p.v, delta),
                  [&] { return describe(g, p); });
        const auto& down = poset.downset(i);
        for (auto j = down.find_first(); j != boost::dynamic_bitset<>::npos; j = down.find_next(j)) {
          if (members[a][j]) continue;
          const auto& q = poset.pieces()[j];
          if (semistable[j] < 0) semistable[j] = in_semistable_locus(g, q.j, q.w, q.v, delta) ? 1 : 0;
          c.observe("downward-closed", semistable[j] == 1,
                    [&] { return describe(g, q) + " <= " + describe(g, p) + " is semi-stable but not listed"; });
        }
      }
      for (std::size_t b = 0; b < ks.size(); ++b) {
        if (a == b || !ks[a].is_subset_of(ks[b])) continue;
        for (auto i = members[a].find_first(); i != boost::dynamic_bitset<>::npos; i = members[a].find_next(i)) {
          const auto& p = poset.pieces()[i];
          bool below = false;
          std::string note;
          try {
            const auto q = containing_piece(g, p.j, p.w, p.v, ks[b], delta);
            const auto qi = posets[b].index_of(q);
            for (auto u = members[b].find_first(); u != boost::dynamic_bitset<>::npos && !below;
                 u = members[b].find_next(u))
              below = posets[b].leq(qi, u);
            note = describe(g, q);
          } catch (const Error& e) {
            note = e.what();
          }
          c.observe("k-monotone", !below, [&] {
            return describe(g, p) + " saturates to " + note + ", not below the index set for K=" + to_string(ks[b]);
          });
        }
      }
    }
  });
  return out;
}

// ---- steinberg ----

const char* sign_name(SignConvention s) { return s == SignConvention::kCardinality ? "cardinality" : "orbits"; }

Collector suite_steinberg(const WeylGroup& g, const DiagramAut& delta, const VerifyOptions& opt) {
  const auto js = all_subsets(g);
  const auto ks = stable_subsets(g, delta);
  const Subset all = g.all_nodes();
  return collect(js.size(), opt.jobs, [&](std::size_t idx, Collector& out) {
    const Subset j = js[idx];
    const Subset jd = j_delta(j, delta);
    for (auto t : subsets_of(jd)) {
      if (!delta.fixes(t)) continue;
      const int m = steinberg_multiplicity(g, j, t, delta, opt.sign);
      const int e = subset_sign(t, delta, opt.sign);
      out.check("multiplicity", m == e, [&] {
        return "J=" + to_string(j) + " T=" + to_string(t) + " multiplicity=" + std::to_string(m) +
               " expected=" + std::to_string(e) + " sign=" + sign_name(opt.sign);
      });
    }
    for (const auto& [t, m] : steinberg_all_targets(g, j, delta, opt.sign))
      out.check("stray-target", m == 0 || (delta.fixes(t) && t.is_subset_of(jd)), [&, t = t, m = m] {
        return "J=" + to_string(j) + " T=" + to_string(t) + " multiplicity=" + std::to_string(m);
      });
    for (auto k : ks)
      for (auto w : epsilon_domain(g, j, k, delta)) {
        const auto w_inv = g.inverse(w);
        for (int node : k.nodes())
          out.check("positive-preimage", g.is_positive_root(g.act_on_root(w_inv, node)), [&] {
            return "J=" + to_string(j) + " K=" + to_string(k) + " w=" + w_str(g, w) + " node " + std::to_string(node);
          });
      }
    const auto w0_jd = g.longest_element(jd);
    for (auto w : steinberg_domain(g, j, delta)) {
      const Subset full = i_of(g, j, all, w, delta);
      const Subset jp = j_prime(g, w);
      auto where = [&] { return "J=" + to_string(j) + " w=" + w_str(g, w); };
      for (auto k : subsets_of(full)) {
        const int raw = signed_sum_raw(g, j, w, k, delta, opt.sign);
        const int closed = signed_sum_closed_form(g, j, w, k, delta, opt.sign, DifferenceReading::kTranslated);
        out.check("closed-form", raw == closed, [&] {
          return where() + " K=" + to_string(k) + " sum=" + std::to_string(raw) + " closed form=" +
                 std::to_string(closed) + " sign=" + sign_name(opt.sign);
        });
        const int literal = signed_sum_closed_form(g, j, w, k, delta, opt.sign, DifferenceReading::kLiteral);
        out.observe("closed-form-literal-difference", raw != literal, [&] {
          return where() + " K=" + to_string(k) + " sum=" + std::to_string(raw) + " literal closed form=" +
                 std::to_string(literal);
        });
      }
      const bool forces = g.multiply(w, w0_jd) == g.longest();
      for (const bool translated : {true, false}) {
        const bool equal = translated ? jp == *g.maps_into_simples(w, full) : jp == full;
        out.check("degenerate-case", !equal || forces, [&] {
          return where() + (translated ? " J'=wI" : " J'=I") + " but w w0^{J_delta} != w0";
        });
      }
      for (auto k : ks) {
        const Subset image = i_of(g, j, k, w, delta);
        out.check("stability-propagation", delta.fixes(image),
                  [&] { return where() + " K=" + to_string(k) + " I=" + to_string(image); });
      }
    }
  });
}

// ---- condition-equiv ----

Collector suite_condition_equiv(const WeylGroup& g, const DiagramAut& delta, const VerifyOptions& opt) {
  const auto js = all_subsets(g);
  const auto ks = stable_subsets(g, delta);
  return collect(js.size(), opt.jobs, [&](std::size_t idx, Collector& out) {
    const Subset j = js[idx];
    for (auto w : steinberg_domain(g, j, delta)) {
      const Subset full = i_of(g, j, g.all_nodes(), w, delta);
      for (auto k : subsets_of(full))
        for (auto kp : ks) {
          auto where = [&] {
            return "J=" + to_string(j) + " w=" + w_str(g, w) + " K=" + to_string(k) + " K'=" + to_string(kp);
          };
          const auto c = condition_equiv(g, j, w, k, kp, delta, DifferenceReading::kTranslated);
          out.check("condition-equiv", c.first == c.second, [&] {
            return where() + " (1)=" + (c.first ? "true" : "false") + " (2)=" + (c.second ? "true" : "false");
          });
          const auto lit = condition_equiv(g, j, w, k, kp, delta, DifferenceReading::kLiteral);
          out.observe("condition-literal-difference", lit.first != lit.second, where);
        }
    }
  });
}

// ---- twisted-classes ----

Collector suite_twisted(const WeylGroup& g, const VerifyOptions& opt) {
  const auto pairs = triple_pairs(g);
  return collect(pairs.size(), opt.jobs, [&](std::size_t idx, Collector& out) {
    const auto& [c, cp] = pairs[idx];
    const DoubleCosetSpace space(g, c, cp);
    for (const auto& p : partition_WxW(g, c, cp)) {
      const auto tb = check_twisted_bijection(g, c, cp, p, space);
      out.check("twisted-bijection", tb.holds(), [&] {
        return pair_prefix(c, cp) + "w1=" + w_str(g, p.w1) + " w2=" + w_str(g, p.w2) + " I=" + to_string(p.i) +
               " classes=" + std::to_string(tb.classes) + " cosets=" + std::to_string(tb.cosets_in_piece) +
               " injective=" + (tb.injective ? "true" : "false") + " surjective=" + (tb.surjective ? "true" : "false");
      });
    }
  });
}

}  // namespace

std::string describe(const AdmissibleTriple& c) {
  return "(J1=" + to_string(c.j1) + ",J2=" + to_string(c.j2) + "," + c.delta.describe() + ")";
}

std::vector<std::pair<AdmissibleTriple, AdmissibleTriple>> triple_pairs(const WeylGroup& g) {
  std::vector<AdmissibleTriple> family;
  if (g.rank() <= 2) {
    family = admissible_triples(g.cartan());
  } else {
    for (auto j : subsets_of(g.all_nodes())) family.push_back(AdmissibleTriple::diagonal(j));
    for (const auto& d : diagram_automorphisms(g.cartan()))
      if (!d.is_identity()) family.push_back(AdmissibleTriple::make(g.cartan(), g.all_nodes(), g.all_nodes(), d.images()));
  }
  std::vector<std::pair<AdmissibleTriple, AdmissibleTriple>> out;
  for (const auto& c : family)
    for (const auto& cp : family) out.emplace_back(c, cp);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"partition", "bruhat-oracle", "closure-poset",
                                                 "boundary-profile", "lemma7", "theorem-pp",
                                                 "steinberg", "condition-equiv", "twisted-classes"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report run_suite(const WeylGroup& g, const DiagramAut& delta, const std::string& suite, const VerifyOptions& options) {
  g.check_aut(delta);
  using Runner = std::function<Collector()>;
  const std::map<std::string, Runner> runners = {
      {"partition", [&] { return suite_partition(g, options); }},
      {"bruhat-oracle", [&] { return suite_bruhat(g, options); }},
      {"closure-poset", [&] { return suite_closure_poset(g, delta, options); }},
      {"boundary-profile", [&] { return suite_boundary_profile(g, delta, options); }},
      {"lemma7", [&] { return suite_lemma7(g, delta, options); }},
      {"theorem-pp", [&] { return suite_theorem_pp(g, delta, options); }},
      {"steinberg", [&] { return suite_steinberg(g, delta, options); }},
      {"condition-equiv", [&] { return suite_condition_equiv(g, delta, options); }},
      {"twisted-classes", [&] { return suite_twisted(g, options); }},
  };
  const auto it = runners.find(suite);
  if (it == runners.end()) fail(ErrorCode::kParseError, "unknown suite \"" + suite + "\"");

  Report r;
  r.suite = suite;
  r.type = g.cartan().label();
  r.delta = delta_label(delta);
  const auto start = std::chrono::steady_clock::now();
  Collector c;
  guarded(c, [&](Collector& out) { out.merge(it->second()); });
  c.into(r);
  if (options.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_suites(const WeylGroup& g, const DiagramAut& delta, const std::vector<std::string>& suites,
                               const VerifyOptions& options) {
  std::vector<std::string> names;
  for (const auto& s : suites) {
    if (s == "all") {
      names.insert(names.end(), suite_names().begin(), suite_names().end());
    } else {
      if (!is_suite(s)) fail(ErrorCode::kParseError, "unknown suite \"" + s + "\"");
      names.push_back(s);
    }
  }
  std::vector<Report> out;
  for (const auto& s : names) out.push_back(run_suite(g, delta, s, options));
  return out;
}

}  // namespace weylstrata
