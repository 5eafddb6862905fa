// Built-in acceptance corpus. Each case checks one numbered criterion with
// exact arithmetic; budgets are wall-clock limits on the whole case.
#include <chrono>
#include <sstream>

#include "stabletype/cli.hpp"
#include "stabletype/decomposition.hpp"
#include "stabletype/descriptor.hpp"
#include "stabletype/homs.hpp"
#include "stabletype/lattice.hpp"
#include "stabletype/named.hpp"
#include "stabletype/out_action.hpp"

namespace stabletype::cli {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string>& corpus_groups() {
  static const std::vector<std::string> list = {
      "C1",      "C2",      "C3",    "C4",       "C5",      "C6",      "C8",      "C12",    "S3",
      "D8",      "Q8",      "A4",    "S4",       "Q12",     "D10",     "C2 x C2", "C3 x C3", "E2^3",
      "H3",      "Q12 x C2", "D6 x C4", "D8 x C3", "S3 x S3", "perm{(1 2 3 4 5),(2 3 5 4)}",
  };
  return list;
}

struct Triple {
  std::string g1, g2;
  unsigned p;
  Verdict expected;
};

std::string label(const Triple& t) { return "(" + t.g1 + ", " + t.g2 + ", " + std::to_string(t.p) + ")"; }

// Wraps a check with a budget in seconds (0 = none).
CorpusCase timed(std::string name, double budget, std::function<bool(std::string&)> body) {
  return {std::move(name), [budget, body = std::move(body)](std::string& detail) {
            const auto start = Clock::now();
            bool ok = body(detail);
            const double secs = std::chrono::duration<double>(Clock::now() - start).count();
            if (budget > 0 && secs > budget) {
              if (!detail.empty()) detail += "; ";
              detail += "over the " + std::to_string(static_cast<int>(budget)) + " s budget";
              ok = false;
            }
            return ok;
          }};
}

bool verdict_cases(const std::vector<Triple>& cases, std::string& detail,
                   const std::function<EquivalenceVerdict(const FiniteGroup&, const FiniteGroup&, unsigned)>& decide) {
  bool ok = true;
  for (const auto& t : cases) {
    auto v = decide(parse_group(t.g1), parse_group(t.g2), t.p);
    if (v.result != t.expected) {
      ok = false;
      detail += label(t) + " gave " + to_string(v.result) + "; ";
    }
  }
  return ok;
}

const std::vector<Triple>& order24_cases() {
  static const std::vector<Triple> c = {{"Q12 x C2", "D6 x C4", 2, Verdict::Equivalent},
                                        {"Q12 x C2", "D6 x C4", 3, Verdict::Equivalent}};
  return c;
}
const std::vector<Triple>& reduction_cases() {
  static const std::vector<Triple> c = {{"C6", "C2", 2, Verdict::Equivalent},
                                        {"S3", "C2", 2, Verdict::Equivalent},
                                        {"C12", "C3", 3, Verdict::Equivalent}};
  return c;
}
const std::vector<Triple>& normal_sylow_cases() {
  static const std::vector<Triple> c = {{"A4", "A4", 2, Verdict::Equivalent},
                                        {"S3", "C6", 3, Verdict::NotEquivalent},
                                        {"A4", "C2 x C2", 2, Verdict::NotEquivalent}};
  return c;
}
const std::string kF20 = "perm{(1 2 3 4 5),(2 3 5 4)}";
const std::vector<Triple>& reduced_cyclic_cases() {
  static const std::vector<Triple> c = {{"S3", "C3", 3, Verdict::NotEquivalent},
                                        {kF20, "D10", 5, Verdict::NotEquivalent},
                                        {"S3", "S3", 3, Verdict::Equivalent},
                                        {"C3", "C3", 3, Verdict::Equivalent},
                                        {kF20, kF20, 5, Verdict::Equivalent},
                                        {"D10", "D10", 5, Verdict::Equivalent},
                                        {"D8", "D8", 2, Verdict::Equivalent}};
  return c;
}

bool c1(std::string& detail) {
  bool ok = verdict_cases(order24_cases(), detail, [](const auto& a, const auto& b, unsigned p) {
    return stably_equivalent(a, b, p);
  });
  if (is_isomorphic(parse_group("Q12 x C2"), parse_group("D6 x C4"))) {
    detail += "the pair is isomorphic; ";
    ok = false;
  }
  return ok;
}

bool c2(std::string& detail) {
  const std::vector<Triple> mismatches = {{"C4", "C2 x C2", 2, Verdict::SylowMismatch},
                                          {"D8", "Q8", 2, Verdict::SylowMismatch},
                                          {"D8", "C8", 2, Verdict::SylowMismatch}};
  bool ok = verdict_cases(mismatches, detail, [](const auto& a, const auto& b, unsigned p) {
    return stably_equivalent(a, b, p);
  });
  // Every pair judged Equivalent anywhere in the corpus has isomorphic Sylows.
  std::size_t checked = 0;
  for (const auto* list : {&order24_cases(), &reduction_cases(), &normal_sylow_cases(), &reduced_cyclic_cases()})
    for (const auto& t : *list) {
      if (t.expected != Verdict::Equivalent) continue;
      FiniteGroup a = parse_group(t.g1);
      FiniteGroup b = parse_group(t.g2);
      if (stably_equivalent(a, b, t.p).result != Verdict::Equivalent) continue;
      ++checked;
      if (!is_isomorphic(sylow(a, t.p).as_group(), sylow(b, t.p).as_group())) {
        detail += label(t) + " is Equivalent with non-isomorphic Sylows; ";
        ok = false;
      }
    }
  detail += std::to_string(checked) + " Equivalent pairs have isomorphic Sylows";
  return ok;
}

bool c3(std::string& detail) {
  return verdict_cases(reduction_cases(), detail, [](const auto& a, const auto& b, unsigned p) {
    return stably_equivalent(a, b, p);
  });
}

bool c4(std::string& detail) {
  bool ok = verdict_cases(normal_sylow_cases(), detail, [](const auto& a, const auto& b, unsigned p) {
    return normal_sylow_equivalent(a, b, p);
  });
  ok &= verdict_cases(normal_sylow_cases(), detail, [](const auto& a, const auto& b, unsigned p) {
    return stably_equivalent(a, b, p);
  });
  return ok;
}

bool c5(std::string& detail) {
  bool ok = verdict_cases(reduced_cyclic_cases(), detail, [](const auto& a, const auto& b, unsigned p) {
    return reduced_cyclic_equivalent(a, b, p);
  });
  for (const auto& t : reduced_cyclic_cases()) {
    const bool iso = is_isomorphic(parse_group(t.g1), parse_group(t.g2)).has_value();
    if (iso != (t.expected == Verdict::Equivalent)) {
      detail += label(t) + " disagrees with is_isomorphic; ";
      ok = false;
    }
  }
  return ok;
}

bool c6(std::string& detail) {
  FiniteGroup e = regular_representation(parse_group("E3^3"));
  FiniteGroup h = parse_group("H3");
  if (h.degree() != 27) h = regular_representation(h);
  bool ok = true;
  for (const FiniteGroup* g : {&e, &h}) {
    std::size_t nontrivial = 0;
    for (const auto& x : g->elements()) {
      if (x.is_identity()) continue;
      ++nontrivial;
      if (x.cycle_type() != std::vector<std::size_t>(9, 3)) ok = false;
    }
    if (nontrivial != 26) ok = false;
  }
  if (!ok) detail += "cycle types are not all 3^9; ";
  if (!pointwise_conjugate_symmetric(e, h)) {
    detail += "not pointwise conjugate; ";
    ok = false;
  }
  if (is_isomorphic(e, h)) {
    detail += "isomorphic; ";
    ok = false;
  }
  return ok;
}

FormalSum single(const FiniteGroup& g) {
  FormalSum s;
  s.add(g, 1);
  return s;
}

bool c7(std::string& detail) {
  bool ok = true;
  FiniteGroup s3 = parse_group("S3");
  if (!formal_sum_equal(mw_decompose(s3, 3), single(s3))) detail += "S3 at 3; ", ok = false;
  if (!formal_sum_equal(mw_decompose(s3, 2), single(parse_group("C2")))) detail += "S3 at 2; ", ok = false;
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    FiniteGroup cp = parse_group("C" + std::to_string(p));
    if (!formal_sum_equal(mw_decompose(cp, p), single(cp))) detail += "C" + std::to_string(p) + "; ", ok = false;
  }
  // Defining sums on S4 at 2, recomputed over every member subgroup.
  auto poset = cyclic_mod_p_poset(parse_group("S4"), 2);
  auto t = mobius_f(poset);
  std::size_t sums = 0;
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (const auto& j : poset.members[i]) {
      Rational sum = 0;
      for (std::size_t c = 0; c < poset.size(); ++c)
        for (const auto& k : poset.members[c])
          if (k.contains(j)) sum += t.f[c];
      ++sums;
      if (sum != 1) ok = false;
    }
  detail += std::to_string(sums) + " Mobius sums on S4 checked";
  return ok;
}

bool c8(std::string& detail) {
  bool ok = formal_sum_equal(mw_decompose(parse_group("Q12 x C2"), 2), mw_decompose(parse_group("D6 x C4"), 2));
  if (!ok) detail += "order-24 pair sums differ at 2; ";
  std::size_t collapsed = 0;
  for (const auto& d : corpus_groups()) {
    FiniteGroup g = parse_group(d);
    for (unsigned p : {2u, 3u, 5u}) {
      if (g.order() % p != 0 || o_p_prime(g, p).order() != 1 || !is_cyclic_mod_p(g, p)) continue;
      ++collapsed;
      if (!formal_sum_equal(mw_decompose(g, p), single(g))) {
        detail += d + " at " + std::to_string(p) + " does not collapse; ";
        ok = false;
      }
    }
  }
  detail += std::to_string(collapsed) + " reduced cyclic mod p cases collapse";
  return ok;
}

bool c9(std::string& detail) {
  bool ok = true;
  for (const char* d : {"S3", "A4", "S4", "Q8", "D8 x C3", "C6"})
    for (unsigned p : {2u, 3u}) {
      auto r = psi_rank(parse_group(d), p);
      if (!r.holds()) {
        detail += std::string(d) + " at " + std::to_string(p) + ": " + std::to_string(r.rank) + " vs " +
                  std::to_string(r.cyclic_classes) + "; ";
        ok = false;
      }
    }
  return ok;
}

bool c10(std::string& detail) {
  bool ok = true;
  std::size_t pairs = 0, classes = 0;
  for (const char* d : {"S3", "S4", "A4", "Q12 x C2", "D6 x C4"}) {
    FiniteGroup g = parse_group(d);
    for (unsigned p : {2u, 3u})
      for (const auto& q : p_subgroup_iso_classes(g, p)) {
        ++pairs;
        if (!factorization_check(q, g).holds()) {
          detail += "factorization fails for " + describe(q) + " in " + d + "; ";
          ok = false;
        }
        const RepSet inj = inj_classes(q, g, p);
        for (const auto& rc : inj.classes()) {
          ++classes;
          if (w_bar_nonzero(rc.representative, p) != k_flag(rc, p)) {
            detail += "w_bar vs K for " + describe(q) + " in " + d + "; ";
            ok = false;
          }
        }
      }
  }
  detail += std::to_string(pairs) + " (Q,G) pairs, " + std::to_string(classes) + " injective classes";
  return ok;
}

bool c11(std::string& detail) {
  bool ok = true;
  for (const auto& d : corpus_groups()) {
    FiniteGroup g = parse_group(d);
    for (std::int64_t n : {2, 3, 4, 6}) {
      // Roots of unity counted by composing permutations directly.
      std::size_t roots = 0;
      for (const auto& x : g.elements()) {
        Permutation y = Permutation::identity(g.degree());
        for (std::int64_t k = 0; k < n; ++k) y = y * x;
        roots += y.is_identity();
      }
      FiniteGroup cn = make_named(NamedFamily::Cyclic, static_cast<unsigned>(n));
      if (enumerate_homs(cn, g).size() != roots) {
        detail += "Hom(C" + std::to_string(n) + ", " + d + "); ";
        ok = false;
      }
    }
    const auto& cls = g.classes();
    std::size_t total = 0;
    for (std::size_t s : cls.class_sizes) {
      total += s;
      if (g.order() % s != 0) ok = false;
    }
    if (total != g.order()) detail += "class equation for " + d + "; ", ok = false;
    for (const auto& h : all_subgroups(g))
      if (g.order() % h.order() != 0) detail += "Lagrange for " + d + "; ", ok = false;
  }
  detail += std::to_string(corpus_groups().size()) + " groups";
  return ok;
}

}  // namespace

const std::vector<CorpusCase>& builtin_corpus() {
  static const std::vector<CorpusCase> cases = {
      timed("c01-order24-pair", 60, c1),
      timed("c02-sylow-necessary", 0, c2),
      timed("c03-reduction-invariance", 5, c3),
      timed("c04-normal-sylow-agreement", 0, c4),
      timed("c05-reduced-cyclic", 0, c5),
      timed("c06-pointwise-not-isomorphic", 10, c6),
      timed("c07-mw-examples", 0, c7),
      timed("c08-mw-uniqueness", 0, c8),
      timed("c09-psi-rank", 60, c9),
      timed("c10-consistency", 0, c10),
      timed("c11-oracles", 0, c11),
  };
  return cases;
}

}  // namespace stabletype::cli
