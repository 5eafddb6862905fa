#include "stabletype/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "stabletype/decomposition.hpp"
#include "stabletype/descriptor.hpp"
#include "stabletype/error.hpp"
#include "stabletype/lattice.hpp"
#include "stabletype/limits.hpp"
#include "stabletype/named.hpp"

namespace stabletype::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

struct Context {
  const CommandRequest& req;
  std::string stage = "request";
};

FiniteGroup group_arg(Context& ctx, std::size_t i) {
  if (ctx.req.groups.size() <= i)
    throw BadParameter("command '" + ctx.req.command + "' needs " + std::to_string(i + 1) + " group descriptor(s)");
  ctx.stage = "parse group " + std::to_string(i + 1);
  FiniteGroup g = parse_group(ctx.req.groups[i]);
  ctx.stage = ctx.req.command;
  return g;
}

void expect_groups(const Context& ctx, std::size_t n) {
  if (ctx.req.groups.size() != n)
    throw BadParameter("command '" + ctx.req.command + "' takes " + std::to_string(n) + " group descriptor(s), got " +
                       std::to_string(ctx.req.groups.size()));
}

unsigned prime_arg(const Context& ctx) {
  if (!ctx.req.prime) throw BadParameter("command '" + ctx.req.command + "' needs --prime");
  if (!is_prime(*ctx.req.prime)) throw BadPrime(std::to_string(*ctx.req.prime) + " is not prime");
  return *ctx.req.prime;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string cycle_type_string(const std::vector<std::size_t>& type) {
  std::map<std::size_t, std::size_t, std::greater<>> counts;
  for (std::size_t c : type) ++counts[c];
  std::string out;
  for (auto [len, mult] : counts) out += (out.empty() ? "" : " ") + std::to_string(len) + "^" + std::to_string(mult);
  return out;
}

Json term_list(const FormalSum& s) {
  Json arr = Json::array();
  for (const auto& t : s.terms()) arr.push_back({{"group", t.name}, {"coeff", to_fraction_string(t.coeff)}});
  return arr;
}

std::string term_text(const FormalSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& t : s.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_fraction_string(t.coeff) + ") B" + (t.name.find(' ') == std::string::npos ? t.name : "(" + t.name + ")");
  }
  return out;
}

std::string render(const CommandRequest& req, const Json& j, const std::string& text) {
  return req.json ? j.dump(2) + "\n" : text;
}

// info -----------------------------------------------------------------------

CommandResult cmd_info(Context& ctx) {
  expect_groups(ctx, 1);
  FiniteGroup g = group_arg(ctx, 0);
  std::vector<unsigned> primes;
  if (ctx.req.prime) {
    primes.push_back(prime_arg(ctx));
  } else {
    for (unsigned p = 2; p <= g.order(); ++p)
      if (g.order() % p == 0 && is_prime(p)) primes.push_back(p);
  }
  Json j{{"schema", kSchema},
         {"command", "info"},
         {"group", ctx.req.groups[0]},
         {"name", describe(g)},
         {"order", g.order()},
         {"degree", g.degree()},
         {"abelian", g.is_abelian()},
         {"classes", g.classes().size()},
         {"center", center(g).order()}};
  std::ostringstream os;
  os << "group: " << describe(g) << "\norder: " << g.order() << "\ndegree: " << g.degree()
     << "\nabelian: " << yes_no(g.is_abelian()) << "\nclasses: " << g.classes().size()
     << "\ncenter order: " << center(g).order() << "\n";
  Json per_prime = Json::array();
  for (unsigned p : primes) {
    Subgroup s = sylow(g, p);
    FiniteGroup r = reduce_mod_p(g, p);
    const bool cmp = is_cyclic_mod_p(r, p);
    per_prime.push_back({{"prime", p},
                         {"sylow", describe(s.as_group())},
                         {"sylow_order", s.order()},
                         {"sylow_normal", is_normal(s)},
                         {"o_p_prime_order", o_p_prime(g, p).order()},
                         {"reduced", describe(r)},
                         {"reduced_cyclic_mod_p", cmp}});
    os << "p=" << p << ": Sylow " << describe(s.as_group()) << " (normal: " << yes_no(is_normal(s))
       << "), |O_p'| = " << o_p_prime(g, p).order() << ", reduced " << describe(r)
       << ", reduced cyclic mod p: " << yes_no(cmp) << "\n";
  }
  j["primes"] = per_prime;
  return {kExitOk, render(ctx.req, j, os.str()), ""};
}

// equiv ----------------------------------------------------------------------

CommandResult cmd_equiv(Context& ctx) {
  expect_groups(ctx, 2);
  FiniteGroup g1 = group_arg(ctx, 0);
  FiniteGroup g2 = group_arg(ctx, 1);
  const unsigned p = prime_arg(ctx);
  EquivalenceVerdict v = decide_equivalence(g1, g2, p, ctx.req.method);

  Json j{{"schema", kSchema},     {"command", "equiv"},           {"groups", ctx.req.groups},
         {"prime", p},            {"method", to_string(v.method)}, {"verdict", to_string(v.result)}};
  std::ostringstream os;
  os << "verdict: " << to_string(v.result) << "\nmethod: " << to_string(v.method) << "\nprime: " << p << "\n";
  Json per_q = Json::array();
  for (const auto& q : v.per_q) {
    per_q.push_back({{"q", q.name},
                     {"order", q.q.order()},
                     {"inj_classes", {q.inj1, q.inj2}},
                     {"labels", q.marks.x.family},
                     {"marks", {q.marks.x.counts, q.marks.y.counts}},
                     {"match", q.marks.equal}});
    os << "Q " << q.name << ": Inj classes " << q.inj1 << " / " << q.inj2 << ", marks [" << join(q.marks.x.counts)
       << "] / [" << join(q.marks.y.counts) << "]" << (q.marks.equal ? "" : "  <- differ") << "\n";
  }
  j["per_q"] = per_q;
  if (v.weyl_table) {
    j["weyl_class_counts"] = {v.weyl_table->h_counts, v.weyl_table->k_counts};
    os << "Weyl class counts in Out(P): [" << join(v.weyl_table->h_counts) << "] / [" << join(v.weyl_table->k_counts)
       << "]\n";
  }
  if (v.witness) {
    j["witness"] = {{"q", v.witness->q}, {"label", v.witness->label}, {"counts", {v.witness->count1, v.witness->count2}}};
    os << "witness: " << v.witness->q << " at " << v.witness->label << " (" << v.witness->count1 << " vs "
       << v.witness->count2 << ")\n";
  } else {
    j["witness"] = nullptr;
  }
  return {v.result == Verdict::Equivalent ? kExitOk : kExitNegative, render(ctx.req, j, os.str()), ""};
}

// rep-table ------------------------------------------------------------------

CommandResult cmd_rep_table(Context& ctx) {
  expect_groups(ctx, 2);
  FiniteGroup q = group_arg(ctx, 0);
  FiniteGroup g = group_arg(ctx, 1);
  const unsigned p = prime_arg(ctx);
  RepSet reps = rep_classes(q, g, p);
  Json j{{"schema", kSchema}, {"command", "rep-table"}, {"groups", ctx.req.groups}, {"prime", p},
         {"homs", reps.hom_count()}};
  std::ostringstream os;
  os << "|Hom(Q,G)| = " << reps.hom_count() << ", " << reps.size() << " classes\n"
     << "class orbit inj surj K generator images\n";
  Json classes = Json::array();
  std::size_t inj = 0, k = 0;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const auto& rc = reps.classes()[c];
    std::vector<std::string> images;
    for (Elem s : q.generator_indices()) images.push_back(g.element(rc.representative.image_of[s]).to_string());
    classes.push_back({{"class", c},
                       {"orbit", rc.orbit_size},
                       {"injective", rc.injective},
                       {"surjective", rc.surjective},
                       {"in_k", rc.in_k},
                       {"generator_images", images}});
    os << c << " " << rc.orbit_size << " " << yes_no(rc.injective) << " " << yes_no(rc.surjective) << " "
       << yes_no(rc.in_k);
    for (const auto& s : images) os << " " << s;
    os << "\n";
    inj += rc.injective;
    k += rc.in_k;
  }
  j["classes"] = classes;
  j["inj_classes"] = inj;
  j["k_classes"] = k;
  os << "Inj classes: " << inj << ", K classes: " << k << "\n";
  return {kExitOk, render(ctx.req, j, os.str()), ""};
}

// weyl -----------------------------------------------------------------------

CommandResult cmd_weyl(Context& ctx) {
  expect_groups(ctx, 1);
  FiniteGroup g = group_arg(ctx, 0);
  const unsigned p = prime_arg(ctx);
  Subgroup s = sylow(g, p);
  WeylGroup w = weyl_group(g, s);
  const FiniteGroup& out = w.out.out;
  std::vector<std::size_t> orders;
  for (Elem x : w.w.members()) orders.push_back(out.element_order(x));
  std::sort(orders.begin(), orders.end());
  std::vector<std::size_t> fingerprint(out.classes().size(), 0);
  for (Elem x : w.w.members()) ++fingerprint[out.classes().class_of[x]];
  Json j{{"schema", kSchema},
         {"command", "weyl"},
         {"group", ctx.req.groups[0]},
         {"prime", p},
         {"sylow", describe(s.as_group())},
         {"out_order", out.order()},
         {"weyl_order", w.w.order()},
         {"element_orders", orders},
         {"class_fingerprint", fingerprint}};
  std::ostringstream os;
  os << "P: " << describe(s.as_group()) << " (order " << s.order() << ")\n|Out(P)|: " << out.order()
     << "\n|W_G(P)|: " << w.w.order() << "\nelement orders: " << join(orders, " ")
     << "\nclass fingerprint in Out(P): [" << join(fingerprint) << "]\n";
  return {kExitOk, render(ctx.req, j, os.str()), ""};
}

// pointwise ------------------------------------------------------------------

CommandResult cmd_pointwise(Context& ctx) {
  expect_groups(ctx, 2);
  FiniteGroup h = group_arg(ctx, 0);
  FiniteGroup k = group_arg(ctx, 1);
  if (ctx.req.regular) {
    h = regular_representation(h);
    k = regular_representation(k);
  }
  const bool conj = pointwise_conjugate_symmetric(h, k);
  const bool iso = is_isomorphic(h, k).has_value();
  auto types = [](const FiniteGroup& g) {
    std::map<std::string, std::size_t> m;
    for (const auto& e : g.elements()) ++m[cycle_type_string(e.cycle_type())];
    return m;
  };
  const auto th = types(h);
  const auto tk = types(k);
  Json j{{"schema", kSchema}, {"command", "pointwise"}, {"groups", ctx.req.groups}, {"regular", ctx.req.regular},
         {"degree", h.degree()}, {"cycle_types", {th, tk}}, {"pointwise_conjugate", conj}, {"isomorphic", iso}};
  std::ostringstream os;
  os << "degree: " << h.degree() << "\n";
  for (const auto* t : {&th, &tk}) {
    os << (t == &th ? "H" : "K") << " cycle types:";
    for (const auto& [type, n] : *t) os << " " << n << " x [" << type << "]";
    os << "\n";
  }
  os << "pointwise conjugate in S" << h.degree() << ": " << yes_no(conj) << "\nisomorphic: " << yes_no(iso) << "\n";
  return {conj ? kExitOk : kExitNegative, render(ctx.req, j, os.str()), ""};
}

// mw-decompose ---------------------------------------------------------------

CommandResult cmd_mw(Context& ctx) {
  expect_groups(ctx, 1);
  FiniteGroup g = group_arg(ctx, 0);
  const unsigned p = prime_arg(ctx);
  Decomposition d = mw_decomposition(g, p);
  IntegralForm f = integral_form(d.sum);
  Json j{{"schema", kSchema},
         {"command", "mw-decompose"},
         {"group", ctx.req.groups[0]},
         {"prime", p},
         {"terms", term_list(d.sum)},
         {"integral", {{"denominator", f.denominator.get_str()},
                       {"positive", term_list(f.positive)},
                       {"negative", term_list(f.negative)}}}};
  std::ostringstream os;
  os << "BG ~ " << term_text(d.sum) << "\n";
  os << "integral form: " << f.denominator.get_str() << " BG";
  if (!f.negative.empty()) os << " + " << term_text(f.negative);
  os << " = " << term_text(f.positive) << "\n";
  Json dropped = Json::array();
  Json raw = Json::array();
  for (const auto& t : d.raw) {
    if (t.dropped && t.coeff != 0) {
      dropped.push_back({{"subgroup", describe(t.h.as_group())}, {"coeff", to_fraction_string(t.coeff)}});
      os << "dropped p-locally trivial term: (" << to_fraction_string(t.coeff) << ") B" << describe(t.h.as_group())
         << "\n";
    }
    raw.push_back({{"subgroup", describe(t.h.as_group())},
                   {"order", t.h.order()},
                   {"f", to_fraction_string(t.f)},
                   {"normalizer_index", t.normalizer_index},
                   {"coeff", to_fraction_string(t.coeff)},
                   {"reduced", describe(t.reduced)},
                   {"dropped", t.dropped}});
  }
  j["dropped"] = dropped;
  if (ctx.req.raw) {
    j["raw"] = raw;
    os << "raw terms (subgroup, f, [N:H], coeff, reduced):\n";
    for (const auto& t : d.raw)
      os << "  " << describe(t.h.as_group()) << ", " << to_fraction_string(t.f) << ", " << t.normalizer_index << ", "
         << to_fraction_string(t.coeff) << ", " << describe(t.reduced) << (t.dropped ? " (dropped)" : "") << "\n";
  }
  return {kExitOk, render(ctx.req, j, os.str()), ""};
}

// burnside-rank --------------------------------------------------------------

CommandResult cmd_burnside(Context& ctx) {
  expect_groups(ctx, 1);
  FiniteGroup g = group_arg(ctx, 0);
  const unsigned p = prime_arg(ctx);
  PsiRank r = psi_rank(g, p);
  Json j{{"schema", kSchema},     {"command", "burnside-rank"}, {"group", ctx.req.groups[0]},
         {"prime", p},            {"rank", r.rank},             {"cyclic_pprime_classes", r.cyclic_classes},
         {"matrix", r.matrix.entries}, {"pass", r.holds()}};
  std::ostringstream os;
  os << "rank Im psi: " << r.rank << "\ncyclic p'-subgroup classes: " << r.cyclic_classes
     << "\nresult: " << (r.holds() ? "PASS" : "FAIL") << "\n";
  return {r.holds() ? kExitOk : kExitNegative, render(ctx.req, j, os.str()), ""};
}

std::string error_record(const Context& ctx, const char* code, const std::string& message,
                         std::optional<std::size_t> position = std::nullopt) {
  Json e{{"error", code}, {"message", message}, {"stage", ctx.stage}};
  if (position) e["position"] = *position;
  return e.dump() + "\n";
}

}  // namespace

std::optional<Method> parse_method(const std::string& s) {
  for (Method m : {Method::Auto, Method::General, Method::NormalSylow, Method::ReducedCyclic})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

CommandResult run(const CommandRequest& request) {
  Context ctx{request};
  try {
    Limits limits = current_limits();
    if (request.order_cap) limits.order_cap = *request.order_cap;
    if (request.subgroup_cap) limits.subgroup_cap = *request.subgroup_cap;
    ScopedLimits scoped(limits);
    ctx.stage = request.command;
    const auto& c = request.command;
    if (c == "info") return cmd_info(ctx);
    if (c == "equiv") return cmd_equiv(ctx);
    if (c == "rep-table") return cmd_rep_table(ctx);
    if (c == "weyl") return cmd_weyl(ctx);
    if (c == "pointwise") return cmd_pointwise(ctx);
    if (c == "mw-decompose") return cmd_mw(ctx);
    if (c == "burnside-rank") return cmd_burnside(ctx);
    if (c == "corpus") return run_corpus(builtin_corpus(), request.filter, request.json);
    throw BadParameter("unknown command '" + c + "'");
  } catch (const ParseError& e) {
    return {kExitError, "", error_record(ctx, to_string(e.code()), e.what(), e.position())};
  } catch (const Error& e) {
    return {kExitError, "", error_record(ctx, to_string(e.code()), e.what())};
  } catch (const std::exception& e) {
    return {kExitError, "", error_record(ctx, "Internal", e.what())};
  }
}

CommandResult run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter, bool json) {
  Json rows = Json::array();
  std::ostringstream os;
  std::size_t total = 0, passed = 0;
  for (const auto& c : cases) {
    if (c.name.find(filter) == std::string::npos) continue;
    ++total;
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    passed += ok;
    rows.push_back({{"name", c.name}, {"pass", ok}, {"detail", detail}});
    os << (ok ? "PASS " : "FAIL ") << c.name << (detail.empty() ? "" : "  (" + detail + ")") << "\n";
  }
  os << "summary: " << passed << "/" << total << " passed\n";
  Json j{{"schema", kSchema}, {"command", "corpus"}, {"cases", rows}, {"passed", passed}, {"total", total}};
  return {passed == total ? kExitOk : kExitNegative, json ? j.dump(2) + "\n" : os.str(), ""};
}

}  // namespace stabletype::cli
