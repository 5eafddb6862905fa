#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "stabletype/cli.hpp"

namespace {

std::optional<std::size_t> env_cap(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0') return std::nullopt;
  return static_cast<std::size_t>(n);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace stabletype::cli;
  CLI::App app{"p-local stable equivalence of classifying spaces of finite groups"};
  app.require_subcommand(1);

  CommandRequest req;
  req.order_cap = env_cap("ORDER_CAP");
  req.subgroup_cap = env_cap("SUBGROUP_CAP");
  unsigned prime = 0;
  std::string method = "auto";

  auto add = [&](const char* name, const char* help, std::size_t groups, bool needs_prime) {
    auto* sub = app.add_subcommand(name, help);
    if (groups > 0) sub->add_option("groups", req.groups, "group descriptor(s)")->required()->expected(int(groups));
    auto* opt = sub->add_option("-p,--prime", prime, "prime");
    if (needs_prime) opt->required();
    sub->add_flag("--json", req.json, "emit JSON");
    return sub;
  };
  add("info", "orders, classes and per-prime Sylow data", 1, false);
  add("equiv", "decide stable equivalence at p", 2, true)
      ->add_option("--method", method, "auto|general|normal-sylow|reduced-cyclic")
      ->check(CLI::IsMember({"auto", "general", "normal-sylow", "reduced-cyclic"}));
  add("rep-table", "Rep(Q,G) classes with Inj/Surj/K flags", 2, true);
  add("weyl", "Weyl group of a Sylow p-subgroup inside Out(P)", 1, true);
  add("pointwise", "pointwise conjugacy of two groups of equal degree", 2, false)
      ->add_flag("--regular", req.regular, "compare regular representations instead");
  add("mw-decompose", "rational wedge decomposition of BG at p", 1, true)
      ->add_flag("--raw", req.raw, "also list the unaggregated summands");
  add("burnside-rank", "rank of psi against cyclic p'-subgroup classes", 1, true);
  auto* corpus = app.add_subcommand("corpus", "run the built-in acceptance corpus");
  corpus->add_option("--filter", req.filter, "substring of case names");
  corpus->add_flag("--json", req.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }
  const CLI::App* sub = app.get_subcommands().front();
  req.command = sub->get_name();
  if (const CLI::Option* opt = sub->get_option_no_throw("--prime"); opt && opt->count() > 0) req.prime = prime;
  req.method = *parse_method(method);

  const CommandResult r = run(req);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
