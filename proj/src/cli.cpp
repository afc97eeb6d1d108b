#include "bnchain/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bnchain/brill_noether.hpp"
#include "bnchain/json_io.hpp"
#include "bnchain/sampling.hpp"

namespace bnchain::cli {

namespace {

using json_io::Json;

struct Options {
  std::string format = "json";
  std::string chain;
  std::string divisor;
  std::string shape;
  std::string profile;
  int genus = 0;
  int m1 = -1;
  bool marked = false;
  bool brute = false;
  int bound = 0;
  bool count = false;
  bool list = false;
  bool maximal = false;
  int trials = 200;
  std::uint64_t seed = 1;
  int max_degree = -2;
};

int worker_count() {
  const char* env = std::getenv("BNCHAIN_THREADS");
  if (env == nullptr) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 1;
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// The chain from a positional argument, or from --genus/--profile/--m1.
ChainSpec resolve_chain(const Options& o) {
  if (!o.chain.empty()) return json_io::chain_from_json(json_io::load_argument(o.chain));
  if (o.genus < 1) throw std::invalid_argument("give a chain argument or --genus (with --profile)");
  std::vector<int> orders = o.profile.empty() ? std::vector<int>(static_cast<std::size_t>(o.genus - 1), 0)
                                              : json_io::parse_int_list(o.profile);
  std::optional<int> m1;
  if (o.m1 >= 0) m1 = o.m1;
  return ChainSpec::abstract(TorsionProfile(o.genus, std::move(orders), m1));
}

TorsionProfile resolve_profile(const Options& o) { return resolve_chain(o).profile(); }

Partition resolve_shape(const Options& o) { return Partition(json_io::parse_int_list(o.shape)); }

ChainDivisor resolve_divisor(const Options& o) { return json_io::divisor_from_json(json_io::load_argument(o.divisor)); }

std::string text_rows(const DisplacementTableau& t) {
  std::ostringstream s;
  for (std::size_t y = t.rows().size(); y-- > 0;) {
    for (std::size_t x = 0; x < t.rows()[y].size(); ++x) s << (x ? " " : "  ") << t.rows()[y][x];
    s << '\n';
  }
  return s.str();
}

int cmd_profile(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_chain(o);
  const TorsionProfile& m = spec.profile();
  if (o.format == "text") {
    out << m.str() << '\n';
  } else {
    emit(out, json_io::to_json(m));
  }
  return kExitOk;
}

int cmd_general(const Options& o, std::ostream& out) {
  const TorsionProfile m = resolve_profile(o);
  GeneralityVerdict v;
  if (o.brute) {
    v = is_general_bruteforce(m, o.marked, o.bound > 0 ? o.bound : 2 * m.genus());
  } else {
    v = o.marked ? is_general_marked(m) : is_general_unmarked(m);
  }
  if (o.format == "text") {
    out << v.reason << '\n';
    if (v.witness) out << "witness on " << v.witness->shape().str() << ":\n" << text_rows(*v.witness);
  } else {
    Json j = json_io::to_json(v);
    j["marked"] = o.marked;
    j["method"] = o.brute ? "brute-force" : "closed-form";
    emit(out, j);
  }
  return kExitOk;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
  const Partition lambda = resolve_shape(o);
  const TorsionProfile m = resolve_profile(o);
  if (o.count) {
    out << count_tableaux(lambda, m) << '\n';
    return kExitOk;
  }
  const auto all = enumerate_tableaux(lambda, m);
  if (o.format == "text") {
    for (const auto& t : all) out << t.str() << '\n';
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& t : all) list.push_back(json_io::to_json(t));
  emit(out, list);
  return kExitOk;
}

int cmd_locus(const Options& o, std::ostream& out) {
  const Partition lambda = resolve_shape(o);
  const ChainSpec spec = resolve_chain(o);
  auto comps = components(lambda, spec);
  if (o.maximal) comps = maximal_components(std::move(comps));
  std::optional<int> dim;
  for (const auto& c : comps) dim = std::max(dim.value_or(-1), c.torus.dimension());
  if (o.format == "text") {
    out << "components: " << comps.size() << '\n';
    out << "dimension: " << (dim ? std::to_string(*dim) : "empty") << '\n';
    for (const auto& c : comps) {
      out << c.tableau.str() << "  dim " << c.torus.dimension() << (c.stable ? "  stable" : "") << '\n';
    }
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& c : comps) list.push_back(json_io::to_json(c));
  emit(out, Json{{"shape", json_io::to_json(lambda)},
                 {"genus", spec.genus()},
                 {"count", comps.size()},
                 {"dimension", dim ? Json(*dim) : Json(nullptr)},
                 {"components", list}});
  return kExitOk;
}

int cmd_rank(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_chain(o);
  const ChainDivisor d = resolve_divisor(o);
  const int r = rank(d, spec);
  if (o.format == "text") {
    out << r << '\n';
  } else {
    emit(out, Json{{"degree", d.degree()}, {"rank", r}});
  }
  return kExitOk;
}

int cmd_wpartition(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_chain(o);
  const auto seq = weierstrass_sequence(standard_form(resolve_divisor(o), spec), spec);
  if (o.format == "text") {
    out << seq.back().str() << '\n';
    return kExitOk;
  }
  Json steps = Json::array();
  for (const auto& p : seq) steps.push_back(json_io::to_json(p));
  emit(out, Json{{"partition", json_io::to_json(seq.back())}, {"sequence", steps}});
  return kExitOk;
}

int cmd_standard_form(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_chain(o);
  const StandardForm f = standard_form(resolve_divisor(o), spec);
  if (o.format == "text") {
    for (std::size_t i = 0; i < f.xi.size(); ++i) out << "<" << f.xi[i] << ">_" << i + 1 << " + ";
    out << "(" << f.degree - static_cast<std::int64_t>(f.xi.size()) << ") w_" << f.xi.size() << '\n';
  } else {
    emit(out, json_io::to_json(f));
  }
  return kExitOk;
}

int cmd_class(const Options& o, std::ostream& out) {
  const ExpectedClass c = expected_class(resolve_shape(o), o.genus);
  if (o.format == "text") {
    out << "Theta^" << c.theta_power << " * " << c.coefficient << "  expected dim " << c.expected_dim << "  SYT "
        << c.syt_count << '\n';
  } else {
    emit(out, json_io::to_json(c));
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_chain(o);
  const int max_degree = o.max_degree >= -1 ? o.max_degree : 2 * spec.genus() - 2;
  const auto trials = run_verification(spec, o.trials, o.seed, max_degree, worker_count());
  int mismatches = 0;
  Json reports = Json::array();
  for (const auto& t : trials) {
    if (!t.report.match) ++mismatches;
    Json r = json_io::to_json(t.report);
    r["seed"] = t.seed;
    r["divisor"] = json_io::to_json(t.divisor);
    reports.push_back(r);
  }
  if (o.format == "text") {
    out << "trials: " << trials.size() << "  mismatches: " << mismatches << '\n';
    for (std::size_t k = 0; k < trials.size(); ++k) {
      if (trials[k].report.match) continue;
      out << "trial " << k << " seed " << trials[k].seed << ": rank_wp " << trials[k].report.rank_wp
          << " rank_oracle " << trials[k].report.rank_oracle << '\n'
          << "  " << reports[k].dump() << '\n';
    }
  } else {
    emit(out, Json{{"chain", json_io::to_json(spec)},
                   {"seed", o.seed},
                   {"trials", trials.size()},
                   {"max_degree", max_degree},
                   {"mismatches", mismatches},
                   {"reports", reports}});
  }
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brill-Noether loci on chains of cycles", "bnchain"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto chain_opts = [&](CLI::App* sub, bool positional_required) {
    auto* opt = sub->add_option("chain", o.chain, "Chain as inline JSON or a file path");
    if (positional_required) opt->required();
  };
  auto profile_opts = [&](CLI::App* sub) {
    sub->add_option("--genus", o.genus, "Genus g");
    sub->add_option("--profile", o.profile, "Torsion orders m_2,...,m_g");
    sub->add_option("--m1", o.m1, "First torsion order (abstract chains)");
  };

  auto* profile = app.add_subcommand("profile", "Torsion profile of a chain");
  chain_opts(profile, false);
  profile_opts(profile);

  auto* general = app.add_subcommand("general", "Brill-Noether generality of a torsion profile");
  chain_opts(general, false);
  profile_opts(general);
  general->add_flag("--marked", o.marked, "Marked at w_g");
  general->add_flag("--brute", o.brute, "Search tableaux instead of the closed form");
  general->add_option("--bound", o.bound, "Size bound for --brute (default 2g)");

  auto* tableaux = app.add_subcommand("tableaux", "Enumerate m-displacement tableaux");
  tableaux->add_option("--shape", o.shape, "Partition rows, e.g. 2,2")->required();
  profile_opts(tableaux);
  tableaux->add_flag("--count", o.count, "Print only the number of tableaux");
  tableaux->add_flag("--list", o.list, "List the tableaux (default)");

  auto* locus = app.add_subcommand("locus", "Torus decomposition of W^lambda");
  locus->add_option("--shape", o.shape, "Partition rows, e.g. 2,2")->required();
  chain_opts(locus, false);
  profile_opts(locus);
  locus->add_flag("--maximal", o.maximal, "Drop tori contained in another listed torus");

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a divisor");
  chain_opts(rank_cmd, true);
  rank_cmd->add_option("divisor", o.divisor, "Divisor as inline JSON or a file path")->required();

  auto* wpart = app.add_subcommand("wpartition", "Weierstrass partition of a divisor at w_g");
  chain_opts(wpart, true);
  wpart->add_option("divisor", o.divisor, "Divisor as inline JSON or a file path")->required();

  auto* sform = app.add_subcommand("standard-form", "Standard form of a divisor");
  chain_opts(sform, true);
  sform->add_option("divisor", o.divisor, "Divisor as inline JSON or a file path")->required();

  auto* cls = app.add_subcommand("class", "Expected class coefficient and SYT count");
  cls->add_option("--shape", o.shape, "Partition rows, e.g. 2,2")->required();
  cls->add_option("--genus", o.genus, "Genus g")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check ranks against the chip-firing oracle");
  chain_opts(verify, true);
  verify->add_option("--trials", o.trials, "Number of random divisors")->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed")->capture_default_str();
  verify->add_option("--max-degree", o.max_degree, "Largest degree (default 2g-2)");

  // Subcommand options after the subcommand also accept --format.
  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*profile) return cmd_profile(o, out);
    if (*general) return cmd_general(o, out);
    if (*tableaux) return cmd_tableaux(o, out);
    if (*locus) return cmd_locus(o, out);
    if (*rank_cmd) return cmd_rank(o, out);
    if (*wpart) return cmd_wpartition(o, out);
    if (*sform) return cmd_standard_form(o, out);
    if (*cls) return cmd_class(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bnchain::cli
