#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "quasipolar/affine_group.hpp"
#include "quasipolar/error.hpp"
#include "quasipolar/golden.hpp"
#include "quasipolar/residue_ring.hpp"
#include "quasipolar/verification.hpp"

namespace quasipolar::cli {

namespace {

using nlohmann::json;

json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

std::string group_name(GroupKind kind) { return std::string(to_string(kind)); }

// Emits one document in the requested format. Text output is written directly
// by each command; JSON is dumped with sorted keys and two-space indent.
void emit_json(std::ostream& os, const json& doc) { os << doc.dump(2) << '\n'; }

ScanOptions scan_options(const RunConfig& config) {
  ScanOptions options;
  if (config.budget_max_n) options.budget = Budget::with_max_n(*config.budget_max_n);
  options.workers = std::max(1U, config.workers);
  return options;
}

Strategy pick_strategy(const RunConfig& config, const ScanOptions& options) {
  if (config.strategy) return *config.strategy;
  if (config.n <= options.budget.max_n_bruteforce || config.group != GroupKind::affine) {
    return Strategy::bruteforce;
  }
  return Strategy::via_mq;
}

std::string polarity_text(const Permutation& p) {
  if (auto g = as_affine(p)) return to_string(*g);
  return to_string(p);
}

// --- quasipolarities ------------------------------------------------------

void check_affine_quasipolarities(Modulus n) {
  std::vector<AffineMap> filtered;
  for (const AffineMap& g : enumerate_group(n)) {
    if (is_quasipolarity_bruteforce(g)) filtered.push_back(g);
    if (is_quasipolarity_bruteforce(g) != is_quasipolarity_characterized(g)) {
      throw VerificationFailure("characterization disagrees with brute force at " + to_string(g));
    }
  }
  if (filtered != enumerate_quasipolarities(n)) {
    throw VerificationFailure("generated quasipolarities differ from the brute-force filter");
  }
}

void quasipolarities_affine(const RunConfig& config, Modulus n, std::ostream& os) {
  if (config.check_enabled()) check_affine_quasipolarities(n);
  const auto classes = quasipolarity_conjugacy(n);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();

  switch (config.format) {
    case Format::text:
      os << "n = " << n.n() << ", group = affine, order " << n.n() * euler_phi(n) << '\n';
      os << classes.size() << " conjugacy classes, " << total << " quasipolarities\n";
      for (const auto& c : classes) {
        os << "  v = " << c.representative.v() << "  u in {";
        for (std::size_t i = 0; i < c.members.size(); ++i) {
          os << (i ? ", " : "") << c.members[i].u();
        }
        os << "}  orbit " << c.members.size() << "  stabilizer " << c.stabilizer_size << '\n';
      }
      break;
    case Format::json: {
      json doc{{"n", n.n()}, {"group", "affine"}, {"count", total}, {"classes", json::array()}};
      for (const auto& c : classes) {
        json us = json::array();
        for (const auto& m : c.members) us.push_back(m.u());
        doc["classes"].push_back({{"v", c.representative.v()},
                                  {"u", us},
                                  {"representative", to_string(c.representative)},
                                  {"orbit_size", c.members.size()},
                                  {"stabilizer_size", c.stabilizer_size}});
      }
      emit_json(os, doc);
      break;
    }
    case Format::csv:
      os << "n,group,v,u,orbit_size,stabilizer_size\n";
      for (const auto& c : classes) {
        for (const auto& m : c.members) {
          os << n.n() << ",affine," << m.v() << ',' << m.u() << ',' << c.members.size() << ','
             << c.stabilizer_size << '\n';
        }
      }
      break;
  }
}

void quasipolarities_generic(const RunConfig& config, const PermGroup& group, Modulus n,
                             std::ostream& os) {
  const auto classes = quasipolarity_classes(group);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  const std::string name = group_name(config.group);

  switch (config.format) {
    case Format::text:
      os << "n = " << n.n() << ", group = " << name << ", order " << group.order() << '\n';
      os << classes.size() << " conjugacy classes, " << total << " quasipolarities\n";
      for (const auto& c : classes) {
        os << "  " << polarity_text(c.representative) << "  orbit " << c.members.size()
           << "  centralizer " << c.centralizer_size << '\n';
      }
      break;
    case Format::json: {
      json doc{{"n", n.n()}, {"group", name}, {"count", total}, {"classes", json::array()}};
      for (const auto& c : classes) {
        json members = json::array();
        for (const auto& m : c.members) members.push_back(polarity_text(m));
        doc["classes"].push_back({{"representative", polarity_text(c.representative)},
                                  {"members", members},
                                  {"orbit_size", c.members.size()},
                                  {"stabilizer_size", c.centralizer_size}});
      }
      emit_json(os, doc);
      break;
    }
    case Format::csv:
      os << "n,group,v,u,orbit_size,stabilizer_size\n";
      for (const auto& c : classes) {
        for (const auto& m : c.members) {
          const auto affine = as_affine(m);
          os << n.n() << ',' << name << ',' << (affine ? std::to_string(affine->v()) : "") << ','
             << (affine ? std::to_string(affine->u()) : "") << ',' << c.members.size() << ','
             << c.centralizer_size << '\n';
        }
      }
      break;
  }
}

// --- strong ---------------------------------------------------------------

void strong_command(const RunConfig& config, const PermGroup& group, Modulus n,
                    const ScanOptions& options, std::ostream& os) {
  const Strategy strategy = pick_strategy(config, options);
  const auto classes = strong_classes(group, n, strategy, options);
  if (config.check_enabled() && config.group == GroupKind::affine) {
    const Strategy other = strategy == Strategy::bruteforce ? Strategy::via_mq : Strategy::bruteforce;
    const auto again = strong_classes(group, n, other, options);
    bool same = again.size() == classes.size();
    for (std::size_t i = 0; same && i < classes.size(); ++i) {
      same = again[i].representative == classes[i].representative &&
             again[i].strength.polarity == classes[i].strength.polarity;
    }
    if (!same) throw VerificationFailure("strong classes differ between strategies");
  }
  const std::string name = group_name(config.group);
  const std::string strategy_name = strategy == Strategy::bruteforce ? "bruteforce" : "via_mq";

  switch (config.format) {
    case Format::text:
      os << "n = " << n.n() << ", group = " << name << ", strategy = " << strategy_name << '\n';
      os << classes.size() << " strong classes\n";
      for (const auto& c : classes) {
        os << "  " << mask_hex(c.representative.mask(), static_cast<int>(n.n())) << "  {";
        const auto elements = c.representative.elements();
        for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? "," : "") << elements[i];
        os << "}  polarity " << polarity_text(*c.strength.polarity) << '\n';
      }
      break;
    case Format::json: {
      json doc{{"n", n.n()},
               {"group", name},
               {"strategy", strategy_name},
               {"count", classes.size()},
               {"classes", json::array()}};
      for (const auto& c : classes) {
        json entry{{"mask", mask_hex(c.representative.mask(), static_cast<int>(n.n()))},
                   {"elements", c.representative.elements()},
                   {"orbit_size", c.orbit_size}};
        if (auto g = as_affine(*c.strength.polarity)) {
          entry["polarity"] = {{"u", g->u()}, {"v", g->v()}};
        } else {
          entry["polarity"] = to_string(*c.strength.polarity);
        }
        doc["classes"].push_back(entry);
      }
      emit_json(os, doc);
      break;
    }
    case Format::csv:
      os << "n,group,mask_hex,polarity_u,polarity_v\n";
      for (const auto& c : classes) {
        const auto g = as_affine(*c.strength.polarity);
        os << n.n() << ',' << name << ',' << mask_hex(c.representative.mask(), static_cast<int>(n.n()))
           << ',' << (g ? std::to_string(g->u()) : "") << ',' << (g ? std::to_string(g->v()) : "")
           << '\n';
      }
      break;
  }
}

// --- bounds ---------------------------------------------------------------

void bounds_command(const RunConfig& config, const PermGroup& group, Modulus n,
                    const ScanOptions& options, std::ostream& os) {
  const BoundReport r = bounds(group, n, options);
  if (config.check_enabled() && config.group == GroupKind::affine) {
    Rational formula(0);
    for (const auto& c : quasipolarity_conjugacy(n)) {
      formula += Rational(checked::pow2(static_cast<int>(n.k())), c.stabilizer_size);
    }
    if (formula != r.cota) throw VerificationFailure("cota from sigma*phi differs from brute force");
  }
  if (!r.consistent()) throw VerificationFailure("bound chain violated");
  const std::string name = group_name(config.group);

  switch (config.format) {
    case Format::text:
      os << "n = " << n.n() << ", group = " << name << ", order " << r.group_order << '\n';
      os << "  exact strong count  " << r.exact_strong_count << '\n';
      os << "  cota                " << r.cota << "  (floor " << r.cota_floor << ")\n";
      if (r.closed_form) os << "  closed form         " << *r.closed_form << '\n';
      os << "  EKR                 " << r.ekr << '\n';
      os << "  Purdy               " << r.purdy << '\n';
      os << "  Sperner             " << r.sperner << '\n';
      os << "  quasipolarity classes " << r.classes.size() << '\n';
      for (const auto& c : r.classes) {
        os << "    " << polarity_text(c.representative) << "  size " << c.members.size()
           << "  centralizer " << c.centralizer_size << '\n';
      }
      break;
    case Format::json: {
      json classes = json::array();
      for (const auto& c : r.classes) {
        classes.push_back({{"representative", polarity_text(c.representative)},
                           {"size", c.members.size()},
                           {"centralizer_size", c.centralizer_size}});
      }
      emit_json(os, json{{"n", n.n()},
                         {"group", name},
                         {"group_order", r.group_order},
                         {"exact_strong_count", r.exact_strong_count},
                         {"sperner", r.sperner},
                         {"purdy", r.purdy},
                         {"ekr", r.ekr},
                         {"cota", to_json(r.cota)},
                         {"cota_floor", r.cota_floor},
                         {"closed_form", r.closed_form ? to_json(*r.closed_form) : json(nullptr)},
                         {"classes", classes}});
      break;
    }
    case Format::csv:
      os << "n,group,exact_strong_count,sperner,purdy,ekr,cota_num,cota_den,cota_floor,"
            "closed_form_num,closed_form_den\n";
      os << n.n() << ',' << name << ',' << r.exact_strong_count << ',' << r.sperner << ','
         << r.purdy << ',' << r.ekr << ',' << r.cota.num() << ',' << r.cota.den() << ','
         << r.cota_floor << ',' << (r.closed_form ? std::to_string(r.closed_form->num()) : "")
         << ',' << (r.closed_form ? std::to_string(r.closed_form->den()) : "") << '\n';
      break;
  }
}

// --- verify ---------------------------------------------------------------

int verify_command(const RunConfig& config, const ScanOptions& options, std::ostream& os) {
  VerifyConfig vc;
  vc.kind = config.group;
  vc.n_max = config.n_max;
  vc.check = config.check.value_or(config.n_max <= 12);
  vc.options = options;
  const auto results = verify_properties(vc);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });

  switch (config.format) {
    case Format::text:
      for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
      }
      os << (all ? "all properties hold" : "verification FAILED") << '\n';
      break;
    case Format::json: {
      json props = json::array();
      for (const auto& r : results) {
        props.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      emit_json(os, json{{"group", group_name(config.group)},
                         {"n_max", config.n_max},
                         {"check", vc.check},
                         {"passed", all},
                         {"properties", props}});
      break;
    }
    case Format::csv:
      os << "property,passed,detail\n";
      for (const auto& r : results) {
        os << r.name << ',' << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
      }
      break;
  }
  return all ? kExitOk : kExitVerificationFailure;
}

// --- export ---------------------------------------------------------------

int export_command(const RunConfig& config, const PermGroup& group, Modulus n,
                   const ScanOptions& options, std::ostream& err) {
  const auto classes = strong_classes(group, n, pick_strategy(config, options), options);
  const BoundReport r = bounds(group, n, options);
  const std::string text = format_golden(make_golden(n, config.group, classes, r.cota));
  const std::string path =
      config.output.value_or(group_name(config.group) + "_" + std::to_string(n.n()) + ".csv");
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return kExitUsage;
  }
  file << text;
  err << "wrote " << classes.size() << " strong classes to " << path << '\n';
  return kExitOk;
}

int dispatch(const RunConfig& config, std::ostream& os, std::ostream& err) {
  const ScanOptions options = scan_options(config);
  if (config.command == Command::verify) return verify_command(config, options, os);

  if (config.group == GroupKind::symmetric && config.n > kMaxSymmetricDegree) {
    throw std::invalid_argument("symmetric group is limited to n <= " + std::to_string(kMaxSymmetricDegree));
  }
  const Modulus n(config.n);
  const PermGroup group = builtin_group(config.group, n, options.budget.max_group_order);
  switch (config.command) {
    case Command::quasipolarities:
      if (config.group == GroupKind::affine) {
        quasipolarities_affine(config, n, os);
      } else {
        quasipolarities_generic(config, group, n, os);
      }
      return kExitOk;
    case Command::strong:
      strong_command(config, group, n, options, os);
      return kExitOk;
    case Command::bounds:
      bounds_command(config, group, n, options, os);
      return kExitOk;
    case Command::export_golden:
      return export_command(config, group, n, options, err);
    case Command::verify:
      break;
  }
  return kExitOk;
}

}  // namespace

bool RunConfig::check_enabled() const { return check.value_or(n <= 12); }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output && config.command != Command::export_golden) {
      std::ostringstream buffer;
      const int code = dispatch(config, buffer, err);
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << *config.output << '\n';
        return kExitUsage;
      }
      file << buffer.str();
      return code;
    }
    return dispatch(config, out, err);
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (raise with --budget or ANTICHAIN_BUDGET)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasipolarities and strong dichotomies of Z_n under affine, dihedral and symmetric groups"};
  app.require_subcommand(1);

  RunConfig config;
  std::string group = "affine";
  std::string format = "text";
  std::string strategy;
  bool check = false, no_check = false;
  std::optional<int> budget;
  std::string output;

  const std::map<std::string, Command> commands{
      {"quasipolarities", Command::quasipolarities},
      {"strong", Command::strong},
      {"bounds", Command::bounds},
      {"verify", Command::verify},
      {"export", Command::export_golden},
  };
  const std::map<std::string, std::string> descriptions{
      {"quasipolarities", "List quasipolarity conjugacy classes"},
      {"strong", "List canonical strong dichotomy classes with their polarities"},
      {"bounds", "Evaluate every antichain bound exactly"},
      {"verify", "Run the invariant suite for all even n up to --n-max"},
      {"export", "Write the golden file of strong classes"},
  };

  std::vector<CLI::App*> subs;
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    if (command == Command::verify) {
      sub->add_option("--n-max", config.n_max, "Largest even n to check")->default_val(12);
    } else {
      sub->add_option("--n", config.n, "Even modulus n = 2k")->required();
    }
    sub->add_option("--group", group, "affine | dihedral | symmetric")
        ->check(CLI::IsMember({"affine", "dihedral", "symmetric"}))
        ->default_val("affine");
    sub->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");
    sub->add_flag("--check", check, "Force brute-force cross-validation");
    sub->add_flag("--no-check", no_check, "Skip brute-force cross-validation");
    sub->add_option("--budget", budget, "Raise enumeration limits to this n");
    sub->add_option("--workers", config.workers, "Worker threads for scans")->default_val(1);
    sub->add_option("--output,-o", output, "Write output to this path");
    if (command == Command::strong || command == Command::export_golden) {
      sub->add_option("--strategy", strategy, "bruteforce | via_mq")
          ->check(CLI::IsMember({"bruteforce", "via_mq"}));
    }
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (CLI::App* sub : subs) {
    if (sub->parsed()) config.command = commands.at(sub->get_name());
  }
  if (check && no_check) {
    err << "error: --check and --no-check are exclusive\n";
    return kExitUsage;
  }
  if (check) config.check = true;
  if (no_check) config.check = false;
  config.group = parse_group_kind(group);
  config.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (!strategy.empty()) config.strategy = strategy == "via_mq" ? Strategy::via_mq : Strategy::bruteforce;
  if (!output.empty()) config.output = output;

  if (budget) {
    config.budget_max_n = budget;
  } else if (const char* env = std::getenv("ANTICHAIN_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      config.budget_max_n = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: ANTICHAIN_BUDGET must be an integer, got '" << env << "'\n";
      return kExitUsage;
    }
  }
  return run(config, out, err);
}

}  // namespace quasipolar::cli
