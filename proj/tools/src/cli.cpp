#include "mnrule/cli.hpp"

#include "mnrule/error.hpp"
#include "mnrule/format.hpp"
#include "mnrule/json_codec.hpp"
#include "mnrule/schubert.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace mnrule::cli {

namespace {

struct Globals {
  bool json = false;
  bool verify = false;
  std::optional<int> max_support;
};

// What a command produced: the text rendering, the JSON result, and an
// optional verification verdict.
struct Outcome {
  std::string text;
  Json result;
  std::optional<bool> verified;
};

Permutation parse_permutation(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception&) {
      throw InvalidArgument("malformed permutation array: " + text);
    }
    return permutation_from_json(j);
  }
  return Permutation::parse(text);
}

void require_positive(int value, const char* name) {
  if (value < 1) throw InvalidArgument(std::string(name) + " must be positive");
}

SparsePoly elementary_poly(int a, int k) { return schur_to_monomials(Partition(std::vector<int>(a, 1)), k); }

SparsePoly complete_poly(int b, int k) { return schur_to_monomials(Partition({b}), k); }

std::string check_table(const CheckReport& report) {
  std::size_t width = 0;
  for (const auto& line : report.lines) width = std::max(width, line.name.size());
  std::ostringstream os;
  for (const auto& line : report.lines) {
    os << (line.pass ? "PASS  " : "FAIL  ") << line.name << std::string(width - line.name.size() + 2, ' ')
       << line.detail << '\n';
  }
  os << (report.all_pass() ? "selfcheck: all checks passed" : "selfcheck: FAILED");
  return os.str();
}

CheckLine expect(std::string name, bool pass, std::string detail) { return {std::move(name), pass, std::move(detail)}; }

}  // namespace

CheckReport selfcheck(bool mutate_het) {
  CheckReport report;

  {
    const auto w = Permutation::parse("34165278");
    struct Expected {
      const char* u;
      std::vector<int> cycle;
      int coeff;
    };
    const std::vector<Expected> expected = {
        {"35671248", {3, 4, 7, 2, 5}, 1},  {"36471258", {2, 4, 7, 5, 3}, 1},  {"45362178", {1, 2, 5, 6, 3}, 1},
        {"46173258", {1, 2, 4, 7, 5}, 1},  {"34672158", {3, 4, 7, 5, 6}, -1}, {"34681257", {3, 4, 8, 7, 5}, -1},
        {"36184257", {2, 4, 8, 7, 5}, -1},
    };
    SchubertExpansion got;
    bool cycles_ok = true;
    // The worked example lists the terms inside S_8.
    for (const auto& t : mn_schubert_terms(w, 4, 4, 8)) {
      const int sign = ((t.height + (mutate_het ? 0 : 1)) % 2 == 0) ? 1 : -1;
      got.add(t.u, sign);
      cycles_ok = cycles_ok && cycle_type_check(t.eta, 5) && w * t.eta == t.u;
    }
    SchubertExpansion want;
    for (const auto& e : expected) {
      want.add(Permutation::parse(e.u), e.coeff);
      cycles_ok = cycles_ok && w * Permutation::cycle(e.cycle) == Permutation::parse(e.u);
    }
    report.lines.push_back(
        expect("p4 * S_34165278, k=4, in S_8", got == want && cycles_ok, got == want ? format(got) : "got " + format(got)));
  }

  {
    const GrContext ctx(4, 8);
    QuantumClass want(ctx);
    want.add(0, Partition({3, 3, 3, 2}), 1);
    want.add(0, Partition({4, 4, 3}), 1);
    want.add(1, Partition({3}), 1);
    want.add(1, Partition({1, 1, 1}), 1);
    const auto got = quantum_mn(Partition({3, 2, 1}), 5, ctx);
    const bool pass = got == want && oracle_quantum_mn(Partition({3, 2, 1}), 5, ctx) == want;
    report.lines.push_back(expect("p5 * sigma_(3,2,1) in Gr(4,8)", pass, format(got)));
  }

  {
    const GrContext ctx(4, 8);
    const auto core = n_core(Partition({12, 10, 7, 3}), 8);
    QuantumClass want(ctx);
    want.add(3, Partition({4, 2, 2}), 1);
    const auto psi = psi_reduce(Partition({12, 10, 7, 3}), ctx);
    const bool pass = core.core == Partition({4, 2, 2}) && core.hooks_removed == 3 && psi == want;
    report.lines.push_back(expect("8-core of (12,10,7,3)", pass,
                                  "core " + core.core.to_string() + ", s=" + std::to_string(core.hooks_removed) +
                                      ", psi = " + format(psi)));
  }

  {
    const GrContext ctx(4, 8);
    const auto core = n_core(Partition({9, 8, 5, 2}), 8);
    const auto psi = psi_reduce(Partition({9, 8, 5, 2}), ctx);
    const bool pass = core.core == Partition({7, 4, 3, 2}) && psi.empty();
    report.lines.push_back(expect("8-core of (9,8,5,2)", pass,
                                  "core " + core.core.to_string() + ", psi = " + format(psi)));
  }

  for (auto& line : ideal_vanishing_check(GrContext(4, 8)).lines) {
    line.name = "Gr(4,8) " + line.name;
    report.lines.push_back(std::move(line));
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Murnaghan-Nakayama rules for Schubert polynomials and quantum cohomology", "mnrule"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json, "Print one JSON object instead of text");
  app.add_flag("--verify", g.verify, "Check the result against an independent oracle");
  app.add_option("--max-support", g.max_support, "Largest point a permutation may move during enumeration");

  std::function<Outcome()> action;

  std::string partition_text;
  std::string word;
  std::string poly_text;
  int r = 0, k = 0, n = 0, e = 0, h = 0;
  std::optional<int> core_k;
  bool mutate_het = false;

  auto* mn_schur = app.add_subcommand("mn-schur", "p_r * s_lambda in k variables");
  mn_schur->add_option("--partition", partition_text, "Comma separated parts, '' for empty")->required();
  mn_schur->add_option("--r", r, "Power sum degree")->required();
  mn_schur->add_option("--k", k, "Number of variables")->required();
  mn_schur->callback([&] {
    action = [&] {
      require_positive(r, "r");
      require_positive(k, "k");
      const auto lambda = parse_partition(partition_text);
      const auto f = mn_classical(lambda, r, k);
      Outcome o{format(f), to_json(f), std::nullopt};
      if (g.verify) o.verified = to_polynomial(f, k) == power_sum_poly(r, k) * schur_to_monomials(lambda, k);
      return o;
    };
  });

  auto* mn_schub = app.add_subcommand("mn-schubert", "p_r(x1..xk) * S_w in the Schubert basis");
  mn_schub->add_option("--w", word, "One-line word, e.g. 34165278 or 3,4,1 or [3,4,1]")->required();
  mn_schub->add_option("--k", k)->required();
  mn_schub->add_option("--r", r)->required();
  mn_schub->callback([&] {
    action = [&] {
      require_positive(r, "r");
      require_positive(k, "k");
      const auto w = parse_permutation(word);
      if (g.max_support) require_positive(*g.max_support, "--max-support");
      const auto f = mn_schubert(w, k, r, g.max_support);
      Outcome o{format(f), to_json(f), std::nullopt};
      if (g.verify) {
        // The oracle sees all of S_infinity; compare on the requested support.
        SchubertExpansion expected;
        for (const auto& [u, c] : expand_in_schubert(power_sum_poly(r, k) * schubert_poly(w))) {
          if (!g.max_support || u.size() <= *g.max_support) expected.add(u, c);
        }
        o.verified = f == expected;
      }
      return o;
    };
  });

  auto* mn_quantum = app.add_subcommand("mn-quantum", "p_r * sigma_lambda in qH*(Gr(k,n))");
  mn_quantum->add_option("--partition", partition_text)->required();
  mn_quantum->add_option("--r", r)->required();
  mn_quantum->add_option("--k", k)->required();
  mn_quantum->add_option("--n", n)->required();
  mn_quantum->callback([&] {
    action = [&] {
      require_positive(r, "r");
      const GrContext ctx(k, n);
      const auto lambda = parse_partition(partition_text);
      if (!ctx.contains(lambda)) {
        throw InvalidArgument(lambda.to_string() + " does not fit in the " + std::to_string(k) + " x " +
                              std::to_string(n - k) + " box");
      }
      const auto f = quantum_mn_extended(lambda, r, ctx);
      Outcome o{format(f), to_json(f), std::nullopt};
      if (g.verify) o.verified = f == psi_reduce(mn_classical(lambda, r, k), ctx);
      return o;
    };
  });

  auto* pieri = app.add_subcommand("pieri", "e_a * s_lambda or h_b * s_lambda in k variables");
  pieri->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  pieri->add_option("--partition", partition_text)->required();
  pieri->add_option("--k", k)->required();
  auto* e_opt = pieri->add_option("--e", e, "Multiply by e_a");
  auto* h_opt = pieri->add_option("--h", h, "Multiply by h_b");
  e_opt->excludes(h_opt);
  pieri->callback([&] {
    action = [&] {
      require_positive(k, "k");
      const auto lambda = parse_partition(partition_text);
      if (e_opt->count() + h_opt->count() != 1) throw InvalidArgument("pieri needs exactly one of --e, --h");
      const bool use_e = e_opt->count() > 0;
      const int size = use_e ? e : h;
      require_positive(size, use_e ? "--e" : "--h");
      const auto f = use_e ? pieri_e(lambda, size, k) : pieri_h(lambda, size, k);
      Outcome o{format(f), to_json(f), std::nullopt};
      if (g.verify) {
        const auto factor = use_e ? elementary_poly(size, k) : complete_poly(size, k);
        o.verified = to_polynomial(f, k) == factor * schur_to_monomials(lambda, k);
      }
      return o;
    };
  });

  auto* monk_cmd = app.add_subcommand("monk", "(x1 + ... + xk) * S_w");
  monk_cmd->add_option("--w", word)->required();
  monk_cmd->add_option("--k", k)->required();
  monk_cmd->callback([&] {
    action = [&] {
      require_positive(k, "k");
      const auto w = parse_permutation(word);
      const auto f = monk(w, k);
      Outcome o{format(f), to_json(f), std::nullopt};
      if (g.verify) o.verified = f == expand_in_schubert(power_sum_poly(1, k) * schubert_poly(w));
      return o;
    };
  });

  auto* expand = app.add_subcommand("schubert-expand", "Expand a polynomial in Schubert polynomials");
  expand->add_option("--poly", poly_text, "e.g. '3*x1^2*x3 - x2'")->required();
  expand->callback([&] {
    action = [&] {
      const auto f = SparsePoly::parse(poly_text);
      const auto expansion = expand_in_schubert(f);
      Outcome o{format(expansion), to_json(expansion), std::nullopt};
      if (g.verify) o.verified = to_polynomial(expansion) == f;
      return o;
    };
  });

  auto* core_cmd = app.add_subcommand("core", "n-core of a partition");
  core_cmd->add_option("--partition", partition_text)->required();
  core_cmd->add_option("--n", n)->required();
  core_cmd->add_option("--k", core_k, "Also report the sign (-1)^(k s - sum of heights)");
  core_cmd->callback([&] {
    action = [&] {
      const auto result = n_core(parse_partition(partition_text), n);
      std::ostringstream text;
      text << "core " << result.core.to_string() << "  s=" << result.hooks_removed
           << "  height_sum=" << result.height_sum;
      Json j = to_json(result);
      if (core_k) {
        require_positive(*core_k, "k");
        const int sign = ((*core_k * result.hooks_removed - result.height_sum) % 2 == 0) ? 1 : -1;
        text << "  sign=" << (sign > 0 ? "+1" : "-1");
        j["sign"] = sign;
      }
      return Outcome{text.str(), j, std::nullopt};
    };
  });

  auto* self = app.add_subcommand("selfcheck", "Run the built-in worked examples");
  self->add_flag("--mutate-het", mutate_het, "Negative control: flip the het sign convention")
      ->group("");
  self->callback([&] {
    action = [&] {
      const auto report = selfcheck(mutate_het);
      return Outcome{check_table(report), to_json(report), report.all_pass()};
    };
  });

  // CLI11 wants argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    if (ex.get_exit_code() != 0) err << "run 'mnrule --help' for usage\n";
    return ex.get_exit_code() == 0 ? kOk : kUsage;
  }

  if (g.max_support && !mn_schub->parsed()) {
    err << "error: --max-support applies only to mn-schubert\n";
    return kUsage;
  }
  const bool verify_applies = !core_cmd->parsed() && !self->parsed();
  if (g.verify && !verify_applies) {
    err << "error: --verify does not apply to this command\n";
    return kUsage;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const InvalidArgument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const UnsupportedArgument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& ex) {
    err << "error: " << ex.what() << " (narrow the input or raise the cap)\n";
    return kUsage;
  } catch (const std::logic_error& ex) {
    err << "internal check failed: " << ex.what() << '\n';
    return kMismatch;
  }

  const bool is_selfcheck = self->parsed();
  if (g.json) {
    Json doc;
    doc["command"] = app.get_subcommands().front()->get_name();
    if (is_selfcheck) {
      doc["report"] = outcome.result;
    } else {
      doc["result"] = outcome.result;
      if (outcome.verified) doc["verify"] = *outcome.verified ? "MATCH" : "MISMATCH";
    }
    out << doc.dump() << '\n';
  } else {
    out << outcome.text << '\n';
    if (outcome.verified && !is_selfcheck) out << "verify: " << (*outcome.verified ? "MATCH" : "MISMATCH") << '\n';
  }
  return outcome.verified.value_or(true) ? kOk : kMismatch;
}

}  // namespace mnrule::cli
