#include "abc/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "abc/apportionment.hpp"
#include "abc/axioms.hpp"
#include "abc/ip_export.hpp"
#include "abc/phragmen.hpp"
#include "abc/rules.hpp"

namespace abc {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

TieOrder parse_tie(const ElectionInstance& inst, const std::string& text) {
  if (text.empty()) return {};
  std::vector<int> order;
  for (const auto& tok : split_commas(text)) {
    std::string t = tok;
    t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return ch == '{' || ch == '}' || ch == ' '; }), t.end());
    order.push_back(parse_committee(inst, t).members.front());
  }
  return TieOrder(order);
}

void print_result(std::ostream& out, const ElectionInstance& inst, const RuleResult& r, bool trace) {
  for (const auto& w : r.committees) {
    out << format_committee(inst, w);
    if (r.score) out << "  " << r.score_name << ' ' << to_string(*r.score);
    out << '\n';
  }
  if (trace) {
    for (const auto& line : r.trace) out << "  " << line << '\n';
  }
}

std::string voter_list(const std::vector<int>& voters) {
  std::string s = "{";
  for (std::size_t i = 0; i < voters.size(); ++i) s += (i ? "," : "") + std::to_string(voters[i] + 1);
  return s + "}";
}

std::string candidate_list(const ElectionInstance& inst, const std::vector<int>& cs) {
  Committee w;
  w.members = cs;
  return format_committee(inst, w);
}

int run_check(std::ostream& out, const ElectionInstance& inst, const std::string& axiom, const Committee& w,
              const CoreParameters& core) {
  auto cohesive = [&](const std::optional<CohesiveWitness>& wit) {
    if (!wit) {
      out << "satisfied\n";
      return kExitOk;
    }
    out << "violated: level " << wit->level << " T=" << candidate_list(inst, wit->candidates)
        << " voters=" << voter_list(wit->voters) << '\n';
    return kExitViolated;
  };
  if (axiom != "condorcet" && axiom != "pareto" && axiom != "core" &&
      static_cast<int>(w.size()) != inst.committee_size()) {
    throw UsageError("committee must have exactly k members");
  }
  if (axiom == "jr") return cohesive(check_jr(inst, w));
  if (axiom == "pjr") return cohesive(check_pjr(inst, w));
  if (axiom == "ejr") return cohesive(check_ejr(inst, w));
  if (axiom == "pareto") {
    auto dom = check_pareto_optimal(inst, w);
    if (!dom) {
      out << "satisfied\n";
      return kExitOk;
    }
    out << "violated: dominated by " << format_committee(inst, *dom) << '\n';
    return kExitViolated;
  }
  if (axiom == "condorcet") {
    if (check_condorcet_committee(inst, w)) {
      out << "satisfied\n";
      return kExitOk;
    }
    out << "violated\n";
    return kExitViolated;
  }
  if (axiom == "core") {
    auto dev = find_core_violation(inst, w, core);
    if (!dev) {
      out << "satisfied\n";
      return kExitOk;
    }
    out << "violated: T=" << candidate_list(inst, dev->candidates) << " voters=" << voter_list(dev->voters) << '\n';
    return kExitViolated;
  }
  if (axiom == "priceable") {
    auto ps = check_priceability(inst, w);
    if (!ps) {
      out << "violated: no price system\n";
      return kExitViolated;
    }
    out << "satisfied: budget " << to_string(ps->budget) << '\n';
    for (int i = 0; i < inst.num_voters(); ++i) {
      for (int c = 0; c < inst.num_candidates(); ++c) {
        if (ps->payments[i][c] != 0) {
          out << "  p_" << i + 1 << '(' << inst.label(c) << ") = " << to_string(ps->payments[i][c]) << '\n';
        }
      }
    }
    return kExitOk;
  }
  if (axiom == "pr") {
    auto pr = check_perfect_representation(inst, w);
    if (pr.verdict == Verdict::not_applicable) {
      out << "not applicable: k does not divide n\n";
      return kExitNotApplicable;
    }
    if (pr.verdict == Verdict::violated) {
      out << "violated\n";
      return kExitViolated;
    }
    out << "satisfied\n";
    for (std::size_t p = 0; p < pr.partition->candidates.size(); ++p) {
      out << "  " << inst.label(pr.partition->candidates[p]) << ": " << voter_list(pr.partition->groups[p]) << '\n';
    }
    return kExitOk;
  }
  throw UsageError("unknown axiom '" + axiom + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approval-based committee elections"};
  app.require_subcommand(1);

  std::string rule;
  std::string input;
  std::string tie;
  bool trace = false;
  std::uint64_t cap = kDefaultCommitteeCap;
  auto* compute = app.add_subcommand("compute", "Winning committees under a rule");
  compute->add_option("--rule", rule, "Rule id")->required();
  compute->add_option("--input", input, "Profile file")->required();
  compute->add_option("--tie", tie, "Candidate tie order, e.g. c,a,b");
  compute->add_option("--cap", cap, "Committee search cap");
  compute->add_flag("--trace", trace, "Print the selection log");

  auto* trace_cmd = app.add_subcommand("trace", "Winning committee with the selection log");
  trace_cmd->add_option("--rule", rule, "Rule id")->required();
  trace_cmd->add_option("--input", input, "Profile file")->required();
  trace_cmd->add_option("--tie", tie, "Candidate tie order");

  std::string axiom;
  std::string committee;
  std::string gamma = "1";
  std::string eta = "0";
  std::string beta = "1";
  auto* check = app.add_subcommand("check", "Audit a committee against an axiom");
  check->add_option("--axiom", axiom, "jr|pjr|ejr|pareto|core|priceable|pr|condorcet")->required();
  check->add_option("--input", input, "Profile file")->required();
  check->add_option("--committee", committee, "Committee such as {a,b}")->required();
  check->add_option("--gamma", gamma, "Core multiplicative slack");
  check->add_option("--eta", eta, "Core additive slack");
  check->add_option("--beta", beta, "Core entitlement factor");

  std::string method;
  std::string votes;
  int seats = 0;
  auto* apportion = app.add_subcommand("apportion", "Party-list seat allocation");
  apportion->add_option("--method", method, "dhondt|sainte-lague|lrm")->required();
  apportion->add_option("--votes", votes, "Comma-separated votes")->required();
  apportion->add_option("--seats", seats, "Number of seats")->required();

  auto* export_cmd = app.add_subcommand("export-ip", "Integer program for pav or mav");
  export_cmd->add_option("--rule", rule, "pav|mav")->required();
  export_cmd->add_option("--input", input, "Profile file")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*apportion) {
      ApportionmentInstance ai;
      for (const auto& tok : split_commas(votes)) ai.votes.push_back(std::stoll(tok));
      ai.seats = seats;
      Apportionment result;
      if (method == "dhondt") {
        result = dhondt(ai);
      } else if (method == "sainte-lague") {
        result = sainte_lague(ai);
      } else if (method == "lrm") {
        result = largest_remainder(ai);
      } else {
        throw UsageError("unknown method '" + method + "'");
      }
      for (std::size_t p = 0; p < result.seats.size(); ++p) out << (p ? " " : "") << result.seats[p];
      out << '\n';
      return kExitOk;
    }
    ElectionInstance inst = load_profile(input);
    if (*export_cmd) {
      if (rule != "pav" && rule != "mav") throw UsageError("export-ip supports pav and mav");
      out << export_ip(inst, rule);
      return kExitOk;
    }
    if (*check) {
      CoreParameters core{parse_rational(gamma), parse_rational(eta), parse_rational(beta)};
      return run_check(out, inst, axiom, parse_committee(inst, committee), core);
    }
    RuleOptions opts;
    opts.tie = parse_tie(inst, tie);
    opts.search.cap = cap;
    if (*trace_cmd) trace = true;
    print_result(out, inst, compute_rule(rule, inst, opts), trace);
    return kExitOk;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace abc
