#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abc/cli.hpp"
#include "abc/ip_export.hpp"
#include "abc/nonstandard.hpp"
#include "abc/rules.hpp"
#include "abc/thiele.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abc;

namespace {

const std::string kEx1 = std::string(ABC_TEST_DATA) + "/ex1.abc";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::string write_temp(const ElectionInstance& inst, const std::string& tag) {
  auto path = std::filesystem::temp_directory_path() / ("abc_cli_" + tag + ".abc");
  std::ofstream(path) << serialize_profile(inst);
  return path.string();
}

std::string expected_output(const ElectionInstance& inst, const RuleResult& r) {
  std::string s;
  for (const auto& w : r.committees) {
    s += format_committee(inst, w);
    if (r.score) s += "  " + r.score_name + " " + to_string(*r.score);
    s += "\n";
  }
  return s;
}

std::vector<Rational> assignment(const IpModel& m) { return std::vector<Rational>(m.variables.size(), 0); }

void set(const IpModel& m, std::vector<Rational>& values, const std::string& name, const Rational& v) {
  int idx = m.index_of(name);
  REQUIRE(idx >= 0);
  values[idx] = v;
}

}  // namespace

TEST_CASE("compute on the example file") {
  Run pav = cli({"compute", "--rule", "pav", "--input", kEx1});
  CHECK(pav.code == kExitOk);
  CHECK(pav.out == "{a,b,c,f}  score 83/6\n");

  Run monroe = cli({"compute", "--rule", "monroe", "--input", kEx1});
  CHECK(lines(monroe.out) == std::vector<std::string>{
                                 "{a,b,c,e}  score 10", "{a,b,c,f}  score 10", "{a,b,c,g}  score 10",
                                 "{a,b,d,f}  score 10", "{a,c,d,f}  score 10", "{b,c,d,f}  score 10"});

  Run lexmin = cli({"compute", "--rule", "lexmin-phragmen", "--input", kEx1});
  CHECK(lexmin.out == "{a,b,c,f}  max load 1/2\n");

  Run mav = cli({"compute", "--rule", "mav", "--input", kEx1});
  CHECK(lines(mav.out).size() == 22);
  for (const auto& line : lines(mav.out)) CHECK(line.ends_with("  max distance 5"));
}

TEST_CASE("traces") {
  Run seq = cli({"compute", "--rule", "seq-phragmen", "--input", kEx1, "--trace"});
  CHECK(seq.code == kExitOk);
  auto ls = lines(seq.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "{a,b,c,d}");
  CHECK(ls[1] == "  round 1: a load 1/8");
  CHECK(ls[2].ends_with("load 11/32"));
  CHECK(ls[3].ends_with("load 55/128"));
  CHECK(ls[4].ends_with("load 5/8"));

  Run rx = cli({"trace", "--rule", "rule-x", "--input", kEx1});
  auto rl = lines(rx.out);
  REQUIRE(rl.size() >= 3);
  CHECK(rl[0] == "{a,b,c,d}");
  CHECK(rl[1] == "  phase 1: a rho 1/8");
  CHECK(rl[2] == "  phase 2: round 2: b load 11/32");
}

TEST_CASE("tie order reaches the rule") {
  Run flipped = cli({"compute", "--rule", "seq-phragmen", "--input", kEx1, "--tie", "b,a,c,d,e,f,g"});
  CHECK(flipped.code == kExitOk);
  ElectionInstance inst = fx::running();
  RuleOptions opts;
  opts.tie = TieOrder({1, 0, 2, 3, 4, 5, 6});
  CHECK(flipped.out == expected_output(inst, compute_rule("seq-phragmen", inst, opts)));
}

TEST_CASE("apportion") {
  Run lrm = cli({"apportion", "--method", "lrm", "--votes", "50,31", "--seats", "4"});
  CHECK(lrm.code == kExitOk);
  CHECK(lrm.out == "2 2\n");
  CHECK(cli({"apportion", "--method", "dhondt", "--votes", "50,31", "--seats", "4"}).out == "3 1\n");
  CHECK(cli({"apportion", "--method", "sainte-lague", "--votes", "60,20,10,8,2", "--seats", "10"}).out ==
        "6 2 1 1 0\n");
  CHECK(cli({"apportion", "--method", "hare", "--votes", "1", "--seats", "1"}).code == kExitUsage);
}

TEST_CASE("check exit codes") {
  Run ejr = cli({"check", "--axiom", "ejr", "--input", kEx1, "--committee", "{a,b,c,d}"});
  CHECK(ejr.code == kExitOk);
  CHECK(ejr.out == "satisfied\n");
  Run pr = cli({"check", "--axiom", "pr", "--input", kEx1, "--committee", "{a,b,c,e}"});
  CHECK(pr.code == kExitViolated);
  CHECK(pr.out == "violated\n");
  Run pareto = cli({"check", "--axiom", "pareto", "--input", kEx1, "--committee", "{a,b,c,d}"});
  CHECK(pareto.code == kExitOk);

  std::string odd = write_temp(fx::profile(3, 2, {{3, "a"}}), "odd");
  Run na = cli({"check", "--axiom", "pr", "--input", odd, "--committee", "{a,b}"});
  CHECK(na.code == kExitNotApplicable);
  CHECK(na.out.starts_with("not applicable"));

  std::string pareto_file = write_temp(fx::monroe_pareto(), "pareto");
  Run dom = cli({"check", "--axiom", "pareto", "--input", pareto_file, "--committee", "{c,d}"});
  CHECK(dom.code == kExitViolated);
  CHECK(dom.out == "violated: dominated by {a,b}\n");
}

TEST_CASE("usage errors and the cap") {
  Run unknown = cli({"compute", "--rule", "nope", "--input", kEx1});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err == "error: unknown rule 'nope'\n");
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"compute", "--input", kEx1}).code == kExitUsage);
  CHECK(cli({"compute", "--rule", "pav", "--input", "/nonexistent/file.abc"}).code == kExitUsage);
  CHECK(cli({"check", "--axiom", "nope", "--input", kEx1, "--committee", "{a}"}).code == kExitUsage);
  CHECK(cli({"export-ip", "--rule", "cc", "--input", kEx1}).code == kExitUsage);

  Run capped = cli({"compute", "--rule", "pav", "--input", kEx1, "--cap", "3"});
  CHECK(capped.code == kExitCap);
  CHECK(capped.err == "cap exceeded: committee search space exceeds cap 3\n");
  CHECK(capped.out.empty());
}

TEST_CASE("every rule id prints what compute_rule returns") {
  oracle::Generator gen(81);
  std::vector<ElectionInstance> insts{fx::running()};
  for (int t = 0; t < 6; ++t) insts.push_back(gen.instance_upto(7, 5, 3));
  std::vector<std::string> ids;
  for (const auto& id : known_rule_ids()) {
    if (id.find('<') == std::string::npos) ids.push_back(id);
  }
  ids.insert(ids.end(), {"geom:3", "custom:1,1/3,1/9,1/27", "seq-cc", "revseq-pav"});
  for (std::size_t n = 0; n < insts.size(); ++n) {
    std::string path = write_temp(insts[n], "rules" + std::to_string(n));
    for (const auto& id : ids) {
      CAPTURE(id);
      Run r = cli({"compute", "--rule", id, "--input", path});
      CHECK(r.code == kExitOk);
      CHECK(r.out == expected_output(insts[n], compute_rule(id, insts[n])));
    }
  }
}

TEST_CASE("IP export text") {
  Run ip = cli({"export-ip", "--rule", "pav", "--input", kEx1});
  CHECK(ip.code == kExitOk);
  auto ls = lines(ip.out);
  REQUIRE(ls.size() > 2);
  CHECK(ls[0] == "IP v1");
  CHECK(ls[1] == "var x_0_1 binary");

  IpModel model = parse_ip(ip.out);
  int xs = 0, ys = 0;
  for (const auto& v : model.variables) {
    xs += v.name.starts_with("x_") ? 1 : 0;
    ys += v.name.starts_with("y_") ? 1 : 0;
  }
  CHECK(xs == 48);
  CHECK(ys == 7);
  CHECK(model.constraints.size() == 13);
  CHECK(model.sense == Sense::maximize);
  CHECK(render_ip(model) == ip.out);

  std::string one = write_temp(fx::profile(1, 1, {{1, "a"}}), "one");
  CHECK(cli({"export-ip", "--rule", "pav", "--input", one}).out ==
        "IP v1\nvar x_0_1 binary\nvar y_0 binary\nmax: 1 x_0_1\n1 y_0 = 1\n1 x_0_1 + -1 y_0 = 0\n");
  CHECK_THROWS(parse_ip("IP v2\n"));
  CHECK_THROWS(parse_ip("IP v1\nvar x binary\nmax: 1 z\n"));
}

TEST_CASE("PAV model optimum equals the PAV score") {
  oracle::Generator gen(82);
  std::vector<ElectionInstance> insts{fx::running()};
  for (int t = 0; t < 25; ++t) insts.push_back(gen.instance_upto(6, 5, 3));
  for (const ElectionInstance& inst : insts) {
    IpModel m = parse_ip(export_ip(inst, "pav"));
    const int k = inst.committee_size();
    Rational best = -1;
    for (const Committee& w : enumerate_committees(inst.num_candidates(), k)) {
      auto values = assignment(m);
      for (int c : w.members) set(m, values, "y_" + std::to_string(c), 1);
      for (int i = 0; i < inst.num_voters(); ++i) {
        const int have = oracle::overlap(inst, i, w.members);
        for (int l = 1; l <= have; ++l) set(m, values, "x_" + std::to_string(i) + "_" + std::to_string(l), 1);
      }
      REQUIRE(m.feasible(values));
      CHECK(m.objective_value(values) == thiele_score(inst, w, ThieleWeights::pav()));
      if (m.objective_value(values) > best) best = m.objective_value(values);
    }
    CHECK(best == *thiele_exact(inst, ThieleWeights::pav()).score);
    if (inst.num_candidates() > k) {
      auto values = assignment(m);
      for (int c = 0; c <= k; ++c) set(m, values, "y_" + std::to_string(c), 1);
      CHECK_FALSE(m.feasible(values));
    }
  }
}

TEST_CASE("MAV model optimum equals the MAV score") {
  oracle::Generator gen(83);
  std::vector<ElectionInstance> insts{fx::running()};
  for (int t = 0; t < 25; ++t) insts.push_back(gen.instance_upto(6, 5, 3));
  for (const ElectionInstance& inst : insts) {
    IpModel m = parse_ip(export_ip(inst, "mav"));
    CHECK(m.sense == Sense::minimize);
    Rational best = -1;
    for (const Committee& w : enumerate_committees(inst.num_candidates(), inst.committee_size())) {
      auto values = assignment(m);
      int worst = 0;
      for (int c : w.members) set(m, values, "y_" + std::to_string(c), 1);
      for (int i = 0; i < inst.num_voters(); ++i) {
        int d = 0;
        for (int c = 0; c < inst.num_candidates(); ++c) {
          const bool differs = inst.approves(i, c) != w.contains(c);
          d += differs ? 1 : 0;
          if (differs) set(m, values, "d_" + std::to_string(i) + "_" + std::to_string(c), 1);
        }
        worst = std::max(worst, d);
      }
      set(m, values, "D", worst);
      REQUIRE(m.feasible(values));
      if (worst > 0) {
        set(m, values, "D", worst - 1);
        CHECK_FALSE(m.feasible(values));
      }
      if (best < 0 || worst < best) best = worst;
    }
    CHECK(best == *mav_exact(inst).score);
  }
}
