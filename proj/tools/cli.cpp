#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "qe/adversary.hpp"
#include "qe/chains.hpp"
#include "qe/classify.hpp"
#include "qe/error.hpp"
#include "qe/json_io.hpp"
#include "qe/parse.hpp"
#include "qe/rtau.hpp"

namespace qe::cli {

namespace {

struct Config {
  std::string tau_inline;
  std::string tau_file;
  bool json_mode = false;
  std::uint64_t seed = 0;
  std::uint64_t pmax = 50;
  unsigned kmax = 8;
  unsigned depth = 4;
  std::size_t max_steps = kDefaultMaxSteps;
};

// A command's result in both renderings.
struct Output {
  json data;
  std::string text;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// --tau accepts a JSON spec or a shorthand: zero, constant:N, stream, log_generic.
// Shorthand seeded kinds take their seed from --seed.
TauSpec resolve_tau(const Config& cfg) {
  if (!cfg.tau_inline.empty() && !cfg.tau_file.empty()) throw UsageError("--tau and --tau-file are exclusive");
  std::string text = cfg.tau_inline;
  if (!cfg.tau_file.empty()) {
    std::ifstream in(cfg.tau_file);
    if (!in) throw UsageError("cannot read tau file " + cfg.tau_file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) return TauSpec::constant(0);

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("tau spec: ") + e.what());
    }
    return tau_from_json(j);
  }
  if (text == "zero") return TauSpec::zero();
  if (text == "stream") return TauSpec::stream(cfg.seed);
  if (text == "log_generic") return TauSpec::log_generic(cfg.seed);
  if (text.rfind("constant:", 0) == 0) {
    mpz_class z;
    if (z.set_str(text.substr(9), 10) != 0) throw ParseError("tau spec: bad constant " + text.substr(9));
    return TauSpec::constant(z);
  }
  throw ParseError("tau spec: unknown shorthand '" + text + "'");
}

std::string str(const mpz_class& z) { return z.get_str(); }

std::string str(const NormTuple& t) {
  std::string s = "(";
  const auto c = t.components();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].get_str();
  return s + ")";
}

std::string str(const std::vector<RingElement>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

// Renders rows as left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += i + 1 < r.size() ? pad(r[i], width[i] + 2) : r[i];
    out += line + "\n";
  }
  return out;
}

RingElement element(const std::string& s) { return parse_element(s); }

Output cmd_member(const RingContext& ctx, const std::vector<std::string>& elems) {
  Output o{json::array(), ""};
  for (const auto& s : elems) {
    const RingElement e = element(s);
    const auto failure = ctx.membership_failure(e);
    json row{{"element", to_json(e)}, {"member", !failure}};
    o.text += to_string(e) + ": " + (failure ? "false" : "true");
    if (failure) {
      row["failure"] = json{{"p", to_json(failure->prime())}, {"k", failure->precision()}, {"residue", to_json(failure->residue())}};
      o.text += " (h(tau_" + str(failure->prime()) + ") = " + str(failure->residue()) + " mod " +
                str(failure->prime()) + "^" + std::to_string(failure->precision()) + ")";
    }
    o.text += "\n";
    o.data.push_back(row);
  }
  if (o.data.size() == 1) o.data = o.data[0];
  return o;
}

Output cmd_divmod(const RingContext& ctx, const std::string& qs, const std::string& rs) {
  const RingElement q = element(qs), r = element(rs);
  const DivisionResult d = divmod_detailed(ctx, q, r);
  const std::string branch = d.branch == DivBranch::shift_down ? "shift_down" : "correct";
  Output o;
  o.data = json{{"q", to_json(q)},        {"r", to_json(r)},      {"quotient", to_json(d.quotient)},
                {"remainder", to_json(d.remainder)}, {"branch", branch}, {"correction", to_json(d.correction)}};
  o.text = "quotient:   " + to_string(d.quotient) + "\nremainder:  " + to_string(d.remainder) +
           "\nbranch:     " + branch + "\ncorrection: " + str(d.correction) + "\n";
  return o;
}

Output cmd_gcd(const RingContext& ctx, const std::string& as, const std::string& bs, std::size_t max_steps) {
  const RingElement a = element(as), b = element(bs);
  const Bezout g = gcd_bezout(ctx, a, b, max_steps);
  if (g.u * a + g.v * b != g.gcd) throw std::logic_error("gcd: Bezout identity failed");
  Output o;
  o.data = json{{"a", to_json(a)}, {"b", to_json(b)}, {"gcd", to_json(g.gcd)}, {"u", to_json(g.u)}, {"v", to_json(g.v)}};
  o.text = "gcd: " + to_string(g.gcd) + "\nu:   " + to_string(g.u) + "\nv:   " + to_string(g.v) + "\n" +
           to_string(g.gcd) + " = (" + to_string(g.u) + ")*(" + to_string(a) + ") + (" + to_string(g.v) + ")*(" +
           to_string(b) + ")\n";
  return o;
}

Output cmd_chain(const RingContext& ctx, const std::string& as, const std::string& bs, std::size_t max_steps) {
  const QeTrace t = qe_chain_trace(ctx, element(as), element(bs), max_steps);
  const DivisionChain& c = t.chain;
  std::vector<std::vector<std::string>> rows{{"i", "q_i", "r_i", "phi(r_{i-1}, r_i)"}};
  rows.push_back({"0", "", to_string(c.b), str(t.norms[0])});
  for (std::size_t i = 1; i <= c.length(); ++i)
    rows.push_back({std::to_string(i), to_string(c.quotients[i - 1]), to_string(c.remainder(i)), str(t.norms[i])});
  Output o;
  o.data = to_json(t);
  o.text = "a = " + to_string(c.a) + "\n" + table(rows) + "length: " + std::to_string(c.length()) + "\n";
  return o;
}

DivisionChain user_chain(const RingContext& ctx, const std::vector<std::string>& args) {
  if (args.size() < 3) throw UsageError("expected a, b and at least one quotient");
  std::vector<RingElement> qs;
  for (std::size_t i = 2; i < args.size(); ++i) qs.push_back(element(args[i]));
  return build_chain(ctx, element(args[0]), element(args[1]), std::move(qs));
}

Output cmd_normalize(const RingContext& ctx, const std::vector<std::string>& args) {
  const DivisionChain c = user_chain(ctx, args);
  const NormalizedChain n = normalize_positive(c);
  Output o;
  json steps = json::array();
  o.text = "input:  q = " + str(c.quotients) + "\n";
  for (const auto& s : n.steps) {
    steps.push_back(json{{"rule", std::string("T") + s.rule}, {"chain", to_json(s.chain)}});
    o.text += "T" + std::string(1, s.rule) + ":     q = " + str(s.chain.quotients) + "\n";
  }
  o.text += "result: q = " + str(n.chain.quotients) + "\nlast remainder: " +
            to_string(n.chain.last_remainder()) + "\n";
  o.data = json{{"input", to_json(c)}, {"steps", steps}, {"result", to_json(n.chain)}};
  return o;
}

std::vector<std::string> check_row(const BoundCheck& b, const std::string& label) {
  return {label, std::to_string(b.index), to_string(b.remainder), to_string(b.bound), b.satisfied ? "yes" : "no"};
}

Output cmd_compare(const RingContext& ctx, const std::vector<std::string>& args) {
  const DivisionChain c = user_chain(ctx, args);
  const ChainComparison cmp = compare_to_qe(ctx, c);
  std::vector<std::vector<std::string>> rows{{"check", "l", "|r_l|", "bound", "ok"}};
  for (const auto& b : cmp.remainder_bounds) rows.push_back(check_row(b, "f_2l"));
  if (cmp.positive_quotient) rows.push_back(check_row(*cmp.positive_quotient, "f_k+1"));
  Output o;
  o.data = to_json(cmp);
  o.text = "qe quotients: " + str(cmp.qe.quotients) + "\nqe remainders: " + str(cmp.qe.remainders) + "\n" +
           table(rows) + "verdict: " + (cmp.verdict ? "true" : "false") + "\n";
  return o;
}

std::map<std::string, mpz_class> read_norms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read norm table " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("norm table: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("norm table must be a JSON object");
  std::map<std::string, mpz_class> out;
  for (const auto& [key, value] : j.items()) out[to_string(element(key))] = integer_from_json(value);
  return out;
}

Output cmd_adversary(const RingContext& ctx, unsigned k, const std::string& bs, unsigned rounds,
                     const std::string& norms_path) {
  const AdversaryReport r = run_adversary(ctx, k, element(bs));
  Output o;
  o.data = to_json(r);
  std::vector<std::vector<std::string>> rows{{"l", "deg r_l", "hat r_l"}};
  for (std::size_t i = 0; i < r.degrees.size(); ++i)
    rows.push_back({std::to_string(i + 1), std::to_string(r.degrees[i]), i < r.hats.size() ? r.hats[i].get_str() : ""});
  o.text = "k = " + std::to_string(r.k) + ", b = " + to_string(r.b) + "\n(c, d) = (" + str(r.c) + ", " + str(r.d) +
           ")\nbeta = " + str(r.beta) + "\na = " + to_string(r.a) + "\n" + table(rows) +
           "projection_valid: " + (r.projection_valid ? "true" : "false") +
           "\nverdict: " + (r.verdict ? "true" : "false") + "\n";

  if (rounds > 0) {
    const std::map<std::string, mpz_class> norms = norms_path.empty() ? std::map<std::string, mpz_class>{}
                                                                      : read_norms(norms_path);
    const DescentDemo demo = descent_demo(ctx, k, norms, rounds);
    json jr = json::array();
    o.text += "descent:\n";
    for (std::size_t j = 0; j < demo.rounds.size(); ++j) {
      const auto& d = demo.rounds[j];
      jr.push_back(json{{"b", to_json(d.b)},
                        {"a", to_json(d.a)},
                        {"l", d.index ? json(*d.index) : json(nullptr)},
                        {"next", d.next ? to_json(*d.next) : json(nullptr)}});
      o.text += "  b_" + std::to_string(j) + " = " + to_string(d.b);
      if (d.next) o.text += " -> r_" + std::to_string(*d.index) + " = " + to_string(*d.next);
      o.text += "\n";
    }
    if (demo.stopped) o.text += "  stopped: " + *demo.stopped + "\n";
    o.data["descent"] = json{{"rounds", jr}, {"stopped", demo.stopped ? json(*demo.stopped) : json(nullptr)}};
  }
  return o;
}

Output cmd_scan(const RingContext& ctx, const std::string& hs, const Config& cfg) {
  const ShScan s = scan_sh(ctx, parse_int_poly(hs), cfg.pmax, static_cast<unsigned>(cfg.kmax));
  std::vector<std::vector<std::string>> rows{{"p", "depth", "saturated", "certified_root"}};
  for (const auto& h : s.hits)
    rows.push_back({std::to_string(h.prime), std::to_string(h.depth), h.saturated ? "yes" : "no",
                    h.certified_root ? "yes" : "no"});
  Output o;
  o.data = to_json(s);
  o.text = "h = " + to_string(s.h) + ", p <= " + std::to_string(s.p_max) + ", k <= " + std::to_string(s.k_max) +
           "\n" + table(rows) + "saturated: " + (s.any_saturated() ? "true" : "false") + "\n";
  return o;
}

Output cmd_witness(const RingContext& ctx, const std::string& hs, const std::string& strategy, const Config& cfg) {
  static const std::map<std::string, WitnessStrategy> strategies{{"automatic", WitnessStrategy::automatic},
                                                                 {"prime_power", WitnessStrategy::prime_power},
                                                                 {"distinct_primes", WitnessStrategy::distinct_primes}};
  const IntPoly h = parse_int_poly(hs);
  const auto w = non_ufd_witness(ctx, h, cfg.depth, WitnessBounds{cfg.pmax, cfg.kmax}, strategies.at(strategy));
  Output o;
  if (!w) {
    o.data = json{{"h", to_json(h)}, {"witness", nullptr}};
    o.text = "no witness for h = " + to_string(h) + " within p <= " + std::to_string(cfg.pmax) +
             ", k <= " + std::to_string(cfg.kmax) + "\n";
    return o;
  }
  const bool verified = verify_witness(ctx, *w);
  o.data = json{{"h", to_json(h)}, {"witness", to_json(*w)}, {"verified", verified}};
  std::string primes;
  for (auto p : w->primes) primes += (primes.empty() ? "" : ", ") + std::to_string(p);
  o.text = "h = " + to_string(h) + "\nprimes: [" + primes + "]\nchain: " + str(w->chain) +
           "\nverified: " + (verified ? "true" : "false") + "\n";
  return o;
}

Output cmd_tau(const TauSpec& tau, const Config& cfg) {
  std::vector<std::vector<std::string>> rows{{"p", "tau_p mod p^" + std::to_string(cfg.kmax)}};
  json digits = json::array();
  for (auto p : primes_up_to(cfg.pmax)) {
    const ResidueClass v = tau.query(p, cfg.kmax);
    rows.push_back({std::to_string(p), str(v.value())});
    digits.push_back(json{{"p", p}, {"value", to_json(v.value())}});
  }
  Output o;
  json spec;
  try {
    spec = to_json(tau);
  } catch (const Error&) {
    spec = nullptr;
  }
  o.data = json{{"tau", spec}, {"k", cfg.kmax}, {"values", digits}};
  o.text = table(rows);
  return o;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Quasi-Euclidean subrings of Q[x]: division, chains, adversaries and witnesses", "rtau"};
  app.require_subcommand(1);
  app.add_option("--tau", cfg.tau_inline, "tau spec: JSON, or zero | constant:N | stream | log_generic");
  app.add_option("--tau-file", cfg.tau_file, "file holding a JSON tau spec");
  app.add_flag("--json", cfg.json_mode, "emit JSON");
  app.add_option("--seed", cfg.seed, "seed for shorthand stream/log_generic specs");
  app.add_option("--pmax", cfg.pmax, "largest prime scanned")->check(CLI::Range(2ULL, 1000000ULL));
  app.add_option("--kmax", cfg.kmax, "p-adic precision for scans")->check(CLI::Range(1U, 256U));
  app.add_option("--depth", cfg.depth, "witness chain length")->check(CLI::Range(2U, 64U));
  app.add_option("--max-steps", cfg.max_steps, "chain step budget")->check(CLI::PositiveNumber);

  std::function<Output(const RingContext&)> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::vector<std::string> elems;
  sub("member", "test membership of elements")->add_option("element", elems)->required();

  std::string p1, p2;
  auto pair_cmd = [&](const char* name, const char* help) {
    CLI::App* s = sub(name, help);
    s->add_option("first", p1)->required();
    s->add_option("second", p2)->required();
    return s;
  };
  CLI::App* divmod_cmd = pair_cmd("divmod", "divide q by r with remainder");
  CLI::App* gcd_cmd = pair_cmd("gcd", "gcd with Bezout coefficients");
  CLI::App* chain_cmd = pair_cmd("chain", "quasi-Euclidean chain with norms");

  std::vector<std::string> chain_args;
  CLI::App* normalize_cmd = sub("normalize", "rewrite a chain to positive quotients");
  normalize_cmd->add_option("chain", chain_args, "a b q_1 q_2 ...")->required();
  CLI::App* compare_cmd = sub("compare", "compare a chain against the quasi-Euclidean chain");
  compare_cmd->add_option("chain", chain_args, "a b q_1 q_2 ...")->required();

  unsigned k = 1, rounds = 0;
  std::string norms_path;
  CLI::App* adversary_cmd = sub("adversary", "adversarial pair and degree retention for k and b");
  adversary_cmd->add_option("b", p1)->required();
  adversary_cmd->add_option("-k,--k", k, "chain length bound")->check(CLI::Range(1U, 32U));
  adversary_cmd->add_option("--rounds", rounds, "descent rounds against a norm table");
  adversary_cmd->add_option("--norms", norms_path, "JSON object mapping elements to norms");

  CLI::App* scan_cmd = sub("scan", "p-adic vanishing depths of h");
  scan_cmd->add_option("poly", p1, "integer polynomial h")->required();

  std::string strategy = "automatic";
  CLI::App* witness_cmd = sub("witness", "non-UFD divisor chain for h");
  witness_cmd->add_option("poly", p1, "integer polynomial h")->required();
  witness_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"automatic", "prime_power", "distinct_primes"}));

  CLI::App* tau_cmd = sub("tau", "inspect tau_p modulo p^kmax for p <= pmax");

  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    if (cfg.json_mode)
      out << error_json(kind, message).dump(2) << "\n";
    else
      err << "error: " << message << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    cfg.json_mode = std::find(args.begin(), args.end(), "--json") != args.end();
    return fail(usage_error, "usage", e.what());
  }

  try {
    const TauSpec tau = resolve_tau(cfg);
    const RingContext ctx(tau);
    Output o;
    if (app.got_subcommand("member"))
      o = cmd_member(ctx, elems);
    else if (divmod_cmd->parsed())
      o = cmd_divmod(ctx, p1, p2);
    else if (gcd_cmd->parsed())
      o = cmd_gcd(ctx, p1, p2, cfg.max_steps);
    else if (chain_cmd->parsed())
      o = cmd_chain(ctx, p1, p2, cfg.max_steps);
    else if (normalize_cmd->parsed())
      o = cmd_normalize(ctx, chain_args);
    else if (compare_cmd->parsed())
      o = cmd_compare(ctx, chain_args);
    else if (adversary_cmd->parsed())
      o = cmd_adversary(ctx, k, p1, rounds, norms_path);
    else if (scan_cmd->parsed())
      o = cmd_scan(ctx, p1, cfg);
    else if (witness_cmd->parsed())
      o = cmd_witness(ctx, p1, strategy, cfg);
    else if (tau_cmd->parsed())
      o = cmd_tau(tau, cfg);
    if (cfg.json_mode)
      out << o.data.dump(2) << "\n";
    else
      out << o.text;
    return ok;
  } catch (const UsageError& e) {
    return fail(usage_error, "usage", e.what());
  } catch (const ParseError& e) {
    return fail(usage_error, "parse", e.what());
  } catch (const NotMember& e) {
    return fail(domain_error, "not_member", e.what());
  } catch (const DivisionByZero& e) {
    return fail(domain_error, "division_by_zero", e.what());
  } catch (const Error& e) {
    return fail(domain_error, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(domain_error, "internal", e.what());
  }
}

}  // namespace qe::cli
