#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <random>
#include <sstream>

#include "addcyc/analysis.hpp"
#include "addcyc/dual.hpp"
#include "addcyc/factor.hpp"
#include "addcyc/reference.hpp"
#include "addcyc/textio.hpp"

namespace addcyc::cli {

namespace {

struct Options {
  u64 cap = kDefaultEnumerationCap;
  u64 seed = 0xC0DE;
  bool machine = false;
  bool stamp = false;
  std::string input;
  std::size_t n = 0;
  std::uint32_t p = 2;
  std::uint32_t a = 1;
  u64 limit = 1000;
  std::size_t samples = 200;
};

// A failed check that should exit with status 1 rather than 2.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string triple_text(const PolyTriple& t) {
  return "(" + t.u.pretty() + " | " + t.v.pretty() + " | " + t.w.pretty() + ")";
}

std::string chain_text(const CyclicChain& c) {
  std::string out;
  for (const Poly& f : c.chain()) out += (out.empty() ? "" : ", ") + f.pretty();
  return out;
}

std::string params_text(const MixedParams& mp) {
  std::ostringstream out;
  out << mp.ring_r().name() << ' ' << mp.ring_r().name() << ' ' << mp.ring_s().name() << " (" << mp.alpha << ','
      << mp.beta << ',' << mp.gamma << ')';
  return out.str();
}

std::string flat_word(const MixedWord& x) {
  std::string out;
  for (const auto* block : {&x.u, &x.v, &x.w})
    for (u64 c : *block) out += (out.empty() ? "" : " ") + std::to_string(c);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

TripleCode load_code(const Options& o) { return to_code(load_input(o.input)); }

void print_form(const TripleCode& c, std::ostream& out) {
  out << "A = " << c.A().pretty() << "  [chain " << chain_text(c.a_chain()) << "]\n";
  out << "B = " << c.B().pretty() << "  [chain " << chain_text(c.b_chain()) << "]\n";
  out << "G = " << c.G().pretty() << "  [chain " << chain_text(c.g_chain()) << "]\n";
  out << "l = " << c.l().pretty() << "\nl1 = " << c.l1().pretty() << "\nl2 = " << c.l2().pretty() << '\n';
}

int cmd_validate(const Options& o, std::ostream& out) {
  CodeInput input = load_input(o.input);
  if (input.matrix) {
    TripleCode c = standard_form(*input.matrix);
    out << (o.machine ? "valid matrix\n" : "valid generator matrix; standard form:\n");
    if (!o.machine) out << write_code_spec(c.spec());
    return 0;
  }
  auto diags = validate_triple(*input.spec);
  if (diags.empty()) {
    out << "valid\n";
    return 0;
  }
  out << "invalid\n";
  for (const Diagnostic& d : diags) out << (o.machine ? "" : "  ") << d.invariant << ": " << d.detail << '\n';
  return 1;
}

int cmd_info(const Options& o, std::ostream& out) {
  TripleCode c = load_code(o);
  ModuleSize size = code_size(c);
  bool sep = is_separable(c).separable();
  Classification k = classify(c);
  if (o.machine) {
    out << "size " << size.to_string() << " log " << size.exponent << " separable " << sep << " case " << k.number
        << '\n';
    return 0;
  }
  out << params_text(c.params()) << '\n';
  out << "size = " << size.to_string() << ", " << (sep ? "separable" : "non-separable") << ", case " << k.number
      << '\n';
  out << "shape " << k.shape << '\n';
  print_form(c, out);
  return 0;
}

int cmd_genset(const Options& o, std::ostream& out) {
  TripleCode c = load_code(o);
  auto genset = min_genset(c);
  for (const GensetEntry& e : genset) {
    if (o.machine)
      out << e.family << ' ' << e.level << ' ' << e.shift << ' ' << flat_word(to_word(e.element, c.params())) << '\n';
    else
      out << e.family << '_' << e.level << "  x^" << e.shift << "  " << triple_text(e.element) << '\n';
  }
  if (!o.machine) out << genset.size() << " generators, size " << code_size(c).to_string() << '\n';
  return 0;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  out << write_matrix(generator_matrix(load_code(o)));
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  TripleCode c = load_code(o);
  for (const MixedWord& w : enumerate(c, o.cap)) out << (o.machine ? flat_word(w) : word_to_string(w)) << '\n';
  return 0;
}

int cmd_dual(const Options& o, std::ostream& out) {
  TripleCode c = load_code(o);
  TripleCode d = dual_code(c);
  if (!o.machine)
    out << "# dual of a code of size " << code_size(c).to_string() << "; dual size " << code_size(d).to_string()
        << " (formula " << dual_size(c).to_string() << ")\n";
  out << write_code_spec(d.spec());
  return 0;
}

MixedWord random_member(const GenMatrix& m, std::mt19937_64& rng) {
  const MixedParams& mp = m.params();
  std::uniform_int_distribution<u64> coef(0, mp.ring_s().modulus() - 1);
  MixedWord x = MixedWord::zero(mp);
  for (const MixedWord& row : m.rows()) x = add_words(x, star_scalar(ModInt(mp.ring_s(), coef(rng)), row, mp), mp);
  return x;
}

int cmd_check_duality(const Options& o, std::ostream& out) {
  TripleCode c = load_code(o);
  const MixedParams& mp = c.params();
  TripleCode d = dual_code(c);
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("size product", code_size(c).exponent + code_size(d).exponent == mp.ambient_log());
  checks.emplace_back("dual size formula", dual_size(c) == code_size(d));
  checks.emplace_back("double dual", double_dual_check(c));
  std::mt19937_64 rng(o.seed);
  GenMatrix mc = generator_matrix(c), md = generator_matrix(d);
  bool bullet_ok = true;
  try {
    for (std::size_t t = 0; t < o.samples && bullet_ok; ++t) {
      MixedWord x = random_member(mc, rng), y = random_member(md, rng);
      bullet_ok = orthogonal_all_shifts(x, y, mp) && bullet(x, y, mp).is_zero();
    }
  } catch (const std::logic_error&) {
    bullet_ok = false;
  }
  checks.emplace_back("bullet vanishes on C x dual", bullet_ok);
  bool all = true;
  for (const auto& [name, ok] : checks) {
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
  }
  return all ? 0 : 1;
}

int cmd_separable(const Options& o, std::ostream& out) {
  TripleCode c = load_code(o);
  SeparabilityReport rep = is_separable(c);
  if (o.machine) {
    out << "separable " << rep.separable() << " direct_product " << rep.direct_product << " divisibility "
        << rep.divisibility << " projections " << rep.projections << " split_generators " << rep.split_generators
        << '\n';
  } else {
    out << "separable = " << yes_no(rep.separable()) << '\n';
    out << "  C = C_alpha x C_beta x C_gamma: " << yes_no(rep.direct_product) << '\n';
    out << "  l, l1 in <A> and l2 in <B>: " << yes_no(rep.divisibility) << '\n';
    out << "  C_alpha = <A> and C_beta = <B>: " << yes_no(rep.projections) << '\n';
    out << "  C = <(A|0|0), (0|B|0), (0|0|G)>: " << yes_no(rep.split_generators) << '\n';
  }
  if (!rep.consistent()) throw CheckFailure("separability conditions disagree");
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Classification k = classify(load_code(o));
  if (o.machine) out << k.number << '\n';
  else out << "case " << k.number << ": " << k.shape << '\n';
  return 0;
}

int cmd_project(const Options& o, std::ostream& out) {
  TripleCode c = load_code(o);
  Projections pr = projections(c);
  const std::pair<const char*, const CyclicChain*> parts[] = {
      {"C_alpha", &pr.alpha}, {"C_beta", &pr.beta}, {"C_gamma", &pr.gamma}};
  for (auto [name, ch] : parts) {
    if (o.machine) {
      out << name;
      for (const Poly& f : ch->chain()) out << " ; " << f.to_text();
      out << '\n';
    } else {
      out << name << " = <" << ch->generator().pretty() << ">  [chain " << chain_text(*ch) << "], size "
          << cyclic_size(*ch).to_string() << '\n';
    }
  }
  return 0;
}

int cmd_mindist(const Options& o, std::ostream& out) {
  TripleCode c = load_code(o);
  const MixedParams& mp = c.params();
  std::size_t d = min_distance(c, o.cap);
  ModuleSize size = code_size(c);
  if (o.machine) {
    out << mp.length() << ' ' << size.exponent << ' ' << d << '\n';
  } else if (mp.p == 2 && mp.r == 1 && mp.s == 1) {
    out << '[' << mp.length() << ',' << size.exponent << ',' << d << "]\n";
  } else {
    out << "n = " << mp.length() << ", size = " << size.to_string() << ", d = " << d << '\n';
  }
  return 0;
}

struct NamedCheck {
  std::string name;
  bool pass;
  std::string detail;
};

NamedCheck check_335() {
  const MixedParams mp = z2z2z4_335_params();
  TripleCode c = standard_form(mp, z2z2z4_335_generators());
  RingSpec z2 = mp.ring_r(), z4 = mp.ring_s();
  const Poly xp1(z2, {1, 1});
  bool form = c.l() == xp1 && c.B() == xp1 && c.G() == Poly(z4, {3, 1, 1, 1, 1}) && c.l1().is_zero() &&
              c.l2().is_zero();
  CyclicChain multiples(QuotientCtx(z2, 3), {xp1});
  bool members = true;
  for (const MixedWord& w : enumerate(c, 1u << 20))
    members = members && cyclic_contains(multiples, Poly(z2, w.u)) && cyclic_contains(multiples, Poly(z2, w.v));
  std::string detail = "l = " + c.l().pretty() + ", B = " + c.B().pretty() + ", G = " + c.G().pretty() +
                       ", l1 = " + c.l1().pretty() + ", l2 = " + c.l2().pretty() +
                       (members ? ", first two blocks in <1+x>" : ", a codeword leaves <1+x>");
  return {"mixed (3,3,5) standard form", form && members, detail};
}

NamedCheck check_552() {
  auto diags = validate_triple(z3z3z9_552_spec());
  if (diags.empty()) return {"mixed (5,5,2) triple validates", true, "all invariants hold"};
  return {"mixed (5,5,2) triple validates", false, diags.front().invariant + ": " + diags.front().detail};
}

NamedCheck check_333() {
  const MixedParams mp = z2z2z4_333_params();
  TripleCode c = standard_form(mp, z2z2z4_333_generators());
  u64 formula = code_size(c).value();
  std::size_t listed = enumerate(c, 1u << 20).size();
  return {"mixed (3,3,3) size 32", formula == 32 && listed == 32,
          "formula " + std::to_string(formula) + ", enumeration " + std::to_string(listed)};
}

int cmd_verify_paper(const Options& o, std::ostream& out) {
  std::vector<NamedCheck> checks = {check_335(), check_552(), check_333()};
  for (const BinaryCheck& b : verify_known_binary_codes(o.cap)) {
    std::ostringstream detail;
    if (!b.error.empty()) detail << b.error;
    else detail << '[' << b.n << ',' << b.k << ',' << b.d << "] expected [" << b.expected.n << ',' << b.expected.k
                << ',' << b.expected.d << ']';
    if (o.machine) out << b.line() << '\n';
    checks.push_back({"binary row " + std::to_string(b.expected.row), b.pass(), detail.str()});
  }
  std::size_t passed = 0;
  for (const NamedCheck& c : checks) {
    passed += c.pass;
    if (!o.machine) out << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
  }
  out << passed << '/' << checks.size() << " checks passed\n";
  return passed == checks.size() ? 0 : 1;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const LiftedFactorization& lf = lifted_factorization(o.n, RingSpec(o.p, o.a));
  std::string line;
  for (const Poly& f : lf.lifts) {
    if (o.machine) out << f.to_text() << '\n';
    else line += (line.empty() ? "" : ", ") + f.pretty();
  }
  if (!o.machine) out << line << '\n';
  return 0;
}

int cmd_chains(const Options& o, std::ostream& out) {
  QuotientCtx ctx(RingSpec(o.p, o.a), o.n);
  ChainEnumerator chains(ctx);
  u64 shown = 0;
  while (shown < o.limit) {
    auto chain = chains.next();
    if (!chain) break;
    std::string line;
    for (const Poly& f : *chain)
      line += (line.empty() ? "" : (o.machine ? " ; " : ", ")) + (o.machine ? f.to_text() : f.pretty());
    out << line << '\n';
    ++shown;
  }
  out << (o.machine ? "count " : "count = ") << chains.count() << '\n';
  return 0;
}

std::string timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream out;
  out << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z_{p^r}Z_{p^r}Z_{p^s}-additive cyclic codes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cap", o.cap, "maximum number of codewords to enumerate")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
  app.add_flag("--machine", o.machine, "line-oriented output");
  app.add_flag("--stamp", o.stamp, "prefix the report with a timestamp");

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto with_file = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("file", o.input, "code-spec or matrix file")->required();
    verbs.emplace_back(sub, h);
    return sub;
  };
  with_file("validate", "check the invariants of a generator triple", cmd_validate);
  with_file("info", "size, classification and standard form", cmd_info);
  with_file("genset", "minimal generating set", cmd_genset);
  with_file("matrix", "generator matrix export", cmd_matrix);
  with_file("enumerate", "list every codeword (up to --cap)", cmd_enumerate);
  with_file("dual", "standard form of the dual code as a code-spec file", cmd_dual);
  CLI::App* duality = with_file("check-duality", "dual sizes, double dual and bullet pairing", cmd_check_duality);
  duality->add_option("--samples", o.samples, "random pairs for the bullet check")->capture_default_str();
  with_file("separable", "separability conditions", cmd_separable);
  with_file("classify", "generator shape (cases 1-14)", cmd_classify);
  with_file("project", "codes of the three block projections", cmd_project);
  with_file("mindist", "minimum Hamming distance", cmd_mindist);
  CLI::App* verify = app.add_subcommand("verify-paper", "built-in reference examples and binary codes")->fallthrough();
  verbs.emplace_back(verify, cmd_verify_paper);
  for (auto [name, h] : {std::pair<const char*, Handler>{"factor", cmd_factor}, {"chains", cmd_chains}}) {
    CLI::App* sub = app.add_subcommand(name, std::string(name) == "factor" ? "lifted factors of x^n-1 over Z_{p^a}"
                                                                           : "divisor chains of x^n-1 over Z_{p^a}")
                        ->fallthrough();
    sub->add_option("--n", o.n, "length")->required();
    sub->add_option("--p", o.p, "prime")->capture_default_str();
    sub->add_option("--a", o.a, "exponent")->capture_default_str();
    if (std::string(name) == "chains") sub->add_option("--limit", o.limit, "chains to list")->capture_default_str();
    verbs.emplace_back(sub, h);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.stamp) out << "# generated " << timestamp() << '\n';
    for (auto [sub, h] : verbs)
      if (sub->parsed()) return h(o, out);
  } catch (const ValidationError& e) {
    err << "invalid code: " << e.what() << '\n';
    return 1;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace addcyc::cli
