#include "addcyc/textio.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace addcyc {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string without_comment(const std::string& line) { return strip(line.substr(0, line.find('#'))); }

std::vector<u64> parse_integers(const std::string& text, const std::string& what) {
  std::istringstream in(text);
  std::vector<u64> out;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
      throw std::invalid_argument("bad " + what + ": '" + tok + "' is not a non-negative integer");
    out.push_back(std::stoull(tok));
  }
  return out;
}

std::string line_error(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

struct Entry {
  std::size_t line;
  std::string value;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingSpec& ring) {
  std::vector<u64> c = parse_integers(text, "polynomial");
  if (c.empty()) throw std::invalid_argument("bad polynomial: empty coefficient list");
  for (u64& x : c) x = ring.reduce(x);
  return Poly(ring, std::move(c));
}

TripleSpec parse_code_spec(std::istream& in) {
  std::map<std::string, Entry> kv;
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    std::string line = without_comment(raw);
    if (line.empty()) continue;
    auto cut = line.find_first_of("=: \t");
    if (cut == std::string::npos) throw std::invalid_argument(line_error(no, "missing value for '" + line + "'"));
    std::string key = strip(line.substr(0, cut));
    std::string value = strip(line.substr(cut + 1));
    if (!value.empty() && (value.front() == '=' || value.front() == ':')) value = strip(value.substr(1));
    if (value.empty()) throw std::invalid_argument(line_error(no, "missing value for '" + key + "'"));
    if (!kv.emplace(key, Entry{no, value}).second) throw std::invalid_argument(line_error(no, "duplicate key '" + key + "'"));
  }

  auto integer = [&](const std::string& key, std::optional<u64> fallback) -> u64 {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (fallback) return *fallback;
      throw std::invalid_argument("missing key '" + key + "'");
    }
    try {
      auto v = parse_integers(it->second.value, key);
      if (v.size() != 1) throw std::invalid_argument("expected one integer for '" + key + "'");
      return v[0];
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(line_error(it->second.line, e.what()));
    }
  };
  const auto p = static_cast<std::uint32_t>(integer("p", std::nullopt));
  const auto r = static_cast<std::uint32_t>(integer("r", 1));
  const auto s = static_cast<std::uint32_t>(integer("s", r));
  MixedParams mp(p, r, s, integer("alpha", std::nullopt), integer("beta", std::nullopt), integer("gamma", std::nullopt));

  std::set<std::string> known = {"p", "r", "s", "alpha", "beta", "gamma", "l", "l1", "l2"};
  auto poly = [&](const std::string& key, const RingSpec& ring) -> std::optional<Poly> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    try {
      return parse_poly(it->second.value, ring);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(line_error(it->second.line, e.what()));
    }
  };
  auto chain = [&](char name, std::uint32_t count, const RingSpec& ring, std::size_t n) {
    std::vector<Poly> out;
    for (std::uint32_t i = 0; i < count; ++i) {
      std::string key = name + std::to_string(i);
      known.insert(key);
      if (auto f = poly(key, ring)) out.push_back(*f);
      else out.push_back(out.empty() ? Poly::x_pow_minus_one(ring, n) : out.back());
    }
    return out;
  };
  TripleSpec spec{mp,
                  chain('A', r, mp.ring_r(), mp.alpha),
                  poly("l", mp.ring_r()).value_or(Poly(mp.ring_r())),
                  chain('B', r, mp.ring_r(), mp.beta),
                  poly("l1", mp.ring_r()).value_or(Poly(mp.ring_r())),
                  poly("l2", mp.ring_r()).value_or(Poly(mp.ring_r())),
                  chain('G', s, mp.ring_s(), mp.gamma)};
  for (const auto& [key, entry] : kv)
    if (!known.count(key)) throw std::invalid_argument(line_error(entry.line, "unknown key '" + key + "'"));
  return spec;
}

std::string write_code_spec(const TripleSpec& spec) {
  const MixedParams& mp = spec.params;
  std::ostringstream out;
  out << "p = " << mp.p << "\nr = " << mp.r << "\ns = " << mp.s << "\nalpha = " << mp.alpha << "\nbeta = " << mp.beta
      << "\ngamma = " << mp.gamma << '\n';
  for (std::size_t i = 0; i < spec.a_chain.size(); ++i) out << 'A' << i << " = " << spec.a_chain[i].to_text() << '\n';
  for (std::size_t i = 0; i < spec.b_chain.size(); ++i) out << 'B' << i << " = " << spec.b_chain[i].to_text() << '\n';
  for (std::size_t i = 0; i < spec.g_chain.size(); ++i) out << 'G' << i << " = " << spec.g_chain[i].to_text() << '\n';
  out << "l = " << spec.l.to_text() << "\nl1 = " << spec.l1.to_text() << "\nl2 = " << spec.l2.to_text() << '\n';
  return out.str();
}

GenMatrix parse_matrix(std::istream& in) {
  std::string raw;
  std::optional<GenMatrix> m;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    std::string line = without_comment(raw);
    if (line.empty()) continue;
    std::vector<u64> v;
    try {
      v = parse_integers(line, "matrix entry");
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(line_error(no, e.what()));
    }
    if (!m) {
      if (v.size() != 6) throw std::invalid_argument(line_error(no, "header must be 'alpha beta gamma p r s'"));
      m.emplace(MixedParams(static_cast<std::uint32_t>(v[3]), static_cast<std::uint32_t>(v[4]),
                            static_cast<std::uint32_t>(v[5]), v[0], v[1], v[2]));
      continue;
    }
    const MixedParams& mp = m->params();
    if (v.size() != mp.length())
      throw std::invalid_argument(line_error(no, "row has " + std::to_string(v.size()) + " entries, expected " +
                                                     std::to_string(mp.length())));
    MixedWord w{std::vector<u64>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mp.alpha)),
                std::vector<u64>(v.begin() + static_cast<std::ptrdiff_t>(mp.alpha),
                                 v.begin() + static_cast<std::ptrdiff_t>(mp.alpha + mp.beta)),
                std::vector<u64>(v.begin() + static_cast<std::ptrdiff_t>(mp.alpha + mp.beta), v.end())};
    try {
      m->add_row(w);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(line_error(no, e.what()));
    }
  }
  if (!m) throw std::invalid_argument("empty matrix file");
  return *m;
}

std::string write_matrix(const GenMatrix& m) {
  const MixedParams& mp = m.params();
  std::ostringstream out;
  out << mp.alpha << ' ' << mp.beta << ' ' << mp.gamma << ' ' << mp.p << ' ' << mp.r << ' ' << mp.s << '\n';
  for (const MixedWord& w : m.rows()) {
    bool first = true;
    for (const auto* block : {&w.u, &w.v, &w.w})
      for (u64 c : *block) {
        out << (first ? "" : " ") << c;
        first = false;
      }
    out << '\n';
  }
  return out.str();
}

CodeInput parse_input(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream lines(text);
  std::string raw;
  bool matrix = false;
  while (std::getline(lines, raw)) {
    std::string line = without_comment(raw);
    if (line.empty()) continue;
    try {
      matrix = parse_integers(line, "").size() == 6;
    } catch (const std::invalid_argument&) {
      matrix = false;
    }
    break;
  }
  std::istringstream again(text);
  CodeInput out;
  if (matrix) out.matrix = parse_matrix(again);
  else out.spec = parse_code_spec(again);
  return out;
}

CodeInput load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_input(in);
}

TripleCode to_code(const CodeInput& input) {
  if (input.matrix) return standard_form(*input.matrix);
  return build_triple(*input.spec);
}

}  // namespace addcyc
