#include "cliffwave/evalspec.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cliffwave/cliffpoly.hpp"
#include "cliffwave/monomodel.hpp"
#include "cliffwave/nilgroup.hpp"
#include "cliffwave/oscillator.hpp"

namespace cliffwave {

namespace {

constexpr int kMaxEvalDim = 6;

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

double to_real(const FunctionSpec& s, const std::string& key,
               const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw EvalError(s.line, "bad number for '" + key + "': " + text);
  return v;
}

bool has_arg(const FunctionSpec& s, const std::string& key) {
  return s.args.count(key) != 0;
}

const std::string& arg_text(const FunctionSpec& s, const std::string& key) {
  auto it = s.args.find(key);
  if (it == s.args.end())
    throw EvalError(s.line, s.name + " needs " + key + "=...");
  return it->second;
}

std::vector<double> parse_list(const FunctionSpec& s, const std::string& key) {
  std::string text = arg_text(s, key);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')')
      throw EvalError(s.line, "unbalanced parentheses in " + key);
    text = text.substr(1, text.size() - 2);
  }
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(to_real(s, key, item));
  if (out.empty()) throw EvalError(s.line, "empty list for " + key);
  return out;
}

std::vector<int> parse_int_list(const FunctionSpec& s, const std::string& key) {
  std::vector<int> out;
  for (double v : parse_list(s, key)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v || i < 0)
      throw EvalError(s.line, key + " entries must be nonnegative integers");
    out.push_back(i);
  }
  return out;
}

std::vector<Complex> parse_pairs(const FunctionSpec& s,
                                 const std::string& key) {
  const std::vector<double> flat = parse_list(s, key);
  if (flat.size() % 2 != 0)
    throw EvalError(s.line, key + " expects re,im pairs");
  std::vector<Complex> out(flat.size() / 2);
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = {flat[2 * j], flat[2 * j + 1]};
  return out;
}

int parse_int(const FunctionSpec& s, const std::string& key, int fallback) {
  if (!has_arg(s, key)) return fallback;
  const double v = to_real(s, key, arg_text(s, key));
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw EvalError(s.line, key + " must be an integer");
  return i;
}

void require_dim(const FunctionSpec& s, int n) {
  if (n < 1 || n > kMaxEvalDim)
    throw EvalError(s.line,
                    "dimension out of range 1.." + std::to_string(kMaxEvalDim));
}

void require_point(const FunctionSpec& s, std::span<const double> pt,
                   std::size_t want) {
  if (pt.size() != want)
    throw EvalError(s.line, s.name + " expects points of length " +
                                std::to_string(want) + ", got " +
                                std::to_string(pt.size()));
}

Multivector eval_v(const FunctionSpec& s, std::span<const double> pt) {
  const std::vector<int> k = parse_int_list(s, "k");
  const int n = parse_int(s, "n", static_cast<int>(k.size()));
  require_dim(s, n);
  if (static_cast<int>(k.size()) != n)
    throw EvalError(s.line, "k length must equal n");
  require_point(s, pt, n + 1);
  return monogenic_monomial(n, k, std::max(kDefaultDegreeCap,
                                           multi_degree(k)))
      .eval(pt);
}

Multivector eval_e(const FunctionSpec& s, std::span<const double> pt) {
  const std::vector<double> u = parse_list(s, "u");
  const int n = static_cast<int>(u.size());
  require_dim(s, n);
  require_point(s, pt, n + 1);
  return monogenic_exponential(u, pt);
}

Multivector eval_hermite(const FunctionSpec& s, std::span<const double> pt) {
  const std::vector<int> m = parse_int_list(s, "m");
  require_dim(s, static_cast<int>(m.size()));
  require_point(s, pt, m.size());
  return Multivector::scalar(1, hermite_value(m, pt));
}

Multivector eval_gauss_packet(const FunctionSpec& s,
                              std::span<const double> pt) {
  GaussPacket f;
  const std::vector<Complex> amp = parse_pairs(s, "amp");
  if (amp.size() != 1) throw EvalError(s.line, "amp is a single re,im pair");
  f.amp = amp[0];
  f.lin = parse_pairs(s, "lin");
  require_dim(s, static_cast<int>(f.lin.size()));
  require_point(s, pt, f.lin.size());
  return Multivector::scalar(1, packet_eval(f, pt));
}

Multivector eval_vpacket(const FunctionSpec& s, std::span<const double> pt) {
  VPacket f;
  f.amp = parse_pairs(s, "amp");
  f.lin = parse_pairs(s, "lin");
  f.n = static_cast<int>(f.amp.size());
  if (f.lin.size() != f.amp.size())
    throw EvalError(s.line, "amp and lin must list one pair per component");
  require_dim(s, f.n);
  require_point(s, pt, 1);
  const std::vector<Complex> vals = vpacket_values(f, pt[0]);
  Multivector out(f.n);
  for (int c = 0; c < f.n; ++c) {
    out.add_term(0, vals[c].real());
    out.add_term(Blade{1u} << c, vals[c].imag());
  }
  return out;
}

Multivector eval_gn_wavelet(const FunctionSpec& s, std::span<const double> pt) {
  const std::vector<double> tp = parse_list(s, "tp");
  const std::vector<double> a = parse_list(s, "a");
  const int n = static_cast<int>(tp.size());
  require_dim(s, n);
  if (a.size() != tp.size() + 1)
    throw EvalError(s.line, "a must have n+1 entries");
  require_point(s, pt, 2 * n + 1);
  return g_wavelet_closed(tp, a, point_to_nil(pt, n));
}

Multivector eval_reduced_wavelet(const FunctionSpec& s,
                                 std::span<const double> pt) {
  const std::vector<double> a = parse_list(s, "a");
  const int n = static_cast<int>(a.size()) - 1;
  require_dim(s, n);
  require_point(s, pt, n + 1);
  return reduced_wavelet(a, pt);
}

Multivector eval_b_kernel(const FunctionSpec& s, std::span<const double> pt) {
  const std::vector<Complex> z = parse_pairs(s, "z");
  const int n = static_cast<int>(z.size());
  require_dim(s, n);
  const int trunc = parse_int(s, "N", 8);
  BConvention conv = BConvention::kConjugated;
  if (has_arg(s, "conv")) {
    const std::string& c = arg_text(s, "conv");
    if (c == "plain")
      conv = BConvention::kPlain;
    else if (c != "conj")
      throw EvalError(s.line, "conv must be conj or plain");
  }
  require_point(s, pt, n + 1);
  return b_kernel(z, pt, n, trunc, conv);
}

Multivector eval_m2_kernel(const FunctionSpec& s, std::span<const double> pt) {
  int n = parse_int(s, "n", 0);
  if (n == 0) {
    if (pt.size() % 2 != 0 || pt.size() < 4)
      throw EvalError(s.line,
                      "m2_kernel points hold x then y, each of length n+1");
    n = static_cast<int>(pt.size()) / 2 - 1;
  }
  require_dim(s, n);
  require_point(s, pt, 2 * (n + 1));
  const int trunc = parse_int(s, "N", 8);
  const std::span<const double> x = pt.subspan(0, n + 1);
  const std::span<const double> y = pt.subspan(n + 1);
  return m2_repro_kernel(x, y, n, trunc);
}

Multivector eval_m2_coherent(const FunctionSpec& s,
                             std::span<const double> pt) {
  HeisenbergElement g;
  g.t = has_arg(s, "t") ? to_real(s, "t", arg_text(s, "t")) : 0.0;
  g.z = parse_pairs(s, "z");
  const int n = static_cast<int>(g.z.size());
  require_dim(s, n);
  require_point(s, pt, n + 1);
  return m2_coherent(g, parse_int(s, "N", 12)).eval(pt);
}

Multivector eval_sb_kernel(const FunctionSpec& s, std::span<const double> pt) {
  int n = parse_int(s, "n", 0);
  if (n == 0) {
    if (pt.size() % 4 != 0 || pt.empty())
      throw EvalError(s.line,
                      "sb_kernel points hold z then w as re,im pairs");
    n = static_cast<int>(pt.size()) / 4;
  }
  require_dim(s, n);
  require_point(s, pt, 4 * n);
  Complex expo{0.0};
  for (int j = 0; j < n; ++j) {
    const Complex zj{pt[2 * j], pt[2 * j + 1]};
    const Complex wj{pt[2 * n + 2 * j], pt[2 * n + 2 * j + 1]};
    expo += std::conj(zj) * wj - 0.5 * (std::norm(zj) + std::norm(wj));
  }
  return Multivector::scalar(1, std::exp(expo));
}

}  // namespace

std::vector<FunctionSpec> parse_spec_text(const std::string& text) {
  std::vector<FunctionSpec> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    FunctionSpec spec;
    spec.line = lineno;
    spec.name = toks[0];
    spec.raw = toks[0];
    for (std::size_t i = 1; i < toks.size(); ++i) {
      spec.raw += " " + toks[i];
      const auto eq = toks[i].find('=');
      if (eq == std::string::npos || eq == 0)
        throw EvalError(lineno, "expected key=value, got '" + toks[i] + "'");
      spec.args[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<std::vector<double>> parse_points_text(const std::string& text) {
  std::vector<std::vector<double>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    const std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    std::vector<double> pt;
    for (const std::string& t : toks) {
      char* end = nullptr;
      const double v = std::strtod(t.c_str(), &end);
      if (end == t.c_str() || *end != '\0')
        throw EvalError(lineno, "bad coordinate '" + t + "'");
      pt.push_back(v);
    }
    out.push_back(std::move(pt));
  }
  return out;
}

Multivector eval_function(const FunctionSpec& spec,
                          std::span<const double> point) {
  if (spec.name == "V") return eval_v(spec, point);
  if (spec.name == "E") return eval_e(spec, point);
  if (spec.name == "hermite") return eval_hermite(spec, point);
  if (spec.name == "gauss_packet") return eval_gauss_packet(spec, point);
  if (spec.name == "vpacket") return eval_vpacket(spec, point);
  if (spec.name == "gn_wavelet") return eval_gn_wavelet(spec, point);
  if (spec.name == "reduced_wavelet")
    return eval_reduced_wavelet(spec, point);
  if (spec.name == "b_kernel") return eval_b_kernel(spec, point);
  if (spec.name == "m2_kernel") return eval_m2_kernel(spec, point);
  if (spec.name == "m2_coherent") return eval_m2_coherent(spec, point);
  if (spec.name == "sb_kernel") return eval_sb_kernel(spec, point);
  throw EvalError(spec.line, "unknown function '" + spec.name + "'");
}

std::string eval_report(const std::string& spec_text,
                        const std::string& points_text) {
  const std::vector<FunctionSpec> specs = parse_spec_text(spec_text);
  const std::vector<std::vector<double>> points =
      parse_points_text(points_text);
  nlohmann::ordered_json doc;
  doc["functions"] = nlohmann::ordered_json::array();
  for (const FunctionSpec& spec : specs) {
    nlohmann::ordered_json entry;
    entry["spec"] = spec.raw;
    entry["line"] = spec.line;
    entry["values"] = nlohmann::ordered_json::array();
    for (const std::vector<double>& pt : points) {
      const Multivector value = eval_function(spec, pt);
      nlohmann::ordered_json rec;
      rec["point"] = pt;
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
      for (const auto& [blade, c] : value.terms())
        coeffs[blade_name(blade)] = {c.real(), c.imag()};
      rec["value"] = std::move(coeffs);
      entry["values"].push_back(std::move(rec));
    }
    doc["functions"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace cliffwave
