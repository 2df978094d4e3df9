#include "toric/io.hpp"

#include <charconv>
#include <sstream>

#include "toric/error.hpp"
#include "toric/text.hpp"

namespace toric {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

template <class T>
std::optional<T> to_unsigned(std::string_view s) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& x : items) s += " " + x;
  return s;
}

template <class T, class F>
std::vector<std::string> strings(const std::vector<T>& v, F f) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(f(x));
  return out;
}

std::vector<std::string> var_numbers(const std::vector<std::size_t>& v) {
  return strings(v, [](std::size_t i) { return std::to_string(i + 1); });
}

std::vector<std::string> integers(const std::vector<Integer>& v) {
  return strings(v, [](const Integer& x) { return x.get_str(); });
}

std::vector<std::string> rationals(const std::vector<Rat>& v) {
  return strings(v, [](const Rat& x) { return to_string(x); });
}

void emit_poly(std::ostringstream& os, const std::string& key, const UniPoly<RatFun>& p) {
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeff(k).is_zero()) continue;
    os << key << " " << k << " " << to_string(p.coeff(k)) << "\n";
  }
}

void emit_resolution_body(std::ostringstream& os, const std::string& prefix, const GeometricResolution& res) {
  emit_poly(os, prefix + "q", res.q);
  for (std::size_t k = 0; k < res.dependent_vars.size(); ++k) {
    emit_poly(os, prefix + "param " + std::to_string(res.dependent_vars[k] + 1), res.params[k]);
  }
}

std::string linear_form(const std::vector<std::size_t>& vars, const std::vector<Integer>& coeffs, std::size_t n) {
  SparsePoly p(n);
  for (std::size_t k = 0; k < vars.size() && k < coeffs.size(); ++k) {
    p += SparsePoly::variable(n, vars[k]) * Rat(coeffs[k]);
  }
  return to_string(p);
}

}  // namespace

ProjectionProblem SystemFile::problem() const {
  ProjectionProblem p;
  p.system = system;
  p.ell = ell;
  if (seed) p.options.seed = *seed;
  if (bound) p.options.bound = *bound;
  if (retries) p.options.retry_limit = *retries;
  if (precision) p.options.precision = *precision;
  return p;
}

SystemFile parse_system(std::string_view text) {
  SystemFile f;
  bool have_n = false, have_r = false, in_poly = false;
  std::size_t poly_line = 0;
  std::vector<SparsePoly::Term> terms;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t lineno = li + 1;
    std::string_view line = lines[li];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string_view key = tok[0].text;

    if (in_poly) {
      if (key == "end") {
        if (tok.size() != 1) fail_at(lineno, tok[1].column, "unexpected text after end");
        if (terms.empty()) fail_at(poly_line, 1, "empty support");
        SparsePoly p = SparsePoly::from_terms(f.n, std::move(terms));
        if (p.is_zero()) fail_at(poly_line, 1, "empty support");
        f.system.push_back(std::move(p));
        terms.clear();
        in_poly = false;
        continue;
      }
      std::size_t colon = tok.size();
      for (std::size_t i = 0; i < tok.size(); ++i) {
        if (tok[i].text == ":") colon = i;
      }
      if (colon == tok.size()) fail_at(lineno, tok[0].column, "expected 'e1 ... en : coefficient'");
      if (colon != f.n) {
        fail_at(lineno, tok[0].column,
                "arity mismatch: exponent vector has " + std::to_string(colon) + " entries, expected " +
                    std::to_string(f.n));
      }
      if (colon + 2 != tok.size()) {
        fail_at(lineno, tok[colon].column, "expected exactly one coefficient after ':'");
      }
      std::vector<std::uint32_t> e;
      for (std::size_t i = 0; i < colon; ++i) {
        auto v = to_unsigned<std::uint32_t>(tok[i].text);
        if (!v) fail_at(lineno, tok[i].column, "exponent must be a nonnegative integer");
        e.push_back(*v);
      }
      Rat c;
      try {
        c = parse_rat(tok[colon + 1].text);
      } catch (const Error& err) {
        fail_at(lineno, tok[colon + 1].column, "coefficient is not rational: " + std::string(tok[colon + 1].text));
      }
      terms.emplace_back(ExpVec(std::move(e)), c);
      continue;
    }

    if (key == "poly") {
      if (!have_n || !have_r) fail_at(lineno, tok[0].column, "n and r must precede the first poly block");
      if (tok.size() != 1) fail_at(lineno, tok[1].column, "unexpected text after poly");
      in_poly = true;
      poly_line = lineno;
      continue;
    }
    if (tok.size() != 2) fail_at(lineno, tok[0].column, "expected '<key> <value>'");
    const auto value = to_unsigned<std::uint64_t>(tok[1].text);
    if (!value) fail_at(lineno, tok[1].column, "expected a nonnegative integer");
    if (key == "n") {
      if (*value == 0) fail_at(lineno, tok[1].column, "n must be positive");
      f.n = *value;
      have_n = true;
    } else if (key == "r") {
      f.r = *value;
      have_r = true;
    } else if (key == "ell") {
      f.ell = *value;
    } else if (key == "seed") {
      f.seed = *value;
    } else if (key == "bound") {
      if (*value == 0) fail_at(lineno, tok[1].column, "bound must be positive");
      f.bound = Integer(static_cast<unsigned long>(*value));
    } else if (key == "retries") {
      f.retries = static_cast<unsigned>(*value);
    } else if (key == "precision") {
      f.precision = *value;
    } else {
      fail_at(lineno, tok[0].column, "unknown key '" + std::string(key) + "'");
    }
  }
  if (in_poly) fail_at(poly_line, 1, "poly block is not closed");
  if (!have_n || !have_r) throw InputError("missing n or r");
  if (f.system.size() != f.r) {
    throw InputError("arity mismatch: r = " + std::to_string(f.r) + " but " + std::to_string(f.system.size()) +
                     " poly blocks");
  }
  return f;
}

std::string emit_resolution(const ProjectionResult& r) {
  const Provenance& p = r.provenance;
  std::ostringstream os;
  os << "resolution-format 1\n";
  os << "kind " << (r.dense_image ? "dense-image" : "projection") << "\n";
  os << "ambient " << r.ambient << "\n";
  os << "ell " << r.ell << "\n";
  os << "trans-basis" << join(var_numbers(p.trans_basis)) << "\n";
  os << "free" << join(var_numbers(r.free_vars)) << "\n";
  os << "dependent" << join(var_numbers(r.dependent_vars)) << "\n";
  os << "specialized" << join(var_numbers(r.specialized_vars)) << "\n";
  os << "permutation" << join(var_numbers(p.permutation)) << "\n";
  os << "seed " << p.seed << "\n";
  os << "bound " << p.bound.get_str() << "\n";
  os << "mv-bound " << p.mv_bound.get_str() << "\n";
  if (r.dense_image) {
    os << "DENSE_IMAGE t=" << r.ell << "\n";
    os << "end\n";
    return os.str();
  }
  os << "projected" << join(var_numbers(r.resolution.dependent_vars)) << "\n";
  os << "retries " << p.retries << "\n";
  os << "b" << join(integers(p.b)) << "\n";
  os << "lambda" << join(integers(p.lambda)) << "\n";
  os << "mu" << join(integers(p.mu)) << "\n";
  os << "xi" << join(rationals(p.xi)) << "\n";
  os << "precision " << p.precision << "\n";
  os << "lift-bound " << p.lift_bound.get_str() << "\n";
  os << "multiplicity-warning " << (r.parametric.multiplicity_warning ? 1 : 0) << "\n";
  emit_resolution_body(os, "parametric.", r.parametric);
  emit_resolution_body(os, "projected.", r.resolution);
  os << "end\n";
  return os.str();
}

std::string emit_zero_dim(const GeometricResolution& res, std::uint64_t seed) {
  std::ostringstream os;
  os << "resolution-format 1\n";
  os << "kind zero-dim\n";
  os << "ambient " << res.ambient << "\n";
  os << "dependent" << join(var_numbers(res.dependent_vars)) << "\n";
  os << "seed " << seed << "\n";
  os << "lambda" << join(integers(res.lambda)) << "\n";
  os << "multiplicity-warning " << (res.multiplicity_warning ? 1 : 0) << "\n";
  emit_resolution_body(os, "", res);
  os << "end\n";
  return os.str();
}

ProjectionResult parse_resolution(std::string_view text) {
  ProjectionResult r;
  Provenance& p = r.provenance;
  std::string kind;
  bool ended = false;
  // Y-coefficients are collected per key and assembled at the end, once the
  // variable lists are known.
  struct Coeff {
    std::string block;  // "parametric", "projected" or "" for zero-dim
    long var;           // -1 for q
    std::size_t degree;
    std::string text;
    std::size_t line;
  };
  std::vector<Coeff> coeffs;

  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t lineno = li + 1;
    const auto tok = tokenize(lines[li]);
    if (tok.empty()) fail_at(lineno, 1, "blank line");
    if (ended) fail_at(lineno, 1, "text after end");
    const std::string_view key = tok[0].text;
    auto count = [&](std::size_t k) {
      if (tok.size() != k + 1) fail_at(lineno, tok[0].column, "wrong number of fields for " + std::string(key));
    };
    auto number = [&](std::size_t i) -> std::uint64_t {
      auto v = to_unsigned<std::uint64_t>(tok[i].text);
      if (!v) fail_at(lineno, tok[i].column, "expected a nonnegative integer");
      return *v;
    };
    auto var_list = [&] {
      std::vector<std::size_t> v;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto x = number(i);
        if (x == 0) fail_at(lineno, tok[i].column, "variables are numbered from 1");
        v.push_back(x - 1);
      }
      return v;
    };
    auto int_list = [&] {
      std::vector<Integer> v;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const Rat x = parse_rat(tok[i].text);
        if (x.get_den() != 1) fail_at(lineno, tok[i].column, "expected an integer");
        v.push_back(x.get_num());
      }
      return v;
    };

    if (li == 0) {
      if (key != "resolution-format" || tok.size() != 2 || tok[1].text != "1") {
        fail_at(lineno, 1, "expected 'resolution-format 1'");
      }
      continue;
    }
    if (key == "kind") {
      count(1);
      kind = tok[1].text;
      if (kind != "projection" && kind != "dense-image" && kind != "zero-dim") {
        fail_at(lineno, tok[1].column, "unknown kind");
      }
      r.dense_image = kind == "dense-image";
    } else if (key == "ambient") {
      count(1);
      r.ambient = number(1);
    } else if (key == "ell") {
      count(1);
      r.ell = number(1);
    } else if (key == "trans-basis") {
      p.trans_basis = var_list();
    } else if (key == "free") {
      r.free_vars = var_list();
    } else if (key == "dependent") {
      r.dependent_vars = var_list();
    } else if (key == "specialized") {
      r.specialized_vars = var_list();
    } else if (key == "projected") {
      r.resolution.dependent_vars = var_list();
    } else if (key == "permutation") {
      p.permutation = var_list();
    } else if (key == "seed") {
      count(1);
      p.seed = number(1);
    } else if (key == "bound") {
      count(1);
      p.bound = Integer(std::string(tok[1].text));
    } else if (key == "mv-bound") {
      count(1);
      p.mv_bound = Integer(std::string(tok[1].text));
    } else if (key == "lift-bound") {
      count(1);
      p.lift_bound = Integer(std::string(tok[1].text));
    } else if (key == "retries") {
      count(1);
      p.retries = static_cast<unsigned>(number(1));
    } else if (key == "precision") {
      count(1);
      p.precision = number(1);
    } else if (key == "b") {
      p.b = int_list();
    } else if (key == "lambda") {
      p.lambda = int_list();
    } else if (key == "mu") {
      p.mu = int_list();
    } else if (key == "xi") {
      for (std::size_t i = 1; i < tok.size(); ++i) p.xi.push_back(parse_rat(tok[i].text));
    } else if (key == "multiplicity-warning") {
      count(1);
      const bool w = number(1) != 0;
      r.parametric.multiplicity_warning = w;
      r.resolution.multiplicity_warning = w;
    } else if (key == "DENSE_IMAGE") {
      count(1);
    } else if (key == "end") {
      count(0);
      ended = true;
    } else {
      std::string block;
      std::string_view rest = key;
      if (auto dot = key.find('.'); dot != std::string_view::npos) {
        block = std::string(key.substr(0, dot));
        rest = key.substr(dot + 1);
        if (block != "parametric" && block != "projected") fail_at(lineno, 1, "unknown block");
      }
      if (rest == "q") {
        count(2);
        coeffs.push_back({block, -1, number(1), std::string(tok[2].text), lineno});
      } else if (rest == "param") {
        count(3);
        const auto v = number(1);
        if (v == 0) fail_at(lineno, tok[1].column, "variables are numbered from 1");
        coeffs.push_back({block, static_cast<long>(v - 1), number(2), std::string(tok[3].text), lineno});
      } else {
        fail_at(lineno, tok[0].column, "unknown key '" + std::string(key) + "'");
      }
    }
  }
  if (!ended) throw InputError("missing end line");
  if (kind.empty()) throw InputError("missing kind line");

  const std::size_t n = r.ambient;
  auto place = [&](GeometricResolution& res, const Coeff& c) {
    auto put = [&](UniPoly<RatFun>& poly) {
      std::vector<RatFun> v = poly.coeffs();
      if (v.size() <= c.degree) v.resize(c.degree + 1, RatFun(n, Rat(0)));
      v[c.degree] = parse_ratfun(c.text, n);
      poly = UniPoly<RatFun>(std::move(v));
    };
    if (c.var < 0) return put(res.q);
    for (std::size_t k = 0; k < res.dependent_vars.size(); ++k) {
      if (res.dependent_vars[k] == static_cast<std::size_t>(c.var)) return put(res.params[k]);
    }
    fail_at(c.line, 1, "parametrization of a variable that is not listed");
  };
  auto prepare = [&](GeometricResolution& res, std::vector<std::size_t> free, std::vector<std::size_t> dep,
                     std::vector<Integer> lambda) {
    res.ambient = n;
    res.free_vars = std::move(free);
    res.dependent_vars = std::move(dep);
    res.lambda = std::move(lambda);
    res.params.assign(res.dependent_vars.size(), UniPoly<RatFun>());
  };
  if (kind == "zero-dim") {
    prepare(r.resolution, {}, r.dependent_vars, p.lambda);
    for (const auto& c : coeffs) {
      if (!c.block.empty()) fail_at(c.line, 1, "zero-dim files have no blocks");
      place(r.resolution, c);
    }
  } else if (kind == "projection") {
    prepare(r.parametric, r.free_vars, r.dependent_vars, p.lambda);
    prepare(r.resolution, r.free_vars, r.resolution.dependent_vars, p.mu);
    for (const auto& c : coeffs) {
      if (c.block.empty()) fail_at(c.line, 1, "coefficient outside a block");
      place(c.block == "parametric" ? r.parametric : r.resolution, c);
    }
  } else if (!coeffs.empty()) {
    fail_at(coeffs.front().line, 1, "dense-image files carry no resolution");
  }
  return r;
}

std::string render_text(const GeometricResolution& res) {
  const std::size_t n = res.ambient;
  std::ostringstream os;
  std::vector<std::string> free;
  for (auto v : res.free_vars) free.push_back("X" + std::to_string(v + 1));
  if (!free.empty()) os << "free:" << join(free) << "\n";
  os << "Y = " << linear_form(res.dependent_vars, res.lambda, n) << "\n";
  os << "q(Y) = " << to_string(res.q) << "\n";
  for (std::size_t k = 0; k < res.dependent_vars.size(); ++k) {
    os << "X" << res.dependent_vars[k] + 1 << " = " << to_string(res.params[k]) << "\n";
  }
  if (res.multiplicity_warning) os << "warning: multiple roots, the radical was used\n";
  return os.str();
}

std::string render_text(const ProjectionResult& r) {
  if (r.dense_image) return "DENSE_IMAGE t=" + std::to_string(r.ell) + "\n";
  return render_text(r.resolution);
}

std::vector<Integer> parse_int_list(std::string_view text) {
  std::vector<Integer> out;
  for (const Rat& x : parse_rat_list(text)) {
    if (x.get_den() != 1) throw InputError("expected integers in '" + std::string(text) + "'");
    out.push_back(x.get_num());
  }
  return out;
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  std::string s(text);
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  for (const auto& t : tokenize(s)) out.push_back(parse_rat(t.text));
  return out;
}

}  // namespace toric
