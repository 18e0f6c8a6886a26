#include "homlie/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "homlie/check.hpp"
#include "homlie/errors.hpp"

namespace homlie {

const char* to_string(Err code) {
  switch (code) {
    case Err::ParseError: return "ParseError";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::AntisymmetryConflict: return "AntisymmetryConflict";
    case Err::Singular: return "Singular";
    case Err::NotAHomomorphism: return "NotAHomomorphism";
    case Err::DegenerateTwist: return "DegenerateTwist";
    case Err::NotAnIdeal: return "NotAnIdeal";
    case Err::NotASubalgebra: return "NotASubalgebra";
    case Err::NotARepresentation: return "NotARepresentation";
    case Err::NotMultiplicative: return "NotMultiplicative";
    case Err::NotNilpotent: return "NotNilpotent";
    case Err::NotADerivation: return "NotADerivation";
    case Err::NotInvariant: return "NotInvariant";
    case Err::NotInjective: return "NotInjective";
    case Err::FieldExtensionNeeded: return "FieldExtensionNeeded";
    case Err::PolynomialNotSatisfied: return "PolynomialNotSatisfied";
    case Err::NilindexExceeded: return "NilindexExceeded";
    case Err::InvalidGrading: return "InvalidGrading";
    case Err::SearchExhausted: return "SearchExhausted";
    case Err::BaseMismatch: return "BaseMismatch";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::InternalCheckFailed: return "InternalCheckFailed";
    case Err::IoError: return "IoError";
  }
  return "UnknownError";
}

std::string describe(const CheckResult& r) {
  if (r.ok) return "ok";
  std::ostringstream os;
  os << "violated " << r.law << " at (";
  for (size_t i = 0; i < r.where.size(); ++i) {
    if (i) os << ", ";
    os << r.where[i];
  }
  os << ")";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

namespace {

struct Tok {
  std::string text;
  Index col;  // 1-based
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  for (std::string& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  return lines;
}

std::vector<Tok> tokenize(const std::string& line) {
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && line[j] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    toks.push_back({line.substr(i, j - i), static_cast<Index>(i) + 1});
    i = j;
  }
  return toks;
}

[[noreturn]] void parse_fail(Index line, Index col, const std::string& msg) {
  fail(Err::ParseError, "line " + std::to_string(line) + ", column " +
                            std::to_string(col) + ": " + msg);
}

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer_text(const std::string& s, Index line, Index col) {
  if (!is_integer_token(s))
    parse_fail(line, col, "expected an integer, got '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Index parse_index(const Tok& t, Index line, Index max) {
  const Integer v = parse_integer_text(t.text, line, t.col);
  if (v < 0 || v > Integer(max))
    parse_fail(line, t.col,
               "'" + t.text + "' is out of range (max " + std::to_string(max) + ")");
  return static_cast<Index>(v.convert_to<long long>());
}

Rational parse_coeff(const Tok& t, Index line) {
  const size_t slash = t.text.find('/');
  if (slash == std::string::npos)
    return Rational(parse_integer_text(t.text, line, t.col));
  const std::string num = t.text.substr(0, slash);
  const std::string den = t.text.substr(slash + 1);
  if (den.find('/') != std::string::npos)
    parse_fail(line, t.col, "malformed rational '" + t.text + "'");
  const Integer n = parse_integer_text(num, line, t.col);
  const Integer d = parse_integer_text(den, line, t.col);
  if (d == 0) parse_fail(line, t.col, "zero denominator in '" + t.text + "'");
  return make_rational(n, d);
}

struct NameTable {
  std::vector<std::string> names;
  std::map<std::string, Index> index;
};

NameTable make_table(std::vector<std::string> names) {
  NameTable nt;
  nt.names = std::move(names);
  for (Index i = 0; i < static_cast<Index>(nt.names.size()); ++i)
    nt.index.emplace(nt.names[static_cast<size_t>(i)], i);
  return nt;
}

NameTable default_table(Index dim) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(dim));
  for (Index i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  return make_table(std::move(names));
}

Index resolve(const NameTable& nt, const Tok& t, Index line) {
  const auto it = nt.index.find(t.text);
  if (it == nt.index.end())
    parse_fail(line, t.col, "unknown basis element '" + t.text + "'");
  return it->second;
}

/// `<coeff> <basis> [+ <coeff> <basis>]*` starting at toks[k].
Vec parse_terms(const std::vector<Tok>& toks, size_t k, const NameTable& nt,
                Index dim, Index line) {
  Vec v = Vec::Zero(dim);
  if (k >= toks.size())
    parse_fail(line, toks.back().col + 1, "expected a term after '='");
  for (;;) {
    if (k + 1 >= toks.size())
      parse_fail(line, toks[k].col, "a term is '<coeff> <basis>'");
    const Rational c = parse_coeff(toks[k], line);
    v[resolve(nt, toks[k + 1], line)] += c;
    k += 2;
    if (k == toks.size()) break;
    if (toks[k].text != "+")
      parse_fail(line, toks[k].col, "expected '+' between terms");
    ++k;
    if (k == toks.size())
      parse_fail(line, toks[k - 1].col, "dangling '+'");
  }
  return v;
}

void expect_eq(const std::vector<Tok>& toks, size_t k, Index line) {
  if (k >= toks.size())
    parse_fail(line, toks.back().col + 1, "expected '='");
  if (toks[k].text != "=")
    parse_fail(line, toks[k].col, "expected '=', got '" + toks[k].text + "'");
}

/// `lines[first..last)` hold the declarations; diagnostics use
/// `linenos[i] = first_lineno + i`.
HomAlgebra parse_algebra_lines(const std::vector<std::string>& lines,
                               size_t first, size_t last, Index first_lineno) {
  Index dim = -1;
  Flavor flavor = Flavor::lie;
  bool flavor_seen = false, basis_seen = false;
  NameTable names;
  std::vector<Mat> left;
  Mat twist;
  std::set<std::pair<Index, Index>> declared;
  std::set<Index> declared_twist;

  for (size_t li = first; li < last; ++li) {
    const Index lineno = first_lineno + static_cast<Index>(li - first);
    const std::vector<Tok> toks = tokenize(lines[li]);
    if (toks.empty()) continue;
    const Tok& head = toks[0];

    if (head.text == "dim") {
      if (dim >= 0) parse_fail(lineno, head.col, "dim already declared");
      if (toks.size() != 2)
        parse_fail(lineno, head.col, "usage: dim <d>");
      dim = parse_index(toks[1], lineno, 100000);
      if (dim == 0) parse_fail(lineno, toks[1].col, "dim must be positive");
      names = default_table(dim);
      left.assign(static_cast<size_t>(dim), Mat::Zero(dim, dim));
      twist = Mat::Zero(dim, dim);
      continue;
    }
    if (dim < 0)
      parse_fail(lineno, head.col, "dim must be declared first");

    if (head.text == "basis") {
      if (basis_seen) parse_fail(lineno, head.col, "basis already declared");
      if (!declared.empty() || !declared_twist.empty())
        parse_fail(lineno, head.col,
                   "basis must precede bracket and twist declarations");
      if (static_cast<Index>(toks.size()) - 1 != dim)
        fail(Err::DimensionMismatch,
             "line " + std::to_string(lineno) + ": basis lists " +
                 std::to_string(toks.size() - 1) + " names for dim " +
                 std::to_string(dim));
      std::vector<std::string> given;
      for (size_t k = 1; k < toks.size(); ++k) {
        if (toks[k].text == "+" || toks[k].text == "=")
          parse_fail(lineno, toks[k].col,
                     "'" + toks[k].text + "' cannot be a basis name");
        given.push_back(toks[k].text);
      }
      names = make_table(std::move(given));
      if (static_cast<Index>(names.index.size()) != dim)
        parse_fail(lineno, head.col, "duplicate basis name");
      basis_seen = true;
      continue;
    }

    if (head.text == "flavor") {
      if (flavor_seen) parse_fail(lineno, head.col, "flavor already declared");
      if (!declared.empty() || !declared_twist.empty())
        parse_fail(lineno, head.col,
                   "flavor must precede bracket and twist declarations");
      if (toks.size() != 2)
        parse_fail(lineno, head.col, "usage: flavor lie|assoc");
      if (toks[1].text == "lie")
        flavor = Flavor::lie;
      else if (toks[1].text == "assoc")
        flavor = Flavor::associative;
      else
        parse_fail(lineno, toks[1].col,
                   "unknown flavor '" + toks[1].text + "'");
      flavor_seen = true;
      continue;
    }

    if (head.text == "bracket") {
      if (toks.size() < 4)
        parse_fail(lineno, head.col,
                   "usage: bracket <bi> <bj> = <coeff> <bk> [+ ...]");
      const Index i = resolve(names, toks[1], lineno);
      const Index j = resolve(names, toks[2], lineno);
      expect_eq(toks, 3, lineno);
      const Vec v = parse_terms(toks, 4, names, dim, lineno);
      const std::string ni = names.names[static_cast<size_t>(i)];
      const std::string nj = names.names[static_cast<size_t>(j)];
      if (declared.count({i, j}))
        parse_fail(lineno, head.col,
                   "bracket " + ni + " " + nj + " already declared");
      if (flavor == Flavor::lie) {
        if (i == j && !is_zero(v))
          fail(Err::AntisymmetryConflict,
               "line " + std::to_string(lineno) + ": bracket " + ni + " " +
                   nj + " must vanish");
        if (declared.count({j, i})) {
          if (Vec(-left[static_cast<size_t>(j)].col(i)) == v)
            parse_fail(lineno, head.col,
                       "bracket " + ni + " " + nj +
                           " already declared by antisymmetry");
          fail(Err::AntisymmetryConflict,
               "line " + std::to_string(lineno) + ": bracket " + ni + " " +
                   nj + " conflicts with bracket " + nj + " " + ni);
        }
        left[static_cast<size_t>(i)].col(j) = v;
        left[static_cast<size_t>(j)].col(i) = -v;
      } else {
        left[static_cast<size_t>(i)].col(j) = v;
      }
      declared.insert({i, j});
      continue;
    }

    if (head.text == "twist") {
      if (toks.size() < 3)
        parse_fail(lineno, head.col,
                   "usage: twist <bi> = <coeff> <bj> [+ ...]");
      const Index i = resolve(names, toks[1], lineno);
      expect_eq(toks, 2, lineno);
      if (declared_twist.count(i))
        parse_fail(lineno, head.col,
                   "twist " + names.names[static_cast<size_t>(i)] +
                       " already declared");
      twist.col(i) = parse_terms(toks, 3, names, dim, lineno);
      declared_twist.insert(i);
      continue;
    }

    parse_fail(lineno, head.col, "unknown declaration '" + head.text + "'");
  }

  if (dim < 0) parse_fail(1, 1, "missing dim declaration");
  return HomAlgebra(flavor, std::move(left), std::move(twist),
                    std::move(names.names));
}

std::vector<std::string> safe_names(const HomAlgebra& a) {
  std::vector<std::string> names = a.names();
  if (names.empty())
    for (Index i = 1; i <= a.dim(); ++i)
      names.push_back("e" + std::to_string(i));
  if (static_cast<Index>(names.size()) != a.dim())
    fail(Err::IoError, "name count does not match the dimension");
  std::set<std::string> seen;
  for (const std::string& n : names) {
    bool ok = !n.empty() && n != "+" && n != "=";
    for (char ch : n)
      if (ch == '#' || std::isspace(static_cast<unsigned char>(ch))) ok = false;
    if (!ok) fail(Err::IoError, "basis name '" + n + "' has no file form");
    if (!seen.insert(n).second)
      fail(Err::IoError, "duplicate basis name '" + n + "'");
  }
  return names;
}

void append_terms(std::ostringstream& os, const Vec& v,
                  const std::vector<std::string>& names) {
  bool first = true;
  for (Index k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << v[k].str() << ' ' << names[static_cast<size_t>(k)];
  }
}

}  // namespace

HomAlgebra parse_algebra(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  return parse_algebra_lines(lines, 0, lines.size(), 1);
}

std::string serialize(const HomAlgebra& a) {
  const std::vector<std::string> names = safe_names(a);
  const char* flavor = nullptr;
  switch (a.flavor()) {
    case Flavor::lie: flavor = "lie"; break;
    case Flavor::associative: flavor = "assoc"; break;
    case Flavor::plain:
      fail(Err::IoError, "plain flavor has no file form");
  }
  std::ostringstream os;
  os << "dim " << a.dim() << '\n' << "basis";
  for (const std::string& n : names) os << ' ' << n;
  os << '\n' << "flavor " << flavor << '\n';
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = (a.flavor() == Flavor::lie ? i + 1 : Index(0)); j < a.dim();
         ++j) {
      const Vec v = a.product(i, j);
      if (is_zero(v)) continue;
      os << "bracket " << names[static_cast<size_t>(i)] << ' '
         << names[static_cast<size_t>(j)] << " = ";
      append_terms(os, v, names);
      os << '\n';
    }
  for (Index i = 0; i < a.dim(); ++i) {
    const Vec v = a.twist().col(i);
    if (is_zero(v)) continue;
    os << "twist " << names[static_cast<size_t>(i)] << " = ";
    append_terms(os, v, names);
    os << '\n';
  }
  return os.str();
}

namespace {

HomRepresentation parse_rep_impl(const std::string& text,
                                 const std::string& base_dir, bool cert_mode,
                                 CertificateVerdicts* verdicts,
                                 std::vector<std::string>* trace) {
  const std::vector<std::string> lines = split_lines(text);
  std::optional<HomAlgebra> algebra;
  NameTable names;
  Index module_dim = -1;
  std::vector<Mat> actions;
  Mat beta;
  std::set<std::pair<Index, Index>> action_rows;
  std::set<Index> beta_rows;
  bool saw_faithful = false, saw_nilpotent = false, saw_multiplicative = false,
       saw_nondegenerate = false, saw_nilindex = false;

  for (size_t li = 0; li < lines.size(); ++li) {
    const Index lineno = static_cast<Index>(li) + 1;
    const std::string& line = lines[li];

    if (cert_mode) {
      const size_t p = line.find_first_not_of(" \t");
      if (p != std::string::npos && line.compare(p, 5, "trace") == 0 &&
          (p + 5 == line.size() ||
           std::isspace(static_cast<unsigned char>(line[p + 5])))) {
        trace->push_back(p + 6 <= line.size() ? line.substr(p + 6)
                                              : std::string());
        continue;
      }
    }

    const std::vector<Tok> toks = tokenize(line);
    if (toks.empty()) continue;
    const Tok& head = toks[0];

    if (head.text == "algebra") {
      if (algebra)
        parse_fail(lineno, head.col, "algebra already declared");
      if (toks.size() != 2)
        parse_fail(lineno, head.col, "usage: algebra inline|<path>");
      if (toks[1].text == "inline") {
        size_t end = li + 1;
        while (end < lines.size()) {
          const std::vector<Tok> t = tokenize(lines[end]);
          if (t.size() == 2 && t[0].text == "end" && t[1].text == "algebra")
            break;
          ++end;
        }
        if (end == lines.size())
          parse_fail(lineno, head.col, "missing 'end algebra'");
        algebra = parse_algebra_lines(lines, li + 1, end,
                                      static_cast<Index>(li) + 2);
        li = end;
      } else {
        const std::filesystem::path p =
            base_dir.empty() ? std::filesystem::path(toks[1].text)
                             : std::filesystem::path(base_dir) / toks[1].text;
        algebra = parse_algebra(read_file(p.string()));
      }
      names = make_table(algebra->names());
      continue;
    }
    if (!algebra)
      parse_fail(lineno, head.col, "the algebra block must come first");

    if (head.text == "module_dim") {
      if (module_dim >= 0)
        parse_fail(lineno, head.col, "module_dim already declared");
      if (toks.size() != 2)
        parse_fail(lineno, head.col, "usage: module_dim <m>");
      module_dim = parse_index(toks[1], lineno, 100000);
      actions.assign(static_cast<size_t>(algebra->dim()),
                     Mat::Zero(module_dim, module_dim));
      beta = Mat::Zero(module_dim, module_dim);
      continue;
    }

    if (head.text == "action" || head.text == "beta") {
      if (module_dim < 0)
        parse_fail(lineno, head.col, "module_dim must precede matrix rows");
      const bool is_beta = head.text == "beta";
      size_t k = 1;
      Index target = -1;
      if (!is_beta) {
        if (toks.size() < 2)
          parse_fail(lineno, head.col,
                     "usage: action <bi> row <r> = <coeff>*");
        target = resolve(names, toks[1], lineno);
        k = 2;
      }
      if (k >= toks.size() || toks[k].text != "row")
        parse_fail(lineno, k < toks.size() ? toks[k].col : head.col,
                   "expected 'row'");
      if (k + 1 >= toks.size())
        parse_fail(lineno, toks[k].col, "expected a row index");
      const Index r = parse_index(toks[k + 1], lineno, 100000);
      if (r >= module_dim)
        parse_fail(lineno, toks[k + 1].col,
                   "row index " + std::to_string(r) + " exceeds module_dim " +
                       std::to_string(module_dim));
      expect_eq(toks, k + 2, lineno);
      const size_t coeff_start = k + 3;
      if (static_cast<Index>(toks.size() - coeff_start) != module_dim)
        fail(Err::DimensionMismatch,
             "line " + std::to_string(lineno) + ": row lists " +
                 std::to_string(toks.size() - coeff_start) +
                 " coefficients for module_dim " + std::to_string(module_dim));
      const bool fresh = is_beta ? beta_rows.insert(r).second
                                 : action_rows.insert({target, r}).second;
      if (!fresh) parse_fail(lineno, head.col, "row already declared");
      Mat& m = is_beta ? beta : actions[static_cast<size_t>(target)];
      for (Index c = 0; c < module_dim; ++c)
        m(r, c) = parse_coeff(toks[coeff_start + static_cast<size_t>(c)], lineno);
      continue;
    }

    if (cert_mode && head.text == "verdict") {
      if (toks.size() != 4 || toks[2].text != "=")
        parse_fail(lineno, head.col,
                   "usage: verdict <law> = true|false");
      bool value;
      if (toks[3].text == "true")
        value = true;
      else if (toks[3].text == "false")
        value = false;
      else
        parse_fail(lineno, toks[3].col, "expected true or false");
      const std::string& law = toks[1].text;
      bool* saw = nullptr;
      bool* slot = nullptr;
      if (law == "faithful") {
        saw = &saw_faithful;
        slot = &verdicts->faithful;
      } else if (law == "nilpotent") {
        saw = &saw_nilpotent;
        slot = &verdicts->nilpotent;
      } else if (law == "multiplicative") {
        saw = &saw_multiplicative;
        slot = &verdicts->multiplicative;
      } else if (law == "nondegenerate") {
        saw = &saw_nondegenerate;
        slot = &verdicts->nondegenerate;
      } else {
        parse_fail(lineno, toks[1].col, "unknown verdict '" + law + "'");
      }
      if (*saw) parse_fail(lineno, head.col, "verdict already declared");
      *saw = true;
      *slot = value;
      continue;
    }

    if (cert_mode && head.text == "nilindex") {
      if (saw_nilindex)
        parse_fail(lineno, head.col, "nilindex already declared");
      if (toks.size() != 2)
        parse_fail(lineno, head.col, "usage: nilindex <n>");
      verdicts->nilindex = parse_index(toks[1], lineno, 1000000);
      saw_nilindex = true;
      continue;
    }

    parse_fail(lineno, head.col, "unknown declaration '" + head.text + "'");
  }

  if (!algebra) parse_fail(1, 1, "missing algebra block");
  if (module_dim < 0) parse_fail(1, 1, "missing module_dim");
  if (cert_mode) {
    if (!saw_faithful) parse_fail(1, 1, "missing verdict faithful");
    if (!saw_nilpotent) parse_fail(1, 1, "missing verdict nilpotent");
    if (!saw_multiplicative) parse_fail(1, 1, "missing verdict multiplicative");
    if (!saw_nondegenerate) parse_fail(1, 1, "missing verdict nondegenerate");
    if (!saw_nilindex) parse_fail(1, 1, "missing nilindex");
  }
  return HomRepresentation(
      std::make_shared<const HomAlgebra>(std::move(*algebra)),
      std::move(actions), std::move(beta));
}

void append_rows(std::ostringstream& os, const Mat& m,
                 const std::string& prefix) {
  for (Index r = 0; r < m.rows(); ++r) {
    if (is_zero(m.row(r))) continue;
    os << prefix << " row " << r << " =";
    for (Index c = 0; c < m.cols(); ++c) os << ' ' << m(r, c).str();
    os << '\n';
  }
}

}  // namespace

HomRepresentation parse_representation(const std::string& text,
                                       const std::string& base_dir) {
  return parse_rep_impl(text, base_dir, false, nullptr, nullptr);
}

std::string serialize(const HomRepresentation& rho) {
  const std::vector<std::string> names = safe_names(rho.algebra());
  std::ostringstream os;
  os << "algebra inline\n"
     << serialize(rho.algebra()) << "end algebra\n"
     << "module_dim " << rho.module_dim() << '\n';
  for (Index i = 0; i < rho.base_dim(); ++i)
    append_rows(os, rho.action(i),
                "action " + names[static_cast<size_t>(i)]);
  append_rows(os, rho.module_twist(), "beta");
  return os.str();
}

AdoCertificate parse_certificate(const std::string& text,
                                 const std::string& base_dir) {
  CertificateVerdicts verdicts;
  std::vector<std::string> trace;
  HomRepresentation rep = parse_rep_impl(text, base_dir, true, &verdicts, &trace);
  return AdoCertificate{std::move(rep), verdicts, std::move(trace)};
}

std::string serialize(const AdoCertificate& cert) {
  std::ostringstream os;
  os << serialize(cert.representation);
  os << "verdict faithful = " << (cert.verdicts.faithful ? "true" : "false")
     << '\n';
  os << "verdict nilpotent = " << (cert.verdicts.nilpotent ? "true" : "false")
     << '\n';
  os << "verdict multiplicative = "
     << (cert.verdicts.multiplicative ? "true" : "false") << '\n';
  os << "verdict nondegenerate = "
     << (cert.verdicts.nondegenerate ? "true" : "false") << '\n';
  os << "nilindex " << cert.verdicts.nilindex << '\n';
  for (const std::string& t : cert.trace) os << "trace " << t << '\n';
  return os.str();
}

Mat parse_matrix(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  std::vector<std::vector<Rational>> rows;
  for (size_t li = 0; li < lines.size(); ++li) {
    const std::vector<Tok> toks = tokenize(lines[li]);
    if (toks.empty()) continue;
    std::vector<Rational> row;
    row.reserve(toks.size());
    for (const Tok& t : toks)
      row.push_back(parse_coeff(t, static_cast<Index>(li) + 1));
    if (!rows.empty() && rows.front().size() != row.size())
      fail(Err::DimensionMismatch,
           "line " + std::to_string(li + 1) + ": row has " +
               std::to_string(row.size()) + " entries, expected " +
               std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  Mat m(static_cast<Index>(rows.size()),
        rows.empty() ? 0 : static_cast<Index>(rows.front().size()));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::IoError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::IoError, "cannot write " + path);
  out << content;
  if (!out.good()) fail(Err::IoError, "cannot write " + path);
}

}  // namespace homlie
