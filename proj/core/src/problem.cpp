#include "satgb/problem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "satgb/field.hpp"

namespace satgb {

std::string ProblemSpec::fieldName() const { return prime ? "Zp" + std::to_string(*prime) : "Q"; }

namespace {

using Kind = ParseError::Kind;

struct Token {
  enum class Type { kIdent, kInt, kSym, kEnd };
  Type type;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int l = line, col = column;
    std::size_t j = i;
    if (std::isalpha(c) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Type::kIdent, text.substr(i, j - i), l, col});
    } else if (std::isdigit(c)) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Type::kInt, text.substr(i, j - i), l, col});
    } else if (std::string(",;:+-*/^()[]").find(static_cast<char>(c)) != std::string::npos) {
      j = i + 1;
      out.push_back({Token::Type::kSym, std::string(1, static_cast<char>(c)), l, col});
    } else {
      throw ParseError(Kind::kSyntax, l, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    advance(j - i);
  }
  out.push_back({Token::Type::kEnd, "", line, column});
  return out;
}

using Poly = std::map<std::vector<Exponent>, mpq_class>;

void addTo(Poly& acc, const std::vector<Exponent>& e, const mpq_class& c) {
  auto [it, inserted] = acc.emplace(e, c);
  if (!inserted) it->second += c;
  if (it->second == 0) acc.erase(it);
}

Poly mulPoly(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<Exponent> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checkedAdd(ea[i], eb[i], "parsed power");
      addTo(out, e, ca * cb);
    }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  ProblemSpec run() {
    ProblemSpec spec;
    const Token* ringTok = nullptr;
    const Token* orderTok = nullptr;
    const Token* gradingTok = nullptr;
    const Token* moduleTok = nullptr;
    IntMatrix gradingRows, shiftRows, orderRows;
    std::optional<NamedOrder> named;
    std::size_t rank = 1;
    bool haveShifts = false;

    while (peek().type != Token::Type::kEnd) {
      const Token& kw = expectIdent("a clause keyword");
      if (kw.text == "ring") {
        once(ringTok, kw);
        do {
          const Token& name = expectIdent("an indeterminate name");
          if (std::find(spec.variables.begin(), spec.variables.end(), name.text) != spec.variables.end())
            fail(Kind::kSyntax, name, "indeterminate '" + name.text + "' declared twice");
          spec.variables.push_back(name.text);
        } while (acceptSym(","));
        const Token& over = expectIdent("'over'");
        if (over.text != "over") fail(Kind::kSyntax, over, "expected 'over'");
        const Token& f = expectIdent("Q or Zp");
        if (f.text == "Q") {
          spec.prime.reset();
        } else if (f.text == "Zp") {
          const Token& p = expectInt();
          mpz_class v(p.text);
          if (v >= (mpz_class(1) << 31)) fail(Kind::kSyntax, p, "characteristic too large");
          try {
            PrimeField check(static_cast<std::uint32_t>(v.get_ui()));
          } catch (const DomainError&) {
            fail(Kind::kSyntax, p, p.text + " is not a prime");
          }
          spec.prime = static_cast<std::uint32_t>(v.get_ui());
        } else {
          fail(Kind::kSyntax, f, "expected Q or Zp");
        }
        expectSym(";");
      } else if (kw.text == "order") {
        once(orderTok, kw);
        const Token& o = expectIdent("an ordering name");
        if (o.text == "Lex") {
          named = NamedOrder::kLex;
        } else if (o.text == "DegLex") {
          named = NamedOrder::kDegLex;
        } else if (o.text == "DegRevLex") {
          named = NamedOrder::kDegRevLex;
        } else if (o.text == "matrix") {
          orderRows = intRows();
        } else {
          fail(Kind::kSyntax, o, "unknown ordering '" + o.text + "'");
        }
        expectSym(";");
      } else if (kw.text == "grading") {
        once(gradingTok, kw);
        gradingRows = intRows();
        expectSym(";");
      } else if (kw.text == "module") {
        once(moduleTok, kw);
        const Token& r = expectInt();
        rank = std::stoul(r.text);
        if (rank == 0) fail(Kind::kDimensionMismatch, r, "module rank must be positive");
        if (peek().type == Token::Type::kIdent && peek().text == "shifts") {
          next();
          shiftRows = intRows();
          haveShifts = true;
        }
        expectSym(";");
      } else if (kw.text == "gens") {
        expectSym(":");
        if (!ringTok) inferVariables(spec.variables);
        if (spec.variables.empty()) fail(Kind::kSyntax, kw, "no indeterminates");
        names_ = &spec.variables;
        do {
          const Token& start = peek();
          RawVector v = generator(rank);
          if (v.empty()) fail(Kind::kZeroGenerator, start, "generator is zero");
          if (spec.prime) {
            bool zero = true;
            for (const auto& [k, c] : v) {
              if (c.get_den() % *spec.prime == 0)
                fail(Kind::kSyntax, start, "denominator vanishes modulo " + std::to_string(*spec.prime));
              zero = zero && c.get_num() % *spec.prime == 0;
            }
            if (zero) fail(Kind::kZeroGenerator, start, "generator is zero modulo " + std::to_string(*spec.prime));
          }
          spec.generators.push_back(std::move(v));
        } while (acceptSym(","));
        expectSym(";");
        if (peek().type != Token::Type::kEnd) fail(Kind::kSyntax, peek(), "unexpected input after gens");
        break;
      } else {
        fail(Kind::kSyntax, kw, "unknown clause '" + kw.text + "'");
      }
    }
    if (spec.generators.empty()) fail(Kind::kSyntax, peek(), "missing gens clause");

    const std::size_t n = spec.variables.size();
    if (named) {
      spec.ordering = named == NamedOrder::kLex      ? OrderSpec::lex()
                      : named == NamedOrder::kDegLex ? OrderSpec::degLex()
                                                     : OrderSpec::degRevLex();
    } else if (!orderRows.empty()) {
      if (orderRows.size() != n || orderRows.front().size() != n)
        fail(Kind::kDimensionMismatch, *orderTok, "order matrix must be " + std::to_string(n) + " x " + std::to_string(n));
      try {
        spec.ordering = OrderSpec::matrix(orderRows);
      } catch (const DomainError& e) {
        fail(Kind::kDimensionMismatch, *orderTok, e.what());
      }
    }
    if (gradingRows.empty()) gradingRows = {std::vector<std::int64_t>(n, 1)};
    if (gradingRows.front().size() != n)
      fail(Kind::kDimensionMismatch, gradingTok ? *gradingTok : peek(),
           "grading rows must have " + std::to_string(n) + " entries");
    std::vector<Degree> shifts(rank, Degree(gradingRows.size(), 0));
    if (haveShifts) {
      if (shiftRows.size() != rank || shiftRows.front().size() != gradingRows.size())
        fail(Kind::kDimensionMismatch, *moduleTok,
             "shifts need " + std::to_string(rank) + " rows of " + std::to_string(gradingRows.size()) + " entries");
      shifts = shiftRows;
    }
    try {
      spec.grading = Grading(gradingRows, shifts);
    } catch (const std::exception& e) {
      fail(Kind::kDimensionMismatch, gradingTok ? *gradingTok : peek(), e.what());
    }
    return spec;
  }

 private:
  [[noreturn]] static void fail(Kind kind, const Token& at, const std::string& msg) {
    throw ParseError(kind, at.line, at.column, msg);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.type != Token::Type::kEnd) ++pos_;
    return t;
  }

  static void once(const Token*& slot, const Token& kw) {
    if (slot) fail(Kind::kSyntax, kw, "duplicate '" + kw.text + "' clause");
    slot = &kw;
  }

  const Token& expectIdent(const std::string& what) {
    if (peek().type != Token::Type::kIdent) fail(Kind::kSyntax, peek(), "expected " + what);
    return next();
  }
  const Token& expectInt() {
    if (peek().type != Token::Type::kInt) fail(Kind::kSyntax, peek(), "expected an integer");
    return next();
  }
  void expectSym(const char* s) {
    if (!acceptSym(s)) fail(Kind::kSyntax, peek(), std::string("expected '") + s + "'");
  }
  bool acceptSym(const char* s) {
    if (peek().type == Token::Type::kSym && peek().text == s) {
      next();
      return true;
    }
    return false;
  }
  bool atSym(const char* s) const { return peek().type == Token::Type::kSym && peek().text == s; }

  std::int64_t signedInt() {
    bool neg = acceptSym("-");
    if (!neg) acceptSym("+");
    const Token& t = expectInt();
    mpz_class v(t.text);
    if (neg) v = -v;
    if (!v.fits_slong_p()) fail(Kind::kSyntax, t, "integer out of range");
    return v.get_si();
  }

  IntMatrix intRows() {
    IntMatrix rows;
    do {
      std::vector<std::int64_t> row;
      const Token& start = peek();
      while (peek().type == Token::Type::kInt || atSym("-") || atSym("+")) row.push_back(signedInt());
      if (row.empty()) fail(Kind::kSyntax, start, "expected a row of integers");
      if (!rows.empty() && row.size() != rows.front().size())
        fail(Kind::kDimensionMismatch, start, "rows of different lengths");
      rows.push_back(std::move(row));
    } while (acceptSym(","));
    return rows;
  }

  void inferVariables(std::vector<std::string>& vars) const {
    for (std::size_t i = pos_; i < tokens_.size() && !(tokens_[i].type == Token::Type::kSym && tokens_[i].text == ";");
         ++i)
      if (tokens_[i].type == Token::Type::kIdent &&
          std::find(vars.begin(), vars.end(), tokens_[i].text) == vars.end())
        vars.push_back(tokens_[i].text);
  }

  RawVector generator(std::size_t rank) {
    RawVector out;
    if (atSym("[")) {
      const Token& open = next();
      std::size_t comp = 0;
      do {
        if (comp >= rank) fail(Kind::kDimensionMismatch, open, "vector has more than " + std::to_string(rank) + " entries");
        for (auto& [e, c] : expr()) out.emplace(std::make_pair(comp, e), c);
        ++comp;
      } while (acceptSym(","));
      expectSym("]");
      if (comp != rank) fail(Kind::kDimensionMismatch, open, "vector needs " + std::to_string(rank) + " entries");
      return out;
    }
    const Token& start = peek();
    if (rank != 1) fail(Kind::kDimensionMismatch, start, "generators of a rank " + std::to_string(rank) + " module are written [p, ...]");
    for (auto& [e, c] : expr()) out.emplace(std::make_pair(std::size_t{0}, e), c);
    return out;
  }

  Poly constant(const mpq_class& c) const {
    Poly p;
    if (c != 0) p.emplace(std::vector<Exponent>(names_->size(), 0), c);
    return p;
  }

  Poly expr() {
    Poly acc;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (acceptSym("-")) {
        sign = -1;
      } else if (acceptSym("+")) {
      } else if (!first) {
        break;
      }
      first = false;
      for (auto& [e, c] : term()) addTo(acc, e, sign * c);
      if (!atSym("+") && !atSym("-")) break;
    }
    return acc;
  }

  bool startsFactor() const {
    const Token& t = peek();
    return t.type == Token::Type::kIdent || t.type == Token::Type::kInt || (t.type == Token::Type::kSym && t.text == "(");
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (acceptSym("*")) {
        acc = mulPoly(acc, factor());
      } else if (atSym("/")) {
        const Token& slash = next();
        Poly d = factor();
        if (d.size() != 1 || std::any_of(d.begin()->first.begin(), d.begin()->first.end(), [](Exponent e) { return e != 0; }))
          fail(Kind::kSyntax, slash, "division only by non-zero constants");
        mpq_class inv = 1 / d.begin()->second;
        for (auto& [e, c] : acc) c *= inv;
      } else if (startsFactor()) {
        acc = mulPoly(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (acceptSym("^")) {
      const Token& t = expectInt();
      mpz_class e(t.text);
      if (e > 1000000) fail(Kind::kSyntax, t, "exponent too large");
      Poly out = constant(1);
      for (unsigned long k = 0; k < e.get_ui(); ++k) out = mulPoly(out, base);
      return out;
    }
    return base;
  }

  Poly primary() {
    const Token& t = peek();
    if (t.type == Token::Type::kInt) {
      next();
      return constant(mpq_class(mpz_class(t.text)));
    }
    if (t.type == Token::Type::kIdent) {
      next();
      auto it = std::find(names_->begin(), names_->end(), t.text);
      if (it == names_->end()) fail(Kind::kUnknownIndeterminate, t, "unknown indeterminate '" + t.text + "'");
      std::vector<Exponent> e(names_->size(), 0);
      e[static_cast<std::size_t>(it - names_->begin())] = 1;
      Poly p;
      p.emplace(std::move(e), 1);
      return p;
    }
    if (acceptSym("(")) {
      Poly p = expr();
      expectSym(")");
      return p;
    }
    fail(Kind::kSyntax, t, t.type == Token::Type::kEnd ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* names_ = nullptr;
};

std::string monomialString(const std::vector<Exponent>& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string rowsString(const IntMatrix& rows) {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << (r ? ", " : "");
    for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? " " : "") << rows[r][c];
  }
  return os.str();
}

}  // namespace

ProblemSpec parseSystem(const std::string& text) { return Parser(text).run(); }

std::string formatRawVector(const RawVector& v, const std::vector<std::string>& names, std::size_t rank) {
  std::vector<std::string> parts(rank);
  // Largest exponent vectors first within each component.
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    const auto& [key, c] = *it;
    std::string& s = parts.at(key.first);
    std::string mono = monomialString(key.second, names);
    mpq_class a = abs(c);
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
  }
  for (auto& p : parts)
    if (p.empty()) p = "0";
  if (rank == 1) return parts.front();
  std::string out = "[";
  for (std::size_t i = 0; i < rank; ++i) out += (i ? ", " : "") + parts[i];
  return out + "]";
}

std::string formatSystem(const ProblemSpec& spec) {
  std::ostringstream os;
  os << "ring ";
  for (std::size_t i = 0; i < spec.variables.size(); ++i) os << (i ? ", " : "") << spec.variables[i];
  os << " over " << (spec.prime ? "Zp " + std::to_string(*spec.prime) : std::string("Q")) << ";\n";
  os << "order " << spec.ordering.toString() << ";\n";
  os << "grading " << rowsString(spec.grading.weights()) << ";\n";
  bool shifted = std::any_of(spec.grading.shifts().begin(), spec.grading.shifts().end(), [](const Degree& d) {
    return std::any_of(d.begin(), d.end(), [](std::int64_t x) { return x != 0; });
  });
  if (spec.rank() > 1 || shifted) {
    os << "module " << spec.rank();
    if (shifted) os << " shifts " << rowsString(spec.grading.shifts());
    os << ";\n";
  }
  os << "gens:";
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    os << (i ? ",\n  " : "\n  ") << formatRawVector(spec.generators[i], spec.variables, spec.rank());
  os << ";\n";
  return os.str();
}

ProblemSpec generateCyclic(int k) {
  if (k < 2) throw DomainError("cyclic-k needs k >= 2");
  ProblemSpec spec;
  spec.name = "cyclic" + std::to_string(k);
  for (int i = 1; i <= k; ++i) spec.variables.push_back("x" + std::to_string(i));
  spec.grading = Grading::standard(static_cast<std::size_t>(k));
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t d = 1; d < uk; ++d) {
    RawVector g;
    for (std::size_t i = 0; i < uk; ++i) {
      std::vector<Exponent> e(uk, 0);
      for (std::size_t j = 0; j < d; ++j) e[(i + j) % uk] += 1;
      auto [it, inserted] = g.emplace(std::make_pair(std::size_t{0}, e), 1);
      if (!inserted) it->second += 1;
    }
    spec.generators.push_back(std::move(g));
  }
  RawVector last;
  last.emplace(std::make_pair(std::size_t{0}, std::vector<Exponent>(uk, 1)), 1);
  last.emplace(std::make_pair(std::size_t{0}, std::vector<Exponent>(uk, 0)), -1);
  spec.generators.push_back(std::move(last));
  return spec;
}

}  // namespace satgb
