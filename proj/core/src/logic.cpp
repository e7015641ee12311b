#include "polyban/logic.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "polyban/errors.hpp"
#include "polyban/lp.hpp"

namespace polyban {

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { Ident, Number, LParen, RParen, Comma, Dot, Star, Slash, Plus, Minus, Equals, LessEq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({Tok::LessEq, "<=", l, cl});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '=': kind = Tok::Equals; break;
      default: syntax_error(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

// ---------------------------------------------------------------- parsing

// An affine combination; the constant must vanish in a finished term.
struct Lin {
  std::map<std::size_t, Rational> free;
  std::map<std::size_t, Rational> bound;
  Rational constant;

  bool is_constant() const { return free.empty() && bound.empty(); }

  void add(const Lin& o, const Rational& s) {
    for (const auto& [k, v] : o.free) accumulate(free, k, s * v);
    for (const auto& [k, v] : o.bound) accumulate(bound, k, s * v);
    constant += s * o.constant;
  }
  void scale(const Rational& s) {
    Lin copy;
    copy.add(*this, s);
    *this = std::move(copy);
  }
  static void accumulate(std::map<std::size_t, Rational>& m, std::size_t k, const Rational& v) {
    Rational& slot = m[k];
    slot += v;
    if (slot.is_zero()) m.erase(k);
  }
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  PPFormula parse(std::optional<std::size_t> free_count) {
    struct RawAtom {
      AtomKind kind;
      Lin lhs, rhs;
      Rational bound;
    };
    std::vector<RawAtom> raw;

    if (peek_keyword("EXISTS")) {
      next();
      declare(expect(Tok::Ident, "a variable name"));
      while (peek().kind == Tok::Comma) {
        next();
        declare(expect(Tok::Ident, "a variable name"));
      }
      expect(Tok::Dot, "'.' after the quantified variables");
    }
    while (true) {
      const Token& start = peek();
      if (peek_keyword("norm")) {
        next();
        expect(Tok::LParen, "'(' after norm");
        Lin t = expr();
        expect(Tok::RParen, "')'");
        expect(Tok::LessEq, "'<=' after norm(...)");
        Rational m = rational_literal();
        require_linear(t, start);
        raw.push_back({AtomKind::NormLe, std::move(t), Lin{}, std::move(m)});
      } else {
        Lin l = expr();
        expect(Tok::Equals, "'=' or 'norm(...) <= M'");
        Lin r = expr();
        require_linear(l, start);
        require_linear(r, start);
        raw.push_back({AtomKind::Eq, std::move(l), std::move(r), Rational(0)});
      }
      if (peek_keyword("AND")) {
        next();
        continue;
      }
      if (peek().kind != Tok::End) syntax_error(peek().line, peek().column, "expected AND or end of input, found '" + peek().text + "'");
      break;
    }

    PPFormula phi;
    phi.bound_count = bound_names_.size();
    phi.free_count = max_free_;
    if (free_count) {
      if (*free_count < max_free_) {
        throw Error(ErrorCode::ScopeError, "formula uses x" + std::to_string(max_free_) + " but only " +
                                               std::to_string(*free_count) + " free variables are allowed");
      }
      phi.free_count = *free_count;
    }
    auto term = [&](const Lin& l) {
      Term t{RatVec(phi.free_count), RatVec(phi.bound_count)};
      for (const auto& [k, v] : l.free) t.free[k] = v;
      for (const auto& [k, v] : l.bound) t.bound[k] = v;
      return t;
    };
    for (const auto& a : raw) {
      Atom atom;
      atom.kind = a.kind;
      atom.lhs = term(a.lhs);
      atom.rhs = a.kind == AtomKind::Eq ? term(a.rhs) : Term{RatVec(phi.free_count), RatVec(phi.bound_count)};
      atom.bound = a.bound;
      phi.atoms.push_back(std::move(atom));
    }
    return phi;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool peek_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) syntax_error(peek().line, peek().column, "expected " + what + ", found '" + peek().text + "'");
    return next();
  }

  static bool is_free_name(const std::string& s) {
    if (s.size() < 2 || s[0] != 'x' || s[1] == '0') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  }

  static bool is_keyword(const std::string& s) { return s == "EXISTS" || s == "AND" || s == "norm"; }

  void declare(const Token& t) {
    if (is_keyword(t.text)) syntax_error(t.line, t.column, "'" + t.text + "' is a keyword");
    if (is_free_name(t.text)) {
      throw Error(ErrorCode::ScopeError, "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                                             ": '" + t.text + "' is a free variable and cannot be quantified");
    }
    if (bound_names_.count(t.text)) syntax_error(t.line, t.column, "variable '" + t.text + "' declared twice");
    const std::size_t idx = bound_names_.size();
    bound_names_[t.text] = idx;
  }

  void require_linear(const Lin& l, const Token& at) {
    if (!l.constant.is_zero()) syntax_error(at.line, at.column, "nonzero constant " + l.constant.str() + " in a term");
  }

  Rational rational_literal() {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    const Token& num = expect(Tok::Number, "a rational bound");
    Rational r = Rational::parse(num.text);
    if (peek().kind == Tok::Slash) {
      next();
      const Token& den = expect(Tok::Number, "a denominator");
      Rational d = Rational::parse(den.text);
      if (d.is_zero()) syntax_error(den.line, den.column, "zero denominator");
      r /= d;
    }
    if (negative) {
      if (!r.is_zero()) syntax_error(num.line, num.column, "norm bound must be nonnegative");
    }
    return r;
  }

  Lin expr() {
    Lin acc;
    Rational sign = 1;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) sign = next().kind == Tok::Minus ? -1 : 1;
    acc.add(term(), sign);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = next().kind == Tok::Minus ? -1 : 1;
      acc.add(term(), sign);
    }
    return acc;
  }

  Lin term() {
    Lin acc = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = next();
      if (op.kind == Tok::Slash) {
        const Token& den = expect(Tok::Number, "a number after '/'");
        Rational d = Rational::parse(den.text);
        if (d.is_zero()) syntax_error(den.line, den.column, "division by zero");
        acc.scale(Rational(1) / d);
        continue;
      }
      Lin rhs = factor();
      if (acc.is_constant()) {
        rhs.scale(acc.constant);
        acc = std::move(rhs);
      } else if (rhs.is_constant()) {
        acc.scale(rhs.constant);
      } else {
        syntax_error(op.line, op.column, "product of two variables is not linear");
      }
    }
    return acc;
  }

  Lin factor() {
    const Token& t = peek();
    Lin out;
    switch (t.kind) {
      case Tok::Number:
        next();
        out.constant = Rational::parse(t.text);
        return out;
      case Tok::LParen: {
        next();
        out = expr();
        expect(Tok::RParen, "')'");
        return out;
      }
      case Tok::Minus:
        next();
        out = factor();
        out.scale(-1);
        return out;
      case Tok::Ident: {
        next();
        if (is_keyword(t.text)) syntax_error(t.line, t.column, "unexpected keyword '" + t.text + "'");
        if (auto it = bound_names_.find(t.text); it != bound_names_.end()) {
          out.bound[it->second] = 1;
          return out;
        }
        if (is_free_name(t.text)) {
          const std::size_t idx = std::stoul(t.text.substr(1));
          max_free_ = std::max(max_free_, idx);
          out.free[idx - 1] = 1;
          return out;
        }
        throw Error(ErrorCode::ScopeError, "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                                               ": unknown variable '" + t.text + "'");
      }
      default:
        syntax_error(t.line, t.column, "expected a term, found '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> bound_names_;
  std::size_t max_free_ = 0;
};

// ---------------------------------------------------------------- printing

std::string term_string(const Term& t) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& var) {
    if (c.is_zero()) return;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag << "*";
    os << var;
    first = false;
  };
  for (std::size_t i = 0; i < t.free.size(); ++i) emit(t.free[i], "x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < t.bound.size(); ++j) emit(t.bound[j], "y" + std::to_string(j + 1));
  if (first) os << "0";
  return os.str();
}

Term term_difference(const Term& a, const Term& b) { return {a.free - b.free, a.bound - b.bound}; }

RatVec free_value(const Term& t, const std::vector<RatVec>& assignment, std::size_t d) {
  RatVec out(d);
  for (std::size_t i = 0; i < t.free.size(); ++i)
    if (!t.free[i].is_zero()) out = out + t.free[i] * assignment[i];
  return out;
}

}  // namespace

PPFormula parse_formula(std::string_view text, std::optional<std::size_t> free_count) {
  return Parser(lex(text)).parse(free_count);
}

std::string to_string(const PPFormula& phi) {
  std::ostringstream os;
  if (phi.bound_count > 0) {
    os << "EXISTS ";
    for (std::size_t j = 0; j < phi.bound_count; ++j) os << (j ? "," : "") << "y" << (j + 1);
    os << " . ";
  }
  for (std::size_t k = 0; k < phi.atoms.size(); ++k) {
    if (k) os << " AND ";
    const Atom& a = phi.atoms[k];
    if (a.kind == AtomKind::NormLe) {
      os << "norm(" << term_string(a.lhs) << ") <= " << a.bound;
    } else {
      os << term_string(a.lhs) << " = " << term_string(a.rhs);
    }
  }
  return os.str();
}

PPFormula approximate(const PPFormula& phi, const Rational& eps) {
  if (eps < Rational(0)) throw Error(ErrorCode::PreconditionViolated, "eps must be nonnegative");
  PPFormula out = phi;
  for (auto& a : out.atoms)
    if (a.kind == AtomKind::NormLe) a.bound += eps;
  return out;
}

std::string to_string(const Slack& s) {
  switch (s.kind) {
    case SlackKind::Finite: return s.value.str();
    case SlackKind::SlackFree: return "-inf";
    case SlackKind::Unsatisfiable: return "+inf";
  }
  return "?";
}

Slack satisfaction_slack(const PolyhedralSpace& K, const PPFormula& phi, const std::vector<RatVec>& assignment) {
  const std::size_t d = K.dim();
  if (assignment.size() != phi.free_count) {
    throw Error(ErrorCode::DimensionMismatch, "formula has " + std::to_string(phi.free_count) + " free variables but " +
                                                  std::to_string(assignment.size()) + " values were given");
  }
  for (const auto& a : assignment)
    if (a.size() != d) throw Error(ErrorCode::DimensionMismatch, "assigned vector has the wrong dimension");

  // Variables: y_j (d each, j-major), then s.
  const std::size_t m = phi.bound_count;
  const std::size_t s = m * d;
  LinearProgram lp(s + 1);
  bool has_norm = false;
  for (const auto& atom : phi.atoms) {
    const Term t = atom.kind == AtomKind::Eq ? term_difference(atom.lhs, atom.rhs) : atom.lhs;
    const RatVec fixed = free_value(t, assignment, d);
    if (atom.kind == AtomKind::Eq) {
      for (std::size_t k = 0; k < d; ++k) {
        RatVec row(s + 1);
        for (std::size_t j = 0; j < m; ++j) row[j * d + k] = t.bound[j];
        lp.add_constraint(std::move(row), Relation::Equal, -fixed[k]);
      }
      continue;
    }
    has_norm = true;
    for (const auto& psi : K.facets()) {
      RatVec row(s + 1);
      for (std::size_t j = 0; j < m; ++j) {
        if (t.bound[j].is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k) row[j * d + k] = t.bound[j] * psi[k];
      }
      row[s] = -1;
      lp.add_constraint(std::move(row), Relation::LessEqual, atom.bound - dot(psi, fixed));
    }
    // ‖t‖ >= 0, so s >= −M; this also bounds the program when K = {0}.
    lp.add_lower_bound(s, -atom.bound);
  }
  if (has_norm) {
    RatVec obj(s + 1);
    obj[s] = 1;
    lp.set_objective(std::move(obj), Sense::Minimize);
  }
  LPResult r = lp_solve(lp);
  Slack out;
  if (r.status == LPStatus::Infeasible) {
    out.kind = SlackKind::Unsatisfiable;
    return out;
  }
  if (!r.optimal()) throw std::logic_error("satisfaction_slack: program unbounded");
  out.kind = has_norm ? SlackKind::Finite : SlackKind::SlackFree;
  if (has_norm) out.value = r.optimum;
  for (std::size_t j = 0; j < m; ++j)
    out.bound_witness.emplace_back(r.witness.begin() + static_cast<std::ptrdiff_t>(j * d),
                                   r.witness.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
  return out;
}

PPFormula presentation_formula(const PolyhedralSpace& A) {
  PPFormula phi;
  phi.free_count = A.dim();
  for (const auto& v : A.vertices()) {
    Atom a;
    a.kind = AtomKind::NormLe;
    a.lhs = Term{v, {}};
    a.rhs = Term{RatVec(A.dim()), {}};
    a.bound = 1;
    phi.atoms.push_back(std::move(a));
  }
  return phi;
}

TransferResult transfer_check(const Embedding& e, const PPFormula& phi, const std::vector<Vector>& assignment) {
  const PolyhedralSpace& K = e.sub();
  const PolyhedralSpace& L = e.ambient();
  std::vector<RatVec> in_k;
  for (const auto& v : assignment) {
    if (v.space() == K) {
      in_k.push_back(v.coords());
    } else if (v.space() == L) {
      auto pre = solve(e.map().matrix(), v.coords());
      if (!pre) throw Error(ErrorCode::AssignmentNotInSubspace, "vector " + to_string(v.coords()) + " is not in f[K]");
      in_k.push_back(std::move(*pre));
    } else {
      throw Error(ErrorCode::DimensionMismatch, "assigned vector belongs to neither K nor L");
    }
  }
  std::vector<RatVec> in_l;
  for (const auto& a : in_k) in_l.push_back(e.map().apply(a));
  return {satisfaction_slack(K, phi, in_k), satisfaction_slack(L, phi, in_l)};
}

Distinguisher distinguishing_formula(const Embedding& e) {
  const PolyhedralSpace& K = e.sub();
  const PolyhedralSpace& L = e.ambient();
  if (ideal_defect(e).value.is_zero()) {
    throw Error(ErrorCode::IsActuallyIdeal, "the embedding is an ideal; no formula separates K from L");
  }
  // Basis of L: the image of K's unit vectors, then unit vectors of L.
  std::vector<RatVec> candidates = e.image_basis();
  for (std::size_t i = 0; i < L.dim(); ++i) candidates.push_back(unit_vector(L.dim(), i));
  std::vector<RatVec> basis;
  for (auto idx : independent_subset(candidates, L.dim())) basis.push_back(candidates[idx]);
  const Matrix P = Matrix::from_columns(basis, L.dim());
  const Matrix Pinv = *inverse(P);

  const std::size_t n = K.dim();
  const std::size_t m = L.dim() - n;
  Distinguisher out;
  out.formula.free_count = n;
  out.formula.bound_count = m;
  for (const auto& v : L.vertices()) {
    const RatVec w = Pinv.apply(v);
    Atom a;
    a.kind = AtomKind::NormLe;
    a.lhs = Term{RatVec(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)),
                 RatVec(w.begin() + static_cast<std::ptrdiff_t>(n), w.end())};
    a.rhs = Term{RatVec(n), RatVec(m)};
    a.bound = 1;
    out.formula.atoms.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < n; ++i) out.assignment.push_back(unit_vector(n, i));
  return out;
}

}  // namespace polyban
