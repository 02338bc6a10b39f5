#include <cctype>
#include <sstream>

#include "p6cat/dsl.hpp"

namespace p6cat::dsl {

namespace {

constexpr std::size_t kMaxDiagnostics = 20;

struct Token {
  enum class Kind { Ident, Int, String, Punct, Newline, End };
  Kind kind = Kind::End;
  std::string text;
  std::int64_t value = 0;
  SourceLoc loc;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      if (c == '\n') {
        if (out.empty() || out.back().kind != Token::Kind::Newline)
          out.push_back(make(Token::Kind::Newline, "\n"));
        advance();
        ++line_;
        col_ = 1;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Token t = make(Token::Kind::Int, "");
        std::string num;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          num.push_back(src_[pos_]);
          advance();
        }
        t.text = num;
        t.value = std::stoll(num);
        out.push_back(t);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        Token t = make(Token::Kind::Ident, "");
        std::string id;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          id.push_back(src_[pos_]);
          advance();
        }
        t.text = id;
        out.push_back(t);
        continue;
      }
      if (c == '"') {
        Token t = make(Token::Kind::String, "");
        advance();
        std::string s;
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
          s.push_back(src_[pos_]);
          advance();
        }
        if (pos_ < src_.size() && src_[pos_] == '"') {
          advance();
        } else if (diags.size() < kMaxDiagnostics) {
          diags.push_back({t.loc, "unterminated string literal"});
        }
        t.text = s;
        out.push_back(t);
        continue;
      }
      // punctuation, with two-char tokens '..' and '=='
      if (c == '.' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
        out.push_back(make(Token::Kind::Punct, ".."));
        advance();
        advance();
        continue;
      }
      if (c == '=' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
        out.push_back(make(Token::Kind::Punct, "=="));
        advance();
        advance();
        continue;
      }
      if (std::string("{}[](),^=+-*/").find(c) != std::string::npos) {
        out.push_back(make(Token::Kind::Punct, std::string(1, c)));
        advance();
        continue;
      }
      if (diags.size() < kMaxDiagnostics)
        diags.push_back({{line_, col_}, std::string("stray character '") + c + "'"});
      advance();
    }
    out.push_back(make(Token::Kind::Newline, "\n"));
    out.push_back(make(Token::Kind::End, ""));
    return out;
  }

private:
  Token make(Token::Kind k, std::string text) {
    Token t;
    t.kind = k;
    t.text = std::move(text);
    t.loc = {line_, col_};
    return t;
  }
  void advance() {
    ++pos_;
    ++col_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr int_expr(std::int64_t v) {
  Expr e;
  e.kind = Expr::Kind::Int;
  e.value = v;
  return make_expr(std::move(e));
}

class Parser {
public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags)
      : toks_(std::move(toks)), diags_(diags) {}

  ParseResult run() {
    ParseResult res;
    skip_newlines();
    if (at_ident("convention")) parse_convention(res.convention);
    skip_newlines();
    while (!at_end()) {
      if (at_ident("family")) {
        FamilySpec spec;
        if (parse_family(spec, res.convention)) res.specs.push_back(std::move(spec));
      } else {
        error(peek().loc, "expected 'family' block, found '" + peek().text + "'");
        sync_to_newline();
      }
      skip_newlines();
    }
    return res;
  }

private:
  // ---- token helpers ----
  const Token& peek(int ahead = 0) const {
    const std::size_t i = idx_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool at_ident(std::string_view s) const {
    return peek().kind == Token::Kind::Ident && peek().text == s;
  }
  bool at_punct(std::string_view s) const {
    return peek().kind == Token::Kind::Punct && peek().text == s;
  }
  Token next() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }
  bool accept_ident(std::string_view s) {
    if (!at_ident(s)) return false;
    next();
    return true;
  }
  bool accept_punct(std::string_view s) {
    if (!at_punct(s)) return false;
    next();
    return true;
  }
  bool expect_ident(std::string_view s) {
    if (accept_ident(s)) return true;
    error(peek().loc, "expected '" + std::string(s) + "', found '" + peek().text + "'");
    return false;
  }
  bool expect_punct(std::string_view s) {
    if (accept_punct(s)) return true;
    error(peek().loc, "expected '" + std::string(s) + "', found '" + peek().text + "'");
    return false;
  }
  bool expect_int(std::int64_t& out) {
    if (peek().kind == Token::Kind::Int) {
      out = next().value;
      return true;
    }
    error(peek().loc, "expected integer, found '" + peek().text + "'");
    return false;
  }
  void skip_newlines() {
    while (peek().kind == Token::Kind::Newline) next();
  }
  void sync_to_newline() {
    while (peek().kind != Token::Kind::Newline && !at_end()) next();
  }
  void error(SourceLoc loc, std::string msg) {
    if (diags_.size() < kMaxDiagnostics)
      diags_.push_back({loc, std::move(msg)});
  }

  // ---- grammar ----
  void parse_convention(Convention& conv) {
    expect_ident("convention");
    expect_ident("bracket");
    expect_punct("=");
    if (peek().kind == Token::Kind::Ident) {
      // hyphenated value: Ident ('-' Ident)*
      std::string value = next().text;
      while (at_punct("-") && peek(1).kind == Token::Kind::Ident) {
        next();
        value += "-" + next().text;
      }
      conv.bracket = value;
      if (conv.bracket != "left-normed")
        error(peek().loc, "unknown bracket convention '" + conv.bracket + "'");
    } else {
      error(peek().loc, "expected bracket convention name");
    }
    expect_ident("order");
    expect_punct("=");
    if (peek().kind == Token::Kind::Ident) {
      const std::string o = next().text;
      if (o == "ji")
        conv.order = BracketOrder::JI;
      else if (o == "ij")
        conv.order = BracketOrder::IJ;
      else
        error(peek().loc, "order must be 'ji' or 'ij', found '" + o + "'");
    } else {
      error(peek().loc, "expected order value");
    }
    sync_to_newline();
  }

  // gen name "a3" / "b2" -> GenRef
  bool gen_ref_of(const Token& t, GenRef& out) {
    if (t.kind != Token::Kind::Ident || t.text.size() < 2) return false;
    const char c = t.text[0];
    if (c != 'a' && c != 'b') return false;
    for (std::size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return false;
    out.beta = (c == 'b');
    out.index = std::stoi(t.text.substr(1));
    return out.index >= 1;
  }

  bool expect_gen(GenRef& out) {
    GenRef g;
    if (gen_ref_of(peek(), g)) {
      next();
      out = g;
      return true;
    }
    error(peek().loc, "expected generator name, found '" + peek().text + "'");
    return false;
  }

  bool parse_gens(FamilySpec& spec) {
    // a1..a6 or a1..a4, b1..b2 (single names allowed for one-generator runs)
    bool first = true;
    do {
      GenRef lo, hi;
      if (!expect_gen(lo)) return false;
      hi = lo;
      if (accept_punct("..")) {
        if (!expect_gen(hi)) return false;
      }
      if (lo.beta != hi.beta || lo.index != 1 || hi.index < lo.index) {
        error(peek().loc, "generator range must run from " +
                              std::string(lo.beta ? "b1" : "a1") +
                              " upward in one letter");
        return false;
      }
      if (!lo.beta) {
        if (!first || spec.alpha_count != 0) {
          error(peek().loc, "alpha range must come first and appear once");
          return false;
        }
        spec.alpha_count = hi.index;
      } else {
        if (spec.beta_count != 0) {
          error(peek().loc, "beta range may appear only once");
          return false;
        }
        spec.beta_count = hi.index;
      }
      first = false;
    } while (accept_punct(","));
    if (spec.alpha_count == 0) {
      error(peek().loc, "gens clause must declare alpha generators");
      return false;
    }
    return true;
  }

  // expression grammar: expr := term (('+'|'-') term)*
  //                     term := unary (('*'|'/') unary)*
  //                     unary := '-' unary | power
  //                     power := primary ['^' unary]
  ExprPtr parse_expr(const FamilySpec& spec, bool allow_params) {
    ExprPtr lhs = parse_term(spec, allow_params);
    while (at_punct("+") || at_punct("-")) {
      const bool add = at_punct("+");
      next();
      ExprPtr rhs = parse_term(spec, allow_params);
      Expr e;
      e.kind = add ? Expr::Kind::Add : Expr::Kind::Sub;
      e.lhs = lhs;
      e.rhs = rhs;
      lhs = make_expr(std::move(e));
    }
    return lhs;
  }

  ExprPtr parse_term(const FamilySpec& spec, bool allow_params) {
    ExprPtr lhs = parse_unary(spec, allow_params);
    while (at_punct("*") || at_punct("/")) {
      const bool mul = at_punct("*");
      next();
      ExprPtr rhs = parse_unary(spec, allow_params);
      Expr e;
      e.kind = mul ? Expr::Kind::Mul : Expr::Kind::Div;
      e.lhs = lhs;
      e.rhs = rhs;
      lhs = make_expr(std::move(e));
    }
    return lhs;
  }

  ExprPtr parse_unary(const FamilySpec& spec, bool allow_params) {
    if (accept_punct("-")) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.lhs = parse_unary(spec, allow_params);
      return make_expr(std::move(e));
    }
    return parse_power(spec, allow_params);
  }

  ExprPtr parse_power(const FamilySpec& spec, bool allow_params) {
    ExprPtr base = parse_primary(spec, allow_params);
    if (accept_punct("^")) {
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.lhs = base;
      e.rhs = parse_unary(spec, allow_params);
      return make_expr(std::move(e));
    }
    return base;
  }

  ExprPtr parse_primary(const FamilySpec& spec, bool allow_params) {
    if (peek().kind == Token::Kind::Int) return int_expr(next().value);
    if (accept_punct("(")) {
      ExprPtr inner = parse_expr(spec, allow_params);
      expect_punct(")");
      return inner;
    }
    if (peek().kind == Token::Kind::Ident) {
      const Token t = next();
      Expr e;
      if (t.text == "p")
        e.kind = Expr::Kind::P;
      else if (t.text == "nu")
        e.kind = Expr::Kind::Nu;
      else if (t.text == "omega")
        e.kind = Expr::Kind::Omega;
      else {
        bool declared = false;
        for (const ParamDecl& d : spec.params) declared |= d.name == t.text;
        if (!declared)
          error(t.loc, "reference to undeclared parameter '" + t.text + "'");
        else if (!allow_params)
          error(t.loc, "parameter '" + t.text + "' not allowed in a range expression");
        e.kind = Expr::Kind::Param;
        e.name = t.text;
      }
      return make_expr(std::move(e));
    }
    error(peek().loc, "expected expression, found '" + peek().text + "'");
    return int_expr(0);
  }

  bool parse_set(const FamilySpec& spec, RangeSet& out) {
    if (!expect_punct("{")) return false;
    if (accept_punct("}")) {
      error(peek().loc, "empty parameter set");
      return false;
    }
    ExprPtr first = parse_expr(spec, false);
    if (accept_punct("..")) {
      out.lo = first;
      out.hi = parse_expr(spec, false);
      return expect_punct("}");
    }
    out.items.push_back(first);
    while (accept_punct(",")) out.items.push_back(parse_expr(spec, false));
    return expect_punct("}");
  }

  void parse_param(FamilySpec& spec) {
    const SourceLoc loc = peek().loc;
    next();  // 'param'
    ParamDecl decl;
    decl.loc = loc;
    if (peek().kind != Token::Kind::Ident) {
      error(peek().loc, "expected parameter name");
      sync_to_newline();
      return;
    }
    decl.name = next().text;
    if (decl.name == "p" || decl.name == "nu" || decl.name == "omega") {
      error(loc, "parameter name '" + decl.name + "' is reserved");
      sync_to_newline();
      return;
    }
    for (const ParamDecl& d : spec.params) {
      if (d.name == decl.name) {
        error(loc, "duplicate parameter '" + decl.name + "'");
        sync_to_newline();
        return;
      }
    }
    if (!expect_ident("in") || !parse_set(spec, decl.main_set)) {
      sync_to_newline();
      return;
    }
    if (accept_ident("when")) {
      decl.conditional = true;
      if (!expect_ident("p") || !expect_ident("mod") ||
          !expect_int(decl.mod) || !expect_punct("==") ||
          !expect_int(decl.residue) || !expect_ident("else") ||
          !parse_set(spec, decl.else_set)) {
        sync_to_newline();
        return;
      }
      if (decl.mod < 2) error(loc, "modulus in condition must be >= 2");
    }
    spec.params.push_back(std::move(decl));
  }

  bool check_gen_declared(const FamilySpec& spec, const GenRef& g, SourceLoc loc) {
    const int limit = g.beta ? spec.beta_count : spec.alpha_count;
    if (g.index > limit) {
      error(loc, std::string("reference to undeclared generator ") +
                     (g.beta ? "b" : "a") + std::to_string(g.index));
      return false;
    }
    return true;
  }

  bool parse_word(FamilySpec& spec, WordExpr& out) {
    // "1" denotes the empty word
    if (peek().kind == Token::Kind::Int && peek().value == 1 &&
        peek(1).kind == Token::Kind::Newline) {
      next();
      return true;
    }
    bool any = false;
    for (;;) {
      GenRef g;
      if (!gen_ref_of(peek(), g)) break;
      const SourceLoc loc = peek().loc;
      next();
      if (!check_gen_declared(spec, g, loc)) return false;
      WordFactor f;
      f.gen = g;
      if (accept_punct("^")) {
        if (peek().kind == Token::Kind::Int || at_punct("(") || at_punct("-") ||
            peek().kind == Token::Kind::Ident) {
          // single atom or parenthesized expression
          if (at_punct("(")) {
            next();
            f.exp = parse_expr(spec, true);
            expect_punct(")");
          } else if (at_punct("-")) {
            next();
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.lhs = parse_primary(spec, true);
            f.exp = make_expr(std::move(e));
          } else {
            f.exp = parse_primary(spec, true);
          }
        } else {
          error(peek().loc, "expected exponent after '^'");
          return false;
        }
      }
      out.push_back(std::move(f));
      any = true;
    }
    if (!any) {
      error(peek().loc, "expected word (or 1 for the identity), found '" +
                            peek().text + "'");
      return false;
    }
    return true;
  }

  void parse_pow(FamilySpec& spec) {
    const SourceLoc loc = peek().loc;
    next();  // 'pow'
    PowerRel rel;
    rel.loc = loc;
    if (!expect_gen(rel.gen)) {
      sync_to_newline();
      return;
    }
    if (!check_gen_declared(spec, rel.gen, loc)) {
      sync_to_newline();
      return;
    }
    if (!expect_punct("^") || !expect_ident("p") || !expect_punct("=")) {
      sync_to_newline();
      return;
    }
    for (const PowerRel& r : spec.powers) {
      if (r.gen == rel.gen) {
        error(loc, std::string("duplicate power relation for ") +
                       (rel.gen.beta ? "b" : "a") + std::to_string(rel.gen.index));
        sync_to_newline();
        return;
      }
    }
    if (!parse_word(spec, rel.rhs)) {
      sync_to_newline();
      return;
    }
    spec.powers.push_back(std::move(rel));
  }

  void parse_comm(FamilySpec& spec, const Convention& conv) {
    const SourceLoc loc = peek().loc;
    next();  // 'comm'
    CommRel rel;
    rel.loc = loc;
    if (!expect_punct("[") || !expect_gen(rel.left) || !expect_punct(",") ||
        !expect_gen(rel.right) || !expect_punct("]") || !expect_punct("=")) {
      sync_to_newline();
      return;
    }
    if (!check_gen_declared(spec, rel.left, loc) ||
        !check_gen_declared(spec, rel.right, loc)) {
      sync_to_newline();
      return;
    }
    if (rel.left.beta || rel.right.beta) {
      error(loc, "commutator keys must be alpha generators (betas are central)");
      sync_to_newline();
      return;
    }
    if (rel.left.index == rel.right.index) {
      error(loc, "commutator key with equal indices [a" +
                     std::to_string(rel.left.index) + ",a" +
                     std::to_string(rel.right.index) + "]");
      sync_to_newline();
      return;
    }
    const bool written_ji = rel.left.index > rel.right.index;
    if ((conv.order == BracketOrder::JI) != written_ji) {
      error(loc, "commutator written against the declared order convention");
      sync_to_newline();
      return;
    }
    for (const CommRel& r : spec.comms) {
      const int a = std::min(r.left.index, r.right.index);
      const int b = std::max(r.left.index, r.right.index);
      const int x = std::min(rel.left.index, rel.right.index);
      const int y = std::max(rel.left.index, rel.right.index);
      if (a == x && b == y) {
        error(loc, "duplicate commutator relation for [a" + std::to_string(y) +
                       ",a" + std::to_string(x) + "]");
        sync_to_newline();
        return;
      }
    }
    if (!parse_word(spec, rel.rhs)) {
      sync_to_newline();
      return;
    }
    spec.comms.push_back(std::move(rel));
  }

  void parse_def(FamilySpec& spec) {
    const SourceLoc loc = peek().loc;
    next();  // 'def'
    DefRel rel;
    rel.loc = loc;
    if (!expect_gen(rel.gen)) {
      sync_to_newline();
      return;
    }
    if (rel.gen.beta) {
      error(loc, "definition relations define alpha generators only");
      sync_to_newline();
      return;
    }
    if (!check_gen_declared(spec, rel.gen, loc)) {
      sync_to_newline();
      return;
    }
    for (const DefRel& d : spec.defs) {
      if (d.gen == rel.gen) {
        error(loc, "duplicate definition for a" + std::to_string(rel.gen.index));
        sync_to_newline();
        return;
      }
    }
    if (!expect_punct("=") || !parse_word(spec, rel.rhs)) {
      sync_to_newline();
      return;
    }
    spec.defs.push_back(std::move(rel));
  }

  bool parse_family(FamilySpec& spec, const Convention& conv) {
    spec.loc = peek().loc;
    next();  // 'family'
    std::int64_t fam = 0;
    if (!expect_int(fam)) {
      sync_to_newline();
      return false;
    }
    spec.family = static_cast<int>(fam);
    if (fam < 1 || fam > 43)
      error(spec.loc, "family index " + std::to_string(fam) + " outside [1, 43]");
    if (accept_ident("label")) {
      if (peek().kind == Token::Kind::String)
        spec.label = next().text;
      else
        error(peek().loc, "expected quoted label string");
    }
    std::int64_t rank = 0;
    if (!expect_ident("rank") || !expect_int(rank)) {
      sync_to_newline();
      return false;
    }
    spec.rank = static_cast<int>(rank);
    if (rank < 1 || rank > 6)
      error(spec.loc, "rank " + std::to_string(rank) + " outside [1, 6]");
    if (!expect_ident("gens") || !parse_gens(spec)) {
      sync_to_newline();
      return false;
    }
    if (spec.alpha_count > kMaxGens || spec.beta_count > kMaxGens)
      error(spec.loc, "too many generators");
    if (spec.rank == 6 && (spec.beta_count != 0 || spec.alpha_count != 6))
      error(spec.loc, "rank-6 presentations use exactly a1..a6 and no betas");
    if (!expect_punct("{")) {
      sync_to_newline();
      return false;
    }
    skip_newlines();
    while (!at_punct("}") && !at_end()) {
      if (at_ident("param"))
        parse_param(spec);
      else if (at_ident("pow"))
        parse_pow(spec);
      else if (at_ident("comm"))
        parse_comm(spec, conv);
      else if (at_ident("def"))
        parse_def(spec);
      else {
        error(peek().loc, "expected param/pow/comm/def, found '" + peek().text + "'");
        sync_to_newline();
      }
      skip_newlines();
    }
    expect_punct("}");
    // post checks: relations on defined alphas
    for (const DefRel& d : spec.defs) {
      for (const PowerRel& r : spec.powers)
        if (r.gen == d.gen)
          error(r.loc, "power relation on defined generator a" +
                           std::to_string(d.gen.index));
      for (const CommRel& r : spec.comms)
        if (r.left == d.gen || r.right == d.gen)
          error(r.loc, "commutator key uses defined generator a" +
                           std::to_string(d.gen.index));
    }
    return true;
  }

  std::vector<Token> toks_;
  std::vector<Diagnostic>& diags_;
  std::size_t idx_ = 0;
};

}  // namespace

ParseResult parse(std::string_view text) {
  std::vector<Diagnostic> diags;
  Lexer lex(text);
  std::vector<Token> toks = lex.run(diags);
  Parser parser(std::move(toks), diags);
  ParseResult res = parser.run();
  res.diagnostics.insert(res.diagnostics.begin(), diags.begin(), diags.end());
  if (res.diagnostics.size() > kMaxDiagnostics)
    res.diagnostics.resize(kMaxDiagnostics);
  return res;
}

namespace {

std::string gen_name(const GenRef& g) {
  return (g.beta ? "b" : "a") + std::to_string(g.index);
}

bool atom_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int:
      return e.value >= 0;
    case Expr::Kind::P:
    case Expr::Kind::Nu:
    case Expr::Kind::Omega:
    case Expr::Kind::Param:
      return true;
    case Expr::Kind::Pow:
      return atom_expr(*e.lhs) && atom_expr(*e.rhs);
    default:
      return false;
  }
}

void render_word(const WordExpr& w, std::ostream& os) {
  if (w.empty()) {
    os << "1";
    return;
  }
  bool first = true;
  for (const WordFactor& f : w) {
    if (!first) os << " ";
    first = false;
    os << gen_name(f.gen);
    if (f.exp) {
      os << "^";
      if (atom_expr(*f.exp))
        os << render_expr(*f.exp);
      else
        os << "(" << render_expr(*f.exp) << ")";
    }
  }
}

void render_set(const RangeSet& s, std::ostream& os) {
  os << "{";
  if (s.is_interval()) {
    os << render_expr(*s.lo) << " .. " << render_expr(*s.hi);
  } else {
    for (std::size_t i = 0; i < s.items.size(); ++i) {
      if (i) os << ", ";
      os << render_expr(*s.items[i]);
    }
  }
  os << "}";
}

}  // namespace

std::string serialize(const FamilySpec& spec) {
  std::ostringstream os;
  os << "family " << spec.family;
  if (!spec.label.empty()) os << " label \"" << spec.label << "\"";
  os << " rank " << spec.rank << " gens a1";
  if (spec.alpha_count > 1) os << "..a" << spec.alpha_count;
  if (spec.beta_count > 0) {
    os << ", b1";
    if (spec.beta_count > 1) os << "..b" << spec.beta_count;
  }
  os << " {\n";
  for (const ParamDecl& d : spec.params) {
    os << "  param " << d.name << " in ";
    render_set(d.main_set, os);
    if (d.conditional) {
      os << " when p mod " << d.mod << " == " << d.residue << " else ";
      render_set(d.else_set, os);
    }
    os << "\n";
  }
  for (const PowerRel& r : spec.powers) {
    os << "  pow " << gen_name(r.gen) << "^p = ";
    render_word(r.rhs, os);
    os << "\n";
  }
  for (const CommRel& r : spec.comms) {
    os << "  comm [" << gen_name(r.left) << "," << gen_name(r.right) << "] = ";
    render_word(r.rhs, os);
    os << "\n";
  }
  for (const DefRel& r : spec.defs) {
    os << "  def " << gen_name(r.gen) << " = ";
    render_word(r.rhs, os);
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const Convention& conv,
                      const std::vector<FamilySpec>& specs) {
  std::ostringstream os;
  os << "convention bracket=" << conv.bracket << " order="
     << (conv.order == BracketOrder::JI ? "ji" : "ij") << "\n";
  for (const FamilySpec& s : specs) {
    os << "\n";
    os << serialize(s);
  }
  return os.str();
}

}  // namespace p6cat::dsl
