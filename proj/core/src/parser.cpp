#include "jmc/parser.hpp"

#include <cctype>
#include <utility>

namespace jmc {

SyntaxError::SyntaxError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

// ---------------------------------------------------------------- HalfExpr

HalfExpr HalfExpr::constant(HalfInt v) {
  HalfExpr e;
  e.offset = v;
  return e;
}

HalfExpr HalfExpr::variable(std::string name, int coeff, HalfInt off) {
  HalfExpr e;
  e.var_coeff = coeff;
  e.var = std::move(name);
  e.offset = off;
  return e;
}

HalfInt HalfExpr::eval(const Env& env) const {
  if (is_constant()) return offset;
  auto it = env.find(var);
  if (it == env.end()) throw SemanticError("unbound variable '" + var + "'");
  return (var_coeff > 0 ? it->second : -it->second) + offset;
}

std::string HalfExpr::str() const {
  if (is_constant()) return offset.str();
  std::string s = var_coeff < 0 ? "-" + var : var;
  if (offset != HalfInt{}) {
    if (offset > HalfInt{}) s += "+";
    s += offset.str();
  }
  return s;
}

// ----------------------------------------------------------------- SegExpr

Segment SegExpr::eval(const Env& env) const {
  HalfInt l = lo.eval(env), h = hi.eval(env);
  try {
    return Segment::make(l, h);
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }
}

std::string SegExpr::str() const { return "d(" + lo.str() + "," + hi.str() + ")"; }

// ---------------------------------------------------------------- AtomExpr

AtomExpr AtomExpr::cusp() { return AtomExpr{}; }

AtomExpr AtomExpr::sigma_one(HalfExpr c) {
  AtomExpr e;
  e.kind = Kind::sigma_one;
  e.params = {std::move(c)};
  return e;
}

AtomExpr AtomExpr::tau_aa(HalfExpr a, Sign s) {
  AtomExpr e;
  e.kind = Kind::tau_aa;
  e.params = {std::move(a)};
  e.sign = s;
  return e;
}

AtomExpr AtomExpr::signed_pair(HalfExpr c, HalfExpr d, Sign s) {
  AtomExpr e;
  e.kind = Kind::signed_pair;
  e.params = {std::move(c), std::move(d)};
  e.sign = s;
  return e;
}

AtomExpr AtomExpr::ds3(HalfExpr a, HalfExpr b, HalfExpr c, DS3Tag t) {
  AtomExpr e;
  e.kind = Kind::ds3;
  e.params = {std::move(a), std::move(b), std::move(c)};
  e.tag = t;
  return e;
}

AtomExpr AtomExpr::temp(HalfExpr a, HalfExpr c, Sign s) {
  AtomExpr e;
  e.kind = Kind::temp;
  e.params = {std::move(a), std::move(c)};
  e.sign = s;
  return e;
}

AtomExpr AtomExpr::lang(std::vector<SegExpr> segs, AtomExpr inner) {
  AtomExpr e;
  e.kind = Kind::lang;
  e.lang_segs = std::move(segs);
  e.lang_inner = std::make_shared<AtomExpr>(std::move(inner));
  return e;
}

namespace {

std::vector<HalfInt> eval_params(const std::vector<HalfExpr>& ps, const Env& env) {
  std::vector<HalfInt> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.eval(env));
  return out;
}

template <typename F>
ClassAtom guarded(F&& build) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }
}

}  // namespace

ClassAtom AtomExpr::eval(const Env& env) const {
  switch (kind) {
    case Kind::cusp:
      return cusp_atom();
    case Kind::sigma_one: {
      auto v = eval_params(params, env);
      return guarded([&] { return sigma_c_atom(v[0]); });
    }
    case Kind::tau_aa: {
      auto v = eval_params(params, env);
      return guarded([&] { return ClassAtom(SignedSeg(v[0], v[0], sign)); });
    }
    case Kind::signed_pair: {
      auto v = eval_params(params, env);
      return guarded([&] { return ClassAtom(SignedSeg(v[0], v[1], sign)); });
    }
    case Kind::ds3: {
      auto v = eval_params(params, env);
      return guarded([&] { return ClassAtom(DS3(v[0], v[1], v[2], tag)); });
    }
    case Kind::temp: {
      auto v = eval_params(params, env);
      return guarded([&] { return ClassAtom(Temp(v[0], v[1], sign)); });
    }
    case Kind::lang: {
      std::vector<Segment> segs;
      segs.reserve(lang_segs.size());
      for (const auto& s : lang_segs) segs.push_back(s.eval(env));
      ClassAtom inner = lang_inner->eval(env);
      if (!is_tempered(inner))
        throw SemanticError("Langlands datum needs a tempered inner atom, got " +
                            atom_str(inner));
      return guarded([&] { return make_lang(std::move(segs), *as_tempered(inner)); });
    }
  }
  throw SemanticError("corrupt atom expression");
}

std::string AtomExpr::str() const {
  switch (kind) {
    case Kind::cusp:
      return "sigma";
    case Kind::sigma_one:
      return "sigma_a{" + params[0].str() + "}";
    case Kind::tau_aa:
      return std::string("tau{a=") + params[0].str() + "," + sign_char(sign) + "}";
    case Kind::signed_pair:
      return std::string("ds{b=") + params[0].str() + ",c=" + params[1].str() + "," +
             sign_char(sign) + "}";
    case Kind::ds3: {
      std::string t = tag == DS3Tag::plus ? "+" : tag == DS3Tag::minus_bca ? "-bca" : "-abc";
      return "ds3{a=" + params[0].str() + ",b=" + params[1].str() + ",c=" + params[2].str() +
             "," + t + "}";
    }
    case Kind::temp:
      return std::string("T{") + params[0].str() + "," + params[1].str() + "," +
             sign_char(sign) + "}";
    case Kind::lang: {
      std::string out = "L(";
      for (std::size_t i = 0; i < lang_segs.size(); ++i) {
        if (i) out += " x ";
        out += lang_segs[i].str();
      }
      return out + " ; " + lang_inner->str() + ")";
    }
  }
  return "?";
}

bool AtomExpr::operator==(const AtomExpr& o) const {
  if (kind != o.kind || params != o.params || sign != o.sign || tag != o.tag ||
      lang_segs != o.lang_segs)
    return false;
  if (!lang_inner != !o.lang_inner) return false;
  return !lang_inner || *lang_inner == *o.lang_inner;
}

// --------------------------------------------------------------- LabelExpr

InducedLabel LabelExpr::eval(const Env& env) const {
  std::vector<Segment> out;
  out.reserve(segs.size());
  for (const auto& s : segs) out.push_back(s.eval(env));
  return InducedLabel(std::move(out), atom.eval(env));
}

std::string LabelExpr::str() const {
  if (segs.empty()) return atom.str();
  std::string out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i) out += " x ";
    out += segs[i].str();
  }
  return out + " |x " + atom.str();
}

bool LabelExpr::operator==(const LabelExpr& o) const {
  return segs == o.segs && atom == o.atom;
}

// ------------------------------------------------------------------ Parser

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  LabelExpr label() {
    LabelExpr out;
    skip_ws();
    if (peek() == 'd' && peek_at(1) == '(') {
      out.segs.push_back(factor());
      for (;;) {
        std::size_t save = pos_;
        skip_ws();
        if (try_word("|x")) {
          out.atom = atom();
          return out;
        }
        if (try_word("x")) {
          out.segs.push_back(factor());
          continue;
        }
        pos_ = save;
        fail("expected ' x ' or ' |x '");
      }
    }
    out.atom = atom();
    return out;
  }

  std::vector<SegExpr> gl_product() {
    skip_ws();
    std::vector<SegExpr> out;
    if (peek() == '1') {
      ++pos_;
      return out;
    }
    out.push_back(factor());
    for (;;) {
      std::size_t save = pos_;
      skip_ws();
      if (try_word("x")) {
        out.push_back(factor());
        continue;
      }
      pos_ = save;
      return out;
    }
  }

  HalfExpr half() {
    skip_ws();
    std::size_t start = pos_;
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
      skip_ws();
    }
    HalfExpr e;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = HalfExpr::constant(sign > 0 ? number() : -number());
    } else if (is_var_start()) {
      e = HalfExpr::variable(std::string(1, take()), sign);
    } else {
      fail_at(start, "expected a number or a variable");
    }
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      int osign = peek() == '+' ? 1 : -1;
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a number after '" + std::string(1, osign > 0 ? '+' : '-') + "'");
      HalfInt n = number();
      e.offset += osign > 0 ? n : -n;
    }
    return e;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

private:
  SegExpr factor() {
    skip_ws();
    expect_word("d");
    expect('(');
    HalfExpr lo = half();
    expect(',');
    HalfExpr hi = half();
    expect(')');
    return SegExpr{std::move(lo), std::move(hi)};
  }

  AtomExpr atom() {
    skip_ws();
    std::size_t start = pos_;
    if (try_word("sigma_a")) {
      expect('{');
      HalfExpr c = braced_half();
      expect('}');
      return AtomExpr::sigma_one(std::move(c));
    }
    if (try_word("sigma")) return AtomExpr::cusp();
    if (try_word("tau")) {
      expect('{');
      HalfExpr a = braced_half();
      expect(',');
      Sign s = sign_token();
      expect('}');
      return AtomExpr::tau_aa(std::move(a), s);
    }
    if (try_word("ds3")) {
      expect('{');
      HalfExpr a = braced_half();
      expect(',');
      HalfExpr b = braced_half();
      expect(',');
      HalfExpr c = braced_half();
      expect(',');
      DS3Tag t = ds3_tag();
      expect('}');
      return AtomExpr::ds3(std::move(a), std::move(b), std::move(c), t);
    }
    if (try_word("ds")) {
      expect('{');
      HalfExpr c = braced_half();
      expect(',');
      HalfExpr d = braced_half();
      expect(',');
      Sign s = sign_token();
      expect('}');
      return AtomExpr::signed_pair(std::move(c), std::move(d), s);
    }
    if (try_word("T")) {
      expect('{');
      HalfExpr a = braced_half();
      expect(',');
      HalfExpr c = braced_half();
      expect(',');
      Sign s = sign_token();
      expect('}');
      return AtomExpr::temp(std::move(a), std::move(c), s);
    }
    if (try_word("L")) {
      expect('(');
      std::vector<SegExpr> segs;
      segs.push_back(factor());
      for (;;) {
        skip_ws();
        if (try_word("x")) {
          segs.push_back(factor());
          continue;
        }
        break;
      }
      expect(';');
      AtomExpr inner = atom();
      expect(')');
      return AtomExpr::lang(std::move(segs), std::move(inner));
    }
    fail_at(start, "expected an atom");
  }

  /// A half inside braces, with an optional leading "name=" annotation.
  HalfExpr braced_half() {
    skip_ws();
    if (is_var_start() && peek_at(1) == '=') pos_ += 2;
    return half();
  }

  Sign sign_token() {
    skip_ws();
    char c = take();
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    fail_at(pos_ - 1, "expected '+' or '-'");
  }

  DS3Tag ds3_tag() {
    skip_ws();
    std::size_t start = pos_;
    if (try_word("+")) return DS3Tag::plus;
    if (try_word("-bca")) return DS3Tag::minus_bca;
    if (try_word("-abc")) return DS3Tag::minus_abc;
    fail_at(start, "expected '+', '-bca' or '-abc'");
  }

  HalfInt number() {
    std::size_t start = pos_;
    std::int64_t n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + (take() - '0');
      if (n > (1 << 30)) fail_at(start, "number too large");
    }
    if (peek() == '/' && peek_at(1) == '2') {
      pos_ += 2;
      return HalfInt::from_twice(n);
    }
    return HalfInt(static_cast<int>(n));
  }

  bool is_var_start() const {
    char c = peek();
    return c >= 'a' && c <= 'z' && !is_word_char(peek_at(1));
  }

  static bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  }

  /// Consumes `w` if present as a full word (not a prefix of a longer word).
  bool try_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    bool alpha = std::isalpha(static_cast<unsigned char>(w.back())) || w.back() == '_';
    if (alpha && is_word_char(peek_at(w.size()))) return false;
    pos_ += w.size();
    return true;
  }

  void expect_word(std::string_view w) {
    std::size_t start = pos_;
    if (!try_word(w)) fail_at(start, "expected '" + std::string(w) + "'");
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail("expected '" + std::string(1, c) + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char peek_at(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }
  char take() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_++];
  }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw SyntaxError(msg, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_vars(const HalfExpr& e, std::vector<std::string>& out) {
  if (e.is_constant()) return;
  for (const auto& v : out)
    if (v == e.var) return;
  out.push_back(e.var);
}

void collect_vars(const AtomExpr& a, std::vector<std::string>& out) {
  for (const auto& p : a.params) collect_vars(p, out);
  for (const auto& s : a.lang_segs) {
    collect_vars(s.lo, out);
    collect_vars(s.hi, out);
  }
  if (a.lang_inner) collect_vars(*a.lang_inner, out);
}

}  // namespace

LabelExpr parse_label_expr(std::string_view text) {
  Parser p(text);
  LabelExpr e = p.label();
  p.finish();
  return e;
}

std::vector<SegExpr> parse_gl_expr(std::string_view text) {
  Parser p(text);
  std::vector<SegExpr> e = p.gl_product();
  p.finish();
  return e;
}

HalfExpr parse_half_expr(std::string_view text) {
  Parser p(text);
  HalfExpr e = p.half();
  p.finish();
  return e;
}

std::vector<std::string> free_variables(const LabelExpr& e) {
  std::vector<std::string> out;
  for (const auto& s : e.segs) {
    collect_vars(s.lo, out);
    collect_vars(s.hi, out);
  }
  collect_vars(e.atom, out);
  return out;
}

InducedLabel parse_expression(std::string_view text) {
  LabelExpr e = parse_label_expr(text);
  auto vars = free_variables(e);
  if (!vars.empty())
    throw SemanticError("free variable '" + vars.front() + "' in a concrete expression");
  return e.eval(Env{}).canonical();
}

ClassPart parse_class_part(std::string_view text) { return class_part(parse_expression(text)); }

}  // namespace jmc
