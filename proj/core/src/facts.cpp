#include "jmc/facts.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "jmc/facts_data.hpp"

namespace jmc {

std::string fact_kind_str(FactKind k) {
  switch (k) {
    case FactKind::rg: return "rg";
    case FactKind::mult: return "mult";
    case FactKind::contains: return "contains";
    case FactKind::subrep: return "subrep";
    case FactKind::mu_lower: return "mu_lower";
    case FactKind::mu_zero: return "mu_zero";
    case FactKind::filtration: return "filtration";
    case FactKind::bound: return "bound";
  }
  return "?";
}

bool FactConstraint::holds(const Env& env) const {
  HalfInt l = lhs.eval(env), r = rhs.eval(env);
  switch (op) {
    case Op::lt: return l < r;
    case Op::le: return l <= r;
    case Op::eq: return l == r;
    case Op::ne: return l != r;
  }
  return false;
}

std::string FactConstraint::str() const {
  const char* o = op == Op::lt ? "<" : op == Op::le ? "<=" : op == Op::eq ? "=" : "!=";
  return lhs.str() + o + rhs.str();
}

bool Fact::constraints_hold(const Env& env) const {
  for (const auto& c : constraints)
    if (!c.holds(env)) return false;
  return true;
}

// ----------------------------------------------------------- instantiation

ClassPart instantiate_label(const LabelExpr& e, const Env& env) {
  return class_part(e.eval(env));
}

std::optional<ClassPart> try_instantiate_label(const LabelExpr& e, const Env& env) {
  try {
    return instantiate_label(e, env);
  } catch (const SemanticError&) {
    return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

GLStandard instantiate_gl(const std::vector<SegExpr>& gl, const Env& env) {
  std::vector<Segment> segs;
  segs.reserve(gl.size());
  for (const auto& s : gl) segs.push_back(s.eval(env));
  return GLStandard(std::move(segs));
}

// ------------------------------------------------------------- unification

namespace {

bool unify_half(const HalfExpr& e, HalfInt value, Env& env) {
  if (e.is_constant()) return e.offset == value;
  HalfInt needed = e.var_coeff > 0 ? value - e.offset : -(value - e.offset);
  auto [it, inserted] = env.emplace(e.var, needed);
  return inserted || it->second == needed;
}

bool unify_seg(const SegExpr& se, const Segment& s, Env& env) {
  return !s.is_empty() && unify_half(se.lo, s.lo(), env) && unify_half(se.hi, s.hi(), env);
}

/// All extensions of `env` matching pattern segments against concrete ones
/// in any order.
std::vector<Env> unify_seg_list(const std::vector<SegExpr>& pats,
                                const std::vector<Segment>& segs, const Env& env) {
  std::vector<Env> out;
  if (pats.size() != segs.size()) return out;
  if (pats.empty()) {
    out.push_back(env);
    return out;
  }
  std::vector<std::size_t> order(segs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  do {
    Env trial = env;
    bool ok = true;
    for (std::size_t i = 0; i < pats.size() && ok; ++i)
      ok = unify_seg(pats[i], segs[order[i]], trial);
    if (ok && std::find(out.begin(), out.end(), trial) == out.end())
      out.push_back(std::move(trial));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<Env> unify_atom(const AtomExpr& ae, const ClassAtom& atom, const Env& env) {
  using K = AtomExpr::Kind;
  std::vector<Env> out;
  auto one = [&](bool ok, Env&& e) {
    if (ok) out.push_back(std::move(e));
  };
  switch (ae.kind) {
    case K::cusp:
      one(std::holds_alternative<Cusp>(atom), Env(env));
      break;
    case K::sigma_one: {
      const auto* s = std::get_if<SignedSeg>(&atom);
      if (s && s->c() == -HalfInt::half() && s->sign() == Sign::plus) {
        Env e = env;
        one(unify_half(ae.params[0], s->d(), e), std::move(e));
      }
      break;
    }
    case K::tau_aa: {
      const auto* s = std::get_if<SignedSeg>(&atom);
      if (s && s->c() == s->d() && s->sign() == ae.sign) {
        Env e = env;
        one(unify_half(ae.params[0], s->c(), e), std::move(e));
      }
      break;
    }
    case K::signed_pair: {
      const auto* s = std::get_if<SignedSeg>(&atom);
      if (s && s->sign() == ae.sign) {
        Env e = env;
        one(unify_half(ae.params[0], s->c(), e) && unify_half(ae.params[1], s->d(), e),
            std::move(e));
      }
      break;
    }
    case K::ds3: {
      const auto* s = std::get_if<DS3>(&atom);
      if (s && s->tag() == ae.tag) {
        Env e = env;
        one(unify_half(ae.params[0], s->a(), e) && unify_half(ae.params[1], s->b(), e) &&
                unify_half(ae.params[2], s->c(), e),
            std::move(e));
      }
      break;
    }
    case K::temp: {
      const auto* s = std::get_if<Temp>(&atom);
      if (s && s->sign() == ae.sign) {
        Env e = env;
        one(unify_half(ae.params[0], s->a(), e) && unify_half(ae.params[1], s->c(), e),
            std::move(e));
      }
      break;
    }
    case K::lang: {
      if (const auto* ls = std::get_if<LangSeg>(&atom)) {
        if (ae.lang_segs.size() == 1 && ae.lang_inner->kind == K::cusp) {
          Env e = env;
          one(unify_seg(ae.lang_segs[0], ls->seg(), e), std::move(e));
        }
        break;
      }
      const auto* l = std::get_if<Lang>(&atom);
      if (!l) break;
      ClassAtom inner = as_atom(l->tau());
      for (Env& mid : unify_seg_list(ae.lang_segs, l->segs(), env))
        for (Env& fin : unify_atom(*ae.lang_inner, inner, mid))
          if (std::find(out.begin(), out.end(), fin) == out.end())
            out.push_back(std::move(fin));
      break;
    }
  }
  return out;
}

std::vector<Env> unify_label(const LabelExpr& pat, const ClassPart& concrete) {
  if (const auto* atom = std::get_if<ClassAtom>(&concrete)) {
    if (!pat.segs.empty()) return {};
    return unify_atom(pat.atom, *atom, Env{});
  }
  const auto& lbl = std::get<InducedLabel>(concrete);
  std::vector<Env> out;
  for (Env& mid : unify_seg_list(pat.segs, lbl.segs(), Env{}))
    for (Env& fin : unify_atom(pat.atom, lbl.base(), mid))
      if (std::find(out.begin(), out.end(), fin) == out.end())
        out.push_back(std::move(fin));
  return out;
}

}  // namespace

// ----------------------------------------------------------------- parsing

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

FactConstraint parse_constraint(const std::string& text, const std::string& where) {
  static const std::pair<const char*, FactConstraint::Op> ops[] = {
      {"<=", FactConstraint::Op::le},
      {"!=", FactConstraint::Op::ne},
      {"<", FactConstraint::Op::lt},
      {"=", FactConstraint::Op::eq},
  };
  for (const auto& [tok, op] : ops) {
    std::size_t at = text.find(tok);
    if (at == std::string::npos) continue;
    FactConstraint c;
    c.lhs = parse_half_expr(text.substr(0, at));
    c.op = op;
    c.rhs = parse_half_expr(text.substr(at + std::string_view(tok).size()));
    return c;
  }
  throw FactError(where + ": constraint '" + text + "' has no comparison operator");
}

FactTerm parse_term(const std::string& body, bool mu_kind, const std::string& where) {
  std::istringstream in(body);
  long long coeff = 0;
  if (!(in >> coeff)) throw FactError(where + ": term needs a leading integer coefficient");
  std::string rest;
  std::getline(in, rest);
  rest = trim(rest);
  FactTerm t;
  t.coeff = coeff;
  if (mu_kind) {
    std::size_t at = rest.find(" (x) ");
    if (at == std::string::npos)
      throw FactError(where + ": mu term needs '<gl> (x) <label>', got '" + rest + "'");
    t.has_gl = true;
    t.gl = parse_gl_expr(rest.substr(0, at));
    t.label = parse_label_expr(rest.substr(at + 5));
  } else {
    t.label = parse_label_expr(rest);
  }
  return t;
}

FactKind parse_kind(const std::string& text, const std::string& where) {
  if (text == "rg") return FactKind::rg;
  if (text == "mult") return FactKind::mult;
  if (text == "contains") return FactKind::contains;
  if (text == "subrep") return FactKind::subrep;
  if (text == "mu_lower") return FactKind::mu_lower;
  if (text == "mu_zero") return FactKind::mu_zero;
  if (text == "filtration") return FactKind::filtration;
  if (text == "bound") return FactKind::bound;
  throw FactError(where + ": unknown kind '" + text + "'");
}

/// Validation grid: every declared variable ranges over these values.
const std::vector<HalfInt>& validation_values() {
  static const std::vector<HalfInt> v = {HalfInt::from_twice(1), HalfInt::from_twice(3),
                                         HalfInt::from_twice(5), HalfInt::from_twice(7)};
  return v;
}

}  // namespace

FactCatalog FactCatalog::parse(std::string_view text, std::string_view origin) {
  FactCatalog cat;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::optional<Fact> cur;
  bool host_seen = false;

  auto where = [&](const std::string& what) {
    return std::string(origin) + ":" + std::to_string(lineno) + ": " + what;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    // strip comments; citations never contain '#'
    if (std::size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);

    try {
      if (key == "fact") {
        if (cur) throw FactError(where("missing 'end' before new fact"));
        if (rest.empty()) throw FactError(where("fact needs an id"));
        cur = Fact{};
        cur->id = rest;
        host_seen = false;
      } else if (!cur) {
        throw FactError(where("'" + key + "' outside a fact record"));
      } else if (key == "kind") {
        cur->kind = parse_kind(rest, where("kind"));
      } else if (key == "vars") {
        cur->vars = split(rest, ',');
        for (const auto& v : cur->vars)
          if (v.size() != 1 || v[0] < 'a' || v[0] > 'z')
            throw FactError(where("variable '" + v + "' must be one lowercase letter"));
      } else if (key == "where") {
        for (const auto& c : split(rest, ','))
          cur->constraints.push_back(parse_constraint(c, where("where")));
      } else if (key == "host") {
        cur->host = parse_label_expr(rest);
        host_seen = true;
      } else if (key == "term") {
        bool mu = cur->kind == FactKind::mu_lower || cur->kind == FactKind::mu_zero;
        cur->terms.push_back(parse_term(rest, mu, where("term")));
      } else if (key == "note") {
        cur->note = rest;
      } else if (key == "cite") {
        if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"')
          throw FactError(where("cite must be a double-quoted string"));
        cur->cite = rest.substr(1, rest.size() - 2);
      } else if (key == "end") {
        if (!host_seen) throw FactError(where("fact '" + cur->id + "' has no host"));
        cat.facts_.push_back(std::move(*cur));
        cur.reset();
      } else {
        throw FactError(where("unknown directive '" + key + "'"));
      }
    } catch (const SyntaxError& e) {
      throw FactError(where(std::string("parse error: ") + e.what() + " in '" + rest + "'"));
    }
  }
  if (cur) throw FactError(std::string(origin) + ": unterminated fact '" + cur->id + "'");
  cat.validate();
  return cat;
}

FactCatalog FactCatalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FactError("cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const FactCatalog& FactCatalog::builtin() {
  static const FactCatalog cat = FactCatalog::parse(detail::embedded_facts, "builtin");
  return cat;
}

const Fact* FactCatalog::find(std::string_view id) const {
  for (const auto& f : facts_)
    if (f.id == id) return &f;
  return nullptr;
}

// -------------------------------------------------------------- validation

void FactCatalog::validate() const {
  std::set<std::string> ids;
  for (const Fact& f : facts_) {
    auto fail = [&](const std::string& msg) {
      throw FactError("fact '" + f.id + "': " + msg);
    };
    if (!ids.insert(f.id).second) fail("duplicate id");
    if (f.cite.empty()) fail("missing citation");
    if (f.terms.empty()) fail("no terms");
    if (f.kind == FactKind::subrep && f.terms.size() != 1) fail("subrep needs one term");
    for (const FactTerm& t : f.terms) {
      long long lo = (f.kind == FactKind::mu_zero || f.kind == FactKind::mult) ? 0 : 1;
      if (f.kind == FactKind::mu_zero && t.coeff != 0) fail("mu_zero coefficient must be 0");
      if (t.coeff < lo) fail("bad coefficient");
    }

    // Enumerate variable assignments over the validation grid.
    const auto& vals = validation_values();
    std::size_t n = f.vars.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= vals.size();
    std::size_t instantiated = 0;
    for (std::size_t mask = 0; mask < combos; ++mask) {
      Env env;
      std::size_t m = mask;
      for (std::size_t i = 0; i < n; ++i) {
        env[f.vars[i]] = vals[m % vals.size()];
        m /= vals.size();
      }
      if (!f.constraints_hold(env)) continue;
      auto host = try_instantiate_label(f.host, env);
      if (!host) continue;
      auto host_rank = class_part_rank(*host);
      auto host_sup = class_part_abs_support(*host);
      bool all_ok = true;
      for (const FactTerm& t : f.terms) {
        auto lbl = try_instantiate_label(t.label, env);
        if (!lbl) {
          all_ok = false;
          break;
        }
        auto rank = class_part_rank(*lbl);
        auto sup = class_part_abs_support(*lbl);
        if (t.has_gl) {
          GLStandard g = instantiate_gl(t.gl, env);
          rank += g.rank();
          for (const auto& [v, k] : g.abs_support()) sup[v] += k;
        }
        if (rank != host_rank)
          fail("rank mismatch at " + class_part_str(*lbl) + " under env giving host " +
               class_part_str(*host));
        if (sup != host_sup)
          fail("support mismatch at " + class_part_str(*lbl) + " under env giving host " +
               class_part_str(*host));
      }
      if (all_ok) ++instantiated;
    }
    if (instantiated == 0) fail("never instantiates on the validation grid");
  }
}

// ----------------------------------------------------------------- queries

std::vector<FactCatalog::Match> FactCatalog::match_host(FactKind kind,
                                                        const ClassPart& host) const {
  std::vector<Match> out;
  for (const Fact& f : facts_) {
    if (f.kind != kind) continue;
    for (Env& env : unify_label(f.host, host)) {
      bool bound = true;
      for (const auto& v : f.vars)
        if (!env.count(v)) bound = false;
      if (!bound || !f.constraints_hold(env)) continue;
      auto check = try_instantiate_label(f.host, env);
      if (!check || !(*check == host)) continue;
      out.push_back(Match{&f, std::move(env)});
    }
  }
  return out;
}

std::vector<FactCatalog::InstTerm> FactCatalog::instantiate_terms(const Match& m) {
  std::vector<InstTerm> out;
  out.reserve(m.fact->terms.size());
  for (const FactTerm& t : m.fact->terms) {
    InstTerm it;
    it.coeff = t.coeff;
    if (t.has_gl) it.gl = instantiate_gl(t.gl, m.env);
    it.label = instantiate_label(t.label, m.env);
    out.push_back(std::move(it));
  }
  return out;
}

}  // namespace jmc
