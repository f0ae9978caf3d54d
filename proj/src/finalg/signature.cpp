#include <algorithm>
#include <cctype>
#include <sstream>

#include "shq/finalg.hpp"

namespace shq {

namespace {

bool is_delim(char ch) {
  return std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')' ||
         ch == ',' || ch == '=';
}

class TermParser {
 public:
  TermParser(const Signature& sig, const std::string& text, std::vector<std::string>& vars)
      : sig_(sig), text_(text), vars_(vars) {}

  Term parse_all() {
    Term t = parse();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

  Term parse() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a symbol");
    std::string sym = text_.substr(start, pos_ - start);
    skip_ws();
    auto op = sig_.op_index(sym);
    if (pos_ < text_.size() && text_[pos_] == '(') {
      if (!op) fail("undeclared operation '" + sym + "'");
      ++pos_;
      Term t{Term::Kind::application, *op, {}};
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
      } else {
        while (true) {
          t.args.push_back(parse());
          skip_ws();
          if (pos_ >= text_.size()) fail("unbalanced parenthesis");
          if (text_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (text_[pos_] == ')') {
            ++pos_;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
      int arity = sig_.ops()[*op].arity;
      if (static_cast<int>(t.args.size()) != arity) {
        fail("'" + sym + "' applied to " + std::to_string(t.args.size()) +
             " arguments, declared arity " + std::to_string(arity));
      }
      return t;
    }
    if (op) {
      if (sig_.ops()[*op].arity != 0) {
        fail("'" + sym + "' has arity " + std::to_string(sig_.ops()[*op].arity) +
             " but is used as a constant");
      }
      return Term{Term::Kind::application, *op, {}};
    }
    auto it = std::find(vars_.begin(), vars_.end(), sym);
    int v = static_cast<int>(it - vars_.begin());
    if (it == vars_.end()) vars_.push_back(sym);
    return Term{Term::Kind::variable, v, {}};
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SignatureError("term \"" + text_ + "\" at offset " + std::to_string(pos_) +
                         ": " + msg);
  }

  const Signature& sig_;
  const std::string& text_;
  std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

bool is_var(const Term& t, int v) {
  return t.kind == Term::Kind::variable && t.index == v;
}

bool is_const(const Term& t, int op) {
  return t.kind == Term::Kind::application && t.index == op && t.args.empty();
}

// b(x, 0) = x  (side = 0)   or   b(0, x) = x  (side = 1), either orientation.
bool is_unit_law(const Equation& eq, int op, int zero, int side) {
  auto check = [&](const Term& app, const Term& var) {
    if (var.kind != Term::Kind::variable) return false;
    if (app.kind != Term::Kind::application || app.index != op || app.args.size() != 2) {
      return false;
    }
    const Term& kept = app.args[side];
    const Term& unit = app.args[1 - side];
    return is_var(kept, var.index) && is_const(unit, zero);
  };
  return check(eq.lhs, eq.rhs) || check(eq.rhs, eq.lhs);
}

}  // namespace

std::optional<int> Signature::op_index(const std::string& symbol) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].symbol == symbol) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool Signature::compatible(const Signature& other) const {
  if (this == &other) return true;
  if (ops_.size() != other.ops_.size()) return false;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].symbol != other.ops_[i].symbol || ops_[i].arity != other.ops_[i].arity) {
      return false;
    }
  }
  return zero_op_ == other.zero_op_;
}

Term Signature::parse_term(const std::string& text, std::vector<std::string>& vars) const {
  return TermParser(*this, text, vars).parse_all();
}

std::string Signature::format_term(const Term& t, const std::vector<std::string>& vars) const {
  if (t.kind == Term::Kind::variable) {
    return t.index < static_cast<int>(vars.size()) ? vars[t.index]
                                                   : "v" + std::to_string(t.index);
  }
  std::string out = ops_[t.index].symbol;
  if (t.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ',';
    out += format_term(t.args[i], vars);
  }
  return out + ')';
}

SignaturePtr Signature::make(std::string name, std::vector<OpSymbol> ops,
                             const std::vector<std::string>& equations,
                             const std::string& zero_symbol) {
  std::shared_ptr<Signature> sig(new Signature());
  sig->name_ = std::move(name);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].arity < 0) throw SignatureError("negative arity for '" + ops[i].symbol + "'");
    if (ops[i].symbol.empty() ||
        std::any_of(ops[i].symbol.begin(), ops[i].symbol.end(), is_delim)) {
      throw SignatureError("invalid operation symbol '" + ops[i].symbol + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ops[j].symbol == ops[i].symbol) {
        throw SignatureError("operation '" + ops[i].symbol + "' declared twice");
      }
    }
  }
  sig->ops_ = std::move(ops);
  auto zero = sig->op_index(zero_symbol);
  if (!zero) throw SignatureError("zero symbol '" + zero_symbol + "' is not declared");
  if (sig->ops_[*zero].arity != 0) {
    throw SignatureError("zero symbol '" + zero_symbol + "' is not nullary");
  }
  sig->zero_op_ = *zero;

  for (const auto& text : equations) {
    auto eq_pos = text.find('=');
    if (eq_pos == std::string::npos || text.find('=', eq_pos + 1) != std::string::npos) {
      throw SignatureError("equation \"" + text + "\" must contain exactly one '='");
    }
    std::vector<std::string> vars;
    Equation eq;
    eq.lhs = sig->parse_term(text.substr(0, eq_pos), vars);
    eq.rhs = sig->parse_term(text.substr(eq_pos + 1), vars);
    eq.num_vars = static_cast<int>(vars.size());
    eq.text = sig->format_term(eq.lhs, vars) + " = " + sig->format_term(eq.rhs, vars);
    sig->equations_.push_back(std::move(eq));
  }

  for (std::size_t op = 0; op < sig->ops_.size(); ++op) {
    if (sig->ops_[op].arity != 2) continue;
    bool right_unit = false;
    bool left_unit = false;
    for (const auto& eq : sig->equations_) {
      right_unit = right_unit || is_unit_law(eq, static_cast<int>(op), *zero, 0);
      left_unit = left_unit || is_unit_law(eq, static_cast<int>(op), *zero, 1);
    }
    if (right_unit && left_unit) sig->unital_ops_.push_back(static_cast<int>(op));
  }
  if (sig->unital_ops_.empty()) {
    throw SignatureError("signature '" + sig->name_ +
                         "' declares no binary operation b with b(x,0) = x = b(0,x)");
  }
  return sig;
}

SignaturePtr Signature::group() {
  static const SignaturePtr sig = make("group", {{"0", 0}, {"*", 2}, {"inv", 1}},
                                       {
                                           "*(*(x,y),z) = *(x,*(y,z))",
                                           "*(x,0) = x",
                                           "*(0,x) = x",
                                           "*(x,inv(x)) = 0",
                                           "*(inv(x),x) = 0",
                                       },
                                       "0");
  return sig;
}

SignaturePtr Signature::digroup() {
  static const SignaturePtr sig =
      make("digroup", {{"0", 0}, {"*1", 2}, {"inv1", 1}, {"*2", 2}, {"inv2", 1}},
           {
               "*1(*1(x,y),z) = *1(x,*1(y,z))",
               "*1(x,0) = x",
               "*1(0,x) = x",
               "*1(x,inv1(x)) = 0",
               "*1(inv1(x),x) = 0",
               "*2(*2(x,y),z) = *2(x,*2(y,z))",
               "*2(x,0) = x",
               "*2(0,x) = x",
               "*2(x,inv2(x)) = 0",
               "*2(inv2(x),x) = 0",
           },
           "0");
  return sig;
}

}  // namespace shq
