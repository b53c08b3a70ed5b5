#include "ualg/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace ualg {

Term Term::var(std::size_t index) {
  Term t;
  t.var_ = index;
  return t;
}

Term Term::node(std::string symbol, std::vector<Term> children) {
  Term t;
  t.symbol_ = std::move(symbol);
  t.children_ = std::move(children);
  for (const Term& c : t.children_) {
    t.height_ = std::max(t.height_, c.height() + 1);
  }
  return t;
}

std::size_t Term::var_index() const {
  if (!is_var()) {
    throw UalgError("var_index on an operation node");
  }
  return var_;
}

const std::string& Term::symbol() const {
  if (is_var()) {
    throw UalgError("symbol of a variable");
  }
  return symbol_;
}

const std::vector<Term>& Term::children() const {
  if (is_var()) {
    throw UalgError("children of a variable");
  }
  return children_;
}

bool operator==(const Term& a, const Term& b) {
  if (a.var_ != b.var_) {
    return false;
  }
  if (a.is_var()) {
    return true;
  }
  return a.symbol_ == b.symbol_ && a.children_ == b.children_;
}

int compare_terms(const Signature& sig, const Term& a, const Term& b) {
  if (a.height() != b.height()) {
    return a.height() < b.height() ? -1 : 1;
  }
  if (a.is_var() != b.is_var()) {
    return a.is_var() ? -1 : 1;
  }
  if (a.is_var()) {
    if (a.var_index() != b.var_index()) {
      return a.var_index() < b.var_index() ? -1 : 1;
    }
    return 0;
  }
  const std::size_t ra = sig.require_index(a.symbol());
  const std::size_t rb = sig.require_index(b.symbol());
  if (ra != rb) {
    return ra < rb ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    const int c = compare_terms(sig, a.children()[i], b.children()[i]);
    if (c != 0) {
      return c;
    }
  }
  return 0;
}

namespace {

class TermParser {
 public:
  TermParser(const Signature& sig, std::size_t nvars, std::string_view text)
      : sig_(sig), nvars_(nvars), text_(text) {}

  Term parse() {
    Term t = parse_term();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("trailing input after term");
    }
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UalgError("term syntax error at column " + std::to_string(pos_ + 1) +
                    ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  // Longest signature symbol starting at pos_, or nullopt.
  std::optional<std::size_t> match_symbol() const {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    const std::string_view rest = text_.substr(pos_);
    for (std::size_t i = 0; i < sig_.count(); ++i) {
      const std::string& name = sig_.name(i);
      if (name.size() > best_len && rest.substr(0, name.size()) == name) {
        best = i;
        best_len = name.size();
      }
    }
    return best;
  }

  // Length of an x<digits> token starting at pos_, or 0.
  std::size_t match_var_length() const {
    if (pos_ >= text_.size() || text_[pos_] != 'x') {
      return 0;
    }
    std::size_t j = pos_ + 1;
    while (j < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[j])) != 0) {
      ++j;
    }
    return j > pos_ + 1 ? j - pos_ : 0;
  }

  Term parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) {
      fail("expected a term");
    }

    const auto sym = match_symbol();
    const std::size_t var_len = match_var_length();
    const std::size_t sym_len = sym ? sig_.name(*sym).size() : 0;

    if (var_len > sym_len) {
      std::size_t index = 0;
      const char* first = text_.data() + pos_ + 1;
      const char* last = text_.data() + pos_ + var_len;
      const auto [ptr, ec] = std::from_chars(first, last, index);
      if (ec != std::errc() || ptr != last) {
        fail("variable index out of representable range");
      }
      if (index >= nvars_) {
        fail("variable x" + std::to_string(index) + " outside the context of " +
             std::to_string(nvars_) + " variable(s)");
      }
      pos_ += var_len;
      return Term::var(index);
    }
    if (!sym) {
      fail("expected a variable or an operation symbol");
    }

    pos_ += sym_len;
    const std::size_t arity = sig_.arity(*sym);
    skip_ws();

    std::vector<Term> children;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      children.push_back(parse_term());
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(parse_term());
        skip_ws();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        fail("expected ',' or ')'");
      }
      ++pos_;
    }

    if (children.size() != arity) {
      fail("symbol \"" + sig_.name(*sym) + "\" takes " +
           std::to_string(arity) + " argument(s), got " +
           std::to_string(children.size()));
    }
    return Term::node(sig_.name(*sym), std::move(children));
  }

  const Signature& sig_;
  std::size_t nvars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_to(const Term& t, std::ostream& os) {
  if (t.is_var()) {
    os << 'x' << t.var_index();
    return;
  }
  os << t.symbol();
  if (!t.children().empty()) {
    os << '(';
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      if (i > 0) {
        os << ',';
      }
      print_to(t.children()[i], os);
    }
    os << ')';
  }
}

}  // namespace

Term parse_term(const Signature& sig, std::size_t nvars,
                std::string_view text) {
  return TermParser(sig, nvars, text).parse();
}

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_to(t, os);
  return os.str();
}

void validate_term(const Signature& sig, std::size_t nvars, const Term& t) {
  if (t.is_var()) {
    if (t.var_index() >= nvars) {
      throw UalgError("variable x" + std::to_string(t.var_index()) +
                      " outside the context of " + std::to_string(nvars) +
                      " variable(s)");
    }
    return;
  }
  const std::size_t sym = sig.require_index(t.symbol());
  if (t.children().size() != sig.arity(sym)) {
    throw UalgError("symbol \"" + t.symbol() + "\" takes " +
                    std::to_string(sig.arity(sym)) + " argument(s), got " +
                    std::to_string(t.children().size()));
  }
  for (const Term& c : t.children()) {
    validate_term(sig, nvars, c);
  }
}

element_type interpret(const FiniteAlgebra& alg, const Term& t,
                       std::span<const element_type> env) {
  if (t.is_var()) {
    if (t.var_index() >= env.size()) {
      throw UalgError("environment does not cover x" +
                      std::to_string(t.var_index()));
    }
    return env[t.var_index()];
  }
  std::vector<element_type> values;
  values.reserve(t.children().size());
  for (const Term& c : t.children()) {
    values.push_back(interpret(alg, c, env));
  }
  return alg.apply(t.symbol(), values);
}

element_type free_lift(const FiniteAlgebra& alg,
                       std::span<const element_type> assignment,
                       const Term& t) {
  if (t.is_var()) {
    if (t.var_index() >= assignment.size()) {
      throw UalgError("assignment does not cover x" +
                      std::to_string(t.var_index()));
    }
    return assignment[t.var_index()];
  }
  const std::size_t sym = alg.signature().require_index(t.symbol());
  std::vector<element_type> lifted;
  lifted.reserve(t.children().size());
  for (const Term& c : t.children()) {
    lifted.push_back(free_lift(alg, assignment, c));
  }
  return alg.apply(sym, lifted);
}

Term substitute(const Term& t, std::span<const Term> sigma) {
  if (t.is_var()) {
    if (t.var_index() >= sigma.size()) {
      throw UalgError("substitution does not cover x" +
                      std::to_string(t.var_index()));
    }
    return sigma[t.var_index()];
  }
  std::vector<Term> children;
  children.reserve(t.children().size());
  for (const Term& c : t.children()) {
    children.push_back(substitute(c, sigma));
  }
  return Term::node(t.symbol(), std::move(children));
}

std::vector<Term> enumerate_terms(const Signature& sig, std::size_t nvars,
                                  std::size_t depth) {
  std::vector<std::vector<Term>> by_height(depth + 1);

  for (std::size_t v = 0; v < nvars; ++v) {
    by_height[0].push_back(Term::var(v));
  }
  for (std::size_t s = 0; s < sig.count(); ++s) {
    if (sig.arity(s) == 0) {
      by_height[0].push_back(Term::node(sig.name(s), {}));
    }
  }

  std::vector<Term> pool = by_height[0];  // all terms of height < h
  for (std::size_t h = 1; h <= depth; ++h) {
    std::vector<Term>& out = by_height[h];
    for (std::size_t s = 0; s < sig.count(); ++s) {
      const std::size_t k = sig.arity(s);
      if (k == 0 || pool.empty()) {
        continue;
      }
      // all k-tuples over the pool with at least one child of height h-1
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        std::size_t max_h = 0;
        for (std::size_t j = 0; j < k; ++j) {
          max_h = std::max(max_h, pool[pick[j]].height());
        }
        if (max_h == h - 1) {
          std::vector<Term> children;
          children.reserve(k);
          for (std::size_t j = 0; j < k; ++j) {
            children.push_back(pool[pick[j]]);
          }
          out.push_back(Term::node(sig.name(s), std::move(children)));
        }
        std::size_t j = k;
        while (j-- > 0) {
          if (++pick[j] < pool.size()) {
            break;
          }
          pick[j] = 0;
          if (j == 0) {
            goto next_symbol;
          }
        }
      }
    next_symbol:;
    }
    std::sort(out.begin(), out.end(), [&sig](const Term& a, const Term& b) {
      return compare_terms(sig, a, b) < 0;
    });
    pool.insert(pool.end(), out.begin(), out.end());
  }

  std::vector<Term> all;
  for (auto& bucket : by_height) {
    all.insert(all.end(), bucket.begin(), bucket.end());
  }
  return all;
}

}  // namespace ualg
