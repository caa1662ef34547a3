#pragma once

// Text expressions for groups and actions.
//
//   group  := cyclic(n) | sym(n) | dp(group, group) | sd(group, group, action)
//           | wr(group, q) | named(id)
//   action := trivial | inv | pow(k, ...) | inner(x, ...) | images(i, ... ; i, ... ; ...)
//
// An action names one automorphism per generator of the acting group, in the
// order of that group's generator list. `images` lists, for each acting
// generator, the images of the generators of the acted-on group; groups of
// images are separated by ';'.

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "goodaction/action.hpp"
#include "goodaction/constructors.hpp"

namespace goodaction {

struct Term {
  std::string name;  // empty for an integer literal
  long long value = 0;
  bool has_args = false;
  std::vector<std::vector<Term>> groups;  // arguments, split at ';'

  bool is_integer() const noexcept { return name.empty(); }
  std::size_t arity() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.size();
    return n;
  }
  const Term& arg(std::size_t i) const {
    for (const auto& g : groups) {
      if (i < g.size()) return g[i];
      i -= g.size();
    }
    fail(ErrorKind::InvalidArgument, "missing argument of " + name);
  }

  /// Whitespace-free rendering; equal expressions render identically.
  std::string canonical() const {
    if (is_integer()) return std::to_string(value);
    std::string s = name;
    if (!has_args) return s;
    s += "(";
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      if (gi) s += ";";
      for (std::size_t i = 0; i < groups[gi].size(); ++i) s += (i ? "," : "") + groups[gi][i].canonical();
    }
    return s + ")";
  }
};

namespace detail {

class TermParser {
 public:
  explicit TermParser(const std::string& text) : s_(text) {}

  Term parse() {
    Term t = term();
    skip();
    if (pos_ != s_.size()) error("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::InvalidArgument, "expression '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Term term() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    Term t;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      const std::size_t start = pos_++;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      try {
        t.value = std::stoll(s_.substr(start, pos_ - start));
      } catch (const std::exception&) {
        error("bad integer");
      }
      return t;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) error("expected a name or an integer");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    t.name = s_.substr(start, pos_ - start);
    if (!eat('(')) return t;
    t.has_args = true;
    t.groups.emplace_back();
    if (eat(')')) {
      t.groups.clear();
      return t;
    }
    for (;;) {
      t.groups.back().push_back(term());
      if (eat(',')) continue;
      if (eat(';')) {
        t.groups.emplace_back();
        continue;
      }
      if (eat(')')) break;
      error("expected ',', ';' or ')'");
    }
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline std::size_t as_size(const Term& t, const char* what) {
  require(t.is_integer() && t.value >= 0, ErrorKind::InvalidArgument, std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(t.value);
}

inline Elem as_element(const Term& t, const Group& g) {
  const std::size_t x = as_size(t, "element");
  require(x < g.order(), ErrorKind::InvalidArgument,
          "element " + std::to_string(x) + " outside a group of order " + std::to_string(g.order()));
  return static_cast<Elem>(x);
}

}  // namespace detail

inline Term parse_term(const std::string& text) { return detail::TermParser(text).parse(); }

/// Registry of named groups.
inline const std::map<std::string, std::function<GroupPtr()>>& named_groups() {
  static const std::map<std::string, std::function<GroupPtr()>> registry{
      {"sl2_3", [] { return sl2_3(); }},
      {"frobenius600", [] { return frobenius600(); }},
      {"xs27e9", [] { return extraspecial_27_exp9(); }},
      {"ex32_GA", [] { return example_3_2_ga().ga; }},
  };
  return registry;
}

/// One automorphism table of G per generator of A, as described by `spec`.
inline std::vector<std::vector<Elem>> automorphism_images(const GroupPtr& g, const GroupPtr& a, const Term& spec) {
  const Group& G = *g;
  const std::size_t k = a->generators().size();
  std::vector<Elem> id(G.order());
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<std::vector<Elem>> out;
  // one argument shared by every generator, or one per generator
  auto per_generator = [&](auto make) {
    const std::size_t n = spec.arity();
    require(n == 1 || n == k, ErrorKind::InvalidArgument,
            spec.name + " needs 1 or " + std::to_string(k) + " arguments");
    for (std::size_t i = 0; i < k; ++i) out.push_back(make(spec.arg(n == 1 ? 0 : i)));
  };
  if (spec.is_integer()) fail(ErrorKind::InvalidArgument, "an action spec cannot be an integer");
  if (spec.name == "trivial" && !spec.has_args) {
    out.assign(k, id);
  } else if (spec.name == "inv" && !spec.has_args) {
    require(G.is_abelian(), ErrorKind::InvalidArgument, "inv needs an abelian group");
    out.assign(k, power_map(G, -1));
  } else if (spec.name == "pow") {
    require(G.is_abelian(), ErrorKind::InvalidArgument, "pow needs an abelian group");
    per_generator([&](const Term& e) {
      require(e.is_integer(), ErrorKind::InvalidArgument, "pow exponents are integers");
      return power_map(G, e.value);
    });
  } else if (spec.name == "inner") {
    per_generator([&](const Term& x) { return inner_automorphism(G, detail::as_element(x, G)); });
  } else if (spec.name == "images") {
    const auto& gens = G.generators();
    require(spec.groups.size() == k, ErrorKind::InvalidArgument,
            "images needs one ';'-separated group per acting generator");
    for (const auto& grp : spec.groups) {
      require(grp.size() == gens.size(), ErrorKind::InvalidArgument,
              "images lists " + std::to_string(grp.size()) + " images for " + std::to_string(gens.size()) +
                  " generators");
      std::vector<Elem> imgs;
      for (const auto& x : grp) imgs.push_back(detail::as_element(x, G));
      std::vector<Elem> phi(G.order());
      require(detail::extend_map(G, G, gens, imgs, gens.size(), phi) && is_automorphism(G, phi),
              ErrorKind::NotAnAutomorphism, "generator images do not define an automorphism");
      out.push_back(std::move(phi));
    }
  } else {
    fail(ErrorKind::InvalidArgument, "unknown action '" + spec.canonical() + "'");
  }
  return out;
}

inline GroupPtr evaluate_group(const Term& t, const Bounds& bounds = {}) {
  auto want = [&](std::size_t n) {
    require(t.has_args && t.groups.size() == 1 && t.arity() == n, ErrorKind::InvalidArgument,
            t.name + " takes " + std::to_string(n) + " comma-separated arguments");
  };
  require(!t.is_integer(), ErrorKind::InvalidArgument, "a group expression cannot be an integer");
  if (t.name == "cyclic") {
    want(1);
    const std::size_t n = detail::as_size(t.arg(0), "cyclic order");
    require(n >= 1 && n <= bounds.cayley_order, n == 0 ? ErrorKind::InvalidArgument : ErrorKind::OrderBoundExceeded,
            "cyclic order out of range");
    return cyclic(n);
  }
  if (t.name == "sym") {
    want(1);
    return symmetric(detail::as_size(t.arg(0), "degree"));
  }
  if (t.name == "dp") {
    want(2);
    auto g1 = evaluate_group(t.arg(0), bounds), g2 = evaluate_group(t.arg(1), bounds);
    require(g1->order() * g2->order() <= bounds.cayley_order, ErrorKind::OrderBoundExceeded, "direct product too large");
    return direct_product(g1, g2);
  }
  if (t.name == "sd") {
    want(3);
    auto h = evaluate_group(t.arg(0), bounds), k = evaluate_group(t.arg(1), bounds);
    auto imgs = automorphism_images(h, k, t.arg(2));
    return semidirect_product(h, k, k->generators(), imgs, t.canonical(), bounds).group;
  }
  if (t.name == "wr") {
    want(2);
    auto g = evaluate_group(t.arg(0), bounds);
    return wreath_cyclic(g, detail::as_size(t.arg(1), "wreath degree"), bounds);
  }
  if (t.name == "named") {
    want(1);
    const auto& id = t.arg(0);
    require(!id.is_integer() && !id.has_args, ErrorKind::InvalidArgument, "named() takes an identifier");
    auto it = named_groups().find(id.name);
    require(it != named_groups().end(), ErrorKind::InvalidArgument, "unknown named group '" + id.name + "'");
    return it->second();
  }
  fail(ErrorKind::InvalidArgument, "unknown group constructor '" + t.name + "'");
}

inline GroupPtr parse_group(const std::string& text, const Bounds& bounds = {}) {
  return evaluate_group(parse_term(text), bounds);
}

inline Action parse_action(const GroupPtr& g, const GroupPtr& a, const std::string& spec, const Bounds& bounds = {}) {
  auto imgs = automorphism_images(g, a, parse_term(spec));
  return Action(g, a, a->generators(), imgs, bounds);
}

/// 64-bit FNV-1a of the canonical rendering; stable across platforms.
inline std::uint64_t expression_hash(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : parse_term(text).canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace goodaction
