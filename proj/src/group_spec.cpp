#include "sgg/group_spec.hpp"

#include <cctype>
#include <limits>
#include <memory>

#include "sgg/perm_group.hpp"

namespace sgg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) error({"'x'", "end of input"});
    return spec;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(std::vector<std::string> expected) {
    std::string msg = "parse error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
    if (pos_ < s_.size()) msg += ", found '" + std::string(1, s_[pos_]) + "'";
    else msg += ", found end of input";
    throw ParseError(pos_, std::move(expected), msg);
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) error({"'" + std::string(token) + "'"});
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error({"integer"});
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const unsigned d = static_cast<unsigned>(s_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        pos_ = start;
        error({"integer below 2^64"});
      }
      value = value * 10 + d;
      ++pos_;
    }
    return value;
  }

  GroupSpec parse_spec() {
    GroupSpec first = parse_term();
    if (!peek_product()) return first;
    GroupSpec product;
    product.kind = GroupSpec::Kind::Product;
    product.factors.push_back(std::move(first));
    while (accept("x")) product.factors.push_back(parse_term());
    return product;
  }

  bool peek_product() {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == 'x';
  }

  GroupSpec unary(GroupSpec::Kind kind) {
    expect("(");
    GroupSpec g;
    g.kind = kind;
    g.args.push_back(integer());
    expect(")");
    return g;
  }

  GroupSpec parse_term() {
    using K = GroupSpec::Kind;
    if (accept("PSL")) {
      expect("(");
      skip_ws();
      const std::size_t at = pos_;
      if (integer() != 2) {
        pos_ = at;
        error({"'2'"});
      }
      expect(",");
      GroupSpec g;
      g.kind = K::Psl2;
      g.args.push_back(integer());
      expect(")");
      return g;
    }
    if (accept("Alt")) return unary(K::Alternating);
    if (accept("A")) {
      expect("(");
      GroupSpec g;
      g.kind = K::ElementaryAbelian;
      g.args.push_back(integer());
      expect(",");
      g.args.push_back(integer());
      expect(")");
      return g;
    }
    if (accept("C")) return unary(K::Cyclic);
    if (accept("D")) return unary(K::Dihedral);
    if (accept("S")) return unary(K::Symmetric);
    if (accept("(")) {
      GroupSpec inner = parse_spec();
      expect(")");
      return inner;
    }
    error({"'C('", "'A('", "'D('", "'S('", "'Alt('", "'PSL(2,'", "'('"});
  }
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint32_t narrow(std::uint64_t v, const char* what) {
  if (v > std::numeric_limits<std::uint32_t>::max())
    fail(ErrorKind::OrderCapExceeded, std::string(what) + " parameter too large");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  auto arg = [&](std::size_t i) { return std::to_string(spec.args.at(i)); };
  switch (spec.kind) {
    case K::Cyclic: return "C(" + arg(0) + ")";
    case K::ElementaryAbelian: return "A(" + arg(0) + "," + arg(1) + ")";
    case K::Dihedral: return "D(" + arg(0) + ")";
    case K::Symmetric: return "S(" + arg(0) + ")";
    case K::Alternating: return "Alt(" + arg(0) + ")";
    case K::Psl2: return "PSL(2," + arg(0) + ")";
    case K::Product: {
      std::string out;
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        const auto& f = spec.factors[i];
        if (i) out += " x ";
        out += f.kind == K::Product ? "(" + render(f) + ")" : render(f);
      }
      return out;
    }
  }
  return {};
}

std::uint64_t spec_order(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic: return spec.args[0];
    case K::ElementaryAbelian: {
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < spec.args[1]; ++i) r = sat_mul(r, spec.args[0]);
      return r;
    }
    case K::Dihedral: return sat_mul(2, spec.args[0]);
    case K::Symmetric:
    case K::Alternating: {
      std::uint64_t r = 1;
      for (std::uint64_t i = 2; i <= spec.args[0]; ++i) r = sat_mul(r, i);
      return spec.kind == K::Alternating && spec.args[0] >= 2 ? r / 2 : r;
    }
    case K::Psl2: return psl2_order(spec.args[0]);
    case K::Product: {
      std::uint64_t r = 1;
      for (const auto& f : spec.factors) r = sat_mul(r, spec_order(f));
      return r;
    }
  }
  return 0;
}

GroupPtr evaluate(const GroupSpec& spec, std::size_t cap) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic: return cyclic(spec.args[0], cap);
    case K::ElementaryAbelian:
      return elementary_abelian(spec.args[0], narrow(spec.args[1], "A"), cap);
    case K::Dihedral: return dihedral(spec.args[0], cap);
    case K::Symmetric: return symmetric(narrow(spec.args[0], "S"), cap).table();
    case K::Alternating: return alternating(narrow(spec.args[0], "Alt"), cap).table();
    case K::Psl2: return psl2(narrow(spec.args[0], "PSL"), cap).table();
    case K::Product: {
      const std::string name = render(spec);
      check_order_cap(spec_order(spec), cap, name);
      GroupPtr acc = evaluate(spec.factors.front(), cap);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        acc = direct_product(*acc, *evaluate(spec.factors[i], cap), cap);
      if (acc->name() == name) return acc;
      return std::make_shared<const GroupTable>(acc->renamed(name));
    }
  }
  fail(ErrorKind::Internal, "unknown group spec kind");
}

}  // namespace sgg
