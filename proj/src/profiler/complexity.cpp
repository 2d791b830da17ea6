#include "clusel/profiler/complexity.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "clusel/error.hpp"

namespace clusel::profiler {

struct ComplexityExpr::Node {
  enum class Kind { Number, VarN, VarM, VarK, Add, Sub, Mul, Div, Pow, Neg, Log } kind;
  double number = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = ComplexityExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double v = 0.0) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->number = v;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, "complexity expression \"" + std::string(s_) + "\": " + what,
                std::nullopt, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool eat_times() { return eat("*") || eat("·") || eat("×"); }

  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (eat("+")) {
        lhs = make(Node::Kind::Add, lhs, term());
      } else if (eat("-")) {
        lhs = make(Node::Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    auto lhs = unary();
    for (;;) {
      if (eat_times()) {
        lhs = make(Node::Kind::Mul, lhs, unary());
      } else if (eat("/")) {
        lhs = make(Node::Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (eat("-")) return make(Node::Kind::Neg, unary());
    return power();
  }

  // Right associative: n^2^2 is n^(2^2).
  NodePtr power() {
    auto base = primary();
    if (eat("^")) return make(Node::Kind::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat("(")) {
      auto e = expr();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    if (eat("log")) {
      if (!eat("(")) fail("expected '(' after log");
      auto e = expr();
      if (!eat(")")) fail("expected ')'");
      return make(Node::Kind::Log, e);
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      const auto* first = s_.data() + pos_;
      const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
      if (ec != std::errc()) fail("bad number");
      pos_ += static_cast<std::size_t>(ptr - first);
      return make(Node::Kind::Number, nullptr, nullptr, v);
    }
    const bool ident_follows =
        pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1]));
    if (!ident_follows) {
      ++pos_;
      if (c == 'n') return make(Node::Kind::VarN);
      if (c == 'm') return make(Node::Kind::VarM);
      if (c == 'k') return make(Node::Kind::VarK);
      --pos_;
    }
    fail("unknown symbol");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

double eval(const Node& node, double n, double m, double k) {
  switch (node.kind) {
    case Node::Kind::Number: return node.number;
    case Node::Kind::VarN: return n;
    case Node::Kind::VarM: return m;
    case Node::Kind::VarK: return k;
    case Node::Kind::Add: return eval(*node.lhs, n, m, k) + eval(*node.rhs, n, m, k);
    case Node::Kind::Sub: return eval(*node.lhs, n, m, k) - eval(*node.rhs, n, m, k);
    case Node::Kind::Mul: return eval(*node.lhs, n, m, k) * eval(*node.rhs, n, m, k);
    case Node::Kind::Div: return eval(*node.lhs, n, m, k) / eval(*node.rhs, n, m, k);
    case Node::Kind::Pow: return std::pow(eval(*node.lhs, n, m, k), eval(*node.rhs, n, m, k));
    case Node::Kind::Neg: return -eval(*node.lhs, n, m, k);
    case Node::Kind::Log: return std::max(1.0, std::log2(eval(*node.lhs, n, m, k)));
  }
  return 0.0;
}

}  // namespace

ComplexityExpr ComplexityExpr::parse(std::string_view text) {
  return ComplexityExpr(std::string(text), Parser(text).parse());
}

double ComplexityExpr::evaluate(double n, double m, double k) const {
  return eval(*root_, n, m, k);
}

VelocityReport rank_computing_velocity(std::size_t n, std::size_t m,
                                       std::span<const ComplexityEntry> entries,
                                       std::span<const double> k_grid,
                                       MissingComplexityPolicy policy) {
  VelocityReport report;
  for (const auto& e : entries) {
    if (e.expressions.empty()) {
      if (policy == MissingComplexityPolicy::Fail) {
        throw Error(Errc::MissingComplexity, e.name + " has no time complexity expression");
      }
      report.warnings.push_back(e.name + ": no time complexity expression, skipped");
    } else if (e.expressions.size() > 1) {
      std::string all;
      for (const auto& x : e.expressions) all += (all.empty() ? "" : ", ") + x.text();
      report.warnings.push_back(e.name + ": sources disagree (" + all + "), ranked by " +
                                e.expressions.front().text());
    }
  }
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  for (double k : k_grid) {
    VelocityRanking r{k, {}};
    for (const auto& e : entries) {
      if (e.expressions.empty()) continue;
      r.ranking.push_back({e.name, e.expressions.front().evaluate(nd, md, k) / nd});
    }
    std::stable_sort(r.ranking.begin(), r.ranking.end(),
                     [](const StepsPerSample& a, const StepsPerSample& b) {
                       if (a.steps != b.steps) return a.steps < b.steps;
                       return a.name < b.name;
                     });
    report.rankings.push_back(std::move(r));
  }
  return report;
}

VelocityReport rank_computing_velocity(const Dataset& data,
                                       std::span<const ComplexityEntry> entries,
                                       std::span<const double> k_grid,
                                       MissingComplexityPolicy policy) {
  return rank_computing_velocity(data.rows(), data.cols(), entries, k_grid, policy);
}

}  // namespace clusel::profiler
