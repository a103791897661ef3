#include "cutcell/expr.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cutcell {
namespace {

using Node = std::function<double(const Vec3&, double)>;

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("expression error at position " +
                                std::to_string(pos) + ": " + what);
  }

  Node parse() {
    Node e = sum();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return e;
  }

  Node sum() {
    Node lhs = product();
    for (;;) {
      if (consume('+')) {
        Node rhs = product();
        lhs = [lhs, rhs](const Vec3& p, double t) { return lhs(p, t) + rhs(p, t); };
      } else if (consume('-')) {
        Node rhs = product();
        lhs = [lhs, rhs](const Vec3& p, double t) { return lhs(p, t) - rhs(p, t); };
      } else {
        return lhs;
      }
    }
  }

  Node product() {
    Node lhs = unary();
    for (;;) {
      if (consume('*')) {
        Node rhs = unary();
        lhs = [lhs, rhs](const Vec3& p, double t) { return lhs(p, t) * rhs(p, t); };
      } else if (consume('/')) {
        Node rhs = unary();
        lhs = [lhs, rhs](const Vec3& p, double t) { return lhs(p, t) / rhs(p, t); };
      } else {
        return lhs;
      }
    }
  }

  // Unary minus binds looser than '^', so -2^2 is -(2^2).
  Node power() {
    Node base = primary();
    if (consume('^')) {
      Node expo = unary();  // right associative
      return [base, expo](const Vec3& p, double t) {
        return std::pow(base(p, t), expo(p, t));
      };
    }
    return base;
  }

  Node unary() {
    if (consume('-')) {
      Node e = unary();
      return [e](const Vec3& p, double t) { return -e(p, t); };
    }
    if (consume('+')) return unary();
    return power();
  }

  Node primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (consume('(')) {
      Node e = sum();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    fail("unexpected character");
  }

  Node number() {
    size_t used = 0;
    double v;
    try {
      v = std::stod(s.substr(pos), &used);
    } catch (const std::exception&) {
      fail("bad number");
    }
    pos += used;
    return [v](const Vec3&, double) { return v; };
  }

  Node identifier() {
    const size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    const std::string name = s.substr(start, pos - start);
    if (name == "x") return [](const Vec3& p, double) { return p.x; };
    if (name == "y") return [](const Vec3& p, double) { return p.y; };
    if (name == "z") return [](const Vec3& p, double) { return p.z; };
    if (name == "t") return [](const Vec3&, double t) { return t; };
    if (name == "pi") return [](const Vec3&, double) { return 3.14159265358979323846; };
    if (name == "e") return [](const Vec3&, double) { return 2.71828182845904523536; };

    static const std::map<std::string, double (*)(double)> unary_table = {
        {"sin", std::sin},     {"cos", std::cos},   {"tan", std::tan},
        {"asin", std::asin},   {"acos", std::acos}, {"atan", std::atan},
        {"sinh", std::sinh},   {"cosh", std::cosh}, {"tanh", std::tanh},
        {"exp", std::exp},     {"log", std::log},   {"sqrt", std::sqrt},
        {"abs", std::fabs},    {"erf", std::erf},   {"erfc", std::erfc},
        {"floor", std::floor},
    };
    static const std::map<std::string, double (*)(double, double)> binary_table = {
        {"pow", std::pow},
        {"min", [](double a, double b) { return a < b ? a : b; }},
        {"max", [](double a, double b) { return a > b ? a : b; }},
        {"atan2", std::atan2},
        {"hypot", std::hypot},
    };

    if (auto it = unary_table.find(name); it != unary_table.end()) {
      if (!consume('(')) fail("expected '(' after " + name);
      Node arg = sum();
      if (!consume(')')) fail("expected ')'");
      auto fn = it->second;
      return [fn, arg](const Vec3& p, double t) { return fn(arg(p, t)); };
    }
    if (auto it = binary_table.find(name); it != binary_table.end()) {
      if (!consume('(')) fail("expected '(' after " + name);
      Node a = sum();
      if (!consume(',')) fail("expected ','");
      Node b = sum();
      if (!consume(')')) fail("expected ')'");
      auto fn = it->second;
      return [fn, a, b](const Vec3& p, double t) { return fn(a(p, t), b(p, t)); };
    }
    fail("unknown identifier '" + name + "'");
  }
};

}  // namespace

ScalarFn parse_expression(const std::string& text) {
  Parser parser(text);
  return parser.parse();
}

}  // namespace cutcell
