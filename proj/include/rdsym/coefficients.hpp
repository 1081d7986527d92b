#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "rdsym/errors.hpp"
#include "rdsym/rational.hpp"

namespace rdsym {

/// Indexable rule for a coefficient sequence (A_n), (B_n).
class CoefficientSequence {
 public:
  struct Constant {
    Rational value;
  };
  struct Periodic {
    std::vector<Rational> values;
  };
  struct Explicit {
    std::vector<Rational> values;
  };

  static CoefficientSequence constant(Rational value) {
    return CoefficientSequence(Constant{std::move(value)});
  }
  static CoefficientSequence periodic(std::vector<Rational> values) {
    if (values.empty()) throw ConfigError("periodic coefficient sequence must be nonempty");
    return CoefficientSequence(Periodic{std::move(values)});
  }
  static CoefficientSequence explicit_list(std::vector<Rational> values) {
    return CoefficientSequence(Explicit{std::move(values)});
  }

  /// Parses "const:3/2", "periodic:2,5", "explicit:1,2,3" or a bare rational
  /// (read as a constant).
  static CoefficientSequence parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return constant(Rational::parse(text));
    const std::string_view kind = text.substr(0, colon);
    std::vector<Rational> values = parse_list(text.substr(colon + 1));
    if (kind == "const" || kind == "constant") {
      if (values.size() != 1) throw ParseError("const: expects exactly one value");
      return constant(std::move(values.front()));
    }
    if (kind == "periodic") return periodic(std::move(values));
    if (kind == "explicit") return explicit_list(std::move(values));
    throw ParseError("unknown coefficient kind '" + std::string(kind) + "'");
  }

  static std::vector<Rational> parse_list(std::string_view text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      out.push_back(Rational::parse(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

  [[nodiscard]] Rational operator[](std::size_t n) const {
    return std::visit(
        [n](const auto& rule) -> Rational {
          using T = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<T, Constant>) {
            return rule.value;
          } else if constexpr (std::is_same_v<T, Periodic>) {
            return rule.values[n % rule.values.size()];
          } else {
            if (n >= rule.values.size())
              throw ConfigError("explicit coefficient index " + std::to_string(n) +
                                " out of range (length " + std::to_string(rule.values.size()) +
                                ")");
            return rule.values[n];
          }
        },
        rule_);
  }

  [[nodiscard]] bool is_constant() const { return std::holds_alternative<Constant>(rule_); }
  [[nodiscard]] bool is_periodic() const { return std::holds_alternative<Periodic>(rule_); }
  [[nodiscard]] bool is_explicit() const { return std::holds_alternative<Explicit>(rule_); }

  /// Period of the rule: 1 for constants, the list length for periodic
  /// sequences, 0 (none) for explicit lists.
  [[nodiscard]] std::size_t period() const {
    if (is_constant()) return 1;
    if (const auto* p = std::get_if<Periodic>(&rule_)) return p->values.size();
    return 0;
  }

  /// Number of defined indices for explicit lists; unbounded rules report
  /// SIZE_MAX.
  [[nodiscard]] std::size_t extent() const {
    if (const auto* e = std::get_if<Explicit>(&rule_)) return e->values.size();
    return static_cast<std::size_t>(-1);
  }

  [[nodiscard]] std::string str() const {
    auto join = [](const std::vector<Rational>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) s += ',';
        s += v[i].str();
      }
      return s;
    };
    if (const auto* c = std::get_if<Constant>(&rule_)) return "const:" + c->value.str();
    if (const auto* p = std::get_if<Periodic>(&rule_)) return "periodic:" + join(p->values);
    return "explicit:" + join(std::get<Explicit>(rule_).values);
  }

 private:
  using Rule = std::variant<Constant, Periodic, Explicit>;
  explicit CoefficientSequence(Rule rule) : rule_(std::move(rule)) {}

  Rule rule_;
};

}  // namespace rdsym
