#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "su4/errors.hpp"

namespace su4::cli {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ArgumentError("cannot parse expression '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    const double base = primary();
    if (accept('^')) return std::pow(base, unary());
    return base;
  }

  double primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "pi") return kPi;
      if (!accept('(')) fail("unknown name '" + std::string(name) + "'");
      const double arg = expr();
      if (!accept(')')) fail("missing ')'");
      if (name == "sqrt") return std::sqrt(arg);
      if (name == "sin") return std::sin(arg);
      if (name == "cos") return std::cos(arg);
      if (name == "tan") return std::tan(arg);
      if (name == "asin") return std::asin(arg);
      if (name == "acos") return std::acos(arg);
      if (name == "atan") return std::atan(arg);
      if (name == "exp") return std::exp(arg);
      if (name == "log") return std::log(arg);
      fail("unknown function '" + std::string(name) + "'");
    }
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc() || end == text_.data() + pos_) fail("expected a number");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_expression(std::string_view text) {
  const double v = ExpressionParser(text).parse();
  if (!std::isfinite(v)) throw ArgumentError("expression '" + std::string(text) + "' is not finite");
  return v;
}

std::vector<double> parse_expression_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_expression(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

long long parse_count(std::string_view text) {
  const double v = parse_expression(text);
  if (v < 0.0 || v != std::floor(v) || v > 9.0e15) {
    throw ArgumentError("'" + std::string(text) + "' is not a non-negative integer");
  }
  return static_cast<long long>(v);
}

Matrix4c parse_matrix(std::istream& in) {
  Matrix4c m;
  int row = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<double> values;
    std::string token;
    while (tokens >> token) {
      double v = 0.0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || end != token.data() + token.size() || !std::isfinite(v)) {
        throw ArgumentError("matrix line " + std::to_string(line_no) + ": '" + token + "' is not a real number");
      }
      values.push_back(v);
    }
    if (values.empty()) continue;
    if (row == 4) throw ArgumentError("matrix line " + std::to_string(line_no) + ": more than 4 rows");
    if (values.size() != 8) {
      throw ArgumentError("matrix line " + std::to_string(line_no) + ": expected 8 values (re im pairs), got " +
                          std::to_string(values.size()));
    }
    for (int c = 0; c < 4; ++c) m(row, c) = Complex(values[2 * c], values[2 * c + 1]);
    ++row;
  }
  if (row != 4) throw ArgumentError("matrix needs 4 rows, got " + std::to_string(row));
  return m;
}

Matrix4c read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read matrix file '" + path + "'");
  return parse_matrix(in);
}

}  // namespace su4::cli
