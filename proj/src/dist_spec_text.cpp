#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

#include "rb2s/distributions.hpp"

namespace rb2s {
namespace {

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DistSpec parse_all() {
    DistSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse distribution '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a distribution name");
    return text_.substr(start, pos_ - start);
  }

  double number() {
    skip_space();
    std::size_t start = pos_;
    if (start < text_.size() && text_[start] == '+') ++start;
    double value = 0.0;
    auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  DistSpec parse_spec() {
    const std::string_view name = identifier();
    expect('(');
    if (name == "mix") {
      std::vector<MixtureComponent> components;
      do {
        const double weight = number();
        expect('*');
        components.push_back({weight, parse_spec()});
      } while (accept('+'));
      expect(')');
      return DistSpec::mixture(std::move(components));
    }

    std::vector<double> args{number()};
    while (accept(',')) args.push_back(number());
    expect(')');

    auto arity = [&](std::size_t n) {
      if (args.size() != n) fail(std::string(name) + " takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "normal") {
      arity(2);
      return DistSpec::normal(args[0], args[1]);
    }
    if (name == "exp") {
      arity(1);
      return DistSpec::exponential(args[0]);
    }
    if (name == "t") {
      arity(1);
      return DistSpec::student_t(args[0]);
    }
    if (name == "unif") {
      arity(2);
      return DistSpec::uniform(args[0], args[1]);
    }
    if (name == "lognormal") {
      arity(2);
      return DistSpec::lognormal(args[0], args[1]);
    }
    fail("unknown distribution '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const DistSpec& spec) {
  struct Printer {
    std::string operator()(const Normal& d) const {
      return "normal(" + format_number(d.mean) + "," + format_number(d.sd) + ")";
    }
    std::string operator()(const Exponential& d) const { return "exp(" + format_number(d.mean) + ")"; }
    std::string operator()(const StudentT& d) const { return "t(" + format_number(d.df) + ")"; }
    std::string operator()(const Uniform& d) const {
      return "unif(" + format_number(d.lo) + "," + format_number(d.hi) + ")";
    }
    std::string operator()(const LogNormal& d) const {
      return "lognormal(" + format_number(d.mu) + "," + format_number(d.sigma) + ")";
    }
    std::string operator()(const Mixture& d) const {
      std::string out = "mix(";
      for (std::size_t i = 0; i < d.components.size(); ++i) {
        if (i > 0) out += "+";
        out += format_number(d.components[i].weight) + "*" + to_string(d.components[i].dist);
      }
      return out + ")";
    }
  };
  return std::visit(Printer{}, spec.kind());
}

DistSpec parse_dist_spec(std::string_view text) {
  try {
    return Parser(text).parse_all();
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg.rfind("cannot parse", 0) == 0) throw;
    throw std::invalid_argument("invalid distribution '" + std::string(text) + "': " + msg);
  }
}

}  // namespace rb2s
