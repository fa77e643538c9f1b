#include <cctype>
#include <limits>

#include "acdlab/constructions.hpp"
#include "acdlab/errors.hpp"

namespace acdlab {

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec out = spec();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int peek() {
    skip_ws();
    return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a group constructor");
    return s_.substr(start, pos_ - start);
  }

  std::int64_t integer(bool allow_negative) {
    skip_ws();
    bool neg = false;
    if (allow_negative && pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const int digit = s_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer out of range");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return neg ? -v : v;
  }

  std::uint64_t natural() { return static_cast<std::uint64_t>(integer(false)); }

  GroupSpec spec() {
    std::vector<GroupSpec> factors;
    factors.push_back(factor());
    while (peek() == '*') {
      ++pos_;
      factors.push_back(factor());
    }
    if (factors.size() == 1) return std::move(factors.front());
    std::vector<GroupSpec> flat;
    for (auto& f : factors) {
      if (auto* d = std::get_if<spec::DirectProduct>(&f.kind))
        for (auto& g : d->factors) flat.push_back(std::move(g));
      else
        flat.push_back(std::move(f));
    }
    return GroupSpec::direct_product(std::move(flat));
  }

  GroupSpec factor() {
    if (peek() == '(') {
      ++pos_;
      GroupSpec inner = spec();
      expect(')');
      return inner;
    }
    const std::size_t at = (skip_ws(), pos_);
    const std::string name = identifier();
    expect('(');
    GroupSpec out;
    if (name == "C") {
      out = GroupSpec::cyclic(natural());
    } else if (name == "D") {
      out = GroupSpec::dihedral(natural());
    } else if (name == "S") {
      out = GroupSpec::symmetric(natural());
    } else if (name == "A") {
      out = GroupSpec::alternating(natural());
    } else if (name == "Q") {
      out = GroupSpec::dicyclic(natural());
    } else if (name == "F") {
      const auto p = natural();
      expect(',');
      out = GroupSpec::field_semidirect(p, 1, natural());
    } else if (name == "SD") {
      const auto p = natural();
      expect(',');
      const auto a = natural();
      expect(',');
      out = GroupSpec::field_semidirect(p, a, natural());
    } else if (name == "MAT") {
      const auto p = natural();
      expect(';');
      std::vector<spec::Matrix> ms{matrix()};
      while (peek() == ',') {
        ++pos_;
        ms.push_back(matrix());
      }
      out = GroupSpec::matrix_semidirect(p, std::move(ms));
    } else {
      pos_ = at;
      fail("unknown group constructor '" + name + "'");
    }
    expect(')');
    return out;
  }

  spec::Matrix matrix() {
    expect('[');
    spec::Matrix m{row()};
    while (peek() == ',') {
      ++pos_;
      m.push_back(row());
    }
    expect(']');
    return m;
  }

  std::vector<std::int64_t> row() {
    expect('[');
    std::vector<std::int64_t> r{integer(true)};
    while (peek() == ',') {
      ++pos_;
      r.push_back(integer(true));
    }
    expect(']');
    return r;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec s = SpecParser(text).parse();
  validate(s);
  return s;
}

}  // namespace acdlab
