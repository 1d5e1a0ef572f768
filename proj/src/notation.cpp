#include "lcs/notation.hpp"

#include <cctype>
#include <sstream>

namespace lcs {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  char take() { return eof() ? '\0' : s[pos++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(char c, const std::string& what) {
    skip_ws();
    if (take() != c) throw ParseError(pos == 0 ? 0 : pos - 1, what);
  }
};

}  // namespace

LieAlgebra parse_structure_notation(const std::string& s) {
  Cursor cur{s};
  cur.expect('(', "'('");
  // differentials per slot: list of (i, j, sign)
  std::vector<std::vector<std::pair<std::pair<int, int>, int>>> slots;
  while (true) {
    cur.skip_ws();
    std::vector<std::pair<std::pair<int, int>, int>> terms;
    if (cur.peek() == '0') {
      cur.take();
    } else {
      bool first = true;
      while (true) {
        cur.skip_ws();
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
          sign = cur.take() == '-' ? -1 : 1;
        } else if (!first) {
          break;
        }
        cur.skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '0')
          throw ParseError(cur.pos, "digit 1-9");
        int i = cur.take() - '0';
        cur.skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '0')
          throw ParseError(cur.pos, "digit 1-9");
        int j = cur.take() - '0';
        if (i >= j) throw ParseError(cur.pos, "index pair with first < second");
        terms.push_back({{i, j}, sign});
        first = false;
        cur.skip_ws();
        if (cur.peek() != '+' && cur.peek() != '-') break;
      }
      if (terms.empty()) throw ParseError(cur.pos, "'0' or an index pair");
    }
    slots.push_back(std::move(terms));
    cur.skip_ws();
    if (cur.peek() == ',') {
      cur.take();
      continue;
    }
    break;
  }
  cur.expect(')', "')' or ','");
  cur.skip_ws();
  if (!cur.eof()) throw ParseError(cur.pos, "end of input");
  const int n = static_cast<int>(slots.size());
  if (n > 9) throw ParseError(s.size(), "dimension at most 9");
  // d e^m = sum sign e^{ij}  =>  c^m_{ij} = -sign
  BracketMap br;
  for (int m = 1; m <= n; ++m) {
    for (const auto& [ij, sign] : slots[static_cast<std::size_t>(m - 1)]) {
      if (ij.second > n)
        throw Error("parse_structure_notation: index " + std::to_string(ij.second) +
                    " exceeds dimension " + std::to_string(n));
      auto it = br.find(ij);
      if (it == br.end()) it = br.emplace(ij, zero_vector(n)).first;
      it->second(m - 1) += Rational(-sign);
    }
  }
  return make_algebra(n, std::move(br), s);
}

std::string print_structure_notation(const LieAlgebra& a) {
  if (a.dim > 9) throw Error("print_structure_notation: dimension exceeds 9");
  std::ostringstream os;
  os << "(";
  for (int m = 1; m <= a.dim; ++m) {
    if (m > 1) os << ",";
    KForm dm = d1_of_basis(a, m);
    if (dm.is_zero()) {
      os << "0";
      continue;
    }
    bool first = true;
    for (const auto& [idx, c] : dm.terms) {
      if (c == Rational(1)) {
        if (!first) os << "+";
      } else if (c == Rational(-1)) {
        os << "-";
      } else {
        throw Error("print_structure_notation: coefficient " + c.str() +
                    " not expressible");
      }
      os << idx[0] << idx[1];
      first = false;
    }
  }
  os << ")";
  return os.str();
}

KForm parse_form_expr(const std::string& s, const LieAlgebra& a) {
  return parse_form_expr(s, a.dim);
}

KForm parse_form_expr(const std::string& s, int dim) {
  Cursor cur{s};
  int degree = -1;
  std::vector<std::pair<FormIndex, Rational>> terms;
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.eof()) {
      if (first) throw ParseError(cur.pos, "a form term");
      break;
    }
    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = cur.take() == '-' ? -1 : 1;
    } else if (!first) {
      throw ParseError(cur.pos, "'+' or '-'");
    }
    cur.skip_ws();
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      std::size_t start = cur.pos;
      while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.take();
      std::string num = s.substr(start, cur.pos - start);
      std::string den;
      cur.skip_ws();
      if (cur.peek() == '/') {
        cur.take();
        cur.skip_ws();
        std::size_t dstart = cur.pos;
        while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.take();
        if (cur.pos == dstart) throw ParseError(cur.pos, "denominator digits");
        den = s.substr(dstart, cur.pos - dstart);
      }
      coeff = Rational(bigint_from_digits(num), den.empty() ? BigInt(1) : bigint_from_digits(den));
      cur.skip_ws();
      cur.expect('*', "'*' between coefficient and monomial");
      cur.skip_ws();
    }
    if (cur.peek() != 'e') throw ParseError(cur.pos, "'e'");
    cur.take();
    FormIndex idx;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      int v = cur.take() - '0';
      if (v == 0) throw ParseError(cur.pos - 1, "digit 1-9");
      if (v > dim)
        throw Error("parse_form_expr: index " + std::to_string(v) +
                    " exceeds dimension " + std::to_string(dim));
      if (!idx.empty() && v <= idx.back())
        throw ParseError(cur.pos - 1, "strictly ascending indices");
      idx.push_back(v);
    }
    if (idx.empty()) throw ParseError(cur.pos, "monomial indices");
    if (degree < 0) degree = static_cast<int>(idx.size());
    if (degree != static_cast<int>(idx.size()))
      throw Error("parse_form_expr: mixed degrees " + std::to_string(degree) + " and " +
                  std::to_string(idx.size()));
    terms.push_back({std::move(idx), sign < 0 ? -coeff : coeff});
    first = false;
  }
  KForm f(dim, degree < 0 ? 0 : degree);
  for (auto& [idx, c] : terms) f.add_term(std::move(idx), std::move(c));
  return f;
}

}  // namespace lcs
