#include "torsam/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace torsam {

namespace {

class Cursor {
 public:
  Cursor(const std::string& s, int line, int col0 = 1) : s_(s), line_(line), col0_(col0) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }
  void expect_word(const std::string& w) {
    if (!accept_word(w)) fail("expected '" + w + "'");
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 17) fail("integer too large");
    return std::stoll(s_.substr(start, pos_ - start));
  }
  // text up to the next top-level ',' or the closing bracket matching depth 0
  std::pair<std::string, int> item(char close) {
    skip_ws();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && depth > 0) {
        --depth;
        ++pos_;
        continue;
      }
      if (depth == 0 && (c == ',' || c == close)) break;
      ++pos_;
    }
    if (pos_ >= s_.size()) fail(std::string("missing '") + close + "'");
    std::string t = s_.substr(start, pos_ - start);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    return {t, column_of(start)};
  }

  int column_of(std::size_t p) const { return col0_ + static_cast<int>(p); }
  int column() const { return column_of(pos_); }
  int line() const { return line_; }
  std::size_t pos() const { return pos_; }
  const std::string& text() const { return s_; }
  void set_pos(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg, line_, column()); }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

class PolyParser {
 public:
  PolyParser(const PolyRing* P, Cursor& c) : P_(P), c_(c) {
    for (int v = 0; v < P->nvars(); ++v) order_.push_back(v);
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return P->names()[a].size() > P->names()[b].size(); });
  }

  Poly expr() {
    Poly acc(P_);
    bool neg = false;
    if (c_.accept('-'))
      neg = true;
    else
      c_.accept('+');
    Poly t = term();
    acc = neg ? -t : t;
    while (true) {
      if (c_.accept('+'))
        acc = acc + term();
      else if (c_.accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

 private:
  bool starts_factor() {
    char ch = c_.peek();
    return ch == '(' || std::isdigit(static_cast<unsigned char>(ch)) || std::isalpha(static_cast<unsigned char>(ch)) ||
           ch == '_';
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (c_.accept('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (c_.accept('^')) {
      long long e = c_.integer();
      if (e < 0) c_.fail("negative exponent");
      if (e > 255) c_.fail("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  Poly atom() {
    char ch = c_.peek();
    if (ch == '(') {
      c_.accept('(');
      Poly p = expr();
      c_.expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = c_.pos();
      std::size_t p = start;
      const std::string& s = c_.text();
      long long v = 0;
      const long long prime = P_->field().characteristic();
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
        v = (v * 10 + (s[p] - '0')) % prime;
        ++p;
      }
      c_.set_pos(p);
      return Poly::constant(P_, v);
    }
    const std::string& s = c_.text();
    std::size_t at = c_.pos();
    for (int v : order_) {
      const std::string& name = P_->names()[v];
      if (s.compare(at, name.size(), name) == 0) {
        c_.set_pos(at + name.size());
        return Poly::variable(P_, v);
      }
    }
    if (at < s.size() && (std::isalpha(static_cast<unsigned char>(s[at])) || s[at] == '_'))
      c_.fail("unknown variable");
    c_.fail("expected a polynomial term");
  }

  const PolyRing* P_;
  Cursor& c_;
  std::vector<int> order_;
};

Poly parse_poly_at(const PolyRing* P, const std::string& text, int line, int col) {
  Cursor c(text, line, col);
  if (c.at_end()) c.fail("empty polynomial");
  PolyParser pp(P, c);
  Poly p = pp.expr();
  if (!c.at_end()) c.fail("unexpected character");
  return p;
}

std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

}  // namespace

Poly parse_poly(const PolyRing* P, const std::string& text) { return parse_poly_at(P, text, 1, 1); }

RingPtr Document::ring(const std::string& name) const {
  for (auto& r : rings)
    if (r.name == name) return r.ring;
  throw Error("unknown ring " + name);
}

const ModulePresentation& Document::module(const std::string& name) const {
  for (auto& m : modules)
    if (m.name == name) return m.module;
  throw Error("unknown module " + name);
}

Document parse_document(const std::string& text, PrimeField default_field) {
  Document doc;
  doc.field = default_field;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto name_taken = [&](const std::string& n) {
    for (auto& r : doc.rings)
      if (r.name == n) return true;
    for (auto& m : doc.modules)
      if (m.name == n) return true;
    return false;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    Cursor c(line, lineno);
    if (c.at_end()) continue;
    if (c.accept_word("field")) {
      if (!doc.rings.empty()) c.fail("field must be set before any ring");
      long long p = c.integer();
      if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p))) c.fail("characteristic must be a prime below 2^31");
      doc.field = PrimeField(static_cast<std::uint32_t>(p));
      if (!c.at_end()) c.fail("unexpected text after field");
    } else if (c.accept_word("ring")) {
      int name_col = c.column();
      std::string name = c.identifier();
      if (name_taken(name)) throw InputError("duplicate name " + name, lineno, name_col);
      c.expect('=');
      c.expect_word("k");
      c.expect('[');
      std::vector<std::string> vars;
      do {
        int vc = c.column();
        std::string v = c.identifier();
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) throw InputError("duplicate variable " + v, lineno, vc);
        vars.push_back(v);
      } while (c.accept(','));
      c.expect(']');
      if (vars.size() > static_cast<std::size_t>(kMaxVars)) c.fail("too many variables");
      auto P = std::make_shared<const PolyRing>(doc.field, vars);
      std::vector<Poly> rels;
      if (c.accept('/')) {
        c.expect('(');
        if (!c.accept(')')) {
          while (true) {
            auto [t, col] = c.item(')');
            Poly f = parse_poly_at(P.get(), t, lineno, col);
            if (!f.is_zero()) {
              if (!f.is_homogeneous()) throw InputError("relation not homogeneous", lineno, col);
              if (f.degree() < 2) throw InputError("relation must have degree at least 2", lineno, col);
              rels.push_back(f);
            }
            if (c.accept(')')) break;
            c.expect(',');
          }
        }
      }
      if (!c.at_end()) c.fail("unexpected text after ring");
      doc.rings.push_back({name, GradedRing::make(P, rels)});
    } else if (c.accept_word("module")) {
      int name_col = c.column();
      std::string name = c.identifier();
      if (name_taken(name)) throw InputError("duplicate name " + name, lineno, name_col);
      c.expect_word("over");
      int rc = c.column();
      std::string rname = c.identifier();
      RingPtr R;
      try {
        R = doc.ring(rname);
      } catch (const Error&) {
        throw InputError("unknown ring " + rname, lineno, rc);
      }
      c.expect('=');
      c.expect_word("coker");
      c.expect_word("deg");
      c.expect('(');
      std::vector<int> degs;
      if (!c.accept(')')) {
        do {
          long long d = c.integer();
          if (d < -1000 || d > 1000) c.fail("degree out of range");
          degs.push_back(static_cast<int>(d));
        } while (c.accept(','));
        c.expect(')');
      }
      if (degs.empty()) c.fail("a module needs at least one generator");
      int mat_col = c.column();
      c.expect('[');
      std::vector<std::vector<std::pair<Poly, int>>> rows;
      if (!c.accept(']')) {
        do {
          c.expect('[');
          std::vector<std::pair<Poly, int>> row;
          if (!c.accept(']')) {
            while (true) {
              auto [t, col] = c.item(']');
              row.emplace_back(parse_poly_at(R->ctx(), t, lineno, col), col);
              if (c.accept(']')) break;
              c.expect(',');
            }
          }
          rows.push_back(std::move(row));
        } while (c.accept(','));
        c.expect(']');
      }
      if (!c.at_end()) c.fail("unexpected text after module");
      int ncols = 0;
      if (!rows.empty()) {
        if (rows.size() != degs.size())
          throw InputError("matrix has " + std::to_string(rows.size()) + " rows but " + std::to_string(degs.size()) +
                               " generators",
                           lineno, mat_col);
        ncols = static_cast<int>(rows[0].size());
        for (auto& r : rows)
          if (static_cast<int>(r.size()) != ncols) throw InputError("matrix rows differ in length", lineno, mat_col);
      }
      std::vector<Vector> cols;
      for (int j = 0; j < ncols; ++j) {
        Vector v;
        bool have = false;
        int cdeg = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          auto& [p, col] = rows[i][j];
          if (!p.is_zero()) {
            if (!p.is_homogeneous()) throw InputError("matrix entry not homogeneous", lineno, col);
            int d = p.degree() + degs[i];
            if (have && d != cdeg) throw InputError("degree mismatch in matrix column " + std::to_string(j + 1), lineno, col);
            have = true;
            cdeg = d;
          }
          v.push_back(p);
        }
        cols.push_back(std::move(v));
      }
      doc.modules.push_back({name, rname, ModulePresentation(R, degs, std::move(cols))});
    } else {
      c.fail("expected 'field', 'ring' or 'module'");
    }
  }
  return doc;
}

std::string ring_to_text(const std::string& name, const GradedRing& R) {
  std::string out = "ring " + name + " = k[";
  const auto& names = R.poly_ring().names();
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  out += "]";
  if (!R.relations().empty()) {
    out += " / (";
    for (std::size_t i = 0; i < R.relations().size(); ++i) out += (i ? ", " : "") + R.relations()[i].to_string();
    out += ")";
  }
  return out;
}

std::string module_to_text(const std::string& name, const std::string& ring_name, const ModulePresentation& M) {
  std::string out = "module " + name + " over " + ring_name + " = coker deg(";
  for (int i = 0; i < M.rank(); ++i) out += (i ? "," : "") + std::to_string(M.generator_degrees()[i]);
  out += ") [";
  const auto& cols = M.relations();
  if (!cols.empty()) {
    for (int i = 0; i < M.rank(); ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols.size(); ++j) out += (j ? ", " : "") + cols[j][i].to_string();
      out += "]";
    }
  }
  out += "]";
  return out;
}

RingPtr make_ring(const std::string& vars, const std::string& relations, PrimeField f) {
  std::string text = "ring R = k[" + vars + "]";
  if (!relations.empty()) text += " / (" + relations + ")";
  return parse_document(text, f).ring("R");
}

ModulePresentation make_module(const RingPtr& R, const std::vector<int>& degrees,
                               const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vector> cols;
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t j = 0; j < ncols; ++j) {
    Vector v;
    for (auto& r : rows) v.push_back(parse_poly(R->ctx(), r.at(j)));
    cols.push_back(std::move(v));
  }
  return ModulePresentation(R, degrees, std::move(cols));
}

}  // namespace torsam
