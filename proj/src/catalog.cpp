#include "futaki/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace futaki {

CatalogError::CatalogError(const std::string& what, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      message_(what),
      line_(line),
      column_(column) {}

std::string_view to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::polynomial:
      return "polynomial";
    case CaseKind::abstract:
      return "abstract";
    case CaseKind::product:
      return "product";
    case CaseKind::semisimple_full:
      return "semisimple_full";
    case CaseKind::toric_crosscheck:
      return "toric-crosscheck";
  }
  return "?";
}

std::string to_string(const ExpectedVerdict& e) {
  switch (e.kind) {
    case ExpectedVerdict::Kind::full_cone:
      return "full_cone";
    case ExpectedVerdict::Kind::see_toric:
      return "see_toric";
    case ExpectedVerdict::Kind::subcone:
      break;
  }
  std::string out = "subcone(" + std::to_string(e.dim);
  if (e.explicit_components) out += ", " + std::to_string(e.components);
  return out + ")";
}

std::string CaseRecord::family() const { return id.substr(0, id.find('-')); }

std::vector<TorusGenerator> CaseRecord::torus_generators() const {
  std::vector<TorusGenerator> out;
  for (const auto& t : torus) out.push_back(t.generator);
  return out;
}

std::size_t CaseRecord::effective_torus_rank() const { return torus_rank ? *torus_rank : torus.size(); }

const CaseRecord* Catalog::find(std::string_view id) const {
  for (const auto& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class T, class F>
std::string join(const std::vector<T>& items, const std::string& sep, F&& render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += render(items[i]);
  }
  return out;
}

// A piece of a value together with the column of its first character.
struct Span {
  std::string text;
  std::size_t column;
};

// Cursor over one entry value; columns are absolute within the line.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), base_(column) {}

  std::size_t column() const { return base_ + pos_; }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const { throw CatalogError(what, line_, column()); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && is_ident_char(text_[end])) return false;
    pos_ = end;
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected a name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Name made of identifier characters plus '.', '\'' and digits.
  std::string label() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (is_ident_char(text_[pos_]) || text_[pos_] == '.' || text_[pos_] == '\'')) ++pos_;
    if (pos_ == start) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    const std::size_t col = base_ + start;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const Error&) {
      throw CatalogError("expected a rational number", line_, col);
    }
  }

  std::string quoted() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected a quoted string");
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  // Contents of a bracketed group starting at the cursor, split at top-level commas.
  std::vector<Span> group(char open, char close) {
    expect(open);
    std::vector<Span> parts;
    std::size_t depth = 0;
    std::size_t start = pos_;
    for (; pos_ < text_.size(); ++pos_) {
      const char c = text_[pos_];
      if (c == '(' || c == '[') {
        ++depth;
      } else if (c == ')' || c == ']') {
        if (depth == 0) {
          if (c != close) fail(std::string("expected '") + close + "'");
          push_part(parts, start, pos_);
          ++pos_;
          if (parts.size() == 1 && parts[0].text.empty()) parts.clear();
          return parts;
        }
        --depth;
      } else if (c == ',' && depth == 0) {
        push_part(parts, start, pos_);
        start = pos_ + 1;
      }
    }
    fail(std::string("missing '") + close + "'");
  }

  void expect_end() {
    if (!done()) fail("unexpected trailing text");
  }

 private:
  void push_part(std::vector<Span>& parts, std::size_t start, std::size_t end) const {
    std::size_t b = start;
    while (b < end && std::isspace(static_cast<unsigned char>(text_[b]))) ++b;
    std::size_t e = end;
    while (e > b && std::isspace(static_cast<unsigned char>(text_[e - 1]))) --e;
    parts.push_back({std::string(text_.substr(b, e - b)), base_ + b});
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

QMatrix parse_matrix(Cursor& cur, std::size_t line) {
  std::vector<QVector> rows;
  for (const auto& row : cur.group('[', ']')) {
    Cursor rc(row.text, line, row.column);
    QVector v;
    for (const auto& entry : rc.group('[', ']')) {
      Cursor ec(entry.text, line, entry.column);
      v.push_back(ec.rational());
      ec.expect_end();
    }
    rc.expect_end();
    rows.push_back(std::move(v));
  }
  if (rows.empty()) cur.fail("empty matrix");
  try {
    return QMatrix::from_rows(rows);
  } catch (const DomainError& e) {
    cur.fail(e.what());
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Catalog run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool seen_format = false;
    while (pos <= text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) {
        if (pos == text_.size()) break;
        nl = text_.size();
      }
      std::string_view line = text_.substr(pos, nl - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      pos = nl + 1;
      ++line_no;

      const std::string t = trim(line);
      if (t.empty() || t.front() == '#') {
        cat_.layout.push_back({Catalog::Line::Kind::raw, 0, 0, std::string(line)});
        continue;
      }
      if (!seen_format) {
        parse_format(line, line_no);
        seen_format = true;
        continue;
      }
      if (t.front() == '[') {
        finish_record();
        parse_header(line, line_no);
        continue;
      }
      if (!current_) throw CatalogError("entry outside of a [case] record", line_no);
      parse_entry(line, line_no);
    }
    finish_record();
    if (!seen_format) throw CatalogError("empty catalog: missing 'format = 1'", std::max<std::size_t>(line_no, 1));
    if (cat_.records.empty()) throw CatalogError("catalog has no records", std::max<std::size_t>(line_no, 1));
    return std::move(cat_);
  }

 private:
  void parse_format(std::string_view line, std::size_t line_no) {
    Cursor cur(line, line_no, 1);
    if (!cur.accept_word("format")) cur.fail("catalog must start with 'format = 1'");
    cur.expect('=');
    const std::size_t col = cur.column();
    const std::size_t v = cur.integer();
    cur.expect_end();
    if (v != 1) throw CatalogError("unsupported catalog format " + std::to_string(v), line_no, col + 1);
    cat_.format = 1;
    cat_.layout.push_back({Catalog::Line::Kind::format, 0, 0, {}});
  }

  void parse_header(std::string_view line, std::size_t line_no) {
    Cursor cur(line, line_no, 1);
    cur.expect('[');
    cur.expect_word("case");
    const std::size_t col = cur.column() + 1;
    std::string id = cur.quoted();
    cur.expect(']');
    cur.expect_end();
    if (id.empty()) throw CatalogError("empty case id", line_no, col);
    if (ids_.count(id)) throw CatalogError("duplicate case id \"" + id + "\"", line_no, col);
    ids_.insert(id);
    current_.emplace();
    current_->id = std::move(id);
    current_->line = line_no;
    seen_keys_.clear();
    params_.reset();
    saw_param_ = false;
    cat_.layout.push_back({Catalog::Line::Kind::header, cat_.records.size(), 0, {}});
  }

  void finish_record() {
    if (!current_) return;
    auto& r = *current_;
    if (!seen_keys_.count("kind")) throw CatalogError("case \"" + r.id + "\" has no 'kind'", r.line);
    if (!seen_keys_.count("expected")) throw CatalogError("case \"" + r.id + "\" has no 'expected'", r.line);
    if (r.kind == CaseKind::polynomial && !r.ring)
      throw CatalogError("polynomial case \"" + r.id + "\" has no 'ambient'", r.line);
    cat_.records.push_back(std::move(r));
    current_.reset();
  }

  void once(const std::string& key, std::size_t line_no) {
    if (!seen_keys_.insert(key).second) throw CatalogError("duplicate key '" + key + "'", line_no);
  }

  RingPtr need_ring(std::size_t line_no, const std::string& key) {
    if (!current_->ring) throw CatalogError("'" + key + "' needs a preceding 'ambient'", line_no);
    return current_->ring;
  }

  MultiPoly poly(const Span& s, const RingPtr& ring, std::size_t line_no) {
    try {
      return parse_poly(s.text, ring);
    } catch (const ParseError& e) {
      throw CatalogError(e.what(), line_no, s.column + e.column() - 1);
    } catch (const DomainError& e) {
      throw CatalogError(e.what(), line_no, s.column);
    }
  }

  void parse_entry(std::string_view line, std::size_t line_no) {
    auto& r = *current_;
    Cursor cur(line, line_no, 1);
    const std::size_t key_col = cur.column();
    const std::string key = cur.ident();
    std::string rendered;

    if (key == "param") {
      if (saw_param_) throw CatalogError("at most one parameter per case", line_no, key_col);
      if (r.ring) throw CatalogError("'param' must precede 'ambient'", line_no, key_col);
      saw_param_ = true;
      const std::string name = cur.ident();
      std::vector<Rational> excluded;
      if (cur.accept_word("excludes")) {
        excluded.push_back(cur.rational());
        while (cur.peek() == ',') {
          cur.expect(',');
          excluded.push_back(cur.rational());
        }
      }
      cur.expect_end();
      std::sort(excluded.begin(), excluded.end());
      excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
      params_ = ParamField(name, excluded);
      rendered = "param " + name;
      if (!excluded.empty())
        rendered += " excludes " + join(excluded, ", ", [](const Rational& q) { return to_string(q); });
      push_entry(rendered);
      return;
    }

    std::string name;
    const bool named = key == "torus" || key == "finite" || key == "locus" || key == "justify";
    if (named) name = key == "justify" ? cur.label() : cur.ident();
    cur.expect('=');
    cur.skip_ws();
    const std::size_t vcol = cur.column();
    const std::string_view value = line.substr(std::min(line.size(), vcol - 1));
    const std::string value_trimmed = trim(value);
    Cursor val(value, line_no, vcol);
    const std::string head = named ? key + " " + name + " = " : key + " = ";

    if (key == "kind") {
      once(key, line_no);
      static const std::map<std::string, CaseKind> kinds{{"polynomial", CaseKind::polynomial},
                                                         {"abstract", CaseKind::abstract},
                                                         {"product", CaseKind::product},
                                                         {"semisimple_full", CaseKind::semisimple_full},
                                                         {"toric-crosscheck", CaseKind::toric_crosscheck}};
      auto it = kinds.find(value_trimmed);
      if (it == kinds.end()) throw CatalogError("unknown kind '" + value_trimmed + "'", line_no, vcol);
      r.kind = it->second;
      rendered = head + value_trimmed;
    } else if (key == "aut" || key == "note") {
      if (key == "aut") once(key, line_no);
      std::string s = val.quoted();
      val.expect_end();
      rendered = head + quote(s);
      (key == "aut" ? r.aut : r.notes.emplace_back()) = std::move(s);
    } else if (key == "ambient") {
      once(key, line_no);
      AmbientSpace amb;
      try {
        amb = parse_ambient(value_trimmed);
      } catch (const ParseError& e) {
        throw CatalogError(e.what(), line_no, vcol + e.column() - 1);
      } catch (const DomainError& e) {
        throw CatalogError(e.what(), line_no, vcol);
      }
      try {
        r.ring = make_ring(amb, params_.value_or(ParamField{}));
      } catch (const DomainError& e) {
        throw CatalogError(e.what(), line_no, vcol);
      }
      rendered = head + amb.to_string();
    } else if (key == "equation") {
      auto ring = need_ring(line_no, key);
      r.equations.push_back(poly({value_trimmed, vcol}, ring, line_no));
      rendered = head + r.equations.back().to_string();
    } else if (key == "center") {
      rendered = head + parse_center(val, line_no);
    } else if (key == "torus") {
      auto ring = need_ring(line_no, key);
      std::vector<Integer> raw;
      for (const auto& part : val.group('(', ')')) {
        Cursor c(part.text, line_no, part.column);
        const Rational q = c.rational();
        c.expect_end();
        if (q.get_den() != 1) throw CatalogError("torus weights must be integers", line_no, part.column);
        raw.push_back(q.get_num());
      }
      val.expect_end();
      for (const auto& t : r.torus)
        if (t.name == name) throw CatalogError("duplicate torus generator '" + name + "'", line_no, key_col);
      try {
        r.torus.push_back({name, raw, TorusGenerator(ring->ambient, raw)});
      } catch (const DomainError& e) {
        throw CatalogError(e.what(), line_no, vcol);
      }
      rendered = head + "(" + join(raw, ", ", [](const Integer& z) { return z.get_str(); }) + ")";
    } else if (key == "finite") {
      for (const auto& f : r.finite)
        if (f.name == name) throw CatalogError("duplicate finite symmetry '" + name + "'", line_no, key_col);
      rendered = head + parse_finite(val, name, line_no);
    } else if (key == "semisimple") {
      once(key, line_no);
      std::vector<std::string> tags;
      tags.push_back(val.ident());
      while (val.peek() == '+') {
        val.expect('+');
        tags.push_back(val.ident());
      }
      val.expect_end();
      r.semisimple = tags;
      rendered = head + join(tags, " + ", [](const std::string& s) { return s; });
    } else if (key == "torus_rank" || key == "picard") {
      once(key, line_no);
      const std::size_t v = val.integer();
      val.expect_end();
      (key == "picard" ? r.picard : r.torus_rank) = v;
      rendered = head + std::to_string(v);
    } else if (key == "h11") {
      once(key, line_no);
      for (const auto& part : val.group('(', ')')) {
        Cursor c(part.text, line_no, part.column);
        r.h11.push_back(c.label());
        c.expect_end();
      }
      val.expect_end();
      rendered = head + "(" + join(r.h11, ", ", [](const std::string& s) { return s; }) + ")";
    } else if (key == "anticanonical" || key == "toric_params") {
      once(key, line_no);
      QVector v;
      for (const auto& part : val.group('(', ')')) {
        Cursor c(part.text, line_no, part.column);
        v.push_back(c.rational());
        c.expect_end();
      }
      val.expect_end();
      rendered = head + to_string(v);
      (key == "anticanonical" ? r.anticanonical : r.toric_params) = std::move(v);
    } else if (key == "expected" || key == "claim") {
      once(key, line_no);
      ExpectedVerdict e = parse_expected(val);
      rendered = head + to_string(e);
      (key == "expected" ? r.expected : r.claim) = e;
    } else if (key == "factor") {
      r.factors.push_back(val.ident());
      val.expect_end();
      rendered = head + r.factors.back();
    } else if (key == "toric") {
      once(key, line_no);
      r.toric = val.ident();
      val.expect_end();
      rendered = head + r.toric;
    } else if (key == "locus") {
      LocusEntry locus{name, {}};
      for (const auto& part : val.group('(', ')')) {
        if (part.text.empty()) throw CatalogError("empty locus equation", line_no, part.column);
        locus.forms.push_back(part.text);
      }
      val.expect_end();
      rendered = head + "(" + join(locus.forms, ", ", [](const std::string& s) { return s; }) + ")";
      r.loci.push_back(std::move(locus));
    } else if (key == "expect_adjoint" || key == "expect_toric") {
      once(key, line_no);
      const std::string word = val.ident();
      val.expect_end();
      static const std::set<std::string> adjoint_words{"solvable", "unsolvable"};
      static const std::set<std::string> toric_words{"identically_zero", "equals_loci", "not_identically_zero"};
      const auto& allowed = key == "expect_adjoint" ? adjoint_words : toric_words;
      if (!allowed.count(word)) throw CatalogError("unknown value '" + word + "' for " + key, line_no, vcol);
      (key == "expect_adjoint" ? r.expect_adjoint : r.expect_toric) = word;
      rendered = head + word;
    } else if (key == "justify") {
      std::string s = val.quoted();
      val.expect_end();
      rendered = head + quote(s);
      r.justify.push_back({name, std::move(s)});
    } else {
      throw CatalogError("unknown key '" + key + "'", line_no, key_col);
    }
    push_entry(rendered);
  }

  void push_entry(std::string rendered) {
    cat_.layout.push_back({Catalog::Line::Kind::entry, cat_.records.size(), current_->entries.size(), {}});
    current_->entries.push_back(std::move(rendered));
  }

  ExpectedVerdict parse_expected(Cursor& val) {
    ExpectedVerdict e;
    const std::string word = val.ident();
    if (word == "full_cone") {
      e.kind = ExpectedVerdict::Kind::full_cone;
    } else if (word == "see_toric") {
      e.kind = ExpectedVerdict::Kind::see_toric;
    } else if (word == "subcone") {
      e.kind = ExpectedVerdict::Kind::subcone;
      val.expect('(');
      e.dim = val.integer();
      if (val.peek() == ',') {
        val.expect(',');
        e.components = val.integer();
        e.explicit_components = true;
      }
      val.expect(')');
    } else {
      val.fail("expected full_cone, subcone(D) or see_toric");
    }
    val.expect_end();
    return e;
  }

  std::string parse_center(Cursor& val, std::size_t line_no) {
    auto ring = need_ring(line_no, "center");
    SubvarietyPresentation pres;
    std::string out;
    if (val.peek() == '[') {
      val.expect('[');
      val.expect_word("stage");
      pres.stage = static_cast<int>(val.integer());
      val.expect(']');
      if (pres.stage < 1) val.fail("stages start at 1");
    }
    if (pres.stage != 1) out += "[stage " + std::to_string(pres.stage) + "] ";
    if (val.accept_word("ideal")) {
      std::vector<std::string> texts;
      for (const auto& part : val.group('(', ')')) {
        pres.ideal.push_back(poly(part, ring, line_no));
        texts.push_back(pres.ideal.back().to_string());
      }
      if (pres.ideal.empty()) val.fail("empty ideal");
      out += "ideal(" + join(texts, ", ", [](const std::string& s) { return s; }) + ")";
    }
    if (val.accept_word("curve")) {
      val.expect('[');
      const std::string r = val.ident();
      val.expect(':');
      const std::string s = val.ident();
      val.expect(']');
      RingPtr curve_ring;
      try {
        curve_ring = make_ring(AmbientSpace({ProjectiveFactor{{r, s}}}), ring->params);
      } catch (const DomainError& e) {
        val.fail(e.what());
      }
      const std::size_t col = val.column();
      std::vector<MultiPoly> coords;
      std::vector<std::string> texts;
      for (const auto& part : val.group('(', ')')) {
        coords.push_back(poly(part, curve_ring, line_no));
        texts.push_back(coords.back().to_string());
      }
      try {
        pres.curve = make_param_curve(ring->ambient, curve_ring, std::move(coords));
      } catch (const DomainError& e) {
        throw CatalogError(e.what(), line_no, col);
      }
      if (!out.empty() && out.back() != ' ') out += " ";
      out += "curve[" + r + ":" + s + "](" + join(texts, ", ", [](const std::string& t) { return t; }) + ")";
    }
    val.expect_end();
    if (!pres.has_ideal() && !pres.has_curve()) val.fail("center needs ideal(...) or curve[...](...)");
    current_->centers.push_back(std::move(pres));
    return out;
  }

  std::string parse_finite(Cursor& val, const std::string& name, std::size_t line_no) {
    FiniteEntry f;
    f.name = name;
    std::string out;
    if (val.accept_word("map")) {
      auto ring = need_ring(line_no, "finite");
      const std::size_t col = val.column();
      std::vector<MultiPoly> images;
      for (const auto& part : val.group('(', ')')) images.push_back(poly(part, ring, line_no));
      std::vector<std::size_t> factor_source;
      if (val.accept_word("factors")) {
        val.expect('=');
        for (const auto& part : val.group('(', ')')) {
          Cursor c(part.text, line_no, part.column);
          factor_source.push_back(c.integer());
          c.expect_end();
        }
      }
      try {
        f.map = MonomialAutomorphism::from_images(ring, images, factor_source);
      } catch (const DomainError& e) {
        throw CatalogError(e.what(), line_no, col);
      }
      out = f.map->to_string();
    } else if (val.accept_word("adjoint")) {
      f.adjoint = parse_matrix(val, line_no);
      val.expect_word("h11");
      f.h11 = parse_matrix(val, line_no);
      out = "adjoint " + to_string(*f.adjoint) + " h11 " + to_string(*f.h11);
    } else {
      val.fail("expected map(...) or adjoint [[...]] h11 [[...]]");
    }
    val.expect_word("order");
    val.expect('=');
    const std::size_t order = val.integer();
    val.expect_end();
    if (order < 1) val.fail("order must be positive");
    f.order = static_cast<unsigned>(order);
    current_->finite.push_back(std::move(f));
    return out + " order = " + std::to_string(order);
  }

  std::string_view text_;
  Catalog cat_;
  std::optional<CaseRecord> current_;
  std::set<std::string> ids_;
  std::set<std::string> seen_keys_;
  std::optional<ParamField> params_;
  bool saw_param_ = false;
};

}  // namespace

Catalog parse_catalog(std::string_view text) { return Parser(text).run(); }

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot read catalog file " + path, 1);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string print_catalog(const Catalog& catalog) {
  std::string out;
  for (const auto& line : catalog.layout) {
    switch (line.kind) {
      case Catalog::Line::Kind::raw:
        out += line.raw;
        break;
      case Catalog::Line::Kind::format:
        out += "format = " + std::to_string(catalog.format);
        break;
      case Catalog::Line::Kind::header:
        out += "[case " + quote(catalog.records.at(line.record).id) + "]";
        break;
      case Catalog::Line::Kind::entry:
        out += catalog.records.at(line.record).entries.at(line.entry);
        break;
    }
    out += '\n';
  }
  return out;
}

const std::vector<Rational>& excluded_values(const CaseRecord& record) {
  static const std::vector<Rational> none;
  return record.ring ? record.ring->params.excluded() : none;
}

std::vector<LocusEntry> loci_for(const Catalog& catalog, std::string_view family) {
  std::vector<LocusEntry> out;
  for (const auto& r : catalog.records)
    for (const auto& l : r.loci)
      if (l.family == family &&
          std::none_of(out.begin(), out.end(), [&](const LocusEntry& e) { return e.forms == l.forms; }))
        out.push_back(l);
  return out;
}

}  // namespace futaki
