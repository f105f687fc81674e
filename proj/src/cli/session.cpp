#include "cohann/session.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "cohann/error.hpp"
#include "cohann/parser.hpp"
#include "json.hpp"

namespace cohann {

namespace {

struct Value {
  enum class Kind { Int, Str, List } kind = Kind::Int;
  long long i = 0;
  std::string s;
  std::vector<Value> list;
};

struct Entry {
  Value value;
  std::size_t line = 0;
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line = 0;
  std::map<std::string, Entry> keys;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// Drops a '#' comment outside string literals; reports the bracket balance.
std::string strip_comment(const std::string& line, int& depth, std::size_t lineno) {
  std::string out;
  bool in_str = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_str) {
      out += c;
      if (c == '\\' && i + 1 < line.size()) out += line[++i];
      else if (c == '"') in_str = false;
      continue;
    }
    if (c == '#') break;
    if (c == '"') in_str = true;
    if (c == '[') ++depth;
    if (c == ']') --depth;
    out += c;
  }
  if (in_str) fail(lineno, "unterminated string");
  return out;
}

class ValueParser {
public:
  ValueParser(std::string_view text, std::size_t line) : t_(text), line_(line) {}

  Value parse() {
    Value v = value();
    skip();
    if (p_ != t_.size()) fail(line_, "unexpected text after value: '" + std::string(t_.substr(p_)) + "'");
    return v;
  }

private:
  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }

  Value value() {
    skip();
    if (p_ == t_.size()) fail(line_, "missing value");
    char c = t_[p_];
    Value v;
    if (c == '"') {
      v.kind = Value::Kind::Str;
      ++p_;
      while (true) {
        if (p_ == t_.size()) fail(line_, "unterminated string");
        char d = t_[p_++];
        if (d == '"') break;
        if (d == '\\' && p_ < t_.size()) d = t_[p_++];
        v.s += d;
      }
      return v;
    }
    if (c == '[') {
      v.kind = Value::Kind::List;
      ++p_;
      skip();
      if (p_ < t_.size() && t_[p_] == ']') {
        ++p_;
        return v;
      }
      while (true) {
        v.list.push_back(value());
        skip();
        if (p_ == t_.size()) fail(line_, "unterminated list");
        if (t_[p_] == ',') {
          ++p_;
          skip();
          if (p_ < t_.size() && t_[p_] == ']') {
            ++p_;
            return v;
          }
          continue;
        }
        if (t_[p_] == ']') {
          ++p_;
          return v;
        }
        fail(line_, std::string("expected ',' or ']' but found '") + t_[p_] + "'");
      }
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = p_;
      if (c == '-') ++p_;
      while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
      std::string digits(t_.substr(start, p_ - start));
      if (digits == "-") fail(line_, "malformed integer");
      try {
        v.i = std::stoll(digits);
      } catch (const std::exception&) {
        fail(line_, "integer out of range: " + digits);
      }
      return v;
    }
    fail(line_, std::string("unexpected character '") + c + "'");
  }

  std::string_view t_;
  std::size_t line_;
  std::size_t p_ = 0;
};

std::vector<Section> read_sections(std::string_view text) {
  std::vector<Section> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    int depth = 0;
    std::string line = trim(strip_comment(raw, depth, lineno));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, "malformed section header");
      std::string inner = trim(std::string_view(line).substr(1, line.size() - 2));
      Section s;
      s.line = lineno;
      auto dot = inner.find('.');
      s.kind = inner.substr(0, dot);
      if (dot != std::string::npos) s.name = inner.substr(dot + 1);
      auto check_ident = [&](const std::string& w) {
        if (w.empty() || !ident_start(w[0])) fail(lineno, "malformed section header '" + inner + "'");
        for (char c : w)
          if (!ident_char(c)) fail(lineno, "malformed section header '" + inner + "'");
      };
      check_ident(s.kind);
      if (dot != std::string::npos) check_ident(s.name);
      out.push_back(std::move(s));
      continue;
    }
    if (out.empty()) fail(lineno, "key outside of any section");
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    if (key.empty() || !ident_start(key[0])) fail(lineno, "malformed key '" + key + "'");
    for (char c : key)
      if (!ident_char(c)) fail(lineno, "malformed key '" + key + "'");
    std::string value = line.substr(eq + 1);
    std::size_t start = lineno;
    while (depth > 0) {
      if (!std::getline(in, raw)) fail(start, "unterminated list for key '" + key + "'");
      ++lineno;
      value += " " + strip_comment(raw, depth, lineno);
    }
    if (depth < 0) fail(lineno, "unbalanced ']'");
    Section& sec = out.back();
    if (sec.keys.count(key)) fail(start, "duplicate key '" + key + "'");
    sec.keys[key] = {ValueParser(value, start).parse(), start};
  }
  return out;
}

class SectionReader {
public:
  SectionReader(const Section& s, std::set<std::string> allowed) : s_(s) {
    for (const auto& [k, e] : s.keys)
      if (!allowed.count(k)) fail(e.line, "unknown key '" + k + "' in [" + header() + "]");
  }

  std::string header() const { return s_.name.empty() ? s_.kind : s_.kind + "." + s_.name; }
  bool has(const std::string& k) const { return s_.keys.count(k) > 0; }
  const Entry& get(const std::string& k) const {
    auto it = s_.keys.find(k);
    if (it == s_.keys.end()) fail(s_.line, "[" + header() + "] is missing '" + k + "'");
    return it->second;
  }

  long long integer(const std::string& k) const {
    const Entry& e = get(k);
    if (e.value.kind != Value::Kind::Int) fail(e.line, "'" + k + "' must be an integer");
    return e.value.i;
  }
  std::string string(const std::string& k) const {
    const Entry& e = get(k);
    if (e.value.kind != Value::Kind::Str) fail(e.line, "'" + k + "' must be a string");
    return e.value.s;
  }
  std::vector<std::string> strings(const std::string& k) const { return strings(get(k).value, k, get(k).line); }
  static std::vector<std::string> strings(const Value& v, const std::string& k, std::size_t line) {
    if (v.kind != Value::Kind::List) fail(line, "'" + k + "' must be a list of strings");
    std::vector<std::string> out;
    for (const auto& x : v.list) {
      if (x.kind != Value::Kind::Str) fail(line, "'" + k + "' must be a list of strings");
      out.push_back(x.s);
    }
    return out;
  }
  std::vector<long long> integers(const std::string& k) const {
    const Entry& e = get(k);
    if (e.value.kind != Value::Kind::List) fail(e.line, "'" + k + "' must be a list of integers");
    std::vector<long long> out;
    for (const auto& x : e.value.list) {
      if (x.kind != Value::Kind::Int) fail(e.line, "'" + k + "' must be a list of integers");
      out.push_back(x.i);
    }
    return out;
  }

private:
  const Section& s_;
};

Polynomial parse_at(const std::string& s, const RingPtr& ring, std::size_t line,
                    const std::string& what) {
  try {
    return parse_poly(s, ring);
  } catch (const ParseError& e) {
    fail(line, what + " \"" + s + "\": " + e.what());
  }
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& ss, const RingPtr& ring,
                                  std::size_t line, const std::string& what) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(parse_at(s, ring, line, what));
  return out;
}

nlohmann::json strings_json(const std::vector<Polynomial>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

const FPModule& Session::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw Error("undefined module '" + name + "'");
  return it->second;
}

const SubalgebraMap& Session::subalgebra(const std::string& name) const {
  auto it = subalgebras.find(name);
  if (it == subalgebras.end()) throw Error("undefined subalgebra '" + name + "'");
  return it->second;
}

const Ideal& Session::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw Error("undefined ideal '" + name + "'");
  return it->second;
}

Session parse_session(std::string_view text) {
  auto sections = read_sections(text);
  const Section* ring_sec = nullptr;
  std::set<std::string> names;
  for (const auto& s : sections) {
    if (s.kind == "ring") {
      if (!s.name.empty()) fail(s.line, "[ring] takes no name");
      if (ring_sec) fail(s.line, "duplicate [ring] section");
      ring_sec = &s;
      continue;
    }
    if (s.kind != "module" && s.kind != "subalgebra" && s.kind != "ideal")
      fail(s.line, "unknown section kind '" + s.kind + "'");
    if (s.name.empty()) fail(s.line, "[" + s.kind + "] needs a name, as in [" + s.kind + ".X]");
    if (!names.insert(s.name).second) fail(s.line, "duplicate name '" + s.name + "'");
  }
  if (!ring_sec) throw ParseError("line 1: missing [ring] section", 1);

  Session out;
  nlohmann::json canon;
  {
    SectionReader r(*ring_sec, {"char", "vars", "weights", "order", "relations"});
    long long ch = r.has("char") ? r.integer("char") : 0;
    if (ch < 0 || ch > 0x7fffffffLL) fail(r.get("char").line, "characteristic out of range");
    Field field = [&] {
      try {
        return Field(static_cast<std::uint32_t>(ch));
      } catch (const DomainError& e) {
        fail(r.get("char").line, e.what());
      }
    }();
    auto vars = r.strings("vars");
    std::size_t vline = r.get("vars").line;
    if (vars.empty()) fail(vline, "vars must not be empty");
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (v.empty() || !ident_start(v[0])) fail(vline, "malformed variable name '" + v + "'");
      for (char c : v)
        if (!ident_char(c)) fail(vline, "malformed variable name '" + v + "'");
      if (!seen.insert(v).second) fail(vline, "duplicate variable '" + v + "'");
    }
    std::vector<std::int64_t> weights;
    if (r.has("weights")) {
      for (auto w : r.integers("weights")) {
        if (w <= 0) fail(r.get("weights").line, "weights must be positive");
        weights.push_back(w);
      }
      if (weights.size() != vars.size())
        fail(r.get("weights").line, "expected " + std::to_string(vars.size()) + " weights, got " +
                                        std::to_string(weights.size()));
    }
    std::string order = r.has("order") ? r.string("order") : "grevlex";
    MonomialOrder mo;
    if (order == "grevlex") mo = MonomialOrder::grevlex();
    else if (order == "lex") mo = MonomialOrder::lex();
    else fail(r.get("order").line, "order must be \"grevlex\" or \"lex\"");
    out.ambient = PolyRing::make(field, vars, mo, weights);
    std::vector<Polynomial> rels;
    if (r.has("relations"))
      rels = parse_all(r.strings("relations"), out.ambient, r.get("relations").line, "relation");
    out.ring = make_quotient(out.ambient, rels);
    canon["ring"] = {{"char", ch},
                     {"vars", vars},
                     {"weights", out.ambient->weights()},
                     {"order", order},
                     {"relations", strings_json(rels)}};
  }
  canon["modules"] = nlohmann::json::object();
  canon["subalgebras"] = nlohmann::json::object();
  canon["ideals"] = nlohmann::json::object();

  for (const auto& s : sections) {
    if (s.kind != "subalgebra") continue;
    SectionReader r(s, {"vars", "images"});
    auto vars = r.strings("vars");
    auto images = parse_all(r.strings("images"), out.ambient, r.get("images").line, "image");
    if (vars.size() != images.size())
      fail(r.get("images").line, "expected " + std::to_string(vars.size()) + " images, got " +
                                     std::to_string(images.size()));
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (v.empty() || !ident_start(v[0])) fail(r.get("vars").line, "malformed variable name '" + v + "'");
      if (!seen.insert(v).second) fail(r.get("vars").line, "duplicate variable '" + v + "'");
    }
    out.subalgebras.emplace(s.name, make_subalgebra(*out.ring, vars, images));
    canon["subalgebras"][s.name] = {{"vars", vars},
                                    {"images", strings_json(out.subalgebras.at(s.name).images)}};
  }

  for (const auto& s : sections) {
    if (s.kind == "ideal") {
      SectionReader r(s, {"generators"});
      auto gens = parse_all(r.strings("generators"), out.ambient, r.get("generators").line, "generator");
      canon["ideals"][s.name] = strings_json(gens);
      out.ideals.emplace(s.name, Ideal(out.ambient, gens));
      continue;
    }
    if (s.kind != "module") continue;
    SectionReader r(s, {"cokernel", "over"});
    QRingPtr q = out.ring;
    std::string base;
    if (r.has("over")) {
      base = r.string("over");
      auto it = out.subalgebras.find(base);
      if (it == out.subalgebras.end()) fail(r.get("over").line, "undefined subalgebra '" + base + "'");
      q = it->second.base_ring;
    }
    const Entry& e = r.get("cokernel");
    if (e.value.kind != Value::Kind::List || e.value.list.empty())
      fail(e.line, "cokernel must be a nonempty list of rows");
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : e.value.list) {
      auto entries = SectionReader::strings(row, "cokernel", e.line);
      if (!rows.empty() && entries.size() != rows.front().size())
        fail(e.line, "row " + std::to_string(rows.size() + 1) + " has " + std::to_string(entries.size()) +
                         " entries, expected " + std::to_string(rows.front().size()));
      rows.push_back(parse_all(entries, q->ambient(), e.line, "entry"));
    }
    Matrix m(q->ambient(), rows.size());
    for (std::size_t j = 0; j < rows.front().size(); ++j) {
      Vector col;
      for (const auto& row : rows) col.push_back(row[j]);
      m.add_column(std::move(col));
    }
    nlohmann::json crows = nlohmann::json::array();
    for (const auto& row : rows) crows.push_back(strings_json(row));
    canon["modules"][s.name] = {{"over", base}, {"cokernel", crows}};
    out.modules.emplace(s.name, FPModule(q, std::move(m)));
    out.module_base[s.name] = base;
  }
  out.canonical = canon.dump();
  out.digest = sha256_hex(out.canonical);
  return out;
}

Session load_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read session file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_session(ss.str());
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace cohann
