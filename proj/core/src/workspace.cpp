#include "xmodbar/workspace.hpp"

#include <cctype>
#include <fstream>
#include <initializer_list>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "xmodbar/errors.hpp"

namespace xmodbar {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Pointer locator: a structural scan over the raw text, enough to find where
// a value starts. The document has already been parsed successfully.

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  std::size_t ws(std::size_t p) const {
    while (p < s_.size() && (s_[p] == ' ' || s_[p] == '\t' || s_[p] == '\n' || s_[p] == '\r')) ++p;
    return p;
  }

  /// p at the opening quote; returns one past the closing quote.
  std::size_t string_end(std::size_t p, std::string* out = nullptr) const {
    ++p;
    while (p < s_.size() && s_[p] != '"') {
      if (s_[p] == '\\' && p + 1 < s_.size()) {
        const char c = s_[p + 1];
        if (out) {
          switch (c) {
            case 'n': out->push_back('\n'); break;
            case 't': out->push_back('\t'); break;
            case 'u': out->append(s_.substr(p, 6)); p += 4; break;
            default: out->push_back(c);
          }
        }
        p += 2;
        continue;
      }
      if (out) out->push_back(s_[p]);
      ++p;
    }
    return p + 1;
  }

  std::size_t value_end(std::size_t p) const {
    p = ws(p);
    if (p >= s_.size()) return p;
    if (s_[p] == '"') return string_end(p);
    if (s_[p] == '{' || s_[p] == '[') {
      const char close = s_[p] == '{' ? '}' : ']';
      p = ws(p + 1);
      while (p < s_.size() && s_[p] != close) {
        p = value_end(p);
        p = ws(p);
        if (p < s_.size() && (s_[p] == ',' || s_[p] == ':')) p = ws(p + 1);
      }
      return p + 1;
    }
    while (p < s_.size() && s_[p] != ',' && s_[p] != '}' && s_[p] != ']' && s_[p] != ' ' && s_[p] != '\n' &&
           s_[p] != '\r' && s_[p] != '\t') {
      ++p;
    }
    return p;
  }

  std::size_t find(std::size_t p, const std::vector<std::string>& tokens, std::size_t t) const {
    p = ws(p);
    if (t == tokens.size() || p >= s_.size()) return p;
    if (s_[p] == '{') {
      std::size_t q = ws(p + 1);
      while (q < s_.size() && s_[q] == '"') {
        std::string key;
        q = ws(string_end(q, &key));
        q = ws(q + 1);  // ':'
        if (key == tokens[t]) return find(q, tokens, t + 1);
        q = ws(value_end(q));
        if (q < s_.size() && s_[q] == ',') q = ws(q + 1);
      }
      return p;
    }
    if (s_[p] == '[') {
      std::size_t index = 0;
      try {
        index = std::stoul(tokens[t]);
      } catch (const std::exception&) {
        return p;
      }
      std::size_t q = ws(p + 1);
      for (std::size_t k = 0; q < s_.size() && s_[q] != ']'; ++k) {
        if (k == index) return find(q, tokens, t + 1);
        q = ws(value_end(q));
        if (q < s_.size() && s_[q] == ',') q = ws(q + 1);
      }
      return p;
    }
    return p;
  }

 private:
  std::string_view s_;
};

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<std::string> pointer_tokens(std::string_view pointer) {
  std::vector<std::string> out;
  if (pointer.empty()) return out;
  std::size_t p = 1;
  while (true) {
    const std::size_t next = pointer.find('/', p);
    std::string raw(pointer.substr(p, next == std::string_view::npos ? std::string_view::npos : next - p));
    std::string tok;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '~' && i + 1 < raw.size()) {
        tok.push_back(raw[i + 1] == '1' ? '/' : '~');
        ++i;
      } else {
        tok.push_back(raw[i]);
      }
    }
    out.push_back(std::move(tok));
    if (next == std::string_view::npos) break;
    p = next + 1;
  }
  return out;
}

std::string escape_token(const std::string& t) {
  std::string out;
  for (char c : t) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::pair<std::size_t, std::size_t> locate_pointer(std::string_view text, std::string_view pointer) {
  const Scanner sc(text);
  return line_col(text, sc.find(0, pointer_tokens(pointer), 0));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Path {
  std::string ptr;
  Path operator/(const std::string& key) const { return Path{ptr + "/" + escape_token(key)}; }
  Path operator/(std::size_t i) const { return Path{ptr + "/" + std::to_string(i)}; }
};

class Parser {
 public:
  Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  Workspace run() {
    json doc;
    std::string_view trimmed = text_;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
    if (trimmed.empty()) return Workspace{};
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      const auto [l, c] = line_col(text_, e.byte == 0 ? 0 : e.byte - 1);
      std::string what = e.what();
      const auto pos = what.find("syntax error");
      throw InputError(source_ + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " +
                       (pos == std::string::npos ? what : what.substr(pos)));
    }
    const Path root{};
    if (!doc.is_object()) fail(root, "top level must be an object");
    keys(doc, root, {"modulus", "algebras", "homs", "actions", "xmods", "morphisms", "cims", "options"});

    Workspace ws;
    if (doc.contains("modulus")) {
      ws.modulus = integer(doc["modulus"], root / "modulus");
      if (ws.modulus < 2) fail(root / "modulus", "modulus must be at least 2");
    } else if (doc.contains("algebras") && !doc["algebras"].empty()) {
      fail(root, "missing \"modulus\"");
    }
    modulus_ = ws.modulus;

    for (const auto& [name, j] : section(doc, "algebras")) ws.algebras.emplace(name, algebra(j, root / "algebras" / name));
    for (const auto& [name, j] : section(doc, "homs")) ws.homs.emplace(name, hom(ws, j, root / "homs" / name));
    for (const auto& [name, j] : section(doc, "actions")) ws.actions.emplace(name, action(ws, j, root / "actions" / name));
    for (const auto& [name, j] : section(doc, "xmods")) ws.xmods.emplace(name, xmod(ws, name, j, root / "xmods" / name));
    for (const auto& [name, j] : section(doc, "morphisms")) {
      ws.morphisms.emplace(name, morphism(ws, name, j, root / "morphisms" / name));
    }
    for (const auto& [name, j] : section(doc, "cims")) ws.cims.emplace(name, cim(ws, name, j, root / "cims" / name));
    if (doc.contains("options")) ws.options = options(doc["options"], root / "options");
    return ws;
  }

 private:
  [[noreturn]] void fail(const Path& p, const std::string& msg) const {
    const auto [l, c] = locate_pointer(text_, p.ptr);
    throw InputError(source_ + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + (p.ptr.empty() ? "/" : p.ptr) +
                     ": " + msg);
  }

  void keys(const json& j, const Path& p, std::initializer_list<const char*> allowed) const {
    if (!j.is_object()) fail(p, "expected an object");
    for (const auto& [k, v] : j.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) fail(p / k, "unknown key \"" + k + "\"");
    }
  }

  const json& required(const json& j, const Path& p, const char* key) const {
    if (!j.contains(key)) fail(p, std::string("missing \"") + key + "\"");
    return j[key];
  }

  std::vector<std::pair<std::string, json>> section(const json& doc, const char* key) const {
    std::vector<std::pair<std::string, json>> out;
    if (!doc.contains(key)) return out;
    const json& s = doc[key];
    if (!s.is_object()) fail(Path{} / key, "expected an object of named entries");
    for (const auto& [k, v] : s.items()) out.emplace_back(k, v);
    return out;
  }

  Residue integer(const json& j, const Path& p) const {
    if (!j.is_number_integer()) fail(p, "expected an integer");
    return j.get<Residue>();
  }

  std::string name_ref(const json& j, const Path& p) const {
    if (!j.is_string()) fail(p, "expected a name");
    return j.get<std::string>();
  }

  template <class Map>
  const typename Map::mapped_type& lookup(const Map& m, const json& j, const Path& p, const char* kind) const {
    const std::string name = name_ref(j, p);
    const auto it = m.find(name);
    if (it == m.end()) fail(p, std::string("unknown ") + kind + " '" + name + "'");
    return it->second;
  }

  Element element(const json& j, const Path& p, const FiniteModule& target) const {
    if (!j.is_array() || j.size() != target.rank()) {
      fail(p, "expected " + std::to_string(target.rank()) + " coefficients for " + describe(target));
    }
    std::vector<Residue> c;
    for (std::size_t l = 0; l < j.size(); ++l) c.push_back(integer(j[l], p / l));
    return target.reduce(std::move(c));
  }

  BilinearMap::Tensor tensor(const json& j, const Path& p, std::size_t rows, std::size_t cols,
                             const FiniteModule& target) const {
    if (!j.is_array() || j.size() != rows) fail(p, "expected " + std::to_string(rows) + " rows");
    BilinearMap::Tensor t(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!j[i].is_array() || j[i].size() != cols) fail(p / i, "expected " + std::to_string(cols) + " entries");
      for (std::size_t k = 0; k < cols; ++k) t[i].push_back(element(j[i][k], p / i / k, target));
    }
    return t;
  }

  void torsion(const BilinearMap& b, const Path& p) const {
    if (const auto v = b.torsion_violation()) {
      fail(p / (*v)[0] / (*v)[1] / (*v)[2],
           "torsion-incompatible tensor: gcd of the generator orders does not kill coordinate " +
               std::to_string((*v)[2]));
    }
  }

  Algebra algebra(const json& j, const Path& p) const {
    keys(j, p, {"orders", "mul"});
    const json& o = required(j, p, "orders");
    if (!o.is_array()) fail(p / "orders", "expected an array of orders");
    std::vector<Residue> orders;
    for (std::size_t i = 0; i < o.size(); ++i) {
      const Residue d = integer(o[i], p / "orders" / i);
      if (d < 2 || modulus_ % d != 0) fail(p / "orders" / i, "order must be a divisor of the modulus greater than 1");
      orders.push_back(d);
    }
    const FiniteModule carrier(modulus_, orders);
    Algebra a(carrier, tensor(required(j, p, "mul"), p / "mul", carrier.rank(), carrier.rank(), carrier));
    torsion(a.mul, p / "mul");
    return a;
  }

  AlgebraHom hom(const Workspace& ws, const json& j, const Path& p) const {
    keys(j, p, {"from", "to", "images"});
    const Algebra& from = lookup(ws.algebras, required(j, p, "from"), p / "from", "algebra");
    const Algebra& to = lookup(ws.algebras, required(j, p, "to"), p / "to", "algebra");
    const json& im = required(j, p, "images");
    if (!im.is_array() || im.size() != from.carrier.rank()) {
      fail(p / "images", "expected one image per generator (" + std::to_string(from.carrier.rank()) + ")");
    }
    std::vector<Element> images;
    for (std::size_t i = 0; i < im.size(); ++i) images.push_back(element(im[i], p / "images" / i, to.carrier));
    AlgebraHom h(from, to, std::move(images));
    if (const auto v = h.map.order_violation()) {
      fail(p / "images" / *v, "torsion-incompatible image: the generator order does not kill it");
    }
    return h;
  }

  AlgebraAction action(const Workspace& ws, const json& j, const Path& p) const {
    keys(j, p, {"actor", "acted", "tensor"});
    const Algebra& actor = lookup(ws.algebras, required(j, p, "actor"), p / "actor", "algebra");
    const Algebra& acted = lookup(ws.algebras, required(j, p, "acted"), p / "acted", "algebra");
    AlgebraAction a(actor, acted,
                    tensor(required(j, p, "tensor"), p / "tensor", actor.carrier.rank(), acted.carrier.rank(),
                           acted.carrier));
    torsion(a.tensor, p / "tensor");
    return a;
  }

  CrossedModule xmod(const Workspace& ws, const std::string& name, const json& j, const Path& p) const {
    keys(j, p, {"hom", "action"});
    const AlgebraHom& eta = lookup(ws.homs, required(j, p, "hom"), p / "hom", "hom");
    const AlgebraAction& act = lookup(ws.actions, required(j, p, "action"), p / "action", "action");
    if (!(act.actor == eta.codomain) || !(act.acted == eta.domain)) {
      fail(p / "action", "the action must be of the hom's codomain on its domain");
    }
    return CrossedModule{name, eta, act};
  }

  XModMorphism morphism(const Workspace& ws, const std::string& name, const json& j, const Path& p) const {
    keys(j, p, {"from", "to", "alpha1", "alpha2"});
    const CrossedModule& from = lookup(ws.xmods, required(j, p, "from"), p / "from", "crossed module");
    const CrossedModule& to = lookup(ws.xmods, required(j, p, "to"), p / "to", "crossed module");
    const AlgebraHom& a1 = lookup(ws.homs, required(j, p, "alpha1"), p / "alpha1", "hom");
    const AlgebraHom& a2 = lookup(ws.homs, required(j, p, "alpha2"), p / "alpha2", "hom");
    if (!(a1.domain == from.R()) || !(a1.codomain == to.R())) fail(p / "alpha1", "alpha1 must map R1 to R2");
    if (!(a2.domain == from.S()) || !(a2.codomain == to.S())) fail(p / "alpha2", "alpha2 must map S1 to S2");
    return XModMorphism{name, from, to, a1, a2};
  }

  CrossedIdealMap cim(const Workspace& ws, const std::string& name, const json& j, const Path& p) const {
    keys(j, p, {"morphism", "beta1", "beta2", "h", "check_s2_bilinearity"});
    CrossedIdealMap c;
    c.name = name;
    c.morphism = lookup(ws.morphisms, required(j, p, "morphism"), p / "morphism", "morphism");
    c.beta1 = lookup(ws.actions, required(j, p, "beta1"), p / "beta1", "action");
    c.beta2 = lookup(ws.actions, required(j, p, "beta2"), p / "beta2", "action");
    const CrossedModule& x1 = c.morphism.source;
    const CrossedModule& x2 = c.morphism.target;
    if (!(c.beta1.actor == x2.R()) || !(c.beta1.acted == x1.R())) fail(p / "beta1", "beta1 must be an action of R2 on R1");
    if (!(c.beta2.actor == x2.S()) || !(c.beta2.acted == x1.S())) fail(p / "beta2", "beta2 must be an action of S2 on S1");
    c.h = BilinearMap(x2.R().carrier, x1.S().carrier, x1.R().carrier,
                      tensor(required(j, p, "h"), p / "h", x2.R().carrier.rank(), x1.S().carrier.rank(),
                             x1.R().carrier));
    torsion(c.h, p / "h");
    if (j.contains("check_s2_bilinearity")) {
      if (!j["check_s2_bilinearity"].is_boolean()) fail(p / "check_s2_bilinearity", "expected true or false");
      c.check_s2_bilinearity = j["check_s2_bilinearity"].get<bool>();
    }
    return c;
  }

  std::size_t count(const json& j, const Path& p) const {
    const Residue v = integer(j, p);
    if (v < 0) fail(p, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }

  WorkspaceOptions options(const json& j, const Path& p) const {
    keys(j, p, {"levels", "bibar_levels", "seed", "policy", "perturb_budget"});
    WorkspaceOptions o;
    if (j.contains("levels")) o.levels = count(j["levels"], p / "levels");
    if (j.contains("bibar_levels")) {
      const json& b = j["bibar_levels"];
      if (!b.is_array() || b.size() != 2) fail(p / "bibar_levels", "expected [N, M]");
      o.bibar_levels = std::make_pair(count(b[0], p / "bibar_levels" / std::size_t{0}),
                                      count(b[1], p / "bibar_levels" / std::size_t{1}));
    }
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) fail(p / "seed", "expected an unsigned integer");
      o.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("policy")) {
      const std::string s = name_ref(j["policy"], p / "policy");
      if (s == "auto") {
        o.policy = PolicyMode::Auto;
      } else if (s == "exhaustive") {
        o.policy = PolicyMode::Exhaustive;
      } else if (s == "sample") {
        o.policy = PolicyMode::Sample;
      } else {
        fail(p / "policy", "policy must be auto, exhaustive or sample");
      }
    }
    if (j.contains("perturb_budget")) o.perturb_budget = count(j["perturb_budget"], p / "perturb_budget");
    return o;
  }

  std::string_view text_;
  std::string source_;
  Residue modulus_ = 2;
};

template <class Map>
const typename Map::mapped_type& named(const Map& m, const std::string& name, const char* kind) {
  const auto it = m.find(name);
  if (it == m.end()) throw InputError(std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

}  // namespace

const Algebra& Workspace::algebra(const std::string& name) const { return named(algebras, name, "algebra"); }
const CrossedModule& Workspace::xmod(const std::string& name) const { return named(xmods, name, "crossed module"); }
const XModMorphism& Workspace::morphism(const std::string& name) const { return named(morphisms, name, "morphism"); }
const CrossedIdealMap& Workspace::cim(const std::string& name) const { return named(cims, name, "crossed ideal map"); }

Workspace parse_workspace(std::string_view text, const std::string& source) { return Parser(text, source).run(); }

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open workspace");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str(), path.string());
}

}  // namespace xmodbar
