#include "xmodbar/report.hpp"

#include <sstream>

#include "json.hpp"

namespace xmodbar {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Note: return "NOTE";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

const char* to_string(CheckClass c) {
  switch (c) {
    case CheckClass::Axiom: return "AXIOM";
    case CheckClass::Theorem: return "THEOREM";
    case CheckClass::Structural: return "STRUCTURAL";
  }
  return "?";
}

const char* to_string(PolicyMode m) {
  switch (m) {
    case PolicyMode::Auto: return "auto";
    case PolicyMode::Exhaustive: return "exhaustive";
    case PolicyMode::Sample: return "sample";
  }
  return "?";
}

Check Check::pass(std::string name, CheckClass klass, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.klass = klass;
  c.detail = std::move(detail);
  return c;
}

Check Check::fail(std::string name, CheckClass klass, std::string detail, std::optional<Witness> w) {
  Check c;
  c.name = std::move(name);
  c.status = Status::Fail;
  c.klass = klass;
  c.detail = std::move(detail);
  c.witness = std::move(w);
  return c;
}

Check Check::note(std::string name, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.status = Status::Note;
  c.detail = std::move(detail);
  return c;
}

Check Check::skip(std::string name, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.status = Status::Skip;
  c.detail = std::move(detail);
  return c;
}

Check Check::group(std::string name, CheckClass klass) {
  Check c;
  c.name = std::move(name);
  c.klass = klass;
  return c;
}

Check& Check::add(Check child) {
  children.push_back(std::move(child));
  return children.back();
}

Status Check::effective() const {
  if (status == Status::Fail) return Status::Fail;
  for (const auto& c : children) {
    if (c.effective() == Status::Fail) return Status::Fail;
  }
  return status;
}

bool Check::has_failure(CheckClass k) const {
  if (status == Status::Fail && klass == k) return true;
  for (const auto& c : children) {
    if (c.has_failure(k)) return true;
  }
  return false;
}

const Check* Check::find(std::string_view path) const {
  const Check* node = this;
  while (!path.empty()) {
    const auto cut = path.find('/');
    const std::string_view head = path.substr(0, cut);
    const Check* next = nullptr;
    for (const auto& c : node->children) {
      if (c.name == head) {
        next = &c;
        break;
      }
    }
    if (!next) return nullptr;
    node = next;
    path = cut == std::string_view::npos ? std::string_view{} : path.substr(cut + 1);
  }
  return node;
}

const Check* Check::find_named(std::string_view n) const {
  if (name == n) return this;
  for (const auto& c : children) {
    if (const Check* hit = c.find_named(n)) return hit;
  }
  return nullptr;
}

const Check* Check::first_failure() const {
  if (status == Status::Fail) return this;
  for (const auto& c : children) {
    if (const Check* hit = c.first_failure()) return hit;
  }
  return nullptr;
}

std::size_t Check::leaf_count() const {
  if (children.empty()) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

void set_class(Check& c, CheckClass klass) {
  c.klass = klass;
  for (auto& child : c.children) set_class(child, klass);
}

int Report::exit_code() const {
  if (root.has_failure(CheckClass::Structural)) return 3;
  if (root.has_failure(CheckClass::Theorem)) return 2;
  if (root.has_failure(CheckClass::Axiom)) return 1;
  return 0;
}

namespace {

std::string witness_text(const Witness& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (i) out << ", ";
    if (i < w.labels.size() && !w.labels[i].empty()) out << w.labels[i] << '=';
    out << to_string(w.values[i]);
  }
  out << ')';
  return out.str();
}

void text_node(const Check& c, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << '[' << to_string(c.effective()) << "] " << c.name;
  if (c.children.empty() && c.status != Status::Note && c.status != Status::Skip) out << " {" << to_string(c.klass) << '}';
  if (!c.coverage.empty()) out << " <" << c.coverage << '>';
  if (!c.detail.empty()) out << " - " << c.detail;
  if (c.witness) out << " witness " << witness_text(*c.witness);
  out << '\n';
  for (const auto& child : c.children) text_node(child, depth + 1, out);
}

nlohmann::ordered_json json_node(const Check& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["status"] = to_string(c.effective());
  j["class"] = to_string(c.klass);
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.coverage.empty()) j["coverage"] = c.coverage;
  if (c.witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.witness->values.size(); ++i) {
      nlohmann::ordered_json item;
      item["label"] = i < c.witness->labels.size() ? c.witness->labels[i] : std::string{};
      item["coeffs"] = c.witness->values[i].coeffs;
      w.push_back(std::move(item));
    }
    j["witness"] = std::move(w);
  }
  if (!c.children.empty()) {
    nlohmann::ordered_json kids = nlohmann::ordered_json::array();
    for (const auto& child : c.children) kids.push_back(json_node(child));
    j["children"] = std::move(kids);
  }
  return j;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << '\n';
  out << "policy: " << to_string(report.policy.mode) << " (exhaustive <= " << report.policy.exhaustive_limit
      << ", samples " << report.policy.sample_count << ", seed " << report.policy.seed << ")\n";
  text_node(report.root, 0, out);
  out << "exit: " << report.exit_code() << '\n';
  return out.str();
}

std::string render_json(const Report& report, std::string_view artifact_json) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["policy"] = {{"mode", to_string(report.policy.mode)},
                 {"exhaustive_limit", report.policy.exhaustive_limit},
                 {"sample_count", report.policy.sample_count},
                 {"seed", report.policy.seed}};
  j["status"] = to_string(report.root.effective());
  j["exit_code"] = report.exit_code();
  j["report"] = json_node(report.root);
  if (!artifact_json.empty()) j["artifact"] = nlohmann::ordered_json::parse(artifact_json);
  return j.dump(2) + "\n";
}

}  // namespace xmodbar
