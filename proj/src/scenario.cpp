#include "rolling/scenario.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <Eigen/Cholesky>
#include <toml.hpp>

namespace rolling {

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const toml::node& at, const std::string& msg) const {
    fail_line(at.source().begin.line, msg);
  }

  [[noreturn]] void fail_line(std::size_t line, const std::string& msg) const {
    throw RollingError(ErrorKind::ConfigError, source_ + ":" + std::to_string(line) + ": " + msg);
  }

  const toml::table& table(const toml::table& parent, const std::string& key,
                           const std::string& path) const {
    const toml::node* node = parent.get(key);
    if (!node) fail_line(parent.source().begin.line, "missing section [" + path + "]");
    const toml::table* t = node->as_table();
    if (!t) fail(*node, path + " must be a table");
    return *t;
  }

  void allow_keys(const toml::table& t, const std::string& path,
                  const std::set<std::string>& allowed) const {
    for (const auto& [key, node] : t) {
      if (!allowed.contains(std::string(key.str()))) {
        fail(node, "unknown key '" + path + "." + std::string(key.str()) + "'");
      }
    }
  }

  double number(const toml::table& t, const std::string& key, const std::string& path,
                std::optional<double> fallback = std::nullopt) const {
    const toml::node* node = t.get(key);
    if (!node) {
      if (fallback) return *fallback;
      fail_line(t.source().begin.line, "missing key '" + path + "." + key + "'");
    }
    auto v = node->value<double>();
    if (!v || !node->is_number()) fail(*node, path + "." + key + " must be a number");
    return *v;
  }

  bool boolean(const toml::table& t, const std::string& key, const std::string& path,
               bool fallback) const {
    const toml::node* node = t.get(key);
    if (!node) return fallback;
    auto v = node->value<bool>();
    if (!v) fail(*node, path + "." + key + " must be true or false");
    return *v;
  }

  std::string string(const toml::table& t, const std::string& key, const std::string& path) const {
    const toml::node* node = t.get(key);
    if (!node) fail_line(t.source().begin.line, "missing key '" + path + "." + key + "'");
    auto v = node->value<std::string>();
    if (!v) fail(*node, path + "." + key + " must be a string");
    return *v;
  }

  std::vector<double> numbers(const toml::node& node, const std::string& what,
                              std::size_t expected) const {
    const toml::array* arr = node.as_array();
    if (!arr || arr->size() != expected) {
      fail(node, what + " must be an array of " + std::to_string(expected) + " numbers");
    }
    std::vector<double> out;
    for (const auto& el : *arr) {
      auto v = el.value<double>();
      if (!v || !el.is_number()) fail(el, what + " must contain only numbers");
      out.push_back(*v);
    }
    return out;
  }

  std::vector<double> numbers(const toml::table& t, const std::string& key,
                              const std::string& path, std::size_t expected) const {
    const toml::node* node = t.get(key);
    if (!node) fail_line(t.source().begin.line, "missing key '" + path + "." + key + "'");
    return numbers(*node, path + "." + key, expected);
  }

  const toml::node* find(const toml::table& t, const std::string& key) const { return t.get(key); }

 private:
  std::string source_;
};

int orientation_of(const Reader& r, const toml::table& t, const std::string& path, int fallback) {
  const toml::node* node = t.get("orientation");
  if (!node) return fallback;
  auto v = node->value<double>();
  if (!v || (*v != 1.0 && *v != -1.0)) r.fail(*node, path + ".orientation must be 1 or -1");
  return static_cast<int>(*v);
}

SurfaceChart read_surface(const Reader& r, const toml::table& t, const std::string& path,
                          int default_orientation, const std::set<std::string>& extra_keys) {
  const std::string name = r.string(t, "name", path);
  const int orientation = orientation_of(r, t, path, default_orientation);
  ChartParams params;
  std::map<std::string, const toml::node*> param_nodes;
  const toml::node* domain_node = nullptr;
  for (const auto& [key_view, node] : t) {
    const std::string key(key_view.str());
    if (key == "name" || key == "orientation" || extra_keys.contains(key)) continue;
    if (key == "domain") {
      domain_node = &node;
    } else if (key == "center") {
      const auto c = r.numbers(node, path + ".center", 3);
      param_nodes["center"] = &node;
      params["center.x"] = c[0];
      params["center.y"] = c[1];
      params["center.z"] = c[2];
    } else {
      auto v = node.value<double>();
      if (!v || !node.is_number()) r.fail(node, path + "." + key + " must be a number");
      params[key] = *v;
      param_nodes[key] = &node;
    }
  }
  try {
    SurfaceChart chart = make_chart(name, params, orientation);
    if (domain_node) {
      const auto d = r.numbers(*domain_node, path + ".domain", 4);
      if (!(d[0] < d[1] && d[2] < d[3])) {
        r.fail(*domain_node, path + ".domain must be [y1min, y1max, y2min, y2max]");
      }
      chart = chart.with_domain(ChartDomain{Vec2(d[0], d[2]), Vec2(d[1], d[3])});
    }
    return chart;
  } catch (const RollingError& e) {
    if (e.kind() != ErrorKind::ConfigError) throw;
    // make_chart does not know about lines: point at the parameter it names,
    // or at the section.
    const std::string msg = std::string(e.what()).substr(std::string("ConfigError: ").size());
    for (const auto& [key, node] : param_nodes) {
      if (msg.find("'" + key) != std::string::npos) r.fail(*node, path + ": " + msg);
    }
    r.fail(t, path + ": " + msg);
  }
}

Mat3 read_inertia(const Reader& r, const toml::table& body) {
  const toml::node* node = body.get("inertia");
  if (!node) r.fail(body, "missing key 'body.inertia'");
  const toml::array* arr = node->as_array();
  if (!arr || arr->size() != 3) {
    r.fail(*node, "body.inertia must be 3 principal values or a 3x3 array");
  }
  Mat3 I = Mat3::Zero();
  if (arr->get(0)->is_array()) {
    for (int i = 0; i < 3; ++i) {
      const auto row = r.numbers(*arr->get(static_cast<std::size_t>(i)), "body.inertia row", 3);
      for (int j = 0; j < 3; ++j) I(i, j) = row[static_cast<std::size_t>(j)];
    }
    if ((I - I.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + I.cwiseAbs().maxCoeff())) {
      r.fail(*node, "body.inertia must be symmetric");
    }
  } else {
    const auto d = r.numbers(*node, "body.inertia", 3);
    I = Vec3(d[0], d[1], d[2]).asDiagonal();
  }
  Eigen::LLT<Mat3> llt(I);
  if (llt.info() != Eigen::Success) r.fail(*node, "body.inertia must be positive definite");
  return I;
}

}  // namespace

FullState Scenario::initial_full_state() const {
  return make_full_state(scene, yM, yH, theta, omega);
}

Scenario parse_scenario(std::string_view text, const std::string& source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw RollingError(ErrorKind::ConfigError,
                       source + ":" + std::to_string(e.source().begin.line) + ": " +
                           std::string(e.description()));
  }
  const Reader r(source);
  r.allow_keys(root, "", {"body", "world", "initial", "integrator"});

  const toml::table& body_t = r.table(root, "body", "body");
  r.allow_keys(body_t, "body", {"mass", "inertia", "gravity", "surface"});
  const double mass = r.number(body_t, "mass", "body");
  if (!(mass > 0.0)) r.fail(*body_t.get("mass"), "body.mass must be positive");
  const double gravity = r.number(body_t, "gravity", "body", 9.81);
  if (!(gravity >= 0.0)) r.fail(*body_t.get("gravity"), "body.gravity must be non-negative");
  const Mat3 inertia = read_inertia(r, body_t);
  const SurfaceChart body_chart =
      read_surface(r, r.table(body_t, "surface", "body.surface"), "body.surface", 1, {});

  const toml::table& world_t = r.table(root, "world", "world");
  const SurfaceChart world_chart = read_surface(r, world_t, "world", -1, {});

  const toml::table& init_t = r.table(root, "initial", "initial");
  r.allow_keys(init_t, "initial", {"yM", "yH", "theta", "omega"});
  const auto yM = r.numbers(init_t, "yM", "initial", 2);
  const auto yH = r.numbers(init_t, "yH", "initial", 2);
  const auto omega = r.numbers(init_t, "omega", "initial", 3);

  const toml::table& int_t = r.table(root, "integrator", "integrator");
  r.allow_keys(int_t, "integrator",
               {"h", "T", "sample_stride", "project_rotation", "project_contact",
                "lambda_cond_max"});

  Scenario sc{source, Scene{RigidBody(mass, inertia, body_chart, gravity), world_chart}, {}, {}, 0.0, {}, {}};
  sc.yM = Vec2(yM[0], yM[1]);
  sc.yH = Vec2(yH[0], yH[1]);
  sc.theta = r.number(init_t, "theta", "initial", 0.0);
  sc.omega = Vec3(omega[0], omega[1], omega[2]);
  if (!body_chart.contains(sc.yM)) r.fail(*init_t.get("yM"), "initial.yM is outside the body chart domain");
  if (!world_chart.contains(sc.yH)) r.fail(*init_t.get("yH"), "initial.yH is outside the world chart domain");

  IntegratorConfig& cfg = sc.integrator;
  cfg.h = r.number(int_t, "h", "integrator");
  cfg.T = r.number(int_t, "T", "integrator");
  const double stride = r.number(int_t, "sample_stride", "integrator", 1.0);
  if (stride != static_cast<double>(static_cast<int>(stride))) {
    r.fail(*int_t.get("sample_stride"), "integrator.sample_stride must be an integer");
  }
  cfg.sample_stride = static_cast<int>(stride);
  cfg.project_rotation = r.boolean(int_t, "project_rotation", "integrator", true);
  cfg.project_contact = r.boolean(int_t, "project_contact", "integrator", true);
  cfg.lambda_cond_max = r.number(int_t, "lambda_cond_max", "integrator", 1e8);
  try {
    cfg.validate();
  } catch (const RollingError& e) {
    r.fail(int_t, std::string(e.what()).substr(std::string("ConfigError: ").size()));
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw RollingError(ErrorKind::ConfigError, path.string() + ":0: cannot open scenario file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

}  // namespace rolling
