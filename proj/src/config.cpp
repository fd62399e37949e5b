#include "kinkwave/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "kinkwave/errors.hpp"

namespace kinkwave {

const char* to_string(ProfileMethod method) {
  switch (method) {
    case ProfileMethod::ClosedForm: return "closed-form";
    case ProfileMethod::Ode: return "ode";
    case ProfileMethod::Quadrature: return "quadrature";
  }
  return "ode";
}

ProfileMethod parse_method(std::string_view text) {
  if (text == "closed-form") return ProfileMethod::ClosedForm;
  if (text == "ode") return ProfileMethod::Ode;
  if (text == "quadrature") return ProfileMethod::Quadrature;
  throw Error(ErrorKind::Parse, "unknown method '" + std::string(text) +
                                    "' (expected closed-form, ode or quadrature)");
}

WaveProblem RunConfig::problem(double nu_value) const {
  const ConstitutiveModel m = model();
  const int sign = c_sign ? *c_sign : preferred_c_sign(m, boundary, nu_value);
  return WaveProblem{m, nu_value, boundary, sign};
}

IntegratorConfig RunConfig::integrator(const ReducedField& field) const {
  IntegratorConfig out = default_config(field);
  out.rel_tol = rel_tol;
  out.abs_tol = abs_tol;
  out.equilibrium_cutoff = equilibrium_cutoff;
  out.samples = samples;
  if (max_step) out.max_step = *max_step;
  if (xi_min) out.xi_min = *xi_min;
  if (xi_max) out.xi_max = *xi_max;
  validate(out);
  return out;
}

namespace {

struct Value {
  enum class Type { Number, String, Array, Table } type = Type::Number;
  double number = 0.0;
  std::string text;
  std::vector<double> array;
  std::vector<std::pair<std::string, double>> table;
};

class LineParser {
 public:
  LineParser(std::string_view text, int line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_) + ": " + message);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string key() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a key");
    return std::string(s_.substr(start, pos_ - start));
  }

  double number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '.' || s_[pos_] == '-' || s_[pos_] == '+'))
      ++pos_;
    const std::string token(s_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(v)) {
      fail("malformed number '" + token + "'");
    }
    return v;
  }

  std::string string() {
    expect('"');
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
      out.push_back(s_[pos_++]);
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  Value value() {
    skip_space();
    Value v;
    if (pos_ >= s_.size()) fail("missing value");
    if (s_[pos_] == '"') {
      v.type = Value::Type::String;
      v.text = string();
    } else if (consume('[')) {
      v.type = Value::Type::Array;
      if (!consume(']')) {
        do v.array.push_back(number());
        while (consume(','));
        expect(']');
      }
    } else if (consume('{')) {
      v.type = Value::Type::Table;
      if (!consume('}')) {
        do {
          std::string k = key();
          expect('=');
          v.table.emplace_back(std::move(k), number());
        } while (consume(','));
        expect('}');
      }
    } else {
      v.number = number();
    }
    return v;
  }

  int line() const { return line_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

double as_number(const LineParser& p, const Value& v, const std::string& key) {
  if (v.type != Value::Type::Number) p.fail("'" + key + "' expects a number");
  return v.number;
}

std::string as_string(const LineParser& p, const Value& v, const std::string& key) {
  if (v.type != Value::Type::String) p.fail("'" + key + "' expects a quoted string");
  return v.text;
}

int as_int(const LineParser& p, const Value& v, const std::string& key) {
  const double x = as_number(p, v, key);
  if (x != std::floor(x) || std::abs(x) > 1e9) p.fail("'" + key + "' expects an integer");
  return static_cast<int>(x);
}

std::string number_text(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::optional<std::string> name;
  std::vector<std::pair<std::string, int>> param_lines;
  std::string section = "model";

  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    LineParser p(text.substr(start, end - start), line_no);
    start = end + 1;

    if (p.at_end()) continue;
    if (p.consume('[')) {
      section = p.key();
      p.expect(']');
      if (section != "model" && section != "wave" && section != "numeric" && section != "output") {
        p.fail("unknown section [" + section + "]");
      }
      if (!p.at_end()) p.fail("trailing characters after section header");
      continue;
    }
    const std::string key = p.key();
    p.expect('=');
    const Value v = p.value();
    if (!p.at_end()) p.fail("trailing characters after value of '" + key + "'");

    if (section == "model") {
      if (key == "model" || key == "name") {
        name = as_string(p, v, key);
      } else if (key == "params") {
        if (v.type != Value::Type::Table) p.fail("'params' expects an inline table { k = v }");
        for (const auto& [k, x] : v.table) {
          config.params[k] = x;
          param_lines.emplace_back(k, p.line());
        }
      } else if (v.type == Value::Type::Number) {
        config.params[key] = v.number;
        param_lines.emplace_back(key, p.line());
      } else {
        p.fail("unknown key '" + key + "' in [model]");
      }
    } else if (section == "wave") {
      if (key == "nu") {
        if (v.type == Value::Type::Array) {
          if (v.array.empty()) p.fail("'nu' list is empty");
          config.nu = v.array;
        } else {
          config.nu = {as_number(p, v, key)};
        }
        for (double x : config.nu) {
          if (!(x >= 0.0)) p.fail("'nu' must be nonnegative");
        }
      } else if (key == "tminus") {
        config.boundary.minus = as_number(p, v, key);
      } else if (key == "tplus") {
        config.boundary.plus = as_number(p, v, key);
      } else if (key == "c_sign") {
        const int s = as_int(p, v, key);
        if (s != 1 && s != -1) p.fail("'c_sign' must be 1 or -1");
        config.c_sign = s;
      } else {
        p.fail("unknown key '" + key + "' in [wave]");
      }
    } else if (section == "numeric") {
      if (key == "method") config.method = parse_method(as_string(p, v, key));
      else if (key == "rel_tol") config.rel_tol = as_number(p, v, key);
      else if (key == "abs_tol") config.abs_tol = as_number(p, v, key);
      else if (key == "max_step") config.max_step = as_number(p, v, key);
      else if (key == "xi_min") config.xi_min = as_number(p, v, key);
      else if (key == "xi_max") config.xi_max = as_number(p, v, key);
      else if (key == "equilibrium_cutoff") config.equilibrium_cutoff = as_number(p, v, key);
      else if (key == "samples") config.samples = as_int(p, v, key);
      else p.fail("unknown key '" + key + "' in [numeric]");
    } else {
      if (key == "profile") config.profile_path = as_string(p, v, key);
      else if (key == "out_dir") config.out_dir = as_string(p, v, key);
      else if (key == "report") config.report_path = as_string(p, v, key);
      else p.fail("unknown key '" + key + "' in [output]");
    }
  }

  if (!name) throw Error(ErrorKind::Parse, "missing model name ([model] model = \"...\")");
  config.model_name = *name;
  const auto& known = catalog_names();
  if (std::find(known.begin(), known.end(), *name) == known.end()) {
    throw Error(ErrorKind::Parse, "unknown model '" + *name + "'");
  }
  const auto allowed = parameter_names(*name);
  for (const auto& [k, line] : param_lines) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": unknown key '" + k +
                                        "' for model " + *name);
    }
  }
  config.model();  // range checks name the offending field
  return config;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "[model]\nmodel = " << quoted(c.model_name) << "\nparams = {";
  bool first = true;
  for (const auto& [k, v] : c.params) {
    os << (first ? " " : ", ") << k << " = " << number_text(v);
    first = false;
  }
  os << (first ? "}" : " }") << "\n\n[wave]\nnu = [";
  for (std::size_t i = 0; i < c.nu.size(); ++i) os << (i ? ", " : "") << number_text(c.nu[i]);
  os << "]\ntminus = " << number_text(c.boundary.minus)
     << "\ntplus = " << number_text(c.boundary.plus) << "\n";
  if (c.c_sign) os << "c_sign = " << *c.c_sign << "\n";
  os << "\n[numeric]\nmethod = " << quoted(to_string(c.method))
     << "\nrel_tol = " << number_text(c.rel_tol) << "\nabs_tol = " << number_text(c.abs_tol)
     << "\n";
  if (c.max_step) os << "max_step = " << number_text(*c.max_step) << "\n";
  if (c.xi_min) os << "xi_min = " << number_text(*c.xi_min) << "\n";
  if (c.xi_max) os << "xi_max = " << number_text(*c.xi_max) << "\n";
  os << "equilibrium_cutoff = " << number_text(c.equilibrium_cutoff) << "\nsamples = " << c.samples
     << "\n\n[output]\nprofile = " << quoted(c.profile_path) << "\nout_dir = " << quoted(c.out_dir)
     << "\n";
  if (!c.report_path.empty()) os << "report = " << quoted(c.report_path) << "\n";
  return os.str();
}

void apply_model_spec(RunConfig& config, std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  std::map<std::string, double> params;
  if (colon != std::string_view::npos) {
    std::string rest(spec.substr(colon + 1));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::Parse, "model parameter '" + item + "' is not key=value");
      }
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      char* end = nullptr;
      const double v = std::strtod(value.c_str(), &end);
      if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::Parse, "malformed number '" + value + "' for " + key);
      }
      params[key] = v;
    }
  }
  make_model(name, params);  // validates name, keys and ranges
  config.model_name = name;
  config.params = std::move(params);
}

}  // namespace kinkwave
