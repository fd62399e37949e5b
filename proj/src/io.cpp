#include "kinkwave/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kinkwave/errors.hpp"

namespace kinkwave {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Shortest text that reads back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& token, int line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size()) {
    throw Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ": malformed number '" + token + "'");
  }
  return v;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_profile_csv(const Profile& profile, double width) {
  const auto& m = profile.meta;
  std::ostringstream os;
  os << "# model: " << m.model << "\n# params:";
  for (const auto& [k, v] : m.parameters) os << ' ' << k << '=' << shortest(v);
  os << "\n# nu: " << shortest(m.nu) << "\n# c: " << shortest(m.c)
     << "\n# tminus: " << shortest(m.boundary.minus)
     << "\n# tplus: " << shortest(m.boundary.plus) << "\n# method: " << m.method
     << "\n# rel_tol: " << fmt("%.3g", m.rel_tol) << "\n# abs_tol: " << fmt("%.3g", m.abs_tol)
     << "\n";
  if (width > 0.0) os << "# width: " << fmt("%.12g", width) << "\n";
  os << "xi,T,gT\n";
  for (const auto& s : profile.samples) {
    os << fmt("%.12f", s.xi) << ',' << fmt("%.12g", s.stress) << ',' << fmt("%.12g", s.strain)
       << '\n';
  }
  return os.str();
}

void write_profile_csv(const Profile& profile, const std::string& path, double width) {
  write_text(path, format_profile_csv(profile, width));
}

Profile parse_profile_csv(const std::string& text) {
  Profile p;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      const std::string key = trim(line.substr(1, colon - 1));
      const std::string value = trim(line.substr(colon + 1));
      if (key == "model") p.meta.model = value;
      else if (key == "method") p.meta.method = value;
      else if (key == "nu") p.meta.nu = to_double(value, line_no);
      else if (key == "c") p.meta.c = to_double(value, line_no);
      else if (key == "tminus") p.meta.boundary.minus = to_double(value, line_no);
      else if (key == "tplus") p.meta.boundary.plus = to_double(value, line_no);
      else if (key == "rel_tol") p.meta.rel_tol = to_double(value, line_no);
      else if (key == "abs_tol") p.meta.abs_tol = to_double(value, line_no);
      else if (key == "params") {
        std::istringstream ps(value);
        std::string item;
        while (ps >> item) {
          const auto eq = item.find('=');
          if (eq == std::string::npos) continue;
          p.meta.parameters.emplace_back(item.substr(0, eq),
                                         to_double(item.substr(eq + 1), line_no));
        }
      }
      continue;
    }
    if (!header) {
      if (line != "xi,T,gT") {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                          ": expected header 'xi,T,gT'");
      }
      header = true;
      continue;
    }
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 3 columns");
    }
    p.samples.push_back({to_double(trim(a), line_no), to_double(trim(b), line_no),
                         to_double(trim(c), line_no)});
  }
  if (!header) throw Error(ErrorKind::Parse, "missing header 'xi,T,gT'");
  return p;
}

Profile read_profile_csv(const std::string& path) { return parse_profile_csv(read_text(path)); }

std::string format_plot_script(std::span<const Profile> profiles,
                               std::span<const std::string> csv_paths) {
  if (profiles.size() != csv_paths.size()) {
    throw Error(ErrorKind::InvalidParameter, "one CSV path per profile is required");
  }
  if (profiles.empty()) throw Error(ErrorKind::InvalidParameter, "no profiles to plot");
  const std::string& model = profiles.front().meta.model;
  for (const auto& p : profiles) {
    if (p.meta.model != model) {
      throw Error(ErrorKind::InvalidParameter,
                  "cannot overlay profiles of different models (" + model + ", " + p.meta.model +
                      ")");
    }
  }
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set multiplot layout 1,2 title '" << model << "'\n";
  const auto plot = [&](const char* ylabel, int column) {
    os << "set xlabel 'xi'\nset ylabel '" << ylabel << "'\nplot ";
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      os << (i ? ", \\\n     " : "") << "'" << csv_paths[i] << "' using 1:" << column
         << " with lines title 'nu=" << fmt("%g", profiles[i].meta.nu) << "'";
    }
    os << "\n";
  };
  plot("T", 2);
  plot("g(T)", 3);
  os << "unset multiplot\n";
  return os.str();
}

void emit_plot_script(std::span<const Profile> profiles, std::span<const std::string> csv_paths,
                      const std::string& path) {
  write_text(path, format_plot_script(profiles, csv_paths));
}

}  // namespace kinkwave
