#pragma once

#include <span>
#include <string>

#include "kinkwave/profile_numeric.hpp"

namespace kinkwave {

/// Profile as CSV: `#` metadata lines, the header `xi,T,gT`, then one row
/// per sample (xi fixed with 12 decimals, T and g(T) with 12 significant
/// digits).
std::string format_profile_csv(const Profile& profile, double width = 0.0);
void write_profile_csv(const Profile& profile, const std::string& path, double width = 0.0);

/// Reads the rows (and whatever metadata it recognizes) back.
Profile parse_profile_csv(const std::string& text);
Profile read_profile_csv(const std::string& path);

/// gnuplot script drawing T(xi) and g(T(xi)) side by side, one curve per
/// CSV, labelled by nu. All profiles must share a model.
std::string format_plot_script(std::span<const Profile> profiles,
                               std::span<const std::string> csv_paths);
void emit_plot_script(std::span<const Profile> profiles, std::span<const std::string> csv_paths,
                      const std::string& path);

}  // namespace kinkwave
