#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geophase/circuits.hpp"
#include "geophase/evolution.hpp"

namespace geophase::io {

inline constexpr int kSpecVersion = 1;

enum class Format { CSV, JSON };

Format format_from_string(const std::string& name);

/// printf("%.17g"): round-trip exact for double.
std::string format_double(double x);

/// `t,re1,im1,re2,im2` for Complex2, `t,v1,v2,v3,v4` for Real4, `t,v1,v2` for SecondOrder2.
std::string csv_header(const Trajectory& t);

void write_trajectory_csv(const Trajectory& t, std::ostream& out);
nlohmann::json trajectory_to_json(const Trajectory& t);
/// Throws SpecParseError on a malformed document.
Trajectory trajectory_from_json(const nlohmann::json& j);

/// Throws InvalidParameter for an empty trajectory and IOError when the file cannot be written.
void export_trajectory(const Trajectory& t, Format fmt, const std::string& path);
Trajectory import_trajectory_json(const std::string& path);

/// `gamma,re1,re2,re3,re4,im1,im2,im3,im4,classification`, modes divided by omega0.
void write_sweep_csv(const std::vector<SpectrumPoint>& sweep, std::ostream& out);
nlohmann::json sweep_to_json(const std::vector<SpectrumPoint>& sweep);

/// Writes text to path, or to stdout when path is empty or "-". Throws IOError.
void write_text(const std::string& path, const std::string& text);

}  // namespace geophase::io
