#pragma once

#include <stdexcept>
#include <string>

namespace dbraid {

enum class errc {
  self_loop,
  duplicate_edge,
  non_positive_degree,
  index_out_of_range,
  dimension_mismatch,
  not_connected,
  context_mismatch,
  syntax_error,
  unknown_edge,
  not_central,
  not_allowable,
  wrong_scheme,
  not_simple,
  not_smooth,
  incidence_geometry_mismatch,
  malformed_input,
  vertex_not_found,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

  // structural defects (bad mathematical object) vs. bad input syntax;
  // the CLI maps these to distinct exit codes
  bool structural() const {
    switch (code_) {
      case errc::not_simple:
      case errc::not_smooth:
      case errc::incidence_geometry_mismatch:
      case errc::vertex_not_found:
      case errc::not_connected:
        return true;
      default:
        return false;
    }
  }

private:
  errc code_;
};

}  // namespace dbraid
