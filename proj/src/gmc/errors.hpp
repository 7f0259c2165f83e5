#pragma once

#include <stdexcept>
#include <string>

namespace gmc {

enum class Errc {
  invalid_argument,
  dimension_mismatch,
  ordering_mismatch,
  not_symmetric,
  pairing_failure,
  domain_error,
  unphysical,
  not_unitary,
  nonzero_displacement,
  non_scalar_x,
  off_diagonal_coupling,
  not_commuting,
  not_codiagonalizable,
  unphysical_block,
  empty_blocks,
  negative_budget,
  param_out_of_range,
  spectrum_out_of_range,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gmc
