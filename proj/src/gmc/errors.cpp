#include "gmc/errors.hpp"

namespace gmc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::ordering_mismatch: return "ordering_mismatch";
    case Errc::not_symmetric: return "not_symmetric";
    case Errc::pairing_failure: return "pairing_failure";
    case Errc::domain_error: return "domain_error";
    case Errc::unphysical: return "unphysical";
    case Errc::not_unitary: return "not_unitary";
    case Errc::nonzero_displacement: return "nonzero_displacement";
    case Errc::non_scalar_x: return "non_scalar_x";
    case Errc::off_diagonal_coupling: return "off_diagonal_coupling";
    case Errc::not_commuting: return "not_commuting";
    case Errc::not_codiagonalizable: return "not_codiagonalizable";
    case Errc::unphysical_block: return "unphysical_block";
    case Errc::empty_blocks: return "empty_blocks";
    case Errc::negative_budget: return "negative_budget";
    case Errc::param_out_of_range: return "param_out_of_range";
    case Errc::spectrum_out_of_range: return "spectrum_out_of_range";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace gmc
