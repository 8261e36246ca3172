#include "superloop/error.hpp"

namespace superloop {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case errc::degenerate_pivot: return "DEGENERATE_PIVOT";
    case errc::no_identity: return "NO_IDENTITY";
    case errc::degree_out_of_range: return "DEGREE_OUT_OF_RANGE";
    case errc::degree_mismatch: return "DEGREE_MISMATCH";
    case errc::datum_mismatch: return "DATUM_MISMATCH";
    case errc::unsupported: return "UNSUPPORTED";
    case errc::truncation_uncertain: return "TRUNCATION_UNCERTAIN";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::invalid_argument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace superloop
