#pragma once

#include <string>

#include "mubforge/matrix.hpp"

namespace mubforge::json_io {

/// {"dim": d, "order": N, "scale_inv_sqrt_d": bool, "entries": [[e|null, ...], ...]}
std::string to_json(const PhaseMatrix& m, int indent = -1);
PhaseMatrix phase_matrix_from_json(const std::string& text);

/// {"dim": d, "entries": [[[re, im], ...], ...]}
std::string to_json(const CMatrix& m, int indent = -1);
CMatrix cmatrix_from_json(const std::string& text);

/// CSV with re,im columns, 15 significant digits; one matrix row per line.
std::string to_csv(const CMatrix& m);

/// Pretty form: order header plus q^e entries.
std::string to_pretty(const PhaseMatrix& m);

std::string format_complex(cdouble v);

}  // namespace mubforge::json_io
