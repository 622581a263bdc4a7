#pragma once

#include <ostream>

#include <json.hpp>

#include "wgame/complex.hpp"

namespace wgame {

/// Faces text: `#` header lines with game, board and f-vector, then every
/// face in position notation grouped by size under `# size k` markers.
void write_faces(std::ostream& out, const LegalComplex& complex);

/// {board, weights, f_vector, vertices, faces}. Counts are decimal strings;
/// faces[k] lists the k-piece faces as arrays of indices into vertices.
nlohmann::json to_json(const LegalComplex& complex);

}  // namespace wgame
