#include "wgame/export.hpp"

namespace wgame {

void write_faces(std::ostream& out, const LegalComplex& complex) {
  out << "# game: " << complex.game().name() << '\n';
  out << "# board: " << complex.board().spec() << '\n';
  out << "# f-vector: " << complex.f_vector().to_string() << '\n';
  for (std::size_t size = 0; size < complex.level_count(); ++size) {
    out << "# size " << size << '\n';
    for (std::size_t i = 0; i < complex.face_count(size); ++i)
      out << to_string(complex.position(size, i)) << '\n';
  }
}

nlohmann::json to_json(const LegalComplex& complex) {
  nlohmann::json doc;
  doc["board"] = complex.board().spec();
  doc["weights"] = {complex.game().left_weight(), complex.game().right_weight()};
  auto fv = nlohmann::json::array();
  const FVector counts = complex.f_vector();
  for (const auto& entry : counts.entries()) fv.push_back(to_decimal(entry));
  doc["f_vector"] = std::move(fv);
  auto vertices = nlohmann::json::array();
  for (const auto& piece : complex.vertices()) vertices.push_back(to_string(piece));
  doc["vertices"] = std::move(vertices);
  auto faces = nlohmann::json::array();
  for (std::size_t size = 0; size < complex.level_count(); ++size) {
    auto level = nlohmann::json::array();
    for (std::size_t i = 0; i < complex.face_count(size); ++i) {
      auto face = complex.face(size, i);
      level.push_back(nlohmann::json(std::vector<PieceIndex>(face.begin(), face.end())));
    }
    faces.push_back(std::move(level));
  }
  doc["faces"] = std::move(faces);
  return doc;
}

}  // namespace wgame
