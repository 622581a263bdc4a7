#include "wgame/fvector.hpp"

#include <stdexcept>

#include "wgame/error.hpp"

namespace wgame {

FVector::FVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("f-vector must have at least one entry");
  for (const auto& e : entries_)
    if (e < 0) throw std::invalid_argument("f-vector entries must be non-negative");
  while (entries_.size() > 1 && entries_.back() == 0) entries_.pop_back();
}

FVector::FVector(std::initializer_list<long long> entries)
    : FVector(std::vector<BigInt>(entries.begin(), entries.end())) {}

BigInt FVector::at(std::size_t i) const { return i < entries_.size() ? entries_[i] : BigInt(0); }

std::string FVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(entries_[i]);
  }
  return out;
}

FVector FVector::parse(std::string_view text) {
  std::vector<BigInt> entries;
  while (true) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    entries.push_back(parse_decimal(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return FVector(std::move(entries));
}

}  // namespace wgame
