#include "gkd/labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkd {

void LabelSet::insert(LabelId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

void LabelSet::merge(const LabelSet& other) {
  for (LabelId id : other.ids_) insert(id);
}

bool LabelSet::contains(LabelId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

LabelDictionary::LabelDictionary() {
  intern(kDummyVertexSpelling);
  intern(kDummyEdgeSpelling);
}

LabelId LabelDictionary::intern(const std::string& text) {
  if (auto it = index_.find(text); it != index_.end()) return it->second;
  if (text.empty()) throw std::invalid_argument("empty label text");
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw std::invalid_argument("label text contains a separator: '" + text + "'");
  }
  LabelId id = static_cast<LabelId>(texts_.size());
  texts_.push_back(text);
  index_.emplace(text, id);
  return id;
}

std::optional<LabelId> LabelDictionary::find(const std::string& text) const {
  if (auto it = index_.find(text); it != index_.end()) return it->second;
  return std::nullopt;
}

const std::string& LabelDictionary::text(LabelId id) const {
  if (id >= texts_.size()) throw std::out_of_range("unknown label id " + std::to_string(id));
  return texts_[id];
}

}  // namespace gkd
