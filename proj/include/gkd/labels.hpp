#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gkd {

using LabelId = std::uint32_t;

// Reserved label ids. They are allocated before any user label so that the
// dummy vertex/edge markers keep the same id in every run.
inline constexpr LabelId kDummyVertexLabel = 0;
inline constexpr LabelId kDummyEdgeLabel = 1;
inline constexpr LabelId kFirstUserLabel = 2;

// Fixed spellings used by the text formats.
inline constexpr const char* kDummyVertexSpelling = "__DUMMY_V__";
inline constexpr const char* kDummyEdgeSpelling = "__DUMMY_E__";

// A sorted, duplicate-free set of label ids. Small enough to keep as a flat
// vector; most sets hold a single label.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<LabelId> ids) {
    for (LabelId id : ids) insert(id);
  }

  static LabelSet single(LabelId id) {
    LabelSet s;
    s.ids_.push_back(id);
    return s;
  }

  void insert(LabelId id);
  void merge(const LabelSet& other);

  bool contains(LabelId id) const;
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<LabelId>& ids() const noexcept { return ids_; }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  friend auto operator<=>(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<LabelId> ids_;
};

// Run-scoped mapping between label text and label ids. The two reserved dummy
// spellings are always present. Label text must stay free of separators used
// by the text formats (whitespace and commas).
class LabelDictionary {
 public:
  LabelDictionary();

  // Returns the existing id or assigns the next free one.
  LabelId intern(const std::string& text);
  std::optional<LabelId> find(const std::string& text) const;
  const std::string& text(LabelId id) const;
  std::size_t size() const noexcept { return texts_.size(); }

 private:
  std::vector<std::string> texts_;
  std::unordered_map<std::string, LabelId> index_;
};

}  // namespace gkd
