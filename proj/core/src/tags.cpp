#include "seqlab/tags.hpp"

#include "seqlab/errors.hpp"

namespace seqlab {

TagScheme::TagScheme(std::vector<std::string> classes)
    : classes_(std::move(classes)) {
  if (classes_.empty()) {
    throw ConfigError("TagScheme: at least one entity class is required");
  }
}

TagScheme TagScheme::chemdner() {
  return TagScheme({"TRIVIAL", "SYSTEMATIC", "ABBREVIATION", "FORMULA",
                    "FAMILY", "IDENTIFIER", "MULTIPLE", "NO CLASS"});
}

TagScheme::Prefix TagScheme::prefix_of(int tag) const {
  if (tag == 0) return Prefix::O;
  switch ((tag - 1) % 3) {
    case 0:
      return Prefix::B;
    case 1:
      return Prefix::I;
    default:
      return Prefix::E;
  }
}

int TagScheme::class_of(int tag) const {
  if (tag == 0) return -1;
  return (tag - 1) / 3;
}

std::optional<int> TagScheme::class_id(const std::string& name) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string TagScheme::tag_name(int tag) const {
  if (tag < 0 || static_cast<std::size_t>(tag) >= num_tags()) {
    throw IndexError("TagScheme: tag id " + std::to_string(tag) +
                     " outside inventory of size " + std::to_string(num_tags()));
  }
  if (tag == 0) return "O";
  const std::string& cls = classes_[static_cast<std::size_t>(class_of(tag))];
  switch (prefix_of(tag)) {
    case Prefix::B:
      return "B-" + cls;
    case Prefix::I:
      return "I-" + cls;
    default:
      return "E-" + cls;
  }
}

std::optional<int> TagScheme::tag_id(const std::string& name) const {
  if (name == "O") return 0;
  if (name.size() < 3 || name[1] != '-') return std::nullopt;
  auto cid = class_id(name.substr(2));
  if (!cid) return std::nullopt;
  switch (name[0]) {
    case 'B':
      return begin_tag(*cid);
    case 'I':
      return inside_tag(*cid);
    case 'E':
      return end_tag(*cid);
    default:
      return std::nullopt;
  }
}

}  // namespace seqlab
