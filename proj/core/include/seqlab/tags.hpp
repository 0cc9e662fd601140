#ifndef SEQLAB_TAGS_HPP
#define SEQLAB_TAGS_HPP

#include <optional>
#include <string>
#include <vector>

namespace seqlab {

// Positional-prefix tag scheme over a fixed set of entity classes:
// one O tag plus B-/I-/E- per class (inventory size 3C + 1).
// Single-token entities use a solitary B- tag; there is no S- tag.
class TagScheme {
 public:
  enum class Prefix { O, B, I, E };

  explicit TagScheme(std::vector<std::string> classes);

  // The eight CHEMDNER entity classes.
  static TagScheme chemdner();

  std::size_t num_classes() const { return classes_.size(); }
  std::size_t num_tags() const { return 3 * classes_.size() + 1; }

  int outside() const { return 0; }
  int begin_tag(int class_id) const { return 1 + 3 * class_id; }
  int inside_tag(int class_id) const { return 2 + 3 * class_id; }
  int end_tag(int class_id) const { return 3 + 3 * class_id; }

  Prefix prefix_of(int tag) const;
  // Class of a B/I/E tag; -1 for O.
  int class_of(int tag) const;

  const std::string& class_name(int class_id) const { return classes_[class_id]; }
  std::optional<int> class_id(const std::string& name) const;

  std::string tag_name(int tag) const;
  std::optional<int> tag_id(const std::string& name) const;

  const std::vector<std::string>& classes() const { return classes_; }

 private:
  std::vector<std::string> classes_;
};

}  // namespace seqlab

#endif  // SEQLAB_TAGS_HPP
