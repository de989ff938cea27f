#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geoprove {

// Ordered set of variable names. The declaration order is fixed at creation
// and defines the lexicographic tie-break of the monomial order, so two
// polynomials are only compatible when their tables agree.
class VariableTable {
 public:
  static std::shared_ptr<const VariableTable> create(
      std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const VariableTable& other) const {
    return this == &other || names_ == other.names_;
  }

 private:
  explicit VariableTable(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using VarTablePtr = std::shared_ptr<const VariableTable>;

}  // namespace geoprove
