#include "geoprove/variable_table.hpp"

#include <cctype>

#include "geoprove/errors.hpp"

namespace geoprove {

namespace {
bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}
}  // namespace

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i]))
      throw MathError("invalid variable name: '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw MathError("duplicate variable name: '" + names_[i] + "'");
  }
}

std::shared_ptr<const VariableTable> VariableTable::create(std::vector<std::string> names) {
  return std::shared_ptr<const VariableTable>(new VariableTable(std::move(names)));
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace geoprove
