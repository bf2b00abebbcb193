#ifndef IMTL_IO_HPP
#define IMTL_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "imtl/mt1.hpp"
#include "imtl/mt2.hpp"
#include "imtl/mt3.hpp"
#include "imtl/nim_model.hpp"

namespace imtl {

using AnyModel = std::variant<NimModel, Mt1Model, Mt2Model, Mt3Model>;

inline constexpr int kFormatVersion = 1;

/// The text is not a well-formed model file (bad JSON, missing or mistyped
/// field, unknown kind, world index out of range). Well-formed files that
/// break a model invariant load fine and are reported by validate().
class ModelFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "nim", "mt1", "mt2" or "mt3".
std::string kind_name(const AnyModel& m);
std::size_t world_count(const AnyModel& m);

/// Canonical text: keys sorted, sets as ascending index arrays, opens in
/// canonical order. Two equal models always serialize identically.
std::string save_model(const AnyModel& m);
AnyModel load_model(std::string_view text);

AnyModel load_model_file(const std::filesystem::path& path);
void save_model_file(const std::filesystem::path& path, const AnyModel& m);

/// Human-readable invariant violations; empty iff the model is valid.
std::vector<std::string> validate(const AnyModel& m);

}  // namespace imtl

#endif  // IMTL_IO_HPP
