#ifndef TTG_ERROR_HPP
#define TTG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ttg {

// Error kinds, split into input validation failures and failures of a
// mathematical check on otherwise well-formed data. The CLI maps the former
// to exit code 2 and the latter to exit code 3.
enum class errc {
  // validation
  bad_format,
  non_associative,
  missing_identity,
  dangling_morphism,
  not_ei,
  not_convex,
  category_mismatch,
  field_mismatch,
  not_chain_map,
  action_not_order_preserving,
  action_not_functorial,
  invalid_params,
  unsupported_scale,
  cutoff_too_large,
  budget_exceeded,
  // mathematical check failures
  not_simple,
  mismatch,
  check_failed,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_format: return "BadFormat";
    case errc::non_associative: return "NonAssociative";
    case errc::missing_identity: return "MissingIdentity";
    case errc::dangling_morphism: return "DanglingMorphism";
    case errc::not_ei: return "NotEI";
    case errc::not_convex: return "NotConvex";
    case errc::category_mismatch: return "CategoryMismatch";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_chain_map: return "NotChainMap";
    case errc::action_not_order_preserving: return "ActionNotOrderPreserving";
    case errc::action_not_functorial: return "ActionNotFunctorial";
    case errc::invalid_params: return "InvalidParams";
    case errc::unsupported_scale: return "UnsupportedScale";
    case errc::cutoff_too_large: return "CutoffTooLarge";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_simple: return "NotSimple";
    case errc::mismatch: return "Mismatch";
    case errc::check_failed: return "CheckFailed";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& msg)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg),
        kind_(kind) {}
  errc kind() const { return kind_; }

  // True for errors that indicate a falsified mathematical statement rather
  // than malformed input.
  bool is_math_failure() const {
    return kind_ == errc::not_simple || kind_ == errc::mismatch ||
           kind_ == errc::check_failed;
  }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) {
  throw error(kind, msg);
}

inline void require(bool cond, errc kind, const std::string& msg) {
  if (!cond) throw error(kind, msg);
}

}  // namespace ttg

#endif
