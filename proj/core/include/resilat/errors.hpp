#ifndef RESILAT_ERRORS_HPP
#define RESILAT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace resilat {

/// Structured validation failure: a machine-readable code plus the witness
/// tuple (element indices) that violates the contract, when one exists.
class Error : public std::runtime_error {
public:
  Error(std::string code, std::string message, std::vector<int> witness = {})
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

private:
  std::string code_;
  std::vector<int> witness_;
};

/// Three-valued verdict for checks whose hypotheses may not apply.
enum class Verdict { fails, holds, not_applicable };

inline bool holds(Verdict v) { return v == Verdict::holds; }
inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::fails: return "fails";
    case Verdict::holds: return "holds";
    default: return "n/a";
  }
}

}  // namespace resilat

#endif
