#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "goedel/bignat.hpp"

namespace goedel {

// Size of a formula's code without materializing the code itself.
// symbol_count: expanded symbol sequence length (numerals count as k+1).
// digit_length: positional digit count; equals symbol_count at one digit per
// symbol. Meaningful for positional schemes only.
struct SizeReport {
    BigNat symbol_count;
    BigNat digit_length;
    bool materializable = false;

    bool operator==(const SizeReport& o) const {
        return symbol_count == o.symbol_count && digit_length == o.digit_length &&
               materializable == o.materializable;
    }
};

// Every recoverable domain failure derives from DomainError; name() is the
// stable one-token case name the CLI prints (exit code 1).
class DomainError : public std::runtime_error {
  public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail),
          name_(std::move(name)) {}
    const std::string& name() const { return name_; }

  private:
    std::string name_;
};

class SyntaxError : public DomainError {
  public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : DomainError("SyntaxError",
                      "expected " + expected + " at offset " + std::to_string(offset)),
          offset_(offset),
          expected_(expected) {}
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

  private:
    std::size_t offset_;
    std::string expected_;
};

class OpenTermError : public DomainError {
  public:
    explicit OpenTermError(const std::string& detail) : DomainError("OpenTermError", detail) {}
};

class EmptySequence : public DomainError {
  public:
    EmptySequence() : DomainError("EmptySequence", "empty symbol sequence has no code") {}
};

class NotDecodable : public DomainError {
  public:
    explicit NotDecodable(const std::string& detail) : DomainError("NotDecodable", detail) {}
};

class CapExceeded : public DomainError {
  public:
    CapExceeded(const std::string& detail, SizeReport report)
        : DomainError("CapExceeded", detail + " (symbols=" + dec(report.symbol_count) +
                                         " digits=" + dec(report.digit_length) + ")"),
          report_(std::move(report)) {}
    const SizeReport& report() const { return report_; }

  private:
    SizeReport report_;
};

class UnsupportedScheme : public DomainError {
  public:
    explicit UnsupportedScheme(const std::string& detail)
        : DomainError("UnsupportedScheme", detail) {}
};

class VariableNotFree : public DomainError {
  public:
    explicit VariableNotFree(const std::string& detail)
        : DomainError("VariableNotFree", detail) {}
};

class ArityError : public DomainError {
  public:
    explicit ArityError(const std::string& detail) : DomainError("ArityError", detail) {}
};

class BoundsError : public DomainError {
  public:
    explicit BoundsError(const std::string& detail) : DomainError("BoundsError", detail) {}
};

}  // namespace goedel
